//! Dense symmetric matrices and the graph matrices `A`, `D`, `L = D - A`,
//! `Q = D + A`.

use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
    Degree,
}

/// A real symmetric matrix stored as its packed lower triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    lower: Vec<f64>,
}

#[inline]
fn packed(i: usize, j: usize) -> usize {
    let (r, c) = if i >= j { (i, j) } else { (j, i) };
    r * (r + 1) / 2 + c
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix {
            n,
            lower: vec![0.0; n * (n + 1) / 2],
        }
    }

    /// Builds the matrix from `f(i, j)` evaluated on the lower triangle.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                m.lower[packed(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds the matrix from full rows, reading only the lower triangle.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(Self::from_fn(n, |i, j| rows[i][j]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.lower[packed(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.lower[packed(i, j)] = value;
    }

    pub fn frobenius_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.n {
            for j in 0..=i {
                let x = self.get(i, j);
                sum += if i == j { x * x } else { 2.0 * x * x };
            }
        }
        sum.sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }

    pub fn scale(&self, c: f64) -> Self {
        SymmetricMatrix {
            n: self.n,
            lower: self.lower.iter().map(|x| c * x).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(SymmetricMatrix {
            n: self.n,
            lower: self
                .lower
                .iter()
                .zip(&other.lower)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }
}

impl Add for &SymmetricMatrix {
    type Output = SymmetricMatrix;

    /// Panics on dimension mismatch; use [`SymmetricMatrix::try_add`] otherwise.
    fn add(self, rhs: Self) -> SymmetricMatrix {
        self.try_add(rhs).expect("matrix dimensions differ")
    }
}

impl Sub for &SymmetricMatrix {
    type Output = SymmetricMatrix;

    fn sub(self, rhs: Self) -> SymmetricMatrix {
        self.try_sub(rhs).expect("matrix dimensions differ")
    }
}

impl Neg for &SymmetricMatrix {
    type Output = SymmetricMatrix;

    fn neg(self) -> SymmetricMatrix {
        self.scale(-1.0)
    }
}

/// Builds `A`, `D`, `L` or `Q` for `g`.
pub fn build_matrix(g: &Graph, kind: MatrixKind) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(g.n());
    let (diagonal, off_diagonal) = match kind {
        MatrixKind::Adjacency => (0.0, 1.0),
        MatrixKind::Laplacian => (1.0, -1.0),
        MatrixKind::SignlessLaplacian => (1.0, 1.0),
        MatrixKind::Degree => (1.0, 0.0),
    };
    for (i, &d) in g.degrees().iter().enumerate() {
        m.set(i, i, diagonal * d);
    }
    if off_diagonal != 0.0 {
        for e in g.edges() {
            m.set(e.u, e.v, off_diagonal * e.w);
        }
    }
    m
}
