//! Symmetric eigendecomposition and the spectral quantities built on it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{regularity, Graph};
use crate::matrix::{build_matrix, MatrixKind, SymmetricMatrix};
use crate::tolerance::Tolerances;

const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TOL: f64 = 1e-12;

/// Eigenvalues in descending order with one unit eigenvector per value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    #[serde(skip)]
    pub vectors: Vec<Vec<f64>>,
    /// `max_k ||M v_k - λ_k v_k||_∞` against the input matrix.
    pub residual: f64,
}

impl Spectrum {
    /// `λ_1`, the largest eigenvalue.
    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    /// `λ_n`, the smallest eigenvalue.
    pub fn smallest(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn spread(&self) -> f64 {
        self.largest() - self.smallest()
    }

    /// 1-based position of the first eigenvalue within `tol` of `value`, with
    /// the number of eigenvalues within `tol`.
    pub fn position_of(&self, value: f64, tol: f64) -> Option<(usize, usize)> {
        let first = self.values.iter().position(|&x| (x - value).abs() <= tol)?;
        let multiplicity = self
            .values
            .iter()
            .filter(|&&x| (x - value).abs() <= tol)
            .count();
        Some((first + 1, multiplicity))
    }
}

/// Full eigendecomposition by cyclic Jacobi rotations.
///
/// Sweeps stop once the off-diagonal Frobenius norm falls below
/// `1e-12 * ||M||_F`. The result is rejected if any eigenpair residual exceeds
/// `1e-10 * max(1, ||M||_F)`.
pub fn eigen_sym(m: &SymmetricMatrix) -> Result<Spectrum> {
    eigen_sym_with(m, &Tolerances::default())
}

pub fn eigen_sym_with(m: &SymmetricMatrix, tol: &Tolerances) -> Result<Spectrum> {
    let n = m.n();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let norm = m.frobenius_norm();
    let mut a = m.to_rows();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= OFF_DIAGONAL_TOL * norm {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] != 0.0 {
                    rotate(&mut a, &mut v, p, q);
                }
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > OFF_DIAGONAL_TOL * norm {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]));
    let values: Vec<f64> = order.iter().map(|&k| a[k][k]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&k| (0..n).map(|i| v[i][k]).collect())
        .collect();

    let residual = values
        .iter()
        .zip(&vectors)
        .map(|(&lambda, x)| {
            m.mul_vec(x)
                .iter()
                .zip(x)
                .map(|(mx, xi)| (mx - lambda * xi).abs())
                .fold(0.0, f64::max)
        })
        .fold(0.0, f64::max);
    let tolerance = tol.eig_for(norm);
    if residual > tolerance {
        return Err(Error::ResidualTooLarge {
            residual,
            tolerance,
        });
    }
    Ok(Spectrum {
        values,
        vectors,
        residual,
    })
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let mut sum = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                sum += x * x;
            }
        }
    }
    sum.sqrt()
}

/// Applies the rotation in the `(p, q)` plane that annihilates `a[p][q]`.
#[allow(clippy::needless_range_loop)]
fn rotate(a: &mut [Vec<f64>], v: &mut [Vec<f64>], p: usize, q: usize) {
    let apq = a[p][q];
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = a.len();

    a[p][p] -= t * apq;
    a[q][q] += t * apq;
    a[p][q] = 0.0;
    a[q][p] = 0.0;
    for r in 0..n {
        if r != p && r != q {
            let arp = a[r][p];
            let arq = a[r][q];
            a[r][p] = c * arp - s * arq;
            a[p][r] = a[r][p];
            a[r][q] = s * arp + c * arq;
            a[q][r] = a[r][q];
        }
    }
    for row in v.iter_mut() {
        let vp = row[p];
        let vq = row[q];
        row[p] = c * vp - s * vq;
        row[q] = s * vp + c * vq;
    }
}

/// Spectrum of one of the graph matrices.
pub fn graph_spectrum(g: &Graph, kind: MatrixKind) -> Result<Spectrum> {
    eigen_sym(&build_matrix(g, kind))
}

pub fn graph_spectrum_with(g: &Graph, kind: MatrixKind, tol: &Tolerances) -> Result<Spectrum> {
    eigen_sym_with(&build_matrix(g, kind), tol)
}

/// Largest pointwise difference between two multisets after sorting both.
/// Returns `None` if the sizes differ.
pub fn multiset_distance(a: &[f64], b: &[f64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(|x, y| y.total_cmp(x));
    b.sort_by(|x, y| y.total_cmp(x));
    Some(
        a.iter()
            .zip(&b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max),
    )
}

/// Spreads of `A`, `L` and `Q` and the relation `2 s_A <= s_L + s_Q`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpreadReport {
    pub s_a: f64,
    pub s_l: f64,
    pub s_q: f64,
    /// `2 s_A`.
    pub lhs: f64,
    /// `s_L + s_Q`.
    pub rhs: f64,
    pub is_regular: bool,
    pub is_connected: bool,
    pub equality_within_tol: bool,
}

impl SpreadReport {
    /// `2 s_A <= s_L + s_Q` up to `slack`.
    pub fn inequality_holds(&self, slack: f64) -> bool {
        self.lhs <= self.rhs + slack
    }

    /// For connected graphs equality must coincide with regularity; for
    /// disconnected graphs the relation is not asserted and this returns true.
    pub fn regularity_relation_holds(&self) -> bool {
        !self.is_connected || self.equality_within_tol == self.is_regular
    }
}

pub fn spreads(g: &Graph, tol: &Tolerances) -> Result<SpreadReport> {
    let [a, l, q] = three_spectra_with(g, tol)?;
    Ok(spread_report(g, &a, &l, &q, tol))
}

/// Spectra of `A`, `L` and `Q`, computed concurrently.
pub fn three_spectra(g: &Graph) -> Result<[Spectrum; 3]> {
    three_spectra_with(g, &Tolerances::default())
}

pub fn three_spectra_with(g: &Graph, tol: &Tolerances) -> Result<[Spectrum; 3]> {
    let (a, (l, q)) = rayon::join(
        || graph_spectrum_with(g, MatrixKind::Adjacency, tol),
        || {
            rayon::join(
                || graph_spectrum_with(g, MatrixKind::Laplacian, tol),
                || graph_spectrum_with(g, MatrixKind::SignlessLaplacian, tol),
            )
        },
    );
    Ok([a?, l?, q?])
}

pub fn spread_report(
    g: &Graph,
    a: &Spectrum,
    l: &Spectrum,
    q: &Spectrum,
    tol: &Tolerances,
) -> SpreadReport {
    let s_a = a.spread();
    // μ_n = 0, so s_L = μ_1.
    let s_l = l.largest();
    let s_q = q.spread();
    let lhs = 2.0 * s_a;
    let rhs = s_l + s_q;
    SpreadReport {
        s_a,
        s_l,
        s_q,
        lhs,
        rhs,
        is_regular: regularity(g).is_some(),
        is_connected: g.is_connected(),
        equality_within_tol: (lhs - rhs).abs() <= tol.cmp_for(g.n()),
    }
}

/// One Weyl inequality: `slack >= 0` (up to tolerance) means it holds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WeylOutcome {
    pub holds: bool,
    pub slack: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WeylCheck {
    /// `λ_i(A) + λ_j(B) <= λ_{i+j-n}(A+B)` when `i + j >= n + 1`.
    pub upper: Option<WeylOutcome>,
    /// `λ_i(A) + λ_j(B) >= λ_{i+j-1}(A+B)` when `i + j <= n + 1`.
    pub lower: Option<WeylOutcome>,
}

/// Checks the Weyl inequalities for 1-based indices `i`, `j`.
pub fn weyl_check(
    a: &SymmetricMatrix,
    b: &SymmetricMatrix,
    i: usize,
    j: usize,
    tol: &Tolerances,
) -> Result<WeylCheck> {
    let sum = a.try_add(b)?;
    let (ea, eb, es) = (eigen_sym(a)?, eigen_sym(b)?, eigen_sym(&sum)?);
    weyl_check_spectra(&ea, &eb, &es, i, j, tol)
}

/// As [`weyl_check`], reusing precomputed spectra of `A`, `B` and `A + B`.
pub fn weyl_check_spectra(
    a: &Spectrum,
    b: &Spectrum,
    sum: &Spectrum,
    i: usize,
    j: usize,
    tol: &Tolerances,
) -> Result<WeylCheck> {
    let n = a.values.len();
    if b.values.len() != n || sum.values.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.values.len().min(sum.values.len()),
        });
    }
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::InvalidWeylIndex { i, j, n });
    }
    let slack = tol.cmp_for(n);
    let lhs = a.values[i - 1] + b.values[j - 1];
    let upper = (i + j > n).then(|| {
        let s = sum.values[i + j - n - 1] - lhs;
        WeylOutcome {
            holds: s >= -slack,
            slack: s,
        }
    });
    let lower = (i + j <= n + 1).then(|| {
        let s = lhs - sum.values[i + j - 2];
        WeylOutcome {
            holds: s >= -slack,
            slack: s,
        }
    });
    Ok(WeylCheck { upper, lower })
}

/// Adjacency spectrum of `h1 ∇ h2` for regular `h1` (degree `r1`, order `n1`)
/// and `h2` (degree `r2`, order `n2`), sorted descending.
///
/// The spectrum of each `h_k` loses one copy of `r_k` (the all-ones
/// eigenvector) and gains the two roots of `(x - r1)(x - r2) = n1 n2`, the
/// eigenvalues on vectors constant on each side. When
/// `n1 + r1 = n2 + r2` these roots are `r1 - n2` and `n1 + r1`.
pub fn join_char_poly_roots(h1: &Graph, h2: &Graph) -> Result<Vec<f64>> {
    if !h1.has_unit_weights() || !h2.has_unit_weights() {
        return Err(Error::NonUnitWeights);
    }
    let r1 = regularity(h1).ok_or(Error::NotRegular)?;
    let r2 = regularity(h2).ok_or(Error::NotRegular)?;
    let (n1, n2) = (h1.n() as f64, h2.n() as f64);

    let mut values = Vec::with_capacity(h1.n() + h2.n());
    for (h, r) in [(h1, r1), (h2, r2)] {
        let mut spectrum = graph_spectrum(h, MatrixKind::Adjacency)?.values;
        let drop = spectrum
            .iter()
            .enumerate()
            .min_by(|(_, x), (_, y)| (*x - r).abs().total_cmp(&(*y - r).abs()))
            .map(|(k, _)| k)
            .expect("graphs here have at least one vertex");
        spectrum.remove(drop);
        values.extend(spectrum);
    }
    let half_sum = (r1 + r2) / 2.0;
    let disc = (((r1 - r2) / 2.0).powi(2) + n1 * n2).sqrt();
    values.push(half_sum + disc);
    values.push(half_sum - disc);
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::{disjoint_union, join};

    /// Exact determinant of an integer matrix by fraction-free elimination.
    fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
        let n = m.len();
        let mut sign = 1;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k][k] == 0 {
                match (k + 1..n).find(|&r| m[r][k] != 0) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        sign * m[n - 1][n - 1]
    }

    /// `det(x I - M)` for an integer matrix and integer `x`.
    fn char_poly_at(m: &SymmetricMatrix, x: i128) -> i128 {
        let n = m.n();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let e = m.get(i, j) as i128;
                        if i == j {
                            x - e
                        } else {
                            -e
                        }
                    })
                    .collect()
            })
            .collect();
        bareiss_det(rows)
    }

    fn assert_orthonormal(s: &Spectrum) {
        for (a, x) in s.vectors.iter().enumerate() {
            for (b, y) in s.vectors.iter().enumerate() {
                let dot: f64 = x.iter().zip(y).map(|(p, q)| p * q).sum();
                let expected = if a == b { 1.0 } else { 0.0 };
                assert!((dot - expected).abs() < 1e-8, "<v{a}, v{b}> = {dot}");
            }
        }
    }

    #[test]
    fn k2_adjacency_spectrum() {
        let s = graph_spectrum(&generate::complete(2).unwrap(), MatrixKind::Adjacency).unwrap();
        assert!((s.values[0] - 1.0).abs() < 1e-12);
        assert!((s.values[1] + 1.0).abs() < 1e-12);
        assert_orthonormal(&s);
    }

    #[test]
    fn k33_laplacian_extremes_match_char_poly() {
        let l = build_matrix(
            &generate::complete_bipartite(3, 3).unwrap(),
            MatrixKind::Laplacian,
        );
        // Oracle: integer roots of det(xI - L) over the Gershgorin range.
        let roots: Vec<i128> = (-12..=12).filter(|&x| char_poly_at(&l, x) == 0).collect();
        assert_eq!(roots, vec![0, 3, 6]);
        let s = eigen_sym(&l).unwrap();
        assert!((s.largest() - 6.0).abs() < 1e-10);
        assert!(s.smallest().abs() < 1e-10);
        assert_orthonormal(&s);
    }

    #[test]
    fn c4_signless_laplacian_has_zero() {
        let q = build_matrix(&generate::cycle(4).unwrap(), MatrixKind::SignlessLaplacian);
        assert_eq!(char_poly_at(&q, 0), 0);
        let s = eigen_sym(&q).unwrap();
        assert!(s.smallest().abs() < 1e-10);
    }

    #[test]
    fn zero_and_one_by_one_matrices() {
        let s = eigen_sym(&SymmetricMatrix::zeros(3)).unwrap();
        assert_eq!(s.values, vec![0.0; 3]);
        assert_orthonormal(&s);
        let one = SymmetricMatrix::from_fn(1, |_, _| -2.5);
        assert_eq!(eigen_sym(&one).unwrap().values, vec![-2.5]);
        assert_eq!(
            eigen_sym(&SymmetricMatrix::zeros(0)),
            Err(Error::EmptyMatrix)
        );
    }

    #[test]
    fn petersen_spreads_are_equal() {
        let tol = Tolerances::default();
        let r = spreads(&generate::petersen(), &tol).unwrap();
        assert!((r.s_a - 5.0).abs() < 1e-9);
        assert!((r.s_l - 5.0).abs() < 1e-9);
        assert!((r.s_q - 5.0).abs() < 1e-9);
        assert!(r.equality_within_tol && r.is_regular);
    }

    #[test]
    fn path_spreads_are_strict() {
        let r = spreads(&generate::path(3).unwrap(), &Tolerances::default()).unwrap();
        // A(P3): ±√2, 0; L(P3): 3, 1, 0; Q(P3): 3, 1, 0.
        assert!((r.s_a - 2.0 * 2f64.sqrt()).abs() < 1e-10);
        assert!((r.s_l - 3.0).abs() < 1e-10);
        assert!((r.s_q - 3.0).abs() < 1e-10);
        assert!(r.lhs < r.rhs - 0.1);
        assert!(!r.equality_within_tol);
        assert!(r.regularity_relation_holds());
    }

    #[test]
    fn disjoint_k4_c4_has_equality_without_regularity() {
        let g = disjoint_union(
            &generate::complete(4).unwrap(),
            &generate::cycle(4).unwrap(),
        );
        let r = spreads(&g, &Tolerances::default()).unwrap();
        assert!(r.equality_within_tol);
        assert!(!r.is_regular && !r.is_connected);
    }

    #[test]
    fn weyl_equality_for_doubled_matrix() {
        let a = build_matrix(&generate::complete(2).unwrap(), MatrixKind::Adjacency);
        let w = weyl_check(&a, &a, 1, 1, &Tolerances::default()).unwrap();
        let lower = w.lower.unwrap();
        assert!(lower.holds && lower.slack.abs() < 1e-12);
        assert!(w.upper.is_none());
    }

    #[test]
    fn weyl_on_q_minus_l() {
        let c4 = generate::cycle(4).unwrap();
        let q = build_matrix(&c4, MatrixKind::SignlessLaplacian);
        let neg_l = -&build_matrix(&c4, MatrixKind::Laplacian);
        let w = weyl_check(&q, &neg_l, 4, 4, &Tolerances::default()).unwrap();
        // q_n - μ_1 <= 2 λ_n(A): 0 - 4 <= -4.
        let upper = w.upper.unwrap();
        assert!(upper.holds);
        assert!(upper.slack.abs() < 1e-9);
        assert!(w.lower.is_none());
    }

    #[test]
    fn weyl_rejects_bad_indices() {
        let a = SymmetricMatrix::zeros(2);
        let tol = Tolerances::default();
        assert!(matches!(
            weyl_check(&a, &a, 0, 1, &tol),
            Err(Error::InvalidWeylIndex { .. })
        ));
        assert!(matches!(
            weyl_check(&a, &a, 1, 3, &tol),
            Err(Error::InvalidWeylIndex { .. })
        ));
        assert!(weyl_check(&a, &SymmetricMatrix::zeros(3), 1, 1, &tol).is_err());
    }

    #[test]
    fn join_spectrum_of_k33() {
        let e3 = generate::empty(3).unwrap();
        let predicted = join_char_poly_roots(&e3, &e3).unwrap();
        let expected = [3.0, 0.0, 0.0, 0.0, 0.0, -3.0];
        assert!(multiset_distance(&predicted, &expected).unwrap() < 1e-10);
        let direct = graph_spectrum(&join(&e3, &e3), MatrixKind::Adjacency).unwrap();
        assert!(multiset_distance(&predicted, &direct.values).unwrap() < 1e-9);
    }

    #[test]
    fn join_spectrum_matches_direct_decomposition() {
        let c4 = generate::cycle(4).unwrap();
        let cases = [
            (c4.clone(), c4.clone()),
            (c4.clone(), generate::empty(6).unwrap()),
            (generate::petersen(), generate::complete(3).unwrap()),
            (generate::matching(2).unwrap(), generate::cycle(7).unwrap()),
        ];
        for (h1, h2) in cases {
            let predicted = join_char_poly_roots(&h1, &h2).unwrap();
            let direct = graph_spectrum(&join(&h1, &h2), MatrixKind::Adjacency).unwrap();
            let d = multiset_distance(&predicted, &direct.values).unwrap();
            assert!(d < 1e-9, "distance {d}");
        }
    }

    #[test]
    fn join_spectrum_least_value_for_c4_and_independent_set() {
        let predicted =
            join_char_poly_roots(&generate::cycle(4).unwrap(), &generate::empty(6).unwrap())
                .unwrap();
        assert!((predicted.last().unwrap() + 4.0).abs() < 1e-10);
        assert!(predicted.iter().any(|&x| (x - 6.0).abs() < 1e-10));
    }

    #[test]
    fn join_spectrum_requires_regular_unit_graphs() {
        let p3 = generate::path(3).unwrap();
        let k2 = generate::complete(2).unwrap();
        assert_eq!(join_char_poly_roots(&p3, &k2), Err(Error::NotRegular));
        let heavy = Graph::new(2, [(0, 1, 2.0)]).unwrap();
        assert_eq!(
            join_char_poly_roots(&heavy, &k2),
            Err(Error::NonUnitWeights)
        );
    }

    #[test]
    fn position_of_reports_first_index_and_multiplicity() {
        let s = graph_spectrum(&generate::petersen(), MatrixKind::Adjacency).unwrap();
        assert_eq!(s.position_of(1.0, 1e-8), Some((2, 5)));
        assert_eq!(s.position_of(-2.0, 1e-8), Some((7, 4)));
        assert_eq!(s.position_of(0.5, 1e-8), None);
    }
}
