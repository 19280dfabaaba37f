use serde::Serialize;

/// Numerical tolerances. Each is a base value scaled by a problem size.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Additive slack for eigenvalue comparisons, scaled by `max(1, n)`.
    pub cmp: f64,
    /// Eigen residual bound, scaled by `max(1, ||M||_F)`.
    pub eig: f64,
    /// Weighted-degree comparison, scaled by `max(1, max degree)`.
    pub deg: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            cmp: 1e-7,
            eig: 1e-10,
            deg: 1e-9,
        }
    }
}

impl Tolerances {
    pub fn with_cmp(mut self, cmp: f64) -> Self {
        self.cmp = cmp;
        self
    }

    pub fn with_eig(mut self, eig: f64) -> Self {
        self.eig = eig;
        self
    }

    pub fn with_deg(mut self, deg: f64) -> Self {
        self.deg = deg;
        self
    }

    pub fn cmp_for(&self, n: usize) -> f64 {
        self.cmp * n.max(1) as f64
    }

    /// Margin a value must clear before a strict ("not equal") claim is made.
    pub fn strict_for(&self, n: usize) -> f64 {
        10.0 * self.cmp_for(n)
    }

    pub fn eig_for(&self, frobenius: f64) -> f64 {
        self.eig * frobenius.max(1.0)
    }

    pub fn deg_for(&self, max_degree: f64) -> f64 {
        self.deg * max_degree.max(1.0)
    }
}
