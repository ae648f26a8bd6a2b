/// Numerical tolerances shared by comparisons and polynomial pruning.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Absolute tolerance applied after normalization.
    pub abs: f64,
    /// Relative threshold below which polynomial coefficients are dropped.
    pub prune: f64,
}

impl Tolerance {
    pub const DEFAULT_ABS: f64 = 1e-9;
    pub const DEFAULT_PRUNE: f64 = 1e-12;

    pub fn new(abs: f64, prune: f64) -> Self {
        assert!(abs > 0.0 && prune > 0.0, "tolerances must be positive");
        Self { abs, prune }
    }

    pub fn with_abs(self, abs: f64) -> Self {
        Self::new(abs, self.prune)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { abs: Self::DEFAULT_ABS, prune: Self::DEFAULT_PRUNE }
    }
}
