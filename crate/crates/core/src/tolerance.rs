/// Numeric tolerances shared by the predicates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Conjugacy and commutation checks.
    pub conjugacy: f64,
    /// Algebraic identities on well-conditioned inputs.
    pub algebraic: f64,
    /// Relative residual allowed for on-variety checks.
    pub on_variety: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        conjugacy: 1e-9,
        algebraic: 1e-12,
        on_variety: 1e-8,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
