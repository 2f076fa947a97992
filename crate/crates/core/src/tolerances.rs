//! Tolerance ladder used across the verification suites.
//!
//! Three regimes: exact algebraic identities evaluated in f64, deterministic
//! quadrature cross-checks, and Monte Carlo statistics. Thresholds are fixed
//! here so that every check cites the same number.

/// Membership and matrix identities that hold exactly in real arithmetic
/// (metric preservation, cone boundaries, involution laws). Allows a few
/// digits of f64 rounding on top of analytically exact expressions.
pub const EXACT: f64 = 1e-12;

/// On-shell mass reconstruction, relative: `p.p = m^2` after one sqrt.
pub const SHELL_REL: f64 = 1e-10;

/// Algebraic identities assembled from several matrix products and
/// enumerations (symmetrized-kernel covariance, dual-path agreement).
pub const ALGEBRAIC: f64 = 1e-9;

/// Worst-case residual for the spin-model identity suite over random
/// sampling (covariance, factorization, locality sign conditions).
pub const MODEL_IDENTITY: f64 = 1e-8;

/// Deterministic quadrature cross-checks against independent oracles.
pub const QUADRATURE: f64 = 1e-6;

/// Relative accuracy target reported by the cross-kernel quadrature.
pub const CROSS_KERNEL_REL: f64 = 1e-6;

/// Gram positivity: smallest eigenvalue must be above `-PSD_REL * max`.
pub const PSD_REL: f64 = 1e-6;

/// Amplitude invariance in the Monte Carlo regime.
pub const MC_REL: f64 = 1e-4;

/// Number of standard deviations for Monte Carlo agreement checks.
pub const MC_SIGMA: f64 = 3.0;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_is_ordered() {
        assert!(EXACT < SHELL_REL);
        assert!(SHELL_REL < ALGEBRAIC);
        assert!(ALGEBRAIC < MODEL_IDENTITY);
        assert!(MODEL_IDENTITY < QUADRATURE);
        assert!(QUADRATURE <= PSD_REL);
        assert!(PSD_REL < MC_REL);
    }
}
