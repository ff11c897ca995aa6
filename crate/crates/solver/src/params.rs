//! Model parameters shared by every coefficient formula.

use crate::error::{Error, Result};

/// The physical parameter pair of the tfBm model: Hurst index `H` and
/// tempering rate `λ`.
///
/// Valid parameters satisfy `0 < H < 1`, `H ≠ 0.5`, `λ > 0`. `H = 0.5`
/// is excluded because the kernel exponent `α = 0.5 − H` vanishes there
/// and the equation degenerates to ordinary Brownian motion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    hurst: f64,
    lambda: f64,
}

impl ModelParams {
    pub fn new(hurst: f64, lambda: f64) -> Result<Self> {
        if !hurst.is_finite() || hurst <= 0.0 || hurst >= 1.0 {
            return Err(Error::InvalidParameter(format!(
                "hurst must lie in (0, 1), got {hurst}"
            )));
        }
        if hurst == 0.5 {
            return Err(Error::InvalidParameter(
                "hurst = 0.5 is excluded (untempered Brownian limit)".into(),
            ));
        }
        if !lambda.is_finite() || lambda <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "lambda must be positive, got {lambda}"
            )));
        }
        Ok(Self { hurst, lambda })
    }

    pub fn hurst(&self) -> f64 {
        self.hurst
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// True when `H < 0.5`, i.e. the diffusion coefficient diverges as
    /// `t → 0` and the single graded grid applies.
    pub fn coefficient_singular_at_zero(&self) -> bool {
        self.hurst < 0.5
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_valid_parameters() {
        for (h, l) in [(0.2, 0.1), (0.3, 0.01), (0.7, 1.0), (0.9, 5.0)] {
            let p = ModelParams::new(h, l).unwrap();
            assert_eq!(p.hurst(), h);
            assert_eq!(p.lambda(), l);
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(ModelParams::new(0.0, 0.1).is_err());
        assert!(ModelParams::new(1.0, 0.1).is_err());
        assert!(ModelParams::new(-0.3, 0.1).is_err());
        assert!(ModelParams::new(0.5, 0.1).is_err());
        assert!(ModelParams::new(0.3, 0.0).is_err());
        assert!(ModelParams::new(0.3, -1.0).is_err());
        assert!(ModelParams::new(f64::NAN, 0.1).is_err());
        assert!(ModelParams::new(0.3, f64::NAN).is_err());
    }

    #[test]
    fn regime_split() {
        assert!(ModelParams::new(0.2, 0.1)
            .unwrap()
            .coefficient_singular_at_zero());
        assert!(!ModelParams::new(0.7, 0.1)
            .unwrap()
            .coefficient_singular_at_zero());
    }
}
