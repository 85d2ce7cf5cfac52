//! The Kirillov-model layer: representation parameters, elements of the
//! spanning module described by generator-coefficient data, their
//! annulus expansions under the regime recursions, vanishing tests, the
//! mirabolic action, and an exact pointwise evaluation oracle.

mod action;
mod coeffs;
mod eval;
mod solver;
mod table;

pub use action::mirabolic_act;
pub use coeffs::{CoeffPair, GeneratorCoeffs};
pub use eval::evaluate;
pub use solver::solve_vanishing;
pub use table::{expand, vanishes_outside_integers, verify_two_step, AmplitudeTable, TwoStepCheck};

use crate::error::{Error, Result};
use crate::scalars::{CharacterSpec, FieldParams, Scalar};
use crate::symlat::WeightParams;
use serde::{Deserialize, Serialize};

/// Which pair of exponents the principal series carries, and therefore
/// which recursion drives the annulus expansion. `Wild` reuses the
/// ramified recursion with conductor at least 2; it exists for the
/// exploratory search only and nothing is asserted about it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    Unramified,
    Tame,
    Degenerate,
    Wild,
}

/// Everything the expansion machinery needs about `rho = tau (x) sigma`:
/// the base field, the weight, the two characters, and the scalars
/// `lambda = chi1(pi)`, `mu = omega chi2(pi)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepParams {
    pub field: FieldParams,
    pub weight: WeightParams,
    pub chi1: CharacterSpec,
    pub chi2: CharacterSpec,
    pub regime: Regime,
    pub lambda: Scalar,
    pub mu: Scalar,
}

impl RepParams {
    /// Both characters unramified. Excludes `lambda = mu` (that is the
    /// degenerate regime) and the reducible boundary `lambda = q mu`,
    /// `mu = q lambda`.
    pub fn unramified(
        field: FieldParams,
        weight: WeightParams,
        lambda: Scalar,
        mu: Scalar,
    ) -> Result<RepParams> {
        if lambda.is_zero() || mu.is_zero() {
            return Err(Error::RegimeMismatch("lambda and mu must be nonzero".into()));
        }
        if lambda == mu {
            return Err(Error::RegimeMismatch(
                "lambda = mu is the degenerate regime; build it as such".into(),
            ));
        }
        let q = Scalar::from_int(field.q as i64);
        if lambda == &q * &mu || mu == &q * &lambda {
            return Err(Error::RegimeMismatch(
                "lambda = q mu or mu = q lambda makes the principal series reducible".into(),
            ));
        }
        let chi1 = CharacterSpec::unramified(field.p, lambda.clone());
        let chi2 = CharacterSpec::unramified(field.p, &q * &mu);
        Ok(RepParams { field, weight, chi1, chi2, regime: Regime::Unramified, lambda, mu })
    }

    /// Tamely ramified `chi1` (conductor 1), unramified `chi2`, weight
    /// `det^m` only.
    pub fn tame(
        field: FieldParams,
        m: i64,
        eps_index: i64,
        lambda: Scalar,
        mu: Scalar,
    ) -> Result<RepParams> {
        if lambda.is_zero() || mu.is_zero() {
            return Err(Error::RegimeMismatch("lambda and mu must be nonzero".into()));
        }
        let eps = CharacterSpec::tame(field.p, eps_index, Scalar::one())?;
        let q = Scalar::from_int(field.q as i64);
        let chi1 = eps.with_lambda(lambda.clone());
        let chi2 = CharacterSpec::unramified(field.p, &q * &mu);
        Ok(RepParams {
            field,
            weight: WeightParams::new(m, 0),
            chi1,
            chi2,
            regime: Regime::Tame,
            lambda,
            mu,
        })
    }

    /// The excluded unramified point `chi1 = omega chi2`, i.e.
    /// `lambda = mu`, with the differentiated second generator family.
    pub fn degenerate(
        field: FieldParams,
        weight: WeightParams,
        lambda: Scalar,
    ) -> Result<RepParams> {
        if lambda.is_zero() {
            return Err(Error::RegimeMismatch("lambda must be nonzero".into()));
        }
        let q = Scalar::from_int(field.q as i64);
        let chi1 = CharacterSpec::unramified(field.p, lambda.clone());
        let chi2 = CharacterSpec::unramified(field.p, &q * &lambda);
        Ok(RepParams {
            field,
            weight,
            chi1,
            chi2,
            regime: Regime::Degenerate,
            lambda: lambda.clone(),
            mu: lambda,
        })
    }

    /// Wildly ramified `chi1` (conductor >= 2); search-only regime.
    pub fn wild(
        field: FieldParams,
        m: i64,
        eps: CharacterSpec,
        lambda: Scalar,
        mu: Scalar,
    ) -> Result<RepParams> {
        if eps.conductor() < 2 {
            return Err(Error::RegimeMismatch("wild regime needs conductor >= 2".into()));
        }
        if lambda.is_zero() || mu.is_zero() {
            return Err(Error::RegimeMismatch("lambda and mu must be nonzero".into()));
        }
        let q = Scalar::from_int(field.q as i64);
        let chi1 = eps.unit_part().with_lambda(lambda.clone());
        let chi2 = CharacterSpec::unramified(field.p, &q * &mu);
        Ok(RepParams {
            field,
            weight: WeightParams::new(m, 0),
            chi1,
            chi2,
            regime: Regime::Wild,
            lambda,
            mu,
        })
    }

    pub fn is_ramified_regime(&self) -> bool {
        matches!(self.regime, Regime::Tame | Regime::Wild)
    }

    /// The unit character driving the convolution operators; only the
    /// ramified regimes have one.
    pub fn epsilon(&self) -> Option<CharacterSpec> {
        if self.is_ramified_regime() {
            Some(self.chi1.unit_part())
        } else {
            None
        }
    }

    /// Regime consistency checks from the type contract.
    pub fn validate(&self) -> Result<()> {
        let q = Scalar::from_int(self.field.q as i64);
        match self.regime {
            Regime::Unramified => {
                if self.chi1.conductor() != 0 || self.chi2.conductor() != 0 {
                    return Err(Error::RegimeMismatch("unramified regime with ramified chi".into()));
                }
                if self.lambda == self.mu {
                    return Err(Error::RegimeMismatch("unramified regime with lambda = mu".into()));
                }
                if self.lambda == &q * &self.mu || self.mu == &q * &self.lambda {
                    return Err(Error::RegimeMismatch("reducible principal series".into()));
                }
            }
            Regime::Tame => {
                if self.chi1.conductor() != 1 {
                    return Err(Error::RegimeMismatch("tame regime needs conductor 1".into()));
                }
                if self.weight.n != 0 {
                    return Err(Error::RegimeMismatch("tame regime needs n = 0".into()));
                }
            }
            Regime::Degenerate => {
                if self.lambda != self.mu {
                    return Err(Error::RegimeMismatch("degenerate regime needs lambda = mu".into()));
                }
                if self.chi1.conductor() != 0 {
                    return Err(Error::RegimeMismatch("degenerate regime is unramified".into()));
                }
            }
            Regime::Wild => {
                if self.chi1.conductor() < 2 {
                    return Err(Error::RegimeMismatch("wild regime needs conductor >= 2".into()));
                }
                if self.weight.n != 0 {
                    return Err(Error::RegimeMismatch("wild regime needs n = 0".into()));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> FieldParams {
        FieldParams::new(5).unwrap()
    }

    #[test]
    fn unramified_guards() {
        let w = WeightParams::new(0, 1);
        assert!(RepParams::unramified(f5(), w, Scalar::one(), Scalar::from_ratio(1, 5)).is_ok());
        // lambda = mu rejected
        assert!(RepParams::unramified(f5(), w, Scalar::one(), Scalar::one()).is_err());
        // lambda = q mu rejected (reducible)
        assert!(RepParams::unramified(f5(), w, Scalar::from_int(5), Scalar::one()).is_err());
        assert!(RepParams::unramified(f5(), w, Scalar::one(), Scalar::from_int(5)).is_err());
    }

    #[test]
    fn regime_constructors_validate() {
        let t = RepParams::tame(f5(), 0, 1, Scalar::one(), Scalar::from_ratio(1, 5)).unwrap();
        assert!(t.validate().is_ok());
        assert_eq!(t.epsilon().unwrap().conductor(), 1);
        let d = RepParams::degenerate(f5(), WeightParams::new(0, 1), Scalar::from_ratio(1, 5))
            .unwrap();
        assert!(d.validate().is_ok());
        assert_eq!(d.lambda, d.mu);
    }
}
