//! Exact arithmetic in the coefficient field `E`: rationals extended by
//! roots of unity, with an exact p-adic valuation oracle, multiplicative
//! characters of the unit group, Gauss sums, and exact linear algebra.

mod character;
mod cyclotomic;
mod embedding;
mod linalg;
pub(crate) mod poly;
mod valuation;

pub use character::{gauss_sum, CharacterKind, CharacterSpec};
pub use cyclotomic::{euler_phi, Scalar};
pub use embedding::{valuation, EmbeddingOracle};
pub use linalg::{mat_inverse, solve_linear, LinearSolution};
pub use valuation::{rational_valuation, Val};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Base-field data: `F = Q_p` with uniformizer `pi = p` and residue
/// cardinality `q`. Desk scale keeps `q = p`; every fiber and annulus
/// count below is written against `q` so the restriction stays local.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldParams {
    pub p: u64,
    pub q: u64,
}

impl FieldParams {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("p must be prime, got {p}")));
        }
        Ok(FieldParams { p, q: p })
    }

    /// Residue cardinalities other than `p` would need residue-field
    /// extension arithmetic; flag the request instead of guessing.
    pub fn with_residue_cardinality(p: u64, q: u64) -> Result<Self> {
        if q != p {
            return Err(Error::InvalidInput(format!(
                "desk scale supports q = p only (requested q={q}, p={p})"
            )));
        }
        FieldParams::new(p)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_params_require_primality() {
        assert!(FieldParams::new(5).is_ok());
        assert!(FieldParams::new(4).is_err());
        assert!(FieldParams::new(1).is_err());
    }

    #[test]
    fn residue_cardinality_is_pinned_to_p() {
        assert!(FieldParams::with_residue_cardinality(5, 5).is_ok());
        assert!(FieldParams::with_residue_cardinality(5, 25).is_err());
    }
}
