//! Smooth characters of `F^x = Q_p^x`, split as a value at `pi = p` plus
//! a character of the unit group recorded on `U_F / U_F^nu`, and the
//! Gauss sums they give rise to.

use super::cyclotomic::{euler_phi, Scalar};
use super::embedding::modpow_u64;
use super::FieldParams;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CharacterKind {
    Unramified,
    Tame,
    Wild,
}

/// A character of `F^x` with values in roots of unity times `lambda^Z`:
/// `chi(u pi^k) = values[u] * lambda^k`. The conductor `nu` is minimal;
/// `nu = 0` means unramified, `nu = 1` tame, `nu >= 2` wild.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterSpec {
    kind: CharacterKind,
    p: u64,
    nu: u32,
    /// Unit residues mod `p^nu` (coprime to p) -> root-of-unity values.
    /// Empty for unramified characters.
    values: BTreeMap<u64, Scalar>,
    lambda: Scalar,
}

impl CharacterSpec {
    pub fn unramified(p: u64, lambda: Scalar) -> CharacterSpec {
        CharacterSpec { kind: CharacterKind::Unramified, p, nu: 0, values: BTreeMap::new(), lambda }
    }

    /// Tame character sending the smallest primitive root `g` mod p to
    /// `zeta_{p-1}^index`. Requires `index` nonzero mod `p-1`.
    pub fn tame(p: u64, index: i64, lambda: Scalar) -> Result<CharacterSpec> {
        if p < 3 {
            return Err(Error::InvalidInput(
                "no nontrivial tame characters exist for p = 2".into(),
            ));
        }
        let order = p - 1;
        if index.rem_euclid(order as i64) == 0 {
            return Err(Error::TrivialCharacter);
        }
        let g = primitive_root_mod(p, p);
        let values = cyclic_values(p, 1, g, order, index);
        let spec = CharacterSpec { kind: CharacterKind::Tame, p, nu: 1, values, lambda };
        spec.validate()?;
        Ok(spec)
    }

    /// Wild character of conductor `nu >= 2`. For odd p (and for p = 2,
    /// nu = 2) the unit group mod `p^nu` is cyclic and `index` is taken
    /// against its smallest generator.
    pub fn wild(p: u64, nu: u32, index: i64, lambda: Scalar) -> Result<CharacterSpec> {
        if nu < 2 {
            return Err(Error::InvalidInput("wild characters need conductor >= 2".into()));
        }
        let modulus = p.checked_pow(nu).expect("p^nu overflow");
        if p == 2 && nu >= 3 {
            // (Z/2^nu)^x is not cyclic; callers must pick both exponents.
            return Err(Error::InvalidInput(
                "for p=2 and conductor >= 3 use wild_two with both generator exponents".into(),
            ));
        }
        let order = euler_phi(modulus);
        let g = primitive_root_mod(modulus, p);
        let values = cyclic_values(p, nu, g, order, index);
        let spec = CharacterSpec { kind: CharacterKind::Wild, p, nu, values, lambda };
        spec.validate()?;
        Ok(spec)
    }

    /// Character of `(Z/2^nu)^x = <-1> x <5>` for `nu >= 3`, given by the
    /// exponent of `zeta_2` on `-1` and of `zeta_{2^(nu-2)}` on `5`.
    pub fn wild_two(
        nu: u32,
        index_minus_one: i64,
        index_five: i64,
        lambda: Scalar,
    ) -> Result<CharacterSpec> {
        assert!(nu >= 3);
        let modulus = 2u64.checked_pow(nu).expect("2^nu overflow");
        let half_order = modulus / 4;
        let mut values = BTreeMap::new();
        for s in 0..2u64 {
            for j in 0..half_order {
                let u = modpow_u64(modulus - 1, s, modulus) * modpow_u64(5, j, modulus) % modulus;
                let val = &Scalar::zeta(2, index_minus_one * s as i64)
                    * &Scalar::zeta(half_order, index_five * j as i64);
                values.insert(u, val);
            }
        }
        let spec = CharacterSpec { kind: CharacterKind::Wild, p: 2, nu, values, lambda };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks the homomorphism property and minimality of the conductor.
    fn validate(&self) -> Result<()> {
        let modulus = self.p.pow(self.nu);
        for (&u, vu) in &self.values {
            for (&w, vw) in &self.values {
                let uw = (u as u128 * w as u128 % modulus as u128) as u64;
                let expected = vu * vw;
                if self.values.get(&uw) != Some(&expected) {
                    return Err(Error::InvalidInput("character values are not a homomorphism".into()));
                }
            }
        }
        if self.nu >= 1 {
            // Minimality: nontrivial on U^(nu-1). For nu = 1 that set is
            // all of the units; for nu >= 2 it is 1 + p^(nu-1) Z.
            let witnesses: Vec<u64> = if self.nu == 1 {
                (2..self.p).collect()
            } else {
                let lower = self.p.pow(self.nu - 1);
                (1..self.p).map(|j| (1 + j * lower) % modulus).filter(|&u| u != 1).collect()
            };
            let nontrivial = witnesses
                .iter()
                .any(|u| self.values.get(u).map_or(false, |v| !v.is_one()));
            if !nontrivial {
                return Err(Error::InvalidInput(format!(
                    "conductor {} is not minimal: character is trivial on U^{}",
                    self.nu,
                    self.nu - 1
                )));
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> CharacterKind {
        self.kind
    }

    pub fn conductor(&self) -> u32 {
        self.nu
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    pub fn is_trivial_on_units(&self) -> bool {
        self.nu == 0
    }

    /// Same character with a different value at the uniformizer.
    pub fn with_lambda(&self, lambda: Scalar) -> CharacterSpec {
        CharacterSpec { lambda, ..self.clone() }
    }

    /// The restriction to units, extended by 1 at the uniformizer.
    pub fn unit_part(&self) -> CharacterSpec {
        self.with_lambda(Scalar::one())
    }

    /// Unit residues mod `p^nu`, the index set of `U_F / U_F^nu`.
    pub fn unit_residues(&self) -> Vec<u64> {
        let modulus = self.p.pow(self.nu);
        (1..modulus).filter(|u| u % self.p != 0).collect()
    }

    /// Value at a unit residue mod `p^nu`; 1 for unramified characters.
    pub fn eval_unit(&self, u: u64) -> Result<Scalar> {
        if self.nu == 0 {
            return Ok(Scalar::one());
        }
        let modulus = self.p.pow(self.nu);
        let u = u % modulus;
        self.values
            .get(&u)
            .cloned()
            .ok_or_else(|| Error::InvalidInput(format!("{u} is not a unit mod {modulus}")))
    }

    /// Value at a rational unit (valuation zero), reduced into `U/U^nu`.
    pub fn eval_rational_unit(&self, r: &BigRational) -> Result<Scalar> {
        if self.nu == 0 {
            return Ok(Scalar::one());
        }
        let modulus = BigInt::from(self.p.pow(self.nu));
        let num = r.numer().mod_floor(&modulus);
        let den = r.denom().mod_floor(&modulus);
        let g = den.extended_gcd(&modulus);
        if !g.gcd.is_one() || num.gcd(&modulus) != BigInt::one() {
            return Err(Error::NonUnit(r.to_string()));
        }
        let u = (num * g.x.mod_floor(&modulus)).mod_floor(&modulus);
        self.eval_unit(u64::try_from(u).unwrap())
    }

    pub fn inverse(&self) -> Result<CharacterSpec> {
        let mut values = BTreeMap::new();
        for (&u, v) in &self.values {
            values.insert(u, v.inverse()?);
        }
        Ok(CharacterSpec {
            kind: self.kind,
            p: self.p,
            nu: self.nu,
            values,
            lambda: self.lambda.inverse()?,
        })
    }

    /// `epsilon(-1)`, the sign entering the Gauss-sum identity.
    pub fn value_at_minus_one(&self) -> Result<Scalar> {
        if self.nu == 0 {
            return Ok(Scalar::one());
        }
        self.eval_unit(self.p.pow(self.nu) - 1)
    }

    /// All nontrivial characters of `U_F/U_F^1` at a given prime.
    pub fn all_tame(p: u64) -> Vec<CharacterSpec> {
        (1..p.saturating_sub(1) as i64)
            .filter_map(|k| CharacterSpec::tame(p, k, Scalar::one()).ok())
            .collect()
    }
}

fn cyclic_values(p: u64, nu: u32, generator: u64, order: u64, index: i64) -> BTreeMap<u64, Scalar> {
    let modulus = p.pow(nu);
    let k = index.rem_euclid(order as i64);
    let mut values = BTreeMap::new();
    let mut u = 1u64;
    for j in 0..order {
        values.insert(u, Scalar::zeta(order, k * j as i64));
        u = (u as u128 * generator as u128 % modulus as u128) as u64;
    }
    values
}

/// Smallest generator of the cyclic group `(Z/modulus)^x` where `modulus`
/// is `p^nu` with p odd, or `p` itself, or `4`.
fn primitive_root_mod(modulus: u64, p: u64) -> u64 {
    let order = euler_phi(modulus);
    let mut factors = Vec::new();
    let mut n = order;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    'outer: for g in 2..modulus {
        if g % p == 0 {
            continue;
        }
        for &f in &factors {
            if modpow_u64(g, order / f, modulus) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("{modulus} has no primitive root");
}

/// The character sum `sum_u psi(pi^-nu u) eps(u)` over `U_F/U_F^nu`,
/// with the global additive character `psi(a/p^k) = zeta_{p^k}^a`. In
/// classical notation this is the Gauss sum attached to the inverse
/// character, the quantity entering the convolution operators.
pub fn gauss_sum(eps: &CharacterSpec, params: &FieldParams) -> Result<Scalar> {
    if eps.conductor() == 0 {
        return Err(Error::TrivialCharacter);
    }
    debug_assert_eq!(eps.prime(), params.p);
    let modulus = params.p.pow(eps.conductor());
    let mut acc = Scalar::zero();
    for u in eps.unit_residues() {
        let term = &Scalar::zeta(modulus, u as i64) * &eps.eval_unit(u)?;
        acc = &acc + &term;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{valuation, Val};

    #[test]
    fn tame_is_a_homomorphism_with_minimal_conductor() {
        for p in [3u64, 5, 7] {
            for chi in CharacterSpec::all_tame(p) {
                assert_eq!(chi.conductor(), 1);
                assert_eq!(chi.kind(), CharacterKind::Tame);
            }
        }
        assert_eq!(CharacterSpec::all_tame(5).len(), 3);
        assert!(CharacterSpec::tame(5, 0, Scalar::one()).is_err());
        assert!(CharacterSpec::tame(2, 1, Scalar::one()).is_err());
    }

    #[test]
    fn quadratic_gauss_squares() {
        // p = 5: quadratic character, tau^2 = eps(-1) * 5 = 5.
        let p5 = FieldParams::new(5).unwrap();
        let eps = CharacterSpec::tame(5, 2, Scalar::one()).unwrap();
        let tau = gauss_sum(&eps, &p5).unwrap();
        assert_eq!(&tau * &tau, Scalar::from_int(5));
        assert_eq!(valuation(&tau, 5).unwrap(), Val::frac(1, 2));

        // p = 3: tau^2 = -3 since eps(-1) = -1.
        let p3 = FieldParams::new(3).unwrap();
        let eps = CharacterSpec::tame(3, 1, Scalar::one()).unwrap();
        let tau = gauss_sum(&eps, &p3).unwrap();
        assert_eq!(&tau * &tau, Scalar::from_int(-3));
        assert_eq!(eps.value_at_minus_one().unwrap(), Scalar::from_int(-1));
    }

    #[test]
    fn trivial_character_is_rejected() {
        let p5 = FieldParams::new(5).unwrap();
        let chi = CharacterSpec::unramified(5, Scalar::one());
        assert!(matches!(gauss_sum(&chi, &p5), Err(Error::TrivialCharacter)));
    }

    #[test]
    fn wild_conductor_two() {
        let eps = CharacterSpec::wild(5, 2, 1, Scalar::one()).unwrap();
        assert_eq!(eps.conductor(), 2);
        assert_eq!(eps.unit_residues().len(), 20);
        // Gauss sum of a primitive character mod 25 has valuation nu/2 = 1.
        let p5 = FieldParams::new(5).unwrap();
        let tau = gauss_sum(&eps, &p5).unwrap();
        assert_eq!(valuation(&tau, 5).unwrap(), Val::int(1));
        // And characters of (Z/4)^x and (Z/8)^x exist for the p = 2 search.
        assert!(CharacterSpec::wild(2, 2, 1, Scalar::one()).is_ok());
        assert!(CharacterSpec::wild_two(3, 1, 1, Scalar::one()).is_ok());
    }

    #[test]
    fn rational_unit_evaluation() {
        let eps = CharacterSpec::tame(5, 2, Scalar::one()).unwrap();
        // 7/3 = 7 * 3^-1 = 7 * 2 = 14 = 4 mod 5; quadratic character of 4 is 1.
        let r = BigRational::new(7.into(), 3.into());
        assert_eq!(eps.eval_rational_unit(&r).unwrap(), Scalar::one());
        let bad = BigRational::new(5.into(), 3.into());
        assert!(eps.eval_rational_unit(&bad).is_err());
    }
}
