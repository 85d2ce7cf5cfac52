//! Elements of `Q(zeta_m)` as dense rational coefficient vectors on the
//! power basis `1, zeta, ..., zeta^(phi(m)-1)` modulo the m-th cyclotomic
//! polynomial. `m = 1` is plain `Q`. Elements of different conductors
//! compose after lifting to the lcm field.

use super::poly::{self, Poly};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

pub fn euler_phi(m: u64) -> u64 {
    assert!(m >= 1);
    let mut n = m;
    let mut phi = m;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            phi = phi / d * (d - 1);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        phi = phi / n * (n - 1);
    }
    phi
}

fn cyclo_cache() -> &'static Mutex<BTreeMap<u64, Poly>> {
    static CACHE: OnceLock<Mutex<BTreeMap<u64, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

/// The m-th cyclotomic polynomial, monic over `Q`, memoized.
fn cyclotomic_poly(m: u64) -> Poly {
    if let Some(p) = cyclo_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    let poly = if m == 1 {
        vec![BigRational::from_integer((-1).into()), BigRational::one()]
    } else {
        // (x^m - 1) / prod_{d | m, d < m} Phi_d
        let mut num = vec![BigRational::zero(); m as usize + 1];
        num[0] = -BigRational::one();
        num[m as usize] = BigRational::one();
        for d in 1..m {
            if m % d == 0 {
                let (q, r) = poly::divmod(&num, &cyclotomic_poly(d));
                debug_assert!(r.is_empty());
                num = q;
            }
        }
        num
    };
    cyclo_cache().lock().unwrap().insert(m, poly.clone());
    poly
}

/// Exact element of `Q(zeta_m)`.
#[derive(Clone)]
pub struct Scalar {
    m: u64,
    /// Length exactly `phi(m)`.
    coeffs: Vec<BigRational>,
}

impl Scalar {
    fn from_poly(m: u64, p: Poly) -> Scalar {
        Scalar::from_poly_raw(m, p).demoted()
    }

    /// Reduce into the power basis of `Q(zeta_m)` without demoting, so
    /// the result is guaranteed to carry conductor exactly `m`.
    fn from_poly_raw(m: u64, mut p: Poly) -> Scalar {
        let phi = euler_phi(m) as usize;
        if p.len() > phi {
            let (_, r) = poly::divmod(&p, &cyclotomic_poly(m));
            p = r;
        }
        p.resize(phi, BigRational::zero());
        Scalar { m, coeffs: p }
    }

    /// Drop to `Q` when the vector is supported on the constant basis
    /// element; representation on a power basis is unique, so this is
    /// exactly the set of rational elements.
    fn demoted(self) -> Scalar {
        if self.m > 1 && self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Scalar { m: 1, coeffs: vec![self.coeffs[0].clone()] }
        } else {
            self
        }
    }

    pub fn zero() -> Scalar {
        Scalar { m: 1, coeffs: vec![BigRational::zero()] }
    }

    pub fn one() -> Scalar {
        Scalar { m: 1, coeffs: vec![BigRational::one()] }
    }

    pub fn from_int(v: i64) -> Scalar {
        Scalar { m: 1, coeffs: vec![BigRational::from_integer(v.into())] }
    }

    pub fn from_ratio(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar { m: 1, coeffs: vec![BigRational::new(num.into(), den.into())] }
    }

    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar { m: 1, coeffs: vec![r] }
    }

    /// `zeta_m^e`, any integer exponent.
    pub fn zeta(m: u64, e: i64) -> Scalar {
        assert!(m >= 1);
        let e = e.rem_euclid(m as i64) as u64;
        let mut p = vec![BigRational::zero(); e as usize + 1];
        p[e as usize] = BigRational::one();
        Scalar::from_poly(m, p)
    }

    /// Integer power of p with any sign, as a rational scalar.
    pub fn power_of(p: u64, e: i64) -> Scalar {
        let big = BigInt::from(p);
        if e >= 0 {
            Scalar::from_rational(BigRational::from_integer(big.pow(e as u32)))
        } else {
            Scalar::from_rational(BigRational::new(1.into(), big.pow((-e) as u32)))
        }
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Exact zero test, coefficient-wise; always conclusive.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self == &Scalar::one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.m == 1 {
            Some(self.coeffs[0].clone())
        } else if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Lift into `Q(zeta_target)`; `m` must divide `target`.
    pub fn lift_to(&self, target: u64) -> Result<Scalar> {
        if target % self.m != 0 {
            return Err(Error::InvalidInput(format!(
                "cannot lift conductor {} into {}",
                self.m, target
            )));
        }
        if target == self.m {
            return Ok(self.clone());
        }
        let step = (target / self.m) as usize;
        let mut p = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            p[j * step] = c.clone();
        }
        Ok(Scalar::from_poly_raw(target, p))
    }

    fn promoted(&self, other: &Scalar) -> (Scalar, Scalar) {
        if self.m == other.m {
            return (self.clone(), other.clone());
        }
        let l = lcm_u64(self.m, other.m);
        (self.lift_to(l).expect("lcm lift"), other.lift_to(l).expect("lcm lift"))
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.m == 1 {
            return Ok(Scalar::from_rational(self.coeffs[0].recip()));
        }
        let mut f = self.coeffs.clone();
        poly::trim(&mut f);
        let (g, u, _) = poly::ext_gcd(&f, &cyclotomic_poly(self.m));
        // Phi_m is irreducible over Q and deg f < deg Phi_m, so g is 1.
        debug_assert_eq!(g.len(), 1);
        let ginv = g[0].recip();
        Ok(Scalar::from_poly(self.m, poly::scale(&u, &ginv)))
    }

    pub fn pow(&self, e: i64) -> Result<Scalar> {
        if e == 0 {
            return Ok(Scalar::one());
        }
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Scalar::one();
        let mut cur = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &cur;
            }
            cur = &cur * &cur;
            k >>= 1;
        }
        Ok(acc)
    }
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        if self.m == other.m {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.promoted(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Scalar {}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let (a, b) = self.promoted(rhs);
        Scalar::from_poly(a.m, poly::add(&a.coeffs, &b.coeffs))
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let (a, b) = self.promoted(rhs);
        Scalar::from_poly(a.m, poly::sub(&a.coeffs, &b.coeffs))
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let (a, b) = self.promoted(rhs);
        Scalar::from_poly(a.m, poly::mul(&a.coeffs, &b.coeffs))
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { m: self.m, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

fn ratio_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn parse_ratio(s: &str) -> std::result::Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let d: BigInt = den.parse().map_err(|e| format!("bad denominator {den:?}: {e}"))?;
    if d.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(BigRational::new(n, d))
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            return write!(f, "{}", ratio_string(&self.coeffs[0]));
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if j == 0 {
                write!(f, "{}", ratio_string(c))?;
            } else if c.is_one() {
                write!(f, "z{}^{}", self.m, j)?;
            } else {
                write!(f, "({})*z{}^{}", ratio_string(c), self.m, j)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct CycloOut<'a> {
    m: u64,
    coeffs: Vec<String>,
    #[serde(skip)]
    _marker: std::marker::PhantomData<&'a ()>,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.m == 1 {
            s.serialize_str(&ratio_string(&self.coeffs[0]))
        } else {
            CycloOut {
                m: self.m,
                coeffs: self.coeffs.iter().map(ratio_string).collect(),
                _marker: std::marker::PhantomData,
            }
            .serialize(s)
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Rational(String),
    Cyclotomic { m: u64, coeffs: Vec<String> },
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        match ScalarRepr::deserialize(d)? {
            ScalarRepr::Rational(s) => {
                Ok(Scalar::from_rational(parse_ratio(&s).map_err(D::Error::custom)?))
            }
            ScalarRepr::Cyclotomic { m, coeffs } => {
                if m < 1 {
                    return Err(D::Error::custom("conductor must be >= 1"));
                }
                if coeffs.len() != euler_phi(m) as usize {
                    return Err(D::Error::custom(format!(
                        "expected {} coefficients for conductor {m}, got {}",
                        euler_phi(m),
                        coeffs.len()
                    )));
                }
                let v: std::result::Result<Vec<_>, _> =
                    coeffs.iter().map(|s| parse_ratio(s)).collect();
                Ok(Scalar { m, coeffs: v.map_err(D::Error::custom)? }.demoted())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(5), 4);
        assert_eq!(euler_phi(20), 8);
        assert_eq!(euler_phi(25), 20);
    }

    #[test]
    fn zeta_has_multiplicative_order() {
        let z = Scalar::zeta(5, 1);
        assert_eq!(z.pow(5).unwrap(), Scalar::one());
        assert!(z.pow(3).unwrap() != Scalar::one());
        // 1 + z + z^2 + z^3 + z^4 = 0
        let mut s = Scalar::one();
        for e in 1..5 {
            s = &s + &Scalar::zeta(5, e);
        }
        assert!(s.is_zero());
    }

    #[test]
    fn cross_conductor_arithmetic() {
        // zeta_4 * zeta_5 = zeta_20^9
        let z4 = Scalar::zeta(4, 1);
        let z5 = Scalar::zeta(5, 1);
        let prod = &z4 * &z5;
        assert_eq!(prod, Scalar::zeta(20, 9));
    }

    #[test]
    fn inverse_and_demotion() {
        let z = Scalar::zeta(8, 1);
        let inv = z.inverse().unwrap();
        assert_eq!(&z * &inv, Scalar::one());
        // zeta_8 + zeta_8^-1 squares to 2 and demotes to Q.
        let s = &z + &inv;
        let sq = &s * &s;
        assert_eq!(sq, Scalar::from_int(2));
        assert_eq!(sq.conductor(), 1);
    }

    #[test]
    fn serde_round_trip() {
        let x = Scalar::from_ratio(-3, 5);
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(j, "\"-3/5\"");
        assert_eq!(serde_json::from_str::<Scalar>(&j).unwrap(), x);

        let z = &Scalar::zeta(5, 2) + &Scalar::from_int(7);
        let j = serde_json::to_string(&z).unwrap();
        assert_eq!(serde_json::from_str::<Scalar>(&j).unwrap(), z);
    }
}
