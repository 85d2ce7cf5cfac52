//! A fixed embedding `Q(zeta_m) -> Qp-bar` realized at capped p-adic
//! precision, used to read off exact valuations of nonzero cyclotomic
//! elements.
//!
//! For `m = p^a * t` with `t | p-1` the field embeds into
//! `Qp(zeta_{p^a})`, an Eisenstein extension of degree `e = phi(p^a)`
//! with uniformizer `1 - zeta_{p^a}`. The prime root of unity of order
//! `t` goes to a Teichmueller lift, pinned by the smallest primitive
//! root mod p, which fixes the prime above p once and for all.
//!
//! An element written as `sum c_j * (1-y)^j` with `c_j` in `Zp` has all
//! its terms at distinct valuations `v(c_j) + j/e` (the fractional
//! parts differ), so the minimum is exact the moment every residue is
//! either resolved or bounded strictly above it. Escalating precision
//! can therefore never change a previously returned finite valuation.

use super::cyclotomic::{euler_phi, Scalar};
use super::valuation::{bigint_valuation, rational_valuation, Val};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};

const DEFAULT_START_PRECISION: u32 = 64;
const DEFAULT_MAX_PRECISION: u32 = 1024;

/// Valuation oracle for one conductor `m` over one prime `p`.
#[derive(Clone, Debug)]
pub struct EmbeddingOracle {
    p: u64,
    m: u64,
    /// `p^a` exactly divides `m`.
    a: u32,
    /// Prime-to-p part of `m`; divides `p - 1`.
    t: u64,
    /// Smallest primitive root mod p (1 when `t = 1`).
    seed: u64,
    start_precision: u32,
    max_precision: u32,
}

impl EmbeddingOracle {
    pub fn new(p: u64, m: u64) -> Result<EmbeddingOracle> {
        EmbeddingOracle::with_precision(p, m, DEFAULT_START_PRECISION, DEFAULT_MAX_PRECISION)
    }

    pub fn with_precision(p: u64, m: u64, start: u32, cap: u32) -> Result<EmbeddingOracle> {
        assert!(m >= 1 && start >= 1 && cap >= start);
        let mut t = m;
        let mut a = 0u32;
        while t % p == 0 {
            t /= p;
            a += 1;
        }
        if t > 1 && (p - 1) % t != 0 {
            return Err(Error::UnsupportedConductor { p, m });
        }
        let seed = if t > 1 { smallest_primitive_root(p) } else { 1 };
        Ok(EmbeddingOracle { p, m, a, t, seed, start_precision: start, max_precision: cap })
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    /// Human-readable record of the embedding choice, echoed in reports.
    pub fn describe(&self) -> String {
        if self.t > 1 {
            format!(
                "m={} over p={}: zeta_{} -> Teichmueller lift of {}^(({}-1)/{}) mod p^N, \
                 zeta_{}^{} -> pi-adic root; precision {}..{}",
                self.m,
                self.p,
                self.t,
                self.seed,
                self.p,
                self.t,
                self.p,
                self.a,
                self.start_precision,
                self.max_precision
            )
        } else {
            format!(
                "m={} over p={}: purely ramified, zeta_{}^{} -> pi-adic root; precision {}..{}",
                self.m, self.p, self.p, self.a, self.start_precision, self.max_precision
            )
        }
    }

    /// Exact valuation of a nonzero element whose conductor divides `m`,
    /// normalized by `v(p) = 1`. Escalates precision until the value is
    /// strictly determined.
    pub fn valuation(&self, x: &Scalar) -> Result<Val> {
        if x.is_zero() {
            return Ok(Val::Infinite);
        }
        if let Some(r) = x.as_rational() {
            return Ok(rational_valuation(&r, self.p));
        }
        if self.m % x.conductor() != 0 {
            return Err(Error::InvalidInput(format!(
                "oracle serves conductor {}, element has conductor {}",
                self.m,
                x.conductor()
            )));
        }
        let x = x.lift_to(self.m)?;
        let mut n = self.start_precision;
        loop {
            if let Some(v) = self.valuation_at_precision(&x, n) {
                return Ok(v);
            }
            if n >= self.max_precision {
                return Err(Error::AmbiguousValuation { cap: self.max_precision });
            }
            n = (n * 2).min(self.max_precision);
        }
    }

    /// One attempt at fixed precision; `None` means inconclusive.
    fn valuation_at_precision(&self, x: &Scalar, n: u32) -> Option<Val> {
        let modulus = BigInt::from(self.p).pow(n);
        // Clear denominators: x = (1/d) * sum n_j zeta_m^j.
        let mut d = BigInt::one();
        for c in x.coeffs() {
            d = d.lcm(c.denom());
        }
        let v_d = bigint_valuation(&d, self.p);
        let numerators: Vec<BigInt> = x
            .coeffs()
            .iter()
            .map(|c| (c.numer() * &d / c.denom()).mod_floor(&modulus))
            .collect();

        let pa = (self.p as u128).pow(self.a) as u64;
        let e = if self.a == 0 { 1 } else { euler_phi(pa) } as usize;

        // Image of zeta_t at this precision.
        let teich = if self.t > 1 {
            let g = teichmueller_lift(self.p, self.seed, n, &modulus);
            g.modpow(&BigInt::from((self.p - 1) / self.t), &modulus)
        } else {
            BigInt::one()
        };

        // zeta_m = zeta_{p^a}^A * zeta_t^B with A = t^{-1} mod p^a,
        // B = (p^a)^{-1} mod t.
        let mut z = vec![BigInt::zero(); pa.max(1) as usize];
        if self.a == 0 {
            let mut acc = BigInt::zero();
            for (j, c) in numerators.iter().enumerate() {
                let tw = teich.modpow(&BigInt::from(j as u64 % self.t), &modulus);
                acc = (acc + c * tw).mod_floor(&modulus);
            }
            z[0] = acc;
        } else {
            let big_a = mod_inverse_u64(self.t % pa, pa);
            let big_b = if self.t > 1 { mod_inverse_u64(pa % self.t, self.t) } else { 0 };
            for (j, c) in numerators.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let j = j as u64;
                let ye = (big_a as u128 * j as u128 % pa as u128) as usize;
                let tw = if self.t > 1 {
                    teich.modpow(&BigInt::from(big_b as u128 * j as u128 % self.t as u128), &modulus)
                } else {
                    BigInt::one()
                };
                z[ye] = (&z[ye] + c * tw).mod_floor(&modulus);
            }
            // Reduce mod Phi_{p^a}(y) = sum_{i<p} y^(i*p^(a-1)), monic of
            // degree e, using y^e = -(lower terms).
            let step = (self.p as u128).pow(self.a - 1) as usize;
            for deg in (e..z.len()).rev() {
                if z[deg].is_zero() {
                    continue;
                }
                let lead = std::mem::replace(&mut z[deg], BigInt::zero());
                for i in 0..(self.p - 1) as usize {
                    let idx = deg - e + i * step;
                    z[idx] = (&z[idx] - &lead).mod_floor(&modulus);
                }
            }
            z.truncate(e);
        }

        // Rewrite in powers of s = 1 - y: w(s) = z(1 - s).
        let mut w = vec![BigInt::zero(); e];
        let mut pow = vec![BigInt::one()]; // (1 - s)^i
        for zi in z.iter().take(e) {
            if !zi.is_zero() {
                for (j, pj) in pow.iter().enumerate() {
                    w[j] = (&w[j] + zi * pj).mod_floor(&modulus);
                }
            }
            // pow *= (1 - s)
            let mut next = vec![BigInt::zero(); pow.len() + 1];
            for (j, pj) in pow.iter().enumerate() {
                next[j] = (&next[j] + pj).mod_floor(&modulus);
                next[j + 1] = (&next[j + 1] - pj).mod_floor(&modulus);
            }
            next.truncate(e);
            pow = next;
        }

        // Terms c_j * pi^j live at valuation v(c_j) + j/e, all distinct
        // modulo 1, so the minimum over resolved terms is the valuation
        // as soon as it sits strictly below every unresolved bound.
        let e_i64 = e as i64;
        let mut best: Option<Rational64> = None;
        let mut floor_unknown: Option<Rational64> = None;
        for (j, wj) in w.iter().enumerate() {
            let j = j as i64;
            if wj.is_zero() {
                let bound = Rational64::new(n as i64 * e_i64 + j, e_i64);
                floor_unknown = Some(match floor_unknown {
                    Some(f) => f.min(bound),
                    None => bound,
                });
            } else {
                let v = Rational64::new(bigint_valuation(wj, self.p) * e_i64 + j, e_i64);
                best = Some(match best {
                    Some(b) => b.min(v),
                    None => v,
                });
            }
        }
        let best = best?;
        if let Some(f) = floor_unknown {
            if best >= f {
                return None;
            }
        }
        Some(Val::Finite(best - Rational64::from_integer(v_d)))
    }
}

/// Newton-lift the (p-1)-st root of unity congruent to `seed` mod p.
fn teichmueller_lift(p: u64, seed: u64, n: u32, modulus: &BigInt) -> BigInt {
    let exp = BigInt::from(p - 1);
    let dexp = BigInt::from(p - 2);
    let mut x = BigInt::from(seed);
    let mut correct: u64 = 1;
    while correct < n as u64 {
        // x <- x - (x^(p-1) - 1) / ((p-1) x^(p-2))
        let fx = (x.modpow(&exp, modulus) - BigInt::one()).mod_floor(modulus);
        let dfx = (x.modpow(&dexp, modulus) * BigInt::from(p - 1)).mod_floor(modulus);
        let dinv = mod_inverse(&dfx, modulus);
        x = (&x - fx * dinv).mod_floor(modulus);
        correct *= 2;
    }
    x
}

fn mod_inverse(x: &BigInt, modulus: &BigInt) -> BigInt {
    let g = x.extended_gcd(modulus);
    assert!(g.gcd.is_one(), "element not invertible");
    g.x.mod_floor(modulus)
}

fn mod_inverse_u64(x: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let g = BigInt::from(x % modulus).extended_gcd(&BigInt::from(modulus));
    assert!(g.gcd.is_one());
    let r = g.x.mod_floor(&BigInt::from(modulus));
    u64::try_from(r).unwrap()
}

fn smallest_primitive_root(p: u64) -> u64 {
    let order = p - 1;
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
    'outer: for g in 2..p {
        for &f in &factors {
            if modpow_u64(g, order / f, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("no primitive root found for prime {p}");
}

pub(crate) fn modpow_u64(base: u64, exp: u64, modulus: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b: u128 = (base % modulus) as u128;
    let m = modulus as u128;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u64
}

/// Exact p-adic valuation of any scalar: exact zero test first, then the
/// rational fast path, then the Hensel-lifted embedding with automatic
/// precision escalation.
pub fn valuation(x: &Scalar, p: u64) -> Result<Val> {
    if x.is_zero() {
        return Ok(Val::Infinite);
    }
    if let Some(r) = x.as_rational() {
        return Ok(rational_valuation(&r, p));
    }
    EmbeddingOracle::new(p, x.conductor())?.valuation(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_fast_path() {
        assert_eq!(valuation(&Scalar::from_int(50), 5).unwrap(), Val::int(2));
        assert_eq!(valuation(&Scalar::from_ratio(3, 5), 5).unwrap(), Val::int(-1));
        assert_eq!(valuation(&Scalar::zero(), 5).unwrap(), Val::Infinite);
    }

    #[test]
    fn zeta4_minus_2_at_p5() {
        // The fixed embedding sends zeta_4 to the Teichmueller lift of 2,
        // which is 7 mod 25, so v(zeta_4 - 2) = v(7 - 2) = 1.
        let x = &Scalar::zeta(4, 1) - &Scalar::from_int(2);
        assert_eq!(valuation(&x, 5).unwrap(), Val::int(1));
    }

    #[test]
    fn one_minus_zeta_p_is_ramified() {
        for p in [3u64, 5, 7] {
            let x = &Scalar::one() - &Scalar::zeta(p, 1);
            assert_eq!(valuation(&x, p).unwrap(), Val::frac(1, p as i64 - 1));
        }
        // Second ramification layer: v(1 - zeta_25) = 1/20 at p = 5.
        let x = &Scalar::one() - &Scalar::zeta(25, 1);
        assert_eq!(valuation(&x, 5).unwrap(), Val::frac(1, 20));
    }

    #[test]
    fn sqrt2_in_q_zeta8() {
        let z = Scalar::zeta(8, 1);
        let s = &z + &z.inverse().unwrap();
        assert_eq!(valuation(&s, 2).unwrap(), Val::frac(1, 2));
    }

    #[test]
    fn deep_valuations_escalate() {
        let x = &Scalar::power_of(5, 80) * &Scalar::zeta(4, 1);
        assert_eq!(valuation(&x, 5).unwrap(), Val::int(80));
    }

    #[test]
    fn unsupported_conductor_errors() {
        // zeta_7 does not live over Q_5 in a totally ramified tower.
        let x = &Scalar::zeta(7, 1) - &Scalar::from_int(3);
        assert!(matches!(
            valuation(&x, 5),
            Err(Error::UnsupportedConductor { p: 5, m: 7 })
        ));
    }

    #[test]
    fn escalation_never_changes_finite_values() {
        let elems = [
            &Scalar::zeta(4, 1) - &Scalar::from_int(2),
            &Scalar::one() - &Scalar::zeta(5, 2),
            &Scalar::zeta(20, 3) + &Scalar::from_ratio(1, 5),
        ];
        for x in &elems {
            let mut prev: Option<Val> = None;
            for start in [8u32, 16, 32, 64, 128] {
                let o = EmbeddingOracle::with_precision(5, 20, start, 1024).unwrap();
                let v = o.valuation(&x.lift_to(20).unwrap()).unwrap();
                if let Some(pv) = prev {
                    assert_eq!(pv, v, "precision {start} changed the valuation");
                }
                prev = Some(v);
            }
        }
    }
}
