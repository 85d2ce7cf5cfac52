//! Dense univariate polynomials over `Q`, little-endian coefficients.
//! Internal helper layer for the cyclotomic field arithmetic.

use num_rational::BigRational;
use num_traits::Zero;

pub(crate) type Poly = Vec<BigRational>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn is_zero(p: &Poly) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub(crate) fn add(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

pub(crate) fn neg(a: &Poly) -> Poly {
    a.iter().map(|c| -c).collect()
}

pub(crate) fn sub(a: &Poly, b: &Poly) -> Poly {
    add(a, &neg(b))
}

pub(crate) fn mul(a: &Poly, b: &Poly) -> Poly {
    if is_zero(a) || is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &Poly, s: &BigRational) -> Poly {
    if s.is_zero() {
        return Vec::new();
    }
    a.iter().map(|c| c * s).collect()
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut b = b.clone();
    trim(&mut b);
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = a.clone();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let factor = &rem[dr] / &lead;
        quot[dr - db] = factor.clone();
        for i in 0..=db {
            let t = &b[i] * &factor;
            rem[dr - db + i] -= t;
        }
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Extended gcd: returns `(g, u, v)` with `u*a + v*b = g`, `g` monic
/// unless zero.
pub(crate) fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let one = vec![BigRational::from_integer(1.into())];
    let (mut r0, mut r1) = (a.clone(), b.clone());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1) = (one.clone(), Vec::new());
    let (mut t0, mut t1) = (Vec::new(), one);
    while !r1.is_empty() {
        let (q, r) = divmod(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        let t = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if let Some(lead) = r0.last().cloned() {
        let inv = lead.recip();
        r0 = scale(&r0, &inv);
        s0 = scale(&s0, &inv);
        t0 = scale(&t0, &inv);
    }
    (r0, s0, t0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(v: &[i64]) -> Poly {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn divmod_round_trips() {
        let a = p(&[1, 0, 0, 0, 0, -1]); // 1 - x^5
        let b = p(&[1, -1]); // 1 - x
        let (q, r) = divmod(&a, &b);
        assert!(r.is_empty());
        assert_eq!(add(&mul(&q, &b), &r), a);
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[-1, 0, 1]); // x^2 - 1
        let b = p(&[1, 1]); // x + 1
        let (g, u, v) = ext_gcd(&a, &b);
        assert_eq!(g, p(&[1, 1])); // monic gcd x + 1
        let lhs = add(&mul(&u, &a), &mul(&v, &b));
        assert_eq!(lhs, g);
        assert!(g.last().unwrap().is_one());
    }
}
