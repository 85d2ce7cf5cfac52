//! Elements of `V_tau` as exact polynomial vectors `sum c_i u^i` of
//! degree at most `n`, and the action `det^m (a+cu)^(n-i) (b+du)^i`.

use super::WeightParams;
use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::wspace::Value;
use serde::{Deserialize, Deserializer, Serialize};

/// Length is always exactly `n + 1`, zero-padded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyVec {
    coeffs: Vec<Scalar>,
}

impl PolyVec {
    pub fn new(coeffs: Vec<Scalar>) -> PolyVec {
        assert!(!coeffs.is_empty(), "PolyVec needs length n+1 >= 1");
        PolyVec { coeffs }
    }

    pub fn zero(n: u32) -> PolyVec {
        PolyVec { coeffs: vec![Scalar::zero(); n as usize + 1] }
    }

    /// `u^i` inside `E[u]^{<=n}`.
    pub fn monomial(n: u32, i: u32) -> PolyVec {
        assert!(i <= n);
        let mut v = PolyVec::zero(n);
        v.coeffs[i as usize] = Scalar::one();
        v
    }

    pub fn constant(n: u32, c: Scalar) -> PolyVec {
        let mut v = PolyVec::zero(n);
        v.coeffs[0] = c;
        v
    }

    pub fn degree_bound(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `P(c + d t)` as a polynomial in `t`, same length.
    pub fn compose_linear(&self, c: &Scalar, d: &Scalar) -> PolyVec {
        let n = self.coeffs.len();
        let mut acc = vec![Scalar::zero(); n];
        for coeff in self.coeffs.iter().rev() {
            // acc <- acc * (c + d t) + coeff
            let mut next = vec![Scalar::zero(); n];
            for (i, a) in acc.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                next[i] = &next[i] + &(a * c);
                if i + 1 < n {
                    next[i + 1] = &next[i + 1] + &(a * d);
                }
            }
            next[0] = &next[0] + coeff;
            acc = next;
        }
        PolyVec { coeffs: acc }
    }
}

impl Value for PolyVec {
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.coeffs.len(), rhs.coeffs.len(), "mixed V_tau dimensions");
        PolyVec {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    fn neg(&self) -> Self {
        PolyVec { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn scale(&self, s: &Scalar) -> Self {
        PolyVec { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }
}

impl<'de> Deserialize<'de> for PolyVec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<PolyVec, D::Error> {
        let coeffs = Vec::<Scalar>::deserialize(d)?;
        if coeffs.is_empty() {
            return Err(serde::de::Error::custom("empty coefficient vector"));
        }
        Ok(PolyVec { coeffs })
    }
}

/// A 2x2 matrix over the scalar field, rows first.
pub type Mat2 = [[Scalar; 2]; 2];

pub(crate) fn spoly_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// The twisted symmetric-power action on `u^i`:
/// `(ad - bc)^m (a + cu)^(n-i) (b + du)^i`, extended linearly.
pub fn act_tau(g: &Mat2, p: &PolyVec, w: &WeightParams) -> Result<PolyVec> {
    let n = w.n as usize;
    assert_eq!(p.coeffs.len(), n + 1, "PolyVec dimension does not match weight");
    let (a, b) = (&g[0][0], &g[0][1]);
    let (c, d) = (&g[1][0], &g[1][1]);
    let det = &(a * d) - &(b * c);
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let det_m = det.pow(w.m)?;

    // Powers of the two linear forms, degree j each.
    let la = vec![a.clone(), c.clone()];
    let lb = vec![b.clone(), d.clone()];
    let mut pow_a: Vec<Vec<Scalar>> = vec![vec![Scalar::one()]];
    let mut pow_b: Vec<Vec<Scalar>> = vec![vec![Scalar::one()]];
    for j in 1..=n {
        pow_a.push(spoly_mul(&pow_a[j - 1], &la));
        pow_b.push(spoly_mul(&pow_b[j - 1], &lb));
    }

    let mut out = vec![Scalar::zero(); n + 1];
    for (i, ci) in p.coeffs.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        let term = spoly_mul(&pow_a[n - i], &pow_b[i]);
        let f = ci * &det_m;
        for (k, t) in term.iter().enumerate() {
            out[k] = &out[k] + &(t * &f);
        }
    }
    Ok(PolyVec { coeffs: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    fn ident() -> Mat2 {
        [[s(1), s(0)], [s(0), s(1)]]
    }

    #[test]
    fn identity_acts_trivially() {
        let w = WeightParams::new(3, 2);
        let p = PolyVec::new(vec![s(1), s(-2), s(5)]);
        assert_eq!(act_tau(&ident(), &p, &w).unwrap(), p);
    }

    #[test]
    fn diagonal_action_on_monomials() {
        // g = diag(a, d), m = 0: u^i -> a^(n-i) d^i u^i
        let w = WeightParams::new(0, 3);
        let g: Mat2 = [[s(2), s(0)], [s(0), s(3)]];
        for i in 0..=3u32 {
            let out = act_tau(&g, &PolyVec::monomial(3, i), &w).unwrap();
            let expect = PolyVec::monomial(3, i)
                .scale(&(&s(2).pow((3 - i) as i64).unwrap() * &s(3).pow(i as i64).unwrap()));
            assert_eq!(out, expect);
        }
    }

    #[test]
    fn unipotent_translates_the_variable() {
        // n = 1, m = 0, g = (1 b; 0 1): u -> b + u
        let w = WeightParams::new(0, 1);
        let g: Mat2 = [[s(1), s(7)], [s(0), s(1)]];
        let out = act_tau(&g, &PolyVec::monomial(1, 1), &w).unwrap();
        assert_eq!(out, PolyVec::new(vec![s(7), s(1)]));
    }

    #[test]
    fn singular_matrix_rejected() {
        let w = WeightParams::new(0, 1);
        let g: Mat2 = [[s(1), s(2)], [s(2), s(4)]];
        assert!(matches!(
            act_tau(&g, &PolyVec::monomial(1, 0), &w),
            Err(Error::SingularMatrix)
        ));
    }

    #[test]
    fn compose_linear_shifts() {
        // P(u) = u^2, P(1 + 2t) = 1 + 4t + 4t^2
        let p = PolyVec::monomial(2, 2);
        let q = p.compose_linear(&s(1), &s(2));
        assert_eq!(q, PolyVec::new(vec![s(1), s(4), s(4)]));
    }
}
