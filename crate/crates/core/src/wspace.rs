//! The frequency group `W = F/O_F`, finitely supported functions on it,
//! and the operator algebra acting on them: suspension `S`, convolution
//! `E_xi` against a ramified character, the shift `Pi`, and the induced
//! projections `P0`, `P1` onto the coset-sum-zero and coset-constant
//! subspaces.

use crate::error::{Error, Result};
use crate::scalars::{gauss_sum, CharacterSpec, FieldParams, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Element of `W = F/O_F` in canonical form `num / p^depth` with
/// `0 <= num < p^depth` and `p` not dividing `num` unless the element is
/// zero. The prime lives in [`WGroup`]; elements from different groups
/// must not be mixed.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WElem {
    depth: u32,
    num: u64,
}

impl WElem {
    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn is_zero(&self) -> bool {
        self.depth == 0
    }
}

impl fmt::Debug for WElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.depth == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/p^{}", self.num, self.depth)
        }
    }
}

/// The group `W` for one prime, carrying all arithmetic on classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WGroup {
    p: u64,
}

impl WGroup {
    pub fn new(p: u64) -> WGroup {
        WGroup { p }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn params(&self) -> FieldParams {
        FieldParams { p: self.p, q: self.p }
    }

    fn pow(&self, k: u32) -> u64 {
        self.p.checked_pow(k).expect("p^depth overflow")
    }

    pub fn zero(&self) -> WElem {
        WElem { depth: 0, num: 0 }
    }

    /// Canonicalize `num / p^depth`.
    pub fn elem(&self, num: u64, depth: u32) -> WElem {
        let mut num = num % self.pow(depth);
        let mut depth = depth;
        while depth > 0 && num % self.p == 0 {
            num /= self.p;
            depth -= 1;
        }
        if num == 0 {
            depth = 0;
        }
        WElem { depth, num }
    }

    /// Class of a rational number in `W`; the prime-to-p part of the
    /// denominator is inverted modulo the p-part.
    pub fn from_rational(&self, r: &BigRational) -> WElem {
        if r.is_zero() {
            return self.zero();
        }
        let p = BigInt::from(self.p);
        let mut den = r.denom().clone();
        let mut k = 0u32;
        loop {
            let (q, rem) = den.div_rem(&p);
            if rem.is_zero() {
                den = q;
                k += 1;
            } else {
                break;
            }
        }
        if k == 0 {
            return self.zero();
        }
        let pk = BigInt::from(self.pow(k));
        let g = den.extended_gcd(&pk);
        debug_assert!(g.gcd.is_one());
        let dinv = g.x.mod_floor(&pk);
        let a = (r.numer().mod_floor(&pk) * dinv).mod_floor(&pk);
        self.elem(u64::try_from(a).unwrap(), k)
    }

    /// Canonical rational representative in `[0, 1)`.
    pub fn representative(&self, b: WElem) -> BigRational {
        BigRational::new(BigInt::from(b.num), BigInt::from(self.pow(b.depth)))
    }

    pub fn add(&self, a: WElem, b: WElem) -> WElem {
        let d = a.depth.max(b.depth);
        let pd = self.pow(d) as u128;
        let x = a.num as u128 * self.pow(d - a.depth) as u128;
        let y = b.num as u128 * self.pow(d - b.depth) as u128;
        self.elem(((x + y) % pd) as u64, d)
    }

    pub fn neg(&self, a: WElem) -> WElem {
        if a.depth == 0 {
            return a;
        }
        let pd = self.pow(a.depth);
        self.elem(pd - a.num, a.depth)
    }

    pub fn sub(&self, a: WElem, b: WElem) -> WElem {
        self.add(a, self.neg(b))
    }

    /// The group map underlying `Pi`: multiplication by the uniformizer.
    pub fn mul_by_pi(&self, b: WElem) -> WElem {
        if b.depth == 0 {
            return b;
        }
        self.elem(b.num % self.pow(b.depth - 1), b.depth - 1)
    }

    /// Multiplication by a rational unit (valuation zero).
    pub fn mul_by_unit(&self, b: WElem, u: &BigRational) -> WElem {
        self.from_rational(&(self.representative(b) * u))
    }

    /// The `q` preimages of `b` under multiplication by `pi`.
    pub fn fiber(&self, b: WElem) -> Vec<WElem> {
        let pk = self.pow(b.depth) as u128;
        (0..self.p)
            .map(|j| {
                let num = b.num as u128 + j as u128 * pk;
                self.elem(num as u64, b.depth + 1)
            })
            .collect()
    }

    /// `W_1 = pi^-1 O_F / O_F`, the depth-at-most-1 classes.
    pub fn w1(&self) -> Vec<WElem> {
        self.fiber(self.zero())
    }

    /// All classes of depth at most `d`, sorted.
    pub fn depth_at_most(&self, d: u32) -> Vec<WElem> {
        let mut out = vec![self.zero()];
        for k in 1..=d {
            let pk = self.pow(k);
            for a in 1..pk {
                if a % self.p != 0 {
                    out.push(WElem { depth: k, num: a });
                }
            }
        }
        out.sort();
        out
    }

    /// `psi` evaluated at the class `b`: `zeta_{p^k}^num`, the standard
    /// additive character with kernel exactly `O_F`.
    pub fn psi_of_class(&self, b: WElem) -> Scalar {
        if b.depth == 0 {
            Scalar::one()
        } else {
            Scalar::zeta(self.pow(b.depth), b.num as i64)
        }
    }

    /// `psi` at a rational argument.
    pub fn psi_at_rational(&self, r: &BigRational) -> Scalar {
        self.psi_of_class(self.from_rational(r))
    }
}

/// A coefficient type the frequency layer can carry: scalars, or vectors
/// of scalars, with operators acting coordinate-wise.
pub trait Value: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, s: &Scalar) -> Self;
}

impl Value for Scalar {
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, s: &Scalar) -> Self {
        self * s
    }
}

/// Finitely supported `V`-valued function on `W`; zero values are never
/// stored, so support and map keys coincide.
#[derive(Clone, Debug, PartialEq)]
pub struct WFunction<V> {
    map: BTreeMap<WElem, V>,
}

impl<V: Value> Default for WFunction<V> {
    fn default() -> Self {
        WFunction { map: BTreeMap::new() }
    }
}

impl<V: Value> WFunction<V> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn delta(b: WElem, v: V) -> Self {
        let mut f = Self::zero();
        f.add_at(b, v);
        f
    }

    pub fn from_pairs<I: IntoIterator<Item = (WElem, V)>>(pairs: I) -> Self {
        let mut f = Self::zero();
        for (b, v) in pairs {
            f.add_at(b, v);
        }
        f
    }

    pub fn get(&self, b: &WElem) -> Option<&V> {
        self.map.get(b)
    }

    pub fn support(&self) -> impl Iterator<Item = &WElem> {
        self.map.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WElem, &V)> {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_empty()
    }

    pub fn max_depth(&self) -> u32 {
        self.map.keys().map(|b| b.depth).max().unwrap_or(0)
    }

    /// Pointwise accumulate, dropping entries that cancel to zero.
    pub fn add_at(&mut self, b: WElem, v: V) {
        if v.is_zero() {
            return;
        }
        match self.map.entry(b) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&v);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, v) in other.iter() {
            out.add_at(*b, v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        WFunction { map: self.map.iter().map(|(b, v)| (*b, v.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (b, v) in self.iter() {
            out.add_at(*b, v.scale(s));
        }
        out
    }
}

/// Suspension: `(Sf)(beta) = sum over the fiber of beta of f`.
pub fn suspend<V: Value>(g: &WGroup, f: &WFunction<V>) -> WFunction<V> {
    let mut out = WFunction::zero();
    for (b, v) in f.iter() {
        out.add_at(g.mul_by_pi(*b), v.clone());
    }
    out
}

/// The shift `(Pi f)(beta) = f(pi beta)`.
pub fn pi_op<V: Value>(g: &WGroup, f: &WFunction<V>) -> WFunction<V> {
    let mut out = WFunction::zero();
    for (b, v) in f.iter() {
        for a in g.fiber(*b) {
            out.add_at(a, v.clone());
        }
    }
    out
}

/// Convolution against a ramified character `xi` of conductor `nu >= 1`:
/// `E_xi f(beta) = tau(xi^-1)/q^nu * sum_u xi^-1(u) f(beta - pi^-nu u)`.
pub fn convolve<V: Value>(g: &WGroup, xi: &CharacterSpec, f: &WFunction<V>) -> Result<WFunction<V>> {
    if xi.conductor() == 0 {
        return Err(Error::TrivialCharacter);
    }
    let nu = xi.conductor();
    let params = g.params();
    let tau = gauss_sum(xi, &params)?;
    let qnu = Scalar::power_of(params.q, nu as i64);
    let factor = &tau * &qnu.inverse()?;
    let xi_inv = xi.inverse()?;
    let mut out = WFunction::zero();
    for (b, v) in f.iter() {
        for u in xi.unit_residues() {
            let shift = g.elem(u, nu);
            let weight = &factor * &xi_inv.eval_unit(u)?;
            out.add_at(g.add(*b, shift), v.scale(&weight));
        }
    }
    Ok(out)
}

/// `P1 = (1/q) Pi S`, the projection onto coset-constant functions.
pub fn project_c1<V: Value>(g: &WGroup, f: &WFunction<V>) -> WFunction<V> {
    let inv_q = Scalar::from_ratio(1, g.p as i64);
    pi_op(g, &suspend(g, f)).scale(&inv_q)
}

/// `P0 = E_xi E_{xi^-1}`, the projection onto coset-sum-zero functions;
/// any ramified `xi` computes the same map.
pub fn project_c0<V: Value>(g: &WGroup, xi: &CharacterSpec, f: &WFunction<V>) -> Result<WFunction<V>> {
    convolve(g, xi, &convolve(g, &xi.inverse()?, f)?)
}

fn values_equal<V: Value>(a: Option<&V>, b: Option<&V>) -> bool {
    match (a, b) {
        (Some(x), Some(y)) => x == y,
        (Some(x), None) => x.is_zero(),
        (None, Some(y)) => y.is_zero(),
        (None, None) => true,
    }
}

/// Touched cosets: one fiber per distinct image `pi * beta` over the
/// support. Values off the support are zero, so this closure is enough.
fn touched_cosets<V: Value>(g: &WGroup, f: &WFunction<V>) -> Vec<Vec<WElem>> {
    let images: BTreeSet<WElem> = f.support().map(|b| g.mul_by_pi(*b)).collect();
    images.into_iter().map(|gamma| g.fiber(gamma)).collect()
}

/// Is `f(beta)` a function of `pi beta` alone?
pub fn in_c1<V: Value>(g: &WGroup, f: &WFunction<V>) -> bool {
    for coset in touched_cosets(g, f) {
        let first = f.get(&coset[0]);
        if !coset[1..].iter().all(|b| values_equal(first, f.get(b))) {
            return false;
        }
    }
    true
}

/// Does every `W_1`-coset of the support sum to zero?
pub fn in_c0<V: Value>(g: &WGroup, f: &WFunction<V>) -> bool {
    for coset in touched_cosets(g, f) {
        let mut sum: Option<V> = None;
        for b in &coset {
            if let Some(v) = f.get(b) {
                sum = Some(match sum {
                    None => v.clone(),
                    Some(s) => s.add(v),
                });
            }
        }
        if let Some(s) = sum {
            if !s.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Exact value of the finite Fourier sum `sum_beta f(beta) psi(beta x)`
/// at a rational point `x` of `O_F`.
pub fn fourier_eval(g: &WGroup, f: &WFunction<Scalar>, x: &BigRational) -> Scalar {
    let mut acc = Scalar::zero();
    for (b, v) in f.iter() {
        let phase = g.psi_at_rational(&(g.representative(*b) * x));
        acc = &acc + &(v * &phase);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g5() -> WGroup {
        WGroup::new(5)
    }

    #[test]
    fn canonical_representatives() {
        let g = g5();
        assert_eq!(g.elem(10, 2), g.elem(2, 1)); // 10/25 = 2/5
        assert_eq!(g.elem(25, 2), g.zero());
        assert_eq!(g.from_rational(&BigRational::new(7.into(), 25.into())), g.elem(7, 2));
        // 1/(2*5) = 13/5 mod O: 2^-1 = 3 mod 5, 1*3 = 3
        assert_eq!(g.from_rational(&BigRational::new(1.into(), 10.into())), g.elem(3, 1));
        // negative rationals reduce into [0,1)
        assert_eq!(g.from_rational(&BigRational::new((-1).into(), 5.into())), g.elem(4, 1));
    }

    #[test]
    fn pi_action_drops_depth() {
        let g = g5();
        assert_eq!(g.mul_by_pi(g.elem(1, 1)), g.zero());
        assert_eq!(g.mul_by_pi(g.elem(7, 2)), g.elem(2, 1));
        assert_eq!(g.mul_by_pi(g.zero()), g.zero());
    }

    #[test]
    fn fibers_have_q_elements() {
        let g = g5();
        let f0 = g.fiber(g.zero());
        assert_eq!(f0, vec![g.zero(), g.elem(1, 1), g.elem(2, 1), g.elem(3, 1), g.elem(4, 1)]);
        let f = g.fiber(g.elem(1, 1));
        let expect: Vec<WElem> = [1u64, 6, 11, 16, 21].iter().map(|&a| g.elem(a, 2)).collect();
        assert_eq!(f, expect);
        for b in g.depth_at_most(3) {
            assert_eq!(g.fiber(b).len(), 5);
            for a in g.fiber(b) {
                assert_eq!(g.mul_by_pi(a), b);
            }
        }
    }

    #[test]
    fn suspension_examples() {
        let g = g5();
        let d15 = WFunction::delta(g.elem(1, 1), Scalar::one());
        assert_eq!(suspend(&g, &d15), WFunction::delta(g.zero(), Scalar::one()));
        let one_on_w1 = WFunction::from_pairs(g.w1().into_iter().map(|b| (b, Scalar::one())));
        let s = suspend(&g, &one_on_w1);
        assert_eq!(s.get(&g.zero()), Some(&Scalar::from_int(5)));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn convolve_delta_support() {
        let g = g5();
        let xi = CharacterSpec::tame(5, 1, Scalar::one()).unwrap();
        let e = convolve(&g, &xi, &WFunction::delta(g.zero(), Scalar::one())).unwrap();
        let support: Vec<WElem> = e.support().copied().collect();
        assert_eq!(support, vec![g.elem(1, 1), g.elem(2, 1), g.elem(3, 1), g.elem(4, 1)]);
    }

    #[test]
    fn projection_example_and_idempotence() {
        let g = g5();
        let d0 = WFunction::delta(g.zero(), Scalar::one());
        let p1 = project_c1(&g, &d0);
        let fifth = Scalar::from_ratio(1, 5);
        for b in g.w1() {
            assert_eq!(p1.get(&b), Some(&fifth));
        }
        assert!(in_c1(&g, &p1));
        assert_eq!(project_c1(&g, &p1), p1);
    }

    #[test]
    fn predicate_examples() {
        let g = g5();
        let one_on_w1: WFunction<Scalar> =
            WFunction::from_pairs(g.w1().into_iter().map(|b| (b, Scalar::one())));
        assert!(in_c1(&g, &one_on_w1));
        let mixed = WFunction::from_pairs(vec![
            (g.zero(), Scalar::one()),
            (g.elem(1, 1), Scalar::from_int(-1)),
        ]);
        assert!(in_c0(&g, &mixed));
        assert!(!in_c1(&g, &mixed));
        let d0 = WFunction::delta(g.zero(), Scalar::one());
        assert!(!in_c1(&g, &d0));
        assert!(!in_c0(&g, &d0));
    }

    #[test]
    fn fourier_eval_single_term() {
        let g = g5();
        let f = WFunction::delta(g.elem(1, 1), Scalar::one());
        let v = fourier_eval(&g, &f, &BigRational::one());
        assert_eq!(v, Scalar::zeta(5, 1));
    }
}
