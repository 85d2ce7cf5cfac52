//! Lattices `N_l(beta)` and their rescalings inside `E[u]^{<=n}`.
//!
//! Membership has two independent routes. In low weight (`n < q`) the
//! lattice has the triangular basis `(pi^-l)^(n-i) (u - pi^-l beta)^i`
//! and membership is integrality of basis coordinates. In any weight the
//! defining sup-norm bound on the disk is decided exactly by recursive
//! descent over residue disks; the descent is what keeps the `n >= q`
//! search honest, because the Gauss norm overestimates the sup there.

use super::polyvec::PolyVec;
use super::{Disk, WeightParams};
use crate::error::{Error, Result};
use crate::scalars::{mat_inverse, solve_linear, valuation, Scalar, Val};
use crate::wspace::{Value, WElem, WGroup};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Exact minimum of `v(P(u))` over the disk, i.e. the sup-norm of `P`
/// written multiplicatively as a valuation. Zero polynomial gives
/// `+infinity`.
pub fn supnorm_on_disk(p_vec: &PolyVec, disk: &Disk, g: &WGroup) -> Result<Val> {
    if p_vec.is_zero() {
        return Ok(Val::Infinite);
    }
    // Recenter: u = pi^-l (beta + t) walks the disk as t walks O_F.
    let scale = Scalar::power_of(g.prime(), -disk.level);
    let center = &scale * &Scalar::from_rational(g.representative(disk.beta));
    let q_poly = p_vec.compose_linear(&center, &scale);
    min_val_on_integers(&q_poly, g.prime())
}

struct Node {
    bound: Val,
    seq: u64,
    poly: PolyVec,
    vals: Vec<Val>,
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.bound == other.bound && self.seq == other.seq
    }
}
impl Eq for Node {}
impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed: BinaryHeap is a max-heap, we pop the smallest bound.
        other.bound.cmp(&self.bound).then(other.seq.cmp(&self.seq))
    }
}

/// Branch-and-bound minimum of `v(Q(t))` over integral `t`.
///
/// A node's coefficient-valuation minimum bounds its disk from below;
/// once the constant coefficient strictly dominates, the value is that
/// valuation across the whole disk and the node is exact. Around a
/// non-root the constant term stabilizes while every other coefficient
/// gains one per level, so each such branch resolves within the
/// coefficient spread; branches shrinking onto a root have bounds
/// growing without limit and are never popped past the true minimum.
fn min_val_on_integers(q: &PolyVec, p: u64) -> Result<Val> {
    let mut heap = BinaryHeap::new();
    let mut seq = 0u64;
    let mut push = |heap: &mut BinaryHeap<Node>, poly: PolyVec, seq: &mut u64| -> Result<()> {
        let vals: Result<Vec<Val>> = poly.coeffs().iter().map(|c| valuation(c, p)).collect();
        let vals = vals?;
        let bound = *vals.iter().min().expect("nonempty");
        heap.push(Node { bound, seq: *seq, poly, vals });
        *seq += 1;
        Ok(())
    };
    push(&mut heap, q.clone(), &mut seq)?;

    let mut guard = 0u64;
    while let Some(node) = heap.pop() {
        guard += 1;
        assert!(guard < 1_000_000, "residue-disk descent failed to terminate");
        let c0 = node.vals[0];
        if c0.is_finite() && node.vals[1..].iter().all(|v| *v > c0) {
            return Ok(c0);
        }
        for r in 0..p {
            let child = node
                .poly
                .compose_linear(&Scalar::from_int(r as i64), &Scalar::from_int(p as i64));
            push(&mut heap, child, &mut seq)?;
        }
    }
    // Heap never empties while the polynomial is nonzero.
    unreachable!("descent on a zero polynomial");
}

/// A rescaled lattice `pi^offset * N_level(beta)`; `offset = 0` is
/// `N_level(beta)` itself and `offset = -v(q) - n - level*m` realizes
/// `M_level(beta)`. Keeping the scale as an exponent rather than a
/// rescaled basis keeps large shifts exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lattice {
    level: i64,
    beta: WElem,
    weight: WeightParams,
    offset: i64,
}

/// `N_l(beta)`, available as a based lattice only in low weight.
pub fn lattice_n(level: i64, beta: WElem, w: WeightParams, g: &WGroup) -> Result<Lattice> {
    if !w.low_weight(g.prime()) {
        return Err(Error::WeightTooLarge { n: w.n, q: g.prime() });
    }
    Ok(Lattice { level, beta, weight: w, offset: 0 })
}

/// `M_l(beta) = q^-1 pi^(-n - l m) N_l(beta)`; total in any weight since
/// the norm route needs no basis.
pub fn lattice_m(level: i64, beta: WElem, w: WeightParams) -> Lattice {
    Lattice { level, beta, weight: w, offset: -1 - w.n as i64 - level * w.m }
}

/// The low-weight basis formula `(pi^-l)^(n-i) (u - pi^-l beta)^i`
/// evaluated verbatim, with no weight guard; outside `n < q` it does
/// not span the norm lattice, which is exactly the sharpness witness.
pub fn n_basis_formula(level: i64, beta: WElem, w: WeightParams, g: &WGroup) -> Vec<PolyVec> {
    let n = w.n as usize;
    let center = &Scalar::power_of(g.prime(), -level)
        * &Scalar::from_rational(g.representative(beta));
    let lin = [(-&center), Scalar::one()];
    let mut pow: Vec<Vec<Scalar>> = vec![vec![Scalar::one()]];
    for i in 1..=n {
        pow.push(super::polyvec::spoly_mul(&pow[i - 1], &lin));
    }
    (0..=n)
        .map(|i| {
            let scale = Scalar::power_of(g.prime(), -level * (n as i64 - i as i64));
            let mut coeffs = vec![Scalar::zero(); n + 1];
            for (k, c) in pow[i].iter().enumerate() {
                coeffs[k] = c * &scale;
            }
            PolyVec::new(coeffs)
        })
        .collect()
}

impl Lattice {
    /// Direct construction of `pi^offset * N_level(beta)`.
    pub fn scaled(level: i64, beta: WElem, weight: WeightParams, offset: i64) -> Lattice {
        Lattice { level, beta, weight, offset }
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn beta(&self) -> WElem {
        self.beta
    }

    pub fn weight(&self) -> WeightParams {
        self.weight
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn disk(&self) -> Disk {
        Disk::new(self.level, self.beta)
    }

    /// Scaled triangular basis; errors outside low weight.
    pub fn basis(&self, g: &WGroup) -> Result<Vec<PolyVec>> {
        if !self.weight.low_weight(g.prime()) {
            return Err(Error::WeightTooLarge { n: self.weight.n, q: g.prime() });
        }
        let s = Scalar::power_of(g.prime(), self.offset);
        Ok(n_basis_formula(self.level, self.beta, self.weight, g)
            .into_iter()
            .map(|b| b.scale(&s))
            .collect())
    }

    /// Coordinates of `p_vec` in the unscaled `N`-basis: Taylor-expand
    /// around the disk center and divide off the radius powers.
    pub fn n_coordinates(&self, p_vec: &PolyVec, g: &WGroup) -> Vec<Scalar> {
        let n = self.weight.n as i64;
        let center = &Scalar::power_of(g.prime(), -self.level)
            * &Scalar::from_rational(g.representative(self.beta));
        let taylor = p_vec.compose_linear(&center, &Scalar::one());
        taylor
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, a)| a * &Scalar::power_of(g.prime(), self.level * (n - i as i64)))
            .collect()
    }

    pub fn contains_via_basis(&self, p_vec: &PolyVec, g: &WGroup) -> Result<bool> {
        if !self.weight.low_weight(g.prime()) {
            return Err(Error::WeightTooLarge { n: self.weight.n, q: g.prime() });
        }
        let need = Val::int(self.offset);
        for c in self.n_coordinates(p_vec, g) {
            if valuation(&c, g.prime())? < need {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains_via_norm(&self, p_vec: &PolyVec, g: &WGroup) -> Result<bool> {
        let need = Val::int(-(self.weight.n as i64) * self.level + self.offset);
        Ok(supnorm_on_disk(p_vec, &self.disk(), g)? >= need)
    }

    /// Exact membership: basis route in low weight, norm route otherwise.
    pub fn contains(&self, p_vec: &PolyVec, g: &WGroup) -> Result<bool> {
        if self.weight.low_weight(g.prime()) {
            self.contains_via_basis(p_vec, g)
        } else {
            self.contains_via_norm(p_vec, g)
        }
    }

    /// How far inside (positive) or outside (negative) the lattice the
    /// vector sits, in valuation units; `+infinity` for zero.
    pub fn membership_slack(&self, p_vec: &PolyVec, g: &WGroup) -> Result<Val> {
        if p_vec.is_zero() {
            return Ok(Val::Infinite);
        }
        if self.weight.low_weight(g.prime()) {
            let mut slack = Val::Infinite;
            for c in self.n_coordinates(p_vec, g) {
                let v = valuation(&c, g.prime())? + num_rational::Rational64::from_integer(-self.offset);
                slack = slack.min(v);
            }
            Ok(slack)
        } else {
            let need = -(self.weight.n as i64) * self.level + self.offset;
            Ok(supnorm_on_disk(p_vec, &self.disk(), g)?
                + num_rational::Rational64::from_integer(-need))
        }
    }

    /// The same module as a generator-based lattice (low weight only).
    pub fn to_span(&self, g: &WGroup) -> Result<SpanLattice> {
        SpanLattice::from_generators(self.weight.dim(), self.basis(g)?, g.prime())
    }
}

/// Echelon reduction of a generating set over the valuation ring: pick
/// the minimum-valuation entry of each row as pivot and clear it from
/// the remaining columns (the ratios are integral by minimality), then
/// drop the zero columns. The module is unchanged.
pub fn dvr_reduce(dim: usize, mut cols: Vec<PolyVec>, p: u64) -> Result<Vec<PolyVec>> {
    let mut placed = 0usize;
    for row in 0..dim {
        let mut best: Option<(usize, Val)> = None;
        for (j, col) in cols.iter().enumerate().skip(placed) {
            let v = valuation(col.coeff(row), p)?;
            if v.is_finite() && best.map_or(true, |(_, bv)| v < bv) {
                best = Some((j, v));
            }
        }
        let Some((jstar, _)) = best else {
            continue;
        };
        cols.swap(placed, jstar);
        let pivot = cols[placed].coeff(row).clone();
        let pivot_col = cols[placed].clone();
        let pinv = pivot.inverse()?;
        for col in cols.iter_mut().skip(placed + 1) {
            if !col.coeff(row).is_zero() {
                let f = &(col.coeff(row) * &pinv);
                *col = col.add(&pivot_col.scale(f).neg());
            }
        }
        placed += 1;
    }
    debug_assert!(cols[placed..].iter().all(|c| c.is_zero()));
    cols.truncate(placed);
    Ok(cols)
}

/// A lattice given by an explicit (reduced, independent) generating set;
/// the representation for intersections, sums, and refinements whose
/// basis vectors carry mixed scales.
#[derive(Clone, Debug)]
pub struct SpanLattice {
    dim: usize,
    gens: Vec<PolyVec>,
}

impl SpanLattice {
    pub fn from_generators(dim: usize, gens: Vec<PolyVec>, p: u64) -> Result<SpanLattice> {
        let gens = dvr_reduce(dim, gens, p)?;
        Ok(SpanLattice { dim, gens })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[PolyVec] {
        &self.gens
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    fn matrix(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim)
            .map(|i| self.gens.iter().map(|c| c.coeff(i).clone()).collect())
            .collect()
    }

    pub fn contains(&self, p_vec: &PolyVec, p: u64) -> Result<bool> {
        if p_vec.is_zero() {
            return Ok(true);
        }
        if self.gens.is_empty() {
            return Ok(false);
        }
        let sol = match solve_linear(&self.matrix(), p_vec.coeffs()) {
            Ok(s) => s,
            Err(Error::Inconsistent) => return Ok(false),
            Err(e) => return Err(e),
        };
        debug_assert!(sol.kernel.is_empty(), "reduced generators must be independent");
        for c in &sol.particular {
            if valuation(c, p)? < Val::int(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(lats: &[&SpanLattice], p: u64) -> Result<SpanLattice> {
        let dim = lats.first().expect("nonempty sum").dim;
        assert!(lats.iter().all(|l| l.dim == dim));
        let gens: Vec<PolyVec> = lats.iter().flat_map(|l| l.gens.iter().cloned()).collect();
        SpanLattice::from_generators(dim, gens, p)
    }

    /// Dual with respect to the coordinate pairing; needs full rank.
    pub fn dual(&self, p: u64) -> Result<SpanLattice> {
        if self.rank() != self.dim {
            return Err(Error::InvalidInput("dual of a non-full-rank lattice".into()));
        }
        let bt: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.gens[i].coeff(j).clone()).collect())
            .collect();
        let inv = mat_inverse(&bt)?;
        let gens = (0..self.dim)
            .map(|j| PolyVec::new((0..self.dim).map(|i| inv[i][j].clone()).collect()))
            .collect();
        SpanLattice::from_generators(self.dim, gens, p)
    }

    /// Intersection through duality: the dual of the sum of the duals.
    pub fn intersection(lats: &[SpanLattice], p: u64) -> Result<SpanLattice> {
        let duals: Vec<SpanLattice> = lats.iter().map(|l| l.dual(p)).collect::<Result<_>>()?;
        let refs: Vec<&SpanLattice> = duals.iter().collect();
        SpanLattice::sum(&refs, p)?.dual(p)
    }

    pub fn equals(&self, other: &SpanLattice, p: u64) -> Result<bool> {
        for v in &self.gens {
            if !other.contains(v, p)? {
                return Ok(false);
            }
        }
        for v in &other.gens {
            if !self.contains(v, p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `pi^n N_(l+1)(gamma)`, the exact intersection of the fiber lattices
/// `N_l(beta)` over `pi beta = gamma` in low weight.
pub fn intersect_over_fiber(
    level: i64,
    gamma: WElem,
    w: WeightParams,
    g: &WGroup,
) -> Result<Lattice> {
    if !w.low_weight(g.prime()) {
        return Err(Error::WeightTooLarge { n: w.n, q: g.prime() });
    }
    Ok(Lattice::scaled(level + 1, gamma, w, w.n as i64))
}

/// Verification mode for the fiber intersection: both inclusions checked
/// by coordinate integrality over all `q` fiber lattices (the reverse
/// one through dual sums).
pub fn verify_fiber_intersection(
    level: i64,
    gamma: WElem,
    w: WeightParams,
    g: &WGroup,
) -> Result<bool> {
    let p = g.prime();
    let target = intersect_over_fiber(level, gamma, w, g)?;
    let fiber = g.fiber(gamma);
    // target inside every fiber lattice
    for b in target.basis(g)? {
        for &beta in &fiber {
            if !lattice_n(level, beta, w, g)?.contains_via_basis(&b, g)? {
                return Ok(false);
            }
        }
    }
    // literal intersection inside target, dually
    let duals: Vec<SpanLattice> = fiber
        .iter()
        .map(|&beta| lattice_n(level, beta, w, g)?.to_span(g)?.dual(p))
        .collect::<Result<_>>()?;
    let refs: Vec<&SpanLattice> = duals.iter().collect();
    let dual_sum = SpanLattice::sum(&refs, p)?;
    for v in target.to_span(g)?.dual(p)?.basis() {
        if !dual_sum.contains(v, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The lattice a coset-constant family of `M_l`-members must lie in:
/// the literal intersection of `M_l(beta')` over the `W_1`-coset.
pub fn refine_under_c1(
    level: i64,
    beta: WElem,
    w: WeightParams,
    g: &WGroup,
) -> Result<SpanLattice> {
    let coset = g.fiber(g.mul_by_pi(beta));
    let lats: Vec<SpanLattice> = coset
        .into_iter()
        .map(|b| lattice_m(level, b, w).to_span(g))
        .collect::<Result<_>>()?;
    SpanLattice::intersection(&lats, g.prime())
}

/// The weight-(1,0) refinement with the scale pinned to the `M_l`
/// normalization: `q^-1 pi^-1 Span{ pi^-l, pi (u - pi^-l beta) }`.
pub fn refine_pinned_n1(level: i64, beta: WElem, g: &WGroup) -> Result<SpanLattice> {
    let p = g.prime();
    let center = &Scalar::power_of(p, -level) * &Scalar::from_rational(g.representative(beta));
    let g1 = PolyVec::new(vec![Scalar::power_of(p, -level - 2), Scalar::zero()]);
    let g2 = PolyVec::new(vec![
        &(-&center) * &Scalar::power_of(p, -1),
        Scalar::power_of(p, -1),
    ]);
    SpanLattice::from_generators(2, vec![g1, g2], p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g5() -> WGroup {
        WGroup::new(5)
    }

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    fn sr(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    #[test]
    fn supnorm_of_the_weierstrass_witness() {
        // (u^5 - u)/5 on D_0(0): attains valuation 0, e.g. at u = 2.
        let g = g5();
        let mut coeffs = vec![Scalar::zero(); 6];
        coeffs[1] = sr(-1, 5);
        coeffs[5] = sr(1, 5);
        let p = PolyVec::new(coeffs);
        let d = Disk::new(0, g.zero());
        assert_eq!(supnorm_on_disk(&p, &d, &g).unwrap(), Val::int(0));
    }

    #[test]
    fn supnorm_constant_and_radius() {
        let g = g5();
        let c = PolyVec::constant(1, sr(3, 25));
        assert_eq!(
            supnorm_on_disk(&c, &Disk::new(2, g.elem(1, 1)), &g).unwrap(),
            Val::int(-2)
        );
        // P = u on D_1(0): radius |pi^-1|, so the minimum valuation is -1.
        let u = PolyVec::monomial(1, 1);
        assert_eq!(supnorm_on_disk(&u, &Disk::new(1, g.zero()), &g).unwrap(), Val::int(-1));
        // zero polynomial
        assert_eq!(
            supnorm_on_disk(&PolyVec::zero(2), &Disk::new(0, g.zero()), &g).unwrap(),
            Val::Infinite
        );
    }

    #[test]
    fn n_basis_examples() {
        let g = g5();
        // n = 1: basis { pi^-l, u - pi^-l beta }
        let w = WeightParams::new(0, 1);
        let b = lattice_n(2, g.elem(1, 1), w, &g).unwrap().basis(&g).unwrap();
        assert_eq!(b[0], PolyVec::new(vec![sr(1, 25), s(0)]));
        assert_eq!(b[1], PolyVec::new(vec![sr(-1, 125), s(1)]));
        // n = 0: basis {1}
        let w0 = WeightParams::new(0, 0);
        let b0 = lattice_n(3, g.elem(2, 2), w0, &g).unwrap().basis(&g).unwrap();
        assert_eq!(b0, vec![PolyVec::constant(0, s(1))]);
        // l = 0, beta = 0: the monomial basis
        let w3 = WeightParams::new(0, 3);
        let b3 = lattice_n(0, g.zero(), w3, &g).unwrap().basis(&g).unwrap();
        for (i, b) in b3.iter().enumerate() {
            assert_eq!(*b, PolyVec::monomial(3, i as u32));
        }
    }

    #[test]
    fn membership_examples() {
        let g = g5();
        let w = WeightParams::new(0, 1);
        let n10 = lattice_n(1, g.zero(), w, &g).unwrap();
        // 1/5 in, u/5 out
        assert!(n10.contains(&PolyVec::new(vec![sr(1, 5), s(0)]), &g).unwrap());
        assert!(!n10.contains(&PolyVec::new(vec![s(0), sr(1, 5)]), &g).unwrap());
        assert!(n10.contains(&PolyVec::zero(1), &g).unwrap());
    }

    #[test]
    fn weight_too_large_guard_and_route_split() {
        let g2 = WGroup::new(2);
        let w = WeightParams::new(0, 2);
        assert!(matches!(
            lattice_n(0, g2.zero(), w, &g2),
            Err(Error::WeightTooLarge { .. })
        ));
        // (u^2 - u)/2 is norm-bounded by 1 on D_0(0) but has a
        // non-integral coordinate in the formula basis: the routes
        // disagree exactly at n = q.
        let p = PolyVec::new(vec![s(0), sr(-1, 2), sr(1, 2)]);
        let m = Lattice::scaled(0, g2.zero(), w, 0);
        assert!(m.contains_via_norm(&p, &g2).unwrap());
        let basis = n_basis_formula(0, g2.zero(), w, &g2);
        // coordinates in {1, u, u^2}: (0, -1/2, 1/2)
        assert_eq!(basis[1], PolyVec::monomial(2, 1));
        let coords = m.n_coordinates(&p, &g2);
        assert!(coords.iter().any(|c| valuation(c, 2).unwrap() < Val::int(0)));
    }

    #[test]
    fn fiber_intersection_verified() {
        let g = g5();
        for n in 0..=3u32 {
            let w = WeightParams::new(0, n);
            assert!(verify_fiber_intersection(0, g.zero(), w, &g).unwrap());
            assert!(verify_fiber_intersection(-1, g.elem(1, 1), w, &g).unwrap());
        }
    }

    #[test]
    fn fiber_intersection_explicit_basis() {
        // n=1, l=0, gamma=0: pi^1 N_1(0) has basis {1, 5u} up to units.
        let g = g5();
        let w = WeightParams::new(0, 1);
        let t = intersect_over_fiber(0, g.zero(), w, &g).unwrap();
        let span = t.to_span(&g).unwrap();
        assert!(span.contains(&PolyVec::new(vec![s(1), s(0)]), 5).unwrap());
        assert!(span.contains(&PolyVec::new(vec![s(0), s(5)]), 5).unwrap());
        assert!(!span.contains(&PolyVec::new(vec![s(0), s(1)]), 5).unwrap());
        assert!(!span.contains(&PolyVec::new(vec![sr(1, 5), s(0)]), 5).unwrap());
    }

    #[test]
    fn inclusion_in_next_level() {
        let g = g5();
        for n in 0..=3u32 {
            let w = WeightParams::new(0, n);
            for l in -2..=2i64 {
                for beta in g.depth_at_most(2) {
                    let inner = lattice_n(l, beta, w, &g).unwrap();
                    let outer = lattice_n(l + 1, g.mul_by_pi(beta), w, &g).unwrap();
                    for b in inner.basis(&g).unwrap() {
                        assert!(outer.contains(&b, &g).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn refinement_matches_pinned_basis() {
        let g = g5();
        let w = WeightParams::new(0, 1);
        for l in -1..=1i64 {
            for beta in [g.zero(), g.elem(2, 1), g.elem(7, 2)] {
                let lit = refine_under_c1(l, beta, w, &g).unwrap();
                let pin = refine_pinned_n1(l, beta, &g).unwrap();
                assert!(lit.equals(&pin, 5).unwrap());
            }
        }
        // n = 0: the refinement is M_l(beta) itself.
        let w0 = WeightParams::new(0, 0);
        let lit = refine_under_c1(0, g.zero(), w0, &g).unwrap();
        let m = lattice_m(0, g.zero(), w0).to_span(&g).unwrap();
        assert!(lit.equals(&m, 5).unwrap());
    }

    #[test]
    fn lattices_are_well_defined_mod_integers() {
        let g = g5();
        let w = WeightParams::new(1, 2);
        // 7/25 and 32/25 + 3 name the same class
        let b1 = g.from_rational(&num_rational::BigRational::new(7.into(), 25.into()));
        let b2 = g.from_rational(&num_rational::BigRational::new((32 + 75).into(), 25.into()));
        assert_eq!(b1, b2);
        assert_eq!(lattice_n(1, b1, w, &g).unwrap(), lattice_n(1, b2, w, &g).unwrap());
    }
}
