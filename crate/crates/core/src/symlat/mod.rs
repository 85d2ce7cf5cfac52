//! The coefficient space `V_tau = E[u]^{<=n}` with its twisted
//! symmetric-power action, p-adic disks `D_l(beta)`, and the lattices
//! `N_l(beta)`, `M_l(beta)` with exact membership along two independent
//! routes: triangular-basis coordinates (low weight) and sup-norm
//! descent over residue disks (any weight).

mod lattice;
mod polyvec;

pub use lattice::{
    dvr_reduce, intersect_over_fiber, lattice_m, lattice_n, n_basis_formula, refine_pinned_n1,
    refine_under_c1, supnorm_on_disk, verify_fiber_intersection, Lattice, SpanLattice,
};
pub use polyvec::{act_tau, Mat2, PolyVec};

use crate::wspace::WElem;
use serde::{Deserialize, Serialize};

/// Weight data: determinant twist `m` and symmetric-power degree `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightParams {
    pub m: i64,
    pub n: u32,
}

impl WeightParams {
    pub fn new(m: i64, n: u32) -> WeightParams {
        WeightParams { m, n }
    }

    /// The hypothesis driving the triangular-basis description of the
    /// lattices; outside it only the norm route is available.
    pub fn low_weight(&self, q: u64) -> bool {
        (self.n as u64) < q
    }

    pub fn dim(&self) -> usize {
        self.n as usize + 1
    }
}

/// The disk `D_l(beta) = { u : |u - pi^-l beta| <= |pi^-l| }`; well
/// defined in `beta mod O_F` because shifting the center by an integral
/// element stays within the radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Disk {
    pub level: i64,
    pub beta: WElem,
}

impl Disk {
    pub fn new(level: i64, beta: WElem) -> Disk {
        Disk { level, beta }
    }
}
