//! Exact arithmetic for Kirillov models of locally algebraic `GL2(Qp)`
//! representations: cyclotomic scalars with exact p-adic valuations,
//! finitely supported functions on the frequency group `W = F/O_F`,
//! lattices in symmetric-power coefficient spaces, annulus expansions
//! driven by the regime recursions, and the amplitude-bound verifier
//! with its counterexample search harness.
//!
//! Everything is computed over `Q` or a cyclotomic field `Q(zeta_m)`;
//! there is no floating point anywhere in the crate.

pub mod bsverify;
pub mod error;
pub mod kirillov;
pub mod lemmas;
pub mod sample;
pub mod scalars;
pub mod symlat;
pub mod wspace;

pub use error::{Error, Result};
