//! Computational algebra for finite associative unital rings presented by
//! structure constants: construction of block/matrix rings, exhaustive
//! idempotent classification, Peirce-theoretic decomposition invariants,
//! Jacobson/prime radicals, and idempotent lifting, with an independent
//! element-level oracle for cross-checking every structured computation.

pub mod construct;
pub mod corner;
pub mod error;
pub mod expr;
pub mod gallery;
pub mod io;
pub mod nf;
pub mod oracle;
pub mod peirce;
pub mod radical;
pub mod report;
pub mod ring;
pub mod subgroup;

pub use error::RingError;
pub use ring::{Element, FiniteRing};
pub use subgroup::Subgroup;

/// Budget knobs shared by all exhaustive operations.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Largest ring that exhaustive idempotent enumeration will sweep.
    pub enum_cap: u128,
    /// Recursion depth bound for dimension computations.
    pub depth_cap: u32,
    /// Largest ring the element-level brute-force routes will touch.
    pub oracle_cap: u128,
    /// Override for the nilpotency-index bound; `None` derives the bound
    /// from the additive composition length, which is always sufficient.
    pub nilpotency_cap: Option<u32>,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enum_cap: 1 << 24,
            depth_cap: 16,
            oracle_cap: 4096,
            nilpotency_cap: None,
        }
    }
}

/// Size cap for the F_p-algebra sweeps inside the quotient-structural
/// radical method.
pub const FP_SWEEP_CAP: u128 = 1 << 18;
