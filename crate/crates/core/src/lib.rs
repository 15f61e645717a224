//! Exact character theory of symmetric and alternating groups, restricted to
//! their Sylow subgroups.
//!
//! * [`partitions`]: hooks, rim hooks, cores and quotients.
//! * [`characters`]: Murnaghan–Nakayama values, degrees, and the split
//!   characters of `A_n` with exact algebraic values.
//! * [`lr`]: Littlewood–Richardson coefficients with explicit fillings.
//! * [`sylow`]: the Sylow `p`-subgroups `P_n ≤ S_n` and `Q_n = P_n ∩ A_n`,
//!   enumerated, with all their linear characters.
//! * [`restriction`]: linear constituents of restricted characters, and
//!   verification campaigns over ranges of `n`.
//!
//! ```
//! use sylowrestrict::restriction::RestrictionContext;
//! use sylowrestrict::sylow::Ambient;
//! use sylowrestrict::Partition;
//!
//! let q5 = RestrictionContext::new(5, 2, Ambient::Q, 1 << 20)?;
//! let report = q5.restrict(&"4,1".parse::<Partition>()?, None)?;
//! assert_eq!(report.distinct_count, 4);
//! # Ok::<(), sylowrestrict::Error>(())
//! ```

pub mod characters;
pub mod error;
pub mod lr;
pub mod partitions;
pub mod perm;
pub mod restriction;
pub mod sylow;

pub use characters::{AlgebraicValue, CycleType, SignChoice};
pub use error::{Error, Result};
pub use partitions::Partition;
pub use perm::Perm;
pub use restriction::{
    MultiplicityReport, RestrictionContext, Statement, VerificationOutcome, VerifyOptions,
};
pub use sylow::Ambient;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/characters.md")]
    mod characters {}
    #[doc = include_str!("../../../book/src/alternating.md")]
    mod alternating {}
    #[doc = include_str!("../../../book/src/littlewood-richardson.md")]
    mod littlewood_richardson {}
    #[doc = include_str!("../../../book/src/sylow.md")]
    mod sylow {}
    #[doc = include_str!("../../../book/src/restriction.md")]
    mod restriction {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
