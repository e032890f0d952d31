//! Construction, verification and search of q-ary complementary sets of
//! sequences with non-power-of-two lengths.
//!
//! Sequences live over the q-th roots of unity and are stored as integer
//! exponents, so every correlation identity is checked exactly.

pub mod algebra;
pub mod construct;
pub mod error;
pub mod format;
pub mod golden;
pub mod papr;
pub mod reach;
pub mod search;
pub mod seeds;
pub mod verify;

pub use algebra::{aacf, accf, Alphabet, CorrelationProfile, CorrelationValue, Sequence};
pub use construct::{
    golay_double, stack, theorem1, theorem2, turyn_product, CoefficientTuple4, CoefficientTuple8,
};
pub use error::{Error, Result};
pub use papr::{papr, PaprResult};
pub use reach::{cs4_lengths, cs8_lengths, gcp_lengths, ReachabilitySet, Witness};
pub use search::{search_cs, search_gcp, SearchOptions, SearchOutcome};
pub use seeds::{GcpLookup, SeedDb, SeedRecord};
pub use verify::{is_gcp, verify, ComplementarySet, VerificationReport};
