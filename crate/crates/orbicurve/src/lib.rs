//! Exact-arithmetic invariants of curve covers in positive characteristic:
//! ramification profiles of local fields, branch data and formal orbifolds,
//! orbifold genus and Riemann-Hurwitz identities as zero-residual checks,
//! an explicit Kummer/Artin-Schreier cover oracle over finite fields,
//! geometricity verdicts, and a verified ledger for orbifold vector bundles.
//!
//! Everything is exact: finite-field arithmetic, integer differents and
//! rational genera. Residual-style checks are identities, not tolerances.
//!
//! The `examples/` directory has one runnable walkthrough per capability:
//!
//! ```bash
//! cargo run --example profiles_and_differents
//! cargo run --example cover_oracle
//! ```
//!
//! and a thin CLI mirrors the library over JSON documents:
//!
//! ```bash
//! cargo run -- genus orbifold.json
//! cargo run -- oracle --family kummer --trials 100 --seed 7 --q 13
//! ```

pub mod algebra;
pub mod bundles;
pub mod cli;
pub mod covers;
pub mod doc;
pub mod genus;
pub mod geometric;
pub mod localfield;
pub mod orbifold;
pub mod rat;
pub mod rng;

pub use rat::Rat;
