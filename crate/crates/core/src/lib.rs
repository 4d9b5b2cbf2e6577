//! Exact arithmetic toolkit for ideal solutions of the Tarry-Escott problem
//! of degrees 2, 3 and 5.
//!
//! * [`exactmath`]: sparse integer polynomials, symmetry tests and
//!   elementary-symmetric decomposition.
//! * [`model`]: candidate solutions, power-sum verification and canonical forms.
//! * [`generators`]: the parametric families.
//! * [`identities`]: symbolic proofs of the families' power-sum identities.
//! * [`completeness`]: Dickson recovery, brute-force enumeration and coverage.
//! * [`record`]: JSON records shared with the command-line front end.

pub mod completeness;
pub mod exactmath;
pub mod exec;
pub mod generators;
pub mod identities;
pub mod model;
pub mod record;

pub use exec::Exec;
pub use generators::{
    dickson_to_theorem1, gen_deg2, gen_deg3, gen_deg3_interim, gen_deg5, gen_dickson,
    gen_eqsums124, gen_triads, Deg2Params, DicksonParams, QuadParams, TriadPair,
};
pub use model::{power_sum, ModelError, SigmaReport, TepSolution};
