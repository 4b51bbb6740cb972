//! The independent matrix-level verifier: explicit representations over a
//! prime field, minimal projective covers, kernels and resolutions. Exact
//! arithmetic throughout; the oracle corroborates but never decides
//! infinite projective dimension.

mod field;
mod rep;
mod resolve;

pub use field::{Matrix, PrimeField, DEFAULT_CHARACTERISTIC};
pub use rep::{rep_of_band, rep_of_simple, rep_of_string, QuiverRep};
pub use resolve::{
    oracle_syzygy_dims, pdim_oracle, projective_cover, rep_of_projective, Cover, OraclePdim,
    ResolutionTrace, TraceStep, ZeroModule,
};
