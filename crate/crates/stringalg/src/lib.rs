//! Homological invariants of finite dimensional string algebras, computed
//! combinatorially from a quiver presentation.
//!
//! The library decides, without any linear algebra on module categories:
//! syzygies of string and pseudo-band modules, projective / finitistic /
//! global dimensions, the characteristic word of every simple module, and
//! whether the subcategory of modules of finite projective dimension is
//! contravariantly finite. An independent exact-arithmetic oracle
//! ([`oracle`]) recomputes syzygies as kernels of projective covers over a
//! prime field and is used to audit every combinatorial answer.
//!
//! Path composition is written "p after q": the product `pq` traverses `q`
//! first. All file formats use traversal order instead (`a.b` means `a`
//! then `b`), which is the reverse of the algebraic product.

pub mod characteristic;
pub mod fixtures;
pub mod modules;
pub mod oracle;
pub mod presentation;
pub mod syzygy;
pub mod words;

pub use presentation::{
    parse_presentation, ArrowId, Path, Quiver, QuiverPresentation, StringAlgebra, VertexId,
};
pub use syzygy::{Homology, PDim};
pub use words::{EventuallyPeriodicWord, FiniteWord, Pair};
