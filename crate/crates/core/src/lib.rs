//! Exact representation theory of the symmetric group acting on
//! homogeneous polynomials.
//!
//! The crate computes Kostka numbers, Specht dimensions and characters of
//! `S_n`, decomposes the degree-`d` polynomials `R_d` (and orbit-spanned
//! submodules of it) into Specht modules, decides how many symmetric
//! generators a symmetric ideal needs in degree `d`, and builds the
//! extremal principal symmetric ideal `J`. The [`verify`] module runs the
//! exhaustive desk-scale checks of the inequalities behind these results.
//!
//! All arithmetic is exact (big integers and big rationals).

pub mod characters;
pub mod config;
pub mod error;
pub mod exec;
pub mod ideal;
pub mod kostka;
pub mod linalg;
pub mod module_structure;
pub mod numbers;
pub mod partitions;
pub mod polynomial;
pub mod psi;
pub mod tableaux;
pub mod verify;

pub use config::Caps;
pub use error::{Error, Result};
pub use exec::Execution;
pub use kostka::KostkaCache;
pub use module_structure::Decomposition;
pub use partitions::{PaddedPartition, Partition};
pub use polynomial::Polynomial;
