//! Exact analysis of isolated hypersurface singularity germs at the origin.
//!
//! The crate decides quasihomogeneity through Milnor and Tjurina numbers,
//! computes logarithmic vector fields as syzygies, models the top local
//! cohomology module `H^n_0(O)` and decides membership in the kernel of
//! the map `d1: H -> Omega^1(log D) (x) H` with checkable certificates.

pub mod corpus;
pub mod error;
pub mod grobner;
pub mod jetlocal;
pub mod linalg;
pub mod localcoh;
pub mod logvf;
pub mod polyring;
pub mod report;

pub use error::{Error, Result};
pub use grobner::{GroebnerBasis, ModVector, TermOrder};
pub use polyring::{parse_poly, Monomial, MonomialOrder, Poly, Rat, Weights};
pub use jetlocal::{ColengthResult, LctVerdict};
pub use localcoh::{CohElem, KernelVerdict};
pub use logvf::{LogDerModule, LogDerivation};
pub use report::{analyze, emit_report, AnalysisJob, AnalysisOptions, Format, SingularityReport};
