//! Structural decompositions and ideal theory in the truncated ring.

mod basis;
mod decompose;
mod demo;
mod endomorphism;
mod ideals;
mod regularity;
mod retract;

pub use basis::{echelon_basis, express_in_basis, BasisExpansion, BasisFamily};
pub use decompose::{canonical_decompose, filtration_degree, filtration_report, CanonicalDecomposition, FiltrationReport};
pub use demo::{demo_not_finitely_generated, CandidateCheck, Transcript};
pub use endomorphism::{apply_endomorphism, GammaTable};
pub use ideals::{annihilates_squarefree_block, in_ik, nilpotency_index, NilpotencyIndex};
pub use regularity::regularity_kernel;
pub use retract::{retract_q, retract_sqf, ExponentSet};
