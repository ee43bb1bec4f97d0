//! Exact symbolic verification of the algebra behind a rigidity theorem for
//! minimal hypersurfaces in S^6: the isoparametric assumption `A(r)`, its
//! closed forms, the positivity case analysis and the rigidity reductions.

pub mod assumption;
pub mod cli;
pub mod curvature;
pub mod polycore;
pub mod symfun;
pub mod verify;

pub use polycore::{Poly, PolyError, Rat, VarCtx};
