//! Virtual braid groups and their relatives: exact word algebra over their
//! presentations, the Burau, free-group-automorphism and permutation
//! representations, abelianization, the block symmetry of the juxtaposition
//! pairing and Gauss codes of closures.

pub mod braidword;
pub mod cli;
pub mod freegrp;
pub mod gauss;
pub mod laurent;
pub mod lpmatrix;
pub mod monoidal;
pub mod perm;
pub mod reps;
pub mod verify;

pub use braidword::{Flavor, GroupWord, Letter, LetterKind};
pub use laurent::LaurentPoly;
pub use lpmatrix::LPMatrix;
pub use perm::Permutation;
