//! Finite permutation-group engine: group arithmetic, Sylow and Thompson
//! subgroups, section (involvement) predicates for Qd(p), fusion control,
//! and exact induced-character computations, with a deterministic
//! verification suite exposed through the CLI crate.

pub mod bsgs;
pub mod caps;
pub mod character;
pub mod constructors;
pub mod corpus;
pub mod error;
pub mod fusion;
pub mod group;
pub mod hom;
pub mod iso;
pub mod perm;
pub mod pgroup;
pub mod report;
pub mod sections;
pub mod specfile;
pub mod subgroup;
pub mod verify;

pub use caps::Caps;
pub use error::{Error, Result};
pub use group::GroupHandle;
pub use hom::GroupHom;
pub use perm::Perm;
pub use subgroup::Subgroup;
