//! Search and enumeration limits.
//!
//! Every exhaustive search refuses (with an explicit infeasibility error)
//! rather than silently truncating when its input exceeds the relevant cap.

/// Configurable limits with library-wide defaults.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Groups up to this order cache a full sorted element table.
    pub enumeration: u64,
    /// Hard ceiling on constructed group order.
    pub hard: u64,
    /// Full subgroup-lattice enumeration limit.
    pub subgroups: u64,
    /// Automorphism-group enumeration limit.
    pub aut: u64,
    /// Abelian / elementary-abelian subgroup search limit inside a p-group.
    pub abelian_search: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: 100_000,
            hard: 1_000_000,
            subgroups: 2_000,
            aut: 2_048,
            abelian_search: 729,
        }
    }
}

impl Caps {
    pub fn new() -> Self {
        Self::default()
    }
}
