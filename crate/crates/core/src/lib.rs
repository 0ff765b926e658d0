//! Restricted-weight Hasse diagrams of split simple root systems, and the
//! exhaustive classification of surjective labeled maps between them.
//!
//! The crate is organized bottom-up:
//!
//! - [`rootsys`]: irreducible reduced root systems of types A–G with exact
//!   integer Cartan data, positive-root enumeration and Dynkin-diagram queries;
//! - [`weights`]: weight-lattice arithmetic, the dominance order, and the
//!   full weight set of an irreducible representation computed from its
//!   highest weight by the string rule;
//! - [`hasse`]: the level-graded, simple-root-labeled Hasse diagram of a
//!   weight set, with structural queries and DOT export;
//! - [`dmap`]: labelings between simple-root sets, induced diagram maps,
//!   surjectivity testing, the pruned labeling search, and folding labelings
//!   built from Dynkin-diagram automorphisms;
//! - [`classify`]: the pairwise classification over all admissible system
//!   pairs up to a rank cap, with witnesses, non-existence certificates and
//!   a verification diff against the expected family table.
//!
//! All arithmetic is exact (integers, with one rational solve inside the
//! dominance order). Every value is immutable after construction and every
//! operation is pure, so everything can be shared across threads freely.
//! With the `parallel` feature (on by default) the classification fans out
//! over system pairs with rayon; the sequential path is always available and
//! produces byte-identical results.

pub mod classify;
pub mod dmap;
mod error;
pub mod hasse;
pub mod rootsys;
pub mod weights;

pub use error::Error;
pub use hasse::{build_hasse, HasseDiagram};
pub use rootsys::{Family, RootSystem, RootVector, SystemType};
pub use weights::{dominance_leq, fundamental_weight, is_dominant, weight_set, Weight, WeightSet};

pub(crate) mod exec {
    //! Order-preserving map over a batch of work items, parallel when the
    //! `parallel` feature is enabled.

    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub enum ExecMode {
        Sequential,
        /// Uses rayon when the `parallel` feature is compiled in; otherwise
        /// falls back to the sequential path.
        Parallel,
    }

    #[cfg(feature = "parallel")]
    pub fn map<T, U, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> U + Sync + Send,
    {
        use rayon::prelude::*;
        match mode {
            ExecMode::Sequential => items.into_iter().map(f).collect(),
            ExecMode::Parallel => items.into_par_iter().map(f).collect(),
        }
    }

    #[cfg(not(feature = "parallel"))]
    pub fn map<T, U, F>(_mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
    where
        F: Fn(T) -> U,
    {
        items.into_iter().map(f).collect()
    }
}

pub use exec::ExecMode;
