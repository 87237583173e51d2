//! Execution mode and search guards.
//!
//! Every exponential search in the crate takes a [`Limits`] so that guards are
//! explicit at the call site. The [`Exec`] mode selects between the rayon
//! backed reductions and a plain sequential loop; both produce bit-identical
//! results. Without the `parallel` feature, [`Exec::Parallel`] silently runs
//! sequentially.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Live-term bound for capped polynomial expansion.
    pub max_terms: usize,
    /// Edge bound for Eulerian census and orientation enumeration.
    pub max_census_edges: usize,
    /// Edge bound for exact chromatic-index search.
    pub max_edge_coloring_edges: usize,
    /// Vertex bound for 1-factorization search.
    pub max_factorization_order: usize,
    /// Vertex bound for exact chromatic number.
    pub max_chromatic_order: usize,
    /// Vertex bound for choosability.
    pub max_choosability_order: usize,
    /// List-size bound for choosability.
    pub max_choosability_k: usize,
    pub exec: Exec,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_terms: 10_000_000,
            max_census_edges: 22,
            max_edge_coloring_edges: 24,
            max_factorization_order: 24,
            max_chromatic_order: 12,
            max_choosability_order: 6,
            max_choosability_k: 3,
            exec: Exec::default(),
        }
    }
}

impl Limits {
    pub fn sequential() -> Self {
        Limits {
            exec: Exec::Sequential,
            ..Limits::default()
        }
    }

    pub fn with_exec(self, exec: Exec) -> Self {
        Limits { exec, ..self }
    }
}

/// Maps `f` over `items`, preserving order, in parallel when `exec` allows.
pub(crate) fn map_ordered<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// First `Some` in item order; parallel evaluation may run later items
/// speculatively but the answer is the same as the sequential scan.
pub(crate) fn find_map_first<T, R, F>(exec: Exec, items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().find_map_first(f);
    }
    let _ = exec;
    items.iter().find_map(f)
}
