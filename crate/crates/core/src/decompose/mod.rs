//! Partitionings, shellings and constructibility certificates: exact search,
//! independent verification, and the h-vector read off restriction faces.

mod constructible;
mod exact_cover;
mod partition;
mod shelling;

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::complex::Face;

pub use constructible::{
    shelling_to_constructibility, verify_constructibility, ConstructibilityCert, ConstructibilityViolation,
};
pub use partition::{find_partitioning, h_from_partitioning, verify_partitioning, Interval, Partitioning, PartitionViolation};
pub use shelling::{find_shelling, verify_shelling, ShellingOrder, ShellingViolation};

/// Limits on an exhaustive search. Running out is an error, never a verdict.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub time: Option<Duration>,
    pub nodes: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn seconds(secs: u64) -> Self {
        Budget { time: Some(Duration::from_secs(secs)), nodes: None }
    }

    pub fn nodes(n: u64) -> Self {
        Budget { time: None, nodes: Some(n) }
    }

    pub(crate) fn exceeded(&self, nodes: u64, started: Instant) -> bool {
        if self.nodes.is_some_and(|n| nodes > n) {
            return true;
        }
        // the clock is only read every 4096 nodes
        nodes.is_multiple_of(4096) && self.time.is_some_and(|t| started.elapsed() > t)
    }
}

/// Statistics of one exhaustive search.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchReport {
    pub satisfiable: bool,
    pub nodes_explored: u64,
    pub options_generated: u64,
    pub wall_time: Duration,
}

/// Either a certificate or proof-by-exhaustion that none exists.
#[derive(Clone, Debug, PartialEq)]
pub enum SearchOutcome<T> {
    Found(T, SearchReport),
    Exhausted(SearchReport),
}

impl<T> SearchOutcome<T> {
    pub fn report(&self) -> &SearchReport {
        match self {
            SearchOutcome::Found(_, r) | SearchOutcome::Exhausted(r) => r,
        }
    }

    pub fn certificate(&self) -> Option<&T> {
        match self {
            SearchOutcome::Found(t, _) => Some(t),
            SearchOutcome::Exhausted(_) => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(..))
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DecomposeError {
    #[error("complex is not pure")]
    NotPure,
    #[error("search budget exhausted after {} nodes; no verdict", .0.nodes_explored)]
    BudgetExceeded(SearchReport),
    #[error("invalid shelling: {0}")]
    InvalidShelling(#[from] ShellingViolation),
    #[error("invalid partitioning: {0}")]
    InvalidPartitioning(#[from] PartitionViolation),
}

/// `(#{j : |R_j| = k})_k`, padded to `d + 2` entries.
pub fn h_from_restrictions<'a, I: IntoIterator<Item = &'a Face>>(bottoms: I, dim: i32) -> crate::complex::HVector {
    let mut h = vec![0i64; (dim + 2).max(0) as usize];
    for r in bottoms {
        if r.len() >= h.len() {
            h.resize(r.len() + 1, 0);
        }
        h[r.len()] += 1;
    }
    crate::complex::HVector(h)
}
