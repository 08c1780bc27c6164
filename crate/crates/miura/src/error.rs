use std::fmt;

use crate::pattern::{CreaseId, NodeId};

/// Errors raised by precondition and guard checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A crease identifier is out of range for the grid size.
    InvalidCrease(CreaseId),
    /// A node identifier is out of range for the grid size.
    InvalidNode(NodeId),
    /// An assignment fails the bird's foot condition at the given node.
    NotFoldable(NodeId),
    /// A coloring violates properness or the fixed top-left anchor.
    InvalidColoring(String),
    /// Two colorings of different grid sizes were combined.
    SizeMismatch,
    /// An operation that needs a fully directed digraph met undirected arcs.
    UndirectedArcs,
    /// An exponential oracle was asked to run past its size guard.
    TooLarge { cells: usize, limit: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidCrease(id) => write!(f, "crease {id} out of range"),
            Error::InvalidNode(n) => write!(f, "node ({},{}) out of range", n.r, n.c),
            Error::NotFoldable(n) => {
                write!(f, "assignment violates bird's foot at node ({},{})", n.r, n.c)
            }
            Error::InvalidColoring(msg) => write!(f, "invalid coloring: {msg}"),
            Error::SizeMismatch => write!(f, "grid sizes differ"),
            Error::UndirectedArcs => write!(f, "digraph contains undirected arcs"),
            Error::TooLarge { cells, limit } => write!(
                f,
                "refusing brute-force run on {cells} cells (guard {limit}); pass allow_large to override"
            ),
        }
    }
}

impl std::error::Error for Error {}
