use crate::error::{Error, Result};

/// Bounds on exhaustive enumerations. Operations refuse inputs beyond these
/// bounds rather than truncating.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Vertex bound for colorings, orientations, permutations and posets.
    pub max_vertices: usize,
    /// Vertex bound for the frame-circuit scan.
    pub max_frame_vertices: usize,
    /// Edge bound for the frame-circuit scan (it visits every edge subset).
    pub max_frame_edges: usize,
}

pub const DEFAULT_MAX_VERTICES: usize = 6;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: DEFAULT_MAX_VERTICES,
            max_frame_vertices: 8,
            max_frame_edges: 24,
        }
    }
}

impl Limits {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        Limits {
            max_vertices,
            ..Limits::default()
        }
    }

    pub(crate) fn check_vertices(&self, what: &'static str, d: usize) -> Result<()> {
        if d > self.max_vertices {
            return Err(Error::SizeGuard {
                what,
                size: d,
                bound: self.max_vertices,
            });
        }
        Ok(())
    }
}
