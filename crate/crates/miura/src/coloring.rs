//! Bijection between locally flat-foldable assignments and proper
//! 3-colorings of the dual grid graph with the top-left cell colored 0.
//!
//! Every crease carries a weight in `{+1, -1}` given by the mod-3 color
//! difference along a canonical edge direction: vertical dual edges point
//! down, horizontal dual edges follow the boustrophedon direction of
//! their row (rightward on even rows, leftward on odd rows). On the
//! boustrophedon path itself this agrees with the recurrence
//! `K(v_{i+1}) = K(v_i) + mu(L_i) mod 3`.

use crate::error::Error;
use crate::pattern::{CreaseId, CreaseKind, Fold, GridSize, MVAssignment};

/// Proper 3-coloring of the dual grid graph, anchored at `K(0,0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridColoring {
    size: GridSize,
    colors: Vec<u8>,
}

impl GridColoring {
    /// Wraps raw colors without validating; use [`GridColoring::is_valid`].
    pub fn from_colors(size: GridSize, colors: Vec<u8>) -> GridColoring {
        assert_eq!(colors.len(), size.cells());
        GridColoring { size, colors }
    }

    pub fn from_rows(rows: Vec<Vec<u8>>) -> GridColoring {
        let size = GridSize::new(rows.len(), rows[0].len());
        let colors = rows.into_iter().flatten().collect();
        GridColoring::from_colors(size, colors)
    }

    pub fn size(&self) -> GridSize {
        self.size
    }

    pub fn color(&self, r: usize, c: usize) -> u8 {
        self.colors[self.size.cell_index(r, c)]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    /// True iff the top-left cell is 0, every color is in `{0,1,2}` and
    /// cells sharing a crease have different colors.
    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.colors[0] != 0 {
            return Err(Error::InvalidColoring("top-left cell must have color 0".into()));
        }
        if let Some(i) = self.colors.iter().position(|&c| c > 2) {
            return Err(Error::InvalidColoring(format!("cell {i} has color outside 0..=2")));
        }
        for id in self.size.creases() {
            let [(r1, c1), (r2, c2)] = self.size.crease_cells(id);
            if self.color(r1, c1) == self.color(r2, c2) {
                return Err(Error::InvalidColoring(format!(
                    "cells ({r1},{c1}) and ({r2},{c2}) share crease {id} but have equal colors"
                )));
            }
        }
        Ok(())
    }

    /// Crease weight: `+1` if the color difference along the canonical
    /// edge direction is 1 mod 3, `-1` if it is 2 mod 3.
    ///
    /// Only defined on valid colorings (adjacent colors differ).
    pub fn edge_weight(&self, id: CreaseId) -> i8 {
        let (tail, head) = canonical_ends(id);
        let d = (3 + self.color(head.0, head.1) as i8 - self.color(tail.0, tail.1) as i8) % 3;
        debug_assert!(d == 1 || d == 2, "equal colors across {id}");
        if d == 1 {
            1
        } else {
            -1
        }
    }
}

/// Canonical (tail, head) cells of the dual edge crossed by a crease:
/// down for `H` creases, boustrophedon for `V` creases.
pub fn canonical_ends(id: CreaseId) -> ((usize, usize), (usize, usize)) {
    match id.kind {
        CreaseKind::H => ((id.r, id.c), (id.r + 1, id.c)),
        CreaseKind::V => {
            if id.r % 2 == 0 {
                ((id.r, id.c), (id.r, id.c + 1))
            } else {
                ((id.r, id.c + 1), (id.r, id.c))
            }
        }
    }
}

/// The cells of the boustrophedon path together with the crease between
/// each consecutive pair.
fn boustrophedon(size: GridSize) -> impl Iterator<Item = (CreaseId, (usize, usize), (usize, usize))> {
    let n = size.cols;
    (0..size.cells().saturating_sub(1)).map(move |i| {
        let cell = |j: usize| {
            let r = j / n;
            let c = if r % 2 == 0 { j % n } else { n - 1 - j % n };
            (r, c)
        };
        let (a, b) = (cell(i), cell(i + 1));
        let id = if a.0 == b.0 {
            CreaseId::v(a.0, a.1.min(b.1))
        } else {
            CreaseId::h(a.0, a.1)
        };
        (id, a, b)
    })
}

/// Colors a locally flat-foldable assignment along the boustrophedon
/// path. Errors with the first violating node when `a` is not foldable.
pub fn mv_to_coloring(a: &MVAssignment) -> Result<GridColoring, Error> {
    if let Some(&node) = a.violating_nodes().first() {
        return Err(Error::NotFoldable(node));
    }
    let size = a.size();
    let mut colors = vec![0u8; size.cells()];
    for (id, from, to) in boustrophedon(size) {
        let prev = colors[size.cell_index(from.0, from.1)];
        colors[size.cell_index(to.0, to.1)] = ((prev as i8 + a.get(id).sign()).rem_euclid(3)) as u8;
    }
    let coloring = GridColoring { size, colors };
    debug_assert!(coloring.is_valid());
    Ok(coloring)
}

/// Reads the assignment off a valid coloring; inverse of [`mv_to_coloring`].
pub fn coloring_to_mv(k: &GridColoring) -> Result<MVAssignment, Error> {
    k.validate()?;
    let a = MVAssignment::from_fn(k.size(), |id| {
        Fold::from_sign(k.edge_weight(id)).expect("weight is +-1")
    });
    debug_assert!(a.is_locally_flat_foldable());
    Ok(a)
}

/// The diagonal-stripe coloring `K(r,c) = (r+c) mod 3`, whose minimum
/// forcing sets have the smallest possible size `m+n-2`.
pub fn diagonal_coloring(size: GridSize) -> GridColoring {
    let mut colors = Vec::with_capacity(size.cells());
    for r in 0..size.rows {
        for c in 0..size.cols {
            colors.push(((r + c) % 3) as u8);
        }
    }
    GridColoring { size, colors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::standard_assignment;

    #[test]
    fn validity_examples() {
        assert!(GridColoring::from_rows(vec![vec![0, 1], vec![1, 2]]).is_valid());
        assert!(!GridColoring::from_rows(vec![vec![0, 0]]).is_valid());
        assert!(!GridColoring::from_rows(vec![vec![1, 2], vec![2, 0]]).is_valid());
    }

    fn single_crease(sign: i8) -> MVAssignment {
        MVAssignment::from_fn(GridSize::new(1, 2), |_| Fold::from_sign(sign).unwrap())
    }

    #[test]
    fn mv_to_coloring_recurrence() {
        assert_eq!(mv_to_coloring(&single_crease(1)).unwrap().colors(), &[0, 1]);
        assert_eq!(mv_to_coloring(&single_crease(-1)).unwrap().colors(), &[0, 2]);
        let a = MVAssignment::from_fn(GridSize::new(1, 3), |_| Fold::Mountain);
        assert_eq!(mv_to_coloring(&a).unwrap().colors(), &[0, 1, 2]);
    }

    #[test]
    fn mv_to_coloring_rejects_unfoldable() {
        let size = GridSize::new(2, 2);
        let mut a = standard_assignment(size);
        a.set(CreaseId::h(0, 0), a.get(CreaseId::h(0, 0)).flipped());
        match mv_to_coloring(&a) {
            Err(Error::NotFoldable(n)) => assert_eq!(n, crate::pattern::NodeId { r: 1, c: 1 }),
            other => panic!("expected NotFoldable, got {other:?}"),
        }
    }

    #[test]
    fn coloring_to_mv_examples() {
        let k = GridColoring::from_rows(vec![vec![0, 1]]);
        assert_eq!(coloring_to_mv(&k).unwrap().get(CreaseId::v(0, 0)), Fold::Mountain);
        let k = GridColoring::from_rows(vec![vec![0, 2]]);
        assert_eq!(coloring_to_mv(&k).unwrap().get(CreaseId::v(0, 0)), Fold::Valley);
    }

    #[test]
    fn round_trip_standard() {
        let a = standard_assignment(GridSize::new(4, 6));
        let k = mv_to_coloring(&a).unwrap();
        assert_eq!(coloring_to_mv(&k).unwrap(), a);
    }

    #[test]
    fn diagonal_examples() {
        let k = diagonal_coloring(GridSize::new(2, 2));
        assert_eq!(k.colors(), &[0, 1, 1, 2]);
        for m in 1..=6 {
            for n in 1..=6 {
                assert!(diagonal_coloring(GridSize::new(m, n)).is_valid());
            }
        }
    }

    #[test]
    fn coloring_rejects_invalid_in_coloring_to_mv() {
        let k = GridColoring::from_rows(vec![vec![0, 0]]);
        assert!(coloring_to_mv(&k).is_err());
    }
}
