//! Controlling sets: crease sets whose fold directions pin down every
//! cell of the dual coloring by direct propagation, independent of which
//! locally flat-foldable pattern is folded.
//!
//! A set is controlling exactly when its dual edges connect the grid
//! graph of cells, i.e. contain a spanning tree. Every controlling set
//! is forcing (the colors of all cells follow from the anchor along the
//! set's own edges), but minimum forcing sets are usually far smaller.

use crate::error::Error;
use crate::pattern::{CreaseId, ForcingSet, GridSize};

/// Outcome of a controlling test. When the set is not controlling,
/// `component` lists the cells of one connected component not containing
/// the top-left cell, as a certificate.
#[derive(Clone, Debug)]
pub struct ControllingCheck {
    pub controlling: bool,
    pub component: Option<Vec<(usize, usize)>>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra] = rb;
    }
}

/// Tests whether `f`'s dual edges connect all cells of the grid.
pub fn controlling_check(size: GridSize, f: &ForcingSet) -> Result<ControllingCheck, Error> {
    let mut uf = UnionFind::new(size.cells());
    for id in f.iter() {
        if !size.contains_crease(id) {
            return Err(Error::InvalidCrease(id));
        }
        let [(r1, c1), (r2, c2)] = size.crease_cells(id);
        uf.union(size.cell_index(r1, c1), size.cell_index(r2, c2));
    }
    let anchor_root = uf.find(0);
    let stray = (1..size.cells()).find(|&i| uf.find(i) != anchor_root);
    match stray {
        None => Ok(ControllingCheck { controlling: true, component: None }),
        Some(i) => {
            let root = uf.find(i);
            let component = (0..size.cells())
                .filter(|&j| uf.find(j) == root)
                .map(|j| (j / size.cols, j % size.cols))
                .collect();
            Ok(ControllingCheck { controlling: false, component: Some(component) })
        }
    }
}

pub fn is_controlling(size: GridSize, f: &ForcingSet) -> Result<bool, Error> {
    Ok(controlling_check(size, f)?.controlling)
}

/// A minimum-size controlling set (`mn - 1` creases, a spanning tree):
/// the top row's vertical creases plus every horizontal crease, forming
/// a comb.
pub fn comb_controlling(size: GridSize) -> ForcingSet {
    let mut out: Vec<CreaseId> = Vec::with_capacity(size.cells() - 1);
    for c in 0..size.cols - 1 {
        out.push(CreaseId::v(0, c));
    }
    for r in 0..size.rows - 1 {
        for c in 0..size.cols {
            out.push(CreaseId::h(r, c));
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::is_forcing;
    use crate::sample::sample_coloring;

    #[test]
    fn comb_is_controlling_with_tree_size() {
        for m in 1..=5 {
            for n in 1..=5 {
                let size = GridSize::new(m, n);
                let f = comb_controlling(size);
                assert_eq!(f.len(), m * n - 1, "{m}x{n}");
                assert!(is_controlling(size, &f).unwrap(), "{m}x{n}");
            }
        }
    }

    #[test]
    fn empty_set_controls_only_single_cell() {
        assert!(is_controlling(GridSize::new(1, 1), &ForcingSet::default()).unwrap());
        let check = controlling_check(GridSize::new(2, 2), &ForcingSet::default()).unwrap();
        assert!(!check.controlling);
        let comp = check.component.unwrap();
        assert!(!comp.is_empty());
        assert!(!comp.contains(&(0, 0)));
    }

    #[test]
    fn dropping_a_tree_edge_disconnects() {
        let size = GridSize::new(3, 3);
        let full = comb_controlling(size);
        for skip in full.iter() {
            let f: ForcingSet = full.iter().filter(|&id| id != skip).collect();
            assert!(!is_controlling(size, &f).unwrap());
        }
    }

    #[test]
    fn supersets_stay_controlling() {
        let size = GridSize::new(3, 4);
        let f: ForcingSet = size.creases().collect();
        assert!(is_controlling(size, &f).unwrap());
    }

    #[test]
    fn controlling_implies_forcing() {
        let size = GridSize::new(3, 4);
        let f = comb_controlling(size);
        for seed in 0..20u64 {
            let k = sample_coloring(size, seed);
            assert!(is_forcing(&k, &f).unwrap().forcing, "seed {seed}");
        }
    }

    #[test]
    fn minimum_forcing_is_smaller_than_controlling() {
        let size = GridSize::new(3, 4);
        let k = crate::coloring::diagonal_coloring(size);
        let min = crate::fas::min_forcing_set(&k).unwrap();
        assert!(min.len() < comb_controlling(size).len());
    }

    #[test]
    fn rejects_foreign_creases() {
        let size = GridSize::new(2, 2);
        let f: ForcingSet = [CreaseId::v(0, 5)].into_iter().collect();
        assert!(matches!(controlling_check(size, &f), Err(Error::InvalidCrease(_))));
    }
}
