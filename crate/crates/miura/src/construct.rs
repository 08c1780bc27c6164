//! Constructive forcing sets: domino tilings for the standard pattern
//! and a greedy `ceil(mn/2)` construction for arbitrary patterns.
//!
//! Both constructions work block by block. With the two cells on one
//! side of a 2x2 block already determined, one well-chosen crease inside
//! the block determines the other two: a 2-colored block needs the
//! crease between the two new cells, a 3-colored block the crease from a
//! determined cell into the monochromatic diagonal.

use crate::coloring::GridColoring;
use crate::error::Error;
use crate::pattern::{CreaseId, ForcingSet, GridSize};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A partition of the grid cells into dominoes (pairs of adjacent cells).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominoTiling {
    size: GridSize,
    /// `partner[i]` is the cell paired with cell `i`.
    partner: Vec<usize>,
}

impl DominoTiling {
    /// Rows of horizontal dominoes; when the column count is odd the last
    /// column is covered by vertical dominoes instead. Requires an even
    /// cell count.
    pub fn brick(size: GridSize) -> DominoTiling {
        assert!(size.cells() % 2 == 0, "odd cell count has no perfect tiling");
        let mut partner = vec![usize::MAX; size.cells()];
        let mut pair = |a: usize, b: usize| {
            partner[a] = b;
            partner[b] = a;
        };
        let even_cols = size.cols - size.cols % 2;
        for r in 0..size.rows {
            for c in (0..even_cols).step_by(2) {
                pair(size.cell_index(r, c), size.cell_index(r, c + 1));
            }
        }
        if size.cols % 2 == 1 {
            for r in (0..size.rows).step_by(2) {
                pair(size.cell_index(r, size.cols - 1), size.cell_index(r + 1, size.cols - 1));
            }
        }
        DominoTiling { size, partner }
    }

    /// Starts from [`DominoTiling::brick`] and applies `flips` random 2x2
    /// rotations. Deterministic per seed.
    pub fn shuffled(size: GridSize, flips: usize, seed: u64) -> DominoTiling {
        let mut t = DominoTiling::brick(size);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if size.rows < 2 || size.cols < 2 {
            return t;
        }
        let mut done = 0;
        let mut attempts = 0;
        while done < flips && attempts < flips * 20 + 100 {
            attempts += 1;
            let r = rng.gen_range(0..size.rows - 1);
            let c = rng.gen_range(0..size.cols - 1);
            if t.flip_at(r, c) {
                done += 1;
            }
        }
        t
    }

    /// Rotates the two dominoes filling the 2x2 block with top-left cell
    /// `(r, c)`, if the block is exactly tiled by two parallel dominoes.
    /// Returns whether a flip happened.
    pub fn flip_at(&mut self, r: usize, c: usize) -> bool {
        let nw = self.size.cell_index(r, c);
        let ne = self.size.cell_index(r, c + 1);
        let sw = self.size.cell_index(r + 1, c);
        let se = self.size.cell_index(r + 1, c + 1);
        if self.partner[nw] == ne && self.partner[sw] == se {
            self.partner[nw] = sw;
            self.partner[sw] = nw;
            self.partner[ne] = se;
            self.partner[se] = ne;
            true
        } else if self.partner[nw] == sw && self.partner[ne] == se {
            self.partner[nw] = ne;
            self.partner[ne] = nw;
            self.partner[sw] = se;
            self.partner[se] = sw;
            true
        } else {
            false
        }
    }

    pub fn size(&self) -> GridSize {
        self.size
    }

    /// The crease inside each domino; one crease per domino.
    pub fn creases(&self) -> ForcingSet {
        let mut out = Vec::new();
        for i in 0..self.size.cells() {
            let j = self.partner[i];
            if j < i {
                continue;
            }
            let (r, c) = (i / self.size.cols, i % self.size.cols);
            out.push(if j == i + 1 { CreaseId::v(r, c) } else { CreaseId::h(r, c) });
        }
        out.into_iter().collect()
    }
}

/// Forcing set of size `ceil(mn/2)` for the standard pattern: the brick
/// tiling's creases, with one extra crease covering the leftover cell on
/// odd-by-odd grids.
pub fn domino_forcing_standard(size: GridSize) -> ForcingSet {
    if size.cells() % 2 == 0 {
        return DominoTiling::brick(size).creases();
    }
    // Both dimensions odd: tile everything except the bottom-right cell,
    // then tie that cell to its upper neighbor directly.
    let mut out: Vec<CreaseId> = Vec::new();
    for r in 0..size.rows {
        for c in (0..size.cols - 1).step_by(2) {
            out.push(CreaseId::v(r, c));
        }
    }
    for r in (0..size.rows - 1).step_by(2) {
        out.push(CreaseId::h(r, size.cols - 1));
    }
    if size.rows >= 2 {
        out.push(CreaseId::h(size.rows - 2, size.cols - 1));
    }
    out.into_iter().collect()
}

/// Crease determining the right column of the 2x2 block at `(r..=r+1,
/// c..=c+1)` once its left column is determined.
fn horiz_block(k: &GridColoring, r: usize, c: usize) -> CreaseId {
    let (a, b) = (k.color(r, c), k.color(r + 1, c));
    let (cc, d) = (k.color(r, c + 1), k.color(r + 1, c + 1));
    if a == d && b == cc {
        CreaseId::h(r, c + 1)
    } else if a == d {
        CreaseId::v(r, c)
    } else {
        debug_assert_eq!(b, cc, "one diagonal of the block is monochromatic");
        CreaseId::v(r + 1, c)
    }
}

/// Crease determining the bottom row of the 2x2 block at `(r..=r+1,
/// c..=c+1)` once its top row is determined.
fn vert_block(k: &GridColoring, r: usize, c: usize) -> CreaseId {
    let (a, b) = (k.color(r, c), k.color(r, c + 1));
    let (cc, d) = (k.color(r + 1, c), k.color(r + 1, c + 1));
    if a == d && b == cc {
        CreaseId::v(r + 1, c)
    } else if a == d {
        CreaseId::h(r, c)
    } else {
        debug_assert_eq!(b, cc, "one diagonal of the block is monochromatic");
        CreaseId::h(r, c + 1)
    }
}

/// Greedy forcing set for an arbitrary coloring. Size `ceil(mn/2)` when
/// both dimensions are at least 2; single-row and single-column grids
/// need every crease.
///
/// Sweeps row pairs top to bottom. The anchor determines the top-left
/// cell, one seed crease its lower neighbor; each further crease comes
/// from a 2x2 block rule and determines two new cells, so the whole
/// coloring is pinned down.
pub fn greedy_forcing(k: &GridColoring) -> Result<ForcingSet, Error> {
    k.validate()?;
    let size = k.size();
    let (m, n) = (size.rows, size.cols);
    if m == 1 || n == 1 {
        return Ok(size.creases().collect());
    }
    let mut f: Vec<CreaseId> = Vec::with_capacity((size.cells() + 1) / 2);
    // First row pair: seed downward, then sweep rightward.
    f.push(CreaseId::h(0, 0));
    for c in 0..n - 1 {
        f.push(horiz_block(k, 0, c));
    }
    let mut r = 0;
    while r + 3 < m {
        // Step the left edge down twice, then sweep the new row pair.
        f.push(vert_block(k, r + 1, 0));
        f.push(vert_block(k, r + 2, 0));
        for c in 1..n - 1 {
            f.push(horiz_block(k, r + 2, c));
        }
        r += 2;
    }
    if r + 3 == m {
        // Odd row count: the last row hangs below a determined row.
        let top = r + 1;
        let mut c = 0;
        while c + 1 < n {
            f.push(vert_block(k, top, c));
            c += 2;
        }
        if c < n {
            f.push(CreaseId::h(top, n - 1));
        }
    }
    let out: ForcingSet = f.into_iter().collect();
    debug_assert_eq!(out.len(), (size.cells() + 1) / 2);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::mv_to_coloring;
    use crate::digraph::is_forcing;
    use crate::pattern::standard_assignment;
    use crate::sample::sample_coloring;

    fn standard_coloring(size: GridSize) -> GridColoring {
        mv_to_coloring(&standard_assignment(size)).unwrap()
    }

    #[test]
    fn brick_creases_have_tiling_size() {
        let t = DominoTiling::brick(GridSize::new(4, 6));
        assert_eq!(t.creases().len(), 12);
        let t = DominoTiling::brick(GridSize::new(4, 5));
        assert_eq!(t.creases().len(), 10);
    }

    #[test]
    fn flip_round_trips() {
        let size = GridSize::new(2, 2);
        let mut t = DominoTiling::brick(size);
        let original = t.clone();
        assert!(t.flip_at(0, 0));
        assert_ne!(t, original);
        assert!(t.flip_at(0, 0));
        assert_eq!(t, original);
    }

    #[test]
    fn domino_standard_size_and_forcing() {
        for m in 2..=6 {
            for n in 2..=6 {
                let size = GridSize::new(m, n);
                let f = domino_forcing_standard(size);
                assert_eq!(f.len(), (m * n + 1) / 2, "{m}x{n}");
                let k = standard_coloring(size);
                assert!(is_forcing(&k, &f).unwrap().forcing, "{m}x{n}");
            }
        }
    }

    #[test]
    fn shuffled_tilings_remain_forcing_for_standard() {
        let size = GridSize::new(4, 6);
        let k = standard_coloring(size);
        for seed in 0..30 {
            let t = DominoTiling::shuffled(size, 40, seed);
            assert!(is_forcing(&k, &t.creases()).unwrap().forcing, "seed {seed}");
        }
    }

    #[test]
    fn greedy_size_and_forcing_on_random_colorings() {
        for &(m, n) in &[(2, 2), (2, 5), (3, 4), (4, 6), (5, 5), (6, 3)] {
            let size = GridSize::new(m, n);
            for seed in 0..25u64 {
                let k = sample_coloring(size, seed);
                let f = greedy_forcing(&k).unwrap();
                assert_eq!(f.len(), (m * n + 1) / 2, "{m}x{n} seed {seed}");
                assert!(is_forcing(&k, &f).unwrap().forcing, "{m}x{n} seed {seed}");
            }
        }
    }

    #[test]
    fn greedy_degenerate_rows_take_all_creases() {
        let k = sample_coloring(GridSize::new(1, 6), 0);
        let f = greedy_forcing(&k).unwrap();
        assert_eq!(f.len(), 5);
        assert!(is_forcing(&k, &f).unwrap().forcing);
        let k = sample_coloring(GridSize::new(6, 1), 0);
        assert_eq!(greedy_forcing(&k).unwrap().len(), 5);
    }

    #[test]
    fn greedy_rejects_invalid_coloring() {
        let k = GridColoring::from_rows(vec![vec![0, 0]]);
        assert!(greedy_forcing(&k).is_err());
    }
}
