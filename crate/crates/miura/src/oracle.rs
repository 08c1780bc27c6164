//! Brute-force reference implementations used to certify the fast
//! algorithms, plus difference-graph / uniform-curve diagnostics.
//!
//! The exponential routines carry hard size guards (`MAX_ENUM_CELLS`
//! cells for coloring enumeration, `MAX_SUBSET_CELLS` for subset search)
//! and fail loudly instead of hanging; pass `allow_large = true` to
//! override.

use crate::coloring::GridColoring;
use crate::error::Error;
use crate::pattern::{CreaseId, Fold, ForcingSet, GridSize, MVAssignment, NodeId, PartialMVAssignment};

pub const MAX_ENUM_CELLS: usize = 20;
pub const MAX_SUBSET_CELLS: usize = 9;

/// Streams every valid coloring of the grid (top-left fixed to 0),
/// each exactly once, in lexicographic cell order.
pub fn enumerate_colorings(
    size: GridSize,
    allow_large: bool,
) -> Result<impl Iterator<Item = GridColoring>, Error> {
    if !allow_large && size.cells() > MAX_ENUM_CELLS {
        return Err(Error::TooLarge { cells: size.cells(), limit: MAX_ENUM_CELLS });
    }
    Ok(ColoringIter::new(size))
}

/// Backtracking enumeration in row-major cell order.
struct ColoringIter {
    size: GridSize,
    colors: Vec<u8>,
    /// Next color to try at each position; 3 means exhausted.
    next_try: Vec<u8>,
    pos: usize,
    done: bool,
}

impl ColoringIter {
    fn new(size: GridSize) -> ColoringIter {
        ColoringIter {
            size,
            colors: vec![0; size.cells()],
            next_try: vec![0; size.cells()],
            pos: 0,
            done: false,
        }
    }

    fn fits(&self, pos: usize, color: u8) -> bool {
        if pos == 0 {
            return color == 0;
        }
        let (r, c) = (pos / self.size.cols, pos % self.size.cols);
        if c > 0 && self.colors[pos - 1] == color {
            return false;
        }
        if r > 0 && self.colors[pos - self.size.cols] == color {
            return false;
        }
        true
    }
}

impl Iterator for ColoringIter {
    type Item = GridColoring;

    fn next(&mut self) -> Option<GridColoring> {
        if self.done {
            return None;
        }
        let cells = self.size.cells();
        loop {
            if self.pos == cells {
                // Emit, then backtrack to search for the next one.
                let k = GridColoring::from_colors(self.size, self.colors.clone());
                self.pos -= 1;
                return Some(k);
            }
            let c = self.next_try[self.pos];
            if c >= 3 {
                self.next_try[self.pos] = 0;
                if self.pos == 0 {
                    self.done = true;
                    return None;
                }
                self.pos -= 1;
                continue;
            }
            self.next_try[self.pos] = c + 1;
            if self.fits(self.pos, c) {
                self.colors[self.pos] = c;
                self.pos += 1;
            }
        }
    }
}

/// True iff `k` is the unique valid coloring matching `k`'s edge weights
/// on every crease of `f`. Pure enumeration; independent of the
/// digraph-based test.
pub fn brute_is_forcing(k: &GridColoring, f: &ForcingSet, allow_large: bool) -> Result<bool, Error> {
    k.validate()?;
    let mut agreeing = 0usize;
    for cand in enumerate_colorings(k.size(), allow_large)? {
        if f.iter().all(|id| cand.edge_weight(id) == k.edge_weight(id)) {
            agreeing += 1;
            if agreeing > 1 {
                return Ok(false);
            }
        }
    }
    Ok(agreeing == 1)
}

/// Smallest forcing set for `k`, by searching crease subsets in
/// increasing size (lexicographic within a size, so the result is
/// deterministic). Guarded to tiny grids.
pub fn brute_min_forcing(k: &GridColoring, allow_large: bool) -> Result<ForcingSet, Error> {
    k.validate()?;
    let size = k.size();
    if !allow_large && size.cells() > MAX_SUBSET_CELLS {
        return Err(Error::TooLarge { cells: size.cells(), limit: MAX_SUBSET_CELLS });
    }
    let creases: Vec<CreaseId> = size.creases().collect();
    let m = creases.len();
    assert!(m <= 64, "crease count exceeds subset-search mask width");
    // One weight bit per crease; a coloring agrees with k on F iff the
    // masks coincide on F's bits.
    let mask_of = |cand: &GridColoring| -> u64 {
        let mut mask = 0u64;
        for (i, &id) in creases.iter().enumerate() {
            if cand.edge_weight(id) > 0 {
                mask |= 1 << i;
            }
        }
        mask
    };
    let target = mask_of(k);
    let all: Vec<u64> = enumerate_colorings(size, allow_large)?
        .map(|cand| mask_of(&cand) ^ target)
        .collect();
    for s in 0..=m {
        let mut found: Option<u64> = None;
        for_each_combination(m, s, &mut |subset_mask| {
            if found.is_some() {
                return;
            }
            let agreeing = all.iter().filter(|&&d| d & subset_mask == 0).count();
            if agreeing == 1 {
                found = Some(subset_mask);
            }
        });
        if let Some(mask) = found {
            return Ok((0..m).filter(|i| mask & (1 << i) != 0).map(|i| creases[i]).collect());
        }
    }
    unreachable!("the full crease set is always forcing");
}

/// Visits all `k`-subsets of `0..m` as bitmasks, in lexicographic order
/// of the ascending index sequences.
fn for_each_combination(m: usize, k: usize, visit: &mut impl FnMut(u64)) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut mask = 0u64;
        for &i in &idx {
            mask |= 1 << i;
        }
        visit(mask);
        // Advance to the next combination: bump the rightmost index that
        // still has room, reset everything after it.
        let Some(i) = (0..k).rev().find(|&i| idx[i] < m - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Enumeration-based completion oracle: some locally flat-foldable total
/// extension of `s`, or `None` when no extension exists.
pub fn brute_complete_partial(
    s: &PartialMVAssignment,
    allow_large: bool,
) -> Result<Option<MVAssignment>, Error> {
    let assigned: Vec<(CreaseId, Fold)> = s.assigned().collect();
    for k in enumerate_colorings(s.size(), allow_large)? {
        if assigned.iter().all(|&(id, f)| k.edge_weight(id) == f.sign()) {
            return Ok(Some(crate::coloring::coloring_to_mv(&k)?));
        }
    }
    Ok(None)
}

/// A uniform curve: a cycle or boundary-to-boundary path of grid arcs,
/// reported as the creases (dual edges) it crosses, in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformCurve {
    pub creases: Vec<CreaseId>,
    pub closed: bool,
}

/// Difference graph of two colorings: per-cell type in `{0, +1, -1}`
/// (`K2 - K1 mod 3`), the maximal polyomino partition, its hubs, and the
/// uniform curves obtained after smoothing every hub.
#[derive(Clone, Debug)]
pub struct DifferenceGraph {
    size: GridSize,
    types: Vec<i8>,
    polyomino: Vec<usize>,
    polyomino_count: usize,
    pub hubs: Vec<NodeId>,
    pub curves: Vec<UniformCurve>,
}

impl DifferenceGraph {
    pub fn size(&self) -> GridSize {
        self.size
    }

    pub fn cell_type(&self, r: usize, c: usize) -> i8 {
        self.types[self.size.cell_index(r, c)]
    }

    pub fn polyomino_id(&self, r: usize, c: usize) -> usize {
        self.polyomino[self.size.cell_index(r, c)]
    }

    pub fn polyomino_count(&self) -> usize {
        self.polyomino_count
    }
}

fn type_of(d: u8) -> i8 {
    match d {
        0 => 0,
        1 => 1,
        2 => -1,
        _ => unreachable!(),
    }
}

/// Builds the difference graph of two valid colorings of the same size.
///
/// Hubs where three cell types meet are smoothed the only legal way; at
/// two-type hubs the right angles wrap the two squares of the globally
/// rarer type (ties broken by type value), which is one of the two
/// allowed diagonal pairs and keeps the output reproducible.
pub fn difference_graph(k1: &GridColoring, k2: &GridColoring) -> Result<DifferenceGraph, Error> {
    if k1.size() != k2.size() {
        return Err(Error::SizeMismatch);
    }
    k1.validate()?;
    k2.validate()?;
    let size = k1.size();
    let types: Vec<i8> = (0..size.cells())
        .map(|i| {
            let (r, c) = (i / size.cols, i % size.cols);
            type_of((3 + k2.color(r, c) - k1.color(r, c)) % 3)
        })
        .collect();

    // Maximal polyominoes: flood fill over equal-type 4-adjacency.
    let mut polyomino = vec![usize::MAX; size.cells()];
    let mut polyomino_count = 0;
    for start in 0..size.cells() {
        if polyomino[start] != usize::MAX {
            continue;
        }
        let id = polyomino_count;
        polyomino_count += 1;
        let mut stack = vec![start];
        polyomino[start] = id;
        while let Some(i) = stack.pop() {
            let (r, c) = (i / size.cols, i % size.cols);
            let mut push = |j: usize| {
                if polyomino[j] == usize::MAX && types[j] == types[i] {
                    polyomino[j] = id;
                    stack.push(j);
                }
            };
            if c > 0 {
                push(i - 1);
            }
            if c + 1 < size.cols {
                push(i + 1);
            }
            if r > 0 {
                push(i - size.cols);
            }
            if r + 1 < size.rows {
                push(i + size.cols);
            }
        }
    }

    let type_at = |r: usize, c: usize| types[size.cell_index(r, c)];
    let global_count = |t: i8| types.iter().filter(|&&x| x == t).count();

    // Boundary arcs cross creases whose two cells have different types.
    let boundary: Vec<bool> = size
        .creases()
        .map(|id| {
            let [(r1, c1), (r2, c2)] = size.crease_cells(id);
            type_at(r1, c1) != type_at(r2, c2)
        })
        .collect();

    let mut hubs = Vec::new();
    // Per interior corner: pairing of incident boundary arcs, keyed by
    // crease index.
    let mut pairing: std::collections::HashMap<(usize, usize), usize> = std::collections::HashMap::new();
    for node in size.nodes() {
        let (i, j) = (node.r, node.c);
        let nw = (i - 1, j - 1);
        let ne = (i - 1, j);
        let sw = (i, j - 1);
        let se = (i, j);
        let west = CreaseId::h(i - 1, j - 1);
        let east = CreaseId::h(i - 1, j);
        let north = CreaseId::v(i - 1, j - 1);
        let south = CreaseId::v(i, j - 1);
        let corner_idx = (i - 1) * (size.cols - 1) + (j - 1);
        let incident = [west, north, east, south];
        let on: Vec<CreaseId> = incident
            .iter()
            .copied()
            .filter(|&id| boundary[size.crease_index(id)])
            .collect();
        // Hub per definition: three or more polyominoes meet here.
        let mut polys = [nw, ne, sw, se].map(|(r, c)| polyomino[size.cell_index(r, c)]);
        polys.sort_unstable();
        let distinct = polys.windows(2).filter(|w| w[0] != w[1]).count() + 1;
        if distinct >= 3 {
            hubs.push(node);
        }
        let pair = |a: CreaseId, b: CreaseId, pairing: &mut std::collections::HashMap<(usize, usize), usize>| {
            pairing.insert((corner_idx, size.crease_index(a)), size.crease_index(b));
            pairing.insert((corner_idx, size.crease_index(b)), size.crease_index(a));
        };
        match on.len() {
            0 => {}
            2 => pair(on[0], on[1], &mut pairing),
            4 => {
                let t = [type_at(nw.0, nw.1), type_at(ne.0, ne.1), type_at(se.0, se.1), type_at(sw.0, sw.1)];
                // With four boundary arcs the types alternate around the
                // corner on at least one diagonal.
                let wrap_ne_sw = if t[0] == t[2] && t[1] != t[3] {
                    // NW/SE diagonal uniform: wrap NE and SW.
                    true
                } else if t[1] == t[3] && t[0] != t[2] {
                    false
                } else {
                    // Two-type checker: wrap the squares of the rarer type.
                    debug_assert!(t[0] == t[2] && t[1] == t[3]);
                    let (cnt_diag1, cnt_diag2) = (global_count(t[0]), global_count(t[1]));
                    let minority_is_ne = cnt_diag2 < cnt_diag1 || (cnt_diag2 == cnt_diag1 && t[1] < t[0]);
                    minority_is_ne
                };
                if wrap_ne_sw {
                    // Right angles around NE (north+east) and SW (south+west).
                    pair(north, east, &mut pairing);
                    pair(south, west, &mut pairing);
                } else {
                    pair(north, west, &mut pairing);
                    pair(south, east, &mut pairing);
                }
            }
            _ => unreachable!("odd number of boundary arcs at a corner"),
        }
    }

    // Trace curves. Endpoints on the grid boundary terminate open curves.
    let curves = trace_curves(size, &boundary, &pairing);
    Ok(DifferenceGraph { size, types, polyomino, polyomino_count, hubs, curves })
}

/// The two interior-corner endpoints of the arc crossing a crease, as
/// corner indices; `None` marks the outer boundary.
fn corner_ends(size: GridSize, id: CreaseId) -> [Option<usize>; 2] {
    let c = |i: usize, j: usize| -> Option<usize> {
        if (1..size.rows).contains(&i) && (1..size.cols).contains(&j) {
            Some((i - 1) * (size.cols - 1) + (j - 1))
        } else {
            None
        }
    };
    match id.kind {
        crate::pattern::CreaseKind::H => [c(id.r + 1, id.c), c(id.r + 1, id.c + 1)],
        crate::pattern::CreaseKind::V => [c(id.r, id.c + 1), c(id.r + 1, id.c + 1)],
    }
}

fn trace_curves(
    size: GridSize,
    boundary: &[bool],
    pairing: &std::collections::HashMap<(usize, usize), usize>,
) -> Vec<UniformCurve> {
    let mut visited = vec![false; size.crease_count()];
    let mut curves = Vec::new();
    let follow = |start_arc: usize, start_from: Option<usize>, visited: &mut Vec<bool>| -> (Vec<CreaseId>, bool) {
        let mut arcs = Vec::new();
        let mut arc = start_arc;
        let mut entered_from = start_from;
        loop {
            visited[arc] = true;
            arcs.push(size.crease_at(arc));
            let ends = corner_ends(size, size.crease_at(arc));
            let exit = if ends[0] == entered_from { ends[1] } else { ends[0] };
            match exit {
                None => return (arcs, false),
                Some(corner) => {
                    let next = pairing[&(corner, arc)];
                    if next == start_arc {
                        return (arcs, true);
                    }
                    arc = next;
                    entered_from = Some(corner);
                }
            }
        }
    };
    // Open curves first, started from their boundary ends.
    for arc in 0..size.crease_count() {
        if !boundary[arc] || visited[arc] {
            continue;
        }
        let ends = corner_ends(size, size.crease_at(arc));
        if ends[0].is_none() || ends[1].is_none() {
            // Enter from the boundary side so the walk runs inward.
            let (arcs, closed) = follow(arc, None, &mut visited);
            debug_assert!(!closed || arcs.len() == 1);
            curves.push(UniformCurve { creases: arcs, closed: false });
        }
    }
    // Remaining boundary arcs form closed curves.
    for arc in 0..size.crease_count() {
        if !boundary[arc] || visited[arc] {
            continue;
        }
        let ends = corner_ends(size, size.crease_at(arc));
        let (arcs, closed) = follow(arc, ends[0], &mut visited);
        debug_assert!(closed);
        curves.push(UniformCurve { creases: arcs, closed: true });
    }
    curves
}

/// Splits the cells into the two sides of a uniform curve by cutting its
/// dual edges and flooding; returns (side of cell (0,0)'s component ...,
/// other side). Panics if the curve does not separate the grid into
/// exactly two parts.
pub fn curve_sides(size: GridSize, curve: &UniformCurve) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let cut: std::collections::HashSet<usize> =
        curve.creases.iter().map(|&id| size.crease_index(id)).collect();
    let mut comp = vec![usize::MAX; size.cells()];
    let mut ncomp = 0;
    for start in 0..size.cells() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = ncomp;
        ncomp += 1;
        let mut stack = vec![start];
        comp[start] = id;
        while let Some(i) = stack.pop() {
            let (r, c) = (i / size.cols, i % size.cols);
            let mut step = |crease: CreaseId, j: usize| {
                if comp[j] == usize::MAX && !cut.contains(&size.crease_index(crease)) {
                    comp[j] = id;
                    stack.push(j);
                }
            };
            if c > 0 {
                step(CreaseId::v(r, c - 1), i - 1);
            }
            if c + 1 < size.cols {
                step(CreaseId::v(r, c), i + 1);
            }
            if r > 0 {
                step(CreaseId::h(r - 1, c), i - size.cols);
            }
            if r + 1 < size.rows {
                step(CreaseId::h(r, c), i + size.cols);
            }
        }
    }
    assert_eq!(ncomp, 2, "curve must separate the grid into two sides");
    let mut a = Vec::new();
    let mut b = Vec::new();
    for i in 0..size.cells() {
        let cell = (i / size.cols, i % size.cols);
        if comp[i] == comp[0] {
            a.push(cell);
        } else {
            b.push(cell);
        }
    }
    (a, b)
}

/// Adds `d` (mod 3) to all colors on the side of the curve containing
/// `side_cell`, then re-anchors the result so the top-left cell is 0.
/// Edge weights are unchanged by the re-anchoring shift.
pub fn shift_across_curve(
    k: &GridColoring,
    curve: &UniformCurve,
    side_cell: (usize, usize),
    d: i8,
) -> GridColoring {
    let size = k.size();
    let (a, b) = curve_sides(size, curve);
    let side = if a.contains(&side_cell) { a } else { b };
    let mut colors: Vec<u8> = k.colors().to_vec();
    for (r, c) in side {
        let i = size.cell_index(r, c);
        colors[i] = ((colors[i] as i8 + d).rem_euclid(3)) as u8;
    }
    let anchor = colors[0] as i8;
    for v in colors.iter_mut() {
        *v = ((*v as i8 - anchor).rem_euclid(3)) as u8;
    }
    GridColoring::from_colors(size, colors)
}
