//! The auxiliary planar multidigraph `H` on interior square corners plus
//! one outer node. Each arc crosses exactly one crease, so arcs are
//! indexed by crease index. Directed cycles of `H` (self-loops included)
//! are exactly the uniform curves of the coloring, which yields the
//! linear-time forcing-set test: `F` is forcing iff `H` minus the arcs
//! dual to `F` is acyclic.
//!
//! "Clockwise around a square" is evaluated in screen coordinates (row
//! index grows downward). The fixed endpoint order of every arc is
//! left-to-right for arcs along horizontal grid lines and top-to-bottom
//! for arcs along vertical grid lines; `ArcDir::Forward` follows that
//! order.

use crate::coloring::GridColoring;
use crate::error::Error;
use crate::pattern::{CreaseId, CreaseKind, GridSize, NodeId, PartialMVAssignment};

/// Direction of an arc relative to its fixed endpoint order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcDir {
    Forward,
    Backward,
}

impl ArcDir {
    pub fn reversed(self) -> ArcDir {
        match self {
            ArcDir::Forward => ArcDir::Backward,
            ArcDir::Backward => ArcDir::Forward,
        }
    }
}

/// Arc identifier; equals the crease index of the crossed crease.
pub type ArcId = usize;

/// The auxiliary multidigraph. Arcs incident to the grid boundary attach
/// to the single outer node; self-loops and parallel arcs are permitted.
#[derive(Clone, Debug)]
pub struct AuxDigraph {
    size: GridSize,
    /// Endpoint pair per arc in fixed order (node indices).
    ends: Vec<[usize; 2]>,
    /// Direction per arc; `None` in the partial case.
    dir: Vec<Option<ArcDir>>,
}

/// Node index of the interior corner shared by the four cells around
/// interior node `(i, j)`, or the outer node when out of range.
fn corner(size: GridSize, i: usize, j: usize) -> usize {
    if (1..size.rows).contains(&i) && (1..size.cols).contains(&j) {
        (i - 1) * (size.cols - 1) + (j - 1)
    } else {
        outer_node(size)
    }
}

/// Index of the outer node.
pub fn outer_node(size: GridSize) -> usize {
    (size.rows - 1) * (size.cols - 1)
}

/// Fixed-order endpoints of the arc crossing a crease.
///
/// The arc dual to `H(r,c)` runs along horizontal grid line `r+1` from
/// corner `(r+1, c)` to corner `(r+1, c+1)`; the arc dual to `V(r,c)`
/// runs along vertical grid line `c+1` from corner `(r, c+1)` to corner
/// `(r+1, c+1)`.
pub fn arc_ends(size: GridSize, id: CreaseId) -> [usize; 2] {
    match id.kind {
        CreaseKind::H => [corner(size, id.r + 1, id.c), corner(size, id.r + 1, id.c + 1)],
        CreaseKind::V => [corner(size, id.r, id.c + 1), corner(size, id.r + 1, id.c + 1)],
    }
}

/// Arc direction induced by the crease weight (the mod-3 color
/// difference along the canonical dual-edge direction): weight `+1`
/// orients the arc clockwise around the canonical tail square, `-1`
/// clockwise around the head square.
fn dir_from_weight(id: CreaseId, weight: i8) -> ArcDir {
    let mountain = weight > 0;
    match id.kind {
        // Clockwise around the cell above is right-to-left.
        CreaseKind::H => {
            if mountain {
                ArcDir::Backward
            } else {
                ArcDir::Forward
            }
        }
        // Clockwise around the cell on the left is top-to-bottom; on odd
        // rows the canonical tail is the right-hand cell.
        CreaseKind::V => {
            let fwd = mountain == (id.r % 2 == 0);
            if fwd {
                ArcDir::Forward
            } else {
                ArcDir::Backward
            }
        }
    }
}

/// Crease weight implied by an arc direction; inverse of the rule used
/// when building `H` from a coloring.
pub fn weight_from_dir(id: CreaseId, dir: ArcDir) -> i8 {
    if dir_from_weight(id, 1) == dir {
        1
    } else {
        -1
    }
}

impl AuxDigraph {
    pub fn size(&self) -> GridSize {
        self.size
    }

    pub fn arc_count(&self) -> usize {
        self.ends.len()
    }

    pub fn node_count(&self) -> usize {
        (self.size.rows - 1) * (self.size.cols - 1) + 1
    }

    pub fn outer_node(&self) -> usize {
        outer_node(self.size)
    }

    pub fn ends(&self, arc: ArcId) -> [usize; 2] {
        self.ends[arc]
    }

    pub fn direction(&self, arc: ArcId) -> Option<ArcDir> {
        self.dir[arc]
    }

    pub fn is_fully_directed(&self) -> bool {
        self.dir.iter().all(|d| d.is_some())
    }

    /// (tail, head) of a directed arc.
    pub fn directed_ends(&self, arc: ArcId) -> Option<(usize, usize)> {
        let [a, b] = self.ends[arc];
        match self.dir[arc]? {
            ArcDir::Forward => Some((a, b)),
            ArcDir::Backward => Some((b, a)),
        }
    }

    pub fn crease_of(&self, arc: ArcId) -> CreaseId {
        self.size.crease_at(arc)
    }

    /// Still-undirected arcs in index order.
    pub fn undirected_arcs(&self) -> Vec<ArcId> {
        (0..self.arc_count()).filter(|&a| self.dir[a].is_none()).collect()
    }

    pub fn set_direction(&mut self, arc: ArcId, dir: ArcDir) {
        self.dir[arc] = Some(dir);
    }

    /// Interior corner node for a pattern node id, for tests and
    /// diagnostics.
    pub fn corner_node(&self, node: NodeId) -> usize {
        corner(self.size, node.r, node.c)
    }

    /// (in-degree, out-degree) per node, counting directed arcs only.
    pub fn degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let mut ind = vec![0; self.node_count()];
        let mut outd = vec![0; self.node_count()];
        for arc in 0..self.arc_count() {
            if let Some((t, h)) = self.directed_ends(arc) {
                outd[t] += 1;
                ind[h] += 1;
            }
        }
        (ind, outd)
    }
}

/// Builds the fully directed `H` from a valid coloring: the arc between
/// squares `s_i` and `s_j` is directed clockwise around `s_i` iff
/// `K(s_j) = K(s_i) + 1 (mod 3)`.
pub fn build_aux_digraph(k: &GridColoring) -> Result<AuxDigraph, Error> {
    k.validate()?;
    let size = k.size();
    let mut h = empty_digraph(size);
    for arc in 0..h.arc_count() {
        let id = size.crease_at(arc);
        h.dir[arc] = Some(dir_from_weight(id, k.edge_weight(id)));
    }
    Ok(h)
}

/// Builds `H` with only the arcs dual to assigned creases directed.
pub fn build_partial_digraph(s: &PartialMVAssignment) -> AuxDigraph {
    let size = s.size();
    let mut h = empty_digraph(size);
    for (id, fold) in s.assigned() {
        let arc = size.crease_index(id);
        h.dir[arc] = Some(dir_from_weight(id, fold.sign()));
    }
    h
}

fn empty_digraph(size: GridSize) -> AuxDigraph {
    let ends = size.creases().map(|id| arc_ends(size, id)).collect();
    let dir = vec![None; size.crease_count()];
    AuxDigraph { size, ends, dir }
}

/// A directed cycle of `H`, as the ordered creases its arcs cross.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    pub arcs: Vec<CreaseId>,
}

/// Result of a forcing-set test.
#[derive(Clone, Debug)]
pub struct ForcingCheck {
    pub forcing: bool,
    /// A directed cycle avoiding the removed arcs, when not forcing.
    pub witness: Option<CycleWitness>,
}

/// Tests whether `F` is a forcing set for the coloring: removes the arcs
/// dual to `F` from `H` and checks the remainder for directed cycles
/// (self-loops count).
pub fn is_forcing(k: &GridColoring, f: &crate::pattern::ForcingSet) -> Result<ForcingCheck, Error> {
    let size = k.size();
    for id in f.iter() {
        if !size.contains_crease(id) {
            return Err(Error::InvalidCrease(id));
        }
    }
    let h = build_aux_digraph(k)?;
    let mut removed = vec![false; h.arc_count()];
    for id in f.iter() {
        removed[size.crease_index(id)] = true;
    }
    match find_cycle(&h, &removed) {
        None => Ok(ForcingCheck { forcing: true, witness: None }),
        Some(arcs) => Ok(ForcingCheck {
            forcing: false,
            witness: Some(CycleWitness { arcs: arcs.into_iter().map(|a| h.crease_of(a)).collect() }),
        }),
    }
}

/// True iff every interior node has in-degree = out-degree = 2.
pub fn check_eulerian(h: &AuxDigraph) -> Result<bool, Error> {
    if !h.is_fully_directed() {
        return Err(Error::UndirectedArcs);
    }
    let (ind, outd) = h.degrees();
    let outer = h.outer_node();
    Ok((0..h.node_count()).filter(|&v| v != outer).all(|v| ind[v] == 2 && outd[v] == 2))
}

/// Finds a directed cycle among arcs not marked removed, or `None` when
/// the remainder is acyclic. Iterative depth-first search; recursion
/// depth must not bound the grid size.
pub fn find_cycle(h: &AuxDigraph, removed: &[bool]) -> Option<Vec<ArcId>> {
    let n = h.node_count();
    // Self-loops are cycles on their own.
    for arc in 0..h.arc_count() {
        if removed[arc] {
            continue;
        }
        if let Some((t, hd)) = h.directed_ends(arc) {
            if t == hd {
                return Some(vec![arc]);
            }
        }
    }
    let mut out: Vec<Vec<(usize, ArcId)>> = vec![Vec::new(); n];
    for arc in 0..h.arc_count() {
        if removed[arc] {
            continue;
        }
        if let Some((t, hd)) = h.directed_ends(arc) {
            if t != hd {
                out[t].push((hd, arc));
            }
        }
    }
    // 0 = white, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    for start in 0..n {
        if state[start] != 0 {
            continue;
        }
        // stack of (node, next out-edge index); path_arcs holds the arc
        // taken into each stacked node after the first.
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        let mut path_arcs: Vec<ArcId> = Vec::new();
        state[start] = 1;
        while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
            if *idx < out[v].len() {
                let (w, arc) = out[v][*idx];
                *idx += 1;
                match state[w] {
                    0 => {
                        state[w] = 1;
                        stack.push((w, 0));
                        path_arcs.push(arc);
                    }
                    1 => {
                        // Found a cycle: arcs from w forward on the path,
                        // plus the closing arc.
                        let pos = stack.iter().position(|&(u, _)| u == w).expect("on stack");
                        let mut cycle: Vec<ArcId> = path_arcs[pos..].to_vec();
                        cycle.push(arc);
                        return Some(cycle);
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
                path_arcs.pop();
            }
        }
    }
    None
}
