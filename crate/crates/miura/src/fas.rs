//! Exact minimum feedback arc set on the auxiliary digraph, and the
//! minimum forcing set it induces.
//!
//! The solver is a lazy hitting-set scheme: repeatedly find a shortest
//! directed cycle not hit by the current candidate set, add it as a
//! constraint, and re-solve the growing minimum hitting-set instance by
//! branch and bound with lower bounds from disjoint constraints.
//! Optimality is exact, not heuristic. The branch order is fixed, so the
//! output is deterministic for identical input.

use crate::coloring::GridColoring;
use crate::digraph::{build_aux_digraph, ArcId, AuxDigraph};
use crate::error::Error;
use crate::pattern::ForcingSet;

/// A minimum-cardinality set of arcs whose removal leaves `h` acyclic.
pub fn min_feedback_arc_set(h: &AuxDigraph) -> Result<Vec<ArcId>, Error> {
    if !h.is_fully_directed() {
        return Err(Error::UndirectedArcs);
    }
    let m = h.arc_count();
    let mut constraints: Vec<Vec<ArcId>> = Vec::new();
    let mut chosen: Vec<ArcId> = Vec::new();
    loop {
        let mut removed = vec![false; m];
        for &a in &chosen {
            removed[a] = true;
        }
        let Some(cycle) = shortest_cycle(h, &removed) else {
            chosen.sort_unstable();
            return Ok(chosen);
        };
        // The previous solution plus any arc of the new cycle hits every
        // constraint, so it seeds the next search as a tight incumbent
        // (the optimum grows by at most one per added constraint).
        let mut incumbent = chosen.clone();
        incumbent.push(cycle[0]);
        incumbent.sort_unstable();
        constraints.push(cycle);
        chosen = min_hitting_set(m, &constraints, incumbent);
    }
}

/// Minimum forcing set for a coloring: the creases dual to a minimum
/// feedback arc set of its auxiliary digraph.
pub fn min_forcing_set(k: &GridColoring) -> Result<ForcingSet, Error> {
    let h = build_aux_digraph(k)?;
    let arcs = min_feedback_arc_set(&h)?;
    Ok(arcs.into_iter().map(|a| h.crease_of(a)).collect())
}

/// Shortest directed cycle avoiding removed arcs. Ties break toward the
/// cycle found first when scanning arcs in index order.
fn shortest_cycle(h: &AuxDigraph, removed: &[bool]) -> Option<Vec<ArcId>> {
    let n = h.node_count();
    // Self-loops first: they are the shortest possible cycles.
    for arc in 0..h.arc_count() {
        if !removed[arc] {
            if let Some((t, hd)) = h.directed_ends(arc) {
                if t == hd {
                    return Some(vec![arc]);
                }
            }
        }
    }
    let mut out: Vec<Vec<(usize, ArcId)>> = vec![Vec::new(); n];
    for arc in 0..h.arc_count() {
        if removed[arc] {
            continue;
        }
        if let Some((t, hd)) = h.directed_ends(arc) {
            out[t].push((hd, arc));
        }
    }
    let mut best: Option<Vec<ArcId>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut via = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for arc in 0..h.arc_count() {
        if removed[arc] {
            continue;
        }
        let Some((tail, head)) = h.directed_ends(arc) else { continue };
        let bound = best.as_ref().map_or(usize::MAX, |b| b.len());
        if bound <= 2 {
            break;
        }
        // BFS head -> tail closes the cycle through `arc`.
        dist.fill(usize::MAX);
        via.fill(usize::MAX);
        queue.clear();
        dist[head] = 0;
        queue.push(head);
        let mut qi = 0;
        'bfs: while qi < queue.len() {
            let v = queue[qi];
            qi += 1;
            if dist[v] + 1 >= bound {
                break;
            }
            for &(w, a) in &out[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    via[w] = a;
                    if w == tail {
                        break 'bfs;
                    }
                    queue.push(w);
                }
            }
        }
        if dist[tail] != usize::MAX && dist[tail] + 1 < bound {
            let mut cycle = Vec::with_capacity(dist[tail] + 1);
            let mut v = tail;
            while v != head {
                let a = via[v];
                cycle.push(a);
                let (t, _) = h.directed_ends(a).unwrap();
                v = t;
            }
            cycle.push(arc);
            cycle.reverse();
            best = Some(cycle);
        }
    }
    best
}

/// Exact minimum hitting set by branch and bound, starting from a known
/// feasible `incumbent`. Branches on the arcs of the most constrained
/// unhit cycle in ascending arc order; arcs already tried at a node are
/// banned in the sibling subtrees, so no solution is visited twice. The
/// fixed order makes the result deterministic.
fn min_hitting_set(arc_count: usize, constraints: &[Vec<ArcId>], incumbent: Vec<ArcId>) -> Vec<ArcId> {
    let mut by_arc: Vec<Vec<usize>> = vec![Vec::new(); arc_count];
    for (ci, c) in constraints.iter().enumerate() {
        for &a in c {
            by_arc[a].push(ci);
        }
    }
    let mut search = Search {
        constraints,
        by_arc,
        hits: vec![0; constraints.len()],
        banned: vec![false; arc_count],
        used: vec![0; arc_count],
        stamp: 0,
        chosen: Vec::new(),
        best: incumbent,
    };
    search.branch();
    search.best
}

struct Search<'a> {
    constraints: &'a [Vec<ArcId>],
    /// Constraint indices containing each arc.
    by_arc: Vec<Vec<usize>>,
    /// How many chosen arcs hit each constraint.
    hits: Vec<usize>,
    banned: Vec<bool>,
    /// Stamp-versioned scratch marks for the disjointness lower bound.
    used: Vec<u32>,
    stamp: u32,
    chosen: Vec<ArcId>,
    best: Vec<ArcId>,
}

impl Search<'_> {
    fn branch(&mut self) {
        // Lower bound: greedy pairwise-disjoint unhit constraints,
        // smallest available-arc count first; that pass also yields the
        // most constrained target to branch on.
        let mut unhit: Vec<(usize, usize)> = Vec::new();
        for ci in 0..self.constraints.len() {
            if self.hits[ci] > 0 {
                continue;
            }
            let avail = self.constraints[ci].iter().filter(|&&a| !self.banned[a]).count();
            if avail == 0 {
                // Every arc of this cycle was tried higher up: dead end.
                return;
            }
            unhit.push((avail, ci));
        }
        if unhit.is_empty() {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
                self.best.sort_unstable();
            }
            return;
        }
        unhit.sort_unstable();
        self.stamp += 1;
        let stamp = self.stamp;
        let mut lb = 0;
        for &(_, ci) in &unhit {
            let free = self.constraints[ci]
                .iter()
                .all(|&a| self.banned[a] || self.used[a] != stamp);
            if free {
                lb += 1;
                for &a in &self.constraints[ci] {
                    self.used[a] = stamp;
                }
            }
        }
        if self.chosen.len() + lb >= self.best.len() {
            return;
        }
        let target = unhit[0].1;
        let mut arcs: Vec<ArcId> =
            self.constraints[target].iter().copied().filter(|&a| !self.banned[a]).collect();
        arcs.sort_unstable();
        for &a in &arcs {
            self.chosen.push(a);
            for i in 0..self.by_arc[a].len() {
                let ci = self.by_arc[a][i];
                self.hits[ci] += 1;
            }
            self.branch();
            self.chosen.pop();
            for i in 0..self.by_arc[a].len() {
                let ci = self.by_arc[a][i];
                self.hits[ci] -= 1;
            }
            self.banned[a] = true;
        }
        for &a in &arcs {
            self.banned[a] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{diagonal_coloring, mv_to_coloring, GridColoring};
    use crate::digraph::is_forcing;
    use crate::pattern::{standard_assignment, GridSize};

    /// Independent acyclicity check by Kahn's algorithm, for the brute
    /// subset oracle below.
    fn kahn_acyclic(h: &AuxDigraph, removed: &[bool]) -> bool {
        let n = h.node_count();
        let mut ind = vec![0usize; n];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for arc in 0..h.arc_count() {
            if removed[arc] {
                continue;
            }
            let (t, hd) = h.directed_ends(arc).unwrap();
            if t == hd {
                return false;
            }
            out[t].push(hd);
            ind[hd] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| ind[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &w in &out[v] {
                ind[w] -= 1;
                if ind[w] == 0 {
                    queue.push(w);
                }
            }
        }
        seen == n
    }

    /// Exhaustive subset search; only usable for tiny arc counts.
    fn brute_fas_size(h: &AuxDigraph) -> usize {
        let m = h.arc_count();
        assert!(m <= 16);
        let mut best = m;
        for mask in 0u32..1 << m {
            let removed: Vec<bool> = (0..m).map(|a| mask & (1 << a) != 0).collect();
            if kahn_acyclic(h, &removed) {
                best = best.min(mask.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn empty_on_acyclic() {
        // 1x1 grid: no arcs at all.
        let k = diagonal_coloring(GridSize::new(1, 1));
        let h = build_aux_digraph(&k).unwrap();
        assert!(min_feedback_arc_set(&h).unwrap().is_empty());
    }

    #[test]
    fn self_loop_is_its_own_fas() {
        let k = GridColoring::from_rows(vec![vec![0, 1]]);
        let h = build_aux_digraph(&k).unwrap();
        assert_eq!(min_feedback_arc_set(&h).unwrap(), vec![0]);
    }

    #[test]
    fn two_by_two_fas_has_size_two() {
        for k in crate::oracle::enumerate_colorings(GridSize::new(2, 2), false).unwrap() {
            let h = build_aux_digraph(&k).unwrap();
            let fas = min_feedback_arc_set(&h).unwrap();
            assert_eq!(fas.len(), 2);
            assert_eq!(brute_fas_size(&h), 2);
        }
    }

    #[test]
    fn fas_matches_brute_on_small_grids() {
        for k in crate::oracle::enumerate_colorings(GridSize::new(2, 3), false).unwrap() {
            let h = build_aux_digraph(&k).unwrap();
            assert_eq!(min_feedback_arc_set(&h).unwrap().len(), brute_fas_size(&h));
        }
    }

    #[test]
    fn requires_fully_directed() {
        let s = crate::pattern::PartialMVAssignment::empty(GridSize::new(2, 2));
        let h = crate::digraph::build_partial_digraph(&s);
        assert!(matches!(min_feedback_arc_set(&h), Err(Error::UndirectedArcs)));
    }

    #[test]
    fn standard_4x6_minimum_is_twelve() {
        let k = mv_to_coloring(&standard_assignment(GridSize::new(4, 6))).unwrap();
        let f = min_forcing_set(&k).unwrap();
        assert_eq!(f.len(), 12);
        assert!(is_forcing(&k, &f).unwrap().forcing);
    }

    #[test]
    fn diagonal_3x4_minimum_is_five() {
        let k = diagonal_coloring(GridSize::new(3, 4));
        let f = min_forcing_set(&k).unwrap();
        assert_eq!(f.len(), 5);
        assert!(is_forcing(&k, &f).unwrap().forcing);
    }

    #[test]
    fn deterministic_output() {
        let k = diagonal_coloring(GridSize::new(4, 4));
        let a = min_forcing_set(&k).unwrap();
        let b = min_forcing_set(&k).unwrap();
        assert_eq!(a, b);
    }
}
