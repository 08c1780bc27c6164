//! Completing a partially assigned pattern to a locally flat-foldable
//! one, or proving that no completion exists.
//!
//! Locally flat-foldable assignments correspond to the orientations of
//! the auxiliary digraph with in-degree = out-degree at every node. The
//! assigned creases fix some arcs; the rest are oriented by a unit-cap
//! max-flow that ships out-degree surplus to deficit nodes, flipping the
//! arcs along augmenting paths. Infeasible flow means no completion.

use crate::digraph::{build_partial_digraph, check_eulerian, weight_from_dir, ArcDir};
use crate::pattern::{Fold, MVAssignment, NodeId, PartialMVAssignment};

/// Outcome of a completion attempt.
#[derive(Clone, Debug)]
pub enum Completion {
    Foldable(MVAssignment),
    /// No locally flat-foldable extension exists. When a single node is
    /// already over-committed in one direction, it is named as a
    /// certificate; otherwise the obstruction is global.
    Infeasible { overloaded: Option<NodeId> },
}

impl Completion {
    pub fn foldable(self) -> Option<MVAssignment> {
        match self {
            Completion::Foldable(a) => Some(a),
            Completion::Infeasible { .. } => None,
        }
    }
}

/// Unit-capacity max flow (Edmonds-Karp), with paired reverse edges.
struct Flow {
    to: Vec<usize>,
    cap: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl Flow {
    fn new(n: usize) -> Flow {
        Flow { to: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); n] }
    }

    /// Returns the forward edge index; the paired reverse edge is `i ^ 1`.
    fn add(&mut self, u: usize, v: usize, c: i64) -> usize {
        let i = self.to.len();
        self.to.push(v);
        self.cap.push(c);
        self.adj[u].push(i);
        self.to.push(u);
        self.cap.push(0);
        self.adj[v].push(i + 1);
        i
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            let mut pred: Vec<Option<usize>> = vec![None; self.adj.len()];
            let mut queue = vec![s];
            let mut qi = 0;
            while qi < queue.len() && pred[t].is_none() {
                let u = queue[qi];
                qi += 1;
                for &e in &self.adj[u] {
                    let v = self.to[e];
                    if v != s && pred[v].is_none() && self.cap[e] > 0 {
                        pred[v] = Some(e);
                        queue.push(v);
                    }
                }
            }
            let Some(_) = pred[t] else { return total };
            let mut bottleneck = i64::MAX;
            let mut v = t;
            while v != s {
                let e = pred[v].unwrap();
                bottleneck = bottleneck.min(self.cap[e]);
                v = self.to[e ^ 1];
            }
            let mut v = t;
            while v != s {
                let e = pred[v].unwrap();
                self.cap[e] -= bottleneck;
                self.cap[e ^ 1] += bottleneck;
                v = self.to[e ^ 1];
            }
            total += bottleneck;
        }
    }
}

/// Extends `s` to a locally flat-foldable assignment when possible. The
/// returned assignment agrees with `s` on every assigned crease. The
/// choice among multiple completions is deterministic.
pub fn complete_partial(s: &PartialMVAssignment) -> Completion {
    let size = s.size();
    let mut h = build_partial_digraph(s);
    let n = h.node_count();

    // Balance targets: every node must end with out-degree = degree / 2
    // (self-loops contribute one to both sides regardless of direction).
    let mut degree = vec![0usize; n];
    let mut out_now = vec![0i64; n];
    let mut in_now = vec![0usize; n];
    let mut loose: Vec<usize> = Vec::new();
    for arc in 0..h.arc_count() {
        let [a, b] = h.ends(arc);
        degree[a] += 1;
        degree[b] += 1;
        match h.directed_ends(arc) {
            Some((t, hd)) => {
                out_now[t] += 1;
                in_now[hd] += 1;
            }
            None if a == b => {
                // An undirected self-loop is balanced either way.
                h.set_direction(arc, ArcDir::Forward);
                out_now[a] += 1;
                in_now[a] += 1;
            }
            None => {
                // Tentative reference direction: fixed endpoint order.
                out_now[a] += 1;
                loose.push(arc);
            }
        }
    }

    // Flipping a loose arc moves one unit of out-degree from its tail to
    // its head, so surpluses flow to deficits along loose arcs.
    let (source, sink) = (n, n + 1);
    let mut flow = Flow::new(n + 2);
    let mut edge_of = vec![usize::MAX; h.arc_count()];
    for &arc in &loose {
        let [a, b] = h.ends(arc);
        edge_of[arc] = flow.add(a, b, 1);
    }
    let mut need = 0;
    for v in 0..n {
        debug_assert_eq!(degree[v] % 2, 0);
        let excess = out_now[v] - (degree[v] / 2) as i64;
        if excess > 0 {
            flow.add(source, v, excess);
            need += excess;
        } else if excess < 0 {
            flow.add(v, sink, -excess);
        }
    }
    if flow.max_flow(source, sink) < need {
        // Certificate when some interior node already has three assigned
        // creases pointing the same way.
        let mut pre_in = vec![0usize; n];
        let mut pre_out = vec![0usize; n];
        for (id, fold) in s.assigned() {
            let arc = size.crease_index(id);
            let [a, b] = h.ends(arc);
            let (t, hd) = match crate::digraph::weight_from_dir(id, ArcDir::Forward) == fold.sign() {
                true => (a, b),
                false => (b, a),
            };
            pre_out[t] += 1;
            pre_in[hd] += 1;
        }
        let overloaded = (0..n)
            .filter(|&v| v != h.outer_node())
            .find(|&v| pre_in[v] > 2 || pre_out[v] > 2);
        let node = overloaded.map(|v| corner_to_node(h.size(), v));
        return Completion::Infeasible { overloaded: node };
    }
    for &arc in &loose {
        let dir = if flow.cap[edge_of[arc]] == 0 { ArcDir::Backward } else { ArcDir::Forward };
        h.set_direction(arc, dir);
    }
    debug_assert!(check_eulerian(&h).unwrap());

    let a = MVAssignment::from_fn(size, |id| {
        let dir = h.direction(size.crease_index(id)).unwrap();
        Fold::from_sign(weight_from_dir(id, dir)).unwrap()
    });
    debug_assert!(a.is_locally_flat_foldable());
    debug_assert!(s.agrees_with(&a));
    Completion::Foldable(a)
}

fn corner_to_node(size: crate::pattern::GridSize, corner: usize) -> NodeId {
    NodeId { r: corner / (size.cols - 1) + 1, c: corner % (size.cols - 1) + 1 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{standard_assignment, CreaseId, GridSize};
    use crate::sample::sample_coloring;

    #[test]
    fn empty_partial_completes() {
        for &(m, n) in &[(1, 1), (1, 4), (2, 2), (3, 5), (4, 6)] {
            let s = PartialMVAssignment::empty(GridSize::new(m, n));
            let a = complete_partial(&s).foldable().expect("empty is always completable");
            assert!(a.is_locally_flat_foldable(), "{m}x{n}");
        }
    }

    #[test]
    fn full_partial_round_trips() {
        let a = standard_assignment(GridSize::new(4, 6));
        let s = PartialMVAssignment::from(a.clone());
        assert_eq!(complete_partial(&s).foldable().unwrap(), a);
    }

    #[test]
    fn half_hidden_random_patterns_complete() {
        let size = GridSize::new(4, 6);
        for seed in 0..50u64 {
            let k = sample_coloring(size, seed);
            let a = crate::coloring::coloring_to_mv(&k).unwrap();
            let mut s = PartialMVAssignment::from(a);
            // Drop every other crease.
            for (i, id) in size.creases().enumerate() {
                if i % 2 == 0 {
                    s.unset(id);
                }
            }
            let b = complete_partial(&s).foldable().expect("restriction is completable");
            assert!(s.agrees_with(&b), "seed {seed}");
            assert!(b.is_locally_flat_foldable(), "seed {seed}");
        }
    }

    #[test]
    fn violated_node_is_infeasible() {
        // All four creases mountain at the single interior node of a 2x2
        // grid: the leg cannot equal the sum of three equal toes.
        let size = GridSize::new(2, 2);
        let mut s = PartialMVAssignment::empty(size);
        for id in size.creases() {
            s.set(id, Fold::Mountain).unwrap();
        }
        match complete_partial(&s) {
            Completion::Infeasible { .. } => {}
            Completion::Foldable(_) => panic!("expected infeasible"),
        }
    }

    #[test]
    fn matches_brute_oracle_on_small_grids() {
        let size = GridSize::new(2, 3);
        let creases: Vec<CreaseId> = size.creases().collect();
        // Seeded random partial assignments over a small grid.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for trial in 0..300 {
            let mut s = PartialMVAssignment::empty(size);
            for &id in &creases {
                match rng.gen_range(0..3) {
                    0 => s.set(id, Fold::Mountain).unwrap(),
                    1 => s.set(id, Fold::Valley).unwrap(),
                    _ => {}
                }
            }
            let brute = crate::oracle::brute_complete_partial(&s, false).unwrap();
            match complete_partial(&s) {
                Completion::Foldable(a) => {
                    assert!(brute.is_some(), "trial {trial}: flow found spurious completion");
                    assert!(a.is_locally_flat_foldable());
                    assert!(s.agrees_with(&a));
                }
                Completion::Infeasible { .. } => {
                    assert!(brute.is_none(), "trial {trial}: flow missed a completion");
                }
            }
        }
    }

    #[test]
    fn single_row_partial() {
        let size = GridSize::new(1, 5);
        let mut s = PartialMVAssignment::empty(size);
        s.set(CreaseId::v(0, 1), Fold::Valley).unwrap();
        let a = complete_partial(&s).foldable().unwrap();
        assert_eq!(a.get(CreaseId::v(0, 1)), Fold::Valley);
    }
}
