//! Cross-module properties: forcing sets versus uniform curves,
//! controlling-set extremes, and randomized round-trip laws.

use miura::coloring::{coloring_to_mv, mv_to_coloring};
use miura::complete::{complete_partial, Completion};
use miura::construct::{greedy_forcing, DominoTiling};
use miura::control::{comb_controlling, is_controlling};
use miura::digraph::is_forcing;
use miura::fas::min_forcing_set;
use miura::oracle::{brute_is_forcing, difference_graph, enumerate_colorings};
use miura::pattern::{CreaseId, Fold, ForcingSet, GridSize, PartialMVAssignment};
use miura::sample_coloring;
use proptest::prelude::*;

/// Every forcing set crosses every uniform curve of every difference
/// graph involving its pattern: exhaustive over the 2^7 subsets of 2x3.
#[test]
fn forcing_sets_cross_every_uniform_curve() {
    let size = GridSize::new(2, 3);
    let creases: Vec<CreaseId> = size.creases().collect();
    let colorings: Vec<_> = enumerate_colorings(size, false).unwrap().collect();
    for k1 in &colorings {
        let forcing_sets: Vec<ForcingSet> = (0u32..1 << 7)
            .map(|mask| {
                creases
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &id)| id)
                    .collect()
            })
            .filter(|f| brute_is_forcing(k1, f, false).unwrap())
            .collect();
        assert!(!forcing_sets.is_empty());
        for k2 in &colorings {
            if k1 == k2 {
                continue;
            }
            let d = difference_graph(k1, k2).unwrap();
            assert!(!d.curves.is_empty(), "distinct colorings must differ along some curve");
            for curve in &d.curves {
                for f in &forcing_sets {
                    assert!(
                        curve.creases.iter().any(|&id| f.contains(id)),
                        "a forcing set misses a uniform curve"
                    );
                }
            }
        }
    }
}

/// One crossing crease per uniform curve of a difference graph already
/// rules out the other coloring.
#[test]
fn one_crease_per_curve_distinguishes_the_pair() {
    let size = GridSize::new(3, 4);
    for seed in 0..30u64 {
        let k1 = sample_coloring(size, seed);
        let k2 = sample_coloring(size, seed + 500);
        if k1 == k2 {
            continue;
        }
        let d = difference_graph(&k1, &k2).unwrap();
        let picks: Vec<CreaseId> = d.curves.iter().map(|c| c.creases[0]).collect();
        assert!(!picks.is_empty(), "seed {seed}");
        assert!(
            picks.iter().any(|&id| k1.edge_weight(id) != k2.edge_weight(id)),
            "seed {seed}: picked creases do not distinguish the pair"
        );
    }
}

/// No controlling set is smaller than a spanning tree, exhaustively on
/// 2x2 and 2x3.
#[test]
fn minimum_controlling_size_is_spanning_tree_size() {
    for size in [GridSize::new(2, 2), GridSize::new(2, 3)] {
        let creases: Vec<CreaseId> = size.creases().collect();
        let tree_edges = size.cells() - 1;
        let mut minimum = usize::MAX;
        for mask in 0u32..1 << creases.len() {
            let f: ForcingSet = creases
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &id)| id)
                .collect();
            if is_controlling(size, &f).unwrap() {
                minimum = minimum.min(f.len());
            }
        }
        assert_eq!(minimum, tree_edges, "{}x{}", size.rows, size.cols);
        assert_eq!(comb_controlling(size).len(), tree_edges);
    }
}

/// Cutting off an L-shaped corner region leaves two indistinguishable
/// checkerboard completions, so such a set cannot be controlling.
#[test]
fn isolating_an_l_shape_is_not_controlling() {
    let size = GridSize::new(3, 3);
    let l_shape = [(0usize, 0usize), (1, 0), (1, 1)];
    let f: ForcingSet = size
        .creases()
        .filter(|&id| {
            let [a, b] = size.crease_cells(id);
            l_shape.contains(&a) == l_shape.contains(&b)
        })
        .collect();
    assert!(!is_controlling(size, &f).unwrap());
}

/// Rotating dominoes never breaks the standard pattern's forcing set.
#[test]
fn any_reachable_domino_tiling_forces_the_standard_pattern() {
    for &(m, n) in &[(2usize, 2usize), (4, 4), (3, 6), (6, 5)] {
        let size = GridSize::new(m, n);
        let k = mv_to_coloring(&miura::standard_assignment(size)).unwrap();
        for seed in 0..20u64 {
            let t = DominoTiling::shuffled(size, 60, seed);
            assert!(is_forcing(&k, &t.creases()).unwrap().forcing, "{m}x{n} seed {seed}");
        }
    }
}

/// Completion is deterministic: identical inputs give identical outputs.
#[test]
fn completion_is_deterministic() {
    let size = GridSize::new(4, 5);
    for seed in 0..10u64 {
        let k = sample_coloring(size, seed);
        let mut s = PartialMVAssignment::from(coloring_to_mv(&k).unwrap());
        for (i, id) in size.creases().enumerate() {
            if i % 3 != 0 {
                s.unset(id);
            }
        }
        let a = complete_partial(&s).foldable().unwrap();
        let b = complete_partial(&s).foldable().unwrap();
        assert_eq!(a, b);
    }
}

proptest! {
    /// Sampled colorings always round-trip through the fold assignment.
    #[test]
    fn prop_sampled_coloring_round_trips(m in 1usize..=6, n in 1usize..=6, seed: u64) {
        let k = sample_coloring(GridSize::new(m, n), seed);
        let a = coloring_to_mv(&k).unwrap();
        prop_assert!(a.is_locally_flat_foldable());
        prop_assert_eq!(mv_to_coloring(&a).unwrap(), k);
    }

    /// The exact minimum never exceeds the greedy construction.
    #[test]
    fn prop_minimum_at_most_greedy(m in 2usize..=4, n in 2usize..=4, seed: u64) {
        let k = sample_coloring(GridSize::new(m, n), seed);
        let min = min_forcing_set(&k).unwrap();
        let greedy = greedy_forcing(&k).unwrap();
        prop_assert!(min.len() <= greedy.len());
        prop_assert!(is_forcing(&k, &min).unwrap().forcing);
    }

    /// Hiding any subset of a foldable pattern leaves it completable,
    /// and the completion honors what remains.
    #[test]
    fn prop_masked_patterns_complete(m in 1usize..=5, n in 1usize..=5, seed: u64, mask: u64) {
        let size = GridSize::new(m, n);
        let k = sample_coloring(size, seed);
        let mut s = PartialMVAssignment::from(coloring_to_mv(&k).unwrap());
        for (i, id) in size.creases().enumerate() {
            if mask & (1 << (i % 64)) != 0 {
                s.unset(id);
            }
        }
        match complete_partial(&s) {
            Completion::Foldable(a) => {
                prop_assert!(a.is_locally_flat_foldable());
                prop_assert!(s.agrees_with(&a));
            }
            Completion::Infeasible { .. } => prop_assert!(false, "restriction must be completable"),
        }
    }

    /// A forcing set stays forcing under supersets.
    #[test]
    fn prop_forcing_is_monotone(seed: u64, extra in proptest::collection::vec(0usize..17, 0..6)) {
        let size = GridSize::new(3, 4);
        let k = sample_coloring(size, seed);
        let mut f: Vec<CreaseId> = min_forcing_set(&k).unwrap().iter().collect();
        for i in extra {
            f.push(size.crease_at(i % size.crease_count()));
        }
        let f: ForcingSet = f.into_iter().collect();
        prop_assert!(is_forcing(&k, &f).unwrap().forcing);
    }
}

/// The bird's foot rule really is the local foldability test: flipping
/// one crease of a foldable pattern always breaks some incident node.
#[test]
fn single_flips_break_foldability() {
    let size = GridSize::new(3, 4);
    for seed in 0..10u64 {
        let k = sample_coloring(size, seed);
        let a = coloring_to_mv(&k).unwrap();
        for id in size.creases() {
            let mut b = a.clone();
            b.set(id, b.get(id).flipped());
            if size.rows > 1 && size.cols > 1 {
                assert!(!b.is_locally_flat_foldable(), "seed {seed} crease {id}");
            }
        }
    }
}

/// Degenerate single-row and single-column grids: every crease is its
/// own uniform curve, so only the full crease set forces.
#[test]
fn degenerate_grids_need_every_crease() {
    for size in [GridSize::new(1, 5), GridSize::new(5, 1)] {
        let k = sample_coloring(size, 3);
        let all: ForcingSet = size.creases().collect();
        assert_eq!(min_forcing_set(&k).unwrap().len(), all.len());
        for skip in all.iter() {
            let f: ForcingSet = all.iter().filter(|&id| id != skip).collect();
            assert!(!is_forcing(&k, &f).unwrap().forcing);
        }
    }
}

/// Sampled fold assignments satisfy the bird's foot equation at every
/// interior node, checked directly against the node stars.
#[test]
fn sampled_assignments_satisfy_birds_feet() {
    let size = GridSize::new(5, 7);
    for seed in 0..20u64 {
        let a = coloring_to_mv(&sample_coloring(size, seed)).unwrap();
        for node in size.nodes() {
            let star = miura::pattern::node_star(size, node).unwrap();
            let leg = a.get(star.leg).sign() as i32;
            let toes: i32 = star.toes().iter().map(|&t| a.get(t).sign() as i32).sum();
            assert_eq!(leg, toes, "seed {seed} node ({},{})", node.r, node.c);
        }
    }
}

/// Fold counts at a node follow from the bird's foot rule: three of one
/// direction, one of the other.
#[test]
fn birds_foot_implies_three_to_one_split() {
    let size = GridSize::new(4, 6);
    let a = coloring_to_mv(&sample_coloring(size, 11)).unwrap();
    for node in size.nodes() {
        let star = miura::pattern::node_star(size, node).unwrap();
        let mountains = star
            .creases()
            .iter()
            .filter(|&&id| a.get(id) == Fold::Mountain)
            .count();
        assert!(mountains == 1 || mountains == 3, "node ({},{})", node.r, node.c);
    }
}
