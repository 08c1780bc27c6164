//! The `m x n` Miura-ori crease pattern: crease indexing, interior nodes,
//! mountain/valley assignments and the local flat-foldability check.
//!
//! Conventions used throughout the crate:
//! * cells and creases are 0-indexed, interior nodes are 1-indexed;
//! * `H` creases are the segments of the straight horizontal crease
//!   lines; crease `H(r,c)` separates cell `(r,c)` from cell `(r+1,c)`;
//! * `V` creases are the zig-zag segments; crease `V(r,c)` separates
//!   cell `(r,c)` from cell `(r,c+1)`;
//! * the pattern is oriented so that every node on the topmost node line
//!   has its bird leg pointing west, which makes the leg side alternate
//!   with the node row because adjacent strips are mirror images.

use std::fmt;

use crate::error::Error;

/// Mountain or valley fold direction of a single crease.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[repr(i8)]
pub enum Fold {
    Mountain = 1,
    Valley = -1,
}

impl Fold {
    pub fn sign(self) -> i8 {
        self as i8
    }

    pub fn from_sign(s: i8) -> Option<Fold> {
        match s {
            1 => Some(Fold::Mountain),
            -1 => Some(Fold::Valley),
            _ => None,
        }
    }

    pub fn flipped(self) -> Fold {
        match self {
            Fold::Mountain => Fold::Valley,
            Fold::Valley => Fold::Mountain,
        }
    }
}

/// Size of a crease pattern in cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GridSize {
    pub rows: usize,
    pub cols: usize,
}

impl GridSize {
    /// Both dimensions must be at least 1.
    pub fn new(rows: usize, cols: usize) -> GridSize {
        assert!(rows >= 1 && cols >= 1, "grid dimensions must be positive");
        GridSize { rows, cols }
    }

    pub fn cells(&self) -> usize {
        self.rows * self.cols
    }

    pub fn cell_index(&self, r: usize, c: usize) -> usize {
        debug_assert!(r < self.rows && c < self.cols);
        r * self.cols + c
    }

    fn h_count(&self) -> usize {
        (self.rows - 1) * self.cols
    }

    fn v_count(&self) -> usize {
        self.rows * (self.cols - 1)
    }

    /// Total crease count `m(n-1) + (m-1)n`.
    pub fn crease_count(&self) -> usize {
        self.h_count() + self.v_count()
    }

    pub fn contains_crease(&self, id: CreaseId) -> bool {
        match id.kind {
            CreaseKind::H => self.rows >= 2 && id.r <= self.rows - 2 && id.c <= self.cols - 1,
            CreaseKind::V => self.cols >= 2 && id.r <= self.rows - 1 && id.c <= self.cols - 2,
        }
    }

    /// Dense index of a crease; `H` creases come first, each block in
    /// row-major order, so index order is the lexicographic `(kind, r, c)`
    /// order with `H < V`.
    pub fn crease_index(&self, id: CreaseId) -> usize {
        debug_assert!(self.contains_crease(id));
        match id.kind {
            CreaseKind::H => id.r * self.cols + id.c,
            CreaseKind::V => self.h_count() + id.r * (self.cols - 1) + id.c,
        }
    }

    pub fn crease_at(&self, index: usize) -> CreaseId {
        debug_assert!(index < self.crease_count());
        if index < self.h_count() {
            CreaseId::h(index / self.cols, index % self.cols)
        } else {
            let i = index - self.h_count();
            CreaseId::v(i / (self.cols - 1), i % (self.cols - 1))
        }
    }

    /// All creases in `(kind, r, c)` order.
    pub fn creases(&self) -> impl Iterator<Item = CreaseId> + '_ {
        (0..self.crease_count()).map(move |i| self.crease_at(i))
    }

    pub fn contains_node(&self, node: NodeId) -> bool {
        node.r >= 1 && node.r <= self.rows.saturating_sub(1) && node.c >= 1 && node.c <= self.cols.saturating_sub(1)
    }

    /// The `(m-1)(n-1)` interior nodes, row-major.
    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        let (m, n) = (self.rows, self.cols);
        (1..m).flat_map(move |r| (1..n).map(move |c| NodeId { r, c }))
    }

    /// The two cells separated by a crease.
    pub fn crease_cells(&self, id: CreaseId) -> [(usize, usize); 2] {
        match id.kind {
            CreaseKind::H => [(id.r, id.c), (id.r + 1, id.c)],
            CreaseKind::V => [(id.r, id.c), (id.r, id.c + 1)],
        }
    }
}

/// Whether a crease is a horizontal-line segment or a zig-zag segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CreaseKind {
    H,
    V,
}

/// Identifier of a single crease segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CreaseId {
    pub kind: CreaseKind,
    pub r: usize,
    pub c: usize,
}

impl CreaseId {
    pub fn h(r: usize, c: usize) -> CreaseId {
        CreaseId { kind: CreaseKind::H, r, c }
    }

    pub fn v(r: usize, c: usize) -> CreaseId {
        CreaseId { kind: CreaseKind::V, r, c }
    }
}

impl fmt::Display for CreaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            CreaseKind::H => 'H',
            CreaseKind::V => 'V',
        };
        write!(f, "{k}({},{})", self.r, self.c)
    }
}

/// Interior node of the crease pattern, at the crossing of horizontal
/// crease line `r` (1..=m-1) and zig-zag line `c` (1..=n-1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId {
    pub r: usize,
    pub c: usize,
}

/// The four creases of a bird's foot: the leg is the horizontal crease
/// flanked by obtuse angles, the middle toe is the collinear horizontal
/// crease on the other side, and the two lateral toes are the zig-zag
/// segments above and below the node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NodeStar {
    pub leg: CreaseId,
    pub middle_toe: CreaseId,
    pub upper_toe: CreaseId,
    pub lower_toe: CreaseId,
}

impl NodeStar {
    pub fn toes(&self) -> [CreaseId; 3] {
        [self.upper_toe, self.middle_toe, self.lower_toe]
    }

    pub fn creases(&self) -> [CreaseId; 4] {
        [self.leg, self.upper_toe, self.middle_toe, self.lower_toe]
    }
}

/// The four creases incident to an interior node, with the leg identified.
///
/// The leg points west exactly when the node row is odd; every node on
/// the topmost node line (r = 1) therefore has its leg pointing west.
pub fn node_star(size: GridSize, node: NodeId) -> Result<NodeStar, Error> {
    if !size.contains_node(node) {
        return Err(Error::InvalidNode(node));
    }
    let west = CreaseId::h(node.r - 1, node.c - 1);
    let east = CreaseId::h(node.r - 1, node.c);
    let (leg, middle_toe) = if node.r % 2 == 1 { (west, east) } else { (east, west) };
    Ok(NodeStar {
        leg,
        middle_toe,
        upper_toe: CreaseId::v(node.r - 1, node.c - 1),
        lower_toe: CreaseId::v(node.r, node.c - 1),
    })
}

/// Total mountain/valley assignment on every crease of a pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MVAssignment {
    size: GridSize,
    values: Vec<Fold>,
}

impl MVAssignment {
    pub fn from_fn(size: GridSize, mut f: impl FnMut(CreaseId) -> Fold) -> MVAssignment {
        let values = size.creases().map(&mut f).collect();
        MVAssignment { size, values }
    }

    pub fn size(&self) -> GridSize {
        self.size
    }

    pub fn get(&self, id: CreaseId) -> Fold {
        self.values[self.size.crease_index(id)]
    }

    pub fn set(&mut self, id: CreaseId, fold: Fold) {
        let i = self.size.crease_index(id);
        self.values[i] = fold;
    }

    /// True iff the bird's foot condition `mu(e1) = mu(e2)+mu(e3)+mu(e4)`
    /// holds at the node. This implies Maekawa's `|sum| = 2` there.
    pub fn check_birds_foot(&self, node: NodeId) -> Result<bool, Error> {
        let star = node_star(self.size, node)?;
        let toes: i8 = star.toes().iter().map(|&t| self.get(t).sign()).sum();
        Ok(self.get(star.leg).sign() == toes)
    }

    /// Interior nodes violating the bird's foot condition, in row-major order.
    pub fn violating_nodes(&self) -> Vec<NodeId> {
        self.size
            .nodes()
            .filter(|&n| !self.check_birds_foot(n).expect("node in range"))
            .collect()
    }

    pub fn is_locally_flat_foldable(&self) -> bool {
        self.size.nodes().all(|n| self.check_birds_foot(n).expect("node in range"))
    }
}

/// Partial mountain/valley assignment; the domain may be empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialMVAssignment {
    size: GridSize,
    values: Vec<Option<Fold>>,
}

impl PartialMVAssignment {
    pub fn empty(size: GridSize) -> PartialMVAssignment {
        PartialMVAssignment { size, values: vec![None; size.crease_count()] }
    }

    pub fn size(&self) -> GridSize {
        self.size
    }

    pub fn get(&self, id: CreaseId) -> Option<Fold> {
        self.values[self.size.crease_index(id)]
    }

    pub fn set(&mut self, id: CreaseId, fold: Fold) -> Result<(), Error> {
        if !self.size.contains_crease(id) {
            return Err(Error::InvalidCrease(id));
        }
        let i = self.size.crease_index(id);
        self.values[i] = Some(fold);
        Ok(())
    }

    pub fn unset(&mut self, id: CreaseId) {
        let i = self.size.crease_index(id);
        self.values[i] = None;
    }

    /// Creases with an assigned direction, in `(kind, r, c)` order.
    pub fn assigned(&self) -> impl Iterator<Item = (CreaseId, Fold)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter_map(move |(i, v)| v.map(|f| (self.size.crease_at(i), f)))
    }

    pub fn assigned_count(&self) -> usize {
        self.values.iter().filter(|v| v.is_some()).count()
    }

    /// True iff `a` extends this partial assignment.
    pub fn agrees_with(&self, a: &MVAssignment) -> bool {
        self.size == a.size() && self.assigned().all(|(id, f)| a.get(id) == f)
    }
}

impl From<MVAssignment> for PartialMVAssignment {
    fn from(a: MVAssignment) -> PartialMVAssignment {
        PartialMVAssignment { size: a.size, values: a.values.into_iter().map(Some).collect() }
    }
}

/// A subset of creases, kept sorted in `(kind, r, c)` order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ForcingSet {
    creases: Vec<CreaseId>,
}

impl ForcingSet {
    pub fn new(mut creases: Vec<CreaseId>) -> ForcingSet {
        creases.sort();
        creases.dedup();
        ForcingSet { creases }
    }

    pub fn len(&self) -> usize {
        self.creases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.creases.is_empty()
    }

    pub fn contains(&self, id: CreaseId) -> bool {
        self.creases.binary_search(&id).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = CreaseId> + '_ {
        self.creases.iter().copied()
    }

    pub fn as_slice(&self) -> &[CreaseId] {
        &self.creases
    }
}

impl FromIterator<CreaseId> for ForcingSet {
    fn from_iter<T: IntoIterator<Item = CreaseId>>(iter: T) -> ForcingSet {
        ForcingSet::new(iter.into_iter().collect())
    }
}

/// The standard Miura-ori assignment: every zig-zag line monochrome with
/// the leftmost one mountain, adjacent zig-zag lines opposite, and each
/// horizontal line alternating mountain/valley.
///
/// The horizontal-line phases are not hard-coded; each line's phase is
/// derived from the bird's foot condition at its leftmost node, so the
/// result is locally flat-foldable by construction.
pub fn standard_assignment(size: GridSize) -> MVAssignment {
    let zig = |c: usize| if c % 2 == 0 { Fold::Mountain } else { Fold::Valley };
    // Phase of horizontal line hr (the sign of crease H(hr, 0)).
    let phase = |hr: usize| -> Fold {
        if size.cols >= 2 {
            // Solve the bird's foot at node (hr+1, 1): both lateral toes lie
            // on zig-zag line 1, so leg = z and middle toe = -z where z is
            // that line's sign. The leg is the west crease H(hr, 0) on odd
            // node rows and the east crease H(hr, 1) otherwise.
            let z = zig(0);
            let node_row = hr + 1;
            if node_row % 2 == 1 {
                z
            } else {
                // west crease is the middle toe
                z.flipped()
            }
        } else {
            // No interior nodes in a single-column pattern; keep the phase
            // the wider patterns would induce (strips are mirror images).
            if hr % 2 == 0 {
                Fold::Mountain
            } else {
                Fold::Valley
            }
        }
    };
    MVAssignment::from_fn(size, |id| {
        let base = match id.kind {
            CreaseKind::V => zig(id.c),
            CreaseKind::H => phase(id.r),
        };
        if id.kind == CreaseKind::H && id.c % 2 == 1 {
            base.flipped()
        } else {
            base
        }
    })
}
