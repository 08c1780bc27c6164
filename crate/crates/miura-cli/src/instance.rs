//! JSON instance format shared by all subcommands.
//!
//! Canonical field order is `rows`, `cols`, `creases`, `coloring`;
//! creases are listed in index order (all horizontal, then all
//! zig-zag). `mv` is `1`, `-1` or `null` for an unassigned crease.

use miura::coloring::mv_to_coloring;
use miura::{CreaseId, CreaseKind, Fold, ForcingSet, GridColoring, GridSize, MVAssignment, PartialMVAssignment};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDocument {
    pub rows: usize,
    pub cols: usize,
    pub creases: Vec<CreaseEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<Vec<u8>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CreaseEntry {
    pub kind: String,
    pub r: usize,
    pub c: usize,
    pub mv: Option<i8>,
}

/// A bare crease reference, used in forcing-set files and certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CreaseRef {
    pub kind: String,
    pub r: usize,
    pub c: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingSetDocument {
    pub creases: Vec<CreaseRef>,
}

pub fn crease_ref(id: CreaseId) -> CreaseRef {
    let kind = match id.kind {
        CreaseKind::H => "h",
        CreaseKind::V => "v",
    };
    CreaseRef { kind: kind.into(), r: id.r, c: id.c }
}

fn crease_id(kind: &str, r: usize, c: usize, size: GridSize, what: &str) -> Result<CreaseId, String> {
    let id = match kind {
        "h" => CreaseId::h(r, c),
        "v" => CreaseId::v(r, c),
        other => return Err(format!("{what}: kind must be \"h\" or \"v\", got {other:?}")),
    };
    if !size.contains_crease(id) {
        return Err(format!("{what}: crease {id} is out of range for a {}x{} grid", size.rows, size.cols));
    }
    Ok(id)
}

pub fn parse_instance(text: &str) -> Result<InstanceDocument, String> {
    let doc: InstanceDocument = serde_json::from_str(text).map_err(|e| format!("malformed instance JSON: {e}"))?;
    validate(&doc)?;
    Ok(doc)
}

pub fn serialize_instance(doc: &InstanceDocument) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("instance serializes");
    out.push('\n');
    out
}

fn validate(doc: &InstanceDocument) -> Result<(), String> {
    if doc.rows == 0 || doc.cols == 0 {
        return Err("rows and cols must be at least 1".into());
    }
    let size = GridSize::new(doc.rows, doc.cols);
    let mut seen = vec![false; size.crease_count()];
    for (i, e) in doc.creases.iter().enumerate() {
        let what = format!("creases[{i}]");
        let id = crease_id(&e.kind, e.r, e.c, size, &what)?;
        if !matches!(e.mv, None | Some(1) | Some(-1)) {
            return Err(format!("{what}: mv must be 1, -1 or null"));
        }
        let idx = size.crease_index(id);
        if seen[idx] {
            return Err(format!("{what}: duplicate crease {id}"));
        }
        seen[idx] = true;
    }
    if let Some(rows) = &doc.coloring {
        if rows.len() != doc.rows || rows.iter().any(|row| row.len() != doc.cols) {
            return Err("coloring: shape must be rows x cols".into());
        }
        let colors = rows.iter().flatten().copied().collect();
        let k = GridColoring::from_colors(size, colors);
        k.validate().map_err(|e| format!("coloring: {e}"))?;
        // Assigned creases must agree with the coloring's fold directions.
        for (i, e) in doc.creases.iter().enumerate() {
            if let Some(mv) = e.mv {
                let id = crease_id(&e.kind, e.r, e.c, size, "creases")?;
                if k.edge_weight(id) != mv {
                    return Err(format!("creases[{i}]: mv contradicts the coloring at {id}"));
                }
            }
        }
    }
    Ok(())
}

pub fn size_of(doc: &InstanceDocument) -> GridSize {
    GridSize::new(doc.rows, doc.cols)
}

pub fn to_partial(doc: &InstanceDocument) -> PartialMVAssignment {
    let size = size_of(doc);
    let mut s = PartialMVAssignment::empty(size);
    for e in &doc.creases {
        if let Some(mv) = e.mv {
            let id = crease_id(&e.kind, e.r, e.c, size, "creases").expect("validated");
            s.set(id, Fold::from_sign(mv).expect("validated")).expect("validated");
        }
    }
    s
}

/// The coloring an instance denotes: the explicit one when present,
/// otherwise derived from a total assignment.
pub fn coloring_of(doc: &InstanceDocument) -> Result<GridColoring, String> {
    let size = size_of(doc);
    if let Some(rows) = &doc.coloring {
        let colors = rows.iter().flatten().copied().collect();
        return Ok(GridColoring::from_colors(size, colors));
    }
    let s = to_partial(doc);
    if s.assigned_count() != size.crease_count() {
        return Err("instance has unassigned creases and no coloring; a total assignment is required".into());
    }
    let a = MVAssignment::from_fn(size, |id| s.get(id).expect("all assigned"));
    mv_to_coloring(&a).map_err(|e| e.to_string())
}

pub fn from_partial(s: &PartialMVAssignment, coloring: Option<&GridColoring>) -> InstanceDocument {
    let size = s.size();
    let creases = size
        .creases()
        .map(|id| {
            let r = crease_ref(id);
            CreaseEntry { kind: r.kind, r: id.r, c: id.c, mv: s.get(id).map(|f| f.sign()) }
        })
        .collect();
    InstanceDocument {
        rows: size.rows,
        cols: size.cols,
        creases,
        coloring: coloring.map(|k| {
            (0..size.rows).map(|r| (0..size.cols).map(|c| k.color(r, c)).collect()).collect()
        }),
    }
}

pub fn from_assignment(a: &MVAssignment, coloring: Option<&GridColoring>) -> InstanceDocument {
    from_partial(&PartialMVAssignment::from(a.clone()), coloring)
}

pub fn parse_forcing_set(text: &str, size: GridSize) -> Result<ForcingSet, String> {
    let doc: ForcingSetDocument =
        serde_json::from_str(text).map_err(|e| format!("malformed forcing-set JSON: {e}"))?;
    let mut out = Vec::with_capacity(doc.creases.len());
    for (i, e) in doc.creases.iter().enumerate() {
        out.push(crease_id(&e.kind, e.r, e.c, size, &format!("creases[{i}]"))?);
    }
    Ok(out.into_iter().collect())
}

pub fn forcing_set_json(f: &ForcingSet) -> serde_json::Value {
    serde_json::json!({
        "size": f.len(),
        "creases": f.iter().map(crease_ref).collect::<Vec<_>>(),
    })
}
