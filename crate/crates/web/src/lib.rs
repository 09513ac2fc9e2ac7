//! WebAssembly bindings for the demo page in `www/`. Every exported
//! function takes and returns JSON strings; the `*_json` functions hold the
//! logic and are usable natively.

use clustertilt::category::ObjectKind;
use clustertilt::cta;
use clustertilt::{ClusterCategory, DynkinSpec, Quiver};
use serde::Serialize;
use wasm_bindgen::prelude::*;

type Res = Result<String, String>;

fn category(kind: &str, rank: usize) -> Result<ClusterCategory, String> {
    let spec = DynkinSpec::from_type(kind, Some(rank)).map_err(|e| e.to_string())?;
    if spec.rank() > 8 {
        return Err("rank is limited to 8".into());
    }
    ClusterCategory::build(&spec).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Cell {
    name: String,
    column: i64,
    row: usize,
    /// Horizontal offset in `[0, 1)` within the column, so that every arrow
    /// points right.
    offset: f64,
    shifted: bool,
}

/// Longest path from each vertex to a sink.
fn depth_to_sink(q: &Quiver) -> Vec<usize> {
    fn go(q: &Quiver, v: usize, memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(d) = memo[v] {
            return d;
        }
        let d = q.successors(v).collect::<Vec<_>>().into_iter().map(|w| go(q, w, memo) + 1).max().unwrap_or(0);
        memo[v] = Some(d);
        d
    }
    let mut memo = vec![None; q.vertex_count()];
    (0..q.vertex_count()).map(|v| go(q, v, &mut memo)).collect()
}

#[derive(Serialize)]
struct Grid {
    label: String,
    rank: usize,
    columns: i64,
    objects: Vec<Cell>,
    arrows: Vec<(usize, usize)>,
}

/// Objects of the cluster category at their AR-quiver positions.
pub fn category_grid_json(kind: &str, rank: usize) -> Res {
    let c = category(kind, rank)?;
    let depth = depth_to_sink(&c.spec().quiver());
    let spread = *depth.iter().max().unwrap_or(&0) as f64 + 1.0;
    let objects: Vec<Cell> = (0..c.len())
        .map(|x| {
            let (column, row) = c.coordinate(x);
            Cell {
                name: c.name(x),
                column,
                row,
                offset: depth[row] as f64 / spread,
                shifted: matches!(c.kind(x), ObjectKind::ShiftedProjective(_)),
            }
        })
        .collect();
    let columns = objects.iter().map(|o| o.column).max().unwrap_or(0) + 1;
    let grid = Grid { label: c.spec().label(), rank: c.spec().rank(), columns, objects, arrows: c.ar_quiver().arrows.clone() };
    Ok(serde_json::to_string(&grid).expect("grid serializes"))
}

#[derive(Serialize)]
struct Support {
    object: usize,
    compatible: Vec<usize>,
    ext: Vec<(usize, u32)>,
}

/// Ext-support of object `index`: compatible objects and the nonzero
/// `Ext^1` dimensions, by object index.
pub fn ext_support_json(kind: &str, rank: usize, index: usize) -> Res {
    let c = category(kind, rank)?;
    if index >= c.len() {
        return Err(format!("object index {index} out of range"));
    }
    let compatible = c.ext_support(index);
    let ext = (0..c.len()).filter(|&x| c.ext1(x, index) > 0).map(|x| (x, c.ext1(x, index))).collect();
    Ok(serde_json::to_string(&Support { object: index, compatible, ext }).expect("support serializes"))
}

/// Mutation of a quiver document at a 1-based vertex.
pub fn mutate_quiver_json(quiver: &str, vertex: usize) -> Res {
    let q = Quiver::from_json(quiver).map_err(|e| e.to_string())?;
    if vertex == 0 || vertex > q.vertex_count() {
        return Err(format!("vertex {vertex} out of range"));
    }
    Ok(q.mutate(vertex - 1).map_err(|e| e.to_string())?.to_json())
}

#[derive(Serialize)]
struct AlgebraView {
    index: usize,
    count: usize,
    summands: Vec<String>,
    summand_ids: Vec<usize>,
    quiver: clustertilt::quiver::QuiverDoc,
    relations: cta::RelationSet,
    total_dim: usize,
    special_biserial: bool,
    witness: Option<String>,
    gentle: bool,
    beta: usize,
}

/// The cluster-tilted algebra of the `index`-th tilting object, wrapping
/// around the census.
pub fn tilting_algebra_json(kind: &str, rank: usize, index: usize) -> Res {
    let c = category(kind, rank)?;
    if c.spec().rank() > 6 {
        return Err("tilting objects are listed up to rank 6 here".into());
    }
    let all = cta::tilting_quivers(&c).map_err(|e| e.to_string())?;
    let i = index % all.len();
    let (t, q) = &all[i];
    let a = cta::analyze(&c, t, q).map_err(|e| e.to_string())?;
    let view = AlgebraView {
        index: i,
        count: all.len(),
        summands: t.names(&c),
        summand_ids: t.summands.clone(),
        quiver: q.to_doc(),
        relations: a.relations,
        total_dim: a.total_dim,
        special_biserial: a.sb.special_biserial,
        witness: a.sb.witness,
        gentle: a.gentle,
        beta: a.beta,
    };
    Ok(serde_json::to_string(&view).expect("view serializes"))
}

fn js(r: Res) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn category_grid(kind: &str, rank: usize) -> Result<String, JsValue> {
    js(category_grid_json(kind, rank))
}

#[wasm_bindgen]
pub fn ext_support(kind: &str, rank: usize, index: usize) -> Result<String, JsValue> {
    js(ext_support_json(kind, rank, index))
}

#[wasm_bindgen]
pub fn mutate_quiver(quiver: &str, vertex: usize) -> Result<String, JsValue> {
    js(mutate_quiver_json(quiver, vertex))
}

#[wasm_bindgen]
pub fn tilting_algebra(kind: &str, rank: usize, index: usize) -> Result<String, JsValue> {
    js(tilting_algebra_json(kind, rank, index))
}
