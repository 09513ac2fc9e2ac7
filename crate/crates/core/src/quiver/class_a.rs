use super::Quiver;
use crate::error::{arg, Result};

/// Oriented 3-cycles of `q` as sorted vertex triples.
pub(crate) fn three_cycles(q: &Quiver) -> Vec<[usize; 3]> {
    let n = q.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let fwd = q.arrows(a, b) > 0 && q.arrows(b, c) > 0 && q.arrows(c, a) > 0;
                let bwd = q.arrows(b, a) > 0 && q.arrows(c, b) > 0 && q.arrows(a, c) > 0;
                if fwd || bwd {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn triangles(q: &Quiver) -> Vec<[usize; 3]> {
    let n = q.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !q.adjacent(a, b) {
                continue;
            }
            for c in b + 1..n {
                if q.adjacent(b, c) && q.adjacent(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Decides membership in the mutation class of `A_k` (`k` = vertex count):
/// valency at most four, every cycle of the underlying graph an oriented
/// 3-cycle, and the local conditions at vertices of valency three and four.
pub fn is_in_mutation_class_a(q: &Quiver) -> Result<bool> {
    if !q.is_connected() {
        return arg("quiver is disconnected");
    }
    Ok(check_class_a(q))
}

pub(crate) fn check_class_a(q: &Quiver) -> bool {
    let n = q.vertex_count();
    if q.max_multiplicity() > 1 {
        return false;
    }
    let tris = triangles(q);
    // cycle rank equals the number of edge-disjoint triangles exactly when
    // every block is an edge or a triangle
    let edges = q.arrow_count();
    if edges + 1 != n + tris.len() {
        return false;
    }
    let mut edge_use = vec![0u8; n * n];
    for t in &tris {
        for (x, y) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
            edge_use[x * n + y] += 1;
            if edge_use[x * n + y] > 1 {
                return false;
            }
        }
    }
    let oriented = three_cycles(q);
    if oriented.len() != tris.len() {
        return false;
    }
    (0..n).all(|v| {
        let in_tris = tris.iter().filter(|t| t.contains(&v)).count();
        match q.valency(v) {
            0..=2 => true,
            3 => in_tris == 1,
            4 => in_tris == 2,
            _ => false,
        }
    })
}

/// Vertices of valency at most two that, when of valency two, lie on a
/// 3-cycle. Only meaningful for quivers in the type A mutation class.
pub fn connecting_vertices(q: &Quiver) -> Result<Vec<usize>> {
    if !q.is_connected() {
        return arg("quiver is disconnected");
    }
    Ok(connecting(q))
}

pub(crate) fn connecting(q: &Quiver) -> Vec<usize> {
    let cycles = three_cycles(q);
    (0..q.vertex_count())
        .filter(|&v| match q.valency(v) {
            0 | 1 => true,
            2 => cycles.iter().any(|c| c.contains(&v)),
            _ => false,
        })
        .collect()
}
