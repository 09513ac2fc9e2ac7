//! Recognition of the three quiver shapes that make up the mutation class of
//! `D_n`.
//!
//! * Type 1: `star1 -> v1 -> star2`, `star1 -> v2 -> star2`, `star2 -> star1`,
//!   with a type A quiver hanging off each star.
//!   A piece may be empty, in which case its star is absent as well.
//! * Type 2: the oriented 4-cycle `star1 -> v2 -> star2 -> v1 -> star1`, with a
//!   type A quiver hanging off each star.
//! * Type 3: a chordless oriented central cycle `v_1 -> ... -> v_k -> v_1`
//!   where each arrow `v_i -> v_{i+1}` may carry a spike
//!   `v_{i+1} -> star_i -> v_i` with a type A quiver `Q_i` containing `star_i`.
//!
//! In all cases each star must be a connecting vertex of its own piece.

use serde::Serialize;

use super::class_a::{check_class_a, connecting};
use super::Quiver;
use crate::error::{arg, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DShape {
    Type1,
    Type2,
    Type3,
    NotRecognized,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Attachment {
    Empty,
    /// `subquiver` lists the vertices of `Q_i`, star included.
    Attached { star: usize, subquiver: Vec<usize> },
}

impl Attachment {
    pub fn size(&self) -> usize {
        match self {
            Attachment::Empty => 0,
            Attachment::Attached { subquiver, .. } => subquiver.len(),
        }
    }
}

/// Types 1 and 2. `q1` and `q2` are the attached type A pieces including
/// their stars; an empty piece means the star itself is absent, which is how
/// the Dynkin diagram `D_n` (two valency-one vertices at a common neighbour)
/// fits the templates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpokeData {
    pub star1: Option<usize>,
    pub q1: Vec<usize>,
    pub star2: Option<usize>,
    pub q2: Vec<usize>,
    pub v1: usize,
    pub v2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DShapeReport {
    /// Type 3 wins when several templates match.
    pub shape: DShape,
    pub matches: Vec<DShape>,
    pub overlap: bool,
    pub central_cycle: Vec<usize>,
    /// `attachments[i]` hangs off the arrow `central_cycle[i] -> central_cycle[i+1]`.
    pub attachments: Vec<Attachment>,
    pub type1: Option<SpokeData>,
    pub type2: Option<SpokeData>,
}

impl DShapeReport {
    /// Type 3 with every attachment empty or a single vertex.
    pub fn is_thin_type3(&self) -> bool {
        self.matches.contains(&DShape::Type3) && self.attachments.iter().all(|a| a.size() <= 1)
    }
}

pub fn classify_shape_d(q: &Quiver) -> Result<DShapeReport> {
    if !q.is_connected() {
        return arg("quiver is disconnected");
    }
    let mut matches = Vec::new();
    let type3 = match_type3(q);
    if type3.is_some() {
        matches.push(DShape::Type3);
    }
    let type1 = match_spokes(q, true);
    if type1.is_some() {
        matches.push(DShape::Type1);
    }
    let type2 = match_spokes(q, false);
    if type2.is_some() {
        matches.push(DShape::Type2);
    }
    let shape = matches.first().copied().unwrap_or(DShape::NotRecognized);
    let (central_cycle, attachments) = type3.unwrap_or_default();
    Ok(DShapeReport {
        shape,
        overlap: matches.len() > 1,
        matches,
        central_cycle,
        attachments,
        type1,
        type2,
    })
}

/// Checks that `piece` is a type A quiver in which `star` is connecting.
fn valid_piece(q: &Quiver, piece: &[usize], star: usize) -> bool {
    let sub = q.induced(piece);
    let local = piece.iter().position(|&v| v == star).expect("star lies in its piece");
    sub.is_connected() && check_class_a(&sub) && connecting(&sub).contains(&local)
}

fn without_arrow(q: &Quiver, s: usize, t: usize) -> Quiver {
    let arrows: Vec<(usize, usize)> =
        q.arrow_list().into_iter().filter(|&(a, b)| (a, b) != (s, t)).collect();
    Quiver::from_arrows(q.vertex_count(), &arrows).expect("subquiver of a valid quiver")
}

fn match_spokes(q: &Quiver, type1: bool) -> Option<SpokeData> {
    let n = q.vertex_count();
    if n < 4 || q.max_multiplicity() > 1 {
        return None;
    }
    both_stars(q, type1).or_else(|| one_star(q, type1))
}

/// Type 1: `star1 -> v -> star2` for both `v`, and `star2 -> star1`.
/// Type 2: `star1 -> v2 -> star2 -> v1 -> star1`, stars not adjacent.
fn both_stars(q: &Quiver, type1: bool) -> Option<SpokeData> {
    let n = q.vertex_count();
    for s1 in 0..n {
        for s2 in 0..n {
            if s1 == s2 {
                continue;
            }
            let link_ok = if type1 { q.arrows(s2, s1) == 1 } else { !q.adjacent(s1, s2) };
            if !link_ok {
                continue;
            }
            let through = |a: usize, b: usize| -> Vec<usize> {
                (0..n)
                    .filter(|&v| {
                        v != s1 && v != s2 && q.arrows(a, v) == 1 && q.arrows(v, b) == 1 && q.valency(v) == 2
                    })
                    .collect()
            };
            let firsts = through(s1, s2);
            let seconds = if type1 { firsts.clone() } else { through(s2, s1) };
            for &v2 in &firsts {
                for &v1 in &seconds {
                    if v1 == v2 || (type1 && v1 > v2) {
                        continue;
                    }
                    let base = if type1 { without_arrow(q, s2, s1) } else { q.clone() };
                    let rest: Vec<usize> = (0..n).filter(|&v| v != v1 && v != v2).collect();
                    let comps = base.components_within(&rest);
                    if comps.len() != 2 {
                        continue;
                    }
                    let (Some(c1), Some(c2)) =
                        (comps.iter().find(|c| c.contains(&s1)), comps.iter().find(|c| c.contains(&s2)))
                    else {
                        continue;
                    };
                    if c1 == c2 || !valid_piece(q, c1, s1) || !valid_piece(q, c2, s2) {
                        continue;
                    }
                    return Some(SpokeData {
                        star1: Some(s1),
                        q1: c1.clone(),
                        star2: Some(s2),
                        q2: c2.clone(),
                        v1,
                        v2,
                    });
                }
            }
        }
    }
    None
}

/// One piece empty: a vertex `s` with exactly two valency-one neighbours
/// `v1`, `v2`. Type 1 has both arrows pointing the same way (into `s` when
/// the first piece is empty, out of `s` when the second is); Type 2 has
/// `s -> v2` and `v1 -> s`.
fn one_star(q: &Quiver, type1: bool) -> Option<SpokeData> {
    let n = q.vertex_count();
    for s in 0..n {
        let leaves: Vec<usize> = q.neighbors(s).into_iter().filter(|&v| q.valency(v) == 1).collect();
        for (a, &x) in leaves.iter().enumerate() {
            for &y in &leaves[a + 1..] {
                let rest: Vec<usize> = (0..n).filter(|&v| v != x && v != y).collect();
                if !valid_piece(q, &rest, s) {
                    continue;
                }
                let (into_x, into_y) = (q.arrows(x, s) == 1, q.arrows(y, s) == 1);
                let data = |star1: Option<usize>, star2: Option<usize>, v1: usize, v2: usize| SpokeData {
                    star1,
                    q1: if star1.is_some() { rest.clone() } else { Vec::new() },
                    star2,
                    q2: if star2.is_some() { rest.clone() } else { Vec::new() },
                    v1,
                    v2,
                };
                match (type1, into_x, into_y) {
                    (true, true, true) => return Some(data(None, Some(s), x, y)),
                    (true, false, false) => return Some(data(Some(s), None, x, y)),
                    (false, true, false) => return Some(data(Some(s), None, x, y)),
                    (false, false, true) => return Some(data(Some(s), None, y, x)),
                    _ => {}
                }
            }
        }
    }
    None
}

/// Chordless oriented cycles of length >= 3, each listed from its smallest
/// vertex.
fn chordless_cycles(q: &Quiver) -> Vec<Vec<usize>> {
    fn extend(q: &Quiver, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().unwrap();
        for next in q.successors(last).collect::<Vec<_>>() {
            if q.arrows(last, next) != 1 {
                continue;
            }
            if next == start {
                if path.len() >= 3 {
                    out.push(path.clone());
                }
                continue;
            }
            if next < start || path.contains(&next) {
                continue;
            }
            // no chords from the new vertex back into the path, except to
            // the start (which only closes the cycle)
            let chord = path[..path.len() - 1]
                .iter()
                .any(|&p| q.adjacent(p, next) && !(p == start && q.arrows(next, start) == 1));
            if chord {
                continue;
            }
            path.push(next);
            extend(q, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    for s in 0..q.vertex_count() {
        extend(q, &mut vec![s], &mut out);
    }
    out.retain(|c| q.induced(c).arrow_count() == c.len());
    out
}

fn match_type3(q: &Quiver) -> Option<(Vec<usize>, Vec<Attachment>)> {
    if q.max_multiplicity() > 1 {
        return None;
    }
    let n = q.vertex_count();
    let mut found: Vec<(Vec<usize>, Vec<Attachment>)> = Vec::new();
    'cycles: for cycle in chordless_cycles(q) {
        let k = cycle.len();
        let on_cycle = |v: usize| cycle.contains(&v);
        let mut stars: Vec<Option<usize>> = vec![None; k];
        for v in (0..n).filter(|&v| !on_cycle(v)) {
            let touching: Vec<usize> = cycle.iter().copied().filter(|&c| q.adjacent(c, v)).collect();
            if touching.is_empty() {
                continue;
            }
            if touching.len() != 2 {
                continue 'cycles;
            }
            let slot = (0..k).find(|&i| {
                let (a, b) = (cycle[i], cycle[(i + 1) % k]);
                q.arrows(b, v) == 1 && q.arrows(v, a) == 1
            });
            match slot {
                Some(i) if stars[i].is_none() => stars[i] = Some(v),
                _ => continue 'cycles,
            }
        }
        let rest: Vec<usize> = (0..n).filter(|&v| !on_cycle(v)).collect();
        let comps = q.components_within(&rest);
        let mut attachments = vec![Attachment::Empty; k];
        for comp in &comps {
            let owned: Vec<usize> =
                (0..k).filter(|&i| stars[i].is_some_and(|s| comp.contains(&s))).collect();
            if owned.len() != 1 {
                continue 'cycles;
            }
            let star = stars[owned[0]].unwrap();
            if !valid_piece(q, comp, star) {
                continue 'cycles;
            }
            attachments[owned[0]] = Attachment::Attached { star, subquiver: comp.clone() };
        }
        found.push((cycle, attachments));
    }
    found.into_iter().max_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| b.0.cmp(&a.0)))
}
