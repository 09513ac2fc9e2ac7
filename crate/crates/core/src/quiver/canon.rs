//! Canonical labelling of small quivers.
//!
//! Vertices are first split by colour refinement; the search then places
//! vertices one position at a time (smallest colour class first) and keeps
//! the lexicographically largest adjacency key, pruning any branch whose key
//! prefix already loses.

use std::cmp::Ordering;

use super::Quiver;

fn refine_colours(q: &Quiver) -> Vec<usize> {
    let n = q.vertex_count();
    let mut colours: Vec<usize> = {
        let sigs: Vec<(usize, usize, usize)> =
            (0..n).map(|v| (q.in_degree(v), q.out_degree(v), q.valency(v))).collect();
        rank(&sigs)
    };
    loop {
        let sigs: Vec<(usize, Vec<(usize, u32, u32)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, u32, u32)> = q
                    .neighbors(v)
                    .into_iter()
                    .map(|u| (colours[u], q.arrows(v, u), q.arrows(u, v)))
                    .collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let next = rank(&sigs);
        let classes = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colours) {
            return next;
        }
        colours = next;
    }
}

/// Replaces each signature by its rank among the distinct sorted signatures.
fn rank<T: Ord + Clone>(sigs: &[T]) -> Vec<usize> {
    let mut distinct: Vec<T> = sigs.to_vec();
    distinct.sort();
    distinct.dedup();
    sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect()
}

struct Search<'a> {
    q: &'a Quiver,
    colours: Vec<usize>,
    /// Colour required at each position.
    slot_colour: Vec<usize>,
    best_key: Option<Vec<u32>>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn key_row(&self, order: &[usize], v: usize) -> Vec<u32> {
        let mut row = Vec::with_capacity(2 * order.len());
        for &u in order {
            row.push(self.q.arrows(v, u));
            row.push(self.q.arrows(u, v));
        }
        row
    }

    fn run(&mut self, order: &mut Vec<usize>, key: &mut Vec<u32>, used: &mut Vec<bool>) {
        let n = self.q.vertex_count();
        let p = order.len();
        if p == n {
            let better = match &self.best_key {
                None => true,
                Some(b) => key.as_slice() > b.as_slice(),
            };
            if better {
                self.best_key = Some(key.clone());
                self.best_order = order.clone();
            }
            return;
        }
        let want = self.slot_colour[p];
        for v in 0..n {
            if used[v] || self.colours[v] != want {
                continue;
            }
            let row = self.key_row(order, v);
            let before = key.len();
            key.extend_from_slice(&row);
            let prune = match &self.best_key {
                Some(b) => key.as_slice().cmp(&b[..key.len()]) == Ordering::Less,
                None => false,
            };
            if !prune {
                used[v] = true;
                order.push(v);
                self.run(order, key, used);
                order.pop();
                used[v] = false;
            }
            key.truncate(before);
        }
    }
}

/// Returns `perm` with `perm[v]` = canonical position of vertex `v`.
pub fn canonical_labeling(q: &Quiver) -> Vec<usize> {
    let n = q.vertex_count();
    let colours = refine_colours(q);
    let mut slot_colour = colours.clone();
    slot_colour.sort_unstable();
    let mut search =
        Search { q, colours, slot_colour, best_key: None, best_order: Vec::new() };
    search.run(&mut Vec::with_capacity(n), &mut Vec::new(), &mut vec![false; n]);
    let mut perm = vec![0; n];
    for (pos, &v) in search.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    perm
}

pub fn canonical_form(q: &Quiver) -> Quiver {
    q.relabel(&canonical_labeling(q))
}

pub fn is_isomorphic(a: &Quiver, b: &Quiver) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.arrow_count() == b.arrow_count()
        && canonical_form(a) == canonical_form(b)
}
