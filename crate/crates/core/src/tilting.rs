//! Cluster-tilting objects: enumeration as maximal cliques of the
//! compatibility graph, complements of almost complete objects, and the
//! exchange graph reached from the seed `⊕ P_j[1]`.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::Bitset;
use crate::category::ClusterCategory;
use crate::error::{arg, internal, Result};

/// Summands as sorted object ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TiltingObject {
    pub summands: Vec<usize>,
}

impl TiltingObject {
    pub fn new(mut summands: Vec<usize>) -> Self {
        summands.sort_unstable();
        TiltingObject { summands }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.summands.binary_search(&x).is_ok()
    }

    pub fn position(&self, x: usize) -> Option<usize> {
        self.summands.binary_search(&x).ok()
    }

    pub fn names(&self, c: &ClusterCategory) -> Vec<String> {
        self.summands.iter().map(|&x| c.name(x)).collect()
    }
}

/// `seed = ⊕ P_j[1]`.
pub fn seed(c: &ClusterCategory) -> TiltingObject {
    TiltingObject::new((0..c.spec().rank()).map(|j| c.shifted_projective(j)).collect())
}

/// `neighbours[x]`: objects `y ≠ x` with `Ext^1_C(x, y) = 0`.
pub fn compatibility_graph(c: &ClusterCategory) -> Vec<Bitset> {
    (0..c.len())
        .map(|x| {
            let mut b = Bitset::new(c.len());
            for y in (0..c.len()).filter(|&y| y != x && c.compatible(x, y)) {
                b.insert(y);
            }
            b
        })
        .collect()
}

fn bron_kerbosch(g: &[Bitset], r: &mut Vec<usize>, p: Bitset, mut x: Bitset, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() {
            let mut clique = r.clone();
            clique.sort_unstable();
            out.push(clique);
        }
        return;
    }
    let pivot = p.or(&x).iter().max_by_key(|&u| p.intersection_len(&g[u])).expect("nonempty");
    let mut p = p;
    for v in p.and_not(&g[pivot]).iter().collect::<Vec<_>>() {
        r.push(v);
        bron_kerbosch(g, r, p.and(&g[v]), x.and(&g[v]), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// All cluster-tilting objects, sorted. The clique search is split by the
/// smallest summand and the branches run in parallel.
pub fn enumerate_tilting(c: &ClusterCategory) -> Result<Vec<TiltingObject>> {
    let g = compatibility_graph(c);
    let count = c.len();
    let mut cliques: Vec<Vec<usize>> = (0..count)
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut later = Bitset::new(count);
            let mut earlier = Bitset::new(count);
            for u in g[v].iter() {
                if u > v {
                    later.insert(u);
                } else {
                    earlier.insert(u);
                }
            }
            // cliques whose smallest member is v
            let mut out = Vec::new();
            bron_kerbosch(&g, &mut vec![v], later, earlier, &mut out);
            out
        })
        .collect();
    cliques.sort_unstable();
    let rank = c.spec().rank();
    if let Some(bad) = cliques.iter().find(|k| k.len() != rank) {
        return internal(format!("maximal rigid set of size {} (rank {rank}): {bad:?}", bad.len()));
    }
    Ok(cliques.into_iter().map(|summands| TiltingObject { summands }).collect())
}

/// The two complements of an almost complete tilting object, in id order.
pub fn complements(c: &ClusterCategory, almost: &[usize]) -> Result<(usize, usize)> {
    let rank = c.spec().rank();
    let mut sorted = almost.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != almost.len() || almost.len() + 1 != rank {
        return arg(format!("an almost complete tilting object has {} distinct summands", rank - 1));
    }
    if sorted.iter().any(|&x| x >= c.len()) {
        return arg("object id out of range");
    }
    if !c.is_rigid(&sorted) {
        return arg("almost complete object is not rigid");
    }
    let found: Vec<usize> = (0..c.len())
        .filter(|x| sorted.binary_search(x).is_err())
        .filter(|&x| sorted.iter().all(|&y| c.compatible(x, y)))
        .collect();
    match found.as_slice() {
        [a, b] => Ok((*a, *b)),
        _ => internal(format!("almost complete object has {} complements", found.len())),
    }
}

/// Replaces summand `k` by the other complement; returns the new object and
/// the replacement.
pub fn mutate_tilting(c: &ClusterCategory, t: &TiltingObject, k: usize) -> Result<(TiltingObject, usize)> {
    let Some(pos) = t.position(k) else {
        return arg(format!("{} is not a summand", c.name(k)));
    };
    let mut almost = t.summands.clone();
    almost.remove(pos);
    let (a, b) = complements(c, &almost)?;
    let other = if a == k {
        b
    } else if b == k {
        a
    } else {
        return internal("summand is not one of its own complements");
    };
    almost.push(other);
    Ok((TiltingObject::new(almost), other))
}

#[derive(Debug, Clone)]
pub struct ExchangeGraph {
    /// In breadth-first discovery order; `vertices[0]` is the seed.
    pub vertices: Vec<TiltingObject>,
    /// `edges[t][v]`: the object reached by exchanging summand position `v`
    /// of `vertices[t]`.
    pub edges: Vec<Vec<usize>>,
    /// `parent[t] = (s, v)`: `t` was discovered by exchanging position `v` of `s`.
    pub parent: Vec<Option<(usize, usize)>>,
}

impl ExchangeGraph {
    pub fn index(&self) -> HashMap<&TiltingObject, usize> {
        self.vertices.iter().enumerate().map(|(i, t)| (t, i)).collect()
    }

    pub fn is_regular(&self, degree: usize) -> bool {
        self.edges.iter().enumerate().all(|(t, e)| {
            let mut distinct: Vec<usize> = e.clone();
            distinct.sort_unstable();
            distinct.dedup();
            e.len() == degree && distinct.len() == degree && !distinct.contains(&t)
        })
    }
}

/// Breadth-first closure of the seed under single-summand exchange.
pub fn exchange_graph(c: &ClusterCategory) -> Result<ExchangeGraph> {
    let start = seed(c);
    let mut index: HashMap<TiltingObject, usize> = HashMap::from([(start.clone(), 0)]);
    let mut vertices = vec![start];
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut parent = vec![None];
    let mut queue = VecDeque::from([0usize]);
    while let Some(t) = queue.pop_front() {
        let current = vertices[t].clone();
        let mut row = Vec::with_capacity(current.summands.len());
        for (v, &k) in current.summands.iter().enumerate() {
            let (next, _) = mutate_tilting(c, &current, k)?;
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = vertices.len();
                    index.insert(next.clone(), id);
                    vertices.push(next);
                    parent.push(Some((t, v)));
                    queue.push_back(id);
                    id
                }
            };
            row.push(id);
        }
        if edges.len() <= t {
            edges.resize(t + 1, Vec::new());
        }
        edges[t] = row;
    }
    Ok(ExchangeGraph { vertices, edges, parent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::DynkinSpec;

    fn cat(spec: DynkinSpec) -> ClusterCategory {
        ClusterCategory::build(&spec).unwrap()
    }

    #[test]
    fn a1_has_two() {
        let c = cat(DynkinSpec::a(1).unwrap());
        let all = enumerate_tilting(&c).unwrap();
        assert_eq!(all, vec![TiltingObject::new(vec![0]), TiltingObject::new(vec![1])]);
        assert_eq!(complements(&c, &[]).unwrap(), (0, 1));
    }

    #[test]
    fn a2_exchange_graph_is_a_pentagon() {
        let c = cat(DynkinSpec::a(2).unwrap());
        let g = exchange_graph(&c).unwrap();
        assert_eq!(g.vertices.len(), 5);
        assert!(g.is_regular(2));
        // a connected 2-regular graph on 5 vertices is the 5-cycle
        let mut sorted = g.vertices.clone();
        sorted.sort();
        assert_eq!(sorted, enumerate_tilting(&c).unwrap());
    }

    #[test]
    fn a2_complements_of_p1() {
        let c = cat(DynkinSpec::a(2).unwrap());
        let p1 = c.projective(0);
        let (a, b) = complements(&c, &[p1]).unwrap();
        assert!(c.ext1(a, b) >= 1);
        assert!(c.compatible(a, p1) && c.compatible(b, p1));
    }

    #[test]
    fn argument_errors() {
        let c = cat(DynkinSpec::a(3).unwrap());
        assert!(complements(&c, &[0]).is_err());
        assert!(complements(&c, &[0, 0]).is_err());
        let t = seed(&c);
        assert!(mutate_tilting(&c, &t, 0).is_err());
        let (a, b) = (0..c.len())
            .flat_map(|x| (0..c.len()).map(move |y| (x, y)))
            .find(|&(x, y)| c.ext1(x, y) > 0)
            .unwrap();
        assert!(complements(&c, &[a, b]).is_err());
    }

    #[test]
    fn mutation_of_the_seed_replaces_the_shifted_projective() {
        let c = cat(DynkinSpec::d(4).unwrap());
        let s = seed(&c);
        for j in 0..4 {
            let pj = c.shifted_projective(j);
            let (t, k) = mutate_tilting(&c, &s, pj).unwrap();
            assert!(!t.contains(pj));
            assert!(t.contains(k));
            assert_eq!(mutate_tilting(&c, &t, k).unwrap().0, s);
        }
    }
}
