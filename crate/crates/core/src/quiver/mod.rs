//! Finite quivers without loops or 2-cycles, Fomin–Zelevinsky mutation,
//! isomorphism, and recognizers for the mutation classes of types A and D.

mod canon;
mod class_a;
mod shape_d;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{arg, Error, Result};

pub use canon::{canonical_form, canonical_labeling, is_isomorphic};
pub use class_a::{connecting_vertices, is_in_mutation_class_a};
pub use shape_d::{classify_shape_d, Attachment, DShape, DShapeReport, SpokeData};

/// A quiver stored as a dense multiplicity matrix. Vertices are `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quiver {
    n: usize,
    mult: Vec<u32>,
}

impl Quiver {
    /// The quiver with `n` vertices and no arrows.
    pub fn empty(n: usize) -> Self {
        Quiver { n, mult: vec![0; n * n] }
    }

    /// Builds a quiver from 0-based `(source, target)` pairs; repeated pairs
    /// add multiplicity.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut q = Quiver::empty(n);
        for &(s, t) in arrows {
            if s >= n || t >= n {
                return arg(format!("arrow ({s}, {t}) out of range for {n} vertices"));
            }
            if s == t {
                return arg(format!("loop at vertex {s}"));
            }
            q.mult[s * n + t] += 1;
        }
        for i in 0..n {
            for j in 0..n {
                if q.arrows(i, j) > 0 && q.arrows(j, i) > 0 {
                    return arg(format!("2-cycle between vertices {i} and {j}"));
                }
            }
        }
        Ok(q)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of arrows `i -> j`.
    #[inline]
    pub fn arrows(&self, i: usize, j: usize) -> u32 {
        self.mult[i * self.n + j]
    }

    /// Signed exchange-matrix entry `b_ij = #(i -> j) - #(j -> i)`.
    #[inline]
    pub fn exchange(&self, i: usize, j: usize) -> i64 {
        self.arrows(i, j) as i64 - self.arrows(j, i) as i64
    }

    /// All arrows as `(source, target)` pairs, repeated by multiplicity, in
    /// lexicographic order.
    pub fn arrow_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                for _ in 0..self.arrows(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn arrow_count(&self) -> usize {
        self.mult.iter().map(|&m| m as usize).sum()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.mult.iter().copied().max().unwrap_or(0)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        (0..self.n).map(|j| self.arrows(v, j) as usize).sum()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).map(|j| self.arrows(j, v) as usize).sum()
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.arrows(v, j) > 0)
    }

    pub fn predecessors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.arrows(j, v) > 0)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.arrows(i, j) > 0 || self.arrows(j, i) > 0
    }

    /// Neighbours in the underlying graph, in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.adjacent(v, j)).collect()
    }

    /// Number of distinct neighbours.
    pub fn valency(&self, v: usize) -> usize {
        (0..self.n).filter(|&j| self.adjacent(v, j)).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.components_within(&(0..self.n).collect::<Vec<_>>()).len() == 1
    }

    /// Connected components of the full subquiver on `vertices`, each sorted.
    pub fn components_within(&self, vertices: &[usize]) -> Vec<Vec<usize>> {
        let allowed: HashSet<usize> = vertices.iter().copied().collect();
        let mut seen = HashSet::new();
        let mut comps = Vec::new();
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        for &start in &sorted {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if allowed.contains(&u) && seen.insert(u) {
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Full subquiver on `vertices`; vertex `k` of the result is `vertices[k]`.
    pub fn induced(&self, vertices: &[usize]) -> Quiver {
        let m = vertices.len();
        let mut q = Quiver::empty(m);
        for (a, &i) in vertices.iter().enumerate() {
            for (b, &j) in vertices.iter().enumerate() {
                q.mult[a * m + b] = self.arrows(i, j);
            }
        }
        q
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Quiver {
        let n = self.n;
        let mut q = Quiver::empty(n);
        for i in 0..n {
            for j in 0..n {
                q.mult[perm[i] * n + perm[j]] = self.arrows(i, j);
            }
        }
        q
    }

    pub fn opposite(&self) -> Quiver {
        let n = self.n;
        let mut q = Quiver::empty(n);
        for i in 0..n {
            for j in 0..n {
                q.mult[j * n + i] = self.arrows(i, j);
            }
        }
        q
    }

    /// Fomin–Zelevinsky mutation at `v`: reverse the arrows at `v`, add
    /// `r*s` arrows `j -> k` for every `r` arrows `j -> v` and `s` arrows
    /// `v -> k`, then cancel 2-cycles maximally.
    pub fn mutate(&self, v: usize) -> Result<Quiver> {
        let n = self.n;
        if v >= n {
            return arg(format!("vertex {v} out of range for {n} vertices"));
        }
        let mut q = Quiver::empty(n);
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let b = if i == v || j == v {
                    -self.exchange(i, j)
                } else {
                    let bik = self.exchange(i, v);
                    let bkj = self.exchange(v, j);
                    self.exchange(i, j) + (bik.abs() * bkj + bik * bkj.abs()) / 2
                };
                q.mult[i * n + j] = b.max(0) as u32;
            }
        }
        Ok(q)
    }

    pub fn to_doc(&self) -> QuiverDoc {
        QuiverDoc {
            vertices: self.n,
            arrows: self.arrow_list().into_iter().map(|(s, t)| [s + 1, t + 1]).collect(),
        }
    }

    pub fn from_doc(doc: &QuiverDoc) -> Result<Self> {
        let mut arrows = Vec::with_capacity(doc.arrows.len());
        for &[s, t] in &doc.arrows {
            if s == 0 || t == 0 {
                return arg("quiver vertices are 1-based");
            }
            arrows.push((s - 1, t - 1));
        }
        Quiver::from_arrows(doc.vertices, &arrows)
    }

    /// Serializes to the quiver text format
    /// `{"vertices": n, "arrows": [[s, t], ...]}` (1-based).
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("quiver document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: QuiverDoc =
            serde_json::from_str(text).map_err(|e| Error::Argument(format!("quiver document: {e}")))?;
        Quiver::from_doc(&doc)
    }

    /// Graph-description (DOT) export, optionally with vertex labels.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let mut out = String::from("digraph Q {\n");
        for v in 0..self.n {
            let label = labels.and_then(|l| l.get(v)).cloned().unwrap_or_else(|| (v + 1).to_string());
            out.push_str(&format!("  v{} [label=\"{}\"];\n", v + 1, label));
        }
        for (s, t) in self.arrow_list() {
            out.push_str(&format!("  v{} -> v{};\n", s + 1, t + 1));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quiver({}; ", self.n)?;
        let arrows: Vec<String> =
            self.arrow_list().iter().map(|(s, t)| format!("{}->{}", s + 1, t + 1)).collect();
        write!(f, "{})", arrows.join(" "))
    }
}

impl Serialize for Quiver {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_doc().serialize(s)
    }
}

/// Serialized quiver: vertex count and 1-based arrow pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDoc {
    pub vertices: usize,
    pub arrows: Vec<[usize; 2]>,
}

/// Breadth-first closure of `q` under mutation, deduplicated up to
/// isomorphism. Returns canonical representatives in discovery order.
pub fn mutation_class(q: &Quiver, cap: usize) -> Result<Vec<Quiver>> {
    let first = canonical_form(q);
    let mut seen: HashSet<Quiver> = HashSet::from([first.clone()]);
    let mut order = vec![first.clone()];
    let mut queue = VecDeque::from([first]);
    while let Some(cur) = queue.pop_front() {
        for v in 0..cur.vertex_count() {
            let next = canonical_form(&cur.mutate(v)?);
            if seen.insert(next.clone()) {
                if order.len() == cap {
                    return Err(Error::ClassOverflow { cap, partial: order });
                }
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(order)
}
