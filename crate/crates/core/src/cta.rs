//! Cluster-tilted algebras `End_C(T)^op` of finite type.
//!
//! Quiver convention: vertex `v` of `Q_T` is the `v`-th summand of `T` in id
//! order, and an arrow `i -> j` corresponds to an irreducible map `T_j -> T_i`
//! in `add T`. With this convention the seed `⊕ P_j[1]` has quiver `Q`.
//! Quivers are transported along the exchange graph by quiver mutation.

use std::collections::HashMap;

use serde::Serialize;

use crate::category::ClusterCategory;
use crate::dn::DnRowInfo;
use crate::error::{internal, Error, Result};
use crate::quiver::{classify_shape_d, Attachment, DShape, Quiver};
use crate::tilting::{complements, ExchangeGraph, TiltingObject};

/// A path as its vertex sequence; `[v]` is the trivial path at `v`.
pub type Path = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Commutativity {
    pub rho1: Path,
    pub rho2: Path,
    /// The relation is `rho1 + coefficient * rho2`.
    pub coefficient: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RelationSet {
    pub zero_relations: Vec<Path>,
    pub commutativity_relations: Vec<Commutativity>,
}

impl RelationSet {
    pub fn is_monomial_quadratic(&self) -> bool {
        self.commutativity_relations.is_empty() && self.zero_relations.iter().all(|p| p.len() == 3)
    }
}

fn relabel_after_exchange(q: &Quiver, before: &TiltingObject, v: usize, replacement: usize, after: &TiltingObject) -> Quiver {
    let perm: Vec<usize> = before
        .summands
        .iter()
        .enumerate()
        .map(|(p, &x)| after.position(if p == v { replacement } else { x }).expect("exchanged object"))
        .collect();
    q.relabel(&perm)
}

/// Quivers of every vertex of the exchange graph, in the same order, by
/// mutating along the breadth-first tree from the seed.
pub fn transport_quivers(c: &ClusterCategory, graph: &ExchangeGraph) -> Result<Vec<Quiver>> {
    let mut quivers: Vec<Option<Quiver>> = vec![None; graph.vertices.len()];
    quivers[0] = Some(c.spec().quiver());
    for t in 1..graph.vertices.len() {
        let (s, v) = graph.parent[t].ok_or_else(|| Error::Internal("exchange graph vertex without parent".into()))?;
        let qs = quivers[s].as_ref().ok_or_else(|| Error::Internal("parent discovered after child".into()))?;
        let before = &graph.vertices[s];
        let after = &graph.vertices[t];
        let replacement = *after.summands.iter().find(|x| !before.contains(**x)).expect("one new summand");
        quivers[t] = Some(relabel_after_exchange(&qs.mutate(v)?, before, v, replacement, after));
    }
    Ok(quivers.into_iter().map(|q| q.expect("all vertices reached")).collect())
}

/// Exchange-graph edges along which mutation does not reproduce the
/// transported quiver, as `(vertex, position)` pairs. Empty when the
/// transport does not depend on the chosen path.
pub fn transport_mismatches(graph: &ExchangeGraph, quivers: &[Quiver]) -> Result<Vec<(usize, usize)>> {
    let mut bad = Vec::new();
    for (t, row) in graph.edges.iter().enumerate() {
        for (v, &u) in row.iter().enumerate() {
            let before = &graph.vertices[t];
            let after = &graph.vertices[u];
            let replacement = *after.summands.iter().find(|x| !before.contains(**x)).expect("one new summand");
            if relabel_after_exchange(&quivers[t].mutate(v)?, before, v, replacement, after) != quivers[u] {
                bad.push((t, v));
            }
        }
    }
    Ok(bad)
}

/// Every tilting object reachable from the seed with its quiver, sorted by
/// tilting object. Fails if transport along two exchange-graph paths
/// disagrees.
pub fn tilting_quivers(c: &ClusterCategory) -> Result<Vec<(TiltingObject, Quiver)>> {
    let graph = crate::tilting::exchange_graph(c)?;
    let quivers = transport_quivers(c, &graph)?;
    if let Some(&(t, v)) = transport_mismatches(&graph, &quivers)?.first() {
        return internal(format!("quiver transport disagrees across exchange at position {v} of {:?}", graph.vertices[t]));
    }
    let mut out: Vec<(TiltingObject, Quiver)> = graph.vertices.into_iter().zip(quivers).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Quiver of a single tilting object.
pub fn quiver_of_tilting(c: &ClusterCategory, t: &TiltingObject) -> Result<Quiver> {
    let graph = crate::tilting::exchange_graph(c)?;
    let at = graph
        .vertices
        .iter()
        .position(|u| u == t)
        .ok_or_else(|| Error::Internal("tilting object not reached from the seed".into()))?;
    Ok(transport_quivers(c, &graph)?.swap_remove(at))
}

/// Chordless oriented cycles through the arrow `i -> j`, each returned as
/// the path `j ~> i` completing it.
fn cycles_through(q: &Quiver, i: usize, j: usize) -> Vec<Path> {
    fn walk(q: &Quiver, target: usize, path: &mut Path, out: &mut Vec<Path>) {
        let last = *path.last().unwrap();
        for w in q.successors(last).collect::<Vec<_>>() {
            if w == target {
                let mut full = path.clone();
                full.push(w);
                out.push(full);
            } else if !path.contains(&w) {
                path.push(w);
                walk(q, target, path, out);
                path.pop();
            }
        }
    }
    let mut paths = Vec::new();
    walk(q, i, &mut vec![j], &mut paths);
    paths.retain(|p| q.induced(p).arrow_count() == p.len());
    paths.sort();
    paths
}

/// The relations of a finite-type cluster-tilted algebra: for each arrow
/// `i -> j`, the shortest path `j ~> i` is a zero relation if the arrow lies
/// on exactly one chordless oriented cycle, and the two such paths give
/// `rho1 - rho2` if it lies on exactly two.
pub fn relations_of(q: &Quiver) -> Result<RelationSet> {
    if q.max_multiplicity() > 1 {
        return Err(Error::Unsupported("multiple arrows do not occur in finite type".into()));
    }
    let mut rels = RelationSet::default();
    for (i, j) in q.arrow_list() {
        let cycles = cycles_through(q, i, j);
        match cycles.len() {
            0 => {}
            1 => rels.zero_relations.push(cycles.into_iter().next().unwrap()),
            2 => {
                let mut it = cycles.into_iter();
                let (rho1, rho2) = (it.next().unwrap(), it.next().unwrap());
                rels.commutativity_relations.push(Commutativity { rho1, rho2, coefficient: -1 });
            }
            k => {
                return Err(Error::Unsupported(format!(
                    "arrow {}->{} lies on {k} chordless cycles",
                    i + 1,
                    j + 1
                )))
            }
        }
    }
    Ok(rels)
}


fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// A basis of `KQ/I` by paths, with enough data to decide whether a given
/// path is zero in the algebra.
#[derive(Debug, Clone, Serialize)]
pub struct PathBasis {
    /// One path per basis element, trivial paths included.
    pub basis: Vec<Path>,
    pub total_dim: usize,
    /// Longest nonzero path length.
    pub loewy_bound: usize,
    #[serde(skip)]
    nonzero: HashMap<Path, usize>,
}

impl PathBasis {
    /// Whether `p` is nonzero in `KQ/I`.
    pub fn is_nonzero(&self, p: &[usize]) -> bool {
        self.nonzero.contains_key(p)
    }

    /// Number of basis paths from `i` to `j`.
    pub fn dim_between(&self, i: usize, j: usize) -> usize {
        self.basis.iter().filter(|p| p[0] == i && *p.last().unwrap() == j).count()
    }
}

pub fn path_basis(q: &Quiver, rels: &RelationSet) -> Result<PathBasis> {
    path_basis_with_cap(q, rels, 2 * q.vertex_count())
}

/// Computes `KQ/(I + J^N)` for growing `N` until every path of length
/// `N - 1` vanishes, at which point `J^{N-1} ⊆ I`.
pub fn path_basis_with_cap(q: &Quiver, rels: &RelationSet, cap: usize) -> Result<PathBasis> {
    let n = q.vertex_count();
    let arrows = q.arrow_list();
    for big_n in 2..=cap + 1 {
        // zero-relation-free paths of length < big_n
        let mut paths: Vec<Path> = (0..n).map(|v| vec![v]).collect();
        let mut frontier = paths.clone();
        for _ in 1..big_n {
            let mut next = Vec::new();
            for p in &frontier {
                let last = *p.last().unwrap();
                for &(s, t) in &arrows {
                    if s != last {
                        continue;
                    }
                    let mut e = p.clone();
                    e.push(t);
                    if !rels.zero_relations.iter().any(|z| e.ends_with(z)) {
                        next.push(e);
                    }
                }
            }
            paths.extend(next.iter().cloned());
            frontier = next;
        }
        let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut parent: Vec<usize> = (0..paths.len()).collect();
        let mut zero = vec![false; paths.len()];
        for (pi, p) in paths.iter().enumerate() {
            for rel in &rels.commutativity_relations {
                for (from, to) in [(&rel.rho1, &rel.rho2), (&rel.rho2, &rel.rho1)] {
                    if from.len() > p.len() {
                        continue;
                    }
                    for s in 0..=p.len() - from.len() {
                        if p[s..s + from.len()] != from[..] {
                            continue;
                        }
                        let mut swapped = p[..s].to_vec();
                        swapped.extend_from_slice(to);
                        swapped.extend_from_slice(&p[s + from.len()..]);
                        match index.get(&swapped) {
                            Some(&qi) => {
                                let (a, b) = (find(&mut parent, pi), find(&mut parent, qi));
                                parent[a] = b;
                            }
                            None => zero[pi] = true,
                        }
                    }
                }
            }
        }
        let mut root_zero = vec![false; paths.len()];
        for i in 0..paths.len() {
            if zero[i] {
                let r = find(&mut parent, i);
                root_zero[r] = true;
            }
        }
        let top_vanishes = (0..paths.len())
            .filter(|&i| paths[i].len() == big_n)
            .all(|i| root_zero[find(&mut parent, i)]);
        if !top_vanishes {
            continue;
        }
        let mut representative: HashMap<usize, usize> = HashMap::new();
        let mut nonzero: HashMap<Path, usize> = HashMap::new();
        for i in 0..paths.len() {
            let r = find(&mut parent, i);
            if root_zero[r] {
                continue;
            }
            let next = representative.len();
            let class = *representative.entry(r).or_insert(next);
            nonzero.insert(paths[i].clone(), class);
        }
        let mut basis: Vec<Path> = vec![Vec::new(); representative.len()];
        let mut order: Vec<(&Path, &usize)> = nonzero.iter().collect();
        order.sort();
        for (p, &class) in order {
            if basis[class].is_empty() {
                basis[class] = p.clone();
            }
        }
        basis.sort();
        let loewy_bound = basis.iter().map(|p| p.len() - 1).max().unwrap_or(0);
        return Ok(PathBasis { total_dim: basis.len(), basis, loewy_bound, nonzero });
    }
    Err(Error::NonAdmissible(format!("paths of length {cap} still survive")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SbVerdict {
    pub special_biserial: bool,
    pub witness: Option<String>,
}

/// (a) at most two arrows start and at most two arrows end at each vertex;
/// (b) for each arrow `a` at most one arrow `b` with `ab` nonzero and at most
/// one arrow `c` with `ca` nonzero.
pub fn is_special_biserial(q: &Quiver, basis: &PathBasis) -> SbVerdict {
    let n = q.vertex_count();
    for v in 0..n {
        if q.out_degree(v) > 2 {
            return SbVerdict { special_biserial: false, witness: Some(format!("(a): {} arrows start at {}", q.out_degree(v), v + 1)) };
        }
        if q.in_degree(v) > 2 {
            return SbVerdict { special_biserial: false, witness: Some(format!("(a): {} arrows end at {}", q.in_degree(v), v + 1)) };
        }
    }
    for (x, y) in q.arrow_list() {
        let after: Vec<usize> = q.successors(y).filter(|&z| basis.is_nonzero(&[x, y, z])).collect();
        if after.len() > 1 {
            return SbVerdict {
                special_biserial: false,
                witness: Some(format!(
                    "(b): arrow {}->{} continues nonzero to {}",
                    x + 1,
                    y + 1,
                    after.iter().map(|z| (z + 1).to_string()).collect::<Vec<_>>().join(" and ")
                )),
            };
        }
        let before: Vec<usize> = q.predecessors(x).filter(|&w| basis.is_nonzero(&[w, x, y])).collect();
        if before.len() > 1 {
            return SbVerdict {
                special_biserial: false,
                witness: Some(format!(
                    "(b): arrow {}->{} is reached nonzero from {}",
                    x + 1,
                    y + 1,
                    before.iter().map(|w| (w + 1).to_string()).collect::<Vec<_>>().join(" and ")
                )),
            };
        }
    }
    SbVerdict { special_biserial: true, witness: None }
}

/// Special biserial, generated by zero relations of length two, and for each
/// arrow at most one continuation and at most one predecessor in the ideal.
pub fn is_gentle(q: &Quiver, rels: &RelationSet, basis: &PathBasis) -> bool {
    if !is_special_biserial(q, basis).special_biserial || !rels.is_monomial_quadratic() {
        return false;
    }
    q.arrow_list().into_iter().all(|(x, y)| {
        let after = q.successors(y).filter(|&z| !basis.is_nonzero(&[x, y, z])).count();
        let before = q.predecessors(x).filter(|&w| !basis.is_nonzero(&[w, x, y])).count();
        after <= 1 && before <= 1
    })
}

/// `(α, β)` of `mod End_C(T)^op`, read off the meshes of `C` with the
/// objects of `add τT` deleted and those of `add T` projective.
pub fn ar_statistics(c: &ClusterCategory, t: &TiltingObject) -> (usize, usize) {
    let mut deleted = vec![false; c.len()];
    let mut projective = vec![false; c.len()];
    for &x in &t.summands {
        deleted[c.tau(x)] = true;
        projective[x] = true;
    }
    let mut alpha = 0;
    let mut beta = 0;
    for z in 0..c.len() {
        if deleted[z] || projective[z] {
            continue;
        }
        let mesh = c.mesh(z);
        let a = mesh.middles.iter().filter(|&&m| !deleted[m]).count();
        let b = mesh.middles.iter().filter(|&&m| !deleted[m] && !projective[m]).count();
        alpha = alpha.max(a);
        beta = beta.max(b);
    }
    (alpha, beta)
}

/// An object `X` with `α(X) = α(τX) = 3` such that `Hom_C(T, Y) ≠ 0` for
/// `Y` in `X, τX, τ²X` and the middle terms of the triangles ending at `X`
/// and `τX`.
pub fn lemma1_witness(c: &ClusterCategory, t: &TiltingObject) -> Option<usize> {
    let reached = |y: usize| t.summands.iter().any(|&s| c.hom(s, y) > 0);
    (0..c.len()).find(|&x| {
        let tx = c.tau(x);
        if c.alpha_count(x) != 3 || c.alpha_count(tx) != 3 {
            return false;
        }
        let mut ys = vec![x, tx, c.tau(tx)];
        ys.extend(&c.mesh(x).middles);
        ys.extend(&c.mesh(tx).middles);
        ys.into_iter().all(reached)
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CtAlgebra {
    pub tilting: TiltingObject,
    pub quiver: Quiver,
    pub relations: RelationSet,
    pub path_basis: PathBasis,
    pub total_dim: usize,
    pub alpha: usize,
    pub beta: usize,
    pub sb: SbVerdict,
    pub gentle: bool,
}

pub fn analyze(c: &ClusterCategory, t: &TiltingObject, quiver: &Quiver) -> Result<CtAlgebra> {
    let relations = relations_of(quiver)?;
    let basis = path_basis(quiver, &relations)?;
    let sb = is_special_biserial(quiver, &basis);
    let gentle = is_gentle(quiver, &relations, &basis);
    let (alpha, beta) = ar_statistics(c, t);
    Ok(CtAlgebra {
        tilting: t.clone(),
        quiver: quiver.clone(),
        total_dim: basis.total_dim,
        relations,
        path_basis: basis,
        alpha,
        beta,
        sb,
        gentle,
    })
}

/// `Σ_{i,j} dim Hom_C(T_i, T_j)`.
pub fn endomorphism_dim(c: &ClusterCategory, t: &TiltingObject) -> usize {
    t.summands.iter().flat_map(|&a| t.summands.iter().map(move |&b| c.hom(a, b) as usize)).sum()
}

/// Every summand lies on an α-row or the γ-row.
pub fn sb_classification_d(info: &DnRowInfo, t: &TiltingObject) -> bool {
    t.summands.iter().all(|&x| info.is_alpha(x) || info.is_gamma(x))
}

/// Checks the object-level description of a special biserial type D
/// tilting object against its Type 3 quiver: central vertices are α-objects
/// and along a central arrow `Y -> Y'`, `Y' = τ²Y` with spike `γ(τφY)` when
/// the arrow carries a spike, and `Y' = τφY` otherwise. Returns the
/// violations found.
pub fn distribution_check_d(c: &ClusterCategory, info: &DnRowInfo, t: &TiltingObject, q: &Quiver) -> Result<Vec<String>> {
    let report = classify_shape_d(q)?;
    if !report.matches.contains(&DShape::Type3) || !report.is_thin_type3() {
        return Ok(vec![format!("quiver is not a Type 3 quiver with small attachments: {q:?}")]);
    }
    let obj = |v: usize| t.summands[v];
    let mut bad = Vec::new();
    let k = report.central_cycle.len();
    for i in 0..k {
        let y = obj(report.central_cycle[i]);
        let next = obj(report.central_cycle[(i + 1) % k]);
        let Some(py) = info.phi(y) else {
            bad.push(format!("central summand {} is not an α-object", c.name(y)));
            continue;
        };
        let tpy = c.tau(py);
        match &report.attachments[i] {
            Attachment::Empty => {
                if next != tpy {
                    bad.push(format!("after {} expected τφY = {}, found {}", c.name(y), c.name(tpy), c.name(next)));
                }
            }
            Attachment::Attached { star, .. } => {
                let t2 = c.tau(c.tau(y));
                if next != t2 {
                    bad.push(format!("after {} expected τ²Y = {}, found {}", c.name(y), c.name(t2), c.name(next)));
                }
                let g = info.gamma_of(tpy).ok_or_else(|| Error::Internal("γ undefined on an α-object".into()))?;
                if obj(*star) != g {
                    bad.push(format!(
                        "spike after {} expected γ(τφY) = {}, found {}",
                        c.name(y),
                        c.name(g),
                        c.name(obj(*star))
                    ));
                }
            }
        }
    }
    Ok(bad)
}

/// α-summands `Y` of `T` whose vertex has a single outgoing arrow, pointing
/// at the summand `τφY`; for each, whether the other complement of
/// `T \ Y` is `γ(Y)`. Returns `(Y, other complement, γ(Y))` triples.
pub fn prop1_cases(
    c: &ClusterCategory,
    info: &DnRowInfo,
    t: &TiltingObject,
    q: &Quiver,
) -> Result<Vec<(usize, usize, usize)>> {
    let mut out = Vec::new();
    for (v, &y) in t.summands.iter().enumerate() {
        let Some(py) = info.phi(y) else { continue };
        let succ: Vec<usize> = q.successors(v).collect();
        if succ.len() != 1 || q.arrows(v, succ[0]) != 1 || t.summands[succ[0]] != c.tau(py) {
            continue;
        }
        let almost: Vec<usize> = t.summands.iter().copied().filter(|&x| x != y).collect();
        let (a, b) = complements(c, &almost)?;
        let other = if a == y { b } else { a };
        let g = info.gamma_of(y).ok_or_else(|| Error::Internal("γ undefined on an α-object".into()))?;
        out.push((y, other, g));
    }
    Ok(out)
}
