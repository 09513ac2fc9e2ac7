//! The module category of a Dynkin path algebra, built by knitting.
//!
//! Modules are addressed by knitting coordinates `(column, vertex)` meaning
//! `τ^{-column} P_vertex`, and by ids assigned in knitting order (columns left
//! to right, sinks first within a column). Every mesh ending at a module only
//! involves modules with smaller ids, which is what the hammock recursion
//! needs.

use std::collections::HashMap;

use serde::Serialize;

use crate::dynkin::DynkinSpec;
use crate::error::{arg, internal, Result};
use crate::quiver::Quiver;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Module {
    pub column: usize,
    pub vertex: usize,
    pub dimv: Vec<u32>,
}

/// `start = τ(end)`, with arrows `start -> m -> end` for every `m` in `middles`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mesh {
    pub start: usize,
    pub middles: Vec<usize>,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranslationQuiver {
    pub vertex_count: usize,
    pub arrows: Vec<(usize, usize)>,
    pub tau: Vec<Option<usize>>,
    pub meshes: Vec<Mesh>,
}

impl TranslationQuiver {
    pub fn mesh_ending_at(&self, z: usize) -> Option<&Mesh> {
        self.meshes.iter().find(|m| m.end == z)
    }

    /// For every `Z` with `τZ` defined, the arrows into `Z` and out of `τZ`
    /// have the same other endpoints with the same multiplicities, and the
    /// mesh records exactly those endpoints.
    pub fn check_mesh_symmetry(&self) -> bool {
        let mut into: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        let mut out_of: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        for &(s, t) in &self.arrows {
            out_of[s].push(t);
            into[t].push(s);
        }
        for v in into.iter_mut().chain(out_of.iter_mut()) {
            v.sort_unstable();
        }
        let meshes_ok = self.meshes.iter().all(|m| {
            let mut mid = m.middles.clone();
            mid.sort_unstable();
            self.tau[m.end] == Some(m.start) && mid == into[m.end] && mid == out_of[m.start]
        });
        let all_meshed = (0..self.vertex_count)
            .filter(|&z| self.tau[z].is_some())
            .all(|z| self.meshes.iter().filter(|m| m.end == z).count() == 1);
        meshes_ok && all_meshed
    }
}

#[derive(Debug, Clone)]
pub struct ModuleCategory {
    spec: DynkinSpec,
    quiver: Quiver,
    modules: Vec<Module>,
    index: HashMap<(usize, usize), usize>,
    ar: TranslationQuiver,
    tau_inv: Vec<Option<usize>>,
    /// `end_column[j]`: last column of the `τ`-orbit of `P_j`.
    end_column: Vec<usize>,
    /// `injective_at_end[j] = k` when `τ^{-end_column[j]} P_j = I_k`.
    injective_at_end: Vec<usize>,
    /// Inverse of `injective_at_end`.
    orbit_of_injective: Vec<usize>,
    hom: Vec<u32>,
    ext: Vec<u32>,
}

/// Vertices ordered so that for every arrow `j -> i`, `i` comes before `j`.
pub(crate) fn sinks_first(q: &Quiver) -> Vec<usize> {
    let n = q.vertex_count();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .find(|&v| !placed[v] && q.successors(v).all(|s| placed[s]))
            .expect("Dynkin quivers are acyclic");
        placed[next] = true;
        order.push(next);
    }
    order
}

fn path_counts_from(q: &Quiver, start: usize) -> Vec<u32> {
    let mut count = vec![0u32; q.vertex_count()];
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        count[v] += 1;
        stack.extend(q.successors(v));
    }
    count
}

impl ModuleCategory {
    pub fn build(spec: &DynkinSpec) -> Result<Self> {
        let q = spec.quiver();
        let n = q.vertex_count();
        let order = sinks_first(&q);
        let opposite = q.opposite();
        let injective_dimv: Vec<Vec<u32>> = (0..n).map(|k| path_counts_from(&opposite, k)).collect();
        let injective_of = |d: &[u32]| injective_dimv.iter().position(|e| e.as_slice() == d);

        let mut modules: Vec<Module> = Vec::new();
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut alive = vec![true; n];
        let mut end_column = vec![0usize; n];
        let mut injective_at_end = vec![usize::MAX; n];
        let limit = spec.positive_root_count();

        for &j in &order {
            index.insert((0, j), modules.len());
            modules.push(Module { column: 0, vertex: j, dimv: path_counts_from(&q, j) });
        }
        let mut column = 0;
        loop {
            for &j in &order {
                if !alive[j] {
                    continue;
                }
                let id = index[&(column, j)];
                if let Some(k) = injective_of(&modules[id].dimv) {
                    alive[j] = false;
                    end_column[j] = column;
                    injective_at_end[j] = k;
                }
            }
            if alive.iter().all(|a| !a) {
                break;
            }
            for &j in &order {
                if !alive[j] {
                    continue;
                }
                let mut d: Vec<i64> = modules[index[&(column, j)]].dimv.iter().map(|&x| -(x as i64)).collect();
                let mut add = |key: (usize, usize)| {
                    if let Some(&m) = index.get(&key) {
                        for (a, &b) in d.iter_mut().zip(&modules[m].dimv) {
                            *a += b as i64;
                        }
                    }
                };
                for i in q.predecessors(j) {
                    add((column, i));
                }
                for i in q.successors(j) {
                    add((column + 1, i));
                }
                if d.iter().any(|&x| x < 0) || d.iter().all(|&x| x == 0) {
                    return internal(format!(
                        "knitting produced dimension vector {d:?} at column {} vertex {}",
                        column + 1,
                        j + 1
                    ));
                }
                index.insert((column + 1, j), modules.len());
                modules.push(Module { column: column + 1, vertex: j, dimv: d.iter().map(|&x| x as u32).collect() });
                if modules.len() > limit {
                    return internal(format!("knitting exceeded {limit} modules"));
                }
            }
            column += 1;
        }
        if modules.len() != limit {
            return internal(format!("knitting produced {} modules, expected {limit}", modules.len()));
        }
        let mut orbit_of_injective = vec![usize::MAX; n];
        for j in 0..n {
            orbit_of_injective[injective_at_end[j]] = j;
        }
        if orbit_of_injective.contains(&usize::MAX) {
            return internal("injectives do not terminate distinct orbits");
        }

        let count = modules.len();
        let mut tau = vec![None; count];
        let mut tau_inv = vec![None; count];
        let mut arrows = Vec::new();
        let mut meshes = Vec::new();
        for (id, m) in modules.iter().enumerate() {
            let (c, j) = (m.column, m.vertex);
            for i in q.predecessors(j) {
                if let Some(&t) = index.get(&(c, i)) {
                    arrows.push((id, t));
                }
            }
            for i in q.successors(j) {
                if let Some(&t) = index.get(&(c + 1, i)) {
                    arrows.push((id, t));
                }
            }
            if c > 0 {
                let start = index[&(c - 1, j)];
                tau[id] = Some(start);
                tau_inv[start] = Some(id);
                let mut middles: Vec<usize> =
                    q.predecessors(j).filter_map(|i| index.get(&(c - 1, i)).copied()).collect();
                middles.extend(q.successors(j).filter_map(|i| index.get(&(c, i)).copied()));
                middles.sort_unstable();
                meshes.push(Mesh { start, middles, end: id });
            }
        }
        arrows.sort_unstable();
        let ar = TranslationQuiver { vertex_count: count, arrows, tau, meshes };

        let mut cat = ModuleCategory {
            spec: spec.clone(),
            quiver: q,
            modules,
            index,
            ar,
            tau_inv,
            end_column,
            injective_at_end,
            orbit_of_injective,
            hom: Vec::new(),
            ext: Vec::new(),
        };
        cat.fill_hom_tables()?;
        Ok(cat)
    }

    /// `h_Y(Z) = dim Hom(Z, Y)`, propagated over the knitting order.
    fn hammock(&self, y: usize) -> Vec<i64> {
        let mut h = vec![0i64; self.modules.len()];
        for z in 0..self.modules.len() {
            h[z] = match self.ar.tau[z] {
                None => self.modules[y].dimv[self.modules[z].vertex] as i64,
                Some(tz) => {
                    let mesh = self.mesh_ending_at(z).expect("non-projectives end a mesh");
                    mesh.middles.iter().map(|&e| h[e]).sum::<i64>() - h[tz] + i64::from(tz == y)
                }
            };
        }
        h
    }

    fn fill_hom_tables(&mut self) -> Result<()> {
        let count = self.modules.len();
        let mut hom = vec![0u32; count * count];
        let mut ext = vec![0u32; count * count];
        for y in 0..count {
            for (x, &v) in self.hammock(y).iter().enumerate() {
                if v < 0 {
                    return internal(format!("negative hom dimension between modules {x} and {y}"));
                }
                hom[x * count + y] = v as u32;
            }
        }
        for x in 0..count {
            for y in 0..count {
                let e = hom[x * count + y] as i64 - self.euler_form(&self.modules[x].dimv, &self.modules[y].dimv)?;
                if e < 0 {
                    return internal(format!("negative ext dimension between modules {x} and {y}"));
                }
                ext[x * count + y] = e as u32;
            }
        }
        self.hom = hom;
        self.ext = ext;
        Ok(())
    }

    fn mesh_ending_at(&self, z: usize) -> Option<&Mesh> {
        // meshes are pushed in id order, skipping the projectives
        let k = z.checked_sub(self.spec.rank())?;
        self.ar.meshes.get(k).filter(|m| m.end == z)
    }

    pub fn spec(&self) -> &DynkinSpec {
        &self.spec
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn modules(&self) -> &[Module] {
        &self.modules
    }

    pub fn module(&self, id: usize) -> &Module {
        &self.modules[id]
    }

    pub fn ar_quiver(&self) -> &TranslationQuiver {
        &self.ar
    }

    pub fn mesh(&self, z: usize) -> Option<&Mesh> {
        self.mesh_ending_at(z)
    }

    pub fn find(&self, column: usize, vertex: usize) -> Option<usize> {
        self.index.get(&(column, vertex)).copied()
    }

    pub fn projective(&self, j: usize) -> usize {
        self.index[&(0, j)]
    }

    pub fn injective(&self, k: usize) -> usize {
        let j = self.orbit_of_injective[k];
        self.index[&(self.end_column[j], j)]
    }

    pub fn end_column(&self, j: usize) -> usize {
        self.end_column[j]
    }

    pub fn injective_at_end(&self, j: usize) -> usize {
        self.injective_at_end[j]
    }

    pub fn orbit_of_injective(&self, k: usize) -> usize {
        self.orbit_of_injective[k]
    }

    pub fn is_projective(&self, x: usize) -> bool {
        self.ar.tau[x].is_none()
    }

    pub fn is_injective(&self, x: usize) -> bool {
        self.tau_inv[x].is_none()
    }

    pub fn tau(&self, x: usize) -> Option<usize> {
        self.ar.tau[x]
    }

    pub fn tau_inv(&self, x: usize) -> Option<usize> {
        self.tau_inv[x]
    }

    /// `Σ d_i e_i − Σ_{i→j} d_i e_j`.
    pub fn euler_form(&self, d: &[u32], e: &[u32]) -> Result<i64> {
        let n = self.spec.rank();
        if d.len() != n || e.len() != n {
            return arg(format!("dimension vectors must have length {n}"));
        }
        let diag: i64 = d.iter().zip(e).map(|(&a, &b)| a as i64 * b as i64).sum();
        let off: i64 = self.spec.arrows().iter().map(|&(i, j)| d[i] as i64 * e[j] as i64).sum();
        Ok(diag - off)
    }

    pub fn hom(&self, x: usize, y: usize) -> u32 {
        self.hom[x * self.modules.len() + y]
    }

    pub fn ext(&self, x: usize, y: usize) -> u32 {
        self.ext[x * self.modules.len() + y]
    }

    /// `row:r,col:c` with 1-based rows.
    pub fn name(&self, x: usize) -> String {
        let m = &self.modules[x];
        format!("row:{},col:{}", m.vertex + 1, m.column)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{positive_roots, DynkinSpec};

    #[test]
    fn a2_modules() {
        let c = ModuleCategory::build(&DynkinSpec::a(2).unwrap()).unwrap();
        let mut dims: Vec<Vec<u32>> = c.modules().iter().map(|m| m.dimv.clone()).collect();
        dims.sort();
        assert_eq!(dims, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        let s1 = c.modules().iter().position(|m| m.dimv == [1, 0]).unwrap();
        assert_eq!(c.tau(s1), Some(c.projective(1)));
        assert_eq!(c.hom(c.projective(0), s1), 1);
        assert_eq!(c.hom(s1, c.projective(1)), 0);
        assert_eq!(c.ext(s1, c.projective(1)), 1);
    }

    #[test]
    fn euler_form_examples() {
        let c = ModuleCategory::build(&DynkinSpec::a(2).unwrap()).unwrap();
        assert_eq!(c.euler_form(&[1, 0], &[0, 1]).unwrap(), -1);
        assert_eq!(c.euler_form(&[0, 1], &[1, 0]).unwrap(), 0);
        assert_eq!(c.euler_form(&[1, 1], &[1, 1]).unwrap(), 1);
        assert!(c.euler_form(&[1], &[1, 0]).is_err());
    }

    #[test]
    fn dimension_vectors_are_the_positive_roots() {
        let specs = [
            DynkinSpec::a(5).unwrap(),
            DynkinSpec::d(4).unwrap(),
            DynkinSpec::d(6).unwrap(),
            DynkinSpec::e(6).unwrap(),
            DynkinSpec::e(7).unwrap(),
            DynkinSpec::e(8).unwrap(),
            DynkinSpec::d(5).unwrap().with_orientation("3>1,2>3,4>3,4>5").unwrap(),
        ];
        for spec in &specs {
            let c = ModuleCategory::build(spec).unwrap();
            let mut dims: Vec<Vec<i64>> =
                c.modules().iter().map(|m| m.dimv.iter().map(|&x| x as i64).collect()).collect();
            dims.sort();
            assert_eq!(dims, positive_roots(spec), "{spec}");
        }
    }

    #[test]
    fn projectives_and_injectives() {
        let c = ModuleCategory::build(&DynkinSpec::d(5).unwrap()).unwrap();
        for j in 0..5 {
            let p = c.projective(j);
            assert_eq!(c.module(p).column, 0);
            assert!(c.is_projective(p));
            assert!(c.is_injective(c.injective(j)));
        }
        assert_eq!((0..c.len()).filter(|&x| c.is_injective(x)).count(), 5);
    }

    #[test]
    fn tau_round_trip_d4() {
        let c = ModuleCategory::build(&DynkinSpec::d(4).unwrap()).unwrap();
        for x in 0..c.len() {
            if let Some(t) = c.tau(x) {
                assert_eq!(c.tau_inv(t), Some(x));
            } else {
                assert_eq!(c.module(x).column, 0);
            }
        }
    }

    #[test]
    fn rigid_bricks_and_projective_ext() {
        for spec in [DynkinSpec::a(3).unwrap(), DynkinSpec::d(4).unwrap()] {
            let c = ModuleCategory::build(&spec).unwrap();
            for x in 0..c.len() {
                assert_eq!(c.hom(x, x), 1);
                assert_eq!(c.ext(x, x), 0);
            }
            for j in 0..spec.rank() {
                for y in 0..c.len() {
                    assert_eq!(c.ext(c.projective(j), y), 0);
                }
            }
        }
    }

    #[test]
    fn mesh_additivity_and_symmetry() {
        for spec in [DynkinSpec::a(4).unwrap(), DynkinSpec::d(6).unwrap(), DynkinSpec::e(8).unwrap()] {
            let c = ModuleCategory::build(&spec).unwrap();
            assert!(c.ar_quiver().check_mesh_symmetry());
            for m in &c.ar_quiver().meshes {
                for v in 0..spec.rank() {
                    let mid: u32 = m.middles.iter().map(|&e| c.module(e).dimv[v]).sum();
                    assert_eq!(c.module(m.start).dimv[v] + c.module(m.end).dimv[v], mid);
                }
            }
        }
    }

    #[test]
    fn hammock_matches_reflection_oracle() {
        for spec in [DynkinSpec::a(2).unwrap(), DynkinSpec::a(3).unwrap(), DynkinSpec::d(4).unwrap()] {
            let c = ModuleCategory::build(&spec).unwrap();
            let oracle = crate::oracle::RepresentationOracle::new(&spec).unwrap();
            for x in 0..c.len() {
                for y in 0..c.len() {
                    let expected = oracle.hom(&c.module(x).dimv, &c.module(y).dimv).unwrap();
                    assert_eq!(c.hom(x, y), expected, "{spec}: {x} {y}");
                }
            }
        }
    }

    #[test]
    fn ar_duality_where_it_applies() {
        for spec in [DynkinSpec::a(3).unwrap(), DynkinSpec::d(4).unwrap()] {
            let c = ModuleCategory::build(&spec).unwrap();
            for x in 0..c.len() {
                let Some(tx) = c.tau(x) else { continue };
                if c.is_injective(tx) {
                    continue;
                }
                for y in 0..c.len() {
                    assert_eq!(c.ext(x, y), c.hom(y, tx));
                }
            }
        }
    }
}
