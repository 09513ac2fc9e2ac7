//! The cluster category `C = D^b(H)/F` with `F = τ^{-1}[1]`, for `H` the path
//! algebra of an oriented Dynkin diagram.
//!
//! The derived AR quiver is `ZQ`; a vertex `(m, j)` of it stands for
//! `τ^{-m} P_j`. Objects of `C` are the vertices of the fundamental domain
//! `0 <= m <= end_column(j) + 1`: the modules, followed by the shifted
//! projectives `P_k[1] = τ^{-1} I_k`. Object ids list the modules in
//! knitting order and then `P_1[1], ..., P_n[1]`.

use std::collections::HashMap;

use serde::Serialize;

use crate::dynkin::DynkinSpec;
use crate::error::{internal, Result};
use crate::hereditary::{Mesh, ModuleCategory, TranslationQuiver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ObjectKind {
    Module(usize),
    ShiftedProjective(usize),
}

/// Window of `F`-powers scanned by `hom`; only `|k| <= 2` may contribute.
const WINDOW: i64 = 4;

#[derive(Debug, Clone)]
pub struct ClusterCategory {
    modules: ModuleCategory,
    coords: Vec<(i64, usize)>,
    by_coord: HashMap<(i64, usize), usize>,
    tau: Vec<usize>,
    tau_inv: Vec<usize>,
    ar: TranslationQuiver,
    hom: Vec<u32>,
}

impl ClusterCategory {
    pub fn build(spec: &DynkinSpec) -> Result<Self> {
        let mut cat = Self::build_structure(spec)?;
        let count = cat.len();
        let mut hom = vec![0u32; count * count];
        for x in 0..count {
            for y in 0..count {
                hom[x * count + y] = cat.hom_by_orbit_sum(x, y)?;
            }
        }
        cat.hom = hom;
        Ok(cat)
    }

    /// Builds the category around a previously computed row-major Hom table,
    /// skipping the Hom computation. Used by the cache.
    pub fn build_with_hom_table(spec: &DynkinSpec, table: Vec<u32>) -> Result<Self> {
        let mut cat = Self::build_structure(spec)?;
        if table.len() != cat.len() * cat.len() {
            return internal("cached Hom table has the wrong size");
        }
        cat.hom = table;
        Ok(cat)
    }

    fn build_structure(spec: &DynkinSpec) -> Result<Self> {
        let modules = ModuleCategory::build(spec)?;
        let n = spec.rank();
        let count = modules.len() + n;
        let mut coords: Vec<(i64, usize)> =
            modules.modules().iter().map(|m| (m.column as i64, m.vertex)).collect();
        for k in 0..n {
            let j = modules.orbit_of_injective(k);
            coords.push((modules.end_column(j) as i64 + 1, j));
        }
        let by_coord: HashMap<(i64, usize), usize> = coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut cat = ClusterCategory {
            modules,
            coords,
            by_coord,
            tau: Vec::new(),
            tau_inv: Vec::new(),
            ar: TranslationQuiver { vertex_count: count, arrows: Vec::new(), tau: Vec::new(), meshes: Vec::new() },
            hom: Vec::new(),
        };
        cat.tau = (0..count).map(|x| cat.locate(cat.coords[x].0 - 1, cat.coords[x].1)).collect();
        let mut tau_inv = vec![usize::MAX; count];
        for (x, &t) in cat.tau.iter().enumerate() {
            if tau_inv[t] != usize::MAX {
                return internal("τ is not injective on the fundamental domain");
            }
            tau_inv[t] = x;
        }
        cat.tau_inv = tau_inv;

        let q = cat.modules.quiver().clone();
        let mut meshes = Vec::with_capacity(count);
        let mut arrows = Vec::new();
        for z in 0..count {
            let (m, j) = cat.coords[z];
            let mut middles: Vec<usize> = q.predecessors(j).map(|i| cat.locate(m - 1, i)).collect();
            middles.extend(q.successors(j).map(|i| cat.locate(m, i)));
            middles.sort_unstable();
            arrows.extend(middles.iter().map(|&e| (e, z)));
            meshes.push(Mesh { start: cat.tau[z], middles, end: z });
        }
        arrows.sort_unstable();
        cat.ar = TranslationQuiver {
            vertex_count: count,
            arrows,
            tau: cat.tau.iter().map(|&t| Some(t)).collect(),
            meshes,
        };
        Ok(cat)
    }

    fn end(&self, j: usize) -> i64 {
        self.modules.end_column(j) as i64
    }

    /// `F(m, k) = (m + end(σk) + 2, σk)` where `σk` is the orbit ending at `I_k`.
    fn f_forward(&self, (m, k): (i64, usize)) -> (i64, usize) {
        let j = self.modules.orbit_of_injective(k);
        (m + self.end(j) + 2, j)
    }

    fn f_backward(&self, (m, j): (i64, usize)) -> (i64, usize) {
        (m - self.end(j) - 2, self.modules.injective_at_end(j))
    }

    /// Representative of the `F`-orbit of a `ZQ` vertex in the fundamental domain.
    pub fn normalize(&self, mut c: (i64, usize)) -> (i64, usize) {
        while c.0 < 0 {
            c = self.f_forward(c);
        }
        while c.0 > self.end(c.1) + 1 {
            c = self.f_backward(c);
        }
        c
    }

    /// Object id of the `F`-orbit of `(column, row)`.
    pub fn locate(&self, column: i64, row: usize) -> usize {
        self.by_coord[&self.normalize((column, row))]
    }

    /// Writes a `ZQ` vertex as `M[s]` with `M` a module.
    fn module_shift(&self, (mut m, mut j): (i64, usize)) -> (usize, i64) {
        let mut s = 0;
        while m > self.end(j) {
            m -= self.end(j) + 1;
            j = self.modules.injective_at_end(j);
            s += 1;
        }
        while m < 0 {
            let k = self.modules.orbit_of_injective(j);
            m += self.end(k) + 1;
            j = k;
            s -= 1;
        }
        (self.modules.find(m as usize, j).expect("module coordinate"), s)
    }

    fn hom_derived(&self, a: (i64, usize), b: (i64, usize)) -> u32 {
        let (x, s) = self.module_shift(a);
        let (y, t) = self.module_shift(b);
        match t - s {
            0 => self.modules.hom(x, y),
            1 => self.modules.ext(x, y),
            _ => 0,
        }
    }

    /// `Σ_k dim Hom_D(X, F^k Y)` over a window, failing if terms appear at
    /// `|k| > 2`.
    fn hom_by_orbit_sum(&self, x: usize, y: usize) -> Result<u32> {
        let a = self.coords[x];
        let mut total = 0;
        let mut up = self.coords[y];
        let mut down = self.coords[y];
        for k in 0..=WINDOW {
            let fwd = self.hom_derived(a, up);
            let back = if k == 0 { 0 } else { self.hom_derived(a, down) };
            if k > 2 && fwd + back > 0 {
                return internal(format!("Hom({x}, F^±{k} {y}) is nonzero"));
            }
            total += fwd + back;
            up = self.f_forward(up);
            down = self.f_backward(down);
        }
        Ok(total)
    }

    pub fn spec(&self) -> &DynkinSpec {
        self.modules.spec()
    }

    pub fn module_category(&self) -> &ModuleCategory {
        &self.modules
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn kind(&self, x: usize) -> ObjectKind {
        if x < self.modules.len() {
            ObjectKind::Module(x)
        } else {
            ObjectKind::ShiftedProjective(x - self.modules.len())
        }
    }

    /// `(column, row)` of the object in `ZQ`; rows are 0-based diagram vertices.
    pub fn coordinate(&self, x: usize) -> (i64, usize) {
        self.coords[x]
    }

    pub fn projective(&self, j: usize) -> usize {
        self.modules.projective(j)
    }

    pub fn injective(&self, k: usize) -> usize {
        self.modules.injective(k)
    }

    pub fn shifted_projective(&self, j: usize) -> usize {
        self.modules.len() + j
    }

    /// `row:<r>,col:<c>` for modules (1-based row), `P<j>[1]` otherwise.
    pub fn name(&self, x: usize) -> String {
        match self.kind(x) {
            ObjectKind::Module(m) => self.modules.name(m),
            ObjectKind::ShiftedProjective(j) => format!("P{}[1]", j + 1),
        }
    }

    pub fn parse_name(&self, name: &str) -> Option<usize> {
        let name = name.trim();
        if let Some(rest) = name.strip_prefix('P').and_then(|r| r.strip_suffix("[1]")) {
            let j: usize = rest.parse().ok()?;
            return (1..=self.spec().rank()).contains(&j).then(|| self.shifted_projective(j - 1));
        }
        let (r, c) = name.split_once(',')?;
        let row: usize = r.trim().strip_prefix("row:")?.parse().ok()?;
        let col: usize = c.trim().strip_prefix("col:")?.parse().ok()?;
        self.modules.find(col, row.checked_sub(1)?)
    }

    pub fn tau(&self, x: usize) -> usize {
        self.tau[x]
    }

    pub fn tau_inv(&self, x: usize) -> usize {
        self.tau_inv[x]
    }

    /// `τ^k` for any integer `k`.
    pub fn tau_pow(&self, x: usize, k: i64) -> usize {
        let (m, j) = self.coords[x];
        self.locate(m - k, j)
    }

    pub fn ar_quiver(&self) -> &TranslationQuiver {
        &self.ar
    }

    pub fn mesh(&self, z: usize) -> &Mesh {
        &self.ar.meshes[z]
    }

    pub fn hom(&self, x: usize, y: usize) -> u32 {
        self.hom[x * self.len() + y]
    }

    /// `Ext^1_C(X, Y) = Hom_C(X, τY)`.
    pub fn ext1(&self, x: usize, y: usize) -> u32 {
        self.hom(x, self.tau[y])
    }

    pub fn compatible(&self, x: usize, y: usize) -> bool {
        self.ext1(x, y) == 0
    }

    /// Number of middle terms of the AR triangle ending at `x`.
    pub fn alpha_count(&self, x: usize) -> usize {
        self.ar.meshes[x].middles.len()
    }

    pub fn alpha(&self) -> usize {
        (0..self.len()).map(|x| self.alpha_count(x)).max().unwrap_or(0)
    }

    /// `τ`-orbits, each starting at its smallest id and listed in order of
    /// that id.
    pub fn tau_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut orbits = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                orbit.push(x);
                x = self.tau_inv[x];
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// Objects compatible with `m`, `m` included.
    pub fn ext_support(&self, m: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.ext1(x, m) == 0).collect()
    }

    /// Objects of `m^⊥` other than `m`.
    pub fn perp_objects(&self, m: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| x != m && self.ext1(x, m) == 0).collect()
    }

    pub fn is_rigid(&self, objects: &[usize]) -> bool {
        objects.iter().all(|&x| objects.iter().all(|&y| self.ext1(x, y) == 0))
    }

    /// Row-major Hom table.
    pub fn hom_table(&self) -> &[u32] {
        &self.hom
    }
}
