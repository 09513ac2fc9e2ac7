//! Independent Hom computation from explicit matrix representations.
//!
//! Every indecomposable of a Dynkin quiver is obtained from a simple by
//! reflection functors along an admissible sequence of sinks. The matrices
//! are built over the rationals and `dim Hom(X, Y)` is read off as the
//! dimension of the solution space of the intertwining equations. Only meant
//! for small ranks.

use std::collections::{BTreeMap, HashMap};

use crate::dynkin::DynkinSpec;
use crate::error::{internal, Error, Result};
use crate::hereditary::{sinks_first, ModuleCategory};
use crate::linalg::{Matrix, Q};

pub const MAX_ORACLE_RANK: usize = 6;

#[derive(Debug, Clone)]
pub struct Representation {
    pub dimv: Vec<usize>,
    /// Map for each arrow `(s, t)`, of shape `dimv[t] x dimv[s]`.
    maps: BTreeMap<(usize, usize), Matrix>,
}

impl Representation {
    fn simple(n: usize, arrows: &[(usize, usize)], k: usize) -> Self {
        let mut dimv = vec![0; n];
        dimv[k] = 1;
        let maps = arrows.iter().map(|&(s, t)| ((s, t), Matrix::zeros(dimv[t], dimv[s]))).collect();
        Representation { dimv, maps }
    }

    fn is_zero(&self) -> bool {
        self.dimv.iter().all(|&d| d == 0)
    }

    /// Reflection at a source `k`: the new space at `k` is the cokernel of
    /// `V_k -> ⊕_{k→i} V_i` and the arrows at `k` are reversed.
    fn reflect_at_source(&self, k: usize) -> Self {
        let outs: Vec<usize> = self.maps.keys().filter(|&&(s, _)| s == k).map(|&(_, t)| t).collect();
        debug_assert!(self.maps.keys().all(|&(_, t)| t != k), "vertex {k} is not a source");
        let total: usize = outs.iter().map(|&i| self.dimv[i]).sum();
        let mut stacked = Matrix::zeros(total, self.dimv[k]);
        let mut offset = 0;
        for &i in &outs {
            let m = &self.maps[&(k, i)];
            for r in 0..m.rows {
                for c in 0..m.cols {
                    stacked.set(offset + r, c, m.get(r, c));
                }
            }
            offset += self.dimv[i];
        }
        let quotient = stacked.left_nullspace();
        let mut dimv = self.dimv.clone();
        dimv[k] = quotient.rows;
        let mut maps: BTreeMap<(usize, usize), Matrix> =
            self.maps.iter().filter(|(&(s, _), _)| s != k).map(|(&a, m)| (a, m.clone())).collect();
        let mut offset = 0;
        for &i in &outs {
            let mut m = Matrix::zeros(quotient.rows, self.dimv[i]);
            for r in 0..quotient.rows {
                for c in 0..self.dimv[i] {
                    m.set(r, c, quotient.get(r, offset + c));
                }
            }
            maps.insert((i, k), m);
            offset += self.dimv[i];
        }
        Representation { dimv, maps }
    }
}

fn flip_at(arrows: &[(usize, usize)], k: usize) -> Vec<(usize, usize)> {
    arrows.iter().map(|&(s, t)| if s == k || t == k { (t, s) } else { (s, t) }).collect()
}

#[derive(Debug, Clone)]
pub struct RepresentationOracle {
    spec: DynkinSpec,
    reps: HashMap<Vec<usize>, Representation>,
}

impl RepresentationOracle {
    pub fn new(spec: &DynkinSpec) -> Result<Self> {
        let n = spec.rank();
        if n > MAX_ORACLE_RANK {
            return Err(Error::Unsupported(format!(
                "brute-force Hom oracle refuses rank {n} (limit {MAX_ORACLE_RANK})"
            )));
        }
        let q = spec.quiver();
        let seq = sinks_first(&q);
        let roots = spec.positive_root_count();
        // quivers[s] is the orientation after reflecting at seq[0..s]
        let mut quivers = vec![spec.arrows().to_vec()];
        let mut reps: HashMap<Vec<usize>, Representation> = HashMap::new();
        let mut s = 0;
        while reps.len() < roots {
            if s > 2 * n * (roots + 1) {
                return internal(format!("reflection functors produced only {} of {roots} roots", reps.len()));
            }
            let k = seq[s % n];
            let mut rep = Representation::simple(n, &quivers[s], k);
            for t in (0..s).rev() {
                rep = rep.reflect_at_source(seq[t % n]);
                if rep.is_zero() {
                    break;
                }
            }
            if !rep.is_zero() {
                reps.entry(rep.dimv.clone()).or_insert(rep);
            }
            let next = flip_at(&quivers[s], k);
            quivers.push(next);
            s += 1;
        }
        Ok(RepresentationOracle { spec: spec.clone(), reps })
    }

    pub fn spec(&self) -> &DynkinSpec {
        &self.spec
    }

    pub fn representation(&self, dimv: &[u32]) -> Option<&Representation> {
        let key: Vec<usize> = dimv.iter().map(|&d| d as usize).collect();
        self.reps.get(&key)
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// `dim Hom(X, Y)` for the indecomposables with the given dimension vectors.
    pub fn hom(&self, dx: &[u32], dy: &[u32]) -> Result<u32> {
        let (Some(x), Some(y)) = (self.representation(dx), self.representation(dy)) else {
            return Err(Error::Argument("dimension vector is not a positive root".into()));
        };
        let n = self.spec.rank();
        let mut offset = vec![0; n + 1];
        for v in 0..n {
            offset[v + 1] = offset[v] + x.dimv[v] * y.dimv[v];
        }
        let unknowns = offset[n];
        let mut rows: Vec<Vec<Q>> = Vec::new();
        let zero = Q::from_integer(0);
        for &(s, t) in self.spec.arrows() {
            let (xa, ya) = (&x.maps[&(s, t)], &y.maps[&(s, t)]);
            // (Y_a f_s - f_t X_a)[a][b] = 0
            for a in 0..y.dimv[t] {
                for b in 0..x.dimv[s] {
                    let mut row = vec![zero; unknowns];
                    for c in 0..y.dimv[s] {
                        row[offset[s] + c * x.dimv[s] + b] += ya.get(a, c);
                    }
                    for c in 0..x.dimv[t] {
                        row[offset[t] + a * x.dimv[t] + c] -= xa.get(c, b);
                    }
                    rows.push(row);
                }
            }
        }
        let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(rows, unknowns).rank() };
        Ok((unknowns - rank) as u32)
    }
}

/// `dim Hom(X, Y)` for modules of `cat`, computed without the AR quiver.
pub fn brute_force_hom(cat: &ModuleCategory, x: usize, y: usize) -> Result<u32> {
    let oracle = RepresentationOracle::new(cat.spec())?;
    oracle.hom(&cat.module(x).dimv, &cat.module(y).dimv)
}
