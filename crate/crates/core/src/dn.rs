//! Row data for cluster categories of type `D_n`.
//!
//! Rows are diagram vertices of the `ZQ` coordinates: the fork vertices 1
//! and 2 carry the α-objects, vertex `n` carries the γ-objects.

use serde::Serialize;

use crate::category::ClusterCategory;
use crate::dynkin::Family;
use crate::error::{arg, internal, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RowClass {
    AlphaTop,
    AlphaSecond,
    Gamma,
    Inner,
}

#[derive(Debug, Clone)]
pub struct DnRowInfo {
    row_class: Vec<RowClass>,
    phi: Vec<Option<usize>>,
    gamma_of: Vec<Option<usize>>,
}

impl DnRowInfo {
    pub fn build(c: &ClusterCategory) -> Result<Self> {
        let spec = c.spec();
        if spec.family() != Family::D {
            return arg(format!("row data needs type D, got {}", spec.label()));
        }
        let n = spec.rank();
        let row_class: Vec<RowClass> = (0..c.len())
            .map(|x| match c.coordinate(x).1 {
                0 => RowClass::AlphaTop,
                1 => RowClass::AlphaSecond,
                r if r == n - 1 => RowClass::Gamma,
                _ => RowClass::Inner,
            })
            .collect();
        let is_alpha = |x: usize| matches!(row_class[x], RowClass::AlphaTop | RowClass::AlphaSecond);

        let mut phi = vec![None; c.len()];
        for y in (0..c.len()).filter(|&y| is_alpha(y)) {
            let mut partners: Vec<usize> = c
                .ar_quiver()
                .meshes
                .iter()
                .filter(|m| m.middles.contains(&y))
                .flat_map(|m| m.middles.iter().copied())
                .filter(|&z| z != y && is_alpha(z))
                .collect();
            partners.sort_unstable();
            partners.dedup();
            match partners.as_slice() {
                [p] => phi[y] = Some(*p),
                _ => return internal(format!("{} has {} φ-partners", c.name(y), partners.len())),
            }
        }

        let gammas: Vec<usize> = (0..c.len()).filter(|&x| row_class[x] == RowClass::Gamma).collect();
        let mut gamma_of = vec![None; c.len()];
        for y in (0..c.len()).filter(|&y| is_alpha(y)) {
            let ty = c.tau(y);
            let tpy = c.tau(phi[y].expect("α-objects have φ"));
            let found: Vec<usize> =
                gammas.iter().copied().filter(|&g| c.hom(g, ty) >= 1 && c.hom(g, tpy) >= 1).collect();
            match found.as_slice() {
                [g] => gamma_of[y] = Some(*g),
                _ => return internal(format!("γ({}) has {} candidates", c.name(y), found.len())),
            }
        }
        Ok(DnRowInfo { row_class, phi, gamma_of })
    }

    pub fn row_class(&self, x: usize) -> RowClass {
        self.row_class[x]
    }

    pub fn is_alpha(&self, x: usize) -> bool {
        matches!(self.row_class[x], RowClass::AlphaTop | RowClass::AlphaSecond)
    }

    pub fn is_gamma(&self, x: usize) -> bool {
        self.row_class[x] == RowClass::Gamma
    }

    pub fn alpha_objects(&self) -> Vec<usize> {
        (0..self.row_class.len()).filter(|&x| self.is_alpha(x)).collect()
    }

    pub fn gamma_objects(&self) -> Vec<usize> {
        (0..self.row_class.len()).filter(|&x| self.is_gamma(x)).collect()
    }

    /// The other α-object in the mesh through `y`; `None` off the α-rows.
    pub fn phi(&self, y: usize) -> Option<usize> {
        self.phi[y]
    }

    /// `φ` extended by the identity to all objects.
    pub fn phi_all(&self, x: usize) -> usize {
        self.phi[x].unwrap_or(x)
    }

    /// The γ-object with nonzero maps to `τY` and `τφY`.
    pub fn gamma_of(&self, y: usize) -> Option<usize> {
        self.gamma_of[y]
    }

    /// α-objects other than `y` that are compatible with `y`.
    pub fn compatible_alphas(&self, c: &ClusterCategory, y: usize) -> Vec<usize> {
        self.alpha_objects().into_iter().filter(|&z| z != y && c.compatible(y, z)).collect()
    }
}
