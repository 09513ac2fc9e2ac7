//! Dynkin diagrams of types A, D, E with a chosen orientation.
//!
//! Vertex numbering (1-based in all text formats):
//!
//! * `A_n`: `1 - 2 - ... - n`
//! * `D_n`: `1 - 3`, `2 - 3`, `3 - 4 - ... - n`
//! * `E_6`: `1 - 2 - 3 - 4 - 5` with `6 - 3`
//! * `E_7`: `1 - 2 - 3 - 4 - 5 - 6` with `7 - 3`
//! * `E_8`: `1 - 2 - 3 - 4 - 5 - 6 - 7` with `8 - 3`

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{arg, Result};
use crate::quiver::Quiver;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinSpec {
    family: Family,
    rank: usize,
    /// Oriented diagram edges, 0-based `(source, target)`.
    arrows: Vec<(usize, usize)>,
}

fn diagram_edges(family: Family, rank: usize) -> Result<Vec<(usize, usize)>> {
    match (family, rank) {
        (Family::A, n) if n >= 1 => Ok((0..n - 1).map(|i| (i, i + 1)).collect()),
        (Family::D, n) if n >= 4 => {
            let mut e = vec![(0, 2), (1, 2)];
            e.extend((2..n - 1).map(|i| (i, i + 1)));
            Ok(e)
        }
        (Family::E, n @ 6..=8) => {
            let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
            e.push((2, n - 1));
            Ok(e)
        }
        _ => arg(format!("{family:?}{rank} is not a Dynkin type")),
    }
}

fn tree_distances(n: usize, edges: &[(usize, usize)], root: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; n];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &(a, b) in edges {
            let other = if a == v { b } else if b == v { a } else { continue };
            if dist[other] == usize::MAX {
                dist[other] = dist[v] + 1;
                queue.push_back(other);
            }
        }
    }
    dist
}

impl DynkinSpec {
    /// The default orientation: linear `i -> i+1` for A, `1 -> 3 <- 2`,
    /// `3 -> 4 -> ... -> n` for D, and every arrow pointing towards the
    /// branch vertex 3 for E.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let edges = diagram_edges(family, rank)?;
        let arrows = match family {
            Family::A | Family::D => edges,
            Family::E => {
                let dist = tree_distances(rank, &edges, 2);
                edges.into_iter().map(|(a, b)| if dist[a] > dist[b] { (a, b) } else { (b, a) }).collect()
            }
        };
        Ok(DynkinSpec { family, rank, arrows })
    }

    pub fn a(rank: usize) -> Result<Self> {
        Self::new(Family::A, rank)
    }

    pub fn d(rank: usize) -> Result<Self> {
        Self::new(Family::D, rank)
    }

    pub fn e(rank: usize) -> Result<Self> {
        Self::new(Family::E, rank)
    }

    /// Parses a type name such as `A`, `D`, `E6`; `rank` is required for A
    /// and D and must agree with the name for E.
    pub fn from_type(name: &str, rank: Option<usize>) -> Result<Self> {
        let upper = name.trim().to_ascii_uppercase();
        let (fam, suffix) = upper.split_at(upper.len().min(1));
        let family = match fam {
            "A" => Family::A,
            "D" => Family::D,
            "E" => Family::E,
            _ => return arg(format!("unknown type {name:?}")),
        };
        let named = if suffix.is_empty() {
            None
        } else {
            Some(suffix.parse::<usize>().map_err(|_| crate::Error::Argument(format!("unknown type {name:?}")))?)
        };
        let rank = match (named, rank) {
            (Some(a), Some(b)) if a != b => return arg(format!("type {name} conflicts with rank {b}")),
            (Some(a), _) | (None, Some(a)) => a,
            (None, None) => return arg(format!("type {name} needs a rank")),
        };
        Self::new(family, rank)
    }

    /// Replaces the orientation by a list like `"1>3,2>3,3>4"`. Every diagram
    /// edge must appear exactly once.
    pub fn with_orientation(&self, text: &str) -> Result<Self> {
        let edges = diagram_edges(self.family, self.rank)?;
        let mut wanted: HashSet<(usize, usize)> =
            edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let mut arrows = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (s, t) = part
                .split_once('>')
                .ok_or_else(|| crate::Error::Argument(format!("orientation entry {part:?} is not of the form s>t")))?;
            let parse = |x: &str| -> Result<usize> {
                match x.trim().parse::<usize>() {
                    Ok(v) if v >= 1 && v <= self.rank => Ok(v - 1),
                    _ => arg(format!("orientation vertex {x:?} out of range")),
                }
            };
            let (s, t) = (parse(s)?, parse(t)?);
            if !wanted.remove(&(s.min(t), s.max(t))) {
                return arg(format!("orientation entry {part:?} is not a diagram edge or is repeated"));
            }
            arrows.push((s, t));
        }
        if !wanted.is_empty() {
            return arg("orientation does not cover every diagram edge");
        }
        arrows.sort_unstable();
        Ok(DynkinSpec { family: self.family, rank: self.rank, arrows })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Oriented arrows, 0-based.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn quiver(&self) -> Quiver {
        Quiver::from_arrows(self.rank, &self.arrows).expect("Dynkin orientation is a valid quiver")
    }

    /// `"1>2,2>3"` style description of the orientation.
    pub fn orientation_string(&self) -> String {
        let mut a = self.arrows.clone();
        a.sort_unstable();
        a.iter().map(|(s, t)| format!("{}>{}", s + 1, t + 1)).collect::<Vec<_>>().join(",")
    }

    /// `A3`, `D5`, `E6`, ...
    pub fn label(&self) -> String {
        format!("{:?}{}", self.family, self.rank)
    }

    /// Number of positive roots, from the closed formulas.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::D => n * (n - 1),
            Family::E => [36, 63, 120][n - 6],
        }
    }
}

impl fmt::Display for DynkinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.label(), self.orientation_string())
    }
}

/// Positive roots of the diagram, found by closing the simple roots under
/// simple reflections for the symmetric Cartan form.
pub fn positive_roots(spec: &DynkinSpec) -> Vec<Vec<i64>> {
    let n = spec.rank();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in spec.arrows() {
        adj[a].push(b);
        adj[b].push(a);
    }
    let simple = |i: usize| {
        let mut r = vec![0i64; n];
        r[i] = 1;
        r
    };
    let mut seen: BTreeSet<Vec<i64>> = (0..n).map(simple).collect();
    let mut queue: VecDeque<Vec<i64>> = seen.iter().cloned().collect();
    while let Some(r) = queue.pop_front() {
        for i in 0..n {
            let pairing = 2 * r[i] - adj[i].iter().map(|&j| r[j]).sum::<i64>();
            let mut s = r.clone();
            s[i] -= pairing;
            if s.iter().all(|&x| x >= 0) && s.iter().any(|&x| x > 0) && seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts_match_closed_forms() {
        for n in 1..=8 {
            let s = DynkinSpec::a(n).unwrap();
            assert_eq!(positive_roots(&s).len(), s.positive_root_count());
        }
        for n in 4..=8 {
            let s = DynkinSpec::d(n).unwrap();
            assert_eq!(positive_roots(&s).len(), s.positive_root_count());
        }
        for n in 6..=8 {
            let s = DynkinSpec::e(n).unwrap();
            assert_eq!(positive_roots(&s).len(), s.positive_root_count());
        }
    }

    #[test]
    fn default_e_orientation_points_to_branch() {
        for n in 6..=8 {
            let s = DynkinSpec::e(n).unwrap();
            let q = s.quiver();
            assert_eq!(q.out_degree(2), 0, "{}", s.orientation_string());
            assert_eq!(q.in_degree(2), 3);
            assert!(q.is_connected());
            // exactly one sink
            assert_eq!((0..n).filter(|&v| q.out_degree(v) == 0).count(), 1);
        }
        assert_eq!(DynkinSpec::e(6).unwrap().orientation_string(), "1>2,2>3,4>3,5>4,6>3");
    }

    #[test]
    fn default_d_orientation() {
        assert_eq!(DynkinSpec::d(5).unwrap().orientation_string(), "1>3,2>3,3>4,4>5");
    }

    #[test]
    fn orientation_parsing() {
        let s = DynkinSpec::a(3).unwrap();
        let t = s.with_orientation("2>1, 2>3").unwrap();
        assert_eq!(t.arrows(), &[(1, 0), (1, 2)]);
        assert!(s.with_orientation("1>2").is_err());
        assert!(s.with_orientation("1>2,2>3,3>2").is_err());
        assert!(s.with_orientation("1>3,2>3").is_err());
        assert!(s.with_orientation("1>2,2>4").is_err());
    }

    #[test]
    fn type_names() {
        assert_eq!(DynkinSpec::from_type("E7", None).unwrap().rank(), 7);
        assert_eq!(DynkinSpec::from_type("d", Some(5)).unwrap().label(), "D5");
        assert!(DynkinSpec::from_type("E9", None).is_err());
        assert!(DynkinSpec::from_type("D", Some(3)).is_err());
        assert!(DynkinSpec::from_type("A", None).is_err());
        assert!(DynkinSpec::from_type("B", Some(3)).is_err());
        assert!(DynkinSpec::from_type("E6", Some(7)).is_err());
    }
}
