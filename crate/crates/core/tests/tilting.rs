use clustertilt::tilting::{complements, enumerate_tilting, exchange_graph, mutate_tilting};
use clustertilt::{ClusterCategory, DynkinSpec};

fn census(spec: DynkinSpec, expected: usize) {
    let c = ClusterCategory::build(&spec).unwrap();
    let cliques = enumerate_tilting(&c).unwrap();
    let graph = exchange_graph(&c).unwrap();
    assert_eq!(cliques.len(), expected, "{spec}");
    let mut bfs = graph.vertices.clone();
    bfs.sort();
    assert_eq!(bfs, cliques, "{spec}: methods disagree");
    assert!(graph.is_regular(spec.rank()));
    for t in &cliques {
        assert!(c.is_rigid(&t.summands));
    }
}

#[test]
fn small_censuses() {
    census(DynkinSpec::a(1).unwrap(), 2);
    census(DynkinSpec::a(2).unwrap(), 5);
    census(DynkinSpec::a(3).unwrap(), 14);
    census(DynkinSpec::a(4).unwrap(), 42);
    census(DynkinSpec::d(4).unwrap(), 50);
    census(DynkinSpec::d(5).unwrap(), 182);
}

#[test]
fn e6_census() {
    census(DynkinSpec::e(6).unwrap(), 833);
}

#[test]
fn complements_are_incompatible() {
    for spec in [DynkinSpec::a(4).unwrap(), DynkinSpec::d(5).unwrap()] {
        let c = ClusterCategory::build(&spec).unwrap();
        for t in enumerate_tilting(&c).unwrap() {
            for &k in &t.summands {
                let almost: Vec<usize> = t.summands.iter().copied().filter(|&x| x != k).collect();
                let (a, b) = complements(&c, &almost).unwrap();
                assert!(a < b);
                assert!(a == k || b == k);
                assert!(c.ext1(a, b) >= 1);
                let (u, k2) = mutate_tilting(&c, &t, k).unwrap();
                assert_eq!(mutate_tilting(&c, &u, k2).unwrap().0, t);
            }
        }
    }
}

#[test]
fn exchange_triangle_of_the_fixed_orientation() {
    // orientation 1 -> 3 <- 2, 3 -> 4 -> ... -> n; M2 = τ^{-1} P2 and the
    // exchange through P1 -> M2 has P_n as the other complement
    for n in 5..=6 {
        let c = ClusterCategory::build(&DynkinSpec::d(n).unwrap()).unwrap();
        let h = c.module_category();
        let p1 = c.projective(0);
        let pn = c.projective(n - 1);
        let m2 = h.tau_inv(h.projective(1)).unwrap();
        let mut checked = 0;
        for t in enumerate_tilting(&c).unwrap() {
            if !(t.contains(m2) && t.contains(p1)) {
                continue;
            }
            // P1 -> M2 must be the right approximation: no other summand maps to M2
            let others_map = t.summands.iter().any(|&x| x != m2 && x != p1 && c.hom(x, m2) > 0);
            if others_map {
                continue;
            }
            let almost: Vec<usize> = t.summands.iter().copied().filter(|&x| x != m2).collect();
            let (a, b) = complements(&c, &almost).unwrap();
            assert_eq!((a.min(b), a.max(b)), (m2.min(pn), m2.max(pn)));
            checked += 1;
        }
        assert!(checked > 0);
    }
}
