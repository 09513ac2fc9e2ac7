use clustertilt::dynkin::positive_roots;
use clustertilt::{ClusterCategory, DynkinSpec};

fn all_specs() -> Vec<DynkinSpec> {
    let mut specs: Vec<DynkinSpec> = (1..=8).map(|n| DynkinSpec::a(n).unwrap()).collect();
    specs.extend((4..=8).map(|n| DynkinSpec::d(n).unwrap()));
    specs.extend((6..=8).map(|n| DynkinSpec::e(n).unwrap()));
    specs
}

#[test]
fn object_counts_are_roots_plus_rank() {
    for spec in all_specs() {
        let c = ClusterCategory::build(&spec).unwrap();
        assert_eq!(c.len(), positive_roots(&spec).len() + spec.rank(), "{spec}");
    }
    let n = |s: DynkinSpec| ClusterCategory::build(&s).unwrap().len();
    assert_eq!(n(DynkinSpec::a(5).unwrap()), 20);
    assert_eq!(n(DynkinSpec::d(7).unwrap()), 49);
    assert_eq!(n(DynkinSpec::e(6).unwrap()), 42);
    assert_eq!(n(DynkinSpec::e(7).unwrap()), 70);
    assert_eq!(n(DynkinSpec::e(8).unwrap()), 128);
}

fn orbit_sizes(spec: DynkinSpec) -> Vec<usize> {
    let c = ClusterCategory::build(&spec).unwrap();
    let mut sizes: Vec<usize> = c.tau_orbits().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    sizes
}

#[test]
fn exceptional_orbit_structure() {
    assert_eq!(orbit_sizes(DynkinSpec::e(6).unwrap()), vec![7, 7, 14, 14]);
    assert_eq!(orbit_sizes(DynkinSpec::e(7).unwrap()), vec![10; 7]);
    assert_eq!(orbit_sizes(DynkinSpec::e(8).unwrap()), vec![16; 8]);
}

#[test]
fn two_calabi_yau_symmetry_and_rigidity() {
    for spec in all_specs() {
        let c = ClusterCategory::build(&spec).unwrap();
        for x in 0..c.len() {
            assert_eq!(c.hom(x, x), 1, "{spec} {}", c.name(x));
            assert_eq!(c.ext1(x, x), 0);
            for y in 0..c.len() {
                assert_eq!(c.ext1(x, y), c.ext1(y, x), "{spec} {} {}", c.name(x), c.name(y));
            }
        }
    }
}

#[test]
fn tau_is_a_fixed_point_free_bijection_on_a_n() {
    for n in 1..=6 {
        let c = ClusterCategory::build(&DynkinSpec::a(n).unwrap()).unwrap();
        let mut image: Vec<usize> = (0..c.len()).map(|x| c.tau(x)).collect();
        image.sort_unstable();
        assert_eq!(image, (0..c.len()).collect::<Vec<_>>());
        assert!((0..c.len()).all(|x| c.tau(x) != x));
        for x in 0..c.len() {
            assert_eq!(c.tau_inv(c.tau(x)), x);
        }
    }
}

#[test]
fn meshes_are_symmetric_in_the_quotient() {
    for spec in all_specs() {
        let c = ClusterCategory::build(&spec).unwrap();
        assert!(c.ar_quiver().check_mesh_symmetry(), "{spec}");
    }
}

#[test]
fn alpha_statistics() {
    for n in 1..=7 {
        let c = ClusterCategory::build(&DynkinSpec::a(n).unwrap()).unwrap();
        assert!(c.alpha() <= 2);
        if n >= 3 {
            assert_eq!(c.alpha(), 2);
        }
    }
    for n in 4..=7 {
        let c = ClusterCategory::build(&DynkinSpec::d(n).unwrap()).unwrap();
        let q = c.spec().quiver();
        for x in 0..c.len() {
            // middle terms sit on the neighbouring rows of ZQ
            let row = c.coordinate(x).1;
            assert_eq!(c.alpha_count(x), q.valency(row));
            assert_eq!(c.alpha_count(x) == 3, row == 2);
        }
    }
    let e6 = ClusterCategory::build(&DynkinSpec::e(6).unwrap()).unwrap();
    for x in 0..e6.len() {
        assert_eq!(e6.alpha_count(x) == 3, e6.coordinate(x).1 == 2);
    }
}

#[test]
fn perpendicular_counts() {
    let e7 = ClusterCategory::build(&DynkinSpec::e(7).unwrap()).unwrap();
    assert_eq!(e7.perp_objects(e7.shifted_projective(5)).len(), 42);
    let e8 = ClusterCategory::build(&DynkinSpec::e(8).unwrap()).unwrap();
    assert_eq!(e8.perp_objects(e8.shifted_projective(6)).len(), 70);
    assert_eq!(e8.perp_objects(e8.shifted_projective(5)).len(), 44);
}

#[test]
fn other_orientations_give_the_same_census() {
    let spec = DynkinSpec::e(6).unwrap().with_orientation("2>1,2>3,3>4,5>4,3>6").unwrap();
    let c = ClusterCategory::build(&spec).unwrap();
    assert_eq!(c.len(), 42);
    let mut sizes: Vec<usize> = c.tau_orbits().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![7, 7, 14, 14]);
}
