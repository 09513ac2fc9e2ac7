use clustertilt::dn::DnRowInfo;
use clustertilt::{ClusterCategory, DynkinSpec};

fn d(n: usize) -> (ClusterCategory, DnRowInfo) {
    let c = ClusterCategory::build(&DynkinSpec::d(n).unwrap()).unwrap();
    let info = DnRowInfo::build(&c).unwrap();
    (c, info)
}

#[test]
fn compatible_alphas_follow_the_twisted_orbit() {
    for n in 5..=8 {
        let (c, info) = d(n);
        for y in info.alpha_objects() {
            let mut expected = vec![info.phi(y).unwrap()];
            let mut z = y;
            for _ in 1..n {
                // τ^{-i} φ^i Y, built one step at a time
                z = c.tau_inv(info.phi(z).unwrap());
                expected.push(z);
            }
            expected.sort_unstable();
            expected.dedup();
            assert_eq!(info.compatible_alphas(&c, y), expected, "D{n} {}", c.name(y));
        }
    }
}

#[test]
fn gamma_objects_are_compatible_except_neighbours() {
    for n in 4..=8 {
        let (c, info) = d(n);
        for x in info.gamma_objects() {
            let support = c.ext_support(x);
            for g in info.gamma_objects() {
                let near = g == c.tau(x) || g == c.tau_inv(x);
                assert_eq!(support.contains(&g), !near, "D{n} {} {}", c.name(x), c.name(g));
            }
        }
    }
}

#[test]
fn largest_compatible_gamma_set_is_half_the_rank() {
    for n in 4..=8 {
        let (c, info) = d(n);
        let gammas = info.gamma_objects();
        let mut best = 0;
        for mask in 0u32..(1 << gammas.len()) {
            let chosen: Vec<usize> =
                gammas.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &g)| g).collect();
            if c.is_rigid(&chosen) {
                best = best.max(chosen.len());
            }
        }
        assert_eq!(best, n / 2, "D{n}");
    }
}

#[test]
fn gamma_of_maps_to_both_translates() {
    for n in 4..=7 {
        let (c, info) = d(n);
        for y in info.alpha_objects() {
            let g = info.gamma_of(y).unwrap();
            assert!(info.is_gamma(g));
            assert!(c.hom(g, c.tau(y)) >= 1);
            assert!(c.hom(g, c.tau(info.phi(y).unwrap())) >= 1);
        }
    }
}

#[test]
fn phi_extends_to_an_automorphism() {
    for n in 4..=7 {
        let (c, info) = d(n);
        for x in 0..c.len() {
            assert_eq!(info.phi_all(c.tau(x)), c.tau(info.phi_all(x)));
            for y in 0..c.len() {
                assert_eq!(c.hom(x, y), c.hom(info.phi_all(x), info.phi_all(y)));
            }
        }
    }
}
