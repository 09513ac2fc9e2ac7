use clustertilt::quiver::{canonical_form, is_in_mutation_class_a};
use clustertilt::Quiver;
use proptest::prelude::*;

/// Random simply laced quivers without 2-cycles on up to 7 vertices.
fn quiver() -> impl Strategy<Value = Quiver> {
    (1usize..=7).prop_flat_map(|n| {
        proptest::collection::vec(0u8..3, n * (n - 1) / 2).prop_map(move |cells| {
            let mut arrows = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    match cells[k] {
                        1 => arrows.push((i, j)),
                        2 => arrows.push((j, i)),
                        _ => {}
                    }
                    k += 1;
                }
            }
            Quiver::from_arrows(n, &arrows).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn mutation_is_an_involution(q in quiver(), v in 0usize..7) {
        let v = v % q.vertex_count();
        prop_assert_eq!(q.mutate(v).unwrap().mutate(v).unwrap(), q);
    }

    #[test]
    fn canonical_form_ignores_labels(q in quiver(), seed in any::<u64>()) {
        let n = q.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_form(&q.relabel(&perm)), canonical_form(&q));
    }

    #[test]
    fn class_a_is_closed_under_mutation(q in quiver(), v in 0usize..7) {
        let v = v % q.vertex_count();
        if let Ok(true) = is_in_mutation_class_a(&q) {
            prop_assert!(is_in_mutation_class_a(&q.mutate(v).unwrap()).unwrap());
        }
    }
}
