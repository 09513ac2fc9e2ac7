use clustertilt_web::{category_grid_json, ext_support_json, mutate_quiver_json, tilting_algebra_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn grid_lists_every_object() {
    let g = parse(&category_grid_json("E6", 6).unwrap());
    assert_eq!(g["objects"].as_array().unwrap().len(), 42);
    assert_eq!(g["label"], "E6");
    assert!(category_grid_json("Q", 3).is_err());
    // every AR arrow points right in the drawing
    for spec in [("A", 5), ("D", 6), ("E7", 7)] {
        let g = parse(&category_grid_json(spec.0, spec.1).unwrap());
        let x = |i: usize| g["objects"][i]["column"].as_f64().unwrap() + g["objects"][i]["offset"].as_f64().unwrap();
        let objects = g["objects"].as_array().unwrap();
        let last_in_row = |r: u64| {
            objects.iter().filter(|o| o["row"] == r).map(|o| o["column"].as_i64().unwrap()).max().unwrap()
        };
        for a in g["arrows"].as_array().unwrap() {
            let (s, t) = (a[0].as_u64().unwrap() as usize, a[1].as_u64().unwrap() as usize);
            let dx = x(t) - x(s);
            if dx < 0.0 {
                // leaves the fundamental domain on the right and re-enters on the left
                let o = &objects[s];
                assert_eq!(o["column"].as_i64().unwrap(), last_in_row(o["row"].as_u64().unwrap()), "{spec:?} {s}->{t}");
                assert!(x(t) < 1.0, "{spec:?} {s}->{t}");
            } else {
                assert!(dx > 0.0 && dx < 1.0 + 1e-9, "{spec:?} {s}->{t}");
            }
        }
    }
}

#[test]
fn ext_support_partitions_the_objects() {
    let s = parse(&ext_support_json("D", 4, 0).unwrap());
    let compatible = s["compatible"].as_array().unwrap().len();
    let ext = s["ext"].as_array().unwrap().len();
    assert_eq!(compatible + ext, 16);
    assert!(ext_support_json("D", 4, 16).is_err());
}

#[test]
fn mutation_round_trip() {
    let q = r#"{"vertices":3,"arrows":[[1,2],[2,3]]}"#;
    let once = mutate_quiver_json(q, 2).unwrap();
    assert_eq!(parse(&once)["arrows"], serde_json::json!([[1, 3], [2, 1], [3, 2]]));
    assert_eq!(parse(&mutate_quiver_json(&once, 2).unwrap()), parse(q));
    assert!(mutate_quiver_json(q, 0).is_err());
    assert!(mutate_quiver_json("[]", 1).is_err());
}

#[test]
fn algebra_view() {
    let a = parse(&tilting_algebra_json("A", 3, 0).unwrap());
    assert_eq!(a["count"], 14);
    assert_eq!(a["special_biserial"], true);
    let wrapped = parse(&tilting_algebra_json("A", 3, 14).unwrap());
    assert_eq!(wrapped["index"], 0);
    let e6 = tilting_algebra_json("E6", 6, 5).unwrap();
    assert_eq!(parse(&e6)["special_biserial"], false);
}
