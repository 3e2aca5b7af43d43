use std::f64::consts::PI;

use sector_kit_web::{character_table_json, positivity_heatmap, trace_curves, SURVIVES};

#[test]
fn heatmap_survivors_sit_on_quantized_rows() {
    let step = 0.01;
    let (rows, cols, cells) = positivity_heatmap(0.7, step, 0.01, 60);
    assert_eq!(cells.len(), rows * cols);
    for r in 0..rows {
        if cells[r * cols..(r + 1) * cols].contains(&SURVIVES) {
            let a = r as f64 * step;
            let near = a == 0.0 || (4..=40).any(|q| (a - PI / q as f64).abs() <= step);
            assert!(near, "survivor at α = {a}");
        }
    }
    // η₁ = 1 at α = 0 is the permutation-group point
    assert_eq!(cells[cols - 1], SURVIVES);
}

#[test]
fn trace_curves_match_quantum_integers() {
    let strands = 8;
    let v = trace_curves(0.5, 2.0, 7, strands);
    for (i, row) in v.chunks(strands).enumerate() {
        let delta = 0.5 + 0.25 * i as f64;
        let a = (delta / 2.0).acos();
        for (m, &x) in row.iter().enumerate() {
            let m = m + 1;
            if x.is_nan() {
                continue;
            }
            let want = if a == 0.0 {
                (m + 1) as f64 / 2f64.powi(m as i32)
            } else {
                ((m + 1) as f64 * a).sin() / a.sin() / delta.powi(m as i32)
            };
            assert!((x - want).abs() < 1e-9, "δ = {delta}, m = {m}: {x} vs {want}");
        }
    }
}

#[test]
fn quaternion_table() {
    let v: serde_json::Value = serde_json::from_str(&character_table_json("q8").unwrap()).unwrap();
    assert_eq!(v["order"], 8);
    assert_eq!(v["dims"], serde_json::json!([1, 1, 1, 1, 2]));
    assert!(character_table_json("e8").is_err());
}
