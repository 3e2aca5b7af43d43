//! Browser bindings for three sector-kit computations: the braid-statistics
//! positivity heatmap, Jones–Wenzl trace curves and finite-group character
//! tables. The plain functions are usable natively; the `wasm_bindgen`
//! exports only flatten their results for JavaScript.

use sector_kit::braid::{grid, jw_trace_sequence, scan_point, ChannelFate, HeckeParams, ScanConfig};
use sector_kit::group::{character_table, class_fusion, conjugacy_classes, library};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Heatmap cell for a point that passes every positivity check.
pub const SURVIVES: u16 = 0;

/// Rows follow `α` from 0 to `alpha_max`, columns follow `η₁` over `[0, 1]`.
/// A cell holds [`SURVIVES`] or the level where positivity first fails.
pub fn positivity_heatmap(alpha_max: f64, alpha_step: f64, eta_step: f64, n_max: usize) -> (usize, usize, Vec<u16>) {
    let alphas = grid(0.0, alpha_max, alpha_step);
    let etas = grid(0.0, 1.0, eta_step);
    let cfg = ScanConfig { n_max, ..ScanConfig::default() };
    let mut cells = Vec::with_capacity(alphas.len() * etas.len());
    for &a in &alphas {
        for &e in &etas {
            let p = scan_point(a, e, &cfg);
            let level = p
                .channels
                .iter()
                .filter_map(|c| match c {
                    ChannelFate::Failed { level } => Some(*level),
                    _ => None,
                })
                .min();
            cells.push(level.map_or(SURVIVES, |l| l.min(u16::MAX as usize) as u16));
        }
    }
    (alphas.len(), etas.len(), cells)
}

/// `tr E^{(m)}` for `m = 1..=strands` at `samples` values of δ spread over
/// `[delta_min, delta_max]`, row-major by δ. Entries past a vanishing trace
/// are NaN.
pub fn trace_curves(delta_min: f64, delta_max: f64, samples: usize, strands: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(samples * strands);
    for i in 0..samples {
        let t = if samples > 1 { i as f64 / (samples - 1) as f64 } else { 0.0 };
        let delta = delta_min + t * (delta_max - delta_min);
        let mut row = jw_trace_sequence(&HeckeParams::from_delta(delta), strands);
        if let Some(k) = row.iter().position(|x| !x.is_finite() || x.abs() < 1e-12) {
            row[k] = 0.0;
            row[k + 1..].iter_mut().for_each(|x| *x = f64::NAN);
        }
        out.extend(row);
    }
    out
}

/// Character table of a library group as JSON: class sizes, dimensions and
/// `chi[l][j]` as `[re, im]`.
pub fn character_table_json(name: &str) -> Result<String, String> {
    let g = library::by_name(name).ok_or_else(|| format!("unknown group {name:?}"))?;
    let cl = conjugacy_classes(&g);
    let f = class_fusion(&g, &cl).map_err(|e| e.to_string())?;
    let t = character_table(&g, &cl, &f).map_err(|e| e.to_string())?;
    let round = |x: f64| if x.abs() < 1e-12 { 0.0 } else { (x * 1e9).round() / 1e9 };
    let chi: Vec<Vec<[f64; 2]>> = (0..t.chi.nrows())
        .map(|l| (0..t.chi.ncols()).map(|j| [round(t.chi[(l, j)].re), round(t.chi[(l, j)].im)]).collect())
        .collect();
    Ok(json!({
        "order": g.order(),
        "class_sizes": t.class_sizes,
        "representatives": cl.reps.iter().map(|&i| g.element(i).images().to_vec()).collect::<Vec<_>>(),
        "dims": t.dims,
        "chi": chi,
    })
    .to_string())
}

#[wasm_bindgen]
pub struct Heatmap {
    rows: usize,
    cols: usize,
    cells: Vec<u16>,
}

#[wasm_bindgen]
impl Heatmap {
    #[wasm_bindgen(getter)]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[wasm_bindgen(getter)]
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn cells(&self) -> Vec<u16> {
        self.cells.clone()
    }
}

#[wasm_bindgen]
pub fn scan_heatmap(alpha_max: f64, alpha_step: f64, eta_step: f64, n_max: usize) -> Heatmap {
    // keep the page responsive
    let alpha_step = alpha_step.max(1e-4);
    let eta_step = eta_step.max(1e-4);
    let (rows, cols, cells) = positivity_heatmap(alpha_max.clamp(0.0, 1.5), alpha_step, eta_step, n_max.min(500));
    Heatmap { rows, cols, cells }
}

#[wasm_bindgen]
pub fn jw_trace_curves(delta_min: f64, delta_max: f64, samples: usize, strands: usize) -> Vec<f64> {
    trace_curves(delta_min.clamp(0.0, 2.0), delta_max.clamp(0.0, 2.0), samples.min(4000), strands.min(64))
}

#[wasm_bindgen]
pub fn group_character_table(name: &str) -> Result<String, JsValue> {
    character_table_json(name).map_err(|e| JsValue::from_str(&e))
}
