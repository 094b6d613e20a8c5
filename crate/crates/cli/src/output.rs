//! Rendering of results as CSV or JSON text.
//!
//! CSV carries a header row and decimal values with 12 significant digits;
//! complex amplitudes appear as paired `re`,`im` columns. JSON mirrors the
//! same fields. Output is byte-identical across runs with equal inputs.

use serde::Serialize;

/// 12 significant digits, scientific; negative zero is normalized away.
pub fn sig12(x: f64) -> String {
    format!("{:.11e}", norm_zero(x))
}

/// Collapse -0.0 onto 0.0 so formatting is deterministic across code paths.
pub fn norm_zero(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

pub fn render_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("output structs always serialize");
    text.push('\n');
    text
}

pub fn csv_table(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
pub struct AmplitudeOut {
    pub basis: &'static str,
    pub re: f64,
    pub im: f64,
}

#[derive(Serialize)]
pub struct PrepareOut {
    pub alpha: f64,
    pub theta: f64,
    pub psi: f64,
    pub via_circuit: bool,
    pub amplitudes: Vec<AmplitudeOut>,
}

#[derive(Serialize)]
pub struct InvariantsOut {
    pub det_re: f64,
    pub det_im: f64,
    pub cross_re: f64,
    pub cross_im: f64,
}

#[derive(Serialize)]
pub struct ExtractOut {
    pub alpha: f64,
    pub theta: f64,
    pub psi: f64,
    pub psi_identifiable: bool,
    pub concurrence: f64,
    pub invariants: InvariantsOut,
}

#[derive(Serialize)]
pub struct MatrixEntryOut {
    pub row: usize,
    pub col: usize,
    pub re: f64,
    pub im: f64,
}

#[derive(Serialize)]
pub struct TwirlOut {
    pub entries: Vec<MatrixEntryOut>,
}

#[derive(Serialize)]
pub struct CheckTwirlOut {
    pub samples: usize,
    pub seed: u64,
    pub max_abs_deviation: f64,
}

#[derive(Serialize)]
pub struct InfoGainOut {
    pub p_outcome: [f64; 2],
    pub gain_per_outcome: [f64; 2],
    pub avg_gain: f64,
}

#[derive(Serialize)]
pub struct ScanPointOut {
    pub axis_value: f64,
    pub avg_gain: f64,
}

#[derive(Serialize)]
pub struct ScanOut {
    pub points: Vec<ScanPointOut>,
}

#[derive(Serialize)]
pub struct Scan2dPointOut {
    pub a_value: f64,
    pub b_value: f64,
    pub avg_gain: f64,
}

#[derive(Serialize)]
pub struct Scan2dOut {
    pub points: Vec<Scan2dPointOut>,
}

#[derive(Serialize)]
pub struct FixedValueOut {
    pub param: &'static str,
    pub value: f64,
}

#[derive(Serialize)]
pub struct TableEntryOut {
    pub encoding: &'static str,
    pub prior: &'static str,
    pub fixed: [FixedValueOut; 2],
    pub avg_gain: f64,
}

#[derive(Serialize)]
pub struct TableOut {
    pub entries: Vec<TableEntryOut>,
}
