//! Report shapes shared by the JSON and CSV writers.
//!
//! Both writers read from the same structs, so the two formats always carry
//! the same numbers. JSON uses the shortest digit string that round-trips;
//! CSV prints 17 significant digits. Either parses back to the exact f64.

use serde::Serialize;

/// Ordering of amplitude components everywhere a four-vector appears.
pub const BASIS: [&str; 4] = ["HH", "HV", "VH", "VV"];

/// Top-level envelope common to every command.
#[derive(Serialize)]
pub struct Report<P: Serialize, R: Serialize> {
    pub command: &'static str,
    pub parameters: P,
    pub results: R,
    pub version: &'static str,
}

pub fn render_json<P: Serialize, R: Serialize>(report: &Report<P, R>) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}

pub fn render_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut text = header.join(",");
    text.push('\n');
    for row in rows {
        debug_assert_eq!(row.len(), header.len());
        text.push_str(&row.join(","));
        text.push('\n');
    }
    text
}

/// 17 significant digits: enough that parsing the field recovers the exact
/// binary value written by the JSON side.
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Optional cells render as empty fields, mirroring JSON `null`.
pub fn opt17(x: Option<f64>) -> String {
    x.map(sig17).unwrap_or_default()
}

#[derive(Serialize)]
pub struct SwapParameters {
    pub theta1: f64,
    pub theta2: f64,
    pub gamma_l: Option<f64>,
    pub bsm: &'static str,
}

#[derive(Serialize)]
pub struct OutcomeReport {
    pub class: &'static str,
    pub probability: f64,
    pub es_after: Option<f64>,
    /// Post-measurement amplitudes in `BASIS` order, flattened re,im pairs.
    /// Absent for outcome classes whose post state is undefined.
    pub amplitudes: Option<[f64; 8]>,
}

#[derive(Serialize)]
pub struct SwapResults {
    pub basis: [&'static str; 4],
    pub outcomes: Vec<OutcomeReport>,
    pub mean_es: Option<f64>,
}

#[derive(Serialize)]
pub struct SweepParameters {
    pub theta_min: f64,
    pub theta_max: f64,
    pub steps: u64,
}

#[derive(Serialize)]
pub struct SweepRow {
    pub theta: f64,
    pub p_phi_plus: f64,
    pub p_phi_minus: f64,
    pub p_psi_plus: f64,
    pub p_psi_minus: f64,
    pub mean_es: f64,
    pub conservation_residual: f64,
}

#[derive(Serialize)]
pub struct SweepResults {
    pub rows: Vec<SweepRow>,
}

#[derive(Serialize)]
pub struct EnsembleParameters {
    pub theta1: f64,
    pub theta2: f64,
    pub gamma_l: Option<f64>,
    pub pairs: u64,
    pub seed: u64,
    pub workers: u32,
    pub bsm: &'static str,
}

#[derive(Serialize)]
pub struct ClassRow {
    pub class: &'static str,
    pub count: u64,
    pub empirical_probability: f64,
    pub standard_error: f64,
}

#[derive(Serialize)]
pub struct EnsembleResults {
    pub classes: Vec<ClassRow>,
    pub bell_fraction: f64,
    pub empirical_mean_es: Option<f64>,
    pub pairs: u64,
    pub workers: u32,
}

#[derive(Serialize)]
pub struct CascadeParameters {
    pub theta1: f64,
    pub gamma_l: Option<f64>,
    pub mode: &'static str,
    pub levels: u32,
    pub tol: f64,
    pub bsm: &'static str,
    pub pairs: Option<u64>,
    pub seed: Option<u64>,
}

#[derive(Serialize)]
pub struct LevelRow {
    pub level: u32,
    pub theta: f64,
    pub bell_yield_this_level: f64,
    pub residual_fraction: f64,
    pub cumulative_bell_fraction: f64,
}

#[derive(Serialize)]
pub struct CascadeResults {
    pub limit_target: f64,
    pub converged_at: Option<u32>,
    pub levels: Vec<LevelRow>,
}

#[derive(Serialize)]
pub struct MeasureParameters {
    pub amps: [f64; 8],
}

#[derive(Serialize)]
pub struct MeasureResults {
    pub basis: [&'static str; 4],
    pub es: f64,
    pub entropy: f64,
    /// The normalized state actually measured, flattened re,im pairs.
    pub amplitudes: [f64; 8],
}
