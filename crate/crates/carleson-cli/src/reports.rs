//! Report document schemas. Field order is fixed by the struct layout and
//! all sweeps are deterministic, so identical inputs produce byte-identical
//! reports.

use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct GeometricReport {
    pub command: String,
    pub alpha: f64,
    pub constant: f64,
    pub witness_omega: f64,
    pub witness_r: f64,
    pub method: String,
}

#[derive(Debug, Serialize)]
pub struct EmbeddingReport {
    pub command: String,
    pub alpha: f64,
    pub delegated: bool,
    pub note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constant: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_omega: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_r: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi_lbeta_norm: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domain: Option<[f64; 2]>,
}

#[derive(Debug, Serialize)]
pub struct RktReportDoc {
    pub command: String,
    pub p: f64,
    pub q: f64,
    pub sup_ratio: f64,
    pub witness_re: f64,
    pub witness_im: f64,
    pub grid: String,
    pub grid_too_small: bool,
}

#[derive(Debug, Serialize)]
pub struct AdmissibilityReport {
    pub command: String,
    pub p: f64,
    /// `null` encodes the infinite horizon.
    pub horizon: Option<f64>,
    /// Lower bound of the admissibility constant: a sup over the probe
    /// family only, never over all of L^p.
    pub probe_sup: f64,
    pub witness_input: String,
    pub probe_count: usize,
    pub xminus_theta: f64,
    pub xminus_norm: f64,
}

#[derive(Debug, Serialize)]
pub struct WeissReportDoc {
    pub command: String,
    pub p: f64,
    pub q: f64,
    pub sup: f64,
    pub witness_lambda: f64,
}

#[derive(Debug, Serialize)]
pub struct SquareFunctionReport {
    pub command: String,
    pub p: f64,
    pub q: f64,
    /// Square-function norm of the all-ones state vector.
    pub norm: f64,
    pub state_norm: f64,
    pub ratio: f64,
}

#[derive(Debug, Serialize)]
pub struct ReciprocalReport {
    pub command: String,
    pub p: f64,
    pub p_prime: f64,
    pub t_horizon: f64,
    pub epsilon: f64,
    pub probe_ratio: f64,
    pub witness_input: String,
    pub c_t: f64,
    pub note: String,
}

#[derive(Debug, Serialize)]
pub struct BesselCase {
    pub lambda_re: f64,
    pub lambda_im: f64,
    pub t: f64,
    pub variant: String,
    pub lhs_re: f64,
    pub lhs_im: f64,
    pub rhs_re: f64,
    pub rhs_im: f64,
    pub residual: f64,
}

#[derive(Debug, Serialize)]
pub struct BesselVerifyReport {
    pub command: String,
    pub tolerance: f64,
    pub max_residual: f64,
    pub all_within_tolerance: bool,
    pub cases: Vec<BesselCase>,
}

#[derive(Debug, Serialize)]
pub struct GeometricEvidenceRow {
    pub r: f64,
    pub tent_mass: f64,
    pub bound: f64,
}

#[derive(Debug, Serialize)]
pub struct GrowthRow {
    pub n: u32,
    pub x_lo: f64,
    pub x_hi: f64,
    /// Gap integral of the exact maximal function to the power beta.
    pub integral: f64,
    /// The same integral for the symmetric-tent lower envelope
    /// mu(T(-x-1, x+1)) / (2(x+1)).
    pub integral_envelope: f64,
    pub scaled: f64,
    pub cumulative: f64,
    pub cumulative_envelope: f64,
}

#[derive(Debug, Serialize)]
pub struct CounterexampleReport {
    pub command: String,
    pub epsilon: f64,
    pub gamma: f64,
    pub n_modes: usize,
    pub q: f64,
    pub alpha: f64,
    pub beta: f64,
    /// Geometric side: tent masses over balls B(0, 2r) stay below
    /// (2/(1-eps)) (2r)^{(1-eps)/gamma}.
    pub geometric_bound_satisfied: bool,
    pub geometric_rows: Vec<GeometricEvidenceRow>,
    /// Embedding side: the exact maximal-function integrals dominate
    /// c/(n+1); the symmetric-tent envelope integrals scale like 1/(n+1),
    /// so their cumulative sums grow logarithmically.
    pub fitted_c: f64,
    pub log_fit_intercept: f64,
    pub log_fit_slope: f64,
    pub log_fit_r_squared: f64,
    pub growth_rows: Vec<GrowthRow>,
}
