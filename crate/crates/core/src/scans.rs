//! Parameter sweeps, measurement sensitivity, and optimal-setting searches.
//!
//! Everything here drives [`crate::infogain::info_gain`] over grids of the
//! two fixed parameters of an encoding scheme. Grid cells are independent
//! and evaluated in grid order, so results are deterministic and 2-D slices
//! agree bit-for-bit with the corresponding 1-D scans at shared nodes.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::infogain::{info_gain, EncodingScheme, ParamKind, PriorModel, QuadratureConfig};
use crate::math;
use crate::relative::RelativeParams;

/// An inclusive axis over one parameter: `n ≥ 2` nodes from `lo` to `hi`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanGrid {
    param: ParamKind,
    lo: f64,
    hi: f64,
    n: usize,
}

impl ScanGrid {
    pub fn new(param: ParamKind, lo: f64, hi: f64, n: usize) -> Result<Self> {
        let (rlo, rhi) = param.range();
        if !lo.is_finite() || !hi.is_finite() || lo >= hi {
            return Err(Error::InvalidInput(format!(
                "grid needs lo < hi, got [{lo}, {hi}]"
            )));
        }
        if lo < rlo - 1e-9 || hi > rhi + 1e-9 {
            return Err(Error::InvalidInput(format!(
                "grid [{lo}, {hi}] exceeds the {} range [{rlo}, {rhi}]",
                param.name()
            )));
        }
        if n < 2 {
            return Err(Error::InvalidInput(format!(
                "grid needs at least 2 nodes, got {n}"
            )));
        }
        Ok(Self {
            param,
            lo: math::clamp(lo, rlo, rhi),
            hi: math::clamp(hi, rlo, rhi),
            n,
        })
    }

    /// The full range of `param` with `n` nodes.
    pub fn full_range(param: ParamKind, n: usize) -> Result<Self> {
        let (lo, hi) = param.range();
        Self::new(param, lo, hi, n)
    }

    pub fn param(&self) -> ParamKind {
        self.param
    }

    pub fn nodes(&self) -> Vec<f64> {
        let h = (self.hi - self.lo) / (self.n - 1) as f64;
        (0..self.n)
            .map(|k| {
                if k == self.n - 1 {
                    self.hi
                } else {
                    self.lo + h * k as f64
                }
            })
            .collect()
    }
}

/// What a scan was computed with.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanMetadata {
    pub scheme: EncodingScheme,
    pub prior: PriorModel,
    pub quad: QuadratureConfig,
}

/// A 1-D sweep: `gains[k]` is the average information gain with the varied
/// fixed parameter at `axis[k]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanResult {
    pub axis: Vec<f64>,
    pub gains: Vec<f64>,
    pub meta: ScanMetadata,
}

/// A 2-D sweep in row-major order: `gains[i * b_axis.len() + j]` pairs
/// `a_axis[i]` with `b_axis[j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Scan2dResult {
    pub a_axis: Vec<f64>,
    pub b_axis: Vec<f64>,
    pub gains: Vec<f64>,
    pub meta: ScanMetadata,
}

/// Magnitude of the sensitivity `|∂ p(Π₀|γ) / ∂x|` of the singlet
/// probability `(1 − cos θ)(1 + sin 2α cos ψ)/4`:
///
/// ```text
/// ∂/∂θ:  sin θ (1 + sin 2α cos ψ) / 4
/// ∂/∂ψ:  (1 − cos θ) sin 2α sin ψ / 4
/// ∂/∂α:  (1 − cos θ) cos 2α cos ψ / 2
/// ```
pub fn sensitivity(p: &RelativeParams, wrt: ParamKind) -> f64 {
    let (a, t, ps) = (p.alpha(), p.theta(), p.psi());
    let value = match wrt {
        ParamKind::Theta => math::sin(t) * (1.0 + math::sin(2.0 * a) * math::cos(ps)) / 4.0,
        ParamKind::Psi => (1.0 - math::cos(t)) * math::sin(2.0 * a) * math::sin(ps) / 4.0,
        ParamKind::Alpha => (1.0 - math::cos(t)) * math::cos(2.0 * a) * math::cos(ps) / 2.0,
    };
    value.abs()
}

fn check_vary_target(template: &EncodingScheme, param: ParamKind) -> Result<()> {
    if param == template.message() {
        return Err(Error::InvalidConfiguration(format!(
            "cannot scan over {}: it is the message parameter",
            param.name()
        )));
    }
    if template.fixed_value(param).is_none() {
        return Err(Error::InvalidConfiguration(format!(
            "{} is not a fixed parameter of this scheme",
            param.name()
        )));
    }
    Ok(())
}

/// Sweep one fixed parameter of `template` over `vary`, evaluating the
/// average information gain at each node.
pub fn scan1d(
    template: &EncodingScheme,
    vary: &ScanGrid,
    prior: &PriorModel,
    quad: &QuadratureConfig,
) -> Result<ScanResult> {
    check_vary_target(template, vary.param())?;
    crate::infogain::validate_support(template, prior)?;
    let axis = vary.nodes();
    let mut gains = Vec::with_capacity(axis.len());
    for &value in &axis {
        let scheme = template.with_fixed(vary.param(), value)?;
        let gain = info_gain(&scheme, prior, quad).avg_gain;
        debug_assert!((0.0..=1.0 + 1e-9).contains(&gain));
        gains.push(gain);
    }
    Ok(ScanResult {
        axis,
        gains,
        meta: ScanMetadata {
            scheme: *template,
            prior: prior.clone(),
            quad: *quad,
        },
    })
}

/// Sweep both fixed parameters of `template` over a 2-D grid.
pub fn scan2d(
    template: &EncodingScheme,
    grid_a: &ScanGrid,
    grid_b: &ScanGrid,
    prior: &PriorModel,
    quad: &QuadratureConfig,
) -> Result<Scan2dResult> {
    check_vary_target(template, grid_a.param())?;
    check_vary_target(template, grid_b.param())?;
    if grid_a.param() == grid_b.param() {
        return Err(Error::InvalidConfiguration(format!(
            "both grids target {}",
            grid_a.param().name()
        )));
    }
    crate::infogain::validate_support(template, prior)?;
    let a_axis = grid_a.nodes();
    let b_axis = grid_b.nodes();
    let mut gains = Vec::with_capacity(a_axis.len() * b_axis.len());
    for &a in &a_axis {
        let row_scheme = template.with_fixed(grid_a.param(), a)?;
        for &b in &b_axis {
            let scheme = row_scheme.with_fixed(grid_b.param(), b)?;
            gains.push(info_gain(&scheme, prior, quad).avg_gain);
        }
    }
    Ok(Scan2dResult {
        a_axis,
        b_axis,
        gains,
        meta: ScanMetadata {
            scheme: *template,
            prior: prior.clone(),
            quad: *quad,
        },
    })
}

/// Best fixed values found for a scheme and the gain achieved there.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OptimalSetting {
    pub fixed: [(ParamKind, f64); 2],
    pub gain: f64,
}

/// Exhaustive grid search over both fixed parameters (`resolution` nodes per
/// axis over the full ranges), followed by one golden-section refinement
/// pass along each axis around the best node. Ties break toward smaller
/// parameter values.
pub fn optimize_setting(
    template: &EncodingScheme,
    prior: &PriorModel,
    quad: &QuadratureConfig,
    resolution: usize,
) -> Result<OptimalSetting> {
    if resolution < 2 {
        return Err(Error::InvalidInput(format!(
            "resolution must be at least 2, got {resolution}"
        )));
    }
    crate::infogain::validate_support(template, prior)?;
    let kinds = [template.fixed()[0].0, template.fixed()[1].0];
    let grid_a = ScanGrid::full_range(kinds[0], resolution)?.nodes();
    let grid_b = ScanGrid::full_range(kinds[1], resolution)?.nodes();

    let eval = |a: f64, b: f64| -> f64 {
        let scheme = template
            .with_fixed(kinds[0], a)
            .and_then(|s| s.with_fixed(kinds[1], b))
            .expect("grid nodes are in range");
        info_gain(&scheme, prior, quad).avg_gain
    };

    let (mut best_a, mut best_b, mut best_gain) = (grid_a[0], grid_b[0], f64::NEG_INFINITY);
    for &a in &grid_a {
        for &b in &grid_b {
            let g = eval(a, b);
            if g > best_gain {
                (best_a, best_b, best_gain) = (a, b, g);
            }
        }
    }

    // One golden-section pass per axis around the winning node.
    let spacing_a = (kinds[0].range().1 - kinds[0].range().0) / (resolution - 1) as f64;
    let spacing_b = (kinds[1].range().1 - kinds[1].range().0) / (resolution - 1) as f64;
    let (a_ref, g_ref) = golden_max(
        |a| eval(a, best_b),
        best_a - spacing_a,
        best_a + spacing_a,
        kinds[0].range(),
    );
    if g_ref > best_gain {
        (best_a, best_gain) = (a_ref, g_ref);
    }
    let (b_ref, g_ref) = golden_max(
        |b| eval(best_a, b),
        best_b - spacing_b,
        best_b + spacing_b,
        kinds[1].range(),
    );
    if g_ref > best_gain {
        (best_b, best_gain) = (b_ref, g_ref);
    }

    Ok(OptimalSetting {
        fixed: [(kinds[0], best_a), (kinds[1], best_b)],
        gain: best_gain,
    })
}

/// Golden-section maximum of a unimodal-enough `f` on `[lo, hi]` clipped to
/// `range`; returns the best probed point (endpoints included).
fn golden_max<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, range: (f64, f64)) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut lo = lo.max(range.0);
    let mut hi = hi.min(range.1);
    let (mut best_x, mut best_f) = (lo, f(lo));
    let fhi = f(hi);
    if fhi > best_f {
        (best_x, best_f) = (hi, fhi);
    }
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..48 {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
        let (x, fx) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
        if fx > best_f {
            (best_x, best_f) = (x, fx);
        }
    }
    (best_x, best_f)
}

/// Label for the two prior families in the six-cell report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PriorLabel {
    Uniform,
    Discrete,
}

impl PriorLabel {
    pub fn name(&self) -> &'static str {
        match self {
            PriorLabel::Uniform => "uniform",
            PriorLabel::Discrete => "discrete",
        }
    }
}

/// One cell of the report: encoding parameter, prior family, the optimal
/// fixed values, and the gain there.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TableEntry {
    pub encoding: ParamKind,
    pub prior: PriorLabel,
    pub fixed: [(ParamKind, f64); 2],
    pub gain: f64,
}

/// The six-cell optimum report: encodings θ, ψ, α under the uniform prior
/// (first three entries) and the equal-weight two-point prior on the range
/// endpoints (last three).
#[derive(Clone, Debug, PartialEq)]
pub struct TableOneReport {
    pub entries: Vec<TableEntry>,
}

impl TableOneReport {
    pub fn entry(&self, encoding: ParamKind, prior: PriorLabel) -> &TableEntry {
        self.entries
            .iter()
            .find(|e| e.encoding == encoding && e.prior == prior)
            .expect("all six cells are always present")
    }
}

/// Run [`optimize_setting`] for all six (encoding, prior) cells.
pub fn table_one(quad: &QuadratureConfig, resolution: usize) -> TableOneReport {
    let encodings = [ParamKind::Theta, ParamKind::Psi, ParamKind::Alpha];
    let mut entries = Vec::with_capacity(6);
    for label in [PriorLabel::Uniform, PriorLabel::Discrete] {
        for encoding in encodings {
            let template = default_template(encoding);
            let prior = match label {
                PriorLabel::Uniform => PriorModel::uniform_over(encoding),
                PriorLabel::Discrete => PriorModel::two_point_endpoints(encoding),
            };
            let best = optimize_setting(&template, &prior, quad, resolution)
                .expect("templates and priors are well-formed");
            entries.push(TableEntry {
                encoding,
                prior: label,
                fixed: best.fixed,
                gain: best.gain,
            });
        }
    }
    TableOneReport { entries }
}

fn default_template(message: ParamKind) -> EncodingScheme {
    match message {
        ParamKind::Theta => EncodingScheme::theta_encoding(0.0, 0.0),
        ParamKind::Psi => EncodingScheme::psi_encoding(0.0, 0.0),
        ParamKind::Alpha => EncodingScheme::alpha_encoding(0.0, 0.0),
    }
    .expect("zero settings are in range")
}
