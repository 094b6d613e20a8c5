//! Bayesian inference of an encoded relative parameter from total-spin
//! outcome statistics.
//!
//! The sender encodes a message into one of `(α, θ, ψ)` and fixes the other
//! two at agreed values. The receiver measures the total-spin projectors and
//! updates a prior `p(x)` to posteriors `p(x | Π_i) = p(Π_i | x) p(x) / p(Π_i)`.
//! The figure of merit is the average information gain
//!
//! ```text
//! I_avg = Σ_i p(Π_i) ∫ p(x | Π_i) log₂ ( p(x | Π_i) / p(x) ) dx ,
//! ```
//!
//! the prior-to-posterior KL divergence in bits averaged over outcomes. With
//! two outcomes it cannot exceed 1 bit. Continuous (uniform) priors are
//! integrated with composite Simpson quadrature; two-point priors are summed
//! exactly and ignore the quadrature configuration.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::relative::RelativeParams;
use crate::twirl::{p_singlet_closed, OutcomeProbs};

const PI: f64 = core::f64::consts::PI;
const FRAC_PI_4: f64 = core::f64::consts::FRAC_PI_4;

/// Marginals below this contribute nothing to the average gain.
const MARGINAL_SKIP: f64 = 1e-15;
/// Marginals below this make a posterior undefined.
const MARGINAL_IMPOSSIBLE: f64 = 1e-300;

/// Which relative parameter is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamKind {
    Alpha,
    Theta,
    Psi,
}

impl ParamKind {
    /// Closed range of the parameter.
    pub fn range(&self) -> (f64, f64) {
        match self {
            ParamKind::Alpha => (0.0, FRAC_PI_4),
            ParamKind::Theta => (0.0, PI),
            ParamKind::Psi => (0.0, PI),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ParamKind::Alpha => "alpha",
            ParamKind::Theta => "theta",
            ParamKind::Psi => "psi",
        }
    }

    pub const ALL: [ParamKind; 3] = [ParamKind::Alpha, ParamKind::Theta, ParamKind::Psi];
}

/// A measurement outcome of the total-spin projectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Singlet,
    Triplet,
}

impl Outcome {
    pub fn index(&self) -> usize {
        match self {
            Outcome::Singlet => 0,
            Outcome::Triplet => 1,
        }
    }
}

/// Prior over the message parameter: uniform on an interval, or two points
/// `x0 ≠ x1` with weights `(w0, 1 − w0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PriorModel {
    repr: PriorRepr,
}

#[derive(Clone, Debug, PartialEq)]
enum PriorRepr {
    Uniform { lo: f64, hi: f64 },
    TwoPoint { x0: f64, x1: f64, weight0: f64 },
}

impl PriorModel {
    pub fn uniform(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || lo >= hi {
            return Err(Error::InvalidInput(format!(
                "uniform prior requires lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Self {
            repr: PriorRepr::Uniform { lo, hi },
        })
    }

    pub fn two_point(x0: f64, x1: f64, weight0: f64) -> Result<Self> {
        if !x0.is_finite() || !x1.is_finite() || x0 == x1 {
            return Err(Error::InvalidInput(format!(
                "two-point prior requires distinct finite points, got {x0} and {x1}"
            )));
        }
        if !weight0.is_finite() || weight0 <= 0.0 || weight0 >= 1.0 {
            return Err(Error::InvalidInput(format!(
                "two-point weight must lie in (0, 1), got {weight0}"
            )));
        }
        Ok(Self {
            repr: PriorRepr::TwoPoint { x0, x1, weight0 },
        })
    }

    /// Uniform prior over the full range of `param`.
    pub fn uniform_over(param: ParamKind) -> Self {
        let (lo, hi) = param.range();
        Self {
            repr: PriorRepr::Uniform { lo, hi },
        }
    }

    /// Equal-weight two-point prior on the endpoints of `param`'s range.
    pub fn two_point_endpoints(param: ParamKind) -> Self {
        let (lo, hi) = param.range();
        Self {
            repr: PriorRepr::TwoPoint {
                x0: lo,
                x1: hi,
                weight0: 0.5,
            },
        }
    }

    pub fn is_discrete(&self) -> bool {
        matches!(self.repr, PriorRepr::TwoPoint { .. })
    }

    /// `(lo, hi)` for uniform priors, `(min(x0,x1), max(x0,x1))` for
    /// two-point ones.
    pub fn support(&self) -> (f64, f64) {
        match self.repr {
            PriorRepr::Uniform { lo, hi } => (lo, hi),
            PriorRepr::TwoPoint { x0, x1, .. } => (x0.min(x1), x0.max(x1)),
        }
    }

    /// The two atoms and weights of a discrete prior.
    pub fn atoms(&self) -> Option<([f64; 2], [f64; 2])> {
        match self.repr {
            PriorRepr::TwoPoint { x0, x1, weight0 } => Some(([x0, x1], [weight0, 1.0 - weight0])),
            PriorRepr::Uniform { .. } => None,
        }
    }
}

/// Which parameter carries the message and the fixed values of the other two.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EncodingScheme {
    message: ParamKind,
    fixed: [(ParamKind, f64); 2],
}

impl EncodingScheme {
    /// `fixed_a` and `fixed_b` must name the two parameters other than
    /// `message`, each with a value inside its range.
    pub fn new(
        message: ParamKind,
        fixed_a: (ParamKind, f64),
        fixed_b: (ParamKind, f64),
    ) -> Result<Self> {
        if fixed_a.0 == message || fixed_b.0 == message || fixed_a.0 == fixed_b.0 {
            return Err(Error::InvalidInput(format!(
                "fixed parameters must be the two parameters other than the message ({})",
                message.name()
            )));
        }
        for (kind, value) in [fixed_a, fixed_b] {
            check_in_range(kind, value)?;
        }
        // Deterministic order: alpha < theta < psi.
        let mut fixed = [fixed_a, fixed_b];
        fixed.sort_by_key(|(kind, _)| ParamKind::ALL.iter().position(|k| k == kind));
        Ok(Self { message, fixed })
    }

    pub fn theta_encoding(alpha0: f64, psi0: f64) -> Result<Self> {
        Self::new(
            ParamKind::Theta,
            (ParamKind::Alpha, alpha0),
            (ParamKind::Psi, psi0),
        )
    }

    pub fn psi_encoding(alpha0: f64, theta0: f64) -> Result<Self> {
        Self::new(
            ParamKind::Psi,
            (ParamKind::Alpha, alpha0),
            (ParamKind::Theta, theta0),
        )
    }

    pub fn alpha_encoding(theta0: f64, psi0: f64) -> Result<Self> {
        Self::new(
            ParamKind::Alpha,
            (ParamKind::Theta, theta0),
            (ParamKind::Psi, psi0),
        )
    }

    pub fn message(&self) -> ParamKind {
        self.message
    }

    /// The two fixed parameters in (alpha, theta, psi) order.
    pub fn fixed(&self) -> [(ParamKind, f64); 2] {
        self.fixed
    }

    pub fn fixed_value(&self, kind: ParamKind) -> Option<f64> {
        self.fixed.iter().find(|(k, _)| *k == kind).map(|(_, v)| *v)
    }

    /// Same scheme with one fixed parameter replaced.
    pub fn with_fixed(&self, kind: ParamKind, value: f64) -> Result<Self> {
        if kind == self.message {
            return Err(Error::InvalidConfiguration(format!(
                "{} is the message parameter of this scheme",
                kind.name()
            )));
        }
        check_in_range(kind, value)?;
        let mut fixed = self.fixed;
        for slot in fixed.iter_mut() {
            if slot.0 == kind {
                slot.1 = value;
            }
        }
        Ok(Self {
            message: self.message,
            fixed,
        })
    }

    /// Full parameter triple with the message parameter set to `x`.
    pub fn assemble(&self, x: f64) -> Result<RelativeParams> {
        check_in_range(self.message, x)?;
        let mut values = [0.0; 3];
        for (kind, value) in self.fixed.iter().chain([(self.message, x)].iter()) {
            values[slot_of(*kind)] = *value;
        }
        RelativeParams::new(values[0], values[1], values[2])
    }
}

fn slot_of(kind: ParamKind) -> usize {
    match kind {
        ParamKind::Alpha => 0,
        ParamKind::Theta => 1,
        ParamKind::Psi => 2,
    }
}

fn check_in_range(kind: ParamKind, value: f64) -> Result<()> {
    let (lo, hi) = kind.range();
    if !value.is_finite() || value < lo - 1e-9 || value > hi + 1e-9 {
        return Err(Error::InvalidInput(format!(
            "{} = {value} outside [{lo}, {hi}]",
            kind.name()
        )));
    }
    Ok(())
}

/// Supported quadrature rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadratureRule {
    CompositeSimpson,
}

/// Node count and rule for the continuous-prior integrals. The node count
/// must be odd (Simpson needs an even interval count).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadratureConfig {
    n_points: usize,
    rule: QuadratureRule,
}

impl QuadratureConfig {
    pub fn new(n_points: usize, rule: QuadratureRule) -> Result<Self> {
        if n_points < 3 || n_points.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "quadrature needs an odd node count ≥ 3, got {n_points}"
            )));
        }
        Ok(Self { n_points, rule })
    }

    pub fn simpson(n_points: usize) -> Result<Self> {
        Self::new(n_points, QuadratureRule::CompositeSimpson)
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn rule(&self) -> QuadratureRule {
        self.rule
    }
}

impl Default for QuadratureConfig {
    /// Composite Simpson with 4097 nodes: the integrands are smooth apart
    /// from integrable t·log t endpoints, where this resolution is already
    /// far below 1e-6 absolute error.
    fn default() -> Self {
        Self {
            n_points: 4097,
            rule: QuadratureRule::CompositeSimpson,
        }
    }
}

/// Check that the prior's support stays inside the message parameter's
/// range, which [`info_gain`] requires of its callers.
pub fn validate_support(scheme: &EncodingScheme, prior: &PriorModel) -> Result<()> {
    let (lo, hi) = prior.support();
    check_in_range(scheme.message(), lo)?;
    check_in_range(scheme.message(), hi)
}

/// Composite Simpson with pairwise summation of the weighted terms.
fn simpson<F: Fn(f64) -> f64>(lo: f64, hi: f64, n: usize, f: F) -> f64 {
    debug_assert!(n >= 3 && n % 2 == 1);
    let h = (hi - lo) / (n - 1) as f64;
    let terms: Vec<f64> = (0..n)
        .map(|k| {
            let w = if k == 0 || k == n - 1 {
                1.0
            } else if k % 2 == 1 {
                4.0
            } else {
                2.0
            };
            let x = if k == n - 1 { hi } else { lo + h * k as f64 };
            w * f(x)
        })
        .collect();
    math::pairwise_sum(&terms) * h / 3.0
}

/// Outcome probabilities for message value `x` under `scheme`.
pub fn likelihood(scheme: &EncodingScheme, x: f64) -> Result<OutcomeProbs> {
    let params = scheme.assemble(x)?;
    Ok(OutcomeProbs::from_p_singlet(p_singlet_closed(&params)))
}

/// A posterior density (continuous prior) or mass function (two-point
/// prior) over the message parameter.
#[derive(Clone, Debug, PartialEq)]
pub enum Posterior {
    /// Density sampled on the quadrature nodes; integrates to 1 within 1e-8.
    Gridded { nodes: Vec<f64>, density: Vec<f64> },
    /// Masses on the two prior atoms; sums to 1 exactly.
    TwoPoint { points: [f64; 2], masses: [f64; 2] },
}

/// Bayes update of `prior` after observing `outcome`.
pub fn posterior(
    scheme: &EncodingScheme,
    prior: &PriorModel,
    outcome: Outcome,
    quad: &QuadratureConfig,
) -> Result<Posterior> {
    validate_support(scheme, prior)?;
    let i = outcome.index();
    match prior.repr {
        PriorRepr::Uniform { lo, hi } => {
            let dens = 1.0 / (hi - lo);
            let like = |x: f64| {
                likelihood(scheme, x)
                    .expect("support was validated")
                    .by_index(i)
            };
            let marginal = simpson(lo, hi, quad.n_points(), |x| like(x) * dens);
            if marginal <= MARGINAL_IMPOSSIBLE {
                return Err(Error::ImpossibleOutcome);
            }
            let h = (hi - lo) / (quad.n_points() - 1) as f64;
            let nodes: Vec<f64> = (0..quad.n_points())
                .map(|k| {
                    if k == quad.n_points() - 1 {
                        hi
                    } else {
                        lo + h * k as f64
                    }
                })
                .collect();
            let density: Vec<f64> = nodes.iter().map(|&x| like(x) * dens / marginal).collect();
            Ok(Posterior::Gridded { nodes, density })
        }
        PriorRepr::TwoPoint { x0, x1, weight0 } => {
            let p0 = likelihood(scheme, x0)?.by_index(i);
            let p1 = likelihood(scheme, x1)?.by_index(i);
            let marginal = weight0 * p0 + (1.0 - weight0) * p1;
            if marginal <= MARGINAL_IMPOSSIBLE {
                return Err(Error::ImpossibleOutcome);
            }
            Ok(Posterior::TwoPoint {
                points: [x0, x1],
                masses: [weight0 * p0 / marginal, (1.0 - weight0) * p1 / marginal],
            })
        }
    }
}

/// Outcome probabilities, per-outcome information gains (bits), and their
/// average. Invariants: probabilities sum to 1 within 1e-10, the average is
/// the probability-weighted sum, and `0 ≤ avg_gain ≤ 1 + 1e-9`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InfoGainResult {
    pub p_outcome: [f64; 2],
    pub gain_per_outcome: [f64; 2],
    pub avg_gain: f64,
}

/// Average information gain of the scheme under the prior.
///
/// Continuous priors use the configured Simpson rule; two-point priors are
/// summed exactly and do not depend on `quad`. `t log₂(t/q)` is taken as 0
/// at `t = 0`; outcomes with marginal below 1e-15 contribute nothing.
pub fn info_gain(
    scheme: &EncodingScheme,
    prior: &PriorModel,
    quad: &QuadratureConfig,
) -> InfoGainResult {
    let (p_outcome, gains) = match prior.repr {
        PriorRepr::Uniform { lo, hi } => {
            let dens = 1.0 / (hi - lo);
            let like = |x: f64, i: usize| -> f64 {
                likelihood(scheme, x)
                    .expect("scheme and prior ranges were validated")
                    .by_index(i)
            };
            let marginals = [
                simpson(lo, hi, quad.n_points(), |x| like(x, 0) * dens),
                simpson(lo, hi, quad.n_points(), |x| like(x, 1) * dens),
            ];
            let mut gains = [0.0; 2];
            for i in 0..2 {
                if marginals[i] < MARGINAL_SKIP {
                    continue;
                }
                gains[i] = simpson(lo, hi, quad.n_points(), |x| {
                    let p = like(x, i);
                    if p <= 0.0 {
                        0.0
                    } else {
                        (p * dens / marginals[i]) * math::log2(p / marginals[i])
                    }
                });
            }
            (marginals, gains)
        }
        PriorRepr::TwoPoint { x0, x1, weight0 } => {
            let atoms = [x0, x1];
            let weights = [weight0, 1.0 - weight0];
            let like: Vec<OutcomeProbs> = atoms
                .iter()
                .map(|&x| likelihood(scheme, x).expect("validated ranges"))
                .collect();
            let mut marginals = [0.0; 2];
            for i in 0..2 {
                marginals[i] = (0..2).map(|k| weights[k] * like[k].by_index(i)).sum();
            }
            let mut gains = [0.0; 2];
            for i in 0..2 {
                if marginals[i] < MARGINAL_SKIP {
                    continue;
                }
                for k in 0..2 {
                    let p = like[k].by_index(i);
                    if p > 0.0 {
                        gains[i] += (weights[k] * p / marginals[i]) * math::log2(p / marginals[i]);
                    }
                }
            }
            (marginals, gains)
        }
    };

    // KL divergences are non-negative; snap quadrature roundoff to zero.
    let gains = gains.map(|g| {
        debug_assert!(g >= -1e-10, "per-outcome gain {g} below -1e-10");
        if g < 0.0 {
            0.0
        } else {
            g
        }
    });
    let avg = p_outcome[0] * gains[0] + p_outcome[1] * gains[1];
    debug_assert!((p_outcome[0] + p_outcome[1] - 1.0).abs() <= 1e-10);
    debug_assert!(avg <= 1.0 + 1e-9, "avg gain {avg} above one bit");
    InfoGainResult {
        p_outcome,
        gain_per_outcome: gains,
        avg_gain: avg,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    /// 1/ln2 − 1, the exact θ-encoding uniform-prior gain at (α₀, ψ₀) = (π/4, 0),
    /// from ∫₀^π (1 − cos θ) ln(1 − cos θ) dθ = π (1 − ln 2).
    const GAIN_THETA_UNIFORM_MAX: f64 = 0.442_695_040_888_963_4;
    /// 3/2 − (3/4) log₂ 3, the exact two-point gain at the product/α settings.
    const GAIN_TWOPOINT_PRODUCT: f64 = 0.311_278_124_459_132_94;

    fn quad() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn constructors_validate() {
        assert!(PriorModel::uniform(1.0, 1.0).is_err());
        assert!(PriorModel::uniform(f64::NAN, 1.0).is_err());
        assert!(PriorModel::two_point(0.3, 0.3, 0.5).is_err());
        assert!(PriorModel::two_point(0.0, 1.0, 0.0).is_err());
        assert!(QuadratureConfig::simpson(4).is_err());
        assert!(QuadratureConfig::simpson(1).is_err());
        assert!(EncodingScheme::new(
            ParamKind::Theta,
            (ParamKind::Theta, 0.0),
            (ParamKind::Psi, 0.0)
        )
        .is_err());
        assert!(EncodingScheme::theta_encoding(1.0, 0.0).is_err()); // alpha out of range
    }

    #[test]
    fn likelihood_examples() {
        let theta_enc = EncodingScheme::theta_encoding(FRAC_PI_4, 0.0).unwrap();
        let p = likelihood(&theta_enc, PI).unwrap();
        assert_abs_diff_eq!(p.p_singlet(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.p_triplet(), 0.0, epsilon = 1e-15);

        let psi_enc = EncodingScheme::psi_encoding(FRAC_PI_4, PI).unwrap();
        let p = likelihood(&psi_enc, 0.0).unwrap();
        assert_abs_diff_eq!(p.p_singlet(), 1.0, epsilon = 1e-15);

        let alpha_enc = EncodingScheme::alpha_encoding(0.0, 0.0).unwrap();
        for k in 0..5 {
            let x = FRAC_PI_4 * k as f64 / 4.0;
            let p = likelihood(&alpha_enc, x).unwrap();
            assert_abs_diff_eq!(p.p_triplet(), 1.0, epsilon = 1e-15);
        }

        assert!(likelihood(&theta_enc, -0.5).is_err());
        assert!(likelihood(&theta_enc, 4.0).is_err());
    }

    #[test]
    fn posterior_point_mass_when_discrimination_is_perfect() {
        let scheme = EncodingScheme::theta_encoding(FRAC_PI_4, 0.0).unwrap();
        let prior = PriorModel::two_point(0.0, PI, 0.5).unwrap();
        match posterior(&scheme, &prior, Outcome::Singlet, &quad()).unwrap() {
            Posterior::TwoPoint { points, masses } => {
                assert_eq!(points, [0.0, PI]);
                assert_abs_diff_eq!(masses[0], 0.0, epsilon = 1e-15);
                assert_abs_diff_eq!(masses[1], 1.0, epsilon = 1e-15);
            }
            other => panic!("expected two-point posterior, got {other:?}"),
        }
    }

    #[test]
    fn posterior_equals_prior_for_flat_likelihood() {
        let scheme = EncodingScheme::alpha_encoding(0.0, 0.0).unwrap();
        let prior = PriorModel::uniform_over(ParamKind::Alpha);
        match posterior(&scheme, &prior, Outcome::Triplet, &quad()).unwrap() {
            Posterior::Gridded { density, .. } => {
                let flat = 4.0 / PI;
                for d in density {
                    assert_abs_diff_eq!(d, flat, epsilon = 1e-12);
                }
            }
            other => panic!("expected gridded posterior, got {other:?}"),
        }
        // ...and the singlet outcome never occurs there.
        assert_eq!(
            posterior(&scheme, &prior, Outcome::Singlet, &quad()),
            Err(Error::ImpossibleOutcome)
        );
    }

    #[test]
    fn posterior_density_closed_form_and_normalization() {
        let scheme = EncodingScheme::theta_encoding(FRAC_PI_4, 0.0).unwrap();
        let prior = PriorModel::uniform_over(ParamKind::Theta);
        match posterior(&scheme, &prior, Outcome::Singlet, &quad()).unwrap() {
            Posterior::Gridded { nodes, density } => {
                for (x, d) in nodes.iter().zip(density.iter()) {
                    let expect = 2.0 * (x / 2.0).sin().powi(2) / PI;
                    assert_abs_diff_eq!(*d, expect, epsilon = 1e-10);
                }
                // integrates to one
                let n = nodes.len();
                let h = (nodes[n - 1] - nodes[0]) / (n - 1) as f64;
                let mut total = 0.0;
                for (k, d) in density.iter().enumerate() {
                    let w = if k == 0 || k == n - 1 {
                        1.0
                    } else if k % 2 == 1 {
                        4.0
                    } else {
                        2.0
                    };
                    total += w * d;
                }
                assert_abs_diff_eq!(total * h / 3.0, 1.0, epsilon = 1e-8);
            }
            other => panic!("expected gridded posterior, got {other:?}"),
        }
    }

    #[test]
    fn gain_closed_form_uniform_theta() {
        let scheme = EncodingScheme::theta_encoding(FRAC_PI_4, 0.0).unwrap();
        let result = info_gain(
            &scheme,
            &PriorModel::uniform_over(ParamKind::Theta),
            &quad(),
        );
        assert_abs_diff_eq!(result.avg_gain, GAIN_THETA_UNIFORM_MAX, epsilon = 1e-10);
        assert_abs_diff_eq!(result.p_outcome[0], 0.5, epsilon = 1e-12);
        let recombined = result.p_outcome[0] * result.gain_per_outcome[0]
            + result.p_outcome[1] * result.gain_per_outcome[1];
        assert_abs_diff_eq!(result.avg_gain, recombined, epsilon = 1e-12);
    }

    #[test]
    fn gain_closed_form_discrete_product() {
        let scheme = EncodingScheme::theta_encoding(0.0, 0.0).unwrap();
        let prior = PriorModel::two_point(0.0, PI, 0.5).unwrap();
        let result = info_gain(&scheme, &prior, &quad());
        assert_abs_diff_eq!(result.avg_gain, GAIN_TWOPOINT_PRODUCT, epsilon = 1e-12);

        // exact summation: independent of the quadrature setting
        let coarse = info_gain(&scheme, &prior, &QuadratureConfig::simpson(3).unwrap());
        assert_eq!(result.avg_gain, coarse.avg_gain);
    }

    #[test]
    fn gain_one_bit_for_perfect_psi_discrimination() {
        let scheme = EncodingScheme::psi_encoding(FRAC_PI_4, PI).unwrap();
        let prior = PriorModel::two_point(0.0, PI, 0.5).unwrap();
        let result = info_gain(&scheme, &prior, &quad());
        assert!((result.avg_gain - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn zero_information_cases() {
        let psi_at_product = EncodingScheme::psi_encoding(0.0, PI).unwrap();
        let g = info_gain(
            &psi_at_product,
            &PriorModel::uniform_over(ParamKind::Psi),
            &quad(),
        );
        assert!(g.avg_gain <= 1e-9);

        let alpha_at_zero_theta = EncodingScheme::alpha_encoding(0.0, 0.0).unwrap();
        let g = info_gain(
            &alpha_at_zero_theta,
            &PriorModel::uniform_over(ParamKind::Alpha),
            &quad(),
        );
        assert!(g.avg_gain <= 1e-9);
    }

    #[test]
    fn gains_are_bounded() {
        let quad = quad();
        for (a0, t0, p0) in [(0.2_f64, 1.0, 2.0), (0.7, 2.5, 0.3), (0.0, PI, 0.0)] {
            for scheme in [
                EncodingScheme::theta_encoding(a0.min(FRAC_PI_4), p0).unwrap(),
                EncodingScheme::psi_encoding(a0.min(FRAC_PI_4), t0).unwrap(),
                EncodingScheme::alpha_encoding(t0, p0).unwrap(),
            ] {
                for prior in [
                    PriorModel::uniform_over(scheme.message()),
                    PriorModel::two_point_endpoints(scheme.message()),
                ] {
                    let r = info_gain(&scheme, &prior, &quad);
                    assert!(r.gain_per_outcome.iter().all(|g| *g >= 0.0));
                    assert!(r.avg_gain >= 0.0 && r.avg_gain <= 1.0 + 1e-9);
                    assert!((r.p_outcome[0] + r.p_outcome[1] - 1.0).abs() <= 1e-10);
                }
            }
        }
    }

    #[test]
    fn quadrature_converges_at_the_default_setting() {
        let quad_default = quad();
        let quad_double = QuadratureConfig::simpson(8193).unwrap();
        let schemes = [
            EncodingScheme::theta_encoding(FRAC_PI_4, 0.0).unwrap(),
            EncodingScheme::psi_encoding(FRAC_PI_4, PI).unwrap(),
            EncodingScheme::alpha_encoding(PI, 0.0).unwrap(),
        ];
        for scheme in schemes {
            let prior = PriorModel::uniform_over(scheme.message());
            let a = info_gain(&scheme, &prior, &quad_default).avg_gain;
            let b = info_gain(&scheme, &prior, &quad_double).avg_gain;
            assert!((a - b).abs() < 1e-6, "Simpson drift {:.2e}", (a - b).abs());
        }
    }
}
