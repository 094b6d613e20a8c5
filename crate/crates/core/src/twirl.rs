//! Collective SU(2) twirling on two qubits and total-spin statistics.
//!
//! Averaging `(U ⊗ U) ρ (U ⊗ U)†` over the Haar measure projects onto the
//! commutant of the collective representation. The two-qubit space splits
//! into the one-dimensional antisymmetric (total spin 0) and the
//! three-dimensional symmetric (total spin 1) subspaces, both
//! multiplicity-free, so the channel has the closed Schur form
//!
//! ```text
//! E[ρ] = Tr(Π₀ ρ) Π₀ + Tr(Π₁ ρ) Π₁ / 3 .
//! ```
//!
//! The analytic form is the default; [`twirl_monte_carlo`] exists as an
//! independent sampling oracle for it. Outcome probabilities of the
//! total-spin measurement need no twirl at all: `Tr(Π_i ρ_γ) = ⟨Ψ|Π_i|Ψ⟩`,
//! with the closed form `p(Π₀) = (1 − cos θ)(1 + sin 2α cos ψ)/4`.

use crate::error::{Error, Result};
use crate::math;
use crate::relative::RelativeParams;
use crate::su2::{
    cr, haar_su2, tensor, DensityMatrix4, Matrix4, RandomStream, StateVector2Q, Unitary2,
};

/// Probabilities of the two total-spin outcomes; `p_singlet + p_triplet = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OutcomeProbs {
    p_singlet: f64,
    p_triplet: f64,
}

impl OutcomeProbs {
    /// Clamps roundoff within ±1e-12 of the [0, 1] endpoints.
    pub(crate) fn from_p_singlet(p: f64) -> Self {
        debug_assert!((-1e-12..=1.0 + 1e-12).contains(&p), "p_singlet = {p}");
        let p = math::clamp(p, 0.0, 1.0);
        Self {
            p_singlet: p,
            p_triplet: 1.0 - p,
        }
    }

    pub fn p_singlet(&self) -> f64 {
        self.p_singlet
    }

    pub fn p_triplet(&self) -> f64 {
        self.p_triplet
    }

    /// Index 0 = singlet, 1 = triplet.
    pub fn by_index(&self, index: usize) -> f64 {
        if index == 0 {
            self.p_singlet
        } else {
            self.p_triplet
        }
    }
}

fn singlet_state() -> [f64; 4] {
    let s = core::f64::consts::FRAC_1_SQRT_2;
    [0.0, s, -s, 0.0]
}

/// Rank-1 projector `Π₀ = |s⟩⟨s|` onto the singlet `(|01⟩ − |10⟩)/√2`.
pub fn singlet_projector() -> Matrix4 {
    let v = singlet_state();
    let mut e = [[cr(0.0); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            e[i][j] = cr(v[i] * v[j]);
        }
    }
    Matrix4::from_entries(e)
}

/// Rank-3 projector `Π₁ = I − Π₀` onto the symmetric subspace.
pub fn triplet_projector() -> Matrix4 {
    Matrix4::identity().sub(&singlet_projector())
}

/// Closed-form singlet probability `(1 − cos θ)(1 + sin 2α cos ψ) / 4`.
pub fn p_singlet_closed(p: &RelativeParams) -> f64 {
    let value = (1.0 - math::cos(p.theta()))
        * (1.0 + math::sin(2.0 * p.alpha()) * math::cos(p.psi()))
        / 4.0;
    OutcomeProbs::from_p_singlet(value).p_singlet()
}

/// Outcome probabilities from the state: `p_singlet = ⟨s|Π₀|s⟩`.
pub fn p_outcomes_state(s: &StateVector2Q) -> OutcomeProbs {
    let proj = singlet_projector();
    let amps = s.amps();
    let mut p = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            p += (amps[i].conj() * proj.entry(i, j) * amps[j]).re;
        }
    }
    OutcomeProbs::from_p_singlet(p)
}

/// The twirling channel in closed form: `Tr(Π₀ρ)Π₀ + Tr(Π₁ρ)Π₁/3`.
pub fn twirl_analytic(rho: &DensityMatrix4) -> DensityMatrix4 {
    let p0 = trace_with(&singlet_projector(), rho);
    let out = singlet_projector()
        .scale(p0)
        .add(&triplet_projector().scale((1.0 - p0) / 3.0));
    DensityMatrix4::new_unchecked(out)
}

fn trace_with(projector: &Matrix4, rho: &DensityMatrix4) -> f64 {
    let mut tr = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            tr += (projector.entry(i, j) * rho.entry(j, i)).re;
        }
    }
    math::clamp(tr, 0.0, 1.0)
}

/// `(U ⊗ U) ρ (U ⊗ U)†` for a single collective rotation.
pub fn collective_conjugate(rho: &DensityMatrix4, u: &Unitary2) -> DensityMatrix4 {
    let big = tensor(u, u);
    let rotated = big.matrix().mul(rho.matrix()).mul(big.adjoint().matrix());
    DensityMatrix4::new_unchecked(rotated)
}

/// Unbiased Monte Carlo estimator of [`twirl_analytic`]:
/// `(1/n) Σ (U ⊗ U) ρ (U ⊗ U)†` over Haar samples.
///
/// `n ≥ 1` is a caller obligation (asserted). The estimate is trace-one by
/// construction; its max-entry deviation from the analytic channel decays
/// like `O(1/√n)`.
pub fn twirl_monte_carlo(
    rho: &DensityMatrix4,
    n: usize,
    stream: &mut RandomStream,
) -> DensityMatrix4 {
    assert!(n >= 1, "sample count must be at least 1");
    let mut acc = Matrix4::zeros();
    for _ in 0..n {
        let u = haar_su2(stream);
        acc = acc.add(collective_conjugate(rho, &u).matrix());
    }
    DensityMatrix4::new_unchecked(acc.scale(1.0 / n as f64))
}

/// Average of collective conjugations over an explicit set of rotations.
/// With a single identity rotation this returns `rho` itself, which makes it
/// the deterministic stub for exercising the Monte Carlo path.
pub fn twirl_sample_average<I>(rho: &DensityMatrix4, unitaries: I) -> Result<DensityMatrix4>
where
    I: IntoIterator<Item = Unitary2>,
{
    let mut acc = Matrix4::zeros();
    let mut count = 0usize;
    for u in unitaries {
        acc = acc.add(collective_conjugate(rho, &u).matrix());
        count += 1;
    }
    if count == 0 {
        return Err(Error::InvalidInput(alloc::string::String::from(
            "cannot average over an empty set of rotations",
        )));
    }
    Ok(DensityMatrix4::new_unchecked(acc.scale(1.0 / count as f64)))
}
