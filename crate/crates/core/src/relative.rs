//! The canonical frame-invariant description of a pure two-qubit state.
//!
//! Writing the state as a 2×2 matrix `Ψ̂ = [[a, b], [c, d]]`, a collective
//! rotation `U ⊗ U` acts as `Ψ̂ → U Ψ̂ Uᵀ`, which leaves `det Ψ̂ = ad − bc`
//! and `Tr(-i σ_y Ψ̂) = b − c` unchanged. Those two complex numbers carry
//! (after removing the global phase) the three relative parameters
//! `(α, θ, ψ)`:
//!
//! ```text
//! ad − bc = ½ sin 2α
//! b − c   = sin(θ/2) · (e^{-iψ/2} cos α + e^{+iψ/2} sin α)
//! ```
//!
//! in the canonical gauge where `ad − bc` is real and non-negative.
//!
//! A note on ranges: `(α, θ) ∈ [0, π/4] × [0, π]` with `ψ ∈ [0, π]` labels
//! every orbit *up to complex conjugation of the amplitudes*. The conjugate
//! mirror of a state (ψ ↔ 2π − ψ) is generally not reachable by a collective
//! rotation, but it has the same parameter triple and identical total-spin
//! statistics, so [`orbit_equal`] identifies the two. Degenerate cases where
//! ψ (or at maximal entanglement the (θ, ψ) pair) stops being identifiable
//! are reported with `psi_identifiable = false` and the convention ψ = 0.

use crate::error::{Error, Result};
use crate::math;
use crate::su2::{
    cis, cnot, cr, hermitian_eigen, rotation_y, rotation_z, tensor, ComplexAmp, StateVector2Q,
    Unitary2,
};

const FRAC_PI_4: f64 = core::f64::consts::FRAC_PI_4;
const PI: f64 = core::f64::consts::PI;

/// Slack accepted outside the closed parameter ranges before rejecting;
/// values inside the slack are clamped.
const RANGE_SLACK: f64 = 1e-9;

/// Spectral gap of the reduced density below which the Schmidt basis is
/// treated as degenerate (maximal entanglement). Chosen above the ~1.5e-8
/// conditioning noise of arcsin(2|ad−bc|) near α = π/4.
const DEGENERACY_GAP: f64 = 5e-8;

/// Scale below which ψ is unidentifiable (α ≈ 0 or θ ≈ 0).
const PSI_IDENT_TOL: f64 = 1e-9;

/// The three relative parameters: `alpha ∈ [0, π/4]`, `theta ∈ [0, π]`,
/// `psi ∈ [0, π]`, enforced at construction (inputs within 1e-9 of a range
/// endpoint are clamped onto it).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RelativeParams {
    alpha: f64,
    theta: f64,
    psi: f64,
}

impl RelativeParams {
    pub fn new(alpha: f64, theta: f64, psi: f64) -> Result<Self> {
        Ok(Self {
            alpha: in_range(alpha, 0.0, FRAC_PI_4, "alpha")?,
            theta: in_range(theta, 0.0, PI, "theta")?,
            psi: in_range(psi, 0.0, PI, "psi")?,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn psi(&self) -> f64 {
        self.psi
    }
}

fn in_range(value: f64, lo: f64, hi: f64, name: &str) -> Result<f64> {
    if !value.is_finite() || value < lo - RANGE_SLACK || value > hi + RANGE_SLACK {
        return Err(Error::InvalidInput(alloc::format!(
            "{name} = {value} outside [{lo}, {hi}]"
        )));
    }
    Ok(math::clamp(value, lo, hi))
}

/// The two frame invariants of a state: `det_inv = ad − bc` and
/// `cross_inv = b − c`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InvariantPair {
    det_inv: ComplexAmp,
    cross_inv: ComplexAmp,
}

impl InvariantPair {
    pub fn det_inv(&self) -> ComplexAmp {
        self.det_inv
    }

    pub fn cross_inv(&self) -> ComplexAmp {
        self.cross_inv
    }
}

/// Schmidt-like decomposition data: coefficients `λ0 ≥ λ1 ≥ 0` with
/// `λ0² + λ1² = 1`, the Bloch vectors of the two Schmidt partners on the
/// first and second qubit, and the relative phase.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchmidtForm {
    pub lambda0: f64,
    pub lambda1: f64,
    pub m_vec: [f64; 3],
    pub n_vec: [f64; 3],
    pub phase: f64,
}

/// Result of [`extract_params`]. `psi_identifiable` is false when ψ carries
/// no information about the state (α ≈ 0, θ ≈ 0, or maximal entanglement,
/// where ψ = 0 is reported by convention).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtractedParams {
    pub params: RelativeParams,
    pub psi_identifiable: bool,
}

/// Closed-form canonical state
/// `(a, b, c, d) = (e^{-iψ/2} cα cθ₂, e^{-iψ/2} cα sθ₂, -e^{iψ/2} sα sθ₂, e^{iψ/2} sα cθ₂)`
/// with `cθ₂ = cos(θ/2)`, `sθ₂ = sin(θ/2)`.
pub fn prepare_canonical(p: &RelativeParams) -> StateVector2Q {
    let (ca, sa) = (math::cos(p.alpha), math::sin(p.alpha));
    let (ct, st) = (math::cos(p.theta / 2.0), math::sin(p.theta / 2.0));
    let em = cis(-p.psi / 2.0);
    let ep = em.conj();
    StateVector2Q::new_unchecked([
        em * (ca * ct),
        em * (ca * st),
        ep * (-sa * st),
        ep * (sa * ct),
    ])
}

/// The same state built by the preparation circuit
/// `(R_z(ψ) ⊗ R_y(θ)) · CNOT · (R_y(2α) ⊗ I) |00⟩`; agrees with
/// [`prepare_canonical`] up to global phase (exactly, with these gate
/// conventions).
pub fn prepare_via_circuit(p: &RelativeParams) -> StateVector2Q {
    let init = StateVector2Q::new_unchecked([cr(1.0), cr(0.0), cr(0.0), cr(0.0)]);
    let entangle = tensor(
        &rotation_y(2.0 * p.alpha).expect("finite angle"),
        &Unitary2::identity(),
    );
    let dress = tensor(
        &rotation_z(p.psi).expect("finite angle"),
        &rotation_y(p.theta).expect("finite angle"),
    );
    dress.apply(&cnot().apply(&entangle.apply(&init)))
}

/// The invariants `(ad − bc, b − c)` of a normalized state.
pub fn invariants_of(s: &StateVector2Q) -> InvariantPair {
    let [a, b, c, d] = *s.amps();
    let pair = InvariantPair {
        det_inv: a * d - b * c,
        cross_inv: b - c,
    };
    debug_assert!(pair.det_inv.norm() <= 0.5 + 1e-12);
    debug_assert!(pair.cross_inv.norm() <= core::f64::consts::SQRT_2 + 1e-12);
    pair
}

/// Concurrence `2|ad − bc| ∈ [0, 1]`.
pub fn concurrence(s: &StateVector2Q) -> f64 {
    math::clamp(2.0 * invariants_of(s).det_inv.norm(), 0.0, 1.0)
}

/// Bloch vector of a single-qubit amplitude pair (need not be normalized).
fn bloch(v: [ComplexAmp; 2]) -> [f64; 3] {
    let n = v[0].norm_sqr() + v[1].norm_sqr();
    let cross = v[0].conj() * v[1];
    [
        2.0 * cross.re / n,
        2.0 * cross.im / n,
        (v[0].norm_sqr() - v[1].norm_sqr()) / n,
    ]
}

fn angle_between(u: [f64; 3], v: [f64; 3]) -> f64 {
    let dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    let cx = u[1] * v[2] - u[2] * v[1];
    let cy = u[2] * v[0] - u[0] * v[2];
    let cz = u[0] * v[1] - u[1] * v[0];
    math::atan2(math::sqrt(cx * cx + cy * cy + cz * cz), dot)
}

/// Schmidt data of the first-qubit reduced density `ρ_A = Ψ̂ Ψ̂†`.
///
/// `m_vec` is the Bloch vector of the dominant eigenvector (at spectral
/// degeneracy: of the eigenvector the solver returns with the larger
/// |0⟩-overlap, ties toward +x), `n_vec` that of its partner on the second
/// qubit, and `phase` the extracted ψ (see [`extract_params`]).
pub fn schmidt_form(s: &StateVector2Q) -> SchmidtForm {
    let [a, b, c, d] = *s.amps();
    let psihat = [[a, b], [c, d]];
    let rho_a = crate::su2::mat_mul(&psihat, &crate::su2::mat_adjoint(&psihat));
    let (vals, vecs) = hermitian_eigen(&rho_a);

    // Ascending eigenvalues: column 1 is dominant.
    let mut m = [vecs[0][1], vecs[1][1]];
    let other = [vecs[0][0], vecs[1][0]];
    if (vals[1] - vals[0]).abs() <= DEGENERACY_GAP {
        let pick_other = match other[0].norm_sqr().partial_cmp(&m[0].norm_sqr()) {
            Some(core::cmp::Ordering::Greater) => true,
            Some(core::cmp::Ordering::Equal) => {
                // break the remaining tie toward the +x Bloch direction
                bloch(other)[0] > bloch(m)[0]
            }
            _ => false,
        };
        if pick_other {
            m = other;
        }
    }

    let lambda0 = math::sqrt(math::clamp(vals[1].max(vals[0]), 0.0, 1.0));
    let lambda1 = math::sqrt(math::clamp(vals[1].min(vals[0]), 0.0, 1.0));

    // Partner of |m⟩ on qubit 2: φ_j = Σ_i conj(m_i) Ψ_{ij}, with ‖φ‖ = λ0.
    let partner = [
        m[0].conj() * psihat[0][0] + m[1].conj() * psihat[1][0],
        m[0].conj() * psihat[0][1] + m[1].conj() * psihat[1][1],
    ];

    let extracted = extract_params(s);
    SchmidtForm {
        lambda0,
        lambda1,
        m_vec: bloch(m),
        n_vec: bloch(partner),
        phase: extracted.params.psi(),
    }
}

/// Recover the relative parameters of a normalized state.
///
/// `α = ½ arcsin(2|ad − bc|)` clamped to `[0, π/4]`; θ is the angle between
/// the Bloch vectors of the dominant Schmidt pair; ψ inverts
/// `|b − c|² = sin²(θ/2)(1 + sin 2α cos ψ)`, which lands in `[0, π]` by
/// construction. At maximal entanglement (reduced-density gap ≤ 5e-8) the
/// pair (θ, ψ) is fixed by the convention `θ = 2 arcsin(|b − c|/√2)`, ψ = 0.
pub fn extract_params(s: &StateVector2Q) -> ExtractedParams {
    let inv = invariants_of(s);
    let two_det = math::clamp(2.0 * inv.det_inv.norm(), 0.0, 1.0);
    let alpha = math::clamp(0.5 * math::asin(two_det), 0.0, FRAC_PI_4);
    let cross_mag = inv.cross_inv.norm();
    let gap = math::sqrt((1.0 - two_det * two_det).max(0.0)); // cos 2α

    if gap <= DEGENERACY_GAP {
        let k = math::clamp(cross_mag / core::f64::consts::SQRT_2, 0.0, 1.0);
        let theta = 2.0 * math::asin(k);
        return ExtractedParams {
            params: RelativeParams::new(alpha, theta, 0.0).expect("clamped values"),
            psi_identifiable: false,
        };
    }

    let [a, b, c, d] = *s.amps();
    let psihat = [[a, b], [c, d]];
    let rho_a = crate::su2::mat_mul(&psihat, &crate::su2::mat_adjoint(&psihat));
    let (_, vecs) = hermitian_eigen(&rho_a);
    let m = [vecs[0][1], vecs[1][1]];
    let partner = [
        m[0].conj() * psihat[0][0] + m[1].conj() * psihat[1][0],
        m[0].conj() * psihat[0][1] + m[1].conj() * psihat[1][1],
    ];
    let theta = angle_between(bloch(m), bloch(partner));

    let st = math::sin(theta / 2.0);
    if two_det <= PSI_IDENT_TOL || st <= PSI_IDENT_TOL {
        return ExtractedParams {
            params: RelativeParams::new(alpha, theta, 0.0).expect("clamped values"),
            psi_identifiable: false,
        };
    }

    let cos_psi = math::clamp(
        (cross_mag * cross_mag / (st * st) - 1.0) / two_det,
        -1.0,
        1.0,
    );
    ExtractedParams {
        params: RelativeParams::new(alpha, theta, math::acos(cos_psi)).expect("clamped values"),
        psi_identifiable: true,
    }
}

/// Compare the collective-rotation orbits of two states via their
/// invariants, identifying conjugate mirrors (see the module docs).
///
/// After rotating each state's global phase so that `ad − bc` is real and
/// non-negative, the cross invariants are compared componentwise in
/// magnitude, i.e. up to overall sign and complex conjugation. When either
/// determinant invariant is below `tol` (product case) the residual phase
/// freedom leaves only `|b − c|` comparable.
pub fn orbit_equal(s1: &StateVector2Q, s2: &StateVector2Q, tol: f64) -> Result<bool> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidInput(alloc::string::String::from(
            "tolerance must be positive and finite",
        )));
    }
    let (i1, i2) = (invariants_of(s1), invariants_of(s2));
    let (d1, d2) = (i1.det_inv, i2.det_inv);
    if (d1.norm() - d2.norm()).abs() > tol {
        return Ok(false);
    }
    if d1.norm().min(d2.norm()) <= tol {
        return Ok((i1.cross_inv.norm() - i2.cross_inv.norm()).abs() <= tol);
    }
    let fix = |d: ComplexAmp, cross: ComplexAmp| {
        // e^{iη} with η = −arg(d)/2 brings d to the positive real axis.
        let eta = -0.5 * math::atan2(d.im, d.re);
        cross * cis(eta)
    };
    let c1 = fix(d1, i1.cross_inv);
    let c2 = fix(d2, i2.cross_inv);
    Ok((c1.re.abs() - c2.re.abs()).abs() <= tol && (c1.im.abs() - c2.im.abs()).abs() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::su2::{equal_up_to_phase, haar_su2, RandomStream};
    use approx::assert_abs_diff_eq;

    const INV_SQRT2: f64 = core::f64::consts::FRAC_1_SQRT_2;

    fn params(a: f64, t: f64, p: f64) -> RelativeParams {
        RelativeParams::new(a, t, p).unwrap()
    }

    fn bell_phi_plus() -> StateVector2Q {
        StateVector2Q::from_amplitudes([cr(INV_SQRT2), cr(0.0), cr(0.0), cr(INV_SQRT2)]).unwrap()
    }

    fn singlet() -> StateVector2Q {
        StateVector2Q::from_amplitudes([cr(0.0), cr(INV_SQRT2), cr(-INV_SQRT2), cr(0.0)]).unwrap()
    }

    fn triplet() -> StateVector2Q {
        StateVector2Q::from_amplitudes([cr(0.0), cr(INV_SQRT2), cr(INV_SQRT2), cr(0.0)]).unwrap()
    }

    /// Random pure state: independent Haar factors on a random canonical
    /// state, which reaches every orbit.
    fn random_state(stream: &mut RandomStream) -> StateVector2Q {
        let p = params(
            stream.uniform_in(0.0, FRAC_PI_4),
            stream.uniform_in(0.0, PI),
            stream.uniform_in(0.0, PI),
        );
        let u = haar_su2(stream);
        let v = haar_su2(stream);
        tensor(&u, &v).apply(&prepare_canonical(&p))
    }

    #[test]
    #[allow(clippy::approx_constant)] // the near-π literals are the point
    fn range_validation_clamps_slack_and_rejects_gross_violations() {
        // 0.7853981634 exceeds π/4 by ~1.3e-11 and must clamp, not fail.
        let p = params(0.785_398_163_4, 3.141_592_653_6, 0.0);
        assert!(p.alpha() <= FRAC_PI_4 && p.theta() <= PI);
        assert!(RelativeParams::new(-0.01, 0.0, 0.0).is_err());
        assert!(RelativeParams::new(0.0, 3.2, 0.0).is_err());
        assert!(RelativeParams::new(0.0, 0.0, f64::NAN).is_err());
    }

    #[test]
    fn canonical_bell_states() {
        let plus = prepare_canonical(&params(FRAC_PI_4, 0.0, 0.0));
        assert!(equal_up_to_phase(&plus, &bell_phi_plus(), 1e-12).unwrap());
        for i in [1, 2] {
            assert!(plus.amp(i).norm() <= 1e-15);
        }

        let s = prepare_canonical(&params(FRAC_PI_4, PI, 0.0));
        assert!(equal_up_to_phase(&s, &singlet(), 1e-12).unwrap());
        assert_abs_diff_eq!(s.amp(1).re, INV_SQRT2, epsilon = 1e-15);
        assert_abs_diff_eq!(s.amp(2).re, -INV_SQRT2, epsilon = 1e-15);
    }

    #[test]
    fn canonical_product_case() {
        let theta = 0.9;
        let p = prepare_canonical(&params(0.0, theta, 2.3));
        let target = StateVector2Q::from_amplitudes([
            cr((theta / 2.0).cos()),
            cr((theta / 2.0).sin()),
            cr(0.0),
            cr(0.0),
        ])
        .unwrap();
        assert!(equal_up_to_phase(&p, &target, 1e-12).unwrap());
    }

    #[test]
    fn circuit_route_matches_closed_form() {
        assert!(equal_up_to_phase(
            &prepare_via_circuit(&params(0.0, 0.0, 0.0)),
            &prepare_canonical(&params(0.0, 0.0, 0.0)),
            1e-12
        )
        .unwrap());

        let trip = prepare_via_circuit(&params(FRAC_PI_4, PI, PI));
        assert!(equal_up_to_phase(&trip, &triplet(), 1e-12).unwrap());

        let mut stream = RandomStream::new(31);
        for _ in 0..1000 {
            let p = params(
                stream.uniform_in(0.0, FRAC_PI_4),
                stream.uniform_in(0.0, PI),
                stream.uniform_in(0.0, PI),
            );
            assert!(
                equal_up_to_phase(&prepare_via_circuit(&p), &prepare_canonical(&p), 1e-12).unwrap()
            );
        }
    }

    #[test]
    fn circuit_matches_on_the_20_cubed_grid() {
        for i in 0..20 {
            for j in 0..20 {
                for k in 0..20 {
                    let p = params(
                        FRAC_PI_4 * i as f64 / 19.0,
                        PI * j as f64 / 19.0,
                        PI * k as f64 / 19.0,
                    );
                    assert!(equal_up_to_phase(
                        &prepare_via_circuit(&p),
                        &prepare_canonical(&p),
                        1e-12
                    )
                    .unwrap());
                }
            }
        }
    }

    #[test]
    fn invariant_closed_forms_on_grid() {
        // det = ½ sin 2α and cross = sin(θ/2)(e^{-iψ/2} cos α + e^{iψ/2} sin α)
        for i in 0..20 {
            for j in 0..20 {
                for k in 0..20 {
                    let (a, t, ps) = (
                        FRAC_PI_4 * i as f64 / 19.0,
                        PI * j as f64 / 19.0,
                        PI * k as f64 / 19.0,
                    );
                    let inv = invariants_of(&prepare_canonical(&params(a, t, ps)));
                    assert!(
                        (inv.det_inv().norm() - 0.5 * (2.0 * a).sin()).abs() <= 1e-12,
                        "det at ({a},{t},{ps})"
                    );
                    let expect =
                        (cis(-ps / 2.0) * a.cos() + cis(ps / 2.0) * a.sin()) * (t / 2.0).sin();
                    assert!(
                        (inv.cross_inv() - expect).norm() <= 1e-12,
                        "cross at ({a},{t},{ps})"
                    );
                }
            }
        }
    }

    #[test]
    fn singlet_invariants() {
        let inv = invariants_of(&singlet());
        assert!((inv.det_inv() - cr(0.5)).norm() <= 1e-15);
        assert!((inv.cross_inv() - cr(2.0 * INV_SQRT2)).norm() <= 1e-15);
    }

    #[test]
    fn concurrence_examples() {
        assert!(concurrence(&prepare_canonical(&params(0.0, 1.0, 0.0))) <= 1e-15);
        assert_abs_diff_eq!(concurrence(&bell_phi_plus()), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(concurrence(&singlet()), 1.0, epsilon = 1e-12);
        for i in 0..10 {
            let a = FRAC_PI_4 * i as f64 / 9.0;
            let got = concurrence(&prepare_canonical(&params(a, 1.3, 0.7)));
            assert_abs_diff_eq!(got, (2.0 * a).sin(), epsilon = 1e-12);
        }
    }

    #[test]
    fn extraction_of_bell_states_follows_the_convention() {
        let e = extract_params(&bell_phi_plus());
        assert_abs_diff_eq!(e.params.alpha(), FRAC_PI_4, epsilon = 1e-7);
        assert_abs_diff_eq!(e.params.theta(), 0.0, epsilon = 1e-7);
        assert_eq!(e.params.psi(), 0.0);
        assert!(!e.psi_identifiable);

        let e = extract_params(&singlet());
        assert_abs_diff_eq!(e.params.alpha(), FRAC_PI_4, epsilon = 1e-7);
        assert_abs_diff_eq!(e.params.theta(), PI, epsilon = 1e-7);
        assert_eq!(e.params.psi(), 0.0);
    }

    #[test]
    fn extraction_of_product_states() {
        let theta: f64 = 1.234;
        let s = StateVector2Q::from_amplitudes([
            cr((theta / 2.0).cos()),
            cr((theta / 2.0).sin()),
            cr(0.0),
            cr(0.0),
        ])
        .unwrap();
        let e = extract_params(&s);
        assert_abs_diff_eq!(e.params.alpha(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(e.params.theta(), theta, epsilon = 1e-12);
        assert_eq!(e.params.psi(), 0.0);
        assert!(!e.psi_identifiable);
    }

    #[test]
    fn extraction_round_trips_canonical_parameters() {
        let mut stream = RandomStream::new(17);
        for _ in 0..500 {
            // Stay away from the degenerate edges where ψ is conventional.
            let p = params(
                stream.uniform_in(0.05, FRAC_PI_4 - 0.05),
                stream.uniform_in(0.1, PI - 0.1),
                stream.uniform_in(0.05, PI - 0.05),
            );
            let rotated = {
                let u = haar_su2(&mut stream);
                tensor(&u, &u).apply(&prepare_canonical(&p))
            };
            let e = extract_params(&rotated);
            assert_abs_diff_eq!(e.params.alpha(), p.alpha(), epsilon = 1e-9);
            assert_abs_diff_eq!(e.params.theta(), p.theta(), epsilon = 1e-9);
            assert_abs_diff_eq!(e.params.psi(), p.psi(), epsilon = 1e-9);
            assert!(e.psi_identifiable);
        }
    }

    #[test]
    fn frame_invariance_of_invariants_and_parameters() {
        let p = params(0.3, 1.1, 2.0);
        let base = prepare_canonical(&p);
        let inv0 = invariants_of(&base);
        let mut stream = RandomStream::new(41);
        for _ in 0..1000 {
            let u = haar_su2(&mut stream);
            let rotated = tensor(&u, &u).apply(&base);
            let inv = invariants_of(&rotated);
            assert!((inv.det_inv() - inv0.det_inv()).norm() <= 1e-10);
            assert!((inv.cross_inv() - inv0.cross_inv()).norm() <= 1e-10);
            let e = extract_params(&rotated);
            assert_abs_diff_eq!(e.params.alpha(), p.alpha(), epsilon = 1e-9);
            assert_abs_diff_eq!(e.params.theta(), p.theta(), epsilon = 1e-9);
            assert_abs_diff_eq!(e.params.psi(), p.psi(), epsilon = 1e-9);
        }
    }

    #[test]
    fn orbit_round_trip_for_random_states() {
        let mut stream = RandomStream::new(2);
        for _ in 0..10_000 {
            let s = random_state(&mut stream);
            let rec = prepare_canonical(&extract_params(&s).params);
            assert!(orbit_equal(&rec, &s, 1e-8).unwrap());
        }
    }

    #[test]
    fn orbit_equal_examples() {
        let mut stream = RandomStream::new(3);
        let s = random_state(&mut stream);
        let u = haar_su2(&mut stream);
        assert!(orbit_equal(&s, &tensor(&u, &u).apply(&s), 1e-9).unwrap());

        assert!(!orbit_equal(&singlet(), &triplet(), 1e-9).unwrap());

        let ket00 = StateVector2Q::from_amplitudes([cr(1.0), cr(0.0), cr(0.0), cr(0.0)]).unwrap();
        let product = prepare_canonical(&params(0.0, 0.8, 0.0));
        assert!(!orbit_equal(&ket00, &product, 1e-9).unwrap());

        assert!(orbit_equal(&s, &s, -1.0).is_err());
    }

    #[test]
    fn schmidt_form_structure() {
        let p = params(0.3, 1.1, 2.0);
        let f = schmidt_form(&prepare_canonical(&p));
        assert_abs_diff_eq!(f.lambda0, p.alpha().cos(), epsilon = 1e-12);
        assert_abs_diff_eq!(f.lambda1, p.alpha().sin(), epsilon = 1e-12);
        assert_abs_diff_eq!(
            f.lambda0 * f.lambda0 + f.lambda1 * f.lambda1,
            1.0,
            epsilon = 1e-12
        );
        let norm = |v: [f64; 3]| (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        assert_abs_diff_eq!(norm(f.m_vec), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(norm(f.n_vec), 1.0, epsilon = 1e-12);
        let dot = f.m_vec[0] * f.n_vec[0] + f.m_vec[1] * f.n_vec[1] + f.m_vec[2] * f.n_vec[2];
        assert_abs_diff_eq!(dot, p.theta().cos(), epsilon = 1e-10);
        assert_abs_diff_eq!(f.phase, p.psi(), epsilon = 1e-9);
    }
}
