//! Dense complex linear algebra at dimensions 2 and 4.
//!
//! Basis conventions used throughout the crate: two-qubit basis states are
//! ordered `|00⟩, |01⟩, |10⟩, |11⟩` with the first tensor factor as the most
//! significant index, so a Kronecker product `tensor(u, v)` acts with `u` on
//! the first qubit. Gate conventions follow the half-angle form with a minus
//! sign in the exponent: `R_y(φ) = exp(-i φ σ_y / 2)` and
//! `R_z(ψ) = diag(e^{-iψ/2}, e^{+iψ/2})`.
//!
//! Every value is immutable after construction; all functions here are pure
//! and thread-safe. [`RandomStream`] is the one stateful object and must be
//! owned by a single task; use [`RandomStream::split`] to derive independent
//! child streams.

use alloc::format;
use alloc::string::String;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::math;

/// A complex amplitude. Operations reject non-finite values at the
/// validating constructors.
pub type ComplexAmp = Complex<f64>;

/// Max-norm tolerance on `‖U†U − I‖` for unitary inputs.
pub const UNITARY_TOL: f64 = 1e-12;
/// Tolerance on `|‖s‖² − 1|` for state vectors.
pub const NORM_TOL: f64 = 1e-12;

#[inline]
pub(crate) fn c(re: f64, im: f64) -> ComplexAmp {
    Complex::new(re, im)
}

#[inline]
pub(crate) fn cr(re: f64) -> ComplexAmp {
    Complex::new(re, 0.0)
}

/// `e^{i angle}` built from the scalar wrappers so it exists without `std`.
#[inline]
pub(crate) fn cis(angle: f64) -> ComplexAmp {
    Complex::new(math::cos(angle), math::sin(angle))
}

// ---------------------------------------------------------------------------
// Generic fixed-size helpers shared by the 2x2 and 4x4 types.
// ---------------------------------------------------------------------------

pub(crate) fn mat_mul<const N: usize>(
    a: &[[ComplexAmp; N]; N],
    b: &[[ComplexAmp; N]; N],
) -> [[ComplexAmp; N]; N] {
    let mut out = [[Complex::new(0.0, 0.0); N]; N];
    for i in 0..N {
        for k in 0..N {
            let aik = a[i][k];
            if aik == Complex::new(0.0, 0.0) {
                continue;
            }
            for j in 0..N {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub(crate) fn mat_adjoint<const N: usize>(a: &[[ComplexAmp; N]; N]) -> [[ComplexAmp; N]; N] {
    let mut out = [[Complex::new(0.0, 0.0); N]; N];
    for i in 0..N {
        for j in 0..N {
            out[i][j] = a[j][i].conj();
        }
    }
    out
}

pub(crate) fn mat_identity<const N: usize>() -> [[ComplexAmp; N]; N] {
    let mut out = [[Complex::new(0.0, 0.0); N]; N];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = Complex::new(1.0, 0.0);
    }
    out
}

/// Largest entry magnitude of `a − b`.
pub(crate) fn mat_max_abs_diff<const N: usize>(
    a: &[[ComplexAmp; N]; N],
    b: &[[ComplexAmp; N]; N],
) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..N {
        for j in 0..N {
            let d = (a[i][j] - b[i][j]).norm();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

pub(crate) fn mat_is_finite<const N: usize>(a: &[[ComplexAmp; N]; N]) -> bool {
    a.iter()
        .flatten()
        .all(|z| z.re.is_finite() && z.im.is_finite())
}

/// `‖A†A − I‖_max`.
pub(crate) fn unitarity_defect<const N: usize>(a: &[[ComplexAmp; N]; N]) -> f64 {
    let gram = mat_mul(&mat_adjoint(a), a);
    mat_max_abs_diff(&gram, &mat_identity::<N>())
}

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition (cyclic Jacobi with complex rotations).
// ---------------------------------------------------------------------------

/// Eigendecomposition of a Hermitian matrix. Returns eigenvalues in
/// ascending order and the matching orthonormal eigenvectors as columns.
///
/// Each (p, q) step conjugates by `J = P·G` with `P = diag(1, e^{-iφ})`
/// absorbing the phase of `a_pq` and `G` the real Jacobi rotation with
/// `2γ = atan2(2|a_pq|, a_pp − a_qq)`, which zeroes the pivot exactly.
pub(crate) fn hermitian_eigen<const N: usize>(
    a: &[[ComplexAmp; N]; N],
) -> ([f64; N], [[ComplexAmp; N]; N]) {
    let mut a = *a;
    let mut v = mat_identity::<N>();

    for _sweep in 0..60 {
        let mut off = 0.0;
        for p in 0..N {
            for q in (p + 1)..N {
                off += a[p][q].norm_sqr();
            }
        }
        if off <= 1e-28 {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                let apq = a[p][q];
                let r = apq.norm();
                if r < 1e-300 {
                    continue;
                }
                let phase = apq / r; // e^{iφ}
                let gamma = 0.5 * math::atan2(2.0 * r, a[p][p].re - a[q][q].re);
                let (cg, sg) = (math::cos(gamma), math::sin(gamma));
                let jpp = cr(cg);
                let jpq = cr(-sg);
                let jqp = phase.conj() * sg;
                let jqq = phase.conj() * cg;

                // A <- A J (columns p, q), then A <- J† A (rows p, q).
                for i in 0..N {
                    let (ap, aq) = (a[i][p], a[i][q]);
                    a[i][p] = ap * jpp + aq * jqp;
                    a[i][q] = ap * jpq + aq * jqq;
                }
                for k in 0..N {
                    let (ap, aq) = (a[p][k], a[q][k]);
                    a[p][k] = jpp.conj() * ap + jqp.conj() * aq;
                    a[q][k] = jpq.conj() * ap + jqq.conj() * aq;
                }
                for i in 0..N {
                    let (vp, vq) = (v[i][p], v[i][q]);
                    v[i][p] = vp * jpp + vq * jqp;
                    v[i][q] = vp * jpq + vq * jqq;
                }
            }
        }
    }

    let mut order: [usize; N] = [0; N];
    for (i, slot) in order.iter_mut().enumerate() {
        *slot = i;
    }
    order.sort_unstable_by(|&i, &j| a[i][i].re.partial_cmp(&a[j][j].re).unwrap());

    let mut vals = [0.0; N];
    let mut vecs = [[Complex::new(0.0, 0.0); N]; N];
    for (dst, &src) in order.iter().enumerate() {
        vals[dst] = a[src][src].re;
        for i in 0..N {
            vecs[i][dst] = v[i][src];
        }
    }
    (vals, vecs)
}

// ---------------------------------------------------------------------------
// Plain matrix types.
// ---------------------------------------------------------------------------

/// A raw 2×2 complex matrix with no structural guarantees.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix2 {
    e: [[ComplexAmp; 2]; 2],
}

/// A raw 4×4 complex matrix with no structural guarantees.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix4 {
    e: [[ComplexAmp; 4]; 4],
}

macro_rules! impl_matrix {
    ($name:ident, $n:literal) => {
        impl $name {
            pub fn from_entries(entries: [[ComplexAmp; $n]; $n]) -> Self {
                Self { e: entries }
            }

            pub fn zeros() -> Self {
                Self {
                    e: [[Complex::new(0.0, 0.0); $n]; $n],
                }
            }

            pub fn identity() -> Self {
                Self {
                    e: mat_identity::<$n>(),
                }
            }

            pub fn entry(&self, row: usize, col: usize) -> ComplexAmp {
                self.e[row][col]
            }

            pub fn entries(&self) -> &[[ComplexAmp; $n]; $n] {
                &self.e
            }

            pub fn mul(&self, rhs: &Self) -> Self {
                Self {
                    e: mat_mul(&self.e, &rhs.e),
                }
            }

            pub fn adjoint(&self) -> Self {
                Self {
                    e: mat_adjoint(&self.e),
                }
            }

            pub fn add(&self, rhs: &Self) -> Self {
                let mut e = self.e;
                for i in 0..$n {
                    for j in 0..$n {
                        e[i][j] += rhs.e[i][j];
                    }
                }
                Self { e }
            }

            pub fn sub(&self, rhs: &Self) -> Self {
                let mut e = self.e;
                for i in 0..$n {
                    for j in 0..$n {
                        e[i][j] -= rhs.e[i][j];
                    }
                }
                Self { e }
            }

            pub fn scale(&self, factor: f64) -> Self {
                let mut e = self.e;
                for row in e.iter_mut() {
                    for z in row.iter_mut() {
                        *z *= factor;
                    }
                }
                Self { e }
            }

            pub fn trace(&self) -> ComplexAmp {
                (0..$n).map(|i| self.e[i][i]).sum()
            }

            /// Largest entry magnitude of the difference to `rhs`.
            pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
                mat_max_abs_diff(&self.e, &rhs.e)
            }

            /// `‖A − A†‖_max`.
            pub fn hermiticity_defect(&self) -> f64 {
                mat_max_abs_diff(&self.e, &mat_adjoint(&self.e))
            }
        }
    };
}

impl_matrix!(Matrix2, 2);
impl_matrix!(Matrix4, 4);

// ---------------------------------------------------------------------------
// Validated wrappers.
// ---------------------------------------------------------------------------

/// A 2×2 unitary, validated to `‖U†U − I‖_max ≤ 1e-12` at construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Unitary2 {
    m: Matrix2,
}

/// A 4×4 unitary, validated to `‖U†U − I‖_max ≤ 1e-12` at construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Unitary4 {
    m: Matrix4,
}

impl Unitary2 {
    pub fn from_entries(entries: [[ComplexAmp; 2]; 2]) -> Result<Self> {
        if !mat_is_finite(&entries) {
            return Err(Error::InvalidInput(String::from(
                "unitary entries must be finite",
            )));
        }
        let defect = unitarity_defect(&entries);
        if defect > UNITARY_TOL {
            return Err(Error::InvalidInput(format!(
                "matrix is not unitary: ‖U†U − I‖_max = {defect:.3e}"
            )));
        }
        Ok(Self {
            m: Matrix2 { e: entries },
        })
    }

    /// For products of already-validated unitaries; checked in debug builds.
    pub(crate) fn new_unchecked(m: Matrix2) -> Self {
        debug_assert!(unitarity_defect(&m.e) <= 64.0 * UNITARY_TOL);
        Self { m }
    }

    pub fn identity() -> Self {
        Self {
            m: Matrix2::identity(),
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> ComplexAmp {
        self.m.entry(row, col)
    }

    pub fn matrix(&self) -> &Matrix2 {
        &self.m
    }

    pub fn adjoint(&self) -> Self {
        Self {
            m: self.m.adjoint(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new_unchecked(self.m.mul(&rhs.m))
    }

    pub fn det(&self) -> ComplexAmp {
        self.m.e[0][0] * self.m.e[1][1] - self.m.e[0][1] * self.m.e[1][0]
    }

    /// Apply to a single-qubit amplitude pair.
    pub fn apply(&self, amps: [ComplexAmp; 2]) -> [ComplexAmp; 2] {
        [
            self.m.e[0][0] * amps[0] + self.m.e[0][1] * amps[1],
            self.m.e[1][0] * amps[0] + self.m.e[1][1] * amps[1],
        ]
    }
}

impl Unitary4 {
    pub fn from_entries(entries: [[ComplexAmp; 4]; 4]) -> Result<Self> {
        if !mat_is_finite(&entries) {
            return Err(Error::InvalidInput(String::from(
                "unitary entries must be finite",
            )));
        }
        let defect = unitarity_defect(&entries);
        if defect > UNITARY_TOL {
            return Err(Error::InvalidInput(format!(
                "matrix is not unitary: ‖U†U − I‖_max = {defect:.3e}"
            )));
        }
        Ok(Self {
            m: Matrix4 { e: entries },
        })
    }

    pub(crate) fn new_unchecked(m: Matrix4) -> Self {
        debug_assert!(unitarity_defect(&m.e) <= 64.0 * UNITARY_TOL);
        Self { m }
    }

    pub fn identity() -> Self {
        Self {
            m: Matrix4::identity(),
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> ComplexAmp {
        self.m.entry(row, col)
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.m
    }

    pub fn adjoint(&self) -> Self {
        Self {
            m: self.m.adjoint(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new_unchecked(self.m.mul(&rhs.m))
    }

    /// Apply to a two-qubit state; unitarity keeps the norm.
    pub fn apply(&self, state: &StateVector2Q) -> StateVector2Q {
        let s = state.amps();
        let mut out = [Complex::new(0.0, 0.0); 4];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = (0..4).map(|j| self.m.e[i][j] * s[j]).sum();
        }
        StateVector2Q::new_unchecked(out)
    }
}

/// A normalized pure two-qubit state `a|00⟩ + b|01⟩ + c|10⟩ + d|11⟩`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StateVector2Q {
    amps: [ComplexAmp; 4],
}

impl StateVector2Q {
    /// Requires `|‖s‖² − 1| ≤ 1e-12`; see [`StateVector2Q::normalized`] for
    /// inputs that only need rescaling.
    pub fn from_amplitudes(amps: [ComplexAmp; 4]) -> Result<Self> {
        if !amps.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::InvalidInput(String::from(
                "state amplitudes must be finite",
            )));
        }
        let norm_sqr: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidInput(format!(
                "state is not normalized: ‖s‖² = {norm_sqr:.15}"
            )));
        }
        Ok(Self { amps })
    }

    /// Rescale arbitrary finite amplitudes to unit norm.
    pub fn normalized(amps: [ComplexAmp; 4]) -> Result<Self> {
        if !amps.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::InvalidInput(String::from(
                "state amplitudes must be finite",
            )));
        }
        let norm = math::sqrt(amps.iter().map(|z| z.norm_sqr()).sum());
        if norm < 1e-150 {
            return Err(Error::InvalidInput(String::from(
                "cannot normalize the zero vector",
            )));
        }
        let mut out = amps;
        for z in out.iter_mut() {
            *z /= norm;
        }
        Ok(Self { amps: out })
    }

    pub(crate) fn new_unchecked(amps: [ComplexAmp; 4]) -> Self {
        debug_assert!({
            let n: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
            (n - 1.0).abs() <= 1e-10
        });
        Self { amps }
    }

    pub fn amps(&self) -> &[ComplexAmp; 4] {
        &self.amps
    }

    pub fn amp(&self, index: usize) -> ComplexAmp {
        self.amps[index]
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> ComplexAmp {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// The rank-1 density `|s⟩⟨s|`.
    pub fn outer(&self) -> DensityMatrix4 {
        let mut e = [[Complex::new(0.0, 0.0); 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                e[i][j] = self.amps[i] * self.amps[j].conj();
            }
        }
        DensityMatrix4::new_unchecked(Matrix4 { e })
    }
}

/// A 4×4 density operator: Hermitian and unit-trace within 1e-12, with
/// eigenvalues ≥ -1e-10. Small negative eigenvalues from upstream roundoff
/// are clamped to zero and the spectrum renormalized; anything worse is
/// rejected.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix4 {
    m: Matrix4,
}

/// Eigenvalue floor accepted (and clamped away) by density validation.
pub const DENSITY_EIG_TOL: f64 = 1e-10;

impl DensityMatrix4 {
    pub fn from_matrix(m: Matrix4) -> Result<Self> {
        if !mat_is_finite(m.entries()) {
            return Err(Error::InvalidDensity(String::from(
                "entries must be finite",
            )));
        }
        let herm = m.hermiticity_defect();
        if herm > 1e-12 {
            return Err(Error::InvalidDensity(format!(
                "not Hermitian: ‖A − A†‖_max = {herm:.3e}"
            )));
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() > 1e-12 || tr.im.abs() > 1e-12 {
            return Err(Error::InvalidDensity(format!(
                "trace is {} + {}i, expected 1",
                tr.re, tr.im
            )));
        }
        let (vals, vecs) = hermitian_eigen(m.entries());
        if vals[0] < -DENSITY_EIG_TOL {
            return Err(Error::InvalidDensity(format!(
                "negative eigenvalue {:.3e}",
                vals[0]
            )));
        }
        if vals[0] >= 0.0 {
            return Ok(Self { m });
        }
        // Clamp the sub-zero tail and renormalize the spectrum.
        let clamped: [f64; 4] = core::array::from_fn(|i| vals[i].max(0.0));
        let total: f64 = clamped.iter().sum();
        let mut e = [[Complex::new(0.0, 0.0); 4]; 4];
        for (k, lam) in clamped.iter().enumerate() {
            let w = lam / total;
            for i in 0..4 {
                for j in 0..4 {
                    e[i][j] += vecs[i][k] * vecs[j][k].conj() * w;
                }
            }
        }
        Ok(Self { m: Matrix4 { e } })
    }

    pub fn from_entries(entries: [[ComplexAmp; 4]; 4]) -> Result<Self> {
        Self::from_matrix(Matrix4::from_entries(entries))
    }

    pub(crate) fn new_unchecked(m: Matrix4) -> Self {
        debug_assert!(m.hermiticity_defect() <= 1e-10);
        debug_assert!((m.trace().re - 1.0).abs() <= 1e-10);
        Self { m }
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.m
    }

    pub fn entry(&self, row: usize, col: usize) -> ComplexAmp {
        self.m.entry(row, col)
    }

    pub fn trace(&self) -> ComplexAmp {
        self.m.trace()
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> [f64; 4] {
        hermitian_eigen(self.m.entries()).0
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        self.m.max_abs_diff(&rhs.m)
    }
}

// ---------------------------------------------------------------------------
// Gates.
// ---------------------------------------------------------------------------

/// `R_y(φ) = exp(-i φ σ_y / 2) = [[cos(φ/2), -sin(φ/2)], [sin(φ/2), cos(φ/2)]]`.
pub fn rotation_y(angle: f64) -> Result<Unitary2> {
    if !angle.is_finite() {
        return Err(Error::InvalidInput(String::from(
            "rotation angle must be finite",
        )));
    }
    let (ch, sh) = (math::cos(angle / 2.0), math::sin(angle / 2.0));
    Ok(Unitary2::new_unchecked(Matrix2 {
        e: [[cr(ch), cr(-sh)], [cr(sh), cr(ch)]],
    }))
}

/// `R_z(ψ) = diag(e^{-iψ/2}, e^{+iψ/2})`.
pub fn rotation_z(angle: f64) -> Result<Unitary2> {
    if !angle.is_finite() {
        return Err(Error::InvalidInput(String::from(
            "rotation angle must be finite",
        )));
    }
    let half = cis(angle / 2.0);
    Ok(Unitary2::new_unchecked(Matrix2 {
        e: [[half.conj(), cr(0.0)], [cr(0.0), half]],
    }))
}

/// CNOT with the first qubit as control: swaps `|10⟩ ↔ |11⟩`.
pub fn cnot() -> Unitary4 {
    let mut e = [[Complex::new(0.0, 0.0); 4]; 4];
    e[0][0] = cr(1.0);
    e[1][1] = cr(1.0);
    e[2][3] = cr(1.0);
    e[3][2] = cr(1.0);
    Unitary4::new_unchecked(Matrix4 { e })
}

/// Kronecker product `u ⊗ v`: entry `[(2i+k)][(2j+l)] = u[i][j] · v[k][l]`.
pub fn tensor(u: &Unitary2, v: &Unitary2) -> Unitary4 {
    let mut e = [[Complex::new(0.0, 0.0); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    e[2 * i + k][2 * j + l] = u.entry(i, j) * v.entry(k, l);
                }
            }
        }
    }
    Unitary4::new_unchecked(Matrix4 { e })
}

/// Overlap test modulo global phase: true iff `|⟨s1|s2⟩| ≥ 1 − tol`.
pub fn equal_up_to_phase(s1: &StateVector2Q, s2: &StateVector2Q, tol: f64) -> Result<bool> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidInput(String::from(
            "tolerance must be positive and finite",
        )));
    }
    Ok(s1.inner(s2).norm() >= 1.0 - tol)
}

// ---------------------------------------------------------------------------
// Randomness.
// ---------------------------------------------------------------------------

/// Deterministic random stream: a seed plus an algorithm identifier fully
/// determine the sample sequence.
///
/// Each concurrent task must own its own stream; derive one per task with
/// [`RandomStream::split`], which hashes `(seed, task index)` into a child
/// seed.
#[derive(Clone, Debug)]
pub struct RandomStream {
    seed: u64,
    rng: ChaCha8Rng,
}

/// The only algorithm currently implemented.
pub const STREAM_ALGORITHM: &str = "chacha8";

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Constructor that checks the algorithm identifier.
    pub fn with_algorithm(seed: u64, algorithm: &str) -> Result<Self> {
        if algorithm != STREAM_ALGORITHM {
            return Err(Error::InvalidInput(format!(
                "unknown random stream algorithm {algorithm:?} (supported: {STREAM_ALGORITHM:?})"
            )));
        }
        Ok(Self::new(seed))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn algorithm(&self) -> &'static str {
        STREAM_ALGORITHM
    }

    /// Child stream for task `index`: seeded with a SplitMix64 hash of
    /// `(seed, index)` so siblings are decorrelated.
    pub fn split(&self, index: u64) -> Self {
        let mut z = self
            .seed
            .wrapping_add(0x9e37_79b9_7f4a_7c15_u64.wrapping_mul(index.wrapping_add(1)));
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        Self::new(z ^ (z >> 31))
    }

    /// Standard normal sample.
    pub fn next_normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    /// Uniform sample in `[0, 1)`.
    pub fn next_uniform(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    /// Uniform sample in `[lo, hi)`.
    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_uniform()
    }
}

/// Haar-distributed element of SU(2).
///
/// Four independent standard normals normalized to a unit quaternion
/// `(w, x, y, z)`, mapped to `w·I + i(x σ_x + y σ_y + z σ_z)`; the result has
/// determinant `w² + x² + y² + z² = 1`.
pub fn haar_su2(stream: &mut RandomStream) -> Unitary2 {
    loop {
        let (w, x, y, z) = (
            stream.next_normal(),
            stream.next_normal(),
            stream.next_normal(),
            stream.next_normal(),
        );
        let n = math::sqrt(w * w + x * x + y * y + z * z);
        if n < 1e-6 {
            continue;
        }
        let (w, x, y, z) = (w / n, x / n, y / n, z / n);
        return Unitary2::new_unchecked(Matrix2 {
            e: [[c(w, z), c(y, x)], [c(-y, x), c(w, -z)]],
        });
    }
}
