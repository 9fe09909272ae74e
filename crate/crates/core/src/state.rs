//! Pure-state algebra for two and four polarization qubits.
//!
//! Kets are written over the computational polarization basis with H = 0 and
//! V = 1. Two-qubit amplitudes follow the fixed basis order (HH, HV, VH, VV)
//! with the first slot belonging to the first-listed photon; four-qubit
//! amplitudes are indexed by the bit string (b1 b2 b3 b4) with qubit 1 in the
//! most significant position. Constructors accept vectors whose norm is
//! within [`NORM_TOL`](crate::tolerance::NORM_TOL) of 1 and renormalize on
//! acceptance, so every state held by these types has unit norm.

use core::error::Error;
use core::f64::consts::FRAC_1_SQRT_2;
use core::fmt;

use num_complex::Complex64;

use crate::math;
use crate::tolerance::{NORM_TOL, PHASE_ANCHOR_MIN, ZERO_PROBABILITY};

/// Complex amplitude multiplying a basis ket. Dimensionless; finite for any
/// amplitude stored inside the state types.
pub type Amplitude = Complex64;

const ZERO: Amplitude = Amplitude::new(0.0, 0.0);

fn norm_of(amps: &[Amplitude]) -> f64 {
    math::sqrt(amps.iter().map(|a| a.norm_sqr()).sum())
}

fn all_finite(amps: &[Amplitude]) -> bool {
    amps.iter().all(|a| a.re.is_finite() && a.im.is_finite())
}

/// Errors from state construction and projection arguments.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum StateError {
    /// Input amplitudes contain a NaN or an infinity.
    NonFinite,
    /// Input vector norm deviates from 1 beyond [`NORM_TOL`].
    NotNormalized { norm: f64 },
    /// A qubit index lies outside 1..=4.
    QubitOutOfRange { index: usize },
    /// The measured pair names the same qubit twice.
    MeasuredPairNotDistinct { index: usize },
}

impl fmt::Display for StateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateError::NonFinite => write!(f, "amplitudes must be finite"),
            StateError::NotNormalized { norm } => write!(
                f,
                "state norm {norm} deviates from 1 by more than {NORM_TOL:e}"
            ),
            StateError::QubitOutOfRange { index } => {
                write!(f, "qubit index {index} outside 1..=4")
            }
            StateError::MeasuredPairNotDistinct { index } => {
                write!(f, "measured pair repeats qubit {index}")
            }
        }
    }
}

impl Error for StateError {}

/// Normalized pure state of two polarization qubits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoQubitState {
    amps: [Amplitude; 4],
}

impl TwoQubitState {
    /// Builds a state from amplitudes in basis order (HH, HV, VH, VV). The
    /// vector must be normalized within [`NORM_TOL`]; it is renormalized
    /// exactly on acceptance.
    pub fn new(amps: [Amplitude; 4]) -> Result<Self, StateError> {
        if !all_finite(&amps) {
            return Err(StateError::NonFinite);
        }
        let norm = norm_of(&amps);
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(StateError::NotNormalized { norm });
        }
        Ok(Self::renormalized(amps))
    }

    /// Scales a nonzero vector to unit norm. Callers guarantee norm > 0.
    pub(crate) fn renormalized(mut amps: [Amplitude; 4]) -> Self {
        let norm = norm_of(&amps);
        for a in &mut amps {
            *a /= norm;
        }
        Self { amps }
    }

    /// Amplitudes in basis order (HH, HV, VH, VV).
    pub fn amps(&self) -> [Amplitude; 4] {
        self.amps
    }

    pub fn amp_hh(&self) -> Amplitude {
        self.amps[0]
    }

    pub fn amp_hv(&self) -> Amplitude {
        self.amps[1]
    }

    pub fn amp_vh(&self) -> Amplitude {
        self.amps[2]
    }

    pub fn amp_vv(&self) -> Amplitude {
        self.amps[3]
    }

    /// Inner product ⟨self|other⟩.
    pub fn inner(&self, other: &Self) -> Amplitude {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Applies the global-phase convention: the first amplitude in basis
    /// order with modulus above [`PHASE_ANCHOR_MIN`] is rotated to the
    /// positive real axis.
    pub fn canonicalized(&self) -> Self {
        let mut amps = self.amps;
        if let Some(anchor) = self.amps.iter().find(|a| a.norm() > PHASE_ANCHOR_MIN) {
            let phase = anchor.conj() / anchor.norm();
            for a in &mut amps {
                *a *= phase;
            }
        }
        Self { amps }
    }
}

/// Normalized pure state of four polarization qubits. Amplitude `i` belongs
/// to the ket whose bits are (b1 b2 b3 b4), qubit 1 most significant, with
/// H = 0 and V = 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourQubitState {
    amps: [Amplitude; 16],
}

impl FourQubitState {
    /// Builds a state from 16 amplitudes in the bit-string index order. The
    /// vector must be normalized within [`NORM_TOL`]; it is renormalized
    /// exactly on acceptance.
    pub fn new(amps: [Amplitude; 16]) -> Result<Self, StateError> {
        if !all_finite(&amps) {
            return Err(StateError::NonFinite);
        }
        let norm = norm_of(&amps);
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(StateError::NotNormalized { norm });
        }
        Ok(Self::renormalized(amps))
    }

    pub(crate) fn renormalized(mut amps: [Amplitude; 16]) -> Self {
        let norm = norm_of(&amps);
        for a in &mut amps {
            *a /= norm;
        }
        Self { amps }
    }

    /// Amplitudes in bit-string index order.
    pub fn amps(&self) -> [Amplitude; 16] {
        self.amps
    }

    /// Amplitude of the ket with bit-string index `index` (0..16).
    pub fn amp(&self, index: usize) -> Amplitude {
        self.amps[index]
    }
}

/// The four Bell states. The declaration order is the crate-wide iteration
/// and serialization order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BellLabel {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellLabel {
    /// All labels in the fixed order.
    pub const ALL: [BellLabel; 4] = [
        BellLabel::PhiPlus,
        BellLabel::PhiMinus,
        BellLabel::PsiPlus,
        BellLabel::PsiMinus,
    ];

    /// Position of this label in [`BellLabel::ALL`].
    pub fn index(self) -> usize {
        match self {
            BellLabel::PhiPlus => 0,
            BellLabel::PhiMinus => 1,
            BellLabel::PsiPlus => 2,
            BellLabel::PsiMinus => 3,
        }
    }

    /// Stable lowercase name used in serialized output.
    pub fn name(self) -> &'static str {
        match self {
            BellLabel::PhiPlus => "phi_plus",
            BellLabel::PhiMinus => "phi_minus",
            BellLabel::PsiPlus => "psi_plus",
            BellLabel::PsiMinus => "psi_minus",
        }
    }
}

impl fmt::Display for BellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Returns the normalized Bell state for `label`:
/// Φ± = (|HH⟩ ± |VV⟩)/√2 and Ψ± = (|HV⟩ ± |VH⟩)/√2. The first nonzero
/// amplitude in basis order is real positive, fixing the global phase.
pub fn bell_state(label: BellLabel) -> TwoQubitState {
    let r = Amplitude::new(FRAC_1_SQRT_2, 0.0);
    let amps = match label {
        BellLabel::PhiPlus => [r, ZERO, ZERO, r],
        BellLabel::PhiMinus => [r, ZERO, ZERO, -r],
        BellLabel::PsiPlus => [ZERO, r, r, ZERO],
        BellLabel::PsiMinus => [ZERO, r, -r, ZERO],
    };
    TwoQubitState::renormalized(amps)
}

/// Kronecker product. `a` fills the first two qubit slots of the output and
/// `b` the last two, so the ket (b1 b2 b3 b4) carries a(b1 b2) * b(b3 b4).
pub fn tensor(a: &TwoQubitState, b: &TwoQubitState) -> FourQubitState {
    let mut amps = [ZERO; 16];
    for (i, &ai) in a.amps.iter().enumerate() {
        for (j, &bj) in b.amps.iter().enumerate() {
            amps[(i << 2) | j] = ai * bj;
        }
    }
    FourQubitState::renormalized(amps)
}

/// Result of a Bell projection: the Born probability, and the renormalized
/// conditional state of the unmeasured pair when the probability is at
/// least [`ZERO_PROBABILITY`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Projection {
    pub probability: f64,
    pub post_state: Option<TwoQubitState>,
}

/// Projects `measured_pair` of `joint` onto the Bell state `onto` and
/// returns the Born probability together with the conditional state of the
/// remaining two qubits, ordered by ascending qubit index. The first
/// element of `measured_pair` occupies the first slot of the Bell state;
/// indices are 1-based.
pub fn project_bell(
    joint: &FourQubitState,
    onto: BellLabel,
    measured_pair: (usize, usize),
) -> Result<Projection, StateError> {
    let (mi, mj) = measured_pair;
    for index in [mi, mj] {
        if !(1..=4).contains(&index) {
            return Err(StateError::QubitOutOfRange { index });
        }
    }
    if mi == mj {
        return Err(StateError::MeasuredPairNotDistinct { index: mi });
    }
    let mut rest = [0usize; 2];
    let mut r = 0;
    for q in 1..=4 {
        if q != mi && q != mj {
            rest[r] = q;
            r += 1;
        }
    }
    // qubit q occupies bit 4 - q of the joint index
    let shift = |q: usize| 4 - q;
    let bell = bell_state(onto);
    let mut out = [ZERO; 4];
    for bk in 0..2usize {
        for bl in 0..2usize {
            let mut acc = ZERO;
            for bi in 0..2usize {
                for bj in 0..2usize {
                    let idx = (bi << shift(mi))
                        | (bj << shift(mj))
                        | (bk << shift(rest[0]))
                        | (bl << shift(rest[1]));
                    acc += bell.amps[(bi << 1) | bj].conj() * joint.amps[idx];
                }
            }
            out[(bk << 1) | bl] = acc;
        }
    }
    let probability: f64 = out.iter().map(|a| a.norm_sqr()).sum();
    let post_state = if probability < ZERO_PROBABILITY {
        None
    } else {
        Some(TwoQubitState::renormalized(out))
    };
    Ok(Projection {
        probability,
        post_state,
    })
}

/// Side of the bipartition that indexes the rows of the amplitude matrix.
/// The singular values are the same for both cuts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchmidtCut {
    FirstQubit,
    SecondQubit,
}

/// Schmidt coefficients of a two-qubit pure state: lambda1 >= lambda2 >= 0
/// and lambda1^2 + lambda2^2 = 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchmidtPair {
    lambda1: f64,
    lambda2: f64,
}

impl SchmidtPair {
    pub fn lambda1(&self) -> f64 {
        self.lambda1
    }

    pub fn lambda2(&self) -> f64 {
        self.lambda2
    }
}

/// Schmidt decomposition through the closed-form eigenvalues of the 2x2
/// Gram matrix m m-dagger of the amplitude matrix m. Writing that Hermitian
/// matrix as [[a, b], [conj(b), c]], the squared singular values are
/// (a + c)/2 +- r with r = sqrt(((a - c)/2)^2 + |b|^2); the radicand is a
/// sum of squares, so r keeps full precision even when the two values
/// nearly coincide. The smaller root is taken as |det m|^2 divided by the
/// larger, which avoids cancellation near product states.
pub fn schmidt(state: &TwoQubitState, cut: SchmidtCut) -> SchmidtPair {
    let [hh, hv, vh, vv] = state.amps;
    let (m00, m01, m10, m11) = match cut {
        SchmidtCut::FirstQubit => (hh, hv, vh, vv),
        SchmidtCut::SecondQubit => (hh, vh, hv, vv),
    };
    let a = m00.norm_sqr() + m01.norm_sqr();
    let c = m10.norm_sqr() + m11.norm_sqr();
    let b = m00 * m10.conj() + m01 * m11.conj();
    let half_gap = (a - c) / 2.0;
    let r = math::sqrt(half_gap * half_gap + b.norm_sqr());
    let d = (m00 * m11 - m01 * m10).norm_sqr();
    let big = (a + c) / 2.0 + r;
    let small = if big > 0.0 { d / big } else { 0.0 };
    let total = big + small;
    let lambda1 = math::sqrt(big / total);
    let lambda2 = math::sqrt(small / total);
    if lambda2 > lambda1 {
        SchmidtPair {
            lambda1: lambda2,
            lambda2: lambda1,
        }
    } else {
        SchmidtPair { lambda1, lambda2 }
    }
}
