//! The swap-purification protocol on polarization-entangled pairs.
//!
//! Two sources each emit a partially entangled pair
//! cos(theta)|HH> + sin(theta)|VV>. A Bell-state measurement on the inner
//! photons (the second photon of the first pair and the first photon of the
//! second pair) projects the outer photons into one of four conditional
//! states. The Psi outcomes of equal-angle swaps are Bell states, which is
//! the purification effect; the Phi outcomes are less entangled than the
//! inputs and feed the recursive cascade in [`crate::ensemble`].

use alloc::vec::Vec;
use core::error::Error;
use core::f64::consts::FRAC_PI_2;
use core::fmt;

use crate::math;
use crate::measures::{entanglement_es, EntanglementValue};
use crate::state::{
    bell_state, project_bell, tensor, Amplitude, BellLabel, TwoQubitState,
};

const ZERO: Amplitude = Amplitude::new(0.0, 0.0);

/// Errors from angle construction and the absorption model.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AngleError {
    /// The angle, or an absorption parameter, is NaN or infinite.
    NonFinite,
    /// The angle falls outside the open interval (0, pi/2).
    OutOfRange { radians: f64 },
    /// An absorption coefficient or path length is negative.
    NegativeAbsorption { value: f64 },
}

impl fmt::Display for AngleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AngleError::NonFinite => write!(f, "value must be finite"),
            AngleError::OutOfRange { radians } => {
                write!(f, "angle {radians} rad outside the open interval (0, pi/2)")
            }
            AngleError::NegativeAbsorption { value } => {
                write!(f, "absorption parameter {value} must be non-negative")
            }
        }
    }
}

impl Error for AngleError {}

/// State parameter theta of cos(theta)|HH> + sin(theta)|VV>, restricted to
/// the open interval (0, pi/2). The endpoints are product states, not
/// entangled pairs, so construction rejects them.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct PhaseAngle {
    radians: f64,
}

impl PhaseAngle {
    /// Accepts a finite angle strictly between 0 and pi/2. The f64 value of
    /// pi/2 counts as the endpoint and is rejected.
    pub fn new(radians: f64) -> Result<Self, AngleError> {
        if !radians.is_finite() {
            return Err(AngleError::NonFinite);
        }
        if radians <= 0.0 || radians >= FRAC_PI_2 {
            return Err(AngleError::OutOfRange { radians });
        }
        Ok(Self { radians })
    }

    /// Clamps a finite value into the representable interior of (0, pi/2).
    /// Used where a computed angle can round onto an endpoint.
    pub(crate) fn clamped_interior(radians: f64) -> Self {
        Self {
            radians: radians.clamp(f64::MIN_POSITIVE, FRAC_PI_2.next_down()),
        }
    }

    pub fn radians(self) -> f64 {
        self.radians
    }
}

/// The pair state cos(theta)|HH> + sin(theta)|VV>.
pub fn make_phi(theta: PhaseAngle) -> TwoQubitState {
    let c = math::cos(theta.radians);
    let s = math::sin(theta.radians);
    TwoQubitState::renormalized([Amplitude::new(c, 0.0), ZERO, ZERO, Amplitude::new(s, 0.0)])
}

/// Pair angle produced by sending one photon of a Bell pair through a
/// polarization-sensitive absorber: sin(theta) = sqrt(1 / (1 + e^(-2 gamma L))),
/// conditioned on the photon surviving. `gamma` is the absorption
/// coefficient per unit length and `length` the path length, so theta grows
/// from pi/4 (no absorption) toward pi/2. Total absorption rounds onto the
/// pi/2 endpoint and is rejected as out of range.
pub fn theta_from_absorption(gamma: f64, length: f64) -> Result<PhaseAngle, AngleError> {
    for value in [gamma, length] {
        if value.is_nan() {
            return Err(AngleError::NonFinite);
        }
        if value < 0.0 {
            return Err(AngleError::NegativeAbsorption { value });
        }
    }
    let product = gamma * length;
    if !product.is_finite() {
        return Err(AngleError::NonFinite);
    }
    let sin_sq = 1.0 / (1.0 + math::exp(-2.0 * product));
    PhaseAngle::new(math::asin(math::sqrt(sin_sq)))
}

/// One conditional outcome of the Bell-state measurement: which Bell state
/// the inner photons collapsed to, how likely that is, and what the outer
/// photons are left in.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SwapOutcome {
    pub label: BellLabel,
    pub probability: f64,
    /// State of the outer photon pair, canonicalized by the global-phase
    /// rule of [`crate::state`].
    pub post_state: TwoQubitState,
    /// Entanglement of `post_state`; always `entanglement_es(post_state)`.
    pub es_after: EntanglementValue,
}

/// All four outcomes of one swap, in [`BellLabel::ALL`] order, plus the
/// probability-weighted mean of `es_after`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SwapResult {
    pub outcomes: [SwapOutcome; 4],
    pub mean_es: f64,
}

impl SwapResult {
    fn from_outcomes(outcomes: [SwapOutcome; 4]) -> Self {
        let mean_es = outcomes
            .iter()
            .map(|o| o.probability * o.es_after.value())
            .sum();
        Self { outcomes, mean_es }
    }

    /// The outcome carrying `label`.
    pub fn outcome(&self, label: BellLabel) -> &SwapOutcome {
        &self.outcomes[label.index()]
    }

    /// Summed probability of the two Psi outcomes.
    pub fn psi_probability(&self) -> f64 {
        self.outcome(BellLabel::PsiPlus).probability
            + self.outcome(BellLabel::PsiMinus).probability
    }

    /// Summed probability of the two Phi outcomes.
    pub fn phi_probability(&self) -> f64 {
        self.outcome(BellLabel::PhiPlus).probability
            + self.outcome(BellLabel::PhiMinus).probability
    }
}

fn outcome(label: BellLabel, probability: f64, raw: [Amplitude; 4]) -> SwapOutcome {
    let post_state = TwoQubitState::renormalized(raw).canonicalized();
    let es_after = entanglement_es(&post_state);
    SwapOutcome {
        label,
        probability,
        post_state,
        es_after,
    }
}

/// Swap of two pairs sharing the same angle. The Phi outcomes are
/// (cos^2|HH> +- sin^2|VV>)/N with probability (cos^4 + sin^4)/2 each; the
/// Psi outcomes are the Bell states |Psi+->, probability cos^2 sin^2 each.
/// The mean of es_after over outcomes equals the single-pair E_S of the
/// input, 2 min(cos^2, sin^2): swapping conserves entanglement on average.
pub fn swap_closed_form(theta: PhaseAngle) -> SwapResult {
    let c = math::cos(theta.radians);
    let s = math::sin(theta.radians);
    let (c2, s2) = (c * c, s * s);
    let p_phi = (c2 * c2 + s2 * s2) / 2.0;
    let p_psi = c2 * s2;
    let re = |x: f64| Amplitude::new(x, 0.0);
    SwapResult::from_outcomes([
        outcome(BellLabel::PhiPlus, p_phi, [re(c2), ZERO, ZERO, re(s2)]),
        outcome(BellLabel::PhiMinus, p_phi, [re(c2), ZERO, ZERO, re(-s2)]),
        SwapOutcome {
            label: BellLabel::PsiPlus,
            probability: p_psi,
            post_state: bell_state(BellLabel::PsiPlus),
            es_after: EntanglementValue::new(1.0),
        },
        SwapOutcome {
            label: BellLabel::PsiMinus,
            probability: p_psi,
            post_state: bell_state(BellLabel::PsiMinus),
            es_after: EntanglementValue::new(1.0),
        },
    ])
}

/// Swap of two pairs with independent angles. The Phi outcomes carry
/// amplitudes proportional to (cos t1 cos t2, sin t1 sin t2) on the HH/VV
/// axis, the Psi outcomes (cos t1 sin t2, sin t1 cos t2) on the HV/VH axis.
/// The mean of es_after equals min of the two input E_S values, so the
/// less entangled pair sets the budget for the swapped ensemble.
pub fn swap_general(theta1: PhaseAngle, theta2: PhaseAngle) -> SwapResult {
    let c1 = math::cos(theta1.radians);
    let s1 = math::sin(theta1.radians);
    let c2 = math::cos(theta2.radians);
    let s2 = math::sin(theta2.radians);
    let (hh, vv) = (c1 * c2, s1 * s2);
    let (hv, vh) = (c1 * s2, s1 * c2);
    let p_phi = (hh * hh + vv * vv) / 2.0;
    let p_psi = (hv * hv + vh * vh) / 2.0;
    let re = |x: f64| Amplitude::new(x, 0.0);
    SwapResult::from_outcomes([
        outcome(BellLabel::PhiPlus, p_phi, [re(hh), ZERO, ZERO, re(vv)]),
        outcome(BellLabel::PhiMinus, p_phi, [re(hh), ZERO, ZERO, re(-vv)]),
        outcome(BellLabel::PsiPlus, p_psi, [ZERO, re(hv), re(vh), ZERO]),
        outcome(BellLabel::PsiMinus, p_psi, [ZERO, re(hv), re(-vh), ZERO]),
    ])
}

/// Brute-force reference path: builds the 16-amplitude joint state of both
/// pairs and projects the inner photon pair (qubits 2 and 3) onto each Bell
/// state. No closed-form shortcut is taken, so this validates
/// [`swap_general`] independently.
///
/// # Panics
///
/// Panics if an outcome probability falls below the representable floor,
/// which requires an angle within about 3e-8 rad of a domain endpoint.
pub fn swap_oracle(theta1: PhaseAngle, theta2: PhaseAngle) -> SwapResult {
    let joint = tensor(&make_phi(theta1), &make_phi(theta2));
    let outcomes = BellLabel::ALL.map(|label| {
        let projection = project_bell(&joint, label, (2, 3))
            .expect("pair (2, 3) is a valid measured pair");
        let post_state = projection
            .post_state
            .expect("swap outcome probability above the representable floor")
            .canonicalized();
        let es_after = entanglement_es(&post_state);
        SwapOutcome {
            label,
            probability: projection.probability,
            post_state,
            es_after,
        }
    });
    SwapResult::from_outcomes(outcomes)
}

/// Measurement capability of the Bell-state analyzer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BsmMode {
    /// All four Bell states are distinguished.
    Full,
    /// Linear-optics analyzer: only the two Psi states are resolved; the
    /// Phi states are a single heralded-failure class.
    PartialLinearOptics,
}

/// Outcome class as seen through the analyzer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutcomeClass {
    Resolved(BellLabel),
    UnresolvedPhi,
}

impl OutcomeClass {
    /// Stable lowercase name used in serialized output.
    pub fn name(self) -> &'static str {
        match self {
            OutcomeClass::Resolved(label) => label.name(),
            OutcomeClass::UnresolvedPhi => "unresolved_phi",
        }
    }
}

impl fmt::Display for OutcomeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One outcome class: its probability mass and, when the analyzer resolves
/// the class to a single Bell result, the conditional state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassOutcome {
    pub class: OutcomeClass,
    pub probability: f64,
    /// `None` for the unresolved class: the apparatus does not herald a
    /// definite post-state there.
    pub post_state: Option<TwoQubitState>,
    pub es_after: Option<EntanglementValue>,
}

/// Regroups a swap result by what the analyzer can distinguish. Full mode
/// passes the four outcomes through. Partial mode reports the classes
/// (PsiPlus, PsiMinus, unresolved-Phi); the unresolved class keeps its
/// summed probability so downstream yield accounting stays honest, but its
/// post-state is undefined.
pub fn apply_bsm_mode(result: &SwapResult, mode: BsmMode) -> Vec<ClassOutcome> {
    let resolved = |o: &SwapOutcome| ClassOutcome {
        class: OutcomeClass::Resolved(o.label),
        probability: o.probability,
        post_state: Some(o.post_state),
        es_after: Some(o.es_after),
    };
    match mode {
        BsmMode::Full => result.outcomes.iter().map(resolved).collect(),
        BsmMode::PartialLinearOptics => alloc::vec![
            resolved(result.outcome(BellLabel::PsiPlus)),
            resolved(result.outcome(BellLabel::PsiMinus)),
            ClassOutcome {
                class: OutcomeClass::UnresolvedPhi,
                probability: result.phi_probability(),
                post_state: None,
                es_after: None,
            },
        ],
    }
}

/// Whether a swap of these two angles emits Bell states on its Psi
/// outcomes, and at what rate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MatchingReport {
    /// True iff the input angles agree within the tolerance. Only then are
    /// the Psi outcome states maximally entangled.
    pub psi_outcomes_are_bell: bool,
    /// Summed Psi probability when matched, 0 otherwise.
    pub yield_if_bell: f64,
}

/// Checks the matching criterion: the Psi outcomes of a swap are Bell
/// states exactly when the two input angles are equal. Angles are compared
/// with absolute tolerance in radians, the natural scale on a bounded
/// interval.
pub fn matching_analysis(theta1: PhaseAngle, theta2: PhaseAngle, tol: f64) -> MatchingReport {
    let psi_outcomes_are_bell = (theta1.radians - theta2.radians).abs() <= tol;
    let yield_if_bell = if psi_outcomes_are_bell {
        swap_general(theta1, theta2).psi_probability()
    } else {
        0.0
    };
    MatchingReport {
        psi_outcomes_are_bell,
        yield_if_bell,
    }
}
