//! Entanglement accounting for two-qubit pure states.
//!
//! The central quantity is the single-pair conversion probability E_S: the
//! maximum probability with which a shared pure state can be turned into a
//! Bell state by local operations and classical communication. It equals
//! twice the squared smaller Schmidt coefficient, so it is 1 exactly on the
//! Bell states and 0 exactly on product states. The von Neumann entropy of
//! either reduced qubit is kept as a separate measure; both are monotone in
//! the smaller Schmidt coefficient but they are not the same number.

use crate::math;
use crate::protocol::PhaseAngle;
use crate::state::{schmidt, SchmidtCut, TwoQubitState};

/// A dimensionless entanglement quantity in [0, 1].
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct EntanglementValue {
    value: f64,
}

impl EntanglementValue {
    /// Clamps into [0, 1]; rounding in upstream arithmetic may overshoot by
    /// an ulp.
    pub(crate) fn new(value: f64) -> Self {
        Self {
            value: value.clamp(0.0, 1.0),
        }
    }

    pub fn value(&self) -> f64 {
        self.value
    }
}

/// Single-pair conversion probability E_S = 2 * lambda2^2, where lambda2 is
/// the smaller Schmidt coefficient.
pub fn entanglement_es(state: &TwoQubitState) -> EntanglementValue {
    let pair = schmidt(state, SchmidtCut::FirstQubit);
    EntanglementValue::new(2.0 * pair.lambda2() * pair.lambda2())
}

/// Von Neumann entropy of either reduced qubit, in bits:
/// -lambda1^2 log2 lambda1^2 - lambda2^2 log2 lambda2^2, with 0 log 0 = 0.
pub fn entropy_of_entanglement(state: &TwoQubitState) -> f64 {
    let pair = schmidt(state, SchmidtCut::FirstQubit);
    let mut entropy = 0.0;
    for lambda in [pair.lambda1(), pair.lambda2()] {
        let p = lambda * lambda;
        if p > 0.0 {
            entropy -= p * math::log2(p);
        }
    }
    entropy.clamp(0.0, 1.0)
}

/// True iff the state is a Bell state up to local phases:
/// entanglement_es(state) >= 1 - tol. Thresholding on E_S keeps the
/// classification independent of the global-phase convention.
pub fn is_bell(state: &TwoQubitState, tol: f64) -> bool {
    entanglement_es(state).value() >= 1.0 - tol
}

/// Optimal single-pair Bell yield of the Procrustean method for
/// cos(theta)|HH> + sin(theta)|VV>: 2 * min(cos^2, sin^2). This is the
/// baseline any multi-pair scheme is measured against.
pub fn procrustean_yield(theta: PhaseAngle) -> EntanglementValue {
    let c = math::cos(theta.radians());
    let s = math::sin(theta.radians());
    EntanglementValue::new(2.0 * (c * c).min(s * s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{bell_state, Amplitude, BellLabel};
    use core::f64::consts::{FRAC_PI_4, FRAC_PI_6};

    fn re(x: f64) -> Amplitude {
        Amplitude::new(x, 0.0)
    }

    fn zero() -> Amplitude {
        Amplitude::new(0.0, 0.0)
    }

    fn phi(theta: f64) -> TwoQubitState {
        TwoQubitState::new([re(math::cos(theta)), zero(), zero(), re(math::sin(theta))]).unwrap()
    }

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} beyond {tol}");
    }

    #[test]
    fn es_of_phi_is_twice_the_smaller_squared_coefficient() {
        assert_close(entanglement_es(&phi(FRAC_PI_6)).value(), 0.5, 1e-14);
        assert_close(entanglement_es(&phi(1.0)).value(), 2.0 * 0.5403023058681398f64.powi(2), 1e-13);
    }

    #[test]
    fn es_of_bell_states_is_one() {
        for label in BellLabel::ALL {
            assert_close(entanglement_es(&bell_state(label)).value(), 1.0, 1e-15);
        }
    }

    #[test]
    fn es_of_a_product_state_is_zero() {
        let vh = TwoQubitState::new([zero(), zero(), re(1.0), zero()]).unwrap();
        assert_eq!(entanglement_es(&vh).value(), 0.0);
    }

    #[test]
    fn es_of_the_unbalanced_residual_state_is_one_fifth() {
        // (3, 1)/sqrt(10) on the HH/VV axis
        let state = TwoQubitState::new([
            re(0.9486832980505138),
            zero(),
            zero(),
            re(0.3162277660168378),
        ])
        .unwrap();
        assert_close(entanglement_es(&state).value(), 0.1999999999999998, 1e-14);
    }

    #[test]
    fn es_near_the_degenerate_edges() {
        assert_close(entanglement_es(&phi(1e-8)).value(), 2e-16, 1e-26);
        assert_close(
            entanglement_es(&phi(FRAC_PI_4 - 1e-12)).value(),
            0.9999999999979998,
            1e-13,
        );
    }

    #[test]
    fn entropy_interpolates_between_zero_and_one_bit() {
        for label in BellLabel::ALL {
            assert_close(entropy_of_entanglement(&bell_state(label)), 1.0, 1e-15);
        }
        let hh = TwoQubitState::new([re(1.0), zero(), zero(), zero()]).unwrap();
        assert_eq!(entropy_of_entanglement(&hh), 0.0);
        assert_close(
            entropy_of_entanglement(&phi(FRAC_PI_6)),
            0.8112781244591327,
            1e-13,
        );
    }

    #[test]
    fn bell_predicate_separates_bell_from_partial() {
        for label in BellLabel::ALL {
            assert!(is_bell(&bell_state(label), 1e-12));
        }
        assert!(!is_bell(&phi(FRAC_PI_6), 1e-12));
        assert!(is_bell(&phi(FRAC_PI_4 - 1e-12), 1e-9));
    }

    #[test]
    fn procrustean_yield_matches_es_of_phi() {
        for theta in [0.05, 0.3, FRAC_PI_6, FRAC_PI_4, 1.0, 1.5] {
            let angle = PhaseAngle::new(theta).unwrap();
            assert_close(
                procrustean_yield(angle).value(),
                entanglement_es(&phi(theta)).value(),
                1e-12,
            );
        }
        assert_close(
            procrustean_yield(PhaseAngle::new(FRAC_PI_4).unwrap()).value(),
            1.0,
            1e-15,
        );
        assert_close(
            procrustean_yield(PhaseAngle::new(FRAC_PI_6).unwrap()).value(),
            0.5,
            1e-15,
        );
    }
}
