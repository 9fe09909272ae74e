//! Crate-wide numerical tolerances, fixed in one place so every module
//! classifies borderline values the same way.

/// Accepted deviation of an input state vector's norm from 1. Amplitudes
/// entered as decimal text rounded to eight or more significant digits
/// drift the norm by at most about 7e-9, so those are admitted; anything
/// farther off is treated as wrong data rather than rounding. Constructors
/// renormalize on acceptance, so the drift never propagates.
pub const NORM_TOL: f64 = 1e-8;

/// Born probabilities below this threshold are treated as exact zeros and
/// the conditional state is reported undefined instead of a renormalized
/// noise vector. Orthogonal components cancel to O(1e-32) in double
/// precision, far below this line.
pub const ZERO_PROBABILITY: f64 = 1e-15;

/// Smallest amplitude modulus allowed to anchor the canonical global
/// phase. A unit-norm four-component vector always has some amplitude of
/// modulus at least 1/2, so the anchor search skips only rounding residue.
pub const PHASE_ANCHOR_MIN: f64 = 1e-12;

/// Distance of E_S from 1 below which a state counts as a Bell state in
/// ensemble accounting. Residual cascade angles reachable from interior
/// starting angles stay far outside this band, so in practice only the
/// fixed point at pi/4 classifies as Bell.
pub const BELL_TOL: f64 = 1e-12;
