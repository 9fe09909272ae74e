//! Ensemble-level behavior of the swap protocol: seeded Monte Carlo
//! sampling over many independent pairs, and the recursive purification
//! cascade that re-swaps the partially entangled leftovers.
//!
//! The cascade's figure of merit is the cumulative fraction of the original
//! ensemble converted to Bell pairs. It approaches, and never exceeds,
//! 2 min(cos^2 theta0, sin^2 theta0), the single-pair optimum of the
//! Procrustean baseline; the recursion conserves mean entanglement at every
//! level.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_4;
use core::num::{NonZeroU32, NonZeroU64};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::math;
use crate::measures::{is_bell, procrustean_yield};
use crate::protocol::{
    apply_bsm_mode, swap_closed_form, swap_general, BsmMode, ClassOutcome, OutcomeClass,
    PhaseAngle,
};
use crate::tolerance::BELL_TOL;

/// Parameters of one Monte Carlo run over independent pairs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnsembleConfig {
    pub theta1: PhaseAngle,
    pub theta2: PhaseAngle,
    pub pairs: NonZeroU64,
    pub seed: u64,
    pub bsm_mode: BsmMode,
}

/// Sampled tallies for one outcome class.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassStat {
    pub class: OutcomeClass,
    pub count: u64,
    pub empirical_probability: f64,
    /// Normal-approximation standard error sqrt(p (1 - p) / n).
    pub standard_error: f64,
}

/// Monte Carlo estimate of the outcome distribution.
#[derive(Clone, Debug, PartialEq)]
pub struct EnsembleStats {
    /// One entry per outcome class, in the class order of
    /// [`apply_bsm_mode`]. Counts sum to `pairs`.
    pub classes: Vec<ClassStat>,
    pub pairs: u64,
    /// Worker count the run was sharded over; part of the reproducibility
    /// contract together with the seed.
    pub workers: u32,
    /// Empirical fraction of pairs that landed in a class whose post-state
    /// is a Bell state.
    pub bell_fraction: f64,
    /// Sample mean of es_after over all pairs. `None` when some outcome
    /// class has no defined post-state (partial analyzer), because those
    /// pairs carry no entanglement value to average.
    pub empirical_mean_es: Option<f64>,
}

fn class_fates(classes: &[ClassOutcome]) -> Vec<bool> {
    classes
        .iter()
        .map(|c| matches!(&c.post_state, Some(post) if is_bell(post, BELL_TOL)))
        .collect()
}

/// Draws one class index from the distribution, walking the cumulative
/// probabilities in class order. The final class absorbs the rounding
/// remainder so every draw lands somewhere.
fn pick_class(classes: &[ClassOutcome], u: f64) -> usize {
    let mut acc = 0.0;
    for (i, class) in classes.iter().enumerate() {
        acc += class.probability;
        if u < acc {
            return i;
        }
    }
    classes.len() - 1
}

/// Samples `config.pairs` independent swap outcomes on a single worker.
/// Equivalent to [`sample_swap_workers`] with one worker.
pub fn sample_swap(config: &EnsembleConfig) -> EnsembleStats {
    sample_swap_workers(config, NonZeroU32::new(1).unwrap())
}

/// Samples `config.pairs` independent swap outcomes, sharded over
/// `workers` deterministic generator streams. Worker `w` draws from the
/// stream `w` of a ChaCha12 generator seeded by `config.seed`, so the
/// result depends only on (seed, worker count), not on scheduling.
pub fn sample_swap_workers(config: &EnsembleConfig, workers: NonZeroU32) -> EnsembleStats {
    let result = swap_general(config.theta1, config.theta2);
    let classes = apply_bsm_mode(&result, config.bsm_mode);
    let bell = class_fates(&classes);

    let n = config.pairs.get();
    let worker_count = u64::from(workers.get());
    let mut counts = alloc::vec![0u64; classes.len()];
    for w in 0..worker_count {
        let mut rng = ChaCha12Rng::seed_from_u64(config.seed);
        rng.set_stream(w);
        let share = n / worker_count + u64::from(w < n % worker_count);
        for _ in 0..share {
            counts[pick_class(&classes, rng.random::<f64>())] += 1;
        }
    }

    let stats: Vec<ClassStat> = classes
        .iter()
        .zip(counts.iter())
        .map(|(class, &count)| {
            let p = count as f64 / n as f64;
            ClassStat {
                class: class.class,
                count,
                empirical_probability: p,
                standard_error: math::sqrt(p * (1.0 - p) / n as f64),
            }
        })
        .collect();

    let bell_fraction = stats
        .iter()
        .zip(bell.iter())
        .filter(|(_, &is_bell)| is_bell)
        .map(|(s, _)| s.empirical_probability)
        .sum();
    let empirical_mean_es = if classes.iter().all(|c| c.es_after.is_some()) {
        Some(
            stats
                .iter()
                .zip(classes.iter())
                .map(|(s, c)| s.empirical_probability * c.es_after.unwrap().value())
                .sum(),
        )
    } else {
        None
    };

    EnsembleStats {
        classes: stats,
        pairs: n,
        workers: workers.get(),
        bell_fraction,
        empirical_mean_es,
    }
}

/// Angle of the renormalized Phi outcomes: tan(theta') = tan^2(theta),
/// evaluated as atan2(sin^2, cos^2). The maximally entangled point
/// theta = pi/4 is a fixed point and is returned unchanged, since rounded
/// trig values of pi/4 itself would drift it by an ulp. The result is
/// clamped into the representable interior of (0, pi/2), since squaring a
/// tiny tangent can underflow past the smallest admissible angle.
pub fn residual_angle(theta: PhaseAngle) -> PhaseAngle {
    if theta.radians() == FRAC_PI_4 {
        return theta;
    }
    let c = math::cos(theta.radians());
    let s = math::sin(theta.radians());
    PhaseAngle::clamped_interior(math::atan2(s * s, c * c))
}

/// One level of the purification cascade.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CascadeLevel {
    pub level: u32,
    /// Residual angle entering this level.
    pub theta: PhaseAngle,
    /// Fraction of the original ensemble converted to Bell pairs here.
    pub bell_yield_this_level: f64,
    /// Fraction of the original ensemble still unconverted after this
    /// level; the running product of the per-level survival probabilities.
    pub residual_fraction: f64,
    pub cumulative_bell_fraction: f64,
}

/// Full cascade trace. `converged_at` is the level at which the recursion
/// stopped because the target was effectively reached (exact runs: the gap
/// to `limit_target` fell below the tolerance; sampled runs: the surviving
/// population was exhausted by conversion). `None` means the run hit its
/// level budget, or lost its population to heralded failures, first.
#[derive(Clone, Debug, PartialEq)]
pub struct CascadeReport {
    pub levels: Vec<CascadeLevel>,
    /// 2 min(cos^2 theta0, sin^2 theta0): the conserved-entanglement bound
    /// and the Procrustean single-pair optimum.
    pub limit_target: f64,
    pub converged_at: Option<u32>,
}

/// Exact cascade with a full analyzer at every level; see
/// [`cascade_exact_with_mode`].
pub fn cascade_exact(theta0: PhaseAngle, max_levels: u32, tol: f64) -> CascadeReport {
    cascade_exact_with_mode(theta0, max_levels, tol, BsmMode::Full)
}

/// Evolves outcome fractions exactly, level by level. Each level swaps the
/// surviving pairs against matched purifiers prepared at the current
/// residual angle; purifiers are a local resource and are not tallied.
/// Outcome classes whose post-state is a Bell state convert, classes with a
/// partially entangled post-state survive into the next level at the next
/// residual angle (their relative sign is removed by a local phase flip
/// first, which leaves entanglement untouched), and unresolved classes are
/// heralded failures that drop out. Recursion stops when the gap to
/// `limit_target` falls below `tol` (recorded in `converged_at`), when the
/// surviving fraction hits zero, or at `max_levels`.
pub fn cascade_exact_with_mode(
    theta0: PhaseAngle,
    max_levels: u32,
    tol: f64,
    mode: BsmMode,
) -> CascadeReport {
    let limit_target = procrustean_yield(theta0).value();
    let mut levels = Vec::new();
    let mut remaining = 1.0f64;
    let mut cumulative = 0.0f64;
    let mut theta = theta0;
    let mut converged_at = None;

    for level in 0..max_levels {
        let classes = apply_bsm_mode(&swap_closed_form(theta), mode);
        let bell = class_fates(&classes);
        let mut q_convert = 0.0;
        let mut q_survive = 0.0;
        for (class, &to_bell) in classes.iter().zip(bell.iter()) {
            if to_bell {
                q_convert += class.probability;
            } else if class.post_state.is_some() {
                q_survive += class.probability;
            }
        }
        let converted = remaining * q_convert;
        cumulative += converted;
        remaining *= q_survive;
        levels.push(CascadeLevel {
            level,
            theta,
            bell_yield_this_level: converted,
            residual_fraction: remaining,
            cumulative_bell_fraction: cumulative,
        });
        if limit_target - cumulative < tol {
            converged_at = Some(level);
            break;
        }
        if remaining <= 0.0 {
            break;
        }
        theta = residual_angle(theta);
    }

    CascadeReport {
        levels,
        limit_target,
        converged_at,
    }
}

/// Sampled cascade with a full analyzer; see
/// [`cascade_sampled_with_mode`].
pub fn cascade_sampled(
    theta0: PhaseAngle,
    pairs: NonZeroU64,
    seed: u64,
    max_levels: u32,
) -> CascadeReport {
    cascade_sampled_with_mode(theta0, pairs, seed, max_levels, BsmMode::Full)
}

/// Monte Carlo cascade: tracks each of `pairs` shared pairs individually
/// through the levels, drawing its outcome from a single ChaCha12 stream
/// seeded by `seed`. Fractions are reported against the original ensemble
/// size. `converged_at` is set when the surviving population is exhausted
/// with every pair converted; runs that lose pairs to heralded failures or
/// exhaust the level budget report `None`.
pub fn cascade_sampled_with_mode(
    theta0: PhaseAngle,
    pairs: NonZeroU64,
    seed: u64,
    max_levels: u32,
    mode: BsmMode,
) -> CascadeReport {
    let limit_target = procrustean_yield(theta0).value();
    let n = pairs.get();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut levels = Vec::new();
    let mut alive = n;
    let mut converted_total = 0u64;
    let mut lost_total = 0u64;
    let mut theta = theta0;
    let mut converged_at = None;

    for level in 0..max_levels {
        let classes = apply_bsm_mode(&swap_closed_form(theta), mode);
        let bell = class_fates(&classes);
        let mut converted_here = 0u64;
        let mut survivors = 0u64;
        for _ in 0..alive {
            let idx = pick_class(&classes, rng.random::<f64>());
            if bell[idx] {
                converted_here += 1;
            } else if classes[idx].post_state.is_some() {
                survivors += 1;
            } else {
                lost_total += 1;
            }
        }
        converted_total += converted_here;
        alive = survivors;
        levels.push(CascadeLevel {
            level,
            theta,
            bell_yield_this_level: converted_here as f64 / n as f64,
            residual_fraction: alive as f64 / n as f64,
            cumulative_bell_fraction: converted_total as f64 / n as f64,
        });
        if alive == 0 {
            if lost_total == 0 {
                converged_at = Some(level);
            }
            break;
        }
        theta = residual_angle(theta);
    }

    CascadeReport {
        levels,
        limit_target,
        converged_at,
    }
}
