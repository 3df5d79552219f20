//! Seeded, deterministic property-verification suites.
//!
//! Each suite draws a reproducible sample sequence from an embedded PRNG,
//! evaluates one identity per sample through the module that owns it, and
//! aggregates relative residuals into a machine-readable report. Identical
//! configuration gives a byte-identical report apart from the elapsed-time
//! field. Sample evaluation errors are captured (as a residual of
//! `f64::MAX`) and fail the report; they never abort the run.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::cocycles::{self, CocycleKind};
use crate::measures::{
    self, check_scaling_covariance, compose_morphisms, compose_shifts, functor_morphism,
    functor_object, mellin_gamma_functor, CoefficientFunction, DimObject, DimShift,
};
use crate::observables;
use crate::quadrature::{self, Integrand};
use crate::specfun::LN_PI;

pub mod rng {
    //! Small self-contained PRNG so reports are reproducible across
    //! platforms without depending on an external generator's stream
    //! stability.
    //!
    //! xoshiro256** (Blackman & Vigna), state seeded from a single u64 via
    //! splitmix64. Constants are the published ones: splitmix64 increment
    //! 0x9e3779b97f4a7c15 with mixers 0xbf58476d1ce4e5b9 and
    //! 0x94d049bb133111eb; xoshiro rotations 7 and 45, output rotation 23
    //! with multipliers 5 and 9.

    #[derive(Debug, Clone)]
    pub struct SeededRng {
        s: [u64; 4],
    }

    impl SeededRng {
        pub fn new(seed: u64) -> Self {
            let mut sm = seed;
            let mut next_sm = || {
                sm = sm.wrapping_add(0x9e37_79b9_7f4a_7c15);
                let mut z = sm;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
                z ^ (z >> 31)
            };
            Self {
                s: [next_sm(), next_sm(), next_sm(), next_sm()],
            }
        }

        pub fn next_u64(&mut self) -> u64 {
            let result = self.s[1]
                .wrapping_mul(5)
                .rotate_left(7)
                .wrapping_mul(9);
            let t = self.s[1] << 17;
            self.s[2] ^= self.s[0];
            self.s[3] ^= self.s[1];
            self.s[1] ^= self.s[2];
            self.s[0] ^= self.s[3];
            self.s[2] ^= t;
            self.s[3] = self.s[3].rotate_left(45);
            result
        }

        /// Uniform in [0, 1) with 53 bits.
        pub fn next_f64(&mut self) -> f64 {
            (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
        }

        /// Uniform in [lo, hi).
        pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
            lo + (hi - lo) * self.next_f64()
        }

        /// Log-uniform in [lo, hi), lo > 0.
        pub fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
            (self.uniform(lo.ln(), hi.ln())).exp()
        }
    }
}

use rng::SeededRng;

/// Identity suites, one per claim the crate certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Suite {
    #[serde(rename = "cocycle_R")]
    CocycleR,
    #[serde(rename = "cocycle_T")]
    CocycleT,
    #[serde(rename = "coboundary")]
    Coboundary,
    #[serde(rename = "normalization")]
    Normalization,
    #[serde(rename = "scaling_covariance")]
    ScalingCovariance,
    #[serde(rename = "functoriality_generic")]
    FunctorialityGeneric,
    #[serde(rename = "category_laws")]
    CategoryLaws,
    #[serde(rename = "golden_volumes")]
    GoldenVolumes,
    #[serde(rename = "transport_consistency")]
    TransportConsistency,
}

/// All suites, in the order `run_all` executes them.
pub const ALL_SUITES: [Suite; 9] = [
    Suite::CocycleR,
    Suite::CocycleT,
    Suite::Coboundary,
    Suite::Normalization,
    Suite::ScalingCovariance,
    Suite::FunctorialityGeneric,
    Suite::CategoryLaws,
    Suite::GoldenVolumes,
    Suite::TransportConsistency,
];

impl Suite {
    pub fn id(&self) -> &'static str {
        match self {
            Suite::CocycleR => "cocycle_R",
            Suite::CocycleT => "cocycle_T",
            Suite::Coboundary => "coboundary",
            Suite::Normalization => "normalization",
            Suite::ScalingCovariance => "scaling_covariance",
            Suite::FunctorialityGeneric => "functoriality_generic",
            Suite::CategoryLaws => "category_laws",
            Suite::GoldenVolumes => "golden_volumes",
            Suite::TransportConsistency => "transport_consistency",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite id: {0}")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL_SUITES
            .iter()
            .find(|suite| suite.id() == s)
            .copied()
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    /// Dimensions are drawn log-uniformly from this range.
    pub x_range: (f64, f64),
    /// Shift parameters (or the dilation factor, for scaling covariance)
    /// are drawn uniformly from this range.
    pub r_range: (f64, f64),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("samples must be >= 1")]
    NoSamples,
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("x range must satisfy 0 < low < high, got ({0}, {1})")]
    BadXRange(f64, f64),
    #[error("r range must satisfy 0 <= low < high, got ({0}, {1})")]
    BadRRange(f64, f64),
}

use thiserror::Error;

impl SuiteConfig {
    /// The defaults the acceptance gate runs with: 1e-10 for pure
    /// closed-form identities, 1e-7 for quadrature-backed suites, 1e-11
    /// for the transport ratio, 1e-12 for the golden ladder.
    pub fn default_for(suite: Suite, seed: u64) -> Self {
        let (samples, tol, x_range, r_range) = match suite {
            Suite::CocycleR | Suite::CocycleT => (10_000, 1e-10, (0.05, 50.0), (0.0, 10.0)),
            Suite::Coboundary => (10_000, 1e-10, (0.05, 50.0), (0.0, 10.0)),
            Suite::Normalization => (50, 1e-7, (0.1, 40.0), (0.0, 0.0)),
            // r_range doubles as the dilation-factor range here
            Suite::ScalingCovariance => (20, 1e-7, (0.1, 30.0), (0.2, 5.0)),
            Suite::FunctorialityGeneric => (20, 1e-10, (0.1, 30.0), (0.0, 5.0)),
            Suite::CategoryLaws => (1_000, 1e-10, (0.05, 50.0), (0.0, 10.0)),
            Suite::GoldenVolumes => (5, 1e-12, (1.0, 5.0), (0.0, 0.0)),
            Suite::TransportConsistency => (10_000, 1e-11, (0.05, 50.0), (0.0, 10.0)),
        };
        Self {
            suite,
            samples,
            seed,
            tol,
            x_range,
            r_range,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.samples < 1 {
            return Err(ConfigError::NoSamples);
        }
        if !(self.tol > 0.0) {
            return Err(ConfigError::BadTolerance(self.tol));
        }
        if !(self.x_range.0 > 0.0 && self.x_range.0 < self.x_range.1) {
            return Err(ConfigError::BadXRange(self.x_range.0, self.x_range.1));
        }
        if !(self.r_range.0 >= 0.0 && self.r_range.0 <= self.r_range.1) {
            return Err(ConfigError::BadRRange(self.r_range.0, self.r_range.1));
        }
        Ok(())
    }
}

/// Residual recorded for one sample. An errored evaluation is mapped to
/// `f64::MAX` so it stays serializable and fails any tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleOutcome {
    pub inputs: Vec<f64>,
    pub residual: f64,
    pub errored: bool,
}

impl SampleOutcome {
    pub fn residual(inputs: Vec<f64>, residual: f64) -> Self {
        Self {
            inputs,
            residual,
            errored: false,
        }
    }

    pub fn errored(inputs: Vec<f64>) -> Self {
        Self {
            inputs,
            residual: f64::MAX,
            errored: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WorstCase {
    pub inputs: Vec<f64>,
    pub residual: f64,
}

/// Outcome of a suite run. Field order in the JSON serialization is fixed:
/// suite, samples, seed, tol, max_relative_residual, worst_cases, passed,
/// elapsed_ms.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub max_relative_residual: f64,
    pub worst_cases: Vec<WorstCase>,
    pub passed: bool,
    pub elapsed_ms: u64,
}

/// How many worst-case inputs each report keeps.
const WORST_CASES_KEPT: usize = 5;

impl VerificationReport {
    /// Aggregate sample outcomes into a report. The worst-case list is
    /// sorted canonically (residual descending, then inputs), so the
    /// report is independent of evaluation order.
    pub fn from_outcomes(
        suite: Suite,
        seed: u64,
        tol: f64,
        outcomes: Vec<SampleOutcome>,
        elapsed: Duration,
    ) -> Self {
        let samples = outcomes.len();
        let any_errored = outcomes.iter().any(|o| o.errored);
        let max_relative_residual = outcomes
            .iter()
            .map(|o| o.residual)
            .fold(0.0_f64, f64::max);
        let mut sorted = outcomes;
        sorted.sort_by(|a, b| {
            b.residual
                .total_cmp(&a.residual)
                .then_with(|| a.inputs.iter().map(|v| v.to_bits()).cmp(b.inputs.iter().map(|v| v.to_bits())))
        });
        let worst_cases = sorted
            .into_iter()
            .take(WORST_CASES_KEPT)
            .map(|o| WorstCase {
                inputs: o.inputs,
                residual: o.residual,
            })
            .collect();
        Self {
            suite,
            samples,
            seed,
            tol,
            max_relative_residual,
            worst_cases,
            passed: !any_errored && max_relative_residual <= tol,
            elapsed_ms: elapsed.as_millis() as u64,
        }
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn max_relative_residual(&self) -> f64 {
        self.max_relative_residual
    }
}

/// Run one suite with the given configuration.
pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport, ConfigError> {
    config.validate()?;
    let started = Instant::now();
    let mut rng = SeededRng::new(config.seed);
    let outcomes = match config.suite {
        Suite::CocycleR => cocycle_outcomes(config, &mut rng, CocycleKind::Radial),
        Suite::CocycleT => cocycle_outcomes(config, &mut rng, CocycleKind::Ball),
        Suite::Coboundary => coboundary_outcomes(config, &mut rng),
        Suite::Normalization => normalization_outcomes(config, &mut rng),
        Suite::ScalingCovariance => scaling_outcomes(config, &mut rng),
        Suite::FunctorialityGeneric => functoriality_outcomes(config, &mut rng),
        Suite::CategoryLaws => category_law_outcomes(config, &mut rng),
        Suite::GoldenVolumes => golden_volume_outcomes(),
        Suite::TransportConsistency => transport_outcomes(config, &mut rng),
    };
    Ok(VerificationReport::from_outcomes(
        config.suite,
        config.seed,
        config.tol,
        outcomes,
        started.elapsed(),
    ))
}

/// Run every suite with its default configuration under one seed.
pub fn run_all(seed: u64) -> Vec<VerificationReport> {
    ALL_SUITES
        .iter()
        .map(|&suite| {
            run_suite(&SuiteConfig::default_for(suite, seed))
                .expect("default configs are valid")
        })
        .collect()
}

fn cocycle_outcomes(
    config: &SuiteConfig,
    rng: &mut SeededRng,
    kind: CocycleKind,
) -> Vec<SampleOutcome> {
    (0..config.samples)
        .map(|_| {
            let x = rng.log_uniform(config.x_range.0, config.x_range.1);
            let r = rng.uniform(config.r_range.0, config.r_range.1);
            let s = rng.uniform(config.r_range.0, config.r_range.1);
            match cocycles::cocycle_relative_residual(kind, x, r, s) {
                Ok(rel) => SampleOutcome::residual(vec![x, r, s], rel),
                Err(_) => SampleOutcome::errored(vec![x, r, s]),
            }
        })
        .collect()
}

fn coboundary_outcomes(config: &SuiteConfig, rng: &mut SeededRng) -> Vec<SampleOutcome> {
    (0..config.samples)
        .map(|_| {
            let x = rng.log_uniform(config.x_range.0, config.x_range.1);
            let r = rng.uniform(config.r_range.0, config.r_range.1);
            let scale = (x + 2.0 * r) / x;
            match cocycles::coboundary_residual(x, r) {
                Ok(resid) => SampleOutcome::residual(vec![x, r], resid.abs() / scale),
                Err(_) => SampleOutcome::errored(vec![x, r]),
            }
        })
        .collect()
}

fn normalization_outcomes(config: &SuiteConfig, rng: &mut SeededRng) -> Vec<SampleOutcome> {
    (0..config.samples)
        .map(|_| {
            let x = rng.log_uniform(config.x_range.0, config.x_range.1);
            // independent route: direct quadrature of e^{-u} against the
            // Mellin-Gamma density, in log space
            let log_coeff = (x / 2.0) * LN_PI - crate::specfun::log_gamma_unchecked(x / 2.0);
            let p = x / 2.0 - 1.0;
            let integrand =
                Integrand::new(move |u: f64| (log_coeff + p * u.ln() - u).exp(), p);
            let expected = ((x / 2.0) * LN_PI).exp();
            let result = integrand.and_then(|f| {
                quadrature::integrate_half_line(
                    &f,
                    quadrature::DEFAULT_ABS_TOL.max(1e-14 * expected),
                    quadrature::DEFAULT_REL_TOL,
                )
            });
            match result {
                Ok(q) => SampleOutcome::residual(
                    vec![x],
                    (q.value - expected).abs() / expected,
                ),
                Err(_) => SampleOutcome::errored(vec![x]),
            }
        })
        .collect()
}

/// Probes per (x, λ) pair in the scaling-covariance suite.
const SCALING_PROBES: usize = 5;

fn scaling_outcomes(config: &SuiteConfig, rng: &mut SeededRng) -> Vec<SampleOutcome> {
    let mg = mellin_gamma_functor();
    (0..config.samples)
        .map(|_| {
            let x = rng.log_uniform(config.x_range.0, config.x_range.1);
            let lambda = rng.log_uniform(config.r_range.0.max(1e-3), config.r_range.1);
            let result = DimObject::new(x)
                .and_then(|obj| functor_object(&mg, obj))
                .and_then(|m| check_scaling_covariance(&m, lambda, SCALING_PROBES, config.tol));
            match result {
                Ok(report) => {
                    if report.worst_cases.iter().any(|w| w.residual == f64::MAX) {
                        SampleOutcome::errored(vec![x, lambda])
                    } else {
                        SampleOutcome::residual(vec![x, lambda], report.max_relative_residual)
                    }
                }
                Err(_) => SampleOutcome::errored(vec![x, lambda]),
            }
        })
        .collect()
}

/// A randomized smooth positive coefficient function: the exponential of a
/// small random trigonometric polynomial plus a logarithmic drift.
fn random_coefficient_function(rng: &mut SeededRng) -> CoefficientFunction {
    let a0 = rng.uniform(-1.0, 1.0);
    let a1 = rng.uniform(-2.0, 2.0);
    let b1 = rng.uniform(0.1, 2.0);
    let phi1 = rng.uniform(0.0, std::f64::consts::TAU);
    let a2 = rng.uniform(-2.0, 2.0);
    let b2 = rng.uniform(0.1, 2.0);
    let a3 = rng.uniform(-1.0, 1.0);
    CoefficientFunction::new(move |x: f64| {
        (a0 + a1 * (b1 * x + phi1).sin() + a2 * (b2 * x).cos() + a3 * (1.0 + x).ln()).exp()
    })
}

fn functoriality_outcomes(config: &SuiteConfig, rng: &mut SeededRng) -> Vec<SampleOutcome> {
    (0..config.samples)
        .map(|_| {
            let c = random_coefficient_function(rng);
            let x = rng.log_uniform(config.x_range.0, config.x_range.1);
            let r = rng.uniform(config.r_range.0, config.r_range.1);
            let s = rng.uniform(config.r_range.0, config.r_range.1);
            let outcome = (|| -> Result<f64, measures::MeasureError> {
                let obj = DimObject::new(x)?;
                let first = DimShift::new(obj, r)?;
                let second = DimShift::new(first.target(), s)?;
                let whole = functor_morphism(&c, DimShift::new(obj, r + s)?)?;
                let split = compose_morphisms(
                    functor_morphism(&c, first)?,
                    functor_morphism(&c, second)?,
                )?;
                let a_resid =
                    (whole.coefficient() - split.coefficient()).abs() / whole.coefficient();
                // powers must match to 1e-12 absolutely; a violation fails
                // the sample outright
                let power_diff = (whole.power() - split.power()).abs();
                Ok(if power_diff > 1e-12 { f64::MAX } else { a_resid })
            })();
            match outcome {
                Ok(resid) => SampleOutcome::residual(vec![x, r, s], resid),
                Err(_) => SampleOutcome::errored(vec![x, r, s]),
            }
        })
        .collect()
}

fn category_law_outcomes(config: &SuiteConfig, rng: &mut SeededRng) -> Vec<SampleOutcome> {
    let mg = mellin_gamma_functor();
    (0..config.samples)
        .map(|_| {
            let x = rng.log_uniform(config.x_range.0, config.x_range.1);
            let r = rng.uniform(config.r_range.0, config.r_range.1);
            let s = rng.uniform(config.r_range.0, config.r_range.1);
            let t = rng.uniform(config.r_range.0, config.r_range.1);
            let outcome = (|| -> Result<f64, measures::MeasureError> {
                let obj = DimObject::new(x)?;
                let sh_r = DimShift::new(obj, r)?;
                let sh_s = DimShift::new(sh_r.target(), s)?;
                let sh_t = DimShift::new(sh_s.target(), t)?;

                // associativity of shift composition (pure addition)
                let left = compose_shifts(compose_shifts(sh_r, sh_s)?, sh_t)?;
                let right = compose_shifts(sh_r, compose_shifts(sh_s, sh_t)?)?;
                let shift_resid = (left.r() - right.r()).abs() / 1.0_f64.max(left.r());

                // identity is two-sided
                let id = DimShift::new(obj, 0.0)?;
                let with_id = compose_shifts(id, sh_r)?;
                let id_resid = (with_id.r() - r).abs();

                // associativity of morphism composition
                let m_r = functor_morphism(&mg, sh_r)?;
                let m_s = functor_morphism(&mg, sh_s)?;
                let m_t = functor_morphism(&mg, sh_t)?;
                let m_left = compose_morphisms(compose_morphisms(m_r, m_s)?, m_t)?;
                let m_right = compose_morphisms(m_r, compose_morphisms(m_s, m_t)?)?;
                let a_resid = (m_left.coefficient() - m_right.coefficient()).abs()
                    / m_left.coefficient();

                // identity morphism is neutral
                let m_id = functor_morphism(&mg, id)?;
                let composed = compose_morphisms(m_id, m_r)?;
                let neutral_resid =
                    (composed.coefficient() - m_r.coefficient()).abs() / m_r.coefficient();

                Ok(shift_resid.max(id_resid).max(a_resid).max(neutral_resid))
            })();
            match outcome {
                Ok(resid) => SampleOutcome::residual(vec![x, r, s, t], resid),
                Err(_) => SampleOutcome::errored(vec![x, r, s, t]),
            }
        })
        .collect()
}

fn golden_volume_outcomes() -> Vec<SampleOutcome> {
    use std::f64::consts::PI;
    let golden = [
        (1.0, 2.0),
        (2.0, PI),
        (3.0, 4.0 * PI / 3.0),
        (4.0, PI * PI / 2.0),
        (5.0, 8.0 * PI * PI / 15.0),
    ];
    golden
        .iter()
        .map(|&(x, expected)| match observables::ball_volume_v(x) {
            Ok(v) => SampleOutcome::residual(vec![x], (v - expected).abs() / expected),
            Err(_) => SampleOutcome::errored(vec![x]),
        })
        .collect()
}

fn transport_outcomes(config: &SuiteConfig, rng: &mut SeededRng) -> Vec<SampleOutcome> {
    (0..config.samples)
        .map(|_| {
            let x = rng.log_uniform(config.x_range.0, config.x_range.1);
            let r = rng.uniform(config.r_range.0, config.r_range.1);
            let outcome = observables::transport_consistency(x, r).and_then(|resid| {
                let t = cocycles::ball_cocycle_t(x, r)?;
                Ok(resid.abs() / t)
            });
            match outcome {
                Ok(rel) => SampleOutcome::residual(vec![x, r], rel),
                Err(_) => SampleOutcome::errored(vec![x, r]),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rng_is_reproducible() {
        let mut a = SeededRng::new(42);
        let mut b = SeededRng::new(42);
        for _ in 0..1000 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = SeededRng::new(43);
        assert_ne!(SeededRng::new(42).next_u64(), c.next_u64());
    }

    #[test]
    fn rng_f64_is_in_unit_interval() {
        let mut rng = SeededRng::new(0);
        for _ in 0..10_000 {
            let v = rng.next_f64();
            assert!((0.0..1.0).contains(&v));
        }
    }

    #[test]
    fn suite_ids_round_trip() {
        for suite in ALL_SUITES {
            assert_eq!(suite.id().parse::<Suite>().unwrap(), suite);
        }
        assert!("nonsense".parse::<Suite>().is_err());
    }

    #[test]
    fn single_sample_cocycle_suite() {
        let config = SuiteConfig {
            suite: Suite::CocycleR,
            samples: 1,
            seed: 0,
            tol: 1e-10,
            x_range: (2.0, 2.0000001),
            r_range: (1.0, 1.0),
        };
        let report = run_suite(&config).unwrap();
        assert!(report.passed);
        assert!(report.max_relative_residual < 1e-12);
        assert_eq!(report.samples, 1);
    }

    #[test]
    fn golden_volumes_suite_passes() {
        let report =
            run_suite(&SuiteConfig::default_for(Suite::GoldenVolumes, 0)).unwrap();
        assert!(report.passed);
        assert_eq!(report.samples, 5);
    }

    #[test]
    fn reports_are_deterministic_given_seed() {
        let config = SuiteConfig::default_for(Suite::Coboundary, 12345);
        let mut a = run_suite(&config).unwrap();
        let mut b = run_suite(&config).unwrap();
        a.elapsed_ms = 0;
        b.elapsed_ms = 0;
        assert_eq!(a, b);
    }

    #[test]
    fn verdicts_are_seed_invariant() {
        for seed in [0, 1, 987_654_321] {
            let r1 = run_suite(&SuiteConfig::default_for(Suite::CocycleT, seed)).unwrap();
            assert!(r1.passed, "seed {seed}: residual {}", r1.max_relative_residual);
        }
    }

    #[test]
    fn run_all_returns_one_report_per_suite() {
        // smoke-check with tiny sample counts to keep this test fast; the
        // full default configs run in the acceptance suite
        for suite in ALL_SUITES {
            let mut config = SuiteConfig::default_for(suite, 0);
            config.samples = config.samples.min(5);
            let report = run_suite(&config).unwrap();
            assert!(report.passed, "{}: {}", suite, report.max_relative_residual);
        }
        assert_eq!(ALL_SUITES.len(), 9);
    }

    #[test]
    fn invalid_config_is_rejected() {
        let mut config = SuiteConfig::default_for(Suite::CocycleR, 0);
        config.samples = 0;
        assert!(matches!(run_suite(&config), Err(ConfigError::NoSamples)));
        let mut config = SuiteConfig::default_for(Suite::CocycleR, 0);
        config.tol = 0.0;
        assert!(run_suite(&config).is_err());
        let mut config = SuiteConfig::default_for(Suite::CocycleR, 0);
        config.x_range = (-1.0, 2.0);
        assert!(run_suite(&config).is_err());
    }

    #[test]
    fn report_json_has_fixed_field_order() {
        let report = run_suite(&SuiteConfig::default_for(Suite::GoldenVolumes, 0)).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let keys = ["\"suite\"", "\"samples\"", "\"seed\"", "\"tol\"",
            "\"max_relative_residual\"", "\"worst_cases\"", "\"passed\"", "\"elapsed_ms\""];
        let mut last = 0;
        for key in keys {
            let pos = json.find(key).unwrap_or_else(|| panic!("missing {key}"));
            assert!(pos > last || last == 0, "field {key} out of order");
            last = pos;
        }
    }
}
