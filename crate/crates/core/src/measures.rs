//! Dimension objects and shifts, homogeneous radial measures, density
//! morphisms, and the functor sending dimensions to measures.
//!
//! A homogeneous radial measure is `c · u^{x/2-1} du` on (0, ∞); a shift
//! x → x+2r acts by the homogeneous density `A · u^r` with A the ratio of
//! the coefficients at the endpoints. Any positive coefficient function
//! gives a lawful functor; Gaussian normalization singles out the
//! Mellin-Gamma coefficient `π^{x/2} / Γ(x/2)`.

use std::sync::Arc;

use thiserror::Error;

use crate::quadrature::{self, Integrand, QuadratureError};
use crate::specfun::{self, SpecFunError, LN_PI};
use crate::verify::{SampleOutcome, Suite, VerificationReport};

/// Absolute tolerance for matching dimensions when composing.
pub const DIM_MATCH_TOL: f64 = 1e-12;
/// Relative tolerance for matching coefficients when composing morphisms.
pub const COEFF_MATCH_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeasureError {
    #[error("dimension must be positive and finite, got {0}")]
    InvalidDimension(f64),
    #[error("shift parameter must be nonnegative and finite, got {0}")]
    InvalidShift(f64),
    #[error("measure coefficient must be positive and finite, got {0}")]
    InvalidCoefficient(f64),
    #[error("not composable: {context} (left endpoint {left}, right endpoint {right})")]
    NotComposable {
        context: &'static str,
        left: f64,
        right: f64,
    },
    #[error("coefficient function returned a non-positive or non-finite value {value} at x = {x}")]
    BadCoefficientValue { x: f64, value: f64 },
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

/// A positive real dimension parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimObject {
    x: f64,
}

impl DimObject {
    pub fn new(x: f64) -> Result<Self, MeasureError> {
        if !x.is_finite() || x <= 0.0 {
            return Err(MeasureError::InvalidDimension(x));
        }
        Ok(Self { x })
    }

    pub fn x(&self) -> f64 {
        self.x
    }
}

/// A shift x → x + 2r with r >= 0. Negative shifts are rejected at
/// construction; the category runs in the nonnegative direction only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimShift {
    source: DimObject,
    r: f64,
}

impl DimShift {
    pub fn new(source: DimObject, r: f64) -> Result<Self, MeasureError> {
        if !r.is_finite() || r < 0.0 {
            return Err(MeasureError::InvalidShift(r));
        }
        Ok(Self { source, r })
    }

    pub fn source(&self) -> DimObject {
        self.source
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn target(&self) -> DimObject {
        // source.x > 0 and r >= 0, so this cannot fail
        DimObject {
            x: self.source.x + 2.0 * self.r,
        }
    }
}

/// Compose two shifts; the second must start where the first ends.
pub fn compose_shifts(first: DimShift, second: DimShift) -> Result<DimShift, MeasureError> {
    let expected = first.target().x;
    if (second.source.x - expected).abs() > DIM_MATCH_TOL {
        return Err(MeasureError::NotComposable {
            context: "shift source does not match previous target",
            left: expected,
            right: second.source.x,
        });
    }
    DimShift::new(first.source, first.r + second.r)
}

/// The measure `coeff · u^{x/2-1} du` on (0, ∞).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomogeneousRadialMeasure {
    x: f64,
    coeff: f64,
}

impl HomogeneousRadialMeasure {
    pub fn new(x: f64, coeff: f64) -> Result<Self, MeasureError> {
        if !x.is_finite() || x <= 0.0 {
            return Err(MeasureError::InvalidDimension(x));
        }
        if !coeff.is_finite() || coeff <= 0.0 {
            return Err(MeasureError::InvalidCoefficient(coeff));
        }
        Ok(Self { x, coeff })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn coeff(&self) -> f64 {
        self.coeff
    }

    /// Density against du at u > 0.
    pub fn density(&self, u: f64) -> f64 {
        self.coeff * u.powf(self.x / 2.0 - 1.0)
    }

    /// log density, stable where the linear form would under/overflow.
    pub fn log_density(&self, u: f64) -> f64 {
        self.coeff.ln() + (self.x / 2.0 - 1.0) * u.ln()
    }
}

/// The homogeneous density `A · u^power` carrying source to target.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMorphism {
    source: HomogeneousRadialMeasure,
    target: HomogeneousRadialMeasure,
    a: f64,
    power: f64,
}

impl DensityMorphism {
    pub fn new(
        source: HomogeneousRadialMeasure,
        target: HomogeneousRadialMeasure,
        a: f64,
        power: f64,
    ) -> Result<Self, MeasureError> {
        if !power.is_finite() || power < 0.0 {
            return Err(MeasureError::InvalidShift(power));
        }
        if !a.is_finite() || a <= 0.0 {
            return Err(MeasureError::InvalidCoefficient(a));
        }
        if (target.x - (source.x + 2.0 * power)).abs() > DIM_MATCH_TOL {
            return Err(MeasureError::NotComposable {
                context: "target dimension is not source + 2*power",
                left: source.x + 2.0 * power,
                right: target.x,
            });
        }
        Ok(Self {
            source,
            target,
            a,
            power,
        })
    }

    pub fn source(&self) -> HomogeneousRadialMeasure {
        self.source
    }

    pub fn target(&self) -> HomogeneousRadialMeasure {
        self.target
    }

    pub fn coefficient(&self) -> f64 {
        self.a
    }

    pub fn power(&self) -> f64 {
        self.power
    }

    /// The density value A · u^power.
    pub fn density(&self, u: f64) -> f64 {
        self.a * u.powf(self.power)
    }
}

/// Compose morphisms by pointwise multiplication of densities.
pub fn compose_morphisms(
    f: DensityMorphism,
    g: DensityMorphism,
) -> Result<DensityMorphism, MeasureError> {
    if (g.source.x - f.target.x).abs() > DIM_MATCH_TOL {
        return Err(MeasureError::NotComposable {
            context: "morphism source dimension does not match previous target",
            left: f.target.x,
            right: g.source.x,
        });
    }
    let rel = (g.source.coeff - f.target.coeff).abs() / f.target.coeff;
    if rel > COEFF_MATCH_TOL {
        return Err(MeasureError::NotComposable {
            context: "morphism source coefficient does not match previous target",
            left: f.target.coeff,
            right: g.source.coeff,
        });
    }
    DensityMorphism::new(f.source, g.target, f.a * g.a, f.power + g.power)
}

type EvalFn = dyn Fn(f64) -> f64 + Send + Sync;

/// The classifying datum of a scaling-covariant homogeneous functor: an
/// opaque positive function of the dimension. An optional log-scale
/// evaluator keeps morphism coefficients accurate where the linear value
/// under- or overflows (the Mellin-Gamma coefficient underflows past
/// x ≈ 450).
#[derive(Clone)]
pub struct CoefficientFunction {
    eval: Arc<EvalFn>,
    log_eval: Option<Arc<EvalFn>>,
}

impl CoefficientFunction {
    pub fn new(eval: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self {
            eval: Arc::new(eval),
            log_eval: None,
        }
    }

    pub fn with_log(
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
        log_eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            eval: Arc::new(eval),
            log_eval: Some(Arc::new(log_eval)),
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.eval)(x)
    }

    fn checked_eval(&self, x: f64) -> Result<f64, MeasureError> {
        let value = self.eval(x);
        if !value.is_finite() || value <= 0.0 {
            return Err(MeasureError::BadCoefficientValue { x, value });
        }
        Ok(value)
    }

    fn log_eval(&self, x: f64) -> Option<f64> {
        self.log_eval.as_ref().map(|f| f(x))
    }
}

impl std::fmt::Debug for CoefficientFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CoefficientFunction")
            .field("has_log_eval", &self.log_eval.is_some())
            .finish()
    }
}

/// Object part of the functor: x ↦ c(x) · u^{x/2-1} du.
pub fn functor_object(
    c: &CoefficientFunction,
    x: DimObject,
) -> Result<HomogeneousRadialMeasure, MeasureError> {
    let coeff = c.checked_eval(x.x())?;
    HomogeneousRadialMeasure::new(x.x(), coeff)
}

/// Morphism part: the shift x → x+2r goes to the density
/// (c(x+2r)/c(x)) · u^r between the endpoint measures.
pub fn functor_morphism(
    c: &CoefficientFunction,
    shift: DimShift,
) -> Result<DensityMorphism, MeasureError> {
    let source = functor_object(c, shift.source())?;
    let target = functor_object(c, shift.target())?;
    // Ratio in linear scale unless either endpoint is badly scaled, in
    // which case the log evaluator (when present) keeps full precision.
    let extreme = |v: f64| !v.is_normal() || v > 1e300 || v < 1e-300;
    let use_log = shift.source().x() > 300.0
        || shift.target().x() > 300.0
        || extreme(source.coeff())
        || extreme(target.coeff());
    let a = match (use_log, c.log_eval(shift.target().x()), c.log_eval(shift.source().x())) {
        (true, Some(lt), Some(ls)) => (lt - ls).exp(),
        _ => target.coeff() / source.coeff(),
    };
    DensityMorphism::new(source, target, a, shift.r())
}

/// The Gaussian-normalized coefficient function x ↦ π^{x/2} / Γ(x/2).
pub fn mellin_gamma_functor() -> CoefficientFunction {
    let log = |x: f64| (x / 2.0) * LN_PI - specfun::log_gamma_unchecked(x / 2.0);
    CoefficientFunction::with_log(move |x| log(x).exp(), log)
}

/// The factor that rescales `c_unnormalized` at x so that
/// ∫ e^{-u} dF(x)(u) = π^{x/2}: namely π^{x/2} / (c(x) · Γ(x/2)).
/// For c ≡ 1 this is the Mellin-Gamma coefficient itself.
pub fn gaussian_normalize(
    c_unnormalized: &CoefficientFunction,
    x: DimObject,
) -> Result<f64, MeasureError> {
    let c = c_unnormalized.checked_eval(x.x())?;
    let log_factor =
        (x.x() / 2.0) * LN_PI - c.ln() - specfun::log_gamma(x.x() / 2.0)?;
    Ok(log_factor.exp())
}

/// Smooth compactly supported bump on (m - w, m + w).
fn bump(u: f64, center: f64, width: f64) -> f64 {
    let z = (u - center) / width;
    if z.abs() >= 1.0 {
        0.0
    } else {
        (-1.0 / (1.0 - z * z)).exp()
    }
}

/// Numerically test the scaling-covariance law
/// ∫ φ(λu) dμ(u) = λ^{-x/2} ∫ φ(u) dμ(u)
/// against a fixed family of smooth bumps with log-spaced centers in
/// [0.1, 10] and widths half the center.
pub fn check_scaling_covariance(
    m: &HomogeneousRadialMeasure,
    lambda: f64,
    probe_count: usize,
    tol: f64,
) -> Result<VerificationReport, MeasureError> {
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(MeasureError::InvalidCoefficient(lambda));
    }
    let started = std::time::Instant::now();
    let mut outcomes = Vec::with_capacity(probe_count);
    for k in 0..probe_count {
        let frac = if probe_count > 1 {
            k as f64 / (probe_count - 1) as f64
        } else {
            0.5
        };
        let center = 0.1 * 100f64.powf(frac);
        let width = center / 2.0;
        let x = m.x();
        let coeff = m.coeff();
        let p = x / 2.0 - 1.0;

        // LHS: ∫ φ(λu) dμ(u), supported on ((m-w)/λ, (m+w)/λ).
        let lhs_f = Integrand::new(
            move |u: f64| bump(lambda * u, center, width) * coeff * u.powf(p),
            p,
        )?;
        // the two sides differ by the factor λ^{-x/2}, which can span many
        // orders of magnitude, so drive both integrals by relative
        // tolerance alone
        let lhs = quadrature::integrate_interval(
            &lhs_f,
            (center - width) / lambda,
            (center + width) / lambda,
            f64::MIN_POSITIVE,
            1e-11,
        );
        // RHS: λ^{-x/2} ∫ φ(u) dμ(u), supported on (m-w, m+w).
        let rhs_f = Integrand::new(
            move |u: f64| bump(u, center, width) * coeff * u.powf(p),
            p,
        )?;
        let rhs = quadrature::integrate_interval(
            &rhs_f,
            center - width,
            center + width,
            f64::MIN_POSITIVE,
            1e-11,
        );
        let outcome = match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                let scaled = lambda.powf(-x / 2.0) * r.value;
                let residual = (l.value - scaled).abs() / scaled.abs().max(f64::MIN_POSITIVE);
                SampleOutcome::residual(vec![m.x(), lambda, center], residual)
            }
            _ => SampleOutcome::errored(vec![m.x(), lambda, center]),
        };
        outcomes.push(outcome);
    }
    Ok(VerificationReport::from_outcomes(
        Suite::ScalingCovariance,
        0,
        tol,
        outcomes,
        started.elapsed(),
    ))
}
