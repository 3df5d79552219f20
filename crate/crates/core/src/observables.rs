//! Scalar observables on homogeneous radial measures.
//!
//! The unit-interval mass evaluated on the Mellin-Gamma family is the
//! continuous-dimension ball volume V(x) = π^{x/2}/Γ(x/2+1); the Gaussian
//! observable recovers the normalization π^{x/2}. Closed forms are the
//! default; each has a quadrature twin for cross-checking. Observables act
//! on objects only — there is deliberately no lifting to morphisms.

use crate::cocycles;
use crate::measures::{HomogeneousRadialMeasure, MeasureError};
use crate::quadrature::{self, Integrand};
use crate::specfun::{self, SpecFunError, LN_PI};

/// How an observable value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Quadrature,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservableValue {
    pub value: f64,
    pub method: Method,
    /// Zero for closed forms; the engine's estimate for quadrature.
    pub error_estimate: f64,
}

impl ObservableValue {
    fn closed(value: f64) -> Self {
        Self {
            value,
            method: Method::ClosedForm,
            error_estimate: 0.0,
        }
    }
}

/// μ((0,1)) = coeff · 2/x.
pub fn unit_interval_observable(m: &HomogeneousRadialMeasure) -> ObservableValue {
    ObservableValue::closed(m.coeff() * 2.0 / m.x())
}

/// μ((0,b)) = coeff · (2/x) · b^{x/2}.
pub fn sublevel_mass(
    m: &HomogeneousRadialMeasure,
    b: f64,
) -> Result<ObservableValue, MeasureError> {
    if !b.is_finite() || b <= 0.0 {
        return Err(MeasureError::InvalidCoefficient(b));
    }
    Ok(ObservableValue::closed(
        m.coeff() * 2.0 / m.x() * b.powf(m.x() / 2.0),
    ))
}

/// Ball volume V(x) = π^{x/2} / Γ(x/2 + 1), in log space.
pub fn ball_volume_v(x: f64) -> Result<f64, SpecFunError> {
    if !x.is_finite() || x <= 0.0 {
        return Err(SpecFunError::Domain {
            context: "ball_volume_v",
            requirement: "x > 0",
            value: x,
        });
    }
    Ok(((x / 2.0) * LN_PI - specfun::log_gamma(x / 2.0 + 1.0)?).exp())
}

/// ∫ e^{-u} dμ(u) = coeff · Γ(x/2); π^{x/2} for the Mellin-Gamma measure.
pub fn gaussian_observable(
    m: &HomogeneousRadialMeasure,
) -> Result<ObservableValue, SpecFunError> {
    Ok(ObservableValue::closed(
        (m.coeff().ln() + specfun::log_gamma(m.x() / 2.0)?).exp(),
    ))
}

/// Truncation of the Gaussian observable to (0, b):
/// coeff · Γ(x/2) · P(x/2, b).
pub fn gaussian_partial_observable(
    m: &HomogeneousRadialMeasure,
    b: f64,
) -> Result<ObservableValue, MeasureError> {
    if !b.is_finite() || b <= 0.0 {
        return Err(MeasureError::InvalidCoefficient(b));
    }
    let full = gaussian_observable(m)?;
    let p = specfun::regularized_lower_incomplete(m.x() / 2.0, b)?;
    Ok(ObservableValue::closed(full.value * p))
}

/// V(x+2r)/V(x) − T(x,r). Zero up to rounding for all valid inputs.
pub fn transport_consistency(x: f64, r: f64) -> Result<f64, SpecFunError> {
    let ratio = (((x + 2.0 * r) / 2.0) * LN_PI
        - specfun::log_gamma((x + 2.0 * r) / 2.0 + 1.0)?
        - ((x / 2.0) * LN_PI - specfun::log_gamma(x / 2.0 + 1.0)?))
    .exp();
    Ok(ratio - cocycles::ball_cocycle_t(x, r)?)
}

/// Quadrature twin of [`unit_interval_observable`].
pub fn unit_interval_via_quadrature(
    m: &HomogeneousRadialMeasure,
) -> Result<ObservableValue, MeasureError> {
    let log_coeff = m.coeff().ln();
    let p = m.x() / 2.0 - 1.0;
    // evaluated in log space so extreme panels underflow instead of
    // producing 0 * inf
    let f = Integrand::new(move |u: f64| (log_coeff + p * u.ln()).exp(), p)?;
    let r = quadrature::integrate_interval(
        &f,
        0.0,
        1.0,
        quadrature::DEFAULT_ABS_TOL.max(1e-14 * m.coeff()),
        quadrature::DEFAULT_REL_TOL,
    )?;
    Ok(ObservableValue {
        value: r.value,
        method: Method::Quadrature,
        error_estimate: r.error_estimate,
    })
}

/// Quadrature twin of [`gaussian_observable`].
pub fn gaussian_via_quadrature(
    m: &HomogeneousRadialMeasure,
) -> Result<ObservableValue, MeasureError> {
    let log_coeff = m.coeff().ln();
    let p = m.x() / 2.0 - 1.0;
    let f = Integrand::new(move |u: f64| (log_coeff + p * u.ln() - u).exp(), p)?;
    let r = quadrature::integrate_half_line(
        &f,
        quadrature::DEFAULT_ABS_TOL.max(1e-14 * m.coeff()),
        quadrature::DEFAULT_REL_TOL,
    )?;
    Ok(ObservableValue {
        value: r.value,
        method: Method::Quadrature,
        error_estimate: r.error_estimate,
    })
}
