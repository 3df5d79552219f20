//! Adaptive Gauss-Kronrod integration on the positive half-line and on
//! finite intervals.
//!
//! This is the independent verifier for the closed forms elsewhere in the
//! crate: Gaussian normalization, scaling covariance, and the observable
//! values are all cross-checked against direct integration here.
//!
//! Half-line strategy: substitute `u = e^t`, which turns a `u^p` endpoint
//! singularity (p > −1) into smooth exponential decay `e^{(p+1)t}` as
//! t → −∞, then integrate adaptively with a nested G7/K15 rule over a
//! truncated real line whose endpoints are expanded geometrically until the
//! outermost panel is negligible.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    /// The integrand is not integrable at zero (needs u^p with p > −1).
    #[error("singularity order at zero must be > -1, got {0}")]
    Singularity(f64),
    /// Bad interval endpoints.
    #[error("invalid interval: need 0 <= lo < hi < inf, got [{lo}, {hi}]")]
    Interval { lo: f64, hi: f64 },
    /// Subdivision budget exhausted before the tolerance was met. Carries
    /// the best value and error estimate reached, for inspection.
    #[error("quadrature did not converge after {subdivisions} subdivisions (value {value:e}, error estimate {error_estimate:e})")]
    NonConvergent {
        value: f64,
        error_estimate: f64,
        subdivisions: usize,
    },
    /// The integrand returned NaN or infinity inside the domain.
    #[error("integrand evaluated to a non-finite value near u = {0:e}")]
    NonFiniteIntegrand(f64),
}

/// An integrand on (0, ∞) together with its growth order at zero.
///
/// `singularity_order_at_zero` is the exponent p with f(u) ~ u^p as u → 0⁺;
/// every call site in this crate knows it exactly (p = x/2 − 1 plus the
/// observable exponents), so the engine never probes for it.
pub struct Integrand<F: Fn(f64) -> f64> {
    f: F,
    singularity_order_at_zero: f64,
}

impl<F: Fn(f64) -> f64> Integrand<F> {
    pub fn new(f: F, singularity_order_at_zero: f64) -> Result<Self, QuadratureError> {
        if !(singularity_order_at_zero > -1.0) {
            return Err(QuadratureError::Singularity(singularity_order_at_zero));
        }
        Ok(Self {
            f,
            singularity_order_at_zero,
        })
    }

    pub fn eval(&self, u: f64) -> f64 {
        (self.f)(u)
    }

    pub fn singularity_order_at_zero(&self) -> f64 {
        self.singularity_order_at_zero
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub subdivisions_used: usize,
}

/// Default absolute tolerance; one to two digits of headroom over the
/// verification-suite tolerances.
pub const DEFAULT_ABS_TOL: f64 = 1e-12;
/// Default relative tolerance.
pub const DEFAULT_REL_TOL: f64 = 1e-10;

/// Subdivision budget per integral.
const MAX_SUBDIVISIONS: usize = 4096;

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One G7/K15 panel over [a, b]. Returns (kronrod value, |K15 − G7|).
fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Result<(f64, f64), QuadratureError> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut kronrod = 0.0;
    let mut gauss = 0.0;
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate() {
        let (fl, fr) = if x == 0.0 {
            let v = f(center);
            (v, 0.0)
        } else {
            (f(center - half * x), f(center + half * x))
        };
        if !fl.is_finite() || !fr.is_finite() {
            return Err(QuadratureError::NonFiniteIntegrand(center));
        }
        let pair = if x == 0.0 { fl } else { fl + fr };
        kronrod += wk * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        } else if x == 0.0 {
            gauss += WG[3] * pair;
        }
    }
    Ok((kronrod * half, (kronrod - gauss).abs() * half))
}

/// Adaptive bisection over an initial interval list: repeatedly split the
/// panel with the largest error estimate until the summed estimate meets
/// max(abs_tol, rel_tol * |value|).
fn adaptive(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<QuadratureResult, QuadratureError> {
    #[derive(Debug)]
    struct Panel {
        a: f64,
        b: f64,
        value: f64,
        err: f64,
    }
    // seed with panels of bounded width so a narrow peak cannot fall
    // between the nodes of a single wide GK15 panel
    let n0 = (((b - a) / 5.0).ceil() as usize).max(1);
    let mut panels = Vec::with_capacity(n0);
    for i in 0..n0 {
        let pa = a + (b - a) * i as f64 / n0 as f64;
        let pb = a + (b - a) * (i + 1) as f64 / n0 as f64;
        let (value, err) = gk15(f, pa, pb)?;
        panels.push(Panel {
            a: pa,
            b: pb,
            value,
            err,
        });
    }
    let mut subdivisions = 0usize;
    loop {
        let total_value: f64 = panels.iter().map(|p| p.value).sum();
        let total_err: f64 = panels.iter().map(|p| p.err).sum();
        let tol = abs_tol.max(rel_tol * total_value.abs());
        if total_err <= tol {
            return Ok(QuadratureResult {
                value: total_value,
                error_estimate: total_err,
                subdivisions_used: subdivisions,
            });
        }
        if subdivisions >= MAX_SUBDIVISIONS {
            return Err(QuadratureError::NonConvergent {
                value: total_value,
                error_estimate: total_err,
                subdivisions,
            });
        }
        // split the worst panel
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|(_, p), (_, q)| p.err.total_cmp(&q.err))
            .map(|(i, _)| i)
            .unwrap();
        let Panel { a, b, .. } = panels.swap_remove(worst);
        let mid = 0.5 * (a + b);
        let (v1, e1) = gk15(f, a, mid)?;
        let (v2, e2) = gk15(f, mid, b)?;
        panels.push(Panel {
            a,
            b: mid,
            value: v1,
            err: e1,
        });
        panels.push(Panel {
            a: mid,
            b,
            value: v2,
            err: e2,
        });
        subdivisions += 1;
    }
}

// Truncation limits for the t = ln u variable. Beyond these, u itself
// denormalizes in f64 and the caller's integrand cannot be evaluated.
const T_FLOOR: f64 = -690.0;
const T_CEIL: f64 = 690.0;

/// Expand a truncation endpoint geometrically until the outermost probe
/// panel contributes below `cut`. `dir` is -1.0 for the lower end, +1.0 for
/// the upper. Returns the chosen endpoint.
fn expand_endpoint(
    g: &impl Fn(f64) -> f64,
    start: f64,
    dir: f64,
    cut: f64,
) -> Result<f64, QuadratureError> {
    let mut t = start;
    let mut width = 5.0;
    let limit = if dir < 0.0 { T_FLOOR } else { T_CEIL };
    loop {
        let (a, b) = if dir < 0.0 {
            ((t - width).max(limit), t)
        } else {
            (t, (t + width).min(limit))
        };
        let (v, e) = gk15(g, a, b)?;
        if v.abs() + e < cut {
            return Ok(if dir < 0.0 { a } else { b });
        }
        t = if dir < 0.0 { a } else { b };
        width *= 2.0;
        if t == limit {
            return Ok(limit);
        }
    }
}

/// Substituted integrand g(t) = f(e^t) e^t for the half-line.
fn substituted<'a, F: Fn(f64) -> f64>(f: &'a Integrand<F>) -> impl Fn(f64) -> f64 + 'a {
    move |t: f64| {
        let u = t.exp();
        if u <= 0.0 {
            // u underflowed; f(u) u -> 0 as u -> 0 since p > -1
            return 0.0;
        }
        f.eval(u) * u
    }
}

/// Integrate f over (0, ∞).
pub fn integrate_half_line<F: Fn(f64) -> f64>(
    f: &Integrand<F>,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<QuadratureResult, QuadratureError> {
    let g = substituted(f);
    let cut = 0.01 * abs_tol;
    let lo = expand_endpoint(&g, -5.0, -1.0, cut)?;
    let hi = expand_endpoint(&g, 5.0, 1.0, cut)?;
    adaptive(&g, lo, hi, abs_tol, rel_tol)
}

/// Integrate f over the finite interval (lo, hi); lo = 0 is allowed when
/// the declared singularity order permits it.
pub fn integrate_interval<F: Fn(f64) -> f64>(
    f: &Integrand<F>,
    lo: f64,
    hi: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<QuadratureResult, QuadratureError> {
    if !(lo >= 0.0 && lo < hi && hi.is_finite()) {
        return Err(QuadratureError::Interval { lo, hi });
    }
    if lo == 0.0 {
        // u = e^t over (-inf, ln hi], lower endpoint expanded as on the
        // half-line.
        let g = substituted(f);
        let t_hi = hi.ln();
        let cut = 0.01 * abs_tol;
        let t_lo = expand_endpoint(&g, (t_hi - 10.0).min(-5.0), -1.0, cut)?;
        adaptive(&g, t_lo, t_hi, abs_tol, rel_tol)
    } else {
        adaptive(&|u| f.eval(u), lo, hi, abs_tol, rel_tol)
    }
}
