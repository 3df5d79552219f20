//! The two scalar transports on dimension shifts and the coboundary
//! separating them.
//!
//! `R(x,r) = π^r Γ(x/2)/Γ(x/2+r)` is the coefficient of the Mellin-Gamma
//! functor's morphism part; `T(x,r) = π^r Γ(x/2+1)/Γ(x/2+r+1)` is the ratio
//! of ball volumes V(x+2r)/V(x). Both satisfy the multiplicative cocycle
//! identity C(x,r+s) = C(x+2r,s) C(x,r), and their quotient is the
//! coboundary of β(x) = x.
//!
//! All Γ-ratios are evaluated in log space and exponentiated last; values
//! of R span hundreds of orders of magnitude over the test grid.

use crate::specfun::{log_gamma, SpecFunError, LN_PI};

/// A single evaluated transport value at (x, r).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CocycleEval {
    pub x: f64,
    pub r: f64,
    pub value: f64,
}

/// Which of the two transports to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CocycleKind {
    /// Radial-integration transport R.
    Radial,
    /// Ball-volume transport T.
    Ball,
}

fn check_shift(r: f64) -> Result<(), SpecFunError> {
    if !r.is_finite() || r < 0.0 {
        return Err(SpecFunError::Domain {
            context: "cocycle shift",
            requirement: "a finite nonnegative shift",
            value: r,
        });
    }
    Ok(())
}

/// log R(x,r) = r ln π + ln Γ(x/2) − ln Γ(x/2 + r).
pub fn log_radial_cocycle_r(x: f64, r: f64) -> Result<f64, SpecFunError> {
    check_shift(r)?;
    if r == 0.0 {
        // identity shift: exactly zero, not a rounded difference
        log_gamma(x / 2.0)?;
        return Ok(0.0);
    }
    Ok(r * LN_PI + log_gamma(x / 2.0)? - log_gamma(x / 2.0 + r)?)
}

/// R(x,r) = π^r Γ(x/2) / Γ(x/2 + r).
pub fn radial_cocycle_r(x: f64, r: f64) -> Result<f64, SpecFunError> {
    Ok(log_radial_cocycle_r(x, r)?.exp())
}

/// log T(x,r) = r ln π + ln Γ(x/2 + 1) − ln Γ(x/2 + r + 1).
pub fn log_ball_cocycle_t(x: f64, r: f64) -> Result<f64, SpecFunError> {
    check_shift(r)?;
    if r == 0.0 {
        log_gamma(x / 2.0 + 1.0)?;
        return Ok(0.0);
    }
    Ok(r * LN_PI + log_gamma(x / 2.0 + 1.0)? - log_gamma(x / 2.0 + r + 1.0)?)
}

/// T(x,r) = π^r Γ(x/2 + 1) / Γ(x/2 + r + 1) = V(x+2r) / V(x).
pub fn ball_cocycle_t(x: f64, r: f64) -> Result<f64, SpecFunError> {
    Ok(log_ball_cocycle_t(x, r)?.exp())
}

/// β(x) = x, the function whose multiplicative coboundary is R/T. Its
/// interpretation as a categorical dimension is outside this crate; here it
/// is just the identity on positive reals.
pub fn beta(x: f64) -> Result<f64, SpecFunError> {
    if !x.is_finite() || x <= 0.0 {
        return Err(SpecFunError::Domain {
            context: "beta",
            requirement: "a finite positive argument",
            value: x,
        });
    }
    Ok(x)
}

/// R(x,r)/T(x,r) − β(x+2r)/β(x). Zero up to rounding for all valid inputs.
pub fn coboundary_residual(x: f64, r: f64) -> Result<f64, SpecFunError> {
    let ratio = (log_radial_cocycle_r(x, r)? - log_ball_cocycle_t(x, r)?).exp();
    Ok(ratio - beta(x + 2.0 * r)? / beta(x)?)
}

/// C(x, r+s) − C(x+2r, s) · C(x, r) for the chosen transport. Zero up to
/// rounding; callers wanting a relative residual should divide by
/// |C(x, r+s)| or use [`cocycle_relative_residual`].
pub fn cocycle_residual(
    cocycle: CocycleKind,
    x: f64,
    r: f64,
    s: f64,
) -> Result<f64, SpecFunError> {
    let log_c = |x: f64, r: f64| match cocycle {
        CocycleKind::Radial => log_radial_cocycle_r(x, r),
        CocycleKind::Ball => log_ball_cocycle_t(x, r),
    };
    let whole = log_c(x, r + s)?;
    let split = log_c(x + 2.0 * r, s)? + log_c(x, r)?;
    Ok(whole.exp() - split.exp())
}

/// |C(x+2r,s) C(x,r) / C(x,r+s) − 1|, the cocycle defect in relative scale.
/// Computed from log values, so it stays meaningful when C itself is far
/// outside the representable range.
pub fn cocycle_relative_residual(
    cocycle: CocycleKind,
    x: f64,
    r: f64,
    s: f64,
) -> Result<f64, SpecFunError> {
    let log_c = |x: f64, r: f64| match cocycle {
        CocycleKind::Radial => log_radial_cocycle_r(x, r),
        CocycleKind::Ball => log_ball_cocycle_t(x, r),
    };
    let whole = log_c(x, r + s)?;
    let split = log_c(x + 2.0 * r, s)? + log_c(x, r)?;
    Ok(((split - whole).exp() - 1.0).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn radial_cocycle_closed_values() {
        assert!((radial_cocycle_r(2.0, 1.0).unwrap() - PI).abs() < 1e-14);
        assert_eq!(radial_cocycle_r(7.3, 0.0).unwrap(), 1.0);
        // R(1,1) = π Γ(1/2)/Γ(3/2) = 2π
        assert!((radial_cocycle_r(1.0, 1.0).unwrap() - 2.0 * PI).abs() < 1e-13);
    }

    #[test]
    fn ball_cocycle_closed_values() {
        assert!((ball_cocycle_t(2.0, 1.0).unwrap() - PI / 2.0).abs() < 1e-14);
        assert_eq!(ball_cocycle_t(0.4, 0.0).unwrap(), 1.0);
        // T(1,1) = π Γ(3/2)/Γ(5/2) = 2π/3
        assert!((ball_cocycle_t(1.0, 1.0).unwrap() - 2.0 * PI / 3.0).abs() < 1e-13);
    }

    #[test]
    fn beta_is_identity_on_positives() {
        assert_eq!(beta(1.0).unwrap(), 1.0);
        assert_eq!(beta(2.5).unwrap(), 2.5);
        assert_eq!(beta(7.0).unwrap(), 7.0);
        assert!(beta(0.0).is_err());
        assert!(beta(-3.0).is_err());
    }

    #[test]
    fn coboundary_closed_cases() {
        assert!(coboundary_residual(2.0, 1.0).unwrap().abs() < 1e-14);
        assert_eq!(coboundary_residual(5.3, 0.0).unwrap(), 0.0);
        let resid = coboundary_residual(0.7, 2.3).unwrap();
        let scale = (0.7 + 2.0 * 2.3) / 0.7;
        assert!(resid.abs() <= 1e-11 * (1.0 + scale));
    }

    #[test]
    fn cocycle_closed_cases() {
        // R(2,2) − R(4,1) R(2,1) = π²/2 − (π/2)·π = 0
        let resid = cocycle_residual(CocycleKind::Radial, 2.0, 1.0, 1.0).unwrap();
        assert!(resid.abs() < 1e-12);
        assert_eq!(
            cocycle_residual(CocycleKind::Ball, 3.3, 0.0, 0.0).unwrap(),
            0.0
        );
        let rel = cocycle_relative_residual(CocycleKind::Ball, 1.3, 0.8, 2.1).unwrap();
        assert!(rel <= 1e-11);
    }

    #[test]
    fn normalization_is_exact_at_zero_shift() {
        // log-space sum is identically zero for r = 0, so both transports
        // are bit-exact 1 there
        for &x in &[0.05, 1.0, 17.2, 300.0] {
            assert_eq!(radial_cocycle_r(x, 0.0).unwrap(), 1.0);
            assert_eq!(ball_cocycle_t(x, 0.0).unwrap(), 1.0);
        }
    }

    #[test]
    fn functor_consistency_with_measures() {
        use crate::measures::{functor_morphism, mellin_gamma_functor, DimObject, DimShift};
        let mg = mellin_gamma_functor();
        let mut rng = crate::verify::rng::SeededRng::new(13);
        for _ in 0..500 {
            let x = 0.1 * (400f64).powf(rng.next_f64());
            let r = 8.0 * rng.next_f64();
            let shift = DimShift::new(DimObject::new(x).unwrap(), r).unwrap();
            let m = functor_morphism(&mg, shift).unwrap();
            let rr = radial_cocycle_r(x, r).unwrap();
            assert!(
                (m.coefficient() - rr).abs() <= 1e-12 * rr,
                "x={x}, r={r}: morphism {} vs R {rr}",
                m.coefficient()
            );
        }
    }

    #[test]
    fn cocycle_law_random_grid() {
        let mut rng = crate::verify::rng::SeededRng::new(17);
        for _ in 0..10_000 {
            let x = 0.05 * (1000f64).powf(rng.next_f64());
            let r = 10.0 * rng.next_f64();
            let s = 10.0 * rng.next_f64();
            for kind in [CocycleKind::Radial, CocycleKind::Ball] {
                let rel = cocycle_relative_residual(kind, x, r, s).unwrap();
                assert!(rel <= 1e-10, "{kind:?} defect {rel:e} at x={x}, r={r}, s={s}");
            }
        }
    }

    #[test]
    fn coboundary_law_random_grid() {
        let mut rng = crate::verify::rng::SeededRng::new(19);
        for _ in 0..10_000 {
            let x = 0.05 * (1000f64).powf(rng.next_f64());
            let r = 10.0 * rng.next_f64();
            let ratio = (x + 2.0 * r) / x;
            let resid = coboundary_residual(x, r).unwrap();
            assert!(resid.abs() <= 1e-10 * ratio, "residual {resid:e} at x={x}, r={r}");
            // equivalent form: T = (β(x)/β(x+2r)) R
            let t = ball_cocycle_t(x, r).unwrap();
            let rhs = x / (x + 2.0 * r) * radial_cocycle_r(x, r).unwrap();
            assert!((t - rhs).abs() <= 1e-10 * t, "T form at x={x}, r={r}");
        }
    }
}
