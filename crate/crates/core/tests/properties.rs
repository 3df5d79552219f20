//! Property-based checks: algebraic identities that must hold on every
//! admissible input, not just the seeded grids in the verification suites.

use proptest::prelude::*;

use radmeas::cocycles;
use radmeas::measures::{functor_object, mellin_gamma_functor, DimObject};
use radmeas::observables;
use radmeas::specfun;

proptest! {
    /// Γ(a+1) = a·Γ(a), checked in log space where it is exact to rounding.
    #[test]
    fn log_gamma_recurrence(a in 1e-3..170.0_f64) {
        let lhs = specfun::log_gamma(a + 1.0).unwrap();
        let rhs = specfun::log_gamma(a).unwrap() + a.ln();
        let scale = lhs.abs().max(1.0);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * scale, "a={a}: {lhs} vs {rhs}");
    }

    /// R(x, r+s) = R(x+2r, s) · R(x, r): the composition law, in log space.
    #[test]
    fn radial_cocycle_composes(
        x in 0.05..50.0_f64,
        r in 0.0..10.0_f64,
        s in 0.0..10.0_f64,
    ) {
        let whole = cocycles::log_radial_cocycle_r(x, r + s).unwrap();
        let split = cocycles::log_radial_cocycle_r(x + 2.0 * r, s).unwrap()
            + cocycles::log_radial_cocycle_r(x, r).unwrap();
        prop_assert!((whole - split).abs() <= 1e-10, "x={x} r={r} s={s}");
    }

    /// Same law for the ball transport T.
    #[test]
    fn ball_cocycle_composes(
        x in 0.05..50.0_f64,
        r in 0.0..10.0_f64,
        s in 0.0..10.0_f64,
    ) {
        let whole = cocycles::log_ball_cocycle_t(x, r + s).unwrap();
        let split = cocycles::log_ball_cocycle_t(x + 2.0 * r, s).unwrap()
            + cocycles::log_ball_cocycle_t(x, r).unwrap();
        prop_assert!((whole - split).abs() <= 1e-10, "x={x} r={r} s={s}");
    }

    /// R(x,r) / T(x,r) = (x + 2r) / x on every admissible pair.
    #[test]
    fn coboundary_ratio(x in 0.05..50.0_f64, r in 0.0..10.0_f64) {
        prop_assert!(cocycles::coboundary_residual(x, r).unwrap().abs() <= 1e-10);
    }

    /// T(x,r) = V(x+2r) / V(x): the transport moves ball volume exactly.
    #[test]
    fn transport_matches_volume_ratio(x in 0.1..60.0_f64, r in 0.0..10.0_f64) {
        let t = cocycles::ball_cocycle_t(x, r).unwrap();
        let ratio = observables::ball_volume_v(x + 2.0 * r).unwrap()
            / observables::ball_volume_v(x).unwrap();
        prop_assert!((t - ratio).abs() <= 1e-11 * t, "x={x} r={r}: {t} vs {ratio}");
    }

    /// Sublevel mass is homogeneous: μ((0,b)) = b^{x/2} · μ((0,1)).
    #[test]
    fn sublevel_mass_scales(x in 0.1..40.0_f64, b in 0.01..100.0_f64) {
        let m = functor_object(&mellin_gamma_functor(), DimObject::new(x).unwrap()).unwrap();
        let unit = observables::unit_interval_observable(&m).value;
        let mass = observables::sublevel_mass(&m, b).unwrap().value;
        let expected = unit * b.powf(x / 2.0);
        prop_assert!(
            (mass - expected).abs() <= 1e-12 * expected.max(f64::MIN_POSITIVE),
            "x={x} b={b}: {mass} vs {expected}"
        );
    }
}
