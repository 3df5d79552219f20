//! Acceptance gate: one test per certified claim, each printing a
//! pass/fail line. Tolerances are pinned here and must not drift.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::f64::consts::PI;
use std::process::Command;

use radmeas::measures::{functor_object, mellin_gamma_functor, DimObject};
use radmeas::observables;
use radmeas::verify::{self, rng::SeededRng, Suite, SuiteConfig};

fn report_line(criterion: &str, passed: bool, detail: &str) {
    let verdict = if passed { "PASS" } else { "FAIL" };
    println!("[acceptance] {verdict} {criterion}: {detail}");
}

fn run_default(suite: Suite) -> radmeas::verify::VerificationReport {
    verify::run_suite(&SuiteConfig::default_for(suite, 0)).expect("valid default config")
}

#[test]
fn criterion_1_golden_ball_volumes() {
    let golden = [
        (1.0, 2.0),
        (2.0, PI),
        (3.0, 4.0 * PI / 3.0),
        (4.0, PI * PI / 2.0),
        (5.0, 8.0 * PI * PI / 15.0),
    ];
    let mut worst = 0.0_f64;
    for (x, expected) in golden {
        let v = observables::ball_volume_v(x).unwrap();
        worst = worst.max((v - expected).abs() / expected);
    }
    let passed = worst <= 1e-12;
    report_line(
        "criterion 1 (golden ball volumes, rel <= 1e-12)",
        passed,
        &format!("max residual {worst:.3e}"),
    );
    assert!(passed);
}

#[test]
fn criterion_2_gaussian_normalization() {
    let report = run_default(Suite::Normalization);
    report_line(
        "criterion 2 (Gaussian normalization vs quadrature, 50 samples, rel <= 1e-7)",
        report.passed,
        &format!("max residual {:.3e}", report.max_relative_residual),
    );
    assert_eq!(report.samples, 50);
    assert_eq!(report.tol, 1e-7);
    assert!(report.passed);
}

#[test]
fn criterion_3_cocycle_identities() {
    let r = run_default(Suite::CocycleR);
    let t = run_default(Suite::CocycleT);
    let passed = r.passed && t.passed;
    report_line(
        "criterion 3 (cocycle identities for R and T, 10^4 samples, rel <= 1e-10)",
        passed,
        &format!(
            "max residual R {:.3e}, T {:.3e}",
            r.max_relative_residual, t.max_relative_residual
        ),
    );
    assert_eq!(r.samples, 10_000);
    assert_eq!(t.samples, 10_000);
    assert_eq!(r.tol, 1e-10);
    assert!(passed);
}

#[test]
fn criterion_4_coboundary_identification() {
    let report = run_default(Suite::Coboundary);
    // equivalent form T = (β(x)/β(x+2r)) R on the same grid size
    let mut rng = SeededRng::new(0);
    let mut worst_alt = 0.0_f64;
    for _ in 0..10_000 {
        let x = rng.log_uniform(0.05, 50.0);
        let r = rng.uniform(0.0, 10.0);
        let t = radmeas::cocycles::ball_cocycle_t(x, r).unwrap();
        let rhs = x / (x + 2.0 * r) * radmeas::cocycles::radial_cocycle_r(x, r).unwrap();
        worst_alt = worst_alt.max((t - rhs).abs() / t);
    }
    let passed = report.passed && worst_alt <= 1e-10;
    report_line(
        "criterion 4 (coboundary R/T = (x+2r)/x, 10^4 samples, rel <= 1e-10)",
        passed,
        &format!(
            "max residual {:.3e}, equivalent form {:.3e}",
            report.max_relative_residual, worst_alt
        ),
    );
    assert_eq!(report.samples, 10_000);
    assert_eq!(report.tol, 1e-10);
    assert!(passed);
}

#[test]
fn criterion_5_scaling_covariance() {
    let report = run_default(Suite::ScalingCovariance);
    report_line(
        "criterion 5 (scaling covariance with bump probes, 20 pairs, rel <= 1e-7)",
        report.passed,
        &format!("max residual {:.3e}", report.max_relative_residual),
    );
    assert_eq!(report.samples, 20);
    assert_eq!(report.tol, 1e-7);
    assert!(report.passed);
}

#[test]
fn criterion_6_automatic_functoriality() {
    let report = run_default(Suite::FunctorialityGeneric);
    report_line(
        "criterion 6 (automatic functoriality for 20 random coefficient functions, rel <= 1e-10)",
        report.passed,
        &format!("max residual {:.3e}", report.max_relative_residual),
    );
    assert_eq!(report.samples, 20);
    assert_eq!(report.tol, 1e-10);
    assert!(report.passed);
}

#[test]
fn criterion_7_transport_consistency() {
    let report = run_default(Suite::TransportConsistency);
    report_line(
        "criterion 7 (V(x+2r)/V(x) = T(x,r), 10^4 samples, rel <= 1e-11)",
        report.passed,
        &format!("max residual {:.3e}", report.max_relative_residual),
    );
    assert_eq!(report.samples, 10_000);
    assert_eq!(report.tol, 1e-11);
    assert!(report.passed);
}

#[test]
fn criterion_8_closed_form_vs_quadrature() {
    let mg = mellin_gamma_functor();
    let mut rng = SeededRng::new(0);
    let mut worst = 0.0_f64;
    for _ in 0..30 {
        let x = rng.log_uniform(0.1, 30.0);
        let m = functor_object(&mg, DimObject::new(x).unwrap()).unwrap();
        let b_closed = observables::unit_interval_observable(&m).value;
        let b_quad = observables::unit_interval_via_quadrature(&m).unwrap().value;
        worst = worst.max((b_closed - b_quad).abs() / b_closed);
        let g_closed = observables::gaussian_observable(&m).unwrap().value;
        let g_quad = observables::gaussian_via_quadrature(&m).unwrap().value;
        worst = worst.max((g_closed - g_quad).abs() / g_closed);
    }
    let passed = worst <= 1e-8;
    report_line(
        "criterion 8 (closed forms vs quadrature, 30 samples, rel <= 1e-8)",
        passed,
        &format!("max residual {worst:.3e}"),
    );
    assert!(passed);
}

#[test]
fn criterion_9_determinism_of_verify_output() {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_radmeas"))
            .args(["verify", "--suite", "all", "--seed", "0", "--format", "json"])
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "verify run failed: {out:?}");
        let text = String::from_utf8(out.stdout).expect("utf-8");
        // elapsed time is the one permitted difference
        let mut scrubbed: serde_json::Value = serde_json::from_str(&text).expect("json");
        for report in scrubbed.as_array_mut().expect("array of reports") {
            report
                .as_object_mut()
                .expect("report object")
                .insert("elapsed_ms".into(), serde_json::json!(0));
        }
        serde_json::to_string(&scrubbed).expect("serializable")
    };
    let first = run();
    let second = run();
    let passed = first == second;
    report_line(
        "criterion 9 (verify --suite all --seed 0 is byte-identical modulo elapsed)",
        passed,
        &format!("{} bytes compared", first.len()),
    );
    assert!(passed);
}
