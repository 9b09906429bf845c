use hartogs::quadrature::integrate_torus;
use hartogs::specfun::*;
use hartogs::{Complex64, Error};
use proptest::prelude::*;
use std::f64::consts::PI;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

fn params(a: f64, b: f64, c: f64) -> HypParams {
    HypParams::new(a, b, c).unwrap()
}

#[test]
fn gamma_values() {
    assert_eq!(gamma(1.0).unwrap(), 1.0);
    assert_eq!(gamma(5.0).unwrap(), 24.0);
    assert!(rel(gamma(0.5).unwrap(), std::f64::consts::PI.sqrt()) < 1e-15);
    assert!(rel(gamma(-2.5).unwrap(), -0.9453087204829419) < 1e-13);
    assert!(rel(gamma(170.5).unwrap(), 5.562_092_414_56e305) < 1e-12);
}

#[test]
fn gamma_errors() {
    assert!(matches!(gamma(0.0), Err(Error::Pole(_))));
    assert!(matches!(gamma(-3.0), Err(Error::Pole(_))));
    assert!(matches!(gamma(172.0), Err(Error::Overflow(_))));
}

#[test]
fn log_gamma_values() {
    assert_eq!(log_gamma(1.0).unwrap(), 0.0);
    assert_eq!(log_gamma(2.0).unwrap(), 0.0);
    assert!(rel(log_gamma(11.0).unwrap(), 3628800f64.ln()) < 1e-15);
    assert!(rel(log_gamma(11.0).unwrap(), 15.104412573075516) < 1e-15);
    assert!(matches!(log_gamma(0.0), Err(Error::Domain(_))));
}

#[test]
fn pochhammer_values() {
    assert_eq!(pochhammer(3.7, 0), 1.0);
    assert_eq!(pochhammer(2.0, 3), 24.0);
    assert_eq!(pochhammer(0.5, 2), 0.75);
}

#[test]
fn hypergeometric_values() {
    let ctl = SeriesControl::default();
    assert_eq!(hyp2f1(params(0.3, 0.7, 1.1), 0.0, ctl).unwrap(), 1.0);
    assert!(rel(hyp2f1(params(1.0, 1.0, 2.0), 0.5, ctl).unwrap(), 2.0 * 2f64.ln()) < 1e-14);
    // F(1/2, 1/2; 1; |z|²) is the torus mean of |1 − z ζ̄|^{−1}
    let z = Complex64::new(0.5, 0.0);
    let torus = integrate_torus(|w| Complex64::new((1.0 - z * w.conj()).norm().recip(), 0.0), 256).re;
    let series = hyp2f1(params(0.5, 0.5, 1.0), 0.25, ctl).unwrap();
    assert!(rel(series, torus) < 1e-13);
    assert!((series - 1.0731820).abs() < 5e-8);
}

#[test]
fn terminating_series_is_exact() {
    let ctl = SeriesControl::default();
    // F(−2, b; c; x) = 1 − 2bx/c + b(b+1)x²/(c(c+1))
    let (b, c, x) = (1.5, 2.5, 0.7);
    let exact = 1.0 - 2.0 * b * x / c + b * (b + 1.0) * x * x / (c * (c + 1.0));
    assert!(rel(hyp2f1(params(-2.0, b, c), x, ctl).unwrap(), exact) < 1e-15);
}

#[test]
fn gauss_summation() {
    assert!(rel(hyp2f1_at_one(params(0.5, 0.5, 2.0)).unwrap(), 4.0 / PI) < 1e-14);
    assert_eq!(hyp2f1_at_one(params(0.0, 0.7, 1.3)).unwrap(), 1.0);
    assert!(matches!(hyp2f1_at_one(params(1.0, 1.0, 2.0)), Err(Error::Domain(_))));
}

#[test]
fn invalid_parameters() {
    assert!(HypParams::new(1.0, 1.0, -2.0).is_err());
    assert!(hyp2f1(params(1.0, 1.0, 2.0), 1.0, SeriesControl::default()).is_err());
    assert!(SeriesControl::new(0.0, 10).is_err());
    assert!(matches!(
        hyp2f1_series(params(1.0, 1.0, 2.0), 0.999, SeriesControl::new(1e-14, 10).unwrap()),
        Err(Error::NoConvergence { .. })
    ));
}

#[test]
fn identity_examples() {
    let r = identity_check(Identity::Reflection, params(1.0, 1.0, 2.0), 0.25, None).unwrap();
    assert!(r.discrepancy().unwrap() < 1e-12);
    let r = identity_check(Identity::EulerTransform, params(0.4, 0.6, 1.5), 0.3, None).unwrap();
    assert!(r.discrepancy().unwrap() < 1e-12);
    let r = identity_check(Identity::Derivative(1), params(0.5, 1.0, 2.5), 0.4, None).unwrap();
    assert!(r.discrepancy().unwrap() < 1e-6);
    assert!(identity_check(Identity::IntegralRep, params(1.0, 2.0, 1.5), 0.3, None).is_err());
    for id in Identity::ALL {
        assert_eq!(id.name().parse::<Identity>().unwrap(), id);
    }
}

#[test]
fn gauss_sum_along_boundary_sequence() {
    for (a, b, c) in [(0.5, 0.5, 2.0), (0.3, 0.4, 1.2), (-0.5, 1.5, 1.75)] {
        assert!(gauss_sum_check(params(a, b, c), None).unwrap().passed);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn recurrence(x in 0.1f64..50.0) {
        prop_assert!(rel(x * gamma(x).unwrap(), gamma(x + 1.0).unwrap()) < 1e-12);
    }

    #[test]
    fn reflection(z in 0.001f64..0.999) {
        prop_assert!((gamma(z).unwrap() * gamma(1.0 - z).unwrap() * sin_pi(z) / PI - 1.0).abs() < 1e-12);
    }

    #[test]
    fn duplication(z in 0.1f64..20.0) {
        let lhs = gamma(z).unwrap() * gamma(z + 0.5).unwrap();
        let rhs = 2f64.powf(1.0 - 2.0 * z) * PI.sqrt() * gamma(2.0 * z).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-11);
    }

    #[test]
    fn log_gamma_matches_gamma(x in 0.01f64..170.0) {
        prop_assert!(rel(log_gamma(x).unwrap().exp(), gamma(x).unwrap()) < 1e-12 * x.max(1.0).ln().max(1.0));
    }

    #[test]
    fn pochhammer_is_gamma_ratio(a in 0.1f64..10.0, m in 0u32..20) {
        let r = gamma(a + m as f64).unwrap() / gamma(a).unwrap();
        prop_assert!(rel(pochhammer(a, m), r) < 1e-12);
    }

    #[test]
    fn series_and_euler_transform_agree(
        a in -1.5f64..2.0, b in -1.5f64..2.0, c in 0.3f64..4.0, x in 0.0f64..0.9,
    ) {
        prop_assume!((a - a.round()).abs() > 1e-3 && (b - b.round()).abs() > 1e-3);
        let p = params(a, b, c);
        let ctl = SeriesControl::default();
        let s = hyp2f1_series(p, x, ctl).unwrap();
        let e = hyp2f1_euler(p, x, ctl).unwrap();
        prop_assert!((s - e).abs() <= 10.0 * ctl.rel_tol * s.abs().max(e.abs()), "{s} {e}");
    }

    #[test]
    fn integral_representation(a in -1.0f64..2.0, b in 0.2f64..3.0, gap in 0.2f64..3.0, x in 0.0f64..0.9) {
        let p = params(a, b, b + gap);
        let r = identity_check(Identity::IntegralRep, p, x, Some(1e-8)).unwrap();
        prop_assert!(r.passed, "{:?}", r);
    }
}
