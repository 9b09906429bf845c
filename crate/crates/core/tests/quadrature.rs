use hartogs::kernel::monomial_norm_sq;
use hartogs::specfun::gamma;
use hartogs::quadrature::*;
use hartogs::sum::{sum, CompensatedSum};
use hartogs::{Complex64, Error};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn gauss_legendre_is_exact_for_polynomials() {
    let gl = GaussLegendre::new(8);
    for k in 0..16 {
        let q: f64 = gl.mapped(0.0, 1.0).map(|(x, w)| w * x.powi(k)).sum();
        assert!((q - 1.0 / (k as f64 + 1.0)).abs() < 1e-15, "k={k}");
    }
}

#[test]
fn gauss_jacobi_weight_moment() {
    // ∫_{-1}^{1} (1+x)^{-1/2} dx = 2√2
    let q: f64 = gauss_jacobi(10, 0.0, -0.5).iter().map(|&(_, w)| w).sum();
    assert!((q - 2.0 * 2f64.sqrt()).abs() < 1e-14);
}

#[test]
fn disk_monomials_are_orthogonal() {
    let spec = QuadratureSpec::default();
    for j in 0..4 {
        for k in 0..4 {
            let v = integrate_disk(|z| z.powi(j) * z.conj().powi(k), &spec).unwrap();
            let expect = if j == k { 1.0 / (j as f64 + 1.0) } else { 0.0 };
            assert!((v - expect).norm() < 1e-14, "j={j} k={k}: {v}");
        }
    }
}

#[test]
fn poisson_kernel_mean() {
    // ∫_𝔻 dν(z) / |1 − w̄z|² = −ln(1 − |w|²)/|w|²
    let spec = QuadratureSpec::default();
    for w in [c(0.5, 0.0), c(0.0, 0.9), c(0.99, 0.0)] {
        let rule = DiskRule::new(&spec, RadialWeight::NONE, &[Focus::toward(w)]).unwrap();
        let v = rule.integrate_real(|z| 1.0 / (1.0 - z * w.conj()).norm_sqr()).unwrap();
        let s = w.norm_sqr();
        assert!((v / (-(-s).ln_1p() / s) - 1.0).abs() < 1e-10, "{w}");
    }
}

#[test]
fn weighted_radial_rules() {
    // ∫ |z|^{2a} (1 − |z|²)^b dν = B(a+1, b+1)
    let spec = QuadratureSpec::default();
    for (a, b) in [(-0.5, 0.0), (0.0, -0.5), (-0.25, 0.5), (0.5, -0.75)] {
        let exact = gamma(a + 1.0).unwrap() * gamma(b + 1.0).unwrap() / gamma(a + b + 2.0).unwrap();
        let rule = DiskRule::new(&spec, RadialWeight::new(a, b), &[]).unwrap();
        let v = rule.integrate_real(|_| 1.0).unwrap();
        assert!((v - exact).abs() < 1e-12 * exact, "a={a} b={b}: {v}");
    }
}

#[test]
fn interval_rule_endpoint_weights() {
    let spec = QuadratureSpec::default();
    // ∫ x^{-1/2}(1−x)^{-1/2} dx = π
    let r = IntervalRule::new(-0.5, -0.5, &spec, 1.0, 1.0).unwrap();
    assert!((r.integrate(|_| 1.0).unwrap() - std::f64::consts::PI).abs() < 1e-13);
    assert!(matches!(IntervalRule::new(-1.0, 0.0, &spec, 1.0, 1.0), Err(Error::Divergent(_))));
    assert_eq!(graded_breakpoints(1.0, 3, 2.0), vec![0.0, 0.25, 0.5, 1.0]);
}

#[test]
fn torus_mean_of_geometric_kernel() {
    let z = c(0.6, 0.2);
    let v = integrate_torus(|w| 1.0 / (1.0 - z * w.conj()).norm_sqr() * Complex64::new(1.0, 0.0), 128);
    assert!((v.re - 1.0 / (1.0 - z.norm_sqr())).abs() < 1e-13);
}

#[test]
fn punctured_disk_detects_divergence() {
    let spec = QuadratureSpec::default();
    let ok = integrate_punctured_disk(|z| Complex64::new(z.norm().recip(), 0.0), &spec).unwrap();
    assert!((ok.re - 2.0).abs() < 1e-10);
    let bad = integrate_punctured_disk(|z| Complex64::new(z.norm_sqr().recip(), 0.0), &spec);
    assert!(matches!(bad, Err(Error::Divergent(_))));
}

#[test]
fn hartogs_volume_and_monomial_norms() {
    // polynomial integrands in polar variables: a coarse rule is exact
    let spec = QuadratureSpec::new(8, 16, 2, 1.0).unwrap();
    let vol = integrate_hartogs(|_| Complex64::new(1.0, 0.0), &spec).unwrap();
    assert!((vol.re - 0.5).abs() < 1e-13);
    for (j, k) in [(0, 0), (0, -1), (1, -1), (2, 1), (3, -2)] {
        let m = hartogs::kernel::MonomialIndex::new(j, k).unwrap();
        let v = integrate_hartogs(|z| Complex64::new(m.eval(z).norm_sqr(), 0.0), &spec).unwrap();
        let exact = monomial_norm_sq(j, k).unwrap();
        assert!((v.re - exact).abs() < 1e-11 * exact, "({j}, {k}): {} vs {exact}", v.re);
    }
}

#[test]
fn hartogs_points() {
    assert!(HartogsPoint::new(c(0.5, 0.0), c(0.4, 0.0)).is_err());
    assert!(HartogsPoint::new(c(0.1, 0.0), c(1.0, 0.0)).is_err());
    let p = HartogsPoint::from_fibre(c(0.5, 0.5), c(0.0, 0.8)).unwrap();
    assert!((p.ratio() - c(0.5, 0.5)).norm() < 1e-15);
    let r = p.rotate(0.3, -1.1);
    assert!((r.z1.norm() - p.z1.norm()).abs() < 1e-15 && r.is_inside());
}

#[test]
fn spec_validation() {
    assert!(QuadratureSpec::new(0, 64, 12, 2.0).is_err());
    assert!(QuadratureSpec::new(16, 2, 12, 2.0).is_err());
    assert!(QuadratureSpec::new(16, 64, 12, 0.5).is_err());
    let s = QuadratureSpec::default().refined();
    assert_eq!((s.radial_nodes, s.panels), (32, 24));
}

#[test]
fn compensated_sums_are_order_stable() {
    let mut v: Vec<f64> = (1..=100_000).map(|k| 1.0 / (k as f64).powi(2)).collect();
    let forward = sum(v.iter().copied());
    v.reverse();
    let backward = sum(v.iter().copied());
    assert!((forward - backward).abs() <= f64::EPSILON * forward);
    let mut acc = CompensatedSum::new();
    for x in [1e16, 1.0, -1e16] {
        acc.add(x);
    }
    assert_eq!(acc.value(), 1.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn disk_integration_is_linear(a in -2.0f64..2.0, b in -2.0f64..2.0, wr in -0.6f64..0.6, wi in -0.6f64..0.6) {
        let spec = QuadratureSpec::default();
        let rule = DiskRule::standard(&spec).unwrap();
        let w = c(wr, wi);
        let f = |z: Complex64| 1.0 / (1.0 - z * w.conj());
        let g = |z: Complex64| z.conj() * z.exp();
        let lhs = rule.integrate(|z| a * f(z) + b * g(z)).unwrap();
        let rhs = a * rule.integrate(f).unwrap() + b * rule.integrate(g).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    // the unfocused trapezoid resolves |w| ≤ 0.6 to ~|w|^64
    fn disk_integration_is_rotation_invariant(theta in 0.0f64..std::f64::consts::TAU, wr in 0.0f64..0.6) {
        let spec = QuadratureSpec::default();
        let w = c(wr, 0.0);
        let rot = Complex64::from_polar(1.0, theta);
        let f = |z: Complex64| Complex64::new(1.0 / (1.0 - z * w.conj()).norm_sqr(), 0.0);
        let a = integrate_disk(f, &spec).unwrap();
        let b = integrate_disk(|z| f(rot * z), &spec).unwrap();
        prop_assert!((a - b).norm() < 1e-10 * a.norm());
    }

    #[test]
    fn hartogs_integration_respects_torus_rotation(t1 in 0.0f64..6.3, t2 in 0.0f64..6.3) {
        let spec = QuadratureSpec::new(8, 48, 2, 1.0).unwrap();
        let f = |z: &HartogsPoint| Complex64::new((1.0 - z.z2 * 0.5).norm_sqr().recip() * (1.0 + z.z1.re), 0.0);
        let base = integrate_hartogs(f, &spec).unwrap();
        let rotated = integrate_hartogs(|z| f(&z.rotate(t1, t2)), &spec).unwrap();
        prop_assert!((base - rotated).norm() < 1e-9 * base.norm());
    }
}
