use hartogs::kernel::{fibre_projection, project_separable, SeparableFn};
use hartogs::lowerbound::*;
use hartogs::quadrature::{DiskRule, Focus, HartogsPoint, HartogsRule, QuadratureSpec, RadialWeight};
use hartogs::schur::{lower_bound, ExponentPair};
use hartogs::specfun::f21;
use hartogs::{Complex64, Error};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn one_disk(z: Complex64, xi: Complex64, p: f64) -> Complex64 {
    let one = c(1.0, 0.0);
    (one - xi * z.conj()).powf(1.0 - 2.0 / p) / (one - z * xi.conj())
}

fn disk_point(max: f64) -> impl Strategy<Value = Complex64> {
    (0.0..max, 0.0..std::f64::consts::TAU).prop_map(|(r, a)| Complex64::from_polar(r, a))
}

#[test]
fn path_points() {
    let path = BoundaryPath::new(5).unwrap();
    assert_eq!(path.radii(), vec![0.75, 0.875, 0.9375, 0.96875]);
    for x in path.points() {
        assert!(x.as_point().unwrap().is_inside());
        assert!((x.ratio().norm() - x.xi2.norm()).abs() < 1e-15);
    }
    assert!(BoundaryPath::new(1).is_err() && BoundaryPath::new(53).is_err());
    assert!(XiPoint::new(c(0.5, 0.0), c(0.5, 0.0)).is_err());
}

#[test]
fn bad_exponents_are_domain_errors() {
    let z = c(0.1, 0.0);
    for p in [4.0 / 3.0, 4.0, 1.0] {
        assert!(matches!(phi(z, z, p), Err(Error::Domain(_))));
        assert!(matches!(FactorTable::new(p, z, DEFAULT_CAP), Err(Error::Domain(_))));
    }
    assert!(matches!(FactorTable::new(3.0, c(1.0, 0.0), DEFAULT_CAP), Err(Error::Domain(_))));
}

#[test]
fn short_tables_report_truncation() {
    let table = FactorTable::new(3.0, c(0.999, 0.0), 64).unwrap();
    assert!(matches!(table.proj(c(0.99, 0.0)), Err(Error::Truncation { .. })));
    assert!(table.proj(c(0.1, 0.0)).is_ok());
}

#[test]
fn proj_factor_is_the_disk_projection() {
    // the factor series is the disk Bergman projection of the one-disk test function
    let spec = QuadratureSpec::default();
    let p = 3.0;
    for (mu, lambda) in [(c(0.5, 0.0), c(0.3, 0.2)), (c(0.6, 0.6), c(-0.5, 0.4)), (c(0.0, 0.9), c(0.0, 0.8))] {
        let b = move |u: Complex64| one_disk(u, mu, p);
        let q = fibre_projection(&b, &[Focus::toward(mu)], lambda, &spec).unwrap();
        let s = proj_factor(lambda, mu, p, DEFAULT_CAP).unwrap();
        assert!((q - s).norm() < 1e-9 * s.norm(), "{q} vs {s}");
    }
}

#[test]
fn coefficients_against_hypergeometric_values() {
    let (p, y) = (2.5, 0.81);
    let g = proj_coefficients(p, y, 64).unwrap();
    for k in [0usize, 1, 7, 30, 63] {
        let direct = f21(2.0 / p - 1.0, k as f64 + 1.0, k as f64 + 2.0, y).unwrap();
        assert!((g[k] - direct).abs() < 1e-12 * direct.abs(), "k={k}");
    }
    let eps = CoefficientSequence::epsilon(p, 50).unwrap();
    let a = CoefficientSequence::a(p, y, 50).unwrap();
    assert!(eps.max_discrepancy(50).unwrap() < 1e-10);
    assert!(a.max_discrepancy(50).unwrap() < 1e-10);
}

#[test]
fn branch_is_continuous_along_radii() {
    let xi = BoundaryPath::point(6);
    let p = 3.0;
    for angle in [0.0, 1.0, 3.0] {
        let dir = Complex64::from_polar(1.0, angle);
        let mut prev: Option<Complex64> = None;
        for i in 1..=1000 {
            let r2 = 0.999 * i as f64 / 1000.0;
            let z = HartogsPoint::new(dir * (0.5 * r2), dir * r2).unwrap();
            let v = f_xi(&z, &xi, p).unwrap() * z.z2;
            if let Some(u) = prev {
                assert!((v - u).norm() < 0.05 * v.norm().max(u.norm()), "jump at r = {r2}");
            }
            prev = Some(v);
        }
    }
}

#[test]
fn ratio_is_one_at_p2() {
    let spec = QuadratureSpec::default();
    let r = ratio_path(2.0, BoundaryPath::new(5).unwrap(), &spec, DEFAULT_CAP).unwrap();
    assert!(r.passed);
    assert!((r.computed.re() - 1.0).abs() < 1e-6);
}

#[test]
fn norm_factorization_matches_nested_quadrature() {
    let p = 3.0;
    let xi = BoundaryPath::point(3);
    let spec = QuadratureSpec::new(8, 32, 4, 2.0).unwrap();
    // the base weight |z2|^{2−p} absorbs the singularity; the nested rule's own |z2|² is divided out
    let base = DiskRule::new(&spec, RadialWeight::new(1.0 - 0.5 * p, 0.0), &[Focus::toward(xi.xi2)]).unwrap();
    let fibre = DiskRule::new(&spec, RadialWeight::NONE, &[Focus::toward(xi.ratio())]).unwrap();
    let nested = HartogsRule::new(base, fibre)
        .integrate(|z| c(f_xi(z, &xi, p).unwrap().norm().powf(p) * z.z2.norm().powf(p - 2.0), 0.0))
        .unwrap()
        .re;
    let factored = f_xi_norm_p(&xi, p, &QuadratureSpec::default()).unwrap().norm.pth_power;
    assert!((nested / factored - 1.0).abs() < 1e-5, "{nested} vs {factored}");
}

#[test]
fn projection_matches_separable_quadrature() {
    let p = 3.0;
    let xi = BoundaryPath::point(3);
    let (xi2, mu) = (xi.xi2, xi.ratio());
    let f = SeparableFn::new(move |w2| one_disk(w2, xi2, p) / w2, move |u| one_disk(u, mu, p))
        .with_foci(vec![Focus::toward(xi2)], vec![Focus::toward(mu)]);
    let z = HartogsPoint::new(c(0.1, 0.0), c(0.5, 0.0)).unwrap();
    let quad = project_separable(&f, &z, &QuadratureSpec::default()).unwrap();
    let series = proj_f_xi(&z, &xi, p, DEFAULT_CAP).unwrap();
    assert!((quad - series).norm() < 1e-4 * series.norm(), "{quad} vs {series}");
}

#[test]
fn test_norms_diverge_monotonically() {
    let spec = QuadratureSpec::default();
    let norms: Vec<f64> = BoundaryPath::new(8)
        .unwrap()
        .points()
        .iter()
        .map(|x| f_xi_norm_p(x, 3.0, &spec).unwrap().norm.norm)
        .collect();
    assert!(norms.windows(2).all(|w| w[1] > w[0]), "{norms:?}");
}

#[test]
fn ratio_stays_below_upper_bound() {
    let spec = QuadratureSpec::default();
    let r = ratio_path(3.0, BoundaryPath::new(5).unwrap(), &spec, DEFAULT_CAP).unwrap();
    let lower = lower_bound(ExponentPair::new(3.0).unwrap()).unwrap();
    assert_eq!(r.reference.unwrap().re(), lower);
    let ratios = r.get_detail("ratios").unwrap();
    assert!(ratios.windows(2).all(|w| w[1] > w[0]));
    assert!(ratios.iter().all(|&x| x > 1.0 && x < 13.2));
}

#[test]
fn lemma24_series_against_quadrature() {
    let spec = QuadratureSpec::default();
    let (z, w) = (c(0.3, 0.2), c(-0.1, 0.5));
    for (a, b, cc, t) in [(1.0, 1.0, 1.0, 0.0), (0.5, 1.5, 0.7, -0.5), (2.0, 0.3, 1.2, 0.8)] {
        let s = lemma24_series(a, b, cc, t, z, w, 60).unwrap();
        let q = lemma24_integral(a, b, cc, t, z, w, &spec).unwrap();
        assert!(s.tail < 1e-12);
        assert!((s.value - q).norm() < 1e-9 * q.norm(), "a={a} b={b} c={cc} t={t}");
    }
    assert!(lemma24_series(1.0, 1.0, 1.0, -1.0, z, w, 10).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn decomposition_sums_to_the_projection(zeta in disk_point(0.99), xi in disk_point(0.95), p in 1.4f64..3.9) {
        let table = FactorTable::new(p, xi, DEFAULT_CAP).unwrap();
        let parts = table.all(zeta).unwrap();
        let direct = table.proj(zeta).unwrap();
        prop_assert!((parts.sum() - direct).norm() < 1e-10 * direct.norm().max(1.0));
        let terms: usize = 200;
        let x = zeta * xi.conj();
        prop_assume!(x.norm() < 0.8);
        let y = xi.norm_sqr();
        let mut oracle = c(0.0, 0.0);
        for k in (0..terms).rev() {
            oracle = oracle * x + f21(2.0 / p - 1.0, k as f64 + 1.0, k as f64 + 2.0, y).unwrap();
        }
        prop_assert!((direct - oracle).norm() < 1e-10 * oracle.norm().max(1.0));
    }

    #[test]
    fn phi_is_the_closed_form(zeta in disk_point(0.99), xi in disk_point(0.99), p in 1.4f64..3.9) {
        let gg = gamma_product(p).unwrap();
        let v = phi(zeta, xi, p).unwrap();
        let direct = gg * (c(1.0, 0.0) - zeta * xi.conj()).powf(-2.0 / p);
        prop_assert!((v - direct).norm() <= 1e-14 * direct.norm());
    }
}
