use super::gauss::GaussLegendre;
use super::rule::{graded_breakpoints, IntervalRule};
use super::QuadratureSpec;
use crate::error::{Error, Result};
use crate::sum::ComplexSum;
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Endpoint weight `s^origin (1-s)^boundary` with `s = |z|^2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RadialWeight {
    pub origin: f64,
    pub boundary: f64,
}

impl RadialWeight {
    pub const NONE: RadialWeight = RadialWeight {
        origin: 0.0,
        boundary: 0.0,
    };

    pub fn new(origin: f64, boundary: f64) -> Self {
        Self { origin, boundary }
    }
}

/// Location of a near-singularity just outside (or on) the unit circle:
/// the integrand varies on the scale `distance` around `e^{i angle}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Focus {
    pub angle: f64,
    pub distance: f64,
}

impl Focus {
    /// Focus for integrands peaking where `z` is aligned with `point`.
    pub fn toward(point: Complex64) -> Self {
        Self {
            angle: point.arg(),
            distance: (1.0 - point.norm()).max(f64::EPSILON),
        }
    }
}

/// Normalized angular rule: weights sum to one.
#[derive(Debug, Clone)]
pub struct AngularRule {
    pub nodes: Vec<(f64, f64)>,
}

impl AngularRule {
    /// Equal weights at the `n`-th roots of unity.
    pub fn trapezoid(n: usize) -> Self {
        let w = 1.0 / n as f64;
        Self {
            nodes: (0..n).map(|k| (2.0 * PI * k as f64 / n as f64, w)).collect(),
        }
    }

    /// Gauss–Legendre panels graded geometrically toward each focus angle
    /// from both sides, the innermost panels no wider than a quarter of the
    /// focus distance. Meshes of several foci are merged.
    pub fn focused(foci: &[Focus], spec: &QuadratureSpec) -> Self {
        let gl = GaussLegendre::new(spec.radial_nodes);
        let tau = 2.0 * PI;
        let mut cuts = Vec::new();
        for f in foci {
            let width = 0.25 * f.distance;
            let n = if spec.grading > 1.0 {
                (((PI / width).ln() / spec.grading.ln()).ceil() as usize + 1).max(spec.panels)
            } else {
                spec.panels
            };
            for d in graded_breakpoints(PI, n, spec.grading) {
                cuts.push((f.angle + d).rem_euclid(tau));
                cuts.push((f.angle - d).rem_euclid(tau));
            }
        }
        cuts.sort_by(f64::total_cmp);
        cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
        let first = cuts[0];
        cuts.push(first + tau);
        let scale = 1.0 / tau;
        let mut nodes = Vec::new();
        for win in cuts.windows(2) {
            if win[1] - win[0] > 1e-15 {
                nodes.extend(gl.mapped(win[0], win[1]).map(|(t, w)| (t, w * scale)));
            }
        }
        Self { nodes }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Radial node: radius, its complement, and the weight carrying the
/// Jacobian `2r` together with any endpoint weight.
#[derive(Debug, Clone, Copy)]
pub struct RadialNode {
    pub r: f64,
    pub one_minus_r: f64,
    pub w: f64,
}

/// Tensor-product rule for `∫_D s^a (1-s)^b f(z) dν(z)`.
#[derive(Debug, Clone)]
pub struct DiskRule {
    pub radial: Vec<RadialNode>,
    pub angular: AngularRule,
}

impl DiskRule {
    /// Builds the rule in the radial variable `r`, where the weight reads
    /// `2 r^{2a+1} (1-r)^b (1+r)^b`. Foci add radial refinement toward
    /// `r = 1` and switch the angle to a focused Gauss rule.
    pub fn new(spec: &QuadratureSpec, weight: RadialWeight, foci: &[Focus]) -> Result<Self> {
        spec.validate()?;
        let right_width = foci.iter().fold(1.0f64, |m, f| m.min(0.25 * f.distance));
        let interval = IntervalRule::new(
            2.0 * weight.origin + 1.0,
            weight.boundary,
            spec,
            1.0,
            right_width,
        )?;
        let radial = interval
            .nodes
            .iter()
            .map(|n| RadialNode {
                r: n.x,
                one_minus_r: n.one_minus_x,
                w: 2.0 * n.w * (1.0 + n.x).powf(weight.boundary),
            })
            .collect();
        let angular = if foci.is_empty() {
            AngularRule::trapezoid(spec.angular_nodes)
        } else {
            AngularRule::focused(foci, spec)
        };
        Ok(Self { radial, angular })
    }

    pub fn standard(spec: &QuadratureSpec) -> Result<Self> {
        Self::new(spec, RadialWeight::NONE, &[])
    }

    /// All `(z, weight)` pairs in traversal order.
    pub fn points(&self) -> Vec<(Complex64, f64)> {
        let mut out = Vec::with_capacity(self.len());
        for rn in &self.radial {
            for &(theta, wa) in &self.angular.nodes {
                out.push((Complex64::from_polar(rn.r, theta), rn.w * wa));
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.radial.len() * self.angular.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn integrate<F>(&self, f: F) -> Result<Complex64>
    where
        F: Fn(Complex64) -> Complex64 + Sync,
    {
        let rings: Vec<Complex64> = self
            .radial
            .par_iter()
            .map(|rn| {
                let mut ring = ComplexSum::new();
                for &(theta, wa) in &self.angular.nodes {
                    let z = Complex64::from_polar(rn.r, theta);
                    let v = f(z);
                    if !(v.re.is_finite() && v.im.is_finite()) {
                        return Err(Error::NonFinite(format!("z = {z}")));
                    }
                    ring.add(v * wa);
                }
                Ok(ring.value() * rn.w)
            })
            .collect::<Result<_>>()?;
        Ok(rings.into_iter().collect::<ComplexSum>().value())
    }

    pub fn integrate_real<F>(&self, f: F) -> Result<f64>
    where
        F: Fn(Complex64) -> f64 + Sync,
    {
        Ok(self.integrate(|z| Complex64::new(f(z), 0.0))?.re)
    }
}

/// Mean of `f` over `n` equally spaced points of the unit circle; exact for
/// trigonometric polynomials of degree below `n`.
pub fn integrate_torus(f: impl Fn(Complex64) -> Complex64, n: usize) -> Complex64 {
    let w = 1.0 / n as f64;
    (0..n)
        .map(|k| f(Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64)) * w)
        .collect::<ComplexSum>()
        .value()
}

/// `∫_D f dν` with the default (unweighted, unfocused) rule of `spec`.
pub fn integrate_disk<F>(f: F, spec: &QuadratureSpec) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64 + Sync,
{
    DiskRule::standard(spec)?.integrate(f)
}

/// `∫_{D*} f dν`. No node is ever placed at the origin. The integral is
/// recomputed on the refined spec and rejected as divergent when the two
/// disagree, which catches non-integrable blow-up at the puncture.
pub fn integrate_punctured_disk<F>(f: F, spec: &QuadratureSpec) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64 + Sync,
{
    let coarse = DiskRule::standard(spec)?.integrate(&f)?;
    let fine = DiskRule::standard(&spec.refined())?.integrate(&f)?;
    let scale = fine.norm().max(1.0);
    if (fine - coarse).norm() > 1e-7 * scale {
        return Err(Error::Divergent(format!(
            "refinement changed the value from {coarse} to {fine}"
        )));
    }
    Ok(fine)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn torus_constants_and_characters() {
        assert!((integrate_torus(|_| c(1.0), 16) - 1.0).norm() < 1e-15);
        for m in 1..8 {
            assert!(integrate_torus(|z| z.powi(m), 16).norm() < 1e-15);
        }
        // 1/|1 - <z,ζ>|^2 with |z|^2 = 1/2 integrates to 2
        let z = Complex64::new(0.5f64.sqrt(), 0.0);
        let v = integrate_torus(|zeta| c(1.0 / (1.0 - z * zeta.conj()).norm_sqr()), 128);
        assert!((v.re - 2.0).abs() < 1e-14);
    }

    #[test]
    fn disk_moments() {
        let spec = QuadratureSpec::default();
        let one = integrate_disk(|_| c(1.0), &spec).unwrap();
        assert!((one.re - 1.0).abs() < 1e-14);
        let m = integrate_disk(|z| c(z.norm_sqr()), &spec).unwrap();
        assert!((m.re - 0.5).abs() < 1e-14);
        // ∫|z|^{2n} dν = 1/(n+1)
        let m = integrate_disk(|z| c(z.norm_sqr().powi(5)), &spec).unwrap();
        assert!((m.re - 1.0 / 6.0).abs() < 1e-14);
    }

    #[test]
    fn poisson_like_integrand() {
        let spec = QuadratureSpec::default();
        let lambda = Complex64::new(0.5f64.sqrt(), 0.0);
        let v = integrate_disk(|u| c(1.0 / (1.0 - lambda.conj() * u).norm_sqr()), &spec).unwrap();
        let exact = 2.0 * std::f64::consts::LN_2;
        assert!((v.re - exact).abs() < 1e-10, "{} vs {exact}", v.re);
    }

    #[test]
    fn punctured_disk_power_weights() {
        let spec = QuadratureSpec::default();
        let v = integrate_punctured_disk(|z| c(1.0 / z.norm()), &spec).unwrap();
        assert!((v.re - 2.0).abs() < 1e-13);
        let v = integrate_punctured_disk(|_| c(1.0), &spec).unwrap();
        assert!((v.re - 1.0).abs() < 1e-14);
        assert!(matches!(
            integrate_punctured_disk(|z| c(1.0 / z.norm_sqr()), &spec),
            Err(Error::Divergent(_))
        ));
    }

    #[test]
    fn weighted_rule_matches_beta_integral() {
        // ∫ (1-|z|^2)^{-0.9} dν = 1/0.1
        let spec = QuadratureSpec::default();
        let rule = DiskRule::new(&spec, RadialWeight::new(0.0, -0.9), &[]).unwrap();
        let v = rule.integrate_real(|_| 1.0).unwrap();
        assert!((v - 10.0).abs() < 1e-11);
    }

    #[test]
    fn focused_rule_resolves_boundary_peak() {
        // ∫ 1/|1 - λ̄u|^2 dν = -ln(1-|λ|^2)/|λ|^2 for |λ| close to 1
        let spec = QuadratureSpec::default();
        let lambda = Complex64::from_polar(1.0 - 1e-5, 0.7);
        let rule = DiskRule::new(&spec, RadialWeight::NONE, &[Focus::toward(lambda)]).unwrap();
        let v = rule.integrate_real(|u| 1.0 / (1.0 - lambda.conj() * u).norm_sqr()).unwrap();
        let s = lambda.norm_sqr();
        let exact = -(-s).ln_1p() / s;
        assert!(((v - exact) / exact).abs() < 1e-10, "{v} vs {exact}");
    }

    #[test]
    fn merged_foci_resolve_two_peaks() {
        let spec = QuadratureSpec::default();
        let a = Complex64::from_polar(0.999, 0.3);
        let b = Complex64::from_polar(0.99, -2.0);
        let rule = DiskRule::new(&spec, RadialWeight::NONE, &[Focus::toward(a), Focus::toward(b)]).unwrap();
        let total: f64 = rule.angular.nodes.iter().map(|&(_, w)| w).sum();
        assert!((total - 1.0).abs() < 1e-14);
        let v = rule
            .integrate_real(|u| 1.0 / (1.0 - a.conj() * u).norm_sqr() + 1.0 / (1.0 - b.conj() * u).norm_sqr())
            .unwrap();
        let g = |l: Complex64| -(-l.norm_sqr()).ln_1p() / l.norm_sqr();
        assert!((v - g(a) - g(b)).abs() < 1e-11);
    }

    #[test]
    fn non_finite_values_are_reported() {
        let spec = QuadratureSpec::default();
        assert!(matches!(
            integrate_disk(|_| c(f64::NAN), &spec),
            Err(Error::NonFinite(_))
        ));
    }
}
