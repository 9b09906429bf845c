//! The Bergman kernel of the Hartogs triangle, monomial norms, and the
//! Bergman projection as a numeric integral operator.
//!
//! With `w1 = u·w2` the kernel against `dμ(w)` becomes
//! `K(z,w)|w2|² = z2 w2 / ((1 − z2 w̄2)² (z2 − z1 ū)²)`, a product of a
//! function of `w2` and a function of `u`. For integrands of the same
//! product form the projection therefore splits into two disk integrals:
//! `P(a ⊗ b)(z) = A(z2) · B(z1/z2)` with
//! `A(z2) = z2⁻¹ ∫ w a(w) (1 − z2 w̄)⁻² dν(w)` and
//! `B(λ) = ∫ b(u) (1 − λ ū)⁻² dν(u)`.

use crate::error::{Error, Result};
use crate::quadrature::{DiskRule, Focus, HartogsPoint, HartogsRule, QuadratureSpec, RadialWeight};
use crate::report::VerificationReport;
use crate::sum::ComplexSum;
use num_complex::Complex64;
use std::sync::Arc;

/// Exponents of the monomial `z1^j z2^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialIndex {
    pub j: u32,
    pub k: i32,
}

impl MonomialIndex {
    pub fn new(j: u32, k: i32) -> Result<Self> {
        if j as i64 + k as i64 >= -1 {
            Ok(Self { j, k })
        } else {
            Err(Error::domain(format!(
                "z1^{j} z2^{k} is not square integrable (j + k < -1)"
            )))
        }
    }

    pub fn eval(&self, z: &HartogsPoint) -> Complex64 {
        z.z1.powi(self.j as i32) * z.z2.powi(self.k)
    }

    /// `1/((j+1)(j+k+2))`.
    pub fn norm_sq(&self) -> f64 {
        1.0 / ((self.j as f64 + 1.0) * (self.j as f64 + self.k as f64 + 2.0))
    }
}

/// `‖z1^j z2^k‖²` in `L²(H, dμ)`.
pub fn monomial_norm_sq(j: u32, k: i32) -> Result<f64> {
    Ok(MonomialIndex::new(j, k)?.norm_sq())
}

fn kernel_unchecked(z: &HartogsPoint, w: &HartogsPoint) -> Complex64 {
    let b = z.z2 * w.z2.conj();
    let a = z.z1 * w.z1.conj();
    let d1 = Complex64::new(1.0, 0.0) - b;
    let d2 = b - a;
    b / (d1 * d1 * d2 * d2)
}

/// `K(z, w) = z2 w̄2 / ((1 − z2 w̄2)² (z2 w̄2 − z1 w̄1)²)`.
pub fn bergman_kernel(z: &HartogsPoint, w: &HartogsPoint) -> Result<Complex64> {
    for p in [z, w] {
        if !p.is_inside() {
            return Err(Error::domain(format!("{p:?} is not in the Hartogs triangle")));
        }
    }
    Ok(kernel_unchecked(z, w))
}

/// Orthonormal expansion `Σ (z1 w̄1)^j (z2 w̄2)^k / ‖z1^j z2^k‖²` over
/// `0 ≤ j ≤ jmax`, `−j−1 ≤ k ≤ kmax`.
pub fn kernel_series_partial(z: &HartogsPoint, w: &HartogsPoint, jmax: u32, kmax: i32) -> Complex64 {
    let a = z.z1 * w.z1.conj();
    let b = z.z2 * w.z2.conj();
    let mut acc = ComplexSum::new();
    for j in 0..=jmax {
        let jf = j as f64;
        let aj = a.powi(j as i32);
        for k in (-(j as i32) - 1)..=kmax {
            let weight = (jf + 1.0) * (jf + k as f64 + 2.0);
            acc.add(aj * b.powi(k) * weight);
        }
    }
    acc.value()
}

/// Shared scalar factor of one complex variable.
pub type Factor = Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>;

/// A function `f(w) = base(w2) · fibre(w1/w2)` together with the points
/// near the unit circle where either factor peaks.
#[derive(Clone)]
pub struct SeparableFn {
    pub base: Factor,
    pub fibre: Factor,
    pub base_foci: Vec<Focus>,
    pub fibre_foci: Vec<Focus>,
}

impl std::fmt::Debug for SeparableFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SeparableFn")
            .field("base_foci", &self.base_foci)
            .field("fibre_foci", &self.fibre_foci)
            .finish_non_exhaustive()
    }
}

impl SeparableFn {
    pub fn new(
        base: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static,
        fibre: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            base: Arc::new(base),
            fibre: Arc::new(fibre),
            base_foci: Vec::new(),
            fibre_foci: Vec::new(),
        }
    }

    pub fn with_foci(mut self, base: Vec<Focus>, fibre: Vec<Focus>) -> Self {
        self.base_foci = base;
        self.fibre_foci = fibre;
        self
    }

    /// `z1^j z2^k = u^j · z2^{j+k}`.
    pub fn monomial(m: MonomialIndex) -> Self {
        let (j, n) = (m.j as i32, m.j as i32 + m.k);
        Self::new(move |w2| w2.powi(n), move |u| u.powi(j))
    }

    pub fn eval(&self, z: &HartogsPoint) -> Complex64 {
        (self.base)(z.z2) * (self.fibre)(z.ratio())
    }

    /// The projection, again in product form. Factors are evaluated
    /// lazily, one disk integral per call; a failed integral yields NaN,
    /// which any enclosing quadrature reports as non-finite.
    pub fn project(&self, spec: &QuadratureSpec) -> SeparableFn {
        let (a, b) = (self.base.clone(), self.fibre.clone());
        let (fa, fb) = (self.base_foci.clone(), self.fibre_foci.clone());
        let (s1, s2) = (*spec, *spec);
        SeparableFn::new(
            move |z2| base_projection(&*a, &fa, z2, &s1).unwrap_or(Complex64::new(f64::NAN, 0.0)),
            move |l| fibre_projection(&*b, &fb, l, &s2).unwrap_or(Complex64::new(f64::NAN, 0.0)),
        )
    }
}

fn with_focus(foci: &[Focus], point: Complex64) -> Vec<Focus> {
    let mut all = foci.to_vec();
    all.push(Focus::toward(point));
    all
}

/// `z2⁻¹ ∫ w a(w) (1 − z2 w̄)⁻² dν(w)`.
pub fn base_projection(
    a: &(dyn Fn(Complex64) -> Complex64 + Sync),
    foci: &[Focus],
    z2: Complex64,
    spec: &QuadratureSpec,
) -> Result<Complex64> {
    let rule = DiskRule::new(spec, RadialWeight::NONE, &with_focus(foci, z2))?;
    let one = Complex64::new(1.0, 0.0);
    let v = rule.integrate(|w| {
        let d = one - z2 * w.conj();
        w * a(w) / (d * d)
    })?;
    Ok(v / z2)
}

/// `∫ b(u) (1 − λ ū)⁻² dν(u)`: the Bergman projection of the unit disk.
pub fn fibre_projection(
    b: &(dyn Fn(Complex64) -> Complex64 + Sync),
    foci: &[Focus],
    lambda: Complex64,
    spec: &QuadratureSpec,
) -> Result<Complex64> {
    let rule = DiskRule::new(spec, RadialWeight::NONE, &with_focus(foci, lambda))?;
    let one = Complex64::new(1.0, 0.0);
    rule.integrate(|u| {
        let d = one - lambda * u.conj();
        b(u) / (d * d)
    })
}

/// `Pf(z)` for a product-form `f` by two disk integrals.
pub fn project_separable(f: &SeparableFn, z: &HartogsPoint, spec: &QuadratureSpec) -> Result<Complex64> {
    if !z.is_inside() {
        return Err(Error::domain(format!("{z:?} is not in the Hartogs triangle")));
    }
    let a = base_projection(&*f.base, &f.base_foci, z.z2, spec)?;
    let b = fibre_projection(&*f.fibre, &f.fibre_foci, z.ratio(), spec)?;
    Ok(a * b)
}

/// `Pf(z) = ∫_H K(z, w) f(w) dμ(w)` for a general integrand, by nested
/// quadrature focused toward `z2` and `z1/z2`.
pub fn project<F>(f: F, z: &HartogsPoint, spec: &QuadratureSpec) -> Result<Complex64>
where
    F: Fn(&HartogsPoint) -> Complex64 + Sync,
{
    if !z.is_inside() {
        return Err(Error::domain(format!("{z:?} is not in the Hartogs triangle")));
    }
    let base = DiskRule::new(spec, RadialWeight::NONE, &[Focus::toward(z.z2)])?;
    let fibre = DiskRule::new(spec, RadialWeight::NONE, &[Focus::toward(z.ratio())])?;
    HartogsRule::new(base, fibre).integrate(|w| kernel_unchecked(z, w) * f(w))
}

/// Five interior points, the last on the recommended margin
/// `|z2| = |z1/z2| = 0.9`.
pub fn interior_grid() -> Vec<HartogsPoint> {
    let c = Complex64::new;
    [
        (c(0.1, 0.0), c(0.5, 0.0)),
        (c(0.0, 0.3), c(0.6, 0.0)),
        (c(-0.2, 0.1), c(0.4, -0.5)),
        (c(0.05, 0.0), c(-0.2, 0.0)),
        (Complex64::from_polar(0.81, 2.0), Complex64::from_polar(0.9, -1.0)),
    ]
    .into_iter()
    .map(|(z1, z2)| HartogsPoint::new(z1, z2).expect("grid point inside H"))
    .collect()
}

/// Largest error `|P(z1^j z2^k)(z) − z1^j z2^k|` over `grid`.
pub fn reproduce_check(
    m: MonomialIndex,
    grid: &[HartogsPoint],
    spec: &QuadratureSpec,
    tolerance: f64,
) -> Result<VerificationReport> {
    let f = SeparableFn::monomial(m);
    let errors = grid
        .iter()
        .map(|z| Ok((project_separable(&f, z, spec)? - m.eval(z)).norm()))
        .collect::<Result<Vec<f64>>>()?;
    let worst = errors.iter().fold(0.0f64, |a, &b| a.max(b));
    Ok(VerificationReport::predicate("kernel.reproduce", worst, tolerance, worst < tolerance)
        .input("j", m.j as f64)
        .input("k", m.k as f64)
        .input("grid_points", grid.len() as f64)
        .detail("errors", errors))
}
