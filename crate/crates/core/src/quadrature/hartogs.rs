use super::disk::DiskRule;
use super::QuadratureSpec;
use crate::error::{Error, Result};
use crate::sum::ComplexSum;
use num_complex::Complex64;
use rayon::prelude::*;

/// A point `(z1, z2)` of the Hartogs triangle `|z1| < |z2| < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HartogsPoint {
    pub z1: Complex64,
    pub z2: Complex64,
}

impl HartogsPoint {
    pub fn new(z1: Complex64, z2: Complex64) -> Result<Self> {
        let p = Self { z1, z2 };
        if !p.is_inside() {
            return Err(Error::domain(format!(
                "({z1}, {z2}) is not in the Hartogs triangle"
            )));
        }
        Ok(p)
    }

    /// Point from its fibre coordinate `u = z1/z2` and base `z2`.
    pub fn from_fibre(u: Complex64, z2: Complex64) -> Result<Self> {
        Self::new(u * z2, z2)
    }

    pub(crate) fn unchecked(z1: Complex64, z2: Complex64) -> Self {
        Self { z1, z2 }
    }

    pub fn is_inside(&self) -> bool {
        let (a, b) = (self.z1.norm(), self.z2.norm());
        a.is_finite() && b.is_finite() && a < b && b < 1.0
    }

    /// Fibre coordinate `z1/z2`.
    pub fn ratio(&self) -> Complex64 {
        self.z1 / self.z2
    }

    /// Applies the torus action `(z1, z2) -> (e^{i a} z1, e^{i b} z2)`.
    pub fn rotate(&self, a: f64, b: f64) -> Self {
        Self {
            z1: self.z1 * Complex64::from_polar(1.0, a),
            z2: self.z2 * Complex64::from_polar(1.0, b),
        }
    }
}

/// Nested rule for `∫_H f dμ = ∫_D ∫_D f(u z2, z2) |z2|^2 dν(u) dν(z2)`.
#[derive(Debug, Clone)]
pub struct HartogsRule {
    pub base: DiskRule,
    pub fibre: DiskRule,
}

impl HartogsRule {
    pub fn new(base: DiskRule, fibre: DiskRule) -> Self {
        Self { base, fibre }
    }

    pub fn standard(spec: &QuadratureSpec) -> Result<Self> {
        Ok(Self::new(DiskRule::standard(spec)?, DiskRule::standard(spec)?))
    }

    pub fn integrate<F>(&self, f: F) -> Result<Complex64>
    where
        F: Fn(&HartogsPoint) -> Complex64 + Sync,
    {
        let fibre = self.fibre.points();
        let base = self.base.points();
        let parts: Vec<Complex64> = base
            .par_iter()
            .map(|&(z2, w2)| {
                let mut inner = ComplexSum::new();
                for &(u, wu) in &fibre {
                    let v = f(&HartogsPoint::unchecked(u * z2, z2));
                    if !(v.re.is_finite() && v.im.is_finite()) {
                        return Err(Error::NonFinite(format!("u = {u}, z2 = {z2}")));
                    }
                    inner.add(v * wu);
                }
                Ok(inner.value() * (w2 * z2.norm_sqr()))
            })
            .collect::<Result<_>>()?;
        Ok(parts.into_iter().collect::<ComplexSum>().value())
    }

    /// Same tensor rule for integrands `g(z2) h(z1/z2)`: the double sum
    /// factors into a product of the two disk sums.
    pub fn integrate_separable<G, H>(&self, g: G, h: H) -> Result<Complex64>
    where
        G: Fn(Complex64) -> Complex64 + Sync,
        H: Fn(Complex64) -> Complex64 + Sync,
    {
        let base = self.base.integrate(|z2| g(z2) * z2.norm_sqr())?;
        let fibre = self.fibre.integrate(h)?;
        Ok(base * fibre)
    }
}

/// `∫_H f dμ` with the standard nested rule of `spec`.
pub fn integrate_hartogs<F>(f: F, spec: &QuadratureSpec) -> Result<Complex64>
where
    F: Fn(&HartogsPoint) -> Complex64 + Sync,
{
    HartogsRule::standard(spec)?.integrate(f)
}
