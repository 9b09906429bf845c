use crate::error::{Error, Result};
use crate::quadrature::HartogsPoint;
use num_complex::Complex64;

/// A point `ξ = (ξ1, ξ2)` of the Hartogs triangle used as a test-function
/// parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiPoint {
    pub xi1: Complex64,
    pub xi2: Complex64,
}

impl XiPoint {
    pub fn new(xi1: Complex64, xi2: Complex64) -> Result<Self> {
        if !(xi1.norm() < xi2.norm() && xi2.norm() < 1.0) {
            return Err(Error::domain(format!(
                "xi = ({xi1}, {xi2}) is not in the Hartogs triangle"
            )));
        }
        Ok(Self { xi1, xi2 })
    }

    /// The origin `(0, 0)`: not a point of the triangle, but a valid
    /// parameter for which every test function reduces to `1/z2`.
    pub fn origin() -> Self {
        Self {
            xi1: Complex64::new(0.0, 0.0),
            xi2: Complex64::new(0.0, 0.0),
        }
    }

    /// `ξ1/ξ2`, with `0` at the origin.
    pub fn ratio(&self) -> Complex64 {
        if self.xi2 == Complex64::new(0.0, 0.0) {
            Complex64::new(0.0, 0.0)
        } else {
            self.xi1 / self.xi2
        }
    }

    pub fn as_point(&self) -> Result<HartogsPoint> {
        HartogsPoint::new(self.xi1, self.xi2)
    }
}

/// Radii `1 − 2^{−k}`, `k = 2..=depth`, and the boundary sequence
/// `ξ^(k) = (ρ_k², ρ_k)` with `|ξ2| = |ξ1/ξ2| = ρ_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryPath {
    pub depth: u32,
}

impl BoundaryPath {
    /// Depths run from 2 to 52 (beyond that `1 − 2^{−k}` rounds to 1).
    pub fn new(depth: u32) -> Result<Self> {
        if !(2..=52).contains(&depth) {
            return Err(Error::domain(format!("path depth {depth} outside 2..=52")));
        }
        Ok(Self { depth })
    }

    pub fn levels(&self) -> impl Iterator<Item = u32> {
        2..=self.depth
    }

    pub fn radius(k: u32) -> f64 {
        1.0 - 0.5f64.powi(k as i32)
    }

    pub fn radii(&self) -> Vec<f64> {
        self.levels().map(Self::radius).collect()
    }

    pub fn point(k: u32) -> XiPoint {
        let r = Self::radius(k);
        XiPoint {
            xi1: Complex64::new(r * r, 0.0),
            xi2: Complex64::new(r, 0.0),
        }
    }

    pub fn points(&self) -> Vec<XiPoint> {
        self.levels().map(Self::point).collect()
    }
}
