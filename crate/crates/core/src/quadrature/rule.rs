//! One-dimensional composite rules on `[0, 1]` with algebraic endpoint
//! weights `x^a (1-x)^b`.
//!
//! Each half interval carries a geometric Gauss–Legendre mesh graded toward
//! its endpoint. A non-integer endpoint exponent `e` is absorbed exactly by
//! a Gauss–Jacobi rule on the innermost panel; on the outer panels `t^e` is
//! smooth and simply multiplies the Legendre weights.

use super::gauss::{gauss_jacobi, GaussLegendre};
use super::QuadratureSpec;
use crate::error::{Error, Result};

/// A node of a rule on `[0, 1]`. `one_minus_x` is stored separately so
/// that weights and integrands close to `x = 1` keep full precision.
#[derive(Debug, Clone, Copy)]
pub struct Node {
    pub x: f64,
    pub one_minus_x: f64,
    pub w: f64,
}

/// Geometric breakpoints on `[0, len]` graded toward 0: `n` panels whose
/// widths shrink by `grading` toward the origin.
pub fn graded_breakpoints(len: f64, panels: usize, grading: f64) -> Vec<f64> {
    let mut pts = Vec::with_capacity(panels + 1);
    pts.push(0.0);
    if grading <= 1.0 {
        pts.extend((1..=panels).map(|k| len * k as f64 / panels as f64));
    } else {
        pts.extend((1..=panels).map(|k| len * grading.powi(k as i32 - panels as i32)));
    }
    pts
}

fn is_polynomial_exponent(e: f64) -> bool {
    e >= 0.0 && e == e.floor() && e <= 64.0
}

/// Panels needed so the innermost one is no wider than `min_width`.
fn panels_for(min_width: f64, len: f64, spec: &QuadratureSpec) -> usize {
    if spec.grading <= 1.0 || !(min_width > 0.0) || min_width >= len {
        return spec.panels;
    }
    let need = ((len / min_width).ln() / spec.grading.ln()).ceil() as usize + 1;
    need.max(spec.panels)
}

/// Nodes `(t, w)` on `[0, 1/2]` for `∫ t^e φ(t) dt`, with `w` carrying `t^e`.
fn half_rule(e: f64, min_width: f64, spec: &QuadratureSpec, gl: &GaussLegendre) -> Result<Vec<(f64, f64)>> {
    if !(e > -1.0) {
        return Err(Error::Divergent(format!(
            "endpoint exponent {e} is not integrable"
        )));
    }
    let mut out = Vec::new();
    if is_polynomial_exponent(e) {
        let n = panels_for(min_width, 0.5, spec);
        let bp = graded_breakpoints(0.5, n, spec.grading);
        for win in bp.windows(2) {
            for (t, w) in gl.mapped(win[0], win[1]) {
                out.push((t, w * t.powi(e as i32)));
            }
        }
    } else {
        let n = panels_for(min_width, 0.5, spec);
        let bp = graded_breakpoints(0.5, n, spec.grading);
        let h = bp[1];
        let scale = (0.5 * h).powf(e + 1.0);
        for (x, w) in gauss_jacobi(gl.nodes.len(), 0.0, e) {
            out.push((0.5 * h * (1.0 + x), w * scale));
        }
        for win in bp[1..].windows(2) {
            for (t, w) in gl.mapped(win[0], win[1]) {
                out.push((t, w * t.powf(e)));
            }
        }
    }
    Ok(out)
}

/// Composite rule for `∫_0^1 x^a (1-x)^b g(x) dx`.
///
/// `min_width_left/right` request extra geometric refinement toward each
/// endpoint, for integrands that vary on that scale there.
#[derive(Debug, Clone)]
pub struct IntervalRule {
    pub nodes: Vec<Node>,
}

impl IntervalRule {
    pub fn new(
        a: f64,
        b: f64,
        spec: &QuadratureSpec,
        min_width_left: f64,
        min_width_right: f64,
    ) -> Result<Self> {
        let gl = GaussLegendre::new(spec.radial_nodes);
        let mut nodes = Vec::new();
        for (t, w) in half_rule(a, min_width_left, spec, &gl)? {
            let omx = 1.0 - t;
            nodes.push(Node {
                x: t,
                one_minus_x: omx,
                w: w * omx.powf(b),
            });
        }
        let mut right: Vec<Node> = half_rule(b, min_width_right, spec, &gl)?
            .into_iter()
            .map(|(t, w)| {
                let x = 1.0 - t;
                Node {
                    x,
                    one_minus_x: t,
                    w: w * x.powf(a),
                }
            })
            .collect();
        right.reverse();
        nodes.extend(right);
        Ok(Self { nodes })
    }

    /// Plain rule with no endpoint weight.
    pub fn plain(spec: &QuadratureSpec) -> Self {
        Self::new(0.0, 0.0, spec, 1.0, 1.0).expect("zero exponents are integrable")
    }

    pub fn integrate(&self, f: impl Fn(&Node) -> f64) -> Result<f64> {
        let mut acc = crate::sum::CompensatedSum::new();
        for n in &self.nodes {
            let v = f(n);
            if !v.is_finite() {
                return Err(Error::NonFinite(format!("x = {}", n.x)));
            }
            acc.add(n.w * v);
        }
        Ok(acc.value())
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}
