//! Gauss–Legendre and Gauss–Jacobi rules on `[-1, 1]`.

use crate::specfun::log_gamma;
use nalgebra::{DMatrix, SymmetricEigen};

/// Nodes and weights of the `n`-point Gauss–Legendre rule, nodes ascending.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    /// Nodes and weights mapped to `[lo, hi]`.
    pub fn mapped(&self, lo: f64, hi: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, half * w))
    }
}

/// Nodes and weights `(x, w)` of the `n`-point Gauss–Jacobi rule for the
/// weight `(1-x)^alpha (1+x)^beta`, by eigen-decomposition of the Jacobi
/// matrix. Nodes ascending.
pub fn gauss_jacobi(n: usize, alpha: f64, beta: f64) -> Vec<(f64, f64)> {
    assert!(n >= 1 && alpha > -1.0 && beta > -1.0);
    let ab = alpha + beta;
    let diag = |k: usize| {
        let s = 2.0 * k as f64 + ab;
        if k == 0 {
            (beta - alpha) / (ab + 2.0)
        } else {
            (beta * beta - alpha * alpha) / (s * (s + 2.0))
        }
    };
    let off = |k: usize| {
        let kf = k as f64;
        let s = 2.0 * kf + ab;
        (4.0 * kf * (kf + alpha) * (kf + beta) * (kf + ab) / (s * s * (s + 1.0) * (s - 1.0))).sqrt()
    };
    let mut m = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        m[(k, k)] = diag(k);
        if k + 1 < n {
            let b = off(k + 1);
            m[(k, k + 1)] = b;
            m[(k + 1, k)] = b;
        }
    }
    let mu0 = ((ab + 1.0) * std::f64::consts::LN_2 + log_gamma(alpha + 1.0).unwrap()
        + log_gamma(beta + 1.0).unwrap()
        - log_gamma(ab + 2.0).unwrap())
    .exp();
    let eig = SymmetricEigen::new(m);
    let mut out: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let v0 = eig.eigenvectors[(0, i)];
            (eig.eigenvalues[i], mu0 * v0 * v0)
        })
        .collect();
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}
