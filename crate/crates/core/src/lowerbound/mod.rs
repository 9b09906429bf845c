//! Lower-bound machinery: test functions `f_ξ`, their norms, the
//! coefficient splitting of the projected test function, and ratio and
//! remainder estimates along boundary paths.

mod path;

pub use path::{BoundaryPath, XiPoint};
mod coeffs;

pub use coeffs::{
    coeff_a, coeff_epsilon, gamma_product, phi, proj_coefficients, proj_factor, psi, upsilon,
    CoeffKind, CoefficientSequence, FactorTable, FactorValues, DEFAULT_CAP,
};
mod testfn;

pub use testfn::{
    base_rule, f_xi, f_xi_norm_p, factor_moments, fibre_norm_exact, fibre_rule, integrate_many,
    lemma24_integral, lemma24_series, proj_f_norm_p, proj_f_xi, FactorPair, NormP, TestNorm, Truncated,
};
mod checks;

pub use checks::{
    lemma25_sup_check, ratio_path, remainder_terms, remainder_trend, term_name, PointEvaluation, FACTORS,
    REMAINDER_TERMS,
};
