//! Orthogonal polynomials on the unit circle, their k-polar polynomials, and
//! numerical tools for locating the zeros of both.
//!
//! Polynomials are [`ComplexPoly`] values with ascending monomial
//! coefficients. The usual pipeline builds a family member with
//! [`build_family`], forms `Q_{n;k}(·; ξ)` with [`polar_polynomial`], finds
//! its zeros with [`find_roots`] and checks them with the reports in
//! [`localize`].

pub mod corpus;
pub mod error;
pub mod hull;
pub mod json;
pub mod localize;
pub mod opuc;
pub mod polar;
pub mod poly;
pub mod roots;

pub use num_complex::Complex64;

pub use error::{Error, Result};
pub use hull::ConvexHull;
pub use localize::{
    bound_report, cauchy_bound, containment_report, datt_govil_ring, gauss_lucas_report,
    lambda0_solve, polar_disk_radius, sendov_report, BoundReport, Containment, GaussLucasReport,
    Ring, RootVerdict, SendovMetric, SendovReport, SendovRow,
};
pub use opuc::{build_family, family_sequence, szego_recursion, MeasureSpec};
pub use polar::{closed_form_polar, polar_integral_k1, polar_polynomial, PolarParams};
pub use poly::{CenteredExpansion, ComplexPoly};
pub use roots::{find_roots, max_residual, RootOptions, RootSet};
