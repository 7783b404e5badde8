//! Exact evaluation and verification of terminating hypergeometric series
//! identities.
//!
//! All arithmetic is exact, over Q or over the rational function field
//! Q(t). The [`catalog`] holds each relation as data and checks it at
//! sample points; [`group`] certifies the invariance groups as groups of
//! affine maps; [`limit`] evaluates over Q(t) to take limits at degenerate
//! parameters.

pub mod affine;
pub mod catalog;
mod expr;
pub mod field;
pub mod group;
pub mod limit;
pub mod series;

pub use affine::{AffineExpr, AffineMap};
pub use catalog::{
    check_identity, eval_named, expand_prop31, list_catalog, CatalogError, IdentityEntry, NamedFunction, Status,
    Verdict,
};
pub use field::{parse_rational, parse_scalar, FieldError, ParseError, RatFun, Rational, Scalar};
pub use group::{classify_group, element_orders, generate_group, Family, GroupLabel, GroupTable};
pub use limit::{check_identity_perturbed, omega_chen_chu, omega_chu, LimitValue, PerturbedSample};
pub use series::{SeriesError, SeriesSpec};

/// Library version, echoed in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
