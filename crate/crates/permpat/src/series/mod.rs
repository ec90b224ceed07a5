//! Exact power series over the rationals, in one or two variables, and a
//! catalog of the generating functions used for verification.

mod assemble;
mod catalog;
mod formula;
mod multi;
mod truncated;

pub use assemble::{
    assemble_av1342, assemble_av2341, av1342_terms, av2341_inhomogeneous,
    av2341_minimal_polynomial_residue, av2341_skew_part, solve_fixed_point, Av1342Terms,
};
pub use catalog::{
    catalan, catalog, lookup, names, num231_unscaled, num321_unscaled, simple_involution_forms,
    CatalogEntry, CatalogSeries, CATALOG,
};
pub use formula::{exact_formula, formula_min_n, FORMULAS};
pub use multi::MultiTrunc;
pub use truncated::TruncatedSeries;
