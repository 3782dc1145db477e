//! Standard forms of matrices over `{0} ∪ ⟨ζ_k⟩` under monomial equivalence.
//!
//! Two matrices `A`, `B` are equivalent when `M1·A·M2 = B` for monomial
//! matrices `M1`, `M2`. [`standardize`] maps every matrix to an equivalent
//! one in standard form and returns the pair `(M1, M2)` as a
//! [`Certificate`]. [`legacy_standardize`] is the older four-step reduction,
//! kept because it can fail to reach standard form. [`gram_weight_check`]
//! decides `W·W* = w·I` exactly in `ℤ[ζ_k]`, and [`oracle`] has exhaustive
//! searches for tiny cases.
//!
//! ```
//! use unitform::format::parse_matrix;
//! use unitform::{is_standard_form, standardize, OrderSpec};
//!
//! let w = parse_matrix("t0matrix 4 2 2\n1 3\n* 2\n")?;
//! let order = OrderSpec::parse(4, "0 2 1 3")?;
//! let (s, cert) = standardize(&w, &order)?;
//! assert!(is_standard_form(&order, &s).0);
//! assert!(cert.verify(&w, &s)?);
//! # Ok::<(), unitform::Error>(())
//! ```

pub mod cyclotomic;
pub mod error;
pub mod format;
pub mod group;
pub mod matrix;
pub mod oracle;
pub mod standard_form;
pub mod standardize;

pub use cyclotomic::{gram_weight_check, CycPoly, CyclotomicRing, GramVerdict, GramWitness};
pub use error::{Error, Result};
pub use group::{Entry, GroupSpec, OrderSpec};
pub use matrix::{
    apply_col_transform, apply_row_transform, equivalent_by, monomial_compose, monomial_inverse,
    row_lex_compare, MonomialMatrix, T0Matrix,
};
pub use oracle::OracleBudget;
pub use standard_form::{is_standard_form, Condition, Violation, ViolationReport};
pub use standardize::{legacy_standardize, legacy_standardize_traced, standardize, Certificate, LegacyTrace};
