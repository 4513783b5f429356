//! A computation engine for neutrosophic logic and sets.
//!
//! Truth values are `(T, I, F)` triples — truth, indeterminacy, falsehood —
//! whose components are finite unions of closed subintervals of `[0, 1]`
//! (crisp numbers being degenerate intervals). On top of the value types sit:
//!
//! - [`combinators`]: algebraic/bounded/min-max norm and conorm arithmetic on
//!   components, extended to interval unions by monotone endpoints;
//! - [`triple_ops`]: componentwise conjunction/disjunction of triples and the
//!   two negations;
//! - [`ordered`]: the priority-routed k-ary operator family built on the
//!   composition k-law, with a brute-force routing oracle;
//! - [`measure`]: vector norms, normalization, and the intuitionistic /
//!   paraconsistent / plausibly-normalized classification;
//! - [`topology`]: finite neutrosophic set families and checkers for both
//!   topology constructions;
//! - [`dsl`]: a small formula language with configurable operator semantics.
//!
//! All values are immutable; every operation is pure.
//!
//! ```
//! use std::collections::HashMap;
//! use neutro_core::dsl::{self, EvalConfig};
//! use neutro_core::NeutroTriple;
//!
//! let formula = dsl::parse("x & (y | !z)").unwrap();
//! let bindings: HashMap<String, NeutroTriple> = [
//!     ("x".to_string(), "{0.6,0.3,0.1}".parse().unwrap()),
//!     ("y".to_string(), "{[0.2,0.5],0.1,0.4}".parse().unwrap()),
//!     ("z".to_string(), "{0.3,0.2,0.7}".parse().unwrap()),
//! ]
//! .into();
//! let value = dsl::evaluate(&formula, &bindings, &EvalConfig::default()).unwrap();
//! assert_eq!(dsl::format_triple(&value), "{0.6,0.3,0.3}");
//! ```

pub mod combinators;
pub mod dsl;
mod error;
pub mod measure;
pub mod ordered;
pub mod set;
pub mod topology;
pub mod triple;
pub mod triple_ops;

pub use error::Error;
pub use set::{format_number, Interval, SubunitarySet};
pub use triple::{CrispTriple, NeutroTriple};

/// Default absolute tolerance for set equality, topology membership, and
/// attainment tests. Overridable per call through the `_eps` variants and on
/// the command line via `--epsilon`.
pub const DEFAULT_EPSILON: f64 = 1e-9;
