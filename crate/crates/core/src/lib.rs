//! Exact computation in the free Hoch-algebra.
//!
//! Basis elements are forests of planar rooted trees. The algebra carries the
//! associative concatenation `*`, the grafting product `≻` (which together
//! satisfy the Hochschild two-cocycle relation) and the infinitesimal
//! coproduct `Δ`. Coefficients are exact rationals throughout.
//!
//! ```
//! use hoch::{succ, Element};
//!
//! let x: Element = "| | |".parse().unwrap();
//! let y: Element = "|".parse().unwrap();
//! assert_eq!(succ(&x, &y).to_string(), "| | [|,|] + | [|,|,|] + [|,|,|,|]");
//! ```

pub mod algebra;
pub mod cli;
pub mod coalgebra;
pub mod error;
pub mod linalg;
pub mod lincomb;
pub mod series;
pub mod trees;
pub mod verify;

pub use algebra::{
    nary_bracket, pbw_basis_element, star, succ, succ_basis, tree_to_primitive, Element,
};
pub use coalgebra::{
    Coproduct, CrossTerm, Op, TensorElement, UnitalElement, UnitalFactor, UnitalTensor,
};
pub use error::{HochError, Result};
pub use linalg::RatMatrix;
pub use lincomb::{LinComb, Rational};
pub use series::{hoch_series, schroeder, tinf_series, PowerSeries, SchroederKind};
pub use trees::{
    enumerate_forests, enumerate_trees, parse_forest, Alphabet, Forest, Generator, PlanarTree,
};
pub use verify::{Suite, SuiteReport, Verifier};
