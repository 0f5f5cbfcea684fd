//! Structure-constant algebras and numerical evaluation of identities.

mod algebra;
mod bundled;
mod eval;
mod file;

pub use algebra::{from_leibniz, from_lie, validate, AlgebraSC, Axiom, LeibnizSC, Vector, Violation};
pub use bundled::{
    bundled_algebras, cross_product, cross_product_leibniz, leibniz_3, nilpotent_leibniz, reductive_sl4, search_leibniz_3, Bundled,
};
pub use file::{AlgebraFile, Construction};
pub use eval::{
    check_identity, eval_term, evaluate_alternating_naive, CheckOutcome, Counterexample, Evaluable, EXHAUSTIVE_LIMIT,
};
