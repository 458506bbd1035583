//! Betti numbers and Poincaré series of fiber products
//! `k[[x]]/I ×_k k[[y]]/I'` over `R = k[[x, y]]`.
//!
//! The closed forms in [`formulas`] and [`series`] take the dimensions
//! `p`, `q` of the linear parts of `I`, `I'` (found by [`reduction`]) and the
//! Betti numbers of the residual ideals `J`, `J'`. For monomial ideals the
//! [`resolutions`] module provides an independent oracle computing Betti
//! numbers directly from multigraded Koszul homology.

pub mod error;
pub mod fiberprod;
pub mod field;
pub mod formulas;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod pipeline;
pub mod poly;
pub mod random;
pub mod reduction;
pub mod resolutions;
pub mod series;

pub use error::{Error, Result};
pub use fiberprod::{defining_ideal, minimal_generators, Decomposition, FiberSpec};
pub use field::{Field, Scalar};
pub use formulas::{betti_convolution, betti_fiber, betti_tilde, binom, BettiSequence};
pub use monomial::{
    minimalize_monomial_generators, Block, Monomial, MonomialIdeal, VariableContext,
};
pub use parse::{parse_ideal_spec, IdealSpec};
pub use poly::{substitute_zero, Polynomial};
pub use reduction::{
    compute_p, linear_part, normalize_generators, split_ideal, LinearPart, SplitIdeal,
};
pub use resolutions::{
    betti_monomial, cone_ranks, koszul_ranks, koszul_regularity_check, star_ranks, OracleLimits,
    RankSequence,
};
pub use series::{
    poincare_fiber, poincare_from_betti, poincare_split, verify_functional_equation,
    PoincarePolynomial,
};
