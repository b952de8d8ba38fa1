//! Exact symbolic calculus for the Nica-Toeplitz algebra of the product
//! system over the multiplicative positive integers with fibers C(T), and
//! for its Cuntz-Nica-Pimsner quotient, Cuntz's algebra Q_N.
//!
//! The crate has three layers:
//!
//! * [`laurent`] and [`product_system`] model the coefficient algebra C(T)
//!   as Laurent polynomials and build the fibers, inner products, and the
//!   compact-operator calculus on top, grounding every rewriting rule in a
//!   computation that can be checked independently;
//! * [`word_algebra`] is the symbolic layer: canonical monomials
//!   `u^a w_m w_n* u^-b` with a closed-form product, linear combinations,
//!   word reduction, and the bridges from fibers and compact operators to
//!   words;
//! * [`models`] realizes every monomial as a partial affine map on the
//!   integer basis (the quotient picture) and on the Fock basis (the
//!   Nica-Toeplitz picture), giving exact zero and equality deciders.
//!
//! [`suites`] packages the defining relations and their consequences as
//! runnable checklists, and [`numtheory`] supplies the gcd/lcm/Bezout
//! arithmetic everything else leans on.

pub mod laurent;
pub mod models;
pub mod numtheory;
pub mod product_system;
pub mod rng;
pub mod suites;
pub mod word_algebra;

pub use laurent::{GaussianRational, LaurentPoly};
pub use models::{
    apply_fock_basis, apply_integer_basis, equal, is_zero_nt, is_zero_qn, Algebra, FockBasisIndex,
    FockMap, PartialAffineMap,
};
pub use numtheory::{bezout, canonical_residue, factorize, gcd_lcm, BezoutPair, Positive};
pub use product_system::{
    compact_eq, left_action_as_compact, nica_product, CompactOp, FiberElement, LevelMismatch,
    RankOne,
};
pub use suites::{relation_suite, FamilyResult, SuiteKind, SuiteOptions, SuiteReport};
pub use word_algebra::{
    compact_to_word, fiber_to_word, poly_to_word, word_reduce, Element, GeneratorToken, Monomial,
};
