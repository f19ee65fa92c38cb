//! Prime ideal graphs `Γ_P(R)` of finite commutative rings, their edge
//! ideals, and the powers of those ideals.
//!
//! Pipeline: [`ring`] enumerates proper prime ideals of `Z_{n_1} x ... x Z_{n_k}`,
//! [`graph`] builds the prime ideal graph and certifies it is `K_a ∨ K̄_b`,
//! [`edgeideal`] holds the closed forms for the edge ideal and its powers,
//! [`monomial`] is an independent exact engine the closed forms are checked
//! against, and [`polymatroid`] certifies the exchange property and linear
//! quotients.

pub mod edgeideal;
pub mod graph;
pub mod monomial;
pub mod polymatroid;
pub mod ring;

pub use edgeideal::{
    closed_form_generators, count_generators, primary_decomposition, EdgeIdealError, EdgeIdealModel,
};
pub use graph::{GraphError, SplitGraph, VertexCover};
pub use monomial::{Monomial, MonomialError, MonomialIdeal, Variable};
pub use polymatroid::{is_polymatroidal, linear_quotients, PolymatroidError};
pub use ring::{prime_ideals, verify_prime, PrimeIdeal, RingElement, RingError, RingSpec};
