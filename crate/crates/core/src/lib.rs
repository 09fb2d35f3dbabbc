//! Exterior algebraic shifting and depth invariants of squarefree monomial
//! ideals, computed exactly over prime fields.
//!
//! The crate is organized bottom-up: [`linalg`] and [`exterior`] provide the
//! arithmetic, [`simplicial`] and [`ideal`] the combinatorial objects,
//! [`generic`] the generic coordinate changes (gin and shifting), [`cartan`]
//! exterior Betti numbers, and [`annihilators`] annihilator numbers together
//! with the verification routines built on top of them.

pub mod annihilators;
pub mod cartan;
pub mod corpus;
pub mod error;
pub mod exterior;
pub mod generic;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod report;
pub mod simplicial;
pub mod symmetric;

pub use error::{Error, Result};
pub use exterior::{ExtMonomial, SignedMonomial};
pub use generic::GenericContext;
pub use ideal::{BettiTable, MonomialIdeal, Ring};
pub use linalg::{MatrixFp, PrimeField};
pub use simplicial::SimplicialComplex;
