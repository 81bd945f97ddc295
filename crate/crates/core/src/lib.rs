//! Lexsegment ideals: monomials in lex order, Macaulay calculus, simplicial
//! complexes, brute-force ideal invariants and the closed-form predictions
//! they are checked against.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod error;
pub mod formulas;
pub mod gotzmann;
pub mod ideal;
pub mod lexsegments;
pub mod macaulay;
pub mod monomial;
pub mod simplicial;
pub mod snf;

pub use error::{Error, Result};
pub use lexsegments::Flavor;
pub use ideal::MonomialIdeal;
pub use monomial::{Monomial, VarSet};
pub use simplicial::SimplicialComplex;
