//! twistlab: exact-arithmetic construction and machine verification of
//! Jordanian twist chains for `sl(4)` and `so(5)`.
//!
//! The crate builds the defining representations of both algebras over the
//! number field Q(i, sqrt2), assembles the extended-Jordanian twist chains
//! (including the factors living on deformed carrier subspaces), and
//! verifies the resulting Hopf-algebraic structure with zero-tolerance
//! checks: the 2-cocycle and counit identities, primitivity of deformed
//! Borel generators, explicit twisted-coproduct tables, triangular
//! R-matrices with quantum and classical Yang-Baxter equations, and the
//! spectral-parameter `so(M)` R-matrix with its twisted form, Hamiltonian
//! density and small-chain transfer-matrix commutativity.
//!
//! Every scalar is an element of Q(i, sqrt2) — or a polynomial in the
//! deformation parameter `h` over it — so each check reports an exact
//! residual: zero means proved in the representation, nonzero comes with a
//! witness entry.

pub mod algebra;
pub mod cli;
pub mod linalg;
pub mod scalar;
pub mod twist;
pub mod verify;
pub mod yangian;

pub use linalg::{FieldMatrix, Matrix, PolyMatrix};
pub use scalar::{FieldElem, PolyParam, Scalar};
