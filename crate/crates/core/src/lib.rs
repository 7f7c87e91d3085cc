//! Cluster variables of finite type computed two ways: by seed mutation
//! along the bipartite belt, and as matching polynomials of tile graphs.
//!
//! Types A_n, B_n, C_n, D_n and G2 are supported. For D_n, slots are
//! ordered `1, 1b, 2, ..., n-1`.

pub mod error;
pub mod laurent;
pub mod matchenum;
pub mod mutation;
pub mod rootsys;
pub mod tilegraphs;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::{ExponentVector, LaurentPolynomial, MonomialFactorization};
pub use rootsys::{Kind, RootVector, TypeSpec};
