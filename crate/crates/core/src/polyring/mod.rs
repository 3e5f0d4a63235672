//! Polynomial arithmetic over a prime field with a fixed graded monomial
//! order, plus the univariate factorization the radical machinery needs.

pub mod factor;
pub mod field;
pub mod monomial;
pub mod poly;

pub use factor::factor_univariate;
pub use field::{PrimeField, SplitMix64, DEFAULT_PRIME};
pub use monomial::{binomial, monomial_count, monomials_of_degree, Monomial};
pub use poly::{
    parse_polynomial, same_ring, standard_ring, Homogeneity, Polynomial, Ring, RingDescriptor,
};
