//! Exact rings: Q(sqrt5), Q(i, sqrt5), finite fields and prime ideals.

pub mod cyclo;
pub mod ff;
pub mod ideal;
pub mod quad;
pub mod special;

pub use cyclo::{CycloQuadElem, Embedding, Unit4};
pub use ff::{FFElem, FiniteField};
pub use ideal::{ideal_from_key, ideals_up_to_norm, split_prime, IdealKey, PrimeIdeal};
pub use quad::QuadElem;
pub use special::{legendre_5, reduce_gaussian, reduce_mod_special_ideal, sqrt_minus_one, teichmuller};
