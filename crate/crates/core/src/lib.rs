//! Monic integer polynomials whose roots all lie in the closed unit disc.
//!
//! Such a polynomial is a power of `z` times a product of cyclotomic
//! polynomials. This crate decides membership exactly, lists every such
//! polynomial of a given degree, and counts them three independent ways.
//!
//! ```
//! use kronecker_core::{is_kronecker, k_series, IntPoly};
//!
//! let f: IntPoly = "-1,0,0,1".parse().unwrap(); // z^3 - 1
//! let verdict = is_kronecker(&f).unwrap();
//! assert_eq!(verdict.factorization().unwrap().index_vector(), vec![1, 3]);
//!
//! assert_eq!(k_series(100).unwrap().coeffs[100].to_string(), "13445370780675");
//! ```
//!
//! The guide under `book/` walks through the mathematics; its code listings
//! are compiled and run as doc-tests of this crate.

pub mod counting;
pub mod cyclotomic;
mod error;
pub mod kronecker;
pub mod numtheory;
pub mod poly;

pub use counting::{b, k_crosscheck, k_partition, k_series, CountSeries, EvenPartition};
pub use cyclotomic::{cyclotomic, cyclotomics_up_to_degree, CyclotomicEntry};
pub use error::{Error, Result};
pub use kronecker::{
    enumerate_brute, enumerate_canonical, is_kronecker, roots_in_disc_numeric,
    CycloFactorization, Verdict,
};
pub use numtheory::{euler_phi, inverse_phi, TotientFiber};
pub use poly::{power_map, power_map_orbit, power_sums, IntPoly, PowerSums};

// Each chapter of the guide becomes a module so a failing listing points at
// its chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/totient.md")]
    mod totient {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/cyclotomic.md")]
    mod cyclotomic {}
    #[doc = include_str!("../../../book/src/kronecker.md")]
    mod kronecker {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
