//! Exact computations with standard graded Artinian algebras: Hilbert
//! functions, exact pairs of homogeneous zero divisors, the Hilbert-series
//! divisibility criterion, divided-power matrix factorizations, and a catalog
//! of closed-form Hilbert data.

pub mod arith;
pub mod poly;
pub mod algebra;
pub mod ezd;
pub mod criterion;
pub mod factorization;
pub mod catalog;
pub mod suite;
