//! Exact computational algebra for ternary cyclic codes with two zeros.
//!
//! The crate builds finite fields GF(3^m) with certified primitive elements,
//! factors polynomials over GF(3) deterministically, and decides whether the
//! cyclic codes generated by the minimal polynomials of `alpha` and `alpha^e`
//! meet the sphere-packing bound for minimum distance 4.  Everything is exact:
//! machine integers, trit vectors, and table-based discrete logarithms — no
//! floating point and no external computer-algebra system.
//!
//! Module map:
//!
//! * [`arith`] — integer gcd/inverse/factoring helpers,
//! * [`gf`] — field contexts, elements, discrete-log and Zech tables,
//! * [`poly`] — GF(3)[x] arithmetic, parsing, factorization, root counts,
//! * [`cosets`] — cyclotomic cosets mod 3^m - 1 and minimal polynomials,
//! * [`checker`] — the optimality criterion for exponent pairs (1, e),
//! * [`codes`] — low-weight codeword search and the sphere-packing bound,
//! * [`constructions`] — verified exponent families and the symbolic
//!   certificates behind them.

pub mod arith;
pub mod checker;
pub mod codes;
pub mod constructions;
pub mod cosets;
mod error;
pub mod gf;
pub mod poly;

pub use error::{Error, Result};
