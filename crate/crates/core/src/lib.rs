//! Eisenstein and winding elements in the homology of X0(N) relative to the cusps,
//! for odd square-free levels N.
//!
//! The exact side works with Manin symbols over P1(Z/N), Dedekind sums and rational
//! arithmetic; [`numeric`] re-derives periods by integrating q-expansions, as an
//! independent floating-point check.
//!
//! ```
//! use eisenstein_elements::{eisenstein_divisor, eisenstein_element, presentation, Level};
//!
//! let level = Level::new(15).unwrap();
//! let ms = presentation(level);
//! let e = eisenstein_element(level, 15).unwrap();
//! // the boundary recovers the divisor of E_15, up to sign
//! assert_eq!(ms.boundary(&e), eisenstein_divisor(level, 15).unwrap().negated());
//! ```

pub mod arith;
pub mod cli;
pub mod cusps;
pub mod eisenstein;
pub mod error;
pub mod homology;
pub mod level;
pub mod matrix;
pub mod numeric;
pub mod p1;
pub mod report;
pub mod sampling;

pub use arith::{dedekind_sum, dedekind_sum_fast, Rational};
pub use cusps::{classify, cusp_classify, eisenstein_divisor, CuspClass, CuspDivisor};
pub use eisenstein::{
    eisenstein_element, f_values, p_m, period, winding_element, EisensteinCoefficients, WindingElement,
};
pub use error::{Error, Result};
pub use homology::{boundary, hecke, modular_symbol, presentation, FormalChain, ModularSymbols};
pub use level::Level;
pub use matrix::{Cusp, UnimodularMatrix};
pub use p1::{p1_list, p1_normalize, P1Class, P1List};
pub use report::{Check, Report};
