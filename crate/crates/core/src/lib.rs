//! Skew polynomial rings `R_k[x;θ]` over the chain ring `R_k = F_p[u]/<u^k>`,
//! with `θ(u) = s·u`, and the skew cyclic codes they define.
//!
//! Arithmetic is exact modular arithmetic over a runtime prime `p`.

mod error;
mod linalg;

pub mod codec;
pub mod factorization;
pub mod parse;
pub mod ring;
pub mod serial;
pub mod skew_code;
pub mod skew_poly;

pub use error::{Error, Result};
pub use parse::{parse_element, parse_poly};
pub use ring::{ChainRingElement, FieldElement, RingContext};
pub use skew_code::{Codeword, GeneratorForm, Level, SkewCyclicCode};
pub use skew_poly::SkewPoly;
