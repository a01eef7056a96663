//! Error correction for linear codes over prime fields by colon ideals.
//!
//! A received word `w` is decoded by appending it to the generator matrix,
//! forming the ideal generated by products of the column linear forms of the
//! augmented code, and saturating it by a power of the new variable. The
//! whole pipeline runs as exact rank and kernel computations on graded
//! coefficient matrices over GF(p). [`oracle`] provides brute-force ground
//! truth for small codes.

pub mod code;
pub mod decoder;
pub mod error;
pub mod field;
pub mod format;
pub mod ideal;
pub mod linalg;
pub mod oracle;
pub mod poly;

pub use code::{Codeword, LinearCode};
pub use decoder::{
    decode, decode_with, nearest_neighbor_count, DecodeOptions, DecodeResult, Status,
};
pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use ideal::{IdealPiece, LinearFormSpace, ProjectivePoint};
pub use linalg::{EchelonBasis, Matrix, Rref};
pub use oracle::Oracle;
pub use poly::{LinearForm, MonomialBasis, PolyVector};
