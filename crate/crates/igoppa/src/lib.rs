//! Interleaved wild Goppa codes over small finite fields.
//!
//! The crate provides, bottom up:
//!
//! * [`field`] — exact arithmetic in a tower `F_p ⊂ F_q ⊂ F_{q^m}` with
//!   canonical element representations and subfield membership tests;
//! * [`poly`] — dense univariate polynomial algebra over the extension field;
//! * [`matrix`] — linear algebra over `F_q` on symbol matrices;
//! * [`goppa`] — wild Goppa code construction (`g = b^q`), parity checks,
//!   generator matrices, encoding and membership tests;
//! * [`decoder`] — collaborative decoding of `ℓ`-interleaved received words
//!   through a system of key equations;
//! * [`sim`] — seeded Monte-Carlo estimation of decoding failure rates over
//!   burst-error channels;
//! * [`mceliece`] — an interleaved McEliece cryptosystem with structured
//!   error matrices and parameter/key-size accounting.
//!
//! The core is `no_std` (with `alloc`); all I/O and file formats live in the
//! companion CLI crate.

#![cfg_attr(not(test), no_std)]
// Index loops over multiple matrices at once are the dominant pattern here.
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod decoder;
pub mod field;
pub mod goppa;
pub mod matrix;
pub mod mceliece;
pub mod poly;
pub mod rng;
pub mod sim;

pub use field::{Ext, FieldContext, FieldError, Symbol};
pub use poly::Poly;
