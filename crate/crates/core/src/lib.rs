//! Deep holes of Reed-Solomon codes over finite fields.
//!
//! A word is a deep hole when its distance to the code equals the covering
//! radius `n - k`. The crate provides exact oracles for small codes, the
//! leading-coefficient hypersurface that certifies a word is *not* a deep
//! hole, the subset-sum reduction, and exact integer point-count bounds.
//!
//! ```
//! use deephole::gf::Field;
//! use deephole::rscode::{EvalSet, Oracle, RSCode};
//! use deephole::upoly::UPoly;
//!
//! let f5 = Field::prime(5)?;
//! let code = RSCode::new(&f5, &EvalSet::star(), 2)?;
//! let word = code.word_from_poly(&UPoly::parse(&f5, "x^2")?)?;
//! let verdict = code.distance_to_code(&word, Oracle::SubsetInterpolation)?;
//! assert!(verdict.is_deep_hole);
//! assert_eq!(verdict.distance, 2);
//! # Ok::<(), deephole::error::Error>(())
//! ```

pub mod bounds;
pub mod cli;
pub mod comb;
pub mod error;
pub mod gf;
pub mod mpoly;
pub mod reduction;
pub mod rscode;
pub mod surface;
pub mod upoly;
