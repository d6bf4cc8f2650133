//! GCD-recursive permutations of the positive integers.
//!
//! For a seed `a >= 2` the sequence `f_a` starts `1, a` and then always takes
//! the smallest unused integer coprime to the previous term. Every such
//! sequence is a permutation of the naturals.
//!
//! The crate covers:
//!
//! * generation of prefixes ([`sequence`]),
//! * turning points and the record stream of `f_3` ([`records`]),
//! * cycle decompositions ([`cycles`]),
//! * classification of seeds into the identity class or the class of `f_3`
//!   ([`classify`]),
//! * record counts and density bounds around primorials ([`primorial`]),
//! * the command layer used by the `gcdperm` binary ([`cli`]).
//!
//! Each capability has a runnable example under `examples/`:
//!
//! ```text
//! cargo run --release --example generate
//! cargo run --release --example records
//! cargo run --release --example cycles
//! cargo run --release --example classify
//! cargo run --release --example primorial
//! cargo run --release --example figures
//! cargo run --release --example bfile_diff
//! ```
//!
//! ```
//! use gcdperm::sequence::generate_prefix;
//!
//! let f = generate_prefix(3, 12).unwrap();
//! assert_eq!(f.terms(), &[1, 3, 2, 5, 4, 7, 6, 11, 8, 9, 10, 13]);
//! ```

pub mod classify;
pub mod cli;
pub mod cycles;
pub mod error;
pub mod primes;
pub mod primorial;
pub mod records;
pub mod sequence;

pub use classify::{classify, ClassLabel, Verdict};
pub use error::{Error, Result};
pub use records::{Record, RecordBook, TurningPoint};
pub use sequence::{generate_prefix, Params, SequenceBuffer};
