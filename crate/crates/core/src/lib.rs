//! Universal Lyndon words.
//!
//! A universal Lyndon word (ULW) of degree `n` is a word of length `n!` over
//! `{1, ..., n}` each of whose conjugates is a Lyndon word for some total
//! order on the alphabet. This crate verifies and analyses such words, builds
//! them from Eulerian cycles of Jackson graphs and from Hamiltonian lex-codes,
//! and enumerates them exhaustively for small degrees.

pub mod canon;
pub mod code;
pub mod enumerate;
pub mod error;
pub mod jackson;
pub mod lexcode;
pub mod lyndon;
pub mod order;
pub mod structure;
pub mod verify;
pub mod word;

pub use canon::{canonicalize, CyclicWord};
pub use code::is_prefix_code;
pub use enumerate::{classify_ulws, enumerate_ulws, CensusRecord, Classification, IsoClass, UlwCensus};
pub use error::{Error, Result};
pub use jackson::{EdgeCycle, JacksonGraph};
pub use lexcode::{refine_lex_code, validate_lex_code, HamiltonianCycle, LexCode, RefinementScript, SxDigraph};
pub use lyndon::{is_lyndon, lyndon_orders};
pub use order::{factorial, PartialAlphabetOrder, TotalOrder};
pub use structure::Ulw;
pub use verify::{is_ulw, is_universal_order_word, UlwReport, VerifyMode, Witness};
pub use word::{Letter, Word, WordPredicates, MAX_DEGREE};
