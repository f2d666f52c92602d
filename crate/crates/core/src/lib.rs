//! Finite symbolic rank: rank-n constructions of binary words, their readings,
//! ordered Bratteli diagrams, S-adic directive sequences, and the transforms
//! between them.

pub mod bratteli;
pub mod cli;
pub mod construction;
pub mod error;
pub mod parsing;
pub mod sadic;
pub mod transforms;
pub mod words;

pub use error::{Error, Result};
pub use words::{FWord, Word};
