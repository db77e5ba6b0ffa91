//! Palindromic words and palindrome factorizations in groups.
//!
//! Words are literal letter sequences over a named alphabet. Groups are
//! handles that evaluate words to comparable elements. On top of that sit
//! restricted wreath products, commutator expressions, an exact palindrome
//! oracle for finite groups, and constructions that write wreath product
//! elements as short products of palindromes, each checked by evaluation.

pub mod cli;
pub mod commutators;
pub mod decompose;
pub mod error;
pub mod groups;
pub mod oracle;
pub mod presets;
pub mod report;
pub mod sampling;
pub mod syntax;
pub mod word;
pub mod wreath;

pub use error::{Error, Result, VerificationFailure};
pub use groups::{Element, Evaluator, Group, GroupKind};
pub use word::{Alphabet, Letter, PalindromeCertificate, Word};
pub use wreath::{WreathElement, WreathGroup};
