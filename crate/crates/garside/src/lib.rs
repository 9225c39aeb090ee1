//! Garside-group arithmetic for braid groups.
//!
//! The crate implements left-greedy canonical forms, the lattice calculus on
//! simple elements, cycling and decycling, super summit representatives,
//! transport and pullback of conjugators, ultra summit sets, and conjugacy
//! decision/search, parameterised by a presentation backend.  Two backends
//! are provided: the classical generators (permutation braids) and the band
//! generators (non-crossing partitions).
//!
//! A brute-force [`oracle`] validates every convention and algorithm at
//! small braid index.

pub mod artin;
pub mod bkl;
pub mod canonical;
pub mod conjugacy;
pub mod error;
pub mod oracle;
pub mod presentation;
pub mod summit;

pub use canonical::{CanonicalForm, Letter};
pub use error::{Error, Result};
pub use presentation::Presentation;
