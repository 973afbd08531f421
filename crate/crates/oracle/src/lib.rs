//! Reference implementation for differential testing.
//!
//! [`eq`] is a line-by-line transliteration of the defining equations of
//! the auxiliary functions and of the semantics, written over its own cons
//! lists and its own term and formula types so it shares no code with
//! `natded-core`. [`bridge`] converts core values into oracle values.

pub mod bridge;
pub mod eq;
