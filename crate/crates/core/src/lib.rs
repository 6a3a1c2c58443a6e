//! Finite merotopic and nearness spaces.
//!
//! A merotopic structure on a finite set `X` is a non-empty family of
//! coverings of `X` that is closed upward under refinement and closed under
//! the pairwise-intersection wedge. A nearness structure additionally
//! contains the blockwise interior of each of its coverings.
//!
//! This crate represents such structures exactly on small ground sets and
//! computes the nearness reflection of a merotopic structure (the largest
//! nearness structure contained in it) by two independent algorithms:
//!
//! - [`reflection::reflect_iterative`] descends from `μ` by repeatedly
//!   discarding coverings whose interior image is not uniform;
//! - [`reflection::reflect_maximal`] enumerates every nearness structure
//!   inside `μ` and joins them all.
//!
//! [`reflection::verify_bireflection`] then checks the universal property of
//! the result against every map into every small nearness space.
//!
//! The [`enumeration`] module holds exhaustive universes and brute-force
//! oracles; [`format`] and [`cli`] are the text I/O boundary.
//!
//! ## Examples
//!
//! One runnable example per capability:
//!
//! - **`covers`**: canonical forms, refinement, wedge, preimages, cover counts
//! - **`interior`**: interiors and the nearness test
//! - **`join`**: the least upper bound of two nearness structures
//! - **`reflection`**: both reflection algorithms over every structure on three points
//! - **`universal_property`**: a full universal-property report
//! - **`initial_structure`**: initial structures and a non-nearness witness
//! - **`text_formats`**: structure and map files
//!
//! ```bash
//! cargo run -p merotopy --example reflection
//! ```

pub mod cli;
pub mod covers;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod reflection;
pub mod structures;

pub use covers::{Cover, GroundSet, Subset};
pub use error::{Error, Result};
pub use reflection::{Algorithm, ReflectionReport};
pub use structures::{MerotopicStructure, SetMap};
