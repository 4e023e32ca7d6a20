//! Shortened universal cycles for permutations.
//!
//! A universal cycle for the permutations of `1..=n` is a cyclic word in
//! which every `n`-permutation is order-isomorphic to exactly one window
//! of `n` consecutive letters. Letting a window repeat its first letter in
//! last position makes it cover two permutations at once (a twin pair),
//! which shortens the cycle. [`build_shortened_ucycle`] produces cycles of
//! every length `n! - i(n-1)` with `0 <= i <= (n-2)!`, and
//! [`verify::coverage`] checks any cyclic word by brute force.
//!
//! ```
//! use ucycle::{build_shortened_ucycle, verify_shortened, BuildOptions};
//!
//! let z = build_shortened_ucycle(5, 3, &BuildOptions::default()).unwrap();
//! assert_eq!(z.len(), 120 - 3 * 4);
//! assert!(verify_shortened(&z, 5, 3));
//! ```

pub mod cluster;
pub mod dot;
pub mod error;
pub mod euler;
pub mod glue;
pub mod io;
pub mod perm;
pub mod pipeline;
pub mod verify;
pub mod word_builder;

pub use cluster::{
    extended_glue_family, glue_family, matched_glue_family, transition_walk, ClusterGraph, Edge,
    EdgeKind, EdgeLabel, FamilyKind, GlueFamily, TwinCycle, TwinPair,
};
pub use error::{Error, Result};
pub use euler::{eulerian_circuit, is_balanced, strongly_connected, Trail, TrailEdge};
pub use glue::glue;
pub use perm::{
    covered_permutations, cyclic_windows, order_isomorphic, reduce, twin_of, windows, CyclicWord,
    Letter, Permutation, Word,
};
pub use pipeline::{build_shortened_ucycle, construct, max_shortening, BuildOptions, Construction};
pub use verify::{coverage, verify_shortened, CoverageReport};
pub use word_builder::{relabel_canonical, trail_to_word, word_from_labels};
