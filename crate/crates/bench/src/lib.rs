//! Benchmarks for the `ucycle` construction; see `benches/`.
//!
//! The fixtures here are shared by the criterion targets.

use ucycle::{CyclicWord, Permutation};

/// A universal cycle for every order-`n` bench case, built once.
pub fn fixture_cycle(n: usize, i: usize) -> CyclicWord {
    ucycle::build_shortened_ucycle(n, i, &ucycle::BuildOptions::default())
        .expect("bench fixture builds")
}

/// The permutations of `1..=n` flattened into letters.
pub fn all_permutation_letters(n: usize) -> Vec<Vec<i64>> {
    Permutation::all(n).iter().map(Permutation::to_letters).collect()
}
