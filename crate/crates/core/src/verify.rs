//! Brute-force coverage check for (shortened) universal cycles.
//!
//! Uses nothing but window reduction from [`crate::perm`], so it is an
//! independent check of everything the construction modules produce.

use std::collections::BTreeMap;
use std::fmt;

use crate::perm::{covered_permutations, CyclicWord, Permutation, Word};

/// Exact accounting of which cyclic windows cover which permutations.
/// Window start indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    pub order: usize,
    pub length: usize,
    /// Every permutation of `1..=order`, mapped to the windows covering it.
    pub counts: BTreeMap<Permutation, Vec<usize>>,
    /// Windows whose first and last letters are equal.
    pub compressed_windows: Vec<usize>,
    /// Windows that repeat letters in any other way.
    pub bad_windows: Vec<(usize, Word)>,
    pub verdict: bool,
}

impl CoverageReport {
    pub fn missing(&self) -> Vec<&Permutation> {
        self.counts
            .iter()
            .filter(|(_, w)| w.is_empty())
            .map(|(p, _)| p)
            .collect()
    }

    pub fn duplicated(&self) -> Vec<(&Permutation, &[usize])> {
        self.counts
            .iter()
            .filter(|(_, w)| w.len() > 1)
            .map(|(p, w)| (p, w.as_slice()))
            .collect()
    }

    /// Sum of all per-permutation counts.
    pub fn total_covered(&self) -> usize {
        self.counts.values().map(Vec::len).sum()
    }

    /// A passing report whose length and compressed-window count match
    /// a cycle shortened by `i * (order - 1)`.
    pub fn is_shortened_by(&self, i: usize) -> bool {
        let saved = i * (self.order - 1);
        self.verdict
            && factorial(self.order).checked_sub(saved) == Some(self.length)
            && self.compressed_windows.len() == saved
    }
}

impl fmt::Display for CoverageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order:              {}", self.order)?;
        writeln!(f, "length:             {}", self.length)?;
        writeln!(f, "compressed windows: {}", self.compressed_windows.len())?;
        writeln!(
            f,
            "covered:            {} of {}",
            self.counts.values().filter(|w| !w.is_empty()).count(),
            self.counts.len()
        )?;
        let missing = self.missing();
        if !missing.is_empty() {
            let list: Vec<String> = missing.iter().map(|p| p.to_string()).collect();
            writeln!(f, "missing:            {}", list.join(" "))?;
        }
        for (p, at) in self.duplicated() {
            writeln!(f, "duplicate:          {p} at windows {at:?}")?;
        }
        for (at, win) in &self.bad_windows {
            writeln!(f, "bad window:         {win} at {at}")?;
        }
        write!(f, "verdict:            {}", if self.verdict { "PASS" } else { "FAIL" })
    }
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Tallies every cyclic `n`-window of `z`; `None` if `z` is shorter than `n`.
pub fn coverage(z: &CyclicWord, n: usize) -> Option<CoverageReport> {
    if n == 0 || z.len() < n {
        return None;
    }
    let mut counts: BTreeMap<Permutation, Vec<usize>> =
        Permutation::all(n).into_iter().map(|p| (p, Vec::new())).collect();
    let mut compressed_windows = Vec::new();
    let mut bad_windows = Vec::new();
    for start in 0..z.len() {
        let win = z.window(start, n);
        match covered_permutations(&win) {
            Ok(perms) => {
                if perms.len() == 2 {
                    compressed_windows.push(start);
                }
                for p in perms {
                    counts.get_mut(&p).expect("window covers an n-permutation").push(start);
                }
            }
            Err(_) => bad_windows.push((start, Word::new(win))),
        }
    }
    let verdict = bad_windows.is_empty() && counts.values().all(|w| w.len() == 1);
    Some(CoverageReport {
        order: n,
        length: z.len(),
        counts,
        compressed_windows,
        bad_windows,
        verdict,
    })
}

/// `z` covers every `n`-permutation exactly once, has length `n! - i(n-1)`
/// and has exactly `i(n-1)` compressed windows.
pub fn verify_shortened(z: &CyclicWord, n: usize, i: usize) -> bool {
    coverage(z, n).is_some_and(|r| r.is_shortened_by(i))
}
