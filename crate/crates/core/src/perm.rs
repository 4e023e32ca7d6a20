//! Words, permutations and order-isomorphic reduction.
//!
//! A [`Word`] is a finite sequence of signed integer letters. Words are
//! compared only through the relative order of their letters, so the
//! central operation is [`reduce`], which replaces the `i`-th smallest
//! distinct letter by `i`. A window of length `n` *covers* the
//! permutations it is order-isomorphic to; when its first and last
//! letters coincide (incomparable elements at distance `n - 1`) it covers
//! both ways of breaking the tie.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single letter. Constructions produce letters below 1, so letters are signed.
pub type Letter = i64;

/// A finite sequence of letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<Letter> {
        self.0.iter().copied().min()
    }

    pub fn max(&self) -> Option<Letter> {
        self.0.iter().copied().max()
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, letter) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{letter}")?;
        }
        write!(f, ")")
    }
}

/// A word read cyclically: the letter after the last one is the first one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Letter>", into = "Vec<Letter>")]
pub struct CyclicWord(Vec<Letter>);

impl CyclicWord {
    /// Wraps `letters`; a cyclic word needs at least one letter.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(CyclicWord(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `n` letters starting at cyclic index `start` (0-based).
    pub fn window(&self, start: usize, n: usize) -> Vec<Letter> {
        let len = self.0.len();
        (0..n).map(|k| self.0[(start + k) % len]).collect()
    }
}

impl TryFrom<Vec<Letter>> for CyclicWord {
    type Error = Error;

    fn try_from(letters: Vec<Letter>) -> Result<Self> {
        CyclicWord::new(letters)
    }
}

impl From<CyclicWord> for Vec<Letter> {
    fn from(word: CyclicWord) -> Self {
        word.0
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Word(self.0.clone()).fmt(f)
    }
}

/// A permutation of `1..=k`, stored one byte per entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Permutation(Vec<u8>);

impl Permutation {
    /// Checks that `entries` are exactly `1..=entries.len()`.
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        let len = entries.len();
        let mut seen = vec![false; len + 1];
        for &e in &entries {
            let e = e as usize;
            if e == 0 || e > len || seen[e] {
                return Err(Error::InvalidPermutation {
                    entries: entries.iter().map(|&x| x as Letter).collect(),
                    len,
                });
            }
            seen[e] = true;
        }
        Ok(Permutation(entries))
    }

    /// Interprets `letters` as a permutation; they must already be `1..=len`.
    pub fn from_letters(letters: &[Letter]) -> Result<Self> {
        let len = letters.len();
        let invalid = || Error::InvalidPermutation {
            entries: letters.to_vec(),
            len,
        };
        if len > u8::MAX as usize {
            return Err(invalid());
        }
        let entries = letters
            .iter()
            .map(|&l| u8::try_from(l).map_err(|_| invalid()))
            .collect::<Result<Vec<u8>>>()?;
        Permutation::new(entries).map_err(|_| invalid())
    }

    /// Parses the digit-string form used for small permutations, e.g. `"2143"`.
    pub fn parse_digits(s: &str) -> Result<Self> {
        let entries = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("not a digit string: {s:?}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        Permutation::new(entries)
    }

    pub fn identity(k: usize) -> Self {
        Permutation((1..=k as u8).collect())
    }

    /// `(k, k-1, ..., 1)`.
    pub fn descending(k: usize) -> Self {
        Permutation((1..=k as u8).rev().collect())
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_letters(&self) -> Vec<Letter> {
        self.0.iter().map(|&e| e as Letter).collect()
    }

    pub fn to_word(&self) -> Word {
        Word(self.to_letters())
    }

    /// The cluster this permutation belongs to: the reduction of all but its last entry.
    pub fn prefix_pattern(&self) -> Permutation {
        reduce_to_perm(&self.0[..self.0.len() - 1])
    }

    /// The reduction of all but its first entry.
    pub fn suffix_pattern(&self) -> Permutation {
        reduce_to_perm(&self.0[1..])
    }

    /// All permutations of `1..=k` in lexicographic order.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut current: Vec<u8> = (1..=k as u8).collect();
        let mut out = vec![Permutation(current.clone())];
        while next_permutation(&mut current) {
            out.push(Permutation(current.clone()));
        }
        out
    }
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = Error;

    fn try_from(entries: Vec<u8>) -> Result<Self> {
        Permutation::new(entries)
    }
}

impl From<Permutation> for Vec<u8> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() <= 9 {
            for e in &self.0 {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

/// Lexicographic successor in place; returns `false` at the last permutation.
pub(crate) fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

fn reduce_letters<T: Ord + Copy>(w: &[T]) -> Vec<Letter> {
    let mut distinct: Vec<T> = w.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    w.iter()
        .map(|x| distinct.binary_search(x).expect("letter present") as Letter + 1)
        .collect()
}

/// Reduction of a word with pairwise distinct letters, as a permutation.
pub(crate) fn reduce_to_perm<T: Ord + Copy>(w: &[T]) -> Permutation {
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by_key(|&k| w[k]);
    let mut entries = vec![0u8; w.len()];
    for (rank, &k) in order.iter().enumerate() {
        entries[k] = rank as u8 + 1;
    }
    Permutation(entries)
}

/// Replaces each copy of the `i`-th smallest distinct letter of `w` by `i`.
pub fn reduce(w: &[Letter]) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(Word(reduce_letters(w)))
}

/// True when `a` and `b` reduce to the same word.
pub fn order_isomorphic(a: &[Letter], b: &[Letter]) -> bool {
    a.len() == b.len() && reduce_letters(a) == reduce_letters(b)
}

/// All `n`-windows of `w`, left to right.
pub fn windows(w: &Word, n: usize) -> Result<Vec<Word>> {
    if n == 0 {
        return Err(Error::ZeroWindow);
    }
    if n > w.len() {
        return Err(Error::WindowTooLarge { window: n, len: w.len() });
    }
    Ok(w.0.windows(n).map(Word::from).collect())
}

/// One `n`-window per cyclic starting index of `z`.
pub fn cyclic_windows(z: &CyclicWord, n: usize) -> Result<Vec<Word>> {
    if n == 0 {
        return Err(Error::ZeroWindow);
    }
    if n > z.len() {
        return Err(Error::WindowTooLarge { window: n, len: z.len() });
    }
    Ok((0..z.len()).map(|j| Word(z.window(j, n))).collect())
}

/// The permutations covered by an `n`-letter window.
///
/// Distinct letters cover their reduction. A window whose first and last
/// letters are equal, with every other pair distinct, covers the two
/// linear extensions obtained by ordering the first letter below or above
/// the last one; the result is sorted. Any other repetition is rejected.
pub fn covered_permutations(win: &[Letter]) -> Result<Vec<Permutation>> {
    if win.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = win.len();
    let mut sorted = win.to_vec();
    sorted.sort_unstable();
    let repeats = sorted.windows(2).filter(|p| p[0] == p[1]).count();
    if repeats == 0 {
        return Ok(vec![reduce_to_perm(win)]);
    }
    if repeats == 1 && n >= 2 && win[0] == win[n - 1] {
        // Doubling keeps every strict comparison and frees a slot on either side of the tie.
        let doubled: Vec<Letter> = win.iter().map(|&x| 2 * x).collect();
        let mut below = doubled.clone();
        below[n - 1] += 1;
        let mut above = doubled;
        above[n - 1] -= 1;
        let mut out = vec![reduce_to_perm(&below), reduce_to_perm(&above)];
        out.sort();
        return Ok(out);
    }
    Err(Error::UnsupportedPattern(Word::from(win)))
}

/// The twin of `p`: `p` with its first and last entries swapped, provided
/// those entries differ by one.
pub fn twin_of(p: &Permutation) -> Option<Permutation> {
    let e = p.entries();
    let n = e.len();
    if n < 2 || e[0].abs_diff(e[n - 1]) != 1 {
        return None;
    }
    let mut swapped = e.to_vec();
    swapped.swap(0, n - 1);
    Some(Permutation(swapped))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse_digits(s).unwrap()
    }

    fn w(xs: &[Letter]) -> Word {
        Word::from(xs)
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&[3, 7, 3, 6, 1]).unwrap(), w(&[2, 4, 2, 3, 1]));
        assert_eq!(reduce(&[1, 2, 3, 4, 5]).unwrap(), w(&[1, 2, 3, 4, 5]));
        assert_eq!(reduce(&[4, -3, 6, 7]).unwrap(), w(&[2, 1, 3, 4]));
    }

    #[test]
    fn reduce_empty_is_error() {
        assert_eq!(reduce(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn linear_windows() {
        let word = w(&[1, 4, 5, 2, 4, 3, 1, 4]);
        let got: Vec<Word> = windows(&word, 3)
            .unwrap()
            .iter()
            .map(|x| reduce(x.letters()).unwrap())
            .collect();
        let want: Vec<Word> = ["123", "231", "312", "132", "321", "213"]
            .iter()
            .map(|s| p(s).to_word())
            .collect();
        assert_eq!(got, want);

        let word = w(&[4, 3, 2, 1, 3, 2, 4]);
        assert_eq!(
            windows(&word, 4).unwrap(),
            vec![w(&[4, 3, 2, 1]), w(&[3, 2, 1, 3]), w(&[2, 1, 3, 2]), w(&[1, 3, 2, 4])]
        );
        assert_eq!(windows(&word, 7).unwrap(), vec![word.clone()]);
        assert!(matches!(windows(&word, 8), Err(Error::WindowTooLarge { .. })));
    }

    #[test]
    fn cyclic_window_examples() {
        let z = CyclicWord::new(vec![1, 2, 3, 2]).unwrap();
        assert_eq!(
            cyclic_windows(&z, 3).unwrap(),
            vec![w(&[1, 2, 3]), w(&[2, 3, 2]), w(&[3, 2, 1]), w(&[2, 1, 2])]
        );

        let z = CyclicWord::new(vec![1, 4, 5, 2, 4, 3]).unwrap();
        let mut covered: Vec<Permutation> = cyclic_windows(&z, 3)
            .unwrap()
            .iter()
            .flat_map(|x| covered_permutations(x.letters()).unwrap())
            .collect();
        covered.sort();
        assert_eq!(covered, Permutation::all(3));

        let z = CyclicWord::new(vec![7, 8, 9]).unwrap();
        assert_eq!(
            cyclic_windows(&z, 3).unwrap(),
            vec![w(&[7, 8, 9]), w(&[8, 9, 7]), w(&[9, 7, 8])]
        );
        assert!(cyclic_windows(&z, 4).is_err());
        assert!(CyclicWord::new(vec![]).is_err());
    }

    #[test]
    fn covering_with_incomparable_ends() {
        assert_eq!(covered_permutations(&[2, 1, 3, 2]).unwrap(), vec![p("2143"), p("3142")]);
        assert_eq!(covered_permutations(&[4, 3, 2, 1]).unwrap(), vec![p("4321")]);
        assert_eq!(covered_permutations(&[3, 2, 1, 3]).unwrap(), vec![p("3214"), p("4213")]);
    }

    #[test]
    fn covering_rejects_other_repeats() {
        assert!(matches!(covered_permutations(&[1, 1, 2, 3]), Err(Error::UnsupportedPattern(_))));
        assert!(matches!(covered_permutations(&[1, 2, 1, 1]), Err(Error::UnsupportedPattern(_))));
        assert!(matches!(covered_permutations(&[2, 1, 2, 2]), Err(Error::UnsupportedPattern(_))));
        assert!(matches!(covered_permutations(&[2, 3, 3, 2]), Err(Error::UnsupportedPattern(_))));
    }

    #[test]
    fn twin_examples() {
        assert_eq!(twin_of(&p("3142")), Some(p("2143")));
        assert_eq!(twin_of(&p("134562")), Some(p("234561")));
        assert_eq!(twin_of(&p("2413")), Some(p("3412")));
        assert_eq!(twin_of(&p("1342")), Some(p("2341")));
        assert_eq!(twin_of(&p("1324")), None);
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 3, 2]).is_ok());
        assert!(Permutation::new(vec![1, 3, 3]).is_err());
        assert!(Permutation::new(vec![0, 1, 2]).is_err());
        assert!(Permutation::from_letters(&[1, -2]).is_err());
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(p("1324").prefix_pattern(), p("132"));
        assert_eq!(p("1324").suffix_pattern(), p("213"));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn perm_strategy() -> impl Strategy<Value = Permutation> {
            (2usize..9)
                .prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle())
                .prop_map(|v| Permutation::new(v).unwrap())
        }

        proptest! {
            #[test]
            fn reduce_is_idempotent(xs in prop::collection::vec(-50i64..50, 1..20)) {
                let once = reduce(&xs).unwrap();
                prop_assert_eq!(reduce(once.letters()).unwrap(), once);
            }

            #[test]
            fn reduce_preserves_order(xs in prop::collection::vec(-50i64..50, 1..20)) {
                let r = reduce(&xs).unwrap();
                let rl = r.letters();
                prop_assert_eq!(rl.len(), xs.len());
                let distinct = { let mut d = xs.clone(); d.sort(); d.dedup(); d.len() as i64 };
                for a in 0..xs.len() {
                    prop_assert!(rl[a] >= 1 && rl[a] <= distinct);
                    for b in 0..xs.len() {
                        prop_assert_eq!(xs[a] < xs[b], rl[a] < rl[b]);
                        prop_assert_eq!(xs[a] == xs[b], rl[a] == rl[b]);
                    }
                }
            }

            #[test]
            fn distinct_window_covers_its_reduction(xs in prop::collection::hash_set(-100i64..100, 1..10)) {
                let xs: Vec<Letter> = xs.into_iter().collect();
                let covered = covered_permutations(&xs).unwrap();
                prop_assert_eq!(covered.len(), 1);
                prop_assert_eq!(covered[0].to_word(), reduce(&xs).unwrap());
            }

            #[test]
            fn tied_window_covers_a_twin_pair(xs in prop::collection::hash_set(-100i64..100, 2..10)) {
                let mut xs: Vec<Letter> = xs.into_iter().collect();
                xs.push(xs[0]);
                let covered = covered_permutations(&xs).unwrap();
                prop_assert_eq!(covered.len(), 2);
                prop_assert_eq!(twin_of(&covered[0]), Some(covered[1].clone()));
                prop_assert_eq!(covered[0].prefix_pattern(), covered[1].prefix_pattern());
            }

            #[test]
            fn twin_is_an_involution(perm in perm_strategy()) {
                if let Some(t) = twin_of(&perm) {
                    prop_assert_eq!(twin_of(&t), Some(perm.clone()));
                    prop_assert_eq!(t.prefix_pattern(), perm.prefix_pattern());
                }
            }
        }
    }
}
