//! Turning a trail of edge labels into a word whose windows spell the trail.

use crate::cluster::EdgeLabel;
use crate::error::{Error, Result};
use crate::euler::Trail;
use crate::perm::{reduce, Letter, Word};

/// A word `w` of length `len(trail) + n - 1` whose `i`-th `n`-window
/// reduces to the label of the `i`-th trail edge.
pub fn trail_to_word(trail: &Trail, n: usize) -> Result<Word> {
    word_from_labels(&trail.labels(), n)
}

/// Same as [`trail_to_word`], working directly on a label sequence.
///
/// The word grows one letter per label. A compressed label repeats the
/// first letter of the current window. A plain label ending in its maximum
/// appends a new maximum; otherwise the appended letter takes the value of
/// the window letter standing for `a_n + 1`, after every letter at or above
/// that value has been shifted up by one.
pub fn word_from_labels(labels: &[EdgeLabel], n: usize) -> Result<Word> {
    let Some(first) = labels.first() else {
        return Err(Error::EmptyInput);
    };
    for (step, label) in labels.iter().enumerate() {
        if label.letters().len() != n {
            return Err(Error::InconsistentTrail {
                step,
                reason: format!("label {label} does not have {n} letters"),
            });
        }
    }
    for (step, pair) in labels.windows(2).enumerate() {
        if pair[0].target_pattern() != pair[1].source_pattern() {
            return Err(Error::InconsistentTrail {
                step: step + 1,
                reason: format!("{} does not follow {}", pair[1], pair[0]),
            });
        }
    }

    let mut w: Vec<Letter> = first.to_letters();
    w.reserve(labels.len() - 1);
    for label in &labels[1..] {
        // the new window starts here; its first n - 1 letters are already in place
        let start = w.len() + 1 - n;
        let a = label.letters();
        if label.is_compressed() {
            w.push(w[start]);
            continue;
        }
        let last = a[n - 1];
        let x = if last as usize == n {
            w.iter().copied().max().expect("nonempty") + 1
        } else {
            let above = a[..n - 1]
                .iter()
                .position(|&v| v == last + 1)
                .expect("successor of the last entry sits in the window");
            let x = w[start + above];
            for letter in w.iter_mut() {
                if *letter >= x {
                    *letter += 1;
                }
            }
            x
        };
        w.push(x);
    }
    Ok(Word::new(w))
}

/// Relabels `w` onto `1..=m`, where `m` is its number of distinct letters.
pub fn relabel_canonical(w: &Word) -> Word {
    if w.is_empty() {
        return Word::default();
    }
    reduce(w.letters()).expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::ClusterGraph;
    use crate::perm::{covered_permutations, Permutation};

    fn p(s: &str) -> Permutation {
        Permutation::parse_digits(s).unwrap()
    }

    fn label(xs: &[Letter]) -> EdgeLabel {
        EdgeLabel::from_letters(xs).unwrap()
    }

    #[test]
    fn single_edge() {
        let w = word_from_labels(&[label(&[1, 3, 2, 4])], 4).unwrap();
        assert_eq!(w.letters(), &[1, 3, 2, 4]);
    }

    #[test]
    fn hand_simulated_step() {
        // 1234 then 2341: a_4 = 1, the entry 2 sits first, so x = w'_2 = 2
        let w = word_from_labels(&[label(&[1, 2, 3, 4]), label(&[2, 3, 4, 1])], 4).unwrap();
        assert_eq!(w.letters(), &[1, 3, 4, 5, 2]);
    }

    #[test]
    fn compressed_step_repeats_window_head() {
        let g = ClusterGraph::build(4).unwrap();
        let h = g.compress(&g.twin_cycles()[..1]).unwrap();
        let ids: Vec<usize> = ["1231", "2312", "3123"]
            .iter()
            .map(|s| {
                let xs: Vec<Letter> = s.chars().map(|c| c.to_digit(10).unwrap() as Letter).collect();
                h.edge_by_label(&label(&xs)).unwrap().id
            })
            .collect();
        let trail = Trail::from_ids(&h, &ids).unwrap();
        let w = trail_to_word(&trail, 4).unwrap();
        assert_eq!(w.len(), 6);
        for (win, edge) in w.letters().windows(4).zip(trail.edges()) {
            assert_eq!(reduce(win).unwrap().letters(), &edge.label.to_letters()[..]);
        }
        let covered: Vec<Permutation> = w
            .letters()
            .windows(4)
            .flat_map(|win| covered_permutations(win).unwrap())
            .collect();
        assert_eq!(covered.len(), 6);
        assert!(covered.contains(&p("2341")) && covered.contains(&p("1342")));
    }

    #[test]
    fn rejects_broken_trails() {
        assert_eq!(word_from_labels(&[], 4), Err(Error::EmptyInput));
        let r = word_from_labels(&[label(&[1, 2, 3, 4]), label(&[4, 3, 2, 1])], 4);
        assert!(matches!(r, Err(Error::InconsistentTrail { step: 1, .. })));
        let r = word_from_labels(&[label(&[1, 2, 3])], 4);
        assert!(matches!(r, Err(Error::InconsistentTrail { step: 0, .. })));
    }

    #[test]
    fn relabel_examples() {
        let w = Word::new(vec![5, 9, 7, 10, 8]);
        assert_eq!(relabel_canonical(&w).letters(), &[1, 4, 2, 5, 3]);
        let r = Word::new(vec![2, 1, 3, 1]);
        assert_eq!(relabel_canonical(&r), r);
        assert!(relabel_canonical(&Word::default()).is_empty());
    }

    #[test]
    fn relabel_keeps_window_coverage() {
        let w = Word::new(vec![12, -4, 7, 12, 30, 2, -4, 7]);
        let r = relabel_canonical(&w);
        for (a, b) in w.letters().windows(4).zip(r.letters().windows(4)) {
            assert_eq!(covered_permutations(a).ok(), covered_permutations(b).ok());
        }
    }
}
