//! Closing a universal word into a cyclic word.
//!
//! The input `w` must start and end with a descending `(n-1)`-pattern and
//! avoid the gluing family. Prepending `n + 1` letters (an ascending run
//! below `w`, a new maximum, and one bridge letter) and possibly lowering
//! the final letter yields a cycle whose wrap-around windows cover the
//! gluing family in tour order. The two optional twins of the family are
//! covered by the windows starting at the bridge letter and at the final
//! letter, which then repeat a letter at distance `n - 1`.

use std::collections::HashSet;

use crate::cluster::{extended_glue_family, glue_family, peak_twin, rotated_twin, GlueFamily};
use crate::error::{Error, Result};
use crate::perm::{covered_permutations, reduce, CyclicWord, Letter, Permutation, Word};

fn fail(msg: impl Into<String>) -> Error {
    Error::GluePrecondition(msg.into())
}

fn check_family(family: &GlueFamily, n: usize) -> Result<()> {
    if family.order() != n {
        return Err(fail(format!("family has order {}, expected {n}", family.order())));
    }
    let base = glue_family(n)?;
    if let Some(m) = base.members().iter().find(|m| !family.contains(m)) {
        return Err(fail(format!("family is missing tour member {m}")));
    }
    let ext = extended_glue_family(n)?;
    if let Some(m) = family.members().iter().find(|m| !ext.contains(m)) {
        return Err(fail(format!("family member {m} is not a gluing permutation")));
    }
    Ok(())
}

fn check_word(w: &[Letter], family: &GlueFamily, n: usize) -> Result<()> {
    let k = w.len();
    if k < n - 1 {
        return Err(fail(format!("word length {k} is below n - 1 = {}", n - 1)));
    }
    let descending = Permutation::descending(n - 1).to_word();
    if reduce(&w[..n - 1])? != descending {
        return Err(fail("first n - 1 letters do not reduce to the descending pattern"));
    }
    if reduce(&w[k - (n - 1)..])? != descending {
        return Err(fail("last n - 1 letters do not reduce to the descending pattern"));
    }
    let mut seen = HashSet::new();
    for (start, win) in w.windows(n).enumerate() {
        for p in covered_permutations(win)? {
            if family.contains(&p) {
                return Err(fail(format!("window at {start} covers family member {p}")));
            }
            if !seen.insert(p.clone()) {
                return Err(fail(format!("permutation {p} covered twice")));
            }
        }
    }
    Ok(())
}

/// The cyclic word of length `|w| + n + 1` covering the permutations of
/// `w` together with `family`, each exactly once.
pub fn glue(w: &Word, family: &GlueFamily, n: usize) -> Result<CyclicWord> {
    if n < 4 {
        return Err(Error::OrderTooSmall { n, min: 4 });
    }
    check_family(family, n)?;
    let w = w.letters();
    check_word(w, family, n)?;
    let k = w.len();
    let lo = *w.iter().min().expect("nonempty");
    let hi = *w.iter().max().expect("nonempty");
    let nl = n as Letter;

    let mut z: Vec<Letter> = Vec::with_capacity(k + n + 1);
    // z_1 .. z_{n-1}
    z.extend((1..nl).map(|i| lo - nl - 1 + i));
    let run_top = z[n - 2];
    // z_n
    z.push(hi + 1);
    // z_{n+1}
    z.push(if family.contains(&peak_twin(n)) {
        w[n - 2]
    } else {
        run_top + 1
    });
    // z_{n+2} .. z_{n+k}
    z.extend_from_slice(&w[..k - 1]);
    // z_{n+1+k}
    if family.contains(&rotated_twin(n)) {
        if k >= n {
            let before = &w[k - n..k - 1];
            if before.iter().any(|&x| x <= w[k - 1]) {
                return Err(fail("last letter is not below the rest of its window"));
            }
        }
        z.push(run_top);
    } else {
        z.push(w[k - 1]);
    }
    CyclicWord::new(z)
}
