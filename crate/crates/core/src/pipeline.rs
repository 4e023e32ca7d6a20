//! End-to-end construction of shortened universal cycles.
//!
//! For `n >= 4`: build the cluster graph, compress `i` twin cycles, remove
//! the gluing tour, take an Eulerian circuit from the descending cluster,
//! spell it as a word, glue the word into a cycle and relabel. Every
//! result passes the independent verifier before it is returned.

use crate::cluster::{matched_glue_family, ClusterGraph, GlueFamily, TwinCycle};
use crate::error::{Error, Result};
use crate::euler::{eulerian_circuit, Trail};
use crate::glue::glue;
use crate::perm::{CyclicWord, Permutation, Word};
use crate::verify::{coverage, factorial};
use crate::word_builder::{relabel_canonical, trail_to_word};

/// Optional knobs for [`build_shortened_ucycle`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Twin-cycle ids (positions in [`ClusterGraph::twin_cycles`]) to
    /// compress. Defaults to the first `i` cycles.
    pub selection: Option<Vec<usize>>,
    /// Shuffles the Eulerian circuit's edge choices.
    pub seed: Option<u64>,
}

/// Every intermediate of one construction.
#[derive(Clone, Debug)]
pub struct Construction {
    pub order: usize,
    pub shortening: usize,
    pub chosen: Vec<TwinCycle>,
    pub family: GlueFamily,
    /// The compressed graph with the gluing tour removed.
    pub remainder: ClusterGraph,
    pub trail: Trail,
    pub word: Word,
    /// The glued cycle before relabeling.
    pub glued: CyclicWord,
    pub cycle: CyclicWord,
}

/// The largest shortening count for order `n`, `(n-2)!`.
pub fn max_shortening(n: usize) -> usize {
    factorial(n.saturating_sub(2))
}

fn small_cycle(i: usize) -> CyclicWord {
    let letters = if i == 0 { vec![1, 4, 5, 2, 4, 3] } else { vec![1, 2, 3, 2] };
    CyclicWord::new(letters).expect("nonempty")
}

fn select(cycles: &[TwinCycle], i: usize, selection: Option<&[usize]>) -> Result<Vec<TwinCycle>> {
    let Some(ids) = selection else {
        return Ok(cycles[..i].to_vec());
    };
    if ids.len() != i {
        return Err(Error::InvalidSelection(format!(
            "{} cycle ids given for shortening count {i}",
            ids.len()
        )));
    }
    let mut chosen = Vec::with_capacity(ids.len());
    for &id in ids {
        let cycle = cycles.get(id).ok_or_else(|| {
            Error::InvalidSelection(format!("cycle id {id} out of range 0..{}", cycles.len()))
        })?;
        if chosen.iter().any(|c: &TwinCycle| c.id == id) {
            return Err(Error::InvalidSelection(format!("cycle id {id} repeated")));
        }
        chosen.push(cycle.clone());
    }
    Ok(chosen)
}

fn check_range(n: usize, i: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::OrderTooSmall { n, min: 3 });
    }
    let max = max_shortening(n);
    if i > max {
        return Err(Error::ShorteningOutOfRange { i, max });
    }
    Ok(())
}

fn self_check(z: &CyclicWord, n: usize, i: usize) -> Result<()> {
    let report = coverage(z, n)
        .ok_or_else(|| Error::ConstructionInvariant(format!("cycle shorter than {n}")))?;
    if !report.is_shortened_by(i) {
        return Err(Error::ConstructionInvariant(format!(
            "output fails verification:\n{report}"
        )));
    }
    Ok(())
}

/// Runs the full construction for `n >= 4` and returns all intermediates.
pub fn construct(n: usize, i: usize, options: &BuildOptions) -> Result<Construction> {
    check_range(n, i)?;
    if n < 4 {
        return Err(Error::OrderTooSmall { n, min: 4 });
    }
    let graph = ClusterGraph::build(n)?;
    let cycles = graph.twin_cycles();
    let chosen = select(&cycles, i, options.selection.as_deref())?;
    let compressed = graph.compress(&chosen)?;
    let family = matched_glue_family(n, &chosen)?;
    let remainder = compressed.remove_tour(&family)?;
    let start = Permutation::descending(n - 1);
    let trail = eulerian_circuit(&remainder, &start, options.seed)?;
    let word = trail_to_word(&trail, n)?;
    let glued = glue(&word, &family, n)?;
    let cycle = CyclicWord::new(relabel_canonical(&Word::new(glued.letters().to_vec())).into_letters())?;
    self_check(&cycle, n, i)?;
    Ok(Construction {
        order: n,
        shortening: i,
        chosen,
        family,
        remainder,
        trail,
        word,
        glued,
        cycle,
    })
}

/// A verified cyclic word of length `n! - i(n-1)` covering every
/// `n`-permutation once, `i(n-1)` of them through windows with equal
/// first and last letters. For `n = 3` the two fixed cycles `145243`
/// and `1232` are returned.
pub fn build_shortened_ucycle(n: usize, i: usize, options: &BuildOptions) -> Result<CyclicWord> {
    check_range(n, i)?;
    if n == 3 {
        if let Some(ids) = &options.selection {
            select(&[TwinCycle { id: 0, pairs: Vec::new() }], i, Some(ids))?;
        }
        let z = small_cycle(i);
        self_check(&z, n, i)?;
        return Ok(z);
    }
    Ok(construct(n, i, options)?.cycle)
}
