//! The cluster graph of `n`-permutations.
//!
//! Vertices are the `(n-1)!` patterns of length `n - 1`; every
//! `n`-permutation `x` is an edge from the reduction of its first `n - 1`
//! entries to the reduction of its last `n - 1` entries. Twin pairs form
//! parallel double edges, and the double edges split into `(n-2)!`
//! disjoint cycles. Compressing a cycle replaces each of its double edges
//! by a single edge whose label repeats its first letter at the end.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{covered_permutations, reduce_to_perm, twin_of, Letter, Permutation, Word};

/// Largest order for which the full graph is materialised.
pub const MAX_GRAPH_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// The label is an `n`-permutation.
    Plain,
    /// The label repeats its first letter in last position and stands for a twin pair.
    Compressed,
}

/// The `n`-letter word carried by an edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeLabel {
    letters: Vec<u8>,
    kind: EdgeKind,
}

impl EdgeLabel {
    pub fn plain(p: &Permutation) -> Self {
        EdgeLabel {
            letters: p.entries().to_vec(),
            kind: EdgeKind::Plain,
        }
    }

    /// The compressed label standing for `p` and its twin, if `p` has one.
    pub fn compressed_for(p: &Permutation) -> Option<Self> {
        twin_of(p)?;
        let e = p.entries();
        let mut letters = reduce_to_perm(&e[..e.len() - 1]).entries().to_vec();
        letters.push(letters[0]);
        Some(EdgeLabel {
            letters,
            kind: EdgeKind::Compressed,
        })
    }

    /// Classifies an `n`-letter word as a plain or compressed label.
    pub fn from_letters(letters: &[Letter]) -> Result<Self> {
        let n = letters.len();
        if n < 2 {
            return Err(Error::Parse(format!("edge label too short: {letters:?}")));
        }
        if letters[0] == letters[n - 1] {
            let head = Permutation::from_letters(&letters[..n - 1])?;
            let mut letters = head.entries().to_vec();
            letters.push(letters[0]);
            Ok(EdgeLabel {
                letters,
                kind: EdgeKind::Compressed,
            })
        } else {
            Ok(EdgeLabel::plain(&Permutation::from_letters(letters)?))
        }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn to_letters(&self) -> Vec<Letter> {
        self.letters.iter().map(|&x| x as Letter).collect()
    }

    pub fn kind(&self) -> EdgeKind {
        self.kind
    }

    pub fn is_compressed(&self) -> bool {
        self.kind == EdgeKind::Compressed
    }

    /// The permutations this label stands for: one for plain, a twin pair for compressed.
    pub fn covered(&self) -> Vec<Permutation> {
        covered_permutations(&self.to_letters()).expect("edge labels are well formed")
    }

    pub fn source_pattern(&self) -> Permutation {
        reduce_to_perm(&self.letters[..self.letters.len() - 1])
    }

    pub fn target_pattern(&self) -> Permutation {
        reduce_to_perm(&self.letters[1..])
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.len() <= 9 {
            for x in &self.letters {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: usize,
    pub source: usize,
    pub target: usize,
    pub label: EdgeLabel,
}

/// Directed multigraph on clusters. Vertex indices follow the lexicographic
/// order of cluster patterns; edge ids follow the lexicographic order of labels.
#[derive(Clone, Debug)]
pub struct ClusterGraph {
    order: usize,
    clusters: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    edges: Vec<Edge>,
}

impl PartialEq for ClusterGraph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.edges == other.edges
    }
}

impl Eq for ClusterGraph {}

fn check_order(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::OrderTooSmall { n, min });
    }
    if n > MAX_GRAPH_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: MAX_GRAPH_ORDER,
        });
    }
    Ok(())
}

impl ClusterGraph {
    /// The uncompressed cluster graph for `n`-permutations, `n >= 3`.
    pub fn build(n: usize) -> Result<Self> {
        check_order(n, 3)?;
        let labels = Permutation::all(n).iter().map(EdgeLabel::plain).collect();
        Ok(Self::assemble(n, labels))
    }

    /// Builds a graph on all `(n-1)!` clusters from arbitrary labels of order `n`.
    pub fn from_labels(n: usize, labels: Vec<EdgeLabel>) -> Result<Self> {
        check_order(n, 3)?;
        let mut seen = BTreeSet::new();
        for label in &labels {
            if label.letters.len() != n {
                return Err(Error::Parse(format!("label {label} is not of order {n}")));
            }
            if !seen.insert(label.clone()) {
                return Err(Error::Parse(format!("duplicate edge label {label}")));
            }
        }
        Ok(Self::assemble(n, labels))
    }

    fn assemble(n: usize, mut labels: Vec<EdgeLabel>) -> Self {
        labels.sort();
        let clusters = Permutation::all(n - 1);
        let index: HashMap<Permutation, usize> = clusters
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        let edges = labels
            .into_iter()
            .enumerate()
            .map(|(id, label)| Edge {
                id,
                source: index[&label.source_pattern()],
                target: index[&label.target_pattern()],
                label,
            })
            .collect();
        ClusterGraph {
            order: n,
            clusters,
            index,
            edges,
        }
    }

    fn with_labels(&self, labels: Vec<EdgeLabel>) -> Self {
        Self::assemble(self.order, labels)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn clusters(&self) -> &[Permutation] {
        &self.clusters
    }

    pub fn cluster(&self, v: usize) -> &Permutation {
        &self.clusters[v]
    }

    pub fn cluster_index(&self, c: &Permutation) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.clusters.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> impl Iterator<Item = &EdgeLabel> {
        self.edges.iter().map(|e| &e.label)
    }

    pub fn edge_by_label(&self, label: &EdgeLabel) -> Option<&Edge> {
        self.edges
            .binary_search_by(|e| e.label.cmp(label))
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn has_plain_edge(&self, p: &Permutation) -> bool {
        self.edge_by_label(&EdgeLabel::plain(p)).is_some()
    }

    pub fn is_compressed(&self) -> bool {
        self.edges.iter().any(|e| e.label.is_compressed())
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.clusters.len()];
        for e in &self.edges {
            d[e.source] += 1;
        }
        d
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.clusters.len()];
        for e in &self.edges {
            d[e.target] += 1;
        }
        d
    }

    /// Outgoing edge ids per vertex, each list in increasing id order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.clusters.len()];
        for e in &self.edges {
            adj[e.source].push(e.id);
        }
        adj
    }

    /// Number of parallel edges from `source` to `target`.
    pub fn multiplicity(&self, source: usize, target: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.source == source && e.target == target)
            .count()
    }

    /// Twin pairs present as plain parallel edges, ordered by cluster.
    pub fn twin_pairs(&self) -> Vec<TwinPair> {
        let mut pairs = Vec::new();
        for e in &self.edges {
            if e.label.is_compressed() {
                continue;
            }
            let p = Permutation::new(e.label.letters.clone()).expect("plain label");
            if let Some(t) = twin_of(&p) {
                if p < t && self.has_plain_edge(&t) {
                    pairs.push(TwinPair {
                        cluster: self.clusters[e.source].clone(),
                        target: self.clusters[e.target].clone(),
                        low: p,
                        high: t,
                    });
                }
            }
        }
        pairs.sort_by(|a, b| a.cluster.cmp(&b.cluster).then(a.low.cmp(&b.low)));
        pairs
    }

    /// The disjoint cycles formed by double edges, sorted by the smallest
    /// cluster each visits and numbered in that order. Each cycle starts at
    /// its smallest cluster.
    pub fn twin_cycles(&self) -> Vec<TwinCycle> {
        let mut by_cluster: HashMap<Permutation, TwinPair> = HashMap::new();
        for pair in self.twin_pairs() {
            by_cluster.entry(pair.cluster.clone()).or_insert(pair);
        }
        let mut visited = vec![false; self.clusters.len()];
        let mut cycles = Vec::new();
        // clusters are in lexicographic order, so the first unvisited one is its cycle's minimum
        for (v, start) in self.clusters.iter().enumerate() {
            if visited[v] || !by_cluster.contains_key(start) {
                continue;
            }
            let mut pairs = Vec::new();
            let mut current = start.clone();
            let closed = loop {
                let Some(pair) = by_cluster.get(&current) else {
                    break false;
                };
                let idx = self.index[&current];
                if visited[idx] {
                    break false;
                }
                visited[idx] = true;
                pairs.push(pair.clone());
                current = pair.target.clone();
                if current == *start {
                    break true;
                }
            };
            if closed {
                cycles.push(TwinCycle {
                    id: cycles.len(),
                    pairs,
                });
            }
        }
        cycles
    }

    /// Replaces every double edge of the chosen cycles by one compressed edge.
    pub fn compress(&self, chosen: &[TwinCycle]) -> Result<ClusterGraph> {
        let canonical = self.twin_cycles();
        let mut used = BTreeSet::new();
        for cycle in chosen {
            for pair in &cycle.pairs {
                if !used.insert(pair.cluster.clone()) {
                    return Err(Error::InvalidSelection(format!(
                        "cycles overlap at cluster {}",
                        pair.cluster
                    )));
                }
            }
            if !canonical.iter().any(|c| c.pairs == cycle.pairs) {
                return Err(Error::InvalidSelection(format!(
                    "cycle {} is not a twin cycle of this graph",
                    cycle.id
                )));
            }
        }
        let mut drop = BTreeSet::new();
        let mut extra = Vec::new();
        for pair in chosen.iter().flat_map(|c| &c.pairs) {
            drop.insert(EdgeLabel::plain(&pair.low));
            drop.insert(EdgeLabel::plain(&pair.high));
            extra.push(pair.compressed_label());
        }
        let labels = self
            .labels()
            .filter(|l| !drop.contains(*l))
            .cloned()
            .chain(extra)
            .collect();
        Ok(self.with_labels(labels))
    }

    /// Removes the edges standing for the members of `family`. A twin pair
    /// that is compressed here must lie wholly inside the family, and its
    /// compressed edge is removed once.
    pub fn remove_tour(&self, family: &GlueFamily) -> Result<ClusterGraph> {
        let mut drop = BTreeSet::new();
        for member in family.members() {
            let plain = EdgeLabel::plain(member);
            if self.edge_by_label(&plain).is_some() {
                drop.insert(plain);
                continue;
            }
            let compressed = EdgeLabel::compressed_for(member)
                .filter(|l| self.edge_by_label(l).is_some())
                .filter(|_| twin_of(member).is_some_and(|t| family.contains(&t)));
            match compressed {
                Some(label) => {
                    drop.insert(label);
                }
                None => return Err(Error::InconsistentTour(member.clone())),
            }
        }
        let labels = self
            .labels()
            .filter(|l| !drop.contains(*l))
            .cloned()
            .collect();
        Ok(self.with_labels(labels))
    }
}

/// Two twins and the double edge they form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwinPair {
    pub cluster: Permutation,
    pub target: Permutation,
    /// The lexicographically smaller twin.
    pub low: Permutation,
    pub high: Permutation,
}

impl TwinPair {
    pub fn compressed_label(&self) -> EdgeLabel {
        EdgeLabel::compressed_for(&self.low).expect("twins have a compressed label")
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.low == *p || self.high == *p
    }
}

/// A cycle of double edges; `pairs[k].target == pairs[k + 1].cluster`, cyclically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwinCycle {
    pub id: usize,
    pub pairs: Vec<TwinPair>,
}

impl TwinCycle {
    pub fn clusters(&self) -> Vec<&Permutation> {
        self.pairs.iter().map(|p| &p.cluster).collect()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.pairs.iter().any(|pair| pair.contains(p))
    }
}

/// Which gluing family a [`GlueFamily`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// The `2n` permutations forming the gluing tour.
    Base,
    /// The base tour plus both twins of its members.
    Extended,
    /// The base tour plus those twins that lie in compressed cycles.
    Matched,
}

/// A family of `n`-permutations used to close a universal word into a cycle.
///
/// The base family lists its members in tour order: the descending column
/// first, then the second column. Added twins come after the tour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueFamily {
    kind: FamilyKind,
    order: usize,
    members: Vec<Permutation>,
}

impl GlueFamily {
    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.contains(p)
    }
}

fn perm(entries: Vec<usize>) -> Permutation {
    Permutation::new(entries.into_iter().map(|e| e as u8).collect()).expect("valid family member")
}

/// `(n-1, 1, 2, ..., n-2, n)`, the twin of `(n, 1, 2, ..., n-1)`.
pub fn rotated_twin(n: usize) -> Permutation {
    let mut v = vec![n - 1];
    v.extend(1..=n - 2);
    v.push(n);
    perm(v)
}

/// `(2, n, n-1, ..., 3, 1)`, the twin of `(1, n, n-1, ..., 2)`.
pub fn peak_twin(n: usize) -> Permutation {
    let mut v = vec![2];
    v.extend((3..=n).rev());
    v.push(1);
    perm(v)
}

/// The `2n` permutations of the gluing tour, in tour order.
pub fn glue_family(n: usize) -> Result<GlueFamily> {
    if n < 4 {
        return Err(Error::OrderTooSmall { n, min: 4 });
    }
    let mut members = Vec::with_capacity(2 * n);
    // (n, n-1, ..., k, 1, ..., k-1) for k = 2..=n, then the identity
    for k in 2..=n {
        let mut v: Vec<usize> = (k..=n).rev().collect();
        v.extend(1..k);
        members.push(perm(v));
    }
    members.push(perm((1..=n).collect()));
    // (1, ..., k, n, k+1, n-1, n-2, ..., k+2) for k = n-2 down to 1
    for k in (1..=n - 2).rev() {
        let mut v: Vec<usize> = (1..=k).collect();
        v.push(n);
        v.push(k + 1);
        v.extend((k + 2..n).rev());
        members.push(perm(v));
    }
    let mut v = vec![n, 1];
    v.extend((2..n).rev());
    members.push(perm(v));
    let mut v = vec![1, n];
    v.extend((2..n).rev());
    members.push(perm(v));
    Ok(GlueFamily {
        kind: FamilyKind::Base,
        order: n,
        members,
    })
}

/// The gluing tour plus the twins of its two members that have twins.
pub fn extended_glue_family(n: usize) -> Result<GlueFamily> {
    let mut family = glue_family(n)?;
    family.members.push(rotated_twin(n));
    family.members.push(peak_twin(n));
    family.kind = FamilyKind::Extended;
    Ok(family)
}

/// The gluing tour plus each extra twin whose pair belongs to a chosen cycle.
pub fn matched_glue_family(n: usize, chosen: &[TwinCycle]) -> Result<GlueFamily> {
    let mut family = glue_family(n)?;
    for extra in [rotated_twin(n), peak_twin(n)] {
        if chosen.iter().any(|c| c.contains(&extra)) {
            family.members.push(extra);
        }
    }
    family.kind = FamilyKind::Matched;
    Ok(family)
}

/// A word whose `n`-windows walk from cluster `a` to cluster `b` while every
/// window contains a consecutive triple reducing to 213 or 231.
///
/// The word is `a`, then a pivot letter (`n` after a descent, `0` after an
/// ascent), then `b` with its letters above the mean of `b`'s first two
/// entries raised by `n` and the rest lowered by `n`.
pub fn transition_walk(a: &Permutation, b: &Permutation, n: usize) -> Result<Word> {
    if n < 4 {
        return Err(Error::OrderTooSmall { n, min: 4 });
    }
    for c in [a, b] {
        if c.len() != n - 1 {
            return Err(Error::UnknownCluster(c.clone()));
        }
    }
    let ae = a.to_letters();
    let be = b.to_letters();
    let mut q = ae.clone();
    let pivot = if ae[n - 3] > ae[n - 2] { n as Letter } else { 0 };
    q.push(pivot);
    let pair_sum = be[0] + be[1];
    q.extend(be.iter().map(|&x| {
        if 2 * x > pair_sum {
            x + n as Letter
        } else {
            x - n as Letter
        }
    }));
    Ok(Word::new(q))
}
