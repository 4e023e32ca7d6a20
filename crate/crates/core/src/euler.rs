//! Balance, strong connectivity and Eulerian circuits on cluster graphs.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cluster::{ClusterGraph, EdgeLabel};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// One step of a trail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrailEdge {
    pub id: usize,
    pub source: Permutation,
    pub target: Permutation,
    pub label: EdgeLabel,
}

/// A walk without repeated edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trail {
    edges: Vec<TrailEdge>,
}

impl Trail {
    /// Builds a trail from edge ids of `graph`, checking that consecutive
    /// edges meet head to tail and that no id repeats.
    pub fn from_ids(graph: &ClusterGraph, ids: &[usize]) -> Result<Self> {
        let mut seen = vec![false; graph.edge_count()];
        let mut edges = Vec::with_capacity(ids.len());
        for (step, &id) in ids.iter().enumerate() {
            let edge = graph.edges().get(id).ok_or_else(|| Error::InconsistentTrail {
                step,
                reason: format!("no edge with id {id}"),
            })?;
            if std::mem::replace(&mut seen[id], true) {
                return Err(Error::InconsistentTrail {
                    step,
                    reason: format!("edge {id} repeated"),
                });
            }
            let source = graph.cluster(edge.source).clone();
            if let Some(prev) = edges.last() {
                let prev: &TrailEdge = prev;
                if prev.target != source {
                    return Err(Error::InconsistentTrail {
                        step,
                        reason: format!("edge starts at {source}, previous ends at {}", prev.target),
                    });
                }
            }
            edges.push(TrailEdge {
                id,
                source,
                target: graph.cluster(edge.target).clone(),
                label: edge.label.clone(),
            });
        }
        Ok(Trail { edges })
    }

    pub fn edges(&self) -> &[TrailEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> Option<&Permutation> {
        self.edges.first().map(|e| &e.source)
    }

    pub fn end(&self) -> Option<&Permutation> {
        self.edges.last().map(|e| &e.target)
    }

    pub fn labels(&self) -> Vec<EdgeLabel> {
        self.edges.iter().map(|e| e.label.clone()).collect()
    }

    pub fn ids(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.id).collect()
    }
}

/// In-degree equals out-degree at every vertex.
pub fn is_balanced(graph: &ClusterGraph) -> bool {
    graph.in_degrees() == graph.out_degrees()
}

fn reachable(adj: &[Vec<usize>], from: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    seen
}

/// Every ordered pair of vertices with nonzero degree is joined by a
/// directed path. Vertices without edges are ignored.
pub fn strongly_connected(graph: &ClusterGraph) -> bool {
    let v = graph.vertex_count();
    let mut fwd = vec![Vec::new(); v];
    let mut bwd = vec![Vec::new(); v];
    let mut active = vec![false; v];
    for e in graph.edges() {
        fwd[e.source].push(e.target);
        bwd[e.target].push(e.source);
        active[e.source] = true;
        active[e.target] = true;
    }
    let Some(root) = active.iter().position(|&a| a) else {
        return true;
    };
    let there = reachable(&fwd, root);
    let back = reachable(&bwd, root);
    (0..v).all(|x| !active[x] || (there[x] && back[x]))
}

/// A closed trail through every edge, starting and ending at `start`.
///
/// Without a seed, each vertex hands out its unused edges in increasing id
/// order, so the result depends only on the graph. A seed shuffles each
/// vertex's edge order first.
pub fn eulerian_circuit(graph: &ClusterGraph, start: &Permutation, seed: Option<u64>) -> Result<Trail> {
    let s = graph
        .cluster_index(start)
        .ok_or_else(|| Error::UnknownCluster(start.clone()))?;
    if !is_balanced(graph) {
        return Err(Error::NotEulerian("unbalanced vertex".into()));
    }
    if !strongly_connected(graph) {
        return Err(Error::NotEulerian("not strongly connected".into()));
    }
    let mut adj = graph.adjacency();
    if adj[s].is_empty() {
        return Err(Error::StartIsolated(start.clone()));
    }
    if let Some(seed) = seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for list in &mut adj {
            list.shuffle(&mut rng);
        }
    }
    // edges are consumed from the front of each list
    let mut next = vec![0usize; adj.len()];
    let mut stack: Vec<(usize, Option<usize>)> = vec![(s, None)];
    let mut circuit = Vec::with_capacity(graph.edge_count());
    while let Some(&(v, via)) = stack.last() {
        if next[v] < adj[v].len() {
            let id = adj[v][next[v]];
            next[v] += 1;
            stack.push((graph.edges()[id].target, Some(id)));
        } else {
            stack.pop();
            if let Some(id) = via {
                circuit.push(id);
            }
        }
    }
    circuit.reverse();
    if circuit.len() != graph.edge_count() {
        return Err(Error::NotEulerian("circuit misses edges".into()));
    }
    Trail::from_ids(graph, &circuit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::{extended_glue_family, matched_glue_family};

    fn p(s: &str) -> Permutation {
        Permutation::parse_digits(s).unwrap()
    }

    fn assert_closed_circuit(g: &ClusterGraph, t: &Trail, start: &Permutation) {
        assert_eq!(t.len(), g.edge_count());
        assert_eq!(t.start(), Some(start));
        assert_eq!(t.end(), Some(start));
        let mut ids = t.ids();
        ids.sort();
        assert_eq!(ids, (0..g.edge_count()).collect::<Vec<_>>());
        for w in t.edges().windows(2) {
            assert_eq!(w[0].target, w[1].source);
        }
    }

    #[test]
    fn balance() {
        let g = ClusterGraph::build(4).unwrap();
        assert!(is_balanced(&g));
        let mut labels: Vec<EdgeLabel> = g.labels().cloned().collect();
        // 1243 goes 123 -> 132, not a loop
        labels.remove(1);
        let h = ClusterGraph::from_labels(4, labels).unwrap();
        assert!(!is_balanced(&h));
    }

    #[test]
    fn connectivity() {
        let g = ClusterGraph::build(4).unwrap();
        assert!(strongly_connected(&g));
        let h = g.remove_tour(&extended_glue_family(4).unwrap()).unwrap();
        assert!(strongly_connected(&h));
        assert_eq!(h.edge_count(), 14);
    }

    #[test]
    fn isolated_cluster_is_ignored() {
        // self-loops at two different clusters
        let labels = vec![
            EdgeLabel::plain(&p("1234")),
            EdgeLabel::plain(&p("4321")),
        ];
        let g = ClusterGraph::from_labels(4, labels.clone()).unwrap();
        assert!(!strongly_connected(&g));
        let g = ClusterGraph::from_labels(4, labels[..1].to_vec()).unwrap();
        assert!(strongly_connected(&g));
        let t = eulerian_circuit(&g, &p("123"), None).unwrap();
        assert_eq!(t.labels(), vec![EdgeLabel::plain(&p("1234"))]);
        assert!(matches!(eulerian_circuit(&g, &p("321"), None), Err(Error::StartIsolated(_))));
    }

    #[test]
    fn unbalanced_is_rejected() {
        let g = ClusterGraph::from_labels(4, vec![EdgeLabel::plain(&p("1324"))]).unwrap();
        assert!(matches!(eulerian_circuit(&g, &p("132"), None), Err(Error::NotEulerian(_))));
    }

    #[test]
    fn circuit_after_tour_removal() {
        let g = ClusterGraph::build(4).unwrap();
        let h = g.remove_tour(&matched_glue_family(4, &[]).unwrap()).unwrap();
        assert_eq!(h.edge_count(), 16);
        let start = p("321");
        let t = eulerian_circuit(&h, &start, None).unwrap();
        assert_closed_circuit(&h, &t, &start);
        assert_eq!(eulerian_circuit(&h, &start, None).unwrap(), t);
        let seeded = eulerian_circuit(&h, &start, Some(7)).unwrap();
        assert_closed_circuit(&h, &seeded, &start);
        assert_eq!(eulerian_circuit(&h, &start, Some(7)).unwrap(), seeded);
    }

    /// Every closed Eulerian circuit from `start`, by exhaustive search.
    fn all_circuits(g: &ClusterGraph, start: usize) -> Vec<Vec<usize>> {
        fn go(g: &ClusterGraph, at: usize, start: usize, used: &mut Vec<bool>, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if path.len() == g.edge_count() {
                if at == start {
                    out.push(path.clone());
                }
                return;
            }
            for e in g.edges() {
                if e.source == at && !used[e.id] {
                    used[e.id] = true;
                    path.push(e.id);
                    go(g, e.target, start, used, path, out);
                    path.pop();
                    used[e.id] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(g, start, start, &mut vec![false; g.edge_count()], &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn order_three_circuit_is_among_brute_force() {
        let g = ClusterGraph::build(3).unwrap();
        let start = p("21");
        let t = eulerian_circuit(&g, &start, None).unwrap();
        assert_eq!(t.len(), 6);
        let all = all_circuits(&g, g.cluster_index(&start).unwrap());
        assert!(!all.is_empty());
        assert!(all.contains(&t.ids()));
        for seed in 0..20 {
            let t = eulerian_circuit(&g, &start, Some(seed)).unwrap();
            assert!(all.contains(&t.ids()));
        }
    }

    #[test]
    fn trail_validation() {
        let g = ClusterGraph::build(3).unwrap();
        let id = |s: &str| g.edge_by_label(&EdgeLabel::plain(&p(s))).unwrap().id;
        assert!(Trail::from_ids(&g, &[id("123"), id("231")]).is_ok());
        assert!(Trail::from_ids(&g, &[id("123"), id("123")]).is_err());
        assert!(Trail::from_ids(&g, &[id("123"), id("321")]).is_err());
        assert!(Trail::from_ids(&g, &[99]).is_err());
    }
}
