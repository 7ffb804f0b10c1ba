//! Clique graphs of connected chordal graphs.
//!
//! Nodes are the maximal cliques; two cliques K, K' are adjacent exactly when
//! S = K ∩ K' is a minimal u-v separator for every u ∈ K∖S, v ∈ K'∖S. Each
//! edge carries the label S and the weight |S|. Since K∖S and K'∖S are cliques
//! and therefore each lie inside one component of the graph minus S, a single
//! representative pair decides adjacency, and minimality of S is automatic
//! (every s ∈ S is adjacent to both representatives).

use std::collections::HashMap;
use std::sync::Arc;

use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::maximal_cliques_ids;

/// Index of a clique node within its [`CliqueGraph`].
pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueGraphEdge {
    pub a: NodeId,
    pub b: NodeId,
    /// Vertex ids of the shared separator, sorted.
    pub label: Vec<usize>,
    pub weight: usize,
}

/// Strictly increasing list of the distinct edge weights of a clique graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightLevels {
    levels: Vec<usize>,
}

impl WeightLevels {
    pub fn t(&self) -> usize {
        self.levels.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.levels
    }

    /// 1-based level of a weight: `level_of(w(i)) == i`.
    pub fn level_of(&self, weight: usize) -> Option<usize> {
        self.levels.binary_search(&weight).ok().map(|p| p + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueGraph {
    vertex_names: Arc<[String]>,
    /// Each clique sorted by vertex id; the list sorted lexicographically, so
    /// node-id order is the canonical clique order.
    cliques: Arc<Vec<Vec<usize>>>,
    edges: Vec<CliqueGraphEdge>,
    adj: Vec<Vec<(NodeId, usize)>>,
}

impl CliqueGraph {
    pub(crate) fn from_parts(
        vertex_names: Arc<[String]>,
        mut cliques: Vec<Vec<usize>>,
        mut edges: Vec<(usize, usize, Vec<usize>)>,
    ) -> CliqueGraph {
        for c in &mut cliques {
            c.sort_unstable();
        }
        let mut perm: Vec<usize> = (0..cliques.len()).collect();
        perm.sort_by(|&i, &j| cliques[i].cmp(&cliques[j]));
        let mut rank = vec![0; cliques.len()];
        for (new, &old) in perm.iter().enumerate() {
            rank[old] = new;
        }
        let mut sorted: Vec<Vec<usize>> = perm.into_iter().map(|i| std::mem::take(&mut cliques[i])).collect();
        for c in &mut sorted {
            c.shrink_to_fit();
        }
        let mut out_edges: Vec<CliqueGraphEdge> = edges
            .drain(..)
            .map(|(a, b, mut label)| {
                label.sort_unstable();
                let (a, b) = (rank[a].min(rank[b]), rank[a].max(rank[b]));
                let weight = label.len();
                CliqueGraphEdge { a, b, label, weight }
            })
            .collect();
        out_edges.sort_by(|e, f| (e.a, e.b).cmp(&(f.a, f.b)));
        let mut adj = vec![Vec::new(); sorted.len()];
        for (idx, e) in out_edges.iter().enumerate() {
            adj[e.a].push((e.b, idx));
            adj[e.b].push((e.a, idx));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        CliqueGraph {
            vertex_names,
            cliques: Arc::new(sorted),
            edges: out_edges,
            adj,
        }
    }

    pub fn node_count(&self) -> usize {
        self.cliques.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[CliqueGraphEdge] {
        &self.edges
    }

    /// Neighbors of a node as (node, edge index) pairs, sorted by node.
    pub fn neighbors(&self, n: NodeId) -> &[(NodeId, usize)] {
        &self.adj[n]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub(crate) fn vertex_names_arc(&self) -> Arc<[String]> {
        Arc::clone(&self.vertex_names)
    }

    pub(crate) fn cliques_arc(&self) -> Arc<Vec<Vec<usize>>> {
        Arc::clone(&self.cliques)
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.vertex_names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn vertex_name(&self, id: usize) -> &str {
        &self.vertex_names[id]
    }

    /// Vertex ids of a clique, sorted.
    pub fn clique(&self, n: NodeId) -> &[usize] {
        &self.cliques[n]
    }

    pub fn clique_names(&self, n: NodeId) -> Vec<String> {
        self.cliques[n]
            .iter()
            .map(|&v| self.vertex_names[v].clone())
            .collect()
    }

    pub fn label_names(&self, e: &CliqueGraphEdge) -> Vec<String> {
        e.label.iter().map(|&v| self.vertex_names[v].clone()).collect()
    }

    /// Node whose clique is exactly the given vertex set, if any.
    pub fn node_by_vertices(&self, vertices: &[&str]) -> Option<NodeId> {
        let mut ids: Vec<usize> = vertices
            .iter()
            .map(|v| self.vertex_id(v))
            .collect::<Option<_>>()?;
        ids.sort_unstable();
        ids.dedup();
        self.cliques.binary_search(&ids).ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.cliques.is_empty() {
            return true;
        }
        let mut dsu = Dsu::new(self.cliques.len());
        for e in &self.edges {
            dsu.union(e.a, e.b);
        }
        dsu.groups().len() == 1
    }

    /// Distinct edge weights, ascending.
    pub fn weight_levels(&self) -> WeightLevels {
        let mut levels: Vec<usize> = self.edges.iter().map(|e| e.weight).collect();
        levels.sort_unstable();
        levels.dedup();
        WeightLevels { levels }
    }

    /// Deletes every edge whose label equals `s` (set equality); nodes stay.
    pub fn ominus(&self, s: &[&str]) -> CliqueGraph {
        let mut target: Vec<usize> = s.iter().filter_map(|v| self.vertex_id(v)).collect();
        target.sort_unstable();
        target.dedup();
        if target.len() != s.iter().collect::<std::collections::BTreeSet<_>>().len() {
            // Some name does not occur in this graph, so no label can match.
            return self.clone();
        }
        self.filter_edges(|e| e.label != target)
    }

    #[cfg(test)]
    pub(crate) fn ominus_ids(&self, label: &[usize]) -> CliqueGraph {
        self.filter_edges(|e| e.label != label)
    }

    /// The level graph: all edges of weight at most w(i) removed; i = 0 is
    /// the graph itself.
    pub fn level_graph(&self, i: usize) -> Result<CliqueGraph> {
        let levels = self.weight_levels();
        if i > levels.t() {
            return Err(Error::invalid(format!(
                "level {i} out of range 0..={}",
                levels.t()
            )));
        }
        if i == 0 {
            return Ok(self.clone());
        }
        let cutoff = levels.as_slice()[i - 1];
        Ok(self.filter_edges(|e| e.weight > cutoff))
    }

    fn filter_edges(&self, keep: impl Fn(&CliqueGraphEdge) -> bool) -> CliqueGraph {
        let edges: Vec<CliqueGraphEdge> = self.edges.iter().filter(|e| keep(e)).cloned().collect();
        let mut adj = vec![Vec::new(); self.cliques.len()];
        for (idx, e) in edges.iter().enumerate() {
            adj[e.a].push((e.b, idx));
            adj[e.b].push((e.a, idx));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        CliqueGraph {
            vertex_names: Arc::clone(&self.vertex_names),
            cliques: Arc::clone(&self.cliques),
            edges,
            adj,
        }
    }

    /// The unit partition: components after deleting every minimum-weight
    /// edge. With no edges at all, every node is its own component.
    pub fn min_weight_components(&self) -> Vec<Vec<NodeId>> {
        let mut dsu = Dsu::new(self.cliques.len());
        if let Some(min_w) = self.edges.iter().map(|e| e.weight).min() {
            for e in &self.edges {
                if e.weight > min_w {
                    dsu.union(e.a, e.b);
                }
            }
        }
        dsu.groups()
    }

    /// Connected components of the whole clique graph.
    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let mut dsu = Dsu::new(self.cliques.len());
        for e in &self.edges {
            dsu.union(e.a, e.b);
        }
        dsu.groups()
    }

    /// Subgraph induced by `nodes`, re-canonicalized: the vertex universe
    /// shrinks to the union of the kept cliques.
    pub fn induced(&self, nodes: &[NodeId]) -> CliqueGraph {
        let mut keep = nodes.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut vertex_ids: Vec<usize> = keep.iter().flat_map(|&n| self.cliques[n].iter().copied()).collect();
        vertex_ids.sort_unstable();
        vertex_ids.dedup();
        let names: Arc<[String]> = vertex_ids
            .iter()
            .map(|&v| self.vertex_names[v].clone())
            .collect::<Vec<_>>()
            .into();
        let vmap: HashMap<usize, usize> = vertex_ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let nmap: HashMap<NodeId, usize> = keep.iter().enumerate().map(|(i, &n)| (n, i)).collect();
        let cliques: Vec<Vec<usize>> = keep
            .iter()
            .map(|&n| self.cliques[n].iter().map(|v| vmap[v]).collect())
            .collect();
        let edges: Vec<(usize, usize, Vec<usize>)> = self
            .edges
            .iter()
            .filter(|e| nmap.contains_key(&e.a) && nmap.contains_key(&e.b))
            .map(|e| {
                (
                    nmap[&e.a],
                    nmap[&e.b],
                    e.label.iter().map(|v| vmap[v]).collect(),
                )
            })
            .collect();
        CliqueGraph::from_parts(names, cliques, edges)
    }
}

/// Builds the clique graph of a connected chordal graph.
pub fn build_clique_graph(g: &Graph) -> Result<CliqueGraph> {
    if g.is_empty() {
        return Err(Error::invalid("clique graph of an empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let cliques = maximal_cliques_ids(g)?;
    let names: Arc<[String]> = g.vertices().to_vec().into();
    let mut edges = Vec::new();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            let label: Vec<usize> = intersect_sorted(&cliques[i], &cliques[j]);
            if label.is_empty() {
                continue;
            }
            let u = *cliques[i].iter().find(|v| !label.contains(v)).expect(
                "distinct maximal cliques each own a private vertex",
            );
            let v = *cliques[j].iter().find(|v| !label.contains(v)).unwrap();
            if g.separates_ids(&label, u, v)? {
                edges.push((i, j, label));
            }
        }
    }
    Ok(CliqueGraph::from_parts(names, cliques, edges))
}

pub(crate) fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit::{g1, p3, s3};

    fn edge_view(cg: &CliqueGraph) -> Vec<(Vec<String>, Vec<String>, Vec<String>, usize)> {
        cg.edges()
            .iter()
            .map(|e| {
                (
                    cg.clique_names(e.a),
                    cg.clique_names(e.b),
                    cg.label_names(e),
                    e.weight,
                )
            })
            .collect()
    }

    #[test]
    fn clique_graph_of_p3() {
        let cg = build_clique_graph(&p3()).unwrap();
        assert_eq!(cg.node_count(), 2);
        assert_eq!(
            edge_view(&cg),
            vec![(
                vec!["a".to_string(), "b".into()],
                vec!["b".to_string(), "c".into()],
                vec!["b".to_string()],
                1
            )]
        );
    }

    #[test]
    fn clique_graph_of_s3_is_a_triangle() {
        let cg = build_clique_graph(&s3()).unwrap();
        assert_eq!(cg.node_count(), 3);
        assert_eq!(cg.edge_count(), 3);
        for e in cg.edges() {
            assert_eq!(cg.label_names(e), vec!["c".to_string()]);
            assert_eq!(e.weight, 1);
        }
    }

    #[test]
    fn clique_graph_of_g1() {
        let cg = build_clique_graph(&g1()).unwrap();
        let k1 = cg.node_by_vertices(&["a", "b", "c"]).unwrap();
        let k2 = cg.node_by_vertices(&["b", "c", "d"]).unwrap();
        let k3 = cg.node_by_vertices(&["c", "e"]).unwrap();
        let mut got: Vec<(NodeId, NodeId, Vec<String>, usize)> = cg
            .edges()
            .iter()
            .map(|e| (e.a, e.b, cg.label_names(e), e.weight))
            .collect();
        got.sort();
        let mut want = vec![
            (k1, k2, vec!["b".to_string(), "c".into()], 2),
            (k1, k3, vec!["c".to_string()], 1),
            (k2, k3, vec!["c".to_string()], 1),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn ominus_examples() {
        let s3cg = build_clique_graph(&s3()).unwrap();
        assert_eq!(s3cg.ominus(&["c"]).edge_count(), 0);

        let cg = build_clique_graph(&g1()).unwrap();
        let k1 = cg.node_by_vertices(&["a", "b", "c"]).unwrap();
        let k2 = cg.node_by_vertices(&["b", "c", "d"]).unwrap();
        let minus_c = cg.ominus(&["c"]);
        assert_eq!(minus_c.edge_count(), 1);
        assert_eq!((minus_c.edges()[0].a, minus_c.edges()[0].b), (k1, k2));

        let minus_bc = cg.ominus(&["b", "c"]);
        assert_eq!(minus_bc.edge_count(), 2);
        assert!(minus_bc.edges().iter().all(|e| e.weight == 1));
    }

    #[test]
    fn weight_levels_examples() {
        let cg = build_clique_graph(&g1()).unwrap();
        assert_eq!(cg.weight_levels().as_slice(), &[1, 2]);
        let p3cg = build_clique_graph(&p3()).unwrap();
        assert_eq!(p3cg.weight_levels().as_slice(), &[1]);
        let single = build_clique_graph(&Graph::from_edges(&[("a", "b")]).unwrap()).unwrap();
        assert_eq!(single.weight_levels().t(), 0);
    }

    #[test]
    fn level_graph_examples() {
        let cg = build_clique_graph(&g1()).unwrap();
        assert_eq!(cg.level_graph(0).unwrap(), cg);
        assert_eq!(cg.level_graph(1).unwrap().edge_count(), 1);
        assert_eq!(cg.level_graph(2).unwrap().edge_count(), 0);
        assert!(cg.level_graph(3).is_err());
    }

    #[test]
    fn min_weight_components_examples() {
        let cg = build_clique_graph(&g1()).unwrap();
        let k1 = cg.node_by_vertices(&["a", "b", "c"]).unwrap();
        let k2 = cg.node_by_vertices(&["b", "c", "d"]).unwrap();
        let k3 = cg.node_by_vertices(&["c", "e"]).unwrap();
        assert_eq!(cg.min_weight_components(), vec![vec![k1, k2], vec![k3]]);

        let s3cg = build_clique_graph(&s3()).unwrap();
        assert_eq!(s3cg.min_weight_components().len(), 3);
        let p3cg = build_clique_graph(&p3()).unwrap();
        assert_eq!(p3cg.min_weight_components().len(), 2);
    }

    #[test]
    fn build_rejects_bad_inputs() {
        let square = Graph::from_edges(&[("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")]).unwrap();
        assert!(matches!(build_clique_graph(&square), Err(Error::NotChordal)));
        let two = Graph::new(&["a", "b"], &[]).unwrap();
        assert!(matches!(build_clique_graph(&two), Err(Error::Disconnected)));
    }

    // Every edge inside a unit is strictly heavier than the minimum weight,
    // and all edges crossing two fixed units carry one label.
    #[test]
    fn unit_edges_heavier_and_crossings_share_labels() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let g = crate::testkit::random_chordal(18, 6, rng.gen()).unwrap();
            let cg = build_clique_graph(&g).unwrap();
            if cg.edge_count() == 0 {
                continue;
            }
            let min_w = cg.edges().iter().map(|e| e.weight).min().unwrap();
            let comps = cg.min_weight_components();
            let mut unit_of = vec![0; cg.node_count()];
            for (u, comp) in comps.iter().enumerate() {
                for &n in comp {
                    unit_of[n] = u;
                }
            }
            let mut crossing_label: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
            for e in cg.edges() {
                let (ua, ub) = (unit_of[e.a], unit_of[e.b]);
                if ua == ub {
                    assert!(e.weight > min_w);
                } else {
                    assert_eq!(e.weight, min_w);
                    let key = (ua.min(ub), ua.max(ub));
                    let prev = crossing_label.entry(key).or_insert_with(|| e.label.clone());
                    assert_eq!(*prev, e.label);
                }
            }
        }
    }

    // Deleting all edges with a minimum-weight label keeps the maximal
    // v-cliques of every vertex v outside the label in one component.
    #[test]
    fn ominus_keeps_vertex_cliques_together() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..40 {
            let g = crate::testkit::random_chordal(30, 8, rng.gen()).unwrap();
            let cg = build_clique_graph(&g).unwrap();
            let min_w = match cg.edges().iter().map(|e| e.weight).min() {
                Some(w) => w,
                None => continue,
            };
            for e in cg.edges().iter().filter(|e| e.weight == min_w) {
                let label = e.label.clone();
                let remaining = cg.ominus_ids(&label);
                let comps = remaining.components();
                let mut comp_of = vec![0; cg.node_count()];
                for (i, comp) in comps.iter().enumerate() {
                    for &n in comp {
                        comp_of[n] = i;
                    }
                }
                for v in 0..cg.vertex_names().len() {
                    if label.contains(&v) {
                        continue;
                    }
                    let holders: Vec<NodeId> = (0..cg.node_count())
                        .filter(|&n| cg.clique(n).contains(&v))
                        .collect();
                    assert!(
                        holders.windows(2).all(|w| comp_of[w[0]] == comp_of[w[1]]),
                        "v-cliques split by ominus"
                    );
                }
            }
        }
    }

    // Peeling one level at a time agrees with removing a weight prefix.
    #[test]
    fn level_graph_matches_iterated_min_weight_deletion() {
        let cg = build_clique_graph(&g1()).unwrap();
        let t = cg.weight_levels().t();
        let mut peeled = cg.clone();
        for i in 1..=t {
            let min_w = peeled.edges().iter().map(|e| e.weight).min().unwrap();
            peeled = peeled.filter_edges(|e| e.weight > min_w);
            assert_eq!(peeled, cg.level_graph(i).unwrap());
        }
    }
}
