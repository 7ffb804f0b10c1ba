//! Layer structures of clique graphs.
//!
//! The units are the connected components of the clique graph after deleting
//! every minimum-weight edge. Unit pairs joined by any crossing edge become
//! unit edges; all crossing edges between two fixed units carry one label, so
//! unit-edge labels are well defined. Rooting at the unit of a chosen clique
//! arranges units into layers by distance; every nonroot unit has exactly one
//! neighbor in the layer above (its parent), and same-layer adjacency groups
//! units into bags that share their parent and their edge label.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use crate::clique_graph::{intersect_sorted, CliqueGraph, CliqueGraphEdge, NodeId};
use crate::dsu::Dsu;
use crate::error::{Error, Result};

pub type UnitId = usize;

/// A connected component of the clique graph after min-weight deletion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unit {
    cliques: Vec<NodeId>,
    vertex_span: Vec<usize>,
}

impl Unit {
    /// Clique-graph nodes contained in this unit, sorted.
    pub fn cliques(&self) -> &[NodeId] {
        &self.cliques
    }

    /// Union of the member cliques' vertex ids, sorted.
    pub fn vertex_span(&self) -> &[usize] {
        &self.vertex_span
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitEdge {
    pub a: UnitId,
    pub b: UnitId,
    pub label: Vec<usize>,
    pub weight: usize,
}

#[derive(Debug, Clone)]
pub struct LayerStructure {
    vertex_names: Arc<[String]>,
    cliques: Arc<Vec<Vec<usize>>>,
    nodes: Vec<NodeId>,
    h_edges: Vec<CliqueGraphEdge>,
    units: Vec<Unit>,
    root: UnitId,
    unit_edges: Vec<UnitEdge>,
    unit_adj: Vec<Vec<(UnitId, usize)>>,
    layer_of: Vec<usize>,
    parent_of: Vec<Option<UnitId>>,
    children_of: Vec<Vec<UnitId>>,
    bags: Vec<Vec<UnitId>>,
    vertex_unit: HashMap<usize, UnitId>,
}

/// Builds the layer structure of a connected clique graph rooted at the unit
/// of clique `k`.
pub fn build_layer_structure(h: &CliqueGraph, k: NodeId) -> Result<LayerStructure> {
    if k >= h.node_count() {
        return Err(Error::invalid("root clique is not a node of the graph"));
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let nodes: Vec<NodeId> = (0..h.node_count()).collect();
    Ok(layer_structure_of_component(h, &nodes, k))
}

/// Core constructor, shared with the solver which roots layer structures on
/// components of level graphs. `comp` must be sorted, connected within `cg`,
/// and contain `root`.
pub(crate) fn layer_structure_of_component(
    cg: &CliqueGraph,
    comp: &[NodeId],
    root: NodeId,
) -> LayerStructure {
    debug_assert!(comp.binary_search(&root).is_ok());
    let local: HashMap<NodeId, usize> = comp.iter().enumerate().map(|(i, &n)| (n, i)).collect();
    let h_edges: Vec<CliqueGraphEdge> = cg
        .edges()
        .iter()
        .filter(|e| local.contains_key(&e.a) && local.contains_key(&e.b))
        .cloned()
        .collect();
    let min_weight = h_edges.iter().map(|e| e.weight).min();

    // Units: components after deleting the minimum-weight edges.
    let mut dsu = Dsu::new(comp.len());
    if let Some(min_w) = min_weight {
        for e in &h_edges {
            if e.weight > min_w {
                dsu.union(local[&e.a], local[&e.b]);
            }
        }
    }
    let units: Vec<Unit> = dsu
        .groups()
        .into_iter()
        .map(|group| {
            let cliques: Vec<NodeId> = group.into_iter().map(|i| comp[i]).collect();
            let mut span: Vec<usize> = cliques
                .iter()
                .flat_map(|&n| cg.clique(n).iter().copied())
                .collect();
            span.sort_unstable();
            span.dedup();
            Unit {
                cliques,
                vertex_span: span,
            }
        })
        .collect();
    let mut unit_of_node: HashMap<NodeId, UnitId> = HashMap::new();
    for (u, unit) in units.iter().enumerate() {
        for &n in &unit.cliques {
            unit_of_node.insert(n, u);
        }
    }

    // Unit edges from the crossing (minimum-weight) edges; every crossing
    // edge between two fixed units carries the same label.
    let mut edge_map: BTreeMap<(UnitId, UnitId), (Vec<usize>, usize)> = BTreeMap::new();
    if let Some(min_w) = min_weight {
        for e in &h_edges {
            if e.weight != min_w {
                continue;
            }
            let (ua, ub) = (unit_of_node[&e.a], unit_of_node[&e.b]);
            debug_assert_ne!(ua, ub, "a minimum-weight edge never stays inside a unit");
            let key = (ua.min(ub), ua.max(ub));
            match edge_map.get(&key) {
                None => {
                    edge_map.insert(key, (e.label.clone(), e.weight));
                }
                Some((label, _)) => debug_assert_eq!(*label, e.label, "crossing labels agree"),
            }
        }
    }
    let unit_edges: Vec<UnitEdge> = edge_map
        .into_iter()
        .map(|((a, b), (label, weight))| UnitEdge { a, b, label, weight })
        .collect();
    let mut unit_adj = vec![Vec::new(); units.len()];
    for (idx, e) in unit_edges.iter().enumerate() {
        unit_adj[e.a].push((e.b, idx));
        unit_adj[e.b].push((e.a, idx));
    }
    for nbrs in &mut unit_adj {
        nbrs.sort_unstable();
    }

    // Layers by distance from the root unit.
    let root_unit = unit_of_node[&root];
    let mut layer_of = vec![usize::MAX; units.len()];
    layer_of[root_unit] = 0;
    let mut queue = std::collections::VecDeque::from([root_unit]);
    while let Some(u) = queue.pop_front() {
        for &(v, _) in &unit_adj[u] {
            if layer_of[v] == usize::MAX {
                layer_of[v] = layer_of[u] + 1;
                queue.push_back(v);
            }
        }
    }
    debug_assert!(layer_of.iter().all(|&l| l != usize::MAX));

    let mut parent_of = vec![None; units.len()];
    let mut children_of = vec![Vec::new(); units.len()];
    for u in 0..units.len() {
        if u == root_unit {
            continue;
        }
        let above: Vec<UnitId> = unit_adj[u]
            .iter()
            .map(|&(v, _)| v)
            .filter(|&v| layer_of[v] + 1 == layer_of[u])
            .collect();
        debug_assert_eq!(above.len(), 1, "exactly one neighbor one layer up");
        parent_of[u] = Some(above[0]);
        children_of[above[0]].push(u);
    }

    // Bags: same-layer adjacency classes.
    let mut bag_dsu = Dsu::new(units.len());
    for e in &unit_edges {
        if layer_of[e.a] == layer_of[e.b] {
            bag_dsu.union(e.a, e.b);
        }
    }
    let bags = bag_dsu.groups();

    // U^v: the unique unit holding a maximal v-clique at minimum layer.
    // Deeper layers may hold v in several units; only the minimum layer is
    // guaranteed (and asserted) unique.
    let mut best: HashMap<usize, (UnitId, bool)> = HashMap::new();
    for (u, unit) in units.iter().enumerate() {
        for &v in &unit.vertex_span {
            match best.get_mut(&v) {
                None => {
                    best.insert(v, (u, false));
                }
                Some((b, tied)) => {
                    if layer_of[u] < layer_of[*b] {
                        *b = u;
                        *tied = false;
                    } else if layer_of[u] == layer_of[*b] && u != *b {
                        *tied = true;
                    }
                }
            }
        }
    }
    debug_assert!(
        best.values().all(|&(_, tied)| !tied),
        "two units at the minimum layer hold a v-clique"
    );
    let vertex_unit: HashMap<usize, UnitId> = best.into_iter().map(|(v, (u, _))| (v, u)).collect();

    LayerStructure {
        vertex_names: cg.vertex_names_arc(),
        cliques: cg.cliques_arc(),
        nodes: comp.to_vec(),
        h_edges,
        units,
        root: root_unit,
        unit_edges,
        unit_adj,
        layer_of,
        parent_of,
        children_of,
        bags,
        vertex_unit,
    }
}

impl LayerStructure {
    pub fn unit_count(&self) -> usize {
        self.units.len()
    }

    pub fn units(&self) -> &[Unit] {
        &self.units
    }

    pub fn unit(&self, u: UnitId) -> &Unit {
        &self.units[u]
    }

    pub fn root(&self) -> UnitId {
        self.root
    }

    pub fn layer_of(&self, u: UnitId) -> usize {
        self.layer_of[u]
    }

    pub fn parent_of(&self, u: UnitId) -> Option<UnitId> {
        self.parent_of[u]
    }

    pub fn unit_edges(&self) -> &[UnitEdge] {
        &self.unit_edges
    }

    /// Units grouped by layer, inner lists sorted.
    pub fn layers(&self) -> Vec<Vec<UnitId>> {
        let depth = self.layer_of.iter().copied().max().map_or(0, |d| d + 1);
        let mut out = vec![Vec::new(); depth];
        for (u, &l) in self.layer_of.iter().enumerate() {
            out[l].push(u);
        }
        out
    }

    /// Maximal same-layer adjacency classes, each sorted.
    pub fn bags(&self) -> &[Vec<UnitId>] {
        &self.bags
    }

    /// Clique-graph nodes of the underlying component, sorted.
    pub fn component_nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn clique_vertex_names(&self, n: NodeId) -> Vec<String> {
        self.cliques[n]
            .iter()
            .map(|&v| self.vertex_names[v].clone())
            .collect()
    }

    pub(crate) fn unit_of_vertex_id(&self, v: usize) -> Option<UnitId> {
        self.vertex_unit.get(&v).copied()
    }

    /// Plain adjacency lists of the unit graph.
    pub fn unit_adjacency(&self) -> Vec<Vec<UnitId>> {
        self.unit_adj
            .iter()
            .map(|nbrs| nbrs.iter().map(|&(v, _)| v).collect())
            .collect()
    }

    /// The unique unit containing a maximal v-clique closest to the root.
    pub fn unit_of_vertex(&self, v: &str) -> Result<UnitId> {
        let id = self
            .vertex_names
            .binary_search_by(|n| n.as_str().cmp(v))
            .map_err(|_| Error::invalid(format!("unknown vertex '{v}'")))?;
        self.unit_of_vertex_id(id)
            .ok_or_else(|| Error::invalid(format!("vertex '{v}' is not spanned by this structure")))
    }

    /// All strict descendants of `u` in the parent tree, sorted.
    pub fn descendants(&self, u: UnitId) -> Vec<UnitId> {
        let mut out = Vec::new();
        let mut stack = self.children_of[u].clone();
        while let Some(x) = stack.pop() {
            out.push(x);
            stack.extend(self.children_of[x].iter().copied());
        }
        out.sort_unstable();
        out
    }

    fn fmt_unit(&self, u: UnitId) -> String {
        format!("U{u}")
    }

    fn fmt_label(&self, label: &[usize]) -> String {
        let names: Vec<&str> = label.iter().map(|&v| self.vertex_names[v].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Runs every structural check and reports pass/fail per property with a
    /// counterexample on failure.
    pub fn validate_properties(&self) -> PropertyReport {
        let checks = vec![
            PropertyCheck::new("crossing-paths-carry-edge-label", self.check_paths_carry_label()),
            PropertyCheck::new(
                "equal-label-edges-pairwise-adjacent",
                self.check_equal_label_adjacency(),
            ),
            PropertyCheck::new("unique-parent-in-previous-layer", self.check_unique_parent()),
            PropertyCheck::new(
                "same-layer-adjacency-iff-shared-parent-and-label",
                self.check_bag_criterion(),
            ),
            PropertyCheck::new(
                "edge-label-equals-span-intersection",
                self.check_label_is_span_intersection(),
            ),
            PropertyCheck::new(
                "min-layer-vertex-cliques-in-one-unit",
                self.check_vertex_entry_unit(),
            ),
            PropertyCheck::new(
                "vertex-units-within-closed-descendants",
                self.check_vertex_units_are_descendants(),
            ),
            PropertyCheck::new(
                "bag-crossing-edges-have-common-parent-neighbor",
                self.check_bag_entrance(),
            ),
        ];
        PropertyReport { checks }
    }

    fn check_paths_carry_label(&self) -> Option<String> {
        for e in &self.unit_edges {
            // Every path between the endpoints must use an edge labeled like
            // this one, i.e. removing all such edges disconnects them.
            let mut seen = vec![false; self.units.len()];
            let mut stack = vec![e.a];
            seen[e.a] = true;
            while let Some(u) = stack.pop() {
                for &(v, idx) in &self.unit_adj[u] {
                    if self.unit_edges[idx].label == e.label || seen[v] {
                        continue;
                    }
                    seen[v] = true;
                    stack.push(v);
                }
            }
            if seen[e.b] {
                return Some(format!(
                    "{}-{} path avoids label {}",
                    self.fmt_unit(e.a),
                    self.fmt_unit(e.b),
                    self.fmt_label(&e.label)
                ));
            }
        }
        None
    }

    fn check_equal_label_adjacency(&self) -> Option<String> {
        let edge_at: HashMap<(UnitId, UnitId), &UnitEdge> = self
            .unit_edges
            .iter()
            .map(|e| ((e.a, e.b), e))
            .collect();
        for e in &self.unit_edges {
            for f in &self.unit_edges {
                if e.label != f.label || (e.a, e.b) >= (f.a, f.b) {
                    continue;
                }
                let mut ends = vec![e.a, e.b, f.a, f.b];
                ends.sort_unstable();
                ends.dedup();
                for i in 0..ends.len() {
                    for j in i + 1..ends.len() {
                        match edge_at.get(&(ends[i], ends[j])) {
                            None => {
                                return Some(format!(
                                    "{} and {} share label {} but {} !~ {}",
                                    self.fmt_unit(e.a),
                                    self.fmt_unit(f.a),
                                    self.fmt_label(&e.label),
                                    self.fmt_unit(ends[i]),
                                    self.fmt_unit(ends[j])
                                ))
                            }
                            Some(g) if g.label != e.label => {
                                return Some(format!(
                                    "edge {}-{} should carry label {}",
                                    self.fmt_unit(ends[i]),
                                    self.fmt_unit(ends[j]),
                                    self.fmt_label(&e.label)
                                ))
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        None
    }

    fn check_unique_parent(&self) -> Option<String> {
        for u in 0..self.units.len() {
            if u == self.root {
                continue;
            }
            let above = self.unit_adj[u]
                .iter()
                .filter(|&&(v, _)| self.layer_of[v] + 1 == self.layer_of[u])
                .count();
            if above != 1 {
                return Some(format!(
                    "{} has {above} neighbors in layer {}",
                    self.fmt_unit(u),
                    self.layer_of[u] - 1
                ));
            }
        }
        None
    }

    fn check_bag_criterion(&self) -> Option<String> {
        let edge_at: HashMap<(UnitId, UnitId), &UnitEdge> = self
            .unit_edges
            .iter()
            .map(|e| ((e.a, e.b), e))
            .collect();
        let parent_label = |u: UnitId| -> Option<&Vec<usize>> {
            let p = self.parent_of[u]?;
            let key = (u.min(p), u.max(p));
            edge_at.get(&key).map(|e| &e.label)
        };
        for u in 0..self.units.len() {
            for v in u + 1..self.units.len() {
                if self.layer_of[u] != self.layer_of[v] || self.layer_of[u] == 0 {
                    continue;
                }
                let adjacent = edge_at.contains_key(&(u, v));
                let same_parentage = self.parent_of[u] == self.parent_of[v]
                    && parent_label(u) == parent_label(v);
                if adjacent != same_parentage {
                    return Some(format!(
                        "{} ~ {}: adjacency {} but shared parent+label {}",
                        self.fmt_unit(u),
                        self.fmt_unit(v),
                        adjacent,
                        same_parentage
                    ));
                }
            }
        }
        None
    }

    fn check_label_is_span_intersection(&self) -> Option<String> {
        for e in &self.unit_edges {
            let want = intersect_sorted(
                &self.units[e.a].vertex_span,
                &self.units[e.b].vertex_span,
            );
            if e.label != want {
                return Some(format!(
                    "edge {}-{} labeled {}, spans intersect in {}",
                    self.fmt_unit(e.a),
                    self.fmt_unit(e.b),
                    self.fmt_label(&e.label),
                    self.fmt_label(&want)
                ));
            }
        }
        None
    }

    fn units_spanning(&self, v: usize) -> Vec<UnitId> {
        (0..self.units.len())
            .filter(|&u| self.units[u].vertex_span.binary_search(&v).is_ok())
            .collect()
    }

    fn check_vertex_entry_unit(&self) -> Option<String> {
        let mut verts: Vec<usize> = self.vertex_unit.keys().copied().collect();
        verts.sort_unstable();
        for v in verts {
            let holders = self.units_spanning(v);
            let min_layer = holders.iter().map(|&u| self.layer_of[u]).min()?;
            let at_min: Vec<UnitId> = holders
                .iter()
                .copied()
                .filter(|&u| self.layer_of[u] == min_layer)
                .collect();
            if at_min.len() != 1 {
                return Some(format!(
                    "vertex '{}' has {} units at layer {min_layer}",
                    self.vertex_names[v],
                    at_min.len()
                ));
            }
        }
        None
    }

    fn check_vertex_units_are_descendants(&self) -> Option<String> {
        let mut verts: Vec<usize> = self.vertex_unit.keys().copied().collect();
        verts.sort_unstable();
        for v in verts {
            let entry = self.vertex_unit[&v];
            let mut allowed: HashSet<UnitId> = self.descendants(entry).into_iter().collect();
            allowed.insert(entry);
            for u in self.units_spanning(v) {
                if !allowed.contains(&u) {
                    return Some(format!(
                        "vertex '{}' occurs in {} outside cdst({})",
                        self.vertex_names[v],
                        self.fmt_unit(u),
                        self.fmt_unit(entry)
                    ));
                }
            }
        }
        None
    }

    fn check_bag_entrance(&self) -> Option<String> {
        let h_adj: HashSet<(NodeId, NodeId)> = self
            .h_edges
            .iter()
            .flat_map(|e| [(e.a, e.b), (e.b, e.a)])
            .collect();
        for bag in &self.bags {
            if bag.len() < 2 {
                continue;
            }
            let parent = match self.parent_of[bag[0]] {
                Some(p) => p,
                None => continue,
            };
            for (i, &u) in bag.iter().enumerate() {
                for &w in &bag[i + 1..] {
                    for e in &self.h_edges {
                        let crosses = (self.units[u].cliques.contains(&e.a)
                            && self.units[w].cliques.contains(&e.b))
                            || (self.units[w].cliques.contains(&e.a)
                                && self.units[u].cliques.contains(&e.b));
                        if !crosses {
                            continue;
                        }
                        let ok = self.units[parent].cliques.iter().any(|&h| {
                            h_adj.contains(&(h, e.a)) && h_adj.contains(&(h, e.b))
                        });
                        if !ok {
                            return Some(format!(
                                "no clique of {} adjacent to both ends of a {}-{} edge",
                                self.fmt_unit(parent),
                                self.fmt_unit(u),
                                self.fmt_unit(w)
                            ));
                        }
                    }
                }
            }
        }
        None
    }
}

#[derive(Debug, Clone)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl PropertyCheck {
    fn new(name: &'static str, counterexample: Option<String>) -> Self {
        PropertyCheck {
            name,
            passed: counterexample.is_none(),
            counterexample,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&PropertyCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique_graph::build_clique_graph;
    use crate::graph::Graph;
    use crate::testkit::{g1, s3};

    fn ls_g1() -> (CliqueGraph, LayerStructure) {
        let cg = build_clique_graph(&g1()).unwrap();
        let k1 = cg.node_by_vertices(&["a", "b", "c"]).unwrap();
        let ls = build_layer_structure(&cg, k1).unwrap();
        (cg, ls)
    }

    #[test]
    fn layer_structure_of_g1() {
        let (cg, ls) = ls_g1();
        let k1 = cg.node_by_vertices(&["a", "b", "c"]).unwrap();
        let k2 = cg.node_by_vertices(&["b", "c", "d"]).unwrap();
        let k3 = cg.node_by_vertices(&["c", "e"]).unwrap();
        assert_eq!(ls.unit_count(), 2);
        let root = ls.root();
        assert_eq!(ls.unit(root).cliques(), &[k1, k2]);
        assert_eq!(ls.layer_of(root), 0);
        let other = 1 - root;
        assert_eq!(ls.unit(other).cliques(), &[k3]);
        assert_eq!(ls.layer_of(other), 1);
        assert_eq!(ls.parent_of(other), Some(root));
        assert_eq!(ls.unit_edges().len(), 1);
        let e = &ls.unit_edges()[0];
        assert_eq!(ls.fmt_label(&e.label), "{c}");
        assert!(ls.validate_properties().all_passed());
    }

    #[test]
    fn layer_structure_of_s3() {
        let cg = build_clique_graph(&s3()).unwrap();
        let cx = cg.node_by_vertices(&["c", "x"]).unwrap();
        let ls = build_layer_structure(&cg, cx).unwrap();
        assert_eq!(ls.unit_count(), 3);
        assert_eq!(ls.layers()[0], vec![ls.root()]);
        assert_eq!(ls.layers()[1].len(), 2);
        // Both layer-1 units form one bag and hang off the root.
        let layer1 = &ls.layers()[1];
        assert!(ls
            .bags()
            .iter()
            .any(|bag| bag == layer1));
        for &u in layer1 {
            assert_eq!(ls.parent_of(u), Some(ls.root()));
        }
        for e in ls.unit_edges() {
            assert_eq!(ls.fmt_label(&e.label), "{c}");
        }
        assert!(ls.validate_properties().all_passed());
    }

    #[test]
    fn single_node_structure_is_trivial() {
        let g = Graph::from_edges(&[("a", "b")]).unwrap();
        let cg = build_clique_graph(&g).unwrap();
        let ls = build_layer_structure(&cg, 0).unwrap();
        assert_eq!(ls.unit_count(), 1);
        assert_eq!(ls.layer_of(ls.root()), 0);
        assert!(ls.unit_edges().is_empty());
        assert!(ls.validate_properties().all_passed());
    }

    #[test]
    fn build_rejects_bad_roots() {
        let cg = build_clique_graph(&g1()).unwrap();
        assert!(build_layer_structure(&cg, 99).is_err());
    }

    #[test]
    fn unit_of_vertex_examples() {
        let (cg, ls) = ls_g1();
        let k3 = cg.node_by_vertices(&["c", "e"]).unwrap();
        let ue = ls.unit_of_vertex("e").unwrap();
        assert_eq!(ls.unit(ue).cliques(), &[k3]);
        assert_eq!(ls.unit_of_vertex("c").unwrap(), ls.root());

        let s3cg = build_clique_graph(&s3()).unwrap();
        let cx = s3cg.node_by_vertices(&["c", "x"]).unwrap();
        let s3ls = build_layer_structure(&s3cg, cx).unwrap();
        assert_eq!(s3ls.unit_of_vertex("c").unwrap(), s3ls.root());
        assert!(s3ls.unit_of_vertex("q").is_err());
    }

    #[test]
    fn descendants_examples() {
        let (_, ls) = ls_g1();
        let leaf = 1 - ls.root();
        assert_eq!(ls.descendants(ls.root()), vec![leaf]);
        assert!(ls.descendants(leaf).is_empty());

        let s3cg = build_clique_graph(&s3()).unwrap();
        let cx = s3cg.node_by_vertices(&["c", "x"]).unwrap();
        let s3ls = build_layer_structure(&s3cg, cx).unwrap();
        assert_eq!(s3ls.descendants(s3ls.root()).len(), 2);
    }

    #[test]
    fn corrupted_label_is_reported() {
        let (cg, mut ls) = ls_g1();
        let bogus = cg.vertex_id("d").unwrap();
        ls.unit_edges[0].label = vec![bogus];
        let report = ls.validate_properties();
        assert!(!report.all_passed());
        let p5 = report
            .checks
            .iter()
            .find(|c| c.name == "edge-label-equals-span-intersection")
            .unwrap();
        assert!(!p5.passed);
        assert!(p5.counterexample.is_some());
    }

    #[test]
    fn properties_hold_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..30 {
            let g = crate::testkit::random_chordal(16, 6, rng.gen()).unwrap();
            let cg = build_clique_graph(&g).unwrap();
            for k in 0..cg.node_count() {
                let ls = build_layer_structure(&cg, k).unwrap();
                let report = ls.validate_properties();
                assert!(
                    report.all_passed(),
                    "failures: {:?}",
                    report
                        .failures()
                        .iter()
                        .map(|c| (c.name, c.counterexample.clone()))
                        .collect::<Vec<_>>()
                );
            }
        }
    }

    // In every generic search ordering of the unit graph that starts at the
    // root, each nonroot unit appears after its parent.
    #[test]
    fn generic_orderings_respect_parents() {
        use rand::{Rng, SeedableRng};
        fn enumerate_generic(adj: &[Vec<usize>], start: usize) -> Vec<Vec<usize>> {
            fn rec(adj: &[Vec<usize>], prefix: &mut Vec<usize>, seen: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
                if prefix.len() == adj.len() {
                    out.push(prefix.clone());
                    return;
                }
                for v in 0..adj.len() {
                    if !seen[v] && adj[v].iter().any(|&u| seen[u]) {
                        seen[v] = true;
                        prefix.push(v);
                        rec(adj, prefix, seen, out);
                        prefix.pop();
                        seen[v] = false;
                    }
                }
            }
            let mut out = Vec::new();
            let mut seen = vec![false; adj.len()];
            seen[start] = true;
            rec(adj, &mut vec![start], &mut seen, &mut out);
            out
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        let mut tried = 0;
        for _ in 0..60 {
            let g = crate::testkit::random_chordal(10, 5, rng.gen()).unwrap();
            let cg = build_clique_graph(&g).unwrap();
            let ls = build_layer_structure(&cg, 0).unwrap();
            if ls.unit_count() < 2 || ls.unit_count() > 7 {
                continue;
            }
            tried += 1;
            let adj = ls.unit_adjacency();
            for pi in enumerate_generic(&adj, ls.root()) {
                let pos: Vec<usize> = {
                    let mut p = vec![0; pi.len()];
                    for (i, &u) in pi.iter().enumerate() {
                        p[u] = i;
                    }
                    p
                };
                for u in 0..ls.unit_count() {
                    if let Some(parent) = ls.parent_of(u) {
                        assert!(pos[parent] < pos[u]);
                    }
                }
            }
        }
        assert!(tried > 5, "family too degenerate to be meaningful");
    }
}
