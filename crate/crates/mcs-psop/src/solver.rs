//! Decides whether a chordal graph has a maximum cardinality search ordering
//! extending a given partial order, and produces a verified witness when one
//! exists.
//!
//! The pipeline: sort the clique-graph edge weights into levels; peel levels
//! to get nested component partitions; for each component and start clique,
//! decide via its layer structure whether a Prim ordering of the component
//! can start there while respecting the order. A true root entry yields a
//! Prim ordering of the whole clique graph by recursively realizing the
//! recorded unit orderings, and that Prim ordering generates the witness.

use std::collections::{BTreeSet, HashMap};

use crate::clique_graph::{build_clique_graph, CliqueGraph, NodeId, WeightLevels};
use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layers::{layer_structure_of_component, LayerStructure, UnitId};
use crate::order::{order_from_pairs, LinearOrder, StrictPartialOrder};
use crate::search::{mcs_from_prim, verify_ordering, CliqueSequence, Paradigm};

/// A vertex order projected onto the units of a layer structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectedOrder {
    base: StrictPartialOrder<UnitId>,
}

impl ProjectedOrder {
    pub fn base(&self) -> &StrictPartialOrder<UnitId> {
        &self.base
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }
}

/// Maps each pair through the entry units, drops same-unit pairs and closes
/// transitively. `None` means the projection is cyclic between distinct
/// units, so no unit ordering can extend it.
pub fn project_order(
    ls: &LayerStructure,
    r: &StrictPartialOrder<String>,
) -> Result<Option<ProjectedOrder>> {
    let mut pairs = Vec::new();
    for (x, y) in r.pairs() {
        let ux = ls.unit_of_vertex(x)?;
        let uy = ls.unit_of_vertex(y)?;
        pairs.push((ux, uy));
    }
    Ok(project_unit_pairs(pairs).map(|base| ProjectedOrder { base }))
}

fn project_unit_pairs(pairs: Vec<(UnitId, UnitId)>) -> Option<StrictPartialOrder<UnitId>> {
    let distinct: Vec<(UnitId, UnitId)> = pairs.into_iter().filter(|(a, b)| a != b).collect();
    match order_from_pairs(distinct) {
        Ok(q) => Some(q),
        Err(Error::OrderCycle(..)) => None,
        Err(e) => unreachable!("projection can only fail with a cycle: {e}"),
    }
}

/// Greedy rooted generic-search solver: a generic search ordering of the
/// graph that starts at `root` and extends `q`, or `None` when none exists.
///
/// The greedy keeps visiting the smallest unvisited node that touches the
/// visited set and has no unvisited predecessor in `q`. An eligible node can
/// always be moved to the front of any valid completion (it keeps its visited
/// neighbor, and no pending predecessor is skipped), so the greedy dead-ends
/// only when no completion exists.
pub fn rooted_generic_psop(
    neighbors: &[Vec<usize>],
    root: usize,
    q: &StrictPartialOrder<usize>,
) -> Result<Option<Vec<usize>>> {
    let n = neighbors.len();
    if root >= n {
        return Err(Error::invalid("root is not a node of the graph"));
    }
    if q.elements().any(|&e| e >= n) {
        return Err(Error::invalid("order mentions a node outside the graph"));
    }
    let mut pending = vec![0usize; n];
    let mut succs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in q.pairs() {
        pending[b] += 1;
        succs[a].push(b);
    }
    if pending[root] > 0 {
        return Ok(None);
    }
    let mut visited = vec![false; n];
    let mut touched = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let visit = |v: usize,
                     visited: &mut Vec<bool>,
                     touched: &mut Vec<bool>,
                     pending: &mut Vec<usize>,
                     order: &mut Vec<usize>| {
        visited[v] = true;
        order.push(v);
        for &u in &neighbors[v] {
            touched[u] = true;
        }
        for &s in &succs[v] {
            pending[s] -= 1;
        }
    };
    visit(root, &mut visited, &mut touched, &mut pending, &mut order);
    while order.len() < n {
        let next = (0..n).find(|&v| !visited[v] && touched[v] && pending[v] == 0);
        match next {
            Some(v) => visit(v, &mut visited, &mut touched, &mut pending, &mut order),
            None => return Ok(None),
        }
    }
    Ok(Some(order))
}

#[derive(Debug, Clone)]
struct DpEntry {
    value: bool,
    choice: Option<DpChoice>,
}

#[derive(Debug, Clone)]
struct DpChoice {
    /// The level at which this entry's units are components.
    unit_level: usize,
    /// Entry clique per unit, in the recorded generic unit order; the first
    /// is the entry's own start clique.
    entry_cliques: Vec<NodeId>,
}

/// The filled decision table: one boolean per (level, component, start
/// clique), with the realization data needed to rebuild a witness from any
/// true entry.
#[derive(Debug, Clone)]
pub struct DpTable {
    cg: CliqueGraph,
    levels: WeightLevels,
    components: Vec<Vec<Vec<NodeId>>>,
    entries: HashMap<(usize, NodeId), DpEntry>,
}

impl DpTable {
    pub fn clique_graph(&self) -> &CliqueGraph {
        &self.cg
    }

    pub fn weight_levels(&self) -> &WeightLevels {
        &self.levels
    }

    pub fn t(&self) -> usize {
        self.levels.t()
    }

    /// Components of the level graph, sorted by smallest node.
    pub fn components(&self, level: usize) -> &[Vec<NodeId>] {
        &self.components[level]
    }

    pub fn value(&self, level: usize, node: NodeId) -> Option<bool> {
        self.entries.get(&(level, node)).map(|e| e.value)
    }

    pub fn entry_count(&self) -> usize {
        self.entries.len()
    }

    /// Cliques that can start a qualifying Prim ordering of the whole clique
    /// graph, sorted.
    pub fn yes_roots(&self) -> Vec<NodeId> {
        (0..self.cg.node_count())
            .filter(|&k| self.value(0, k) == Some(true))
            .collect()
    }
}

/// The answer to one instance: the decision, and for yes a witness ordering
/// together with the Prim ordering of the clique graph it was built from.
#[derive(Debug, Clone)]
pub struct PsopAnswer {
    pub decision: bool,
    pub witness: Option<LinearOrder<String>>,
    pub certificate: Option<CliqueSequence>,
}

impl PsopAnswer {
    fn no() -> Self {
        PsopAnswer {
            decision: false,
            witness: None,
            certificate: None,
        }
    }
}

fn check_order_vertices(g: &Graph, r: &StrictPartialOrder<String>) -> Result<()> {
    for x in r.elements() {
        if g.index_of(x).is_none() {
            return Err(Error::invalid(format!("order mentions unknown vertex '{x}'")));
        }
    }
    Ok(())
}

/// Fills the table for a connected chordal graph, from the deepest level
/// (isolated cliques, always feasible) down to the full clique graph.
pub fn dp_solve(g: &Graph, r: &StrictPartialOrder<String>) -> Result<DpTable> {
    check_order_vertices(g, r)?;
    let cg = build_clique_graph(g)?;
    debug_assert_eq!(cg.vertex_names(), g.vertices());
    let levels = cg.weight_levels();
    let t = levels.t();

    let components: Vec<Vec<Vec<NodeId>>> = (0..=t)
        .map(|i| {
            let mut dsu = Dsu::new(cg.node_count());
            let cutoff = if i == 0 { 0 } else { levels.as_slice()[i - 1] };
            for e in cg.edges() {
                if e.weight > cutoff {
                    dsu.union(e.a, e.b);
                }
            }
            dsu.groups()
        })
        .collect();

    let r_pairs: Vec<(usize, usize)> = r
        .pairs()
        .map(|(x, y)| (g.index_of(x).unwrap(), g.index_of(y).unwrap()))
        .collect();

    let mut entries: HashMap<(usize, NodeId), DpEntry> = HashMap::new();
    for i in (0..=t).rev() {
        for comp in &components[i] {
            if comp.len() == 1 {
                entries.insert(
                    (i, comp[0]),
                    DpEntry {
                        value: true,
                        choice: None,
                    },
                );
                continue;
            }
            let in_comp: Vec<bool> = {
                let mut mask = vec![false; cg.node_count()];
                for &n in comp {
                    mask[n] = true;
                }
                mask
            };
            let h_min_w = cg
                .edges()
                .iter()
                .filter(|e| in_comp[e.a] && in_comp[e.b])
                .map(|e| e.weight)
                .min()
                .expect("a multi-node component has edges");
            let unit_level = levels.level_of(h_min_w).expect("edge weights are levels");
            debug_assert!(unit_level > i);
            if unit_level > i + 1 {
                // No edges of the next weight level inside this component, so
                // it is also a component one level deeper with the same
                // entries.
                for &k in comp {
                    let copied = entries[&(i + 1, k)].clone();
                    entries.insert((i, k), copied);
                }
                continue;
            }
            #[cfg(debug_assertions)]
            check_component_is_clique_graph(g, &cg, comp);
            let span: BTreeSet<usize> = comp
                .iter()
                .flat_map(|&n| cg.clique(n).iter().copied())
                .collect();
            let local_pairs: Vec<(usize, usize)> = r_pairs
                .iter()
                .filter(|(x, y)| span.contains(x) && span.contains(y))
                .copied()
                .collect();
            for &k in comp {
                let entry = fill_entry(&cg, comp, k, &local_pairs, unit_level, &entries);
                entries.insert((i, k), entry);
            }
        }
    }
    Ok(DpTable {
        cg,
        levels,
        components,
        entries,
    })
}

fn fill_entry(
    cg: &CliqueGraph,
    comp: &[NodeId],
    k: NodeId,
    local_pairs: &[(usize, usize)],
    unit_level: usize,
    entries: &HashMap<(usize, NodeId), DpEntry>,
) -> DpEntry {
    let no = DpEntry {
        value: false,
        choice: None,
    };
    let ls = layer_structure_of_component(cg, comp, k);
    let projected = project_unit_pairs(
        local_pairs
            .iter()
            .map(|&(x, y)| {
                (
                    ls.unit_of_vertex_id(x).expect("x spans the component"),
                    ls.unit_of_vertex_id(y).expect("y spans the component"),
                )
            })
            .collect(),
    );
    let q = match projected {
        Some(q) => q,
        None => return no,
    };
    let unit_order = match rooted_generic_psop(&ls.unit_adjacency(), ls.root(), &q) {
        Ok(Some(order)) => order,
        Ok(None) => return no,
        Err(e) => unreachable!("unit graph and root are well-formed: {e}"),
    };
    // The start clique must be able to start its own unit.
    if !entries[&(unit_level, k)].value {
        return no;
    }
    // Every other unit needs an entry clique adjacent to its parent that can
    // start the unit; the requirement does not depend on the ordering chosen.
    let mut entry_cliques = vec![k];
    for &u in &unit_order[1..] {
        let parent = ls.parent_of(u).expect("nonroot units have parents");
        let parent_cliques = ls.unit(parent).cliques();
        let found = ls.unit(u).cliques().iter().copied().find(|&kj| {
            entries[&(unit_level, kj)].value
                && cg
                    .neighbors(kj)
                    .iter()
                    .any(|&(nb, _)| parent_cliques.binary_search(&nb).is_ok())
        });
        match found {
            Some(kj) => entry_cliques.push(kj),
            None => return no,
        }
    }
    DpEntry {
        value: true,
        choice: Some(DpChoice {
            unit_level,
            entry_cliques,
        }),
    }
}

/// Every component of every level graph is itself the clique graph of the
/// subgraph it spans; cross-checked on small inputs.
#[cfg(debug_assertions)]
fn check_component_is_clique_graph(g: &Graph, cg: &CliqueGraph, comp: &[NodeId]) {
    if g.vertex_count() > 24 {
        return;
    }
    let mut span: Vec<usize> = comp
        .iter()
        .flat_map(|&n| cg.clique(n).iter().copied())
        .collect();
    span.sort_unstable();
    span.dedup();
    let sub = g.induced_ids(&span);
    let rebuilt = build_clique_graph(&sub).expect("induced span is connected chordal");
    assert_eq!(
        cg.induced(comp),
        rebuilt,
        "level component is not the clique graph of its span"
    );
}

fn realize(table: &DpTable, level: usize, k: NodeId) -> Vec<NodeId> {
    let entry = table
        .entries
        .get(&(level, k))
        .expect("realize only visits filled entries");
    debug_assert!(entry.value);
    match &entry.choice {
        None => vec![k],
        Some(choice) => choice
            .entry_cliques
            .iter()
            .flat_map(|&kj| realize(table, choice.unit_level, kj))
            .collect(),
    }
}

/// Rebuilds a witness from a true root entry: the recorded unit orderings
/// realize a Prim ordering of the clique graph starting at `k` that respects
/// `r`, and its generation (blockwise linear extensions) is the witness. Both
/// facts are re-verified before returning.
pub fn extract_witness(
    g: &Graph,
    r: &StrictPartialOrder<String>,
    table: &DpTable,
    k: NodeId,
) -> Result<PsopAnswer> {
    check_order_vertices(g, r)?;
    match table.value(0, k) {
        Some(true) => {}
        _ => return Err(Error::invalid("no qualifying ordering starts at this clique")),
    }
    let pi_ids = realize(table, 0, k);
    let pi = CliqueSequence::from_ids(&table.cg, &pi_ids);
    let sigma = mcs_from_prim(g, &pi, r).map_err(|e| {
        Error::Internal(format!("realized sequence failed reconstruction: {e}"))
    })?;
    if !verify_solution(g, r, &sigma)? {
        return Err(Error::Internal("witness failed verification".into()));
    }
    Ok(PsopAnswer {
        decision: true,
        witness: Some(sigma),
        certificate: Some(pi),
    })
}

fn solve_connected(g: &Graph, r: &StrictPartialOrder<String>) -> Result<PsopAnswer> {
    let table = dp_solve(g, r)?;
    match table.yes_roots().first() {
        Some(&k) => extract_witness(g, r, &table, k),
        None => Ok(PsopAnswer::no()),
    }
}

/// Decides the instance. Disconnected graphs are solved per component; the
/// answer is yes iff every component is yes and the cross-component
/// constraints admit a linear order of the components, in which case the
/// witness concatenates the component witnesses in such an order.
pub fn solve(g: &Graph, r: &StrictPartialOrder<String>) -> Result<PsopAnswer> {
    check_order_vertices(g, r)?;
    if g.is_empty() {
        return Ok(PsopAnswer {
            decision: true,
            witness: Some(LinearOrder::new(Vec::new()).unwrap()),
            certificate: None,
        });
    }
    let comps = g.components_ids();
    if comps.len() == 1 {
        return solve_connected(g, r);
    }
    let mut witnesses = Vec::with_capacity(comps.len());
    for comp in &comps {
        let sub = g.induced_ids(comp);
        let keep: BTreeSet<String> = sub.vertices().iter().cloned().collect();
        let answer = solve_connected(&sub, &r.restrict(&keep))?;
        match answer.witness {
            Some(w) if answer.decision => witnesses.push(w),
            _ => return Ok(PsopAnswer::no()),
        }
    }
    // Order the components compatibly with the cross-component pairs; a
    // cycle (in particular any z with (x, z), (z, y) for same-component
    // x, y) makes the instance infeasible.
    let mut comp_of = vec![0usize; g.vertex_count()];
    for (ci, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = ci;
        }
    }
    let mut arcs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (x, y) in r.pairs() {
        let (cx, cy) = (
            comp_of[g.index_of(x).unwrap()],
            comp_of[g.index_of(y).unwrap()],
        );
        if cx != cy {
            arcs.insert((cx, cy));
        }
    }
    let mut indegree = vec![0usize; comps.len()];
    for &(_, b) in &arcs {
        indegree[b] += 1;
    }
    let mut ready: BTreeSet<usize> = (0..comps.len()).filter(|&c| indegree[c] == 0).collect();
    let mut topo = Vec::with_capacity(comps.len());
    while let Some(&c) = ready.iter().next() {
        ready.remove(&c);
        topo.push(c);
        for &(a, b) in &arcs {
            if a == c {
                indegree[b] -= 1;
                if indegree[b] == 0 {
                    ready.insert(b);
                }
            }
        }
    }
    if topo.len() != comps.len() {
        return Ok(PsopAnswer::no());
    }
    let mut seq = Vec::with_capacity(g.vertex_count());
    for &c in &topo {
        seq.extend(witnesses[c].iter().cloned());
    }
    let sigma = LinearOrder::new(seq).expect("components are disjoint");
    debug_assert!(verify_solution(g, r, &sigma)?);
    Ok(PsopAnswer {
        decision: true,
        witness: Some(sigma),
        certificate: None,
    })
}

/// Can `v` come last in some maximum cardinality search of `g`?
pub fn end_vertex(g: &Graph, v: &str) -> Result<PsopAnswer> {
    if g.index_of(v).is_none() {
        return Err(Error::invalid(format!("unknown vertex '{v}'")));
    }
    if !g.is_connected() {
        return Err(Error::invalid("end-vertex needs a connected graph"));
    }
    let pairs: Vec<(String, String)> = g
        .vertices()
        .iter()
        .filter(|u| u.as_str() != v)
        .map(|u| (u.clone(), v.to_string()))
        .collect();
    let r = order_from_pairs(pairs)?;
    solve(g, &r)
}

/// Checks a claimed witness: a permutation of the vertices that simulates as
/// a maximum cardinality search and extends `r`.
pub fn verify_solution(
    g: &Graph,
    r: &StrictPartialOrder<String>,
    sigma: &LinearOrder<String>,
) -> Result<bool> {
    check_order_vertices(g, r)?;
    Ok(verify_ordering(g, Paradigm::Mcs, sigma)? && sigma.extends(r)?)
}
