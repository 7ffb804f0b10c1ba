//! Search paradigms over graphs and clique graphs: maximum cardinality
//! search, Prim search (maximum-weight-edge growth) and generic search,
//! together with ordering verifiers, exhaustive tie-break enumeration,
//! chordality recognition and maximal-clique listing.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clique_graph::{build_clique_graph, CliqueGraph, NodeId};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::order::{lex_linear_extension, LinearOrder, StrictPartialOrder};

/// Default node-count guard for exhaustive ordering enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 9;

/// How "let v be any ..." choices are resolved.
///
/// `DeterministicLex` always takes the smallest vertex identifier (for clique
/// nodes, the lexicographically smallest clique). `SeededRandom` draws
/// uniformly from the legal choices with a reproducible stream.
/// `ExhaustiveBranch` is materialized by the enumeration operations; a
/// single-run search under it returns the first branch, which coincides with
/// the deterministic ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchPolicy {
    #[default]
    DeterministicLex,
    SeededRandom {
        seed: u64,
    },
    ExhaustiveBranch,
}

impl SearchPolicy {
    fn chooser(&self) -> Chooser {
        match self {
            SearchPolicy::DeterministicLex | SearchPolicy::ExhaustiveBranch => Chooser { rng: None },
            SearchPolicy::SeededRandom { seed } => Chooser {
                rng: Some(ChaCha8Rng::seed_from_u64(*seed)),
            },
        }
    }
}

struct Chooser {
    rng: Option<ChaCha8Rng>,
}

impl Chooser {
    /// `candidates` is sorted ascending and nonempty.
    fn pick(&mut self, candidates: &[usize]) -> usize {
        match &mut self.rng {
            None => candidates[0],
            Some(rng) => candidates[rng.gen_range(0..candidates.len())],
        }
    }
}

/// The three selection rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Paradigm {
    Mcs,
    Prim,
    Generic,
}

/// One step-by-step simulation of a selection rule. `candidates` returns the
/// sorted set of legal next nodes given the visited prefix.
trait SearchState: Clone {
    fn node_count(&self) -> usize;
    fn candidates(&self) -> Vec<usize>;
    fn visit(&mut self, v: usize);
}

#[derive(Clone)]
struct McsState<'a> {
    g: &'a Graph,
    visited: Vec<bool>,
    counts: Vec<usize>,
    left: usize,
}

impl<'a> McsState<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        McsState {
            g,
            visited: vec![false; n],
            counts: vec![0; n],
            left: n,
        }
    }
}

impl SearchState for McsState<'_> {
    fn node_count(&self) -> usize {
        self.g.vertex_count()
    }

    fn candidates(&self) -> Vec<usize> {
        let best = self
            .counts
            .iter()
            .zip(&self.visited)
            .filter(|(_, &vis)| !vis)
            .map(|(&c, _)| c)
            .max();
        match best {
            None => Vec::new(),
            Some(best) => (0..self.counts.len())
                .filter(|&v| !self.visited[v] && self.counts[v] == best)
                .collect(),
        }
    }

    fn visit(&mut self, v: usize) {
        self.visited[v] = true;
        self.left -= 1;
        for &u in self.g.neighbors(v) {
            if !self.visited[u] {
                self.counts[u] += 1;
            }
        }
    }
}

#[derive(Clone)]
struct GenericState<'a> {
    g: &'a Graph,
    visited: Vec<bool>,
    touched: Vec<bool>,
    start: Option<usize>,
    left: usize,
}

impl<'a> GenericState<'a> {
    fn new(g: &'a Graph, start: Option<usize>) -> Self {
        let n = g.vertex_count();
        GenericState {
            g,
            visited: vec![false; n],
            touched: vec![false; n],
            start,
            left: n,
        }
    }
}

impl SearchState for GenericState<'_> {
    fn node_count(&self) -> usize {
        self.g.vertex_count()
    }

    fn candidates(&self) -> Vec<usize> {
        if self.left == self.node_count() {
            return match self.start {
                Some(s) => vec![s],
                None => (0..self.node_count()).collect(),
            };
        }
        (0..self.node_count())
            .filter(|&v| !self.visited[v] && self.touched[v])
            .collect()
    }

    fn visit(&mut self, v: usize) {
        self.visited[v] = true;
        self.left -= 1;
        for &u in self.g.neighbors(v) {
            self.touched[u] = true;
        }
    }
}

#[derive(Clone)]
struct PrimState<'a> {
    cg: &'a CliqueGraph,
    visited: Vec<bool>,
    /// Best crossing edge weight per unvisited node; 0 means none.
    cross: Vec<usize>,
    left: usize,
}

impl<'a> PrimState<'a> {
    fn new(cg: &'a CliqueGraph) -> Self {
        let n = cg.node_count();
        PrimState {
            cg,
            visited: vec![false; n],
            cross: vec![0; n],
            left: n,
        }
    }
}

impl SearchState for PrimState<'_> {
    fn node_count(&self) -> usize {
        self.cg.node_count()
    }

    fn candidates(&self) -> Vec<usize> {
        if self.left == self.node_count() {
            return (0..self.node_count()).collect();
        }
        let best = self
            .cross
            .iter()
            .zip(&self.visited)
            .filter(|(&c, &vis)| !vis && c > 0)
            .map(|(&c, _)| c)
            .max();
        match best {
            None => Vec::new(),
            Some(best) => (0..self.node_count())
                .filter(|&v| !self.visited[v] && self.cross[v] == best)
                .collect(),
        }
    }

    fn visit(&mut self, v: usize) {
        self.visited[v] = true;
        self.left -= 1;
        for &(u, edge) in self.cg.neighbors(v) {
            if !self.visited[u] {
                let w = self.cg.edges()[edge].weight;
                if w > self.cross[u] {
                    self.cross[u] = w;
                }
            }
        }
    }
}

fn run_search<S: SearchState>(mut state: S, policy: &SearchPolicy) -> Result<Vec<usize>> {
    let n = state.node_count();
    let mut chooser = policy.chooser();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let cands = state.candidates();
        if cands.is_empty() {
            return Err(Error::Disconnected);
        }
        let v = chooser.pick(&cands);
        state.visit(v);
        order.push(v);
    }
    Ok(order)
}

fn verify_search<S: SearchState>(mut state: S, ord: &[usize]) -> bool {
    for &v in ord {
        if !state.candidates().binary_search(&v).is_ok() {
            return false;
        }
        state.visit(v);
    }
    true
}

fn enumerate_search<S: SearchState>(state: S, out: &mut BTreeSet<Vec<usize>>, prefix: &mut Vec<usize>) {
    let cands = state.candidates();
    if cands.is_empty() {
        if prefix.len() == state.node_count() {
            out.insert(prefix.clone());
        }
        return;
    }
    for v in cands {
        let mut next = state.clone();
        next.visit(v);
        prefix.push(v);
        enumerate_search(next, out, prefix);
        prefix.pop();
    }
}

fn check_permutation(n: usize, ord: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    if ord.len() != n {
        return Err(Error::invalid("ordering is not a permutation of the nodes"));
    }
    for &v in ord {
        if v >= n || seen[v] {
            return Err(Error::invalid("ordering is not a permutation of the nodes"));
        }
        seen[v] = true;
    }
    Ok(())
}

fn names_to_ids(g: &Graph, ord: &LinearOrder<String>) -> Result<Vec<usize>> {
    let ids: Vec<usize> = ord
        .iter()
        .map(|name| {
            g.index_of(name)
                .ok_or_else(|| Error::invalid(format!("unknown vertex '{name}'")))
        })
        .collect::<Result<_>>()?;
    check_permutation(g.vertex_count(), &ids)?;
    Ok(ids)
}

fn ids_to_order(g: &Graph, ids: Vec<usize>) -> LinearOrder<String> {
    LinearOrder::new(ids.into_iter().map(|v| g.name(v).to_string()).collect())
        .expect("search output is duplicate-free")
}

/// Maximum cardinality search: each step visits an unvisited vertex with the
/// most visited neighbors.
pub fn mcs(g: &Graph, policy: &SearchPolicy) -> Result<LinearOrder<String>> {
    if g.is_empty() {
        return Err(Error::invalid("search on an empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::invalid("search on a disconnected graph"));
    }
    run_search(McsState::new(g), policy).map(|ids| ids_to_order(g, ids))
}

/// Generic search from `start`: every later vertex has an earlier neighbor.
pub fn generic_search(g: &Graph, start: &str, policy: &SearchPolicy) -> Result<LinearOrder<String>> {
    let s = g
        .index_of(start)
        .ok_or_else(|| Error::invalid(format!("unknown start vertex '{start}'")))?;
    if !g.is_connected() {
        return Err(Error::invalid("search on a disconnected graph"));
    }
    run_search(GenericState::new(g, Some(s)), policy).map(|ids| ids_to_order(g, ids))
}

/// Prim search of a clique graph from `start`: each step visits a node
/// incident to a maximum-weight edge crossing the visited boundary.
pub fn prim_search(cg: &CliqueGraph, start: NodeId, policy: &SearchPolicy) -> Result<CliqueSequence> {
    if start >= cg.node_count() {
        return Err(Error::invalid("start is not a node of the clique graph"));
    }
    let mut state = PrimState::new(cg);
    state.visit(start);
    let mut chooser = policy.chooser();
    let mut order = vec![start];
    for _ in 1..cg.node_count() {
        let cands = state.candidates();
        if cands.is_empty() {
            return Err(Error::Disconnected);
        }
        let v = chooser.pick(&cands);
        state.visit(v);
        order.push(v);
    }
    Ok(CliqueSequence::from_ids(cg, &order))
}

/// Simulates the selection rule of `paradigm` along `ord`.
///
/// Any first vertex is legal under all three paradigms. Prim orderings verify
/// against a clique graph via [`verify_prim_ordering`].
pub fn verify_ordering(g: &Graph, paradigm: Paradigm, ord: &LinearOrder<String>) -> Result<bool> {
    let ids = names_to_ids(g, ord)?;
    match paradigm {
        Paradigm::Mcs => Ok(verify_search(McsState::new(g), &ids)),
        Paradigm::Generic => Ok(verify_search(GenericState::new(g, None), &ids)),
        Paradigm::Prim => Err(Error::invalid(
            "prim orderings are over clique graphs; use verify_prim_ordering",
        )),
    }
}

/// Simulates Prim search along `pi`; any start node is accepted.
pub fn verify_prim_ordering(cg: &CliqueGraph, pi: &CliqueSequence) -> Result<bool> {
    let ids = pi.to_ids(cg)?;
    check_permutation(cg.node_count(), &ids)?;
    Ok(verify_search(PrimState::new(cg), &ids))
}

/// Every ordering `paradigm` can produce from any start, by branching over
/// every legal choice. Guarded by `cap` on the node count.
pub fn enumerate_orderings(
    g: &Graph,
    paradigm: Paradigm,
    cap: usize,
) -> Result<BTreeSet<Vec<String>>> {
    if g.vertex_count() > cap {
        return Err(Error::TooLarge(format!(
            "{} nodes exceed the enumeration cap {cap}",
            g.vertex_count()
        )));
    }
    let mut out = BTreeSet::new();
    let mut prefix = Vec::new();
    match paradigm {
        Paradigm::Mcs => enumerate_search(McsState::new(g), &mut out, &mut prefix),
        Paradigm::Generic => enumerate_search(GenericState::new(g, None), &mut out, &mut prefix),
        Paradigm::Prim => {
            return Err(Error::invalid(
                "prim orderings are over clique graphs; use enumerate_prim_orderings",
            ))
        }
    }
    Ok(out
        .into_iter()
        .map(|ids| ids.into_iter().map(|v| g.name(v).to_string()).collect())
        .collect())
}

/// Every Prim ordering of `cg` from any start, as node-id sequences.
pub fn enumerate_prim_orderings(cg: &CliqueGraph, cap: usize) -> Result<BTreeSet<Vec<NodeId>>> {
    if cg.node_count() > cap {
        return Err(Error::TooLarge(format!(
            "{} nodes exceed the enumeration cap {cap}",
            cg.node_count()
        )));
    }
    let mut out = BTreeSet::new();
    let mut prefix = Vec::new();
    enumerate_search(PrimState::new(cg), &mut out, &mut prefix);
    Ok(out)
}

/// A perfect elimination ordering if the graph is chordal, `None` otherwise.
///
/// The candidate is the reverse of a maximum cardinality search ordering
/// (taken per component), validated by the standard check that every
/// vertex's later neighbors form a clique.
pub fn chordality_peo(g: &Graph) -> Option<LinearOrder<String>> {
    let mut sigma: Vec<usize> = Vec::with_capacity(g.vertex_count());
    for comp in g.components_ids() {
        let sub = g.induced_ids(&comp);
        let local = run_search(McsState::new(&sub), &SearchPolicy::DeterministicLex)
            .expect("component is connected");
        sigma.extend(local.into_iter().map(|v| comp[v]));
    }
    sigma.reverse();
    let peo = sigma;
    let mut pos = vec![0; g.vertex_count()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    // Later neighbors form a clique iff, for each v, they are contained in
    // the closed neighborhood of the earliest of them.
    for &v in &peo {
        let mut later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u] > pos[v])
            .collect();
        later.sort_by_key(|&u| pos[u]);
        if let Some((&parent, rest)) = later.split_first() {
            for &u in rest {
                if !g.has_edge(parent, u) {
                    return None;
                }
            }
        }
    }
    Some(ids_to_order(g, peo))
}

/// All maximal cliques of a chordal graph, each sorted, listed
/// lexicographically. At most one clique per vertex.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Vec<String>>> {
    Ok(maximal_cliques_ids(g)?
        .into_iter()
        .map(|c| c.into_iter().map(|v| g.name(v).to_string()).collect())
        .collect())
}

pub(crate) fn maximal_cliques_ids(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let peo = match chordality_peo(g) {
        Some(p) => p,
        None => return Err(Error::NotChordal),
    };
    let peo_ids: Vec<usize> = peo
        .iter()
        .map(|name| g.index_of(name).unwrap())
        .collect();
    let mut pos = vec![0; g.vertex_count()];
    for (i, &v) in peo_ids.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<Vec<usize>> = peo_ids
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| pos[u] > pos[v])
                .collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    candidates.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut kept: Vec<Vec<usize>> = Vec::new();
    'cand: for c in candidates {
        for k in &kept {
            if is_subset_sorted(&c, k) {
                continue 'cand;
            }
        }
        kept.push(c);
    }
    kept.sort();
    Ok(kept)
}

fn is_subset_sorted(small: &[usize], big: &[usize]) -> bool {
    let mut j = 0;
    for &x in small {
        while j < big.len() && big[j] < x {
            j += 1;
        }
        if j == big.len() || big[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// A duplicate-free sequence of maximal cliques (vertex-name sets).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSequence {
    cliques: Vec<Vec<String>>,
}

impl CliqueSequence {
    pub fn new(cliques: Vec<Vec<String>>) -> Result<Self> {
        let mut cliques = cliques;
        for c in &mut cliques {
            c.sort_unstable();
        }
        let mut sorted = cliques.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("clique sequence contains a duplicate"));
        }
        Ok(CliqueSequence { cliques })
    }

    pub(crate) fn from_ids(cg: &CliqueGraph, ids: &[NodeId]) -> Self {
        CliqueSequence {
            cliques: ids.iter().map(|&n| cg.clique_names(n)).collect(),
        }
    }

    pub fn cliques(&self) -> &[Vec<String>] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Position of the first clique containing `v`.
    pub fn first_clique_position(&self, v: &str) -> Option<usize> {
        self.cliques
            .iter()
            .position(|c| c.iter().any(|x| x == v))
    }

    pub(crate) fn to_ids(&self, cg: &CliqueGraph) -> Result<Vec<NodeId>> {
        self.cliques
            .iter()
            .map(|c| {
                let refs: Vec<&str> = c.iter().map(|s| s.as_str()).collect();
                cg.node_by_vertices(&refs)
                    .ok_or_else(|| Error::invalid(format!("{c:?} is not a maximal clique")))
            })
            .collect()
    }

    /// True iff for every (x, y) of `r` the first x-clique is no later than
    /// the first y-clique.
    pub fn respects(&self, r: &StrictPartialOrder<String>) -> Result<bool> {
        for (x, y) in r.pairs() {
            let px = self
                .first_clique_position(x)
                .ok_or_else(|| Error::invalid(format!("'{x}' occurs in no clique")))?;
            let py = self
                .first_clique_position(y)
                .ok_or_else(|| Error::invalid(format!("'{y}' occurs in no clique")))?;
            if px > py {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The vertices new to each position: clique i minus all earlier cliques.
    pub fn fresh_vertex_blocks(&self) -> Vec<BTreeSet<String>> {
        let mut seen: BTreeSet<String> = BTreeSet::new();
        let mut out = Vec::with_capacity(self.cliques.len());
        for c in &self.cliques {
            let block: BTreeSet<String> = c.iter().filter(|v| !seen.contains(*v)).cloned().collect();
            seen.extend(block.iter().cloned());
            out.push(block);
        }
        out
    }
}

/// Builds an MCS ordering of `g` extending `r` from a Prim ordering `pi` of
/// the clique graph that respects `r`: each position contributes the
/// lexicographically smallest linear extension of `r` restricted to its
/// fresh vertices. The result starts with the vertices of `pi`'s first
/// clique.
pub fn mcs_from_prim(
    g: &Graph,
    pi: &CliqueSequence,
    r: &StrictPartialOrder<String>,
) -> Result<LinearOrder<String>> {
    for x in r.elements() {
        if g.index_of(x).is_none() {
            return Err(Error::invalid(format!("order mentions unknown vertex '{x}'")));
        }
    }
    let cg = build_clique_graph(g)?;
    if !verify_prim_ordering(&cg, pi)? {
        return Err(Error::invalid("not a Prim ordering of the clique graph"));
    }
    if !pi.respects(r)? {
        return Err(Error::invalid("Prim ordering does not respect the order"));
    }
    let mut seq: Vec<String> = Vec::with_capacity(g.vertex_count());
    for block in pi.fresh_vertex_blocks() {
        let ext = lex_linear_extension(&block, r);
        seq.extend(Vec::from(ext));
    }
    let sigma = LinearOrder::new(seq).expect("blocks are disjoint");
    debug_assert!(verify_ordering(g, Paradigm::Mcs, &sigma)?);
    debug_assert!(sigma.extends(r)?);
    Ok(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{vertex_order, vertex_sequence};
    use crate::testkit::{g1, p3, s3};

    fn triangle() -> Graph {
        Graph::from_edges(&[("a", "b"), ("b", "c"), ("a", "c")]).unwrap()
    }

    #[test]
    fn mcs_examples() {
        let got = mcs(&p3(), &SearchPolicy::DeterministicLex).unwrap();
        assert_eq!(got, vertex_sequence(&["a", "b", "c"]).unwrap());
        assert!(verify_ordering(&p3(), Paradigm::Mcs, &got).unwrap());

        let single = Graph::new(&["v"], &[]).unwrap();
        assert_eq!(
            mcs(&single, &SearchPolicy::DeterministicLex).unwrap(),
            vertex_sequence(&["v"]).unwrap()
        );

        assert_eq!(
            mcs(&triangle(), &SearchPolicy::DeterministicLex).unwrap(),
            vertex_sequence(&["a", "b", "c"]).unwrap()
        );
    }

    #[test]
    fn mcs_rejects_disconnected() {
        let g = Graph::new(&["a", "b"], &[]).unwrap();
        assert!(mcs(&g, &SearchPolicy::DeterministicLex).is_err());
    }

    #[test]
    fn prim_examples() {
        let cg = build_clique_graph(&g1()).unwrap();
        let k1 = cg.node_by_vertices(&["a", "b", "c"]).unwrap();
        let pi = prim_search(&cg, k1, &SearchPolicy::DeterministicLex).unwrap();
        assert_eq!(
            pi.cliques(),
            &[
                vec!["a".to_string(), "b".into(), "c".into()],
                vec!["b".to_string(), "c".into(), "d".into()],
                vec!["c".to_string(), "e".into()],
            ]
        );
        assert!(verify_prim_ordering(&cg, &pi).unwrap());

        let p3cg = build_clique_graph(&p3()).unwrap();
        let ab = p3cg.node_by_vertices(&["a", "b"]).unwrap();
        let pi = prim_search(&p3cg, ab, &SearchPolicy::DeterministicLex).unwrap();
        assert_eq!(pi.len(), 2);
        assert_eq!(pi.cliques()[0], vec!["a".to_string(), "b".into()]);

        let s3cg = build_clique_graph(&s3()).unwrap();
        let cx = s3cg.node_by_vertices(&["c", "x"]).unwrap();
        let pi = prim_search(&s3cg, cx, &SearchPolicy::DeterministicLex).unwrap();
        assert_eq!(
            pi.cliques(),
            &[
                vec!["c".to_string(), "x".into()],
                vec!["c".to_string(), "y".into()],
                vec!["c".to_string(), "z".into()],
            ]
        );
    }

    #[test]
    fn generic_examples() {
        let got = generic_search(&p3(), "a", &SearchPolicy::DeterministicLex).unwrap();
        assert_eq!(got, vertex_sequence(&["a", "b", "c"]).unwrap());
        let got = generic_search(&p3(), "b", &SearchPolicy::DeterministicLex).unwrap();
        assert_eq!(got, vertex_sequence(&["b", "a", "c"]).unwrap());
        let got = generic_search(&s3(), "c", &SearchPolicy::DeterministicLex).unwrap();
        assert_eq!(got, vertex_sequence(&["c", "x", "y", "z"]).unwrap());
        assert!(generic_search(&p3(), "zz", &SearchPolicy::DeterministicLex).is_err());
    }

    #[test]
    fn verify_ordering_examples() {
        let bad = vertex_sequence(&["c", "a", "b"]).unwrap();
        assert!(!verify_ordering(&p3(), Paradigm::Mcs, &bad).unwrap());
        let good = vertex_sequence(&["c", "b", "a"]).unwrap();
        assert!(verify_ordering(&p3(), Paradigm::Mcs, &good).unwrap());

        let cg = build_clique_graph(&g1()).unwrap();
        let pi = CliqueSequence::new(vec![
            vec!["c".to_string(), "e".into()],
            vec!["a".to_string(), "b".into(), "c".into()],
            vec!["b".to_string(), "c".into(), "d".into()],
        ])
        .unwrap();
        assert!(verify_prim_ordering(&cg, &pi).unwrap());

        let not_perm = vertex_sequence(&["a", "b"]).unwrap();
        assert!(verify_ordering(&p3(), Paradigm::Mcs, &not_perm).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let got = enumerate_orderings(&p3(), Paradigm::Mcs, DEFAULT_ENUMERATION_CAP).unwrap();
        let want: BTreeSet<Vec<String>> = [
            vec!["a", "b", "c"],
            vec!["b", "a", "c"],
            vec!["b", "c", "a"],
            vec!["c", "b", "a"],
        ]
        .into_iter()
        .map(|v| v.into_iter().map(String::from).collect())
        .collect();
        assert_eq!(got, want);

        let single = Graph::new(&["v"], &[]).unwrap();
        let got = enumerate_orderings(&single, Paradigm::Generic, 9).unwrap();
        assert_eq!(got.len(), 1);

        let got = enumerate_orderings(&triangle(), Paradigm::Mcs, 9).unwrap();
        assert_eq!(got.len(), 6);

        let big = crate::testkit::random_chordal(12, 5, 1).unwrap();
        assert!(enumerate_orderings(&big, Paradigm::Mcs, 9).is_err());
    }

    #[test]
    fn chordality_examples() {
        let peo = chordality_peo(&p3()).unwrap();
        assert!(verify_ordering(&p3(), Paradigm::Mcs, &peo).is_ok());
        let square = Graph::from_edges(&[("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")]).unwrap();
        assert!(chordality_peo(&square).is_none());
        assert!(chordality_peo(&triangle()).is_some());
    }

    #[test]
    fn maximal_cliques_examples() {
        assert_eq!(
            maximal_cliques(&p3()).unwrap(),
            vec![vec!["a".to_string(), "b".into()], vec!["b".to_string(), "c".into()]]
        );
        assert_eq!(
            maximal_cliques(&g1()).unwrap(),
            vec![
                vec!["a".to_string(), "b".into(), "c".into()],
                vec!["b".to_string(), "c".into(), "d".into()],
                vec!["c".to_string(), "e".into()],
            ]
        );
        let k4 = Graph::from_edges(&[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ])
        .unwrap();
        assert_eq!(maximal_cliques(&k4).unwrap().len(), 1);
    }

    // Brute-force subset check for the G1 clique listing.
    #[test]
    fn maximal_cliques_match_subset_enumeration() {
        let g = g1();
        let n = g.vertex_count();
        let mut brute: Vec<Vec<usize>> = Vec::new();
        for mask in 1u32..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            let is_clique = verts
                .iter()
                .all(|&u| verts.iter().all(|&v| u == v || g.has_edge(u, v)));
            if is_clique {
                brute.push(verts);
            }
        }
        let maximal: Vec<Vec<usize>> = brute
            .iter()
            .filter(|c| {
                !brute
                    .iter()
                    .any(|d| d.len() > c.len() && c.iter().all(|x| d.contains(x)))
            })
            .cloned()
            .collect();
        let mut maximal: Vec<Vec<String>> = maximal
            .into_iter()
            .map(|c| c.into_iter().map(|v| g.name(v).to_string()).collect())
            .collect();
        maximal.sort();
        assert_eq!(maximal, maximal_cliques(&g).unwrap());
    }

    #[test]
    fn chordality_matches_hole_search_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        // Independent oracle: does some vertex subset of size >= 4 induce a cycle?
        fn has_hole(g: &Graph) -> bool {
            let n = g.vertex_count();
            for mask in 0u32..(1 << n) {
                let verts: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
                if verts.len() < 4 {
                    continue;
                }
                let all_deg_two = verts.iter().all(|&v| {
                    g.neighbors(v).iter().filter(|u| verts.contains(u)).count() == 2
                });
                if !all_deg_two {
                    continue;
                }
                // Connected and 2-regular means a single induced cycle.
                let names: Vec<&str> = verts.iter().map(|&v| g.name(v)).collect();
                if g.induced_subgraph(&names).unwrap().is_connected() {
                    return true;
                }
            }
            false
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for trial in 0..150 {
            let n = rng.gen_range(1..=7);
            let mut edges = Vec::new();
            let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(0.45) {
                        edges.push((names[i].clone(), names[j].clone()));
                    }
                }
            }
            let g = Graph::from_named(names.clone(), edges).unwrap();
            assert_eq!(
                chordality_peo(&g).is_some(),
                !has_hole(&g),
                "trial {trial} disagrees"
            );
        }
    }

    #[test]
    fn mcs_from_prim_examples() {
        let g = g1();
        let pi = CliqueSequence::new(vec![
            vec!["a".to_string(), "b".into(), "c".into()],
            vec!["b".to_string(), "c".into(), "d".into()],
            vec!["c".to_string(), "e".into()],
        ])
        .unwrap();
        let r = vertex_order(&[("b", "a")]).unwrap();
        let sigma = mcs_from_prim(&g, &pi, &r).unwrap();
        let allowed = [
            vertex_sequence(&["b", "a", "c", "d", "e"]).unwrap(),
            vertex_sequence(&["b", "c", "a", "d", "e"]).unwrap(),
            vertex_sequence(&["c", "b", "a", "d", "e"]).unwrap(),
        ];
        assert!(allowed.contains(&sigma));
        assert!(verify_ordering(&g, Paradigm::Mcs, &sigma).unwrap());
        assert!(sigma.extends(&r).unwrap());

        let p3pi = CliqueSequence::new(vec![
            vec!["a".to_string(), "b".into()],
            vec!["b".to_string(), "c".into()],
        ])
        .unwrap();
        let sigma = mcs_from_prim(&p3(), &p3pi, &StrictPartialOrder::empty()).unwrap();
        assert!(
            sigma == vertex_sequence(&["a", "b", "c"]).unwrap()
                || sigma == vertex_sequence(&["b", "a", "c"]).unwrap()
        );

        let tri = triangle();
        let tpi = CliqueSequence::new(vec![vec!["a".to_string(), "b".into(), "c".into()]]).unwrap();
        let r = vertex_order(&[("c", "a")]).unwrap();
        let sigma = mcs_from_prim(&tri, &tpi, &r).unwrap();
        assert!(sigma.extends(&r).unwrap());
    }

    #[test]
    fn mcs_from_prim_rejects_non_prim_sequence() {
        // (K1, K3, K2) is not a Prim ordering of C(G1): after K1 the
        // crossing weights are 2 (to K2) and 1 (to K3).
        let pi = CliqueSequence::new(vec![
            vec!["a".to_string(), "b".into(), "c".into()],
            vec!["c".to_string(), "e".into()],
            vec!["b".to_string(), "c".into(), "d".into()],
        ])
        .unwrap();
        assert!(mcs_from_prim(&g1(), &pi, &StrictPartialOrder::empty()).is_err());
    }

    #[test]
    fn searches_verify_under_all_policies() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let policies = [
            SearchPolicy::DeterministicLex,
            SearchPolicy::SeededRandom { seed: 42 },
            SearchPolicy::SeededRandom { seed: 1234567 },
            SearchPolicy::ExhaustiveBranch,
        ];
        for _ in 0..40 {
            let g = crate::testkit::random_chordal(10, 4, rng.gen()).unwrap();
            let cg = build_clique_graph(&g).unwrap();
            for policy in &policies {
                let sigma = mcs(&g, policy).unwrap();
                assert!(verify_ordering(&g, Paradigm::Mcs, &sigma).unwrap());
                let tau = generic_search(&g, g.name(0), policy).unwrap();
                assert!(verify_ordering(&g, Paradigm::Generic, &tau).unwrap());
                let pi = prim_search(&cg, 0, policy).unwrap();
                assert!(verify_prim_ordering(&cg, &pi).unwrap());
            }
        }
    }

    // MCS orderings are exactly the generations of Prim orderings of the
    // clique graph, checked on the fixtures and a small random family.
    #[test]
    fn mcs_orderings_are_prim_generations() {
        use itertools::Itertools;
        use rand::{Rng, SeedableRng};

        fn generations(cg: &CliqueGraph, pi_ids: &[NodeId]) -> BTreeSet<Vec<String>> {
            let pi = CliqueSequence::from_ids(cg, pi_ids);
            let blocks = pi.fresh_vertex_blocks();
            let mut acc: Vec<Vec<String>> = vec![Vec::new()];
            for block in blocks {
                let items: Vec<String> = block.into_iter().collect();
                let mut next = Vec::new();
                for perm in items.iter().permutations(items.len()) {
                    for prefix in &acc {
                        let mut s = prefix.clone();
                        s.extend(perm.iter().map(|x| x.to_string()));
                        next.push(s);
                    }
                }
                acc = next;
            }
            acc.into_iter().collect()
        }

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let mut graphs = vec![p3(), s3(), g1(), triangle()];
        for _ in 0..12 {
            graphs.push(crate::testkit::random_chordal(7, 3, rng.gen()).unwrap());
        }
        for g in graphs {
            let cg = build_clique_graph(&g).unwrap();
            let mcs_set = enumerate_orderings(&g, Paradigm::Mcs, 9).unwrap();
            let mut generated: BTreeSet<Vec<String>> = BTreeSet::new();
            for pi in enumerate_prim_orderings(&cg, 9).unwrap() {
                generated.extend(generations(&cg, &pi));
            }
            assert_eq!(mcs_set, generated);
        }
    }
}
