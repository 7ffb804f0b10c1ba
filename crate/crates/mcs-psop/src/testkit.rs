//! Shared fixtures, a seeded random chordal-graph generator, and brute-force
//! oracles for the acceptance and property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clique_graph::{intersect_sorted, CliqueGraph};
use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::order::StrictPartialOrder;
use crate::search::{chordality_peo, enumerate_orderings, maximal_cliques_ids, Paradigm};

/// The three fixture graphs used across the test suites.
#[derive(Debug, Clone)]
pub struct Fixtures {
    pub p3: Graph,
    pub s3: Graph,
    pub g1: Graph,
}

pub fn fixtures() -> Fixtures {
    Fixtures {
        p3: p3(),
        s3: s3(),
        g1: g1(),
    }
}

/// Path a - b - c.
pub fn p3() -> Graph {
    checked(Graph::from_edges(&[("a", "b"), ("b", "c")]).unwrap())
}

/// Star with center c and leaves x, y, z.
pub fn s3() -> Graph {
    checked(Graph::from_edges(&[("c", "x"), ("c", "y"), ("c", "z")]).unwrap())
}

/// Five vertices with maximal cliques {a,b,c}, {b,c,d}, {c,e}.
pub fn g1() -> Graph {
    checked(
        Graph::from_edges(&[
            ("a", "b"),
            ("a", "c"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
            ("c", "e"),
        ])
        .unwrap(),
    )
}

fn checked(g: Graph) -> Graph {
    assert!(g.is_connected(), "fixture must be connected");
    assert!(chordality_peo(&g).is_some(), "fixture must be chordal");
    g
}

/// Random connected chordal graph via subtree intersection: build a random
/// tree on `k` nodes, give each of `n` vertices a random connected subtree,
/// join two vertices iff their subtrees meet, keep the largest component.
pub fn random_chordal(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if n == 0 || k == 0 {
        return Err(Error::invalid("random_chordal needs n >= 1 and k >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tree_adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    for child in 1..k {
        let parent = rng.gen_range(0..child);
        tree_adj[child].push(parent);
        tree_adj[parent].push(child);
    }
    let width = n.to_string().len();
    let names: Vec<String> = (0..n).map(|i| format!("v{i:0width$}")).collect();
    let subtrees: Vec<Vec<bool>> = (0..n)
        .map(|_| {
            // Bias subtrees small so intersections stay sparse and the
            // clique structure is rich; min of three uniforms.
            let target = 1 + rng
                .gen_range(0..k)
                .min(rng.gen_range(0..k))
                .min(rng.gen_range(0..k));
            let mut inside = vec![false; k];
            let start = rng.gen_range(0..k);
            inside[start] = true;
            let mut frontier: Vec<usize> = tree_adj[start].clone();
            let mut size = 1;
            while size < target && !frontier.is_empty() {
                let pick = rng.gen_range(0..frontier.len());
                let node = frontier.swap_remove(pick);
                if inside[node] {
                    continue;
                }
                inside[node] = true;
                size += 1;
                frontier.extend(tree_adj[node].iter().filter(|&&x| !inside[x]));
            }
            inside
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if subtrees[i].iter().zip(&subtrees[j]).any(|(&a, &b)| a && b) {
                edges.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    let g = Graph::from_named(names, edges)?;
    let largest = g
        .components_ids()
        .into_iter()
        .max_by_key(|c| c.len())
        .expect("n >= 1");
    let g = g.induced_ids(&largest);
    debug_assert!(chordality_peo(&g).is_some());
    Ok(g)
}

/// Seeded random partial order over the vertices of `g`: a handful of random
/// pairs, transitively closed, with pairs that would close a cycle dropped.
pub fn random_order(g: &Graph, seed: u64) -> StrictPartialOrder<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attempts = rng.gen_range(0..=g.vertex_count() + 2);
    random_order_with(g, attempts, rng.gen())
}

/// Like [`random_order`] but with a fixed number of pair-sampling attempts.
/// Cycle-closing pairs are dropped; the result is transitively closed.
pub fn random_order_with(g: &Graph, attempts: usize, seed: u64) -> StrictPartialOrder<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.vertex_count();
    if n < 2 {
        return StrictPartialOrder::empty();
    }
    // Incremental reachability keeps cycle checks cheap even for hundreds of
    // pairs: reach[x][y] records x < y in the closure so far.
    let mut reach = vec![vec![false; n]; n];
    for _ in 0..attempts {
        let x = rng.gen_range(0..n);
        let mut y = rng.gen_range(0..n);
        while y == x {
            y = rng.gen_range(0..n);
        }
        if reach[y][x] || reach[x][y] {
            continue;
        }
        let sources: Vec<usize> = (0..n).filter(|&a| a == x || reach[a][x]).collect();
        let targets: Vec<usize> = (0..n).filter(|&b| b == y || reach[y][b]).collect();
        for &a in &sources {
            for &b in &targets {
                if a != b {
                    reach[a][b] = true;
                }
            }
        }
    }
    let pairs = (0..n).flat_map(|x| {
        let reach = &reach;
        (0..n)
            .filter(move |&y| reach[x][y])
            .map(move |y| (g.name(x).to_string(), g.name(y).to_string()))
    });
    crate::order::order_from_pairs(pairs).expect("incremental closure is cycle-free")
}

/// Brute force ground truth: does some MCS ordering of `g` extend `r`?
/// Guarded to at most 9 vertices.
pub fn oracle_psop(g: &Graph, r: &StrictPartialOrder<String>) -> Result<bool> {
    if g.vertex_count() > 9 {
        return Err(Error::TooLarge(format!(
            "oracle_psop is limited to 9 vertices, got {}",
            g.vertex_count()
        )));
    }
    for sigma in enumerate_orderings(g, Paradigm::Mcs, 9)? {
        let lin = crate::order::LinearOrder::new(sigma).unwrap();
        if lin.extends(r)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Clique graph via spanning trees instead of separator tests: the edge set
/// is the union of all maximum-weight spanning trees of the clique
/// intersection graph. An edge lies in some maximum spanning tree iff
/// Kruskal with that edge pre-merged still reaches the unconstrained
/// maximum total weight. Guarded to at most 12 maximal cliques.
pub fn oracle_clique_graph(g: &Graph) -> Result<CliqueGraph> {
    if g.is_empty() {
        return Err(Error::invalid("clique graph of an empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let cliques = maximal_cliques_ids(g)?;
    if cliques.len() > 12 {
        return Err(Error::TooLarge(format!(
            "oracle_clique_graph is limited to 12 cliques, got {}",
            cliques.len()
        )));
    }
    let m = cliques.len();
    let mut candidates: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let label = intersect_sorted(&cliques[i], &cliques[j]);
            if !label.is_empty() {
                candidates.push((i, j, label));
            }
        }
    }
    let mut by_weight: Vec<usize> = (0..candidates.len()).collect();
    by_weight.sort_by_key(|&e| std::cmp::Reverse(candidates[e].2.len()));

    let max_total = |forced: Option<usize>| -> usize {
        let mut dsu = Dsu::new(m);
        let mut total = 0;
        if let Some(f) = forced {
            let (a, b, ref label) = candidates[f];
            dsu.union(a, b);
            total += label.len();
        }
        for &e in &by_weight {
            if Some(e) == forced {
                continue;
            }
            let (a, b, ref label) = candidates[e];
            if dsu.union(a, b) {
                total += label.len();
            }
        }
        total
    };

    let best = max_total(None);
    let kept: Vec<(usize, usize, Vec<usize>)> = (0..candidates.len())
        .filter(|&e| max_total(Some(e)) == best)
        .map(|e| candidates[e].clone())
        .collect();
    Ok(CliqueGraph::from_parts(
        g.vertices().to_vec().into(),
        cliques,
        kept,
    ))
}
