//! Undirected simple graphs over named vertices.
//!
//! Vertices are opaque strings. Internally every vertex gets a dense index;
//! indices are assigned in lexicographic name order, so index order and name
//! order agree everywhere (deterministic tie-breaking relies on this).

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an explicit vertex list and edge list.
    ///
    /// Rejects duplicate vertices, duplicate edges, self-loops and edges over
    /// undeclared vertices.
    pub fn new(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Graph> {
        Graph::from_named(
            vertices.iter().map(|s| s.to_string()).collect(),
            edges
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        )
    }

    /// Builds a graph whose vertex set is inferred from the edges.
    pub fn from_edges(edges: &[(&str, &str)]) -> Result<Graph> {
        let mut vertices: Vec<&str> = edges.iter().flat_map(|(a, b)| [*a, *b]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        Graph::new(&vertices, edges)
    }

    pub fn from_named(vertices: Vec<String>, edges: Vec<(String, String)>) -> Result<Graph> {
        let mut names = vertices;
        names.sort_unstable();
        if names.windows(2).any(|w| w[0] == w[1]) {
            let dup = names
                .windows(2)
                .find(|w| w[0] == w[1])
                .map(|w| w[0].clone())
                .unwrap();
            return Err(Error::invalid(format!("duplicate vertex '{dup}'")));
        }
        let index: HashMap<String, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let mut adj = vec![Vec::new(); names.len()];
        let mut seen = std::collections::HashSet::new();
        let mut edge_count = 0;
        for (a, b) in &edges {
            let (&u, &v) = match (index.get(a), index.get(b)) {
                (Some(u), Some(v)) => (u, v),
                _ => {
                    return Err(Error::invalid(format!(
                        "edge ({a}, {b}) mentions an unknown vertex"
                    )))
                }
            };
            if u == v {
                return Err(Error::invalid(format!("self-loop at '{a}'")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::invalid(format!("duplicate edge ({a}, {b})")));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            names,
            index,
            adj,
            edge_count,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Vertex names in index order (lexicographically sorted).
    pub fn vertices(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn neighbors(&self, id: usize) -> &[usize] {
        &self.adj[id]
    }

    pub fn degree(&self, id: usize) -> usize {
        self.adj[id].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as index pairs (u < v), sorted.
    pub fn edge_ids(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.names.len() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Edges as name pairs, sorted.
    pub fn edges(&self) -> Vec<(String, String)> {
        self.edge_ids()
            .into_iter()
            .map(|(u, v)| (self.names[u].clone(), self.names[v].clone()))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components_ids().len() <= 1
    }

    /// Partition of the vertices into connected components.
    ///
    /// Each component is sorted; components are ordered by their smallest
    /// vertex. Singleton vertices form singleton components.
    pub fn connected_components(&self) -> Vec<Vec<String>> {
        self.components_ids()
            .into_iter()
            .map(|c| c.into_iter().map(|v| self.names[v].clone()).collect())
            .collect()
    }

    pub(crate) fn components_ids(&self) -> Vec<Vec<usize>> {
        let n = self.names.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = count;
                        stack.push(v);
                    }
                }
            }
            count += 1;
        }
        let mut out = vec![Vec::new(); count];
        for v in 0..n {
            out[comp[v]].push(v);
        }
        out
    }

    /// True iff `u` and `v` fall in different components once `s` is deleted.
    pub fn separates(&self, s: &[&str], u: &str, v: &str) -> Result<bool> {
        let resolve = |name: &str| {
            self.index_of(name)
                .ok_or_else(|| Error::invalid(format!("unknown vertex '{name}'")))
        };
        let u = resolve(u)?;
        let v = resolve(v)?;
        let s: Vec<usize> = s.iter().map(|x| resolve(x)).collect::<Result<_>>()?;
        self.separates_ids(&s, u, v)
    }

    pub(crate) fn separates_ids(&self, s: &[usize], u: usize, v: usize) -> Result<bool> {
        if u == v {
            return Err(Error::invalid("separation needs two distinct vertices"));
        }
        if s.contains(&u) || s.contains(&v) {
            return Err(Error::invalid(
                "separator must not contain the vertices it separates",
            ));
        }
        let n = self.names.len();
        let mut blocked = vec![false; n];
        for &x in s {
            blocked[x] = true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![u];
        seen[u] = true;
        while let Some(x) = stack.pop() {
            if x == v {
                return Ok(false);
            }
            for &y in &self.adj[x] {
                if !seen[y] && !blocked[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        Ok(true)
    }

    /// Subgraph induced by the given vertices; names are preserved.
    pub fn induced_subgraph(&self, vertices: &[&str]) -> Result<Graph> {
        let keep: Vec<usize> = vertices
            .iter()
            .map(|v| {
                self.index_of(v)
                    .ok_or_else(|| Error::invalid(format!("unknown vertex '{v}'")))
            })
            .collect::<Result<_>>()?;
        Ok(self.induced_ids(&keep))
    }

    pub(crate) fn induced_ids(&self, keep: &[usize]) -> Graph {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let names: Vec<String> = keep.iter().map(|&v| self.names[v].clone()).collect();
        let remap: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); keep.len()];
        let mut edge_count = 0;
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if let Some(&j) = remap.get(&w) {
                    adj[i].push(j);
                    if i < j {
                        edge_count += 1;
                    }
                }
            }
        }
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        Graph {
            names,
            index,
            adj,
            edge_count,
        }
    }
}
