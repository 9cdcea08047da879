//! Undirected simple graphs over dense vertex ids.
//!
//! Vertices are `0..vertex_count()`, each carrying a label token taken from
//! the input file. Adjacency is stored as ordered sets so that every
//! iteration order in the crate is deterministic.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

mod separator;
mod transform;

pub use separator::{
    chordless_path_to_separator, close_separator, component_of, is_minimal_separator,
    is_separator, minimalize, Separator, Terminals,
};
pub use transform::{absorb, add_star, contract_into, saturate, Contraction};

pub type Vertex = usize;
pub type VertexSet = BTreeSet<Vertex>;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
    adj: Vec<BTreeSet<Vertex>>,
}

impl Graph {
    /// Graph on `n` isolated vertices labelled `"0"`, `"1"`, ...
    pub fn new(n: usize) -> Self {
        Self::with_labels((0..n).map(|v| v.to_string()))
    }

    /// Graph on isolated vertices with the given labels. Labels must be unique.
    pub fn with_labels<I, S>(labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(v, l)| (l.clone(), v))
            .collect::<HashMap<_, _>>();
        assert_eq!(index.len(), labels.len(), "duplicate vertex label");
        let adj = vec![BTreeSet::new(); labels.len()];
        Graph { labels, index, adj }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Parses whitespace-separated `u v` label pairs, one edge per line.
    ///
    /// Blank lines and lines starting with `#` are skipped. Labels receive
    /// ids in order of first appearance. Repeated edges collapse into one;
    /// self-loops are rejected.
    pub fn parse(text: &str) -> Result<Self> {
        let mut g = Graph::with_labels(Vec::<String>::new());
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let [u, v] = tokens[..] else {
                return Err(Error::MalformedLine {
                    line: i + 1,
                    found: line.to_string(),
                });
            };
            if u == v {
                return Err(Error::SelfLoop {
                    line: i + 1,
                    label: u.to_string(),
                });
            }
            let u = g.intern(u);
            let v = g.intern(v);
            g.add_edge(u, v);
        }
        Ok(g)
    }

    fn intern(&mut self, label: &str) -> Vertex {
        if let Some(&v) = self.index.get(label) {
            return v;
        }
        let v = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), v);
        self.adj.push(BTreeSet::new());
        v
    }

    /// Inserts the edge `{u, v}`. Returns `false` if it was already present
    /// or if `u == v`.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        assert!(u < self.adj.len() && v < self.adj.len(), "vertex out of range");
        if u == v {
            return false;
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        fresh
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.adj.len()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<Vertex> {
        if self.contains(v) {
            Ok(v)
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Result<Vertex> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Open neighbourhood of a vertex set: `N(A) = (⋃ N(a)) \ A`.
    pub fn neighborhood<'a, I>(&self, set: I) -> VertexSet
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        let members: VertexSet = set.into_iter().copied().collect();
        members
            .iter()
            .flat_map(|&v| self.adj[v].iter().copied())
            .filter(|v| !members.contains(v))
            .collect()
    }

    /// Copy of the graph with every edge incident to `removed` dropped.
    ///
    /// Vertex ids are unchanged, so this stands in for `G - X` wherever only
    /// connectivity between the remaining vertices matters.
    pub fn isolate<'a, I>(&self, removed: I) -> Graph
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        let mut g = self.clone();
        for &x in removed {
            for y in std::mem::take(&mut g.adj[x]) {
                g.adj[y].remove(&x);
            }
        }
        g
    }

    /// Vertices reachable from `start` without entering a blocked vertex.
    pub(crate) fn reach(&self, blocked: &[bool], start: Vertex) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        if blocked[start] {
            return seen;
        }
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] && !blocked[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub(crate) fn mask<'a, I>(&self, set: I) -> Vec<bool>
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        let mut mask = vec![false; self.vertex_count()];
        for &v in set {
            mask[v] = true;
        }
        mask
    }

    /// Comma-joined labels of the given vertices, in the order given.
    pub fn format_set<'a, I>(&self, set: I) -> String
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        set.into_iter()
            .map(|&v| self.label(v))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}; ", self.vertex_count())?;
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v)| format!("{}-{}", self.label(u), self.label(v)))
            .collect();
        write!(f, "{})", edges.join(" "))
    }
}
