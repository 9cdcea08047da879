//! Separator sets and the structural queries on them.

use std::fmt;

use crate::error::{Error, Result};

use super::{contract_into, Graph, Vertex, VertexSet};

/// A canonical vertex set: strictly increasing, duplicate-free.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Separator(Vec<Vertex>);

impl Separator {
    pub fn new<I: IntoIterator<Item = Vertex>>(members: I) -> Self {
        let mut v: Vec<Vertex> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Separator(v)
    }

    pub fn empty() -> Self {
        Separator(Vec::new())
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vertex> {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &Separator) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn union(&self, other: &Separator) -> Separator {
        Separator::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn to_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    pub fn labels<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.0.iter().map(|&v| g.label(v)).collect()
    }

    /// Comma-joined labels, sorted by vertex id.
    pub fn display<'a>(&'a self, g: &'a Graph) -> impl fmt::Display + 'a {
        struct Show<'a>(&'a Separator, &'a Graph);
        impl fmt::Display for Show<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.1.format_set(self.0.iter()))
            }
        }
        Show(self, g)
    }
}

impl fmt::Debug for Separator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl FromIterator<Vertex> for Separator {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Separator::new(iter)
    }
}

impl From<VertexSet> for Separator {
    fn from(set: VertexSet) -> Self {
        Separator(set.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Separator {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// The two distinguished vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Terminals {
    pub s: Vertex,
    pub t: Vertex,
}

impl Terminals {
    pub fn new(g: &Graph, s: Vertex, t: Vertex) -> Result<Self> {
        g.check_vertex(s)?;
        g.check_vertex(t)?;
        if s == t {
            return Err(Error::SameTerminals);
        }
        Ok(Terminals { s, t })
    }

    pub fn from_labels(g: &Graph, s: &str, t: &str) -> Result<Self> {
        Terminals::new(g, g.vertex(s)?, g.vertex(t)?)
    }

    pub fn swapped(self) -> Self {
        Terminals { s: self.t, t: self.s }
    }

    pub fn adjacent(self, g: &Graph) -> bool {
        g.has_edge(self.s, self.t)
    }

    fn check_disjoint(self, set: &[Vertex]) -> Result<()> {
        if set.contains(&self.s) || set.contains(&self.t) {
            Err(Error::TerminalInSet)
        } else {
            Ok(())
        }
    }

    /// Errors unless the terminals are non-adjacent and connected.
    pub(crate) fn check_separable(self, g: &Graph) -> Result<()> {
        if self.adjacent(g) {
            return Err(Error::TerminalsAdjacent);
        }
        if !g.reach(&vec![false; g.vertex_count()], self.s)[self.t] {
            return Err(Error::AlreadySeparated);
        }
        Ok(())
    }
}

fn check_members(g: &Graph, set: &[Vertex]) -> Result<()> {
    set.iter().try_for_each(|&v| g.check_vertex(v).map(drop))
}

/// Connected component of `v` in `G - removed`.
pub fn component_of(g: &Graph, removed: &[Vertex], v: Vertex) -> Result<VertexSet> {
    g.check_vertex(v)?;
    check_members(g, removed)?;
    if removed.contains(&v) {
        return Err(Error::VertexRemoved(v));
    }
    let blocked = g.mask(removed);
    Ok(mask_to_set(&g.reach(&blocked, v)))
}

pub(crate) fn mask_to_set(mask: &[bool]) -> VertexSet {
    mask.iter()
        .enumerate()
        .filter_map(|(v, &m)| m.then_some(v))
        .collect()
}

pub fn is_separator(g: &Graph, term: Terminals, set: &[Vertex]) -> Result<bool> {
    check_members(g, set)?;
    term.check_disjoint(set)?;
    Ok(!g.reach(&g.mask(set), term.s)[term.t])
}

/// Full-component test: `set` separates and `N(C_s) = set = N(C_t)`.
pub fn is_minimal_separator(g: &Graph, term: Terminals, set: &[Vertex]) -> Result<bool> {
    check_members(g, set)?;
    term.check_disjoint(set)?;
    let blocked = g.mask(set);
    let cs = g.reach(&blocked, term.s);
    if cs[term.t] {
        return Ok(false);
    }
    let ct = g.reach(&blocked, term.t);
    let target = Separator::new(set.iter().copied());
    let full = |side: &[bool]| {
        let boundary = g.neighborhood(&mask_to_set(side));
        Separator::from(boundary) == target
    };
    Ok(full(&cs) && full(&ct))
}

/// The unique minimal separator inside `N(s)`: `N(C_t(G - N(s)))`.
pub fn close_separator(g: &Graph, term: Terminals) -> Result<Separator> {
    term.check_separable(g)?;
    let ns: Vec<Vertex> = g.neighbors(term.s).iter().copied().collect();
    let ct = g.reach(&g.mask(&ns), term.t);
    Ok(Separator::from(g.neighborhood(&mask_to_set(&ct))))
}

/// Shrinks a separator to a minimal one inside it: first to `N(C_s)`, then
/// to the boundary of the t-side of that.
pub fn minimalize(g: &Graph, term: Terminals, set: &[Vertex]) -> Result<Separator> {
    if !is_separator(g, term, set)? {
        return Err(Error::NotASeparator);
    }
    let cs = g.reach(&g.mask(set), term.s);
    let inner: Vec<Vertex> = g.neighborhood(&mask_to_set(&cs)).into_iter().collect();
    let ct = g.reach(&g.mask(&inner), term.t);
    Ok(Separator::from(g.neighborhood(&mask_to_set(&ct))))
}

fn check_chordless_path(g: &Graph, term: Terminals, path: &[Vertex], v: Vertex) -> Result<usize> {
    check_members(g, path)?;
    if path.len() < 2 || path[0] != term.s || path[path.len() - 1] != term.t {
        return Err(Error::NotAPath);
    }
    let mut seen = vec![false; g.vertex_count()];
    for &x in path {
        if std::mem::replace(&mut seen[x], true) {
            return Err(Error::NotAPath);
        }
    }
    if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return Err(Error::NotAPath);
    }
    for i in 0..path.len() {
        for j in i + 2..path.len() {
            if g.has_edge(path[i], path[j]) {
                return Err(Error::NotChordless(i, j));
            }
        }
    }
    match path.iter().position(|&x| x == v) {
        Some(pos) if pos > 0 && pos + 1 < path.len() => Ok(pos),
        _ => Err(Error::VertexNotOnPath(v)),
    }
}

/// Turns a chordless s,t-path through `v` into a minimal s,t-separator
/// containing `v`.
///
/// The part of the path before `v` is contracted into `s` and the part after
/// it into `t`. `v` then neighbours both terminals, so the separator close to
/// `s` in the contracted graph contains it; that set is also a minimal
/// separator of the original graph.
pub fn chordless_path_to_separator(
    g: &Graph,
    term: Terminals,
    path: &[Vertex],
    v: Vertex,
) -> Result<Separator> {
    let pos = check_chordless_path(g, term, path, v)?;

    let mut graph = g.clone();
    // to_orig[w] = id in `g` of vertex w of the current graph
    let mut to_orig: Vec<Vertex> = g.vertices().collect();
    let mut to_cur: Vec<Option<Vertex>> = g.vertices().map(Some).collect();
    let mut merge = |anchor: Vertex, other: Vertex| -> Result<()> {
        let (a, o) = (to_cur[anchor].unwrap(), to_cur[other].unwrap());
        let c = contract_into(&graph, (a, o), a)?;
        to_orig = c.new_to_old.iter().map(|&w| to_orig[w]).collect();
        for slot in to_cur.iter_mut() {
            *slot = slot.and_then(|w| c.old_to_new[w]);
        }
        graph = c.graph;
        Ok(())
    };
    for &x in &path[1..pos] {
        merge(term.s, x)?;
    }
    for &x in path[pos + 1..path.len() - 1].iter().rev() {
        merge(term.t, x)?;
    }

    let contracted = Terminals {
        s: to_cur[term.s].unwrap(),
        t: to_cur[term.t].unwrap(),
    };
    let close = close_separator(&graph, contracted)?;
    Ok(close.iter().map(|&w| to_orig[w]).collect())
}
