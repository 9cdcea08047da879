//! Minimum vertex cuts through Menger's theorem.
//!
//! Every vertex `v` is split into `v_in -> v_out` with capacity one, and each
//! undirected edge becomes two uncapacitated arcs `u_out -> v_in` and
//! `v_out -> u_in`. Source-side and sink vertices get an uncapacitated
//! internal arc, so a maximum flow counts internally vertex-disjoint paths and
//! its saturated internal arcs give a minimum vertex separator.
//!
//! Augmenting paths are found by breadth-first search. Each augmentation
//! costs `O(n + m)` and a cut of size `k` needs `k + 1` of them.

use std::cell::Cell;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{saturate, Graph, Separator, Terminals, Vertex, VertexSet};

thread_local! {
    static FLOW_CALLS: Cell<u64> = const { Cell::new(0) };
}

/// Number of max-flow computations run on this thread so far.
///
/// Read it before and after a piece of work to count the flow calls that
/// work made.
pub fn flow_calls() -> u64 {
    FLOW_CALLS.with(Cell::get)
}

/// Which of the minimum cuts to report when several exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The cut whose source-side component is inclusion-minimal.
    Closest,
    /// The cut whose source-side component is inclusion-maximal.
    Furthest,
}

/// Vertex-split residual network for one source set and one sink.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    n: usize,
    head: Vec<usize>,
    cap: Vec<u32>,
    initial: Vec<u32>,
    out: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
    value: usize,
}

fn v_in(v: Vertex) -> usize {
    2 * v
}

fn v_out(v: Vertex) -> usize {
    2 * v + 1
}

impl FlowNetwork {
    /// Builds the network. `sources` marks the source-side vertices; they and
    /// `sink` are never cut. The caller guarantees `sink` is neither a source
    /// nor adjacent to one.
    pub fn new(g: &Graph, sources: &[bool], sink: Vertex) -> Self {
        let n = g.vertex_count();
        // exceeds any vertex cut
        let inf = n as u32 + 1;
        let mut net = FlowNetwork {
            n,
            head: Vec::new(),
            cap: Vec::new(),
            initial: Vec::new(),
            out: vec![Vec::new(); 2 * n + 1],
            source: 2 * n,
            sink: v_in(sink),
            value: 0,
        };
        for v in g.vertices() {
            let c = if sources[v] || v == sink { inf } else { 1 };
            net.add_arc(v_in(v), v_out(v), c);
        }
        for (u, v) in g.edges() {
            net.add_arc(v_out(u), v_in(v), inf);
            net.add_arc(v_out(v), v_in(u), inf);
        }
        for v in g.vertices().filter(|&v| sources[v]) {
            net.add_arc(net.source, v_in(v), inf);
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, c: u32) {
        let id = self.head.len();
        self.head.extend([to, from]);
        self.cap.extend([c, 0]);
        self.initial.extend([c, 0]);
        self.out[from].push(id);
        self.out[to].push(id + 1);
    }

    fn augment(&mut self) -> bool {
        let mut parent = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        'bfs: while let Some(x) = queue.pop_front() {
            for &arc in &self.out[x] {
                let y = self.head[arc];
                if self.cap[arc] > 0 && !seen[y] {
                    seen[y] = true;
                    parent[y] = arc;
                    if y == self.sink {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        if !seen[self.sink] {
            return false;
        }
        let mut arcs = Vec::new();
        let mut x = self.sink;
        while x != self.source {
            let arc = parent[x];
            arcs.push(arc);
            x = self.head[arc ^ 1];
        }
        let push = arcs.iter().map(|&a| self.cap[a]).min().unwrap();
        for a in arcs {
            self.cap[a] -= push;
            self.cap[a ^ 1] += push;
        }
        self.value += push as usize;
        true
    }

    /// Runs augmentations until none is left, or until the value exceeds
    /// `limit`. Returns the flow value reached.
    pub fn max_flow(&mut self, limit: Option<usize>) -> usize {
        FLOW_CALLS.with(|c| c.set(c.get() + 1));
        while limit.is_none_or(|l| self.value <= l) && self.augment() {}
        self.value
    }

    pub fn value(&self) -> usize {
        self.value
    }

    fn residual_reach(&self) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[self.source] = true;
        let mut stack = vec![self.source];
        while let Some(x) = stack.pop() {
            for &arc in &self.out[x] {
                let y = self.head[arc];
                if self.cap[arc] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    fn residual_coreach(&self) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[self.sink] = true;
        let mut stack = vec![self.sink];
        while let Some(y) = stack.pop() {
            // arc ^ 1 leaves y; the arc itself enters y
            for &back in &self.out[y] {
                let arc = back ^ 1;
                let x = self.head[back];
                if self.cap[arc] > 0 && !seen[x] {
                    seen[x] = true;
                    stack.push(x);
                }
            }
        }
        seen
    }

    /// Minimum cut after a complete `max_flow`, together with the vertices
    /// reachable from the sources once the cut is removed.
    pub fn cut(&self, side: Side) -> (Separator, VertexSet) {
        let cut: Vec<Vertex> = match side {
            Side::Closest => {
                let r = self.residual_reach();
                (0..self.n).filter(|&v| r[v_in(v)] && !r[v_out(v)]).collect()
            }
            Side::Furthest => {
                let r = self.residual_coreach();
                (0..self.n).filter(|&v| r[v_out(v)] && !r[v_in(v)]).collect()
            }
        };
        let cut = Separator::new(cut);
        let side = self.source_side(&cut);
        (cut, side)
    }

    /// Vertices reachable from the sources over network arcs, never passing
    /// through a vertex of `cut`.
    fn source_side(&self, cut: &Separator) -> VertexSet {
        let mut seen = vec![false; self.out.len()];
        seen[self.source] = true;
        let mut stack = vec![self.source];
        while let Some(x) = stack.pop() {
            if x % 2 == 0 && x != self.source && cut.contains(x / 2) {
                continue;
            }
            for &arc in &self.out[x] {
                let y = self.head[arc];
                if self.initial[arc] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.n).filter(|&v| seen[v_out(v)]).collect()
    }

    /// Decomposes the flow into source-to-sink paths over original vertices.
    pub fn paths(&self) -> Vec<Vec<Vertex>> {
        let mut flow: Vec<u32> = self
            .initial
            .iter()
            .zip(&self.cap)
            .map(|(&i, &c)| i.saturating_sub(c))
            .collect();
        let mut paths = Vec::new();
        loop {
            let mut nodes = vec![self.source];
            let mut at = self.source;
            while at != self.sink {
                let Some(&arc) = self.out[at].iter().find(|&&a| a % 2 == 0 && flow[a] > 0) else {
                    break;
                };
                flow[arc] -= 1;
                at = self.head[arc];
                // a revisit closes a flow cycle; drop it from the path
                if let Some(pos) = nodes.iter().position(|&x| x == at) {
                    nodes.truncate(pos + 1);
                } else {
                    nodes.push(at);
                }
            }
            if at != self.sink {
                break;
            }
            let mut path: Vec<Vertex> = nodes[1..].iter().map(|&x| x / 2).collect();
            path.dedup();
            paths.push(path);
        }
        paths
    }
}

/// κ, a minimum separator and a maximum family of disjoint paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub kappa: usize,
    /// The minimum separator closest to `s`.
    pub separator: Separator,
    pub disjoint_paths: Vec<Vec<Vertex>>,
}

pub fn kappa(g: &Graph, term: Terminals) -> Result<CutResult> {
    term.check_separable(g)?;
    let mut net = FlowNetwork::new(g, &g.mask(&[term.s]), term.t);
    let kappa = net.max_flow(None);
    let (separator, _) = net.cut(Side::Closest);
    Ok(CutResult {
        kappa,
        separator,
        disjoint_paths: net.paths(),
    })
}

/// Maximum flow from a source set to `sink`, bounded by `limit`.
///
/// Returns the network after the flow, or `None` if the value exceeds
/// `limit`. Errors if the sources touch the sink or cannot reach it.
pub(crate) fn bounded_cut(
    g: &Graph,
    sources: &[bool],
    sink: Vertex,
    limit: Option<usize>,
) -> Result<Option<FlowNetwork>> {
    if sources[sink] || g.neighbors(sink).iter().any(|&v| sources[v]) {
        return Err(Error::SourceSinkAdjacent);
    }
    let mut net = FlowNetwork::new(g, sources, sink);
    let value = net.max_flow(limit);
    if limit.is_some_and(|l| value > l) {
        return Ok(None);
    }
    Ok(Some(net))
}

/// Minimum vertex separator between the set `sources` and the vertex `sink`.
pub fn min_separator_between(
    g: &Graph,
    sources: &VertexSet,
    sink: Vertex,
    side: Side,
) -> Result<Separator> {
    g.check_vertex(sink)?;
    for &v in sources {
        g.check_vertex(v)?;
    }
    let net = bounded_cut(g, &g.mask(sources), sink, None)?.expect("unbounded flow");
    if net.value() == 0 {
        return Err(Error::AlreadySeparated);
    }
    Ok(net.cut(side).0)
}

fn check_outside_terminals(g: &Graph, term: Terminals, set: &[Vertex]) -> Result<()> {
    for &v in set {
        g.check_vertex(v)?;
    }
    if set.contains(&term.s) || set.contains(&term.t) {
        return Err(Error::TerminalInSet);
    }
    Ok(())
}

/// A minimum s,t-separator containing every vertex of `include`, if one
/// exists: that is the case iff `κ(G - I) = κ(G) - |I|`.
pub fn min_separator_containing(
    g: &Graph,
    term: Terminals,
    include: &[Vertex],
) -> Result<Option<Separator>> {
    check_outside_terminals(g, term, include)?;
    let include = Separator::new(include.iter().copied());
    let target = kappa(g, term)?.kappa;
    if include.len() > target {
        return Ok(None);
    }
    let rest = g.isolate(&include);
    let found = match kappa(&rest, term) {
        Ok(cut) if cut.kappa + include.len() == target => Some(include.union(&cut.separator)),
        Ok(_) => None,
        Err(Error::AlreadySeparated) if include.len() == target => Some(include),
        Err(Error::AlreadySeparated) => None,
        Err(e) => return Err(e),
    };
    Ok(found)
}

/// A minimum-cardinality minimal s,t-separator avoiding `exclude`, found as
/// the minimum separator of `Sat(G, exclude)`.
pub fn min_separator_excluding(
    g: &Graph,
    term: Terminals,
    exclude: &[Vertex],
) -> Result<Option<Separator>> {
    check_outside_terminals(g, term, exclude)?;
    let sat = saturate(g, exclude);
    match kappa(&sat, term) {
        Ok(cut) => Ok(Some(cut.separator)),
        Err(Error::TerminalsAdjacent) => Ok(None),
        Err(e) => Err(e),
    }
}
