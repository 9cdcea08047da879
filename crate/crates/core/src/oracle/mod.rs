//! Exhaustive reference implementations.
//!
//! These work on bitmasks over the vertex set and only rely on [`Graph`] for
//! adjacency, so they stay independent of the flow-based algorithms they are
//! used to check. They are exponential and refuse inputs above a fixed size.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Separator, Terminals, Vertex};

pub mod fixtures;

pub const MAX_SEPARATOR_N: usize = 16;
pub const MAX_IMPORTANT_N: usize = 14;
pub const MAX_PATH_N: usize = 14;

fn guard(g: &Graph, max: usize) -> Result<()> {
    let n = g.vertex_count();
    if n > max {
        Err(Error::TooLarge { n, max })
    } else {
        Ok(())
    }
}

/// Adjacency and separation tests on `u32` vertex masks.
struct Masks {
    adj: Vec<u32>,
    term: Terminals,
    /// Non-terminal vertices, in id order.
    inner: Vec<Vertex>,
}

impl Masks {
    fn new(g: &Graph, term: Terminals) -> Self {
        let adj = g
            .vertices()
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        let inner = g.vertices().filter(|&v| v != term.s && v != term.t).collect();
        Masks { adj, term, inner }
    }

    /// Component of `start` in `G - removed`, as a mask.
    fn component(&self, removed: u32, start: Vertex) -> u32 {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & !seen & !removed;
            seen |= fresh;
            frontier |= fresh;
        }
        seen
    }

    fn separates(&self, removed: u32) -> bool {
        self.component(removed, self.term.s) & (1 << self.term.t) == 0
    }

    /// Every subset of the non-terminal vertices, as a vertex mask.
    fn subsets(&self) -> impl Iterator<Item = u32> + '_ {
        (0u32..1 << self.inner.len()).map(|bits| {
            self.inner
                .iter()
                .enumerate()
                .filter(|&(i, _)| bits & (1 << i) != 0)
                .fold(0u32, |m, (_, &v)| m | 1 << v)
        })
    }

    /// Separates, and no single vertex can be dropped. Separation is
    /// monotone in the removed set, so this is inclusion-minimality.
    fn minimal(&self, removed: u32) -> bool {
        if !self.separates(removed) {
            return false;
        }
        let mut rest = removed;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            if self.separates(removed & !bit) {
                return false;
            }
        }
        true
    }
}

fn to_separator(mask: u32) -> Separator {
    (0..32).filter(|&v| mask & (1 << v) != 0).collect()
}

/// Every minimal s,t-separator, by testing all vertex subsets.
pub fn brute_minimal_separators(g: &Graph, term: Terminals) -> Result<BTreeSet<Separator>> {
    guard(g, MAX_SEPARATOR_N)?;
    let m = Masks::new(g, term);
    Ok(m.subsets().filter(|&x| m.minimal(x)).map(to_separator).collect())
}

/// Important separators of size at most `k`, straight from the definition:
/// `S` is important if every other minimal separator with a strictly
/// smaller `s` component is strictly larger than `S`.
pub fn brute_important(g: &Graph, term: Terminals, k: usize) -> Result<BTreeSet<Separator>> {
    guard(g, MAX_IMPORTANT_N)?;
    let m = Masks::new(g, term);
    let minimal: Vec<(u32, u32)> = m
        .subsets()
        .filter(|&x| m.minimal(x))
        .map(|x| (x, m.component(x, term.s)))
        .collect();
    let important = minimal.iter().filter(|&&(x, side)| {
        minimal.iter().all(|&(y, other)| {
            let strictly_inside = other & side == other && other != side;
            !strictly_inside || y.count_ones() > x.count_ones()
        })
    });
    Ok(important
        .filter(|&&(x, _)| x.count_ones() as usize <= k)
        .map(|&(x, _)| to_separator(x))
        .collect())
}

/// All s,t-separators of minimum cardinality.
pub fn brute_minimum_separators(g: &Graph, term: Terminals) -> Result<BTreeSet<Separator>> {
    guard(g, MAX_SEPARATOR_N)?;
    let m = Masks::new(g, term);
    let separating: Vec<u32> = m.subsets().filter(|&x| m.separates(x)).collect();
    let Some(best) = separating.iter().map(|x| x.count_ones()).min() else {
        return Ok(BTreeSet::new());
    };
    Ok(separating
        .into_iter()
        .filter(|x| x.count_ones() == best)
        .map(to_separator)
        .collect())
}

/// Depth-first search over induced s,t-paths. `visit` returns `false` to
/// stop the search.
fn induced_paths(g: &Graph, term: Terminals, visit: &mut dyn FnMut(&[Vertex]) -> bool) {
    fn extend(
        g: &Graph,
        t: Vertex,
        path: &mut Vec<Vertex>,
        on_path: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[Vertex]) -> bool,
    ) -> bool {
        let last = *path.last().unwrap();
        if last == t {
            return visit(path);
        }
        let neighbors: Vec<Vertex> = g.neighbors(last).iter().copied().collect();
        for w in neighbors {
            if on_path[w] {
                continue;
            }
            // w may only touch the current end of the path
            let chord = path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w));
            if chord {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            let go_on = extend(g, t, path, on_path, visit);
            on_path[w] = false;
            path.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    let mut on_path = vec![false; g.vertex_count()];
    on_path[term.s] = true;
    extend(g, term.t, &mut vec![term.s], &mut on_path, visit);
}

/// Every chordless s,t-path through `v`, in depth-first order.
pub fn brute_chordless_paths_through(g: &Graph, term: Terminals, v: Vertex) -> Result<Vec<Vec<Vertex>>> {
    guard(g, MAX_PATH_N)?;
    g.check_vertex(v)?;
    let mut found = Vec::new();
    induced_paths(g, term, &mut |p| {
        if p.contains(&v) {
            found.push(p.to_vec());
        }
        true
    });
    Ok(found)
}

/// First chordless s,t-path through `v` in depth-first order, on graphs of
/// at most `max_n` vertices.
pub fn find_chordless_path_through(
    g: &Graph,
    term: Terminals,
    v: Vertex,
    max_n: usize,
) -> Result<Option<Vec<Vertex>>> {
    guard(g, max_n)?;
    g.check_vertex(v)?;
    let mut found = None;
    induced_paths(g, term, &mut |p| {
        if p.contains(&v) {
            found = Some(p.to_vec());
            false
        } else {
            true
        }
    });
    Ok(found)
}

/// Erdős–Rényi graph `G(n, p)`; the same seed always gives the same graph.
pub fn random_graph(n: usize, edge_probability: f64, seed: u64) -> Graph {
    assert!(
        (0.0..=1.0).contains(&edge_probability),
        "edge probability must lie in [0, 1]"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(edge_probability) {
                g.add_edge(u, v);
            }
        }
    }
    g
}
