//! Edge-adding and contracting transformations. Each returns a new graph.

use crate::error::{Error, Result};

use super::{Graph, Vertex, VertexSet};

/// Saturates `set`: afterwards `N[u]` is a clique for every `u` in `set`.
///
/// The result is the smallest supergraph with that property. It is built by
/// turning `K ∪ N(K)` into a clique for each connected component `K` of
/// `G[set]`, which is also what repeated single-vertex saturation converges
/// to. When no two members of `set` are adjacent this is simply the union of
/// the cliques on the original `N[u]`. The order of `set` is irrelevant.
pub fn saturate<'a, I>(g: &Graph, set: I) -> Graph
where
    I: IntoIterator<Item = &'a Vertex>,
{
    let mut in_set = vec![false; g.vertex_count()];
    for &u in set {
        in_set[u] = true;
    }
    let mut done = vec![false; g.vertex_count()];
    let mut out = g.clone();
    for root in g.vertices().filter(|&u| in_set[u]) {
        if done[root] {
            continue;
        }
        let mut clique = VertexSet::new();
        done[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            clique.insert(u);
            for &w in g.neighbors(u) {
                clique.insert(w);
                if in_set[w] && !done[w] {
                    done[w] = true;
                    stack.push(w);
                }
            }
        }
        let members: Vec<Vertex> = clique.into_iter().collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                out.add_edge(x, y);
            }
        }
    }
    out
}

/// Adds an edge from `s` to every member of `set`.
pub fn add_star<'a, I>(g: &Graph, s: Vertex, set: I) -> Graph
where
    I: IntoIterator<Item = &'a Vertex>,
{
    let mut out = g.clone();
    for &v in set {
        out.add_edge(s, v);
    }
    out
}

/// Connects `s` to every neighbour of its neighbour `v`. `v` itself stays.
pub fn absorb(g: &Graph, s: Vertex, v: Vertex) -> Result<Graph> {
    g.check_vertex(s)?;
    g.check_vertex(v)?;
    if !g.has_edge(s, v) {
        return Err(Error::NotANeighbor(v));
    }
    let mut out = g.clone();
    for &y in g.neighbors(v) {
        out.add_edge(s, y);
    }
    Ok(out)
}

/// Result of contracting an edge: the smaller graph plus the id mapping.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: Graph,
    /// `old_to_new[v]` is the id of `v` in `graph`; `None` for the vertex
    /// that was merged away.
    pub old_to_new: Vec<Option<Vertex>>,
    /// `new_to_old[w]` is the id in the original graph.
    pub new_to_old: Vec<Vertex>,
}

/// Contracts the edge `{u, v}` into `target`, which must be one of its
/// endpoints. The other endpoint disappears and remaining ids are compacted.
pub fn contract_into(g: &Graph, (u, v): (Vertex, Vertex), target: Vertex) -> Result<Contraction> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    let gone = match target {
        t if t == u => v,
        t if t == v => u,
        t => return Err(Error::NotAnEndpoint(t)),
    };

    let new_to_old: Vec<Vertex> = g.vertices().filter(|&x| x != gone).collect();
    let mut old_to_new = vec![None; g.vertex_count()];
    for (new, &old) in new_to_old.iter().enumerate() {
        old_to_new[old] = Some(new);
    }
    let mut out = Graph::with_labels(new_to_old.iter().map(|&x| g.label(x).to_string()));
    let image = |x: Vertex| old_to_new[if x == gone { target } else { x }].unwrap();
    for (x, y) in g.edges() {
        out.add_edge(image(x), image(y));
    }
    Ok(Contraction {
        graph: out,
        old_to_new,
        new_to_old,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;

    fn with_extra(g: &Graph, extra: &[(&str, &str)]) -> Graph {
        let mut out = g.clone();
        for &(a, b) in extra {
            out.add_edge(g.vertex(a).unwrap(), g.vertex(b).unwrap());
        }
        out
    }

    fn ids(g: &Graph, labels: &[&str]) -> Vec<Vertex> {
        labels.iter().map(|l| g.vertex(l).unwrap()).collect()
    }

    fn edge_labels(g: &Graph) -> Vec<(String, String)> {
        let mut es: Vec<_> = g
            .edges()
            .map(|(x, y)| {
                let (a, b) = (g.label(x).to_string(), g.label(y).to_string());
                if a < b { (a, b) } else { (b, a) }
            })
            .collect();
        es.sort();
        es
    }

    #[test]
    fn saturate_examples() {
        let p4 = fixtures::p4().graph;
        assert_eq!(saturate(&p4, &ids(&p4, &["b"])), with_extra(&p4, &[("a", "t")]));
        assert_eq!(saturate(&p4, &[]), p4);
        let diamond = fixtures::diamond().graph;
        assert_eq!(
            saturate(&diamond, &ids(&diamond, &["a"])),
            with_extra(&diamond, &[("s", "t")])
        );
    }

    #[test]
    fn saturate_closes_adjacent_members_together() {
        // a and b are adjacent, so N[a] ∪ N[b] becomes one clique; otherwise
        // a would keep the new neighbour t outside its clique.
        let p4 = fixtures::p4().graph;
        let both = saturate(&p4, &ids(&p4, &["a", "b"]));
        assert_eq!(both, with_extra(&p4, &[("s", "b"), ("a", "t"), ("s", "t")]));
        assert_eq!(saturate(&p4, &ids(&p4, &["b", "a"])), both);
        let stepwise = saturate(&saturate(&p4, &ids(&p4, &["a"])), &ids(&p4, &["b"]));
        assert_eq!(stepwise, both);
    }

    #[test]
    fn saturate_non_adjacent_members_independently() {
        let theta = fixtures::theta().graph;
        let got = saturate(&theta, &ids(&theta, &["a", "c"]));
        assert_eq!(got, with_extra(&theta, &[("s", "t"), ("b", "t")]));
    }

    #[test]
    fn add_star_examples() {
        let theta = fixtures::theta().graph;
        let s = theta.vertex("s").unwrap();
        assert_eq!(
            add_star(&theta, s, &ids(&theta, &["a", "c"])),
            with_extra(&theta, &[("s", "c")])
        );
        assert_eq!(add_star(&theta, s, &[]), theta);
        let p4 = fixtures::p4().graph;
        assert_eq!(add_star(&p4, 0, &ids(&p4, &["b"])), with_extra(&p4, &[("s", "b")]));
    }

    #[test]
    fn absorb_examples() {
        let p4 = fixtures::p4().graph;
        let [s, a, b] = [0, 1, 2];
        let once = absorb(&p4, s, a).unwrap();
        assert_eq!(once, with_extra(&p4, &[("s", "b")]));
        assert_eq!(absorb(&once, s, b).unwrap(), with_extra(&once, &[("s", "t")]));
        let diamond = fixtures::diamond().graph;
        assert_eq!(
            absorb(&diamond, 0, diamond.vertex("a").unwrap()).unwrap(),
            with_extra(&diamond, &[("s", "t")])
        );
        assert_eq!(absorb(&p4, s, b), Err(Error::NotANeighbor(b)));
    }

    #[test]
    fn contract_examples() {
        let p4 = fixtures::p4().graph;
        let [s, a, b, t] = [0, 1, 2, 3];
        let c = contract_into(&p4, (b, t), t).unwrap();
        assert_eq!(c.graph.labels(), ["s", "a", "t"]);
        assert_eq!(
            edge_labels(&c.graph),
            [("a".into(), "s".into()), ("a".into(), "t".into())]
        );
        assert_eq!(c.old_to_new, [Some(0), Some(1), None, Some(2)]);

        let c = contract_into(&p4, (s, a), s).unwrap();
        assert_eq!(c.graph.labels(), ["s", "b", "t"]);
        assert_eq!(
            edge_labels(&c.graph),
            [("b".into(), "s".into()), ("b".into(), "t".into())]
        );

        let tri = Graph::parse("s a\na t\nt s").unwrap();
        let c = contract_into(&tri, (0, 1), 0).unwrap();
        assert_eq!(c.graph.edge_count(), 1);
        assert_eq!(edge_labels(&c.graph), [("s".into(), "t".into())]);
    }

    #[test]
    fn contract_errors() {
        let p4 = fixtures::p4().graph;
        assert_eq!(contract_into(&p4, (0, 3), 0).unwrap_err(), Error::NotAnEdge(0, 3));
        assert_eq!(contract_into(&p4, (0, 1), 2).unwrap_err(), Error::NotAnEndpoint(2));
    }
}
