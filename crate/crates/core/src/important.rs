//! Important s,t-separators.
//!
//! A minimal separator `S` is important when every minimal separator `S'`
//! with `C_s(G - S') ⊊ C_s(G - S)` is strictly larger than `S`. Important
//! separators are therefore pushed as far toward `s` as their size allows.
//! This is the mirror image of the usual textbook convention, which pushes
//! toward `t`; the enumeration below is the textbook one run from the `t`
//! side with `s` as the sink.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{component_of, is_minimal_separator, Graph, Separator, Terminals, Vertex};
use crate::mincut::{self, bounded_cut, Side};

/// All important s,t-separators of size at most `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImportantSet {
    /// Sorted by size, then by members.
    pub separators: Vec<Separator>,
    pub k: usize,
}

impl ImportantSet {
    pub fn len(&self) -> usize {
        self.separators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.separators.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Separator> {
        self.separators.iter()
    }
}

/// Importance test without enumeration.
///
/// With `R = C_t(G - X)`, the separator `X` is important exactly when it is
/// the minimum `(R, s)`-cut whose `R` side is largest.
pub fn is_important(g: &Graph, term: Terminals, x: &Separator) -> Result<bool> {
    if !is_minimal_separator(g, term, x.as_slice())? {
        return Err(Error::NotMinimal);
    }
    let far = component_of(g, x.as_slice(), term.t)?;
    let net = bounded_cut(g, &g.mask(&far), term.s, Some(x.len()))?;
    Ok(net.is_some_and(|net| net.cut(Side::Furthest).0 == *x))
}

/// Lists every important s,t-separator of size at most `k`.
///
/// Candidates come from the standard two-way branching on a vertex of the
/// furthest minimum cut: either the vertex joins the separator, or it joins
/// the `t` side. The branching has at most `4^k` leaves. Each candidate is
/// then checked with [`is_important`].
pub fn enumerate_important(g: &Graph, term: Terminals, k: usize) -> Result<ImportantSet> {
    if k == 0 {
        return Err(Error::InvalidBound);
    }
    term.check_separable(g)?;

    let mut candidates = Vec::new();
    let sources = g.mask(&[term.t]);
    branch(g, sources, term.s, k, &mut Vec::new(), &mut candidates)?;

    let mut seen = HashSet::new();
    let mut separators = Vec::new();
    for c in candidates {
        if !seen.insert(c.clone()) {
            continue;
        }
        if is_minimal_separator(g, term, c.as_slice())? && is_important(g, term, &c)? {
            separators.push(c);
        }
    }
    separators.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(ImportantSet { separators, k })
}

fn branch(
    g: &Graph,
    sources: Vec<bool>,
    sink: Vertex,
    budget: usize,
    committed: &mut Vec<Vertex>,
    out: &mut Vec<Separator>,
) -> Result<()> {
    let net = match bounded_cut(g, &sources, sink, Some(budget)) {
        Ok(Some(net)) => net,
        Ok(None) | Err(Error::SourceSinkAdjacent) => return Ok(()),
        Err(e) => return Err(e),
    };
    if net.value() == 0 {
        out.push(Separator::new(committed.iter().copied()));
        return Ok(());
    }
    let (cut, far_side) = net.cut(Side::Furthest);
    let v = cut.as_slice()[0];
    let mut sources = g.mask(&far_side);

    // v is cut
    committed.push(v);
    branch(&g.isolate(&[v]), sources.clone(), sink, budget - 1, committed, out)?;
    committed.pop();

    // v stays on the source side
    sources[v] = true;
    branch(g, sources, sink, budget, committed, out)
}

/// The unique important separator of minimum size: the minimum cut closest
/// to `s`.
pub fn min_important(g: &Graph, term: Terminals) -> Result<Separator> {
    Ok(mincut::kappa(g, term)?.separator)
}
