//! Ranked enumeration of s,t-separators by Lawler partitioning.
//!
//! Each queue entry describes a cell of the solution space: separators that
//! contain the include-set and avoid every vertex excluded along the branch.
//! Exclusion is realised by saturating the excluded vertex, which removes it
//! from every minimal separator and keeps all others. After a cell's best
//! separator `S` is printed, the rest of the cell is split on the vertices
//! `v_1..v_q` of `S` outside the include-set: child `i` includes
//! `v_1..v_{i-1}` and excludes `v_i`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{is_separator, saturate, Graph, Separator, Terminals, Vertex};
use crate::mincut::kappa;
use crate::sink::SeparatorSink;

/// One Lawler cell.
#[derive(Debug, Clone)]
pub struct RankedEntry {
    /// The input graph with every excluded vertex saturated.
    pub working_graph: Graph,
    /// The best separator of the cell, include-set included.
    pub separator: Separator,
    pub include: Separator,
    excluded: Vec<Vertex>,
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct Key(usize, Separator, u64);

/// Minimum separator of `g - remove`, or the empty set if `remove` already
/// separates.
fn minimum_avoiding(g: &Graph, term: Terminals, remove: &Separator) -> Result<Separator> {
    match kappa(&g.isolate(remove), term) {
        Ok(cut) => Ok(cut.separator),
        Err(Error::AlreadySeparated) => Ok(Separator::empty()),
        Err(e) => Err(e),
    }
}

/// Pending cells, popped by (size, members, insertion order).
#[derive(Default)]
struct CellQueue {
    heap: BinaryHeap<Reverse<(Key, usize)>>,
    cells: Vec<Option<RankedEntry>>,
}

impl CellQueue {
    fn push(&mut self, entry: RankedEntry) {
        let idx = self.cells.len();
        let key = Key(entry.separator.len(), entry.separator.clone(), idx as u64);
        self.cells.push(Some(entry));
        self.heap.push(Reverse((key, idx)));
    }

    fn pop(&mut self) -> Option<RankedEntry> {
        let Reverse((_, idx)) = self.heap.pop()?;
        self.cells[idx].take()
    }
}

fn lawler<S, F>(g: &Graph, term: Terminals, sink: &mut S, admit: F) -> Result<usize>
where
    S: SeparatorSink + ?Sized,
    F: Fn(&Separator, &Separator) -> bool,
{
    let mut queue = CellQueue::default();
    queue.push(RankedEntry {
        working_graph: g.clone(),
        separator: kappa(g, term)?.separator,
        include: Separator::empty(),
        excluded: Vec::new(),
    });

    let mut emitted = 0;
    let mut last = 0;
    while let Some(entry) = queue.pop() {
        debug_assert!(entry.separator.len() >= last, "ranked order violated");
        last = entry.separator.len();

        emitted += 1;
        if sink.emit(&entry.separator) == ControlFlow::Break(()) {
            break;
        }

        let free: Vec<Vertex> = entry
            .separator
            .iter()
            .copied()
            .filter(|&v| !entry.include.contains(v))
            .collect();
        for (i, &v) in free.iter().enumerate() {
            let include = entry.include.union(&free[..i].iter().copied().collect());
            let saturated = saturate(&entry.working_graph, &[v]);
            if term.adjacent(&saturated) {
                continue;
            }
            let rest = minimum_avoiding(&saturated, term, &include)?;
            if !admit(&rest, &include) {
                continue;
            }
            let separator = rest.union(&include);
            let mut excluded = entry.excluded.clone();
            excluded.push(v);
            assert!(
                include.is_subset(&separator) && excluded.iter().all(|&x| !separator.contains(x)),
                "Lawler cell constraints violated"
            );
            debug_assert!(is_separator(g, term, separator.as_slice())?);
            queue.push(RankedEntry {
                working_graph: saturated,
                separator,
                include,
                excluded,
            });
        }
    }
    Ok(emitted)
}

/// Streams s,t-separators in non-decreasing size, without repetition.
///
/// Every emitted set separates `s` from `t`, and every minimal
/// s,t-separator is emitted. Ties are broken by members.
pub fn ranked_separators<S>(g: &Graph, term: Terminals, sink: &mut S) -> Result<usize>
where
    S: SeparatorSink + ?Sized,
{
    lawler(g, term, sink, |_, _| true)
}

/// Streams exactly the minimum-cardinality s,t-separators.
///
/// Same partitioning as [`ranked_separators`], except that a cell is kept
/// only while it still holds a separator of size `κ(G)`: the minimum of the
/// cell minus its include-set must have `κ(G) - |I|` vertices.
pub fn minimum_separators<S>(g: &Graph, term: Terminals, sink: &mut S) -> Result<usize>
where
    S: SeparatorSink + ?Sized,
{
    let target = kappa(g, term)?.kappa;
    lawler(g, term, sink, |rest, include| rest.len() + include.len() == target)
}
