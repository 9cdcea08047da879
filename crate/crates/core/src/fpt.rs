//! Listing all minimal s,t-separators of size at most `k` with FPT delay.
//!
//! The queue is seeded with the important separators of size at most `k`.
//! When `S` is popped it is printed, `s` is joined to every vertex of `S`,
//! and for each `v ∈ S` the graph in which `s` also absorbs the neighbours
//! of `v` is formed. The important separators of each such graph are minimal
//! separators of the input that lie strictly further from `s` than `S`;
//! those not seen before are queued. Popping in order of `|C_s(G - S)|`
//! outputs every minimal separator of size at most `k` exactly once.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{absorb, add_star, component_of, Graph, Separator, Terminals, Vertex};
use crate::important::enumerate_important;
use crate::sink::SeparatorSink;

/// Priority of a separator: size of its `s` component, then its members.
/// Strict inclusion of `s` components implies a strictly smaller key.
pub type PopKey = (usize, Vec<Vertex>);

pub fn pop_key(g: &Graph, s: Vertex, separator: &Separator) -> Result<PopKey> {
    let side = component_of(g, separator.as_slice(), s)?;
    Ok((side.len(), separator.as_slice().to_vec()))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct QueueEntry {
    key: PopKey,
    separator: Separator,
}

/// Streams every minimal s,t-separator with at most `k` vertices into
/// `sink`, in non-decreasing order of `|C_s(G - S)|`. Returns the number of
/// separators emitted.
///
/// Adjacent terminals yield [`Error::TerminalsAdjacent`], the "no separator
/// exists" answer.
pub fn enumerate_small_minimal<S>(g: &Graph, term: Terminals, k: usize, sink: &mut S) -> Result<usize>
where
    S: SeparatorSink + ?Sized,
{
    if k == 0 {
        return Err(Error::InvalidBound);
    }
    term.check_separable(g)?;

    let mut seen: HashSet<Separator> = HashSet::new();
    let mut queue = BinaryHeap::new();
    for sep in enumerate_important(g, term, k)?.separators {
        let key = pop_key(g, term.s, &sep)?;
        seen.insert(sep.clone());
        queue.push(Reverse(QueueEntry { key, separator: sep }));
    }

    let mut emitted = 0;
    let mut last = 0;
    while let Some(Reverse(QueueEntry { key, separator })) = queue.pop() {
        debug_assert!(separator.len() <= k);
        debug_assert!(crate::graph::is_minimal_separator(g, term, separator.as_slice())?);
        debug_assert!(key.0 >= last, "emission order violated");
        last = key.0;

        emitted += 1;
        if sink.emit(&separator) == ControlFlow::Break(()) {
            break;
        }

        let star = add_star(g, term.s, &separator);
        for &v in &separator {
            let absorbed = absorb(&star, term.s, v)?;
            let found = match enumerate_important(&absorbed, term, k) {
                Ok(set) => set.separators,
                // v touches t, so nothing avoids it
                Err(Error::TerminalsAdjacent) => continue,
                Err(e) => return Err(e),
            };
            for next in found {
                if seen.contains(&next) {
                    continue;
                }
                let next_key = pop_key(g, term.s, &next)?;
                assert!(
                    next_key.0 > key.0,
                    "pushed separator is not further from s than its parent"
                );
                seen.insert(next.clone());
                queue.push(Reverse(QueueEntry {
                    key: next_key,
                    separator: next,
                }));
            }
        }
    }
    Ok(emitted)
}
