//! Named enumeration strategies behind one trait object interface.
//!
//! Front ends look strategies up by name in a [`Registry`] and drive them
//! through [`Strategy::run`], so a new enumerator only needs a registration.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Graph, Terminals};
use crate::sink::SeparatorSink;
use crate::{fpt, important, oracle, ranked};

/// Parameters shared by all strategies.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumParams {
    /// Size bound, for strategies that take one.
    pub k: Option<usize>,
}

impl EnumParams {
    pub fn bounded(k: usize) -> Self {
        EnumParams { k: Some(k) }
    }

    fn bound(&self) -> Result<usize> {
        match self.k {
            Some(k) if k >= 1 => Ok(k),
            _ => Err(Error::InvalidBound),
        }
    }
}

pub trait Strategy: Send + Sync {
    fn name(&self) -> &'static str;

    fn summary(&self) -> &'static str;

    /// Whether `EnumParams::k` must be set.
    fn needs_bound(&self) -> bool {
        false
    }

    /// Streams separators into `sink`; returns how many were emitted.
    fn run(
        &self,
        g: &Graph,
        term: Terminals,
        params: &EnumParams,
        sink: &mut dyn SeparatorSink,
    ) -> Result<usize>;
}

pub struct SmallMinimal;

impl Strategy for SmallMinimal {
    fn name(&self) -> &'static str {
        "small-minimal"
    }

    fn summary(&self) -> &'static str {
        "minimal separators of size <= k, with FPT delay"
    }

    fn needs_bound(&self) -> bool {
        true
    }

    fn run(&self, g: &Graph, term: Terminals, params: &EnumParams, sink: &mut dyn SeparatorSink) -> Result<usize> {
        fpt::enumerate_small_minimal(g, term, params.bound()?, sink)
    }
}

pub struct Ranked;

impl Strategy for Ranked {
    fn name(&self) -> &'static str {
        "ranked"
    }

    fn summary(&self) -> &'static str {
        "separators in non-decreasing size"
    }

    fn run(&self, g: &Graph, term: Terminals, _: &EnumParams, sink: &mut dyn SeparatorSink) -> Result<usize> {
        ranked::ranked_separators(g, term, sink)
    }
}

pub struct Minimum;

impl Strategy for Minimum {
    fn name(&self) -> &'static str {
        "minimum"
    }

    fn summary(&self) -> &'static str {
        "all minimum-cardinality separators"
    }

    fn run(&self, g: &Graph, term: Terminals, _: &EnumParams, sink: &mut dyn SeparatorSink) -> Result<usize> {
        ranked::minimum_separators(g, term, sink)
    }
}

pub struct Important;

impl Strategy for Important {
    fn name(&self) -> &'static str {
        "important"
    }

    fn summary(&self) -> &'static str {
        "important separators of size <= k"
    }

    fn needs_bound(&self) -> bool {
        true
    }

    fn run(&self, g: &Graph, term: Terminals, params: &EnumParams, sink: &mut dyn SeparatorSink) -> Result<usize> {
        let set = important::enumerate_important(g, term, params.bound()?)?;
        Ok(emit_all(set.iter(), sink))
    }
}

/// Exhaustive search; only usable on small graphs.
pub struct BruteMinimal;

impl Strategy for BruteMinimal {
    fn name(&self) -> &'static str {
        "brute-minimal"
    }

    fn summary(&self) -> &'static str {
        "minimal separators by exhaustive search (small graphs only)"
    }

    fn run(&self, g: &Graph, term: Terminals, params: &EnumParams, sink: &mut dyn SeparatorSink) -> Result<usize> {
        if let Some(0) = params.k {
            return Err(Error::InvalidBound);
        }
        term.check_separable(g)?;
        let all = oracle::brute_minimal_separators(g, term)?;
        let bound = params.k.unwrap_or(usize::MAX);
        Ok(emit_all(all.iter().filter(|s| s.len() <= bound), sink))
    }
}

fn emit_all<'a, I>(items: I, sink: &mut dyn SeparatorSink) -> usize
where
    I: IntoIterator<Item = &'a crate::graph::Separator>,
{
    let mut n = 0;
    for s in items {
        n += 1;
        if sink.emit(s) == ControlFlow::Break(()) {
            break;
        }
    }
    n
}

/// Strategies keyed by name.
#[derive(Default)]
pub struct Registry {
    strategies: BTreeMap<&'static str, Box<dyn Strategy>>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry::default()
    }

    /// Registry holding every strategy shipped with the crate.
    pub fn builtin() -> Self {
        let mut r = Registry::empty();
        r.register(Box::new(SmallMinimal));
        r.register(Box::new(Ranked));
        r.register(Box::new(Minimum));
        r.register(Box::new(Important));
        r.register(Box::new(BruteMinimal));
        r
    }

    /// Adds a strategy, replacing any earlier one with the same name.
    pub fn register(&mut self, strategy: Box<dyn Strategy>) -> Option<Box<dyn Strategy>> {
        self.strategies.insert(strategy.name(), strategy)
    }

    pub fn get(&self, name: &str) -> Result<&dyn Strategy> {
        self.strategies
            .get(name)
            .map(|s| s.as_ref())
            .ok_or_else(|| Error::UnknownStrategy(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.strategies.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Strategy> {
        self.strategies.values().map(|s| s.as_ref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;
    use crate::sink::Collect;

    #[test]
    fn builtin_names() {
        let r = Registry::builtin();
        assert_eq!(
            r.names().collect::<Vec<_>>(),
            ["brute-minimal", "important", "minimum", "ranked", "small-minimal"]
        );
        assert!(matches!(r.get("nope"), Err(Error::UnknownStrategy(_))));
    }

    #[test]
    fn bounded_strategies_require_k() {
        let r = Registry::builtin();
        let f = fixtures::p4();
        let mut out = Collect::default();
        for s in r.iter().filter(|s| s.needs_bound()) {
            assert_eq!(
                s.run(&f.graph, f.terminals, &EnumParams::default(), &mut out),
                Err(Error::InvalidBound),
                "{}",
                s.name()
            );
        }
    }

    #[test]
    fn minimal_strategies_agree_on_theta() {
        let r = Registry::builtin();
        let f = fixtures::theta();
        let params = EnumParams::bounded(3);
        let mut listed = Vec::new();
        for name in ["small-minimal", "brute-minimal"] {
            let mut out = Collect::default();
            r.get(name).unwrap().run(&f.graph, f.terminals, &params, &mut out).unwrap();
            out.0.sort();
            listed.push(out.0);
        }
        assert_eq!(listed[0], listed[1]);
    }

    struct Nothing;

    impl Strategy for Nothing {
        fn name(&self) -> &'static str {
            "ranked"
        }

        fn summary(&self) -> &'static str {
            "emits nothing"
        }

        fn run(&self, _: &Graph, _: Terminals, _: &EnumParams, _: &mut dyn SeparatorSink) -> Result<usize> {
            Ok(0)
        }
    }

    #[test]
    fn registering_replaces_by_name() {
        let mut r = Registry::builtin();
        let old = r.register(Box::new(Nothing));
        assert_eq!(old.map(|s| s.summary()), Some("separators in non-decreasing size"));
        assert_eq!(r.get("ranked").unwrap().summary(), "emits nothing");
    }
}
