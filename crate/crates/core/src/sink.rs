//! Consumers for streamed separators.

use std::ops::ControlFlow;

use crate::graph::Separator;

/// Receives separators one at a time as an enumerator produces them.
///
/// Returning `ControlFlow::Break` stops the enumeration after the current
/// item. A sink must not call back into the enumerator that feeds it.
pub trait SeparatorSink {
    fn emit(&mut self, separator: &Separator) -> ControlFlow<()>;
}

impl<F> SeparatorSink for F
where
    F: FnMut(&Separator) -> ControlFlow<()>,
{
    fn emit(&mut self, separator: &Separator) -> ControlFlow<()> {
        self(separator)
    }
}

/// Collects everything into a vector, in emission order.
#[derive(Debug, Default, Clone)]
pub struct Collect(pub Vec<Separator>);

impl SeparatorSink for Collect {
    fn emit(&mut self, separator: &Separator) -> ControlFlow<()> {
        self.0.push(separator.clone());
        ControlFlow::Continue(())
    }
}

/// Forwards at most `remaining` items, then stops the enumeration.
pub struct Limit<'a> {
    inner: &'a mut dyn SeparatorSink,
    remaining: usize,
}

impl<'a> Limit<'a> {
    pub fn new(inner: &'a mut dyn SeparatorSink, limit: usize) -> Self {
        Limit { inner, remaining: limit }
    }
}

impl SeparatorSink for Limit<'_> {
    fn emit(&mut self, separator: &Separator) -> ControlFlow<()> {
        if self.remaining == 0 {
            return ControlFlow::Break(());
        }
        self.remaining -= 1;
        self.inner.emit(separator)?;
        if self.remaining == 0 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    }
}
