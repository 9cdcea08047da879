//! Small named graphs shared by tests and examples.

use crate::graph::{Graph, Terminals};

pub const P4: &str = "s a\na b\nb t\n";
pub const DIAMOND: &str = "s a\ns b\na t\nb t\n";
pub const THETA: &str = "s a\na t\ns b\nb c\nc t\n";

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub terminals: Terminals,
}

fn build(name: &'static str, text: &str) -> Fixture {
    let graph = Graph::parse(text).expect("fixture parses");
    let terminals = Terminals::from_labels(&graph, "s", "t").expect("fixture terminals");
    Fixture {
        name,
        graph,
        terminals,
    }
}

/// The path `s - a - b - t`.
pub fn p4() -> Fixture {
    build("P4", P4)
}

/// Two parallel paths `s - a - t` and `s - b - t`.
pub fn diamond() -> Fixture {
    build("DIAMOND", DIAMOND)
}

/// Paths `s - a - t` and `s - b - c - t`.
pub fn theta() -> Fixture {
    build("THETA", THETA)
}

pub fn all() -> Vec<Fixture> {
    vec![p4(), diamond(), theta()]
}
