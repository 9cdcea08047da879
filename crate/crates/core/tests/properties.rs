use std::collections::BTreeSet;

use proptest::prelude::*;
use sepenum_core::graph::{
    absorb, add_star, chordless_path_to_separator, close_separator, component_of,
    is_minimal_separator, is_separator, minimalize, saturate,
};
use sepenum_core::important::{enumerate_important, is_important, min_important};
use sepenum_core::mincut::{kappa, min_separator_between, Side};
use sepenum_core::oracle::{brute_chordless_paths_through, brute_minimal_separators, brute_minimum_separators};
use sepenum_core::{Graph, Separator, Terminals, Vertex, VertexSet};

/// A graph on 3..=9 vertices with terminals 0 and n-1, not adjacent.
fn instance() -> impl Strategy<Value = (Graph, Terminals)> {
    (3usize..=9)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(proptest::bool::weighted(0.4), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            let mut g = Graph::new(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] && !(u == 0 && v == n - 1) {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            let term = Terminals::new(&g, 0, n - 1).unwrap();
            (g, term)
        })
}

fn connected(g: &Graph, term: Terminals) -> bool {
    component_of(g, &[], term.s).unwrap().contains(&term.t)
}

fn inner(g: &Graph, term: Terminals) -> Vec<Vertex> {
    g.vertices().filter(|&v| v != term.s && v != term.t).collect()
}

fn edge_set(g: &Graph) -> BTreeSet<(Vertex, Vertex)> {
    g.edges().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn edge_list_round_trip((g, _) in instance()) {
        let text: String = g.edges().map(|(u, v)| format!("{} {}\n", g.label(u), g.label(v))).collect();
        let back = Graph::parse(&text).unwrap();
        let relabel: BTreeSet<(String, String)> = back
            .edges()
            .map(|(u, v)| {
                let (a, b) = (back.label(u).to_string(), back.label(v).to_string());
                if a < b { (a, b) } else { (b, a) }
            })
            .collect();
        let orig: BTreeSet<(String, String)> = g
            .edges()
            .map(|(u, v)| {
                let (a, b) = (g.label(u).to_string(), g.label(v).to_string());
                if a < b { (a, b) } else { (b, a) }
            })
            .collect();
        prop_assert_eq!(relabel, orig);
    }

    #[test]
    fn close_separator_is_the_unique_one_in_ns((g, term) in instance()) {
        prop_assume!(connected(&g, term));
        let close = close_separator(&g, term).unwrap();
        let ns: BTreeSet<Vertex> = g.neighbors(term.s).iter().copied().collect();
        prop_assert!(close.iter().all(|v| ns.contains(v)));
        prop_assert!(is_minimal_separator(&g, term, close.as_slice()).unwrap());
        let inside: Vec<Separator> = brute_minimal_separators(&g, term)
            .unwrap()
            .into_iter()
            .filter(|s| s.iter().all(|v| ns.contains(v)))
            .collect();
        prop_assert_eq!(inside, vec![close.clone()]);
        prop_assert!(is_important(&g, term, &close).unwrap());
    }

    #[test]
    fn full_components_match_definition((g, term) in instance()) {
        let all = brute_minimal_separators(&g, term).unwrap();
        let vs = inner(&g, term);
        for mask in 0u32..1 << vs.len() {
            let set: Separator = vs.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &v)| v).collect();
            prop_assert_eq!(is_minimal_separator(&g, term, set.as_slice()).unwrap(), all.contains(&set));
        }
    }

    #[test]
    fn saturation_properties((g, term) in instance(), pick in any::<u16>()) {
        let vs = inner(&g, term);
        let u: Vec<Vertex> = vs.iter().enumerate().filter(|(i, _)| pick & (1 << i) != 0).map(|(_, &v)| v).collect();
        for &x in &u {
            let once = saturate(&g, &[x]);
            prop_assert_eq!(saturate(&once, &[x]), once);
        }
        let forward = saturate(&g, &u);
        let reversed: Vec<Vertex> = u.iter().rev().copied().collect();
        prop_assert_eq!(&saturate(&g, &reversed), &forward);
        prop_assert_eq!(&saturate(&forward, &u), &forward);
        for &x in &u {
            let closed: Vec<Vertex> = forward.neighbors(x).iter().copied().chain([x]).collect();
            for (i, &a) in closed.iter().enumerate() {
                for &b in &closed[i + 1..] {
                    prop_assert!(forward.has_edge(a, b));
                }
            }
        }

        // one vertex at a time, repeated until nothing changes
        let mut stepwise = g.clone();
        loop {
            let next = u.iter().fold(stepwise.clone(), |h, &x| saturate(&h, &[x]));
            if next == stepwise {
                break;
            }
            stepwise = next;
        }
        prop_assert_eq!(&stepwise, &forward);

        let expect: BTreeSet<Separator> = brute_minimal_separators(&g, term)
            .unwrap()
            .into_iter()
            .filter(|s| u.iter().all(|&x| !s.contains(x)))
            .collect();
        let got = if term.adjacent(&forward) { BTreeSet::new() } else { brute_minimal_separators(&forward, term).unwrap() };
        prop_assert_eq!(got, expect);
    }

    #[test]
    fn absorb_drops_exactly_the_absorbed_vertex((g, term) in instance()) {
        let all = brute_minimal_separators(&g, term).unwrap();
        for &v in g.neighbors(term.s) {
            let h = absorb(&g, term.s, v).unwrap();
            prop_assert!(edge_set(&g).is_subset(&edge_set(&h)));
            let expect: BTreeSet<Separator> = all.iter().filter(|s| !s.contains(v)).cloned().collect();
            let got = if term.adjacent(&h) { BTreeSet::new() } else { brute_minimal_separators(&h, term).unwrap() };
            prop_assert_eq!(got, expect);
        }
    }

    #[test]
    fn star_keeps_separators_beyond_s((g, term) in instance()) {
        let all = brute_minimal_separators(&g, term).unwrap();
        for s in &all {
            let h = add_star(&g, term.s, s);
            let far = component_of(&g, s.as_slice(), term.t).unwrap();
            let expect: BTreeSet<Separator> = all
                .iter()
                .filter(|q| q.iter().all(|v| s.contains(*v) || far.contains(v)))
                .cloned()
                .collect();
            prop_assert_eq!(brute_minimal_separators(&h, term).unwrap(), expect);
        }
    }

    #[test]
    fn minimalize_shrinks_to_a_minimal_subset((g, term) in instance(), pick in any::<u16>()) {
        let vs = inner(&g, term);
        let set: Separator = vs.iter().enumerate().filter(|(i, _)| pick & (1 << i) != 0).map(|(_, &v)| v).collect();
        if is_separator(&g, term, set.as_slice()).unwrap() && connected(&g, term) {
            let m = minimalize(&g, term, set.as_slice()).unwrap();
            prop_assert!(m.is_subset(&set));
            prop_assert!(is_minimal_separator(&g, term, m.as_slice()).unwrap());
        }
    }

    #[test]
    fn cuts_and_inclusion((g, term) in instance()) {
        prop_assume!(connected(&g, term));
        let cut = kappa(&g, term).unwrap();
        let minimum = brute_minimum_separators(&g, term).unwrap();
        prop_assert_eq!(cut.kappa, minimum.iter().next().unwrap().len());
        prop_assert!(minimum.contains(&cut.separator));
        let s = VertexSet::from([term.s]);
        for side in [Side::Closest, Side::Furthest] {
            let sep = min_separator_between(&g, &s, term.t, side).unwrap();
            prop_assert_eq!(sep.len(), cut.kappa);
            prop_assert!(is_minimal_separator(&g, term, sep.as_slice()).unwrap());
        }
        prop_assert_eq!(min_important(&g, term).unwrap(), cut.separator.clone());
        // a vertex lies in some minimum separator iff removing it drops κ by one
        for v in inner(&g, term) {
            let in_some = minimum.iter().any(|m| m.contains(v));
            let drops = match kappa(&g.isolate(&[v]), term) {
                Ok(c) => c.kappa + 1 == cut.kappa,
                Err(sepenum_core::Error::AlreadySeparated) => cut.kappa == 1,
                Err(e) => panic!("{e}"),
            };
            prop_assert_eq!(in_some, drops, "vertex {}", v);
        }
    }

    #[test]
    fn importance_test_matches_definition((g, term) in instance()) {
        prop_assume!(connected(&g, term));
        let n = g.vertex_count();
        let brute = sepenum_core::oracle::brute_important(&g, term, n).unwrap();
        for s in brute_minimal_separators(&g, term).unwrap() {
            prop_assert_eq!(is_important(&g, term, &s).unwrap(), brute.contains(&s), "{:?}", s);
        }
        let listed: BTreeSet<Separator> = enumerate_important(&g, term, n).unwrap().separators.into_iter().collect();
        prop_assert_eq!(listed, brute);
    }

    #[test]
    fn chordless_paths_give_minimal_separators((g, term) in instance()) {
        prop_assume!(connected(&g, term));
        for v in inner(&g, term) {
            for path in brute_chordless_paths_through(&g, term, v).unwrap() {
                let s = chordless_path_to_separator(&g, term, &path, v).unwrap();
                prop_assert!(s.contains(v));
                prop_assert!(is_minimal_separator(&g, term, s.as_slice()).unwrap());
            }
        }
    }
}
