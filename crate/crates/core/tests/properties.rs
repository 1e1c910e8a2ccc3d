use std::collections::{HashSet, VecDeque};

use proptest::prelude::*;

use sgspec::coloring::{chromatic_number_at_least, is_colorable};
use sgspec::io::{emit_signed_edgelist, encode_graph6, parse_graph6, parse_signed_edgelist};
use sgspec::spectrum::DEFAULT_MAX_COTREE;
use sgspec::*;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

prop_compose! {
    fn graph_upto(max_n: usize)(n in 1..=max_n)(
        n in Just(n),
        keep in proptest::collection::vec(any::<bool>(), pairs(n).len()),
    ) -> Graph {
        Graph::new(n, pairs(n).into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p)).unwrap()
    }
}

prop_compose! {
    fn signed_upto(max_n: usize)(g in graph_upto(max_n))(
        signs in proptest::collection::vec(any::<bool>(), g.edge_count()),
        g in Just(g),
    ) -> SignedGraph {
        let signature = Signature::new(signs.into_iter().map(|b| if b { Sign::Negative } else { Sign::Positive }).collect());
        SignedGraph::new(g, signature).unwrap()
    }
}

fn vertex_subset(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(any::<bool>(), n)
        .prop_map(|bits| bits.into_iter().enumerate().filter(|(_, b)| *b).map(|(v, _)| v).collect())
}

fn signed_with_subset(max_n: usize) -> impl Strategy<Value = (SignedGraph, Vec<usize>)> {
    signed_upto(max_n).prop_flat_map(|sg| {
        let n = sg.vertex_count();
        (Just(sg), vertex_subset(n))
    })
}

/// Every signature reachable by single-vertex switchings, as edge masks.
fn switching_orbit(g: &Graph, start: u64) -> HashSet<u64> {
    let vertex_masks: Vec<u64> =
        (0..g.vertex_count()).map(|v| g.incident_edges(v).iter().fold(0, |acc, &e| acc | 1 << e)).collect();
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for &vm in &vertex_masks {
            if seen.insert(s ^ vm) {
                queue.push_back(s ^ vm);
            }
        }
    }
    seen
}

fn mask_of(s: &Signature) -> u64 {
    s.negative_edges().iter().fold(0, |acc, &e| acc | 1 << e)
}

/// Classic chromatic number by enumeration.
fn classic_chromatic_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    (1..=n)
        .find(|&k| {
            (0..k.pow(n as u32)).any(|code| {
                let color: Vec<usize> = (0..n).map(|v| code / k.pow(v as u32) % k).collect();
                g.edges().iter().all(|&(u, v)| color[u] != color[v])
            })
        })
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn switching_is_an_involution((sg, set) in signed_with_subset(7)) {
        prop_assert_eq!(sg.switch(&set).unwrap().switch(&set).unwrap(), sg);
    }

    #[test]
    fn balance_and_circuit_signs_survive_switching((sg, set) in signed_with_subset(7)) {
        let switched = sg.switch(&set).unwrap();
        prop_assert_eq!(sg.is_balanced(), switched.is_balanced());
        prop_assert_eq!(sg.is_antibalanced(), switched.is_antibalanced());
        if let BalanceWitness::UnbalancedCircuit(c) = sg.balance() {
            prop_assert_eq!(sg.circuit_sign(&c).unwrap(), Sign::Negative);
            prop_assert_eq!(switched.circuit_sign(&c).unwrap(), Sign::Negative);
        }
    }

    #[test]
    fn balance_witness_is_sound(sg in signed_upto(8)) {
        match sg.balance() {
            BalanceWitness::SwitchingSet(set) => {
                prop_assert!(sg.switch(&set).unwrap().signature().negative_edges().is_empty());
            }
            BalanceWitness::UnbalancedCircuit(c) => {
                prop_assert_eq!(sg.circuit_sign(&c).unwrap(), Sign::Negative);
            }
        }
    }

    #[test]
    fn equivalence_matches_switching_search(
        (sg, other) in signed_upto(6)
            .prop_filter("at most 8 edges", |sg| sg.graph().edge_count() <= 8)
            .prop_flat_map(|sg| { let m = sg.graph().edge_count(); (Just(sg), 0u64..1 << m) })
    ) {
        let g = sg.graph();
        let b = Signature::from_mask(g.edge_count(), other);
        let orbit = switching_orbit(g, mask_of(sg.signature()));
        prop_assert_eq!(are_equivalent(g, sg.signature(), &b).unwrap(), orbit.contains(&other));
        prop_assert_eq!(are_equivalent(g, &b, sg.signature()).unwrap(), orbit.contains(&other));
        prop_assert_eq!(
            sg.canonical_form().0 == SignedGraph::new(g.clone(), b.clone()).unwrap().canonical_form().0,
            orbit.contains(&other)
        );
    }

    #[test]
    fn canonical_form_is_equivalent_and_idempotent(sg in signed_upto(8)) {
        let (canon, set) = sg.canonical_form();
        prop_assert_eq!(&sg.switch(&set).unwrap(), &canon);
        prop_assert!(are_equivalent(sg.graph(), sg.signature(), canon.signature()).unwrap());
        prop_assert_eq!(canon.canonical_form(), (canon.clone(), vec![]));
        let forest = sg.graph().spanning_forest();
        for e in 0..sg.graph().edge_count() {
            if forest.is_tree_edge[e] {
                prop_assert_eq!(canon.sign(e), Sign::Positive);
            }
        }
    }

    #[test]
    fn representatives_partition_signatures(
        (g, mask) in graph_upto(7).prop_flat_map(|g| { let m = g.edge_count(); (Just(g), 0u64..1 << m) })
    ) {
        let reps = signature_class_representatives(&g, DEFAULT_MAX_COTREE).unwrap();
        prop_assert_eq!(reps.len(), 1 << g.cyclomatic_number());
        let s = Signature::from_mask(g.edge_count(), mask);
        let matches = reps.iter().filter(|r| are_equivalent(&g, r, &s).unwrap()).count();
        prop_assert_eq!(matches, 1);
    }

    #[test]
    fn chromatic_numbers_are_switching_invariant((sg, set) in signed_with_subset(7)) {
        let switched = sg.switch(&set).unwrap();
        for model in Model::ALL {
            prop_assert_eq!(chromatic_number(&sg, model), chromatic_number(&switched, model));
        }
    }

    #[test]
    fn models_differ_by_at_most_one(sg in signed_upto(8)) {
        let cyc = chromatic_number(&sg, Model::Cyclic);
        let sym = chromatic_number(&sg, Model::Symmetric);
        prop_assert!(cyc.abs_diff(sym) <= 1, "cyclic {} symmetric {}", cyc, sym);
    }

    #[test]
    fn balanced_value_is_classic_chromatic_number(g in graph_upto(7), set in vertex_subset(7)) {
        let set: Vec<usize> = set.into_iter().filter(|&v| v < g.vertex_count()).collect();
        let sg = SignedGraph::all_positive(g.clone()).switch(&set).unwrap();
        prop_assert_eq!(chromatic_number(&sg, Model::Cyclic), classic_chromatic_number(&g));
    }

    #[test]
    fn found_colorings_validate(sg in signed_upto(9), size in 1usize..8) {
        for model in Model::ALL {
            let palette = Palette::new(model, size).unwrap();
            if let Some(c) = find_coloring(&sg, &palette) {
                prop_assert_eq!(validate_coloring(&sg, &palette, &c), Ok(true));
            }
        }
    }

    #[test]
    fn colorability_is_monotone_in_palette_size(sg in signed_upto(7), size in 1usize..9) {
        for model in Model::ALL {
            if is_colorable(&sg, &Palette::new(model, size).unwrap()) {
                prop_assert!(is_colorable(&sg, &Palette::new(model, size + 1).unwrap()));
            }
            let k = chromatic_number(&sg, model);
            prop_assert_eq!(chromatic_number_at_least(&sg, model, size), size <= k);
        }
    }

    #[test]
    fn solver_matches_oracle(sg in signed_upto(6)) {
        for model in Model::ALL {
            prop_assert_eq!(chromatic_number(&sg, model), oracle_chromatic_number(&sg, model).unwrap());
        }
    }

    #[test]
    fn deletion_lowers_by_at_most_one(sg in signed_upto(9)) {
        for model in Model::ALL {
            let (_, cert) = is_critical(&sg, model).unwrap();
            prop_assert!(cert.per_vertex.iter().all(|&v| v == cert.k || v + 1 == cert.k), "{:?}", cert);
        }
    }

    #[test]
    fn extension_always_validates(sg in signed_upto(8), pick in any::<prop::sample::Index>()) {
        let u = pick.index(sg.vertex_count());
        let (rest, _) = sg.delete_vertex(u).unwrap();
        for model in Model::ALL {
            let j = chromatic_number(&rest, model).max(1);
            let phi = find_coloring(&rest, &Palette::new(model, j).unwrap()).unwrap();
            let out = extend_coloring(&sg, u, &phi, j + 2, model).unwrap();
            prop_assert_eq!(validate_coloring(&sg, &Palette::new(model, j + 1).unwrap(), &out), Ok(true));
            prop_assert!(chromatic_number(&sg, model) <= j + 1);
        }
    }

    #[test]
    fn lifted_signature_keeps_value((sg, subset) in signed_with_subset(8)) {
        prop_assume!(!subset.is_empty());
        let (h, _) = sg.induced(&subset).unwrap();
        for model in Model::ALL {
            let k = chromatic_number(&h, model);
            let min = if model == Model::Cyclic { 3 } else { 2 };
            if k < min {
                continue;
            }
            let phi = find_coloring(&h, &Palette::new(model, k).unwrap()).unwrap();
            let lifted = lift_signature(sg.graph(), &subset, h.signature(), &phi, k, model).unwrap();
            let whole = SignedGraph::new(sg.graph().clone(), lifted).unwrap();
            prop_assert_eq!(chromatic_number(&whole, model), k);
            let mut extended = vec![1; sg.vertex_count()];
            for (i, &v) in subset.iter().collect::<std::collections::BTreeSet<_>>().iter().enumerate() {
                extended[*v] = phi.get(i);
            }
            prop_assert_eq!(validate_coloring(&whole, &Palette::new(model, k).unwrap(), &Coloring::new(extended)), Ok(true));
        }
    }

    #[test]
    fn spectrum_is_relabeling_invariant(g in graph_upto(6), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let relabeled = g.relabel(&perm).unwrap();
        for model in Model::ALL {
            let a = chromatic_spectrum(&g, "a", model, DEFAULT_MAX_COTREE).unwrap();
            let b = chromatic_spectrum(&relabeled, "b", model, DEFAULT_MAX_COTREE).unwrap();
            prop_assert_eq!(&a.spectrum, &b.spectrum);
            prop_assert!(a.interval_ok);
            prop_assert_eq!(a.m, min_chromatic_shortcut(&g, model).unwrap());
            let from = if model == Model::Cyclic { 4 } else { 3 };
            for &k in a.spectrum.iter().filter(|&&k| k >= from) {
                prop_assert!(a.contains(k - 1), "{} missing below {}", model, k);
            }
        }
    }

    #[test]
    fn edgelist_round_trip(sg in signed_upto(12)) {
        prop_assert_eq!(parse_signed_edgelist(&emit_signed_edgelist(&sg)).unwrap(), sg);
    }

    #[test]
    fn graph6_round_trip(g in graph_upto(20)) {
        let parsed = parse_graph6(&encode_graph6(&g)).unwrap();
        let mut a = parsed.edges().to_vec();
        let mut b = g.edges().to_vec();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
        prop_assert_eq!(parsed.vertex_count(), g.vertex_count());
    }
}
