mod common;

use common::{combinations, graph_from_bits, holds, limits, naive_lex, naive_min, Matrix};
use domkit::{edge_list, lex_product, satisfies, Graph, SetKind, Solver, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, prop::collection::vec(any::<bool>(), 1..64)).prop_map(|(n, bits)| graph_from_bits(n, &bits))
}

const CODES: [&str; 9] = ["dom", "total", "1k", "t1k", "i1k", "jd1k", "jdt1k", "eff", "oeff"];

fn kind_for(code: &str, j: usize, k: usize) -> SetKind {
    let (j, k) = match code {
        "jd1k" | "jdt1k" => (Some(j), Some(k)),
        "1k" | "t1k" | "i1k" => (None, Some(k)),
        _ => (None, None),
    };
    SetKind::from_code(code, j, k).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_edge_count(g in graph(6), h in graph(6)) {
        let (p, _) = lex_product(&g, &h);
        let expected = g.edge_count() * h.n() * h.n() + g.n() * h.edge_count();
        prop_assert_eq!(p.edge_count(), expected);
    }

    #[test]
    fn product_matches_pair_definition(g in graph(5), h in graph(5)) {
        let (p, _) = lex_product(&g, &h);
        let reference = naive_lex(&g, &h);
        let m = Matrix::of(&p);
        prop_assert_eq!(m.adj, reference);
    }

    #[test]
    fn solver_matches_naive_enumeration(g in graph(9), code in prop::sample::select(CODES.to_vec()), k in 1usize..=3, j in 0usize..=3) {
        let j = j.min(k);
        let kind = kind_for(code, j, k);
        let r = Solver::new().min_set(&g, kind, None).unwrap();
        let naive = naive_min(&g, limits(code, j, k));
        prop_assert_eq!(r.gamma, naive.as_ref().map(|x| x.0));
        prop_assert_eq!(r.witness.map(|w| w.to_vec()), naive.map(|x| x.1));
    }

    #[test]
    fn validator_matches_definition(g in graph(8), mask in any::<u8>(), code in prop::sample::select(CODES.to_vec()), k in 1usize..=3) {
        let set: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let kind = kind_for(code, k.min(1), k);
        let ours = satisfies(&g, &VertexSet::from(set.as_slice()), kind).unwrap();
        prop_assert_eq!(ours, holds(&Matrix::of(&g), &set, limits(code, k.min(1), k)));
    }

    #[test]
    fn kind_implications(g in graph(8), mask in any::<u8>(), k in 1usize..=3) {
        let s: VertexSet = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let sat = |kind| satisfies(&g, &s, kind).unwrap();
        if sat(SetKind::Efficient) {
            prop_assert!(sat(SetKind::independent_one_k(k)));
        }
        if sat(SetKind::OpenEfficient) {
            prop_assert!(sat(SetKind::total_one_k(k)));
        }
        if sat(SetKind::total_one_k(k)) {
            prop_assert!(sat(SetKind::one_k(k)) && sat(SetKind::TotalDominating));
        }
        if sat(SetKind::independent_one_k(k)) {
            prop_assert!(sat(SetKind::j_dependent(0, k)));
        }
        prop_assert_eq!(sat(SetKind::j_dependent(0, k)), sat(SetKind::independent_one_k(k)));
        if sat(SetKind::one_k(k)) {
            prop_assert!(sat(SetKind::Dominating));
        }
    }

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        let text = edge_list::write(&g);
        let back = edge_list::parse(&text).unwrap();
        prop_assert_eq!(edge_list::write(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn solves_are_deterministic(g in graph(10), code in prop::sample::select(CODES.to_vec())) {
        let kind = kind_for(code, 1, 2);
        let a = serde_json::to_string(&Solver::new().min_set(&g, kind, None).unwrap()).unwrap();
        let b = serde_json::to_string(&Solver::new().min_set(&g, kind, None).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn all_sets_are_exactly_the_valid_subsets() {
    let g = domkit::graph::cycle(6);
    for code in CODES {
        let kind = kind_for(code, 1, 2);
        let ours: Vec<Vec<usize>> =
            Solver::new().all_sets(&g, kind, None).unwrap().into_iter().map(|s| s.to_vec()).collect();
        let m = Matrix::of(&g);
        let mut naive: Vec<Vec<usize>> =
            (0..=6).flat_map(|size| combinations(6, size)).filter(|s| holds(&m, s, limits(code, 1, 2))).collect();
        naive.sort();
        assert_eq!(ours, naive, "{code}");
    }
}

#[test]
fn limit_cuts_search() {
    let g = domkit::graph::path(9);
    let r = Solver::new().min_set(&g, SetKind::total_one_k(2), Some(4)).unwrap();
    assert!(!r.exists);
    let r = Solver::new().min_set(&g, SetKind::total_one_k(2), Some(5)).unwrap();
    assert_eq!(r.gamma, Some(5));
}
