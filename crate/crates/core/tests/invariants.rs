use itertools::Itertools;
use pathchrom::constructions::{geometric_path_decomposition_g, natural_tree_decomposition_h, shift_path_decomposition};
use pathchrom::graphs::vees;
use pathchrom::patterns::{
    classify_pair, enumerate_strong_copies, find_monochromatic_copy, is_strong_copy, property_report, BinaryTree,
    PatternClass, RelationLabel,
};
use pathchrom::solvers::{minimal_intervals, pchr_brute_permutations, Certificate};
use pathchrom::{
    build_g, build_h, build_shift, chromatic_number, decomposition_chromatic, normalize_path, path_as_tree,
    pchr_exact, verify_path_decomposition, verify_tree_decomposition, Graph, Interval,
    PathDecomposition, TreeOrder, VertexLabel,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn opaque(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges((0..n).map(|i| VertexLabel::Opaque(format!("v{i}"))).collect(), edges).unwrap()
}

fn arb_graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |coins| {
            let edges: Vec<_> = (0..n)
                .tuple_combinations()
                .zip(coins)
                .filter_map(|(e, c)| c.then_some(e))
                .collect();
            opaque(n, &edges)
        })
    })
}

/// Largest clique by brute force.
fn clique_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|&m| {
            (0..n).all(|u| m & (1 << u) == 0 || (u + 1..n).all(|v| m & (1 << v) == 0 || g.has_edge(u, v)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dp_matches_permutations(g in arb_graph(7)) {
        prop_assert_eq!(pchr_exact(&g).unwrap().value, pchr_brute_permutations(&g).unwrap());
    }

    #[test]
    fn clique_pchr_chromatic_chain(g in arb_graph(9)) {
        let p = pchr_exact(&g).unwrap();
        let omega = clique_number(&g);
        let chi = chromatic_number(&g).unwrap();
        prop_assert!(omega <= p.value && p.value <= chi.value);
        let Certificate::PathDecomposition { decomposition, .. } = &p.certificate else {
            panic!("pchr certificate");
        };
        prop_assert!(verify_path_decomposition(&g, decomposition).unwrap().is_valid());
        prop_assert_eq!(decomposition_chromatic(&g, decomposition).unwrap(), p.value);
        prop_assert!(omega <= decomposition_chromatic(&g, &path_as_tree(decomposition)).unwrap());
    }

    #[test]
    fn chromatic_certificate_is_proper(g in arb_graph(12)) {
        let r = chromatic_number(&g).unwrap();
        let Certificate::Coloring(c) = &r.certificate else { panic!("colouring certificate") };
        prop_assert!(c.is_proper(&g));
        prop_assert_eq!(c.color_count(), r.value);
        if r.value > 0 {
            prop_assert!(pathchrom::is_k_colorable(&g, r.value - 1).unwrap().is_none());
        }
    }
}

// Every valid decomposition dominates the minimal intervals of its own
// introduction order, bag by bag.
#[test]
fn minimal_intervals_are_dominated() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let n = rng.gen_range(1..=7);
        let ivs: Vec<Interval> = (0..n)
            .map(|_| {
                let a = rng.gen_range(0..10);
                Interval::new(a, a + rng.gen_range(0..5))
            })
            .collect();
        let edges: Vec<_> = (0..n)
            .tuple_combinations()
            .filter(|&(u, v): &(usize, usize)| ivs[u].intersects(&ivs[v]) && rng.gen_bool(0.6))
            .collect();
        let g = opaque(n, &edges);
        let d = PathDecomposition::new(ivs.clone());
        assert!(verify_path_decomposition(&g, &d).unwrap().is_valid());
        let order: Vec<usize> = (0..n).sorted_by_key(|&v| (ivs[v].left, v)).collect();
        let m = minimal_intervals(&g, &order);
        assert!(verify_path_decomposition(&g, &m).unwrap().is_valid());
        for (t, &v) in order.iter().enumerate() {
            let small = m.bag_at(t as i64);
            let big = d.bag_at(ivs[v].left);
            assert!(small.iter().all(|u| big.contains(u)), "{small:?} not in {big:?}");
        }
    }
}

#[test]
fn clique_bound_on_constructed_decompositions() {
    // Every graph here is triangle-free with an edge, so omega = 2.
    for n in 2..=4 {
        let g = build_g(n).unwrap();
        for shrink in [false, true] {
            let d = geometric_path_decomposition_g(n, shrink).unwrap().decomposition;
            assert!(decomposition_chromatic(&g, &d).unwrap() >= 2);
        }
        let h = build_h(n).unwrap();
        let nat = natural_tree_decomposition_h(n).unwrap();
        assert!(decomposition_chromatic(&h, &nat.decomposition).unwrap() >= 2);
        let s = build_shift(n + 1).unwrap();
        let sd = shift_path_decomposition(n + 1).unwrap();
        assert!(decomposition_chromatic(&s, &sd.decomposition).unwrap() >= clique_number(&s));
    }
}

#[test]
fn normalized_geometric_decomposition() {
    let g = build_g(3).unwrap();
    for shrink in [false, true] {
        let d = geometric_path_decomposition_g(3, shrink).unwrap().decomposition;
        let nd = normalize_path(&g, &d).unwrap();
        assert!(verify_path_decomposition(&g, &nd).unwrap().is_valid());
        assert_eq!(decomposition_chromatic(&g, &nd).unwrap(), decomposition_chromatic(&g, &d).unwrap());
        let mut ends: Vec<i64> = nd.intervals().iter().flat_map(|i| [i.left, i.right]).collect();
        ends.sort_unstable();
        assert_eq!(ends, (0..2 * g.vertex_count() as i64).collect::<Vec<_>>());
        // Normalizing again only relabels.
        assert_eq!(normalize_path(&g, &nd).unwrap(), nd);
        let vs = vees(3).unwrap();
        let before = property_report(&vs, &d).unwrap();
        let after = property_report(&vs, &nd).unwrap();
        if shrink {
            assert_eq!(before.observed, after.observed);
        }
        assert!(after.violation_count == 0);
    }
}

#[test]
fn path_views_agree_on_constructions() {
    let g = build_g(4).unwrap();
    let d = geometric_path_decomposition_g(4, true).unwrap().decomposition;
    let t = path_as_tree(&d);
    assert!(verify_tree_decomposition(&g, &t).unwrap().is_valid());
    assert_eq!(decomposition_chromatic(&g, &t).unwrap(), 2);
    let s4 = build_shift(4).unwrap();
    let t4 = path_as_tree(&shift_path_decomposition(4).unwrap().decomposition);
    assert_eq!(t4.node_count(), 4);
    assert!(verify_tree_decomposition(&s4, &t4).unwrap().is_valid());
}

#[test]
fn reversed_decomposition_mirrors_labels() {
    let gd = geometric_path_decomposition_g(5, true).unwrap();
    let r = property_report(&gd.vees, &gd.decomposition.reversed()).unwrap();
    assert_eq!(r.observed[&PatternClass::Q1].iter().copied().collect::<Vec<_>>(), vec![RelationLabel::OML]);
    assert!(!r.is_conformant());
    let straight = property_report(&gd.vees, &gd.decomposition).unwrap();
    for (q, labels) in &straight.observed {
        // Reflection swaps left and right but keeps containment.
        let mirrored: Vec<_> = labels
            .iter()
            .map(|&l| match l {
                RelationLabel::ISF | RelationLabel::IFS => l,
                _ => l.swapped(),
            })
            .sorted()
            .collect();
        assert_eq!(r.observed[q].iter().copied().collect::<Vec<_>>(), mirrored);
    }
}

#[test]
fn unshrunk_report_flags_without_failing() {
    for n in 1..=5 {
        let gd = geometric_path_decomposition_g(n, false).unwrap();
        assert!(property_report(&gd.vees, &gd.decomposition).is_ok());
    }
    // Pairs sharing an endpoint coincide; a decomposition that pins a Q1
    // pair onto common endpoints is reported, not rejected.
    let gd = geometric_path_decomposition_g(2, true).unwrap();
    let mut ivs = gd.decomposition.intervals().to_vec();
    let (a, b) = (0..gd.vees.len())
        .cartesian_product(0..gd.vees.len())
        .find(|&(a, b)| classify_pair(&gd.vees[a], &gd.vees[b]) == PatternClass::Q1)
        .unwrap();
    ivs[b].left = ivs[a].right;
    let r = property_report(&gd.vees, &PathDecomposition::new(ivs)).unwrap();
    assert!(r.violations.iter().any(|v| v.observed.is_none() && v.pattern == PatternClass::Q1));
    assert!(!r.is_conformant());
}

// Copies of the two-V tree of the first pattern, against a scan of pairs.
#[test]
fn q1_copies_match_pair_scan() {
    let q1 = BinaryTree::parse(&["", "0", "1", "10", "11"]).unwrap();
    for n in 2..=4 {
        let copies = enumerate_strong_copies(&q1, n).unwrap();
        assert!(copies.iter().all(|c| is_strong_copy(c, n)));
        let vs = vees(n).unwrap();
        let pairs = vs
            .iter()
            .cartesian_product(&vs)
            .filter(|(a, b)| a != b && classify_pair(a, b) == PatternClass::Q1)
            .count();
        assert_eq!(copies.len(), pairs, "n={n}");
    }
}

// Colour every node of T_n by a fixed rule and confirm the answer really is
// monochromatic on all copies of the source inside it.
#[test]
fn monochromatic_answer_checks_out() {
    let t0 = BinaryTree::complete(0).unwrap();
    let nodes = TreeOrder::new(3).unwrap().nodes();
    for mask in [0u32, 0b1011_0110_1001_101, 0x5555, 0x7fff] {
        let color = |c: &pathchrom::patterns::StrongCopyMap| {
            let i = nodes.iter().position(|t| *t == c.image[0]).unwrap();
            (mask >> i) & 1
        };
        let Some(r) = find_monochromatic_copy(3, 1, &t0, color).unwrap() else {
            continue;
        };
        assert!(is_strong_copy(&r, 3));
        let colors: Vec<u32> = r.image.iter().map(|t| (mask >> nodes.iter().position(|s| s == t).unwrap()) & 1).collect();
        assert!(colors.iter().all_equal());
    }
}

// G_9 and G_10 are too large to build, so edges are checked through the
// low-point grouping instead of adjacency lists.
#[test]
fn geometric_decompositions_valid_to_depth_ten() {
    for n in 1..=10 {
        for shrink in [false, true] {
            let gd = geometric_path_decomposition_g(n, shrink).unwrap();
            assert!(gd.uncovered_edges().is_empty(), "n={n} shrink={shrink}");
            assert!(gd.decomposition.intervals().iter().all(|iv| iv.left < iv.right));
        }
    }
}
