use proptest::prelude::*;

use epg_core::awning::{find_awning, verify_awning};
use epg_core::classifier::{classify_inputs, AwningStatus, InputsSnapshot};
use epg_core::graph::{enhanced_power_graph, power_graph};
use epg_core::rainbow::{check_rainbow, rc_exact};
use epg_core::{
    AwningSearch, AwningVerdict, CyclicDecomposition, FiniteGroup, GroupSpec, RuleId, SearchConfig, SimpleGraph,
    Verdict,
};

const SPECS: &[&str] = &[
    "cyclic(1)",
    "cyclic(6)",
    "cyclic(12)",
    "dihedral(3)",
    "dihedral(4)",
    "dihedral(6)",
    "dicyclic(2)",
    "dicyclic(3)",
    "dicyclic(4)",
    "elementary_abelian(2,2)",
    "elementary_abelian(2,3)",
    "elementary_abelian(3,2)",
    "symmetric(3)",
    "symmetric(4)",
    "product(cyclic(2),cyclic(4))",
    "product(cyclic(2),cyclic(6))",
    "product(cyclic(4),cyclic(4))",
    "product(cyclic(2),dicyclic(2))",
    "product(cyclic(3),symmetric(3))",
    "product(cyclic(3),dicyclic(2))",
];

fn group(spec: &str) -> FiniteGroup {
    FiniteGroup::construct(&spec.parse::<GroupSpec>().unwrap(), 720).unwrap()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Connected graph on `n` vertices: a random tree plus extra edges.
fn connected_graph() -> impl Strategy<Value = SimpleGraph> {
    (2usize..=6)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
            (Just(n), parents, prop::collection::vec((0..n, 0..n), 0..4))
        })
        .prop_map(|(n, parents, extra)| {
            let tree = parents.into_iter().enumerate().map(|(i, p)| (p, i + 1));
            let extra = extra.into_iter().filter(|(u, v)| u != v);
            SimpleGraph::from_edges(n, tree.chain(extra))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms_hold(idx in 0..SPECS.len()) {
        let g = group(SPECS[idx]);
        prop_assert!(g.validate().is_ok());
        let n = g.order();
        for a in 0..n {
            prop_assert_eq!(g.mul(a, g.inverse(a)), g.identity());
            prop_assert_eq!(g.mul(g.identity(), a), a);
        }
    }

    #[test]
    fn generated_subgroup_size_is_element_order(idx in 0..SPECS.len(), x in 0usize..1000) {
        let g = group(SPECS[idx]);
        let x = x % g.order();
        prop_assert_eq!(g.generated_subgroup(x).len(), g.element_order(x));
    }

    #[test]
    fn decomposition_covers_and_is_maximal(idx in 0..SPECS.len()) {
        let g = group(SPECS[idx]);
        let d = CyclicDecomposition::of_group(&g);
        for x in 0..g.order() {
            prop_assert!(d.containing(x).next().is_some());
        }
        prop_assert_eq!(d.m() == 1, g.is_cyclic().is_some());
        let epg = enhanced_power_graph(&d);
        prop_assert_eq!(epg.is_complete(), g.is_cyclic().is_some());
        prop_assert!(power_graph(&g).is_subgraph_of(&epg));
    }

    #[test]
    fn cyclic_products(a in 1usize..=8, b in 1usize..=8) {
        let g = group(&format!("product(cyclic({a}),cyclic({b}))"));
        prop_assert_eq!(g.is_cyclic().is_some(), gcd(a, b) == 1);
    }

    #[test]
    fn rc_is_at_least_bridge_count_and_certified(g in connected_graph()) {
        let r = rc_exact(&g, &SearchConfig::default());
        let rc = r.exact().unwrap();
        prop_assert!(rc >= g.bridges().len());
        let cert = r.upper_bound_certificate.unwrap();
        prop_assert!(cert.used_colors() <= rc);
        prop_assert!(check_rainbow(&g, &cert).is_ok());
    }

    #[test]
    fn adding_an_edge_never_raises_rc(g in connected_graph(), u in 0usize..6, v in 0usize..6) {
        let n = g.vertex_count();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v && !g.has_edge(u, v));
        let before = rc_exact(&g, &SearchConfig::default()).exact().unwrap();
        let after = rc_exact(&g.with_edge(u, v), &SearchConfig::default()).exact().unwrap();
        prop_assert!(after <= before);
    }

    #[test]
    fn awning_certificates_verify_under_any_order(idx in 0..SPECS.len(), seed in any::<u64>()) {
        let g = group(SPECS[idx]);
        let d = CyclicDecomposition::of_group(&g);
        let mut order: Vec<usize> = (0..d.m()).collect();
        let mut s = seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let (verdict, _) = find_awning(&d, &order, &AwningSearch::default());
        if let AwningVerdict::Found(cert) = &verdict {
            prop_assert_eq!(cert.order(), &order[..]);
            prop_assert!(verify_awning(&d, cert).is_ok());
        }
        prop_assert_eq!(matches!(verdict, AwningVerdict::NotApplicable), d.m() < 2);
    }

    #[test]
    fn first_matching_rule_fires(
        m in 1usize..20,
        icn in 0usize..20,
        invmax in 0usize..20,
        awning in 0usize..3,
    ) {
        let awning = [AwningStatus::Found, AwningStatus::None, AwningStatus::Unknown][awning];
        let inputs = InputsSnapshot { m, icn: icn.min(m), invmax: invmax.min(m), awning, is_cyclic: m == 1 };
        let p = classify_inputs(&inputs);
        let first = RuleId::ALL.iter().copied().find(|r| r.hypothesis_holds(&inputs)).unwrap();
        prop_assert_eq!(p.rule, first);
        prop_assert!(p.rule.hypothesis_holds(&inputs));
        prop_assert_eq!(p.inputs, inputs);
        if inputs.is_cyclic {
            prop_assert_eq!(p.verdict, Verdict::Value(1));
        }
    }
}
