//! Algebraic laws across the value types and operators.

use std::collections::HashMap;

use proptest::prelude::*;

use neutro_core::combinators::{
    component_negate, tconorm_apply, tnorm_apply, ComponentConorm, ComponentNorm,
};
use neutro_core::dsl::{self, EvalConfig, EvalMode, Formula, Negation, Node, Normalization};
use neutro_core::measure::{
    classify, normalize, sum_profile, sum_support, vector_norm, Classification,
};
use neutro_core::ordered::{
    klaw_pair, klaw_triple, routed_product, routing_oracle, Priority,
};
use neutro_core::topology::{
    ant_intersection, ant_union, is_general_topology, set_included, set_intersection, set_union,
    NeutroFamily, NeutroSet,
};
use neutro_core::triple_ops::{complement, nconorm, negation_swap, nnorm, NnConfig};
use neutro_core::{CrispTriple, Interval, NeutroTriple, SubunitarySet};

const NORMS: [ComponentNorm; 3] = [
    ComponentNorm::Algebraic,
    ComponentNorm::Bounded,
    ComponentNorm::Min,
];
const CONORMS: [ComponentConorm; 3] = [
    ComponentConorm::Algebraic,
    ComponentConorm::Bounded,
    ComponentConorm::Max,
];

fn unit() -> impl Strategy<Value = f64> + Clone {
    0.0..=1.0f64
}

/// Values on a 1/1024 grid; `1 - x` is exact there, which the involution
/// laws need.
fn dyadic() -> impl Strategy<Value = f64> + Clone {
    (0..=1024u32).prop_map(|k| f64::from(k) / 1024.0)
}

fn subunitary(values: impl Strategy<Value = f64> + Clone) -> impl Strategy<Value = SubunitarySet> {
    prop::collection::vec(values, 2..=6).prop_map(|mut endpoints| {
        endpoints.sort_by(f64::total_cmp);
        let intervals = endpoints
            .chunks_exact(2)
            .map(|pair| Interval::new(pair[0], pair[1]).expect("sorted unit endpoints"))
            .collect();
        SubunitarySet::from_union(intervals)
    })
}

fn single_interval() -> impl Strategy<Value = SubunitarySet> {
    (unit(), unit()).prop_map(|(a, b)| {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        SubunitarySet::from_union(vec![Interval::new(lo, hi).expect("unit endpoints")])
    })
}

fn triple(values: impl Strategy<Value = f64> + Clone) -> impl Strategy<Value = NeutroTriple> {
    (
        subunitary(values.clone()),
        subunitary(values.clone()),
        subunitary(values),
    )
        .prop_map(|(t, i, f)| NeutroTriple::new(t, i, f))
}

fn interval_triple() -> impl Strategy<Value = NeutroTriple> {
    (single_interval(), single_interval(), single_interval())
        .prop_map(|(t, i, f)| NeutroTriple::new(t, i, f))
}

fn crisp_triple() -> impl Strategy<Value = CrispTriple> {
    (unit(), unit(), unit()).prop_map(|(t, i, f)| CrispTriple::raw(t, i, f))
}

/// Componentwise join: the least triple above both arguments.
fn join(a: &NeutroTriple, b: &NeutroTriple) -> NeutroTriple {
    NeutroTriple::new(
        tconorm_apply(ComponentConorm::Max, &a.t, &b.t),
        tnorm_apply(ComponentNorm::Min, &a.i, &b.i),
        tnorm_apply(ComponentNorm::Min, &a.f, &b.f),
    )
}

fn close(a: &CrispTriple, b: &CrispTriple, tol: f64) -> bool {
    (a.t - b.t).abs() <= tol && (a.i - b.i).abs() <= tol && (a.f - b.f).abs() <= tol
}

proptest! {
    #[test]
    fn canonicalization_is_idempotent(s in subunitary(unit())) {
        let rebuilt = SubunitarySet::new(s.intervals().to_vec()).unwrap();
        prop_assert_eq!(rebuilt, s);
    }

    #[test]
    fn leq_is_reflexive(x in triple(unit())) {
        prop_assert!(x.leq(&x));
    }

    #[test]
    fn leq_is_antisymmetric_on_intervals(x in interval_triple(), y in interval_triple(), pick in any::<bool>()) {
        let y = if pick { x.clone() } else { y };
        if x.leq(&y) && y.leq(&x) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn leq_is_transitive_on_constructed_chains(a in triple(unit()), b in triple(unit()), c in triple(unit())) {
        let x = a.clone();
        let y = join(&a, &b);
        let z = join(&y, &c);
        prop_assert!(x.leq(&y));
        prop_assert!(y.leq(&z));
        prop_assert!(x.leq(&z));
    }

    #[test]
    fn scalar_norm_axioms(a in unit(), b in unit(), c in unit()) {
        for kind in NORMS {
            prop_assert_eq!(kind.apply(a, b), kind.apply(b, a));
            let assoc_l = kind.apply(kind.apply(a, b), c);
            let assoc_r = kind.apply(a, kind.apply(b, c));
            prop_assert!((assoc_l - assoc_r).abs() <= 1e-12);
            // monotonicity in the first argument
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            prop_assert!(kind.apply(lo, c) <= kind.apply(hi, c));
            prop_assert!((kind.apply(a, 1.0) - a).abs() <= 1e-12);
            prop_assert!(kind.apply(a, 0.0).abs() <= 1e-12);
        }
        for kind in CONORMS {
            prop_assert_eq!(kind.apply(a, b), kind.apply(b, a));
            let assoc_l = kind.apply(kind.apply(a, b), c);
            let assoc_r = kind.apply(a, kind.apply(b, c));
            prop_assert!((assoc_l - assoc_r).abs() <= 1e-12);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            prop_assert!(kind.apply(lo, c) <= kind.apply(hi, c));
            prop_assert!((kind.apply(a, 0.0) - a).abs() <= 1e-12);
            prop_assert!((kind.apply(a, 1.0) - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn algebraic_duality(a in unit(), b in unit()) {
        let conorm = ComponentConorm::Algebraic.apply(a, b);
        let dual = 1.0 - ComponentNorm::Algebraic.apply(1.0 - a, 1.0 - b);
        prop_assert!((conorm - dual).abs() <= 1e-12);
    }

    #[test]
    fn negate_is_an_involution_on_dyadics(s in subunitary(dyadic())) {
        prop_assert_eq!(component_negate(&component_negate(&s)), s);
    }

    #[test]
    fn triple_ops_commute(x in triple(unit()), y in triple(unit())) {
        for t_op in NORMS {
            for if_op in CONORMS {
                let cfg = NnConfig::new(t_op, if_op);
                prop_assert_eq!(nnorm(cfg, &x, &y), nnorm(cfg, &y, &x));
                prop_assert_eq!(nconorm(cfg, &x, &y), nconorm(cfg, &y, &x));
            }
        }
    }

    #[test]
    fn triple_ops_associate_on_crisp(t in crisp_triple(), u in crisp_triple(), v in crisp_triple()) {
        let cfgs = [
            NnConfig::default(),
            NnConfig::new(ComponentNorm::Algebraic, ComponentConorm::Algebraic),
            NnConfig::new(ComponentNorm::Bounded, ComponentConorm::Bounded),
        ];
        let x = NeutroTriple::crisp(t.t, t.i, t.f).unwrap();
        let y = NeutroTriple::crisp(u.t, u.i, u.f).unwrap();
        let z = NeutroTriple::crisp(v.t, v.i, v.f).unwrap();
        for cfg in cfgs {
            for op in [nnorm, nconorm] {
                let lhs = op(cfg, &op(cfg, &x, &y), &z).as_crisp().unwrap();
                let rhs = op(cfg, &x, &op(cfg, &y, &z)).as_crisp().unwrap();
                prop_assert!(close(&lhs, &rhs, 1e-12));
            }
        }
    }

    #[test]
    fn minmax_monotone(a in triple(unit()), b in triple(unit()), z in triple(unit())) {
        let x = a.clone();
        let y = join(&a, &b);
        let cfg = NnConfig::default();
        prop_assert!(nnorm(cfg, &x, &z).leq(&nnorm(cfg, &y, &z)));
        prop_assert!(nconorm(cfg, &x, &z).leq(&nconorm(cfg, &y, &z)));
    }

    #[test]
    fn boundary_identities(x in triple(unit())) {
        let one = NeutroTriple::one();
        for cfg in [
            NnConfig::default(),
            NnConfig::new(ComponentNorm::Algebraic, ComponentConorm::Algebraic),
        ] {
            prop_assert_eq!(nnorm(cfg, &x, &one), x.clone());
            prop_assert_eq!(nconorm(cfg, &x, &one), one.clone());
        }
    }

    #[test]
    fn boundary_identities_on_zero_indeterminacy_slice(
        t in subunitary(unit()),
        f in subunitary(unit()),
    ) {
        let x = NeutroTriple::new(t, SubunitarySet::crisp(0.0).unwrap(), f);
        let zero = NeutroTriple::zero();
        for cfg in [
            NnConfig::default(),
            NnConfig::new(ComponentNorm::Algebraic, ComponentConorm::Algebraic),
        ] {
            prop_assert_eq!(nnorm(cfg, &x, &zero), zero.clone());
            prop_assert_eq!(nconorm(cfg, &x, &zero), x.clone());
        }
    }

    #[test]
    fn de_morgan_exact(x in triple(unit()), y in triple(unit())) {
        let cfg = NnConfig::default();
        let lhs = complement(&nnorm(cfg, &x, &y));
        let rhs = nconorm(cfg, &complement(&x), &complement(&y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn minmax_idempotent(x in triple(unit())) {
        let cfg = NnConfig::default();
        prop_assert_eq!(nnorm(cfg, &x, &x), x.clone());
        prop_assert_eq!(nconorm(cfg, &x, &x), x);
    }

    #[test]
    fn involutions_on_dyadics(x in triple(dyadic())) {
        prop_assert_eq!(complement(&complement(&x)), x.clone());
        prop_assert_eq!(negation_swap(&negation_swap(&x)), x);
    }

    #[test]
    fn routed_matches_oracle(
        vars in prop::collection::vec(crisp_triple(), 2..=4),
        order_idx in 0..6usize,
    ) {
        let order = Priority::all()[order_idx];
        let fast = routed_product(order, &vars).unwrap();
        let slow = routing_oracle(order, &vars).unwrap();
        prop_assert!(close(&fast, &slow, 1e-12));
    }

    #[test]
    fn routed_preserves_norm(
        vars in prop::collection::vec(crisp_triple(), 2..=4),
        order_idx in 0..6usize,
    ) {
        let order = Priority::all()[order_idx];
        let out = routed_product(order, &vars).unwrap();
        let expected: f64 = vars.iter().map(vector_norm).product();
        prop_assert!((vector_norm(&out) - expected).abs() <= 1e-12);
    }

    #[test]
    fn routed_flattens(
        x in crisp_triple(),
        y in crisp_triple(),
        z in crisp_triple(),
        order_idx in 0..6usize,
    ) {
        let order = Priority::all()[order_idx];
        let nested = routed_product(order, &[routed_product(order, &[x, y]).unwrap(), z]).unwrap();
        let flat = routed_product(order, &[x, y, z]).unwrap();
        prop_assert!(close(&nested, &flat, 1e-12));
    }

    #[test]
    fn routed_is_permutation_invariant(
        vars in prop::collection::vec(crisp_triple(), 2..=5),
        order_idx in 0..6usize,
        seed in any::<u64>(),
    ) {
        let order = Priority::all()[order_idx];
        let baseline = routed_product(order, &vars).unwrap();
        let mut shuffled = vars.clone();
        // cheap deterministic shuffle
        let mut state = seed | 1;
        for i in (1..shuffled.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (state >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(routed_product(order, &shuffled).unwrap(), baseline);
    }

    #[test]
    fn klaw_pair_is_symmetric(
        (z, w) in (2..=8usize).prop_flat_map(|k| (
            prop::collection::vec(unit(), k),
            prop::collection::vec(unit(), k),
        )),
    ) {
        prop_assert_eq!(klaw_pair(&z, &w).unwrap(), klaw_pair(&w, &z).unwrap());
    }

    #[test]
    fn routed_decomposes_into_prefix_products(vars in prop::collection::vec(crisp_triple(), 2..=5)) {
        let order: Priority = "TIF".parse().unwrap();
        let out = routed_product(order, &vars).unwrap();
        let prod_t: f64 = vars.iter().map(|v| v.t).product();
        let prod_ti: f64 = vars.iter().map(|v| v.t + v.i).product();
        let prod_tif: f64 = vars.iter().map(|v| v.t + v.i + v.f).product();
        prop_assert!((out.t - prod_t).abs() <= 1e-12);
        prop_assert!((out.i - (prod_ti - prod_t)).abs() <= 1e-12);
        prop_assert!((out.f - (prod_tif - prod_ti)).abs() <= 1e-12);
        // the indeterminacy mass is the two-vector k-law plus the pure-I term
        let t_vec: Vec<f64> = vars.iter().map(|v| v.t).collect();
        let i_vec: Vec<f64> = vars.iter().map(|v| v.i).collect();
        let prod_i: f64 = i_vec.iter().product();
        prop_assert!((out.i - (klaw_pair(&i_vec, &t_vec).unwrap() + prod_i)).abs() <= 1e-12);
    }

    #[test]
    fn klaw_counts_by_inclusion_exclusion(k in 2..=8usize) {
        let ones = vec![1.0; k];
        let pair = klaw_pair(&ones, &ones).unwrap();
        prop_assert_eq!(pair, (1u64 << k) as f64 - 2.0);
        let triple_count = klaw_triple(&ones, &ones, &ones).unwrap();
        let expected = 3f64.powi(k as i32) - 3.0 * 2f64.powi(k as i32) + 3.0;
        prop_assert_eq!(triple_count, expected);
    }

    #[test]
    fn minkowski_interval_budget(x in triple(unit())) {
        let support = sum_support(&x);
        let bound = x.t.intervals().len() * x.i.intervals().len() * x.f.intervals().len();
        prop_assert!(!support.is_empty());
        prop_assert!(support.len() <= bound);
        // sorted and disjoint
        for pair in support.windows(2) {
            prop_assert!(pair[0].1 < pair[1].0);
        }
    }

    #[test]
    fn crisp_sum_profile_degenerates(t in unit(), i in unit(), f in unit()) {
        let x = NeutroTriple::crisp(t, i, f).unwrap();
        let profile = sum_profile(&x);
        prop_assert_eq!(profile.min_sum, profile.max_sum);
        let sum = vector_norm(&x.as_crisp().unwrap());
        prop_assert!((profile.min_sum - sum).abs() <= 1e-15);
    }

    #[test]
    fn crisp_classification_matches_thresholds(t in unit(), i in unit(), f in unit()) {
        let x = NeutroTriple::crisp(t, i, f).unwrap();
        let sum = t + i + f;
        let got = classify(&x);
        if (sum - 1.0).abs() <= 1e-9 {
            prop_assert_eq!(got, Classification::PlausiblyNormalized);
        } else if sum < 1.0 {
            prop_assert_eq!(got, Classification::Intuitionistic);
        } else {
            prop_assert_eq!(got, Classification::Paraconsistent);
        }
    }

    #[test]
    fn normalize_hits_target(t in unit(), i in unit(), f in unit(), target in 0.01..=3.0f64) {
        let raw = CrispTriple::raw(t, i, f);
        prop_assume!(vector_norm(&raw) > 1e-9);
        let out = normalize(&raw, target).unwrap();
        prop_assert!((out.sum() - target).abs() <= 1e-12);
    }

    #[test]
    fn routed_then_product_rule_is_a_noop(x in crisp_triple(), y in crisp_triple()) {
        let order: Priority = "TIF".parse().unwrap();
        let out = routed_product(order, &[x, y]).unwrap();
        let target = vector_norm(&x) * vector_norm(&y);
        prop_assume!(vector_norm(&out) > 1e-9 && target > 0.0);
        let rescaled = normalize(&out, target).unwrap();
        prop_assert!((rescaled.t - out.t).abs() <= 1e-12);
        prop_assert!((rescaled.i - out.i).abs() <= 1e-12);
        prop_assert!((rescaled.f - out.f).abs() <= 1e-12);
    }

    #[test]
    fn ant_ops_agree_with_algebraic_combinators(a in subunitary(unit()), b in subunitary(unit())) {
        prop_assert_eq!(ant_union(&a, &b), tconorm_apply(ComponentConorm::Algebraic, &a, &b));
        prop_assert_eq!(ant_intersection(&a, &b), tnorm_apply(ComponentNorm::Algebraic, &a, &b));
    }

    #[test]
    fn minmax_set_operations_commute_associate_and_idempote(
        xs in prop::collection::vec(interval_triple(), 2),
        ys in prop::collection::vec(interval_triple(), 2),
        zs in prop::collection::vec(interval_triple(), 2),
    ) {
        let universe: Vec<String> = vec!["a".to_string(), "b".to_string()];
        let a = NeutroSet::new(universe.clone(), xs).unwrap();
        let b = NeutroSet::new(universe.clone(), ys).unwrap();
        let c = NeutroSet::new(universe, zs).unwrap();
        let cfg = NnConfig::default();
        prop_assert_eq!(
            set_union(&a, &b, cfg).unwrap(),
            set_union(&b, &a, cfg).unwrap()
        );
        prop_assert_eq!(
            set_intersection(&a, &b, cfg).unwrap(),
            set_intersection(&b, &a, cfg).unwrap()
        );
        prop_assert_eq!(
            set_union(&set_union(&a, &b, cfg).unwrap(), &c, cfg).unwrap(),
            set_union(&a, &set_union(&b, &c, cfg).unwrap(), cfg).unwrap()
        );
        prop_assert_eq!(
            set_intersection(&set_intersection(&a, &b, cfg).unwrap(), &c, cfg).unwrap(),
            set_intersection(&a, &set_intersection(&b, &c, cfg).unwrap(), cfg).unwrap()
        );
        prop_assert_eq!(set_union(&a, &a, cfg).unwrap(), a.clone());
        prop_assert_eq!(set_intersection(&a, &a, cfg).unwrap(), a);
    }

    #[test]
    fn set_inclusion_is_a_partial_order(
        xs in prop::collection::vec(interval_triple(), 2),
        ys in prop::collection::vec(interval_triple(), 2),
        zs in prop::collection::vec(interval_triple(), 2),
    ) {
        let universe: Vec<String> = vec!["a".to_string(), "b".to_string()];
        let a = NeutroSet::new(universe.clone(), xs).unwrap();
        let b0 = NeutroSet::new(universe.clone(), ys).unwrap();
        let c0 = NeutroSet::new(universe.clone(), zs).unwrap();
        // chain by joining pointwise
        let b = set_union(&a, &b0, NnConfig::default()).unwrap();
        let c = set_union(&b, &c0, NnConfig::default()).unwrap();
        prop_assert!(set_included(&a, &a).unwrap());
        prop_assert!(set_included(&a, &b).unwrap());
        prop_assert!(set_included(&b, &c).unwrap());
        prop_assert!(set_included(&a, &c).unwrap());
        if set_included(&a, &b0).unwrap() && set_included(&b0, &a).unwrap() {
            prop_assert_eq!(a, b0);
        }
    }
}

fn grid_set(rng_values: &[u8]) -> NeutroTriple {
    let v = |k: u8| f64::from(k % 5) / 4.0;
    NeutroTriple::crisp(v(rng_values[0]), v(rng_values[1]), v(rng_values[2])).unwrap()
}

proptest! {
    /// On a finite family closed under pairwise union, the union of every
    /// subfamily is a member; this is what lets the checker test the
    /// arbitrary-union axiom pairwise.
    #[test]
    fn pairwise_union_closure_covers_subfamilies(seeds in prop::collection::vec([any::<u8>(); 3], 2..=3)) {
        let universe: Vec<String> = vec!["a".to_string()];
        let cfg = NnConfig::default();
        let mut members: Vec<NeutroSet> = Vec::new();
        for seed in &seeds {
            let set = NeutroSet::constant(&universe, &grid_set(seed)).unwrap();
            if !members.contains(&set) {
                members.push(set);
            }
        }
        // close under pairwise union
        loop {
            let mut added = false;
            for i in 0..members.len() {
                for j in i + 1..members.len() {
                    let joined = set_union(&members[i], &members[j], cfg).unwrap();
                    if !members.contains(&joined) {
                        members.push(joined);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        prop_assume!(members.len() <= 5);
        // every subfamily union is a member
        for mask in 1u32..(1 << members.len()) {
            let chosen: Vec<&NeutroSet> =
                (0..members.len()).filter(|i| mask >> i & 1 == 1).map(|i| &members[i]).collect();
            let mut folded = chosen[0].clone();
            for m in &chosen[1..] {
                folded = set_union(&folded, m, cfg).unwrap();
            }
            prop_assert!(members.contains(&folded));
        }
    }

    #[test]
    fn topology_verdict_is_order_independent(seeds in prop::collection::vec([any::<u8>(); 3], 1..=3)) {
        let universe: Vec<String> = vec!["a".to_string()];
        let mut members = vec![
            ("ZERO".to_string(), NeutroSet::constant(&universe, &NeutroTriple::zero()).unwrap()),
            ("ONE".to_string(), NeutroSet::constant(&universe, &NeutroTriple::one()).unwrap()),
        ];
        for (idx, seed) in seeds.iter().enumerate() {
            members.push((
                format!("M{idx}"),
                NeutroSet::constant(&universe, &grid_set(seed)).unwrap(),
            ));
        }
        let forward =
            NeutroFamily::new(universe.clone(), members.clone()).unwrap();
        members.reverse();
        let backward = NeutroFamily::new(universe, members).unwrap();
        let a = is_general_topology(&forward, NnConfig::default());
        let b = is_general_topology(&backward, NnConfig::default());
        prop_assert_eq!(a.is_topology, b.is_topology);
        prop_assert_eq!(a.violations.len(), b.violations.len());
    }
}

fn formula() -> impl Strategy<Value = Formula> {
    let literal = (
        subunitary(dyadic()),
        subunitary(dyadic()),
        subunitary(dyadic()),
    )
        .prop_map(|(t, i, f)| Formula::synthetic(Node::Literal(NeutroTriple::new(t, i, f))));
    let var = prop_oneof![Just("x"), Just("y"), Just("z"), Just("long_name")]
        .prop_map(|name| Formula::synthetic(Node::Var(name.to_string())));
    let leaf = prop_oneof![var, literal];
    leaf.prop_recursive(4, 32, 2, |inner| {
        prop_oneof![
            inner
                .clone()
                .prop_map(|f| Formula::synthetic(Node::Not(Box::new(f)))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::synthetic(Node::And(
                Box::new(a),
                Box::new(b)
            ))),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::synthetic(Node::Or(
                Box::new(a),
                Box::new(b)
            ))),
        ]
    })
}

proptest! {
    #[test]
    fn format_then_parse_is_identity(f in formula()) {
        let text = dsl::format_formula(&f);
        let reparsed = dsl::parse(&text).unwrap();
        prop_assert_eq!(reparsed, f);
    }

    #[test]
    fn format_of_parse_is_idempotent(f in formula()) {
        let text = dsl::format_formula(&f);
        let once = dsl::format_formula(&dsl::parse(&text).unwrap());
        prop_assert_eq!(&once, &text);
        let twice = dsl::format_formula(&dsl::parse(&once).unwrap());
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn formula_de_morgan_under_default_config(
        a in triple(unit()),
        b in triple(unit()),
    ) {
        let env: HashMap<String, NeutroTriple> =
            [("a".to_string(), a), ("b".to_string(), b)].into();
        let cfg = EvalConfig::default();
        let lhs = dsl::evaluate(&dsl::parse("!(a & b)").unwrap(), &env, &cfg).unwrap();
        let rhs = dsl::evaluate(&dsl::parse("!a | !b").unwrap(), &env, &cfg).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// A left-nested ordered chain evaluates to the k-ary routed product of
    /// its leaves.
    #[test]
    fn ordered_chain_equals_kary(
        vals in prop::collection::vec((unit(), unit(), unit()), 3..=4),
    ) {
        let mut env = HashMap::new();
        let mut crisp = Vec::new();
        let mut text = String::new();
        for (idx, (t, i, f)) in vals.iter().enumerate() {
            let sum = t + i + f;
            prop_assume!(sum > 1e-6);
            let (t, i, f) = (t / sum, i / sum, f / sum);
            let name = format!("v{idx}");
            env.insert(name.clone(), NeutroTriple::crisp(t, i, f).unwrap());
            crisp.push(CrispTriple::raw(t, i, f));
            if idx > 0 {
                text.push_str(" & ");
            }
            text.push_str(&name);
        }
        let cfg = EvalConfig {
            mode: EvalMode::Ordered {
                conj: "TIF".parse().unwrap(),
                disj: "FIT".parse().unwrap(),
            },
            negation: Negation::Complement,
            normalization: Normalization::None,
        };
        let out = dsl::evaluate(&dsl::parse(&text).unwrap(), &env, &cfg).unwrap();
        let direct = routed_product("TIF".parse().unwrap(), &crisp).unwrap();
        let got = out.as_crisp().unwrap();
        prop_assert!(close(&got, &direct, 1e-12));
    }
}
