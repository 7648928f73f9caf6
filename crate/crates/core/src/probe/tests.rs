use super::*;
use crate::catalog::catalog;

fn named(name: &str) -> FiniteSemigroup {
    catalog(name).unwrap().semigroup
}

/// Every map from `elems` checked against every operation, with no pruning.
fn brute_force_morphisms(ego: &AlterEgoSpec, power: &Power, elems: &[usize]) -> usize {
    let m = power.m;
    let count = m.pow(elems.len() as u32);
    (0..count)
        .filter(|&code| {
            let mut c = code;
            let alpha: HashMap<usize, Element> = elems
                .iter()
                .map(|&x| {
                    let v = c % m;
                    c /= m;
                    (x, v)
                })
                .collect();
            let constants = ego.constants.iter().all(|&k| alpha[&power.constant(k)] == k);
            let ops = elems.iter().all(|&x| {
                elems.iter().all(|&y| {
                    ego.total_ops
                        .iter()
                        .all(|op| alpha[&power.total(op, x, y)] == op.table[alpha[&x] * m + alpha[&y]])
                        && ego.partial_ops.iter().all(|op| match power.partial(op, x, y) {
                            Some(z) => op.table[alpha[&x] * m + alpha[&y]] == Some(alpha[&z]),
                            None => true,
                        })
                })
            });
            constants && ops
        })
        .count()
}

#[test]
fn builtin_alter_egos_pass_validation() {
    let p = named("P");
    let ego = builtin_alter_ego("P", &p).unwrap();
    assert_eq!(ego.total_ops.len(), 2);
    assert_eq!(ego.constants, vec![2, 1]);
    let join = &ego.partial_ops[0];
    assert_eq!(join.table.iter().flatten().count(), 5);
    let q = named("Q");
    builtin_alter_ego("Q", &q).unwrap();
    assert_eq!(builtin_alter_ego("B2", &p).unwrap_err(), ProbeError::NoBuiltin("B2".into()));
}

#[test]
fn incompatible_operations_are_rejected() {
    let p = named("P");
    let mut ego = builtin_alter_ego("P", &p).unwrap();
    // constant a is not idempotent
    ego.constants.push(0);
    assert_eq!(ego.validate(&p).unwrap_err(), ProbeError::ConstantNotIdempotent(0));

    // first projection twisted at one cell
    let mut twisted: Vec<Element> = (0..9).map(|k| k / 3).collect();
    twisted[0] = 1;
    let err = AlterEgoSpec::new(
        &p,
        "bad",
        vec![TotalOp { name: "twisted".into(), table: twisted }],
        vec![],
        vec![],
    )
    .unwrap_err();
    assert_eq!(err, ProbeError::NotHomomorphism("twisted".into()));

    // a partial op defined only at (e, a): its domain is not product-closed
    let mut table = vec![None; 9];
    table[3] = Some(0);
    let err = AlterEgoSpec::new(&p, "bad", vec![], vec![PartialOp { name: "x".into(), table }], vec![])
        .unwrap_err();
    assert_eq!(err, ProbeError::DomainNotClosed("x".into()));
}

#[test]
fn p_and_q_interpolate_at_arities_one_and_two() {
    for name in ["P", "Q"] {
        let s = named(name);
        let ego = builtin_alter_ego(name, &s).unwrap();
        for arity in 1..=2 {
            let report = ic_probe(&s, &ego, arity).unwrap();
            assert!(report.all_extend, "{name} arity {arity}: {:?}", report.counterexample);
            assert!(report.exhaustive);
            assert!(report.substructures > 0 && report.morphisms >= report.substructures);
        }
    }
}

#[test]
fn empty_alter_ego_has_a_counterexample() {
    let p = named("P");
    let report = ic_probe(&p, &AlterEgoSpec::empty(&p), 1).unwrap();
    assert!(!report.all_extend);
    let c = report.counterexample.unwrap();
    let terms = term_functions(&p, 1);
    let power = Power::new(3, 1);
    assert!(!terms.iter().any(|t| c
        .substructure
        .iter()
        .zip(&c.morphism)
        .all(|(x, &v)| t[power.encode(x)] == v)));
}

#[test]
fn morphism_search_matches_brute_force() {
    for (name, arity) in [("P", 1), ("P", 2), ("Q", 1)] {
        let s = named(name);
        let ego = builtin_alter_ego(name, &s).unwrap();
        let checker = Checker {
            ego: &ego,
            power: Power::new(3, arity),
            terms: Vec::new(),
            substructures: 0,
            morphisms: 0,
            counterexample: None,
        };
        let size = checker.power.size;
        let mut closed = 0;
        for mask in 0u64..(1 << size) {
            let member: Vec<bool> = (0..size).map(|x| mask >> x & 1 == 1).collect();
            if checker.is_closed(&member) {
                closed += 1;
                let elems: Vec<usize> = (0..size).filter(|&x| member[x]).collect();
                assert_eq!(
                    checker.morphisms(&elems).len(),
                    brute_force_morphisms(&ego, &checker.power, &elems)
                );
                assert_eq!(checker.generated(&elems), elems);
            }
        }
        assert!(closed > 0);
    }
}

#[test]
fn term_clone_is_product_closed() {
    for name in ["P", "nil3", "L1"] {
        let s = named(name);
        for n in 1..=2 {
            let terms = term_functions(&s, n);
            let set: HashSet<&Vec<Element>> = terms.iter().collect();
            for t in &terms {
                for u in &terms {
                    let tu: Vec<Element> = t.iter().zip(u).map(|(&x, &y)| s.product(x, y)).collect();
                    assert!(set.contains(&tu), "{name}");
                }
            }
        }
    }
}

#[test]
fn limits_and_sampling() {
    let p = named("P");
    let ego = builtin_alter_ego("P", &p).unwrap();
    assert_eq!(ic_probe(&p, &ego, 3).unwrap_err(), ProbeError::ArityOutOfRange(3));
    assert_eq!(ic_probe(&p, &ego, 0).unwrap_err(), ProbeError::ArityOutOfRange(0));
    let big = named("M");
    assert_eq!(ic_probe(&big, &AlterEgoSpec::empty(&big), 1).unwrap_err(), ProbeError::TooLarge(5));
    let a = ic_probe_sampled(&p, &ego, 20).unwrap();
    let b = ic_probe_sampled(&p, &ego, 20).unwrap();
    assert!(!a.exhaustive);
    assert_eq!(a.arity, 3);
    assert_eq!((a.substructures, a.morphisms), (b.substructures, b.morphisms));
    assert!(a.all_extend, "{:?}", a.counterexample);
}
