use super::*;
use crate::catalog::catalog;
use crate::green::green_data;

fn group(name: &str) -> FiniteGroup {
    FiniteGroup::from_semigroup(catalog(name).unwrap().semigroup).unwrap()
}

fn el(g: &FiniteGroup, label: &str) -> Element {
    g.carrier().element_named(label).unwrap()
}

fn closed(g: &FiniteGroup, set: &[Element]) -> bool {
    set.iter().all(|&x| {
        set.contains(&g.inverse(x)) && set.iter().all(|&y| set.contains(&g.product(x, y)))
    })
}

#[test]
fn from_semigroup_rejects_non_groups() {
    let s = catalog("L1").unwrap().semigroup;
    assert_eq!(FiniteGroup::from_semigroup(s).unwrap_err(), GroupError::NoInverse(1));
    let s = catalog("left_zero2").unwrap().semigroup;
    assert_eq!(FiniteGroup::from_semigroup(s).unwrap_err(), GroupError::NoIdentity);
}

#[test]
fn sylow_subgroups() {
    let s3 = group("S3").sylow_report();
    assert_eq!(s3.subgroups.len(), 2);
    assert_eq!((s3.for_prime(2).unwrap().p_power, s3.for_prime(3).unwrap().p_power), (2, 3));
    assert!(s3.subgroups.iter().all(|p| p.abelian));

    let d4 = group("D4").sylow_report();
    let two = d4.for_prime(2).unwrap();
    assert_eq!(two.elements.len(), 8);
    assert!(!two.abelian);
    assert_eq!(d4.first_nonabelian().unwrap().prime, 2);

    let c6 = group("C6").sylow_report();
    assert_eq!(c6.for_prime(2).unwrap().elements, vec![0, 3]);
    assert_eq!(c6.for_prime(3).unwrap().elements, vec![0, 2, 4]);
    assert!(c6.first_nonabelian().is_none());

    let q8 = group("Q8").sylow_report();
    assert!(!q8.for_prime(2).unwrap().abelian);
}

#[test]
fn sylow_subgroups_are_subgroups_of_the_right_order() {
    for name in ["S3", "D4", "Q8", "C6", "C5", "C1"] {
        let g = group(name);
        let report = g.sylow_report();
        let product: usize = report.subgroups.iter().map(|p| p.p_power).product();
        assert_eq!(product, g.order());
        for p in &report.subgroups {
            assert_eq!(p.elements.len(), p.p_power);
            assert!(closed(&g, &p.elements), "{name}");
        }
    }
    // S3 x C2 has Sylow-2 of order 4 that is not cyclic
    let s = catalog("S3").unwrap().semigroup.direct_product(&catalog("C2").unwrap().semigroup);
    let g = FiniteGroup::from_semigroup(s).unwrap();
    let two = g.sylow_report().for_prime(2).unwrap().clone();
    assert_eq!(two.elements.len(), 4);
    assert!(closed(&g, &two.elements));
}

#[test]
fn commutators() {
    let c6 = group("C6");
    for x in 0..6 {
        for y in 0..6 {
            assert_eq!(commutator(&c6, x, y), c6.identity());
        }
    }
    let d4 = group("D4");
    assert_eq!(d4.commutator(el(&d4, "r"), el(&d4, "s")), el(&d4, "r2"));
    for x in 0..8 {
        assert_eq!(d4.commutator(x, x), d4.identity());
    }
}

#[test]
fn nilpotency_classes() {
    assert_eq!(nilpotency_class(&group("C6")), Some(1));
    assert_eq!(group("D4").nilpotency_class(), Some(2));
    assert_eq!(group("Q8").nilpotency_class(), Some(2));
    assert_eq!(group("S3").nilpotency_class(), None);
    assert_eq!(group("C1").nilpotency_class(), Some(0));
}

#[test]
fn maximal_subgroups_of_named_semigroups() {
    let c = catalog("C1_21").unwrap().semigroup;
    let subs = maximal_subgroups(&c, &green_data(&c));
    assert_eq!(subs.len(), 2);
    assert!(subs.iter().all(|m| m.group.order() == 1));

    let d4 = catalog("D4").unwrap().semigroup;
    let subs = maximal_subgroups(&d4, &green_data(&d4));
    assert_eq!(subs.len(), 1);
    assert_eq!(subs[0].group.order(), 8);

    let mc2 = catalog("MC2").unwrap().semigroup;
    let subs = maximal_subgroups(&mc2, &green_data(&mc2));
    assert_eq!(subs.len(), 4);
    for m in &subs {
        assert_eq!(m.group.order(), 2);
        assert_eq!(m.to_parent(m.group.identity()), m.idempotent);
        assert_eq!(m.to_local(m.idempotent), Some(m.group.identity()));
    }
}

#[test]
fn prime_factorisation() {
    assert_eq!(prime_power_factors(1), vec![]);
    assert_eq!(prime_power_factors(12), vec![(2, 4), (3, 3)]);
    assert_eq!(prime_power_factors(13), vec![(13, 13)]);
    assert!(is_prime(13) && !is_prime(1) && !is_prime(9));
}
