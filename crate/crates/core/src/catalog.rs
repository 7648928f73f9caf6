//! Named semigroups used throughout the tests and the command line.

use thiserror::Error;

use crate::group::FiniteGroup;
use crate::rees::{rees_construct, ReesPresentation, SandwichEntry};
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("no catalog entry named {0:?}; try `catalog --list`")]
    UnknownName(String),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub semigroup: FiniteSemigroup,
    pub provenance: String,
}

/// Fixed names; `C<n>` for any `n >= 1` is also accepted.
pub const NAMES: &[&str] = &[
    "trivial",
    "C1_21",
    "L1",
    "R1",
    "P",
    "Q",
    "M",
    "PxQ",
    "B2",
    "MC2",
    "C2",
    "C3",
    "C6",
    "S3",
    "D4",
    "Q8",
    "mono43",
    "nil3",
    "null2",
    "semilattice2",
    "semilattice3",
    "left_zero2",
    "right_zero2",
    "rect2x2",
];

pub fn catalog_names() -> Vec<String> {
    NAMES.iter().map(|s| s.to_string()).collect()
}

pub fn catalog(name: &str) -> Result<CatalogEntry, CatalogError> {
    let entry = |semigroup: FiniteSemigroup, provenance: &str| CatalogEntry {
        name: name.to_string(),
        semigroup,
        provenance: provenance.to_string(),
    };
    let built = match name {
        "trivial" => entry(table(&[&[0]], &["0"]), "one-element semigroup"),
        "C1_21" => entry(
            table(&[&[0, 1, 2], &[1, 2, 2], &[2, 2, 2]], &["1", "a", "0"]),
            "C¹₂,₁: identity adjoined to the 2-element monogenic nilpotent semigroup",
        ),
        "L1" => entry(
            table(&[&[0, 1, 2], &[1, 1, 1], &[2, 2, 2]], &["1", "a", "b"]),
            "L¹: identity adjoined to the 2-element left zero semigroup",
        ),
        "R1" => entry(
            table(&[&[0, 1, 2], &[1, 1, 2], &[2, 1, 2]], &["1", "a", "b"]),
            "R¹: identity adjoined to the 2-element right zero semigroup",
        ),
        "P" => entry(p_table(), "P on {a, e, 0}: nonzero products ea = a, ee = e"),
        "Q" => entry(q_table(), "Q on {b, f, 0}: nonzero products bf = b, ff = f"),
        "M" => entry(
            table(
                &[
                    &[4, 4, 4, 4, 4],
                    &[4, 4, 4, 1, 4],
                    &[0, 4, 2, 4, 4],
                    &[4, 4, 4, 3, 4],
                    &[4, 4, 4, 4, 4],
                ],
                &["a", "b", "e", "f", "0"],
            ),
            "M on {a, b, e, f, 0}: nonzero products ea = a, bf = b, ee = e, ff = f",
        ),
        "PxQ" => entry(p_table().direct_product(&q_table()), "direct product P × Q"),
        "B2" => entry(
            rees_catalog(cyclic(1), true, &[&[Some(0), None], &[None, Some(0)]]),
            "Brandt semigroup B₂ = M⁰[1; identity 2×2 sandwich]",
        ),
        "MC2" => entry(
            rees_catalog(cyclic(2), false, &[&[Some(0), Some(0)], &[Some(0), Some(1)]]),
            "M[C₂; ((1,1),(1,γ))], the smallest nonorthodox completely simple semigroup",
        ),
        "S3" => entry(symmetric3(), "symmetric group on 3 points"),
        "D4" => entry(dihedral4(), "dihedral group of order 8, r⁴ = s² = 1, srs = r⁻¹"),
        "Q8" => entry(quaternion8(), "quaternion group of order 8"),
        "mono43" => entry(
            FiniteSemigroup::from_fn(3, |x, y| (x + y + 1).min(2))
                .unwrap()
                .with_labels(["a", "a2", "a3"])
                .unwrap(),
            "monogenic semigroup ⟨a | a⁴ = a³⟩",
        ),
        "nil3" => entry(
            table(&[&[1, 2, 2], &[2, 2, 2], &[2, 2, 2]], &["a", "a2", "0"]),
            "monogenic nilpotent semigroup ⟨a | a³ = 0⟩",
        ),
        "null2" => entry(table(&[&[1, 1], &[1, 1]], &["a", "0"]), "2-element null semigroup"),
        "semilattice2" => entry(
            table(&[&[0, 0], &[0, 1]], &["0", "1"]),
            "2-element semilattice",
        ),
        "semilattice3" => entry(
            FiniteSemigroup::from_fn(3, usize::min)
                .unwrap()
                .with_labels(["0", "1", "2"])
                .unwrap(),
            "3-element chain semilattice",
        ),
        "left_zero2" => entry(
            table(&[&[0, 0], &[1, 1]], &["a", "b"]),
            "2-element left zero semigroup",
        ),
        "right_zero2" => entry(
            table(&[&[0, 1], &[0, 1]], &["a", "b"]),
            "2-element right zero semigroup",
        ),
        "rect2x2" => entry(
            FiniteSemigroup::from_fn(4, |x, y| (x / 2) * 2 + y % 2)
                .unwrap()
                .with_labels(["(1,1)", "(1,2)", "(2,1)", "(2,2)"])
                .unwrap(),
            "2×2 rectangular band",
        ),
        other => match other.strip_prefix('C').and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if n >= 1 => entry(cyclic(n).into_carrier(), "cyclic group"),
            _ => return Err(CatalogError::UnknownName(name.to_string())),
        },
    };
    Ok(built)
}

fn table(rows: &[&[usize]], labels: &[&str]) -> FiniteSemigroup {
    FiniteSemigroup::from_rows(rows.iter().map(|r| r.to_vec()).collect())
        .and_then(|s| s.with_labels(labels.iter().copied()))
        .expect("catalog tables are valid")
}

fn p_table() -> FiniteSemigroup {
    table(&[&[2, 2, 2], &[0, 1, 2], &[2, 2, 2]], &["a", "e", "0"])
}

fn q_table() -> FiniteSemigroup {
    table(&[&[2, 0, 2], &[2, 1, 2], &[2, 2, 2]], &["b", "f", "0"])
}

/// Additive group of integers mod `n`; generator `1` is labelled `g`.
pub fn cyclic(n: usize) -> FiniteGroup {
    let labels = (0..n).map(|k| match k {
        0 => "1".to_string(),
        1 => "g".to_string(),
        _ => format!("g{k}"),
    });
    let s = FiniteSemigroup::from_fn(n, |x, y| (x + y) % n)
        .and_then(|s| s.with_labels(labels))
        .expect("cyclic group table");
    FiniteGroup::from_semigroup(s).expect("cyclic group")
}

fn rees_catalog(group: FiniteGroup, with_zero: bool, rows: &[&[Option<usize>]]) -> FiniteSemigroup {
    let sandwich: Vec<Vec<SandwichEntry>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| e.map_or(SandwichEntry::Zero, SandwichEntry::Group))
                .collect()
        })
        .collect();
    let pres = ReesPresentation {
        group,
        i_size: sandwich[0].len(),
        lambda_size: sandwich.len(),
        sandwich,
        with_zero,
    };
    rees_construct(&pres).expect("catalog presentation is valid")
}

fn symmetric3() -> FiniteSemigroup {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    // (xy)(k) = x(y(k))
    FiniteSemigroup::from_fn(6, |x, y| {
        let (px, py) = (perms[x], perms[y]);
        index([px[py[0]], px[py[1]], px[py[2]]])
    })
    .and_then(|s| s.with_labels(perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2]))))
    .expect("S3 table")
}

fn dihedral4() -> FiniteSemigroup {
    // r^a s^b has index a + 4b
    FiniteSemigroup::from_fn(8, |x, y| {
        let (a, b, c, d) = (x % 4, x / 4, y % 4, y / 4);
        let rot = if b == 0 { (a + c) % 4 } else { (a + 4 - c) % 4 };
        rot + 4 * ((b + d) % 2)
    })
    .and_then(|s| s.with_labels(["1", "r", "r2", "r3", "s", "rs", "r2s", "r3s"]))
    .expect("D4 table")
}

fn quaternion8() -> FiniteSemigroup {
    // units 1, i, j, k; index = unit + 4 * (sign is negative)
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    FiniteSemigroup::from_fn(8, |x, y| {
        let (u, v) = (x % 4, y % 4);
        let (w, neg) = UNIT[u][v];
        let sign = (x / 4 + y / 4 + usize::from(neg)) % 2;
        w + 4 * sign
    })
    .and_then(|s| s.with_labels(["1", "i", "j", "k", "-1", "-i", "-j", "-k"]))
    .expect("Q8 table")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::is_isomorphic;

    #[test]
    fn every_listed_name_resolves() {
        for name in NAMES {
            let e = catalog(name).unwrap();
            assert_eq!(&e.name, name);
            assert!(e.semigroup.labels().is_some(), "{name} has labels");
        }
        assert!(matches!(catalog("nope"), Err(CatalogError::UnknownName(_))));
        assert!(matches!(catalog("C0"), Err(CatalogError::UnknownName(_))));
        assert_eq!(catalog("C5").unwrap().semigroup.order(), 5);
    }

    #[test]
    fn p_has_exactly_the_stated_nonzero_products() {
        let p = catalog("P").unwrap().semigroup;
        let (a, e, z) = (0, 1, 2);
        assert_eq!(p.product(e, a), a);
        assert_eq!(p.product(e, e), e);
        for (x, y) in [(a, a), (a, e), (a, z), (z, a), (z, e), (e, z), (z, z)] {
            assert_eq!(p.product(x, y), z);
        }
    }

    #[test]
    fn q_is_anti_isomorphic_to_p() {
        let p = catalog("P").unwrap().semigroup;
        let q = catalog("Q").unwrap().semigroup;
        assert!(!is_isomorphic(&p, &q));
        assert!(is_isomorphic(&p.transpose(), &q));
    }

    #[test]
    fn m_contains_p_and_q_as_listed() {
        let m = catalog("M").unwrap().semigroup;
        let n = |l| m.element_named(l).unwrap();
        let pairs = [("e", "a", "a"), ("b", "f", "b"), ("e", "e", "e"), ("f", "f", "f")];
        for x in m.elements() {
            for y in m.elements() {
                let expected = pairs
                    .iter()
                    .find(|(l, r, _)| n(l) == x && n(r) == y)
                    .map_or(n("0"), |(_, _, p)| n(p));
                assert_eq!(m.product(x, y), expected);
            }
        }
    }

    #[test]
    fn groups_are_groups_of_the_right_shape() {
        for (name, order, abelian) in [("S3", 6, false), ("D4", 8, false), ("Q8", 8, false), ("C6", 6, true)] {
            let g = FiniteGroup::from_semigroup(catalog(name).unwrap().semigroup).unwrap();
            assert_eq!(g.order(), order);
            assert_eq!(g.is_abelian(), abelian, "{name}");
        }
        let q8 = FiniteGroup::from_semigroup(catalog("Q8").unwrap().semigroup).unwrap();
        // Q8 has a unique involution, D4 has five
        let involutions = |g: &FiniteGroup| g.carrier().elements().filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions(&q8), 1);
        let d4 = FiniteGroup::from_semigroup(catalog("D4").unwrap().semigroup).unwrap();
        assert_eq!(involutions(&d4), 5);
    }
}
