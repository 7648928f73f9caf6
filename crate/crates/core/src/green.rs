//! Divisibility, Green's relations and principal factors.
//!
//! Everything is computed from principal ideals by direct scans, which is
//! quadratic or cubic in the order and entirely adequate for the table sizes
//! this crate deals with.

use serde::Serialize;

use crate::semigroup::{Element, FiniteSemigroup, IdealSet};

/// `b ∈ S¹aS¹`, i.e. `b = cad` with `c`, `d` possibly empty.
pub fn divides(s: &FiniteSemigroup, a: Element, b: Element) -> bool {
    principal_two_sided(s, a)[b]
}

fn principal_left(s: &FiniteSemigroup, a: Element) -> Vec<bool> {
    let mut set = vec![false; s.order()];
    set[a] = true;
    for x in s.elements() {
        set[s.product(x, a)] = true;
    }
    set
}

fn principal_right(s: &FiniteSemigroup, a: Element) -> Vec<bool> {
    let mut set = vec![false; s.order()];
    set[a] = true;
    for x in s.elements() {
        set[s.product(a, x)] = true;
    }
    set
}

fn principal_two_sided(s: &FiniteSemigroup, a: Element) -> Vec<bool> {
    let left = principal_left(s, a);
    let mut set = left.clone();
    for l in s.elements().filter(|&l| left[l]) {
        for x in s.elements() {
            set[s.product(l, x)] = true;
        }
    }
    set
}

/// Partition from a family of principal ideals: `a ~ b` iff each lies in
/// the other's ideal. Classes are numbered by their least element.
fn partition(ideals: &[Vec<bool>]) -> (Vec<Vec<Element>>, Vec<usize>) {
    let n = ideals.len();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<Element>> = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let members: Vec<Element> = (a..n)
            .filter(|&b| ideals[a][b] && ideals[b][a])
            .collect();
        for &b in &members {
            class_of[b] = id;
        }
        classes.push(members);
    }
    (classes, class_of)
}

#[derive(Clone, Debug, Serialize)]
pub struct GreenData {
    pub j_classes: Vec<Vec<Element>>,
    pub l_classes: Vec<Vec<Element>>,
    pub r_classes: Vec<Vec<Element>>,
    pub h_classes: Vec<Vec<Element>>,
    #[serde(skip)]
    pub j_class_of: Vec<usize>,
    #[serde(skip)]
    pub l_class_of: Vec<usize>,
    #[serde(skip)]
    pub r_class_of: Vec<usize>,
    #[serde(skip)]
    pub h_class_of: Vec<usize>,
    /// `j_order[c][d]`: class `c` lies at or below class `d` (every element
    /// of `d` divides every element of `c`). Stored transitively closed.
    #[serde(skip)]
    pub j_order: Vec<Vec<bool>>,
}

impl GreenData {
    pub fn below(&self, c: usize, d: usize) -> bool {
        self.j_order[c][d]
    }

    pub fn j_class_containing(&self, x: Element) -> &[Element] {
        &self.j_classes[self.j_class_of[x]]
    }
}

pub fn green_data(s: &FiniteSemigroup) -> GreenData {
    let left: Vec<Vec<bool>> = s.elements().map(|a| principal_left(s, a)).collect();
    let right: Vec<Vec<bool>> = s.elements().map(|a| principal_right(s, a)).collect();
    let two: Vec<Vec<bool>> = s.elements().map(|a| principal_two_sided(s, a)).collect();

    let (j_classes, j_class_of) = partition(&two);
    let (l_classes, l_class_of) = partition(&left);
    let (r_classes, r_class_of) = partition(&right);

    let mut h_class_of = vec![usize::MAX; s.order()];
    let mut h_classes: Vec<Vec<Element>> = Vec::new();
    for a in s.elements() {
        if h_class_of[a] != usize::MAX {
            continue;
        }
        let id = h_classes.len();
        let members: Vec<Element> = (a..s.order())
            .filter(|&b| l_class_of[a] == l_class_of[b] && r_class_of[a] == r_class_of[b])
            .collect();
        for &b in &members {
            h_class_of[b] = id;
        }
        h_classes.push(members);
    }

    let reps: Vec<Element> = j_classes.iter().map(|c| c[0]).collect();
    let j_order = reps
        .iter()
        .map(|&c| reps.iter().map(|&d| two[d][c]).collect())
        .collect();

    GreenData {
        j_classes,
        l_classes,
        r_classes,
        h_classes,
        j_class_of,
        l_class_of,
        r_class_of,
        h_class_of,
        j_order,
    }
}

/// The least ideal: the J-class lying below every other.
pub fn minimal_ideal(s: &FiniteSemigroup) -> IdealSet {
    let green = green_data(s);
    minimal_ideal_of(s, &green)
}

pub fn minimal_ideal_of(s: &FiniteSemigroup, green: &GreenData) -> IdealSet {
    let classes = green.j_classes.len();
    let bottom = (0..classes)
        .find(|&c| (0..classes).all(|d| green.below(c, d)))
        .expect("a finite semigroup has a least J-class");
    IdealSet::new(s, &green.j_classes[bottom]).expect("least J-class is an ideal")
}

/// Every `x` has some `t` with `xtx = x`.
pub fn is_regular(s: &FiniteSemigroup) -> bool {
    s.elements()
        .all(|x| s.elements().any(|t| s.product(s.product(x, t), x) == x))
}

/// Every element lies in a subgroup, tested as `x^(ω+1) = x`.
pub fn is_completely_regular(s: &FiniteSemigroup) -> bool {
    s.elements().all(|x| s.omega_plus(x, 1) == x)
}

/// The identity `x^(p+1) = x` for `p` the period of the semigroup.
pub fn satisfies_period_identity(s: &FiniteSemigroup) -> bool {
    let (_, p) = s.index_period();
    s.elements().all(|x| s.power(x, p + 1) == x)
}

/// A single J-class.
pub fn is_completely_simple(s: &FiniteSemigroup) -> bool {
    green_data(s).j_classes.len() == 1
}

/// Zero, exactly the J-classes `{0}` and the rest, `S² ≠ 0`, and a nonzero
/// idempotent.
pub fn is_completely_zero_simple(s: &FiniteSemigroup) -> bool {
    let Some(zero) = s.zero() else {
        return false;
    };
    if s.order() < 2 {
        return false;
    }
    let green = green_data(s);
    green.j_classes.len() == 2
        && s.products_of_length(2) != [zero]
        && s.idempotents().iter().any(|&e| e != zero)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FactorKind {
    CompletelySimple,
    CompletelyZeroSimple,
    Null,
}

#[derive(Clone, Debug)]
pub struct PrincipalFactor {
    pub kind: FactorKind,
    pub factor: FiniteSemigroup,
    pub source_class: usize,
    /// `(parent element, factor element)` for each member of the J-class.
    pub class_images: Vec<(Element, Element)>,
    /// Factor element that stands for the collapsed ideal, if any.
    pub zero: Option<Element>,
}

/// Builds `⟨J⟩`, and quotients by its part outside `J` when that is nonempty.
pub fn principal_factor(s: &FiniteSemigroup, green: &GreenData, class: usize) -> PrincipalFactor {
    let members = &green.j_classes[class];
    let generated = s.generate(members);
    let restriction = s.restrict(&generated).expect("generated set is closed");
    let in_class = |x: Element| green.j_class_of[x] == class;
    let outside: Vec<Element> = generated
        .iter()
        .enumerate()
        .filter(|&(_, &x)| !in_class(x))
        .map(|(k, _)| k)
        .collect();
    let has_idempotent = members.iter().any(|&x| s.is_idempotent(x));

    if outside.is_empty() {
        let class_images = members
            .iter()
            .map(|&x| (x, restriction.local(x).unwrap()))
            .collect();
        return PrincipalFactor {
            kind: FactorKind::CompletelySimple,
            factor: restriction.semigroup,
            source_class: class,
            class_images,
            zero: None,
        };
    }

    let quotient = restriction
        .semigroup
        .rees_quotient(&outside)
        .expect("the part of ⟨J⟩ outside J is an ideal");
    let class_images = members
        .iter()
        .map(|&x| (x, quotient.map[restriction.local(x).unwrap()]))
        .collect();
    PrincipalFactor {
        kind: if has_idempotent {
            FactorKind::CompletelyZeroSimple
        } else {
            FactorKind::Null
        },
        factor: quotient.semigroup,
        source_class: class,
        class_images,
        zero: Some(quotient.zero),
    }
}

pub fn principal_factors(s: &FiniteSemigroup) -> Vec<PrincipalFactor> {
    let green = green_data(s);
    (0..green.j_classes.len())
        .map(|c| principal_factor(s, &green, c))
        .collect()
}
