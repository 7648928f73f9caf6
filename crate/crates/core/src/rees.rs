//! Rees matrix semigroups `M[G; P]` and `M⁰[G; P]`.
//!
//! Elements `(i, g, λ)` multiply as `(i, g·P[λ][j]·h, ρ)` when the sandwich
//! entry `P[λ][j]` is a group element, and to zero otherwise.

use serde::Serialize;
use thiserror::Error;

use crate::green::{self, GreenData};
use crate::group::{FiniteGroup, GroupError};
use crate::semigroup::{Element, FiniteSemigroup, SemigroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReesError {
    #[error("invalid sandwich matrix: {0}")]
    InvalidSandwich(String),
    #[error("group table is not a group: {0}")]
    NotAGroup(#[from] GroupError),
    #[error("semigroup is neither completely simple nor completely 0-simple")]
    NotCompletelySimple,
    #[error("semigroup is not regular")]
    NotRegular,
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SandwichEntry {
    Group(Element),
    Zero,
}

impl SandwichEntry {
    pub fn is_zero(self) -> bool {
        self == SandwichEntry::Zero
    }
}

#[derive(Clone, Debug)]
pub struct ReesPresentation {
    pub group: FiniteGroup,
    pub i_size: usize,
    pub lambda_size: usize,
    /// `lambda_size` rows of `i_size` entries.
    pub sandwich: Vec<Vec<SandwichEntry>>,
    pub with_zero: bool,
}

/// Position `(i, g, λ)` of a nonzero element, all zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReesCoordinate {
    pub i: usize,
    pub g: Element,
    pub lambda: usize,
}

impl ReesPresentation {
    pub fn validate(&self) -> Result<(), ReesError> {
        let invalid = |msg: String| Err(ReesError::InvalidSandwich(msg));
        if self.i_size == 0 || self.lambda_size == 0 {
            return invalid("index sets must be nonempty".into());
        }
        if self.sandwich.len() != self.lambda_size
            || self.sandwich.iter().any(|row| row.len() != self.i_size)
        {
            return invalid(format!(
                "expected {} rows of {} entries",
                self.lambda_size, self.i_size
            ));
        }
        for (l, row) in self.sandwich.iter().enumerate() {
            for (i, &entry) in row.iter().enumerate() {
                match entry {
                    SandwichEntry::Group(g) if g >= self.group.order() => {
                        return invalid(format!("entry ({l}, {i}) = {g} is not a group element"));
                    }
                    SandwichEntry::Zero if !self.with_zero => {
                        return invalid(format!("zero entry ({l}, {i}) without an adjoined zero"));
                    }
                    _ => {}
                }
            }
            if row.iter().all(|e| e.is_zero()) {
                return invalid(format!("row {l} is entirely zero"));
            }
        }
        for i in 0..self.i_size {
            if self.sandwich.iter().all(|row| row[i].is_zero()) {
                return invalid(format!("column {i} is entirely zero"));
            }
        }
        Ok(())
    }

    pub fn element(&self, c: ReesCoordinate) -> Element {
        (c.i * self.group.order() + c.g) * self.lambda_size + c.lambda
    }

    pub fn coordinate(&self, x: Element) -> Option<ReesCoordinate> {
        let (m, l) = (self.group.order(), self.lambda_size);
        (x < self.i_size * m * l).then(|| ReesCoordinate {
            i: x / (m * l),
            g: (x / l) % m,
            lambda: x % l,
        })
    }

    pub fn zero_element(&self) -> Option<Element> {
        self.with_zero
            .then(|| self.i_size * self.group.order() * self.lambda_size)
    }

    pub fn order(&self) -> usize {
        self.i_size * self.group.order() * self.lambda_size + usize::from(self.with_zero)
    }

    pub fn zero_entries(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (l, row) in self.sandwich.iter().enumerate() {
            for (i, e) in row.iter().enumerate() {
                if e.is_zero() {
                    out.push((l, i));
                }
            }
        }
        out
    }
}

pub fn rees_construct(pres: &ReesPresentation) -> Result<FiniteSemigroup, ReesError> {
    pres.validate()?;
    let n = pres.order();
    let zero = pres.zero_element();
    let g = &pres.group;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let value = match (pres.coordinate(x), pres.coordinate(y)) {
                (Some(a), Some(b)) => match pres.sandwich[a.lambda][b.i] {
                    SandwichEntry::Group(p) => pres.element(ReesCoordinate {
                        i: a.i,
                        g: g.product(g.product(a.g, p), b.g),
                        lambda: b.lambda,
                    }),
                    SandwichEntry::Zero => zero.unwrap(),
                },
                _ => zero.unwrap(),
            };
            table.push(value);
        }
    }
    let mut s = FiniteSemigroup::from_table_unchecked(n, table);
    let mut labels: Vec<String> = (0..n)
        .filter_map(|x| pres.coordinate(x))
        .map(|c| format!("({},{},{})", c.i + 1, g.carrier().label(c.g), c.lambda + 1))
        .collect();
    if pres.with_zero {
        labels.push("0".into());
    }
    s.set_labels(Some(labels));
    Ok(s)
}

/// A presentation plus the coordinates of every nonzero element of the input.
#[derive(Clone, Debug)]
pub struct ReesDecomposition {
    pub presentation: ReesPresentation,
    /// `None` only for the zero.
    pub coordinates: Vec<Option<ReesCoordinate>>,
}

pub fn rees_decompose(s: &FiniteSemigroup) -> Result<ReesPresentation, ReesError> {
    Ok(rees_decompose_with_coordinates(s)?.presentation)
}

/// Reads a Rees presentation off a completely (0-)simple semigroup.
///
/// `I` indexes R-classes and `Λ` indexes L-classes, both ordered by least
/// element. The lowest-index nonzero idempotent `e` anchors the group
/// `H_e`. Representatives `r_i ∈ R_i ∩ L_e` and `q_λ ∈ R_e ∩ L_λ` are
/// normalised so that `q_λ0·r_i = e` and `q_λ·r_i0 = e` whenever those
/// products are nonzero; then `x = r_i·g·q_λ` for a unique `g ∈ H_e` and
/// `P[λ][i] = q_λ·r_i`.
pub fn rees_decompose_with_coordinates(s: &FiniteSemigroup) -> Result<ReesDecomposition, ReesError> {
    let green = green::green_data(s);
    let (with_zero, zero) = if green.j_classes.len() == 1 {
        (false, None)
    } else if green::is_completely_zero_simple(s) {
        (true, s.zero())
    } else {
        return Err(ReesError::NotCompletelySimple);
    };
    let nonzero = |x: &Element| Some(*x) != zero;

    let r_ids = class_ids(&green.r_classes, zero);
    let l_ids = class_ids(&green.l_classes, zero);
    let i_of = |x: Element| r_ids[green.r_class_of[x]].unwrap();
    let l_of = |x: Element| l_ids[green.l_class_of[x]].unwrap();
    let i_size = r_ids.iter().flatten().count();
    let lambda_size = l_ids.iter().flatten().count();

    let e = s
        .idempotents()
        .into_iter()
        .find(nonzero)
        .ok_or(ReesError::NotCompletelySimple)?;
    let (i0, l0) = (i_of(e), l_of(e));
    let h_elements = green.h_classes[green.h_class_of[e]].clone();
    let in_h = |x: Element| green.h_class_of[x] == green.h_class_of[e];
    let local = |x: Element| h_elements.binary_search(&x).unwrap();
    let group = FiniteGroup::from_semigroup(s.restrict(&h_elements)?.semigroup)?;
    let parent_inverse = |x: Element| h_elements[group.inverse(local(x))];

    let cell = |i: usize, l: usize| {
        s.elements()
            .filter(nonzero)
            .find(|&x| i_of(x) == i && l_of(x) == l)
            .expect("every R-class meets every L-class")
    };

    let r: Vec<Element> = (0..i_size)
        .map(|i| {
            if i == i0 {
                return e;
            }
            let ri = cell(i, l0);
            let p = s.product(e, ri);
            if in_h(p) {
                s.product(ri, parent_inverse(p))
            } else {
                ri
            }
        })
        .collect();
    let q: Vec<Element> = (0..lambda_size)
        .map(|l| {
            if l == l0 {
                return e;
            }
            let ql = cell(i0, l);
            let p = s.product(ql, e);
            if in_h(p) {
                s.product(parent_inverse(p), ql)
            } else {
                ql
            }
        })
        .collect();

    let sandwich = (0..lambda_size)
        .map(|l| {
            (0..i_size)
                .map(|i| {
                    let p = s.product(q[l], r[i]);
                    if in_h(p) {
                        SandwichEntry::Group(local(p))
                    } else {
                        SandwichEntry::Zero
                    }
                })
                .collect()
        })
        .collect();

    let coordinates = s
        .elements()
        .map(|x| {
            if !nonzero(&x) {
                return None;
            }
            let (i, l) = (i_of(x), l_of(x));
            let g = (0..h_elements.len())
                .find(|&g| s.product(s.product(r[i], h_elements[g]), q[l]) == x)
                .expect("Green's lemma gives a unique group coordinate");
            Some(ReesCoordinate { i, g, lambda: l })
        })
        .collect();

    let presentation = ReesPresentation {
        group,
        i_size,
        lambda_size,
        sandwich,
        with_zero,
    };
    presentation.validate()?;
    Ok(ReesDecomposition {
        presentation,
        coordinates,
    })
}

/// Dense ids for the classes that are not `{0}`.
fn class_ids(classes: &[Vec<Element>], zero: Option<Element>) -> Vec<Option<usize>> {
    let mut next = 0;
    classes
        .iter()
        .map(|c| {
            if zero.is_some_and(|z| c == &[z]) {
                None
            } else {
                next += 1;
                Some(next - 1)
            }
        })
        .collect()
}

/// Two idempotents whose product is not idempotent, scanning in index order.
pub fn nonidempotent_product(s: &FiniteSemigroup) -> Option<(Element, Element)> {
    let idem = s.idempotents();
    idem.iter()
        .flat_map(|&e| idem.iter().map(move |&f| (e, f)))
        .find(|&(e, f)| !s.is_idempotent(s.product(e, f)))
}

/// Regular, and idempotents closed under multiplication.
pub fn is_orthodox(s: &FiniteSemigroup) -> Result<bool, ReesError> {
    if !green::is_regular(s) {
        return Err(ReesError::NotRegular);
    }
    Ok(nonidempotent_product(s).is_none())
}

/// `(xy)^p = x^p·y^p` for `p` the period; for completely simple semigroups
/// this is the same as being orthodox.
pub fn is_group_times_rectangular_band(s: &FiniteSemigroup) -> Result<bool, ReesError> {
    if !green::is_completely_simple(s) {
        return Err(ReesError::NotCompletelySimple);
    }
    let (_, p) = s.index_period();
    Ok(s.elements().all(|x| {
        s.elements()
            .all(|y| s.power(s.product(x, y), p) == s.product(s.power(x, p), s.power(y, p)))
    }))
}

/// Whether some principal factor of `s` is completely 0-simple with a zero
/// sandwich entry; returns the class and the entry `(λ, i)`.
pub fn zero_sandwich_factor(
    s: &FiniteSemigroup,
    green: &GreenData,
) -> Option<(usize, (usize, usize))> {
    (0..green.j_classes.len()).find_map(|c| {
        let pf = green::principal_factor(s, green, c);
        if pf.kind != green::FactorKind::CompletelyZeroSimple {
            return None;
        }
        let pres = rees_decompose(&pf.factor).ok()?;
        pres.zero_entries().first().map(|&entry| (c, entry))
    })
}

impl ReesPresentation {
    /// Text form: `REES`, `with_zero true|false`, the group order and table,
    /// `|I| |Λ|`, then `|Λ|` rows of `|I|` entries. Sandwich entries are
    /// `0` for zero and `k` for group element `k - 1`.
    pub fn to_text(&self) -> String {
        let mut out = String::from("REES\n");
        out.push_str(&format!("with_zero {}\n", self.with_zero));
        let mut bare = self.group.carrier().clone();
        bare.set_labels(None);
        out.push_str(&bare.to_text());
        out.push_str(&format!("{} {}\n", self.i_size, self.lambda_size));
        for row in &self.sandwich {
            let row: Vec<String> = row
                .iter()
                .map(|e| match e {
                    SandwichEntry::Zero => "0".to_string(),
                    SandwichEntry::Group(g) => (g + 1).to_string(),
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(input: &str) -> Result<Self, ReesError> {
        let err = |line: usize, reason: &str| ReesError::Parse {
            line,
            reason: reason.to_string(),
        };
        let mut lines: Vec<&str> = input.lines().map(str::trim).collect();
        while lines.last().is_some_and(|l| l.is_empty()) {
            lines.pop();
        }
        if lines.first() != Some(&"REES") {
            return Err(err(1, "expected REES header"));
        }
        let with_zero = match lines.get(1).copied() {
            Some("with_zero true") => true,
            Some("with_zero false") => false,
            _ => return Err(err(2, "expected `with_zero true` or `with_zero false`")),
        };
        let m: usize = lines
            .get(2)
            .and_then(|l| l.parse().ok())
            .ok_or_else(|| err(3, "expected the group order"))?;
        if lines.len() < 4 + m {
            return Err(err(lines.len() + 1, "group table is truncated"));
        }
        let group_text = lines[2..3 + m].join("\n");
        let group = FiniteGroup::from_semigroup(FiniteSemigroup::parse_text(&group_text)?)?;
        let sizes: Vec<usize> = lines[3 + m]
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| err(4 + m, "expected `|I| |Λ|`")))
            .collect::<Result<_, _>>()?;
        let [i_size, lambda_size] = sizes[..] else {
            return Err(err(4 + m, "expected `|I| |Λ|`"));
        };
        let body = &lines[4 + m..];
        if body.len() != lambda_size {
            return Err(err(
                4 + m + body.len().min(lambda_size) + 1,
                "wrong number of sandwich rows",
            ));
        }
        let sandwich = body
            .iter()
            .enumerate()
            .map(|(k, row)| {
                row.split_whitespace()
                    .map(|t| match t.parse::<usize>() {
                        Ok(0) => Ok(SandwichEntry::Zero),
                        Ok(g) => Ok(SandwichEntry::Group(g - 1)),
                        Err(_) => Err(err(5 + m + k, "bad sandwich entry")),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let pres = ReesPresentation {
            group,
            i_size,
            lambda_size,
            sandwich,
            with_zero,
        };
        pres.validate()?;
        Ok(pres)
    }
}
