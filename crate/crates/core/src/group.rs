//! Finite groups as Cayley tables: Sylow subgroups, commutators, lower
//! central series, and the maximal subgroups of a semigroup.

use serde::Serialize;
use thiserror::Error;

use crate::green::GreenData;
use crate::semigroup::{Element, FiniteSemigroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(Element),
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    carrier: FiniteSemigroup,
    identity: Element,
    inverse: Vec<Element>,
}

impl FiniteGroup {
    pub fn from_semigroup(carrier: FiniteSemigroup) -> Result<Self, GroupError> {
        let identity = carrier.identity().ok_or(GroupError::NoIdentity)?;
        let inverse = carrier
            .elements()
            .map(|x| {
                carrier
                    .elements()
                    .find(|&y| carrier.product(x, y) == identity && carrier.product(y, x) == identity)
                    .ok_or(GroupError::NoInverse(x))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteGroup {
            carrier,
            identity,
            inverse,
        })
    }

    pub fn carrier(&self) -> &FiniteSemigroup {
        &self.carrier
    }

    pub fn into_carrier(self) -> FiniteSemigroup {
        self.carrier
    }

    pub fn order(&self) -> usize {
        self.carrier.order()
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn inverse(&self, x: Element) -> Element {
        self.inverse[x]
    }

    pub fn product(&self, x: Element, y: Element) -> Element {
        self.carrier.product(x, y)
    }

    pub fn element_order(&self, x: Element) -> usize {
        self.carrier.monogenic_profile(x).period
    }

    /// `[x, y] = xyx⁻¹y⁻¹`, the convention under which `xy = [x, y]yx`.
    pub fn commutator(&self, x: Element, y: Element) -> Element {
        let g = &self.carrier;
        g.product(
            g.product(x, y),
            g.product(self.inverse[x], self.inverse[y]),
        )
    }

    /// First pair (in scan order) of elements of `subset` that fail to commute.
    pub fn noncommuting_pair(&self, subset: &[Element]) -> Option<(Element, Element)> {
        for (k, &x) in subset.iter().enumerate() {
            for &y in &subset[k + 1..] {
                if self.product(x, y) != self.product(y, x) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_abelian(&self) -> bool {
        self.carrier.is_commutative()
    }

    /// Subgroup generated by `generators`, sorted; `{1}` for no generators.
    pub fn subgroup(&self, generators: &[Element]) -> Vec<Element> {
        let mut gens = generators.to_vec();
        gens.push(self.identity);
        self.carrier.generate(&gens)
    }

    /// One Sylow `p`-subgroup for each prime `p` dividing the order.
    ///
    /// Grows a `p`-subgroup one element at a time, taking the first element
    /// that keeps the generated subgroup a `p`-group. Every `p`-subgroup sits
    /// inside a Sylow subgroup, so a growth step is always available until
    /// the full `p`-power is reached.
    pub fn sylow_report(&self) -> SylowReport {
        let n = self.order();
        let subgroups = prime_power_factors(n)
            .into_iter()
            .map(|(p, p_power)| {
                let mut h = vec![self.identity];
                while h.len() < p_power {
                    h = self
                        .carrier
                        .elements()
                        .filter(|x| h.binary_search(x).is_err())
                        .filter(|&x| is_power_of(self.element_order(x), p))
                        .map(|x| {
                            let mut gens = h.clone();
                            gens.push(x);
                            self.subgroup(&gens)
                        })
                        .find(|grown| is_power_of(grown.len(), p))
                        .expect("a proper p-subgroup extends inside a Sylow subgroup");
                }
                let abelian = self.noncommuting_pair(&h).is_none();
                SylowSubgroup {
                    prime: p,
                    p_power,
                    elements: h,
                    abelian,
                }
            })
            .collect();
        SylowReport {
            order: n,
            subgroups,
        }
    }

    /// Length of the lower central series, or `None` if it stalls above 1.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let mut term: Vec<Element> = self.carrier.elements().collect();
        let mut class = 0;
        while term.len() > 1 {
            let commutators: Vec<Element> = term
                .iter()
                .flat_map(|&x| self.carrier.elements().map(move |y| (x, y)))
                .map(|(x, y)| self.commutator(x, y))
                .collect();
            let next = self.subgroup(&commutators);
            if next == term {
                return None;
            }
            term = next;
            class += 1;
        }
        Some(class)
    }
}

pub fn commutator(g: &FiniteGroup, x: Element, y: Element) -> Element {
    g.commutator(x, y)
}

pub fn nilpotency_class(g: &FiniteGroup) -> Option<usize> {
    g.nilpotency_class()
}

pub fn sylow_report(g: &FiniteGroup) -> SylowReport {
    g.sylow_report()
}

#[derive(Clone, Debug, Serialize)]
pub struct SylowSubgroup {
    pub prime: usize,
    pub p_power: usize,
    pub elements: Vec<Element>,
    pub abelian: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SylowReport {
    pub order: usize,
    pub subgroups: Vec<SylowSubgroup>,
}

impl SylowReport {
    pub fn for_prime(&self, p: usize) -> Option<&SylowSubgroup> {
        self.subgroups.iter().find(|s| s.prime == p)
    }

    pub fn first_nonabelian(&self) -> Option<&SylowSubgroup> {
        self.subgroups.iter().find(|s| !s.abelian)
    }
}

/// `(p, p^k)` for each prime power exactly dividing `n`, ascending in `p`.
pub fn prime_power_factors(mut n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut q = 1;
            while n.is_multiple_of(p) {
                n /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// The group H-class of an idempotent, in parent and local numbering.
#[derive(Clone, Debug)]
pub struct MaximalSubgroup {
    pub idempotent: Element,
    pub elements: Vec<Element>,
    pub group: FiniteGroup,
}

impl MaximalSubgroup {
    pub fn to_parent(&self, local: Element) -> Element {
        self.elements[local]
    }

    pub fn to_local(&self, parent: Element) -> Option<Element> {
        self.elements.binary_search(&parent).ok()
    }
}

/// One group per idempotent: the H-class it lives in.
pub fn maximal_subgroups(s: &FiniteSemigroup, green: &GreenData) -> Vec<MaximalSubgroup> {
    s.idempotents()
        .into_iter()
        .map(|e| {
            let elements = green.h_classes[green.h_class_of[e]].clone();
            let restriction = s.restrict(&elements).expect("group H-classes are subsemigroups");
            let group = FiniteGroup::from_semigroup(restriction.semigroup)
                .expect("group H-classes are groups");
            MaximalSubgroup {
                idempotent: e,
                elements,
                group,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests;
