//! The 2×2 product template `ac = e`, `ad = bc = bd = f` with `e ≠ f`.

use std::collections::VecDeque;

use serde::Serialize;

use super::WitnessError;
use crate::green::minimal_ideal;
use crate::group::FiniteGroup;
use crate::semigroup::{Element, FiniteSemigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TemplateMode {
    Raw,
    Commutator,
    NilpotentDerived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TemplateT {
    pub a: Element,
    pub b: Element,
    pub c: Element,
    pub d: Element,
    pub e: Element,
    pub f: Element,
    pub mode: TemplateMode,
}

impl TemplateT {
    /// The binary term the template is read through: the commutator in
    /// commutator mode, the product otherwise.
    pub fn term(&self, s: &FiniteSemigroup, x: Element, y: Element) -> Element {
        match self.mode {
            TemplateMode::Commutator => {
                let inv = |z: Element| {
                    let one = s.identity().expect("commutator mode needs a group");
                    s.elements().find(|&w| s.product(z, w) == one).expect("group inverse")
                };
                s.product(s.product(x, y), s.product(inv(x), inv(y)))
            }
            TemplateMode::Raw | TemplateMode::NilpotentDerived => s.product(x, y),
        }
    }

    /// All four template products hold and `e ≠ f`.
    pub fn verify(&self, s: &FiniteSemigroup) -> bool {
        let n = s.order();
        [self.a, self.b, self.c, self.d, self.e, self.f].iter().all(|&x| x < n)
            && self.e != self.f
            && self.term(s, self.a, self.c) == self.e
            && self.term(s, self.a, self.d) == self.f
            && self.term(s, self.b, self.c) == self.f
            && self.term(s, self.b, self.d) == self.f
    }
}

/// First interpretation of the template under the plain product.
///
/// When there is a zero, any `ac ≠ 0` gives one with `b = d = f = 0`; those
/// are tried first, `(a, c)` in lexicographic order. Otherwise `(a, c, b, d)`
/// are scanned lexicographically, which covers all 6-tuples since `e` and
/// `f` are determined.
pub fn find_template_raw(s: &FiniteSemigroup) -> Option<TemplateT> {
    let raw = |a, b, c, d| TemplateT {
        a,
        b,
        c,
        d,
        e: s.product(a, c),
        f: s.product(a, d),
        mode: TemplateMode::Raw,
    };
    if let Some(z) = s.zero() {
        for a in s.elements() {
            for c in s.elements() {
                if s.product(a, c) != z {
                    return Some(raw(a, z, c, z));
                }
            }
        }
    }
    for a in s.elements() {
        for c in s.elements() {
            let e = s.product(a, c);
            for b in s.elements() {
                for d in s.elements() {
                    let f = s.product(a, d);
                    if e != f && s.product(b, c) == f && s.product(b, d) == f {
                        return Some(raw(a, b, c, d));
                    }
                }
            }
        }
    }
    None
}

/// The template built from `a` and `c` through an idempotent `v` of the
/// minimal ideal of `⟨a, c⟩`: `b = a^(ω+1)v`, `d = vc^(ω+1)`, `f = avc`,
/// `e = ac`.
pub fn derive_template_nilpotent(
    m: &FiniteSemigroup,
    a: Element,
    c: Element,
) -> Result<TemplateT, WitnessError> {
    let u = word_into_minimal_ideal(m, a, c);
    let a_w = m.omega(a);
    let c_w = m.omega(c);
    let v = m.omega(m.product_of(&[a_w, u, c_w]));
    let a_w1 = m.omega_plus(a, 1);
    let c_w1 = m.omega_plus(c, 1);

    let chain = [
        m.product_of(&[a_w1, v, c_w1]),
        m.product_of(&[a, v, c_w1]),
        m.product_of(&[a_w1, v, c]),
        m.product_of(&[a, v, c]),
    ];
    if chain.iter().any(|&x| x != chain[3]) {
        return Err(WitnessError::TemplateCheck(format!(
            "a^(ω+1)vc^(ω+1), avc^(ω+1), a^(ω+1)vc, avc = {chain:?}"
        )));
    }
    let t = TemplateT {
        a,
        b: m.product(a_w1, v),
        c,
        d: m.product(v, c_w1),
        e: m.product(a, c),
        f: chain[3],
        mode: TemplateMode::NilpotentDerived,
    };
    if t.e == t.f {
        return Err(WitnessError::TemplateDegenerate(t.e));
    }
    if !t.verify(m) {
        return Err(WitnessError::TemplateCheck(format!("{t:?} fails a template product")));
    }
    Ok(t)
}

/// Shortest word over `{a, c}` (breadth first, `a` before `c`) whose value
/// lies in the minimal ideal of `⟨a, c⟩`.
fn word_into_minimal_ideal(m: &FiniteSemigroup, a: Element, c: Element) -> Element {
    let sub = m.restrict(&m.generate(&[a, c])).expect("generated set is closed");
    let kernel: Vec<Element> = minimal_ideal(&sub.semigroup)
        .members()
        .iter()
        .map(|&x| sub.elements[x])
        .collect();
    let mut seen = vec![false; m.order()];
    let mut queue = VecDeque::new();
    for g in [a, c] {
        if !seen[g] {
            seen[g] = true;
            queue.push_back(g);
        }
    }
    while let Some(w) = queue.pop_front() {
        if kernel.contains(&w) {
            return w;
        }
        for g in [a, c] {
            let next = m.product(w, g);
            if !seen[next] {
                seen[next] = true;
                queue.push_back(next);
            }
        }
    }
    unreachable!("the minimal ideal of ⟨a, c⟩ consists of words over a and c")
}

/// First `(a, c)` in scan order with `[a, c] ≠ 1`; `b = d = f = 1`.
pub fn find_template_commutator(g: &FiniteGroup) -> Option<TemplateT> {
    let one = g.identity();
    let n = g.order();
    (0..n)
        .flat_map(|a| (0..n).map(move |c| (a, c)))
        .find(|&(a, c)| g.commutator(a, c) != one)
        .map(|(a, c)| TemplateT {
            a,
            b: one,
            c,
            d: one,
            e: g.commutator(a, c),
            f: one,
            mode: TemplateMode::Commutator,
        })
}
