//! Finite semigroups given by their Cayley tables.
//!
//! Elements are dense indices `0..n`. Labels are carried along for display
//! only and never take part in equality or arithmetic.

mod embed;
mod text;

pub use embed::{find_embedding, is_isomorphic};

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Index of an element in a Cayley table.
pub type Element = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("a semigroup needs at least one element")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    RaggedRow { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) is outside 0..{order}")]
    OutOfRangeEntry {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: Element, y: Element, z: Element },
    #[error("{found} labels given for a semigroup of order {order}")]
    LabelCount { found: usize, order: usize },
    #[error("not an ideal: {member} is in the set but {product} = {member}*{multiplier} or {multiplier}*{member} is not")]
    NotAnIdeal {
        member: Element,
        multiplier: Element,
        product: Element,
    },
    #[error("ideal is empty")]
    EmptyIdeal,
    #[error("{element} is not an element of a semigroup of order {order}")]
    NoSuchElement { element: Element, order: usize },
    #[error("not closed under multiplication: {x}*{y} = {product} leaves the set")]
    NotClosed {
        x: Element,
        y: Element,
        product: Element,
    },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// A finite semigroup stored as a row-major Cayley table.
#[derive(Clone)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<Element>,
    labels: Option<Vec<String>>,
}

impl PartialEq for FiniteSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteSemigroup {}

impl std::hash::Hash for FiniteSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.table.hash(state);
    }
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FiniteSemigroup(order {})", self.order)?;
        for x in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|y| self.label(self.product(x, y)))
                .collect();
            writeln!(f, "  {:>6} | {}", self.label(x), row.join(" "))?;
        }
        Ok(())
    }
}

/// Orbit data of a single element: `x^index = x^(index + period)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MonogenicProfile {
    pub element: Element,
    pub index: usize,
    pub period: usize,
    /// The unique idempotent in the cycle of the orbit.
    pub omega_power: Element,
}

/// A two-sided ideal, members sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealSet {
    members: Vec<Element>,
}

impl IdealSet {
    pub fn new(s: &FiniteSemigroup, members: &[Element]) -> Result<Self, SemigroupError> {
        let members = s.normalise_set(members)?;
        if members.is_empty() {
            return Err(SemigroupError::EmptyIdeal);
        }
        s.check_ideal(&members)?;
        Ok(IdealSet { members })
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn contains(&self, x: Element) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// A subsemigroup renumbered densely, remembering where each element came from.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub semigroup: FiniteSemigroup,
    /// `elements[k]` is the element of the parent that became `k`.
    pub elements: Vec<Element>,
}

impl Restriction {
    /// Position of a parent element inside the restriction.
    pub fn local(&self, parent: Element) -> Option<Element> {
        self.elements.binary_search(&parent).ok()
    }
}

/// Rees quotient together with the renumbering of the parent's elements.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub semigroup: FiniteSemigroup,
    /// `map[x]` is the image of parent element `x`; ideal members go to `zero`.
    pub map: Vec<Element>,
    pub zero: Element,
}

impl FiniteSemigroup {
    /// Validates a raw table: square, in range, associative.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, SemigroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(SemigroupError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, entries) in rows.into_iter().enumerate() {
            if entries.len() != n {
                return Err(SemigroupError::RaggedRow {
                    row,
                    len: entries.len(),
                    expected: n,
                });
            }
            for (col, value) in entries.into_iter().enumerate() {
                if value >= n {
                    return Err(SemigroupError::OutOfRangeEntry {
                        row,
                        col,
                        value,
                        order: n,
                    });
                }
                table.push(value);
            }
        }
        let s = FiniteSemigroup {
            order: n,
            table,
            labels: None,
        };
        s.check_associative()?;
        Ok(s)
    }

    /// Builds and validates the table `x*y = f(x, y)`.
    pub fn from_fn(n: usize, f: impl Fn(Element, Element) -> Element) -> Result<Self, SemigroupError> {
        let rows = (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect();
        Self::from_rows(rows)
    }

    /// Table known to be associative by construction.
    pub(crate) fn from_table_unchecked(order: usize, table: Vec<Element>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        FiniteSemigroup {
            order,
            table,
            labels: None,
        }
    }

    pub fn with_labels<S: Into<String>>(
        mut self,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Self, SemigroupError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.order {
            return Err(SemigroupError::LabelCount {
                found: labels.len(),
                order: self.order,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn set_labels(&mut self, labels: Option<Vec<String>>) {
        debug_assert!(labels.as_ref().is_none_or(|l| l.len() == self.order));
        self.labels = labels;
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    pub fn table(&self) -> &[Element] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label, or its index.
    pub fn label(&self, x: Element) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Looks an element up by label.
    pub fn element_named(&self, name: &str) -> Option<Element> {
        self.labels.as_ref()?.iter().position(|l| l == name)
    }

    #[inline]
    pub fn product(&self, x: Element, y: Element) -> Element {
        self.table[x * self.order + y]
    }

    /// Left-to-right product of a nonempty word.
    pub fn product_of(&self, word: &[Element]) -> Element {
        let (&first, rest) = word.split_first().expect("empty word");
        rest.iter().fold(first, |acc, &y| self.product(acc, y))
    }

    fn check_associative(&self) -> Result<(), SemigroupError> {
        for x in 0..self.order {
            for y in 0..self.order {
                let xy = self.product(x, y);
                for z in 0..self.order {
                    if self.product(xy, z) != self.product(x, self.product(y, z)) {
                        return Err(SemigroupError::NotAssociative { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    fn normalise_set(&self, set: &[Element]) -> Result<Vec<Element>, SemigroupError> {
        let mut v = set.to_vec();
        v.sort_unstable();
        v.dedup();
        if let Some(&bad) = v.iter().find(|&&x| x >= self.order) {
            return Err(SemigroupError::NoSuchElement {
                element: bad,
                order: self.order,
            });
        }
        Ok(v)
    }

    fn membership(&self, set: &[Element]) -> Vec<bool> {
        let mut mask = vec![false; self.order];
        for &x in set {
            mask[x] = true;
        }
        mask
    }

    fn check_ideal(&self, sorted: &[Element]) -> Result<(), SemigroupError> {
        let inside = self.membership(sorted);
        for &member in sorted {
            for multiplier in self.elements() {
                for product in [
                    self.product(member, multiplier),
                    self.product(multiplier, member),
                ] {
                    if !inside[product] {
                        return Err(SemigroupError::NotAnIdeal {
                            member,
                            multiplier,
                            product,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_ideal(&self, set: &[Element]) -> bool {
        self.normalise_set(set)
            .map(|v| self.check_ideal(&v).is_ok())
            .unwrap_or(false)
    }

    /// `x^k` for `k >= 1`, by binary powering.
    pub fn power(&self, x: Element, k: usize) -> Element {
        assert!(k >= 1, "powers start at 1");
        let mut result: Option<Element> = None;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = Some(match result {
                    None => base,
                    Some(r) => self.product(r, base),
                });
            }
            k >>= 1;
            if k > 0 {
                base = self.product(base, base);
            }
        }
        result.unwrap()
    }

    /// Walks `x, x^2, x^3, ...` until the first repeat.
    pub fn monogenic_profile(&self, x: Element) -> MonogenicProfile {
        let mut seen_at: Vec<usize> = vec![0; self.order];
        let mut powers = vec![x]; // powers[k - 1] = x^k
        let mut current = x;
        seen_at[x] = 1;
        loop {
            current = self.product(current, x);
            let k = powers.len() + 1;
            if seen_at[current] != 0 {
                let index = seen_at[current];
                let period = k - index;
                let d = index.div_ceil(period) * period;
                return MonogenicProfile {
                    element: x,
                    index,
                    period,
                    omega_power: powers[d - 1],
                };
            }
            seen_at[current] = k;
            powers.push(current);
        }
    }

    /// The idempotent power `x^ω`.
    pub fn omega(&self, x: Element) -> Element {
        self.monogenic_profile(x).omega_power
    }

    /// `x^(ω+i)` for any integer `i`: `x^ω * x^i'` with `i' > 0`, `i' ≡ i` mod the period.
    pub fn omega_plus(&self, x: Element, i: i64) -> Element {
        let profile = self.monogenic_profile(x);
        let p = profile.period as i64;
        let mut r = i.rem_euclid(p);
        if r == 0 {
            r = p;
        }
        self.product(profile.omega_power, self.power(x, r as usize))
    }

    /// Least `(index, period)` with `x^index = x^(index+period)` identically.
    pub fn index_period(&self) -> (usize, usize) {
        self.elements()
            .map(|x| self.monogenic_profile(x))
            .fold((1, 1), |(i, p), prof| (i.max(prof.index), lcm(p, prof.period)))
    }

    pub fn is_idempotent(&self, x: Element) -> bool {
        self.product(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<Element> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    pub fn zero(&self) -> Option<Element> {
        self.elements().find(|&z| {
            self.elements()
                .all(|x| self.product(z, x) == z && self.product(x, z) == z)
        })
    }

    pub fn identity(&self) -> Option<Element> {
        self.elements().find(|&u| {
            self.elements()
                .all(|x| self.product(u, x) == x && self.product(x, u) == x)
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|x| (0..x).all(|y| self.product(x, y) == self.product(y, x)))
    }

    /// Least product-closed set containing `generators`, sorted ascending.
    ///
    /// Every element of the generated subsemigroup is a word over the
    /// generators, so closing under right multiplication by generators
    /// suffices.
    pub fn generate(&self, generators: &[Element]) -> Vec<Element> {
        let mut inside = vec![false; self.order];
        let mut queue = VecDeque::new();
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        for &g in &gens {
            inside[g] = true;
            queue.push_back(g);
        }
        while let Some(t) = queue.pop_front() {
            for &g in &gens {
                let tg = self.product(t, g);
                if !inside[tg] {
                    inside[tg] = true;
                    queue.push_back(tg);
                }
            }
        }
        self.elements().filter(|&x| inside[x]).collect()
    }

    /// Renumbers a product-closed subset as a semigroup in its own right.
    pub fn restrict(&self, elements: &[Element]) -> Result<Restriction, SemigroupError> {
        let elements = self.normalise_set(elements)?;
        if elements.is_empty() {
            return Err(SemigroupError::Empty);
        }
        let mut local = vec![usize::MAX; self.order];
        for (k, &x) in elements.iter().enumerate() {
            local[x] = k;
        }
        let m = elements.len();
        let mut table = Vec::with_capacity(m * m);
        for &x in &elements {
            for &y in &elements {
                let product = self.product(x, y);
                if local[product] == usize::MAX {
                    return Err(SemigroupError::NotClosed { x, y, product });
                }
                table.push(local[product]);
            }
        }
        let mut semigroup = Self::from_table_unchecked(m, table);
        if let Some(labels) = &self.labels {
            semigroup.labels = Some(elements.iter().map(|&x| labels[x].clone()).collect());
        }
        Ok(Restriction {
            semigroup,
            elements,
        })
    }

    /// Componentwise product; the pair `(x, y)` has index `x * |t| + y`.
    pub fn direct_product(&self, t: &FiniteSemigroup) -> FiniteSemigroup {
        let (n, m) = (self.order, t.order);
        let order = n * m;
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            let (x1, x2) = (x / m, x % m);
            for y in 0..order {
                let (y1, y2) = (y / m, y % m);
                table.push(self.product(x1, y1) * m + t.product(x2, y2));
            }
        }
        let mut product = Self::from_table_unchecked(order, table);
        if self.labels.is_some() || t.labels.is_some() {
            product.labels = Some(
                (0..order)
                    .map(|x| format!("({},{})", self.label(x / m), t.label(x % m)))
                    .collect(),
            );
        }
        product
    }

    /// Collapses an ideal to a single zero, which is numbered last.
    pub fn rees_quotient(&self, ideal: &[Element]) -> Result<Quotient, SemigroupError> {
        let ideal = self.normalise_set(ideal)?;
        if ideal.is_empty() {
            return Err(SemigroupError::EmptyIdeal);
        }
        self.check_ideal(&ideal)?;
        let inside = self.membership(&ideal);
        let survivors: Vec<Element> = self.elements().filter(|&x| !inside[x]).collect();
        let zero = survivors.len();
        let mut map = vec![zero; self.order];
        for (k, &x) in survivors.iter().enumerate() {
            map[x] = k;
        }
        let order = zero + 1;
        let mut table = vec![zero; order * order];
        for (i, &x) in survivors.iter().enumerate() {
            for (j, &y) in survivors.iter().enumerate() {
                table[i * order + j] = map[self.product(x, y)];
            }
        }
        let mut semigroup = Self::from_table_unchecked(order, table);
        if let Some(labels) = &self.labels {
            let mut l: Vec<String> = survivors.iter().map(|&x| labels[x].clone()).collect();
            l.push("0".to_string());
            semigroup.labels = Some(l);
        }
        Ok(Quotient {
            semigroup,
            map,
            zero,
        })
    }

    /// Set of all products of exactly `k` factors.
    pub fn products_of_length(&self, k: usize) -> Vec<Element> {
        assert!(k >= 1);
        let mut level: Vec<bool> = vec![true; self.order];
        for _ in 1..k {
            let mut next = vec![false; self.order];
            for x in self.elements().filter(|&x| level[x]) {
                for y in self.elements() {
                    next[self.product(x, y)] = true;
                }
            }
            level = next;
        }
        self.elements().filter(|&x| level[x]).collect()
    }

    /// True iff there is a zero, every product of length `k` is zero, and
    /// some product of length `k - 1` is not.
    pub fn is_proper_k_nilpotent(&self, k: usize) -> bool {
        assert!(k >= 2, "nilpotency class starts at 2");
        let Some(zero) = self.zero() else {
            return false;
        };
        self.products_of_length(k) == [zero] && self.products_of_length(k - 1) != [zero]
    }

    /// The opposite semigroup `x ∘ y = y * x`.
    pub fn transpose(&self) -> FiniteSemigroup {
        let n = self.order;
        let table = (0..n * n).map(|i| self.product(i % n, i / n)).collect();
        let mut t = Self::from_table_unchecked(n, table);
        t.labels = self.labels.clone();
        t
    }

    /// Relabels by `perm`: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[Element]) -> FiniteSemigroup {
        let n = self.order;
        assert_eq!(perm.len(), n);
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.product(x, y)];
            }
        }
        let mut t = Self::from_table_unchecked(n, table);
        if let Some(labels) = &self.labels {
            let mut l = vec![String::new(); n];
            for x in 0..n {
                l[perm[x]] = labels[x].clone();
            }
            t.labels = Some(l);
        }
        t
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
