//! Finite-arity check of the interpolation condition: every morphism from a
//! substructure of a power of the alter ego agrees with a term function.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::semigroup::{Element, FiniteSemigroup};

pub const MAX_TARGET: usize = 4;
pub const MAX_EXHAUSTIVE_ARITY: usize = 2;
/// Seed for the sampled arity-3 mode; fixed so runs repeat exactly.
pub const SAMPLE_SEED: u64 = 0x5eed;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProbeError {
    #[error("target has {0} elements; at most {MAX_TARGET} are supported")]
    TooLarge(usize),
    #[error("arity {0} is outside 1..={MAX_EXHAUSTIVE_ARITY}; use the sampled mode for arity 3")]
    ArityOutOfRange(usize),
    #[error("alter ego carrier does not match the target")]
    CarrierMismatch,
    #[error("operation {0} has a table of the wrong size")]
    BadTable(String),
    #[error("operation {0} is not a homomorphism from the square of the target")]
    NotHomomorphism(String),
    #[error("domain of partial operation {0} is not closed under the target product")]
    DomainNotClosed(String),
    #[error("constant {0} is not idempotent")]
    ConstantNotIdempotent(Element),
    #[error("no built-in alter ego for {0}")]
    NoBuiltin(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct TotalOp {
    pub name: String,
    /// `table[x * m + y]`.
    pub table: Vec<Element>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PartialOp {
    pub name: String,
    /// `None` outside the domain.
    pub table: Vec<Option<Element>>,
}

/// Binary total and partial operations plus constants on the target's
/// carrier, checked for compatibility with the target when built.
#[derive(Clone, Debug, Serialize)]
pub struct AlterEgoSpec {
    pub name: String,
    pub carrier: Vec<Element>,
    pub total_ops: Vec<TotalOp>,
    pub partial_ops: Vec<PartialOp>,
    pub constants: Vec<Element>,
}

impl AlterEgoSpec {
    pub fn new(
        target: &FiniteSemigroup,
        name: &str,
        total_ops: Vec<TotalOp>,
        partial_ops: Vec<PartialOp>,
        constants: Vec<Element>,
    ) -> Result<Self, ProbeError> {
        let spec = AlterEgoSpec {
            name: name.to_string(),
            carrier: target.elements().collect(),
            total_ops,
            partial_ops,
            constants,
        };
        spec.validate(target)?;
        Ok(spec)
    }

    /// No operations and no constants: every map is a morphism.
    pub fn empty(target: &FiniteSemigroup) -> Self {
        AlterEgoSpec {
            name: "empty".into(),
            carrier: target.elements().collect(),
            total_ops: Vec::new(),
            partial_ops: Vec::new(),
            constants: Vec::new(),
        }
    }

    pub fn validate(&self, target: &FiniteSemigroup) -> Result<(), ProbeError> {
        let m = target.order();
        if self.carrier != target.elements().collect::<Vec<_>>() {
            return Err(ProbeError::CarrierMismatch);
        }
        let pairs = || (0..m).flat_map(move |x| (0..m).map(move |y| (x, y)));
        for op in &self.total_ops {
            if op.table.len() != m * m || op.table.iter().any(|&v| v >= m) {
                return Err(ProbeError::BadTable(op.name.clone()));
            }
            let f = |x: Element, y: Element| op.table[x * m + y];
            for (x1, y1) in pairs() {
                for (x2, y2) in pairs() {
                    let lhs = f(target.product(x1, x2), target.product(y1, y2));
                    if lhs != target.product(f(x1, y1), f(x2, y2)) {
                        return Err(ProbeError::NotHomomorphism(op.name.clone()));
                    }
                }
            }
        }
        for op in &self.partial_ops {
            if op.table.len() != m * m || op.table.iter().flatten().any(|&v| v >= m) {
                return Err(ProbeError::BadTable(op.name.clone()));
            }
            let f = |x: Element, y: Element| op.table[x * m + y];
            for (x1, y1) in pairs() {
                for (x2, y2) in pairs() {
                    let (Some(v1), Some(v2)) = (f(x1, y1), f(x2, y2)) else {
                        continue;
                    };
                    match f(target.product(x1, x2), target.product(y1, y2)) {
                        None => return Err(ProbeError::DomainNotClosed(op.name.clone())),
                        Some(v) if v != target.product(v1, v2) => {
                            return Err(ProbeError::NotHomomorphism(op.name.clone()))
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        if let Some(&c) = self.constants.iter().find(|&&c| c >= m || !target.is_idempotent(c)) {
            return Err(ProbeError::ConstantNotIdempotent(c));
        }
        Ok(())
    }
}

/// The alter ego for `P` (`a`, `e`, `0`), or its mirror for `Q`: the
/// multiplication, the flat semilattice `∧` with `0` at the bottom, the
/// constants `0` and `e`, and the partial idempotent `∨` on
/// `{0,a}² ∪ {(e,e)}` with `0 ∨ a = a ∨ 0 = a`.
pub fn flat_alter_ego(
    target: &FiniteSemigroup,
    name: &str,
    a: Element,
    e: Element,
    zero: Element,
) -> Result<AlterEgoSpec, ProbeError> {
    let m = target.order();
    let multiplication = TotalOp {
        name: "·".into(),
        table: target.table().to_vec(),
    };
    let meet = TotalOp {
        name: "∧".into(),
        table: (0..m * m)
            .map(|k| if k / m == k % m { k / m } else { zero })
            .collect(),
    };
    let join = PartialOp {
        name: "∨".into(),
        table: (0..m * m)
            .map(|k| {
                let (x, y) = (k / m, k % m);
                let low = |v| v == zero || v == a;
                if low(x) && low(y) {
                    Some(if x == a || y == a { a } else { zero })
                } else if x == e && y == e {
                    Some(e)
                } else {
                    None
                }
            })
            .collect(),
    };
    AlterEgoSpec::new(target, name, vec![multiplication, meet], vec![join], vec![zero, e])
}

/// Built-in alter egos keyed by catalog name.
pub fn builtin_alter_ego(name: &str, target: &FiniteSemigroup) -> Result<AlterEgoSpec, ProbeError> {
    let labels = |x: &str, y: &str| {
        let find = |l: &str| target.element_named(l).ok_or_else(|| ProbeError::NoBuiltin(name.into()));
        Ok::<_, ProbeError>((find(x)?, find(y)?, find("0")?))
    };
    match name {
        "P" => {
            let (a, e, z) = labels("a", "e")?;
            flat_alter_ego(target, "ℙ", a, e, z)
        }
        "Q" => {
            let (b, f, z) = labels("b", "f")?;
            flat_alter_ego(target, "ℚ", b, f, z)
        }
        _ => Err(ProbeError::NoBuiltin(name.into())),
    }
}

/// Tuples of the `n`-th power, coded base `m` with the first coordinate
/// most significant.
struct Power {
    m: usize,
    n: usize,
    size: usize,
}

impl Power {
    fn new(m: usize, n: usize) -> Self {
        Power { m, n, size: m.pow(n as u32) }
    }

    fn decode(&self, mut code: usize) -> Vec<Element> {
        let mut out = vec![0; self.n];
        for k in (0..self.n).rev() {
            out[k] = code % self.m;
            code /= self.m;
        }
        out
    }

    fn encode(&self, tuple: &[Element]) -> usize {
        tuple.iter().fold(0, |acc, &v| acc * self.m + v)
    }

    fn total(&self, op: &TotalOp, x: usize, y: usize) -> usize {
        let (x, y) = (self.decode(x), self.decode(y));
        let v: Vec<Element> = x.iter().zip(&y).map(|(&a, &b)| op.table[a * self.m + b]).collect();
        self.encode(&v)
    }

    fn partial(&self, op: &PartialOp, x: usize, y: usize) -> Option<usize> {
        let (x, y) = (self.decode(x), self.decode(y));
        let v: Option<Vec<Element>> = x.iter().zip(&y).map(|(&a, &b)| op.table[a * self.m + b]).collect();
        v.map(|v| self.encode(&v))
    }

    fn constant(&self, c: Element) -> usize {
        self.encode(&vec![c; self.n])
    }
}

/// All `n`-ary term functions, as value vectors indexed by tuple code: the
/// closure of the projections under pointwise multiplication.
pub fn term_functions(target: &FiniteSemigroup, n: usize) -> Vec<Vec<Element>> {
    let power = Power::new(target.order(), n);
    let projections: Vec<Vec<Element>> = (0..n)
        .map(|i| (0..power.size).map(|c| power.decode(c)[i]).collect())
        .collect();
    let mut seen: HashSet<Vec<Element>> = HashSet::new();
    let mut out = Vec::new();
    let mut queue: VecDeque<Vec<Element>> = VecDeque::new();
    for p in &projections {
        if seen.insert(p.clone()) {
            out.push(p.clone());
            queue.push_back(p.clone());
        }
    }
    while let Some(t) = queue.pop_front() {
        for p in &projections {
            let next: Vec<Element> = t.iter().zip(p).map(|(&x, &y)| target.product(x, y)).collect();
            if seen.insert(next.clone()) {
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    pub substructure: Vec<Vec<Element>>,
    /// Parallel to `substructure`.
    pub morphism: Vec<Element>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub target_order: usize,
    pub alter_ego: String,
    pub arity: usize,
    /// False in the sampled mode, where only some substructures are tried.
    pub exhaustive: bool,
    pub substructures: usize,
    pub morphisms: usize,
    pub term_functions: usize,
    pub all_extend: bool,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Copy)]
enum OpRef {
    Total(usize),
    Partial(usize),
}

/// `op(values[i], values[j]) = values[result]` for a candidate morphism.
#[derive(Clone, Copy)]
struct Constraint {
    i: usize,
    j: usize,
    result: usize,
    op: OpRef,
}

struct Checker<'a> {
    ego: &'a AlterEgoSpec,
    power: Power,
    terms: Vec<Vec<Element>>,
    substructures: usize,
    morphisms: usize,
    counterexample: Option<Counterexample>,
}

impl Checker<'_> {
    fn is_closed(&self, member: &[bool]) -> bool {
        let elems: Vec<usize> = (0..member.len()).filter(|&x| member[x]).collect();
        if self.ego.constants.iter().any(|&c| !member[self.power.constant(c)]) {
            return false;
        }
        elems.iter().all(|&x| {
            elems.iter().all(|&y| {
                self.ego.total_ops.iter().all(|op| member[self.power.total(op, x, y)])
                    && self
                        .ego
                        .partial_ops
                        .iter()
                        .all(|op| self.power.partial(op, x, y).is_none_or(|z| member[z]))
            })
        })
    }

    /// Every morphism `X → ego`, by backtracking with each constraint checked
    /// once all of its arguments are assigned.
    fn morphisms(&self, elems: &[usize]) -> Vec<Vec<Element>> {
        let m = self.power.m;
        let position: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        // indexed by the last position a constraint mentions
        let mut constraints: Vec<Vec<Constraint>> = vec![Vec::new(); elems.len()];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                for (k, op) in self.ego.total_ops.iter().enumerate() {
                    let r = position[&self.power.total(op, x, y)];
                    constraints[i.max(j).max(r)].push(Constraint { i, j, result: r, op: OpRef::Total(k) });
                }
                for (k, op) in self.ego.partial_ops.iter().enumerate() {
                    if let Some(z) = self.power.partial(op, x, y) {
                        let r = position[&z];
                        constraints[i.max(j).max(r)].push(Constraint { i, j, result: r, op: OpRef::Partial(k) });
                    }
                }
            }
        }
        let fixed: HashMap<usize, Element> = self
            .ego
            .constants
            .iter()
            .map(|&c| (position[&self.power.constant(c)], c))
            .collect();
        let mut out = Vec::new();
        let mut values = vec![0; elems.len()];
        fn go(
            depth: usize,
            values: &mut Vec<Element>,
            m: usize,
            fixed: &HashMap<usize, Element>,
            constraints: &[Vec<Constraint>],
            ego: &AlterEgoSpec,
            out: &mut Vec<Vec<Element>>,
        ) {
            if depth == values.len() {
                out.push(values.clone());
                return;
            }
            let choices: Vec<Element> = match fixed.get(&depth) {
                Some(&c) => vec![c],
                None => (0..m).collect(),
            };
            for v in choices {
                values[depth] = v;
                let ok = constraints[depth].iter().all(|c| {
                    let cell = values[c.i] * m + values[c.j];
                    match c.op {
                        OpRef::Total(k) => ego.total_ops[k].table[cell] == values[c.result],
                        OpRef::Partial(k) => ego.partial_ops[k].table[cell] == Some(values[c.result]),
                    }
                });
                if ok {
                    go(depth + 1, values, m, fixed, constraints, ego, out);
                }
            }
        }
        go(0, &mut values, m, &fixed, &constraints, self.ego, &mut out);
        out
    }

    fn check(&mut self, elems: &[usize]) {
        self.substructures += 1;
        for alpha in self.morphisms(elems) {
            self.morphisms += 1;
            let extends = self
                .terms
                .iter()
                .any(|t| elems.iter().zip(&alpha).all(|(&x, &v)| t[x] == v));
            if !extends && self.counterexample.is_none() {
                self.counterexample = Some(Counterexample {
                    substructure: elems.iter().map(|&x| self.power.decode(x)).collect(),
                    morphism: alpha,
                });
            }
        }
    }

    fn report(self, target: &FiniteSemigroup, exhaustive: bool) -> ProbeReport {
        ProbeReport {
            target_order: target.order(),
            alter_ego: self.ego.name.clone(),
            arity: self.power.n,
            exhaustive,
            substructures: self.substructures,
            morphisms: self.morphisms,
            term_functions: self.terms.len(),
            all_extend: self.counterexample.is_none(),
            counterexample: self.counterexample,
        }
    }

    /// Substructure generated by `seeds`.
    fn generated(&self, seeds: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.power.size];
        let mut elems: Vec<usize> = Vec::new();
        let add = |x: usize, member: &mut [bool], elems: &mut Vec<usize>| {
            if !member[x] {
                member[x] = true;
                elems.push(x);
            }
        };
        for &c in &self.ego.constants {
            add(self.power.constant(c), &mut member, &mut elems);
        }
        for &s in seeds {
            add(s, &mut member, &mut elems);
        }
        let mut done = 0;
        while done < elems.len() {
            let x = elems[done];
            done += 1;
            for k in 0..done {
                let y = elems[k];
                for (p, q) in [(x, y), (y, x)] {
                    for op in &self.ego.total_ops {
                        add(self.power.total(op, p, q), &mut member, &mut elems);
                    }
                    for op in &self.ego.partial_ops {
                        if let Some(z) = self.power.partial(op, p, q) {
                            add(z, &mut member, &mut elems);
                        }
                    }
                }
            }
        }
        elems.sort_unstable();
        elems
    }
}

/// Every substructure of the `arity`-th power of `ego` and every morphism
/// from it, for arity 1 or 2.
pub fn ic_probe(target: &FiniteSemigroup, ego: &AlterEgoSpec, arity: usize) -> Result<ProbeReport, ProbeError> {
    if target.order() > MAX_TARGET {
        return Err(ProbeError::TooLarge(target.order()));
    }
    if arity == 0 || arity > MAX_EXHAUSTIVE_ARITY {
        return Err(ProbeError::ArityOutOfRange(arity));
    }
    ego.validate(target)?;
    let mut checker = Checker {
        ego,
        power: Power::new(target.order(), arity),
        terms: term_functions(target, arity),
        substructures: 0,
        morphisms: 0,
        counterexample: None,
    };
    let size = checker.power.size;
    for mask in 0u64..(1u64 << size) {
        let member: Vec<bool> = (0..size).map(|x| mask >> x & 1 == 1).collect();
        if checker.is_closed(&member) {
            let elems: Vec<usize> = (0..size).filter(|&x| member[x]).collect();
            checker.check(&elems);
        }
    }
    Ok(checker.report(target, true))
}

/// Non-exhaustive: `samples` substructures of the cube, each generated by
/// one to three random tuples drawn with a fixed seed.
pub fn ic_probe_sampled(
    target: &FiniteSemigroup,
    ego: &AlterEgoSpec,
    samples: usize,
) -> Result<ProbeReport, ProbeError> {
    if target.order() > MAX_TARGET {
        return Err(ProbeError::TooLarge(target.order()));
    }
    ego.validate(target)?;
    let arity = 3;
    let mut checker = Checker {
        ego,
        power: Power::new(target.order(), arity),
        terms: term_functions(target, arity),
        substructures: 0,
        morphisms: 0,
        counterexample: None,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let all: Vec<usize> = (0..checker.power.size).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for _ in 0..samples {
        let k = rng.gen_range(1..=3);
        let seeds: Vec<usize> = all.choose_multiple(&mut rng, k).copied().collect();
        let elems = checker.generated(&seeds);
        if seen.insert(elems.clone()) {
            checker.check(&elems);
        }
    }
    Ok(checker.report(target, false))
}

#[cfg(test)]
mod tests;
