//! Tuples indexed by `P ∪ {∞}`, the subalgebra they generate, and the
//! ghost element.
//!
//! Coordinate 0 is `∞`; point `p` of the plane is coordinate `p + 1`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::plane::{Meet, ProjectivePlane};
use super::template::{TemplateMode, TemplateT};
use super::WitnessError;
use crate::semigroup::{Element, FiniteSemigroup};

pub const DEFAULT_BUDGET: usize = 1 << 24;

/// Frontier members expanded per parallel batch.
const BATCH: usize = 1 << 14;

/// An element of a power of the host, one byte per coordinate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerTuple {
    values: Box<[u8]>,
}

impl PowerTuple {
    /// Panics if a value does not fit in a byte.
    pub fn new(values: &[Element]) -> Self {
        PowerTuple {
            values: values
                .iter()
                .map(|&v| u8::try_from(v).expect("host element fits in a byte"))
                .collect(),
        }
    }

    pub fn get(&self, coordinate: usize) -> Element {
        self.values[coordinate] as Element
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> Vec<Element> {
        self.values.iter().map(|&v| v as Element).collect()
    }

    /// Pointwise product in the host.
    pub fn product(&self, other: &PowerTuple, m: &FiniteSemigroup) -> PowerTuple {
        let values = self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(&x, &y)| m.product(x as Element, y as Element) as u8)
            .collect();
        PowerTuple { values }
    }

    /// Pointwise template term, which differs from the product only in
    /// commutator mode.
    pub fn term(&self, other: &PowerTuple, m: &FiniteSemigroup, t: &TemplateT) -> PowerTuple {
        let values: Vec<Element> = (0..self.len())
            .map(|k| t.term(m, self.get(k), other.get(k)))
            .collect();
        PowerTuple::new(&values)
    }
}

impl std::fmt::Debug for PowerTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.values)
    }
}

impl Serialize for PowerTuple {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.values().serialize(serializer)
    }
}

/// `base` everywhere except `marked` at `∞` and on `points`.
pub fn line_tuple(plane: &ProjectivePlane, base: Element, marked: Element, points: &[usize]) -> PowerTuple {
    let mut values = vec![base; plane.point_count() + 1];
    values[0] = marked;
    for &p in points {
        values[p + 1] = marked;
    }
    PowerTuple::new(&values)
}

/// `b` with `a` on `∞` and `L`, then `d` with `c` on `∞` and `L`, line by
/// line, dropping repeats.
pub fn line_generators(t: &TemplateT, plane: &ProjectivePlane) -> Vec<PowerTuple> {
    let mut out: Vec<PowerTuple> = Vec::new();
    for line in plane.lines() {
        for tuple in [line_tuple(plane, t.b, t.a, line), line_tuple(plane, t.d, t.c, line)] {
            if !out.contains(&tuple) {
                out.push(tuple);
            }
        }
    }
    out
}

/// Checks `b_L · d_K = f` with `e` on `∞` and on `L ∧ K`, for every pair of
/// lines, under the template's term.
pub fn line_identity_holds(m: &FiniteSemigroup, t: &TemplateT, plane: &ProjectivePlane) -> bool {
    let n = plane.line_count();
    (0..n).all(|l| {
        let bl = line_tuple(plane, t.b, t.a, plane.line(l));
        (0..n).all(|k| {
            let dk = line_tuple(plane, t.d, t.c, plane.line(k));
            let expected = match plane.meet(l, k) {
                Meet::Point(p) => line_tuple(plane, t.f, t.e, &[p]),
                Meet::Line(same) => line_tuple(plane, t.f, t.e, plane.line(same)),
            };
            bl.term(&dk, m, t) == expected
        })
    })
}

#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub members: Vec<PowerTuple>,
    /// `witness[k] = Some((parent, generator))` with `members[k] =
    /// members[parent] · members[generator]`; `None` for generators.
    pub witness: Vec<Option<(usize, usize)>>,
    pub generator_count: usize,
    pub member_count: usize,
    pub budget: usize,
    pub mode: TemplateMode,
    index: HashMap<PowerTuple, usize>,
}

impl ClosureResult {
    pub fn find(&self, tuple: &PowerTuple) -> Option<usize> {
        self.index.get(tuple).copied()
    }

    pub fn contains(&self, tuple: &PowerTuple) -> bool {
        self.index.contains_key(tuple)
    }

    /// Generator ids whose left-to-right product is member `id`.
    pub fn derivation(&self, id: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = id;
        while let Some((parent, generator)) = self.witness[cur] {
            word.push(generator);
            cur = parent;
        }
        word.push(cur);
        word.reverse();
        word
    }

    pub fn replay(&self, m: &FiniteSemigroup, word: &[usize]) -> PowerTuple {
        let (first, rest) = word.split_first().expect("nonempty derivation");
        rest.iter()
            .fold(self.members[*first].clone(), |acc, &g| acc.product(&self.members[g], m))
    }
}

pub fn closure(
    m: &FiniteSemigroup,
    generators: &[PowerTuple],
    mode: TemplateMode,
) -> Result<ClosureResult, WitnessError> {
    closure_with(m, generators, mode, DEFAULT_BUDGET)
}

/// Subsemigroup of the power generated by `generators`.
///
/// Every member is a word over the generators, so members are only ever
/// multiplied on the right by generators. In commutator mode the host is a
/// finite group, where the generated subsemigroup is already the generated
/// subgroup, so the operation is the product in every mode.
///
/// Frontier batches are expanded in parallel and merged in order, so the
/// member order and witness links do not depend on scheduling.
pub fn closure_with(
    m: &FiniteSemigroup,
    generators: &[PowerTuple],
    mode: TemplateMode,
    budget: usize,
) -> Result<ClosureResult, WitnessError> {
    if m.order() > 256 {
        return Err(WitnessError::HostTooLarge(m.order()));
    }
    if generators.is_empty() {
        return Err(WitnessError::NoGenerators);
    }
    let mut members: Vec<PowerTuple> = Vec::new();
    let mut witness: Vec<Option<(usize, usize)>> = Vec::new();
    let mut index: HashMap<PowerTuple, usize> = HashMap::new();
    for g in generators {
        if !index.contains_key(g) {
            index.insert(g.clone(), members.len());
            members.push(g.clone());
            witness.push(None);
        }
    }
    let generator_count = members.len();
    if generator_count > budget {
        return Err(WitnessError::ClosureBudgetExceeded { budget });
    }

    let mut next = 0;
    while next < members.len() {
        let end = members.len().min(next + BATCH);
        let products: Vec<(usize, usize, PowerTuple)> = (next..end)
            .into_par_iter()
            .flat_map_iter(|id| {
                let members = &members;
                (0..generator_count).map(move |g| (id, g, members[id].product(&members[g], m)))
            })
            .collect();
        for (parent, g, tuple) in products {
            if index.contains_key(&tuple) {
                continue;
            }
            if members.len() == budget {
                return Err(WitnessError::ClosureBudgetExceeded { budget });
            }
            index.insert(tuple.clone(), members.len());
            members.push(tuple);
            witness.push(Some((parent, g)));
        }
        next = end;
    }
    Ok(ClosureResult {
        member_count: members.len(),
        members,
        witness,
        generator_count,
        budget,
        mode,
        index,
    })
}

/// `e` at `∞`, `f` at every point.
pub fn ghost(t: &TemplateT, plane: &ProjectivePlane) -> PowerTuple {
    line_tuple(plane, t.f, t.e, &[])
}

#[derive(Clone, Debug, Serialize)]
pub struct GhostMembership {
    pub member: bool,
    /// Generator ids whose product is the ghost.
    pub derivation: Option<Vec<usize>>,
}

pub fn ghost_membership(result: &ClosureResult, ghost: &PowerTuple) -> GhostMembership {
    match result.find(ghost) {
        Some(id) => GhostMembership {
            member: true,
            derivation: Some(result.derivation(id)),
        },
        None => GhostMembership {
            member: false,
            derivation: None,
        },
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoordinateCheck {
    pub coordinate: usize,
    /// `(value, block size)` for the partition of `A₀` by value here.
    pub blocks: Vec<(Element, usize)>,
    pub large_blocks: usize,
    pub large_value: Option<Element>,
    pub ghost_value: Element,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndReport {
    pub host_size: usize,
    /// `u(host_size) = host_size + 1`; blocks must be strictly larger.
    pub threshold: usize,
    pub a0_size: usize,
    pub coordinates: Vec<CoordinateCheck>,
    pub passed: bool,
}

/// Checks that `A₀ = {f with e on ∞ and p}` lies in the closure and that at
/// every coordinate exactly one block of `A₀` exceeds `host_size + 1`,
/// carrying the ghost's value there.
pub fn ind_bookkeeping_check(
    result: &ClosureResult,
    t: &TemplateT,
    plane: &ProjectivePlane,
    host_size: usize,
) -> Result<IndReport, WitnessError> {
    let points = plane.point_count();
    let threshold = host_size + 1;
    if points <= threshold + 1 {
        return Err(WitnessError::PlaneTooSmall { points, threshold });
    }
    let a0: Vec<PowerTuple> = (0..points)
        .map(|p| line_tuple(plane, t.f, t.e, &[p]))
        .collect();
    if let Some(p) = a0.iter().position(|x| !result.contains(x)) {
        return Err(WitnessError::MissingFromClosure(p));
    }
    let g = ghost(t, plane);
    let coordinates: Vec<CoordinateCheck> = (0..=points)
        .map(|s| {
            let mut blocks: Vec<(Element, usize)> = Vec::new();
            for x in &a0 {
                match blocks.iter_mut().find(|(v, _)| *v == x.get(s)) {
                    Some((_, size)) => *size += 1,
                    None => blocks.push((x.get(s), 1)),
                }
            }
            let large: Vec<Element> = blocks
                .iter()
                .filter(|&&(_, size)| size > threshold)
                .map(|&(v, _)| v)
                .collect();
            let large_value = large.first().copied();
            CoordinateCheck {
                coordinate: s,
                large_blocks: large.len(),
                passed: large.len() == 1 && large_value == Some(g.get(s)),
                large_value,
                ghost_value: g.get(s),
                blocks,
            }
        })
        .collect();
    Ok(IndReport {
        host_size,
        threshold,
        a0_size: a0.len(),
        passed: coordinates.iter().all(|c| c.passed),
        coordinates,
    })
}

/// Machine-readable summary of one witness run.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub q: usize,
    pub host: String,
    pub template: TemplateT,
    pub generator_count: usize,
    pub member_count: usize,
    pub ghost_member: bool,
    pub budget: usize,
}

impl ClosureReport {
    pub fn new(host: &str, plane: &ProjectivePlane, t: &TemplateT, result: &ClosureResult) -> Self {
        ClosureReport {
            q: plane.q(),
            host: host.to_string(),
            template: *t,
            generator_count: result.generator_count,
            member_count: result.member_count,
            ghost_member: result.contains(&ghost(t, plane)),
            budget: result.budget,
        }
    }
}
