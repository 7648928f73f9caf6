//! Sufficient conditions for inherent nondualisability, each reported with
//! a witness that can be checked again from the table alone.

use serde::Serialize;

use crate::catalog::catalog;
use crate::green::{self, FactorKind, GreenData};
use crate::group::{self, maximal_subgroups};
use crate::semigroup::{find_embedding, Element, FiniteSemigroup};

/// Pairs drawn from `S × S` are only scanned up to this order.
pub const SQUARE_SCAN_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    InherentlyNondualisable,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Criterion {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
}

impl Criterion {
    pub const ALL: [Criterion; 8] = [
        Criterion::C1,
        Criterion::C2,
        Criterion::C3,
        Criterion::C4,
        Criterion::C5,
        Criterion::C6,
        Criterion::C7,
        Criterion::C8,
    ];

    pub fn citation(self) -> &'static str {
        match self {
            Criterion::C1 => "index greater than 2: the variety contains a proper 3-nilpotent semigroup, so the semigroup is inherently nondualisable",
            Criterion::C2 => "the variety contains a proper 3-nilpotent semigroup (a quotient of a subsemigroup of S or S×S), so the semigroup is inherently nondualisable",
            Criterion::C3 => "regular but not completely regular: some principal factor is completely 0-simple with a zero sandwich entry, so the variety contains a proper 3-nilpotent semigroup",
            Criterion::C4 => "a completely 0-simple principal factor whose sandwich matrix contains a 0 entry yields a proper 3-nilpotent semigroup in the variety",
            Criterion::C5 => "contains a subgroup with a nonabelian Sylow subgroup, which makes the semigroup inherently nondualisable",
            Criterion::C6 => "contains a completely simple semigroup that is not orthodox, which makes the semigroup inherently nondualisable",
            Criterion::C7 => "contains one of the inherently nondualisable 3-element semigroups C¹₂,₁, L¹ or R¹",
            Criterion::C8 => "embeds both P and Q, so its quasivariety contains the inherently nondualisable product P×Q",
        }
    }
}

/// Criterion-specific evidence, in the input's own element numbering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// An element whose monogenic index exceeds 2.
    HighIndex { element: Element, index: usize },
    /// `T = ⟨x, y⟩` with `T² ≠ T³`, so `T/T³` is proper 3-nilpotent. With
    /// two coordinates the elements live in `S × S`.
    NilpotentPair { x: Vec<Element>, y: Vec<Element> },
    /// The whole semigroup is proper `k`-nilpotent.
    NilpotentWhole { k: usize },
    /// Regularity holds but `element` lies in no subgroup.
    OutsideSubgroups { element: Element },
    /// `element` shares its J-class with `idempotent` but its square drops
    /// below the class; `entry` is the zero sandwich position `(λ, i)`.
    ZeroSandwich {
        element: Element,
        idempotent: Element,
        entry: (usize, usize),
    },
    /// A Sylow subgroup of the group H-class of `idempotent`.
    NonabelianSylow {
        idempotent: Element,
        prime: usize,
        subgroup: Vec<Element>,
        noncommuting: (Element, Element),
    },
    /// Idempotents of a completely simple J-class with non-idempotent product.
    Nonorthodox { e: Element, f: Element },
    /// An injective homomorphism from the named pattern.
    Embedding { pattern: String, map: Vec<Element> },
    /// Embeddings of both P and Q.
    PairEmbedding { p_map: Vec<Element>, q_map: Vec<Element> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionHit {
    #[serde(rename = "id")]
    pub criterion_id: Criterion,
    pub citation: String,
    pub witness: Witness,
}

impl CriterionHit {
    fn new(criterion_id: Criterion, witness: Witness) -> Self {
        CriterionHit {
            criterion_id,
            citation: criterion_id.citation().to_string(),
            witness,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub fired_criteria: Vec<CriterionHit>,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn fired(&self, c: Criterion) -> bool {
        self.hit(c).is_some()
    }

    pub fn hit(&self, c: Criterion) -> Option<&CriterionHit> {
        self.fired_criteria.iter().find(|h| h.criterion_id == c)
    }

    pub fn criteria(&self) -> Vec<Criterion> {
        self.fired_criteria.iter().map(|h| h.criterion_id).collect()
    }

    /// 10 for inherently nondualisable, 0 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::InherentlyNondualisable => 10,
            Status::Unknown => 0,
        }
    }
}

pub const UNKNOWN_CAVEAT: &str =
    "Unknown does not mean dualisable: the criteria are sufficient conditions, not a decision procedure";

/// Evaluates every criterion; nothing short-circuits.
pub fn classify(s: &FiniteSemigroup) -> Verdict {
    let green = green::green_data(s);
    let checks: [fn(&FiniteSemigroup, &GreenData) -> Option<Witness>; 8] = [
        check_c1, check_c2, check_c3, check_c4, check_c5, check_c6, check_c7, check_c8,
    ];
    let fired_criteria: Vec<CriterionHit> = Criterion::ALL
        .iter()
        .zip(checks)
        .filter_map(|(&c, check)| check(s, &green).map(|w| CriterionHit::new(c, w)))
        .collect();
    let mut notes = Vec::new();
    let status = if fired_criteria.is_empty() {
        notes.push(UNKNOWN_CAVEAT.to_string());
        if green::is_regular(s) {
            notes.push(
                "regular: dualisability would require a normal band of groups; this semigroup is \
                 completely regular with no L¹ or R¹ subsemigroup, so it is one"
                    .to_string(),
            );
        }
        Status::Unknown
    } else {
        Status::InherentlyNondualisable
    };
    Verdict {
        status,
        fired_criteria,
        notes,
    }
}

fn check_c1(s: &FiniteSemigroup, _: &GreenData) -> Option<Witness> {
    s.elements().map(|x| s.monogenic_profile(x)).find(|p| p.index > 2).map(|p| Witness::HighIndex {
        element: p.element,
        index: p.index,
    })
}

/// Does `⟨gens⟩` satisfy `T² ⊄ T³`? Works on any index space via `mul`.
fn square_escapes_cube(n: usize, mul: impl Fn(usize, usize) -> usize, gens: [usize; 2]) -> bool {
    let mut inside = vec![false; n];
    let mut members = Vec::new();
    for g in gens {
        if !inside[g] {
            inside[g] = true;
            members.push(g);
        }
    }
    let mut k = 0;
    while k < members.len() {
        let t = members[k];
        for g in gens {
            let tg = mul(t, g);
            if !inside[tg] {
                inside[tg] = true;
                members.push(tg);
            }
        }
        k += 1;
    }
    let mut square = vec![false; n];
    for &x in &members {
        for &y in &members {
            square[mul(x, y)] = true;
        }
    }
    let mut cube = vec![false; n];
    for x in (0..n).filter(|&x| square[x]) {
        for &y in &members {
            cube[mul(x, y)] = true;
        }
    }
    (0..n).any(|x| square[x] && !cube[x])
}

fn check_c2(s: &FiniteSemigroup, _: &GreenData) -> Option<Witness> {
    let n = s.order();
    for x in 0..n {
        for y in x..n {
            if square_escapes_cube(n, |a, b| s.product(a, b), [x, y]) {
                return Some(Witness::NilpotentPair {
                    x: vec![x],
                    y: vec![y],
                });
            }
        }
    }
    if n <= SQUARE_SCAN_LIMIT {
        let m = n * n;
        let mul = |a: usize, b: usize| s.product(a / n, b / n) * n + s.product(a % n, b % n);
        for x in 0..m {
            for y in x..m {
                if square_escapes_cube(m, mul, [x, y]) {
                    return Some(Witness::NilpotentPair {
                        x: vec![x / n, x % n],
                        y: vec![y / n, y % n],
                    });
                }
            }
        }
    }
    (3..=n + 1)
        .find(|&k| s.is_proper_k_nilpotent(k))
        .map(|k| Witness::NilpotentWhole { k })
}

fn check_c3(s: &FiniteSemigroup, _: &GreenData) -> Option<Witness> {
    if !green::is_regular(s) {
        return None;
    }
    s.elements()
        .find(|&x| s.omega_plus(x, 1) != x)
        .map(|element| Witness::OutsideSubgroups { element })
}

fn check_c4(s: &FiniteSemigroup, green: &GreenData) -> Option<Witness> {
    let (class, entry) = crate::rees::zero_sandwich_factor(s, green)?;
    let members = &green.j_classes[class];
    let idempotent = *members.iter().find(|&&x| s.is_idempotent(x))?;
    let element = *members
        .iter()
        .find(|&&x| green.j_class_of[s.product(x, x)] != class)?;
    Some(Witness::ZeroSandwich {
        element,
        idempotent,
        entry,
    })
}

fn check_c5(s: &FiniteSemigroup, green: &GreenData) -> Option<Witness> {
    maximal_subgroups(s, green).into_iter().find_map(|m| {
        let report = m.group.sylow_report();
        let sylow = report.first_nonabelian()?;
        let (x, y) = m.group.noncommuting_pair(&sylow.elements)?;
        Some(Witness::NonabelianSylow {
            idempotent: m.idempotent,
            prime: sylow.prime,
            subgroup: sylow.elements.iter().map(|&g| m.to_parent(g)).collect(),
            noncommuting: (m.to_parent(x), m.to_parent(y)),
        })
    })
}

fn check_c6(s: &FiniteSemigroup, green: &GreenData) -> Option<Witness> {
    (0..green.j_classes.len()).find_map(|c| {
        let pf = green::principal_factor(s, green, c);
        if pf.kind != FactorKind::CompletelySimple {
            return None;
        }
        let (e, f) = crate::rees::nonidempotent_product(&pf.factor)?;
        let parent = |local: Element| {
            pf.class_images
                .iter()
                .find(|&&(_, l)| l == local)
                .map(|&(p, _)| p)
                .expect("completely simple factor is the class itself")
        };
        Some(Witness::Nonorthodox {
            e: parent(e),
            f: parent(f),
        })
    })
}

pub const SMALL_PATTERNS: [&str; 3] = ["C1_21", "L1", "R1"];

fn check_c7(s: &FiniteSemigroup, _: &GreenData) -> Option<Witness> {
    SMALL_PATTERNS.iter().find_map(|&name| {
        let pattern = catalog(name).expect("built-in pattern").semigroup;
        find_embedding(&pattern, s).map(|map| Witness::Embedding {
            pattern: name.to_string(),
            map,
        })
    })
}

fn check_c8(s: &FiniteSemigroup, _: &GreenData) -> Option<Witness> {
    let p = catalog("P").expect("built-in pattern").semigroup;
    let q = catalog("Q").expect("built-in pattern").semigroup;
    let p_map = find_embedding(&p, s)?;
    let q_map = find_embedding(&q, s)?;
    Some(Witness::PairEmbedding { p_map, q_map })
}

/// Re-checks a hit from first principles, without reusing the search that
/// produced it.
pub fn verify_witness(s: &FiniteSemigroup, hit: &CriterionHit) -> bool {
    if hit.citation != hit.criterion_id.citation() {
        return false;
    }
    let n = s.order();
    let valid = |x: Element| x < n;
    match (hit.criterion_id, &hit.witness) {
        (Criterion::C1, &Witness::HighIndex { element, index }) => {
            valid(element) && index > 2 && naive_index(s, element) == index
        }
        (Criterion::C2, Witness::NilpotentPair { x, y }) => verify_nilpotent_pair(s, x, y),
        (Criterion::C2, &Witness::NilpotentWhole { k }) => k > 2 && verify_whole_nilpotent(s, k),
        (Criterion::C3, &Witness::OutsideSubgroups { element }) => {
            valid(element) && regular_by_scan(s) && !in_some_subgroup(s, element)
        }
        (
            Criterion::C4,
            &Witness::ZeroSandwich {
                element,
                idempotent,
                ..
            },
        ) => {
            valid(element)
                && valid(idempotent)
                && s.is_idempotent(idempotent)
                && mutually_divide(s, element, idempotent)
                && !mutually_divide(s, s.product(element, element), element)
        }
        (
            Criterion::C5,
            Witness::NonabelianSylow {
                idempotent,
                prime,
                subgroup,
                noncommuting: (x, y),
            },
        ) => verify_sylow(s, *idempotent, *prime, subgroup, *x, *y),
        (Criterion::C6, &Witness::Nonorthodox { e, f }) => {
            valid(e)
                && valid(f)
                && s.is_idempotent(e)
                && s.is_idempotent(f)
                && !s.is_idempotent(s.product(e, f))
                && mutually_divide(s, e, f)
                && class_is_closed(s, e)
        }
        (Criterion::C7, Witness::Embedding { pattern, map }) => {
            SMALL_PATTERNS.contains(&pattern.as_str())
                && catalog(pattern).is_ok_and(|p| map_is_embedding(&p.semigroup, s, map))
        }
        (Criterion::C8, Witness::PairEmbedding { p_map, q_map }) => {
            let p = catalog("P").expect("built-in pattern").semigroup;
            let q = catalog("Q").expect("built-in pattern").semigroup;
            map_is_embedding(&p, s, p_map) && map_is_embedding(&q, s, q_map)
        }
        _ => false,
    }
}

fn naive_index(s: &FiniteSemigroup, x: Element) -> usize {
    let mut powers = vec![x];
    loop {
        let next = s.product(*powers.last().unwrap(), x);
        if let Some(i) = powers.iter().position(|&p| p == next) {
            return i + 1;
        }
        powers.push(next);
    }
}

fn map_is_embedding(pattern: &FiniteSemigroup, host: &FiniteSemigroup, map: &[Element]) -> bool {
    if map.len() != pattern.order() || map.iter().any(|&x| x >= host.order()) {
        return false;
    }
    let mut image = map.to_vec();
    image.sort_unstable();
    image.dedup();
    image.len() == map.len()
        && pattern.elements().all(|x| {
            pattern
                .elements()
                .all(|y| map[pattern.product(x, y)] == host.product(map[x], map[y]))
        })
}

fn verify_nilpotent_pair(s: &FiniteSemigroup, x: &[Element], y: &[Element]) -> bool {
    let n = s.order();
    if x.len() != y.len() || x.iter().chain(y).any(|&v| v >= n) {
        return false;
    }
    let (host, gx, gy) = match x.len() {
        1 => (s.clone(), x[0], y[0]),
        2 => (s.direct_product(s), x[0] * n + x[1], y[0] * n + y[1]),
        _ => return false,
    };
    let t = host.restrict(&host.generate(&[gx, gy])).expect("generated set is closed");
    let cube = t.semigroup.products_of_length(3);
    match t.semigroup.rees_quotient(&cube) {
        Ok(q) => q.semigroup.is_proper_k_nilpotent(3),
        Err(_) => false,
    }
}

/// Every product of `k` elements is the zero and some product of `k - 1`
/// is not, by enumerating words.
fn verify_whole_nilpotent(s: &FiniteSemigroup, k: usize) -> bool {
    let Some(zero) = s.zero() else {
        return false;
    };
    let mut level: Vec<Element> = s.elements().collect();
    for _ in 1..k - 1 {
        let mut next: Vec<Element> = level
            .iter()
            .flat_map(|&w| s.elements().map(move |y| s.product(w, y)))
            .collect();
        next.sort_unstable();
        next.dedup();
        level = next;
    }
    let below = level.iter().any(|&w| w != zero);
    let at_k = level
        .iter()
        .all(|&w| s.elements().all(|y| s.product(w, y) == zero));
    below && at_k
}

fn regular_by_scan(s: &FiniteSemigroup) -> bool {
    s.elements().all(|x| {
        s.elements()
            .any(|t| s.product(s.product(x, t), x) == x)
    })
}

/// `x = x^k` for some `k ≥ 2`, i.e. `x` lies on the cycle of its orbit.
fn in_some_subgroup(s: &FiniteSemigroup, x: Element) -> bool {
    let mut p = s.product(x, x);
    for _ in 0..s.order() {
        if p == x {
            return true;
        }
        p = s.product(p, x);
    }
    false
}

/// `S¹aS¹ = S¹bS¹` by direct search.
fn mutually_divide(s: &FiniteSemigroup, a: Element, b: Element) -> bool {
    let reach = |from: Element, to: Element| {
        let ones = || std::iter::once(None).chain(s.elements().map(Some));
        ones().any(|c| {
            ones().any(|d| {
                let l = c.map_or(from, |c| s.product(c, from));
                d.map_or(l, |d| s.product(l, d)) == to
            })
        })
    };
    reach(a, b) && reach(b, a)
}

fn class_is_closed(s: &FiniteSemigroup, e: Element) -> bool {
    let class: Vec<Element> = s.elements().filter(|&x| mutually_divide(s, x, e)).collect();
    class
        .iter()
        .all(|&x| class.iter().all(|&y| class.contains(&s.product(x, y))))
}

fn verify_sylow(
    s: &FiniteSemigroup,
    e: Element,
    prime: usize,
    subgroup: &[Element],
    x: Element,
    y: Element,
) -> bool {
    let n = s.order();
    if e >= n || !s.is_idempotent(e) || !group::is_prime(prime) {
        return false;
    }
    // the group of units of eSe is the maximal subgroup at e
    let units: Vec<Element> = s
        .elements()
        .filter(|&g| s.product(e, g) == g && s.product(g, e) == g)
        .filter(|&g| s.elements().any(|h| s.product(g, h) == e && s.product(h, g) == e))
        .collect();
    let mut order = units.len();
    let mut p_part = 1;
    while order.is_multiple_of(prime) {
        order /= prime;
        p_part *= prime;
    }
    let mut sorted = subgroup.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == subgroup.len()
        && subgroup.len() == p_part
        && p_part > 1
        && subgroup.iter().all(|g| units.contains(g))
        && subgroup
            .iter()
            .all(|&a| subgroup.iter().all(|&b| sorted.binary_search(&s.product(a, b)).is_ok()))
        && subgroup.contains(&x)
        && subgroup.contains(&y)
        && s.product(x, y) != s.product(y, x)
}

/// JSON form of a verdict for the command line.
#[derive(Clone, Debug, Serialize)]
pub struct VerdictReport<'a> {
    pub input_name: &'a str,
    pub order: usize,
    pub status: Status,
    pub criteria: &'a [CriterionHit],
    pub notes: &'a [String],
    pub green: GreenData,
}

impl<'a> VerdictReport<'a> {
    pub fn new(input_name: &'a str, s: &FiniteSemigroup, verdict: &'a Verdict) -> Self {
        VerdictReport {
            input_name,
            order: s.order(),
            status: verdict.status,
            criteria: &verdict.fired_criteria,
            notes: &verdict.notes,
            green: green::green_data(s),
        }
    }
}
