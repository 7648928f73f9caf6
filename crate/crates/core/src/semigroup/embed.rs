//! Injective homomorphism search by backtracking.

use super::{Element, FiniteSemigroup};

const UNSET: usize = usize::MAX;

/// First injective multiplication-preserving map `pattern -> host`, in
/// lexicographic order of the image vector.
///
/// Candidates for each pattern element are restricted to host elements with
/// the same monogenic index and period, which an injective homomorphism
/// must preserve.
pub fn find_embedding(pattern: &FiniteSemigroup, host: &FiniteSemigroup) -> Option<Vec<Element>> {
    let (m, n) = (pattern.order(), host.order());
    if m > n {
        return None;
    }
    let shape = |s: &FiniteSemigroup, x| {
        let p = s.monogenic_profile(x);
        (p.index, p.period)
    };
    let host_shapes: Vec<_> = host.elements().map(|h| shape(host, h)).collect();
    let candidates: Vec<Vec<Element>> = pattern
        .elements()
        .map(|x| {
            let want = shape(pattern, x);
            host.elements().filter(|&h| host_shapes[h] == want).collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }
    let mut search = Search {
        pattern,
        host,
        candidates,
        map: vec![UNSET; m],
        preimage: vec![UNSET; n],
    };
    search.extend(0).then_some(search.map)
}

/// True iff a bijective homomorphism exists.
pub fn is_isomorphic(s: &FiniteSemigroup, t: &FiniteSemigroup) -> bool {
    s.order() == t.order() && find_embedding(s, t).is_some()
}

struct Search<'a> {
    pattern: &'a FiniteSemigroup,
    host: &'a FiniteSemigroup,
    candidates: Vec<Vec<Element>>,
    map: Vec<Element>,
    preimage: Vec<Element>,
}

impl Search<'_> {
    fn extend(&mut self, x: Element) -> bool {
        if x == self.pattern.order() {
            return true;
        }
        for k in 0..self.candidates[x].len() {
            let h = self.candidates[x][k];
            if self.preimage[h] != UNSET {
                continue;
            }
            self.map[x] = h;
            self.preimage[h] = x;
            if self.consistent(x) && self.extend(x + 1) {
                return true;
            }
            self.map[x] = UNSET;
            self.preimage[h] = UNSET;
        }
        false
    }

    /// Checks every product `lr = p` among assigned elements in which `x`
    /// takes part as a factor or as the result.
    fn consistent(&self, x: Element) -> bool {
        for l in 0..=x {
            for r in 0..=x {
                let p = self.pattern.product(l, r);
                let image = self.host.product(self.map[l], self.map[r]);
                if self.map[p] != UNSET {
                    if (l == x || r == x || p == x) && self.map[p] != image {
                        return false;
                    }
                } else if (l == x || r == x) && self.preimage[image] != UNSET {
                    // image already taken by another element, injectivity would fail
                    return false;
                }
            }
        }
        true
    }
}
