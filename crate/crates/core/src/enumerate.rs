//! All semigroups of a small order, by backtracking over Cayley tables.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::semigroup::FiniteSemigroup;

/// Largest order enumerated without [`EnumerateOptions::unbounded`].
pub const BOUNDED_ORDER: usize = 4;
pub const MAX_ORDER: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("order {0} is outside 1..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("order {0} takes minutes or more; pass the unbounded flag to run it")]
    NeedsUnbounded(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UpTo {
    Labeled,
    Iso,
    IsoOrAnti,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerateOptions {
    pub unbounded: bool,
}

const UNSET: u8 = u8::MAX;

/// Deterministic list: labeled tables in lexicographic order of the
/// flattened table, or canonical forms in lexicographic order.
pub fn enumerate_semigroups(
    n: usize,
    up_to: UpTo,
    options: EnumerateOptions,
) -> Result<Vec<FiniteSemigroup>, EnumerateError> {
    enumerate_with_progress(n, up_to, options, |_, _| {})
}

/// As [`enumerate_semigroups`], calling `progress(done, total)` as each
/// first-row prefix finishes (from worker threads, in no fixed order).
pub fn enumerate_with_progress(
    n: usize,
    up_to: UpTo,
    options: EnumerateOptions,
    progress: impl Fn(usize, usize) + Sync,
) -> Result<Vec<FiniteSemigroup>, EnumerateError> {
    if n == 0 || n > MAX_ORDER {
        return Err(EnumerateError::OrderOutOfRange(n));
    }
    if n > BOUNDED_ORDER && !options.unbounded {
        return Err(EnumerateError::NeedsUnbounded(n));
    }
    let tables = labeled_tables(n, progress);
    let out = match up_to {
        UpTo::Labeled => tables,
        UpTo::Iso | UpTo::IsoOrAnti => {
            let perms = permutations(n);
            let anti = up_to == UpTo::IsoOrAnti;
            let forms: BTreeSet<Vec<u8>> = tables
                .par_iter()
                .map(|t| canonical_table(t, n, &perms, anti))
                .collect::<Vec<_>>()
                .into_iter()
                .collect();
            forms.into_iter().collect()
        }
    };
    Ok(out.into_iter().map(|t| to_semigroup(n, &t)).collect())
}

fn to_semigroup(n: usize, t: &[u8]) -> FiniteSemigroup {
    FiniteSemigroup::from_table_unchecked(n, t.iter().map(|&v| v as usize).collect())
}

/// Each first row is a separate subtree; subtrees run in parallel and are
/// concatenated in prefix order.
fn labeled_tables(n: usize, progress: impl Fn(usize, usize) + Sync) -> Vec<Vec<u8>> {
    let prefixes = n.pow(n as u32);
    let done = std::sync::atomic::AtomicUsize::new(0);
    (0..prefixes)
        .into_par_iter()
        .map(|code| {
            let mut table = vec![UNSET; n * n];
            let mut out = Vec::new();
            let mut ok = true;
            let mut c = code;
            for y in (0..n).rev() {
                table[y] = (c % n) as u8;
                c /= n;
            }
            for y in 0..n {
                if !consistent_after(&table, n, 0, y) {
                    ok = false;
                    break;
                }
            }
            if ok {
                fill(&mut table, n, n, &mut out);
            }
            let finished = done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
            progress(finished, prefixes);
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn fill(table: &mut [u8], n: usize, cell: usize, out: &mut Vec<Vec<u8>>) {
    if cell == n * n {
        out.push(table.to_vec());
        return;
    }
    let (x, y) = (cell / n, cell % n);
    for v in 0..n as u8 {
        table[cell] = v;
        if consistent_after(table, n, x, y) {
            fill(table, n, cell + 1, out);
        }
    }
    table[cell] = UNSET;
}

/// Checks every associativity instance `(ab)c = a(bc)` that the entry at
/// `(x, y)` takes part in and whose other lookups are already set.
fn consistent_after(t: &[u8], n: usize, x: usize, y: usize) -> bool {
    let get = |a: usize, b: usize| t[a * n + b];
    let check = |a: usize, b: usize, c: usize| {
        let ab = get(a, b);
        let bc = get(b, c);
        if ab == UNSET || bc == UNSET {
            return true;
        }
        let l = get(ab as usize, c);
        let r = get(a, bc as usize);
        l == UNSET || r == UNSET || l == r
    };
    for k in 0..n {
        // (x y) k and k (x y) roles as the first product
        if !check(x, y, k) || !check(k, x, y) {
            return false;
        }
    }
    for a in 0..n {
        for b in 0..n {
            // entry used as (ab)c with ab = x, c = y, or a(bc) with a = x, bc = y
            if get(a, b) as usize == x && !check(a, b, y) {
                return false;
            }
            if get(a, b) as usize == y && !check(x, a, b) {
                return false;
            }
        }
    }
    true
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn relabeled(t: &[u8], n: usize, perm: &[usize]) -> Vec<u8> {
    let mut out = vec![0u8; n * n];
    for x in 0..n {
        for y in 0..n {
            out[perm[x] * n + perm[y]] = perm[t[x * n + y] as usize] as u8;
        }
    }
    out
}

fn transposed(t: &[u8], n: usize) -> Vec<u8> {
    (0..n * n).map(|i| t[(i % n) * n + i / n]).collect()
}

fn canonical_table(t: &[u8], n: usize, perms: &[Vec<usize>], anti: bool) -> Vec<u8> {
    let least = |t: &[u8]| {
        perms
            .iter()
            .map(|p| relabeled(t, n, p))
            .min()
            .expect("at least one permutation")
    };
    let form = least(t);
    if anti {
        form.min(least(&transposed(t, n)))
    } else {
        form
    }
}

/// Lexicographically least flattened table over all relabelings.
pub fn canonical_form(s: &FiniteSemigroup) -> FiniteSemigroup {
    canonical_with(s, false)
}

/// As [`canonical_form`], also allowing the opposite semigroup.
pub fn canonical_form_up_to_anti(s: &FiniteSemigroup) -> FiniteSemigroup {
    canonical_with(s, true)
}

fn canonical_with(s: &FiniteSemigroup, anti: bool) -> FiniteSemigroup {
    let n = s.order();
    let t: Vec<u8> = s.table().iter().map(|&v| v as u8).collect();
    to_semigroup(n, &canonical_table(&t, n, &permutations(n), anti))
}
