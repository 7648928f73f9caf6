//! Per-order counts and criterion rates over all semigroups of order `n`.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify, Status};
use crate::enumerate::{enumerate_with_progress, EnumerateError, EnumerateOptions, UpTo};

pub const CSV_HEADER: &str = "n,labeled,iso,p3nilp_fraction,ind_fraction,runtime_ms";

/// Fractions are taken over isomorphism classes.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CensusRecord {
    pub n: usize,
    pub labeled_associative_count: usize,
    pub iso_class_count: usize,
    pub proper_3_nilpotent_count: usize,
    pub ind_flagged_count: usize,
    pub proper_3_nilpotent_fraction: f64,
    pub ind_flagged_fraction: f64,
    pub runtime_ms: u64,
}

impl CensusRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{:.6},{:.6},{}",
            self.n,
            self.labeled_associative_count,
            self.iso_class_count,
            self.proper_3_nilpotent_fraction,
            self.ind_flagged_fraction,
            self.runtime_ms
        )
    }
}

pub fn census(n: usize, options: EnumerateOptions) -> Result<CensusRecord, EnumerateError> {
    census_with_progress(n, options, |_, _| {})
}

pub fn census_with_progress(
    n: usize,
    options: EnumerateOptions,
    progress: impl Fn(usize, usize) + Sync,
) -> Result<CensusRecord, EnumerateError> {
    let start = Instant::now();
    let labeled = enumerate_with_progress(n, UpTo::Labeled, options, &progress)?.len();
    let classes = enumerate_with_progress(n, UpTo::Iso, options, &progress)?;
    let flags: Vec<(bool, bool)> = classes
        .par_iter()
        .map(|s| {
            (
                s.is_proper_k_nilpotent(3),
                classify(s).status == Status::InherentlyNondualisable,
            )
        })
        .collect();
    let p3 = flags.iter().filter(|f| f.0).count();
    let ind = flags.iter().filter(|f| f.1).count();
    let iso = classes.len();
    Ok(CensusRecord {
        n,
        labeled_associative_count: labeled,
        iso_class_count: iso,
        proper_3_nilpotent_count: p3,
        ind_flagged_count: ind,
        proper_3_nilpotent_fraction: p3 as f64 / iso as f64,
        ind_flagged_fraction: ind as f64 / iso as f64,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}
