//! Exhaustive checks of the known results on adjacency dimension.
//!
//! Each check runs over every isomorphism class up to a given order (the
//! [`Universe`]) or over explicit constructions, and returns a
//! [`VerificationReport`] listing any counterexample as graph6. All checks are
//! expected to pass; a failure points at a bug.

mod checks;
mod lists;
mod report;
mod universe;

use std::time::Instant;

use crate::error::Result;

pub use checks::{
    check_adjacency_results, check_diameter_bound, check_dim2_classification, check_extremal, check_extremes,
    check_n_minus_two, check_omega, check_twins, explore_open_question,
};
pub use lists::{class_set, n_minus_two_candidates, Characterizations};
pub use report::{render_json, render_text, Counterexample, TheoremId, VerificationReport, Verdict};
pub use universe::{Analysis, Universe};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest order enumerated exhaustively.
    pub max_n: usize,
    /// Worker threads; `0` uses the global pool.
    pub workers: usize,
    /// Largest path/cycle order checked against the closed formula.
    pub path_max: usize,
    /// Diameters for the extremal construction.
    pub extremal_diameters: Vec<usize>,
    pub extremal_n_max: usize,
    pub explore_diameters: Vec<usize>,
    pub explore_n_max: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 7,
            workers: 0,
            path_max: 12,
            extremal_diameters: vec![5, 7],
            extremal_n_max: 12,
            explore_diameters: vec![3, 4, 5, 6],
            explore_n_max: 10,
        }
    }
}

impl VerifyOptions {
    pub fn with_max_n(max_n: usize) -> Self {
        VerifyOptions {
            max_n,
            ..Self::default()
        }
    }

    /// Adds `D = 10` to the extremal construction check.
    pub fn extended(mut self) -> Self {
        if !self.extremal_diameters.contains(&10) {
            self.extremal_diameters.push(10);
        }
        self.extremal_n_max = self.extremal_n_max.max(12);
        self
    }
}

fn run_one(id: TheoremId, u: &Universe, c: &Characterizations, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = match id {
        TheoremId::Extremes => check_extremes(u, c),
        TheoremId::AdjacencyResults => check_adjacency_results(u, opts.path_max),
        TheoremId::Twins => check_twins(u),
        TheoremId::DiameterBound => check_diameter_bound(u),
        TheoremId::Extremal => check_extremal(&opts.extremal_diameters, opts.extremal_n_max),
        TheoremId::NMinus2 => check_n_minus_two(u, c),
        TheoremId::Omega => check_omega(u, &[1, 2]),
        TheoremId::Dim2Classification => check_dim2_classification(u, c, 6),
        TheoremId::Explore => explore_open_question(u, &opts.explore_diameters, opts.explore_n_max),
    }?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Runs the selected checks, sharing one analysed universe. Reports come back
/// in the order of [`TheoremId::ALL`].
pub fn run(ids: &[TheoremId], opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let universe = Universe::build(opts.max_n, opts.workers)?;
    let characterizations = Characterizations::standard(opts.max_n)?;
    let mut ids = ids.to_vec();
    ids.sort();
    ids.dedup();
    ids.into_iter()
        .map(|id| run_one(id, &universe, &characterizations, opts))
        .collect()
}

fn single(id: TheoremId, max_n: usize) -> Result<VerificationReport> {
    let mut reports = run(&[id], &VerifyOptions::with_max_n(max_n))?;
    Ok(reports.remove(0))
}

pub fn verify_dim1_and_dimn1(max_n: usize) -> Result<VerificationReport> {
    single(TheoremId::Extremes, max_n)
}

pub fn verify_lemma_adjacency_results(max_n: usize) -> Result<VerificationReport> {
    single(TheoremId::AdjacencyResults, max_n)
}

pub fn verify_twin_lemma(max_n: usize) -> Result<VerificationReport> {
    single(TheoremId::Twins, max_n)
}

pub fn verify_diameter_bound(max_n: usize) -> Result<VerificationReport> {
    single(TheoremId::DiameterBound, max_n)
}

pub fn verify_extremal_construction(diameters: &[usize], n_max: usize) -> Result<VerificationReport> {
    check_extremal(diameters, n_max)
}

pub fn verify_nminus2_characterization(max_n: usize) -> Result<VerificationReport> {
    single(TheoremId::NMinus2, max_n)
}

pub fn verify_population_bound_and_omega(k_list: &[usize]) -> Result<VerificationReport> {
    let universe = Universe::build(7, 0)?;
    check_omega(&universe, k_list)
}

pub fn verify_dim2_classification(n: usize) -> Result<VerificationReport> {
    if !(1..=6).contains(&n) {
        return Err(crate::Error::InvalidParameters(format!("classification covers orders 1..=6, got {n}")));
    }
    let universe = Universe::build(n, 0)?;
    check_dim2_classification(&universe, &Characterizations::standard(n)?, n)
}

pub fn verify_open_question(diameters: &[usize], n_max: usize) -> Result<VerificationReport> {
    let universe = Universe::build(7, 0)?;
    explore_open_question(&universe, diameters, n_max)
}
