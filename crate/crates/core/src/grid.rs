//! Sweeps of named checks over a rectangle of `(n, k)` values.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::TableCache;
use crate::pairs::{
    exit_code_for, make_pair, CheckId, CheckOutcome, CheckStatus, PairContext,
    REPORT_SCHEMA_VERSION,
};
use crate::render::OutputFormat;
use crate::schubert::Engine;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct GridRequest {
    pub n_range: (u32, u32),
    pub k_range: (u32, u32),
    pub checks: Vec<CheckId>,
    pub output_format: OutputFormat,
    pub parallelism: usize,
    pub cache: Option<TableCache>,
}

impl GridRequest {
    pub fn validate(&self) -> Result<()> {
        let (n0, n1) = self.n_range;
        let (k0, k1) = self.k_range;
        if n0 > n1 {
            return Err(Error::InvalidParameter(format!("empty n range [{n0}, {n1}]")));
        }
        if k0 > k1 {
            return Err(Error::InvalidParameter(format!("empty k range [{k0}, {k1}]")));
        }
        if self.parallelism == 0 {
            return Err(Error::InvalidParameter("parallelism must be positive".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::InvalidParameter("no checks requested".into()));
        }
        Ok(())
    }

    /// Pairs in the rectangle that pass [`make_pair`], in `(n, k)` order.
    pub fn pairs(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for n in self.n_range.0..=self.n_range.1 {
            for k in self.k_range.0..=self.k_range.1 {
                if make_pair(n, k).is_ok() {
                    out.push((n, k));
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridRow {
    pub n: u32,
    pub k: u32,
    /// `fail` if any check failed, otherwise `pass`.
    pub status: CheckStatus,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSummary {
    pub rows: usize,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridReport {
    pub schema_version: u32,
    pub n_range: [u32; 2],
    pub k_range: [u32; 2],
    pub checks: Vec<CheckId>,
    pub rows: Vec<GridRow>,
    pub summary: GridSummary,
}

impl GridReport {
    pub fn exit_code(&self) -> i32 {
        exit_code_for(self.rows.iter().flat_map(|r| &r.checks))
    }
}

fn run_row(n: u32, k: u32, checks: &[CheckId]) -> GridRow {
    let ctx = PairContext::new(n, k).expect("pairs are filtered through make_pair");
    let checks: Vec<CheckOutcome> = checks.iter().map(|&id| ctx.run(id)).collect();
    let status = if checks.iter().any(|c| c.status == CheckStatus::Fail) {
        CheckStatus::Fail
    } else {
        CheckStatus::Pass
    };
    GridRow {
        n,
        k,
        status,
        checks,
    }
}

pub fn run_grid(req: &GridRequest) -> Result<GridReport> {
    req.validate()?;
    let mut seen = BTreeSet::new();
    let checks: Vec<CheckId> = req.checks.iter().copied().filter(|c| seen.insert(*c)).collect();
    let pairs = req.pairs();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(req.parallelism)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?;

    let rows = pool.install(|| -> Result<Vec<GridRow>> {
        if let Some(cache) = &req.cache {
            let ns: BTreeSet<u32> = pairs.iter().map(|&(n, _)| n).collect();
            let mut engines = vec![Engine::PieriGiambelli];
            if checks.contains(&CheckId::EngineAgreement) {
                engines.push(Engine::LittlewoodRichardson);
            }
            let jobs: Vec<(u32, Engine)> = ns
                .iter()
                .flat_map(|&n| engines.iter().map(move |&e| (n, e)))
                .collect();
            jobs.par_iter()
                .try_for_each(|&(n, e)| cache.warm(n, e).map(|_| ()))?;
        }
        Ok(pairs
            .par_iter()
            .map(|&(n, k)| run_row(n, k, &checks))
            .collect())
    })?;

    let mut summary = GridSummary {
        rows: rows.len(),
        ..GridSummary::default()
    };
    for c in rows.iter().flat_map(|r| &r.checks) {
        match c.status {
            CheckStatus::Pass => summary.pass += 1,
            CheckStatus::Fail => summary.fail += 1,
            CheckStatus::Skip => summary.skip += 1,
        }
    }
    Ok(GridReport {
        schema_version: REPORT_SCHEMA_VERSION,
        n_range: [req.n_range.0, req.n_range.1],
        k_range: [req.k_range.0, req.k_range.1],
        checks,
        rows,
        summary,
    })
}
