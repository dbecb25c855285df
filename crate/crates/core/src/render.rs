//! Report serialization: JSON, Markdown and CSV.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::grid::GridReport;
use crate::pairs::{PairReport, TranscendentalBasis};
use crate::ring::TPoly;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Markdown,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::InvalidParameter(format!(
                "unknown format `{s}`; expected json, markdown or csv"
            ))),
        }
    }
}

fn json<T: serde::Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Error::IdentityViolated(format!("serializing report: {e}")))
}

fn tuple(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn betti(p: &TPoly) -> String {
    tuple(&p.betti_numbers())
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

fn basis_label(b: TranscendentalBasis) -> &'static str {
    match b {
        TranscendentalBasis::OddDimensionUnconditional => {
            "odd dimension: variable cohomology is transcendental unconditionally"
        }
        TranscendentalBasis::EvenDimensionConditionalOnNl => {
            "even dimension: variable cohomology is transcendental only under (NL)"
        }
    }
}

fn csv_error(e: impl std::fmt::Display) -> Error {
    Error::IdentityViolated(format!("writing csv: {e}"))
}

fn to_json_value<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default()
}

pub fn render_pair(r: &PairReport, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => json(r),
        OutputFormat::Markdown => Ok(pair_markdown(r)),
        OutputFormat::Csv => pair_csv(r),
    }
}

fn pair_markdown(r: &PairReport) -> String {
    let p = &r.pair;
    let mut s = String::new();
    let _ = writeln!(s, "# Pair (n, k) = ({}, {})\n", p.n, p.k);
    let _ = writeln!(
        s,
        "dim X = {}, dim Y = {}, s = {}, m = {}\n",
        p.dim_x, p.dim_y, p.s, p.m
    );
    let _ = writeln!(s, "## Betti numbers\n");
    let _ = writeln!(s, "| j | b_j(X) | b_j(Y) |");
    let _ = writeln!(s, "|---|---|---|");
    let top = 2 * p.dim_x.max(p.dim_y) as u32;
    for j in 0..=top {
        let _ = writeln!(
            s,
            "| {j} | {} | {} |",
            r.poincare_x.betti(j),
            r.poincare_y.betti(j)
        );
    }
    let _ = writeln!(s, "\nP_X = {}  \nP_Y = {}\n", betti(&r.poincare_x), betti(&r.poincare_y));
    let _ = writeln!(s, "## Invariants\n");
    let _ = writeln!(s, "- variable Betti number of X: {}", r.variable_betti);
    let _ = writeln!(s, "- Euler characteristic of X: {}", r.hodge.euler_char);
    let _ = writeln!(s, "- χ_y(X) coefficients: {}", tuple(&r.hodge.chi_y));
    let _ = writeln!(s, "- middle Hodge numbers of X: {}", tuple(&r.hodge.middle_hodge));
    let _ = writeln!(s, "- (NL): {}", to_json_value(&r.nl_status));
    let _ = writeln!(s, "- main theorem: {}", to_json_value(&r.main_theorem));
    let _ = writeln!(s, "- transcendental cohomology: {}\n", basis_label(r.transcendental_basis));
    let _ = writeln!(s, "## Checks\n");
    let _ = writeln!(s, "| check | status | detail |");
    let _ = writeln!(s, "|---|---|---|");
    for c in &r.checks {
        let _ = writeln!(s, "| {} | {} | {} |", c.name, c.status, cell(&c.detail));
    }
    if !r.findings.is_empty() {
        let _ = writeln!(s, "\n## Findings\n");
        for f in &r.findings {
            let verdict = if f.agrees { "consistent" } else { "DISCREPANCY" };
            let scope = if f.up_to_tate { " (up to Tate summands)" } else { "" };
            let _ = writeln!(
                s,
                "- {verdict}{scope}: {}; literal {} vs derived {}",
                f.statement,
                betti(&f.literal),
                betti(&f.derived)
            );
            if !f.note.is_empty() {
                let _ = writeln!(s, "  - {}", f.note);
            }
        }
    }
    s
}

fn pair_csv(r: &PairReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let p = &r.pair;
    let mut row = |a: &str, b: String| w.write_record([a, &b]).map_err(csv_error);
    row("field", "value".into())?;
    row("schema_version", r.schema_version.to_string())?;
    row("n", p.n.to_string())?;
    row("k", p.k.to_string())?;
    row("dim_x", p.dim_x.to_string())?;
    row("dim_y", p.dim_y.to_string())?;
    row("s", p.s.to_string())?;
    row("m", p.m.to_string())?;
    row("poincare_x", betti(&r.poincare_x))?;
    row("poincare_y", betti(&r.poincare_y))?;
    row("variable_betti", r.variable_betti.to_string())?;
    row("euler_char", r.hodge.euler_char.to_string())?;
    row("chi_y", tuple(&r.hodge.chi_y))?;
    row("middle_hodge", tuple(&r.hodge.middle_hodge))?;
    row("nl_status", to_json_value(&r.nl_status))?;
    row("main_theorem", to_json_value(&r.main_theorem))?;
    row("transcendental_basis", to_json_value(&r.transcendental_basis))?;
    for c in &r.checks {
        row(&format!("check:{}", c.name), c.status.to_string())?;
    }
    for (i, f) in r.findings.iter().enumerate() {
        let verdict = if f.agrees { "consistent" } else { "discrepancy" };
        row(&format!("finding:{i}"), format!("{verdict}: {}", f.statement))?;
    }
    finish(w)
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(csv_error)?;
    String::from_utf8(bytes).map_err(csv_error)
}

pub fn render_grid(r: &GridReport, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => json(r),
        OutputFormat::Markdown => Ok(grid_markdown(r)),
        OutputFormat::Csv => grid_csv(r),
    }
}

fn grid_markdown(r: &GridReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "# Grid n ∈ [{}, {}], k ∈ [{}, {}]\n",
        r.n_range[0], r.n_range[1], r.k_range[0], r.k_range[1]
    );
    let sm = &r.summary;
    let _ = writeln!(
        s,
        "{} rows; checks: {} pass, {} fail, {} skip\n",
        sm.rows, sm.pass, sm.fail, sm.skip
    );
    if r.rows.is_empty() {
        return s;
    }
    let names: Vec<&str> = r.checks.iter().map(|c| c.name()).collect();
    let _ = writeln!(s, "| n | k | status | {} |", names.join(" | "));
    let _ = writeln!(s, "|---|---|---|{}", "---|".repeat(names.len()));
    for row in &r.rows {
        let statuses: Vec<String> = row.checks.iter().map(|c| c.status.to_string()).collect();
        let _ = writeln!(s, "| {} | {} | {} | {} |", row.n, row.k, row.status, statuses.join(" | "));
    }
    let failures: Vec<_> = r
        .rows
        .iter()
        .flat_map(|row| row.checks.iter().map(move |c| (row, c)))
        .filter(|(_, c)| c.status == crate::pairs::CheckStatus::Fail)
        .collect();
    if !failures.is_empty() {
        let _ = writeln!(s, "\n## Failures\n");
        for (row, c) in failures {
            let _ = writeln!(s, "- ({}, {}) {}: {}", row.n, row.k, c.name, c.detail);
        }
    }
    s
}

fn grid_csv(r: &GridReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["n".to_string(), "k".into(), "status".into()];
    header.extend(r.checks.iter().map(|c| c.name().to_string()));
    w.write_record(&header).map_err(csv_error)?;
    for row in &r.rows {
        let mut rec = vec![row.n.to_string(), row.k.to_string(), row.status.to_string()];
        rec.extend(row.checks.iter().map(|c| c.status.to_string()));
        w.write_record(&rec).map_err(csv_error)?;
    }
    finish(w)
}
