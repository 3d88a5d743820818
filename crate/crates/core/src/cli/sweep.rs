//! Parameter sweeps: shift the `h` of chosen modules over an integer
//! window and compare the criteria with the matrix oracles row by row.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::criteria::{
    prop31_cyclic_condition, prop32_cocyclic_condition, special_pair, thm23_report, thm33_irreducible,
    thm34_irreducible, CriteriaError, ModuleSpec,
};
use crate::exactalg::Rat;
use crate::yangian::{
    cocyclicity_oracle, cyclicity_oracle, intertwiner_with_cap, irreducible_oracle, module_action_with_cap,
    YangianError,
};

use super::CliError;

/// A comparison run on every sweep row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Thm33,
    Thm34,
    Thm23,
    Oracle,
    IntertwinerRank,
}

impl Check {
    pub const ALL: [Check; 5] = [Check::Thm33, Check::Thm34, Check::Thm23, Check::Oracle, Check::IntertwinerRank];
}

/// A sweep description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepJob {
    /// Module templates; row `t` adds `t` to the `h` of every module listed
    /// in `vary`.
    pub specs: Vec<ModuleSpec>,
    /// 0-based indices of the modules whose `h` is shifted (default: the
    /// first module).
    #[serde(default = "default_vary")]
    pub vary: Vec<usize>,
    /// Inclusive integer window `[a, b]`; empty when `a > b`.
    #[serde(default)]
    pub window: Option<(i64, i64)>,
    /// Checks to run (default: all).
    #[serde(default = "default_checks")]
    pub checks: Vec<Check>,
    /// Dimension cap for realized modules.
    #[serde(default)]
    pub cap: Option<usize>,
}

fn default_vary() -> Vec<usize> {
    vec![0]
}

fn default_checks() -> Vec<Check> {
    Check::ALL.to_vec()
}

/// Parse `a..b` or `a..=b` as the inclusive window `[a, b]`.
pub fn parse_window(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Invalid(format!("window {s:?} is not of the form a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

/// One grid point.  Absent values mean the check was not requested or
/// does not apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub row: usize,
    /// Short descriptions `λ/μ@h` of the shifted modules.
    pub spec_ids: String,
    /// `h` of the first module minus `h` of the second (or `h` of the only
    /// module).
    pub h_diff: Rat,
    pub thm33: Option<bool>,
    pub thm34: Option<bool>,
    /// `h` lies in the non-invertibility set of a (reversed Young, Young)
    /// pair.
    pub thm23_set_hit: Option<bool>,
    pub oracle: Option<bool>,
    pub rank: Option<usize>,
    pub full_rank: Option<bool>,
    /// The zero-set condition guaranteeing that `ζ` is cyclic holds.
    pub prop31: Option<bool>,
    /// The zero-set condition guaranteeing that `ζ` is cocyclic holds.
    pub prop32: Option<bool>,
    pub cyclic: Option<bool>,
    pub cocyclic: Option<bool>,
    /// Every proven relation between the computed columns holds.
    pub agree: bool,
    /// `ok`, or the reason the row was (partly) skipped.
    pub status: String,
}

/// A finished sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepTable {
    pub rows: Vec<SweepRow>,
    /// Number of rows with `agree = false`.
    pub disagreements: usize,
}

/// Output format of [`write_sweep`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum SweepFormat {
    Json,
    Csv,
}

fn spec_id(s: &ModuleSpec) -> String {
    let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    format!("[{}]/[{}]@{}", join(&s.lambda), join(&s.mu), s.h)
}

fn shifted(job: &SweepJob, t: i64) -> Vec<ModuleSpec> {
    job.specs
        .iter()
        .enumerate()
        .map(|(i, s)| {
            if job.vary.contains(&i) {
                s.with_h(&s.h + &Rat::from(t))
            } else {
                s.clone()
            }
        })
        .collect()
}

fn skip_reason(e: &YangianError) -> Option<String> {
    match e {
        YangianError::DimensionCapExceeded { dim, cap } => Some(format!("skipped: dim {dim} > cap {cap}")),
        YangianError::AmbientTooLarge { .. } => Some(format!("skipped: {e}")),
        _ => None,
    }
}

fn compute_row(job: &SweepJob, row: usize, t: i64, cap: usize) -> Result<SweepRow, CliError> {
    let specs = shifted(job, t);
    let wants = |c: Check| job.checks.contains(&c);
    let h_diff = match specs.as_slice() {
        [a, b, ..] => &a.h - &b.h,
        [a] => a.h.clone(),
        [] => Rat::zero(),
    };
    let mut out = SweepRow {
        row,
        spec_ids: specs.iter().map(spec_id).collect::<Vec<_>>().join(" x "),
        h_diff,
        thm33: None,
        thm34: None,
        thm23_set_hit: None,
        oracle: None,
        rank: None,
        full_rank: None,
        prop31: None,
        prop32: None,
        cyclic: None,
        cocyclic: None,
        agree: true,
        status: "ok".into(),
    };
    let mut skipped: Vec<String> = Vec::new();
    if wants(Check::Thm33) {
        out.thm33 = Some(thm33_irreducible(&specs)?);
    }
    if wants(Check::Thm34) {
        out.thm34 = match thm34_irreducible(&specs) {
            Ok(b) => Some(b),
            Err(CriteriaError::NotRectangular { .. }) => None,
            Err(e) => return Err(e.into()),
        };
    }
    if let (true, [a, b]) = (wants(Check::Thm23), specs.as_slice()) {
        if special_pair(a, b).is_ok() {
            out.thm23_set_hit = Some(!thm23_report(a, b)?.result);
        }
    }
    if wants(Check::Oracle) {
        match module_action_with_cap(&specs, cap) {
            Ok(module) => {
                let zeta = module.zeta();
                out.oracle = Some(irreducible_oracle(&module.gens));
                out.prop31 = Some(prop31_cyclic_condition(&specs)?);
                out.prop32 = Some(prop32_cocyclic_condition(&specs)?);
                out.cyclic = Some(cyclicity_oracle(&module.gens, &zeta));
                out.cocyclic = Some(cocyclicity_oracle(&module.gens, &zeta));
            }
            Err(e) => skipped.push(skip_reason(&e).ok_or(e)?),
        }
    }
    if let (true, [a, b]) = (wants(Check::IntertwinerRank), specs.as_slice()) {
        match intertwiner_with_cap(a, b, cap) {
            Ok(r) => {
                let rank = r.rank();
                out.rank = Some(rank);
                out.full_rank = Some(rank == r.dim);
            }
            Err(e) => skipped.push(skip_reason(&e).ok_or(e)?),
        }
    }
    let implies = |p: Option<bool>, q: Option<bool>| !matches!((p, q), (Some(true), Some(false)));
    let equal = |p: Option<bool>, q: Option<bool>| !matches!((p, q), (Some(x), Some(y)) if x != y);
    out.agree = equal(out.thm34, out.oracle)
        && implies(out.thm33, out.oracle)
        && equal(out.thm23_set_hit, out.full_rank.map(|f| !f))
        && implies(out.prop31, out.cyclic)
        && implies(out.prop32, out.cocyclic);
    skipped.dedup();
    if !skipped.is_empty() {
        out.status = skipped.join("; ");
    }
    Ok(out)
}

/// Run a sweep.  Rows are computed in parallel and returned in window
/// order; `cap` overrides the job's own cap.
pub fn run_sweep(job: &SweepJob, window: Option<(i64, i64)>, cap: Option<usize>) -> Result<SweepTable, CliError> {
    if job.specs.is_empty() {
        return Err(CliError::Invalid("sweep needs at least one module".into()));
    }
    for &v in &job.vary {
        if v >= job.specs.len() {
            return Err(CliError::Invalid(format!("vary index {v} out of range")));
        }
    }
    for s in &job.specs {
        s.diagram()?;
    }
    let (a, b) = window
        .or(job.window)
        .ok_or_else(|| CliError::Invalid("no window given".into()))?;
    let cap = cap.or(job.cap).unwrap_or(crate::yangian::DEFAULT_DIM_CAP);
    let offsets: Vec<i64> = if a <= b { (a..=b).collect() } else { Vec::new() };
    let rows: Vec<SweepRow> = offsets
        .par_iter()
        .enumerate()
        .map(|(i, &t)| compute_row(job, i, t, cap))
        .collect::<Result<_, _>>()?;
    let disagreements = rows.iter().filter(|r| !r.agree).count();
    Ok(SweepTable { rows, disagreements })
}

/// Flat CSV record; absent values are empty cells.
#[derive(Serialize)]
struct CsvRow<'a> {
    row: usize,
    spec_ids: &'a str,
    h_diff: String,
    thm33: Option<bool>,
    thm34: Option<bool>,
    thm23_set_hit: Option<bool>,
    oracle: Option<bool>,
    rank: Option<usize>,
    full_rank: Option<bool>,
    prop31: Option<bool>,
    prop32: Option<bool>,
    cyclic: Option<bool>,
    cocyclic: Option<bool>,
    agree: bool,
    status: &'a str,
}

/// Serialize a sweep table.
pub fn write_sweep<W: Write>(table: &SweepTable, format: SweepFormat, out: W) -> Result<(), CliError> {
    match format {
        SweepFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, table)?;
            writeln!(out).map_err(csv::Error::from)?;
        }
        SweepFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if table.rows.is_empty() {
                w.write_record([
                    "row", "spec_ids", "h_diff", "thm33", "thm34", "thm23_set_hit", "oracle", "rank", "full_rank",
                    "prop31", "prop32", "cyclic", "cocyclic", "agree", "status",
                ])?;
            }
            for r in &table.rows {
                w.serialize(CsvRow {
                    row: r.row,
                    spec_ids: &r.spec_ids,
                    h_diff: r.h_diff.to_string(),
                    thm33: r.thm33,
                    thm34: r.thm34,
                    thm23_set_hit: r.thm23_set_hit,
                    oracle: r.oracle,
                    rank: r.rank,
                    full_rank: r.full_rank,
                    prop31: r.prop31,
                    prop32: r.prop32,
                    cyclic: r.cyclic,
                    cocyclic: r.cocyclic,
                    agree: r.agree,
                    status: &r.status,
                })?;
            }
            w.flush().map_err(csv::Error::from)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vector_job() -> SweepJob {
        SweepJob {
            specs: vec![ModuleSpec::vector(2, Rat::zero()), ModuleSpec::vector(2, Rat::zero())],
            vary: vec![0],
            window: Some((-3, 3)),
            checks: Check::ALL.to_vec(),
            cap: None,
        }
    }

    #[test]
    fn vector_pair_window() {
        let t = run_sweep(&vector_job(), None, None).unwrap();
        assert_eq!(t.rows.len(), 7);
        assert_eq!(t.disagreements, 0);
        let reducible: Vec<String> = t
            .rows
            .iter()
            .filter(|r| r.oracle == Some(false))
            .map(|r| r.h_diff.to_string())
            .collect();
        assert_eq!(reducible, vec!["-1", "1"]);
    }

    #[test]
    fn empty_window_and_parsing() {
        let t = run_sweep(&vector_job(), Some((1, 0)), None).unwrap();
        assert!(t.rows.is_empty());
        assert_eq!(parse_window("-3..3").unwrap(), (-3, 3));
        assert_eq!(parse_window("-3..=3").unwrap(), (-3, 3));
        assert!(parse_window("3").is_err());
        let mut buf = Vec::new();
        write_sweep(&t, SweepFormat::Csv, &mut buf).unwrap();
        assert!(String::from_utf8(buf).unwrap().starts_with("row,spec_ids"));
    }

    #[test]
    fn cap_marks_rows_skipped() {
        let t = run_sweep(&vector_job(), Some((0, 0)), Some(2)).unwrap();
        assert!(t.rows[0].status.starts_with("skipped"));
        assert_eq!(t.rows[0].oracle, None);
    }

    #[test]
    fn csv_is_deterministic() {
        let render = || {
            let t = run_sweep(&vector_job(), None, None).unwrap();
            let mut buf = Vec::new();
            write_sweep(&t, SweepFormat::Csv, &mut buf).unwrap();
            buf
        };
        assert_eq!(render(), render());
    }
}
