//! Report builders behind the `yangtensor` command-line tool.
//!
//! Every command reads JSON, returns a serializable report and maps its
//! failures to a process exit code: 0 success, 2 invalid input,
//! 3 internal inconsistency.

mod sweep;

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::criteria::{
    drinfeld_roots, thm23_report, thm33_report, thm34_report, CriteriaError, CriterionReport, ModuleSpec,
};
use crate::diagrams::{column_bottom_contents, enumerate_gz_schemes, enumerate_ssyt, DiagramError};
use crate::exactalg::{Rat, RatMatrix};
use crate::yangian::{
    check_intertwining, cocyclicity_oracle, cyclicity_oracle, intertwiner_with_cap, irreducible_oracle_detailed,
    is_singular, module_action_with_cap, OracleMethod, YangianError,
};

pub use sweep::{parse_window, run_sweep, write_sweep, Check, SweepFormat, SweepJob, SweepRow, SweepTable};

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code for invalid input (parse, validation, cap).
pub const EXIT_INVALID: i32 = 2;
/// Exit code for an internal inconsistency.
pub const EXIT_INCONSISTENT: i32 = 3;

/// Name of the environment variable holding the default dimension cap.
pub const DIM_CAP_ENV: &str = "YANGTENSOR_DIM_CAP";

/// Errors surfaced by the command-line layer.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("CSV output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Criteria(#[from] CriteriaError),
    #[error(transparent)]
    Yangian(#[from] YangianError),
    #[error("inconsistency: {0}")]
    Inconsistent(String),
}

impl CliError {
    /// Process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Inconsistent(_) | CliError::Yangian(YangianError::Inconsistent(_)) => EXIT_INCONSISTENT,
            _ => EXIT_INVALID,
        }
    }
}

/// Read a file to a string.
pub fn read_input(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// A module description where `h` may be omitted (it defaults to 0).
#[derive(Clone, Debug, Deserialize)]
struct LooseSpec {
    lambda: Vec<i64>,
    #[serde(default)]
    mu: Vec<i64>,
    #[serde(rename = "N")]
    n: usize,
    #[serde(default)]
    h: Rat,
}

impl From<LooseSpec> for ModuleSpec {
    fn from(s: LooseSpec) -> Self {
        ModuleSpec::new(&s.lambda, &s.mu, s.n, s.h)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(LooseSpec),
    Many(Vec<LooseSpec>),
}

/// Parse a JSON module list; a single object is read as a one-element list.
/// Every spec is validated as a diagram.
pub fn parse_specs(text: &str) -> Result<Vec<ModuleSpec>, CliError> {
    let specs: Vec<ModuleSpec> = match serde_json::from_str::<OneOrMany>(text)? {
        OneOrMany::One(s) => vec![s.into()],
        OneOrMany::Many(v) => v.into_iter().map(Into::into).collect(),
    };
    if specs.is_empty() {
        return Err(CliError::Invalid("empty module list".into()));
    }
    for s in &specs {
        s.diagram()?;
        if s.n != specs[0].n {
            return Err(CriteriaError::MismatchedRank(specs[0].n, s.n).into());
        }
    }
    Ok(specs)
}

/// Combinatorial data of one module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramReport {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    #[serde(rename = "N")]
    pub n: usize,
    pub h: Rat,
    /// Boxes `(i, j)` in row-reading order.
    pub boxes: Vec<(i64, i64)>,
    pub contents: Vec<i64>,
    /// Bottom contents of all columns, sorted.
    pub column_bottom_contents: Vec<i64>,
    /// Bottom contents of the columns of each height.
    pub column_bottom_contents_by_height: BTreeMap<usize, Vec<i64>>,
    pub ssyt_count: usize,
    pub gz_scheme_count: usize,
    pub drinfeld_roots: BTreeMap<usize, Vec<Rat>>,
}

/// Build the diagram report of the first module of `specs`.
pub fn cmd_diagram(spec: &ModuleSpec) -> Result<DiagramReport, CliError> {
    let d = spec.diagram()?;
    let boxes: Vec<(i64, i64)> = d.boxes().to_vec();
    let contents = boxes.iter().map(|(i, j)| j - i).collect();
    let by_height: BTreeMap<usize, Vec<i64>> = (1..=d.n())
        .map(|k| (k, column_bottom_contents(&d, k)))
        .filter(|(_, v)| !v.is_empty())
        .collect();
    let mut all: Vec<i64> = by_height.values().flatten().copied().collect();
    all.sort_unstable();
    Ok(DiagramReport {
        lambda: d.lambda().to_vec(),
        mu: d.mu().to_vec(),
        n: d.n(),
        h: spec.h.clone(),
        boxes,
        contents,
        column_bottom_contents: all,
        column_bottom_contents_by_height: by_height,
        ssyt_count: enumerate_ssyt(&d).len(),
        gz_scheme_count: enumerate_gz_schemes(d.lambda(), d.mu(), d.n())?.len(),
        drinfeld_roots: drinfeld_roots(spec)?.roots,
    })
}

/// Which combinatorial criterion `check` evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    Thm33,
    Thm34,
    Thm23,
}

/// Evaluate one criterion on a module list.
pub fn cmd_check(specs: &[ModuleSpec], criterion: Criterion) -> Result<CriterionReport, CliError> {
    Ok(match criterion {
        Criterion::Thm33 => thm33_report(specs)?,
        Criterion::Thm34 => thm34_report(specs)?,
        Criterion::Thm23 => match specs {
            [a, b] => thm23_report(a, b)?,
            _ => return Err(CliError::Invalid(format!("--thm23 needs exactly 2 modules, got {}", specs.len()))),
        },
    })
}

/// Brute-force verdicts on the realized tensor product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub dim: usize,
    pub irreducible: bool,
    pub method: OracleMethod,
    /// `ζ` is annihilated by all `C_k(u)`.
    pub singular: bool,
    /// `ζ` generates the module.
    pub cyclic: bool,
    /// `ζ` lies in every non-zero submodule.
    pub cocyclic: bool,
}

/// Realize the tensor product and run the oracles.
pub fn cmd_oracle(specs: &[ModuleSpec], cap: usize) -> Result<OracleReport, CliError> {
    let module = module_action_with_cap(specs, cap)?;
    let zeta = module.zeta();
    let verdict = irreducible_oracle_detailed(&module.gens);
    Ok(OracleReport {
        dim: module.dim(),
        irreducible: verdict.irreducible,
        method: verdict.method,
        singular: is_singular(&module.gens, &zeta)?,
        cyclic: cyclicity_oracle(&module.gens, &zeta),
        cocyclic: cocyclicity_oracle(&module.gens, &zeta),
    })
}

/// The intertwiner of a module pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntertwinerReport {
    pub dim: usize,
    /// Laurent order at `z = 0`.
    pub order: i64,
    pub rank: usize,
    pub invertible: bool,
    /// The intertwining identity was verified exactly.
    pub intertwines: bool,
    /// Rows of the matrix, present when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<Rat>>>,
}

fn matrix_rows(m: &RatMatrix) -> Vec<Vec<Rat>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)].clone()).collect()).collect()
}

/// Build and verify the intertwiner of exactly two modules.
pub fn cmd_intertwiner(specs: &[ModuleSpec], cap: usize, with_matrix: bool) -> Result<IntertwinerReport, CliError> {
    let [a, b] = specs else {
        return Err(CliError::Invalid(format!("intertwiner needs exactly 2 modules, got {}", specs.len())));
    };
    let r = intertwiner_with_cap(a, b, cap)?;
    let intertwines = check_intertwining(&r, a, b)?;
    if !intertwines {
        return Err(CliError::Inconsistent("the intertwiner fails the intertwining identity".into()));
    }
    Ok(IntertwinerReport {
        dim: r.dim,
        order: r.order,
        rank: r.rank(),
        invertible: r.is_invertible(),
        intertwines,
        matrix: with_matrix.then(|| matrix_rows(&r.matrix)),
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
