use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};
use stanley_core::{ClassicalPoset, Error, MatrixKind, Multiset, NatMatrix, Partition, SemistandardTableau};
use stanley_graphs::{count_tensor_invariants, graded_dimensions_by_graphs, GraphGroup, Limits};
use stanley_lattice::{enumerate_facets, enumerate_painted_facets, Facet};
use stanley_rsk::{peel, rsk_gl, rsk_gl_inverse, rsk_o, rsk_o_inverse, rsk_sp, rsk_sp_inverse, PeelDecomposition, TableauPair};
use stanley_series::{
    bernstein_degree, gorenstein_check, hilbert_gl_covariants, hilbert_invariants, hilbert_o_covariants_wedge,
    hilbert_o_covariants_wedge_painted, hilbert_o_semiinvariants, hilbert_sp_covariants, howe_weight, Group,
    RationalSeries, SemiForm,
};
use stanley_wallach::{shelled_facets, wallach_series, RootPoset, WallachPair};

use crate::checks;

pub const EXIT_FAILED: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "stanley", version, about = "Hilbert series of classical invariant rings by lattice-path enumeration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hilbert series of an invariant or semiinvariant ring.
    Series(SeriesArgs),
    /// Hilbert series of a module of covariants.
    Covariants(CovariantArgs),
    /// Hilbert series of a simply-laced Wallach representation.
    Wallach(WallachArgs),
    /// List the facets of a k-th order complex with their corners.
    Facets(FacetArgs),
    /// Run RSK on a tableau, a tableau pair or a matrix, with the peel decomposition.
    Rsk(RskArgs),
    /// Count basis graphs degree by degree, or tensor invariants.
    Oracle(OracleArgs),
    /// Run the reference fixture suite.
    CheckAll(CheckAllArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum GroupName {
    Gl,
    Sl,
    O,
    So,
    Sp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum SemiArg {
    Nonpure,
    Pure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum PairName {
    D,
    E6,
    E7,
}

#[derive(Debug, Args, Serialize)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args, Serialize)]
struct Shape {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Debug, Args, Serialize)]
struct Expansion {
    /// Also print series coefficients up to this degree.
    #[arg(long)]
    expand: Option<usize>,
    /// Cross-check the result against an independent computation.
    #[arg(long)]
    oracle: bool,
    /// Highest degree compared by --oracle.
    #[arg(long, default_value_t = 8)]
    oracle_degree: usize,
}

#[derive(Debug, Args, Serialize)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    group: GroupName,
    #[command(flatten)]
    #[serde(flatten)]
    shape: Shape,
    /// Orthogonal semiinvariants in the given form instead of invariants.
    #[arg(long, value_enum)]
    semi: Option<SemiArg>,
    #[command(flatten)]
    #[serde(flatten)]
    expansion: Expansion,
    #[command(flatten)]
    #[serde(skip)]
    output: Output,
}

#[derive(Debug, Args, Serialize)]
struct CovariantArgs {
    #[arg(long, value_enum)]
    group: GroupName,
    #[command(flatten)]
    #[serde(flatten)]
    shape: Shape,
    /// Highest weight as a comma list (vector side for GL).
    #[arg(long, value_delimiter = ',')]
    sigma: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    sigma_plus: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    sigma_minus: Vec<usize>,
    /// Exterior power for orthogonal covariants.
    #[arg(long)]
    m: Option<usize>,
    /// Use painted facets instead of bins (orthogonal only).
    #[arg(long)]
    painted: bool,
    #[command(flatten)]
    #[serde(flatten)]
    expansion: Expansion,
    #[command(flatten)]
    #[serde(skip)]
    output: Output,
}

#[derive(Debug, Args, Serialize)]
struct WallachArgs {
    #[arg(long, value_enum)]
    pair: PairName,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long)]
    expand: Option<usize>,
    /// Include every facet with its restriction set.
    #[arg(long)]
    facets: bool,
    #[command(flatten)]
    #[serde(skip)]
    output: Output,
}

#[derive(Debug, Args, Serialize)]
struct FacetArgs {
    #[arg(long, value_enum)]
    group: GroupName,
    #[command(flatten)]
    #[serde(flatten)]
    shape: Shape,
    /// Number of painted diagonal endpoints (orthogonal only).
    #[arg(long)]
    painted: Option<usize>,
    #[command(flatten)]
    #[serde(skip)]
    output: Output,
}

#[derive(Debug, Args, Serialize)]
struct RskArgs {
    #[arg(long, value_enum, default_value = "gl")]
    group: GroupName,
    /// JSON tableau rows, or {"recording": rows, "insertion": rows} for gl.
    #[arg(long, conflicts_with = "matrix")]
    tableau: Option<String>,
    /// JSON matrix rows.
    #[arg(long)]
    matrix: Option<String>,
    /// Alphabet bounds; default to the largest entry.
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    #[serde(skip)]
    output: Output,
}

#[derive(Debug, Args, Serialize)]
struct OracleArgs {
    #[arg(long, value_enum)]
    group: GroupName,
    #[command(flatten)]
    #[serde(flatten)]
    shape: Shape,
    /// Count graded basis graphs up to this degree.
    #[arg(long, default_value_t = 8)]
    degree: usize,
    /// Count tensor invariants instead (p, q or n copies, each once).
    #[arg(long)]
    tensor: bool,
    #[command(flatten)]
    #[serde(skip)]
    output: Output,
}

#[derive(Debug, Args, Serialize)]
struct CheckAllArgs {
    /// Run only these criteria (1-6).
    #[arg(long, value_delimiter = ',')]
    only: Vec<usize>,
    #[command(flatten)]
    #[serde(skip)]
    output: Output,
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(Error),
    Other(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Other(e.into())
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

#[derive(Debug, Serialize)]
struct CheckResult {
    name: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

impl CheckResult {
    fn from_outcome(name: impl Into<String>, r: checks::Outcome) -> Self {
        CheckResult { name: name.into(), passed: r.is_ok(), detail: r.err() }
    }
}

/// The answer to one request: JSON payload, pretty text and cross-checks.
struct Response {
    result: Value,
    pretty: Vec<String>,
    checks: Vec<CheckResult>,
}

impl Response {
    fn new(result: Value, pretty: impl Into<String>) -> Self {
        Response { result, pretty: vec![pretty.into()], checks: Vec::new() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn need(v: Option<usize>, flag: &str, what: &str) -> Outcome<usize> {
    v.ok_or_else(|| usage(format!("--{flag} is required for {what}")))
}

fn group_of(name: GroupName, s: &Shape) -> Outcome<Group> {
    let what = format!("--group {}", format!("{name:?}").to_lowercase());
    Ok(match name {
        GroupName::Gl => Group::Gl { p: need(s.p, "p", &what)?, q: need(s.q, "q", &what)? },
        GroupName::Sl => Group::Sl { p: need(s.p, "p", &what)?, q: need(s.q, "q", &what)? },
        GroupName::O => Group::O { n: need(s.n, "n", &what)? },
        GroupName::So => Group::So { n: need(s.n, "n", &what)? },
        GroupName::Sp => Group::Sp { n: need(s.n, "n", &what)? },
    })
}

fn graph_group(g: Group) -> GraphGroup {
    match g {
        Group::Gl { p, q } => GraphGroup::Gl { p, q },
        Group::Sl { p, q } => GraphGroup::Sl { p, q },
        Group::O { n } => GraphGroup::O { n },
        Group::So { n } => GraphGroup::So { n },
        Group::Sp { n } => GraphGroup::Sp { n },
    }
}

/// Integers as JSON numbers when they fit, strings otherwise.
fn big_json(x: &BigInt) -> Value {
    i64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from)
}

fn coeffs_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big_json).collect())
}

fn coeffs_text(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn series_payload(s: &RationalSeries) -> Value {
    let reduced = s.reduce();
    let mut out = json!({
        "series": reduced.to_json(true),
        "display": reduced.to_string(),
    });
    if !s.is_zero() {
        out["gorenstein"] = json!(gorenstein_check(s));
        if let Ok(d) = bernstein_degree(s) {
            out["bernstein_degree"] = big_json(&d);
        }
    }
    out
}

fn add_expansion(resp: &mut Response, s: &RationalSeries, expand: Option<usize>) {
    if let Some(top) = expand {
        let c = s.expand(top);
        resp.result["coefficients"] = coeffs_json(&c);
        resp.pretty.push(format!("coefficients: {}", coeffs_text(&c)));
    }
}

fn cmd_series(a: &SeriesArgs) -> Outcome<Response> {
    let group = group_of(a.group, &a.shape)?;
    let k = a.shape.k;
    let (series, terms) = match a.semi {
        Some(form) => {
            let Group::O { n } = group else {
                return Err(usage("--semi applies to --group o only"));
            };
            let form = if form == SemiArg::Pure { SemiForm::Pure } else { SemiForm::Nonpure };
            (hilbert_o_semiinvariants(k, n, form)?, None)
        }
        None => {
            let d = hilbert_invariants(group, k)?;
            (d.series(), Some(d.len()))
        }
    };
    let mut result = series_payload(&series);
    result["group"] = serde_json::to_value(group)?;
    if let Some(t) = terms {
        result["stanley_terms"] = json!(t);
    }
    let mut resp = Response::new(result, series.reduce().to_string());
    add_expansion(&mut resp, &series, a.expansion.expand);
    if a.expansion.oracle {
        if a.semi.is_some() {
            let n = a.shape.n.unwrap_or(0);
            let nonpure = hilbert_o_semiinvariants(k, n, SemiForm::Nonpure)?;
            let pure = hilbert_o_semiinvariants(k, n, SemiForm::Pure)?;
            let r = if nonpure == pure { Ok(()) } else { Err(format!("nonpure {nonpure} vs pure {pure}")) };
            resp.checks.push(CheckResult::from_outcome("nonpure and pure forms agree", r));
        } else {
            let limits = Limits::from_env();
            let d = a.expansion.oracle_degree;
            let r = checks::compare_with_graphs(group, k, d, &limits);
            resp.checks.push(CheckResult::from_outcome(format!("basis graphs up to degree {d}"), r));
        }
    }
    Ok(resp)
}

fn partition(v: &[usize], flag: &str) -> Outcome<Partition> {
    Partition::new(v.to_vec()).map_err(|e| usage(format!("--{flag}: {e}")))
}

fn cmd_covariants(a: &CovariantArgs) -> Outcome<Response> {
    let k = a.shape.k;
    let sigma = partition(&a.sigma, "sigma")?;
    let (series, extra, chain_check) = match a.group {
        GroupName::Gl => {
            let group = group_of(a.group, &a.shape)?;
            let Group::Gl { p, q } = group else { unreachable!() };
            let mut plus = partition(&a.sigma_plus, "sigma-plus")?;
            let minus = partition(&a.sigma_minus, "sigma-minus")?;
            if !sigma.is_empty() {
                if !plus.is_empty() {
                    return Err(usage("give either --sigma or --sigma-plus, not both"));
                }
                plus = sigma;
            }
            let c = hilbert_gl_covariants(k, p, q, &plus, &minus)?;
            let weight = howe_weight(group, k, &plus, &minus)?;
            let extra = json!({"bin_sizes": c.bin_sizes(), "chains": c.chain_count(), "highest_weight": weight});
            let (sig, side) = if minus.is_empty() { (plus, q) } else { (minus, p) };
            let want = stanley_core::gl_module_dim(&sig, side);
            let r = if want == c.chain_count().into() { Ok(()) } else { Err(format!("{} chains, expected {want}", c.chain_count())) };
            (c.series, extra, Some(r))
        }
        GroupName::O => {
            let n = need(a.shape.n, "n", "--group o")?;
            let m = need(a.m, "m", "orthogonal covariants")?;
            if a.painted {
                (hilbert_o_covariants_wedge_painted(k, n, m)?, json!({}), None)
            } else {
                let c = hilbert_o_covariants_wedge(k, n, m)?;
                let extra = json!({"bin_sizes": c.bin_sizes(), "chains": c.chain_count()});
                (c.series, extra, None)
            }
        }
        GroupName::Sp => {
            let n = need(a.shape.n, "n", "--group sp")?;
            let c = hilbert_sp_covariants(k, n, &sigma)?;
            let weight = howe_weight(Group::Sp { n }, k, &sigma, &Partition::empty())?;
            let extra = json!({"bin_sizes": c.bin_sizes(), "chains": c.chain_count(), "highest_weight": weight});
            let want = stanley_core::gl_module_dim(&sigma, n);
            let r = if want == c.chain_count().into() { Ok(()) } else { Err(format!("{} chains, expected {want}", c.chain_count())) };
            (c.series, extra, Some(r))
        }
        GroupName::Sl | GroupName::So => {
            return Err(Failure::Domain(Error::Unsupported("covariants are available for gl, o and sp".into())))
        }
    };
    let mut result = series_payload(&series);
    if let (Value::Object(dst), Value::Object(src)) = (&mut result, extra) {
        dst.extend(src);
    }
    let mut resp = Response::new(result, series.reduce().to_string());
    add_expansion(&mut resp, &series, a.expansion.expand);
    if a.expansion.oracle {
        if let Some(r) = chain_check {
            resp.checks.push(CheckResult::from_outcome("chain count equals module dimension", r));
        }
        if a.group == GroupName::O {
            let (n, m) = (a.shape.n.unwrap_or(0), a.m.unwrap_or(0));
            let other = if a.painted {
                hilbert_o_covariants_wedge(k, n, m)?.series
            } else {
                hilbert_o_covariants_wedge_painted(k, n, m)?
            };
            let r = if other == series { Ok(()) } else { Err(format!("other form gives {other}")) };
            resp.checks.push(CheckResult::from_outcome("bin and painted forms agree", r));
        }
    }
    Ok(resp)
}

fn cmd_wallach(a: &WallachArgs) -> Outcome<Response> {
    let pair = match a.pair {
        PairName::D => WallachPair::D { n: need(a.n, "n", "--pair d")? },
        PairName::E6 => WallachPair::E6,
        PairName::E7 => WallachPair::E7,
    };
    let series = wallach_series(pair, a.k)?;
    let poset = RootPoset::new(pair)?;
    let facets = shelled_facets(&poset, a.k);
    let mut result = series_payload(&series);
    result["pair"] = json!(pair.to_string());
    result["facet_count"] = json!(facets.len());
    result["facet_size"] = json!(facets.first().map_or(0, |f| f.cells.len()));
    if a.facets {
        result["facets"] = facets
            .iter()
            .map(|f| json!({"cells": f.cells, "corners": f.corners}))
            .collect::<Vec<_>>()
            .into();
    }
    let mut resp = Response::new(result, series.reduce().to_string());
    add_expansion(&mut resp, &series, a.expand);
    Ok(resp)
}

#[derive(Serialize)]
struct FacetOut<'a> {
    paths: &'a [Vec<(usize, usize)>],
    corners: &'a [(usize, usize)],
    painted: &'a [usize],
}

fn cmd_facets(a: &FacetArgs) -> Outcome<Response> {
    let k = a.shape.k;
    let poset = match group_of(a.group, &a.shape)? {
        Group::Gl { p, q } => ClassicalPoset::Gl { p, q },
        Group::O { n } => ClassicalPoset::O { n },
        Group::Sp { n } => ClassicalPoset::Sp { n },
        _ => return Err(Failure::Domain(Error::Unsupported("facets are listed for gl, o and sp".into()))),
    };
    let facets: Vec<Facet> = match (a.painted, poset) {
        (Some(m), ClassicalPoset::O { n }) => enumerate_painted_facets(n, k, m)?,
        (Some(_), _) => return Err(usage("--painted applies to --group o only")),
        (None, _) => enumerate_facets(poset, k)?,
    };
    let out: Vec<FacetOut> =
        facets.iter().map(|f| FacetOut { paths: &f.paths, corners: &f.corners, painted: &f.painted }).collect();
    let pretty = facets
        .iter()
        .map(|f| {
            let mut line = format!("paths={:?} corners={:?}", f.paths, f.corners);
            if !f.painted.is_empty() {
                line.push_str(&format!(" painted={:?}", f.painted));
            }
            line
        })
        .collect();
    let result = json!({"poset": poset.to_string(), "count": facets.len(), "facets": out});
    Ok(Response { result, pretty, checks: Vec::new() })
}

fn multisets_json(parts: &[Multiset]) -> Value {
    parts
        .iter()
        .map(|ms| ms.iter().map(|(&(i, j), &m)| json!([[i, j], m])).collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .into()
}

fn peel_json(d: &PeelDecomposition) -> Value {
    json!({
        "chains_star": multisets_json(&d.chains_star),
        "chains": multisets_json(&d.chains),
        "antichains": multisets_json(&d.antichains),
    })
}

fn bound(given: Option<usize>, rows: &[Vec<usize>]) -> usize {
    given.unwrap_or_else(|| rows.iter().flatten().copied().max().unwrap_or(0))
}

fn tableau(rows: Vec<Vec<usize>>, given: Option<usize>) -> Outcome<SemistandardTableau> {
    let b = bound(given, &rows);
    Ok(SemistandardTableau::new(rows, b)?)
}

fn matrix_text(m: &NatMatrix) -> String {
    m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join("\n")
}

fn cmd_rsk(a: &RskArgs) -> Outcome<Response> {
    let (matrix, tableaux) = match (&a.tableau, &a.matrix) {
        (Some(text), None) => {
            let value: Value = serde_json::from_str(text).map_err(|e| usage(format!("--tableau: {e}")))?;
            match a.group {
                GroupName::Gl => {
                    let get = |key: &str| -> Outcome<Vec<Vec<usize>>> {
                        let v = value.get(key).ok_or_else(|| usage(format!("--tableau needs a \"{key}\" field for gl")))?;
                        serde_json::from_value(v.clone()).map_err(|e| usage(format!("{key}: {e}")))
                    };
                    let pair = TableauPair::new(tableau(get("recording")?, a.p)?, tableau(get("insertion")?, a.q)?)?;
                    (rsk_gl(&pair)?, serde_json::to_value(&pair)?)
                }
                GroupName::O | GroupName::Sp => {
                    let rows: Vec<Vec<usize>> =
                        serde_json::from_value(value).map_err(|e| usage(format!("--tableau: {e}")))?;
                    let t = tableau(rows, a.n)?;
                    let m = if a.group == GroupName::O { rsk_o(&t)? } else { rsk_sp(&t)? };
                    (m, serde_json::to_value(&t)?)
                }
                _ => return Err(Failure::Domain(Error::Unsupported("rsk is defined for gl, o and sp".into()))),
            }
        }
        (None, Some(text)) => {
            let rows: Vec<Vec<u64>> = serde_json::from_str(text).map_err(|e| usage(format!("--matrix: {e}")))?;
            let kind = match a.group {
                GroupName::Gl => MatrixKind::Generic,
                GroupName::O => MatrixKind::UpperTriangular,
                GroupName::Sp => MatrixKind::StrictlyUpperTriangular,
                _ => return Err(Failure::Domain(Error::Unsupported("rsk is defined for gl, o and sp".into()))),
            };
            let m = NatMatrix::from_rows(rows, kind)?;
            let t = match a.group {
                GroupName::Gl => serde_json::to_value(rsk_gl_inverse(&m))?,
                GroupName::O => serde_json::to_value(rsk_o_inverse(&m)?)?,
                _ => serde_json::to_value(rsk_sp_inverse(&m)?)?,
            };
            (m, t)
        }
        _ => return Err(usage("give exactly one of --tableau or --matrix")),
    };
    let poset = match a.group {
        GroupName::Gl => ClassicalPoset::Gl { p: matrix.rows(), q: matrix.cols() },
        GroupName::O => ClassicalPoset::O { n: matrix.rows() },
        _ => ClassicalPoset::Sp { n: matrix.rows() },
    };
    let d = peel(&matrix, poset)?;
    let (w, h) = poset.width_height(&matrix.multiset())?;
    let result = json!({
        "matrix": matrix.to_rows(),
        "tableaux": tableaux,
        "width": w,
        "height": h,
        "peel": peel_json(&d),
    });
    let mut pretty = vec![matrix_text(&matrix), format!("width {w}, height {h}")];
    for (name, parts) in [("C*", &d.chains_star), ("C", &d.chains), ("D", &d.antichains)] {
        for (i, ms) in parts.iter().enumerate() {
            pretty.push(format!("{name}_{}: {:?}", i + 1, ms.iter().collect::<Vec<_>>()));
        }
    }
    Ok(Response { result, pretty, checks: Vec::new() })
}

fn cmd_oracle(a: &OracleArgs) -> Outcome<Response> {
    let group = graph_group(group_of(a.group, &a.shape)?);
    let limits = Limits::from_env();
    if a.tensor {
        let c = count_tensor_invariants(group, a.shape.k, &limits)?;
        let c = BigInt::from(c);
        return Ok(Response::new(json!({"tensor_invariants": big_json(&c)}), c.to_string()));
    }
    let dims: Vec<BigInt> =
        graded_dimensions_by_graphs(group, a.shape.k, a.degree, &limits)?.into_iter().map(BigInt::from).collect();
    Ok(Response::new(json!({"graded_dimensions": coeffs_json(&dims)}), coeffs_text(&dims)))
}

fn cmd_check_all(a: &CheckAllArgs) -> Outcome<Response> {
    let ids: Vec<usize> = if a.only.is_empty() { (1..=checks::CRITERIA.len()).collect() } else { a.only.clone() };
    if let Some(bad) = ids.iter().find(|&&i| i == 0 || i > checks::CRITERIA.len()) {
        return Err(usage(format!("no criterion {bad}")));
    }
    let reports: Vec<checks::Report> = ids.into_iter().map(checks::run_one).collect();
    let pretty = reports.iter().map(checks::Report::line).collect();
    let table: Vec<Value> = reports
        .iter()
        .map(|r| json!({"id": r.id, "name": r.name, "passed": r.passed(), "detail": r.outcome.as_ref().err()}))
        .collect();
    let checks = reports
        .iter()
        .map(|r| CheckResult { name: r.name.to_string(), passed: r.passed(), detail: r.outcome.clone().err() })
        .collect();
    Ok(Response { result: json!({"criteria": table}), pretty, checks })
}

fn request_json(command: &Command) -> Outcome<(Value, Format)> {
    let (name, params, format) = match command {
        Command::Series(a) => ("series", serde_json::to_value(a)?, a.output.format),
        Command::Covariants(a) => ("covariants", serde_json::to_value(a)?, a.output.format),
        Command::Wallach(a) => ("wallach", serde_json::to_value(a)?, a.output.format),
        Command::Facets(a) => ("facets", serde_json::to_value(a)?, a.output.format),
        Command::Rsk(a) => ("rsk", serde_json::to_value(a)?, a.output.format),
        Command::Oracle(a) => ("oracle", serde_json::to_value(a)?, a.output.format),
        Command::CheckAll(a) => ("check-all", serde_json::to_value(a)?, a.output.format),
    };
    Ok((json!({"command": name, "parameters": params, "format": format}), format))
}

fn dispatch(command: &Command) -> Outcome<Response> {
    match command {
        Command::Series(a) => cmd_series(a),
        Command::Covariants(a) => cmd_covariants(a),
        Command::Wallach(a) => cmd_wallach(a),
        Command::Facets(a) => cmd_facets(a),
        Command::Rsk(a) => cmd_rsk(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::CheckAll(a) => cmd_check_all(a),
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Domain(_) => "domain",
        Error::Unsupported(_) => "unsupported",
        Error::SizeLimit { .. } => "size_limit",
    }
}

/// Parses `args` (program name first), runs the request and returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let (request, format) = match request_json(&cli.command) {
        Ok(r) => r,
        Err(_) => return EXIT_FAILED,
    };
    let outcome = dispatch(&cli.command);
    let written = match outcome {
        Ok(resp) => {
            let passed = resp.checks.iter().all(|c| c.passed);
            let io = match format {
                Format::Json => {
                    let body = json!({"request": request, "result": resp.result, "checks": resp.checks});
                    serde_json::to_string_pretty(&body).map_err(std::io::Error::other).and_then(|s| writeln!(out, "{s}"))
                }
                Format::Pretty => {
                    let mut lines = resp.pretty;
                    for c in &resp.checks {
                        if !lines.iter().any(|l| l.contains(&c.name)) {
                            lines.push(format!("check {}: {}", c.name, if c.passed { "pass" } else { "FAIL" }));
                        }
                    }
                    writeln!(out, "{}", lines.join("\n"))
                }
            };
            io.map(|_| if passed { 0 } else { EXIT_FAILED })
        }
        Err(Failure::Usage(msg)) => writeln!(err, "error: {msg}").map(|_| EXIT_USAGE),
        Err(Failure::Domain(e)) => {
            let body = json!({"request": request, "error": {"kind": error_kind(&e), "message": e.to_string()}});
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&body).unwrap_or_else(|_| e.to_string()),
                Format::Pretty => format!("error: {e}"),
            };
            writeln!(err, "{text}").map(|_| EXIT_DOMAIN)
        }
        Err(Failure::Other(e)) => writeln!(err, "error: {e:#}").map(|_| EXIT_FAILED),
    };
    written.unwrap_or(EXIT_FAILED)
}
