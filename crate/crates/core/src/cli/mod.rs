//! Batch command-line front end. `run` returns the process exit code:
//! 0 on success, 2 when a checked property fails, 1 on usage or input errors.

pub mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::addressing::{minimal_addressing_search, tree_addressing, verify_addressing, AddressingSearch, MAX_SEARCH_ORDER};
use crate::cospectral::{census_with_jobs, cousin_scan, CensusResult, CousinEmission};
use crate::error::{Error, Result};
use crate::exact::{exact_roots, OracleSpectrum};
use crate::families::{check_oracle, classify, Classification, FamilySpec, OracleCheck};
use crate::graph::{
    encode_graph6, enumerate_connected_graphs, parse_digraph6, parse_edge_list, parse_graph6, read_catalog,
    AnyGraph, Digraph, Graph,
};
use crate::matrix::{variant_matrix, MatrixVariant};
use crate::numeric::{fmt_f64, variant_spectrum, verify_bounds, BoundsReport, Spectrum};
use crate::poly::{
    char_poly_exact, coefficient_analytics, inertia_exact, conjectured_peak_window, tree_peak_window, CoefficientMode,
    CoefficientReport, ExactPolynomial, Inertia,
};
use crate::products::{product_report, ProductKind, ProductReport, ProductSpec};
use crate::reductions::{find_twins, twin_reduction, TwinPartition};

pub use crate::families::parse_operand;
pub use verify::{verify_order, CheckResult, VerifyReport};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Parser, Debug)]
#[command(name = "distspec", version, about = "Spectra of distance matrices of graphs and digraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct InputArgs {
    /// Graph in graph6.
    #[arg(long)]
    pub graph6: Option<String>,
    /// Digraph in digraph6.
    #[arg(long)]
    pub digraph6: Option<String>,
    /// File with a graph6 line or an edge list.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// File with a digraph6 line or an arc list.
    #[arg(long)]
    pub digraph_file: Option<PathBuf>,
    /// NAME[:p1,p2,...], e.g. petersen, hamming:3,2, paley:13.
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum VariantArg {
    D,
    #[value(name = "DQ", alias = "dq")]
    Dq,
    #[value(name = "DL", alias = "dl")]
    Dl,
    #[value(name = "DNL", alias = "dnl")]
    Dnl,
    #[default]
    All,
}

impl VariantArg {
    pub fn variants(self) -> Vec<MatrixVariant> {
        match self {
            VariantArg::D => vec![MatrixVariant::D],
            VariantArg::Dq => vec![MatrixVariant::DQ],
            VariantArg::Dl => vec![MatrixVariant::DL],
            VariantArg::Dnl => vec![MatrixVariant::DNL],
            VariantArg::All => MatrixVariant::ALL.to_vec(),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Spectra, exact characteristic polynomials, inertia and bounds.
    Spectra {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "all", ignore_case = true)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Count graphs with a cospectral mate, per variant.
    Census {
        /// Enumerate all connected graphs of this order.
        #[arg(long)]
        n: Option<usize>,
        /// graph6 catalog, one graph per line.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "all", ignore_case = true)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also write the cospectral classes as JSON to this file.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Closed-form spectra against the direct computation.
    Family {
        #[arg(long)]
        family: String,
        #[arg(long, value_enum, default_value = "all", ignore_case = true)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Cartesian or lexicographic product against its closed form.
    Product {
        /// Family spec, graph6 or digraph6 (leading '&').
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, default_value = "cartesian")]
        kind: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Twin classes and the quotient reduction.
    Twins {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "all", ignore_case = true)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Squashed-cube addressing.
    Address {
        #[command(flatten)]
        input: InputArgs,
        /// Longest address length to try.
        #[arg(long)]
        r_max: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cousin constructions, each emitted pair checked independently.
    Cousins {
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Coefficient sequences of the characteristic polynomials.
    Coeffs {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "all", ignore_case = true)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Every property check over all connected graphs of one order.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Outcome of one command: the rendered report and whether every checked
/// property held.
pub struct Outcome {
    pub output: String,
    pub ok: bool,
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

/// Parses `args` (including the program name) and runs the command,
/// writing the report to `out` and diagnostics to `err`.
pub fn run_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let _ = writeln!(out, "{}", o.output);
            if o.ok {
                0
            } else {
                let _ = writeln!(err, "property violation");
                2
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}

fn usage(msg: &str) -> Error {
    Error::InvalidInput(msg.to_string())
}

fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.split_whitespace().count() == 2)
}

fn read_graph_file(path: &PathBuf) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    if looks_like_edge_list(&text) {
        let (n, e) = parse_edge_list(&text)?;
        Graph::from_edges(n, &e)
    } else {
        let line = text.lines().find(|l| !l.trim().is_empty()).ok_or_else(|| usage("empty graph file"))?;
        parse_graph6(line.trim())
    }
}

fn read_digraph_file(path: &PathBuf) -> Result<Digraph> {
    let text = std::fs::read_to_string(path)?;
    if looks_like_edge_list(&text) {
        let (n, a) = parse_edge_list(&text)?;
        Digraph::from_arcs(n, &a)
    } else {
        let line = text.lines().find(|l| !l.trim().is_empty()).ok_or_else(|| usage("empty digraph file"))?;
        parse_digraph6(line.trim())
    }
}

/// The single (di)graph named by the input flags.
pub fn load_input(input: &InputArgs) -> Result<AnyGraph> {
    let given = [
        input.graph6.is_some(),
        input.digraph6.is_some(),
        input.file.is_some(),
        input.digraph_file.is_some(),
        input.family.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if given != 1 {
        return Err(usage("give exactly one of --graph6, --digraph6, --file, --digraph-file, --family"));
    }
    if let Some(s) = &input.graph6 {
        return Ok(parse_graph6(s.trim())?.into());
    }
    if let Some(s) = &input.digraph6 {
        return Ok(parse_digraph6(s.trim())?.into());
    }
    if let Some(p) = &input.file {
        return Ok(read_graph_file(p)?.into());
    }
    if let Some(p) = &input.digraph_file {
        return Ok(read_digraph_file(p)?.into());
    }
    let spec: FamilySpec = input.family.as_deref().unwrap().parse()?;
    spec.build()
}

fn load_graph(input: &InputArgs) -> Result<Graph> {
    match load_input(input)? {
        AnyGraph::Graph(g) => Ok(g),
        AnyGraph::Digraph(_) => Err(Error::NotSupported("this command takes an undirected graph".into())),
    }
}

fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Spectra { input, variant, format } => spectra_cmd(&load_input(input)?, &variant.variants(), *format),
        Command::Census { n, file, variant, format, jobs, dump } => {
            let catalog = match (n, file) {
                (Some(n), None) => enumerate_connected_graphs(*n)?,
                (None, Some(f)) => read_catalog(f)?,
                _ => return Err(usage("give exactly one of --n, --file")),
            };
            let c = census_with_jobs(&catalog, &variant.variants(), *jobs)?;
            if let Some(path) = dump {
                std::fs::write(path, json(&c))?;
            }
            Ok(Outcome { output: render_census(&c, *format), ok: true })
        }
        Command::Family { family, variant, format, tolerance } => {
            if !(*tolerance >= 0.0) {
                return Err(usage("--tolerance must be nonnegative"));
            }
            family_cmd(&family.parse()?, &variant.variants(), *tolerance, *format)
        }
        Command::Product { left, right, kind, format } => {
            let kind: ProductKind = kind.parse()?;
            let spec = ProductSpec::new(kind, parse_operand(left)?, parse_operand(right)?);
            let r = product_report(&spec)?;
            let ok = r.all_match();
            Ok(Outcome { output: render_product(&r, *format), ok })
        }
        Command::Twins { input, variant, format } => twins_cmd(&load_graph(input)?, &variant.variants(), *format),
        Command::Address { input, r_max, format } => address_cmd(&load_graph(input)?, *r_max, *format),
        Command::Cousins { n, input, format } => {
            let catalog = match n {
                Some(n) => enumerate_connected_graphs(*n)?,
                None => vec![load_graph(input)?],
            };
            let e = cousin_scan(&catalog)?;
            let ok = e.iter().all(CousinEmission::is_valid);
            Ok(Outcome { output: render_cousins(&e, *format), ok })
        }
        Command::Coeffs { input, variant, format } => coeffs_cmd(&load_input(input)?, &variant.variants(), *format),
        Command::Verify { n, jobs, format } => {
            let r = verify_order(*n, *jobs)?;
            let ok = r.ok();
            let output = match format {
                Format::Text | Format::Csv => r.to_text(),
                Format::Json => json(&r),
            };
            Ok(Outcome { output, ok })
        }
    }
}

#[derive(Serialize)]
pub struct VariantSection {
    pub variant: MatrixVariant,
    pub polynomial: ExactPolynomial,
    /// Eigenvalues with a rational or quadratic-surd form.
    pub exact_eigenvalues: OracleSpectrum,
    /// Factor of the polynomial whose roots are only known numerically.
    pub unresolved_factor: Option<ExactPolynomial>,
    pub spectrum: Spectrum,
    pub inertia: Option<Inertia>,
}

#[derive(Serialize)]
pub struct SpectraReport {
    pub order: usize,
    pub directed: bool,
    pub graph6: Option<String>,
    pub transmissions: Vec<u64>,
    pub diameter: u64,
    pub wiener: Option<u64>,
    pub variants: Vec<VariantSection>,
    pub classification: Option<Classification>,
    pub bounds: Option<BoundsReport>,
}

pub fn spectra_report(g: &AnyGraph, variants: &[MatrixVariant]) -> Result<SpectraReport> {
    let info = g.distances()?;
    let mut sections = Vec::new();
    for &v in variants {
        let m = variant_matrix(&info, v)?;
        let p = char_poly_exact(&m);
        let (exact, rest) = exact_roots(&p);
        let inertia = if info.directed { None } else { Some(inertia_exact(&p, true)?) };
        sections.push(VariantSection {
            variant: v,
            exact_eigenvalues: exact,
            unresolved_factor: (rest.degree() > 0).then_some(rest),
            spectrum: variant_spectrum(&info, v)?,
            inertia,
            polynomial: p,
        });
    }
    let n = info.order();
    Ok(SpectraReport {
        order: n,
        directed: info.directed,
        graph6: g.as_graph().map(encode_graph6),
        transmissions: info.transmissions.clone(),
        diameter: info.diameter,
        wiener: info.wiener,
        variants: sections,
        classification: g.as_graph().map(classify).transpose()?,
        bounds: if n >= 2 { Some(verify_bounds(g)?) } else { None },
    })
}

/// `{0, 1^(4), 6/5^(5)}` with numeric values for anything inexact.
pub fn format_spectrum(exact: &OracleSpectrum, numeric: &Spectrum, resolved_all: bool) -> String {
    let item = |v: String, m: usize| if m == 1 { v } else { format!("{v}^({m})") };
    if resolved_all {
        let parts: Vec<String> = exact.0.iter().map(|(v, m)| item(v.to_string(), *m)).collect();
        return format!("{{{}}}", parts.join(", "));
    }
    let parts: Vec<String> = numeric
        .clusters
        .iter()
        .map(|c| {
            let v = if c.im == 0.0 {
                fmt_f64(c.re)
            } else {
                format!("{}{}{}i", fmt_f64(c.re), if c.im < 0.0 { "-" } else { "+" }, fmt_f64(c.im.abs()))
            };
            item(v, c.multiplicity)
        })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn spectra_cmd(g: &AnyGraph, variants: &[MatrixVariant], format: Format) -> Result<Outcome> {
    let r = spectra_report(g, variants)?;
    let ok = r.bounds.as_ref().is_none_or(BoundsReport::ok);
    let output = match format {
        Format::Json => json(&r),
        Format::Text | Format::Csv => {
            let mut s = format!("order {}{}\n", r.order, if r.directed { " (directed)" } else { "" });
            for v in &r.variants {
                s += &format!(
                    "{}: {}\n  p(x) = {}\n",
                    v.variant,
                    format_spectrum(&v.exact_eigenvalues, &v.spectrum, v.unresolved_factor.is_none()),
                    v.polynomial
                );
                if let Some(i) = &v.inertia {
                    s += &format!("  inertia ({}, {}, {})\n", i.n_plus, i.n_minus, i.n_zero);
                }
            }
            if let Some(b) = &r.bounds {
                for f in b.failures() {
                    s += &format!("bound failed: {}\n", f.name);
                }
            }
            s.trim_end().to_string()
        }
    };
    Ok(Outcome { output, ok })
}

pub fn render_census(c: &CensusResult, format: Format) -> String {
    match format {
        Format::Csv => format!("{}\n{}", CensusResult::CSV_HEADER, c.csv_row()),
        Format::Json => json(c),
        Format::Text => {
            let mut s = c.csv_row();
            for v in &c.variants {
                for class in &v.classes {
                    s += &format!("\n{} {}: {}", v.variant, class.polynomial, class.members.join(" "));
                }
            }
            s
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FamilyVariantResult {
    Checked(OracleCheck),
    NoClosedForm { variant: MatrixVariant },
}

#[derive(Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub order: usize,
    pub results: Vec<FamilyVariantResult>,
    pub classification: Option<Classification>,
}

pub fn family_report(spec: &FamilySpec, variants: &[MatrixVariant], tol: f64) -> Result<FamilyReport> {
    let mut results = Vec::new();
    for &v in variants {
        match check_oracle(spec, v, tol) {
            Ok(c) => results.push(FamilyVariantResult::Checked(c)),
            Err(Error::NoClosedForm(_)) => results.push(FamilyVariantResult::NoClosedForm { variant: v }),
            Err(e) => return Err(e),
        }
    }
    let g = spec.build()?;
    let classification = match g.as_graph() {
        Some(g) if g.order() <= 64 => Some(classify(g)?),
        _ => None,
    };
    Ok(FamilyReport { family: spec.to_string(), order: spec.order(), results, classification })
}

fn family_cmd(spec: &FamilySpec, variants: &[MatrixVariant], tol: f64, format: Format) -> Result<Outcome> {
    let r = family_report(spec, variants, tol)?;
    let ok = r.results.iter().all(|x| match x {
        FamilyVariantResult::Checked(c) => c.numeric_match && c.exact_match != Some(false),
        FamilyVariantResult::NoClosedForm { .. } => true,
    });
    let output = match format {
        Format::Json => json(&r),
        Format::Text | Format::Csv => {
            let mut s = format!("{} (order {})", r.family, r.order);
            for x in &r.results {
                s += &match x {
                    FamilyVariantResult::Checked(c) => {
                        let parts: Vec<String> = c
                            .oracle
                            .0
                            .iter()
                            .map(|(v, m)| if *m == 1 { v.to_string() } else { format!("{v}^({m})") })
                            .collect();
                        format!(
                            "\n{}: {{{}}} max error {} exact {}",
                            c.variant,
                            parts.join(", "),
                            fmt_f64(c.max_abs_error),
                            c.exact_match.map_or("n/a".to_string(), |b| b.to_string())
                        )
                    }
                    FamilyVariantResult::NoClosedForm { variant } => format!("\n{variant}: no closed form"),
                };
            }
            s
        }
    };
    Ok(Outcome { output, ok })
}

fn render_product(r: &ProductReport, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Text | Format::Csv => {
            let mut s = format!("{} product of order {}, {:?}", r.kind, r.order, r.theorem);
            for v in &r.variants {
                s += &format!("\n{}: {} ({})", v.variant, v.closed_form, if v.matches { "matches" } else { "MISMATCH" });
            }
            s
        }
    }
}

#[derive(Serialize)]
pub struct TwinVariantResult {
    pub variant: MatrixVariant,
    pub twin_eigenvalues: Vec<(String, usize)>,
    pub quotient_polynomial: ExactPolynomial,
    pub assembled: ExactPolynomial,
    pub direct: ExactPolynomial,
    pub matches: bool,
}

#[derive(Serialize)]
pub struct TwinsReport {
    pub partition: TwinPartition,
    pub variants: Vec<TwinVariantResult>,
}

pub fn twins_report(g: &Graph, variants: &[MatrixVariant]) -> Result<TwinsReport> {
    let partition = find_twins(g)?;
    let mut out = Vec::new();
    for &v in variants {
        let (asm, direct) = twin_reduction(g, v)?;
        out.push(TwinVariantResult {
            variant: v,
            twin_eigenvalues: asm.twin_eigenvalues.clone(),
            quotient_polynomial: char_poly_exact(&asm.quotient.b),
            matches: asm.polynomial == direct,
            assembled: asm.polynomial,
            direct,
        });
    }
    Ok(TwinsReport { partition, variants: out })
}

fn twins_cmd(g: &Graph, variants: &[MatrixVariant], format: Format) -> Result<Outcome> {
    let r = twins_report(g, variants)?;
    let ok = r.variants.iter().all(|v| v.matches);
    let output = match format {
        Format::Json => json(&r),
        Format::Text | Format::Csv => {
            let mut s = String::from("classes:");
            for c in &r.partition.classes {
                s += &format!(" {:?}", c.vertices);
            }
            for v in &r.variants {
                s += &format!(
                    "\n{}: quotient {} twins {:?} {}",
                    v.variant,
                    v.quotient_polynomial,
                    v.twin_eigenvalues,
                    if v.matches { "matches" } else { "MISMATCH" }
                );
            }
            s
        }
    };
    Ok(Outcome { output, ok })
}

#[derive(Serialize)]
pub struct AddressReport {
    pub tree: Option<crate::addressing::Addressing>,
    pub search: Option<AddressingSearch>,
    pub valid: bool,
}

fn address_cmd(g: &Graph, r_max: Option<usize>, format: Format) -> Result<Outcome> {
    let n = g.order();
    let tree = if g.is_tree() && n >= 2 { Some(tree_addressing(g)?) } else { None };
    let search = if n <= MAX_SEARCH_ORDER {
        Some(minimal_addressing_search(g, r_max.unwrap_or(n.saturating_sub(1)))?)
    } else if tree.is_none() {
        return Err(Error::OrderTooLarge { order: n, max: MAX_SEARCH_ORDER });
    } else {
        None
    };
    let mut valid = true;
    for a in tree.iter().chain(search.as_ref().map(|s| &s.witness)) {
        valid &= verify_addressing(g, a)?;
    }
    if let Some(s) = &search {
        valid &= s.lower_bound <= s.length && s.length <= n.saturating_sub(1).max(s.lower_bound);
    }
    let r = AddressReport { tree, search, valid };
    let output = match format {
        Format::Json => json(&r),
        Format::Text | Format::Csv => {
            let best = r.search.as_ref().map(|s| &s.witness).or(r.tree.as_ref()).unwrap();
            let mut s = String::new();
            if let Some(x) = &r.search {
                s += &format!("N = {} (lower bound {})\n", x.length, x.lower_bound);
            }
            s += &best.to_string();
            s
        }
    };
    Ok(Outcome { output, ok: valid })
}

fn render_cousins(e: &[CousinEmission], format: Format) -> String {
    match format {
        Format::Json => json(&e),
        Format::Text | Format::Csv => e
            .iter()
            .map(|x| {
                format!(
                    "{} {:?} {:?} -> {} {} {}",
                    x.host,
                    x.set.v,
                    x.form,
                    x.left,
                    x.right,
                    if x.is_valid() { "ok" } else { "INVALID" }
                )
            })
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

#[derive(Serialize)]
pub struct CoeffSection {
    pub variant: MatrixVariant,
    pub polynomial: ExactPolynomial,
    pub raw: CoefficientReport,
    pub absolute: CoefficientReport,
    /// Normalized `d_k`, for `D` of trees.
    pub normalized: Option<CoefficientReport>,
    pub peak_window: Option<(usize, usize)>,
    pub conjectured_window: Option<(usize, usize)>,
    /// Theorem predictions that failed.
    pub violations: Vec<String>,
}

pub fn coefficient_sections(g: &AnyGraph, variants: &[MatrixVariant]) -> Result<Vec<CoeffSection>> {
    let info = g.distances()?;
    let tree = g.as_graph().filter(|t| t.is_tree() && t.order() >= 3);
    let mut out = Vec::new();
    for &v in variants {
        let p = char_poly_exact(&variant_matrix(&info, v)?);
        let raw = coefficient_analytics(&p, CoefficientMode::Raw)?;
        let absolute = coefficient_analytics(&p, CoefficientMode::Absolute)?;
        let mut violations = Vec::new();
        let (mut normalized, mut peak_window, mut conjectured) = (None, None, None);
        if !info.directed && v != MatrixVariant::D {
            if !raw.is_log_concave {
                violations.push("coefficients not log-concave".into());
            }
            if !absolute.is_unimodal {
                violations.push("absolute coefficients not unimodal".into());
            }
        }
        if !info.directed && v == MatrixVariant::DL {
            let s = &absolute.sequence;
            if !s.windows(2).skip(1).all(|w| w[0] >= w[1]) {
                violations.push("absolute coefficients not nonincreasing".into());
            }
        }
        if let (Some(t), MatrixVariant::D) = (tree, v) {
            let d = coefficient_analytics(&p, CoefficientMode::TreeNormalized)?;
            let n = t.order();
            let win = tree_peak_window(n, info.diameter as usize);
            if !raw.is_log_concave {
                violations.push("tree coefficients not log-concave".into());
            }
            if !(absolute.is_log_concave && absolute.is_unimodal) {
                violations.push("tree absolute coefficients not log-concave and unimodal".into());
            }
            if !(d.is_log_concave && d.is_unimodal) {
                violations.push("normalized coefficients not log-concave and unimodal".into());
            }
            if d.peak_index < win.0 || d.peak_index > win.1 {
                violations.push("normalized peak outside the proven window".into());
            }
            peak_window = Some(win);
            conjectured = Some(conjectured_peak_window(n));
            normalized = Some(d);
        }
        out.push(CoeffSection {
            variant: v,
            polynomial: p,
            raw,
            absolute,
            normalized,
            peak_window,
            conjectured_window: conjectured,
            violations,
        });
    }
    Ok(out)
}

fn coeffs_cmd(g: &AnyGraph, variants: &[MatrixVariant], format: Format) -> Result<Outcome> {
    let r = coefficient_sections(g, variants)?;
    let ok = r.iter().all(|s| s.violations.is_empty());
    let output = match format {
        Format::Json => json(&r),
        Format::Text | Format::Csv => r
            .iter()
            .map(|s| {
                let seq: Vec<String> = s.raw.sequence.iter().map(|c| c.to_string()).collect();
                format!(
                    "{}: [{}] log-concave {} |.| unimodal {}{}",
                    s.variant,
                    seq.join(", "),
                    s.raw.is_log_concave,
                    s.absolute.is_unimodal,
                    s.normalized
                        .as_ref()
                        .map(|d| format!(" normalized peak {}", d.peak_index))
                        .unwrap_or_default()
                )
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(Outcome { output, ok })
}
