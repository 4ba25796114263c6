//! Command-line front end: generation, validation, verification suites,
//! completeness audits and spectra.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use maghodge::completeness::{
    bounded_curvature_audit, canonical_cutoffs, chi_alpha_obstruction, chi_completeness_audit, degree_growth_check,
    distances, obstruction_trend, CompletenessReport, DegreeGrowthReport, ObstructionTrend,
};
use maghodge::complex::Violation;
use maghodge::generators::{
    gen_book_like, gen_onedim, gen_random, gen_star_chain, potential_sphere_pi, BookLikeSpec, CrossRule, FaceRule,
    IntraRule, OneDimSpec, RandomSpec, SphereDecomposition, WeightScheme,
};
use maghodge::io::{format_g17, to_json_string, Document};
use maghodge::sample::{random_gauge, rng};
use maghodge::spectral::{gauge_spectrum_check, spectrum, SpectrumBlock};
use maghodge::verify::{run_checks, CheckKind, CheckOutcome, VerifyConfig};
use maghodge::{Error, MagneticPotential, VertexId, WeightedTriangulation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_INVALID: i32 = 4;
pub const EXIT_IO: i32 = 5;
pub const EXIT_RUNTIME: i32 = 6;

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Json(_)
        | Error::DuplicateVertex(_)
        | Error::UnknownVertex(_)
        | Error::InvalidVertexId(_)
        | Error::Loop(_)
        | Error::DuplicateEdge(..)
        | Error::SkewSymmetry(..)
        | Error::DegenerateFace(_)
        | Error::DuplicateFace(_) => EXIT_PARSE,
        Error::Invalid(_) => EXIT_INVALID,
        Error::Io(_) => EXIT_IO,
        Error::InvalidParameter(_) | Error::InvalidCutoffFamily(_) => EXIT_USAGE,
        _ => EXIT_RUNTIME,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "maghodge",
    version,
    about = "Discrete magnetic Hodge calculus on weighted triangulations"
)]
pub struct Cli {
    /// Seed for generators and random trials (decimal or 0x-prefixed hex)
    #[arg(long, global = true, default_value = "0xC0FFEE", value_parser = parse_seed)]
    pub seed: u64,

    /// Relative tolerance for algebraic identities
    #[arg(long, global = true, default_value_t = 1e-13, value_parser = parse_tolerance)]
    pub tol_alg: f64,

    /// Tolerance for eigenvalue comparisons
    #[arg(long, global = true, default_value_t = 1e-10, value_parser = parse_tolerance)]
    pub tol_eig: f64,

    /// Tolerance for holonomy-zero tests
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = parse_tolerance)]
    pub tol_hol: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Output file (the document for `generate`, the report otherwise)
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a document for one of the example families
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Report invariant violations of a document
    Validate { input: PathBuf },
    /// Run property suites on a document
    Verify(VerifyArgs),
    /// Completeness, curvature, obstruction and degree-growth audits
    Audit(AuditArgs),
    /// Eigenvalues of the magnetic Laplacian
    Spectrum(SpectrumArgs),
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Book-like triangulation with β-controlled sphere sizes
    BookLike {
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, value_enum, default_value_t = Weights::Simple)]
        weights: Weights,
        #[arg(long, value_enum, default_value_t = Potential::Zero)]
        potential: Potential,
    },
    /// Complex with a prescribed decomposition into spheres
    Onedim {
        /// Sphere sizes, starting with the origin sphere
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Intra::Path)]
        intra: Intra,
        #[arg(long, value_enum, default_value_t = Cross::Full)]
        cross: Cross,
        #[arg(long, value_enum, default_value_t = Faces::Cross)]
        faces: Faces,
        #[arg(long, value_enum, default_value_t = Potential::Zero)]
        potential: Potential,
    },
    /// Seeded random connected complex
    Random {
        #[arg(long, default_value_t = 12)]
        vertices: usize,
        #[arg(long, default_value_t = 0.3)]
        edge_density: f64,
        #[arg(long, default_value_t = 0.5)]
        face_density: f64,
    },
    /// Chain of hubs with exponentially many leaves (unbounded degree growth)
    Star {
        #[arg(long, default_value_t = 8)]
        levels: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Weights {
    Simple,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Potential {
    Zero,
    /// α(x, y) = (|x| − |y|)π
    SpherePi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Intra {
    None,
    Path,
    Complete,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Cross {
    Full,
    Matching,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Faces {
    None,
    Cross,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub input: PathBuf,
    /// Comma-separated subset of adjointness,gauge,leibniz,curvature,spectral,lemma
    #[arg(long, value_delimiter = ',', value_parser = parse_check)]
    pub checks: Vec<CheckKind>,
    #[arg(long, default_value_t = 64)]
    pub trials: usize,
    #[arg(long, default_value_t = 256)]
    pub lemma_trials: usize,
    /// Largest complex (total cells) for dense eigensolves
    #[arg(long, default_value_t = 4000)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    pub input: PathBuf,
    /// Vertex id used as origin (default: smallest id)
    #[arg(long)]
    pub origin: Option<String>,
    /// Largest cut-off index and degree-growth radius (default: the
    /// eccentricity of the origin)
    #[arg(long)]
    pub n_max: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Degree::Full)]
    pub degree: Degree,
    /// Repeat with a random gauge shift α + d⁰f and compare
    #[arg(long)]
    pub gauge_check: bool,
    #[arg(long, default_value_t = 4000)]
    pub cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Degree {
    #[value(name = "0")]
    #[serde(rename = "0")]
    Zero,
    #[value(name = "1")]
    #[serde(rename = "1")]
    One,
    #[value(name = "2")]
    #[serde(rename = "2")]
    Two,
    #[serde(rename = "even")]
    Even,
    #[serde(rename = "full")]
    Full,
}

impl Degree {
    fn block(self) -> SpectrumBlock {
        match self {
            Degree::Zero => SpectrumBlock::Vertices,
            Degree::One => SpectrumBlock::Edges,
            Degree::Two => SpectrumBlock::Faces,
            Degree::Even => SpectrumBlock::Even,
            Degree::Full => SpectrumBlock::Full,
        }
    }
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed `{s}`: {e}"))
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("invalid tolerance `{s}`: {e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("tolerance must be positive, got {s}"))
    }
}

fn parse_check(s: &str) -> Result<CheckKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Result of one run: what to print and how to exit.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A failure before any report exists.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

trait Report: Serialize {
    fn text(&self) -> String;
    fn csv(&self) -> Result<String, Error>;
}

fn render<R: Report>(r: &R, format: Format) -> Result<String, Error> {
    match format {
        Format::Json => Ok(to_json_string(r)),
        Format::Text => Ok(r.text()),
        Format::Csv => r.csv(),
    }
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("CSV is UTF-8"))
}

fn num(x: f64) -> String {
    format_g17(x)
}

fn opt_num(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

fn read_document(path: &Path) -> Result<Document, Error> {
    let text =
        std::fs::read_to_string(path).map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    Document::parse(&text)
}

fn load(path: &Path) -> Result<(WeightedTriangulation, MagneticPotential), Error> {
    read_document(path)?.to_complex()
}

/// Sends `report` to `-o` if given, else to stdout.
fn deliver(cli: &Cli, report: String, code: i32) -> Result<Outcome, Failure> {
    match &cli.output {
        Some(path) => {
            std::fs::write(path, report).map_err(Error::from)?;
            Ok(Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            })
        }
        None => Ok(Outcome {
            code,
            stdout: report,
            stderr: String::new(),
        }),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Generate { family } => cmd_generate(cli, family),
        Command::Validate { input } => cmd_validate(cli, input),
        Command::Verify(args) => cmd_verify(cli, args),
        Command::Audit(args) => cmd_audit(cli, args),
        Command::Spectrum(args) => cmd_spectrum(cli, args),
    }
}

#[derive(Debug, Serialize)]
struct GenerateSummary {
    family: &'static str,
    vertices: usize,
    edges: usize,
    faces: usize,
    max_vertex_degree: f64,
    max_edge_degree: f64,
    /// Valence identity at odd spheres, for book-like complexes.
    #[serde(skip_serializing_if = "Option::is_none")]
    valence_identity: Option<bool>,
}

impl Report for GenerateSummary {
    fn text(&self) -> String {
        let mut s = format!(
            "family: {}\nvertices: {}\nedges: {}\nfaces: {}\nmax_vertex_degree: {}\nmax_edge_degree: {}\n",
            self.family,
            self.vertices,
            self.edges,
            self.faces,
            num(self.max_vertex_degree),
            num(self.max_edge_degree)
        );
        if let Some(v) = self.valence_identity {
            let _ = writeln!(s, "valence_identity: {v}");
        }
        s
    }

    fn csv(&self) -> Result<String, Error> {
        csv_string(
            &[
                "family",
                "vertices",
                "edges",
                "faces",
                "max_vertex_degree",
                "max_edge_degree",
                "valence_identity",
            ],
            [vec![
                self.family.to_string(),
                self.vertices.to_string(),
                self.edges.to_string(),
                self.faces.to_string(),
                num(self.max_vertex_degree),
                num(self.max_edge_degree),
                self.valence_identity.map(|v| v.to_string()).unwrap_or_default(),
            ]],
        )
    }
}

/// |S_{2n}| + |S_{2n+2}| + 1 neighbours at every vertex of every interior
/// odd sphere.
fn book_like_valence_identity(t: &WeightedTriangulation, dec: &SphereDecomposition) -> bool {
    let depth = dec.num_spheres() - 1;
    (1..depth).step_by(2).all(|k| {
        let want = dec.sphere(k - 1).len() + dec.sphere(k + 1).len() + 1;
        dec.sphere(k).iter().all(|&x| t.neighbors(x).len() == want)
    })
}

fn with_potential(t: &WeightedTriangulation, dec: &SphereDecomposition, p: Potential) -> MagneticPotential {
    match p {
        Potential::Zero => MagneticPotential::zeros(t),
        Potential::SpherePi => potential_sphere_pi(t, dec),
    }
}

fn cmd_generate(cli: &Cli, family: &Family) -> Result<Outcome, Failure> {
    let (name, t, alpha, identity) = match family {
        Family::BookLike {
            depth,
            beta,
            weights,
            potential,
        } => {
            let spec = BookLikeSpec {
                depth: *depth,
                beta: *beta,
                weights: match weights {
                    Weights::Simple => WeightScheme::Simple,
                    Weights::Beta => WeightScheme::Beta,
                },
            };
            let (t, _, dec) = gen_book_like(&spec)?;
            let alpha = with_potential(&t, &dec, *potential);
            let identity = book_like_valence_identity(&t, &dec);
            ("book-like", t, alpha, Some(identity))
        }
        Family::Onedim {
            sizes,
            intra,
            cross,
            faces,
            potential,
        } => {
            let spec = OneDimSpec {
                sizes: sizes.clone(),
                intra: match intra {
                    Intra::None => IntraRule::None,
                    Intra::Path => IntraRule::Path,
                    Intra::Complete => IntraRule::Complete,
                },
                cross: match cross {
                    Cross::Full => CrossRule::Full,
                    Cross::Matching => CrossRule::Matching,
                },
                faces: match faces {
                    Faces::None => FaceRule::None,
                    Faces::Cross => FaceRule::Cross,
                    Faces::All => FaceRule::All,
                },
            };
            let (t, dec) = gen_onedim(&spec)?;
            let alpha = with_potential(&t, &dec, *potential);
            ("onedim", t, alpha, None)
        }
        Family::Random {
            vertices,
            edge_density,
            face_density,
        } => {
            let spec = RandomSpec {
                seed: cli.seed,
                n_vertices: *vertices,
                edge_density: *edge_density,
                face_density: *face_density,
                ..Default::default()
            };
            let (t, alpha) = gen_random(&spec)?;
            ("random", t, alpha, None)
        }
        Family::Star { levels } => {
            let t = gen_star_chain(*levels)?;
            let alpha = MagneticPotential::zeros(&t);
            ("star", t, alpha, None)
        }
    };
    let summary = GenerateSummary {
        family: name,
        vertices: t.num_vertices(),
        edges: t.num_edges(),
        faces: t.num_faces(),
        max_vertex_degree: (0..t.num_vertices()).map(|x| t.vertex_degree(x)).fold(0.0, f64::max),
        max_edge_degree: (0..t.num_edges()).map(|e| t.edge_degree(e)).fold(0.0, f64::max),
        valence_identity: identity,
    };
    let document = Document::from_complex(&t, &alpha).to_json_string();
    let summary = render(&summary, cli.format)?;
    match &cli.output {
        Some(path) => {
            std::fs::write(path, document).map_err(Error::from)?;
            Ok(Outcome {
                code: EXIT_OK,
                stdout: summary,
                stderr: String::new(),
            })
        }
        None => Ok(Outcome {
            code: EXIT_OK,
            stdout: document,
            stderr: summary,
        }),
    }
}

#[derive(Debug, Serialize)]
struct ValidateReport {
    vertices: usize,
    edges: usize,
    faces: usize,
    violations: Vec<Violation>,
    valid: bool,
}

impl Report for ValidateReport {
    fn text(&self) -> String {
        let mut s = format!(
            "vertices: {}\nedges: {}\nfaces: {}\n",
            self.vertices, self.edges, self.faces
        );
        for v in &self.violations {
            let _ = writeln!(s, "violation: {v}");
        }
        let _ = writeln!(s, "valid: {}", self.valid);
        s
    }

    fn csv(&self) -> Result<String, Error> {
        csv_string(
            &["cell", "rule"],
            self.violations.iter().map(|v| vec![v.cell.clone(), v.rule.to_string()]),
        )
    }
}

fn cmd_validate(cli: &Cli, input: &Path) -> Result<Outcome, Failure> {
    let (t, _) = read_document(input)?.to_complex_unchecked()?;
    let violations = t.validate();
    let report = ValidateReport {
        vertices: t.num_vertices(),
        edges: t.num_edges(),
        faces: t.num_faces(),
        valid: violations.is_empty(),
        violations,
    };
    let code = if report.valid { EXIT_OK } else { EXIT_INVALID };
    deliver(cli, render(&report, cli.format)?, code)
}

#[derive(Debug, Serialize)]
struct VerifyOutput {
    config: VerifyConfig,
    outcomes: Vec<CheckOutcome>,
    skipped: Vec<String>,
    passed: bool,
}

impl Report for VerifyOutput {
    fn text(&self) -> String {
        let mut s = String::new();
        for o in &self.outcomes {
            let _ = writeln!(s, "{o}");
        }
        if !self.skipped.is_empty() {
            let _ = writeln!(s, "skipped: {}", self.skipped.join(", "));
        }
        let _ = writeln!(s, "result: {}", if self.passed { "PASS" } else { "FAIL" });
        s
    }

    fn csv(&self) -> Result<String, Error> {
        csv_string(
            &["name", "max_residual", "tolerance", "passed", "note"],
            self.outcomes.iter().map(|o| {
                vec![
                    o.name.clone(),
                    num(o.max_residual),
                    num(o.tolerance),
                    o.passed.to_string(),
                    o.note.clone().unwrap_or_default(),
                ]
            }),
        )
    }
}

const SKEW_PRECHECK: &str = "skew-symmetry precheck";

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<Outcome, Failure> {
    let config = VerifyConfig {
        seed: cli.seed,
        trials: args.trials,
        lemma_trials: args.lemma_trials,
        tol_alg: cli.tol_alg,
        tol_eig: cli.tol_eig,
        tol_hol: cli.tol_hol,
        cell_cap: args.cap,
    };
    config.validate()?;
    let checks = if args.checks.is_empty() {
        CheckKind::ALL.to_vec()
    } else {
        args.checks.clone()
    };
    let loaded = read_document(&args.input).and_then(|d| d.to_complex());
    let (t, alpha) = match loaded {
        Err(e @ Error::SkewSymmetry(..)) => {
            let failed = CheckOutcome {
                name: SKEW_PRECHECK.into(),
                max_residual: f64::INFINITY,
                tolerance: 0.0,
                passed: false,
                note: Some(e.to_string()),
            };
            let out = VerifyOutput {
                config,
                outcomes: vec![failed],
                skipped: checks.iter().map(|c| c.to_string()).collect(),
                passed: false,
            };
            return deliver(cli, render(&out, cli.format)?, EXIT_CHECK_FAILED);
        }
        other => other?,
    };
    let report = run_checks(&t, &alpha, &checks, &config)?;
    let mut outcomes = vec![CheckOutcome::new(SKEW_PRECHECK, 0.0, 0.0)];
    outcomes.extend(report.outcomes);
    let out = VerifyOutput {
        config,
        outcomes,
        skipped: report.skipped,
        passed: report.passed,
    };
    let code = if out.passed { EXIT_OK } else { EXIT_CHECK_FAILED };
    deliver(cli, render(&out, cli.format)?, code)
}

#[derive(Debug, Serialize)]
struct CurvatureSummary {
    constant: f64,
    argmax: Option<String>,
}

#[derive(Debug, Serialize)]
struct ObstructionSummary {
    sup: f64,
    #[serde(flatten)]
    trend: ObstructionTrend,
}

#[derive(Debug, Serialize)]
struct AuditReport {
    origin: String,
    n_max: usize,
    completeness: CompletenessReport,
    curvature: CurvatureSummary,
    obstruction: ObstructionSummary,
    degree_growth: DegreeGrowthReport,
}

impl Report for AuditReport {
    fn text(&self) -> String {
        let c = &self.completeness;
        let mut s = format!("origin: {}\nn_max: {}\n", self.origin, self.n_max);
        let _ = writeln!(
            s,
            "completeness: c1={} c2={} c2_minus={} exhausts={}",
            num(c.c1),
            num(c.c2),
            num(c.c2_minus),
            c.exhausts
        );
        let _ = writeln!(s, "  n c1 c2 c2_minus c1_bound");
        for r in &c.rows {
            let _ = writeln!(
                s,
                "  {} {} {} {} {}",
                r.n,
                num(r.c1),
                num(r.c2),
                num(r.c2_minus),
                num(r.c1_bound)
            );
        }
        let _ = writeln!(
            s,
            "curvature: constant={} argmax={}",
            num(self.curvature.constant),
            self.curvature.argmax.as_deref().unwrap_or("-")
        );
        let o = &self.obstruction;
        let _ = writeln!(
            s,
            "obstruction: sup={} longest_increasing_run={} unbounded_trend={}",
            num(o.sup),
            o.trend.longest_increasing_run,
            o.trend.unbounded_trend
        );
        let _ = writeln!(s, "  level sup");
        for (level, v) in o.trend.per_level_sup.iter().enumerate() {
            let _ = writeln!(s, "  {level} {}", num(*v));
        }
        let d = &self.degree_growth;
        let _ = writeln!(
            s,
            "degree_growth: bounded_vertex={} bounded_edge={} bounded={}",
            d.bounded_vertex, d.bounded_edge, d.bounded
        );
        let _ = writeln!(s, "  n sup_deg_vertex sup_deg_edge ratio_vertex ratio_edge");
        for r in &d.rows {
            let _ = writeln!(
                s,
                "  {} {} {} {} {}",
                r.n,
                num(r.sup_deg_vertex),
                num(r.sup_deg_edge),
                num(r.ratio_vertex),
                num(r.ratio_edge)
            );
        }
        let _ = writeln!(s, "note: {}", d.note);
        s
    }

    /// One row per n: cut-off constants, the obstruction sup on level n and
    /// the degree-growth ratios.
    fn csv(&self) -> Result<String, Error> {
        let c = &self.completeness.rows;
        let o = &self.obstruction.trend.per_level_sup;
        let d = &self.degree_growth.rows;
        let rows = (0..=self.n_max).map(|n| {
            let cr = c.iter().find(|r| r.n == n);
            let dr = d.iter().find(|r| r.n == n);
            vec![
                n.to_string(),
                opt_num(cr.map(|r| r.c1)),
                opt_num(cr.map(|r| r.c2)),
                opt_num(cr.map(|r| r.c2_minus)),
                opt_num(o.get(n).copied()),
                opt_num(dr.map(|r| r.ratio_vertex)),
                opt_num(dr.map(|r| r.ratio_edge)),
            ]
        });
        csv_string(
            &[
                "n",
                "c1",
                "c2",
                "c2_minus",
                "obstruction_sup",
                "ratio_vertex",
                "ratio_edge",
            ],
            rows,
        )
    }
}

fn cmd_audit(cli: &Cli, args: &AuditArgs) -> Result<Outcome, Failure> {
    let (t, alpha) = load(&args.input)?;
    if t.num_vertices() == 0 {
        return Err(Error::InvalidParameter("the complex has no vertices".into()).into());
    }
    let origin = match &args.origin {
        Some(id) => t.require_vertex(&VertexId::new(id.as_str()))?,
        None => 0,
    };
    let dist = distances(&t, origin)?;
    let n_max = args
        .n_max
        .unwrap_or_else(|| dist.iter().copied().max().unwrap_or(0).max(1));
    let completeness = chi_completeness_audit(&t, &canonical_cutoffs(&t, origin, n_max)?)?;
    let curvature = bounded_curvature_audit(&t, &alpha);
    let sup = chi_alpha_obstruction(&t, &alpha).into_iter().fold(0.0, f64::max);
    let report = AuditReport {
        origin: t.vertex_id(origin).as_str().to_owned(),
        n_max,
        completeness,
        curvature: CurvatureSummary {
            constant: curvature.constant,
            argmax: curvature.argmax.map(|x| t.vertex_id(x).as_str().to_owned()),
        },
        obstruction: ObstructionSummary {
            sup,
            trend: obstruction_trend(&t, &alpha, origin)?,
        },
        degree_growth: degree_growth_check(&t, origin, n_max.max(1))?,
    };
    deliver(cli, render(&report, cli.format)?, EXIT_OK)
}

#[derive(Debug, Serialize)]
struct GaugeCheck {
    gauged: Vec<f64>,
    max_diff: f64,
    tolerance: f64,
    passed: bool,
}

#[derive(Debug, Serialize)]
struct SpectrumReport {
    degree: Degree,
    cells: usize,
    eigenvalues: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gauge_check: Option<GaugeCheck>,
}

impl Report for SpectrumReport {
    fn text(&self) -> String {
        let degree = to_json_string(&self.degree);
        let mut s = format!(
            "degree: {}\ncells: {}\neigenvalues:\n",
            degree.trim().trim_matches('"'),
            self.cells
        );
        for v in &self.eigenvalues {
            let _ = writeln!(s, "  {}", num(*v));
        }
        if let Some(g) = &self.gauge_check {
            let _ = writeln!(s, "gauge_check:\n  gauged:");
            for v in &g.gauged {
                let _ = writeln!(s, "    {}", num(*v));
            }
            let _ = writeln!(
                s,
                "  max_diff: {}\n  tolerance: {}\n  passed: {}",
                num(g.max_diff),
                num(g.tolerance),
                g.passed
            );
        }
        s
    }

    fn csv(&self) -> Result<String, Error> {
        let gauged = self.gauge_check.as_ref().map(|g| &g.gauged);
        let mut header = vec!["index", "eigenvalue"];
        if gauged.is_some() {
            header.push("gauged");
        }
        let rows = self.eigenvalues.iter().enumerate().map(|(i, v)| {
            let mut row = vec![i.to_string(), num(*v)];
            if let Some(g) = gauged {
                row.push(opt_num(g.get(i).copied()));
            }
            row
        });
        csv_string(&header, rows)
    }
}

fn cmd_spectrum(cli: &Cli, args: &SpectrumArgs) -> Result<Outcome, Failure> {
    let (t, alpha) = load(&args.input)?;
    let block = args.degree.block();
    let gauge_check = if args.gauge_check {
        let f = random_gauge(&t, &mut rng(cli.seed));
        Some(gauge_spectrum_check(&t, &alpha, &f, block, args.cap)?)
    } else {
        None
    };
    let eigenvalues = match &gauge_check {
        Some(rep) => rep.original.clone(),
        None => spectrum(&t, &alpha, block, args.cap)?,
    };
    let gauge_check = gauge_check.map(|rep| GaugeCheck {
        passed: rep.max_diff <= cli.tol_eig,
        gauged: rep.gauged,
        max_diff: rep.max_diff,
        tolerance: cli.tol_eig,
    });
    let code = match &gauge_check {
        Some(g) if !g.passed => EXIT_CHECK_FAILED,
        _ => EXIT_OK,
    };
    let report = SpectrumReport {
        degree: args.degree,
        cells: block.degrees().iter().map(|&k| t.num_cells(k)).sum(),
        eigenvalues,
        gauge_check,
    };
    deliver(cli, render(&report, cli.format)?, code)
}
