//! Command-line verifier and example generator for exact Hopf-algebra data.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hopftwist::catdim::{self, FpDim, IntPoly, ScanResult};
use hopftwist::chevalley;
use hopftwist::correspondence;
use hopftwist::hopf;
use hopftwist::io::{emit_file, parse_file, parse_fusion, FileBundle};
use hopftwist::linalg::Matrix;
use hopftwist::scalar::parse_rational;
use hopftwist::superalg::{self, GroupTable, SuperHopfData};
use hopftwist::tensor::PairElement;
use hopftwist::triangular;
use hopftwist::twist;
use hopftwist::{CycScalar, ExactError};

#[derive(Parser)]
#[command(name = "hopftwist", version, about = "Exact verifier for Hopf (super)algebra data")]
struct Cli {
    /// Emit the report as JSON instead of the human-readable lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the Hopf (or Hopf super) axioms, optionally with an R-matrix
    /// or a twist.
    Verify {
        file: PathBuf,
        /// Treat the file as a Hopf superalgebra (requires a parity vector).
        #[arg(long = "super")]
        super_: bool,
        /// Also verify the file's rmatrix as a triangular structure.
        #[arg(long)]
        triangular: bool,
        /// Also verify the twist element stored in the given file.
        #[arg(long)]
        twist: Option<PathBuf>,
    },
    /// Write a generated example to a file.
    Example {
        /// One of: sweedler, group, exterior, supergroup, yd-biproduct, ru.
        name: String,
        /// Parameter of the Sweedler family (rational, e.g. "3/5").
        #[arg(long)]
        lambda: Option<String>,
        /// Odd dimension for exterior / supergroup / yd-biproduct.
        #[arg(long)]
        dim: Option<usize>,
        /// Group spec such as "z2", "z4", or "z2xz2".
        #[arg(long)]
        group: Option<String>,
        #[arg(short)]
        o: PathBuf,
    },
    /// Move a Hopf superalgebra to its associated ordinary Hopf algebra.
    Bosonize {
        file: PathBuf,
        #[command(flatten)]
        grouplike: GrouplikeArg,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Move an ordinary Hopf algebra with involutive grouplike to the super
    /// side.
    Unbosonize {
        file: PathBuf,
        #[command(flatten)]
        grouplike: GrouplikeArg,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Apply a twist (read from another file) and write the twisted data.
    Twist {
        file: PathBuf,
        #[arg(long)]
        twist: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
    /// Rank and span of the minimal part of the file's rmatrix.
    MinimalPart { file: PathBuf },
    /// Evaluate the three radical/coradical conditions and their agreement.
    Chevalley { file: PathBuf },
    /// Enumerate grouplike elements.
    Grouplikes { file: PathBuf },
    /// Basis of the space of (g:h) skew primitives for basis grouplikes.
    Skewprims {
        file: PathBuf,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        h: usize,
    },
    /// Is the algebra generated by grouplikes and skew primitives?
    Generation { file: PathBuf },
    /// Integrality scans and fusion-ring dimensions.
    Catdim {
        #[command(subcommand)]
        which: CatdimCmd,
    },
}

#[derive(Subcommand)]
enum CatdimCmd {
    /// Scan b_k and c_k integrality for a monic integer polynomial.
    Lemma {
        /// Polynomial such as "x^2-2".
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 200)]
        kmax: u64,
    },
    /// Frobenius-Perron and integer dimension candidates of a fusion ring.
    Fusion { file: PathBuf },
}

#[derive(Args)]
struct GrouplikeArg {
    /// Basis index or comma-separated coefficient list, e.g. "2" or
    /// "0,0,1,0".
    #[arg(long)]
    grouplike: String,
}

// ---- reporting ----

struct Check {
    name: &'static str,
    pass: bool,
    witness: Option<String>,
}

#[derive(Default)]
struct Report {
    checks: Vec<Check>,
    notes: Vec<String>,
}

impl Report {
    fn push(&mut self, name: &'static str, pass: bool, witness: Option<String>) {
        self.checks.push(Check { name, pass, witness });
    }

    fn note(&mut self, text: String) {
        self.notes.push(text);
    }

    fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn render(&self, as_json: bool) -> String {
        if as_json {
            let checks: Vec<Value> = self
                .checks
                .iter()
                .map(|c| {
                    let mut m = serde_json::Map::new();
                    m.insert("name".into(), Value::String(c.name.into()));
                    m.insert("pass".into(), Value::Bool(c.pass));
                    if let Some(w) = &c.witness {
                        m.insert("witness".into(), Value::String(w.clone()));
                    }
                    Value::Object(m)
                })
                .collect();
            let notes: Vec<Value> = self.notes.iter().map(|n| Value::String(n.clone())).collect();
            let mut s = serde_json::to_string_pretty(&json!({ "checks": checks, "notes": notes }))
                .expect("serializable");
            s.push('\n');
            s
        } else {
            let mut s = String::new();
            for c in &self.checks {
                let verdict = if c.pass { "pass" } else { "FAIL" };
                match &c.witness {
                    Some(w) => writeln!(s, "{}: {} ({})", c.name, verdict, w).unwrap(),
                    None => writeln!(s, "{}: {}", c.name, verdict).unwrap(),
                }
            }
            for n in &self.notes {
                writeln!(s, "note: {}", n).unwrap();
            }
            s
        }
    }
}

enum CliError {
    Input(String),
    Indeterminate(String),
}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::Indeterminate { reason } => CliError::Indeterminate(reason),
            other => CliError::Input(other.to_string()),
        }
    }
}

type CliResult = Result<Report, CliError>;

fn read_bundle(path: &PathBuf) -> Result<FileBundle, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_file(&text).map_err(CliError::from)
}

fn write_bundle(path: &PathBuf, b: &FileBundle) -> Result<(), CliError> {
    std::fs::write(path, emit_file(b))
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

fn super_view(b: &FileBundle) -> Result<SuperHopfData, CliError> {
    b.super_hopf()
        .ok_or_else(|| CliError::Input("file has no parity vector".into()))
}

fn format_element(labels: &[String], v: &[CycScalar]) -> String {
    let mut parts = Vec::new();
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            if c.is_one() {
                parts.push(labels[i].clone());
            } else {
                parts.push(format!("({})*{}", c, labels[i]));
            }
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn parse_grouplike(spec: &str, dim: usize) -> Result<Vec<CycScalar>, CliError> {
    if !spec.contains(',') {
        if let Ok(idx) = spec.trim().parse::<usize>() {
            if idx >= dim {
                return Err(CliError::Input(format!(
                    "grouplike index {idx} out of range for dimension {dim}"
                )));
            }
            return Ok(hopftwist::linalg::unit_vector(dim, idx));
        }
    }
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != dim {
        return Err(CliError::Input(format!(
            "expected {dim} coefficients, found {}",
            parts.len()
        )));
    }
    parts
        .iter()
        .map(|p| {
            parse_rational(p.trim())
                .map(CycScalar::from_rational)
                .map_err(|e| CliError::Input(e.to_string()))
        })
        .collect()
}

// ---- group specs ----

struct GroupSpec {
    table: GroupTable,
    /// Orders of the cyclic factors, most significant first.
    factors: Vec<usize>,
}

impl GroupSpec {
    fn parse(spec: &str) -> Result<GroupSpec, CliError> {
        let mut factors = Vec::new();
        for part in spec.to_lowercase().split('x') {
            let part = part.trim();
            let Some(rest) = part.strip_prefix('z') else {
                return Err(CliError::Input(format!(
                    "bad group spec component {part:?}; expected e.g. z2, z4"
                )));
            };
            let n: usize = rest
                .parse()
                .map_err(|_| CliError::Input(format!("bad cyclic order in {part:?}")))?;
            if n == 0 {
                return Err(CliError::Input("cyclic order must be positive".into()));
            }
            factors.push(n);
        }
        if factors.is_empty() {
            return Err(CliError::Input("empty group spec".into()));
        }
        let mut table = GroupTable::cyclic(factors[0]);
        for &n in &factors[1..] {
            table = table.product(&GroupTable::cyclic(n));
        }
        Ok(GroupSpec { table, factors })
    }

    /// Mixed-radix digits of an element index, matching the product pairing.
    fn digits(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &n) in self.factors.iter().enumerate().rev() {
            out[slot] = idx % n;
            idx /= n;
        }
        out
    }

    /// Index of the element with the given digits.
    fn index(&self, digits: &[usize]) -> usize {
        let mut idx = 0;
        for (slot, &n) in self.factors.iter().enumerate() {
            idx = idx * n + digits[slot] % n;
        }
        idx
    }

    /// The canonical involution: digit n_j/2 in every factor. Requires every
    /// factor order even.
    fn involution(&self) -> Result<usize, CliError> {
        if self.factors.iter().any(|&n| n % 2 != 0) {
            return Err(CliError::Input(
                "group spec needs even cyclic factors for an involution".into(),
            ));
        }
        let digits: Vec<usize> = self.factors.iter().map(|&n| n / 2).collect();
        Ok(self.index(&digits))
    }
}

// ---- subcommand bodies ----

fn cmd_verify(
    file: &PathBuf,
    super_: bool,
    triangular_flag: bool,
    twist_path: &Option<PathBuf>,
) -> CliResult {
    let b = read_bundle(file)?;
    let mut report = Report::default();

    if super_ {
        let s = super_view(&b)?;
        let failures = superalg::check_super_hopf(&s);
        report.push(
            "super-hopf-axioms",
            failures.is_empty(),
            failures.first().map(|f| f.to_string()),
        );
        if triangular_flag {
            let r = b
                .rmatrix
                .clone()
                .ok_or_else(|| CliError::Input("file has no rmatrix".into()))?;
            let rf = triangular::check_triangular_super(&s, &r);
            report.push(
                "super-triangular",
                rf.is_empty(),
                rf.first().map(|f| f.to_string()),
            );
        }
        if let Some(tp) = twist_path {
            let j = read_twist(tp)?;
            let v = twist::check_twist_super(&s, &j);
            report.push("super-twist", v.is_ok(), v.err().map(|e| e.to_string()));
        }
    } else {
        let failures = hopf::check_hopf(&b.hopf);
        report.push(
            "hopf-axioms",
            failures.is_empty(),
            failures.first().map(|f| f.to_string()),
        );
        if triangular_flag {
            let r = b
                .rmatrix
                .clone()
                .ok_or_else(|| CliError::Input("file has no rmatrix".into()))?;
            let rf = triangular::check_triangular(&b.hopf, &r);
            report.push(
                "triangular",
                rf.is_empty(),
                rf.first().map(|f| f.to_string()),
            );
            if rf.is_empty() {
                let u = triangular::drinfeld_element(&b.hopf, &r);
                report.push(
                    "drinfeld-grouplike",
                    b.hopf.is_grouplike(&u),
                    Some(format!("u = {}", format_element(&b.labels, &u))),
                );
            }
        }
        if let Some(tp) = twist_path {
            let j = read_twist(tp)?;
            let v = twist::check_twist(&b.hopf, &j);
            report.push("twist", v.is_ok(), v.err().map(|e| e.to_string()));
        }
    }
    Ok(report)
}

fn read_twist(path: &PathBuf) -> Result<PairElement, CliError> {
    let b = read_bundle(path)?;
    b.twist
        .ok_or_else(|| CliError::Input(format!("{} has no twist element", path.display())))
}

fn cmd_example(
    name: &str,
    lambda: &Option<String>,
    dim: &Option<usize>,
    group: &Option<String>,
    out: &PathBuf,
) -> CliResult {
    let lambda_scalar = || -> Result<CycScalar, CliError> {
        match lambda {
            None => Ok(CycScalar::zero()),
            Some(s) => parse_rational(s)
                .map(CycScalar::from_rational)
                .map_err(|e| CliError::Input(e.to_string())),
        }
    };
    let group_spec = |default: &str| -> Result<GroupSpec, CliError> {
        GroupSpec::parse(group.as_deref().unwrap_or(default))
    };
    let odd_dim = dim.unwrap_or(1);

    let bundle = match name {
        "sweedler" => {
            let lam = lambda_scalar()?;
            let t = triangular::sweedler(&lam);
            let mut b = FileBundle::from_hopf(t.hopf)
                .with_rmatrix(t.r)
                .with_twist(twist::sweedler_j(&lam));
            b.labels = vec!["1".into(), "x".into(), "g".into(), "gx".into()];
            b
        }
        "group" => {
            let gs = group_spec("z2")?;
            FileBundle::from_hopf(superalg::group_algebra(&gs.table)?)
        }
        "exterior" => FileBundle::from_super(superalg::exterior_hopf(odd_dim)),
        "supergroup" => {
            let gs = group_spec("z2")?;
            gs.involution()?; // demands even factors, so -1 powers close
            let action: Vec<Matrix> = (0..gs.table.order)
                .map(|idx| {
                    let sign: i64 = if gs.digits(idx).iter().sum::<usize>() % 2 == 0 {
                        1
                    } else {
                        -1
                    };
                    Matrix::identity(odd_dim).scale(&CycScalar::from_int(sign))
                })
                .collect();
            FileBundle::from_super(superalg::supergroup_algebra(&gs.table, odd_dim, &action)?)
        }
        "yd-biproduct" => {
            let gs = group_spec("z2")?;
            let u = gs.involution()?;
            // chi(c_j) = zeta_{n_j} on every factor; chi(u) = product of -1's
            if gs.factors.len() % 2 == 0 {
                return Err(CliError::Input(
                    "yd-biproduct example needs an odd number of cyclic factors".into(),
                ));
            }
            let chi_row: Vec<CycScalar> = (0..gs.table.order)
                .map(|idx| {
                    let mut v = CycScalar::one();
                    for (slot, &d) in gs.digits(idx).iter().enumerate() {
                        v = &v * &CycScalar::zeta_pow(gs.factors[slot] as u64, d as u64);
                    }
                    v
                })
                .collect();
            let g_idx = vec![u; odd_dim];
            let chi = vec![chi_row; odd_dim];
            FileBundle::from_hopf(superalg::yd_biproduct(&gs.table, &g_idx, &chi)?)
        }
        "ru" => {
            let gs = group_spec("z2")?;
            let h = superalg::group_algebra(&gs.table)?;
            let u = hopftwist::linalg::unit_vector(h.dim(), gs.involution()?);
            let r = triangular::r_u(&h, &u)?;
            FileBundle::from_hopf(h).with_rmatrix(r)
        }
        other => {
            return Err(CliError::Input(format!(
                "unknown example {other:?}; expected sweedler, group, exterior, supergroup, yd-biproduct, or ru"
            )))
        }
    };
    write_bundle(out, &bundle)?;
    let mut report = Report::default();
    report.push("example-written", true, Some(out.display().to_string()));
    Ok(report)
}

fn cmd_bosonize(file: &PathBuf, spec: &str, out: &Option<PathBuf>) -> CliResult {
    let b = read_bundle(file)?;
    let s = super_view(&b)?;
    let g = parse_grouplike(spec, b.hopf.dim())?;
    let (ordinary, g_image) = correspondence::to_ordinary(&s, &g)?;
    let mut nb = FileBundle::from_hopf(ordinary);
    nb.labels = b.labels.clone();
    let mut report = Report::default();
    report.push(
        "bosonized",
        true,
        Some(format!("g = {}", format_element(&nb.labels, &g_image))),
    );
    emit_or_print(&nb, out, &mut report)?;
    Ok(report)
}

fn cmd_unbosonize(file: &PathBuf, spec: &str, out: &Option<PathBuf>) -> CliResult {
    let b = read_bundle(file)?;
    let u = parse_grouplike(spec, b.hopf.dim())?;
    let boson = correspondence::to_super(&b.hopf, &u)?;
    let mut nb = FileBundle::from_super(boson.super_hopf);
    nb.labels = b.labels.clone();
    let mut report = Report::default();
    report.push(
        "unbosonized",
        true,
        Some(format!(
            "g = {}",
            format_element(&nb.labels, &boson.g)
        )),
    );
    emit_or_print(&nb, out, &mut report)?;
    Ok(report)
}

fn emit_or_print(
    b: &FileBundle,
    out: &Option<PathBuf>,
    report: &mut Report,
) -> Result<(), CliError> {
    match out {
        Some(path) => {
            write_bundle(path, b)?;
            report.note(format!("wrote {}", path.display()));
        }
        None => print!("{}", emit_file(b)),
    }
    Ok(())
}

fn cmd_twist(file: &PathBuf, twist_path: &PathBuf, out: &PathBuf) -> CliResult {
    let b = read_bundle(file)?;
    let j = read_twist(twist_path)?;
    let mut report = Report::default();
    let nb = if let Some(parity) = &b.parity {
        let s = SuperHopfData {
            hopf: b.hopf.clone(),
            parity: parity.clone(),
        };
        twist::check_twist_super(&s, &j)?;
        let twisted = twist::twist_super_hopf(&s, &j)?;
        let mut nb = FileBundle::from_super(twisted.clone());
        if let Some(r) = &b.rmatrix {
            nb = nb.with_rmatrix(twist::twist_r_super(&s, r, &j)?);
        }
        nb
    } else {
        twist::check_twist(&b.hopf, &j)?;
        let twisted = twist::twist_hopf(&b.hopf, &j)?;
        let mut nb = FileBundle::from_hopf(twisted);
        if let Some(r) = &b.rmatrix {
            nb = nb.with_rmatrix(twist::twist_r(&b.hopf, r, &j)?);
        }
        nb
    };
    let mut nb = nb;
    nb.labels = b.labels.clone();
    write_bundle(out, &nb)?;
    report.push("twisted", true, Some(out.display().to_string()));
    Ok(report)
}

fn cmd_minimal_part(file: &PathBuf) -> CliResult {
    let b = read_bundle(file)?;
    let r = b
        .rmatrix
        .clone()
        .ok_or_else(|| CliError::Input("file has no rmatrix".into()))?;
    let (span, rank) = triangular::minimal_part(&b.hopf, &r);
    let mut report = Report::default();
    report.push("minimal-part", true, Some(format!("rank {rank}")));
    for v in span.basis() {
        report.note(format_element(&b.labels, v));
    }
    Ok(report)
}

fn cmd_chevalley(file: &PathBuf) -> CliResult {
    let b = read_bundle(file)?;
    let rep = chevalley::chevalley_report(&b.hopf);
    let mut report = Report::default();
    report.push("coradical-subalgebra", rep.cond3, None);
    report.push("radical-hopf-ideal", rep.cond4, None);
    report.push("squared-antipode-trivial-on-quotient", rep.cond5, None);
    report.push("conditions-agree", rep.agree(), None);
    Ok(report)
}

fn cmd_grouplikes(file: &PathBuf) -> CliResult {
    let b = read_bundle(file)?;
    let (gls, complete) = hopf::grouplikes(&b.hopf);
    if !complete {
        return Err(CliError::Indeterminate(
            "grouplike enumeration incomplete (unsplit character factor)".into(),
        ));
    }
    let mut report = Report::default();
    report.push("grouplikes", true, Some(format!("{} found", gls.len())));
    for g in &gls {
        report.note(format_element(&b.labels, g));
    }
    Ok(report)
}

fn cmd_skewprims(file: &PathBuf, g: usize, h: usize) -> CliResult {
    let b = read_bundle(file)?;
    let d = b.hopf.dim();
    if g >= d || h >= d {
        return Err(CliError::Input(format!(
            "grouplike index out of range for dimension {d}"
        )));
    }
    let gv = hopftwist::linalg::unit_vector(d, g);
    let hv = hopftwist::linalg::unit_vector(d, h);
    let space = hopf::skew_primitives(&b.hopf, &gv, &hv)?;
    let mut report = Report::default();
    report.push(
        "skew-primitives",
        true,
        Some(format!("dimension {}", space.dim())),
    );
    for v in space.basis() {
        report.note(format_element(&b.labels, v));
    }
    Ok(report)
}

fn cmd_generation(file: &PathBuf) -> CliResult {
    let b = read_bundle(file)?;
    let generated = hopf::generated_by_grouplikes_and_skewprims(&b.hopf)?;
    let mut report = Report::default();
    report.push("generated-by-grouplikes-and-skewprims", generated, None);
    Ok(report)
}

fn cmd_catdim_lemma(poly: &str, kmax: u64) -> CliResult {
    let q = IntPoly::parse(poly).map_err(CliError::from)?;
    let scan = catdim::integrality_scan(&q, kmax).map_err(CliError::from)?;
    let root = catdim::has_integer_root(&q);
    let mut report = Report::default();
    match scan {
        ScanResult::FailsAt(k) => {
            report.push(
                "integrality-scan",
                false,
                Some(format!("first failing k = {k}")),
            );
        }
        ScanResult::AllPass => {
            report.push(
                "integrality-scan",
                true,
                Some(format!("all k <= {kmax} integral")),
            );
            if root.is_none() {
                return Err(CliError::Indeterminate(format!(
                    "no integer root but no failure up to kmax = {kmax}"
                )));
            }
        }
    }
    match &root {
        Some(r) => report.note(format!("integer root: {r}")),
        None => report.note("no integer root".into()),
    }
    Ok(report)
}

fn cmd_catdim_fusion(file: &PathBuf) -> CliResult {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", file.display())))?;
    let f = parse_fusion(&text).map_err(CliError::from)?;
    let mut report = Report::default();
    report.push("fusion-ring", true, Some(format!("rank {}", f.rank)));
    for i in 0..f.rank {
        let fp = catdim::fpdim(&f, i);
        let candidates = catdim::dim_candidates(&f, i);
        let cand_str = candidates
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        report.note(match fp {
            FpDim::Integer(n) => format!("object {i}: fpdim = {n}; integer dims {{{cand_str}}}"),
            FpDim::Algebraic { minpoly, lower, upper } => format!(
                "object {i}: fpdim root of {minpoly} in [{lower}, {upper}]; integer dims {{{cand_str}}}"
            ),
        });
    }
    Ok(report)
}

fn run(cli: &Cli) -> CliResult {
    match &cli.cmd {
        Cmd::Verify {
            file,
            super_,
            triangular,
            twist,
        } => cmd_verify(file, *super_, *triangular, twist),
        Cmd::Example {
            name,
            lambda,
            dim,
            group,
            o,
        } => cmd_example(name, lambda, dim, group, o),
        Cmd::Bosonize { file, grouplike, o } => cmd_bosonize(file, &grouplike.grouplike, o),
        Cmd::Unbosonize { file, grouplike, o } => cmd_unbosonize(file, &grouplike.grouplike, o),
        Cmd::Twist { file, twist, o } => cmd_twist(file, twist, o),
        Cmd::MinimalPart { file } => cmd_minimal_part(file),
        Cmd::Chevalley { file } => cmd_chevalley(file),
        Cmd::Grouplikes { file } => cmd_grouplikes(file),
        Cmd::Skewprims { file, g, h } => cmd_skewprims(file, *g, *h),
        Cmd::Generation { file } => cmd_generation(file),
        Cmd::Catdim { which } => match which {
            CatdimCmd::Lemma { poly, kmax } => cmd_catdim_lemma(poly, *kmax),
            CatdimCmd::Fusion { file } => cmd_catdim_fusion(file),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.json));
            if report.all_pass() {
                ExitCode::from(0)
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Indeterminate(msg)) => {
            eprintln!("indeterminate: {msg}");
            ExitCode::from(3)
        }
    }
}
