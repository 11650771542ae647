//! Command-line surface: validation, construction, verification, orbit and
//! twin listings, classification and seeded enumeration.
//!
//! Exit codes: 0 success, 1 domain failure, 2 parse error, 3 I/O error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::matrices::{primitive_idempotents, Matrix, MatrixDoc};
use crate::params::{
    self, check_pair_admissible, check_triple_admissible, group_orbit, hat_invariant, orbit_key,
    parameter_array, random_admissible, triple_orbit, twins, ArrayDoc, Generator, QRacahTuple, TupleDoc,
};
use crate::realize::{build_triple, transition_matrix};
use crate::report::{Check, Report};
use crate::scalars::FieldConfig;
use crate::verify::{full_verification, verify_bundle};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_IO: i32 = 3;

const EPOCH: &str = "1970-01-01T00:00:00Z";

#[derive(Parser, Debug)]
#[command(name = "leonard", version, about = "Exact Leonard pairs and triples of QRacah type")]
pub struct Cli {
    /// Field for scalars: Q or GF:p.
    #[arg(long, global = true, env = "LEONARD_FIELD", default_value = "Q")]
    pub field: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Admissibility report; exit 0 iff admissible.
    Validate {
        #[command(flatten)]
        tuple: TupleArgs,
        #[arg(long)]
        pair_only: bool,
    },
    /// Writes the realization bundle.
    Build {
        #[command(flatten)]
        tuple: TupleArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        emit: Vec<Emit>,
    },
    /// Full verification of a tuple or of a stored bundle.
    Verify {
        #[command(flatten)]
        tuple: TupleArgs,
        #[arg(long)]
        from: Option<PathBuf>,
    },
    Orbit {
        #[command(flatten)]
        tuple: TupleArgs,
        #[arg(long, value_enum, default_value_t = Group::Z2cubed)]
        group: Group,
    },
    Twins {
        #[command(flatten)]
        tuple: TupleArgs,
    },
    /// Groups newline-delimited tuple records into isomorphism classes.
    Classify {
        #[arg(long)]
        input: PathBuf,
        /// Diameter for records that omit it.
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        timestamp: Option<String>,
    },
    /// Seeded random search for admissible tuples, verified and catalogued.
    Enumerate {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        attempts: usize,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        timestamp: Option<String>,
    },
}

#[derive(Args, Debug, Default)]
pub struct TupleArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    #[arg(long)]
    pub d: Option<usize>,
    /// JSON file holding {a,b,c,q,d,field}.
    #[arg(long)]
    pub tuple_file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Idempotents,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Group {
    D4,
    Full,
    Z2cubed,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn parse(m: impl Into<String>) -> Self {
        CliError { code: EXIT_PARSE, message: m.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::NotPrime(_) | Error::ModulusTooSmall { .. } | Error::DiameterTooSmall(_) => {
                EXIT_PARSE
            }
            Error::Io(_) => EXIT_IO,
            _ => EXIT_DOMAIN,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError { code: EXIT_IO, message: e.to_string() }
    }
}

type CliResult = std::result::Result<i32, CliError>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdempotentDoc {
    pub e: Vec<MatrixDoc>,
    pub e_star: Vec<MatrixDoc>,
    pub e_eps: Vec<MatrixDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bundle {
    pub tuple: TupleDoc,
    pub parameter_array: ArrayDoc,
    pub a: MatrixDoc,
    pub a_star: MatrixDoc,
    pub a_eps: MatrixDoc,
    pub m: MatrixDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub idempotents: Option<IdempotentDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub tuple: String,
    pub d: usize,
    pub field: String,
    pub hat: String,
    pub orbit_key: String,
    pub verified: bool,
    pub timestamp: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<usize>,
}

/// One input line for `classify`: either `(a,b,c;q)` or a JSON object.
#[derive(Debug, Default, Deserialize)]
struct InputRecord {
    tuple: Option<String>,
    a: Option<String>,
    b: Option<String>,
    c: Option<String>,
    q: Option<String>,
    d: Option<usize>,
    field: Option<String>,
}

pub fn timestamp(flag: Option<&str>) -> String {
    if let Some(t) = flag {
        return t.to_string();
    }
    std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|s| s.trim().parse::<i64>().ok())
        .and_then(|s| chrono::DateTime::from_timestamp(s, 0))
        .map(|t| t.format("%Y-%m-%dT%H:%M:%SZ").to_string())
        .unwrap_or_else(|| EPOCH.to_string())
}

/// Splits `(a,b,c;q)` into its four slot strings.
pub fn split_tuple_text(s: &str) -> Option<[String; 4]> {
    let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
    let (abc, q) = inner.split_once(';')?;
    let parts: Vec<&str> = abc.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return None;
    }
    Some([parts[0].into(), parts[1].into(), parts[2].into(), q.trim().into()])
}

fn read_text(path: &Path) -> std::result::Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError { code: EXIT_IO, message: format!("{}: {e}", path.display()) })
}

fn resolve_tuple(args: &TupleArgs, field: FieldConfig) -> std::result::Result<QRacahTuple, CliError> {
    if let Some(path) = &args.tuple_file {
        let doc: TupleDoc = serde_json::from_str(&read_text(path)?).map_err(|e| CliError::parse(e.to_string()))?;
        return Ok(QRacahTuple::from_doc(&doc)?);
    }
    let need = |x: &Option<String>, n: &str| x.clone().ok_or_else(|| CliError::parse(format!("missing --{n}")));
    let (a, b, c, q) = (need(&args.a, "a")?, need(&args.b, "b")?, need(&args.c, "c")?, need(&args.q, "q")?);
    let d = args.d.ok_or_else(|| CliError::parse("missing --d"))?;
    Ok(QRacahTuple::parse(field, &a, &b, &c, &q, d)?)
}

fn emit_report(out: &mut dyn Write, format: Format, report: &Report) -> std::io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{report}"),
        Format::Structured => {
            for c in &report.checks {
                writeln!(out, "{}", serde_json::to_string(c).expect("serializable"))?;
            }
            Ok(())
        }
    }
}

fn emit_tuples(out: &mut dyn Write, format: Format, ts: &[QRacahTuple], note: Option<&str>) -> std::io::Result<()> {
    for t in ts {
        match format {
            Format::Text => match note {
                Some(n) => writeln!(out, "{}\t{n}", t.key())?,
                None => writeln!(out, "{}", t.key())?,
            },
            Format::Structured => {
                let mut v = serde_json::json!({"tuple": t.key(), "d": t.d(), "field": t.field().to_string()});
                if let Some(n) = note {
                    v["case"] = n.into();
                }
                writeln!(out, "{v}")?;
            }
        }
    }
    Ok(())
}

/// Appends one record per call as a single buffered line write.
pub fn append_record(path: &Path, rec: &CatalogRecord) -> std::io::Result<()> {
    let mut line = serde_json::to_string(rec).expect("serializable");
    line.push('\n');
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    f.write_all(line.as_bytes())?;
    f.sync_data()
}

fn write_atomic(path: &Path, text: &str) -> std::io::Result<()> {
    let mut name = path.file_name().unwrap_or_default().to_os_string();
    name.push(format!(".{}.tmp", std::process::id()));
    let tmp = path.with_file_name(name);
    let mut f = fs::File::create(&tmp)?;
    f.write_all(text.as_bytes())?;
    f.sync_all()?;
    drop(f);
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })
}

fn emit_records(
    out: &mut dyn Write,
    format: Format,
    catalog: Option<&Path>,
    records: &[CatalogRecord],
) -> std::io::Result<()> {
    if let Some(path) = catalog {
        for r in records {
            append_record(path, r)?;
        }
    }
    for r in records {
        match format {
            Format::Structured => writeln!(out, "{}", serde_json::to_string(r).expect("serializable"))?,
            Format::Text => {
                let members = r.members.map(|m| format!(" members={m}")).unwrap_or_default();
                writeln!(
                    out,
                    "{} d={} hat={} orbit={} verified={}{members}",
                    r.tuple, r.d, r.hat, r.orbit_key, r.verified
                )?
            }
        }
    }
    Ok(())
}

pub fn catalog_record(t: &QRacahTuple, verified: bool, ts: &str) -> crate::error::Result<CatalogRecord> {
    Ok(CatalogRecord {
        tuple: t.key(),
        d: t.d(),
        field: t.field().to_string(),
        hat: hat_invariant(t)?.to_string(),
        orbit_key: orbit_key(t)?,
        verified,
        timestamp: ts.to_string(),
        members: None,
    })
}

pub fn build_bundle(t: &QRacahTuple, idempotents: bool) -> crate::error::Result<Bundle> {
    let r = build_triple(t)?;
    let m = transition_matrix(t)?;
    let docs = |v: &[Matrix]| v.iter().map(Matrix::to_doc).collect::<Vec<_>>();
    Ok(Bundle {
        tuple: t.to_doc(),
        parameter_array: parameter_array(t)?.to_doc(),
        a: r.a.to_doc(),
        a_star: r.a_star.to_doc(),
        a_eps: r.a_eps.to_doc(),
        m: m.to_doc(),
        idempotents: idempotents.then(|| IdempotentDoc { e: docs(&r.e), e_star: docs(&r.e_star), e_eps: docs(&r.e_eps) }),
    })
}

/// Verification of a stored bundle; every stored artifact must match.
pub fn verify_bundle_doc(b: &Bundle) -> std::result::Result<Report, CliError> {
    let t = QRacahTuple::from_doc(&b.tuple)?;
    let f = t.field();
    let mat = |d: &MatrixDoc| Matrix::from_doc(d, f).map_err(CliError::from);
    let (a, s, e, m) = (mat(&b.a)?, mat(&b.a_star)?, mat(&b.a_eps)?, mat(&b.m)?);
    let mut rep = verify_bundle(&t, &a, &s, &e, &m);
    if !rep.overall() {
        return Ok(rep);
    }
    let stored = parameter_array(&t).map(|p| p.to_doc() == b.parameter_array);
    rep.push(match stored {
        Ok(true) => Check::pass("stored parameter array"),
        Ok(false) => Check::fail("stored parameter array", "differs from the tuple"),
        Err(err) => Check::fail("stored parameter array", err.to_string()),
    });
    if let Some(idem) = &b.idempotents {
        let eig = params::triple_eigen_data(&t)?;
        let sets = [(&a, &eig.theta, &idem.e, "E"), (&s, &eig.theta_star, &idem.e_star, "E*"), (&e, &eig.theta_eps, &idem.e_eps, "E^ε")];
        let mut witness = None;
        for (x, th, docs, label) in sets {
            let expect = primitive_idempotents(x, th)?;
            if docs.len() != expect.len() {
                witness = Some(format!("{} stored {label} matrices", docs.len()));
                break;
            }
            for (i, (doc, ex)) in docs.iter().zip(&expect).enumerate() {
                if &mat(doc)? != ex {
                    witness = witness.or(Some(format!("{label}_{i}")));
                }
            }
        }
        rep.push(Check::from_witness("stored idempotents", witness));
    }
    Ok(rep)
}

fn parse_input_line(line: &str, field: FieldConfig, d: Option<usize>) -> crate::error::Result<QRacahTuple> {
    let rec: InputRecord = if line.trim_start().starts_with('{') {
        serde_json::from_str(line)?
    } else {
        InputRecord { tuple: Some(line.to_string()), ..Default::default() }
    };
    let field = match &rec.field {
        Some(f) => f.parse()?,
        None => field,
    };
    let d = rec.d.or(d).ok_or_else(|| Error::Parse("record has no diameter; pass --d".into()))?;
    let slots = match (&rec.tuple, &rec.a, &rec.b, &rec.c, &rec.q) {
        (Some(text), ..) => split_tuple_text(text).ok_or_else(|| Error::Parse(format!("malformed tuple {text:?}")))?,
        (None, Some(a), Some(b), Some(c), Some(q)) => [a.clone(), b.clone(), c.clone(), q.clone()],
        _ => return Err(Error::Parse("record needs a tuple or all of a, b, c, q".into())),
    };
    QRacahTuple::parse(field, &slots[0], &slots[1], &slots[2], &slots[3], d)
}

#[allow(clippy::too_many_arguments)]
fn cmd_classify(
    out: &mut dyn Write,
    err: &mut dyn Write,
    format: Format,
    field: FieldConfig,
    input: &Path,
    d: Option<usize>,
    strict: bool,
    catalog: Option<&Path>,
    ts: &str,
) -> CliResult {
    let text = read_text(input)?;
    let mut tuples = Vec::new();
    let mut worst = EXIT_OK;
    for (n, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match parse_input_line(line, field, d) {
            Ok(t) if params::is_triple_admissible(&t) => tuples.push(t),
            Ok(t) => {
                writeln!(err, "warning: line {}: {} is not triple-admissible, skipped", n + 1, t.key())?;
                worst = worst.max(EXIT_DOMAIN);
            }
            Err(e) => {
                writeln!(err, "warning: line {}: {e}, skipped", n + 1)?;
                worst = EXIT_PARSE;
            }
        }
    }
    let keyed: Vec<(String, String, QRacahTuple)> = tuples
        .into_par_iter()
        .map(|t| {
            let hat = format!("{} d={} {}", hat_invariant(&t).expect("admissible"), t.d(), t.field());
            let ok = orbit_key(&t).expect("admissible");
            (hat, ok, t)
        })
        .collect();
    let mut classes: BTreeMap<String, Vec<(String, QRacahTuple)>> = BTreeMap::new();
    for (hat, ok, t) in keyed {
        classes.entry(hat).or_default().push((ok, t));
    }
    let mut seen_orbits = BTreeMap::new();
    for (hat, members) in &classes {
        let key = &members[0].0;
        if let Some((_, other)) = members.iter().find(|(k, _)| k != key) {
            writeln!(err, "hat class {hat} spans two orbits: {key} and {other}")?;
            return Ok(EXIT_DOMAIN);
        }
        if let Some(prev) = seen_orbits.insert(key.clone(), hat.clone()) {
            writeln!(err, "orbit {key} has two hat invariants: {prev} and {hat}")?;
            return Ok(EXIT_DOMAIN);
        }
    }
    let records: Vec<CatalogRecord> = classes
        .into_par_iter()
        .map(|(_, members)| {
            let rep = triple_orbit(&members[0].1).expect("admissible").remove(0);
            let verified = full_verification(&rep).overall();
            let mut rec = catalog_record(&rep, verified, ts).expect("admissible");
            rec.members = Some(members.len());
            rec
        })
        .collect();
    emit_records(out, format, catalog, &records)?;
    if records.iter().any(|r| !r.verified) {
        return Ok(EXIT_DOMAIN);
    }
    Ok(if strict { worst } else { EXIT_OK })
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    out: &mut dyn Write,
    format: Format,
    field: FieldConfig,
    d: usize,
    count: usize,
    seed: u64,
    attempts: usize,
    catalog: Option<&Path>,
    ts: &str,
) -> CliResult {
    field.check_diameter(d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut drawn = Vec::with_capacity(count);
    for _ in 0..count {
        drawn.push(random_admissible(&mut rng, field, d, attempts)?);
    }
    let mut records: Vec<CatalogRecord> = drawn
        .par_iter()
        .map(|t| catalog_record(t, full_verification(t).overall(), ts).expect("admissible"))
        .collect();
    records.sort_by(|x, y| x.tuple.cmp(&y.tuple));
    emit_records(out, format, catalog, &records)?;
    Ok(if records.iter().all(|r| r.verified) { EXIT_OK } else { EXIT_DOMAIN })
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let field: FieldConfig = cli.field.parse()?;
    let format = cli.format;
    match cli.command {
        Command::Validate { tuple, pair_only } => {
            let t = resolve_tuple(&tuple, field)?;
            let rep = if pair_only { check_pair_admissible(&t) } else { check_triple_admissible(&t) };
            emit_report(out, format, &rep)?;
            if let Some(s) = rep.failure_summary() {
                writeln!(err, "{s}")?;
                return Ok(EXIT_DOMAIN);
            }
            Ok(EXIT_OK)
        }
        Command::Build { tuple, out: path, emit } => {
            let t = resolve_tuple(&tuple, field)?;
            let bundle = build_bundle(&t, emit.contains(&Emit::Idempotents))?;
            let text = serde_json::to_string_pretty(&bundle).expect("serializable") + "\n";
            match path {
                Some(p) => write_atomic(&p, &text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { tuple, from } => {
            let rep = match from {
                Some(p) => {
                    let b: Bundle =
                        serde_json::from_str(&read_text(&p)?).map_err(|e| CliError::parse(e.to_string()))?;
                    verify_bundle_doc(&b)?
                }
                None => full_verification(&resolve_tuple(&tuple, field)?),
            };
            emit_report(out, format, &rep)?;
            if let Some(s) = rep.failure_summary() {
                writeln!(err, "{s}")?;
                return Ok(EXIT_DOMAIN);
            }
            Ok(EXIT_OK)
        }
        Command::Orbit { tuple, group } => {
            let t = resolve_tuple(&tuple, field)?;
            let list = match group {
                Group::D4 => group_orbit(&t, &Generator::D4)?,
                Group::Full => group_orbit(&t, &Generator::ALL)?,
                Group::Z2cubed => triple_orbit(&t)?,
            };
            emit_tuples(out, format, &list, None)?;
            Ok(EXIT_OK)
        }
        Command::Twins { tuple } => {
            let t = resolve_tuple(&tuple, field)?;
            let (case, list) = twins(&t)?;
            emit_tuples(out, format, &list, Some(&case.to_string()))?;
            Ok(EXIT_OK)
        }
        Command::Classify { input, d, strict, catalog, timestamp: ts } => {
            let ts = timestamp(ts.as_deref());
            cmd_classify(out, err, format, field, &input, d, strict, catalog.as_deref(), &ts)
        }
        Command::Enumerate { d, count, seed, attempts, catalog, timestamp: ts } => {
            let ts = timestamp(ts.as_deref());
            cmd_enumerate(out, format, field, d, count, seed, attempts, catalog.as_deref(), &ts)
        }
    }
}

/// Parses `args` (program name first) and runs the command, returning the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["leonard", "--field", "Q"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn validate_exit_codes() {
        let base = ["validate", "--a", "3", "--b", "5", "--q", "2", "--d", "3"];
        let with_c = |c: &'static str, extra: &[&'static str]| {
            let mut v = base.to_vec();
            v.extend(["--c", c]);
            v.extend_from_slice(extra);
            call(&v)
        };
        assert_eq!(with_c("7", &[]).0, 0);
        let (code, out, err) = with_c("2", &[]);
        assert_eq!(code, 1);
        assert!(out.contains("T-RQRAC3: c²=q²"));
        assert_eq!(err.trim(), "T-RQRAC3: c²=q²");
        assert_eq!(with_c("2", &["--pair-only"]).0, 0);
        assert_eq!(with_c("2/0", &[]).0, 2);
        assert_eq!(call(&["validate", "--a", "3"]).0, 2);
        assert_eq!(call(&["nonsense"]).0, 2);
    }

    #[test]
    fn negative_scalars_parse() {
        let (code, ..) = call(&["validate", "--a", "-3", "--b", "5", "--c", "4/15", "--q", "2", "--d", "3"]);
        assert_eq!(code, 0);
        let (code, ..) = call(&["validate", "--a", "−3", "--b", "5", "--c", "4/15", "--q", "2", "--d", "3"]);
        assert_eq!(code, 0);
    }

    #[test]
    fn listings() {
        let t = ["--a", "3", "--b", "5", "--c", "7", "--q", "2", "--d", "3"];
        let mut args = vec!["orbit", "--group", "z2cubed"];
        args.extend(t);
        let (code, out, _) = call(&args);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 8);
        let mut args = vec!["twins"];
        args.extend(t);
        let (code, out, _) = call(&args);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 4);
        assert!(out.lines().all(|l| l.ends_with("case (i)")));
        let mut args = vec!["orbit", "--group", "full"];
        args.extend(t);
        assert_eq!(call(&args).1.lines().count(), 48);
    }

    #[test]
    fn tuple_text_round_trip() {
        assert_eq!(
            split_tuple_text("(3, -1/2,7;2)").unwrap(),
            ["3".to_string(), "-1/2".into(), "7".into(), "2".into()]
        );
        assert!(split_tuple_text("(3,5;2)").is_none());
        let t = parse_input_line("(3,5,7;2)", FieldConfig::Rationals, Some(3)).unwrap();
        assert_eq!(t.key(), "(3,5,7;2)");
        let t = parse_input_line(r#"{"tuple":"(3,5,7;2)","d":4,"field":"GF:1009"}"#, FieldConfig::Rationals, None)
            .unwrap();
        assert_eq!(t.field(), FieldConfig::Prime(1009));
        assert!(parse_input_line("(3,5,7;2)", FieldConfig::Rationals, None).is_err());
    }

    #[test]
    fn timestamp_override() {
        assert_eq!(timestamp(Some("2020-01-01T00:00:00Z")), "2020-01-01T00:00:00Z");
    }
}
