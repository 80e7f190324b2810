//! Command-line front end for `clifperiod-core`.

pub mod json;
pub mod table;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use clifperiod_core::classify::{classify, classify_complex, clock_hour};
use clifperiod_core::factorize::{complex_factorize, factorize, periodicity_reduce};
use clifperiod_core::lorentz::{
    build_gn_operators, build_vdw_operators, com1_residuals, com2_residuals, gn_to_vdw, reconstruct_ab, GNLabel,
};
use clifperiod_core::matrep::{build_generators, verify_anticommutation};
use clifperiod_core::repsys::{classify_real_rep, interlocking_chain};
use clifperiod_core::{Half, Signature};
use serde::Serialize;

use crate::json::{GammaDoc, MatrixJson, RepDoc, SignatureJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const GN_TOLERANCE: f64 = 1e-10;
pub const VDW_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "clifperiod", version, about = "Clifford algebra periodicity and Spin+(1,3) representations")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify Cl(p,q), or C_n with --complex.
    Classify {
        #[arg(short, default_value_t = 0)]
        p: u32,
        #[arg(short, default_value_t = 0)]
        q: u32,
        #[arg(long, value_name = "N")]
        complex: Option<u32>,
    },
    /// Print the periodic table and compare it with the embedded reference.
    Table {
        #[arg(long, default_value_t = 7)]
        pmax: u32,
        #[arg(long, default_value_t = 7)]
        qmax: u32,
    },
    /// Walk the spinorial clock from Cl(p,q), adding a negative generator per tick.
    Clock {
        #[arg(short, default_value_t = 0)]
        p: u32,
        #[arg(short, default_value_t = 0)]
        q: u32,
        #[arg(long, default_value_t = 8)]
        steps: u32,
    },
    /// Factorize Cl(p,q) into two-generator blocks, or C_n with --complex.
    Factorize {
        #[arg(short, default_value_t = 0)]
        p: u32,
        #[arg(short, default_value_t = 0)]
        q: u32,
        #[arg(long, value_name = "N")]
        complex: Option<u32>,
    },
    /// Build gamma matrices for Cl(p,q).
    Matrep {
        #[arg(short, default_value_t = 0)]
        p: u32,
        #[arg(short, default_value_t = 0)]
        q: u32,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Build Lorentz-group operators in the Gel'fand-Naimark or Van der Waerden basis.
    Rep {
        #[arg(long, num_args = 2, value_names = ["L0", "L1"], conflicts_with = "vdw", required_unless_present = "vdw")]
        gn: Option<Vec<String>>,
        #[arg(long, num_args = 2, value_names = ["L", "LDOT"])]
        vdw: Option<Vec<String>>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Print the interlocking chain C^{n,0} <-> ... <-> C^{0,-n}.
    Chain {
        #[arg(long, value_name = "N")]
        spin2: u32,
    },
    /// Run the invariant suite.
    Verify {
        #[arg(long)]
        all: bool,
        #[arg(long, value_name = "NAME")]
        check: Vec<String>,
        #[arg(long, default_value_t = 8)]
        nmax: u32,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] clifperiod_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("verification failed")]
    Failed,
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Core(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        }
    }

    fn is_broken_pipe(&self) -> bool {
        let kind = match self {
            CliError::Io(e) => Some(e.kind()),
            CliError::Json(e) => e.io_error_kind(),
            _ => None,
        };
        kind == Some(std::io::ErrorKind::BrokenPipe)
    }
}

type Out<'a> = &'a mut dyn Write;

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: Out, err: Out) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(CliError::Failed) => EXIT_FAILURE,
        Err(e) if e.is_broken_pipe() => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn signature(p: u32, q: u32) -> Result<Signature, CliError> {
    Ok(Signature::new(p, q)?)
}

fn emit_json<T: Serialize>(out: Out, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_json_file<T: Serialize>(path: &PathBuf, value: &T) -> Result<(), CliError> {
    let f = std::fs::File::create(path)?;
    let mut w = std::io::BufWriter::new(f);
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn parse_half(s: &str) -> Result<Half, CliError> {
    Half::parse(s).ok_or_else(|| CliError::Usage(format!("not a half-integer: {s:?}")))
}

fn dispatch(cli: &Cli, out: Out) -> Result<(), CliError> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Classify { p, q, complex } => cmd_classify(*p, *q, *complex, json, out),
        Command::Table { pmax, qmax } => cmd_table(*pmax, *qmax, json, out),
        Command::Clock { p, q, steps } => cmd_clock(*p, *q, *steps, json, out),
        Command::Factorize { p, q, complex } => cmd_factorize(*p, *q, *complex, json, out),
        Command::Matrep { p, q, out: file } => cmd_matrep(*p, *q, file.as_ref(), json, out),
        Command::Rep { gn, vdw, out: file } => cmd_rep(gn.as_deref(), vdw.as_deref(), file.as_ref(), json, out),
        Command::Chain { spin2 } => cmd_chain(*spin2, json, out),
        Command::Verify { all, check, nmax } => cmd_verify(*all, check, *nmax, json, out),
    }
}

#[derive(Serialize)]
struct ClassifyJson {
    p: u32,
    q: u32,
    algebra: String,
    ring: String,
    matrix_size: u64,
    simple: bool,
    type_label: u8,
    hour: u8,
    r: i32,
}

#[derive(Serialize)]
struct ComplexJson {
    n: u32,
    algebra: String,
    matrix_size: u64,
    simple: bool,
    hour: u8,
}

fn cmd_classify(p: u32, q: u32, complex: Option<u32>, json: bool, out: Out) -> Result<(), CliError> {
    if let Some(n) = complex {
        let c = classify_complex(n);
        if json {
            return emit_json(out, &ComplexJson { n, algebra: c.to_string(), matrix_size: c.matrix_size, simple: c.simple, hour: c.parity });
        }
        let kind = if c.simple { "simple" } else { "semi-simple" };
        writeln!(out, "C_{n} ≅ {c}, {kind}, hour {}", c.parity)?;
        return Ok(());
    }
    let s = signature(p, q)?;
    let c = classify(s);
    let hour = clock_hour(s);
    if json {
        return emit_json(
            out,
            &ClassifyJson {
                p,
                q,
                algebra: c.algebra().to_string(),
                ring: c.ring.to_string(),
                matrix_size: c.matrix_size,
                simple: c.simple,
                type_label: c.type_label,
                hour: hour.h,
                r: hour.r,
            },
        );
    }
    writeln!(out, "{s} ≅ {c}")?;
    Ok(())
}

#[derive(Serialize)]
struct TableJson {
    pmax: u32,
    qmax: u32,
    rows: Vec<Vec<String>>,
    checked: usize,
    mismatches: Vec<String>,
}

fn cmd_table(pmax: u32, qmax: u32, json: bool, out: Out) -> Result<(), CliError> {
    if pmax + qmax > clifperiod_core::ga::MAX_GENERATORS {
        return Err(CliError::Usage(format!("pmax + qmax must be at most {}", clifperiod_core::ga::MAX_GENERATORS)));
    }
    let (checked, bad) = table::diff(pmax, qmax);
    let mismatches: Vec<String> = bad
        .iter()
        .map(|m| format!("Cl({},{}): expected {}, computed {}", m.p, m.q, table::notation(&m.expected), table::notation(&m.computed)))
        .collect();
    if json {
        let rows = table::computed(pmax, qmax).iter().map(|r| r.iter().map(table::notation).collect()).collect();
        emit_json(out, &TableJson { pmax, qmax, rows, checked, mismatches: mismatches.clone() })?;
    } else {
        write!(out, "{}", table::render(pmax, qmax))?;
        for m in &mismatches {
            writeln!(out, "MISMATCH {m}")?;
        }
        writeln!(out, "reference: {}/{checked} entries match", checked - mismatches.len())?;
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

#[derive(Serialize)]
struct TickJson {
    tick: u32,
    p: u32,
    q: u32,
    hour: u8,
    r: i32,
    algebra: String,
    simple: bool,
    real_rep: String,
}

fn cmd_clock(p: u32, q: u32, steps: u32, json: bool, out: Out) -> Result<(), CliError> {
    signature(p, q + steps)?;
    let ticks: Vec<TickJson> = (0..=steps)
        .map(|t| {
            let s = Signature::const_new(p, q + t);
            let c = classify(s);
            let h = clock_hour(s);
            TickJson {
                tick: t,
                p,
                q: q + t,
                hour: h.h,
                r: h.r,
                algebra: c.algebra().to_string(),
                simple: c.simple,
                real_rep: classify_real_rep(s).to_string(),
            }
        })
        .collect();
    if json {
        return emit_json(out, &ticks);
    }
    for t in &ticks {
        let kind = if t.simple { "simple" } else { "semi-simple" };
        writeln!(out, "tick {}: Cl({},{}) h={} r={} {}, {}, {}", t.tick, t.p, t.q, t.hour, t.r, t.algebra, kind, t.real_rep)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct FactorJson {
    p: u32,
    q: u32,
    factors: Vec<SignatureJson>,
    doubled: bool,
    complexified: bool,
    sign_flips: Vec<String>,
    verified: bool,
    base: SignatureJson,
    octaves: u32,
}

fn cmd_factorize(p: u32, q: u32, complex: Option<u32>, json: bool, out: Out) -> Result<(), CliError> {
    if let Some(n) = complex {
        let m = complex_factorize(n)?;
        let rhs = if m == 0 { "C".to_string() } else { vec!["C_2"; m as usize].join(" ⊗ ") };
        if json {
            return emit_json(out, &serde_json::json!({ "n": n, "factors": m }));
        }
        writeln!(out, "C_{n} ≅ {rhs}")?;
        return Ok(());
    }
    let s = signature(p, q)?;
    let f = factorize(s)?;
    let red = periodicity_reduce(s);
    let verified = f.verify();
    let flips: Vec<String> =
        f.residual_sign_flips.iter().map(|x| format!("step {}: {} -> {}", x.step + 1, x.before, x.after)).collect();
    if json {
        emit_json(
            out,
            &FactorJson {
                p,
                q,
                factors: f.factors.iter().map(|x| SignatureJson { p: x.p(), q: x.q() }).collect(),
                doubled: f.doubled,
                complexified: f.complexified,
                sign_flips: flips,
                verified,
                base: SignatureJson { p: red.base.p(), q: red.base.q() },
                octaves: red.octaves,
            },
        )?;
    } else {
        writeln!(out, "{f}")?;
        for x in &flips {
            writeln!(out, "  sign flip after {x}")?;
        }
        if red.octaves > 0 {
            writeln!(out, "  periodicity: base {} with {} octave(s)", red.base, red.octaves)?;
        }
        writeln!(out, "  class check: {}", if verified { "ok" } else { "FAILED" })?;
    }
    if verified {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn cmd_matrep(p: u32, q: u32, file: Option<&PathBuf>, json: bool, out: Out) -> Result<(), CliError> {
    let s = signature(p, q)?;
    let g = build_generators(s)?;
    let ok = verify_anticommutation(&g);
    let rank = (s.n() <= 8).then(|| g.faithfulness_rank());
    let faithful = rank.is_none_or(|r| r == s.blade_count());
    let doc = GammaDoc {
        signature: SignatureJson { p, q },
        reducible: g.reducible,
        anticommutation: ok,
        faithfulness_rank: rank,
        gammas: g.gammas.iter().map(MatrixJson::from).collect(),
    };
    if let Some(path) = file {
        write_json_file(path, &doc)?;
    }
    if json && file.is_none() {
        emit_json(out, &doc)?;
    } else if !json {
        writeln!(out, "{s}: {} gamma matrices of dim {}{}", g.gammas.len(), g.dim(), if g.reducible { " (reducible)" } else { "" })?;
        writeln!(out, "  anticommutation: {}", if ok { "ok" } else { "FAILED" })?;
        match rank {
            Some(r) => writeln!(out, "  faithfulness rank: {r} of {}", s.blade_count())?,
            None => writeln!(out, "  faithfulness rank: skipped for n > 8")?,
        }
        if let Some(path) = file {
            writeln!(out, "  written to {}", path.display())?;
        } else {
            for (i, m) in g.gammas.iter().enumerate() {
                writeln!(out, "gamma_{}:\n{m}", i + 1)?;
            }
        }
    } else if let Some(path) = file {
        emit_json(out, &serde_json::json!({ "written": path.display().to_string() }))?;
    }
    if ok && faithful {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn cmd_rep(
    gn: Option<&[String]>,
    vdw: Option<&[String]>,
    file: Option<&PathBuf>,
    json: bool,
    out: Out,
) -> Result<(), CliError> {
    let mut docs = Vec::new();
    if let Some([l0, l1]) = gn {
        let label = GNLabel::new(parse_half(l0)?, parse_half(l1)?)?;
        let ops = build_gn_operators(label)?;
        let res = com1_residuals(&reconstruct_ab(&ops));
        docs.push(RepDoc {
            basis: "gn".into(),
            label: [label.l0.to_string(), label.l1.to_string()],
            dim: label.dim(),
            operators: json::named(&ops.named()),
            passed: res.iter().all(|(_, r)| *r <= GN_TOLERANCE),
            residuals: json::residuals(&res),
            tolerance: GN_TOLERANCE,
        });
        let v = gn_to_vdw(&ops);
        let res = com2_residuals(&v);
        docs.push(RepDoc {
            basis: "vdw-from-gn".into(),
            label: [v.label.l.to_string(), v.label.l_dot.to_string()],
            dim: label.dim(),
            operators: json::named(&v.named()),
            passed: res.iter().all(|(_, r)| *r <= VDW_TOLERANCE),
            residuals: json::residuals(&res),
            tolerance: VDW_TOLERANCE,
        });
    } else if let Some([l, ld]) = vdw {
        let v = build_vdw_operators(parse_half(l)?, parse_half(ld)?)?;
        let res = com2_residuals(&v);
        docs.push(RepDoc {
            basis: "vdw".into(),
            label: [v.label.l.to_string(), v.label.l_dot.to_string()],
            dim: v.label.dim(),
            operators: json::named(&v.named()),
            passed: res.iter().all(|(_, r)| *r <= VDW_TOLERANCE),
            residuals: json::residuals(&res),
            tolerance: VDW_TOLERANCE,
        });
    } else {
        return Err(CliError::Usage("one of --gn or --vdw is required".into()));
    }
    if let Some(path) = file {
        write_json_file(path, &docs)?;
    }
    if json && file.is_none() {
        emit_json(out, &docs)?;
    } else if !json {
        for d in &docs {
            let names = if d.basis == "gn" { ("l0", "l1") } else { ("l", "ldot") };
            writeln!(out, "{} basis, {} = {}, {} = {}, dim {}", d.basis, names.0, d.label[0], names.1, d.label[1], d.dim)?;
            for r in &d.residuals {
                writeln!(out, "  {:<14} {:.3e}", r.relation, r.residual)?;
            }
            writeln!(out, "  {} (tolerance {:e})", if d.passed { "PASS" } else { "FAIL" }, d.tolerance)?;
        }
        if let Some(path) = file {
            writeln!(out, "written to {}", path.display())?;
        }
    } else if let Some(path) = file {
        emit_json(out, &serde_json::json!({ "written": path.display().to_string() }))?;
    }
    if docs.iter().all(|d| d.passed) {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn cmd_chain(spin2: u32, json: bool, out: Out) -> Result<(), CliError> {
    let chain = interlocking_chain(spin2);
    if json {
        let labels: Vec<_> = chain.labels.iter().map(|l| serde_json::json!({ "a": l.a, "b": l.b, "dim": l.dim() })).collect();
        return emit_json(out, &labels);
    }
    writeln!(out, "{chain}")?;
    Ok(())
}

fn cmd_verify(all: bool, check: &[String], nmax: u32, json: bool, out: Out) -> Result<(), CliError> {
    if !all && check.is_empty() {
        return Err(CliError::Usage(format!("pass --all or --check NAME (one of: {})", verify::check_names().join(", "))));
    }
    if let Some(bad) = check.iter().find(|c| !verify::check_names().contains(&c.as_str())) {
        return Err(CliError::Usage(format!("unknown check {bad:?}")));
    }
    if nmax > 12 {
        return Err(CliError::Usage("--nmax must be at most 12".into()));
    }
    let selected = if all { Vec::new() } else { check.to_vec() };
    let results = verify::run(&selected, nmax);
    if json {
        emit_json(out, &results)?;
    } else {
        for c in &results {
            writeln!(out, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
    }
    if results.iter().all(|c| c.passed) {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}
