//! The `leonard-kit` command-line front end.
//!
//! Commands read one JSON instance (from `--input` or stdin) and write one
//! JSON document to stdout; diagnostics go to stderr. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | internal self-check failure |
//! | 2 | unreadable or malformed input, bad ordering, size mismatch, i/o failure |
//! | 3 | a matrix is not multiplicity-free |
//! | 4 | prime too large for exhaustive root search |
//! | 5 | parameter array violates distinctness or nonvanishing |
//! | 6 | `certify` on a pair that is not a Leonard system |
//! | 7 | `random` ran out of sampling attempts |

pub mod documents;

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::leonard::{
    antiautomorphism_in_eigenbasis, characterize, check_parameter_array, companion_for, construct_pair,
    find_leonard_orderings, random_parameter_array, verdict_for, ParameterArray,
};
use crate::linalg::{Field, SquareMatrix};
use crate::split::{graded_polynomials, split_uniqueness_witness, subspace_identities, Orderings, PairSetup};
use documents::*;

#[derive(Parser, Debug)]
#[command(name = "leonard-kit", version, about = "Exact recognition and construction of Leonard pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether an instance is a Leonard system and report the evidence.
    Classify {
        /// Instance file (stdin when omitted).
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Build the bidiagonal pair of a parameter array and check its conditions.
    Construct {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Emit a fully verified certificate for a Leonard system.
    Certify {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Sample valid parameter arrays, one JSON document per line.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        d: usize,
        /// `rational` or `gf:P`.
        #[arg(long, default_value = "rational", value_parser = parse_field_flag)]
        field: FieldSpec,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

fn parse_field_flag(s: &str) -> std::result::Result<FieldSpec, String> {
    if s == "rational" {
        return Ok(FieldSpec::Rational);
    }
    let p = s
        .strip_prefix("gf:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| format!("expected `rational` or `gf:P`, got {s:?}"))?;
    Field::prime(p).map_err(|e| e.to_string())?;
    Ok(FieldSpec::Gf(p))
}

/// Process exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotMultiplicityFree => 3,
        Error::ModulusTooLarge { .. } => 4,
        Error::InvariantViolation(_) => 5,
        Error::NotLeonard => 6,
        Error::SamplingBudgetExhausted { .. } => 7,
        Error::CertificateCheck(_) => 1,
        _ => 2,
    }
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    match command {
        Command::Classify { input } => {
            let doc = certificate(&load(input, stdin)?, false)?;
            emit(stdout, &doc, stderr)
        }
        Command::Certify { input } => {
            let doc = certificate(&load(input, stdin)?, true)?;
            emit(stdout, &doc, stderr)
        }
        Command::Construct { input } => {
            let doc = construct(&load(input, stdin)?)?;
            emit(stdout, &doc, stderr)
        }
        Command::Random { seed, d, field, count } => random(seed, d, field, count, stdout),
    }
}

fn emit<T: serde::Serialize>(stdout: &mut dyn Write, doc: &T, stderr: &mut dyn Write) -> Result<()> {
    let text = serde_json::to_string_pretty(doc).map_err(|e| Error::CertificateCheck(e.to_string()))?;
    writeln!(stdout, "{text}").map_err(|e| Error::Io(format!("cannot write output: {e}")))?;
    let _ = stderr.flush();
    Ok(())
}

/// A parsed instance.
pub struct Instance {
    pub field: Field,
    pub a: SquareMatrix,
    pub a_star: SquareMatrix,
    pub orderings: Option<Orderings>,
    pub array: Option<ParameterArray>,
}

fn load(path: Option<PathBuf>, stdin: &mut dyn Read) -> Result<Instance> {
    let text = match path {
        Some(p) => fs::read_to_string(&p).map_err(|e| Error::Io(format!("cannot read {}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Error::Io(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    let doc: InstanceDocument = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    parse_instance(&doc)
}

/// Turns a document into matrices; parameter arrays are transcribed into
/// their bidiagonal pair.
pub fn parse_instance(doc: &InstanceDocument) -> Result<Instance> {
    let field = doc.field.field().map_err(|e| Error::Parse(e.to_string()))?;
    let orderings = doc.orderings.as_ref().map(|o| o.parse(field)).transpose()?;
    let (a, a_star, array) = match (&doc.matrices, &doc.parameter_array) {
        (Some(m), None) => {
            let a = parse_matrix(field, &m.a, "A")?;
            let a_star = parse_matrix(field, &m.a_star, "A_star")?;
            if a.dim() != a_star.dim() {
                return Err(Error::DimMismatch { expected: a.dim(), found: a_star.dim() });
            }
            (a, a_star, None)
        }
        (None, Some(p)) => {
            let pa = p.parse(field)?;
            let (a, a_star) = construct_pair(&pa)?;
            (a, a_star, Some(pa))
        }
        _ => return Err(Error::Parse("exactly one of `matrices` and `parameter_array` is required".into())),
    };
    Ok(Instance { field, a, a_star, orderings, array })
}

/// The classification document; with `full` also the conjugators, after
/// every certificate has been re-verified.
pub fn certificate(inst: &Instance, full: bool) -> Result<CertificateDocument> {
    let mut diagnostics = Vec::new();
    let found = find_leonard_orderings(&inst.a, &inst.a_star)?;
    let orderings = match (&inst.orderings, &inst.array) {
        (Some(o), _) => {
            diagnostics.push("orderings taken from the input".to_string());
            o.clone()
        }
        (None, Some(pa)) => {
            diagnostics.push("orderings taken from the parameter array".to_string());
            pa.orderings()
        }
        (None, None) => match found.first() {
            Some(o) => {
                diagnostics.push(format!("orderings: first of {} found by path search", found.len()));
                o.clone()
            }
            None => {
                diagnostics.push("no Leonard ordering exists; using canonical eigenvalue order".to_string());
                PairSetup::new(&inst.a, &inst.a_star, None)?.orderings()
            }
        },
    };
    let setup = PairSetup::new(&inst.a, &inst.a_star, Some(&orderings))?;
    let verdict = verdict_for(&setup);
    if verdict.is_leonard_system {
        diagnostics.push("all four vanishing conditions hold: Leonard system".to_string());
    }
    for c in verdict.failed() {
        diagnostics.push(format!("condition {} fails: {}", c.name(), c.statement()));
    }
    if let Some(w) = &verdict.failure_witness {
        let kind = if w.should_vanish() { "is nonzero" } else { "vanishes" };
        diagnostics.push(format!("first offending product ({}, {}) for {} {kind}", w.i, w.j, w.condition));
    }
    let split = if setup.exists_split() {
        diagnostics.push("split decomposition exists for these orderings".to_string());
        Some(setup.build_split()?)
    } else {
        diagnostics.push("no split decomposition for these orderings".to_string());
        None
    };
    let companion = if verdict.is_leonard_system { Some(companion_for(&setup)?) } else { None };
    if let Some(pa) = &inst.array {
        let report = check_parameter_array(pa)?;
        match report.failed_condition {
            None => diagnostics.push("parameter array conditions hold".to_string()),
            Some(c) => diagnostics.push(format!("parameter array fails {}: {}", c.name(), c.description())),
        }
        if let (Some(cf), Some(phi)) = (&companion, &report.phi) {
            if orderings == pa.orderings() && &cf.phi != phi {
                return Err(Error::CertificateCheck("companion sequence disagrees with the array".into()));
            }
        }
    }
    let mut antiautomorphism = None;
    let mut g = None;
    if full {
        if !verdict.is_leonard_system {
            return Err(Error::NotLeonard);
        }
        let cert = split.as_ref().expect("Leonard systems split");
        if !split_uniqueness_witness(cert, &setup) || !subspace_identities(cert, &setup) {
            return Err(Error::CertificateCheck("split decomposition identities fail".into()));
        }
        graded_polynomials(setup.a(), setup.spectral_star())?;
        graded_polynomials(setup.a_star(), &setup.spectral().reversed())?;
        if !characterize(&setup)?.agree() {
            return Err(Error::CertificateCheck("characterizations disagree".into()));
        }
        let anti = antiautomorphism_in_eigenbasis(setup.a(), setup.spectral_star())?;
        anti.verify(setup.a(), setup.a_star())?;
        diagnostics.push("conjugators G and H verified".to_string());
        antiautomorphism = Some(AntiautomorphismDoc { h: matrix_rows(&anti.conjugator) });
        g = companion.as_ref().map(|cf| matrix_rows(&cf.g));
    }
    Ok(CertificateDocument {
        field: FieldSpec::of(inst.field),
        orderings: OrderingsDoc::of(&orderings),
        verdict: VerdictDoc::of(&verdict),
        split: split.map(|c| SplitDoc { basis: vector_rows(c.basis()), split_sequence: strings(&c.split_sequence) }),
        companion_phi: companion.map(|cf| strings(&cf.phi)),
        antiautomorphism,
        g,
        orderings_found: found.iter().map(OrderingsDoc::of).collect(),
        diagnostics,
    })
}

/// The bidiagonal pair and the parameter-array report.
pub fn construct(inst: &Instance) -> Result<ConstructDocument> {
    let pa = inst
        .array
        .as_ref()
        .ok_or_else(|| Error::Parse("construct needs a `parameter_array`".into()))?;
    let report = check_parameter_array(pa)?;
    Ok(ConstructDocument {
        field: FieldSpec::of(inst.field),
        matrices: MatricesDoc { a: matrix_rows(&inst.a), a_star: matrix_rows(&inst.a_star) },
        report: ReportDoc::of(&report),
    })
}

/// `count` arrays of diameter `d`, deterministic in `seed`.
pub fn random_documents(seed: u64, d: usize, field: FieldSpec, count: usize) -> Result<Vec<InstanceDocument>> {
    let f = field.field()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let pa = random_parameter_array(&mut rng, f, d)?;
            if !check_parameter_array(&pa)?.valid {
                return Err(Error::CertificateCheck("sampled array failed its own check".into()));
            }
            Ok(InstanceDocument {
                field,
                matrices: None,
                parameter_array: Some(ParameterArrayDoc::of(&pa)),
                orderings: None,
            })
        })
        .collect()
}

fn random(seed: u64, d: usize, field: FieldSpec, count: usize, stdout: &mut dyn Write) -> Result<()> {
    for doc in random_documents(seed, d, field, count)? {
        let line = serde_json::to_string(&doc).map_err(|e| Error::CertificateCheck(e.to_string()))?;
        writeln!(stdout, "{line}").map_err(|e| Error::Io(format!("cannot write output: {e}")))?;
    }
    Ok(())
}
