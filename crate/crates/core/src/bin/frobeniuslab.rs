//! Command line front end: validate algebra files, classify them in the
//! Frobenius / gendo-Frobenius hierarchy, print comultiplications, verify
//! certificates, and run a whole corpus.
//!
//! Exit codes: 0 ok, 2 parse error, 3 algebra-law failure, 4 precondition
//! failure, 5 verification failure.

use clap::{Parser, Subcommand, ValueEnum};
use frobeniuslab::cert::{self, Certificate};
use frobeniuslab::comult::GendoComult;
use frobeniuslab::error::AlgError;
use frobeniuslab::format;
use frobeniuslab::pipeline::{classify, Classification};
use frobeniuslab::rep::SearchOpts;
use frobeniuslab::scalar::certificate_string;
use frobeniuslab::structure::Check;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "frobeniuslab", version, about = "Exact classification of finite-dimensional algebras in the Frobenius / gendo-Frobenius hierarchy")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a file, build the algebra, and re-verify the algebra laws
    Validate { file: PathBuf },
    /// Run the full detector stack and emit a certificate
    Classify {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 256)]
        trials: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the comultiplication table (requires a gendo-Frobenius input)
    Comult {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 256)]
        trials: u64,
        /// basis label whose leading coefficient is scaled to 1
        #[arg(long)]
        normalize: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Re-check all witnesses in a certificate against the input file
    Verify { certificate: PathBuf, file: PathBuf },
    /// Classify every .alg file in a directory and cross-check certificates
    Corpus {
        dir: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 256)]
        trials: u64,
    },
}

fn exit_code(e: &AlgError) -> u8 {
    match e {
        AlgError::Parse(_) | AlgError::CompositeModulus(_) | AlgError::BadRelation(_) | AlgError::Io(_) => 2,
        AlgError::NotAssociative(..)
        | AlgError::UnitLawFails(_)
        | AlgError::NotAdmissibleWithinCap(_)
        | AlgError::AmbientMismatch(..) => 3,
        AlgError::NotIdempotent
        | AlgError::NotAutomorphism(_)
        | AlgError::NotQuiverPresented
        | AlgError::NotCornerFrobenius
        | AlgError::Inconclusive(_)
        | AlgError::Precondition(_) => 4,
        AlgError::VerificationFailed(_) | AlgError::InternalInconsistency(_) => 5,
    }
}

fn check_str(c: &Check) -> String {
    match c {
        Check::Holds => "true".into(),
        Check::Fails(r) => format!("false ({r})"),
        Check::Unknown(r) => format!("unknown ({r})"),
    }
}

fn read(path: &Path) -> Result<String, AlgError> {
    std::fs::read_to_string(path).map_err(AlgError::Io)
}

fn run_validate(file: &Path) -> Result<(), AlgError> {
    let text = read(file)?;
    // building re-verifies associativity and the unit laws
    let (alg, idem) = format::load(&text)?;
    let labels: Vec<String> = (0..alg.dim).map(|i| alg.label(i)).collect();
    println!("dim {}, field {}, basis {}", alg.dim, cert::field_string(alg.field), labels.join(" "));
    if idem.is_some() {
        println!("declared idempotent present");
    }
    Ok(())
}

fn delta_lines(alg: &frobeniuslab::algebra::Algebra, co: &GendoComult) -> Vec<String> {
    let n = alg.dim;
    let mut lines = Vec::new();
    for t in 0..n {
        let mut terms = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let c = co.co.coefficient(t, a, b);
                if c.is_zero() {
                    continue;
                }
                let pair = format!("{} (x) {}", alg.label(a), alg.label(b));
                if c.is_one() {
                    terms.push(pair);
                } else {
                    terms.push(format!("{}*{}", certificate_string(c), pair));
                }
            }
        }
        let rhs = if terms.is_empty() { "0".into() } else { terms.join(" + ") };
        lines.push(format!("delta({}) = {}", alg.label(t), rhs));
    }
    lines
}

fn run_pipeline(
    file: &Path,
    seed: u64,
    trials: u64,
    normalize: Option<&str>,
) -> Result<(String, std::sync::Arc<frobeniuslab::algebra::Algebra>, Classification, Certificate), AlgError> {
    let text = read(file)?;
    let (alg, idem) = format::load(&text)?;
    let opts = SearchOpts { seed, trials, ..SearchOpts::default() };
    let cls = classify(&alg, idem.as_ref(), &opts, normalize)?;
    let cert = cert::certificate_from(&text, &cls, &alg, &opts, normalize);
    Ok((text, alg, cls, cert))
}

fn run_classify(file: &Path, seed: u64, trials: u64, fmt: Format) -> Result<(), AlgError> {
    let (_, _, cls, cert) = run_pipeline(file, seed, trials, None)?;
    match fmt {
        Format::Json => print!("{}", cert.to_json()),
        Format::Text => {
            println!("frobenius:       {}", check_str(&cls.frobenius));
            println!("symmetric:       {}", check_str(&cls.symmetric));
            println!("gendo-symmetric: {}", check_str(&cls.gendo_symmetric));
            println!("gendo-frobenius: {}", check_str(&cls.gendo_frobenius));
            println!("morita:          {}", check_str(&cls.morita));
        }
    }
    Ok(())
}

fn run_comult(
    file: &Path,
    seed: u64,
    trials: u64,
    normalize: Option<&str>,
    fmt: Format,
) -> Result<(), AlgError> {
    let (_, alg, cls, cert) = run_pipeline(file, seed, trials, normalize)?;
    let co = match &cls.comult {
        Some(c) => c,
        None => {
            return Err(AlgError::Precondition(
                cls.comult_note
                    .clone()
                    .unwrap_or_else(|| "no comultiplication available".into()),
            ))
        }
    };
    match fmt {
        Format::Json => print!("{}", cert.to_json()),
        Format::Text => {
            for line in delta_lines(&alg, co) {
                println!("{line}");
            }
            match co.co.counit_solve() {
                Some(eps) => {
                    let vals: Vec<String> = eps.iter().map(certificate_string).collect();
                    println!("counit: {}", vals.join(" "));
                }
                None => println!("counit: none (algebra is not Frobenius)"),
            }
        }
    }
    Ok(())
}

fn run_verify(certificate: &Path, file: &Path) -> Result<(), AlgError> {
    let cert = Certificate::from_json(&read(certificate)?)?;
    let text = read(file)?;
    cert::verify(&cert, &text)?;
    println!("certificate verified");
    Ok(())
}

fn run_corpus(dir: &Path, seed: u64, trials: u64) -> Result<(), AlgError> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(AlgError::Io)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().map(|x| x == "alg").unwrap_or(false))
        .collect();
    files.sort();
    let mut failures = 0usize;
    println!(
        "{:<16} {:>4} {:>10} {:>10} {:>10} {:>10} {:>8} {:>8}",
        "file", "dim", "frobenius", "symmetric", "gendo-sym", "gendo-frob", "morita", "verify"
    );
    for path in &files {
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("?").to_string();
        match corpus_entry(path, seed, trials) {
            Ok(line) => println!("{line}"),
            Err(e) => {
                failures += 1;
                println!("{name:<16} error: {e}");
            }
        }
    }
    if failures > 0 {
        return Err(AlgError::VerificationFailed(format!("{failures} corpus file(s) failed")));
    }
    Ok(())
}

fn corpus_entry(path: &Path, seed: u64, trials: u64) -> Result<String, AlgError> {
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("?").to_string();
    let (text, alg, cls, cert) = run_pipeline(path, seed, trials, None)?;
    cert::verify(&cert, &text)?;
    // counit exists exactly for Frobenius algebras
    if let Some(co) = &cls.comult {
        let has_counit = co.co.counit_solve().is_some();
        match (&cls.frobenius, has_counit) {
            (Check::Holds, false) => {
                return Err(AlgError::VerificationFailed(
                    "Frobenius algebra without a counit".into(),
                ))
            }
            (Check::Fails(_), true) => {
                return Err(AlgError::VerificationFailed(
                    "counit on a non-Frobenius algebra".into(),
                ))
            }
            _ => {}
        }
    }
    let b = |c: &Check| match c {
        Check::Holds => "true",
        Check::Fails(_) => "false",
        Check::Unknown(_) => "unknown",
    };
    Ok(format!(
        "{:<16} {:>4} {:>10} {:>10} {:>10} {:>10} {:>8} {:>8}",
        name,
        alg.dim,
        b(&cls.frobenius),
        b(&cls.symmetric),
        b(&cls.gendo_symmetric),
        b(&cls.gendo_frobenius),
        b(&cls.morita),
        "ok"
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Validate { file } => run_validate(file),
        Cmd::Classify { file, seed, trials, format } => {
            run_classify(file, *seed, *trials, *format)
        }
        Cmd::Comult { file, seed, trials, normalize, format } => {
            run_comult(file, *seed, *trials, normalize.as_deref(), *format)
        }
        Cmd::Verify { certificate, file } => run_verify(certificate, file),
        Cmd::Corpus { dir, seed, trials } => run_corpus(dir, *seed, *trials),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
