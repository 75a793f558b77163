//! Command-line dispatch. Results go to `out`, diagnostics to `err`.
//!
//! Exit codes: 0 success, 1 semantic failure (invalid object, failed check,
//! non-sphere degree), 2 unreadable or malformed document, 3 usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use cellcoh_core::abgroups::parse_group;
use cellcoh_core::complex::{self, CwComplex};
use cellcoh_core::homology::{self, Variant};
use cellcoh_core::maps::{self, ChainMap};
use cellcoh_core::verify::{self, Suite};
use cellcoh_core::{FgAbGroup, ValidationReport};

use crate::document::{self, Document, DocumentError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cellcoh", version, about = "Exact cellular (co)homology of finite CW complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn group_arg(s: &str) -> Result<FgAbGroup, String> {
    parse_group(s).map_err(|e| e.to_string())
}

fn range_arg(s: &str) -> Result<RangeInclusive<i64>, String> {
    let (a, b) = s.split_once("..").ok_or("expected a range a..b")?;
    let a: i64 = a.trim().parse().map_err(|_| format!("bad range start {:?}", a))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad range end {:?}", b))?;
    if a > b {
        return Err("empty range".into());
    }
    Ok(a..=b)
}

fn suite_arg(s: &str) -> Result<Suite, String> {
    Suite::from_name(s).ok_or_else(|| format!("unknown suite; expected one of {}", Suite::NAMES.join(", ")))
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a complex or map document; prints `ok` or one violation per line
    Validate { file: PathBuf },
    /// Print `H_n = G` (or `H^n = G`) lines
    Homology {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        dim: Option<i64>,
        #[arg(long, value_parser = group_arg, default_value = "Z")]
        coeff: FgAbGroup,
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        cohomology: bool,
    },
    /// Print the Euler characteristic
    Euler { file: PathBuf },
    /// Reduced suspension
    Susp {
        file: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// One-point union
    Wedge {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Collapse the skeleton of dimension `below`
    Quotient {
        file: PathBuf,
        #[arg(long)]
        below: usize,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Mapping cone of a chain map
    Cone {
        mapfile: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Emit a standard complex: point, sphere n, torus, klein, rp n, cp n,
    /// moore q n, surface g, lens p
    Zoo {
        name: String,
        params: Vec<i64>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Degree of a self-map of a sphere model
    Degree { mapfile: PathBuf },
    /// Run axiom checks; exit 1 if any fails
    Check {
        file: PathBuf,
        /// Coefficient group; may be repeated (default: Z, Z/2, Z/6, Z + Z/4)
        #[arg(long, value_parser = group_arg)]
        coeff: Vec<FgAbGroup>,
        #[arg(long, value_parser = range_arg, allow_hyphen_values = true)]
        range: Option<RangeInclusive<i64>>,
        #[arg(long, value_parser = suite_arg, default_value = "all")]
        suite: Suite,
    },
}

/// Failure of a command, already classified by exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure {
            code: e.exit_code(),
            message: e.to_string(),
        }
    }
}

impl From<cellcoh_core::Error> for Failure {
    fn from(e: cellcoh_core::Error) -> Self {
        Failure {
            code: EXIT_FAILURE,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_PARSE,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<i32, Failure>;

fn invalid(what: &str, report: &ValidationReport) -> Failure {
    Failure {
        code: EXIT_FAILURE,
        message: format!("invalid {}: {}", what, report),
    }
}

fn valid_complex(path: &Path) -> Result<CwComplex, Failure> {
    let x = document::read_complex(path)?;
    let r = x.validate();
    if r.is_ok() {
        Ok(x)
    } else {
        Err(invalid("complex", &r))
    }
}

fn valid_map(path: &Path) -> Result<ChainMap, Failure> {
    let f = document::read_map(path)?;
    for (what, r) in [("source", f.source().validate()), ("target", f.target().validate()), ("map", f.validate())] {
        if !r.is_ok() {
            return Err(invalid(what, &r));
        }
    }
    Ok(f)
}

fn emit(text: &str, o: Option<&Path>, out: &mut dyn Write) -> Outcome {
    match o {
        Some(p) => fs::write(p, text).map_err(|e| Failure {
            code: EXIT_PARSE,
            message: format!("cannot write {}: {}", p.display(), e),
        })?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn validate(file: &Path, out: &mut dyn Write) -> Outcome {
    let reports = match document::read_document(file)? {
        Document::Complex(x) => vec![x.validate()],
        Document::Map(f) => vec![f.source().validate(), f.target().validate(), f.validate()],
    };
    let violations: Vec<_> = reports.iter().flat_map(|r| r.violations.iter()).collect();
    if violations.is_empty() {
        writeln!(out, "ok")?;
        return Ok(EXIT_OK);
    }
    for v in violations {
        writeln!(out, "{}", v)?;
    }
    Ok(EXIT_FAILURE)
}

fn print_groups(x: &CwComplex, dim: Option<i64>, coeff: &FgAbGroup, reduced: bool, cohomology: bool, out: &mut dyn Write) -> Outcome {
    let variant = if cohomology { Variant::Cohomology } else { Variant::Homology };
    let dims: Vec<i64> = match dim {
        Some(n) => vec![n],
        None => (0..=x.dim() as i64).collect(),
    };
    for n in dims {
        let h = homology::group(x, n, coeff, variant, reduced)?;
        if cohomology {
            writeln!(out, "H^{} = {}", n, h.group())?;
        } else {
            writeln!(out, "H_{} = {}", n, h.group())?;
        }
    }
    Ok(EXIT_OK)
}

fn check(file: &Path, coeffs: Vec<FgAbGroup>, range: Option<RangeInclusive<i64>>, suite: Suite, out: &mut dyn Write) -> Outcome {
    let coeffs = if coeffs.is_empty() { verify::corpus_coefficients() } else { coeffs };
    let doc = document::read_document(file)?;
    let mut all_passed = true;
    for g in &coeffs {
        let reports = match &doc {
            Document::Complex(x) => {
                let r = x.validate();
                if !r.is_ok() {
                    return Err(invalid("complex", &r));
                }
                verify::run_complex_suite(x, g, range.clone().unwrap_or_else(|| verify::default_range(x)), suite)
            }
            Document::Map(f) => {
                for (what, r) in [("source", f.source().validate()), ("target", f.target().validate()), ("map", f.validate())] {
                    if !r.is_ok() {
                        return Err(invalid(what, &r));
                    }
                }
                let top = f.source().dim().max(f.target().dim()) as i64;
                verify::run_map_suite(f, g, range.clone().unwrap_or(-1..=top + 2), suite)
            }
        };
        for r in reports {
            all_passed &= r.passed;
            writeln!(out, "{}", r)?;
        }
    }
    Ok(if all_passed { EXIT_OK } else { EXIT_FAILURE })
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Validate { file } => validate(&file, out),
        Command::Homology {
            file,
            dim,
            coeff,
            reduced,
            cohomology,
        } => print_groups(&valid_complex(&file)?, dim, &coeff, reduced, cohomology, out),
        Command::Euler { file } => {
            writeln!(out, "{}", valid_complex(&file)?.euler_characteristic())?;
            Ok(EXIT_OK)
        }
        Command::Susp { file, o } => {
            let x = valid_complex(&file)?.suspension();
            emit(&document::serialize_complex(&x), o.as_deref(), out)
        }
        Command::Wedge { files, o } => {
            let xs = files.iter().map(|f| valid_complex(f)).collect::<Result<Vec<_>, _>>()?;
            emit(&document::serialize_complex(&complex::wedge(&xs)), o.as_deref(), out)
        }
        Command::Quotient { file, below, o } => {
            let x = valid_complex(&file)?.quotient_by_skeleton(below)?;
            emit(&document::serialize_complex(&x), o.as_deref(), out)
        }
        Command::Cone { mapfile, o } => {
            let cone = maps::mapping_cone(&valid_map(&mapfile)?)?;
            emit(&document::serialize_complex(&cone.complex), o.as_deref(), out)
        }
        Command::Zoo { name, params, o } => {
            let x = complex::zoo(&name, &params).map_err(|e| Failure {
                code: EXIT_USAGE,
                message: e.to_string(),
            })?;
            emit(&document::serialize_complex(&x), o.as_deref(), out)
        }
        Command::Degree { mapfile } => {
            writeln!(out, "{}", maps::degree(&valid_map(&mapfile)?)?)?;
            Ok(EXIT_OK)
        }
        Command::Check {
            file,
            coeff,
            range,
            suite,
        } => check(&file, coeff, range, suite, out),
    }
}

/// Runs the tool on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
