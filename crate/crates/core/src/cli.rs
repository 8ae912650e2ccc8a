//! The `riordan` command-line tool.
//!
//! Exit codes: 0 on success, 1 when a verification or comparison fails or a
//! download is impossible, 2 for usage and parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::MultiPoly;
use crate::error::Error;
use crate::families::{family_triple, gf_chain, named_triple, FamilySpec, Flavor, GenFn, NamedTriple, Polytope};
use crate::jfraction::JFraction;
use crate::oeis::{default_cache_dir, fixture, render_bfile, Fetcher};
use crate::output::{Format, OutputDoc};
use crate::riordan::LowerTriMatrix;
use crate::verify::{self, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "riordan", version, about = "Riordan arrays, J-fractions and face matrices of Pascal-like triangles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a γ-, h- or f-matrix.
    Show {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },
    /// Expand a J-fraction J(α_i; β_i) given as polynomials in i, r and y.
    Jf {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        /// Highest power of x to expand.
        #[arg(long = "N", default_value_t = 10)]
        n: usize,
        /// Substitute an integer for r.
        #[arg(long, allow_hyphen_values = true)]
        r: Option<i64>,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },
    /// Run built-in consistency checks.
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Write a matrix to a file (JSON by default).
    Export {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Destination; standard output when omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Compare the built-in constructions with the embedded OEIS triangles.
    OeisCheck {
        /// A-numbers to check; all embedded fixtures when omitted.
        anumbers: Vec<String>,
    },
    /// Download an OEIS b-file into the local cache and print it.
    FetchBfile {
        anumber: String,
        /// Cache directory (default: $RIORDAN_OEIS_CACHE or .oeis-cache).
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        /// Only consult the cache.
        #[arg(long)]
        offline: bool,
    },
}

#[derive(Debug, Args)]
struct MatrixArgs {
    #[arg(long, value_enum, default_value_t = FamilyArg::PascalLike)]
    family: FamilyArg,
    #[arg(long, value_enum, default_value_t = FlavorArg::Ordinary)]
    flavor: FlavorArg,
    /// An integer, or the literal `r` for the symbolic matrix.
    #[arg(long, default_value = "r", value_parser = parse_r, allow_hyphen_values = true)]
    r: RValue,
    #[arg(long, value_enum, default_value_t = WhichArg::H)]
    which: WhichArg,
    /// Highest row index.
    #[arg(long = "N", default_value_t = 5)]
    n: usize,
    /// Reverse every row.
    #[arg(long)]
    reversed: bool,
    /// Print the ordinary generating function of the rows instead.
    #[arg(long)]
    gf: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// The parameterized family selected by --flavor and --r.
    PascalLike,
    Simplex,
    Hypercube,
    Associahedron,
    Permutahedron,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    Ordinary,
    Exponential,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichArg {
    H,
    F,
    Gamma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Props,
    Oeis,
    Group,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum RValue {
    Symbolic,
    Int(i64),
}

fn parse_r(s: &str) -> std::result::Result<RValue, String> {
    match s.trim() {
        "r" => Ok(RValue::Symbolic),
        t => t.parse().map(RValue::Int).map_err(|_| format!("expected an integer or `r`, got `{s}`")),
    }
}

impl RValue {
    fn poly(&self) -> MultiPoly {
        match self {
            RValue::Symbolic => MultiPoly::r(),
            RValue::Int(v) => MultiPoly::int(*v),
        }
    }

    fn label(&self) -> String {
        match self {
            RValue::Symbolic => "r".into(),
            RValue::Int(v) => v.to_string(),
        }
    }
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Latex => Format::Latex,
        }
    }
}

impl FamilyArg {
    fn polytope(self) -> Option<Polytope> {
        match self {
            FamilyArg::PascalLike => None,
            FamilyArg::Simplex => Some(Polytope::Simplex),
            FamilyArg::Hypercube => Some(Polytope::Hypercube),
            FamilyArg::Associahedron => Some(Polytope::AssociahedronA),
            FamilyArg::Permutahedron => Some(Polytope::Permutahedron),
        }
    }

    fn name(self) -> &'static str {
        self.polytope().map_or("pascal-like", Polytope::name)
    }
}

impl WhichArg {
    fn name(self) -> &'static str {
        match self {
            WhichArg::H => "h",
            WhichArg::F => "f",
            WhichArg::Gamma => "gamma",
        }
    }
}

/// Failure of a command, with the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::InvalidANumber(_) | Error::UnknownFixture(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
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

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Show { matrix, format } => {
            let doc = matrix_doc(&matrix)?;
            emit(out, &doc.render(format.into()))
        }
        Command::Export { matrix, format, output } => {
            let text = matrix_doc(&matrix)?.render(format.into());
            match output {
                Some(path) => {
                    std::fs::write(&path, text).map_err(Error::from)?;
                    Ok(EXIT_OK)
                }
                None => emit(out, &text),
            }
        }
        Command::Jf { alpha, beta, n, r, format } => {
            let mut fraction = JFraction::parse(&alpha, &beta)?;
            if let Some(r) = r {
                fraction = fraction.eval_r(r);
            }
            let rows = fraction
                .expand(n)
                .coeffs()
                .iter()
                .map(|c| c.y_coefficients(1).iter().map(|e| e.to_string()).collect())
                .collect();
            let doc = OutputDoc {
                kind: "series".into(),
                family: None,
                which: None,
                flavor: None,
                r: r.map(|v| v.to_string()),
                n,
                reversed: false,
                gf: Some(fraction.to_string()),
                rows,
            };
            emit(out, &doc.render(format.into()))
        }
        Command::Verify { suite } => {
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::Props => Suite::Props,
                SuiteArg::Oeis => Suite::Oeis,
                SuiteArg::Group => Suite::Group,
            };
            let checks = verify::run(suite);
            let failed = checks.iter().filter(|c| !c.passed).count();
            let mut text: String = checks.iter().map(|c| format!("{c}\n")).collect();
            text += &format!("{} checks, {} failed\n", checks.len(), failed);
            emit(out, &text)?;
            Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::OeisCheck { anumbers } => {
            for a in &anumbers {
                fixture(a)?;
            }
            let mut failed = 0;
            let mut text = String::new();
            for (anumber, report) in verify::oeis_checks() {
                if !anumbers.is_empty() && !anumbers.iter().any(|a| a == anumber) {
                    continue;
                }
                match report {
                    Ok(r) if r.is_match() => text += &format!("PASS {r}\n"),
                    Ok(r) => {
                        failed += 1;
                        text += &format!("FAIL {r}\n");
                    }
                    Err(e) => {
                        failed += 1;
                        text += &format!("FAIL {anumber}: {e}\n");
                    }
                }
            }
            emit(out, &text)?;
            Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::FetchBfile { anumber, cache_dir, offline } => {
            let fetcher = Fetcher::from_env(cache_dir.unwrap_or_else(default_cache_dir));
            let bfile = if offline { fetcher.cached(&anumber)? } else { fetcher.fetch(&anumber)? };
            emit(out, &render_bfile(&bfile))
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> CmdResult {
    out.write_all(text.as_bytes()).map_err(Error::from)?;
    Ok(EXIT_OK)
}

fn matrix_doc(args: &MatrixArgs) -> std::result::Result<OutputDoc, Failure> {
    let size = args.n + 1;
    let flavor = match args.flavor {
        FlavorArg::Ordinary => Flavor::Ordinary,
        FlavorArg::Exponential => Flavor::Exponential,
    };
    let named = args.family.polytope();
    let (matrix, gf) = match named {
        None => {
            let spec = FamilySpec::new(flavor, args.r.poly());
            let gf = if args.gf { Some(family_gf(&spec, args.which, args.reversed)?) } else { None };
            (pick(family_triple(&spec, size)?, args.which), gf)
        }
        Some(p) => {
            let triple = named_triple(p, args.n.max(1));
            let gf = if args.gf { Some(named_gf(&triple, args.which, args.reversed)?) } else { None };
            (pick(triple.matrices(size)?, args.which), gf)
        }
    };
    let matrix = if args.reversed { matrix.reversed() } else { matrix };
    let rows = match &gf {
        Some(gf) => crate::families::gf_rows(gf, size)?,
        None => matrix,
    };
    let mut doc = OutputDoc::matrix(&rows);
    doc.family = Some(args.family.name().into());
    doc.which = Some(args.which.name().into());
    if named.is_none() {
        doc.flavor = Some(flavor.name().into());
        doc.r = Some(args.r.label());
    }
    doc.reversed = args.reversed;
    if let Some(gf) = gf {
        doc.kind = "series".into();
        doc.gf = Some(gf.to_string());
    }
    Ok(doc)
}

fn pick(t: crate::families::GammaHFTriple, which: WhichArg) -> LowerTriMatrix<MultiPoly> {
    match which {
        WhichArg::H => t.h,
        WhichArg::F => t.f,
        WhichArg::Gamma => t.gamma,
    }
}

/// Generating function whose row polynomials are the requested rows.
fn family_gf(spec: &FamilySpec, which: WhichArg, reversed: bool) -> std::result::Result<GenFn, Failure> {
    let chain = gf_chain(spec);
    match (which, reversed) {
        (WhichArg::Gamma, false) => Ok(chain.gamma),
        (WhichArg::H, _) => Ok(chain.h),
        (WhichArg::F, true) => Ok(chain.f_reversed),
        (WhichArg::F, false) if spec.flavor == Flavor::Ordinary => {
            let y = MultiPoly::y();
            let one: MultiPoly = num_traits::One::one();
            Ok(GenFn::quadratic(&y + &MultiPoly::int(2), &spec.r * &(&y + &one)))
        }
        _ => Err(usage("no generating function is available for this choice; try --reversed")),
    }
}

fn named_gf(triple: &NamedTriple, which: WhichArg, reversed: bool) -> std::result::Result<GenFn, Failure> {
    match (triple, reversed) {
        (NamedTriple::Fractions { gamma, h, f }, false) => Ok(GenFn::Fraction(match which {
            WhichArg::Gamma => gamma.clone(),
            WhichArg::H => h.clone(),
            WhichArg::F => f.clone(),
        })),
        (NamedTriple::Fractions { h, .. }, true) if which == WhichArg::H => Ok(GenFn::Fraction(h.clone())),
        _ => Err(usage("no generating function is available for this choice")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("riordan").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn show_pascal() {
        let (code, out, _) = call(&["show", "--flavor", "ordinary", "--r", "0", "--which", "h", "--N", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1\n1  1\n1  2  1\n1  3  3  1\n1  4  6  4  1\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["show", "--r", "x"]).0, EXIT_USAGE);
        assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
        let (code, _, err) = call(&["jf", "--alpha", "2*x", "--beta", "i"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("position 2"), "{err}");
        assert_eq!(call(&["oeis-check", "A000045"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn negative_r() {
        let (code, out, _) = call(&["show", "--r", "-1", "--N", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1\n1  1\n1  1  1\n");
    }

    #[test]
    fn gf_rows_agree_with_matrix() {
        for which in ["h", "gamma", "f"] {
            for flavor in ["ordinary", "exponential"] {
                let base = ["show", "--flavor", flavor, "--which", which, "--N", "6", "--reversed"];
                let (_, plain, _) = call(&base);
                let (code, gf, err) = call(&[&base[..], &["--gf"]].concat());
                if which == "gamma" {
                    assert_eq!(code, EXIT_USAGE, "{err}");
                } else {
                    assert_eq!(plain, gf, "{which} {flavor}");
                }
            }
        }
    }
}
