//! `tqueens`: solve, verify and explore nonattacking queens on the symmetric
//! Toeplitz board.
//!
//! Exit codes: 0 on success, 1 when the answer is negative (no solution
//! exists, the placement is invalid), 2 for usage, parse and cap errors.

mod render;

use std::fmt::Write as _;
use std::io::{IsTerminal, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use toeplitz_queens::doc::{DominationDoc, EnumerationDoc, PlacementDoc, TraceDoc};
use toeplitz_queens::{
    construct_double_star, construct_n_minus_1, construct_solution, construct_star,
    infeasibility_certificate, verify_placement, BoardSpec, Caps, Certificate, ConstructionTrace,
    ContradictionKind, Error, Placement, Search, Variant, Violation,
};

use render::{render, RenderOptions};

const ENUMERATE_CAP_VAR: &str = "TQUEENS_ENUMERATE_CAP";
const COUNT_CAP_VAR: &str = "TQUEENS_COUNT_CAP";
const DOMINATE_CAP_VAR: &str = "TQUEENS_DOMINATE_CAP";

#[derive(Parser)]
#[command(
    name = "tqueens",
    version,
    about = "Nonattacking queens on the symmetric Toeplitz board"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Full,
    Star,
    DoubleStar,
}

#[derive(Subcommand)]
enum Command {
    /// Construct n nonattacking queens, or print why none exist.
    Solve {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value = "full")]
        variant: VariantArg,
        /// Defaults to ascii on a terminal and json otherwise.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Also print the recursion that built the solution (on stderr).
        #[arg(long)]
        trace: bool,
    },
    /// Place n - 1 nonattacking queens.
    Nm1 {
        #[arg(value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Check a placement document (from FILE or standard input).
    Verify { file: Option<PathBuf> },
    /// Enumerate all solutions by exhaustive search.
    Enumerate {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Count without storing solutions (uses the count cap).
        #[arg(long, conflicts_with = "fundamental")]
        count_only: bool,
        /// Partition the solutions into symmetry classes.
        #[arg(long)]
        fundamental: bool,
        #[arg(long)]
        cap: Option<usize>,
        /// Also write the report to this file, replacing it.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compute the domination number by exhaustive search.
    Dominate {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the infeasibility certificate for n = 2, 3 (mod 4).
    Certificate {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Draw a placement document as a grid.
    Render {
        file: Option<PathBuf>,
        /// Show |i - j| in empty squares.
        #[arg(long)]
        values: bool,
        #[arg(long, default_value_t = 'Q')]
        glyph: char,
    },
}

/// A failed command: message for stderr and the exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn negative(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidOrder { .. } | Error::CapExceeded { .. } | Error::Overflow { .. } => {
                Failure::usage(e.to_string())
            }
            Error::Unsolvable(_) | Error::Solvable { .. } => Failure::negative(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn order(n: u64) -> Result<usize, Failure> {
    usize::try_from(n).map_err(|_| Failure::usage(format!("n = {n} is too large")))
}

fn format_or_default(format: Option<Format>) -> Format {
    format.unwrap_or(if std::io::stdout().is_terminal() {
        Format::Ascii
    } else {
        Format::Json
    })
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("documents always serialize")
}

fn read_input(file: Option<&Path>) -> Result<String, Failure> {
    let mut text = String::new();
    match file {
        Some(path) => {
            text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?
        }
        None => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::usage(format!("cannot read standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn parse_doc(file: Option<&Path>) -> Result<PlacementDoc, Failure> {
    let text = read_input(file)?;
    PlacementDoc::from_json(&text)
        .map_err(|e| Failure::usage(format!("invalid placement document: {e}")))
}

fn write_results(path: Option<&Path>, json: &str) -> CmdResult {
    if let Some(path) = path {
        std::fs::write(path, format!("{json}\n"))
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

/// `flag`, else the environment variable, else the default.
fn resolve_cap(flag: Option<usize>, var: &str, default: usize) -> Result<usize, Failure> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(var) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{var}={v} is not a valid cap"))),
        Err(_) => Ok(default),
    }
}

fn print_placement(p: &Placement, variant: Variant, format: Format) -> CmdResult {
    match format {
        Format::Json => println!("{}", PlacementDoc::new(p, variant).to_json()),
        Format::Ascii => {
            let spec = BoardSpec::new(p.n(), variant)?;
            let opts = RenderOptions::default().fitted(p.n());
            print!("{}", render(p, &spec, &opts).map_err(Failure::usage)?);
        }
    }
    Ok(())
}

fn certificate_text(c: &Certificate) -> String {
    let mut s = String::new();
    writeln!(s, "no solution exists for n = {}", c.n).unwrap();
    writeln!(s, "n mod 4 = {}", c.residue_mod_4).unwrap();
    writeln!(s, "n(2n^2+9n+1) = {}", c.quantity).unwrap();
    writeln!(
        s,
        "{} mod 12 = {} (must be 0 for a solution to exist)",
        c.quantity, c.quantity_mod_12
    )
    .unwrap();
    match c.contradiction_kind {
        ContradictionKind::EvenCase => writeln!(
            s,
            "even case: n is even and 2n^2+9n+1 = {} is odd",
            c.factor
        )
        .unwrap(),
        ContradictionKind::OddCase => {
            writeln!(s, "odd case: {} mod 4 = {}", c.quantity, c.quantity_mod_4).unwrap()
        }
    }
    s
}

fn print_certificate(c: &Certificate, format: Format) {
    match format {
        Format::Json => println!("{}", to_json(c)),
        Format::Ascii => print!("{}", certificate_text(c)),
    }
}

fn trace_text(t: &ConstructionTrace, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    let border = t
        .boundary_cells
        .iter()
        .map(|(r, c, v)| format!("({r},{c})={v}"))
        .collect::<Vec<_>>()
        .join(" ");
    write!(
        out,
        "{pad}n = {}: case {}, r = {}, cells {border}",
        t.n,
        t.case_tag.as_str(),
        t.r
    )
    .unwrap();
    match (&t.child, t.child_variant) {
        (Some(child), Some(variant)) => {
            writeln!(
                out,
                "; {} child of order {} shifted by {}",
                variant.as_str(),
                child.n,
                t.offset
            )
            .unwrap();
            trace_text(child, depth + 1, out);
        }
        _ => out.push('\n'),
    }
}

fn cmd_solve(n: u64, variant: VariantArg, format: Option<Format>, trace: bool) -> CmdResult {
    let n = order(n)?;
    let format = format_or_default(format);
    let result = match variant {
        VariantArg::Full => {
            construct_solution(n).map(|(s, t)| (s.to_placement(), Variant::Full, Some(t)))
        }
        VariantArg::Star => construct_star(n).map(|p| (p, Variant::Star, None)),
        VariantArg::DoubleStar => construct_double_star(n).map(|p| (p, Variant::DoubleStar, None)),
    };
    match result {
        Ok((p, variant, t)) => {
            print_placement(&p, variant, format)?;
            if trace {
                let t = match t {
                    Some(t) => t,
                    None => construct_solution(n)?.1,
                };
                match format {
                    Format::Json => eprintln!("{}", to_json(&TraceDoc::from(&t))),
                    Format::Ascii => {
                        let mut text = String::new();
                        trace_text(&t, 0, &mut text);
                        eprint!("{text}");
                    }
                }
            }
            Ok(())
        }
        Err(Error::Unsolvable(c)) => {
            print_certificate(&c, format);
            Err(Failure::negative(String::new()))
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_nm1(n: u64, format: Option<Format>) -> CmdResult {
    let p = construct_n_minus_1(order(n)?)?;
    print_placement(&p, Variant::Full, format_or_default(format))
}

fn cmd_verify(file: Option<&Path>) -> CmdResult {
    let doc = parse_doc(file)?;
    let (p, spec) = doc.to_placement()?;
    let verdict = match doc.first_duplicate() {
        Some([row, _]) => Err(Violation::DuplicateRow { row }),
        None => verify_placement(&p, &spec),
    };
    match verdict {
        Ok(()) => {
            println!("valid {} solution for n = {}", spec.variant(), spec.n());
            Ok(())
        }
        Err(v) => {
            println!("invalid: {}: {v}", v.code());
            Err(Failure::negative(String::new()))
        }
    }
}

fn cmd_enumerate(
    n: u64,
    count_only: bool,
    fundamental: bool,
    cap: Option<usize>,
    output: Option<&Path>,
) -> CmdResult {
    let n = order(n)?;
    let defaults = Caps::default();
    let caps = Caps {
        enumerate: resolve_cap(cap, ENUMERATE_CAP_VAR, defaults.enumerate)?,
        count: resolve_cap(cap, COUNT_CAP_VAR, defaults.count)?,
        ..defaults
    };
    let search = Search::with_caps(caps);
    let report = if count_only {
        search.count_report(n)?
    } else if fundamental {
        search.count_fundamental(n)?
    } else {
        search.enumerate_report(n)?
    };
    let json = to_json(&EnumerationDoc::from(&report));
    write_results(output, &json)?;
    println!("{json}");
    Ok(())
}

fn cmd_dominate(n: u64, cap: Option<usize>, output: Option<&Path>) -> CmdResult {
    let n = order(n)?;
    let caps = Caps {
        dominate: resolve_cap(cap, DOMINATE_CAP_VAR, Caps::default().dominate)?,
        ..Caps::default()
    };
    let report = Search::with_caps(caps).domination_number(n)?;
    let json = to_json(&DominationDoc::from(&report));
    write_results(output, &json)?;
    println!("{json}");
    Ok(())
}

fn cmd_certificate(n: u64, format: Option<Format>) -> CmdResult {
    let c = infeasibility_certificate(order(n)?)?;
    print_certificate(&c, format_or_default(format));
    Ok(())
}

fn cmd_render(file: Option<&Path>, values: bool, glyph: char) -> CmdResult {
    let doc = parse_doc(file)?;
    let (p, spec) = doc.to_placement()?;
    let opts = RenderOptions {
        show_values: values,
        queen_glyph: glyph,
        ..Default::default()
    }
    .fitted(spec.n());
    print!("{}", render(&p, &spec, &opts).map_err(Failure::usage)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Solve {
            n,
            variant,
            format,
            trace,
        } => cmd_solve(n, variant, format, trace),
        Command::Nm1 { n, format } => cmd_nm1(n, format),
        Command::Verify { file } => cmd_verify(file.as_deref()),
        Command::Enumerate {
            n,
            count_only,
            fundamental,
            cap,
            output,
        } => cmd_enumerate(n, count_only, fundamental, cap, output.as_deref()),
        Command::Dominate { n, cap, output } => cmd_dominate(n, cap, output.as_deref()),
        Command::Certificate { n, format } => cmd_certificate(n, format),
        Command::Render {
            file,
            values,
            glyph,
        } => cmd_render(file.as_deref(), values, glyph),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("tqueens: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
