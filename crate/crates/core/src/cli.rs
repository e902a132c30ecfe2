//! Command-line front end. [`run`] is pure apart from `--from-file` reads and
//! returns the exit code with the captured output, so it can be tested directly.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{nary_bracket, Element};
use crate::coalgebra::unital::UnitalElement;
use crate::coalgebra::{Coproduct, Op};
use crate::error::HochError;
use crate::series::{hoch_series, tinf_series};
use crate::trees::{enumerate_forests, enumerate_trees, Alphabet};
use crate::verify::{Suite, Verifier, PAPER_FOREST_COUNTS, PAPER_TREE_COUNTS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hoch",
    about = "Exact computations in the free Hoch-algebra of planar forests"
)]
struct Cli {
    /// Number of generator symbols (leaves |0 … |M-1)
    #[arg(long, global = true, default_value_t = 1)]
    alphabet: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List all trees or forests with a given number of leaves
    Enum {
        kind: EnumKind,
        #[arg(long)]
        leaves: usize,
    },
    /// Multiply two elements with `star` (concatenation) or `succ` (grafting)
    Op {
        op: OpName,
        #[arg(allow_hyphen_values = true)]
        exprs: Vec<String>,
        #[arg(long)]
        from_file: Option<PathBuf>,
    },
    /// Coproduct of an element (iterated, or unital with `1` terms)
    Coproduct {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long)]
        iterate: Option<usize>,
        #[arg(long)]
        unital: bool,
        #[arg(long)]
        from_file: Option<PathBuf>,
    },
    /// n-ary bracket of the given elements
    Bracket {
        #[arg(allow_hyphen_values = true)]
        exprs: Vec<String>,
        #[arg(long)]
        from_file: Option<PathBuf>,
    },
    /// Basis of the primitive elements of a given degree
    PrimitiveBasis {
        #[arg(long)]
        degree: usize,
    },
    /// Tree and forest counts against the generating functions
    Dims {
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        tsv: bool,
    },
    /// Run verification suites; exits 1 if any check fails
    Verify {
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        tsv: bool,
        /// Random samples per randomized check
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Negative control: flip the sign of the x (x) y term in both coproduct rules
        #[arg(long)]
        flip_cross_term: bool,
    },
    /// Least r with Delta^(r)(x) = 0
    Filtration {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long)]
        from_file: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EnumKind {
    Trees,
    Forests,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OpName {
    Star,
    Succ,
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Runs one command line; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::error(code, text)
            };
        }
    };
    match execute(cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            let code = match e {
                HochError::Internal(_) => EXIT_INTERNAL,
                _ => EXIT_USAGE,
            };
            Outcome::error(code, format!("error: {e}\n"))
        }
    }
}

fn execute(cli: Cli) -> Result<Outcome, HochError> {
    let alphabet = Alphabet::new(cli.alphabet)?;
    let mut out = String::new();
    match cli.command {
        Command::Enum { kind, leaves } => match kind {
            EnumKind::Trees => {
                for t in enumerate_trees(leaves, alphabet)? {
                    writeln!(out, "{t}").unwrap();
                }
            }
            EnumKind::Forests => {
                for f in enumerate_forests(leaves, alphabet)? {
                    writeln!(out, "{f}").unwrap();
                }
            }
        },
        Command::Op {
            op,
            exprs,
            from_file,
        } => {
            let exprs = expressions(exprs, from_file)?;
            let [x, y] = exprs.as_slice() else {
                return Err(HochError::InvalidArgument(format!(
                    "op takes exactly 2 expressions, got {}",
                    exprs.len()
                )));
            };
            let (x, y) = (parse_element(x, alphabet)?, parse_element(y, alphabet)?);
            let op = match op {
                OpName::Star => Op::Star,
                OpName::Succ => Op::Succ,
            };
            writeln!(out, "{}", op.apply(&x, &y)).unwrap();
        }
        Command::Coproduct {
            expr,
            iterate,
            unital,
            from_file,
        } => {
            let delta = Coproduct::new();
            for text in expressions(expr.into_iter().collect(), from_file)? {
                if unital {
                    if iterate.is_some() {
                        return Err(HochError::InvalidArgument(
                            "--iterate is not available with --unital".into(),
                        ));
                    }
                    let x = UnitalElement::parse(&text, alphabet)?;
                    writeln!(out, "{}", delta.unital(&x)).unwrap();
                } else {
                    let x = parse_element(&text, alphabet)?;
                    writeln!(out, "{}", delta.iterated(&x, iterate.unwrap_or(1))?).unwrap();
                }
            }
        }
        Command::Bracket { exprs, from_file } => {
            let args = expressions(exprs, from_file)?
                .iter()
                .map(|e| parse_element(e, alphabet))
                .collect::<Result<Vec<_>, _>>()?;
            writeln!(out, "{}", nary_bracket(&args)?).unwrap();
        }
        Command::PrimitiveBasis { degree } => {
            for p in Coproduct::new().primitive_basis(degree, alphabet)? {
                writeln!(out, "{p}").unwrap();
            }
        }
        Command::Dims { max_degree, tsv } => {
            out = dims_table(max_degree, tsv)?;
        }
        Command::Verify {
            max_degree,
            suite,
            tsv,
            samples,
            flip_cross_term,
        } => {
            let suites = match suite.as_str() {
                "all" => Suite::ALL.to_vec(),
                name => vec![name.parse::<Suite>()?],
            };
            let verifier = if flip_cross_term {
                Verifier::negative_control(max_degree)
            } else {
                Verifier::new(max_degree)
            }
            .random_samples(samples);
            let reports = verifier.run_all(&suites)?;
            let mut rows = vec![row(&["suite", "check", "result", "detail"])];
            let mut failed = 0;
            for report in &reports {
                for check in &report.checks {
                    if !check.passed {
                        failed += 1;
                    }
                    rows.push(row(&[
                        report.suite.name(),
                        &check.name,
                        if check.passed { "PASS" } else { "FAIL" },
                        &check.detail,
                    ]));
                }
            }
            out = render_table(&rows, tsv);
            if failed == 0 {
                writeln!(out, "all checks passed").unwrap();
            } else {
                writeln!(out, "{failed} check(s) failed").unwrap();
                return Ok(Outcome {
                    code: EXIT_VERIFY_FAILED,
                    stdout: out,
                    stderr: String::new(),
                });
            }
        }
        Command::Filtration { expr, from_file } => {
            let delta = Coproduct::new();
            for text in expressions(expr.into_iter().collect(), from_file)? {
                match delta.filtration_level(&parse_element(&text, alphabet)?)? {
                    Some(r) => writeln!(out, "{r}").unwrap(),
                    None => writeln!(out, "zero-element").unwrap(),
                }
            }
        }
    }
    Ok(Outcome::ok(out))
}

fn parse_element(text: &str, alphabet: Alphabet) -> Result<Element, HochError> {
    Element::parse(text, alphabet)
}

/// Positional expressions, or the nonempty lines of `--from-file`.
fn expressions(positional: Vec<String>, file: Option<PathBuf>) -> Result<Vec<String>, HochError> {
    match (positional.is_empty(), file) {
        (true, Some(path)) => {
            let text = std::fs::read_to_string(&path).map_err(|e| {
                HochError::InvalidArgument(format!("cannot read {}: {e}", path.display()))
            })?;
            Ok(text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(String::from)
                .collect())
        }
        (false, None) => Ok(positional),
        (false, Some(_)) => Err(HochError::InvalidArgument(
            "give expressions either inline or with --from-file, not both".into(),
        )),
        (true, None) => Err(HochError::InvalidArgument("missing expression".into())),
    }
}

fn dims_table(max_degree: usize, tsv: bool) -> Result<String, HochError> {
    if max_degree == 0 {
        return Err(HochError::InvalidArgument(
            "--max-degree must be at least 1".into(),
        ));
    }
    let alphabet = Alphabet::default();
    let little = tinf_series(max_degree)?.integer_coefficients()?;
    let large = hoch_series(max_degree)?.integer_coefficients()?;
    let mut rows = vec![row(&[
        "n",
        "trees",
        "trees(series)",
        "trees(published)",
        "forests",
        "forests(series)",
        "forests(published)",
    ])];
    let published =
        |table: &[u64], n: usize| table.get(n - 1).map_or("-".to_string(), u64::to_string);
    for n in 1..=max_degree {
        rows.push(vec![
            n.to_string(),
            enumerate_trees(n, alphabet)?.len().to_string(),
            little[n - 1].to_string(),
            published(&PAPER_TREE_COUNTS, n),
            enumerate_forests(n, alphabet)?.len().to_string(),
            large[n - 1].to_string(),
            published(&PAPER_FOREST_COUNTS, n),
        ]);
    }
    Ok(render_table(&rows, tsv))
}

fn row(cells: &[&str]) -> Vec<String> {
    cells.iter().map(|c| c.to_string()).collect()
}

fn render_table(rows: &[Vec<String>], tsv: bool) -> String {
    let mut out = String::new();
    if tsv {
        for r in rows {
            writeln!(out, "{}", r.join("\t")).unwrap();
        }
        return out;
    }
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if c + 1 < r.len() {
                line.push_str(&" ".repeat(widths[c] - cell.chars().count()));
            }
        }
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
    out
}
