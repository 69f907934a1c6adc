//! Command-line front end. [`dispatch`] is the whole program; [`run`]
//! takes explicit output streams so it can be tested.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{bplus, diamond};
use crate::coalgebra::{closure, coproduct, counit, enumerate_subforests, quotient};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::forest::{enumerate_forests, Alphabet};
use crate::hopf::{antipode, antipode_oracle, run_axiom_suite, SuiteConfig};
use crate::models::{evaluate_hom, Assignment, LaurentModel, RbModel, ScalarModel, SpecializedElement};
use crate::syntax::{parse_element, parse_forest, parse_laurent, parse_rational, render_element, Format};

#[derive(Debug, Parser)]
#[command(name = "rbforest", version, about = "Free Rota-Baxter algebra on angularly decorated forests")]
struct Cli {
    /// Declared letters, comma separated. Without it any identifier is a letter.
    #[arg(long, global = true)]
    alphabet: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Plain,
    Latex,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Plain => Format::Plain,
            OutputFormat::Latex => Format::Latex,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelKind {
    Scalar,
    Laurent,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Diamond product A ⋄ B.
    Mul { a: String, b: String },
    /// Grafting operator B+.
    Bplus { a: String },
    /// Coproduct.
    Coproduct { a: String },
    /// Counit (coefficient of `o`).
    Counit { a: String },
    /// Antipode.
    Antipode {
        a: String,
        /// Use the triangular recursion instead of the series.
        #[arg(long)]
        oracle: bool,
    },
    /// Table of subforests with closures and quotients.
    Subforests { forest: String },
    /// All forests up to a degree.
    Enumerate {
        #[arg(long)]
        max_degree: usize,
    },
    /// Evaluate in a concrete Rota-Baxter algebra.
    Eval {
        #[arg(long, value_enum)]
        model: ModelKind,
        /// Model weight; the Laurent model only has weight -1.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// `x=VALUE`, a rational or a Laurent series depending on the model.
        #[arg(long = "assign")]
        assign: Vec<String>,
        a: String,
    },
    /// Run the law suite.
    Check {
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        max_pair_degree_sum: usize,
        #[arg(long, default_value_t = 6)]
        random_max_degree: usize,
        /// Also write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

/// Parses `argv`, runs the command on stdout/stderr and returns the exit
/// code: 0 success, 1 a law failed, 2 usage or input error.
pub fn dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Model(format!("output error: {e}"))
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let alphabet = cli.alphabet.as_deref().map(Alphabet::parse_list).transpose()?;
    let alpha = alphabet.as_ref();
    let format = Format::from(cli.format);
    let element = |s: &str| parse_element(s, alpha);
    let show = |e: &Element| render_element(e, format);

    match cli.command {
        Command::Mul { a, b } => {
            writeln!(out, "{}", show(&diamond(&element(&a)?, &element(&b)?))).map_err(io)?;
        }
        Command::Bplus { a } => {
            writeln!(out, "{}", show(&bplus(&element(&a)?))).map_err(io)?;
        }
        Command::Coproduct { a } => {
            writeln!(out, "{}", coproduct(&element(&a)?).render(format)).map_err(io)?;
        }
        Command::Counit { a } => {
            let c = counit(&element(&a)?);
            let text = match format {
                Format::Plain => c.to_string(),
                Format::Latex => c.to_latex(),
            };
            writeln!(out, "{text}").map_err(io)?;
        }
        Command::Antipode { a, oracle } => {
            let a = element(&a)?;
            let s = if oracle { antipode_oracle(&a) } else { antipode(&a) };
            writeln!(out, "{}", show(&s)).map_err(io)?;
        }
        Command::Subforests { forest } => {
            let f = parse_forest(&forest, alpha)?;
            subforest_table(&f, format, out)?;
        }
        Command::Enumerate { max_degree } => {
            if max_degree == 0 {
                return Err(Error::Model("--max-degree must be at least 1".into()));
            }
            let alphabet = alphabet.clone().unwrap_or_else(|| Alphabet::new(Vec::<&str>::new()).expect("empty alphabet"));
            for f in enumerate_forests(max_degree, &alphabet) {
                let text = match format {
                    Format::Plain => f.to_string(),
                    Format::Latex => f.to_latex(),
                };
                writeln!(out, "{text}").map_err(io)?;
            }
        }
        Command::Eval {
            model,
            weight,
            assign,
            a,
        } => {
            let a = element(&a)?;
            let weight = weight.as_deref().map(parse_rational).transpose()?;
            let text = match model {
                ModelKind::Scalar => {
                    let w = weight.ok_or_else(|| Error::Model("the scalar model needs --weight".into()))?;
                    eval_in(&ScalarModel::new(w), &a, &assign, alpha, parse_rational)?
                }
                ModelKind::Laurent => {
                    let m = LaurentModel;
                    if let Some(w) = weight.filter(|w| *w != m.weight()) {
                        return Err(Error::WeightMismatch {
                            element: w.to_string(),
                            model: m.weight().to_string(),
                        });
                    }
                    eval_in(&m, &a, &assign, alpha, parse_laurent)?
                }
            };
            writeln!(out, "{text}").map_err(io)?;
        }
        Command::Check {
            max_degree,
            samples,
            seed,
            max_pair_degree_sum,
            random_max_degree,
            json,
        } => {
            if max_degree == 0 {
                return Err(Error::Model("--max-degree must be at least 1".into()));
            }
            let alphabet = alphabet.clone().unwrap_or_else(|| Alphabet::new(Vec::<&str>::new()).expect("empty alphabet"));
            let mut config = SuiteConfig::new(max_degree, alphabet);
            config.samples = samples;
            config.seed = seed;
            config.max_pair_degree_sum = max_pair_degree_sum;
            config.random_max_degree = random_max_degree;
            let report = run_axiom_suite(&config);
            writeln!(out, "{report}").map_err(io)?;
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&report).expect("reports serialize");
                std::fs::write(&path, text + "\n")
                    .map_err(|e| Error::Model(format!("cannot write {}: {e}", path.display())))?;
            }
            return Ok(if report.passed() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn eval_in<M: RbModel>(
    model: &M,
    a: &Element,
    assign: &[String],
    alphabet: Option<&Alphabet>,
    parse_value: impl Fn(&str) -> Result<M::Value>,
) -> Result<String> {
    let mut assignment = Assignment::new();
    for item in assign {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| Error::Model(format!("expected `letter=value`, got `{item}`")))?;
        let letter = match alphabet {
            Some(al) => al.letter(name.trim())?,
            None => crate::forest::Letter::new(name.trim())?,
        };
        assignment.insert(letter, parse_value(value.trim())?);
    }
    let specialized = SpecializedElement::new(a, model.weight());
    Ok(evaluate_hom(&specialized, &assignment, model)?.to_string())
}

fn subforest_table(f: &crate::forest::Forest, format: Format, out: &mut dyn Write) -> Result<()> {
    let header = ["marking", "closure", "factorwise quotient", "reduced quotient"];
    let mut rows = Vec::new();
    for m in enumerate_subforests(f) {
        let cl = closure(f, &m)?;
        let q = quotient(f, &m)?;
        rows.push([
            m.describe(f)?,
            render_element(&cl.evaluate(Default::default()), format),
            q.to_string(),
            render_element(&q.evaluate(Default::default()), format),
        ]);
    }
    let width = |i: usize| {
        rows.iter()
            .map(|r| r[i].chars().count())
            .chain([header[i].len()])
            .max()
            .unwrap_or(0)
    };
    let widths: Vec<usize> = (0..header.len()).map(width).collect();
    let line = |cells: [&str; 4]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join(" | ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header)).map_err(io)?;
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    writeln!(out, "{}", rule.join("-+-")).map_err(io)?;
    for r in &rows {
        writeln!(out, "{}", line([&r[0], &r[1], &r[2], &r[3]])).map_err(io)?;
    }
    writeln!(out, "{} subforests", rows.len()).map_err(io)?;
    Ok(())
}
