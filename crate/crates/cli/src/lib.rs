//! Command-line front end for `pancake-core`.
//!
//! Data goes to stdout and diagnostics to stderr. Exit status is 0 on
//! success, 1 when a verification sweep finds a mismatch, 2 for usage
//! errors and 3 when an enumeration cap is exceeded.

use std::fmt::Write as _;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use pancake_core::cayley::{self, ExportFormat};
use pancake_core::closed_forms::{
    order_two_burnt_flips_formula, order_two_flips_formula, three_flip_branches,
};
use pancake_core::gens::{expand_word, ParsedWord};
use pancake_core::matrix::{self, OrderMatrix};
use pancake_core::reflections::{self, ReflectionKind};
use pancake_core::verify::{self, Suite, SweepReport};
use pancake_core::{Element, Error, Family, Limits};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "pancake",
    version,
    about = "Prefix-reversal generators of S_n and B_n"
)]
pub struct Cli {
    /// Output format; not every command supports every format.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    #[command(flatten)]
    pub caps: Caps,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
    Dot,
    #[value(name = "edge_list", alias = "edge-list")]
    EdgeList,
}

#[derive(Debug, Clone, Args)]
pub struct Caps {
    /// Lift every enumeration cap. Prints a memory estimate first.
    #[arg(long, global = true)]
    pub unsafe_caps: bool,

    #[arg(long, global = true, env = "PANCAKE_CAP_INVOLUTIONS", default_value_t = 8,
          value_parser = clap::value_parser!(u32).range(1..), hide_short_help = true)]
    pub cap_involutions: u32,

    #[arg(long, global = true, env = "PANCAKE_CAP_PANCAKE_REFLECTIONS", default_value_t = 7,
          value_parser = clap::value_parser!(u32).range(1..), hide_short_help = true)]
    pub cap_pancake_reflections: u32,

    #[arg(long, global = true, env = "PANCAKE_CAP_BURNT_REFLECTIONS", default_value_t = 6,
          value_parser = clap::value_parser!(u32).range(1..), hide_short_help = true)]
    pub cap_burnt_reflections: u32,

    #[arg(long, global = true, env = "PANCAKE_CAP_GRAPH_UNSIGNED", default_value_t = 9,
          value_parser = clap::value_parser!(u32).range(1..), hide_short_help = true)]
    pub cap_graph_unsigned: u32,

    #[arg(long, global = true, env = "PANCAKE_CAP_GRAPH_SIGNED", default_value_t = 7,
          value_parser = clap::value_parser!(u32).range(1..), hide_short_help = true)]
    pub cap_graph_signed: u32,
}

impl Caps {
    pub fn limits(&self) -> Limits {
        if self.unsafe_caps {
            return Limits::unlimited();
        }
        Limits {
            involutions: self.cap_involutions as usize,
            pancake_reflections: self.cap_pancake_reflections as usize,
            burnt_reflections: self.cap_burnt_reflections as usize,
            graph_unsigned: self.cap_graph_unsigned as usize,
            graph_signed: self.cap_graph_signed as usize,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Unsigned,
    Signed,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Unsigned => Family::Unsigned,
            FamilyArg::Signed => Family::Signed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Orders2,
    Orders2b,
    Orders3,
    Reflections,
    Cycles,
    Girth,
    Identities,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Orders2 => Suite::Orders2,
            SuiteArg::Orders2b => Suite::Orders2b,
            SuiteArg::Orders3 => Suite::Orders3,
            SuiteArg::Reflections => Suite::Reflections,
            SuiteArg::Cycles => Suite::Cycles,
            SuiteArg::Girth => Suite::Girth,
            SuiteArg::Identities => Suite::Identities,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReflectionSetArg {
    /// Conjugates of the flips.
    Flips,
    /// Conjugates of the adjacent transpositions (signed only).
    Coxeter,
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub n: usize,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected two subscripts `a,b`, got `{s}`"))?;
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad subscript `{t}`"))
    };
    Ok((num(a)?, num(b)?))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orders of f_a f_b in S_n.
    Matrix {
        #[arg(long)]
        n: usize,
    },
    /// Orders of f_1 f_b f_c in S_n.
    TripleMatrix {
        #[arg(long)]
        n: usize,
    },
    /// Orders of burnt f_a f_b in B_n.
    BurntMatrix {
        #[arg(long)]
        n: usize,
    },
    /// Compare closed forms or structural claims against brute force.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Upper end of the swept range; defaults per suite.
        #[arg(long)]
        max: Option<usize>,
        /// Add one to every value produced by the named formula branch.
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Diameter and distance histogram of the pancake graph.
    Diameter(GroupArgs),
    /// Length of the shortest cycle of the pancake graph.
    Girth(GroupArgs),
    /// Cycles traced by alternating two generators.
    Cycles {
        #[command(flatten)]
        group: GroupArgs,
        /// Two generator subscripts, e.g. `1,2`.
        #[arg(long, value_parser = parse_pair)]
        gens: (usize, usize),
    },
    /// Conjugates of the generators.
    Reflections {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t = ReflectionSetArg::Flips)]
        set: ReflectionSetArg,
    },
    /// Serialise the pancake graph.
    Export(GroupArgs),
    /// Multiply out a generator word such as `P:3,1,3` or `PB:2,0`.
    Expand {
        #[arg(long)]
        word: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GirthReport {
    pub family: Family,
    pub n: usize,
    pub girth: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectionReport {
    pub family: Family,
    pub n: usize,
    pub kind: ReflectionKind,
    pub count: usize,
    /// Closed-form count where one exists.
    pub formula: Option<String>,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDump {
    pub family: Family,
    pub n: usize,
    pub vertices: Vec<String>,
    /// `(u, v, subscript)` with `u < v`.
    pub edges: Vec<(u32, u32, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandReport {
    pub word: String,
    pub n: usize,
    pub element: Element,
    pub cycles: String,
    pub order: u64,
}

fn unsupported(format: OutputFormat, command: &str) -> CliError {
    CliError::Usage(format!("--format {format:?} is not supported by `{command}`").to_lowercase())
}

fn json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn render_matrix(m: &OrderMatrix, format: OutputFormat, command: &str) -> CliResult<String> {
    match format {
        OutputFormat::Text => Ok(m.to_text()),
        OutputFormat::Csv => Ok(m.to_csv()),
        OutputFormat::Json => json(m),
        other => Err(unsupported(other, command)),
    }
}

fn faulty_sweep(suite: Suite, max: usize, label: &str) -> CliResult<SweepReport> {
    let bump = |mut r: pancake_core::closed_forms::OrderResult| {
        if r.case_label == label {
            r.value = r.value.map(|v| v + 1);
        }
        r
    };
    Ok(match suite {
        Suite::Orders2 => {
            verify::sweep_two_flips_with(max, |a, b| order_two_flips_formula(a, b).map(bump))?
        }
        Suite::Orders2b => verify::sweep_two_burnt_flips_with(max, |a, b| {
            order_two_burnt_flips_formula(a, b).map(bump)
        })?,
        Suite::Orders3 => verify::sweep_three_flips_with(max, |b, c| {
            three_flip_branches(b, c)
                .into_iter()
                .map(|(l, v)| (l, if l == label { v + 1 } else { v }))
                .collect()
        })?,
        other => {
            return Err(CliError::Usage(format!(
                "fault injection applies to formula suites, not `{other}`"
            )))
        }
    })
}

fn render_sweep(report: &SweepReport, format: OutputFormat) -> CliResult<String> {
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            let _ = writeln!(
                out,
                "suite {} max {}: {} checked, {} mismatches, {} uncovered",
                report.suite,
                report.max,
                report.checked,
                report.mismatches.len(),
                report.uncovered.len()
            );
            for m in &report.mismatches {
                let expected = m.expected.map_or("-".to_string(), |v| v.to_string());
                let _ = writeln!(
                    out,
                    "mismatch {:?} expected {expected} actual {} [{}]",
                    m.args, m.actual, m.case_label
                );
            }
            for u in &report.uncovered {
                let _ = writeln!(out, "uncovered {u:?}");
            }
        }
        OutputFormat::Csv => {
            out.push_str("args,expected,actual,case_label\n");
            for m in &report.mismatches {
                let args: Vec<String> = m.args.iter().map(usize::to_string).collect();
                let expected = m.expected.map_or(String::new(), |v| v.to_string());
                let _ = writeln!(
                    out,
                    "{},{expected},{},{}",
                    args.join(" "),
                    m.actual,
                    m.case_label
                );
            }
        }
        OutputFormat::Json => out = json(report)?,
        other => return Err(unsupported(other, "verify")),
    }
    Ok(out)
}

fn estimate_line(what: &str, family: Family, n: usize) -> String {
    format!(
        "note: caps lifted; {what} for {} n = {n} needs about {} elements, {} bytes",
        family,
        family.group_order(n),
        cayley::memory_estimate(family, n)
    )
}

/// Runs one parsed command, writing data to `out` and diagnostics to `err`,
/// and returns the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(CliError::Core(e @ Error::CapExceeded { .. })) => {
            let _ = writeln!(err, "error: {e}; pass --unsafe-caps or raise the cap");
            EXIT_CAP
        }
        Err(CliError::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let limits = cli.caps.limits();
    let format = cli.format;
    let text = match &cli.command {
        Command::Matrix { n } => render_matrix(&matrix::pancake_matrix(*n)?, format, "matrix")?,
        Command::TripleMatrix { n } => {
            render_matrix(&matrix::triple_matrix_f1(*n)?, format, "triple-matrix")?
        }
        Command::BurntMatrix { n } => {
            render_matrix(&matrix::burnt_matrix(*n)?, format, "burnt-matrix")?
        }
        Command::Verify {
            suite,
            max,
            inject_fault,
        } => {
            let suite = Suite::from(*suite);
            let max = max.unwrap_or(suite.default_max());
            let report = match inject_fault {
                Some(label) => faulty_sweep(suite, max, label)?,
                None => verify::run_suite(suite, max, &limits)?,
            };
            out.write_all(render_sweep(&report, format)?.as_bytes())?;
            return Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            });
        }
        Command::Diameter(g) => {
            let family = g.family.into();
            if cli.caps.unsafe_caps {
                writeln!(err, "{}", estimate_line("graph", family, g.n))?;
            }
            let report = cayley::diameter(&cayley::build_graph(family, g.n, &limits)?);
            match format {
                OutputFormat::Text => {
                    let mut s = format!("diameter {}\n", report.diameter);
                    let _ = writeln!(
                        s,
                        "bounds {}..={} lower {} upper {}",
                        report.bounds.lower,
                        report.bounds.upper,
                        if report.bounds.meets_lower {
                            "met"
                        } else {
                            "violated"
                        },
                        if report.bounds.meets_upper {
                            "met"
                        } else {
                            "exceeded"
                        },
                    );
                    for (d, c) in report.histogram.iter().enumerate() {
                        let _ = writeln!(s, "distance {d} {c}");
                    }
                    s
                }
                OutputFormat::Csv => {
                    let mut s = String::from("distance,count\n");
                    for (d, c) in report.histogram.iter().enumerate() {
                        let _ = writeln!(s, "{d},{c}");
                    }
                    s
                }
                OutputFormat::Json => json(&report)?,
                other => return Err(unsupported(other, "diameter")),
            }
        }
        Command::Girth(g) => {
            let family = g.family.into();
            if cli.caps.unsafe_caps {
                writeln!(err, "{}", estimate_line("graph", family, g.n))?;
            }
            let report = GirthReport {
                family,
                n: g.n,
                girth: cayley::girth(&cayley::build_graph(family, g.n, &limits)?)?,
            };
            match format {
                OutputFormat::Text => format!("girth {}\n", report.girth),
                OutputFormat::Csv => {
                    format!("family,n,girth\n{},{},{}\n", family, g.n, report.girth)
                }
                OutputFormat::Json => json(&report)?,
                other => return Err(unsupported(other, "girth")),
            }
        }
        Command::Cycles { group, gens } => {
            let family = group.family.into();
            if cli.caps.unsafe_caps {
                writeln!(err, "{}", estimate_line("graph", family, group.n))?;
            }
            let graph = cayley::build_graph(family, group.n, &limits)?;
            let fam = cayley::two_generator_cycles(&graph, gens.0, gens.1)?;
            let mut chorded = 0;
            for c in &fam.cycles {
                if !cayley::verify_chord_free(&graph, c)? {
                    chorded += 1;
                }
            }
            match format {
                OutputFormat::Text => {
                    let mut s = format!(
                        "gens {},{}\nk {}\nell {}\ncount {}\nchorded {chorded}\n",
                        fam.a,
                        fam.b,
                        fam.k,
                        fam.ell,
                        fam.count()
                    );
                    for c in &fam.cycles {
                        let vs: Vec<String> = c.iter().map(u32::to_string).collect();
                        let _ = writeln!(s, "cycle {}", vs.join(" "));
                    }
                    s
                }
                OutputFormat::Csv => {
                    let mut s = String::from("cycle,position,vertex\n");
                    for (i, c) in fam.cycles.iter().enumerate() {
                        for (p, v) in c.iter().enumerate() {
                            let _ = writeln!(s, "{i},{p},{v}");
                        }
                    }
                    s
                }
                OutputFormat::Json => json(&fam)?,
                other => return Err(unsupported(other, "cycles")),
            }
        }
        Command::Reflections {
            group,
            count_only,
            set,
        } => {
            let family: Family = group.family.into();
            if cli.caps.unsafe_caps {
                writeln!(
                    err,
                    "{}",
                    estimate_line("conjugation sweep", family, group.n)
                )?;
            }
            let report = reflection_report(family, group.n, *set, &limits)?;
            match format {
                OutputFormat::Text => {
                    let mut s = String::new();
                    if !count_only {
                        for e in &report.elements {
                            let _ = writeln!(s, "{e}");
                        }
                    }
                    let _ = writeln!(s, "count {}", report.count);
                    if let Some(f) = &report.formula {
                        let _ = writeln!(s, "formula {f}");
                    }
                    s
                }
                OutputFormat::Csv => format!(
                    "n,enumerated,formula\n{},{},{}\n",
                    report.n,
                    report.count,
                    report.formula.as_deref().unwrap_or("")
                ),
                OutputFormat::Json => {
                    if *count_only {
                        json(&ReflectionReport {
                            elements: Vec::new(),
                            ..report
                        })?
                    } else {
                        json(&report)?
                    }
                }
                other => return Err(unsupported(other, "reflections")),
            }
        }
        Command::Export(g) => {
            let family = g.family.into();
            if cli.caps.unsafe_caps {
                writeln!(err, "{}", estimate_line("graph", family, g.n))?;
            }
            let graph = cayley::build_graph(family, g.n, &limits)?;
            match format {
                OutputFormat::Text | OutputFormat::EdgeList => {
                    cayley::export(&graph, ExportFormat::EdgeList)?
                }
                OutputFormat::Csv => cayley::export(&graph, ExportFormat::Csv)?,
                OutputFormat::Dot => cayley::export(&graph, ExportFormat::Dot)?,
                OutputFormat::Json => {
                    let vertices = (0..graph.vertex_count() as u32)
                        .map(|v| graph.vertex(v).map(|e| e.to_string()))
                        .collect::<pancake_core::Result<Vec<_>>>()?;
                    json(&GraphDump {
                        family,
                        n: g.n,
                        vertices,
                        edges: graph.edges(),
                    })?
                }
            }
        }
        Command::Expand { word, n } => {
            let parsed: ParsedWord = word.parse()?;
            let n = n.unwrap_or(parsed.min_degree());
            let alphabet = parsed.alphabet;
            let element = expand_word(&parsed.into_word(n)?, alphabet)?;
            let report = ExpandReport {
                word: word.clone(),
                n,
                cycles: element.cycle_decomposition().to_string(),
                order: element.order(),
                element,
            };
            match format {
                OutputFormat::Text => format!(
                    "{}\ncycles {}\norder {}\n",
                    report.element, report.cycles, report.order
                ),
                OutputFormat::Json => json(&report)?,
                other => return Err(unsupported(other, "expand")),
            }
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

fn reflection_report(
    family: Family,
    n: usize,
    set: ReflectionSetArg,
    limits: &Limits,
) -> CliResult<ReflectionReport> {
    Ok(match (family, set) {
        (Family::Unsigned, ReflectionSetArg::Flips) => {
            let s = reflections::pancake_reflections(n, limits)?;
            ReflectionReport {
                family,
                n,
                kind: s.kind,
                count: s.len(),
                formula: Some(reflections::involution_count_formula(n).to_string()),
                elements: s.cycle_strings(),
            }
        }
        (Family::Signed, ReflectionSetArg::Flips) => {
            let s = reflections::burnt_reflections(n, limits)?;
            ReflectionReport {
                family,
                n,
                kind: s.kind,
                count: s.len(),
                formula: Some(reflections::burnt_reflection_count_formula(n).to_string()),
                elements: s.cycle_strings(),
            }
        }
        (Family::Signed, ReflectionSetArg::Coxeter) => {
            let s = reflections::coxeter_reflections_signed(n, limits)?;
            ReflectionReport {
                family,
                n,
                kind: s.kind,
                count: s.len(),
                formula: Some((n * n).to_string()),
                elements: s.cycle_strings(),
            }
        }
        (Family::Unsigned, ReflectionSetArg::Coxeter) => {
            return Err(CliError::Usage(
                "--set coxeter is only defined for the signed family".into(),
            ))
        }
    })
}
