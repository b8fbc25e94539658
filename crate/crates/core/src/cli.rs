//! Command-line surface: `verify`, `report`, `table`, `roots`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::chevalley::build_chevalley;
use crate::dynkin::{
    classification_table, isotropy_report, table_csv, table_json, table_markdown, IsotropyReport,
};
use crate::error::{Error, Result};
use crate::pipeline::{
    verify_type, CheckSet, ModeChoice, Options, TypeReport, DEFAULT_SAMPLES, DEFAULT_SEED,
};
use crate::rootcore::{build_root_system, LieType};

#[derive(Parser, Debug)]
#[command(
    name = "trisasaki",
    version,
    about = "Exact homogeneous 3-Sasakian data for simple Lie algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build and verify everything for one type, or for `all` up to a rank.
    Verify(VerifyArgs),
    /// Classification row for one type.
    Report {
        #[arg(value_name = "TYPE")]
        lie_type: LieType,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Classification tables.
    Table {
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Root system listing, or the Chevalley structure table with `--structure`.
    Roots {
        #[arg(value_name = "TYPE")]
        lie_type: LieType,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
        /// Emit the full structure table as JSON.
        #[arg(long)]
        structure: bool,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// A type such as `G2`, or `all`.
    #[arg(value_name = "TYPE")]
    pub target: Target,
    /// Largest rank visited by `verify all`.
    #[arg(long, default_value_t = 8)]
    pub max_rank: usize,
    #[arg(long, value_enum, default_value_t = Format::Md)]
    pub format: Format,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [CheckGroup::All])]
    pub checks: Vec<CheckGroup>,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Tuple budget in sampled mode.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    /// Record wall-clock time per stage (makes output non-reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    All,
    One(LieType),
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("all") {
            Ok(Target::All)
        } else {
            s.parse().map(Target::One)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckGroup {
    Identities,
    Nomizu,
    Curvature,
    Datum,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Full,
    Sampled,
    Auto,
}

/// Exit status and emitted text of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn failed(stdout: String, stderr: String) -> Self {
        Outcome {
            code: 1,
            stdout,
            stderr,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(cli.command) {
        Ok(o) => o,
        Err(e) => Outcome::failed(String::new(), format!("error: {e}\n")),
    }
}

fn execute(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Verify(a) => verify(a),
        Command::Report { lie_type, format } => {
            let row = isotropy_report(&build_root_system(lie_type))?;
            Ok(Outcome::ok(match format {
                Format::Md => table_markdown_row(&row),
                Format::Json => to_json(&row),
                Format::Csv => table_csv(std::slice::from_ref(&row))?,
            }))
        }
        Command::Table { format, max_rank } => {
            let rows = classification_table(max_rank)?;
            Ok(Outcome::ok(match format {
                Format::Md => table_markdown(&rows),
                Format::Json => to_json(&table_json(&rows)),
                Format::Csv => table_csv(&rows)?,
            }))
        }
        Command::Roots {
            lie_type,
            format,
            structure,
        } => roots(lie_type, format, structure),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn options(a: &VerifyArgs) -> Options {
    let all = a.checks.contains(&CheckGroup::All);
    let has = |g| all || a.checks.contains(&g);
    Options {
        checks: CheckSet {
            datum: has(CheckGroup::Datum),
            identities: has(CheckGroup::Identities),
            nomizu: has(CheckGroup::Nomizu),
            curvature: has(CheckGroup::Curvature),
        },
        mode: match a.mode {
            ModeArg::Full => ModeChoice::Full,
            ModeArg::Sampled => ModeChoice::Sampled,
            ModeArg::Auto => ModeChoice::Auto,
        },
        seed: a.seed,
        samples: a.samples,
        timing: a.timing,
    }
}

fn verify(a: VerifyArgs) -> Result<Outcome> {
    let opts = options(&a);
    let types = match a.target {
        Target::One(t) => vec![t],
        Target::All => LieType::all_up_to(a.max_rank),
    };
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut stderr = String::new();
    for t in types {
        match verify_type(t, &opts) {
            Ok(r) => {
                if let Some((s, c)) = r.first_failure() {
                    let w = c.witness.as_deref().unwrap_or("");
                    writeln!(stderr, "FAIL {}: {} / {}: {w}", r.lie_type, s.name, c.name)
                        .expect("string write");
                }
                reports.push(r);
            }
            Err(e) => {
                writeln!(stderr, "FAIL {t}: {e}").expect("string write");
            }
        }
    }
    let single = matches!(a.target, Target::One(_));
    let stdout = match a.format {
        Format::Json if single && !reports.is_empty() => to_json(&reports[0]),
        Format::Json => {
            let mut doc = json!({ "reports": reports });
            if opts.timing {
                doc["total_ms"] = json!(start.elapsed().as_millis() as u64);
            }
            to_json(&doc)
        }
        Format::Md => reports
            .iter()
            .map(report_markdown)
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Csv => reports_csv(&reports)?,
    };
    Ok(if stderr.is_empty() {
        Outcome::ok(stdout)
    } else {
        Outcome::failed(stdout, stderr)
    })
}

fn report_markdown(r: &TypeReport) -> String {
    let mut s = String::new();
    let w = &mut s;
    let _ = writeln!(w, "# {}\n", r.lie_type);
    let _ = writeln!(
        w,
        "dim g = {}, dim h = {}, n = {}, dim M = {}, Einstein constant {}",
        r.dim_g, r.dim_h, r.n, r.dim_m, r.einstein_constant
    );
    let _ = writeln!(
        w,
        "M = {}; quaternion-Kähler base {}",
        r.isotropy.manifold, r.isotropy.wolf_space
    );
    let _ = writeln!(
        w,
        "highest root {:?}, grading dims {:?}",
        r.highest_root, r.grading_dims
    );
    if let Some(c) = &r.curvature {
        let seed = c.seed.map(|s| format!(", seed {s}")).unwrap_or_default();
        let _ = writeln!(
            w,
            "curvature: {}{seed}, {} Ricci entries, {} condition tuples{}",
            c.mode,
            c.ricci_entries,
            c.condition_tuples,
            if c.exhaustive { " (exhaustive)" } else { "" }
        );
    }
    for sec in &r.sections {
        let _ = writeln!(w, "\n## {}\n", sec.name);
        for c in &sec.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            let _ = write!(w, "- [{mark}] {} ({} evaluated)", c.name, c.evaluated);
            if let Some(wit) = &c.witness {
                let _ = write!(w, ": {wit}");
            }
            w.push('\n');
        }
    }
    if let Some(t) = &r.timing_ms {
        let _ = writeln!(w, "\n## timing (ms)\n");
        for (k, v) in t {
            let _ = writeln!(w, "- {k}: {v}");
        }
    }
    let _ = writeln!(w, "\nresult: {}", if r.passed { "PASS" } else { "FAIL" });
    s
}

fn reports_csv(reports: &[TypeReport]) -> Result<String> {
    let err = |e: String| Error::Construction(format!("csv: {e}"));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["type", "section", "check", "passed", "evaluated", "witness"])
        .map_err(|e| err(e.to_string()))?;
    for r in reports {
        for s in &r.sections {
            for c in &s.checks {
                w.write_record([
                    r.lie_type.as_str(),
                    s.name.as_str(),
                    c.name.as_str(),
                    if c.passed { "true" } else { "false" },
                    &c.evaluated.to_string(),
                    c.witness.as_deref().unwrap_or(""),
                ])
                .map_err(|e| err(e.to_string()))?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| err(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| err(e.to_string()))
}

fn table_markdown_row(r: &IsotropyReport) -> String {
    let h = if r.h_components.is_empty() {
        "0".to_string()
    } else {
        r.h_components.join(" + ")
    };
    let mut s = String::new();
    let _ = writeln!(s, "# {}\n", r.lie_type);
    let _ = writeln!(s, "| field | value |\n|---|---|");
    for (k, v) in [
        ("M = G/H", r.manifold.clone()),
        ("family", r.family.clone()),
        ("dim g", r.dim_g.to_string()),
        ("dim h", r.dim_h.to_string()),
        ("h", format!("{h} (center {})", r.center_dim)),
        ("n", r.n.to_string()),
        ("dim M", r.dim_m.to_string()),
        ("Einstein constant", r.einstein_constant.to_string()),
        ("quaternion-Kähler base", r.wolf_space.clone()),
        ("normalizer", r.normalizer_components.join(" + ")),
        ("quotient (lookup)", r.pi1_quotient.clone()),
    ] {
        let _ = writeln!(s, "| {k} | {v} |");
    }
    s
}

fn roots(t: LieType, format: Format, structure: bool) -> Result<Outcome> {
    let rs = build_root_system(t);
    if structure {
        let cb = build_chevalley(rs)?;
        return Ok(Outcome::ok(to_json(&cb.table().to_json())));
    }
    let theta = rs.highest_root();
    let rows: Vec<(String, i64, i64)> = rs
        .positive_roots()
        .iter()
        .map(|b| (b.label(), b.height(), rs.cartan_unchecked(&theta, b)))
        .collect();
    let out = match format {
        Format::Json => to_json(&json!({
            "type": t.label(),
            "cartan": rs.cartan(),
            "highest_root": theta.coords(),
            "positive_roots": rows.iter().map(|(r, h, c)| json!({"root": r, "height": h, "grading": c})).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = String::from("root,height,grading\n");
            for (r, h, c) in &rows {
                let _ = writeln!(s, "\"{r}\",{h},{c}");
            }
            s
        }
        Format::Md => {
            let mut s = String::new();
            let _ = writeln!(s, "# {t}: {} positive roots\n", rows.len());
            let _ = writeln!(s, "Cartan matrix: {:?}\n", rs.cartan());
            let _ = writeln!(s, "highest root: {}\n", theta.label());
            let _ = writeln!(s, "| root | height | c(theta, root) |\n|---|---|---|");
            for (r, h, c) in &rows {
                let _ = writeln!(s, "| {r} | {h} | {c} |");
            }
            s
        }
    };
    Ok(Outcome::ok(out))
}
