//! The `kirwan` command line.

use std::fmt::Write as _;
use std::io::{IsTerminal, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::MonomialOrder;
use crate::blowup::{blowup_charts, kirwan_charts, rees_presentation, Chart};
use crate::cdga::{classical_truncation, fixed_locus, validate_presentation, GradedCdga, SubtorusBasis, Violation};
use crate::error::{Error, Result};
use crate::reduction::{stabilizer_reduce, ReductionConfig};
use crate::torus::{saturation_ideal_partial, stabilizer_stratification, DEFAULT_DEGREE_CAP, DEFAULT_VARIABLE_CAP};

use super::printer::format_polynomial;
use super::report::{canonical_generators, leaf_records, tree_record, ChartRecord, ExcludedRecord, ReesRecord, ReportDocument};
use super::scene::{read_scene, OrderName, Scene};

#[derive(Debug, Parser)]
#[command(name = "kirwan", version, about = "Kirwan blow-ups and stabilizer reduction for torus actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a scene's presentation (d^2 = 0, weights, names).
    Validate(Args),
    /// Classical truncation as a reduced Gröbner basis.
    Pi0(Args),
    /// Derived fixed locus of the subtorus.
    FixedLocus(Args),
    /// Extended Rees presentation along the fixed locus.
    Rees(Args),
    /// Blow-up charts along the fixed locus.
    Blowup(Args),
    /// Blow-up charts with the unstable locus removed.
    Kirwan(Args),
    /// Iterate Kirwan blow-ups until all stabilizers are finite.
    Reduce(Args),
    /// Obstruction reports of the DM charts of the reduction.
    Report(Args),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

#[derive(Debug, clap::Args)]
struct Args {
    /// Scene file (JSON).
    #[arg(long)]
    scene: PathBuf,
    /// Subtorus basis as semicolon-separated cocharacters, e.g. "1,0;0,1".
    #[arg(long)]
    subtorus: Option<String>,
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
    /// Restrict output to one chart (center variable or chart id).
    #[arg(long)]
    chart: Option<String>,
    /// Write the JSON report here ("-" for stdout).
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    degree_cap: Option<u32>,
    #[arg(long)]
    depth_fuse: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

/// Output styling for the human-readable text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Plain,
    Color,
}

impl Style {
    /// Color only on a terminal and only when `NO_COLOR` is unset.
    pub fn detect() -> Style {
        if std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal() {
            Style::Color
        } else {
            Style::Plain
        }
    }

    fn paint(self, code: &str, s: &str) -> String {
        match self {
            Style::Plain => s.to_string(),
            Style::Color => format!("\x1b[{code}m{s}\x1b[0m"),
        }
    }
}

struct Context {
    scene: Scene,
    bytes: Vec<u8>,
    args: Args,
    style: Style,
}

impl Context {
    fn order(&self, nvars: usize) -> MonomialOrder {
        let name = match self.args.order {
            Some(OrderArg::Lex) => OrderName::Lex,
            Some(OrderArg::Grevlex) => OrderName::Grevlex,
            None => self.scene.options.order.unwrap_or_default(),
        };
        name.order(nvars)
    }

    fn config(&self) -> ReductionConfig {
        let opts = &self.scene.options;
        ReductionConfig {
            depth_fuse: self.args.depth_fuse.or(opts.depth_fuse).unwrap_or(8),
            variable_cap: DEFAULT_VARIABLE_CAP,
            degree_cap: self.args.degree_cap.or(opts.degree_cap).unwrap_or(DEFAULT_DEGREE_CAP),
            seed: self.args.seed.or(opts.seed).unwrap_or(0),
        }
    }

    fn subtorus(&self, x: &GradedCdga) -> Result<SubtorusBasis> {
        match &self.args.subtorus {
            Some(s) => parse_subtorus(s, x.torus_rank()),
            None => {
                let rep = stabilizer_stratification(x, DEFAULT_VARIABLE_CAP)?;
                if rep.max_dim == 0 {
                    Err(Error::NoPositiveDimensionalStabilizer)
                } else {
                    Ok(rep.maximal_subtorus)
                }
            }
        }
    }

    fn wants_chart(&self, chart: &Chart) -> bool {
        self.args.chart.as_ref().map_or(true, |c| *c == chart.center || *c == chart.id())
    }

    /// Writes the JSON document if requested; returns whether the text output
    /// should be suppressed (JSON went to stdout).
    fn emit<T: Serialize>(&self, out: &mut dyn Write, command: &str, result: T) -> Result<bool> {
        let Some(path) = &self.args.json else {
            return Ok(false);
        };
        let doc = ReportDocument::new(command, &self.bytes, result).to_json();
        if path == Path::new("-") {
            out.write_all(doc.as_bytes())?;
            Ok(true)
        } else {
            std::fs::write(path, doc)?;
            Ok(false)
        }
    }
}

/// Parses `"1,0;0,1"` into a subtorus basis of the rank-`k` torus.
pub fn parse_subtorus(src: &str, k: usize) -> Result<SubtorusBasis> {
    let vectors = src
        .split(';')
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .map(|v| {
            v.split(',')
                .map(|n| n.trim().parse::<i64>().map_err(|_| Error::Usage(format!("bad subtorus entry `{n}`"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SubtorusBasis::new(k, vectors)
}

/// Runs the command line with styling taken from the environment.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_command_styled(argv, out, err, Style::detect())
}

pub fn run_command_styled<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write, style: Style) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, style) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, style: Style) -> Result<i32> {
    let (name, args) = match command {
        Command::Validate(a) => ("validate", a),
        Command::Pi0(a) => ("pi0", a),
        Command::FixedLocus(a) => ("fixed-locus", a),
        Command::Rees(a) => ("rees", a),
        Command::Blowup(a) => ("blowup", a),
        Command::Kirwan(a) => ("kirwan", a),
        Command::Reduce(a) => ("reduce", a),
        Command::Report(a) => ("report", a),
    };
    let (scene, bytes) = read_scene(&args.scene)?;
    let ctx = Context { scene, bytes, args, style };
    if name == "validate" {
        return validate(&ctx, out);
    }
    let x = ctx.scene.to_cdga()?;
    let text = match name {
        "pi0" => pi0(&ctx, &x, out)?,
        "fixed-locus" => fixed(&ctx, &x, out)?,
        "rees" => rees(&ctx, &x, out)?,
        "blowup" | "kirwan" => charts(&ctx, &x, out, name == "kirwan")?,
        "reduce" => reduce(&ctx, &x, out)?,
        _ => report(&ctx, &x, out)?,
    };
    if let Some(text) = text {
        out.write_all(text.as_bytes())?;
    }
    Ok(0)
}

#[derive(Serialize)]
struct ValidationResult {
    passed: bool,
    violations: Vec<Violation>,
}

fn validate(ctx: &Context, out: &mut dyn Write) -> Result<i32> {
    let x = ctx.scene.to_cdga_unchecked()?;
    let report = validate_presentation(&x);
    let passed = report.passed();
    let mut text = String::new();
    if passed {
        let _ = writeln!(text, "{}", ctx.style.paint("32", "valid"));
    } else {
        let _ = writeln!(text, "{}", ctx.style.paint("31", "invalid"));
        for v in &report.violations {
            let _ = writeln!(text, "  {v}");
        }
    }
    let quiet = ctx.emit(out, "validate", ValidationResult { passed, violations: report.violations })?;
    if !quiet {
        out.write_all(text.as_bytes())?;
    }
    Ok(if passed { 0 } else { 1 })
}

#[derive(Serialize)]
struct Pi0Result {
    ring: Vec<String>,
    generators: Vec<String>,
}

fn pi0(ctx: &Context, x: &GradedCdga, out: &mut dyn Write) -> Result<Option<String>> {
    let generators = canonical_generators(&classical_truncation(x));
    let text = generators.iter().map(|g| format!("{g}\n")).collect::<String>();
    let quiet = ctx.emit(out, "pi0", Pi0Result { ring: x.ring().names().to_vec(), generators })?;
    Ok((!quiet).then_some(text))
}

/// Multi-line human description of a presentation.
pub fn describe(x: &GradedCdga) -> String {
    let order = MonomialOrder::grevlex(x.ring().len());
    let p = |q: &crate::algebra::Polynomial| format_polynomial(q, &order);
    let mut s = String::new();
    let vars: Vec<String> = x.ring_vars().iter().map(|v| format!("{}{}", v.name, v.weight)).collect();
    let _ = writeln!(s, "  ring: [{}]", vars.join(", "));
    for g in x.gens1() {
        let _ = writeln!(s, "  d({}{}) = {}", g.var.name, g.var.weight, p(&g.differential));
    }
    for e in x.gens2() {
        let terms: Vec<String> = e.differential.iter().map(|(t, c)| format!("({})*{t}", p(c))).collect();
        let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        let _ = writeln!(s, "  d({}{}) = {rhs}", e.var.name, e.var.weight);
    }
    let _ = writeln!(s, "  pi0: ({})", canonical_generators(&classical_truncation(x)).join(", "));
    s
}

fn excluded_text(e: &ExcludedRecord) -> String {
    match e {
        ExcludedRecord::Nothing => "nothing".into(),
        ExcludedRecord::Everything => "everything".into(),
        ExcludedRecord::Locus { generators } => format!("V({})", generators.join(", ")),
    }
}

#[derive(Serialize)]
struct FixedResult {
    subtorus: SubtorusBasis,
    fixed_locus: super::report::CdgaRecord,
}

fn fixed(ctx: &Context, x: &GradedCdga, out: &mut dyn Write) -> Result<Option<String>> {
    let h = ctx.subtorus(x)?;
    let f = fixed_locus(x, &h)?;
    let text = format!("fixed locus of {:?}\n{}", h.vectors(), describe(&f));
    let quiet = ctx.emit(out, "fixed-locus", FixedResult { subtorus: h, fixed_locus: f.as_record() })?;
    Ok((!quiet).then_some(text))
}

fn rees(ctx: &Context, x: &GradedCdga, out: &mut dyn Write) -> Result<Option<String>> {
    let h = ctx.subtorus(x)?;
    let r = rees_presentation(x, &h, &ctx.order(x.ring().len()))?;
    let mut text = String::new();
    let _ = writeln!(text, "Rees presentation along {:?}", h.vectors());
    for rel in &r.relations {
        let _ = writeln!(
            text,
            "  ({},{}) [{}] {}",
            rel.homological_degree,
            rel.homogeneous_degree,
            rel.source,
            format_polynomial(&rel.expression, &MonomialOrder::grevlex(r.ring.len()))
        );
    }
    let quiet = ctx.emit(out, "rees", ReesRecord::from(&r))?;
    Ok((!quiet).then_some(text))
}

#[derive(Serialize)]
struct ChartsResult {
    subtorus: SubtorusBasis,
    #[serde(skip_serializing_if = "Option::is_none")]
    saturation: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certified: Option<bool>,
    charts: Vec<ChartRecord>,
}

fn charts(ctx: &Context, x: &GradedCdga, out: &mut dyn Write, kirwan: bool) -> Result<Option<String>> {
    let h = ctx.subtorus(x)?;
    let (all, saturation) = if kirwan {
        let sat = saturation_ideal_partial(x, &h, ctx.config().degree_cap)?;
        (kirwan_charts(x, &h, &sat.ideal)?, Some(sat))
    } else {
        (blowup_charts(x, &h)?, None)
    };
    let selected: Vec<&Chart> = all.iter().filter(|c| ctx.wants_chart(c)).collect();
    if selected.is_empty() {
        if let Some(name) = &ctx.args.chart {
            return Err(Error::Usage(format!("no chart named `{name}`")));
        }
    }
    let mut text = String::new();
    if let Some(sat) = &saturation {
        let mark = if sat.certified { "" } else { " (not certified: degree cap reached)" };
        let _ = writeln!(text, "saturation: ({}){mark}", canonical_generators(&sat.ideal).join(", "));
    }
    for c in &selected {
        let _ = writeln!(text, "chart {} ({} -> {}{})", c.id(), c.center, c.exceptional, c.exceptional_weight);
        text.push_str(&describe(&c.cdga));
        if kirwan {
            let state = if c.fully_unstable { ctx.style.paint("33", "fully unstable") } else { excluded_text(&c.cdga.excluded().into()) };
            let _ = writeln!(text, "  excluded: {state}");
        }
    }
    let result = ChartsResult {
        subtorus: h,
        saturation: saturation.as_ref().map(|s| canonical_generators(&s.ideal)),
        certified: saturation.as_ref().map(|s| s.certified),
        charts: selected.into_iter().map(ChartRecord::from).collect(),
    };
    let quiet = ctx.emit(out, if kirwan { "kirwan" } else { "blowup" }, result)?;
    Ok((!quiet).then_some(text))
}

fn reduce(ctx: &Context, x: &GradedCdga, out: &mut dyn Write) -> Result<Option<String>> {
    let tree = stabilizer_reduce(x, &ctx.config())?;
    let record = tree_record(&tree);
    let s = &record.summary;
    let mut text = String::new();
    let _ = writeln!(text, "blow-ups: {}", s.blowups);
    let _ = writeln!(text, "DM charts: {}", s.dm_charts);
    let _ = writeln!(text, "fully unstable charts: {}", s.fully_unstable_charts);
    let _ = writeln!(text, "depth: {}", s.height);
    if s.dm_charts == 0 && s.fully_unstable_charts > 0 {
        let _ = writeln!(text, "{}", ctx.style.paint("33", "semistable locus is empty"));
    }
    for leaf in &record.leaves {
        let _ = writeln!(text, "  {}  excluded {}  vdim {}", leaf.id, excluded_text(&leaf.excluded), leaf.report.vdim);
    }
    if !s.certified {
        let _ = writeln!(text, "{}", ctx.style.paint("33", "not certified: a saturation ideal hit the degree cap"));
    }
    let checks = if s.checks_passed { ctx.style.paint("32", "all invariant checks passed") } else { ctx.style.paint("31", "INVARIANT CHECK FAILED") };
    let _ = writeln!(text, "{checks}");
    let failed = !s.checks_passed;
    let quiet = ctx.emit(out, "reduce", record)?;
    if failed {
        if !quiet {
            out.write_all(text.as_bytes())?;
        }
        return Err(Error::InvariantBreach("an invariant check failed during reduction".into()));
    }
    Ok((!quiet).then_some(text))
}

fn report(ctx: &Context, x: &GradedCdga, out: &mut dyn Write) -> Result<Option<String>> {
    let tree = stabilizer_reduce(x, &ctx.config())?;
    let leaves: Vec<_> = leaf_records(&tree)
        .into_iter()
        .filter(|l| l.report.dm)
        .filter(|l| ctx.args.chart.as_ref().map_or(true, |c| l.id == *c || l.id.ends_with(&format!("/{c}"))))
        .collect();
    let mut text = String::new();
    for l in &leaves {
        let r = &l.report;
        let e = r.e_ranks.map_or("-".to_string(), |(a, b)| format!("({a},{b})"));
        let _ = writeln!(
            text,
            "{}: vdim {} e_ranks {} dagger {} quasi_smooth {} dm {}",
            l.id, r.vdim, e, r.dagger, r.quasi_smooth, r.dm
        );
    }
    let quiet = ctx.emit(out, "report", leaves)?;
    Ok((!quiet).then_some(text))
}
