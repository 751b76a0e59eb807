//! The `kirkman` command line. Everything here is plumbing around the
//! library; [`run`] returns the process exit code.
//!
//! Exit codes: 0 success, 1 a check failed or the search was UNSAT,
//! 2 usage or input error, 3 time budget exhausted.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use crate::catalog::{self, Entry};
use crate::constructions::{Artifact, ConstructionRecipe, RecipeError, RecipeInput, RECIPES};
use crate::design::{
    is_weak, rainbow_check, verify_frame, verify_gdd, verify_pairwise_balance, verify_resolution, Colouring,
    PartitionType, Report,
};
use crate::format::{emit_colouring, emit_design, parse_colouring, parse_design};
use crate::solver::{
    chromatic_number, find_resolution, search_weak_colouring, Chromatic, ResolveOptions, ResolveOutcome, SearchOptions,
    SearchStatus,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "kirkman", version, about = "Construct, verify and colour Kirkman triple systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List or print catalog designs.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Check a design and, optionally, its structure and a colouring.
    Verify(VerifyArgs),
    /// Compute the weak chromatic number.
    Chromatic(ChromaticArgs),
    /// Search for a weak colouring with the given constraints.
    Colour(ColourArgs),
    /// Find a resolution into parallel classes.
    Resolve(ResolveArgs),
    /// Run a construction (`construct list` shows them all).
    Construct(ConstructArgs),
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    List,
    Emit {
        #[arg(long)]
        name: String,
        #[arg(long = "with-colouring")]
        with_colouring: Option<String>,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Args, Debug)]
struct DesignArg {
    /// A design file or a catalog id.
    #[arg(long)]
    design: String,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    design: DesignArg,
    #[arg(long)]
    resolution: bool,
    #[arg(long)]
    gdd: bool,
    #[arg(long)]
    frame: bool,
    /// A colouring file, a colouring name of the catalog design, or `<id>-<name>`.
    #[arg(long)]
    colouring: Option<String>,
    #[arg(long)]
    rainbow: bool,
}

#[derive(Args, Debug)]
struct ChromaticArgs {
    #[command(flatten)]
    design: DesignArg,
    #[arg(long, default_value_t = 8)]
    max: u32,
    /// Seconds for the whole computation.
    #[arg(long)]
    budget: Option<f64>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Args, Debug)]
struct ColourArgs {
    #[command(flatten)]
    design: DesignArg,
    #[arg(long)]
    delta: u32,
    #[arg(long)]
    equitable: bool,
    /// Required colour type, e.g. `8^3 9^1`.
    #[arg(long = "type")]
    colour_type: Option<String>,
    #[arg(long = "min-block-colours")]
    min_block_colours: Option<usize>,
    #[arg(long)]
    rainbow: bool,
    #[arg(long)]
    budget: Option<f64>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Write the colouring here as well as printing it.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args, Debug)]
struct ResolveArgs {
    #[command(flatten)]
    design: DesignArg,
    #[arg(long)]
    budget: Option<f64>,
    /// Write the resolved design here instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    recipe: String,
    /// `key=value`
    #[arg(long = "param")]
    params: Vec<String>,
    /// `name=REF` where REF is a file, a catalog id or a catalog colouring;
    /// `name.colouring=REF` attaches a colouring to design input `name`.
    #[arg(long = "input")]
    inputs: Vec<String>,
    /// Design output; a colouring goes to the same path with `.col` appended.
    #[arg(long)]
    out: Option<String>,
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn failed(message: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_FAIL, message: message.to_string() }
}

type Outcome = Result<i32, Failure>;

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
    let result = match cli.command {
        Command::Catalog(c) => catalog_cmd(c, out),
        Command::Verify(a) => verify(a, out),
        Command::Chromatic(a) => chromatic(a, out),
        Command::Colour(a) => colour(a, out),
        Command::Resolve(a) => resolve(a, out, err),
        Command::Construct(a) => construct(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    usage(format!("i/o: {e}"))
}

fn write_file(path: &str, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| usage(format!("cannot write {path}: {e}")))
}

/// A design file if `reference` names one, otherwise a catalog entry.
fn load(reference: &str) -> Result<Entry, Failure> {
    if Path::new(reference).is_file() {
        let text = std::fs::read_to_string(reference).map_err(|e| usage(format!("cannot read {reference}: {e}")))?;
        let f = parse_design(&text).map_err(|e| usage(format!("{reference}: {e}")))?;
        return Ok(Entry {
            id: reference.into(),
            design: f.design,
            groups: f.groups,
            resolution: f.resolution,
            colourings: vec![],
        });
    }
    catalog::lookup(reference).map_err(|e| usage(format!("`{reference}` is neither a file nor a catalog design ({e})")))
}

/// A colouring file, a colouring of `entry` by name, or `<id>-<name>`.
fn load_colouring(reference: &str, entry: Option<&Entry>) -> Result<Colouring, Failure> {
    let v = entry.map(|e| e.design.v());
    if Path::new(reference).is_file() {
        let text = std::fs::read_to_string(reference).map_err(|e| usage(format!("cannot read {reference}: {e}")))?;
        return parse_colouring(&text, v).map_err(|e| usage(format!("{reference}: {e}")));
    }
    if let Some(c) = entry.and_then(|e| e.colouring(reference)) {
        return Ok(c.clone());
    }
    // Catalog ids contain '-' themselves, so try every split point.
    for (i, _) in reference.match_indices('-') {
        let (id, name) = (&reference[..i], &reference[i + 1..]);
        if let Ok(e) = catalog::lookup(id) {
            if let Some(c) = e.colouring(name) {
                return Ok(c.clone());
            }
        }
    }
    Err(usage(format!("`{reference}` is not a colouring file or a known catalog colouring")))
}

fn budget(secs: Option<f64>) -> Result<Option<Duration>, Failure> {
    secs.map(|s| Duration::try_from_secs_f64(s).map_err(|_| usage(format!("bad budget {s}")))).transpose()
}

fn catalog_cmd(cmd: CatalogCmd, out: &mut dyn Write) -> Outcome {
    match cmd {
        CatalogCmd::List => {
            for id in catalog::ids() {
                let e = catalog::lookup(&id).map_err(failed)?;
                let names: Vec<&str> = e.colourings.iter().map(|c| c.name).collect();
                writeln!(
                    out,
                    "{id} v={} k={} blocks={} resolution={} colourings={}",
                    e.design.v(),
                    e.design.k(),
                    e.design.num_blocks(),
                    e.resolution.is_some(),
                    if names.is_empty() { "-".to_string() } else { names.join(",") }
                )
                .map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        CatalogCmd::Emit { name, with_colouring, out: path } => {
            let e = catalog::lookup(&name).map_err(|e| usage(e.to_string()))?;
            let mut text = emit_design(&e.design, e.groups.as_ref(), e.resolution.as_ref());
            if let Some(c) = &with_colouring {
                let colouring = e.colouring(c).ok_or_else(|| usage(format!("{name} has no colouring `{c}`")))?;
                match &path {
                    Some(p) => write_file(&format!("{p}.col"), &emit_colouring(colouring))?,
                    None => text.push_str(&format!("# colouring {c}: {}", emit_colouring(colouring))),
                }
            }
            match path {
                Some(p) => write_file(&p, &text)?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn print_report(out: &mut dyn Write, report: &Report) -> Result<bool, Failure> {
    write!(out, "{report}").map_err(io)?;
    Ok(report.ok())
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Outcome {
    let e = load(&a.design.design)?;
    let mut ok = true;
    let v = |r: Result<Report, crate::design::VerifyError>| r.map_err(failed);
    let need_groups = || e.groups.as_ref().ok_or_else(|| failed("the design has no GROUPS section"));
    let need_res = || e.resolution.as_ref().ok_or_else(|| failed("the design has no RESOLUTION section"));
    if a.gdd || a.frame {
        ok &= print_report(out, &v(verify_gdd(&e.design, need_groups()?))?)?;
    } else {
        ok &= print_report(out, &verify_pairwise_balance(&e.design))?;
    }
    if a.frame {
        ok &= print_report(out, &v(verify_frame(&e.design, need_groups()?, need_res()?))?)?;
    } else if a.resolution {
        ok &= print_report(out, &v(verify_resolution(&e.design, need_res()?, e.groups.as_ref()))?)?;
    }
    let colouring = a.colouring.as_deref().map(|c| load_colouring(c, Some(&e))).transpose()?;
    if let Some(c) = &colouring {
        if c.v() != e.design.v() {
            return Err(usage(format!("colouring has {} points, design has {}", c.v(), e.design.v())));
        }
        ok &= print_report(out, &v(is_weak(&e.design, c))?)?;
        writeln!(out, "colour_type: {}", c.colour_type()).map_err(io)?;
        writeln!(out, "equitable: {}", c.is_equitable()).map_err(io)?;
    }
    if a.rainbow {
        let c = colouring.as_ref().ok_or_else(|| usage("--rainbow needs --colouring"))?;
        let r = rainbow_check(&e.design, need_res()?, c).map_err(failed)?;
        ok &= print_report(out, &r.report)?;
        writeln!(out, "rainbow_classes: {:?}", r.rainbow_classes).map_err(io)?;
    }
    writeln!(out, "result: {}", if ok { "PASS" } else { "FAIL" }).map_err(io)?;
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}

fn chromatic(a: ChromaticArgs, out: &mut dyn Write) -> Outcome {
    let e = load(&a.design.design)?;
    let res = chromatic_number(&e.design, a.max, budget(a.budget)?, a.threads).map_err(|e| usage(e.to_string()))?;
    for (delta, status, stats) in &res.steps {
        writeln!(out, "delta {delta}: {status} nodes={} ms={}", stats.nodes, stats.elapsed.as_millis()).map_err(io)?;
    }
    match res.result {
        Chromatic::Exact { delta, colouring } => {
            writeln!(out, "colouring: {}", emit_colouring(&colouring).trim_end()).map_err(io)?;
            writeln!(out, "chromatic_number: {delta}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Chromatic::AboveMax { max_delta } => {
            writeln!(out, "chromatic_number: >{max_delta}").map_err(io)?;
            Ok(EXIT_FAIL)
        }
        Chromatic::Indeterminate { delta } => {
            writeln!(out, "chromatic_number: >={delta} (timeout)").map_err(io)?;
            Ok(EXIT_TIMEOUT)
        }
    }
}

fn colour(a: ColourArgs, out: &mut dyn Write) -> Outcome {
    let e = load(&a.design.design)?;
    let mut opts = SearchOptions::new(a.delta).threads(a.threads);
    if a.equitable {
        opts = opts.equitable();
    }
    if let Some(t) = &a.colour_type {
        opts = opts.with_type(PartitionType::parse(t).ok_or_else(|| usage(format!("bad colour type `{t}`")))?);
    }
    if let Some(m) = a.min_block_colours {
        opts = opts.min_colours(m);
    }
    if a.rainbow {
        let res = e.resolution.clone().ok_or_else(|| usage("--rainbow needs a design with a RESOLUTION"))?;
        opts = opts.rainbow(res);
    }
    if let Some(b) = budget(a.budget)? {
        opts = opts.budget(b);
    }
    let outcome = search_weak_colouring(&e.design, &opts).map_err(|e| usage(e.to_string()))?;
    writeln!(out, "status: {}", outcome.status).map_err(io)?;
    writeln!(out, "nodes: {}", outcome.stats.nodes).map_err(io)?;
    writeln!(out, "ms: {}", outcome.stats.elapsed.as_millis()).map_err(io)?;
    match outcome.status {
        SearchStatus::Sat(c) => {
            writeln!(out, "colour_type: {}", c.colour_type()).map_err(io)?;
            writeln!(out, "colouring: {}", emit_colouring(&c).trim_end()).map_err(io)?;
            if let Some(p) = &a.out {
                write_file(p, &emit_colouring(&c))?;
            }
            Ok(EXIT_OK)
        }
        SearchStatus::Unsat => Ok(EXIT_FAIL),
        SearchStatus::Timeout => Ok(EXIT_TIMEOUT),
    }
}

fn resolve(a: ResolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let e = load(&a.design.design)?;
    let opts = ResolveOptions { time_budget: budget(a.budget)?, ..Default::default() };
    let r = find_resolution(&e.design, &opts);
    let s = &r.stats;
    writeln!(
        err,
        "candidate_classes: {} attempts: {} nodes: {} ms: {}",
        s.candidate_classes.map_or("-".into(), |c| c.to_string()),
        s.attempts,
        s.nodes,
        s.elapsed.as_millis()
    )
    .map_err(io)?;
    match r.outcome {
        ResolveOutcome::Found(res) => {
            writeln!(err, "status: FOUND classes={}", res.len()).map_err(io)?;
            let text = emit_design(&e.design, e.groups.as_ref(), Some(&res));
            match a.out {
                Some(p) => write_file(&p, &text)?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        ResolveOutcome::NoResolution => {
            writeln!(err, "status: NONE").map_err(io)?;
            Ok(EXIT_FAIL)
        }
        ResolveOutcome::Timeout => {
            writeln!(err, "status: TIMEOUT").map_err(io)?;
            Ok(EXIT_TIMEOUT)
        }
        ResolveOutcome::NotApplicable(why) => Err(failed(format!("not resolvable: {why}"))),
    }
}

fn construct(a: ConstructArgs, out: &mut dyn Write) -> Outcome {
    if a.recipe == "list" {
        for r in RECIPES {
            writeln!(out, "{}: {} (params: {}; inputs: {})", r.name, r.summary, r.params.join(","), r.inputs.join(","))
                .map_err(io)?;
        }
        return Ok(EXIT_OK);
    }
    let mut recipe = ConstructionRecipe::new(&a.recipe);
    recipe.info().map_err(|e| usage(e.to_string()))?;
    for p in &a.params {
        let (k, v) = p.split_once('=').ok_or_else(|| usage(format!("--param expects key=value, got `{p}`")))?;
        recipe = recipe.param(k, v);
    }
    let mut attach = Vec::new();
    for i in &a.inputs {
        let (k, v) = i.split_once('=').ok_or_else(|| usage(format!("--input expects name=REF, got `{i}`")))?;
        if let Some(target) = k.strip_suffix(".colouring") {
            attach.push((target.to_string(), load_colouring(v, None)?));
            continue;
        }
        let input = if k == "colouring" {
            RecipeInput::Colouring(load_colouring(v, None)?)
        } else {
            let e = load(v)?;
            let colouring = e.colourings.first().map(|c| c.colouring.clone());
            RecipeInput::Design(Artifact { design: e.design, groups: e.groups, resolution: e.resolution, colouring })
        };
        recipe = recipe.input(k, input);
    }
    for (target, c) in attach {
        match recipe.inputs.get_mut(&target) {
            Some(RecipeInput::Design(d)) => d.colouring = Some(c),
            _ => return Err(usage(format!("`{target}.colouring` given without --input {target}=..."))),
        }
    }
    let art = recipe.run().map_err(|e| match e {
        RecipeError::MissingInput { .. } | RecipeError::MissingParam { .. } | RecipeError::BadParam { .. } => {
            usage(e.to_string())
        }
        _ => failed(e),
    })?;
    let mut text = emit_design(&art.design, art.groups.as_ref(), art.resolution.as_ref());
    match &a.out {
        Some(p) => {
            write_file(p, &text)?;
            writeln!(out, "design: {p} v={} blocks={}", art.design.v(), art.design.num_blocks()).map_err(io)?;
            if let Some(c) = &art.colouring {
                let cp = format!("{p}.col");
                write_file(&cp, &emit_colouring(c))?;
                writeln!(out, "colouring: {cp} type={}", c.colour_type()).map_err(io)?;
            }
        }
        None => {
            if let Some(c) = &art.colouring {
                text.push_str(&format!("# colouring: {}", emit_colouring(c)));
            }
            out.write_all(text.as_bytes()).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}
