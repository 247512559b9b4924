//! Command-line frontend.
//!
//! Exit codes: 0 for a computed result, 2 when the result contains a
//! bounded-search `none-up-to-bound` outcome, 1 for errors. Reports carry
//! the exact request parameters; identical invocations produce
//! byte-identical output.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::arrow::{
    check_arrow, ramsey_degree_report, search_arrow_witness, ArrowQuery, ArrowSearchOutcome,
    DegreeParams, SearchLimits,
};
use crate::catalog::{generate_age, AgeCatalog, Family};
use crate::circle::{realize, CircleFamily, CirclePlacement, TurnAngle};
use crate::expansion::{
    check_expansion_property, ep_witness_for_expansion, list_expansions, named_pair,
    transform_q2_s2star, transform_q3_s3star, transform_s2star_q2, transform_s3star_q3, EpOutcome,
};
use crate::experiments::run_experiment;
use crate::flow::{
    interval_from_basic_open, partition_from_flowpoint, partition_from_flowpoint_s3, FlowPoint,
    FlowVariant,
};
use crate::format;
use crate::structure::Structure;
use crate::{Error, Result};

pub const CACHE_DIR_ENV: &str = "STRUCTURAL_RAMSEY_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "structural-ramsey", version, about = "Exact structural Ramsey computations")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "text", value_parser = ["text", "json"])]
    pub format: String,
    /// Seed for the sampled parts of experiments.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker cap for internally parallel steps (currently catalog
    /// generation); 1 disables threading.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Catalog cache directory (defaults to the environment variable
    /// STRUCTURAL_RAMSEY_CACHE_DIR when set).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Age catalogs.
    Age {
        #[command(subcommand)]
        cmd: AgeCommand,
    },
    /// Arrow partition relations.
    Arrow {
        #[command(subcommand)]
        cmd: ArrowCommand,
    },
    /// Ramsey-degree brackets.
    Degree {
        #[command(subcommand)]
        cmd: DegreeCommand,
    },
    /// Expansions, expansion property, transforms.
    Expand {
        #[command(subcommand)]
        cmd: ExpandCommand,
    },
    /// Circle placements and realizability.
    Circle {
        #[command(subcommand)]
        cmd: CircleCommand,
    },
    /// Doubled-circle partition coding.
    Flow {
        #[command(subcommand)]
        cmd: FlowCommand,
    },
    /// Bundled acceptance experiments.
    Experiment {
        /// Experiment name, or `all`.
        name: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum AgeCommand {
    /// Generate a catalog up to a size bound.
    Generate {
        /// Family tag: s2, s3, s2star, s3star, qn:<n>, q2k, parts2, lo,
        /// tournaments, or file:<path> for an explicit member list.
        #[arg(long)]
        family: String,
        #[arg(long)]
        bound: usize,
        /// Output path for the catalog file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct LimitArgs {
    /// Bound on |copies| · log2(k) for arrow searches.
    #[arg(long, default_value_t = SearchLimits::default().max_color_bits)]
    pub max_color_bits: u64,
    /// Bound on explored search nodes.
    #[arg(long, default_value_t = SearchLimits::default().max_nodes)]
    pub max_nodes: u64,
}

impl LimitArgs {
    fn limits(&self) -> SearchLimits {
        SearchLimits { max_color_bits: self.max_color_bits, max_nodes: self.max_nodes }
    }
}

#[derive(Subcommand, Debug)]
pub enum ArrowCommand {
    /// Decide C → (B)^A with k colors and value budget l.
    Check {
        #[arg(long)]
        c: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        a: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        l: usize,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Search a catalog for the first member satisfying the arrow.
    Search {
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        a: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        l: usize,
        #[arg(long)]
        max_size: usize,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum DegreeCommand {
    /// Bracket the Ramsey degree of a structure in a named expansion pair.
    Report {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        a: PathBuf,
        #[arg(long, default_value_t = 2)]
        colors: usize,
        #[arg(long, default_value_t = 3)]
        b_bound: usize,
        #[arg(long, default_value_t = 5)]
        c_bound: usize,
        /// Catalog bound for the pair.
        #[arg(long, default_value_t = 5)]
        pair_bound: usize,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExpandCommand {
    /// Count the expansions of a base structure.
    Count {
        #[arg(long)]
        pair: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 6)]
        pair_bound: usize,
    },
    /// Expansion-property witness search.
    Ep {
        #[arg(long)]
        pair: String,
        /// Base structure, or expanded structure with --star.
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        bound: usize,
        /// Treat the target as a single expanded structure.
        #[arg(long)]
        star: bool,
        #[arg(long, default_value_t = 6)]
        pair_bound: usize,
    },
    /// Arc-rewriting transforms between starred structures and chains.
    Transform {
        #[arg(long, value_parser = ["s2q2", "q2s2", "s3q3", "q3s3"])]
        rule: String,
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum CircleCommand {
    /// Build the structure induced on explicit points.
    Build {
        #[arg(long, value_parser = ["s2", "s2star", "s3", "s3star"])]
        family: String,
        /// Comma-separated exact angles, e.g. 0,1/5,3/5.
        #[arg(long)]
        points: String,
    },
    /// Decide realizability of a structure on the circle.
    Realize {
        #[arg(long, value_parser = ["s2", "s2star", "s3", "s3star"])]
        family: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 7)]
        limit: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum FlowCommand {
    /// Partition trace of a flow point on a finite family.
    Code {
        #[arg(long, value_parser = ["hat", "tilde"])]
        variant: String,
        /// Flow point as p/q or p/q:label.
        #[arg(long)]
        point: String,
        /// Comma-separated family of dense-set angles.
        #[arg(long = "F")]
        family: String,
    },
    /// Basic open interval around a flow point.
    Interval {
        #[arg(long, value_parser = ["hat"])]
        variant: String,
        #[arg(long)]
        point: String,
        #[arg(long = "F")]
        family: String,
    },
}

/// A rendered report plus the process exit code.
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let json_mode = cli.format == "json";
    match &cli.command {
        Command::Age { cmd } => run_age(cli, cmd, json_mode),
        Command::Arrow { cmd } => run_arrow(cmd, json_mode),
        Command::Degree { cmd } => run_degree(cmd, json_mode),
        Command::Expand { cmd } => run_expand(cmd, json_mode),
        Command::Circle { cmd } => run_circle(cmd, json_mode),
        Command::Flow { cmd } => run_flow(cmd, json_mode),
        Command::Experiment { name } => run_experiment_cmd(name, cli.seed, json_mode),
    }
}

fn load_structure(path: &Path) -> Result<Structure> {
    let text = std::fs::read_to_string(path)?;
    format::from_str_any(&text)
}

fn parse_family(tag: &str) -> Result<Family> {
    if let Some(path) = tag.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)?;
        let members: Result<Vec<Structure>> = text
            .split("\n\n")
            .filter(|b| !b.trim().is_empty())
            .map(format::from_str_any)
            .collect();
        return Ok(Family::Explicit { name: format!("file:{path}"), members: members? });
    }
    Family::parse(tag)
}

fn parse_circle_family(tag: &str) -> Result<CircleFamily> {
    match tag {
        "s2" => Ok(CircleFamily::S2),
        "s2star" => Ok(CircleFamily::S2Star),
        "s3" => Ok(CircleFamily::S3),
        "s3star" => Ok(CircleFamily::S3Star),
        other => Err(Error::InvalidInput(format!("unknown circle family {other:?}"))),
    }
}

fn parse_angles(src: &str) -> Result<Vec<TurnAngle>> {
    src.split(',').map(|p| p.trim().parse()).collect()
}

fn parse_flow_point(variant: FlowVariant, src: &str) -> Result<FlowPoint> {
    let (base, label) = match src.split_once(':') {
        Some((b, l)) => {
            let label: u8 = l
                .trim()
                .parse()
                .map_err(|e| Error::InvalidInput(format!("bad label {l:?}: {e}")))?;
            (b.trim().parse()?, Some(label))
        }
        None => (src.trim().parse()?, None),
    };
    FlowPoint::new(variant, base, label)
}

fn emit(value: Value, text: String, exit_code: i32, json_mode: bool) -> Result<Outcome> {
    Ok(Outcome {
        text: if json_mode {
            serde_json::to_string_pretty(&value).expect("report serializes")
        } else {
            text
        },
        exit_code,
    })
}

fn run_age(cli: &Cli, cmd: &AgeCommand, json_mode: bool) -> Result<Outcome> {
    match cmd {
        AgeCommand::Generate { family, bound, out } => {
            let fam = parse_family(family)?;
            let rendered = cached_catalog_text(cli, &fam, *bound)?;
            if let Some(path) = out {
                std::fs::write(path, &rendered)?;
            }
            let cat = format::catalog_from_text(&rendered)?;
            let sizes: Vec<usize> = (1..=*bound).map(|k| cat.members_of_size(k).count()).collect();
            let value = json!({
                "request": {"command": "age generate", "family": family, "bound": bound},
                "result": {"classes": cat.len(), "by_size": sizes},
            });
            let text = if out.is_some() {
                format!("{} classes up to size {bound} (per size: {sizes:?})\n", cat.len())
            } else {
                rendered
            };
            emit(value, text, 0, json_mode)
        }
    }
}

/// Catalog files are cached by (family, bound, format version); a hit is
/// byte-identical to regeneration.
fn cached_catalog_text(cli: &Cli, family: &Family, bound: usize) -> Result<String> {
    let cache_dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from));
    let cache_path = cache_dir.as_ref().map(|dir| {
        dir.join(format!(
            "{}-b{}-v{}.catalog",
            family.name().replace(':', "_"),
            bound,
            format::CATALOG_FORMAT_VERSION
        ))
    });
    if let Some(path) = &cache_path {
        if path.exists() {
            let text = std::fs::read_to_string(path)?;
            let cat = format::catalog_from_text(&text)?;
            if cat.bound() == bound && cat.family_name() == family.name() {
                return Ok(text);
            }
            // stale or foreign content falls through to regeneration
        }
    }
    let cat = generate_age_threaded(family, bound, cli.threads)?;
    let text = format::catalog_to_text(&cat);
    if let Some(path) = &cache_path {
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(path, &text)?;
    }
    Ok(text)
}

/// Catalog generation, optionally fanned across a few worker threads.
/// Results are merged deterministically, so the thread count never shows
/// in the output.
pub fn generate_age_threaded(family: &Family, bound: usize, threads: usize) -> Result<AgeCatalog> {
    if threads <= 1 || bound < 2 {
        return generate_age(family, bound);
    }
    // Sizes are independent for the built-in families; farm them out.
    let sizes: Vec<usize> = (1..=bound).collect();
    let chunks: Vec<Vec<usize>> = sizes.chunks(bound.div_ceil(threads)).map(|c| c.to_vec()).collect();
    let results: Vec<Result<Vec<Structure>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                let fam = family.clone();
                let chunk = chunk.clone();
                scope.spawn(move || -> Result<Vec<Structure>> {
                    let mut out = Vec::new();
                    let top = *chunk.last().unwrap();
                    let cat = generate_age(&fam, top)?;
                    for &size in &chunk {
                        out.extend(cat.members_of_size(size).cloned());
                    }
                    Ok(out)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut members = Vec::new();
    for r in results {
        members.extend(r?);
    }
    AgeCatalog::from_members(family.name(), bound, members)
}

fn coloring_json(c: &crate::arrow::Coloring) -> Value {
    json!({
        "domain": c.domain.iter().map(|s| s.iter().copied().collect::<Vec<_>>()).collect::<Vec<_>>(),
        "values": c.values,
        "colors": c.colors,
    })
}

fn run_arrow(cmd: &ArrowCommand, json_mode: bool) -> Result<Outcome> {
    match cmd {
        ArrowCommand::Check { c, b, a, k, l, limits } => {
            let q = ArrowQuery::new(
                load_structure(c)?,
                load_structure(b)?,
                load_structure(a)?,
                *k,
                *l,
            )?;
            let cert = check_arrow(&q, &limits.limits())?;
            let value = json!({
                "request": {
                    "command": "arrow check",
                    "c": c.display().to_string(), "b": b.display().to_string(),
                    "a": a.display().to_string(), "k": k, "l": l,
                },
                "result": {
                    "holds": cert.holds,
                    "explored": cert.explored,
                    "pruned": cert.pruned,
                    "vacuous": cert.vacuous,
                    "bad_coloring": cert.bad_coloring.as_ref().map(coloring_json),
                },
            });
            let text = match &cert.bad_coloring {
                Some(bad) => format!(
                    "arrow fails: bad coloring over {} copies = {:?}\n",
                    bad.domain.len(),
                    bad.values
                ),
                None => "arrow holds\n".to_string(),
            };
            emit(value, text, 0, json_mode)
        }
        ArrowCommand::Search { catalog, b, a, k, l, max_size, limits } => {
            let cat = format::catalog_from_text(&std::fs::read_to_string(catalog)?)?;
            let outcome = search_arrow_witness(
                &cat,
                &load_structure(b)?,
                &load_structure(a)?,
                *k,
                *l,
                *max_size,
                &limits.limits(),
            )?;
            let (value, text, code) = match outcome {
                ArrowSearchOutcome::Witness { c, certificate } => (
                    json!({
                        "request": {"command": "arrow search", "k": k, "l": l, "max_size": max_size},
                        "result": {"witness": format::to_json_value(&c),
                                    "explored": certificate.explored},
                    }),
                    format!("witness of size {} found\n{}", c.size(), format::to_text(&c)),
                    0,
                ),
                ArrowSearchOutcome::NoneUpToBound { skipped } => (
                    json!({
                        "request": {"command": "arrow search", "k": k, "l": l, "max_size": max_size},
                        "result": {"witness": Value::Null,
                                    "skipped": skipped.iter().map(|(s, msg)| json!({
                                        "size": s.size(), "reason": msg,
                                    })).collect::<Vec<_>>()},
                    }),
                    format!("none-up-to-bound {max_size} ({} candidates skipped)\n", skipped.len()),
                    2,
                ),
            };
            emit(value, text, code, json_mode)
        }
    }
}

fn run_degree(cmd: &DegreeCommand, json_mode: bool) -> Result<Outcome> {
    match cmd {
        DegreeCommand::Report { pair, a, colors, b_bound, c_bound, pair_bound, limits } => {
            let target = load_structure(a)?;
            let p = named_pair(pair, (*pair_bound).max(target.size()))?;
            let report = ramsey_degree_report(
                &p,
                &target,
                &DegreeParams { colors: *colors, b_bound: *b_bound, c_bound: *c_bound },
                &limits.limits(),
            )?;
            let value = json!({
                "request": {
                    "command": "degree report", "pair": pair, "a": a.display().to_string(),
                    "colors": colors, "b_bound": b_bound, "c_bound": c_bound,
                    "pair_bound": pair_bound,
                },
                "result": {
                    "lower_bound": report.lower_bound,
                    "upper_bound": report.upper_bound,
                    "lower_witness": report.lower_witness.as_ref().map(format::to_json_value),
                    "instances": report.instances.len(),
                    "confirming_arrows": report.confirming_arrows.len(),
                },
            });
            let text = format!(
                "degree bracket [{}, {}] ({} coloring instances, {} confirming arrow runs)\n",
                report.lower_bound,
                report.upper_bound,
                report.instances.len(),
                report.confirming_arrows.len()
            );
            emit(value, text, 0, json_mode)
        }
    }
}

fn run_expand(cmd: &ExpandCommand, json_mode: bool) -> Result<Outcome> {
    match cmd {
        ExpandCommand::Count { pair, input, pair_bound } => {
            let a = load_structure(input)?;
            let p = named_pair(pair, (*pair_bound).max(a.size()))?;
            let count = list_expansions(&p, &a)?;
            let value = json!({
                "request": {"command": "expand count", "pair": pair,
                             "in": input.display().to_string(), "pair_bound": pair_bound},
                "result": {
                    "count": count.count,
                    "representatives": count.representatives.iter()
                        .map(format::to_json_value).collect::<Vec<_>>(),
                },
            });
            emit(value, format!("t = {}\n", count.count), 0, json_mode)
        }
        ExpandCommand::Ep { pair, target, bound, star, pair_bound } => {
            let t = load_structure(target)?;
            let p = named_pair(pair, (*pair_bound).max(*bound).max(t.size()))?;
            let outcome = if *star {
                ep_witness_for_expansion(&p, &t, *bound)?
            } else {
                check_expansion_property(&p, &t, *bound)?
            };
            let (value, text, code) = match outcome {
                EpOutcome::Witness { witness, pairs_checked } => (
                    json!({
                        "request": {"command": "expand ep", "pair": pair, "bound": bound, "star": star},
                        "result": {"witness": format::to_json_value(&witness),
                                    "pairs_checked": pairs_checked},
                    }),
                    format!("witness of size {}\n{}", witness.size(), format::to_text(&witness)),
                    0,
                ),
                EpOutcome::NoneUpToBound { refutations } => (
                    json!({
                        "request": {"command": "expand ep", "pair": pair, "bound": bound, "star": star},
                        "result": {"witness": Value::Null, "refutations": refutations.iter().map(|r| json!({
                            "candidate": format::to_json_value(&r.candidate),
                            "refuting_expansion": format::to_json_value(&r.refuting_expansion),
                            "unembedded": format::to_json_value(&r.unembedded),
                        })).collect::<Vec<_>>()},
                    }),
                    format!("none-up-to-bound {bound} ({} candidates refuted)\n", refutations.len()),
                    2,
                ),
            };
            emit(value, text, code, json_mode)
        }
        ExpandCommand::Transform { rule, input } => {
            let a = load_structure(input)?;
            let out = match rule.as_str() {
                "s2q2" => transform_s2star_q2(&a)?,
                "q2s2" => transform_q2_s2star(&a)?,
                "s3q3" => transform_s3star_q3(&a)?,
                "q3s3" => transform_q3_s3star(&a)?,
                _ => unreachable!("clap validates the rule"),
            };
            let value = json!({
                "request": {"command": "expand transform", "rule": rule,
                             "in": input.display().to_string()},
                "result": format::to_json_value(&out),
            });
            emit(value, format::to_text(&out), 0, json_mode)
        }
    }
}

fn run_circle(cmd: &CircleCommand, json_mode: bool) -> Result<Outcome> {
    match cmd {
        CircleCommand::Build { family, points } => {
            let fam = parse_circle_family(family)?;
            let placement = CirclePlacement::new(parse_angles(points)?)?;
            let s = fam.structure(&placement);
            let value = json!({
                "request": {"command": "circle build", "family": family, "points": points},
                "result": {
                    "points": placement.points().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "structure": format::to_json_value(&s),
                },
            });
            emit(value, format::to_text(&s), 0, json_mode)
        }
        CircleCommand::Realize { family, input, limit } => {
            let fam = parse_circle_family(family)?;
            let a = load_structure(input)?;
            let placement = realize(fam, &a, *limit)?;
            let value = json!({
                "request": {"command": "circle realize", "family": family,
                             "in": input.display().to_string(), "limit": limit},
                "result": {
                    "realizable": placement.is_some(),
                    "points": placement.as_ref().map(|p| {
                        p.points().iter().map(|t| t.to_string()).collect::<Vec<_>>()
                    }),
                },
            });
            let text = match &placement {
                Some(p) => format!(
                    "realizable at {}\n",
                    p.points().iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", ")
                ),
                None => "not realizable\n".to_string(),
            };
            emit(value, text, 0, json_mode)
        }
    }
}

fn run_flow(cmd: &FlowCommand, json_mode: bool) -> Result<Outcome> {
    match cmd {
        FlowCommand::Code { variant, point, family } => {
            let var = if variant == "hat" { FlowVariant::Hat } else { FlowVariant::Tilde };
            let t = parse_flow_point(var, point)?;
            let f = CirclePlacement::new(parse_angles(family)?)?;
            let trace = match var {
                FlowVariant::Hat => partition_from_flowpoint(&t, &f)?,
                FlowVariant::Tilde => partition_from_flowpoint_s3(&t, &f)?,
            };
            let parts: Vec<Vec<String>> = (0..var.parts())
                .map(|j| {
                    f.points()
                        .iter()
                        .zip(&trace.parts)
                        .filter(|(_, &p)| p == j)
                        .map(|(x, _)| x.to_string())
                        .collect()
                })
                .collect();
            let value = json!({
                "request": {"command": "flow code", "variant": variant, "point": point, "F": family},
                "result": {"parts": parts},
            });
            let mut text = String::new();
            for (j, part) in parts.iter().enumerate() {
                text.push_str(&format!("part {j}: {}\n", part.join(", ")));
            }
            emit(value, text, 0, json_mode)
        }
        FlowCommand::Interval { variant: _, point, family } => {
            let t = parse_flow_point(FlowVariant::Hat, point)?;
            let f = CirclePlacement::new(parse_angles(family)?)?;
            let iv = interval_from_basic_open(&f, &t)?;
            let value = json!({
                "request": {"command": "flow interval", "variant": "hat", "point": point, "F": family},
                "result": {"start": iv.start().to_string(), "end": iv.end().to_string()},
            });
            emit(value, format!("[{}, {}]\n", iv.start(), iv.end()), 0, json_mode)
        }
    }
}

fn run_experiment_cmd(name: &str, seed: u64, json_mode: bool) -> Result<Outcome> {
    let reports = run_experiment(name, seed)?;
    let all_pass = reports.iter().all(|r| r.pass);
    let value = json!({
        "request": {"command": "experiment", "name": name, "seed": seed},
        "result": reports,
    });
    let mut text = String::new();
    for r in &reports {
        text.push_str(&r.line());
        text.push('\n');
    }
    emit(value, text, if all_pass { 0 } else { 1 }, json_mode)
}

/// Entry point for the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage output
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
