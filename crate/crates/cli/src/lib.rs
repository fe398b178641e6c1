//! The `casson` command line tool.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use casson_core::alexander::{alexander_link, half_ddelta1, zeta};
use casson_core::casson::{
    delta_from_leaves, delta_multi, delta_single, fti_bracket, mazur_family, pairwise_correction, rochlin_delta,
    BorromeanConfig, CrossLinkMatrix, CrossMatrices, DeltaReport,
};
use casson_core::diagram::{seifert_matrix, Diagram, LeafTriple, PdDocument};
use casson_core::json::to_value;
use casson_core::milnor::mu123_of_leaves;
use casson_core::verify::{verify_all, Mode};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "casson", version, about = "Casson invariant variation under Borromean surgery")]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Variation for one surgery, from leaf data or a leaf diagram.
    Delta {
        /// Configuration JSON, inline or a file path.
        #[arg(long, conflicts_with = "diagram", required_unless_present = "diagram")]
        config: Option<String>,
        /// PD-code JSON file of the three leaves.
        #[arg(long)]
        diagram: Option<PathBuf>,
        /// Framings f1,f2,f3 imposed on the leaves by adding curls.
        #[arg(long, requires = "diagram", value_delimiter = ',', allow_hyphen_values = true)]
        framings: Option<Vec<i64>>,
        /// Include the recursion steps.
        #[arg(long)]
        trace: bool,
    },
    /// Variation for several disjoint surgeries.
    DeltaMulti {
        /// `{"configs": [...], "cross": {"k,l": [[...]]}}`, inline or a file path.
        #[arg(long)]
        config: String,
    },
    /// Exhaustive grid and seeded property sweeps.
    Verify {
        #[arg(long, default_value_t = 3, allow_hyphen_values = true)]
        grid: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Invariants of a diagram.
    Invariants {
        #[arg(long)]
        diagram: PathBuf,
    },
    /// The surgery family with triple linking number n.
    Mazur {
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
}

/// What a run writes and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli.command) {
        Ok((ok, report)) => Outcome {
            code: if ok { EXIT_OK } else { EXIT_PROPERTY },
            stdout: render(&report, cli.format),
            stderr: String::new(),
        },
        Err(e) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e:#}\n") },
    }
}

fn render(report: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(report).unwrap()),
        Format::Text => {
            let mut out = String::new();
            if let Value::Object(map) = report {
                for (k, v) in map {
                    match v {
                        Value::String(s) => out.push_str(&format!("{k}: {s}\n")),
                        _ => out.push_str(&format!("{k}: {v}\n")),
                    }
                }
            }
            out
        }
    }
}

fn with_schema(command: &str, value: Value) -> Value {
    let mut map = Map::new();
    map.insert("schema_version".into(), SCHEMA_VERSION.into());
    map.insert("command".into(), command.into());
    if let Value::Object(fields) = value {
        map.extend(fields);
    }
    Value::Object(map)
}

/// Inline JSON when it starts with `{`, otherwise a file to read.
fn read_json_arg(arg: &str) -> Result<String> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
    }
}

fn read_document(path: &Path) -> Result<(PdDocument, Diagram)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let doc = PdDocument::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    let d = doc.to_diagram().with_context(|| format!("diagram in {}", path.display()))?;
    Ok((doc, d))
}

fn leaves_of(doc: &PdDocument) -> Result<[usize; 3]> {
    match &doc.leaves {
        None => Ok([0, 1, 2]),
        Some(l) => <[usize; 3]>::try_from(l.as_slice()).map_err(|_| anyhow!("leaves must list three components")),
    }
}

fn execute(command: &Command) -> Result<(bool, Value)> {
    match command {
        Command::Delta { config, diagram, framings, trace } => {
            let report = match (config, diagram) {
                (Some(c), _) => {
                    let text = read_json_arg(c)?;
                    let c: BorromeanConfig = serde_json::from_str(&text).context("configuration JSON")?;
                    DeltaReport::new(c)
                }
                (None, Some(path)) => {
                    let (doc, mut d) = read_document(path)?;
                    let leaves = leaves_of(&doc)?;
                    if let Some(f) = framings {
                        if f.len() != 3 {
                            bail!("--framings takes three values, got {}", f.len());
                        }
                        for (k, &target) in f.iter().enumerate() {
                            d = d.with_framing(leaves[k], target)?;
                        }
                    }
                    delta_from_leaves(&LeafTriple::new(d, leaves)?)?
                }
                (None, None) => bail!("one of --config or --diagram is required"),
            };
            let ok = report.routes_agree();
            let mut value = serde_json::to_value(&report)?;
            value["value"] = to_value(&report.closed_form);
            value["routes_agree"] = ok.into();
            if !trace && ok {
                value.as_object_mut().unwrap().remove("trace");
            }
            Ok((ok, with_schema("delta", value)))
        }
        Command::DeltaMulti { config } => {
            let input = MultiInput::parse(&read_json_arg(config)?)?;
            let value = delta_multi(&input.configs, &input.cross)?;
            let singles: Vec<Value> = input.configs.iter().map(|c| to_value(&delta_single(c))).collect();
            let corrections: Map<String, Value> = input
                .cross
                .iter()
                .map(|(&(k, l), m)| (format!("{k},{l}"), to_value(&pairwise_correction(m))))
                .collect();
            let mut report = json!({
                "value": to_value(&value),
                "singles": singles,
                "pairwise": corrections,
                "mod2": rochlin_delta(&input.configs),
            });
            let mut ok = true;
            if input.configs.len() >= 3 {
                let bracket = fti_bracket(&0.into(), &input.configs, &input.cross)?;
                ok = bracket == 0.into();
                report["fti_bracket"] = to_value(&bracket);
            }
            Ok((ok, with_schema("delta-multi", report)))
        }
        Command::Verify { grid, seed, sequential } => {
            if *grid < 0 {
                bail!("--grid must be non-negative, got {grid}");
            }
            let mode = if *sequential { Mode::Sequential } else { Mode::Parallel };
            let report = verify_all(*grid, *seed, mode);
            let ok = report.passed();
            let mut value = serde_json::to_value(&report)?;
            value["passed"] = ok.into();
            Ok((ok, with_schema("verify", value)))
        }
        Command::Invariants { diagram } => {
            let (doc, d) = read_document(diagram)?;
            Ok((true, with_schema("invariants", invariants(&doc, &d)?)))
        }
        Command::Mazur { n } => {
            let m = mazur_family(*n);
            let report = DeltaReport::new(m.config);
            let ok = report.routes_agree() && report.closed_form == m.expected;
            let mut value = serde_json::to_value(&m)?;
            value["lambda"] = to_value(&report.closed_form);
            value["routes_agree"] = report.routes_agree().into();
            Ok((ok, with_schema("mazur", value)))
        }
    }
}

fn invariants(doc: &PdDocument, d: &Diagram) -> Result<Value> {
    let n = d.num_components();
    let mut v = json!({
        "name": doc.name,
        "components": n,
        "crossings": d.num_crossings(),
        "writhe": d.writhe(),
        "framings": d.framings(),
        "linking_matrix": d.linking_matrix(),
        "alexander": alexander_link(d)?.to_string(),
    });
    if n == 1 {
        v["seifert_matrix"] = json!(seifert_matrix(d)?);
        v["half_ddelta1"] = half_ddelta1(d)?.into();
    } else {
        v["zeta"] = zeta(d)?.into();
    }
    if n == 3 {
        let leaves = LeafTriple::new(d.clone(), leaves_of(doc)?)?;
        v["mu123"] = mu123_of_leaves(&leaves)?.into();
    }
    Ok(v)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMulti {
    configs: Vec<BorromeanConfig>,
    #[serde(default)]
    cross: std::collections::BTreeMap<String, CrossLinkMatrix>,
}

/// Multi-surgery input; cross keys are `"k,l"` with 0-based `k < l`.
pub struct MultiInput {
    pub configs: Vec<BorromeanConfig>,
    pub cross: CrossMatrices,
}

impl MultiInput {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawMulti = serde_json::from_str(text).context("multi-surgery JSON")?;
        let mut cross = CrossMatrices::new();
        for (key, m) in raw.cross {
            let parsed = key
                .split_once(',')
                .and_then(|(k, l)| Some((k.trim().parse::<usize>().ok()?, l.trim().parse::<usize>().ok()?)));
            let Some((k, l)) = parsed else {
                bail!("cross key {key:?} is not of the form \"k,l\"");
            };
            if cross.insert((k, l), m).is_some() {
                bail!("cross key {key:?} given twice");
            }
        }
        Ok(MultiInput { configs: raw.configs, cross })
    }
}
