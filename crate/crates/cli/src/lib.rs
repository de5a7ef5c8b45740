//! `numbergate` command line: values, pair classification and closure checks
//! as deterministic JSON or text reports.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use numbergate::properties::{
    check_closure, check_game_closure, classify_all_pairs, confirm_con, confirm_con_games,
    default_x_set, hcr_closure, number_avoidance_probe, CheckOptions, ClosureLimits, ClosureReport,
    ConProbe, ConVerdict, F1Witness, PairClassification,
};
use numbergate::rulesets::{PositionGames, Ruleset};
use numbergate::{with_ruleset, DyadicRational, Engine, Error, GameId, Limits};
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: &str = "numbergate/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "numbergate", version, about = "Values and number criteria for short partizan games")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Cap on positions in a closure.
    #[arg(long, global = true, default_value_t = ClosureLimits::default().max_positions)]
    max_positions: usize,

    /// Cap on interned game forms.
    #[arg(long, global = true, default_value_t = Limits::default().max_arena)]
    max_arena: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number value (if any), outcome class and canonical form.
    Value(Target),
    /// Canonical form.
    Canonical(Target),
    /// Outcome class.
    Outcome(Target),
    /// Disjunctive sum of several game literals.
    Sum {
        /// A game literal; repeat for each summand.
        #[arg(long = "game", required = true, allow_hyphen_values = true)]
        games: Vec<String>,
    },
    /// F1/F2 classification of every option pair of one position.
    ClassifyPairs(Target),
    /// Every closure-wide check on the closure of the given positions.
    ClosureCheck(ClosureArgs),
    /// Searches for numbers x with G + x in N over a closure.
    ConfirmCon(ClosureArgs),
    /// Whoever wins `number + game` moving first has a winning move in `game`.
    AvoidanceProbe {
        /// A game literal equal to a number.
        #[arg(long, allow_hyphen_values = true)]
        number: String,
        /// A game literal that is not a number.
        #[arg(long, allow_hyphen_values = true)]
        game: String,
    },
}

#[derive(Args, Debug)]
struct Target {
    /// A game literal such as `{0,*|*}`.
    #[arg(long, conflicts_with_all = ["ruleset", "seed"], required_unless_present = "ruleset", allow_hyphen_values = true)]
    game: Option<String>,
    /// Ruleset name.
    #[arg(long, requires = "seed")]
    ruleset: Option<String>,
    /// Position text in the ruleset's grammar.
    #[arg(long, requires = "ruleset")]
    seed: Option<String>,
}

#[derive(Args, Debug)]
struct ClosureArgs {
    /// Ruleset name; positions come from `--seed`.
    #[arg(long, conflicts_with = "game", required_unless_present = "game")]
    ruleset: Option<String>,
    /// Position text; repeat for several seeds.
    #[arg(long, requires = "ruleset")]
    seed: Vec<String>,
    /// Game literal root; repeat for several roots.
    #[arg(long, allow_hyphen_values = true)]
    game: Vec<String>,
    /// Numbers to add, comma separated (default: the fifteen born by day 3).
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Write the closure's positions, one per line, to this file.
    #[arg(long)]
    emit_positions: Option<PathBuf>,
    /// Leave the per-position value table out of the report.
    #[arg(long)]
    omit_values: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Violated,
    BudgetExceeded,
    ParseError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => EXIT_OK,
            Status::Violated => EXIT_VIOLATED,
            Status::BudgetExceeded => EXIT_BUDGET,
            Status::ParseError => EXIT_PARSE,
        }
    }
}

/// Why a report is `violated`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// A check that must always hold failed: an engine bug.
    Theorem,
    /// A probe found the non-number behaviour it looks for.
    Probe,
}

#[derive(Serialize)]
struct Echo<'a> {
    name: &'a str,
    argv: &'a [String],
}

#[derive(Serialize)]
struct Config {
    max_positions: usize,
    max_arena: usize,
    x_set: Vec<DyadicRational>,
}

#[derive(Serialize)]
struct ErrorReport {
    kind: &'static str,
    message: String,
}

#[derive(Serialize)]
struct Report<'a> {
    schema: &'static str,
    command: Echo<'a>,
    config: Option<Config>,
    status: Status,
    kind: Option<Kind>,
    result: Option<Value>,
    error: Option<ErrorReport>,
}

struct Outcome {
    status: Status,
    kind: Option<Kind>,
    result: Value,
}

impl Outcome {
    fn ok(result: Value) -> Self {
        Outcome {
            status: Status::Ok,
            kind: None,
            result,
        }
    }

    fn violated(kind: Kind, result: Value) -> Self {
        Outcome {
            status: Status::Violated,
            kind: Some(kind),
            result,
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::UnknownGame(_) => "unknown-game",
        Error::Syntax { .. } => "syntax",
        Error::MalformedDyadic(_) => "malformed-dyadic",
        Error::Position { .. } => "position",
        Error::UnknownRuleset(_) => "unknown-ruleset",
        Error::ArenaBudget { .. } => "arena-budget",
        Error::DepthBudget { .. } => "depth-budget",
        Error::ClosureBudget { .. } => "closure-budget",
        Error::Overflow => "overflow",
        Error::Domain(_) => "domain",
    }
}

fn error_status(e: &Error) -> Status {
    if e.is_input() {
        Status::ParseError
    } else {
        Status::BudgetExceeded
    }
}

fn parse_x_set(text: &str) -> Result<Vec<DyadicRational>, Error> {
    text.split(',').map(|s| s.trim().parse()).collect()
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// Literal forms of the target plus a printable label per form.
struct Resolved {
    game: GameId,
    label: String,
}

fn resolve(engine: &mut Engine, t: &Target) -> Result<Resolved, Error> {
    match (&t.game, &t.ruleset, &t.seed) {
        (Some(text), _, _) => {
            let game = engine.parse_game(text)?;
            Ok(Resolved {
                game,
                label: engine.render(game),
            })
        }
        (None, Some(name), Some(seed)) => with_ruleset!(name.as_str(), r => {
            let p = r.parse_position(seed)?;
            let label = r.render_position(&p);
            let game = PositionGames::new(r).to_game(engine, &p)?;
            Resolved { game, label }
        }),
        _ => Err(Error::Domain("give --game or --ruleset with --seed".into())),
    }
}

fn value_fields(engine: &mut Engine, g: GameId) -> Result<Value, Error> {
    let value = engine.to_number(g)?;
    let canonical = engine.canonical_form(g)?;
    Ok(json!({
        "value": value.map(|d| d.to_string()),
        "outcome": engine.outcome(g).to_string(),
        "canonical": engine.render_form(canonical),
    }))
}

/// Labels of the children of a ruleset position by literal form.
fn child_labels<R: Ruleset>(
    engine: &mut Engine,
    r: R,
    seed: &str,
) -> Result<(GameId, String, HashMap<GameId, String>), Error> {
    let p = r.parse_position(seed)?;
    let label = r.render_position(&p);
    let mut games = PositionGames::new(r);
    let g = games.to_game(engine, &p)?;
    let mut labels = HashMap::new();
    let r = games.ruleset();
    let mut grand = Vec::new();
    for q in r.left_moves(&p).into_iter().chain(r.right_moves(&p)) {
        grand.extend(r.left_moves(&q));
        grand.extend(r.right_moves(&q));
        grand.push(q);
    }
    let named: Vec<(String, _)> = grand.into_iter().map(|q| (r.render_position(&q), q)).collect();
    for (name, q) in named {
        let id = games.to_game(engine, &q)?;
        labels.entry(id).or_insert(name);
    }
    Ok((g, label, labels))
}

fn pair_json(
    engine: &Engine,
    p: &PairClassification,
    labels: &HashMap<GameId, String>,
) -> Value {
    let name = |g: GameId| labels.get(&g).cloned().unwrap_or_else(|| engine.render(g));
    json!({
        "left_option": name(p.left_option),
        "right_option": name(p.right_option),
        "class": p.class(),
        "f1": p.f1,
        "f1_strict": p.f1_strict,
        "f1_witness": p.f1_witness.map(|w| match w {
            F1Witness::RightLeft(g) => json!({"side": "RL", "option": name(g)}),
            F1Witness::LeftRight(g) => json!({"side": "LR", "option": name(g)}),
        }),
        "f2": p.f2,
        "f2_witness": p.f2_witness.map(|(a, b)| json!([name(a), name(b)])),
    })
}

fn classify(engine: &mut Engine, t: &Target) -> Result<Outcome, Error> {
    let (g, label, labels) = match (&t.game, &t.ruleset, &t.seed) {
        (None, Some(name), Some(seed)) => {
            with_ruleset!(name.as_str(), r => child_labels(engine, r, seed)?)?
        }
        _ => {
            let r = resolve(engine, t)?;
            (r.game, r.label, HashMap::new())
        }
    };
    let pairs = classify_all_pairs(engine, g)?;
    let list: Vec<Value> = pairs.iter().map(|p| pair_json(engine, p, &labels)).collect();
    let mut result = value_fields(engine, g)?;
    result["position"] = json!(label);
    result["pairs"] = json!(list);
    Ok(Outcome::ok(result))
}

fn write_positions(path: &PathBuf, labels: &[String]) -> Result<(), Error> {
    let mut text = String::with_capacity(labels.iter().map(|l| l.len() + 1).sum());
    for l in labels {
        text.push_str(l);
        text.push('\n');
    }
    std::fs::write(path, text).map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))
}

fn closure_check(
    engine: &mut Engine,
    a: &ClosureArgs,
    limits: ClosureLimits,
    x_set: Vec<DyadicRational>,
) -> Result<Outcome, Error> {
    let options = CheckOptions {
        x_set,
        include_values: !a.omit_values || a.emit_positions.is_some(),
        ..CheckOptions::default()
    };
    let mut report: ClosureReport = match &a.ruleset {
        Some(name) => with_ruleset!(name.as_str(), r => {
            let seeds = a.seed.iter().map(|s| r.parse_position(s)).collect::<Result<Vec<_>, _>>()?;
            if seeds.is_empty() {
                return Err(Error::Domain("closure-check needs at least one --seed".into()));
            }
            check_closure(engine, &r, &seeds, limits, &options)?
        })?,
        None => {
            let roots = a.game.iter().map(|s| engine.parse_game(s)).collect::<Result<Vec<_>, _>>()?;
            check_game_closure(engine, &roots, limits, &options)?
        }
    };
    if let Some(path) = &a.emit_positions {
        let labels: Vec<String> = report.values.keys().cloned().collect();
        write_positions(path, &labels)?;
        if a.omit_values {
            report.values.clear();
        }
    }
    let result = to_json(&report);
    Ok(if !report.consistent() {
        Outcome::violated(Kind::Theorem, result)
    } else if report.found_probe_witness() {
        Outcome::violated(Kind::Probe, result)
    } else {
        Outcome::ok(result)
    })
}

fn con_outcome(probe: ConProbe, position_count: Option<usize>) -> Outcome {
    let mut result = to_json(&probe);
    if let Some(n) = position_count {
        result["position_count"] = json!(n);
    }
    match probe.verdict {
        ConVerdict::NoNSum | ConVerdict::NoWitnessInSearchedSet => Outcome::ok(result),
        ConVerdict::WitnessFound => Outcome::violated(Kind::Probe, result),
        ConVerdict::ForwardViolation => Outcome::violated(Kind::Theorem, result),
    }
}

fn confirm(
    engine: &mut Engine,
    a: &ClosureArgs,
    limits: ClosureLimits,
    x_set: &[DyadicRational],
) -> Result<Outcome, Error> {
    match &a.ruleset {
        Some(name) => with_ruleset!(name.as_str(), r => {
            let seeds = a.seed.iter().map(|s| r.parse_position(s)).collect::<Result<Vec<_>, _>>()?;
            if seeds.is_empty() {
                return Err(Error::Domain("confirm-con needs at least one --seed".into()));
            }
            if let Some(path) = &a.emit_positions {
                let all = hcr_closure(&r, &seeds, limits)?;
                let labels: Vec<String> = all.iter().map(|p| r.render_position(p)).collect();
                write_positions(path, &labels)?;
            }
            con_outcome(confirm_con(engine, &r, &seeds, limits, x_set)?, None)
        }),
        None => {
            let roots = a.game.iter().map(|s| engine.parse_game(s)).collect::<Result<Vec<_>, _>>()?;
            Ok(con_outcome(confirm_con_games(engine, &roots, limits, x_set)?, None))
        }
    }
}

fn execute(cli: &Cli, engine: &mut Engine, x_set: &[DyadicRational]) -> Result<Outcome, Error> {
    let limits = ClosureLimits {
        max_positions: cli.max_positions,
    };
    match &cli.command {
        Command::Value(t) => {
            let r = resolve(engine, t)?;
            let mut v = value_fields(engine, r.game)?;
            v["position"] = json!(r.label);
            Ok(Outcome::ok(v))
        }
        Command::Canonical(t) => {
            let r = resolve(engine, t)?;
            let c = engine.canonical_form(r.game)?;
            Ok(Outcome::ok(json!({
                "position": r.label,
                "canonical": engine.render_form(c),
                "birthday": engine.birthday(c),
            })))
        }
        Command::Outcome(t) => {
            let r = resolve(engine, t)?;
            Ok(Outcome::ok(json!({
                "position": r.label,
                "outcome": engine.outcome(r.game).to_string(),
            })))
        }
        Command::Sum { games } => {
            let mut total = GameId::ZERO;
            let mut rendered = Vec::new();
            for text in games {
                let g = engine.parse_game(text)?;
                rendered.push(engine.render(g));
                total = engine.sum(total, g)?;
            }
            let mut v = value_fields(engine, total)?;
            v["summands"] = json!(rendered);
            Ok(Outcome::ok(v))
        }
        Command::ClassifyPairs(t) => classify(engine, t),
        Command::ClosureCheck(a) => closure_check(engine, a, limits, x_set.to_vec()),
        Command::ConfirmCon(a) => confirm(engine, a, limits, x_set),
        Command::AvoidanceProbe { number, game } => {
            let n = engine.parse_game(number)?;
            let h = engine.parse_game(game)?;
            let v = number_avoidance_probe(engine, n, h)?;
            let name = |g: Option<GameId>| g.map(|g| engine.render(g));
            let result = json!({
                "number": engine.render(n),
                "game": engine.render(h),
                "left_first_wins": v.left_first_wins,
                "left_witness": name(v.left_witness),
                "right_first_wins": v.right_first_wins,
                "right_witness": name(v.right_witness),
                "passed": v.passed,
            });
            Ok(if v.passed {
                Outcome::ok(result)
            } else {
                Outcome::violated(Kind::Theorem, result)
            })
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Value(_) => "value",
        Command::Canonical(_) => "canonical",
        Command::Outcome(_) => "outcome",
        Command::Sum { .. } => "sum",
        Command::ClassifyPairs(_) => "classify-pairs",
        Command::ClosureCheck(_) => "closure-check",
        Command::ConfirmCon(_) => "confirm-con",
        Command::AvoidanceProbe { .. } => "avoidance-probe",
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    writeln!(out, "command: {}", report.command.name).unwrap();
    write!(out, "status: {}", to_json(&report.status).as_str().unwrap()).unwrap();
    if let Some(k) = report.kind {
        write!(out, " ({})", to_json(&k).as_str().unwrap()).unwrap();
    }
    out.push('\n');
    if let Some(e) = &report.error {
        writeln!(out, "error: {}: {}", e.kind, e.message).unwrap();
    }
    if let Some(r) = &report.result {
        flatten(&mut out, "", r);
    }
    out
}

fn flatten(out: &mut String, prefix: &str, v: &Value) {
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(out, &key, v);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(out, &format!("{prefix}[{i}]"), v);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            writeln!(out, "{prefix}: [{}]", parts.join(", ")).unwrap();
        }
        _ => writeln!(out, "{prefix}: {}", scalar(v)).unwrap(),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Runs one invocation. `argv` excludes the program name. Returns the exit
/// code and the full standard-output text.
pub fn run<S: AsRef<str>>(argv: &[S]) -> (i32, String) {
    let argv: Vec<String> = argv.iter().map(|s| s.as_ref().to_string()).collect();
    let cli = match Cli::try_parse_from(std::iter::once("numbergate".to_string()).chain(argv.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand) {
                let code = if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand { EXIT_PARSE } else { EXIT_OK };
                return (code, e.render().to_string());
            }
            let report = Report {
                schema: SCHEMA,
                command: Echo { name: "", argv: &argv },
                config: None,
                status: Status::ParseError,
                kind: None,
                result: None,
                error: Some(ErrorReport {
                    kind: "usage",
                    message: e.render().to_string().trim_end().to_string(),
                }),
            };
            let text = if argv.windows(2).any(|w| w[0] == "--format" && w[1] == "text") {
                render_text(&report)
            } else {
                serde_json::to_string_pretty(&report).unwrap() + "\n"
            };
            return (EXIT_PARSE, text);
        }
    };

    let mut engine = Engine::with_limits(Limits {
        max_arena: cli.max_arena,
        ..Limits::default()
    });
    let x_set = match &cli.command {
        Command::ClosureCheck(a) | Command::ConfirmCon(a) => a.x.as_deref().map(parse_x_set),
        _ => None,
    };
    let outcome = match x_set.unwrap_or_else(|| Ok(default_x_set())) {
        Ok(xs) => {
            let r = execute(&cli, &mut engine, &xs);
            (xs, r)
        }
        Err(e) => (Vec::new(), Err(e)),
    };
    let (x_set, result) = outcome;
    let config = Config {
        max_positions: cli.max_positions,
        max_arena: cli.max_arena,
        x_set,
    };
    let command = Echo {
        name: command_name(&cli.command),
        argv: &argv,
    };
    let report = match result {
        Ok(o) => Report {
            schema: SCHEMA,
            command,
            config: Some(config),
            status: o.status,
            kind: o.kind,
            result: Some(o.result),
            error: None,
        },
        Err(e) => Report {
            schema: SCHEMA,
            command,
            config: Some(config),
            status: error_status(&e),
            kind: None,
            result: None,
            error: Some(ErrorReport {
                kind: error_kind(&e),
                message: e.to_string(),
            }),
        },
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
        Format::Text => render_text(&report),
    };
    (report.status.exit_code(), text)
}
