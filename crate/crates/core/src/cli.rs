//! Command-line front end. [`run`] parses arguments and returns the exit
//! code with everything that would be written, so tests can drive it
//! without spawning a process.
//!
//! Exit codes: 0 success, 1 a check failed or the answer is negative,
//! 2 bad arguments, 3 malformed poset file.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::fraction_string;
use crate::harness::{self, Report, Status, SuiteOptions};
use crate::poset::{parse_poset, Antichain, Orbit, Poset};
use crate::root_system::{
    parse_type_name, CartanType, Convention, PosetVariant, RootPoset, RootSystem,
};
use crate::type_a::TypeA;

#[derive(Debug, Parser)]
#[command(
    name = "rowmotion",
    version,
    about = "Rowmotion orbits on antichains of root posets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OyForm {
    #[default]
    Ideal,
    Difference,
    Both,
}

#[derive(Debug, clap::Args)]
pub struct PosetArgs {
    /// Root system such as `F4` or `A3`.
    #[arg(value_name = "TYPE", required_unless_present = "custom")]
    pub system: Option<String>,
    /// Which root subset to order: full, no-simple, short, short-no-simple,
    /// height-geq-J, parabolic-1,2,...
    #[arg(long, default_value = "full")]
    pub variant: String,
    /// Read the poset from a file (`lower < upper` per line) instead.
    #[arg(long, conflicts_with = "system")]
    pub custom: Option<PathBuf>,
    /// Root notation: bourbaki, paper-f4 or interval-a. Type A defaults to
    /// `i-j` intervals, other types to bourbaki.
    #[arg(long)]
    pub convention: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orbit table: size, mean antichain size and representative per orbit.
    Orbits {
        #[command(flatten)]
        poset: PosetArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run registered checks and print their reports.
    Verify {
        /// Claim identifier; see `--list`.
        #[arg(long, conflicts_with = "all", required_unless_present_any = ["all", "list"])]
        claim: Option<String>,
        /// Every claim over its default scope.
        #[arg(long)]
        all: bool,
        /// Print the claim identifiers.
        #[arg(long)]
        list: bool,
        /// Restrict the claim to one root system, e.g. `F4` or `C3`.
        #[arg(long = "type", value_name = "TYPE")]
        system: Option<String>,
        /// Also run E7 and E8.
        #[arg(long)]
        include_large: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The OY-invariant of a type-A antichain.
    Oy {
        /// Rank `n` of `A_n`.
        rank: usize,
        /// Comma-separated roots `i-j`; empty for the empty antichain.
        antichain: String,
        #[arg(long, value_enum, default_value_t)]
        form: OyForm,
    },
    /// The dual antichain `Γ*` in type A.
    Star {
        /// Rank `n` or a type-A name such as `A3`.
        system: String,
        antichain: String,
    },
    /// Apply rowmotion `k` times (negative `k` for the inverse).
    Rowmotion {
        #[command(flatten)]
        poset: PosetArgs,
        /// Comma-separated roots or element labels.
        #[arg(value_name = "ANTICHAIN")]
        antichain: Option<String>,
        /// Start from the empty antichain.
        #[arg(long, conflicts_with = "antichain")]
        empty: bool,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        power: i64,
    },
    /// Count or list antichains.
    Antichains {
        #[command(flatten)]
        poset: PosetArgs,
        /// List every antichain instead of only counting.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decide whether two posets are isomorphic. Each poset is a root poset
    /// such as `C3/short` or a path to a poset file.
    Isomorphic { first: String, second: String },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn file_format(message: impl Into<String>) -> Failure {
    Failure {
        code: 3,
        message: message.into(),
    }
}

type CmdResult = Result<(i32, String), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(cli.command) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn execute(command: Command) -> CmdResult {
    match command {
        Command::Orbits { poset, format } => cmd_orbits(&poset, format),
        Command::Verify {
            claim,
            all,
            list,
            system,
            include_large,
            format,
        } => cmd_verify(claim, all, list, system, include_large, format),
        Command::Oy {
            rank,
            antichain,
            form,
        } => cmd_oy(rank, &antichain, form),
        Command::Star { system, antichain } => cmd_star(&system, &antichain),
        Command::Rowmotion {
            poset,
            antichain,
            empty,
            power,
        } => cmd_rowmotion(&poset, antichain.as_deref(), empty, power),
        Command::Antichains {
            poset,
            list,
            format,
        } => cmd_antichains(&poset, list, format),
        Command::Isomorphic { first, second } => cmd_isomorphic(&first, &second),
    }
}

/// A poset selected on the command line, with its root notation.
enum Target {
    Root {
        rp: Box<RootPoset>,
        convention: Option<Convention>,
        type_a: bool,
    },
    Custom {
        name: String,
        poset: Poset,
    },
}

impl Target {
    fn poset(&self) -> &Poset {
        match self {
            Target::Root { rp, .. } => rp.poset(),
            Target::Custom { poset, .. } => poset,
        }
    }

    fn name(&self) -> String {
        match self {
            Target::Root { rp, .. } => rp.name(),
            Target::Custom { name, .. } => name.clone(),
        }
    }

    fn intervals(&self) -> bool {
        matches!(
            self,
            Target::Root {
                type_a: true,
                convention: None | Some(Convention::IntervalA),
                ..
            }
        )
    }

    fn format_element(&self, x: usize) -> String {
        match self {
            Target::Custom { poset, .. } => poset.label(x).to_string(),
            Target::Root { rp, convention, .. } => {
                let c = rp.coefficients(x);
                if self.intervals() {
                    let i = c.iter().position(|&v| v != 0).unwrap_or(0) + 1;
                    let j = c.iter().rposition(|&v| v != 0).unwrap_or(0) + 1;
                    format!("{i}-{j}")
                } else {
                    let conv = convention.unwrap_or_default();
                    rp.print_element(x, conv)
                        .expect("convention checked on load")
                }
            }
        }
    }

    /// Printed members, sorted by `(i, j)` for intervals and as strings
    /// otherwise.
    fn items(&self, a: &Antichain) -> Vec<String> {
        let mut keyed: Vec<((usize, usize), String)> = a
            .iter()
            .map(|x| {
                let text = self.format_element(x);
                let key = text
                    .split_once('-')
                    .and_then(|(i, j)| Some((i.parse().ok()?, j.parse().ok()?)))
                    .filter(|_| self.intervals())
                    .unwrap_or((0, 0));
                (key, text)
            })
            .collect();
        keyed.sort();
        keyed.into_iter().map(|(_, t)| t).collect()
    }

    fn format(&self, a: &Antichain) -> String {
        if a.is_empty() {
            "{}".to_string()
        } else {
            self.items(a).join(",")
        }
    }

    fn parse(&self, spec: &str) -> Result<Antichain, Failure> {
        let items = split_items(spec);
        match self {
            Target::Custom { poset, .. } => poset
                .antichain_from_labels(&items)
                .map_err(|e| usage(e.to_string())),
            Target::Root { rp, convention, .. } => {
                let conv = if self.intervals() {
                    Convention::IntervalA
                } else {
                    convention.unwrap_or_default()
                };
                rp.parse_antichain(&items, conv)
                    .map_err(|e| usage(e.to_string()))
            }
        }
    }
}

fn split_items(spec: &str) -> Vec<String> {
    let s = spec.trim();
    let s = s
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .unwrap_or(s);
    if s.trim() == "∅" {
        return Vec::new();
    }
    // Interval items may be written `(i,j)`; split on commas outside parentheses.
    let mut items = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                items.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    items.push(cur);
    items
        .into_iter()
        .map(|t| t.trim().to_string())
        .filter(|t| !t.is_empty())
        .collect()
}

fn parse_convention(text: Option<&str>) -> Result<Option<Convention>, Failure> {
    text.map(|t| t.parse::<Convention>().map_err(usage))
        .transpose()
}

fn load_custom(path: &PathBuf) -> Result<Target, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read `{}`: {e}", path.display())))?;
    let poset = parse_poset(&text).map_err(|e| file_format(format!("{}: {e}", path.display())))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    Ok(Target::Custom { name, poset })
}

fn load_root(
    system: &str,
    variant: &str,
    convention: Option<Convention>,
) -> Result<Target, Failure> {
    let (ty, rank) = parse_type_name(system).map_err(|e| usage(e.to_string()))?;
    let sys = RootSystem::build(ty, rank).map_err(|e| usage(e.to_string()))?;
    let variant: PosetVariant = variant.parse().map_err(usage)?;
    if let Some(c) = convention {
        // Surface a convention/type mismatch before any work.
        sys.print_root(sys.root(0), c)
            .map_err(|e| usage(e.to_string()))?;
    }
    let rp = sys.root_poset(&variant).map_err(|e| usage(e.to_string()))?;
    Ok(Target::Root {
        rp: Box::new(rp),
        convention,
        type_a: ty == CartanType::A,
    })
}

fn load(args: &PosetArgs) -> Result<Target, Failure> {
    let convention = parse_convention(args.convention.as_deref())?;
    match (&args.custom, &args.system) {
        (Some(path), _) => load_custom(path),
        (None, Some(system)) => load_root(system, &args.variant, convention),
        (None, None) => Err(usage("give a root system or --custom FILE")),
    }
}

/// A poset given either as `TYPE[/variant]` or as a file path.
fn load_spec(spec: &str) -> Result<Target, Failure> {
    let (system, variant) = spec.split_once('/').unwrap_or((spec, "full"));
    if parse_type_name(system).is_ok() && !std::path::Path::new(spec).is_file() {
        return load_root(system, variant, None);
    }
    load_custom(&PathBuf::from(spec))
}

fn expected_count(target: &Target) -> Option<u64> {
    match target {
        Target::Root { rp, .. } => rp.system().expected_antichain_count(rp.variant()).ok(),
        Target::Custom { .. } => None,
    }
}

fn display_order(mut orbits: Vec<Orbit>) -> Vec<Orbit> {
    orbits.sort_by(|a, b| {
        b.size()
            .cmp(&a.size())
            .then_with(|| a.representative().cmp(b.representative()))
    });
    orbits
}

fn cmd_orbits(args: &PosetArgs, format: Format) -> CmdResult {
    let target = load(args)?;
    let p = target.poset();
    let table = p.rowmotion_table();
    let orbits = display_order(table.orbits());
    let ord = orbits
        .iter()
        .fold(1u64, |acc, o| num_integer::lcm(acc, o.size() as u64));
    let expected = expected_count(&target);
    let mut out = String::new();
    for o in &orbits {
        let mean = fraction_string(&o.mean_size());
        let rep = o.representative();
        match format {
            Format::Text => writeln!(
                out,
                "{:>4}  {:>6}  {{{}}}",
                o.size(),
                mean,
                target.items(rep).join(",")
            ),
            Format::Tsv => writeln!(
                out,
                "{}\t{}\t{}",
                o.size(),
                mean,
                target.items(rep).join(",")
            ),
            Format::Json => writeln!(
                out,
                "{}",
                json!({ "size": o.size(), "mean": mean, "representative": target.items(rep) })
            ),
        }
        .expect("write to string");
    }
    match format {
        Format::Json => {
            let summary = json!({
                "poset": target.name(),
                "antichains": table.len(),
                "orbits": orbits.len(),
                "ord": ord,
                "expected_antichains": expected,
            });
            writeln!(out, "{summary}").expect("write to string");
        }
        Format::Text | Format::Tsv => {
            let sep = if format == Format::Tsv { "\t" } else { " " };
            let mut line = format!(
                "#AN={}{sep}ord={ord}{sep}orbits={}",
                table.len(),
                orbits.len()
            );
            if let Some(e) = expected {
                write!(line, "{sep}expected={e}").expect("write to string");
            }
            writeln!(out, "{line}").expect("write to string");
        }
    }
    Ok((0, out))
}

fn cmd_verify(
    claim: Option<String>,
    all: bool,
    list: bool,
    system: Option<String>,
    include_large: bool,
    format: Format,
) -> CmdResult {
    if list {
        let mut out = String::new();
        for (id, about) in harness::CLAIMS {
            writeln!(out, "{id}\t{about}").expect("write to string");
        }
        return Ok((0, out));
    }
    let system = system
        .map(|s| parse_type_name(&s).map_err(|e| usage(e.to_string())))
        .transpose()?;
    let options = SuiteOptions {
        system,
        include_large,
    };
    let reports: Vec<Report> = if all {
        if options.system.is_some() {
            return Err(usage("--type cannot be combined with --all"));
        }
        harness::run_all(include_large)
    } else {
        let claim = claim.expect("clap requires --claim or --all");
        harness::run_claim(&claim, &options).map_err(|e| usage(e.to_string()))?
    };
    let mut out = String::new();
    for r in &reports {
        let line = match format {
            Format::Text => r.summary_line(),
            Format::Json => r.to_json(),
            Format::Tsv => format!("{}\t{}\t{}", r.status, r.claim_id, r.scope),
        };
        writeln!(out, "{line}").expect("write to string");
    }
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    if format == Format::Text {
        writeln!(
            out,
            "{} reports: {} PASS, {} FAIL, {} UNSUPPORTED",
            reports.len(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Unsupported)
        )
        .expect("write to string");
    }
    let code = if reports.iter().all(Report::passed) {
        0
    } else {
        1
    };
    Ok((code, out))
}

fn type_a_target(rank: usize) -> Result<(TypeA, Target), Failure> {
    let a = TypeA::new(rank).map_err(|e| usage(e.to_string()))?;
    let target = Target::Root {
        rp: Box::new(a.root_poset().clone()),
        convention: None,
        type_a: true,
    };
    Ok((a, target))
}

/// Parses `i-j` items into an antichain of `a`, naming the first
/// comparable pair on failure.
fn parse_type_a(a: &TypeA, target: &Target, spec: &str) -> Result<Antichain, Failure> {
    let gamma = target.parse(spec)?;
    // `Target::parse` returns an antichain of the clone; move it over by labels.
    let labels = target.poset().labels_of(gamma.members());
    a.poset()
        .antichain_from_labels(&labels)
        .map_err(|e| usage(e.to_string()))
}

fn cmd_oy(rank: usize, spec: &str, form: OyForm) -> CmdResult {
    let (a, target) = type_a_target(rank)?;
    let gamma = parse_type_a(&a, &target, spec)?;
    let ideal = a.oy_ideal_form(&gamma).map_err(|e| usage(e.to_string()))?;
    let diff = a
        .oy_difference_form(&gamma)
        .map_err(|e| usage(e.to_string()))?;
    Ok(match form {
        OyForm::Ideal => (0, format!("{ideal}\n")),
        OyForm::Difference => (0, format!("{diff}\n")),
        OyForm::Both if ideal == diff => (0, format!("ideal={ideal} difference={diff}\n")),
        OyForm::Both => (
            1,
            format!("ideal={ideal} difference={diff} MISMATCH (engine bug)\n"),
        ),
    })
}

fn cmd_star(system: &str, spec: &str) -> CmdResult {
    let rank = match system.parse::<usize>() {
        Ok(n) => n,
        Err(_) => match parse_type_name(system).map_err(|e| usage(e.to_string()))? {
            (CartanType::A, n) => n,
            (ty, n) => {
                return Err(usage(format!(
                    "duality is defined for type A only, got {ty}{n}"
                )))
            }
        },
    };
    let (a, target) = type_a_target(rank)?;
    let gamma = parse_type_a(&a, &target, spec)?;
    let star = a.star(&gamma).map_err(|e| usage(e.to_string()))?;
    let text = if star.is_empty() {
        "{}".to_string()
    } else {
        a.format(&star).map_err(|e| usage(e.to_string()))?
    };
    Ok((0, format!("{text}\n")))
}

fn cmd_rowmotion(args: &PosetArgs, spec: Option<&str>, empty: bool, power: i64) -> CmdResult {
    let target = load(args)?;
    let gamma = match (spec, empty) {
        (_, true) | (None, false) => target.poset().empty_antichain(),
        (Some(s), false) => target.parse(s)?,
    };
    let image = target.poset().rowmotion_power(&gamma, power);
    Ok((0, format!("{}\n", target.format(&image))))
}

fn cmd_antichains(args: &PosetArgs, list: bool, format: Format) -> CmdResult {
    let target = load(args)?;
    let all = target.poset().enumerate_antichains();
    let expected = expected_count(&target);
    let mut out = String::new();
    if list {
        for a in &all {
            let line = match format {
                Format::Json => json!(target.items(a)).to_string(),
                Format::Text => target.format(a),
                Format::Tsv => target.items(a).join("\t"),
            };
            writeln!(out, "{line}").expect("write to string");
        }
    }
    match format {
        Format::Json => {
            let summary =
                json!({ "poset": target.name(), "antichains": all.len(), "expected": expected });
            writeln!(out, "{summary}").expect("write to string");
        }
        Format::Text | Format::Tsv => {
            let mut line = format!("#AN={}", all.len());
            if let Some(e) = expected {
                let sep = if format == Format::Tsv { "\t" } else { " " };
                write!(line, "{sep}expected={e}").expect("write to string");
            }
            writeln!(out, "{line}").expect("write to string");
        }
    }
    Ok((0, out))
}

fn cmd_isomorphic(first: &str, second: &str) -> CmdResult {
    let (x, y) = (load_spec(first)?, load_spec(second)?);
    let found = x
        .poset()
        .isomorphism(y.poset())
        .map_err(|e| usage(e.to_string()))?;
    Ok(match found {
        Some(map) => {
            let mut out = format!("isomorphic: {} ~ {}\n", x.name(), y.name());
            for (i, &j) in map.iter().enumerate() {
                writeln!(out, "{} -> {}", x.format_element(i), y.format_element(j))
                    .expect("write to string");
            }
            (0, out)
        }
        None => (1, format!("not isomorphic: {} !~ {}\n", x.name(), y.name())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> String {
        let mut full = vec!["rowmotion"];
        full.extend_from_slice(args);
        let out = run(full);
        assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
        out.stdout
    }

    #[test]
    fn item_splitting() {
        assert_eq!(split_items("1-1, 3-3"), vec!["1-1", "3-3"]);
        assert_eq!(split_items("(1,2),(3,3)"), vec!["(1,2)", "(3,3)"]);
        assert!(split_items("").is_empty());
        assert!(split_items("{}").is_empty());
        assert!(split_items("∅").is_empty());
    }

    #[test]
    fn small_commands() {
        assert_eq!(run_ok(&["oy", "3", "1-1,3-3"]), "2\n");
        assert_eq!(run_ok(&["star", "3", "1-1"]), "2-2,3-3\n");
        assert_eq!(
            run_ok(&["rowmotion", "A3", "1-1", "--power", "3"]),
            "1-1,2-2\n"
        );
        assert_eq!(
            run_ok(&["rowmotion", "A3", "1-1", "--power", "-1"]),
            "2-2,3-3\n"
        );
    }

    #[test]
    fn errors_map_to_codes() {
        assert_eq!(run(["rowmotion", "orbits", "Q4"]).code, 2);
        assert_eq!(run(["rowmotion", "star", "B3", "1-1"]).code, 2);
        assert_eq!(run(["rowmotion", "verify", "--claim", "nope"]).code, 2);
        assert_eq!(run(["rowmotion", "oy", "3", "1-2,1-3"]).code, 2);
    }
}
