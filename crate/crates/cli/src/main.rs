use std::fmt::{self, Display};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use gengraph::graph::{build_generating_graph, export, ExportFormat};
use gengraph::group::{self, Family, GroupId};
use gengraph::invariants;
use gengraph::linalg::{
    charpoly_modular, expand, spectra_match, symmetric_eigenvalues, MatchReport, DEFAULT_TOL,
    MATCH_TOL,
};
use gengraph::spectra::{self, EccentricityJson, MatrixKind, SpectrumJson};
use gengraph::verify::{self, Check, Status, VerifyReport};

/// Generating graphs of dihedral and dicyclic groups.
#[derive(Parser)]
#[command(name = "gengraph", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form and numeric spectra of A, L, Dis or Ecc.
    Spectrum(SpectrumArgs),
    /// Run the verification sweep over a range of n.
    Verify(VerifyArgs),
    /// Export Γ(G) as DOT, JSON or CSV edges.
    Graph(GraphArgs),
    /// Invariants of Δ(G) as JSON.
    Props(PropsArgs),
    /// Probability that two random elements generate the group.
    Prob(ProbArgs),
}

#[derive(Args)]
struct GroupArgs {
    /// D or Q
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct SpectrumArgs {
    /// FAMILY N MATRIX [MODE], any of which may be given as flags instead
    #[arg(value_name = "ARGS")]
    positional: Vec<String>,
    #[command(flatten)]
    group: GroupArgs,
    /// adj, lap, dist or ecc
    #[arg(long)]
    matrix: Option<String>,
    /// closed (default), numeric or both
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// A..B (inclusive) or a single n
    #[arg(value_name = "RANGE")]
    positional: Vec<String>,
    #[arg(long)]
    range: Option<String>,
    /// Comma-separated subset of checks; all by default
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GraphArgs {
    /// FAMILY N [FORMAT]
    #[arg(value_name = "ARGS")]
    positional: Vec<String>,
    #[command(flatten)]
    group: GroupArgs,
    /// dot (default), json or csv
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args)]
struct PropsArgs {
    /// FAMILY N
    #[arg(value_name = "ARGS")]
    positional: Vec<String>,
    #[command(flatten)]
    group: GroupArgs,
}

#[derive(Args)]
struct ProbArgs {
    #[arg(value_name = "N")]
    positional: Vec<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Q by default
    #[arg(long)]
    family: Option<String>,
}

enum CliError {
    /// Invalid arguments or inputs outside a closed form's domain.
    Usage(String),
    /// A check ran and did not pass.
    Failed(String),
}

impl CliError {
    fn usage(e: impl Display) -> Self {
        CliError::Usage(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Named argument slots filled from flags first, then from positionals in
/// order for whatever is still missing.
struct Slots {
    values: Vec<(&'static str, Option<String>)>,
}

impl Slots {
    fn new(flags: Vec<(&'static str, Option<String>)>, positional: Vec<String>) -> Result<Self> {
        let mut values = flags;
        let mut rest = positional.into_iter();
        for (_, v) in values.iter_mut().filter(|(_, v)| v.is_none()) {
            match rest.next() {
                Some(p) => *v = Some(p),
                None => break,
            }
        }
        if let Some(extra) = rest.next() {
            return Err(CliError::Usage(format!("unexpected argument {extra:?}")));
        }
        Ok(Self { values })
    }

    fn get(&self, name: &str) -> Option<&str> {
        self.values
            .iter()
            .find(|(k, _)| *k == name)
            .and_then(|(_, v)| v.as_deref())
    }

    fn require(&self, name: &str) -> Result<&str> {
        self.get(name)
            .ok_or_else(|| CliError::Usage(format!("missing {name}")))
    }

    fn group(&self) -> Result<GroupId> {
        let family: Family = self.require("family")?.parse().map_err(CliError::usage)?;
        let n = parse_n(self.require("n")?)?;
        GroupId::new(family, n).map_err(CliError::usage)
    }
}

fn parse_n(text: &str) -> Result<usize> {
    text.parse()
        .map_err(|_| CliError::Usage(format!("n must be a positive integer, got {text:?}")))
}

impl GroupArgs {
    fn slots(self) -> Vec<(&'static str, Option<String>)> {
        vec![
            ("family", self.family),
            ("n", self.n.map(|n| n.to_string())),
        ]
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Mode {
    Closed,
    Numeric,
    Both,
}

impl std::str::FromStr for Mode {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Mode::Closed),
            "numeric" => Ok(Mode::Numeric),
            "both" => Ok(Mode::Both),
            other => Err(CliError::Usage(format!(
                "unknown mode {other:?}; expected closed, numeric or both"
            ))),
        }
    }
}

#[derive(Serialize)]
struct SpectrumOutput {
    family: Family,
    n: usize,
    matrix: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed: Option<SpectrumJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    charpoly: Option<EccentricityJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    numeric: Option<Vec<f64>>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matched: Option<MatchReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    charpoly_exact: Option<bool>,
}

/// Numeric eigenvalues grouped by closeness, written like an exact spectrum.
struct NumericText<'a>(&'a [f64]);

impl Display for NumericText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut groups: Vec<(f64, usize)> = Vec::new();
        for &v in self.0 {
            match groups.last_mut() {
                Some((g, m)) if (*g - v).abs() < MATCH_TOL => *m += 1,
                _ => groups.push((v, 1)),
            }
        }
        write!(f, "{{")?;
        for (i, (v, m)) in groups.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let v = if v.abs() < 5e-9 { 0.0 } else { *v };
            write!(f, "{v:.8}")?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        write!(f, "}}")
    }
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<()> {
    let mut flags = args.group.slots();
    flags.extend([("matrix", args.matrix), ("mode", args.mode)]);
    let slots = Slots::new(flags, args.positional)?;
    let id = slots.group()?;
    let kind: MatrixKind = slots.require("matrix")?.parse().map_err(CliError::usage)?;
    let mode: Mode = slots.get("mode").unwrap_or("closed").parse()?;
    let min = kind.min_n(id.family());
    if id.n() < min {
        return Err(CliError::Usage(format!(
            "{kind} for {} needs n >= {min}, got {}",
            id.family(),
            id.n()
        )));
    }

    let mut out = SpectrumOutput {
        family: id.family(),
        n: id.n(),
        matrix: kind.to_string(),
        closed: None,
        charpoly: None,
        numeric: None,
        matched: None,
        charpoly_exact: None,
    };
    let mut lines = Vec::new();

    let closed = spectra::closed_spectrum(id, kind).map_err(CliError::usage)?;
    let report = match kind {
        MatrixKind::Eccentricity => {
            Some(spectra::eccentricity_charpoly(id).map_err(CliError::usage)?)
        }
        _ => None,
    };
    if mode != Mode::Numeric {
        match &report {
            Some(r) => {
                lines.push(r.verified.to_string());
                if r.has_errata() {
                    lines.push(format!("errata: printed form {}", r.printed));
                    for t in r.terms.iter().filter(|t| !t.agrees()) {
                        lines.push(format!(
                            "errata: {} has root {}, verified root {}",
                            t.label, t.printed_root, t.verified_root
                        ));
                    }
                }
                out.charpoly = Some(r.to_json());
            }
            None => lines.push(closed.to_string()),
        }
        out.closed = Some(closed.to_json(id.family(), id.n(), kind.short_name()));
    }

    let mut failure = None;
    if mode != Mode::Closed {
        let m = verify::oracle_matrix(id, kind).map_err(CliError::usage)?;
        let numeric =
            symmetric_eigenvalues(&m, DEFAULT_TOL).map_err(|e| CliError::Failed(e.to_string()))?;
        lines.push(format!("numeric: {}", NumericText(&numeric)));
        if mode == Mode::Both {
            let r = spectra_match(&closed, &numeric, MATCH_TOL)
                .map_err(|e| CliError::Failed(e.to_string()))?;
            let verdict = if r.matched { "match" } else { "mismatch" };
            lines.push(format!(
                "{verdict}: worst deviation {:.2e} (tolerance {:.0e})",
                r.worst_deviation, r.tol
            ));
            if !r.matched {
                failure = Some(format!("closed form deviates by {:.2e}", r.worst_deviation));
            }
            out.matched = Some(r);
            if let Some(rep) = &report {
                let exact = expand(&rep.verified) == charpoly_modular(&m);
                lines.push(format!(
                    "charpoly: {}",
                    if exact { "exact match" } else { "differs" }
                ));
                if !exact {
                    failure = Some("verified charpoly differs from det(xI - Ecc)".into());
                }
                out.charpoly_exact = Some(exact);
            }
        }
        out.numeric = Some(numeric);
    }

    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializable output")
        );
    } else {
        for l in lines {
            println!("{l}");
        }
    }
    failure.map_or(Ok(()), |f| Err(CliError::Failed(f)))
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let bad = || CliError::Usage(format!("invalid range {text:?}; expected A..B"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (text, text),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a < 2 {
        return Err(CliError::Usage(format!(
            "range must start at n >= 2, got {a}"
        )));
    }
    if a > b {
        return Err(CliError::Usage(format!("inverted range {a}..{b}")));
    }
    Ok((a, b))
}

fn cmd_verify(args: VerifyArgs) -> Result<()> {
    let slots = Slots::new(vec![("range", args.range)], args.positional)?;
    let (from, to) = parse_range(slots.require("range")?)?;
    let checks: Vec<Check> = if args.checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        args.checks
            .iter()
            .map(|c| c.trim().parse())
            .collect::<std::result::Result<_, _>>()
            .map_err(CliError::Usage)?
    };
    let report = verify::verify(from, to, &checks);
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable report")
        );
    } else {
        print_report(&report);
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "{} checks failed",
            report.count(Status::Fail)
        )))
    }
}

fn print_report(report: &VerifyReport) {
    for (n, r) in report.records() {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Errata => "errata",
        };
        let mut line = format!("n={n:<3} {status:<6} {}", r.check);
        if !r.detail.is_empty() {
            line.push_str(&format!(": {}", r.detail));
        }
        println!("{line}");
        if let (Some(p), Some(v)) = (&r.printed, &r.verified) {
            println!("           printed:  {p}");
            println!("           verified: {v}");
        }
    }
    println!(
        "n in [{}, {}]: {} pass, {} errata, {} fail",
        report.from,
        report.to,
        report.count(Status::Pass),
        report.count(Status::Errata),
        report.count(Status::Fail)
    );
}

fn cmd_graph(args: GraphArgs) -> Result<()> {
    let mut flags = args.group.slots();
    flags.push(("format", args.format));
    let slots = Slots::new(flags, args.positional)?;
    let id = slots.group()?;
    let format: ExportFormat = slots
        .get("format")
        .unwrap_or("dot")
        .parse()
        .map_err(CliError::usage)?;
    print!("{}", export(&build_generating_graph(id), format));
    if format == ExportFormat::Json {
        println!();
    }
    Ok(())
}

fn cmd_props(args: PropsArgs) -> Result<()> {
    let id = Slots::new(args.group.slots(), args.positional)?.group()?;
    let props = invariants::props(id).map_err(|e| CliError::Failed(e.to_string()))?;
    println!(
        "{}",
        serde_json::to_string_pretty(&props).expect("serializable props")
    );
    Ok(())
}

fn cmd_prob(args: ProbArgs) -> Result<()> {
    let slots = Slots::new(vec![("n", args.n.map(|n| n.to_string()))], args.positional)?;
    let n = parse_n(slots.require("n")?)?;
    let family: Family = args
        .family
        .as_deref()
        .unwrap_or("Q")
        .parse()
        .map_err(CliError::usage)?;
    let id = GroupId::new(family, n).map_err(CliError::usage)?;
    println!("{}", group::generating_probability(id));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Graph(a) => cmd_graph(a),
        Command::Props(a) => cmd_props(a),
        Command::Prob(a) => cmd_prob(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(msg)) => {
            eprintln!("gengraph: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("gengraph: {msg}");
            ExitCode::from(2)
        }
    }
}
