use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use sepenum_core::graph::{chordless_path_to_separator, is_minimal_separator, is_separator};
use sepenum_core::important::is_important;
use sepenum_core::mincut::kappa;
use sepenum_core::oracle::find_chordless_path_through;
use sepenum_core::{EnumParams, Error, Graph, Limit, Registry, Separator, SeparatorSink, Terminals};

#[derive(Parser)]
#[command(name = "sepenum", version, about = "Enumerate vertex s,t-separators of an undirected graph")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Edge list, one `u v` pair per line; `-` reads standard input
    file: PathBuf,
    /// Source vertex label
    #[arg(short, long = "source", value_name = "LABEL")]
    s: String,
    /// Target vertex label
    #[arg(short, long = "target", value_name = "LABEL")]
    t: String,
    /// Print one JSON object per line
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print κ and the minimum separator closest to the source
    Minsep {
        #[command(flatten)]
        input: Input,
    },
    /// Stream minimal separators of size at most k
    ListMinimal {
        #[command(flatten)]
        input: Input,
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Stream separators by non-decreasing size
    Ranked {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Stream every minimum separator
    MinimumAll {
        #[command(flatten)]
        input: Input,
    },
    /// Print the important separators of size at most k
    Important {
        #[command(flatten)]
        input: Input,
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Run any registered strategy by name
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        strategy: String,
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        k: Option<u64>,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// List the registered strategies
    Strategies,
    /// Classify a vertex set
    Check {
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertex labels
        #[arg(long, value_delimiter = ',')]
        set: Vec<String>,
    },
    /// Find a minimal separator containing a vertex through a chordless path
    Witness {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        v: String,
        /// Refuse graphs with more vertices than this
        #[arg(long, default_value_t = 20)]
        max_n: usize,
    },
}

/// Failure carrying the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnknownLabel(_) | Error::SameTerminals | Error::TerminalsAdjacent => 2,
            Error::AlreadySeparated => 3,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

struct Output<'g> {
    graph: &'g Graph,
    json: bool,
    out: BufWriter<io::StdoutLock<'static>>,
    broken: bool,
}

impl<'g> Output<'g> {
    fn new(graph: &'g Graph, json: bool) -> Self {
        Output {
            graph,
            json,
            out: BufWriter::new(io::stdout().lock()),
            broken: false,
        }
    }

    fn labels(&self, sep: &Separator) -> Vec<&'g str> {
        let mut labels = sep.labels(self.graph);
        labels.sort_unstable();
        labels
    }

    /// Writes one line and flushes it. A closed pipe silently ends output.
    fn line(&mut self, text: &str) -> ControlFlow<()> {
        if self.broken {
            return ControlFlow::Break(());
        }
        let result = writeln!(self.out, "{text}").and_then(|_| self.out.flush());
        match result {
            Ok(()) => ControlFlow::Continue(()),
            Err(_) => {
                self.broken = true;
                ControlFlow::Break(())
            }
        }
    }

    fn record(&self, sep: &Separator, extra: Value) -> Value {
        let mut obj = json!({ "separator": self.labels(sep), "size": sep.len() });
        if let (Value::Object(map), Value::Object(more)) = (&mut obj, extra) {
            map.extend(more);
        }
        obj
    }
}

impl SeparatorSink for Output<'_> {
    fn emit(&mut self, sep: &Separator) -> ControlFlow<()> {
        let text = if self.json {
            self.record(sep, json!({})).to_string()
        } else {
            self.labels(sep).join(",")
        };
        self.line(&text)
    }
}

fn load(input: &Input) -> Result<(Graph, Terminals), Failure> {
    let text = if input.file.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(&input.file)
            .map_err(|e| Failure::usage(format!("{}: {e}", input.file.display())))?
    };
    let graph = Graph::parse(&text)?;
    let term = Terminals::from_labels(&graph, &input.s, &input.t)?;
    Ok((graph, term))
}

fn stream(
    registry: &Registry,
    name: &str,
    input: &Input,
    k: Option<u64>,
    limit: Option<usize>,
) -> Result<(), Failure> {
    let strategy = registry.get(name)?;
    let (graph, term) = load(input)?;
    let params = EnumParams { k: k.map(|k| k as usize) };
    if strategy.needs_bound() && params.k.is_none() {
        return Err(Failure::usage(format!("strategy {name} needs -k")));
    }
    let mut out = Output::new(&graph, input.json);
    let result = match limit {
        Some(n) => strategy.run(&graph, term, &params, &mut Limit::new(&mut out, n)),
        None => strategy.run(&graph, term, &params, &mut out),
    };
    match result {
        Err(Error::TerminalsAdjacent) if name == "small-minimal" => {
            let _ = out.line("BOTTOM");
            Err(Error::TerminalsAdjacent.into())
        }
        other => other.map(drop).map_err(Failure::from),
    }
}

fn minsep(input: &Input) -> Result<(), Failure> {
    let (graph, term) = load(input)?;
    let cut = kappa(&graph, term)?;
    let mut out = Output::new(&graph, input.json);
    if input.json {
        let line = out.record(&cut.separator, json!({ "kappa": cut.kappa })).to_string();
        let _ = out.line(&line);
    } else {
        let _ = out.line(&format!("kappa {}", cut.kappa));
        let _ = out.emit(&cut.separator);
    }
    Ok(())
}

fn check(input: &Input, set: &[String]) -> Result<(), Failure> {
    let (graph, term) = load(input)?;
    let members = set
        .iter()
        .filter(|l| !l.is_empty())
        .map(|l| graph.vertex(l).map_err(|e| Failure::usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let sep = Separator::new(members);
    if sep.contains(term.s) || sep.contains(term.t) {
        return Err(Failure::usage("the set may not contain a terminal"));
    }
    let kappa = kappa(&graph, term)?.kappa;
    let separates = is_separator(&graph, term, sep.as_slice())?;
    let minimal = is_minimal_separator(&graph, term, sep.as_slice())?;
    let important = minimal && is_important(&graph, term, &sep)?;
    let minimum = separates && sep.len() == kappa;

    let mut out = Output::new(&graph, input.json);
    if input.json {
        let line = out
            .record(
                &sep,
                json!({
                    "is_separator": separates,
                    "minimal": minimal,
                    "important": important,
                    "minimum": minimum,
                }),
            )
            .to_string();
        let _ = out.line(&line);
    } else {
        for (name, value) in [
            ("separator", separates),
            ("minimal", minimal),
            ("important", important),
            ("minimum", minimum),
        ] {
            let _ = out.line(&format!("{name} {}", if value { "yes" } else { "no" }));
        }
    }
    Ok(())
}

fn witness(input: &Input, v: &str, max_n: usize) -> Result<(), Failure> {
    let (graph, term) = load(input)?;
    let v = graph.vertex(v).map_err(|e| Failure::usage(e.to_string()))?;
    if v == term.s || v == term.t {
        return Err(Failure::usage("the vertex must not be a terminal"));
    }
    kappa(&graph, term)?;
    let path = find_chordless_path_through(&graph, term, v, max_n)?;
    let mut out = Output::new(&graph, input.json);
    match path {
        None if input.json => {
            let _ = out.line(&json!({ "separator": null }).to_string());
        }
        None => {
            let _ = out.line("none");
        }
        Some(path) => {
            let sep = chordless_path_to_separator(&graph, term, &path, v)?;
            if input.json {
                let path: Vec<&str> = path.iter().map(|&x| graph.label(x)).collect();
                let line = out.record(&sep, json!({ "path": path })).to_string();
                let _ = out.line(&line);
            } else {
                let _ = out.emit(&sep);
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let registry = Registry::builtin();
    match cli.command {
        Command::Minsep { input } => minsep(&input),
        Command::ListMinimal { input, k, limit } => stream(&registry, "small-minimal", &input, Some(k), limit),
        Command::Ranked { input, limit } => stream(&registry, "ranked", &input, None, limit),
        Command::MinimumAll { input } => stream(&registry, "minimum", &input, None, None),
        Command::Important { input, k } => stream(&registry, "important", &input, Some(k), None),
        Command::Enumerate { input, strategy, k, limit } => stream(&registry, &strategy, &input, k, limit),
        Command::Strategies => {
            for s in registry.iter() {
                println!("{:<14} {}", s.name(), s.summary());
            }
            Ok(())
        }
        Command::Check { input, set } => check(&input, &set),
        Command::Witness { input, v, max_n } => witness(&input, &v, max_n),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("sepenum: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
