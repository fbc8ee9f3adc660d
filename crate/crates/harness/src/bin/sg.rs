//! `sg`: generate, check and colour signed graphs, and run experiments.

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sgraph::color::{
    chi_b_exact, color_layered_nbhd, color_nbhd_via_p4class, color_or_path_k3free, color_p4class, color_via_negative,
    validate_coloring, ColorOrPath, Coloring,
};
use sgraph::detect::{in_forb_class, ForbSpec};
use sgraph::gen::{
    all_negative, arc_graph, build_lr_lazy, find_envelope, gen_shift, gen_signed_shift3, neg_clique, positive_completion,
    random_girth_graph, random_graph, random_k3free_connected, random_signed_graph, rng, sample_p4class_member,
    signed_line_graph, LazyConfig, Orientation,
};
use sgraph::{Graph, Sign, SignedGraph};
use sgraph_harness::{format_sg, read_sg, run_experiment, write_sg, CsvSink, HarnessError, Params};

#[derive(Parser)]
#[command(name = "sg", version, about = "Signed graph generators, checks, colourings and experiments")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph. Families: neg-clique, all-neg, positive-completion,
    /// shift, signed-shift3, random, k3free, girth, p4class, line, arc,
    /// envelope, lr. Parameters are key=value pairs.
    Gen {
        family: String,
        params: Vec<String>,
        /// Source graph for all-neg and positive-completion (its underlying graph is used).
        #[arg(long)]
        from: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check membership in Forb(LIST); exit 1 when a pattern occurs.
    Check {
        file: PathBuf,
        /// Comma separated pattern names, e.g. neg-k3,p4,linear-forest:2,3
        #[arg(long)]
        forbid: Vec<String>,
    },
    /// Balanced colouring; exit 1 when the algorithm's bound fails.
    Color {
        file: PathBuf,
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value_t = 7)]
        b: usize,
        /// Start vertex, 1-based.
        #[arg(long, default_value_t = 1)]
        start: usize,
    },
    /// Run an experiment; exit 1 when any row fails.
    Verify {
        experiment: String,
        /// key=value parameters.
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Stream rows to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Search for the smallest envelope with at most N vertices.
    Envelope {
        #[arg(long)]
        max_n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Exact,
    Negative,
    Thm20,
    Thm23,
    Thm30,
}

/// Exit status 2 with a message.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn emit(g: &SignedGraph, out: Option<&Path>) -> Result<(), Usage> {
    match out {
        Some(p) => write_sg(g, p)?,
        None => io::stdout().write_all(format_sg(g).as_bytes())?,
    }
    Ok(())
}

fn gen(family: &str, raw: &[String], from: Option<&Path>) -> Result<SignedGraph, Usage> {
    let mut p = Params::new();
    for pair in raw {
        p.parse_pair(pair)?;
    }
    let source = || -> Result<Graph, Usage> {
        let path = from.ok_or_else(|| Usage(format!("{family} needs --from FILE")))?;
        Ok(read_sg(path)?.underlying())
    };
    let seed: u64 = p.get("seed", 0)?;
    let mut r = rng(seed);
    let unsigned = |g: Graph| SignedGraph::uniform(&g, Sign::Negative);
    let g = match family {
        "neg-clique" => neg_clique(p.get("i", 4)?),
        "all-neg" => all_negative(&source()?),
        "positive-completion" => positive_completion(&source()?),
        "shift" => unsigned(gen_shift(p.get("k", 1)?, p.get("n", 4)?)?),
        "signed-shift3" => gen_signed_shift3(p.get("n", 4)?)?,
        "random" => random_signed_graph(p.get("n", 8)?, p.get("p", 0.5)?, p.get("neg", 0.5)?, &mut r)?,
        "k3free" => random_k3free_connected(p.get("n", 8)?, p.get("p", 0.3)?, &mut r)?,
        "girth" => unsigned(random_girth_graph(p.get("n", 10)?, p.get("g", 4)?, p.get("p", 0.3)?, seed)?),
        "p4class" => sample_p4class_member(p.get("n", 10)?, seed)?,
        "line" | "arc" => {
            let base = random_graph(p.get("n", 6)?, p.get("p", 0.5)?, &mut r)?;
            let d = Orientation::random(&base, &mut r);
            if family == "line" {
                signed_line_graph(&d)
            } else {
                unsigned(arc_graph(&d))
            }
        }
        "envelope" => {
            let max_n = p.get("max_n", 5)?;
            find_envelope(max_n).ok_or_else(|| Usage(format!("no envelope with at most {max_n} vertices")))?.graph
        }
        "lr" => {
            let max_n = p.get("max_n", 5)?;
            let env = find_envelope(max_n).ok_or_else(|| Usage(format!("no envelope with at most {max_n} vertices")))?;
            let config = LazyConfig {
                copies: p.get("copies", 7)?,
                max_iters: p.get("cap", 10_000)?,
                warm_up: p.get("warm_up", 5)?,
                seed,
            };
            build_lr_lazy(&env, &config)?.graph
        }
        _ => return Err(Usage(format!("unknown family `{family}`"))),
    };
    let unused = p.unused();
    if !unused.is_empty() {
        return Err(Usage(format!("unknown parameters for {family}: {}", unused.join(", "))));
    }
    Ok(g)
}

fn check(file: &Path, forbid: &[String]) -> Result<bool, Usage> {
    let g = read_sg(file)?;
    let names = forbid.iter().flat_map(|s| split_names(s));
    let spec = ForbSpec::from_names(names.collect::<Vec<_>>().iter().map(String::as_str)).map_err(Usage)?;
    let report = in_forb_class(&g, &spec);
    if report.is_member() {
        println!("member");
    }
    for v in &report.violations {
        let verts: Vec<String> = v.embedding.map.iter().map(|x| (x + 1).to_string()).collect();
        print!("{}: {}", v.pattern, verts.join(" "));
        if let Some(w) = v.embedding.switching.as_ref().filter(|w| !w.is_empty()) {
            let w: Vec<String> = w.iter().map(|x| (x + 1).to_string()).collect();
            print!(" (switch {})", w.join(" "));
        }
        println!();
    }
    Ok(report.is_member())
}

/// Splits on commas, except inside `linear-forest:a,b,c`, which runs to the end.
fn split_names(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        if rest.starts_with("linear-forest:") {
            out.push(rest.to_string());
            break;
        }
        let (head, tail) = rest.split_once(',').unwrap_or((rest, ""));
        if !head.is_empty() {
            out.push(head.to_string());
        }
        rest = tail;
    }
    out
}

fn print_coloring(c: &Coloring) {
    println!("colors {}", c.num_colors());
    for (v, x) in c.as_slice().iter().enumerate() {
        println!("{} {}", v + 1, x);
    }
}

fn color(file: &Path, algo: Algo, k: usize, b: usize, start: usize) -> Result<bool, Usage> {
    let g = read_sg(file)?;
    if matches!(algo, Algo::Thm20 | Algo::Thm23) && !(1..=g.n()).contains(&start) {
        return Err(Usage(format!("start vertex {start} out of range")));
    }
    let start = start.saturating_sub(1);
    let (result, bound) = match algo {
        Algo::Exact => (ColorOrPath::Coloring(chi_b_exact(&g, None)?.1), usize::MAX),
        Algo::Negative => (ColorOrPath::Coloring(color_via_negative(&g)), usize::MAX),
        Algo::Thm20 => (color_or_path_k3free(&g, k, start)?, (1usize << k) - 1),
        Algo::Thm23 => (
            color_layered_nbhd(&g, k, b, start, color_nbhd_via_p4class)?,
            b << k.saturating_sub(3),
        ),
        Algo::Thm30 => (ColorOrPath::Coloring(color_p4class(&g)?), 6),
    };
    match result {
        ColorOrPath::Coloring(c) => {
            print_coloring(&c);
            Ok(validate_coloring(&g, &c) && c.num_colors() <= bound)
        }
        ColorOrPath::Path(path) => {
            let verts: Vec<String> = path.iter().map(|x| (x + 1).to_string()).collect();
            println!("induced path {}", verts.join(" "));
            Ok(true)
        }
    }
}

fn verify(
    experiment: &str,
    raw: &[String],
    seed: u64,
    out: Option<&Path>,
    csv: Option<&Path>,
) -> Result<bool, Usage> {
    let mut params = Params::new();
    for pair in raw {
        params.parse_pair(pair)?;
    }
    let mut sink = csv.map(|p| File::create(p).map_err(Usage::from).and_then(|f| Ok(CsvSink::new(f)?))).transpose()?;
    let mut write_err = None;
    let report = run_experiment(experiment, &params, seed, &mut |row| {
        if let Some(s) = sink.as_mut() {
            if let Err(e) = s.write(row) {
                write_err.get_or_insert(e);
            }
        }
    })
    .map_err(|e: HarnessError| Usage(e.to_string()))?;
    if let Some(e) = write_err {
        return Err(e.into());
    }
    let json = report.to_json();
    match out {
        Some(p) => std::fs::write(p, json + "\n")?,
        None => println!("{json}"),
    }
    for note in &report.notes {
        eprintln!("{note}");
    }
    let failed = report.failures().count();
    eprintln!("{experiment}: {} rows, {failed} failed", report.rows.len());
    Ok(report.pass)
}

fn run(cli: Cli) -> Result<bool, Usage> {
    match cli.cmd {
        Cmd::Gen { family, params, from, out } => {
            let g = gen(&family, &params, from.as_deref())?;
            emit(&g, out.as_deref())?;
            Ok(true)
        }
        Cmd::Check { file, forbid } => check(&file, &forbid),
        Cmd::Color { file, algo, k, b, start } => color(&file, algo, k, b, start),
        Cmd::Verify { experiment, params, seed, out, csv } => {
            verify(&experiment, &params, seed, out.as_deref(), csv.as_deref())
        }
        Cmd::Envelope { max_n, out } => match find_envelope(max_n) {
            Some(env) => {
                let cycle: Vec<String> = env.cycle.iter().map(|v| (v + 1).to_string()).collect();
                eprintln!("envelope on {} vertices, negative cycle {}", env.graph.n(), cycle.join(" "));
                emit(&env.graph, out.as_deref())?;
                Ok(true)
            }
            None => {
                eprintln!("no envelope with at most {max_n} vertices");
                Ok(false)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
