//! `ucycle`: build, verify, export and plot shortened universal cycles.
//!
//! Exit status is 0 on success, 1 when a construction or verification
//! fails, and 2 for bad arguments or unreadable input.

mod plot;

use std::fs;
use std::path::{Path, PathBuf};
use std::process;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use ucycle::io::{parse_cycle_text, to_json, to_plain, CycleRecord};
use ucycle::{
    build_shortened_ucycle, coverage, dot, extended_glue_family, max_shortening, BuildOptions,
    ClusterGraph, CyclicWord, Error,
};

use crate::plot::PlotOptions;

#[derive(Parser)]
#[command(name = "ucycle", version, about = "Shortened universal cycles for permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a cycle of length n! - i(n-1)
    Build {
        #[arg(long)]
        n: usize,
        /// Number of twin cycles to compress
        #[arg(long, required_unless_present = "all_i", conflicts_with = "all_i")]
        i: Option<usize>,
        /// Shuffle the Eulerian circuit with this seed
        #[arg(long)]
        seed: Option<u64>,
        /// Twin cycle ids to compress, in place of the first i
        #[arg(long, value_delimiter = ',')]
        cycles: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Build every i from 0 to (n-2)!, one line each
        #[arg(long)]
        all_i: bool,
    },
    /// Check that a cyclic word covers every permutation exactly once
    Verify {
        #[arg(long)]
        n: usize,
        /// Also require length n! - i(n-1)
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        file: PathBuf,
    },
    /// Write the cluster graph as Graphviz DOT
    Graph {
        #[arg(long)]
        n: usize,
        /// A count of twin cycles, or a comma-separated id list (`3,` for one id)
        #[arg(long)]
        compress: Option<String>,
        /// Drop the edges of the gluing permutations and their twins
        #[arg(long)]
        remove_pstar: bool,
        #[arg(long)]
        dot: PathBuf,
    },
    /// Draw a word on a grid as SVG
    Plot {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        /// Treat the word as non-cyclic
        #[arg(long)]
        linear: bool,
    },
}

/// A failure tagged with its exit status.
struct Failure {
    code: i32,
    error: anyhow::Error,
}

fn usage(error: anyhow::Error) -> Failure {
    Failure { code: 2, error }
}

fn failed(error: anyhow::Error) -> Failure {
    Failure { code: 1, error }
}

/// Argument problems exit 2; everything else the library reports exits 1.
fn classify(e: Error) -> Failure {
    match e {
        Error::OrderTooSmall { .. }
        | Error::OrderTooLarge { .. }
        | Error::ShorteningOutOfRange { .. }
        | Error::InvalidSelection(_)
        | Error::Parse(_)
        | Error::EmptyInput => usage(e.into()),
        other => failed(other.into()),
    }
}

fn read_word(path: &Path) -> Result<Vec<i64>, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(usage)?;
    let (letters, _) = parse_cycle_text(&text)
        .with_context(|| format!("cannot parse {}", path.display()))
        .map_err(usage)?;
    if letters.is_empty() {
        return Err(usage(anyhow!("{} contains no letters", path.display())));
    }
    Ok(letters)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)
            .with_context(|| format!("cannot write {}", p.display()))
            .map_err(usage),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn encode(n: usize, i: usize, z: &CyclicWord, format: Format) -> String {
    match format {
        Format::Plain => to_plain(z.letters()),
        Format::Json => to_json(&CycleRecord::new(n, Some(i), z.letters().to_vec())),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_build(
    n: usize,
    i: Option<usize>,
    seed: Option<u64>,
    cycles: Option<Vec<usize>>,
    format: Format,
    out: Option<PathBuf>,
    all_i: bool,
) -> Result<(), Failure> {
    let text = if all_i {
        if cycles.is_some() {
            return Err(usage(anyhow!("--cycles cannot be combined with --all-i")));
        }
        if n < 3 {
            return Err(classify(Error::OrderTooSmall { n, min: 3 }));
        }
        let opts = BuildOptions { selection: None, seed };
        let built: Vec<_> = (0..=max_shortening(n))
            .into_par_iter()
            .map(|i| build_shortened_ucycle(n, i, &opts).map(|z| encode(n, i, &z, format)))
            .collect();
        built.into_iter().collect::<Result<Vec<_>, _>>().map_err(classify)?.concat()
    } else {
        let i = i.expect("clap requires --i without --all-i");
        let opts = BuildOptions { selection: cycles, seed };
        let z = build_shortened_ucycle(n, i, &opts).map_err(classify)?;
        encode(n, i, &z, format)
    };
    write_output(out.as_deref(), &text)
}

fn cmd_verify(n: usize, i: Option<usize>, file: &Path) -> Result<(), Failure> {
    if n < 1 {
        return Err(usage(anyhow!("--n must be positive")));
    }
    let letters = read_word(file)?;
    let z = CyclicWord::new(letters).map_err(classify)?;
    let Some(report) = coverage(&z, n) else {
        return Err(failed(anyhow!("word of length {} is shorter than n = {n}", z.len())));
    };
    println!("{report}");
    let ok = match i {
        Some(i) => report.is_shortened_by(i),
        None => report.verdict,
    };
    if ok {
        Ok(())
    } else if report.verdict {
        Err(failed(anyhow!("length {} does not match i = {}", report.length, i.unwrap_or(0))))
    } else {
        Err(failed(anyhow!("verification failed")))
    }
}

/// `"2"` compresses the first two cycles; `"0,3"` or `"3,"` name ids.
fn parse_compress(arg: &str, available: usize) -> Result<Vec<usize>, Failure> {
    let bad = |_| usage(anyhow!("--compress expects a count or an id list, got {arg:?}"));
    if arg.contains(',') {
        let ids = arg
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(bad))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(id) = ids.iter().find(|&&id| id >= available) {
            return Err(usage(anyhow!("cycle id {id} out of range 0..{available}")));
        }
        Ok(ids)
    } else {
        let count = arg.trim().parse::<usize>().map_err(bad)?;
        if count > available {
            return Err(usage(anyhow!("cannot compress {count} of {available} twin cycles")));
        }
        Ok((0..count).collect())
    }
}

fn cmd_graph(n: usize, compress: Option<&str>, remove_pstar: bool, path: &Path) -> Result<(), Failure> {
    let graph = ClusterGraph::build(n).map_err(classify)?;
    let cycles = graph.twin_cycles();
    let ids = match compress {
        Some(arg) => parse_compress(arg, cycles.len())?,
        None => Vec::new(),
    };
    let chosen: Vec<_> = ids.iter().map(|&id| cycles[id].clone()).collect();
    let mut graph = graph.compress(&chosen).map_err(classify)?;
    // the gluing family is defined from n = 4 on
    let family = if n >= 4 { Some(extended_glue_family(n).map_err(classify)?) } else { None };
    if remove_pstar {
        let f = family.as_ref().ok_or_else(|| usage(anyhow!("--remove-pstar needs n >= 4")))?;
        graph = graph.remove_tour(f).map_err(classify)?;
    }
    let text = dot::to_dot(&graph, family.as_ref());
    write_output(Some(path), &text)
}

fn cmd_plot(n: usize, file: &Path, svg: &Path, linear: bool) -> Result<(), Failure> {
    if n < 2 {
        return Err(usage(anyhow!("--n must be at least 2")));
    }
    let letters = read_word(file)?;
    if linear && letters.len() < n {
        return Err(usage(anyhow!("word of length {} has no window of size {n}", letters.len())));
    }
    let text = plot::render(&letters, &PlotOptions { n, cyclic: !linear });
    write_output(Some(svg), &text)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Build {
            n,
            i,
            seed,
            cycles,
            format,
            out,
            all_i,
        } => cmd_build(n, i, seed, cycles, format, out, all_i),
        Command::Verify { n, i, file } => cmd_verify(n, i, &file),
        Command::Graph {
            n,
            compress,
            remove_pstar,
            dot,
        } => cmd_graph(n, compress.as_deref(), remove_pstar, &dot),
        Command::Plot { n, file, svg, linear } => cmd_plot(n, &file, &svg, linear),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            process::exit(code);
        }
    };
    if let Err(f) = run(cli) {
        eprintln!("error: {:#}", f.error);
        process::exit(f.code);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compress_arg_forms() {
        assert_eq!(parse_compress("2", 6).ok().unwrap(), vec![0, 1]);
        assert_eq!(parse_compress("3,", 6).ok().unwrap(), vec![3]);
        assert_eq!(parse_compress("0, 5", 6).ok().unwrap(), vec![0, 5]);
        assert_eq!(parse_compress("7", 6).err().unwrap().code, 2);
        assert_eq!(parse_compress("6,", 6).err().unwrap().code, 2);
        assert_eq!(parse_compress("x", 6).err().unwrap().code, 2);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
