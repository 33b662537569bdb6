//! Command-line front end for the `mcs` binary.
//!
//! Exit codes: 0 success, 1 input error, 2 degraded result, 3 brute-force
//! guard exceeded. `MCS_GUARD` overrides the default guard.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::acs::{approximation_report, AcsOptions};
use crate::bench::{run_bench, write_csv, BenchConfig};
use crate::circle::{reduce_domset_to_mcs, verify_reduction_lemma, REDUCTION_GUARD};
use crate::cover::{is_leaf_bar_cover, optimal_leaf_bar_cover, CoverOptions};
use crate::error::{Error, Result};
use crate::gen::{random_chord_diagram, random_interval_instance, GenConfig};
use crate::graph::{
    exact_mcs, is_consistent_subset, uncovered_vertices, ExactOptions, VertexSubset, DEFAULT_GUARD,
};
use crate::interval::{Bar, IntervalInstance};
use crate::text::{self, format_ids, Instance};
use crate::useful_cover::{partition_q, useful_cover};

#[derive(Debug, Parser)]
#[command(
    name = "mcs",
    version,
    about = "Minimum consistent subsets on colored graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Approximate MCS of an interval instance via a leaf bar cover.
    SolveApprox {
        /// Instance file, or `-` for stdin.
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Include wall-clock timings (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
        /// Also solve exactly and report the ratio.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        max_bars: Option<usize>,
    },
    /// Exact MCS by exhaustive search (any instance format).
    SolveExact { file: PathBuf },
    /// Check whether a subset is consistent.
    Check {
        file: PathBuf,
        /// 1-based ids, comma separated.
        #[arg(long)]
        subset: String,
    },
    /// Build the MCS instance from a chord diagram.
    Reduce { file: PathBuf },
    /// Brute-force check of |MCS(T')| = n + γ(T) on a chord diagram.
    VerifyReduction {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate seeded random instances.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of instances; seeds run consecutively.
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Output directory; a manifest.tsv is written alongside.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Approximation-ratio benchmark, CSV output.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Solve exactly when n is at most this.
        #[arg(long, default_value_t = 0)]
        exact_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Debug: Q partition and useful cover of one bar, e.g. `--bar 3,7`.
    UsefulCover {
        file: PathBuf,
        #[arg(long)]
        bar: String,
    },
    /// Debug: dump the minimum leaf bar cover chain.
    Cover {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Interval,
    Chords,
}

/// Guard from `MCS_GUARD`, falling back to the default.
pub fn guard_from_env() -> Result<usize> {
    match std::env::var("MCS_GUARD") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("MCS_GUARD must be a number, got `{v}`"))),
        Err(_) => Ok(DEFAULT_GUARD),
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))
    }
}

fn load(path: &Path) -> Result<Instance> {
    text::parse_instance(&read_input(path)?)
}

fn load_intervals(path: &Path) -> Result<IntervalInstance> {
    text::parse_intervals(&read_input(path)?)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

/// Runs one command, writing its output to `out`; returns the exit code.
pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let guard = guard_from_env()?;
    let mut s = String::new();
    let mut code = 0;
    match cli.command {
        Command::SolveApprox {
            file,
            json,
            timings,
            exact,
            max_bars,
        } => {
            let inst = load_intervals(&file)?;
            let opts = AcsOptions {
                cover: CoverOptions {
                    max_bars,
                    ..CoverOptions::default()
                },
            };
            let r = approximation_report(&inst, exact, &opts, guard)?;
            if json {
                s = to_json(&r.document(timings)) + "\n";
            } else {
                writeln!(s, "size {}", r.size()).unwrap();
                writeln!(s, "subset {}", format_ids(r.acs.iter())).unwrap();
                writeln!(s, "bars {}", r.bar_count).unwrap();
                writeln!(s, "repair_added {}", r.repair_added).unwrap();
                writeln!(s, "degraded {}", r.degraded).unwrap();
                if let (Some(k), Some(ratio)) = (r.exact_size, r.achieved_ratio) {
                    writeln!(s, "exact {k}\nratio {ratio:.6}").unwrap();
                }
                if timings {
                    writeln!(
                        s,
                        "cover_ms {:.3}\nrepair_ms {:.3}",
                        r.timings.cover_ms, r.timings.repair_ms
                    )
                    .unwrap();
                }
            }
            if r.degraded {
                code = 2;
            }
        }
        Command::SolveExact { file } => {
            let g = load(&file)?.graph()?;
            let best = exact_mcs(&g, ExactOptions::with_guard(guard))?.expect("no budget set");
            writeln!(s, "size {}\nsubset {}", best.len(), format_ids(best.iter())).unwrap();
        }
        Command::Check { file, subset } => {
            let g = load(&file)?.graph()?;
            let ids: VertexSubset = text::parse_id_list(&subset, g.vertex_count())?.into();
            let ok = is_consistent_subset(&g, &ids)?;
            writeln!(s, "consistent {ok}").unwrap();
            if !ok {
                writeln!(s, "uncovered {}", format_ids(uncovered_vertices(&g, &ids))).unwrap();
            }
        }
        Command::Reduce { file } => {
            let f = text::parse_chords(&read_input(&file)?)?;
            s = text::write_reduced(&reduce_domset_to_mcs(&f.diagram));
        }
        Command::VerifyReduction { file, json } => {
            let f = text::parse_chords(&read_input(&file)?)?;
            let guard = std::env::var("MCS_GUARD").map_or(REDUCTION_GUARD, |_| guard);
            let v = verify_reduction_lemma(&f.diagram, guard)?;
            if json {
                s = to_json(&v) + "\n";
            } else {
                writeln!(s, "n {}", v.n).unwrap();
                writeln!(s, "domination_number {}", v.domination_number()).unwrap();
                writeln!(s, "mcs_size {}", v.mcs_size()).unwrap();
                writeln!(s, "holds {}", v.holds).unwrap();
                writeln!(s, "witness_consistent {}", v.witness_consistent).unwrap();
            }
        }
        Command::Gen {
            kind,
            n,
            alpha,
            seed,
            count,
            out: dir,
        } => {
            if count > 1 && dir.is_none() {
                return Err(Error::input("--count above 1 needs --out"));
            }
            let mut manifest = String::from("file\tkind\tn\talpha\tseed\n");
            for k in 0..count as u64 {
                let seed = seed.wrapping_add(k);
                let cfg = GenConfig::new(n, alpha, seed);
                let (name, body) = match kind {
                    GenKind::Interval => (
                        "interval",
                        text::write_intervals(&random_interval_instance(&cfg)?),
                    ),
                    GenKind::Chords => ("chords", text::write_chords(&random_chord_diagram(&cfg)?)),
                };
                match &dir {
                    Some(d) => {
                        let file = format!("{name}_n{n}_a{alpha}_s{seed}.txt");
                        write_file(&d.join(&file), &body)?;
                        writeln!(manifest, "{file}\t{name}\t{n}\t{alpha}\t{seed}").unwrap();
                    }
                    None => s = body,
                }
            }
            if let Some(d) = &dir {
                write_file(&d.join("manifest.tsv"), &manifest)?;
                writeln!(s, "wrote {count} instance(s) to {}", d.display()).unwrap();
            }
        }
        Command::Bench {
            n,
            alpha,
            trials,
            seed,
            exact_max,
            out: path,
        } => {
            let mut cfg = BenchConfig::new(n, alpha, trials, seed);
            cfg.exact_max = exact_max;
            cfg.guard = guard;
            let rows = run_bench(&cfg)?;
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            let csv = String::from_utf8(buf).expect("csv output is utf-8");
            match path {
                Some(p) => write_file(&p, &csv)?,
                None => s = csv,
            }
        }
        Command::UsefulCover { file, bar } => {
            let inst = load_intervals(&file)?;
            let bar = parse_bar(&bar)?;
            let q = partition_q(&inst, bar)?;
            let z = useful_cover(&inst, bar)?;
            writeln!(s, "bar {bar}").unwrap();
            writeln!(s, "q_l {}", format_ids(q.q_l.iter())).unwrap();
            writeln!(s, "q_r {}", format_ids(q.q_r.iter())).unwrap();
            writeln!(s, "q_o {}", format_ids(q.q_o.iter())).unwrap();
            writeln!(s, "z {}", format_ids(z.members.iter())).unwrap();
        }
        Command::Cover { file, json } => {
            let inst = load_intervals(&file)?;
            let sol = optimal_leaf_bar_cover(&inst, &CoverOptions::default())?;
            let verdict = is_leaf_bar_cover(&inst, &sol.cover)?;
            if json {
                s = to_json(&sol) + "\n";
            } else {
                writeln!(s, "bars {}", sol.cover.bar_count()).unwrap();
                writeln!(s, "certified {}", sol.certified_optimal).unwrap();
                for (bar, z) in sol.cover.bars.iter().zip(&sol.cover.zs) {
                    writeln!(s, "{bar} z {}", format_ids(z.iter())).unwrap();
                }
                writeln!(s, "x {}", format_ids(sol.cover.x.iter())).unwrap();
                writeln!(s, "y {}", format_ids(sol.cover.y.iter())).unwrap();
                writeln!(s, "valid {}", verdict.is_valid()).unwrap();
            }
        }
    }
    out.write_all(s.as_bytes())
        .map_err(|e| Error::input(format!("write failed: {e}")))?;
    Ok(code)
}

fn write_file(path: &Path, body: &str) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)
            .map_err(|e| Error::input(format!("{}: {e}", parent.display())))?;
    }
    fs::write(path, body).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn parse_bar(text: &str) -> Result<Bar> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [i, j] = parts[..] else {
        return Err(Error::input(format!("bar must be `i,j`, got `{text}`")));
    };
    let num = |w: &str| {
        w.parse::<usize>()
            .map_err(|_| Error::input(format!("bad bar point `{w}`")))
    };
    Bar::new(num(i)?, num(j)?)
}

/// Entry point for the binary: parses arguments, runs, reports errors.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli, &mut io::stdout().lock()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
