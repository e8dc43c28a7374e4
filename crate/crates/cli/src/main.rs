use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use edgeideal::format::{parse_facet_list, parse_graph, parse_graph6, to_edge_list, to_graph6};
use edgeideal::generators::FamilySpec;
use edgeideal::recognition::{
    is_shellable, is_vertex_decomposable, max_process, max_process_all, quasi_forest_leaf_order,
    recognize_dq_tree, MaxProcessTrace, TieBreak, TreeCertificate,
};
use edgeideal::report::{invariant_report, rejection_text};
use edgeideal::resolution::{betti_table, complex_hilbert_data, hilbert_data, reduced_homology_ranks};
use edgeideal::scan::{corpus, run_suite, Suite};
use edgeideal::{named, FieldSpec, Graph};

#[derive(Parser)]
#[command(name = "edgeideal", version, about = "Exact invariants of edge ideals and (d1,...,dq)-tree recognition")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file in graph6 or edge-list format; `-` reads stdin.
    file: Option<PathBuf>,
    /// Graph given inline as a graph6 string.
    #[arg(long, conflicts_with_all = ["file", "family"])]
    g6: Option<String>,
    /// Graph from a family spec such as `barbell:4` or `wheel:5`.
    #[arg(long, conflicts_with = "file")]
    family: Option<String>,
    /// Use the complement of the input graph.
    #[arg(long)]
    complement: bool,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        let g = if let Some(s) = &self.g6 {
            parse_graph6(s)?
        } else if let Some(spec) = &self.family {
            spec.parse::<FamilySpec>()?.build_one()?
        } else {
            let text = read_input(self.file.as_ref())?;
            parse_graph(&text)?
        };
        Ok(if self.complement { g.complement() } else { g })
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Betti table, pdim, depth, reg, Hilbert data and structural checks.
    Invariants {
        #[command(flatten)]
        input: GraphInput,
        /// Field characteristic: 0 or a prime.
        #[arg(long, default_value = "0")]
        field: FieldSpec,
        #[arg(long)]
        json: bool,
        /// Cross-check the shortcut pdim against the Betti table.
        #[arg(long)]
        verify: bool,
    },
    /// Decide whether the graph is a (d1,...,dq)-tree and print the certificate.
    Recognize {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Run the max-process and print each step.
    Maxprocess {
        #[command(flatten)]
        input: GraphInput,
        /// `lowest`, `all`, or `forced:x3,x1` (labels or 1-based indices).
        #[arg(long, default_value = "lowest")]
        tie_break: String,
        #[arg(long)]
        json: bool,
    },
    /// Build graphs from a family spec.
    Generate {
        /// e.g. `barbell:4`, `gmr:3,2`, `dq-tree:3,3,2:all`.
        spec: String,
        /// `graph6` or `edges`.
        #[arg(long, default_value = "graph6")]
        format: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// pdim against maximum degree for complements of r-barbell graphs.
    Counterexample {
        #[arg(long, default_value_t = 3)]
        rmin: usize,
        #[arg(long, default_value_t = 6)]
        rmax: usize,
        #[arg(long, default_value = "0")]
        field: FieldSpec,
        #[arg(long)]
        json: bool,
    },
    /// Run a theorem suite over a corpus; exits nonzero on any violation.
    Scan {
        /// All graphs on 1..=N vertices up to isomorphism.
        #[arg(long, conflicts_with = "graph6_file", required_unless_present = "graph6_file")]
        n: Option<usize>,
        /// One graph6 string per line.
        #[arg(long)]
        graph6_file: Option<PathBuf>,
        #[arg(long)]
        suite: Suite,
        /// Only connected graphs.
        #[arg(long)]
        connected: bool,
        /// Worker threads; defaults to the number of cores.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value = "0")]
        field: FieldSpec,
        #[arg(long)]
        json: bool,
    },
    /// Homology and decomposition checks for a complex in facet-list format.
    Complex {
        /// One facet per line, labels separated by spaces; `-` reads stdin.
        file: Option<PathBuf>,
        #[arg(long, default_value = "0")]
        field: FieldSpec,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Invariants {
            input,
            field,
            json,
            verify,
        } => {
            let g = input.load()?;
            let report = invariant_report(&g, field, verify)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report.render_text());
            }
            Ok(if report.pdim_verified == Some(false) {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Recognize { input, json } => {
            let g = input.load()?;
            let cert = recognize_dq_tree(&g);
            if json {
                println!("{}", serde_json::to_string_pretty(&cert)?);
            } else {
                print!("{}", render_certificate(&g, &cert));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Maxprocess {
            input,
            tie_break,
            json,
        } => {
            let g = input.load()?;
            let traces = match tie_break.as_str() {
                "all" => max_process_all(&g),
                "lowest" => vec![max_process(&g, &TieBreak::Lowest)?],
                other => {
                    let Some(list) = other.strip_prefix("forced:") else {
                        bail!("unknown tie-break {other:?}; use lowest, all, or forced:<vertices>");
                    };
                    let forced = list
                        .split(',')
                        .map(|t| vertex_ref(&g, t.trim()))
                        .collect::<Result<Vec<_>>>()?;
                    vec![max_process(&g, &TieBreak::Forced(forced))?]
                }
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&traces)?);
            } else {
                for (k, t) in traces.iter().enumerate() {
                    if k > 0 {
                        println!();
                    }
                    print!("{}", render_trace(&g, t));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate {
            spec,
            format,
            output,
        } => {
            let graphs = spec.parse::<FamilySpec>()?.build()?;
            let text = match format.as_str() {
                "graph6" => graphs.iter().map(|g| to_graph6(g) + "\n").collect::<String>(),
                "edges" => graphs
                    .iter()
                    .map(to_edge_list)
                    .collect::<Vec<_>>()
                    .join("\n"),
                other => bail!("unknown format {other:?}; use graph6 or edges"),
            };
            match output {
                Some(p) => fs::write(&p, text).with_context(|| format!("cannot write {}", p.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Counterexample {
            rmin,
            rmax,
            field,
            json,
        } => {
            if rmin < 2 || rmax < rmin || 2 * rmax > 16 {
                bail!("need 2 <= rmin <= rmax <= 8");
            }
            let rows = (rmin..=rmax)
                .map(|r| counterexample_row(r, field))
                .collect::<Result<Vec<_>>>()?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rows)?);
            } else {
                println!("{:>3} {:>5} {:>7} {:>4} {:>6} {:>3} {:>8}", "r", "pdim", "maxdeg", "gap", "depth", "s", "h_{r-1}");
                for row in &rows {
                    println!(
                        "{:>3} {:>5} {:>7} {:>4} {:>6} {:>3} {:>8}",
                        row.r, row.pdim, row.max_degree, row.gap, row.depth, row.s, row.h_r_minus_1
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            n,
            graph6_file,
            suite,
            connected,
            jobs,
            field,
            json,
        } => {
            if let Some(j) = jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(j.max(1))
                    .build_global()
                    .context("cannot configure worker threads")?;
            }
            let mut graphs = match (n, graph6_file) {
                (Some(n), _) => corpus(n, connected)?,
                (None, Some(path)) => {
                    let text = fs::read_to_string(&path)
                        .with_context(|| format!("cannot read {}", path.display()))?;
                    text.lines()
                        .enumerate()
                        .filter(|(_, l)| !l.trim().is_empty())
                        .map(|(i, l)| {
                            parse_graph6(l.trim()).with_context(|| format!("line {}", i + 1))
                        })
                        .collect::<Result<Vec<_>>>()?
                }
                (None, None) => bail!("give --n or --graph6-file"),
            };
            if connected {
                graphs.retain(|g| g.is_connected());
            }
            let summary = run_suite(suite, &graphs, field)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&summary)?);
            } else {
                println!(
                    "suite {}: {} graphs, {} applicable, {} violations",
                    summary.suite,
                    summary.graphs,
                    summary.applicable,
                    summary.violations.len()
                );
                for v in &summary.violations {
                    println!("{}\t{}", v.graph6, v.detail);
                }
            }
            Ok(if summary.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Complex { file, field } => {
            let c = parse_facet_list(&read_input(file.as_ref())?)?;
            let h = complex_hilbert_data(&c);
            let homology = reduced_homology_ranks(&c, field);
            println!("facets        {}", c.format_facets().join(" "));
            println!("f-vector      {:?}", h.f.0);
            println!("h-vector      {:?}", h.h.0);
            println!("homology      {:?} (dimensions -1, 0, ...) over {field}", homology.0);
            let free: Vec<&str> = c.free_vertices().iter().map(|v| c.labels()[v].as_str()).collect();
            println!("free vertices {{{}}}", free.join(","));
            let show = |r: edgeideal::Result<edgeideal::recognition::DecompositionWitness>| match r {
                Ok(w) => w.holds().to_string(),
                Err(e) => format!("not checked ({e})"),
            };
            println!("vertex decomposable  {}", show(is_vertex_decomposable(&c)));
            println!("shellable            {}", show(is_shellable(&c)));
            println!("quasi-forest         {}", show(quasi_forest_leaf_order(&c)));
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// A vertex named by label, or by 1-based index.
fn vertex_ref(g: &Graph, token: &str) -> Result<usize> {
    if let Ok(v) = g.index_of(token) {
        return Ok(v);
    }
    match token.parse::<usize>() {
        Ok(i) if (1..=g.vertex_count()).contains(&i) => Ok(i - 1),
        _ => bail!("unknown vertex {token:?}"),
    }
}

fn render_certificate(g: &Graph, cert: &TreeCertificate) -> String {
    match cert {
        TreeCertificate::Accepted(w) => {
            let mut s = format!("accepted: ({:?})-tree\n", w.sequence());
            s = s.replace("([", "(").replace("])", ")");
            s.push_str(&format!("  F1 = {}\n", g.format_set(w.facets[0])));
            for (i, step) in w.glue.iter().enumerate() {
                s.push_str(&format!(
                    "  F{} = {}  adds {}, rest inside F{}\n",
                    i + 2,
                    g.format_set(w.facets[i + 1]),
                    g.label(step.vertex),
                    step.host + 1
                ));
            }
            s
        }
        TreeCertificate::Rejected(r) => format!("rejected: {}\n", rejection_text(r)),
    }
}

fn render_trace(g: &Graph, t: &MaxProcessTrace) -> String {
    let mut s = format!("{:>3} {:>6} {:>6}  residual\n", "i", "v_i", "deg");
    s.push_str(&format!("{:>3} {:>6} {:>6}  {}\n", 0, "-", "-", g.format_set(t.residuals[0])));
    for (i, &v) in t.chosen.iter().enumerate() {
        s.push_str(&format!(
            "{:>3} {:>6} {:>6}  {}\n",
            i + 1,
            g.label(v),
            t.degrees[i],
            g.format_set(t.residuals[i + 1])
        ));
    }
    let f: Vec<&str> = t.chosen.iter().map(|&v| g.label(v)).collect();
    s.push_str(&format!(
        "F = {{{}}}, maximal independent: {}\n",
        f.join(","),
        t.maximal
    ));
    s
}

#[derive(Serialize)]
struct CounterexampleRow {
    r: usize,
    pdim: usize,
    max_degree: usize,
    gap: i64,
    depth: usize,
    s: usize,
    h_r_minus_1: i128,
}

fn counterexample_row(r: usize, field: FieldSpec) -> Result<CounterexampleRow> {
    let g = named::barbell(r).complement();
    let table = betti_table(&g, field)?;
    let hilbert = hilbert_data(&g);
    let max_degree = g.max_degree().0;
    Ok(CounterexampleRow {
        r,
        pdim: table.pdim(),
        max_degree,
        gap: table.pdim() as i64 - max_degree as i64,
        depth: table.depth(),
        s: hilbert.s,
        h_r_minus_1: hilbert.h.0[r - 1],
    })
}
