//! `caygen` — analyze transposition sets and verify the structure of the
//! Cayley graphs they generate.
//!
//! Inputs are either edge-list files (`#` comments, a header `n m`, then
//! `m` lines `i j` with `1 <= i < j <= n`) or family URIs like
//! `family:path:5`. Exit codes: 0 success/agreement, 1 disagreement or
//! property failure, 2 usage/capacity, 3 I/O or parse error.

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use caygen::cayley;
use caygen::capacity;
use caygen::graph;
use caygen::tgraph::{self, TranspositionSet};
use caygen::verify::{self, ClaimId, SweepOptions, VerificationReport};
use caygen::Error;

/// Default cap on materialized Cayley-graph vertices for `analyze`
/// (5! = 120); raise it with `CAYGEN_MAX_VERTICES`.
const DEFAULT_MATERIALIZE_LIMIT: usize = 120;

#[derive(Parser)]
#[command(
    name = "caygen",
    version,
    about = "Cayley graphs of S_n generated by transposition sets: analysis and claim verification",
    after_help = "Inputs are edge-list files or family URIs (family:path:5, family:star:6, ...).\n\
                  The CAYGEN_MAX_VERTICES environment variable overrides the materialization\n\
                  and search capacity guards."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one transposition set: generation, edge-transitivity of
    /// T(S), and the fast Cayley-graph verdict
    Analyze {
        /// Edge-list file or family URI
        input: String,
        /// Also build the Cayley graph and report counts, bipartiteness,
        /// automorphism orders and connectivity (n! vertices; guarded)
        #[arg(long)]
        materialize: bool,
        /// Emit one JSON document instead of aligned text
        #[arg(long)]
        json: bool,
    },
    /// Run one claim's fast path against its brute-force oracle
    Verify {
        /// Claim: part_a, part_b, whitney_feng, restriction, stabilizer,
        /// arc_transitivity, connectivity or bipartite
        claim: String,
        /// Degree of the symmetric group
        #[arg(long)]
        n: usize,
        /// Restrict the run to these instances (repeatable; files or
        /// family URIs). part_a pairs the instances; default is a sweep
        /// over every connected class at the degree
        #[arg(long = "instance")]
        instances: Vec<String>,
        /// Emit one JSON document instead of one line per report
        #[arg(long)]
        json: bool,
        /// Opt in to the slow cases: degree-5 connectivity max-flow and
        /// degree-6/7 sweeps
        #[arg(long)]
        allow_slow: bool,
    },
    /// Print one representative edge set per isomorphism class of
    /// connected transposition graphs at the degree
    Enumerate {
        n: usize,
        /// Opt in to degrees 6 and 7 (2^15 and 2^21 subsets)
        #[arg(long)]
        allow_slow: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze {
            input,
            materialize,
            json,
        } => cmd_analyze(&input, materialize, json),
        Command::Verify {
            claim,
            n,
            instances,
            json,
            allow_slow,
        } => cmd_verify(&claim, n, &instances, json, allow_slow),
        Command::Enumerate { n, allow_slow } => cmd_enumerate(n, allow_slow),
    };
    ExitCode::from(code)
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::InvalidFamily(_)
        | Error::InvalidGraph(_)
        | Error::InvalidPermutation(_) => 3,
        Error::Capacity { .. }
        | Error::UnsupportedDegree { .. }
        | Error::Precondition(_)
        | Error::NotGenerating(_)
        | Error::DegreeMismatch { .. }
        | Error::RankOutOfRange { .. } => 2,
        Error::Inconsistency(_) => 1,
    }
}

fn fail(e: &Error) -> u8 {
    eprintln!("error: {e}");
    exit_code_for(e)
}

/// Loads an input from a family URI or an edge-list file.
fn load_input(source: &str) -> Result<TranspositionSet, u8> {
    if source.starts_with("family:") {
        return tgraph::from_family_uri(source).map_err(|e| fail(&e));
    }
    let text = fs::read_to_string(source).map_err(|e| {
        eprintln!("error: cannot read {source}: {e}");
        3u8
    })?;
    TranspositionSet::from_edge_list(&text).map_err(|e| fail(&e))
}

fn cmd_analyze(input: &str, materialize: bool, json_output: bool) -> u8 {
    let s = match load_input(input) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let n = s.n();
    let generating = s.is_generating();

    if !generating {
        if json_output {
            let doc = json!({
                "input": input,
                "n": n,
                "s": s.to_compact_string(),
                "num_generators": s.len(),
                "generating": false,
                "note": "set does not generate S_n (transposition graph is disconnected); analysis stops",
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        } else {
            println!("{}", analyze_header(input, &s));
            println!("generating:              no");
            println!("note: the transposition graph is disconnected, so S does not generate S_n;");
            println!("      the Cayley graph would be a disjoint union of cosets. Analysis stops.");
        }
        return 0;
    }

    let t_edge_transitive = match graph::is_edge_transitive(&s.to_graph()) {
        Ok(v) => v,
        Err(e) => return fail(&e),
    };
    let verdict = match cayley::fast_is_edge_transitive(&s) {
        Ok(v) => v,
        Err(e) => return fail(&e),
    };

    let mut materialized = None;
    if materialize {
        match materialize_stats(&s) {
            Ok(stats) => materialized = Some(stats),
            Err(e) => return fail(&e),
        }
    }

    if json_output {
        let mut doc = json!({
            "input": input,
            "n": n,
            "s": s.to_compact_string(),
            "num_generators": s.len(),
            "generating": true,
            "t_edge_transitive": t_edge_transitive,
            "cayley_edge_transitive": verdict.edge_transitive,
            "theorem_range": verdict.theorem_range,
        });
        if let Some(stats) = materialized {
            doc["materialized"] = stats.to_json();
        }
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        println!("{}", analyze_header(input, &s));
        println!("generating:              yes");
        println!(
            "T(S) edge-transitive:    {}",
            yes_no(t_edge_transitive)
        );
        let range_note = if verdict.theorem_range {
            ""
        } else {
            "  (n < 5: outside the stated range, exploratory)"
        };
        println!(
            "Cayley edge-transitive:  {}{range_note}",
            yes_no(verdict.edge_transitive)
        );
        if let Some(stats) = materialized {
            print!("{}", stats.to_text());
        }
    }
    0
}

fn analyze_header(input: &str, s: &TranspositionSet) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input:                   {input}");
    let _ = writeln!(out, "n:                       {}", s.n());
    let _ = writeln!(out, "S:                       {{{}}}", s.to_compact_string());
    let _ = write!(out, "|S|:                     {}", s.len());
    out
}

struct MaterializedStats {
    vertices: usize,
    edges: usize,
    bipartite: bool,
    aut_order: Option<usize>,
    g_e_order: Option<usize>,
    l_e_order: Option<usize>,
    connectivity: Option<usize>,
}

impl MaterializedStats {
    fn to_json(&self) -> serde_json::Value {
        let mut doc = json!({
            "vertices": self.vertices,
            "edges": self.edges,
            "bipartite": self.bipartite,
        });
        if let (Some(aut), Some(g_e), Some(l_e), Some(kappa)) = (
            self.aut_order,
            self.g_e_order,
            self.l_e_order,
            self.connectivity,
        ) {
            doc["aut_order"] = json!(aut);
            doc["g_e_order"] = json!(g_e);
            doc["l_e_order"] = json!(l_e);
            doc["connectivity"] = json!(kappa);
        }
        doc
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "cayley vertices:         {}", self.vertices);
        let _ = writeln!(out, "cayley edges:            {}", self.edges);
        let _ = writeln!(out, "bipartite:               {}", yes_no(self.bipartite));
        match (self.aut_order, self.g_e_order, self.l_e_order, self.connectivity) {
            (Some(aut), Some(g_e), Some(l_e), Some(kappa)) => {
                let _ = writeln!(out, "|Aut|:                   {aut}");
                let _ = writeln!(out, "|G_e|:                   {g_e}");
                let _ = writeln!(out, "|L_e|:                   {l_e}");
                let _ = writeln!(out, "kappa:                   {kappa}");
            }
            _ => {
                let _ = writeln!(
                    out,
                    "(automorphism and connectivity stats need n <= 5)"
                );
            }
        }
        out
    }
}

fn materialize_stats(s: &TranspositionSet) -> Result<MaterializedStats, Error> {
    let n = s.n();
    let limit = capacity::vertex_limit(DEFAULT_MATERIALIZE_LIMIT);
    let vertices = if n <= caygen::perm::MAX_RANK_DEGREE {
        caygen::perm::factorial(n)
    } else {
        usize::MAX
    };
    if vertices > limit {
        return Err(Error::Capacity {
            task: "materializing the Cayley graph for analysis".into(),
            required: vertices,
            limit,
        });
    }
    let cg = cayley::build(s)?;
    let bipartite = graph::is_bipartite(cg.graph()).is_some();
    let mut stats = MaterializedStats {
        vertices: cg.graph().num_vertices(),
        edges: cg.graph().num_edges(),
        bipartite,
        aut_order: None,
        g_e_order: None,
        l_e_order: None,
        connectivity: None,
    };
    if n <= cayley::MAX_STABILIZER_DEGREE {
        let decomposition = cayley::stabilizer_decomposition(&cg)?;
        stats.aut_order = Some(decomposition.aut.order());
        stats.g_e_order = Some(decomposition.g_e.order());
        stats.l_e_order = Some(decomposition.l_e.order());
        stats.connectivity = Some(graph::vertex_connectivity(cg.graph()));
    }
    Ok(stats)
}

fn cmd_verify(claim: &str, n: usize, instances: &[String], json_output: bool, allow_slow: bool) -> u8 {
    let claim: ClaimId = match claim.parse() {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    let options = SweepOptions { allow_slow };

    let reports: Result<Vec<VerificationReport>, Error> = if instances.is_empty() {
        verify::sweep(claim, n, options)
    } else {
        let mut sets = Vec::new();
        for source in instances {
            match load_input(source) {
                Ok(s) => {
                    if s.n() != n {
                        eprintln!(
                            "error: instance {source} has degree {} but --n is {n}",
                            s.n()
                        );
                        return 2;
                    }
                    sets.push(s);
                }
                Err(code) => return code,
            }
        }
        run_instances(claim, &sets, options)
    };
    let reports = match reports {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };

    let all_agree = reports.iter().all(|r| r.agree);
    if json_output {
        let doc = json!({
            "claim": claim.as_str(),
            "n": n,
            "all_agree": all_agree,
            "reports": reports,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        for r in &reports {
            println!("{}", report_line(r));
        }
        println!(
            "{}: {} of {} instances agree",
            claim,
            reports.iter().filter(|r| r.agree).count(),
            reports.len()
        );
    }
    if all_agree {
        0
    } else {
        for r in reports.iter().filter(|r| !r.agree) {
            eprintln!(
                "disagreement: {}",
                serde_json::to_string(r).expect("serializable")
            );
        }
        1
    }
}

fn run_instances(
    claim: ClaimId,
    sets: &[TranspositionSet],
    options: SweepOptions,
) -> Result<Vec<VerificationReport>, Error> {
    let mut reports = Vec::new();
    if claim == ClaimId::PartA {
        for (i, a) in sets.iter().enumerate() {
            for b in &sets[i..] {
                reports.push(verify::verify_part_a(a, b)?);
            }
        }
    } else {
        for s in sets {
            reports.push(verify::run_single(claim, s, options)?);
        }
    }
    Ok(reports)
}

fn report_line(r: &VerificationReport) -> String {
    let mut line = format!("{} n={} S={{{}}}", r.claim, r.n, r.s);
    if let Some(s2) = &r.s2 {
        let _ = write!(line, " S'={{{s2}}}");
    }
    let _ = write!(line, " fast={} oracle={}", compact(&r.fast), compact(&r.oracle));
    if let Some(sigma) = r.sigma_certified {
        let _ = write!(line, " sigma={}", if sigma { "certified" } else { "FAILED" });
    }
    let _ = write!(line, " agree={}", yes_no(r.agree));
    if r.exploratory {
        let _ = write!(line, " [exploratory: n < 5]");
    }
    line
}

fn compact(v: &serde_json::Value) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

fn cmd_enumerate(n: usize, allow_slow: bool) -> u8 {
    if n >= 6 && !allow_slow {
        return fail(&Error::Capacity {
            task: "class enumeration (pass --allow-slow for degrees 6 and 7)".into(),
            required: n,
            limit: 5,
        });
    }
    match tgraph::enumerate_connected(n) {
        Ok(classes) => {
            for class in classes {
                println!("{}", class.to_compact_string());
            }
            0
        }
        Err(e) => fail(&e),
    }
}
