use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use isoregion::{
    canonical_form, corpus_property_suite, enumerate_projections, independent_region_number,
    recurrence_check, torus_igen_closed_form, torus_projection, verify::paper_suite,
    wd_exception_search_limited, welded_bounds, CensusConfig, LinkProjection, Orientation,
    OrientedDiagram, RegionGraph, DEFAULT_SEARCH_LIMIT,
};

#[derive(Parser)]
#[command(
    name = "isoregion",
    version,
    about = "Region invariants of link projections: isolated sets, I-generating functions, warping degrees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Inline PD code, e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
    #[arg(long)]
    pd: Option<String>,
    /// Read the PD code from a file
    #[arg(long)]
    file: Option<PathBuf>,
    /// Built-in standard projection T(2,N)
    #[arg(long, value_name = "N")]
    torus: Option<usize>,
    /// Built-in zero-crossing circle
    #[arg(long)]
    trivial: bool,
}

impl InputArgs {
    fn load(&self) -> Result<LinkProjection, String> {
        if let Some(pd) = &self.pd {
            return LinkProjection::parse(pd).map_err(|e| e.to_string());
        }
        if let Some(path) = &self.file {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            return LinkProjection::parse(&text).map_err(|e| e.to_string());
        }
        if let Some(n) = self.torus {
            return torus_projection(n).map_err(|e| e.to_string());
        }
        Ok(LinkProjection::trivial_circle())
    }
}

#[derive(Subcommand)]
enum Command {
    /// List regions with gon numbers, boundary crossings, and the coloring
    Regions {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Region-connect graph (or its complement) as a sorted edge list
    Graph {
        #[command(flatten)]
        input: InputArgs,
        /// Print the region-disconnect graph instead
        #[arg(long)]
        complement: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Isolate-region number I(L)
    Isolate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Independent region number IR(L)
    Ir {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// I-generating function, optionally listing the isolated sets
    Igen {
        #[command(flatten)]
        input: InputArgs,
        /// List the isolated sets themselves
        #[arg(long)]
        sets: bool,
        /// Restrict the listing to sets of this size
        #[arg(long, value_name = "K")]
        size: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Warping-degree labeling and statistics of a knot diagram
    ///
    /// The input PD is read with the diagram convention: the strand
    /// entering at the first listed edge passes under. With --as-shadow the
    /// over/under data is discarded and the alternating diagram is used.
    Warping {
        #[command(flatten)]
        input: InputArgs,
        /// Ignore crossing data and take the alternating diagram
        #[arg(long)]
        as_shadow: bool,
        /// Reverse the strand orientation
        #[arg(long)]
        reverse: bool,
        /// Search all 2^c diagrams over the shadow for one with
        /// d_bar > d(P); honors ISOREGION_MAX_SEARCH
        #[arg(long)]
        exception_search: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Upper bounds for the welded unknotting number of a diagram
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        /// Ignore crossing data and take the alternating diagram
        #[arg(long)]
        as_shadow: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Standard torus projections T(2,n) and their I-generating functions
    Torus {
        #[arg(long)]
        n: usize,
        /// Closed-form coefficients (default)
        #[arg(long, conflicts_with_all = ["enumerate", "check_recurrence"])]
        closed_form: bool,
        /// Enumerate isolated sets from the region graph instead
        #[arg(long, conflicts_with = "check_recurrence")]
        enumerate: bool,
        /// Check f_n - f_(n-1) - x f_(n-2) = -2x^2
        #[arg(long)]
        check_recurrence: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Enumerate small projections and print one JSON record per line
    Census {
        #[arg(long, value_name = "N", default_value_t = 4)]
        max_c: usize,
        /// One representative per isomorphism class
        #[arg(long)]
        dedup: bool,
        /// Single-strand shadows only
        #[arg(long)]
        knots_only: bool,
        /// Treat mirror images as distinct under --dedup
        #[arg(long)]
        keep_mirrors: bool,
        /// Write records here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite; exits nonzero on any failed check
    Verify {
        /// Run the full suite (default and only mode)
        #[arg(long, default_value_t = true)]
        paper_suite: bool,
        #[arg(long, value_name = "N", default_value_t = 4)]
        max_c: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn search_limit() -> usize {
    std::env::var("ISOREGION_MAX_SEARCH")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_SEARCH_LIMIT)
}

fn diagram_from(input: &InputArgs, as_shadow: bool) -> Result<OrientedDiagram, String> {
    let shadow = input.load()?;
    // builtin families carry no crossing data; fall back to alternating
    let use_alternating = as_shadow || (input.pd.is_none() && input.file.is_none());
    if use_alternating {
        OrientedDiagram::alternating(&shadow).map_err(|e| e.to_string())
    } else {
        let c = shadow.crossing_count();
        OrientedDiagram::new(shadow, vec![1; c], Orientation::Forward).map_err(|e| e.to_string())
    }
}

fn run() -> Result<i32, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Regions { input, format } => {
            let l = input.load()?;
            let rs = l.regions().map_err(|e| e.to_string())?;
            let colors = l.checkerboard().map_err(|e| e.to_string())?;
            match format {
                Format::Json => {
                    let value = serde_json::json!({
                        "pd": l.to_pd_string(),
                        "validation": l.validate(),
                        "regions": rs.regions,
                        "gon_census": rs.gon_census(),
                        "checkerboard": colors,
                    });
                    println!("{value}");
                }
                Format::Text => {
                    println!("{l}");
                    let report = l.validate();
                    println!(
                        "crossings {}, regions {}, connected {}, reducible {:?}",
                        report.crossing_count, report.face_count, report.connected,
                        report.reducible_crossings
                    );
                    for r in rs.iter() {
                        let corners: Vec<String> =
                            r.corners.iter().map(|d| d.to_string()).collect();
                        println!(
                            "region {} [{:?}]: {}-gon, crossings {:?}, corners {}",
                            r.id, colors[r.id], r.gon, r.boundary_crossings,
                            corners.join(" ")
                        );
                    }
                    let census = rs.gon_census();
                    let pretty: Vec<String> =
                        census.counts.iter().map(|(k, c)| format!("{c} {k}-gon(s)")).collect();
                    println!("gon census: {}", pretty.join(", "));
                }
            }
            Ok(0)
        }
        Command::Graph { input, complement, format } => {
            let l = input.load()?;
            let mut g = RegionGraph::from_projection(&l).map_err(|e| e.to_string())?;
            if complement {
                g = g.complement();
            }
            match format {
                Format::Json => println!("{}", serde_json::to_string(&g).unwrap()),
                Format::Text => {
                    println!("n = {}", g.vertex_count());
                    let edges: Vec<String> =
                        g.edges().iter().map(|(u, v)| format!("({u},{v})")).collect();
                    println!("edges: {}", edges.join(" "));
                }
            }
            Ok(0)
        }
        Command::Isolate { input, format } => {
            let l = input.load()?;
            let g = RegionGraph::from_projection(&l).map_err(|e| e.to_string())?;
            let isolate = g.isolate_number();
            match format {
                Format::Json => println!("{}", serde_json::json!({ "isolate_number": isolate })),
                Format::Text => println!("{isolate}"),
            }
            Ok(0)
        }
        Command::Ir { input, format } => {
            let l = input.load()?;
            let ir = independent_region_number(&l).map_err(|e| e.to_string())?;
            match format {
                Format::Json => {
                    println!("{}", serde_json::json!({ "independent_region_number": ir }))
                }
                Format::Text => println!("{ir}"),
            }
            Ok(0)
        }
        Command::Igen { input, sets, size, format } => {
            let l = input.load()?;
            let g = RegionGraph::from_projection(&l).map_err(|e| e.to_string())?;
            let igen = g.igen_polynomial();
            let listed = if sets || size.is_some() {
                Some(g.list_isolated_sets(size))
            } else {
                None
            };
            match format {
                Format::Json => {
                    if let Some(listed) = listed {
                        println!(
                            "{}",
                            serde_json::json!({
                                "coeffs": igen.coeffs(),
                                "sets": listed,
                            })
                        );
                    } else {
                        println!("{}", serde_json::to_string(&igen).unwrap());
                    }
                }
                Format::Text => {
                    println!("{igen}");
                    if let Some(listed) = listed {
                        for s in listed {
                            println!("{:?}", s.regions);
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::Warping { input, as_shadow, reverse, exception_search, format } => {
            if exception_search {
                let shadow = input.load()?;
                let found = wd_exception_search_limited(&shadow, search_limit())
                    .map_err(|e| e.to_string())?;
                match format {
                    Format::Json => {
                        let value = match &found {
                            Some(d) => serde_json::json!({
                                "found": true,
                                "over_pair": d.over_pair(),
                                "stats": d.warping_stats(),
                            }),
                            None => serde_json::json!({ "found": false }),
                        };
                        println!("{value}");
                    }
                    Format::Text => match &found {
                        Some(d) => println!(
                            "exception: over_pair {:?}, d_bar {}",
                            d.over_pair(),
                            d.warping_stats().d_bar
                        ),
                        None => println!("no exception: d_bar(D) <= d(P) for all 2^c diagrams"),
                    },
                }
                return Ok(0);
            }
            let mut d = diagram_from(&input, as_shadow)?;
            if reverse {
                d = d.reversed();
            }
            let labeling = d.warping_labeling();
            let stats = d.warping_stats();
            match format {
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::json!({ "stats": stats, "labeling": labeling })
                    );
                }
                Format::Text => {
                    println!(
                        "d {}, d_rev {}, d_bar {}, span {}, max_label {}, c {}",
                        stats.d, stats.d_rev, stats.d_bar, stats.span, stats.max_label, stats.c
                    );
                    println!("labels along strand: {:?}", labeling.along_strand());
                }
            }
            Ok(0)
        }
        Command::Bounds { input, as_shadow, format } => {
            let d = diagram_from(&input, as_shadow)?;
            let bounds = welded_bounds(&d).map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!("{}", serde_json::to_string(&bounds).unwrap()),
                Format::Text => {
                    println!("u_w <= {}", bounds.best);
                    println!("  via d_bar: {}", bounds.bound_dbar);
                    match bounds.bound_ci {
                        Some(ci) => println!(
                            "  via c - I: {ci} (almost alternating: {}, small irreducible: {})",
                            bounds.via_almost_alternating, bounds.via_small_irreducible
                        ),
                        None => println!("  via c - I: not applicable"),
                    }
                }
            }
            Ok(0)
        }
        Command::Torus { n, closed_form: _, enumerate, check_recurrence, format } => {
            if check_recurrence {
                let check = recurrence_check(n).map_err(|e| e.to_string())?;
                match format {
                    Format::Json => println!("{}", serde_json::to_string(&check).unwrap()),
                    Format::Text => println!(
                        "n={}: residual {:?} {}",
                        check.n,
                        check.residual,
                        if check.ok { "ok" } else { "MISMATCH" }
                    ),
                }
                return Ok(0);
            }
            let igen = if enumerate {
                let t = torus_projection(n).map_err(|e| e.to_string())?;
                RegionGraph::from_projection(&t)
                    .map_err(|e| e.to_string())?
                    .igen_polynomial()
            } else {
                torus_igen_closed_form(n).map_err(|e| e.to_string())?
            };
            match format {
                Format::Json => println!("{}", serde_json::to_string(&igen).unwrap()),
                Format::Text => println!("{igen}"),
            }
            Ok(0)
        }
        Command::Census { max_c, dedup, knots_only, keep_mirrors, out } => {
            let mut cfg = CensusConfig::new(max_c).dedup(dedup).knots_only(knots_only);
            cfg.distinguish_mirrors = keep_mirrors;
            if !dedup {
                let members = enumerate_projections(&cfg).map_err(|e| e.to_string())?;
                let mut sink = make_sink(&out)?;
                for l in &members {
                    let line = serde_json::json!({
                        "pd": l.to_pd_string(),
                        "c": l.crossing_count(),
                        "canonical": canonical_form(l, !keep_mirrors).map_err(|e| e.to_string())?,
                    });
                    writeln!(sink, "{line}").map_err(|e| e.to_string())?;
                }
                eprintln!("{} projections (c <= {max_c})", members.len());
                return Ok(0);
            }
            let report = corpus_property_suite(max_c).map_err(|e| e.to_string())?;
            let mut sink = make_sink(&out)?;
            for record in &report.records {
                writeln!(sink, "{}", serde_json::to_string(record).unwrap())
                    .map_err(|e| e.to_string())?;
            }
            eprintln!(
                "{} projections, {} checks passed, {} failed",
                report.members, report.checks_passed, report.checks_failed
            );
            Ok(if report.checks_failed == 0 { 0 } else { 1 })
        }
        Command::Verify { paper_suite: _, max_c, format } => {
            let results = paper_suite(max_c).map_err(|e| e.to_string())?;
            let failed = results.iter().filter(|r| !r.passed).count();
            match format {
                Format::Json => println!("{}", serde_json::to_string(&results).unwrap()),
                Format::Text => {
                    for r in &results {
                        println!(
                            "{} {:<38} {}",
                            if r.passed { "PASS" } else { "FAIL" },
                            r.name,
                            r.detail
                        );
                    }
                    println!("{} checks, {} failed", results.len(), failed);
                }
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn make_sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, String> {
    match out {
        Some(path) => {
            let file = fs::File::create(path)
                .map_err(|e| format!("cannot create {}: {e}", path.display()))?;
            Ok(Box::new(file))
        }
        None => Ok(Box::new(std::io::stdout())),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(0) => ExitCode::SUCCESS,
        Ok(code) => ExitCode::from(code as u8),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
