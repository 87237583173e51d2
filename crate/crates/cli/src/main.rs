use atn_core::coloring::{is_k_choosable, lcc_check};
use atn_core::efl::{build_graph, generate_all, theorem4_certify, EflConfig};
use atn_core::graph::{
    class2_augment, disjoint_double, line_graph, named, parse_edge_list, regular_embed_class1,
    roles_to_json, subdivision_graph, total_graph, VertexRole,
};
use atn_core::orient::atn_from_orientations;
use atn_core::orient::{eulerian_census, Orientation};
use atn_core::poly::atn_from_polynomial;
use atn_core::verify::{run_campaign, Campaign, CampaignConfig, RunOptions, Summary};
use atn_core::{Error, Exec, Graph, Limits};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_CLAIM: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_GUARD: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

/// Alon-Tarsi numbers of small graphs, with certificates.
///
/// Graph arguments are edge-list files ("n m" header, then one "u v" per
/// line). A name from the built-in catalog (K4, C5, K3,3, Petersen, ...) is
/// accepted in place of a path that does not exist.
#[derive(Parser, Debug)]
#[command(name = "atn", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Live-term bound for polynomial expansion.
    #[arg(long, global = true)]
    max_terms: Option<usize>,
    /// Edge bound for orientation enumeration and census.
    #[arg(long, global = true)]
    max_edges: Option<usize>,
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for random-point evaluation.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a derived graph and write it as an edge list.
    Construct {
        #[arg(value_enum)]
        kind: Kind,
        /// Input graph, or an EFL config JSON for `efl`.
        input: String,
        /// Output edge-list path; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the vertex role map as JSON.
        #[arg(long)]
        roles: Option<PathBuf>,
        /// Write a DOT rendering.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Alon-Tarsi number with a certificate.
    Atn {
        graph: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Even and odd Eulerian subdigraph counts of one orientation.
    Census {
        graph: String,
        /// Orientation bits as hex, edge 0 most significant; 1 reverses
        /// `u -> v` for `u < v`. Defaults to all edges ascending.
        #[arg(long)]
        orientation: Option<String>,
    },
    /// k-choosability with a counterexample; without `-k`, chi, ch and ATN of
    /// the line graph.
    Choosable {
        graph: String,
        #[arg(short)]
        k: Option<usize>,
    },
    /// Run a verification campaign, one report line per instance.
    Verify {
        /// Campaign name, or `all`.
        campaign: String,
        /// Campaign family file (TOML); the bundled families by default.
        #[arg(long)]
        campaigns: Option<PathBuf>,
    },
    /// EFL configurations.
    Efl {
        #[command(subcommand)]
        command: EflCommand,
    },
}

#[derive(Subcommand, Debug)]
enum EflCommand {
    /// All configurations with k cliques of order k, up to isomorphism.
    Generate {
        #[arg(short)]
        k: usize,
    },
    /// Certify one config file, or the generated catalog with `-k`.
    Certify {
        config: Option<PathBuf>,
        #[arg(short, conflicts_with = "config")]
        k: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Line,
    Subdivision,
    Total,
    Double,
    Embed,
    Augment,
    Efl,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Poly,
    Orient,
    Both,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_guard() { EXIT_GUARD } else { EXIT_INPUT };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message,
    }
}

type CliResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    let g = &cli.global;
    let mut limits = Limits::default();
    if let Some(t) = g.max_terms {
        limits.max_terms = t;
    }
    if let Some(e) = g.max_edges {
        limits.max_census_edges = e;
    }
    if let Some(jobs) = g.jobs {
        if jobs == 0 {
            return Err(input_error("--jobs must be positive".into()));
        }
        if jobs == 1 {
            limits.exec = Exec::Sequential;
        }
        #[cfg(feature = "parallel")]
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| input_error(e.to_string()))?;
    }
    let out = Out { format: g.format };
    match cli.command {
        Command::Construct {
            kind,
            input,
            output,
            roles,
            dot,
        } => construct(kind, &input, output, roles, dot, &limits),
        Command::Atn { graph, method } => atn(&read_graph(&graph)?, method, &limits, out),
        Command::Census { graph, orientation } => {
            census(read_graph(&graph)?, orientation.as_deref(), &limits, out)
        }
        Command::Choosable { graph, k } => choosable(&read_graph(&graph)?, k, &limits, out),
        Command::Verify {
            campaign,
            campaigns,
        } => {
            let opts = RunOptions {
                limits,
                seed: g.seed,
            };
            verify(&campaign, campaigns.as_deref(), &opts, out)
        }
        Command::Efl { command } => match command {
            EflCommand::Generate { k } => {
                for cfg in generate_all(k)? {
                    println!("{}", cfg.to_json());
                }
                Ok(0)
            }
            EflCommand::Certify { config, k } => {
                let configs = match (config, k) {
                    (Some(path), _) => vec![EflConfig::from_json(&read_text(&path)?)?],
                    (None, Some(k)) => generate_all(k)?,
                    (None, None) => {
                        return Err(input_error("efl certify needs a config file or -k".into()))
                    }
                };
                efl_certify(&configs, &limits, out)
            }
        },
    }
}

#[derive(Clone, Copy)]
struct Out {
    format: Format,
}

impl Out {
    fn emit(self, value: &Value, text: impl FnOnce() -> String) {
        match self.format {
            Format::Json => println!("{value}"),
            Format::Text => println!("{}", text()),
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn read_graph(arg: &str) -> Result<Graph, Failure> {
    let path = Path::new(arg);
    if path.exists() {
        Ok(parse_edge_list(&read_text(path)?)?)
    } else {
        named(arg).map_err(|_| input_error(format!("{arg}: no such file or catalog graph")))
    }
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| input_error(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn construct(
    kind: Kind,
    input: &str,
    output: Option<PathBuf>,
    roles_path: Option<PathBuf>,
    dot: Option<PathBuf>,
    limits: &Limits,
) -> CliResult {
    let (graph, roles): (Graph, Option<Value>) = match kind {
        Kind::Efl => {
            let cfg = EflConfig::from_json(&read_text(Path::new(input))?)?;
            (build_graph(&cfg)?, None)
        }
        _ => {
            let g = read_graph(input)?;
            match kind {
                Kind::Line => {
                    let l = line_graph(&g);
                    let roles: Vec<VertexRole> = g
                        .edges()
                        .iter()
                        .map(|&(u, v)| VertexRole::EdgeVertex(u, v))
                        .collect();
                    (l.graph, Some(roles_to_json(&roles)))
                }
                Kind::Subdivision => {
                    let (s, r) = subdivision_graph(&g);
                    (s, Some(roles_to_json(&r)))
                }
                Kind::Total => {
                    let (t, r) = total_graph(&g);
                    (t, Some(roles_to_json(&r)))
                }
                Kind::Double => (disjoint_double(&g), None),
                Kind::Embed => {
                    let e = regular_embed_class1(&g, limits)?;
                    let map = json!({"copies": e.copies, "map": e.map});
                    (e.host, Some(map))
                }
                Kind::Augment => {
                    let (a, at) = class2_augment(&g, limits)?;
                    (a, Some(json!({"attachedAt": at, "newVertex": g.n()})))
                }
                Kind::Efl => unreachable!(),
            }
        }
    };
    write_or_print(output.as_deref(), &graph.to_edge_list())?;
    if let Some(p) = roles_path {
        let Some(r) = roles else {
            return Err(input_error("this construction has no role map".into()));
        };
        write_or_print(Some(&p), &format!("{r}\n"))?;
    }
    if let Some(p) = dot {
        write_or_print(Some(&p), &graph.to_dot())?;
    }
    Ok(0)
}

fn atn(g: &Graph, method: Method, limits: &Limits, out: Out) -> CliResult {
    let poly = match method {
        Method::Poly | Method::Both => Some(atn_from_polynomial(g, limits)?),
        Method::Orient => None,
    };
    let orient = match method {
        Method::Orient | Method::Both => Some(atn_from_orientations(g, limits)?),
        Method::Poly => None,
    };
    let (value, code) = match (&poly, &orient) {
        (Some(p), Some(o)) => {
            let agree = p.atn == o.atn;
            let v = json!({
                "atn": p.atn,
                "atnPoly": p.atn,
                "atnOrient": o.atn,
                "agree": agree,
                "certificates": {"poly": p.to_json(), "orient": o.to_json()},
            });
            (v, if agree { 0 } else { EXIT_MISMATCH })
        }
        (Some(c), None) | (None, Some(c)) => (json!({"atn": c.atn, "certificate": c.to_json()}), 0),
        (None, None) => unreachable!(),
    };
    out.emit(&value, || {
        let mut s = format!("ATN = {}", value["atn"]);
        if code == EXIT_MISMATCH {
            s = format!(
                "MISMATCH poly = {} orient = {}",
                value["atnPoly"], value["atnOrient"]
            );
        }
        s
    });
    if code == EXIT_MISMATCH {
        eprintln!("error: engines disagree");
    }
    Ok(code)
}

fn census(g: Graph, hex: Option<&str>, limits: &Limits, out: Out) -> CliResult {
    let d = match hex {
        Some(h) => Orientation::from_hex(g, h)?,
        None => Orientation::ascending(g),
    };
    let c = eulerian_census(&d, limits)?;
    let mut value = c.to_json(d.max_outdegree());
    value["orientation"] = json!(d.to_hex());
    out.emit(&value, || {
        format!(
            "even = {} odd = {} maxOutdegree = {} alonTarsi = {}",
            c.even,
            c.odd,
            d.max_outdegree(),
            c.is_alon_tarsi()
        )
    });
    Ok(0)
}

fn choosable(g: &Graph, k: Option<usize>, limits: &Limits, out: Out) -> CliResult {
    let Some(k) = k else {
        let rep = lcc_check(g, limits)?;
        let value = rep.to_json(g);
        out.emit(&value, || {
            format!(
                "chi = {} ch = {} atn = {} maxDegree = {}",
                rep.chi, rep.ch, rep.atn, rep.max_degree
            )
        });
        return Ok(0);
    };
    let c = is_k_choosable(g, k, limits)?;
    let lists = c.counterexample.as_ref().map(|a| a.lists.clone());
    let value = json!({"k": k, "choosable": c.choosable, "counterexample": lists});
    out.emit(&value, || match &lists {
        None => format!("{k}-choosable"),
        Some(l) => format!("not {k}-choosable, lists {l:?}"),
    });
    Ok(0)
}

fn verify(name: &str, file: Option<&Path>, opts: &RunOptions, out: Out) -> CliResult {
    let config = match file {
        Some(p) => CampaignConfig::from_toml(&read_text(p)?)?,
        None => CampaignConfig::default(),
    };
    let campaigns: Vec<Campaign> = if name == "all" {
        Campaign::ALL.to_vec()
    } else {
        vec![name.parse()?]
    };
    let mut reports = Vec::new();
    for c in campaigns {
        let r = run_campaign(c, &config, opts)?;
        for rep in &r {
            match out.format {
                Format::Json => println!("{}", rep.to_json_line()),
                Format::Text => println!("{}", rep.to_text_line()),
            }
        }
        reports.extend(r);
    }
    let s = Summary::of(&reports);
    eprintln!(
        "{} instances: {} pass, {} fail, {} skip, {} flag",
        s.instances, s.pass, s.fail, s.skip, s.flag
    );
    Ok(if s.mismatches > 0 {
        EXIT_MISMATCH
    } else if s.fail > 0 {
        EXIT_CLAIM
    } else {
        0
    })
}

fn efl_certify(configs: &[EflConfig], limits: &Limits, out: Out) -> CliResult {
    let mut code = 0;
    for cfg in configs {
        let rep = theorem4_certify(cfg, limits)?;
        let value = rep.to_json();
        out.emit(&value, || {
            format!(
                "{} atn = {} caseA = {} caseB = {} holds = {}",
                cfg.to_json(),
                rep.atn(),
                rep.hypotheses.case_a,
                rep.hypotheses.case_b,
                rep.holds()
            )
        });
        if !rep.engines_agree() {
            code = EXIT_MISMATCH;
        } else if rep.hypotheses.either() && !rep.holds() && code == 0 {
            code = EXIT_CLAIM;
        }
    }
    Ok(code)
}
