//! `circdist` — command-line front end over the library.
//!
//! One JSON document per invocation on stdout, diagnostics on stderr.
//! Exit codes: 0 success (and "verified true"), 1 verified false with a
//! witness, 2 validation error, 3 internal inconsistency.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use circdist::json::GraphInput;
use circdist::{
    break_labeling, build_connected_family, build_disconnected_family, certify_connected_plan,
    cmp_distinguishing_formula, dot, enumerate_automorphisms, exact_distinguishing_number_opts,
    explicit_labeling, is_automorphism, minimal_common_order, multipartite_distinguishing_formula,
    preserving_automorphism, random_labeling, CirculantSpec, CmpSpec, DisconnectedMember, Graph,
    Labeling, MultipartiteShape, OracleOptions, Permutation, DEFAULT_AUT_CAP, DEFAULT_SEARCH_CAP,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Environment override for the automorphism/search caps.
const CAP_ENV: &str = "CIRCDIST_CAP";

#[derive(Parser)]
#[command(
    name = "circdist",
    version,
    about = "Circulant graphs C(m,p), distinguishing numbers, and symmetry-breaking labelings"
)]
struct Cli {
    /// Worker threads for inner searches (default: all cores). Results do
    /// not depend on the thread count.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a circulant graph and print it as JSON, DOT, or text.
    Construct(ConstructArgs),
    /// Distinguishing number by exact search and/or closed formula.
    Dnumber(DnumberArgs),
    /// The explicit (m+1)-labeling of C(m,p), verified.
    Label(LabelArgs),
    /// Check whether a labeling is distinguishing. Exits 0 when it is,
    /// 1 with a witness automorphism when it is not.
    Verify(VerifyArgs),
    /// A nontrivial automorphism preserving a labeling of C(m,p) that uses
    /// at most m labels.
    Break(BreakArgs),
    /// Enumerate the automorphism group.
    Autgroup(AutgroupArgs),
    /// Build a family of same-order graphs with prescribed distinguishing
    /// numbers.
    Family(FamilyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args)]
struct ConstructArgs {
    /// Module size m of C(m,p).
    #[arg(long, requires = "p", conflicts_with_all = ["n", "generators"])]
    m: Option<usize>,
    /// Module count p of C(m,p).
    #[arg(long, requires = "m")]
    p: Option<usize>,
    /// Order for a raw circulant; use with --generators.
    #[arg(long, requires = "generators")]
    n: Option<usize>,
    /// Symmetric generator residues, comma separated.
    #[arg(long, value_delimiter = ',', requires = "n")]
    generators: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct DnumberArgs {
    #[arg(long, requires = "p", conflicts_with = "graph")]
    m: Option<usize>,
    #[arg(long, requires = "m")]
    p: Option<usize>,
    /// Graph or circulant JSON file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Run the exact search.
    #[arg(long)]
    exact: bool,
    /// Evaluate the closed formula (C(m,p), or any complete multipartite
    /// graph). With --exact too, the two must agree.
    #[arg(long)]
    formula: bool,
    /// Largest label count the exact search may try (default: the order).
    #[arg(long)]
    rmax: Option<usize>,
    /// Candidate budget for the exact search (default 10^6, or CIRCDIST_CAP).
    #[arg(long)]
    cap: Option<u128>,
}

#[derive(Args)]
struct LabelArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    p: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, requires = "p", conflicts_with = "graph")]
    m: Option<usize>,
    #[arg(long, requires = "m")]
    p: Option<usize>,
    /// Graph or circulant JSON file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Labels, comma separated; the label count is their maximum.
    #[arg(long, value_delimiter = ',', conflicts_with = "labeling")]
    labels: Option<Vec<usize>>,
    /// Labeling JSON file ({"r": ..., "labels": [...]}).
    #[arg(long)]
    labeling: Option<PathBuf>,
}

#[derive(Args)]
struct BreakArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    p: usize,
    /// Labels to break, comma separated, each at most m.
    #[arg(long, value_delimiter = ',', conflicts_with = "random")]
    labels: Option<Vec<usize>>,
    /// Break this many random m-labelings instead.
    #[arg(long)]
    random: Option<usize>,
    /// Seed for --random.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct AutgroupArgs {
    #[arg(long, requires = "p", conflicts_with_all = ["n", "generators", "graph"])]
    m: Option<usize>,
    #[arg(long, requires = "m")]
    p: Option<usize>,
    #[arg(long, requires = "generators", conflicts_with = "graph")]
    n: Option<usize>,
    #[arg(long, value_delimiter = ',', requires = "n")]
    generators: Option<Vec<usize>>,
    /// Graph or circulant JSON file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Abort if the group has more elements than this (default 10^6, or
    /// CIRCDIST_CAP).
    #[arg(long)]
    cap: Option<usize>,
    /// Dump the elements, not just the order.
    #[arg(long)]
    elements: bool,
}

#[derive(Args)]
struct FamilyArgs {
    /// Target distinguishing numbers, strictly increasing (e.g. --d 3,4,5).
    #[arg(long, value_delimiter = ',', required = true)]
    d: Vec<usize>,
    /// Search for the smallest common order instead of the direct
    /// construction.
    #[arg(long, conflicts_with = "disconnected")]
    minimal: bool,
    /// Use the clique-plus-path members of order max(d) instead of
    /// connected circulants.
    #[arg(long)]
    disconnected: bool,
    /// Attach per-member evidence: a verified labeling with the target
    /// label count plus broken random labelings (connected plans), or the
    /// exact oracle where it fits (disconnected plans).
    #[arg(long)]
    certify: bool,
    /// Random labelings per member for --certify.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Seed for --certify sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn validation(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(err: E) -> Self {
        Failure::validation(err.to_string())
    }
}

struct Output {
    stdout: String,
    code: u8,
}

impl Output {
    fn ok(value: &impl Serialize) -> Result<Self, Failure> {
        Ok(Output {
            stdout: to_json(value)?,
            code: 0,
        })
    }
}

fn to_json(value: &impl Serialize) -> Result<String, Failure> {
    serde_json::to_string(value).map_err(|e| Failure::internal(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = match cli.threads {
        Some(0) => {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        Some(t) => t,
        None => std::thread::available_parallelism()
            .map(|t| t.get())
            .unwrap_or(1),
    };
    match run(cli.command, threads) {
        Ok(output) => {
            println!("{}", output.stdout);
            ExitCode::from(output.code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command, threads: usize) -> Result<Output, Failure> {
    match command {
        Command::Construct(args) => construct(args),
        Command::Dnumber(args) => dnumber(args, threads),
        Command::Label(args) => label(args),
        Command::Verify(args) => verify(args),
        Command::Break(args) => break_cmd(args),
        Command::Autgroup(args) => autgroup(args),
        Command::Family(args) => family(args),
    }
}

fn env_cap() -> Result<Option<u64>, Failure> {
    match std::env::var(CAP_ENV) {
        Ok(raw) => raw
            .parse::<u64>()
            .map(Some)
            .map_err(|_| Failure::validation(format!("{CAP_ENV} must be an integer, got {raw:?}"))),
        Err(_) => Ok(None),
    }
}

fn read_graph_file(path: &Path) -> Result<Graph, Failure> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Failure::validation(format!("cannot read {}: {e}", path.display())))?;
    let input: GraphInput = serde_json::from_str(&raw)
        .map_err(|e| Failure::validation(format!("{}: {e}", path.display())))?;
    Ok(input.into_graph())
}

fn cmp_spec(m: usize, p: usize) -> Result<CmpSpec, Failure> {
    Ok(CmpSpec::new(m, p)?)
}

fn construct(args: ConstructArgs) -> Result<Output, Failure> {
    let (graph, spec) = match (args.m, args.p, args.n, args.generators) {
        (Some(m), Some(p), None, None) => {
            let spec = cmp_spec(m, p)?;
            (spec.build(), Some(spec))
        }
        (None, None, Some(n), Some(generators)) => {
            (CirculantSpec::new(n, generators)?.build(), None)
        }
        _ => {
            return Err(Failure::validation(
                "give either --m and --p, or --n and --generators",
            ))
        }
    };
    let stdout = match args.format {
        Format::Json => to_json(&graph)?,
        Format::Dot => {
            let modules: Option<Vec<usize>> =
                spec.map(|s| (0..graph.n()).map(|v| v % s.p()).collect());
            dot::to_dot(&graph, modules.as_deref())
                .trim_end()
                .to_string()
        }
        Format::Text => {
            let edges: Vec<String> = graph
                .edges()
                .iter()
                .map(|&(u, v)| format!("{u}-{v}"))
                .collect();
            format!(
                "n: {}\nedges ({}): {}",
                graph.n(),
                graph.edge_count(),
                edges.join(" ")
            )
        }
    };
    Ok(Output { stdout, code: 0 })
}

#[derive(Serialize)]
struct DnumberReport {
    d: usize,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Labeling>,
}

fn dnumber(args: DnumberArgs, threads: usize) -> Result<Output, Failure> {
    if !args.exact && !args.formula {
        return Err(Failure::validation("pass --exact, --formula, or both"));
    }
    let spec = match (args.m, args.p) {
        (Some(m), Some(p)) => Some(cmp_spec(m, p)?),
        _ => None,
    };
    let graph = match (&spec, &args.graph) {
        (Some(spec), None) => spec.build(),
        (None, Some(path)) => read_graph_file(path)?,
        _ => {
            return Err(Failure::validation(
                "give either --m and --p, or --graph FILE",
            ))
        }
    };

    let formula_d = if args.formula {
        Some(match spec {
            Some(spec) => cmp_distinguishing_formula(&spec)?,
            None => {
                let sizes = graph.multipartite_part_sizes().ok_or_else(|| {
                    Failure::validation(
                        "no closed formula: the graph is not complete multipartite; use --exact",
                    )
                })?;
                multipartite_distinguishing_formula(&MultipartiteShape::from_part_sizes(&sizes)?)
            }
        })
    } else {
        None
    };

    let exact = if args.exact {
        let cap = match args.cap {
            Some(cap) => cap,
            None => env_cap()?.map(u128::from).unwrap_or(DEFAULT_SEARCH_CAP),
        };
        let opts = OracleOptions {
            r_max: args.rmax,
            cap,
            threads,
        };
        Some(exact_distinguishing_number_opts(&graph, opts)?)
    } else {
        None
    };

    let report = match (exact, formula_d) {
        (Some((d, witness)), Some(f)) => {
            if d != f {
                return Err(Failure::internal(format!(
                    "exact search found {d} but the formula says {f}"
                )));
            }
            DnumberReport {
                d,
                method: "both",
                witness: Some(witness),
            }
        }
        (Some((d, witness)), None) => DnumberReport {
            d,
            method: "exact",
            witness: Some(witness),
        },
        (None, Some(f)) => DnumberReport {
            d: f,
            method: "formula",
            witness: None,
        },
        (None, None) => unreachable!("at least one mode is set"),
    };
    Output::ok(&report)
}

#[derive(Serialize)]
struct LabelReport {
    r: usize,
    labels: Vec<usize>,
    verified: bool,
}

fn label(args: LabelArgs) -> Result<Output, Failure> {
    let spec = cmp_spec(args.m, args.p)?;
    let labeling = explicit_labeling(&spec)?;
    let graph = spec.build();
    if preserving_automorphism(&graph, &labeling).is_some() {
        return Err(Failure::internal(
            "the explicit labeling failed verification; this is a bug",
        ));
    }
    Output::ok(&LabelReport {
        r: labeling.r(),
        labels: labeling.labels().to_vec(),
        verified: true,
    })
}

#[derive(Serialize)]
struct VerifyReport {
    distinguishing: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Permutation>,
}

fn verify(args: VerifyArgs) -> Result<Output, Failure> {
    let graph = match (args.m, args.p, &args.graph) {
        (Some(m), Some(p), None) => cmp_spec(m, p)?.build(),
        (None, None, Some(path)) => read_graph_file(path)?,
        _ => {
            return Err(Failure::validation(
                "give either --m and --p, or --graph FILE",
            ))
        }
    };
    let labeling = match (args.labels, args.labeling) {
        (Some(labels), None) => {
            let r = labels.iter().copied().max().unwrap_or(1);
            Labeling::new(r, labels)?
        }
        (None, Some(path)) => {
            let raw = std::fs::read_to_string(&path)
                .map_err(|e| Failure::validation(format!("cannot read {}: {e}", path.display())))?;
            serde_json::from_str(&raw)
                .map_err(|e| Failure::validation(format!("{}: {e}", path.display())))?
        }
        _ => {
            return Err(Failure::validation(
                "give either --labels or --labeling FILE",
            ))
        }
    };
    if labeling.len() != graph.n() {
        return Err(Failure::validation(format!(
            "labeling has {} entries for a graph of order {}",
            labeling.len(),
            graph.n()
        )));
    }
    match preserving_automorphism(&graph, &labeling) {
        None => Output::ok(&VerifyReport {
            distinguishing: true,
            witness: None,
        }),
        Some(witness) => Ok(Output {
            stdout: to_json(&VerifyReport {
                distinguishing: false,
                witness: Some(witness),
            })?,
            code: 1,
        }),
    }
}

#[derive(Serialize)]
struct BreakReport {
    witness: Permutation,
}

#[derive(Serialize)]
struct BreakBatchReport {
    samples: usize,
    broken: usize,
    seed: u64,
    first_witness: Permutation,
}

fn break_cmd(args: BreakArgs) -> Result<Output, Failure> {
    let spec = cmp_spec(args.m, args.p)?;
    let graph = spec.build();

    let check = |labeling: &Labeling, sigma: &Permutation| -> Result<(), Failure> {
        let preserved = (0..graph.n()).all(|v| labeling.get(sigma.apply(v)) == labeling.get(v));
        if sigma.is_identity() || !is_automorphism(&graph, sigma) || !preserved {
            return Err(Failure::internal(format!(
                "breaker produced an invalid witness {sigma}; this is a bug"
            )));
        }
        Ok(())
    };

    match (args.labels, args.random) {
        (Some(labels), None) => {
            let r = labels.iter().copied().max().unwrap_or(1);
            let labeling = Labeling::new(r, labels)?;
            let sigma = break_labeling(&spec, &labeling)?;
            check(&labeling, &sigma)?;
            Output::ok(&BreakReport { witness: sigma })
        }
        (None, Some(samples)) => {
            if samples == 0 {
                return Err(Failure::validation("--random needs at least one sample"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let mut first_witness = None;
            let mut broken = 0;
            for _ in 0..samples {
                let labeling = random_labeling(graph.n(), spec.m(), &mut rng);
                let sigma = break_labeling(&spec, &labeling)?;
                check(&labeling, &sigma)?;
                broken += 1;
                first_witness.get_or_insert(sigma);
            }
            Output::ok(&BreakBatchReport {
                samples,
                broken,
                seed: args.seed,
                first_witness: first_witness.expect("at least one sample"),
            })
        }
        _ => Err(Failure::validation("give either --labels or --random K")),
    }
}

#[derive(Serialize)]
struct AutgroupReport {
    order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<Permutation>>,
}

fn autgroup(args: AutgroupArgs) -> Result<Output, Failure> {
    let graph = match (args.m, args.p, args.n, args.generators, &args.graph) {
        (Some(m), Some(p), None, None, None) => cmp_spec(m, p)?.build(),
        (None, None, Some(n), Some(generators), None) => CirculantSpec::new(n, generators)?.build(),
        (None, None, None, None, Some(path)) => read_graph_file(path)?,
        _ => {
            return Err(Failure::validation(
                "give --m/--p, or --n/--generators, or --graph FILE",
            ))
        }
    };
    let cap = match args.cap {
        Some(cap) => cap,
        None => env_cap()?.map(|c| c as usize).unwrap_or(DEFAULT_AUT_CAP),
    };
    let group = enumerate_automorphisms(&graph, cap)?;
    Output::ok(&AutgroupReport {
        order: group.order(),
        elements: args.elements.then(|| group.elements().to_vec()),
    })
}

#[derive(Serialize)]
struct CertifiedConnectedMember {
    m: usize,
    p: usize,
    target_d: usize,
    upper_bound_verified: bool,
    samples: usize,
    samples_broken: usize,
}

#[derive(Serialize)]
struct CertifiedConnectedPlan {
    n: usize,
    members: Vec<CertifiedConnectedMember>,
    #[serde(skip_serializing_if = "Option::is_none")]
    scaling_k: Option<usize>,
}

#[derive(Serialize)]
struct CertifiedDisconnectedMember {
    #[serde(flatten)]
    member: serde_json::Value,
    oracle_d: Option<usize>,
}

#[derive(Serialize)]
struct CertifiedDisconnectedPlan {
    n: usize,
    members: Vec<CertifiedDisconnectedMember>,
}

fn family(args: FamilyArgs) -> Result<Output, Failure> {
    if args.disconnected {
        let plan = build_disconnected_family(&args.d)?;
        if !args.certify {
            return Output::ok(&plan);
        }
        let mut members = Vec::new();
        for (member, &target) in plan.members().iter().zip(plan.targets()) {
            let graph = member.graph();
            let oracle = exact_distinguishing_number_opts(
                &graph,
                OracleOptions {
                    r_max: Some(target),
                    ..Default::default()
                },
            );
            let oracle_d = match oracle {
                Ok((d, _)) => Some(d),
                Err(circdist::DistinguishingError::CapExceeded { .. }) => None,
                Err(e) => return Err(Failure::internal(format!("oracle failed: {e}"))),
            };
            if oracle_d.is_some_and(|d| d != target) {
                return Err(Failure::internal(format!(
                    "member {member:?} has distinguishing number {oracle_d:?}, target {target}"
                )));
            }
            let base = serde_json::to_value(DisconnectedPlanMember {
                member: DisconnectedMemberWire(member),
                target_d: target,
            })
            .map_err(|e| Failure::internal(e.to_string()))?;
            members.push(CertifiedDisconnectedMember {
                member: base,
                oracle_d,
            });
        }
        return Output::ok(&CertifiedDisconnectedPlan {
            n: plan.common_order(),
            members,
        });
    }

    if args.d.contains(&2) {
        eprintln!(
            "note: target 2 forces a cycle member (m = 1); upper-bound evidence for it \
             uses a pinned 2-labeling instead of the explicit construction"
        );
    }
    let plan = if args.minimal {
        minimal_common_order(&args.d)?
    } else {
        build_connected_family(&args.d)?
    };
    if !args.certify {
        return Output::ok(&plan);
    }
    let certs = certify_connected_plan(&plan, args.samples, args.seed);
    if let Some(bad) = certs.iter().find(|c| !c.holds()) {
        return Err(Failure::internal(format!(
            "certification failed for C({},{}): {bad:?}",
            bad.spec.m(),
            bad.spec.p()
        )));
    }
    Output::ok(&CertifiedConnectedPlan {
        n: plan.common_order(),
        members: certs
            .iter()
            .map(|c| CertifiedConnectedMember {
                m: c.spec.m(),
                p: c.spec.p(),
                target_d: c.target_d,
                upper_bound_verified: c.upper_bound_verified,
                samples: c.samples,
                samples_broken: c.samples_broken,
            })
            .collect(),
        scaling_k: plan.scaling_k(),
    })
}

/// Mirrors the plan member wire shape for the certified report.
#[derive(Serialize)]
struct DisconnectedPlanMember<'a> {
    #[serde(flatten)]
    member: DisconnectedMemberWire<'a>,
    target_d: usize,
}

struct DisconnectedMemberWire<'a>(&'a DisconnectedMember);

impl Serialize for DisconnectedMemberWire<'_> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(None)?;
        match *self.0 {
            DisconnectedMember::Path { order } => {
                map.serialize_entry("kind", "path")?;
                map.serialize_entry("order", &order)?;
            }
            DisconnectedMember::CliquePlusPath { clique, path } => {
                map.serialize_entry("kind", "clique_plus_path")?;
                map.serialize_entry("clique", &clique)?;
                map.serialize_entry("path", &path)?;
            }
            DisconnectedMember::Clique { order } => {
                map.serialize_entry("kind", "clique")?;
                map.serialize_entry("order", &order)?;
            }
        }
        map.end()
    }
}
