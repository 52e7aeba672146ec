mod report;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cobound::applications::{
    constant_function_test, girth_and_min_cycle, seidel_equivalence, sum_function_test, tensor_power_test, Graph,
};
use cobound::cohomology::{cohomology_dim, homology_dim};
use cobound::expansion::{epsilon, mu};
use cobound::io::{parse_cochain, parse_complex, parse_rational, parse_sign_matrix, serialize_complex};
use cobound::tester::{run_cocycle_tester, testability_certificate, TestMode, TesterReport};
use cobound::{Complex, Rational, DEFAULT_BUDGET};
use report::*;
use serde::Serialize;
use serde_json::{json, Value};

/// Exact coboundary expansion and cocycle testers over F2.
#[derive(Parser)]
#[command(name = "cobound", version, about)]
struct Cli {
    /// Cap on any exhaustive enumeration (number of steps).
    #[arg(long, global = true, env = "COBOUND_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads; results do not depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Sampling {
    /// Also run this many seeded random trials.
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl Sampling {
    fn mode(self) -> TestMode {
        match self.trials {
            Some(trials) => TestMode::Sampled { trials, seed: self.seed },
            None => TestMode::Exact,
        }
    }

    fn params(self) -> Value {
        json!({ "trials": self.trials, "seed": self.seed })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write a complete or random complex.
    Generate {
        /// K_n^(d): all faces of dimension at most d on n vertices.
        #[arg(long, num_args = 2, value_names = ["N", "D"], conflicts_with = "random")]
        complete: Option<Vec<usize>>,
        /// Full (d-1)-skeleton plus each d-face with probability P.
        #[arg(long, num_args = 3, value_names = ["N", "D", "P"])]
        random: Option<Vec<String>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Face counts and (co)homology dimensions.
    Info { file: PathBuf },
    /// Exact coboundary expansion constant.
    Epsilon {
        #[arg(short)]
        i: usize,
        file: PathBuf,
    },
    /// Worst-case filling ratio.
    Mu {
        #[arg(short)]
        i: usize,
        file: PathBuf,
    },
    /// Run the i-cocycle tester on a cochain.
    Test {
        #[arg(short)]
        i: usize,
        #[arg(long)]
        cochain: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
        file: PathBuf,
    },
    /// Check the tester bound on every coset of coboundaries.
    Certify {
        #[arg(short)]
        i: usize,
        file: PathBuf,
    },
    /// Triangle test for sum functions on a complete graph.
    Sumfn {
        #[arg(long)]
        cochain: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
        graph: PathBuf,
    },
    /// Triple-product test for tensor powers of a sign vector.
    Tensor {
        #[command(flatten)]
        sampling: Sampling,
        matrix: PathBuf,
    },
    /// Labelled Seidel equivalence of two graphs.
    Seidel {
        /// Vertex set {0, ..., N-1}; by default taken from the files.
        #[arg(long)]
        vertices: Option<usize>,
        #[command(flatten)]
        sampling: Sampling,
        first: PathBuf,
        second: PathBuf,
    },
    /// Random-edge test for constant vertex functions.
    Constfn {
        /// A `dim 0` cochain file.
        #[arg(long)]
        function: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
        graph: PathBuf,
    },
    /// Girth and minimum cycle-space weight.
    Girth { graph: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Generate { .. } => "generate",
            Command::Info { .. } => "info",
            Command::Epsilon { .. } => "epsilon",
            Command::Mu { .. } => "mu",
            Command::Test { .. } => "test",
            Command::Certify { .. } => "certify",
            Command::Sumfn { .. } => "sumfn",
            Command::Tensor { .. } => "tensor",
            Command::Seidel { .. } => "seidel",
            Command::Constfn { .. } => "constfn",
            Command::Girth { .. } => "girth",
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Input { path: PathBuf, source: cobound::Error },
    #[error(transparent)]
    Lib(#[from] cobound::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn lib(&self) -> Option<&cobound::Error> {
        match self {
            CliError::Input { source, .. } | CliError::Lib(source) => Some(source),
            _ => None,
        }
    }

    fn exit_code(&self) -> u8 {
        match self.lib() {
            Some(cobound::Error::BudgetExceeded { .. }) => 3,
            _ => 2,
        }
    }

    fn report(&self) -> ErrorReport {
        let required_log2 = match self.lib() {
            Some(cobound::Error::BudgetExceeded { required_log2, .. }) => Some(*required_log2),
            _ => None,
        };
        let kind = match (self, required_log2) {
            (_, Some(_)) => "budget",
            (CliError::Io { .. }, _) => "io",
            (CliError::Usage(_), _) => "usage",
            _ => "input",
        };
        ErrorReport { kind, message: self.to_string(), required_log2 }
    }
}

/// What a command produced: echoed parameters, a JSON result, a text
/// rendering, and the exit code.
struct Outcome {
    params: Value,
    result: Value,
    text: String,
    code: u8,
}

impl Outcome {
    fn new(params: Value, result: impl Serialize, text: String, negative: bool) -> Outcome {
        let result = serde_json::to_value(result).expect("report types serialize");
        Outcome { params, result, text, code: negative as u8 }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn load_complex(path: &Path) -> Result<Complex, CliError> {
    parse_complex(&read(path)?).map_err(|source| CliError::Input { path: path.to_owned(), source })
}

/// Reads a graph; with `vertices` the vertex set is `0..vertices` and the
/// file may be empty.
fn load_graph(path: &Path, vertices: Option<usize>) -> Result<Graph, CliError> {
    let input = |source| CliError::Input { path: path.to_owned(), source };
    let x = match vertices {
        Some(n) => {
            let faces = match parse_complex(&read(path)?) {
                Ok(x) => x.maximal_faces().into_iter().map(|f| f.vertices().to_vec()).collect(),
                Err(cobound::Error::EmptyInput) => Vec::new(),
                Err(e) => return Err(input(e)),
            };
            Complex::with_vertices(n, faces).map_err(input)?
        }
        None => load_complex(path)?,
    };
    Graph::new(x).map_err(input)
}

fn load_cochain(path: &Path, x: &Complex) -> Result<cobound::Cochain, CliError> {
    parse_cochain(&read(path)?, x).map_err(|source| CliError::Input { path: path.to_owned(), source })
}

fn fmt_rational(r: Rational) -> String {
    format!("{r} (~{:.6})", *r.numer() as f64 / *r.denom() as f64)
}

fn fmt_faces(list: &FaceList) -> String {
    if list.is_empty() {
        return "(none)".into();
    }
    list.iter().map(|f| format!("{{{}}}", f.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))).collect::<Vec<_>>().join(" ")
}

fn fmt_tester(r: &TesterReport) -> String {
    let mut s = String::new();
    writeln!(s, "queries per round: {}", r.queries).unwrap();
    writeln!(s, "exact rejection rate: {}", fmt_rational(r.exact_rate)).unwrap();
    if let Some(sample) = &r.sample {
        writeln!(
            s,
            "sampled: {} / {} rejections (seed {}), 99% Wilson [{:.6}, {:.6}], {} queries",
            sample.rejections, sample.trials, sample.seed, sample.wilson99.0, sample.wilson99.1, sample.total_queries
        )
        .unwrap();
    }
    match (r.distance, r.distance_weight) {
        (Some(d), Some(w)) => writeln!(s, "distance to coboundaries: {} (weight {w})", fmt_rational(d)).unwrap(),
        _ => writeln!(s, "distance to coboundaries: over budget").unwrap(),
    }
    match r.epsilon_bound {
        Some(e) => writeln!(s, "expansion bound: {}", fmt_rational(e)).unwrap(),
        None => writeln!(s, "expansion bound: over budget").unwrap(),
    }
    if let Some(ok) = r.bound_satisfied {
        writeln!(s, "rate >= bound x distance: {ok}").unwrap();
    }
    s
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let budget = cli.budget;
    match &cli.command {
        Command::Generate { complete, random, seed, out } => {
            let (x, params) = match (complete, random) {
                (Some(c), None) => (Complex::complete(c[0], c[1])?, json!({ "complete": [c[0], c[1]] })),
                (None, Some(r)) => {
                    let parse = |s: &str| s.parse::<usize>().map_err(|_| CliError::Usage(format!("expected an integer, got {s:?}")));
                    let (n, d) = (parse(&r[0])?, parse(&r[1])?);
                    let p = parse_rational(&r[2]).map_err(|_| CliError::Usage(format!("expected a probability, got {:?}", r[2])))?;
                    (Complex::random(n, d, p, *seed)?, json!({ "random": [n, d, RationalJson::from(p)], "seed": seed }))
                }
                _ => return Err(CliError::Usage("give exactly one of --complete N D or --random N D P".into())),
            };
            let text = serialize_complex(&x);
            if let Some(path) = out {
                fs::write(path, &text).map_err(|source| CliError::Io { path: path.clone(), source })?;
            }
            let result = Generated {
                f_vector: x.f_vector(),
                maximal_faces: x.maximal_faces().len(),
                out: out.as_ref().map(|p| p.display().to_string()),
            };
            let shown = match out {
                Some(p) => format!("wrote {} (f-vector {:?})\n", p.display(), x.f_vector()),
                None => text,
            };
            Ok(Outcome::new(params, result, shown, false))
        }
        Command::Info { file } => {
            let x = load_complex(file)?;
            let mut dims = Vec::new();
            for i in 0..=x.dim() {
                dims.push(DimEntry {
                    i,
                    faces: x.face_count(i),
                    cohomology: cohomology_dim(&x, i)?,
                    homology: homology_dim(&x, i)?,
                });
            }
            let mut text = format!("vertices: {}\ndimension: {}\nf-vector: {:?}\n", x.face_count(0), x.dim(), x.f_vector());
            for d in &dims {
                writeln!(text, "dim H^{i} = {}, dim H_{i} = {} ({} faces)", d.cohomology, d.homology, d.faces, i = d.i).unwrap();
            }
            let info = Info { vertices: x.face_count(0), dim: x.dim(), f_vector: x.f_vector(), dims };
            Ok(Outcome::new(json!({ "file": file, "budget": budget }), info, text, false))
        }
        Command::Epsilon { i, file } => {
            let x = load_complex(file)?;
            let res = epsilon(&x, *i, budget)?;
            let r = EpsilonJson::new(&x, &res);
            let text = format!(
                "epsilon_{i} = {}\nwitness: {} (dist {}, |coboundary| {})\ncosets enumerated: {}\nH^{i} non-zero: {}\n",
                fmt_rational(res.epsilon),
                fmt_faces(&r.witness),
                r.witness_dist,
                r.witness_coboundary_weight,
                r.cosets_enumerated,
                r.h_nonzero
            );
            Ok(Outcome::new(json!({ "file": file, "i": i, "budget": budget }), r, text, false))
        }
        Command::Mu { i, file } => {
            let x = load_complex(file)?;
            let res = mu(&x, *i, budget)?;
            let r = MuJson::new(&x, &res);
            let text = format!(
                "mu_{i} = {}\nbeta: {}\nfilling: {}\ncosets enumerated: {}\n",
                fmt_rational(res.mu),
                fmt_faces(&r.beta),
                fmt_faces(&r.filling),
                r.cosets_enumerated
            );
            Ok(Outcome::new(json!({ "file": file, "i": i, "budget": budget }), r, text, false))
        }
        Command::Test { i, cochain, sampling, file } => {
            let x = load_complex(file)?;
            let f = load_cochain(cochain, &x)?;
            if f.dim() != *i as isize {
                return Err(CliError::Usage(format!("cochain has dimension {}, expected {i}", f.dim())));
            }
            let r = run_cocycle_tester(&x, &f, sampling.mode(), budget)?;
            let mut params = sampling.params();
            params["file"] = json!(file);
            params["cochain"] = json!(cochain);
            params["i"] = json!(i);
            params["budget"] = json!(budget);
            Ok(Outcome::new(params, TesterJson::from(&r), fmt_tester(&r), !r.accepts_always()))
        }
        Command::Certify { i, file } => {
            let x = load_complex(file)?;
            let c = testability_certificate(&x, *i, budget)?;
            let j = CertificateJson::new(&x, &c);
            let mut text = format!(
                "epsilon_{i} = {}\ncosets checked: {}, meeting the bound with equality: {}\nequality witness: {} (rate {} = epsilon x {})\n",
                fmt_rational(c.epsilon),
                c.cosets_checked,
                c.equality_cosets,
                fmt_faces(&j.equality_witness),
                c.equality_rate,
                c.equality_distance
            );
            if let Some(w) = &j.cohomology_witness {
                writeln!(text, "H^{i} != 0: cocycle outside the coboundaries: {}", fmt_faces(w)).unwrap();
            }
            if let Some(v) = &j.violation {
                writeln!(text, "VIOLATION at {}", fmt_faces(&v.leader)).unwrap();
            }
            writeln!(text, "certified: {}", c.passed && c.epsilon > Rational::from_integer(0)).unwrap();
            let negative = !c.passed || c.epsilon == Rational::from_integer(0);
            Ok(Outcome::new(json!({ "file": file, "i": i, "budget": budget }), j, text, negative))
        }
        Command::Sumfn { cochain, sampling, graph } => {
            let g = load_graph(graph, None)?;
            let f = load_cochain(cochain, g.complex())?;
            let r = sum_function_test(&g, &f, sampling.mode(), budget)?;
            let member = r.accepts_always();
            let text = format!("sum function: {member}\n{}", fmt_tester(&r));
            let mut params = sampling.params();
            params["graph"] = json!(graph);
            params["cochain"] = json!(cochain);
            params["budget"] = json!(budget);
            Ok(Outcome::new(params, MembershipJson { member, tester: (&r).into() }, text, !member))
        }
        Command::Tensor { sampling, matrix } => {
            let m = parse_sign_matrix(&read(matrix)?).map_err(|source| CliError::Input { path: matrix.clone(), source })?;
            let r = tensor_power_test(&m, sampling.mode(), budget)?;
            let root = m.tensor_root().map(|a| a.iter().map(|&neg| if neg { "-1" } else { "1" }).collect::<Vec<_>>().join(" "));
            let mut text = format!("tensor power: {}\n", r.member);
            if let Some(root) = root {
                writeln!(text, "alpha: {root}").unwrap();
            }
            text += &fmt_tester(&r.tester);
            let mut params = sampling.params();
            params["matrix"] = json!(matrix);
            params["budget"] = json!(budget);
            Ok(Outcome::new(params, TensorJson::from(&r), text, !r.member))
        }
        Command::Seidel { vertices, sampling, first, second } => {
            let (g1, g2) = (load_graph(first, *vertices)?, load_graph(second, *vertices)?);
            let r = seidel_equivalence(&g1, &g2, sampling.mode(), budget)?;
            let mut text = format!("Seidel equivalent: {}\n", r.equivalent);
            if let Some(set) = &r.switching_set {
                writeln!(text, "switch at: {set:?}").unwrap();
            }
            text += &fmt_tester(&r.tester);
            let mut params = sampling.params();
            params["first"] = json!(first);
            params["second"] = json!(second);
            params["vertices"] = json!(vertices);
            params["budget"] = json!(budget);
            Ok(Outcome::new(params, SeidelJson::from(&r), text, !r.equivalent))
        }
        Command::Constfn { function, sampling, graph } => {
            let g = load_graph(graph, None)?;
            let f = load_cochain(function, g.complex())?;
            let r = constant_function_test(&g, &f, sampling.mode(), budget)?;
            let member = r.accepts_always();
            let text = format!("constant on components: {member}\n{}", fmt_tester(&r));
            let mut params = sampling.params();
            params["graph"] = json!(graph);
            params["function"] = json!(function);
            params["budget"] = json!(budget);
            Ok(Outcome::new(params, MembershipJson { member, tester: (&r).into() }, text, !member))
        }
        Command::Girth { graph } => {
            let g = load_graph(graph, None)?;
            let r = girth_and_min_cycle(&g, budget)?;
            let j = GirthJson::new(g.complex(), &r);
            let show = |v: Option<usize>| v.map_or("infinite".to_string(), |v| v.to_string());
            let mut text = format!("girth: {}\ncycle space dimension: {}\n", show(r.girth), r.cycle_space_dim);
            match r.min_cycle_weight {
                Some(w) => writeln!(text, "minimum cycle weight: {}", show(w)).unwrap(),
                None => writeln!(text, "minimum cycle weight: not scanned (needs 2^{} steps)", r.required_log2).unwrap(),
            }
            if let Some(c) = &j.min_cycle {
                writeln!(text, "minimum cycle: {}", fmt_faces(c)).unwrap();
            }
            let mismatch = r.min_cycle_weight.is_some_and(|w| w != r.girth);
            Ok(Outcome::new(json!({ "graph": graph, "budget": budget }), j, text, mismatch))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("cobound: cannot start {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let command = cli.command.name();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                let env = Envelope { command, version: VERSION, params: out.params, result: out.result };
                println!("{}", serde_json::to_string_pretty(&env).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            if cli.json {
                let env = Envelope { command, version: VERSION, params: Value::Null, result: json!({ "error": e.report() }) };
                println!("{}", serde_json::to_string_pretty(&env).expect("serializable"));
            }
            match e.lib() {
                Some(cobound::Error::BudgetExceeded { required_log2, budget }) => eprintln!(
                    "cobound: budget exceeded: needs 2^{required_log2} steps but the budget is {budget}; \
                     raise it with --budget or COBOUND_BUDGET"
                ),
                _ => eprintln!("cobound: {e}"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}
