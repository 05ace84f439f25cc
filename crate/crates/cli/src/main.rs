//! `hc`: classification data for Harish-Chandra bimodules over type A
//! rational Cherednik algebras, and an exact quiver-algebra calculator.
//!
//! Every subcommand prints one JSON object to stdout. Exit status is 0 on
//! success, 2 on malformed input and 3 on domain errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use hc_core::hc_model::{
    classify_parameter, ideal_chain, simple_labels_for_class, two_param_class, CherednikParameter, ParameterClass,
};
use hc_core::linalg::format_q;
use hc_core::partitions::decompose;
use hc_core::principal_block::{build_block, classify_k1_indecomposables, duality};
use hc_core::quiver_algebra::{
    build_algebra, ext1, ext_matrix, hom_dim, serre_quotient, FdAlgebra, QuiverRep, QuiverSpec, RepJson,
    DEFAULT_MAX_LENGTH,
};
use hc_core::symgroup::{branching_multiplicity, dim_irrep, restrict_standard_k0, YoungSubgroup};
use hc_core::{Error, Partition};

const SCHEMA: &str = "hc/1";

#[derive(Parser)]
#[command(name = "hc", version, about = "Harish-Chandra bimodules for rational Cherednik algebras of S_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Split a partition as mu + m*nu with mu m-restricted.
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        m: usize,
    },
    /// Labels of the simple Harish-Chandra bimodules.
    Simples(ParamArgs),
    /// Parameter class of c for S_n.
    Classify(ParamArgs),
    /// Chain of two-sided ideals of H_{r/m} with supports.
    Chain {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// The principal block as a quiver with relations.
    Block {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Write the block quiver in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Include dim Ext^1 between simples.
        #[arg(long)]
        ext: bool,
        /// Count indecomposables of the two-vertex block.
        #[arg(long = "indecomposables-for-k1")]
        indecomposables_for_k1: bool,
    },
    /// Apply the block duality to a representation file.
    Duality {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        rep: PathBuf,
    },
    /// Restrict an irreducible of S_n to a Young subgroup.
    Branch {
        #[arg(long)]
        lambda: String,
        /// Block sizes, e.g. 2,1.
        #[arg(long)]
        blocks: String,
        /// One partition per block separated by ';', e.g. "2;1".
        #[arg(long)]
        taus: Option<String>,
    },
    /// Finite-dimensional algebras from a quiver spec file.
    Quiver {
        #[command(subcommand)]
        action: QuiverAction,
    },
    /// Decide HC(c, c') for two parameters.
    Twoparam {
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        cprime: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    n: usize,
    /// Integer or p/q.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "irrational")]
    c: Option<String>,
    /// Treat c as irrational (generic).
    #[arg(long, conflicts_with = "c")]
    irrational: bool,
    /// Sign of an irrational c.
    #[arg(long, requires = "irrational")]
    negative: bool,
}

#[derive(Subcommand)]
enum QuiverAction {
    /// Basis and Cartan matrix of the algebra.
    Build {
        spec: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_LENGTH)]
        max_length: usize,
    },
    /// Idempotent truncation killing the listed vertices.
    Quotient {
        spec: PathBuf,
        #[arg(long, value_delimiter = ',')]
        kill: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_LENGTH)]
        max_length: usize,
    },
    /// dim Hom and dim Ext^1 between two representation files.
    Ext {
        spec: PathBuf,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_LENGTH)]
        max_length: usize,
    },
}

enum Failure {
    Input(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_domain() {
            Failure::Domain(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Outcome = std::result::Result<Map<String, Value>, Failure>;

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("payloads are JSON objects"),
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parameter(args: &ParamArgs) -> std::result::Result<ParameterClass, Failure> {
    match &args.c {
        Some(text) => Ok(classify_parameter(text.parse::<CherednikParameter>()?, args.n)),
        None => Ok(ParameterClass::irrational(args.negative)),
    }
}

fn load_algebra(spec: &Path, max_length: usize) -> std::result::Result<FdAlgebra, Failure> {
    let (quiver, relations) = QuiverSpec::from_json(&read(spec)?)?.to_parts()?;
    Ok(build_algebra(quiver, relations, max_length)?)
}

fn load_rep(alg: &FdAlgebra, path: &Path) -> std::result::Result<QuiverRep, Failure> {
    let json: RepJson =
        serde_json::from_str(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(QuiverRep::from_json(alg, &json)?)
}

fn algebra_json(alg: &FdAlgebra) -> Value {
    let basis: Vec<Value> = alg
        .basis()
        .iter()
        .map(|b| {
            json!({
                "label": b.label,
                "source": alg.vertices()[b.source],
                "target": alg.vertices()[b.target],
                "degree": b.degree,
            })
        })
        .collect();
    let products: Vec<Value> = alg
        .products()
        .iter()
        .filter(|(_, v)| !v.is_empty())
        .map(|(&(x, y), v)| {
            let terms: Map<String, Value> =
                v.iter().map(|(z, c)| (alg.basis()[*z].label.clone(), Value::String(format_q(c)))).collect();
            json!({ "left": alg.basis()[x].label, "right": alg.basis()[y].label, "result": terms })
        })
        .collect();
    let generators: Vec<&str> = (0..alg.generators().len()).map(|p| alg.generator(p).label.as_str()).collect();
    json!({
        "dim": alg.dim(),
        "vertices": alg.vertices(),
        "generators": generators,
        "basis": basis,
        "products": products,
        "cartan": alg.cartan_matrix(),
    })
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Decompose { lambda, m } => {
            let lambda: Partition = lambda.parse()?;
            let d = decompose(&lambda, m)?;
            Ok(object(json!({ "mu": d.mu, "nu": d.nu })))
        }
        Command::Simples(args) => {
            let class = parameter(&args)?;
            let labels = simple_labels_for_class(args.n, &class)?;
            Ok(object(json!({
                "class": class,
                "labels": labels.labels,
                "count": labels.count(),
                "sign_twisted": labels.sign_twisted,
            })))
        }
        Command::Classify(args) => {
            let class = parameter(&args)?;
            Ok(object(json!(class)))
        }
        Command::Chain { n, m } => {
            let chain = ideal_chain(n, m)?;
            let mut out = object(json!(chain));
            out.insert("proper_ideals".into(), json!(chain.proper_ideals()));
            Ok(out)
        }
        Command::Block { n, m, dot, ext, indecomposables_for_k1 } => {
            let block = build_block(n, m)?;
            let (quiver, relations) = block.algebra.presentation().expect("block algebra has a presentation");
            let leaves: Vec<Value> = block
                .leaf_map
                .iter()
                .enumerate()
                .map(|(v, l)| json!({ "vertex": block.algebra.vertices()[v], "leaf": l.index, "parabolic": l.parabolic }))
                .collect();
            let mut out = object(json!({
                "n": n,
                "m": m,
                "k": block.k,
                "dim": block.algebra.dim(),
                "quiver": QuiverSpec::from_parts(quiver, relations),
                "leaves": leaves,
                "distinguished": block.distinguished_json(),
            }));
            if ext {
                out.insert("ext".into(), json!(ext_matrix(&block.algebra)));
            }
            if indecomposables_for_k1 {
                if block.k != 1 {
                    return Err(Failure::Input(format!("block has k = {}, not 1", block.k)));
                }
                let c = classify_k1_indecomposables()?;
                out.insert("indecomposables".into(), json!(c.strings));
                out.insert("indecomposables_check".into(), json!(c));
            }
            if let Some(path) = dot {
                fs::write(&path, block.to_dot()).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                out.insert("dot".into(), json!(path.display().to_string()));
            }
            Ok(out)
        }
        Command::Duality { n, m, rep } => {
            let block = build_block(n, m)?;
            let input = load_rep(&block.algebra, &rep)?;
            Ok(object(json!({ "rep": duality(&block, &input).to_json(&block.algebra) })))
        }
        Command::Branch { lambda, blocks, taus } => {
            let lambda: Partition = lambda.parse()?;
            let blocks = blocks
                .split(',')
                .map(|b| b.trim().parse::<usize>().map_err(|_| Failure::Input(format!("bad block size {b:?}"))))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            let subgroup = YoungSubgroup::new(blocks)?;
            let mut out = object(json!({
                "lambda": lambda,
                "blocks": subgroup.blocks(),
                "dim": dim_irrep(&lambda).to_string(),
                "k0": restrict_standard_k0(&lambda, &subgroup)?,
            }));
            if let Some(taus) = taus {
                let taus = taus.split(';').map(str::parse).collect::<std::result::Result<Vec<Partition>, _>>()?;
                out.insert("multiplicity".into(), json!(branching_multiplicity(&lambda, &subgroup, &taus)?));
            }
            Ok(out)
        }
        Command::Quiver { action } => match action {
            QuiverAction::Build { spec, max_length } => Ok(object(algebra_json(&load_algebra(&spec, max_length)?))),
            QuiverAction::Quotient { spec, kill, max_length } => {
                let alg = load_algebra(&spec, max_length)?;
                let kill = kill
                    .iter()
                    .filter(|v| !v.is_empty())
                    .map(|v| alg.vertex_index(v).ok_or_else(|| Failure::Input(format!("unknown vertex {v:?}"))))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                let sq = serre_quotient(&alg, &kill)?;
                let mut out = object(algebra_json(&sq.algebra));
                out.insert("parent_dim".into(), json!(alg.dim()));
                Ok(out)
            }
            QuiverAction::Ext { spec, from, to, max_length } => {
                let alg = load_algebra(&spec, max_length)?;
                let m = load_rep(&alg, &from)?;
                let n = load_rep(&alg, &to)?;
                Ok(object(json!({ "hom": hom_dim(&alg, &m, &n), "ext1": ext1(&alg, &m, &n).dim })))
            }
        },
        Command::Twoparam { c, cprime, n } => {
            let c: CherednikParameter = c.parse()?;
            let cprime: CherednikParameter = cprime.parse()?;
            Ok(object(json!(two_param_class(c, cprime, n))))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(mut out) => {
            out.insert("schema".into(), json!(SCHEMA));
            out.insert("status".into(), json!("ok"));
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(io::stdout(), "{}", Value::Object(out));
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let (code, kind, message) = match failure {
                Failure::Input(m) => (2, "input", m),
                Failure::Domain(m) => (3, "domain", m),
            };
            let err = json!({ "schema": SCHEMA, "status": "error", "kind": kind, "error": message });
            eprintln!("{err}");
            ExitCode::from(code)
        }
    }
}
