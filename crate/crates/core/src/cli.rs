//! The `matcyc` command line. [`run`] parses arguments, executes one
//! subcommand and returns the exit code: 0 on success, 1 when an analysis
//! fails, 2 on usage or parse errors, 3 when a resource cap is hit.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::input::{load, InputSpec};
use crate::lattice::{enumerate_cyclic_flats, enumerate_flats, minor_cyclic_flats_from, CyclicFlatLattice};
use crate::lrc::CodeAnalysis;
use crate::matroid::{Limits, Matroid, MinorSpec};
use crate::set::ElementSet;
use crate::uniform::{UniformDetector, UniformWitness};

#[derive(Parser, Debug)]
#[command(name = "matcyc", version, about = "Matroids of linear codes and their lattices of cyclic flats")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Ground-set cap for exhaustive algorithms.
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,
    /// Codeword cap for brute-force distances.
    #[arg(long, global = true, value_name = "COUNT")]
    max_codewords: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

/// `INPUT` is a file in one of the matroid text formats, or inline text such
/// as `"uniform 6 3"`. Sets are comma-separated labels; `-` is the empty set.
#[derive(Subcommand, Debug)]
enum Command {
    /// Rank of a set.
    Rank { input: String, set: ElementSet },
    /// Closure of a set.
    Closure { input: String, set: ElementSet },
    /// Cyclic part of a set: the union of the circuits inside it.
    Cyc { input: String, set: ElementSet },
    /// All flats, or only the cyclic flats.
    Flats {
        input: String,
        #[arg(long)]
        cyclic: bool,
    },
    /// The lattice of cyclic flats and its labelled Hasse diagram.
    Lattice {
        input: String,
        /// Also write the diagram in Graphviz format.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Cyclic flats of the minor M|Y/X.
    Minor {
        input: String,
        #[arg(long, value_name = "SET")]
        restrict: ElementSet,
        #[arg(long, value_name = "SET")]
        contract: Option<ElementSet>,
        /// Decide whether the minor is uniform.
        #[arg(long)]
        test_uniform: bool,
    },
    /// Search for a U(n,k) minor.
    Scan {
        input: String,
        #[arg(long, value_name = "N,K", value_parser = parse_pair)]
        uniform: (usize, usize),
        /// Skip the lattice certificate and search exhaustively.
        #[arg(long)]
        brute: bool,
    },
    /// Binary representability via the U(4,2) test.
    BinaryCheck { input: String },
    /// Look for the uniform minors a GF(q)-representable matroid avoids.
    FieldCheck {
        input: String,
        #[arg(long)]
        q: u32,
    },
    /// Code parameters (n,k,d,r,delta) with the best r for the given delta.
    Params {
        input: String,
        #[arg(long, default_value_t = 2)]
        delta: usize,
    },
    /// Check (r,delta)-locality of every coordinate.
    LrcVerify {
        input: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Check the lattice conditions of binary LRCs.
    BinaryStructure {
        input: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Print the input back in its own format.
    Echo { input: String },
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected N,K")?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// Output of one subcommand.
struct Outcome {
    text: String,
    json: serde_json::Value,
    code: i32,
}

impl Outcome {
    fn ok(text: String, json: serde_json::Value) -> Self {
        Outcome { text, json, code: 0 }
    }

    fn failing_if(mut self, failed: bool) -> Self {
        self.code = i32::from(failed);
        self
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit(_) => 3,
        Error::DegenerateCode(_) | Error::NoLocality(_) | Error::InapplicableTheorem(_) | Error::Inconsistent(_) => 1,
        _ => 2,
    }
}

/// Runs the command line given by `argv` (program name first).
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let written = if cli.json {
                let text = serde_json::to_string_pretty(&outcome.json).expect("JSON values serialise");
                writeln!(out, "{text}")
            } else {
                out.write_all(outcome.text.as_bytes())
            };
            if written.is_err() {
                return 2;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn limits(cli: &Cli) -> Limits {
    let mut limits = Limits::default();
    if let Some(n) = cli.max_n {
        limits = limits.with_max_n(n);
    }
    if let Some(c) = cli.max_codewords {
        limits.max_codewords = c;
    }
    limits
}

fn open(cli: &Cli, input: &str) -> Result<(InputSpec, Matroid)> {
    let spec = load(input)?;
    let matroid = spec.matroid()?.with_limits(limits(cli));
    Ok((spec, matroid))
}

#[derive(Serialize)]
struct EdgeView {
    lower: ElementSet,
    upper: ElementSet,
    rank_gap: usize,
    nullity_gap: usize,
    label: crate::lattice::EdgeLabel,
}

fn lattice_json(z: &CyclicFlatLattice) -> serde_json::Value {
    let edges: Vec<EdgeView> = z
        .edges()
        .iter()
        .map(|e| EdgeView {
            lower: z.node(e.lower).set,
            upper: z.node(e.upper).set,
            rank_gap: e.rank_gap,
            nullity_gap: e.nullity_gap,
            label: e.label(),
        })
        .collect();
    json!({ "ground": z.ground(), "nodes": z.nodes(), "edges": edges })
}

fn lattice_text(z: &CyclicFlatLattice) -> String {
    let mut text = format!("cyclic flats: {}, covering edges: {}\n", z.len(), z.edges().len());
    for node in z.nodes() {
        text.push_str(&format!("{} ρ={} η={}\n", node.set, node.rank, node.nullity));
    }
    for e in z.edges() {
        let label = e.label().to_string();
        let label = if label.is_empty() { "elementary".to_string() } else { label };
        text.push_str(&format!("{} < {} {label}\n", z.node(e.lower).set, z.node(e.upper).set));
    }
    text
}

fn witness_text(w: Option<&UniformWitness>) -> String {
    w.map_or_else(|| "none".to_string(), UniformWitness::report_line) + "\n"
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Rank { input, set } => {
            let (_, m) = open(cli, input)?;
            let r = m.rank(*set)?;
            Ok(Outcome::ok(format!("rank({set}) = {r}\n"), json!({ "set": set, "rank": r })))
        }
        Command::Closure { input, set } => {
            let (_, m) = open(cli, input)?;
            let c = m.closure(*set)?;
            Ok(Outcome::ok(format!("cl({set}) = {c}\n"), json!({ "set": set, "closure": c })))
        }
        Command::Cyc { input, set } => {
            let (_, m) = open(cli, input)?;
            let c = m.cyc(*set)?;
            Ok(Outcome::ok(format!("cyc({set}) = {c}\n"), json!({ "set": set, "cyc": c })))
        }
        Command::Flats { input, cyclic } => {
            let (_, m) = open(cli, input)?;
            let flats: Vec<(ElementSet, usize)> = if *cyclic {
                enumerate_cyclic_flats(&m)?.nodes().iter().map(|z| (z.set, z.rank)).collect()
            } else {
                enumerate_flats(&m)?.into_iter().map(|f| (f, m.rank(f).expect("flat is in E"))).collect()
            };
            let text: String = flats.iter().map(|(f, r)| format!("{f} rank={r}\n")).collect();
            let json = flats.iter().map(|(f, r)| json!({ "set": f, "rank": r })).collect();
            Ok(Outcome::ok(text, serde_json::Value::Array(json)))
        }
        Command::Lattice { input, dot } => {
            let (_, m) = open(cli, input)?;
            let z = enumerate_cyclic_flats(&m)?;
            if let Some(path) = dot {
                std::fs::write(path, z.to_dot())
                    .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(Outcome::ok(lattice_text(&z), lattice_json(&z)))
        }
        Command::Minor {
            input,
            restrict,
            contract,
            test_uniform,
        } => {
            let (_, m) = open(cli, input)?;
            let spec = MinorSpec::new(*restrict, contract.unwrap_or(ElementSet::EMPTY))?;
            let z = enumerate_cyclic_flats(&m)?;
            let minor_z = minor_cyclic_flats_from(&m, &z, &spec)?;
            let mut text = format!("minor |{}/{} on {}\n", spec.restrict_to(), spec.contract_by(), spec.ground());
            text.push_str(&lattice_text(&minor_z));
            let mut json = json!({
                "restrict": spec.restrict_to(),
                "contract": spec.contract_by(),
                "lattice": lattice_json(&minor_z),
            });
            if *test_uniform {
                let detector = UniformDetector::with_lattice(&m, z);
                let witness = detector.combined_uniform(spec.contract_by(), spec.restrict_to())?;
                let direct = m.minor_uniform_test(&spec)?;
                if witness.map(|w| w.params) != direct {
                    return Err(Error::Inconsistent(format!(
                        "lattice criterion gives {:?}, rank function gives {direct:?}",
                        witness.map(|w| w.params)
                    )));
                }
                text.push_str(&match witness {
                    Some(w) => format!("uniform: U({},{}) via={}\n", w.params.0, w.params.1, w.certificate),
                    None => "uniform: no\n".to_string(),
                });
                json["uniform"] = json!(witness);
            }
            Ok(Outcome::ok(text, json))
        }
        Command::Scan { input, uniform, brute } => {
            let (_, m) = open(cli, input)?;
            let (n, k) = *uniform;
            let witness = if *brute {
                m.uniform_minor_bruteforce(n, k)?
            } else {
                let detector = UniformDetector::new(&m)?;
                match detector.hasse_violations(n, k)?.into_iter().next() {
                    Some(v) => Some(v.witness),
                    None => m.uniform_minor_bruteforce(n, k)?,
                }
            };
            Ok(Outcome::ok(witness_text(witness.as_ref()), json!({ "uniform": [n, k], "witness": witness })))
        }
        Command::BinaryCheck { input } => {
            let (_, m) = open(cli, input)?;
            let verdict = UniformDetector::new(&m)?.tutte_binary_test()?;
            let mut text = if verdict.binary { "binary\n" } else { "not binary\n" }.to_string();
            if let Some(w) = &verdict.witness {
                text.push_str(&witness_text(Some(w)));
            }
            Ok(Outcome::ok(text, json!(verdict)).failing_if(!verdict.binary))
        }
        Command::FieldCheck { input, q } => {
            let (_, m) = open(cli, input)?;
            let check = UniformDetector::new(&m)?.field_necessary_check(*q)?;
            let forbidden: Vec<String> = check.forbidden.iter().map(|(n, k)| format!("U({n},{k})")).collect();
            let mut text = format!("GF({q}) excludes: {}\n", forbidden.join(" "));
            if check.clean() {
                text.push_str("no excluded minor found\n");
            }
            for w in &check.witnesses {
                text.push_str(&witness_text(Some(w)));
            }
            text.push_str(&format!("note: {}\n", check.note));
            Ok(Outcome::ok(text, json!(check)).failing_if(!check.clean()))
        }
        Command::Params { input, delta } => {
            let (_, m) = open(cli, input)?;
            let analysis = CodeAnalysis::new(&m)?;
            let d = analysis.code_distance()?;
            let r = m
                .ground()
                .iter()
                .map(|i| analysis.locality_of_element(i, *delta).map(|l| l.r))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .max()
                .unwrap_or(0);
            let (n, k) = (m.size(), m.full_rank());
            Ok(Outcome::ok(
                format!("(n,k,d,r,delta) = ({n},{k},{d},{r},{delta})\n"),
                json!({ "n": n, "k": k, "d": d, "r": r, "delta": delta }),
            ))
        }
        Command::LrcVerify { input, r, delta } => {
            let (_, m) = open(cli, input)?;
            let report = CodeAnalysis::new(&m)?.verify_lrc(*r, *delta)?;
            Ok(Outcome::ok(report.render(), json!(report)).failing_if(!report.passes))
        }
        Command::BinaryStructure { input, r, delta } => {
            let (_, m) = open(cli, input)?;
            let check = CodeAnalysis::new(&m)?.binary_structure_check(*r, *delta)?;
            let failed = check.applicable && !check.holds();
            Ok(Outcome::ok(check.render(), json!(check)).failing_if(failed))
        }
        Command::Echo { input } => {
            let (spec, _) = open(cli, input)?;
            Ok(Outcome::ok(spec.to_text(), json!({ "kind": spec.kind, "text": spec.to_text() })))
        }
    }
}
