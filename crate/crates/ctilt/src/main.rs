//! `ctilt`: command-line front end for the cluster-tilted algebra engine.
//!
//! Quiver arguments accept an inline tuple list "(1,2), (2,3)", a file with
//! tuples or the JSON form {"n": .., "arrows": [[s,t], ..]}, or a reference
//! label addressed as "A7@E6" (append "^op" to the label for the opposite
//! quiver). Vertices are 1-based everywhere on the command line.
//!
//! Exit codes: 0 success, 2 parse error, 3 invariant violation,
//! 4 verification failure, 5 cap exceeded.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ctilt_core::classify::{
    classify, member_data, permutation_match, resolve_labels, sink_source_orbit, LabelIndex,
    PermutationMatch,
};
use ctilt_core::invariants::{associated_polynomial, asymmetry, char_poly, determinant, IntPolynomial};
use ctilt_core::mutation_class::{dynkin_seed, enumerate, DynkinType, MutationClass};
use ctilt_core::quiver::QuiverJson;
use ctilt_core::relations::synthesize;
use ctilt_core::tilting::{is_good_mutation, Algebra, Verdict};
use ctilt_core::{Error, Quiver};

#[derive(Parser, Debug)]
#[command(name = "ctilt", version, about = "Derived equivalence classification of cluster-tilted algebras of type E")]
struct Cli {
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Maximum number of members when enumerating a mutation class.
    #[arg(long, global = true, default_value_t = 10_000)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate the mutation class of a Dynkin type.
    Enumerate {
        #[arg(long = "type")]
        dynkin: DynkinType,
        /// List the sink/source orbits.
        #[arg(long)]
        orbits: bool,
        /// Write members, edges, orbits and label matches as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the zero and commutativity relations of a quiver's algebra.
    Relations {
        quiver: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the Cartan matrix row-wise.
    Cartan {
        quiver: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the determinant, integrality of the asymmetry, and polynomials.
    Invariants {
        quiver: String,
        #[arg(long)]
        json: bool,
    },
    /// Test whether mutating at a vertex is a good mutation; prints JSON.
    VerifyGoodMutation {
        #[arg(long)]
        quiver: String,
        /// 1-based vertex.
        #[arg(long)]
        vertex: usize,
        /// Label the mutated quiver must be sink/source equivalent to.
        #[arg(long)]
        expect: Option<String>,
        /// Relabeling onto the expected target, in cycle notation.
        #[arg(long, requires = "expect")]
        perm: Option<String>,
    },
    /// Classify a mutation class up to derived equivalence.
    Classify {
        #[arg(long = "type")]
        dynkin: DynkinType,
        #[arg(long, value_enum, default_value_t = ReportFormat::Md)]
        report: ReportFormat,
    },
    /// Export per-member data (quiver, orbit, labels, polynomial, Cartan).
    Export {
        #[arg(long = "type")]
        dynkin: DynkinType,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Md,
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportFormat {
    Json,
    Tsv,
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
    fn verification(message: impl Into<String>) -> Self {
        Failure { code: 4, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::VertexOutOfRange { .. } | Error::Loop(_) | Error::TwoCycle(..) => 2,
            Error::CapExceeded(_) => 5,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: cannot configure {t} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Enumerate { dynkin, orbits, json } => cmd_enumerate(*dynkin, *orbits, json.as_deref(), cli.cap),
        Command::Relations { quiver, json } => cmd_relations(&load(quiver, cli.cap)?.primary(), *json),
        Command::Cartan { quiver, json } => cmd_cartan(&load(quiver, cli.cap)?.primary(), *json),
        Command::Invariants { quiver, json } => cmd_invariants(&load(quiver, cli.cap)?.primary(), *json),
        Command::VerifyGoodMutation { quiver, vertex, expect, perm } => {
            cmd_verify(quiver, *vertex, expect.as_deref(), perm.as_deref(), cli.cap)
        }
        Command::Classify { dynkin, report } => cmd_classify(*dynkin, *report, cli.cap),
        Command::Export { dynkin, format, out } => cmd_export(*dynkin, *format, out.as_deref(), cli.cap),
    }
}

/// A resolved quiver argument. Labels may stand for several labeled quivers
/// (E6 labels are given by Cartan matrices, which can fit several
/// relabelings); all are kept, the first is the default.
struct Input {
    quivers: Vec<Quiver>,
    dynkin: Option<DynkinType>,
}

impl Input {
    fn primary(&self) -> Quiver {
        self.quivers[0].clone()
    }
}

fn load(arg: &str, cap: usize) -> CliResult<Input> {
    if let Some((label, t)) = arg.rsplit_once('@') {
        let t: DynkinType = t.parse()?;
        return Ok(Input { quivers: label_quivers(label.trim(), t, cap)?, dynkin: Some(t) });
    }
    let path = Path::new(arg);
    let text = if !arg.trim_start().starts_with('(') && path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Failure::parse(format!("{arg}: {e}")))?
    } else {
        arg.to_string()
    };
    Ok(Input { quivers: vec![parse_quiver_text(&text)?], dynkin: None })
}

/// Tuple list or JSON quiver.
fn parse_quiver_text(text: &str) -> CliResult<Quiver> {
    if text.trim_start().starts_with('{') {
        let j: QuiverJson =
            serde_json::from_str(text).map_err(|e| Failure::parse(format!("quiver JSON: {e}")))?;
        return Ok(Quiver::from_json(&j)?);
    }
    let q = Quiver::parse_tuples(text, None)?;
    if q.n() == 0 {
        return Err(Failure::parse("empty quiver"));
    }
    Ok(q)
}

fn enumerate_class(t: DynkinType, cap: usize) -> CliResult<MutationClass> {
    Ok(enumerate(&dynkin_seed(t), cap, true)?)
}

fn labels_for(t: DynkinType, class: &MutationClass) -> CliResult<LabelIndex> {
    let data = member_data(class)?;
    Ok(resolve_labels(t, class, &data)?)
}

/// Labeled quivers of the class standing for `label` (optionally "X^op").
fn label_quivers(label: &str, t: DynkinType, cap: usize) -> CliResult<Vec<Quiver>> {
    let (base, opposite) = match label.strip_suffix("^op") {
        Some(b) => (b, true),
        None => (label, false),
    };
    let class = enumerate_class(t, cap)?;
    let index = labels_for(t, &class)?;
    let Some(found) = index.get(base) else {
        let mut known: Vec<&str> = index.labels.keys().map(String::as_str).collect();
        known.sort_by_key(|l| (l.len(), l.to_string()));
        let known = if known.is_empty() { "none".to_string() } else { known.join(", ") };
        let reason = if index.unmatched.iter().any(|l| l == base) {
            "its arrow list is not in the mutation class"
        } else {
            "unknown label"
        };
        return Err(Failure::parse(format!("{base}@{t}: {reason}; known labels: {known}")));
    };
    Ok(found
        .iter()
        .map(|m| if opposite { m.quiver.opposite() } else { m.quiver.clone() })
        .collect())
}

fn cmd_enumerate(t: DynkinType, orbits: bool, json_out: Option<&Path>, cap: usize) -> CliResult<()> {
    let class = enumerate_class(t, cap)?;
    println!("{t}: {} members, {} sink/source orbits", class.len(), class.orbits().len());
    let need_labels = orbits || json_out.is_some();
    let labels_of = if need_labels {
        labels_for(t, &class)?.labels_of(class.len())
    } else {
        Vec::new()
    };
    if orbits {
        for (o, members) in class.orbits().iter().enumerate() {
            let rep = class.orbit_representative(o);
            let mut labels: Vec<&str> =
                members.iter().flat_map(|&m| labels_of[m].iter().map(String::as_str)).collect();
            labels.sort_by_key(|l| (l.len(), l.to_string()));
            labels.dedup();
            println!(
                "orbit {o}\tsize {}\tlabels [{}]\trepresentative {}",
                members.len(),
                labels.join(","),
                class.members[rep]
            );
        }
    }
    if let Some(path) = json_out {
        let members: Vec<Value> = class
            .members
            .iter()
            .enumerate()
            .map(|(m, q)| {
                json!({
                    "id": m,
                    "quiver": q.to_json(),
                    "tuples": q.to_string(),
                    "orbit": class.orbit_of(m),
                    "labels": labels_of[m],
                })
            })
            .collect();
        let edges: Vec<Value> =
            class.edges.iter().map(|&(m, k, t)| json!({"member": m, "vertex": k + 1, "target": t})).collect();
        let orbit_list: Vec<Value> = (0..class.orbits().len())
            .map(|o| json!({"members": class.orbits()[o], "representative": class.orbit_representative(o)}))
            .collect();
        let doc = json!({
            "type": t.to_string(),
            "members": members,
            "edges": edges,
            "orbits": orbit_list,
        });
        write_json(path, &doc)?;
    }
    Ok(())
}

fn write_json(path: &Path, v: &Value) -> CliResult<()> {
    let text = serde_json::to_string_pretty(v).expect("JSON values serialize");
    std::fs::write(path, text + "\n").map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn cmd_relations(q: &Quiver, as_json: bool) -> CliResult<()> {
    let rels = synthesize(q)?;
    let arrow = |(i, j): (usize, usize)| format!("{}->{}", i + 1, j + 1);
    let one_based = |v: &[usize]| v.iter().map(|x| x + 1).collect::<Vec<_>>();
    if as_json {
        let zeros: Vec<Value> = rels
            .zeros
            .iter()
            .map(|z| json!({"arrow": [z.arrow.0 + 1, z.arrow.1 + 1], "path": one_based(&z.path.vertices)}))
            .collect();
        let comms: Vec<Value> = rels
            .comms
            .iter()
            .map(|c| {
                json!({
                    "arrow": [c.arrow.0 + 1, c.arrow.1 + 1],
                    "paths": [one_based(&c.paths.0.vertices), one_based(&c.paths.1.vertices)],
                })
            })
            .collect();
        print_json(&json!({"zeros": zeros, "comms": comms}));
        return Ok(());
    }
    if rels.is_empty() {
        println!("no relations");
    }
    for z in &rels.zeros {
        println!("zero: {} (arrow {})", z.path, arrow(z.arrow));
    }
    for c in &rels.comms {
        println!("comm: {} = {} (arrow {})", c.paths.0, c.paths.1, arrow(c.arrow));
    }
    Ok(())
}

fn cmd_cartan(q: &Quiver, as_json: bool) -> CliResult<()> {
    let alg = Algebra::new(q)?;
    if as_json {
        print_json(&json!(alg.cartan));
    } else {
        for row in &alg.cartan {
            println!("{}", row.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
        }
    }
    Ok(())
}

fn cmd_invariants(q: &Quiver, as_json: bool) -> CliResult<()> {
    let alg = Algebra::new(q)?;
    let det = determinant(&alg.cartan)?;
    let s = asymmetry(&alg.cartan)?;
    let cp = char_poly(&s.s);
    let charpoly = if cp.iter().all(|c| c.is_integer()) {
        IntPolynomial::new(cp.iter().map(|c| c.to_integer()).collect()).to_string()
    } else {
        let coeffs: Vec<String> = cp.iter().map(ToString::to_string).collect();
        format!("coefficients (lowest degree first) [{}]", coeffs.join(", "))
    };
    let poly = associated_polynomial(&alg.cartan)?.normalized();
    if as_json {
        print_json(&json!({
            "determinant": det.to_string(),
            "asymmetry_integral": s.integral,
            "characteristic_polynomial": charpoly,
            "associated_polynomial": poly,
        }));
    } else {
        println!("determinant: {det}");
        println!("asymmetry integral: {}", s.integral);
        println!("characteristic polynomial: {charpoly}");
        println!("associated polynomial: {poly}");
    }
    Ok(())
}

fn match_name(p: PermutationMatch) -> &'static str {
    match p {
        PermutationMatch::Forward => "forward",
        PermutationMatch::Inverse => "inverse",
        PermutationMatch::ForwardUpToSinkSource => "forward_up_to_sink_source",
        PermutationMatch::InverseUpToSinkSource => "inverse_up_to_sink_source",
        PermutationMatch::NoMatch => "no_match",
        PermutationMatch::Malformed => "malformed",
    }
}

fn cmd_verify(arg: &str, vertex: usize, expect: Option<&str>, perm: Option<&str>, cap: usize) -> CliResult<()> {
    let input = load(arg, cap)?;
    let n = input.quivers[0].n();
    if vertex == 0 || vertex > n {
        return Err(Failure::parse(format!("vertex {vertex} out of range 1..={n}")));
    }
    let k = vertex - 1;
    // prefer a labeled quiver on which the mutation is good
    let mut chosen = None;
    for q in &input.quivers {
        let report = is_good_mutation(&Algebra::new(q)?, k)?;
        let good = report.verdict.is_good();
        if chosen.is_none() || good {
            chosen = Some((q.clone(), report));
        }
        if good {
            break;
        }
    }
    let (quiver, report) = chosen.expect("inputs are non-empty");
    let mut ok = report.verdict.is_good();
    let mut out = json!({
        "quiver": quiver.to_string(),
        "vertex": vertex,
        "verdict": report.verdict,
        "tilting": report.tilting.tilting,
        "happel_violations": report.tilting.happel_violations.len(),
        "endomorphism_cartan": report.endomorphism_cartan,
        "mutated": report.mutated.to_string(),
    });
    if let Some(label) = expect {
        let target_arg = match (label.contains('@'), input.dynkin) {
            (false, Some(t)) => format!("{label}@{t}"),
            (false, None) => {
                return Err(Failure::parse("--expect needs a Dynkin type, e.g. A3@E7"));
            }
            (true, _) => label.to_string(),
        };
        let targets = load(&target_arg, cap)?.quivers;
        let mutated_key = report.mutated.canonical_key()?;
        let mut equivalent = false;
        for t in &targets {
            for (r, _) in sink_source_orbit(t)? {
                if r.canonical_key()? == mutated_key {
                    equivalent = true;
                }
            }
        }
        ok &= equivalent;
        out["expect"] = json!({"label": target_arg, "sink_source_equivalent": equivalent});
        if let Some(p) = perm {
            let mut best: Option<PermutationMatch> = None;
            for t in &targets {
                let m = permutation_match(&report.mutated, t, p)?;
                if best.is_none_or(|b| m.preference() < b.preference()) {
                    best = Some(m);
                }
            }
            let m = best.expect("targets are non-empty");
            ok &= m.is_match();
            out["expect"]["permutation"] = json!(p);
            out["expect"]["permutation_match"] = json!(match_name(m));
        }
    }
    out["ok"] = json!(ok);
    print_json(&out);
    if ok {
        Ok(())
    } else {
        let why = match &report.verdict {
            Verdict::Good { .. } => "the mutation is good but does not match the expectation".to_string(),
            Verdict::NotTilting { .. } => "the complex is not tilting".to_string(),
            Verdict::TiltingButNotClusterTilted { reason } => {
                format!("tilting, but the endomorphism algebra is not that of the mutated quiver: {reason}")
            }
        };
        Err(Failure::verification(why))
    }
}

fn cmd_classify(t: DynkinType, format: ReportFormat, cap: usize) -> CliResult<()> {
    let c = classify(t, cap)?;
    let report = c.report();
    match format {
        ReportFormat::Md => print!("{}", report.to_markdown()),
        ReportFormat::Tsv => print!("{}", report.to_tsv()),
        ReportFormat::Json => print_json(&serde_json::to_value(&report).expect("report serializes")),
    }
    if report.theorem.pass {
        Ok(())
    } else {
        Err(Failure::verification(format!(
            "{} closure components for {} polynomial groups",
            report.theorem.components, report.theorem.polynomial_groups
        )))
    }
}

fn cmd_export(t: DynkinType, format: ExportFormat, out: Option<&Path>, cap: usize) -> CliResult<()> {
    let class = enumerate_class(t, cap)?;
    let data = member_data(&class)?;
    let labels_of = resolve_labels(t, &class, &data)?.labels_of(class.len());
    let text = match format {
        ExportFormat::Json => {
            let rows: Vec<Value> = class
                .members
                .iter()
                .zip(&data)
                .enumerate()
                .map(|(m, (q, d))| {
                    json!({
                        "id": m,
                        "orbit": class.orbit_of(m),
                        "labels": labels_of[m],
                        "quiver": q.to_json(),
                        "polynomial": d.polynomial,
                        "cartan": d.cartan,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&json!({"type": t.to_string(), "members": rows}))
                .expect("JSON values serialize")
                + "\n"
        }
        ExportFormat::Tsv => {
            let mut s = String::from("id\torbit\tlabels\tpolynomial\tquiver\tcartan\n");
            for (m, (q, d)) in class.members.iter().zip(&data).enumerate() {
                let cartan: Vec<String> = d
                    .cartan
                    .iter()
                    .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
                    .collect();
                s.push_str(&format!(
                    "{m}\t{}\t{}\t{}\t{q}\t{}\n",
                    class.orbit_of(m),
                    labels_of[m].join(","),
                    d.polynomial,
                    cartan.join("; ")
                ));
            }
            s
        }
    };
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::parse(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_error_kinds() {
        assert_eq!(Failure::from(Error::Parse("x".into())).code, 2);
        assert_eq!(Failure::from(Error::Loop(0)).code, 2);
        assert_eq!(Failure::from(Error::Invariant("x".into())).code, 3);
        assert_eq!(Failure::from(Error::CapExceeded("x".into())).code, 5);
    }

    #[test]
    fn quiver_text_accepts_tuples_and_json() {
        let a = parse_quiver_text("(1,2), (2,3)").unwrap();
        let b = parse_quiver_text(r#"{"n": 3, "arrows": [[1,2],[2,3]]}"#).unwrap();
        assert_eq!(a, b);
        assert!(parse_quiver_text("(1,1)").is_err());
        assert!(parse_quiver_text("").is_err());
    }

    #[test]
    fn unknown_labels_list_the_known_ones() {
        let e = label_quivers("A999", DynkinType::E6, 10_000).unwrap_err();
        assert_eq!(e.code, 2);
        assert!(e.message.contains("A7"), "{}", e.message);
    }
}
