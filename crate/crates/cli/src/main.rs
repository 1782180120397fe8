//! Command-line surface: generate pairs, verify the defining axioms,
//! analyze structure, test isomorphism, and batch-run the conjecture
//! harness over corpora of construction specs.
//!
//! Exit codes: 0 success, 1 semantic negative (an axiom fails, pairs are
//! not isomorphic, a conjecture check fails), 2 usage or input errors.

mod document;
mod reports;

use std::fs;
use std::path::{Path, PathBuf};
use std::process;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use tdpair::conjectures::{run_suite, Verdict};
use tdpair::constructions::{onsager_tensor, ConstructionSpec};
use tdpair::drinfeld::drinfeld_checks;
use tdpair::forms::{dual_iso_check, express_in_pair_algebra, four_iso_report, intertwining_space,
                    invariant_form, iso_solver, Dagger, IsoOutcome};
use tdpair::pair::{parameter_array, shape_factorization, split_decomposition, split_sequence,
                     verify_td_pair};
use tdpair::wire;
use tdpair::{Error, Matrix, TdPair};

use document::PairDocument;

#[derive(Parser)]
#[command(name = "tdpair", version, about = "Exact toolkit for tridiagonal pairs of Krawtchouk type")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a pair from a construction spec and write it to a file.
    Gen {
        /// Construction spec, e.g. "1:2" or "2:2,1:3" (rationals allowed: "1:1/2").
        spec: String,
        /// Output path for the pair document.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check the four defining axioms of a pair document.
    Verify {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Structural analysis of a verified pair.
    Analyze(AnalyzeArgs),
    /// Decide whether two pair documents are isomorphic.
    Iso {
        path1: PathBuf,
        path2: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run the conjecture harness on one pair document.
    Conjectures {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate and check every spec listed in a file (one spec per line).
    Corpus {
        /// Path to the spec list; blank lines and '#' comments are skipped.
        path: PathBuf,
        /// Number of worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct AnalyzeArgs {
    path: PathBuf,
    /// Shape vector and its geometric-sum factorizations.
    #[arg(long)]
    shape: bool,
    /// Split decomposition and split sequence for the canonical orderings.
    #[arg(long)]
    split: bool,
    /// Parameter array (θ; θ*; ζ).
    #[arg(long = "param-array")]
    param_array: bool,
    /// Drinfel'd polynomial (Krawtchouk-type pairs).
    #[arg(long)]
    drinfeld: bool,
    /// Gram matrix of the invariant bilinear form.
    #[arg(long)]
    form: bool,
    /// All of the above.
    #[arg(long)]
    all: bool,
    #[arg(long)]
    json: bool,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Gen { spec, output } => cmd_gen(&spec, &output),
        Command::Verify { path, json } => cmd_verify(&path, json),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Iso { path1, path2, json } => cmd_iso(&path1, &path2, json),
        Command::Conjectures { path, json } => cmd_conjectures(&path, json),
        Command::Corpus { path, jobs, json } => cmd_corpus(&path, jobs, json),
    }
}

fn cmd_gen(spec_str: &str, output: &Path) -> Result<i32> {
    let spec = ConstructionSpec::parse(spec_str)?;
    let pair = onsager_tensor(&spec)?;
    let doc = PairDocument::from_matrices(pair.a(), pair.astar(), Some(spec.to_string()));
    doc.save(output)?;
    println!(
        "wrote {} ({}x{} pair, diameter {}, shape {:?})",
        output.display(),
        pair.dim(),
        pair.dim(),
        pair.diameter(),
        pair.shape().rho()
    );
    Ok(0)
}

fn cmd_verify(path: &Path, as_json: bool) -> Result<i32> {
    let doc = PairDocument::load(path)?;
    let (a, astar) = doc.matrices()?;
    let report = verify_td_pair(&a, &astar).map_err(out_of_scope)?;
    if as_json {
        let body = json!({
            "command": "verify",
            "report": reports::verification_json(&report),
        });
        println!("{}", serde_json::to_string_pretty(&body)?);
    } else {
        println!("{}", reports::render_verification(&report));
    }
    Ok(if report.passes() { 0 } else { 1 })
}

/// Irrational spectra cannot be decided by this exact-rational toolkit;
/// map them to input errors rather than axiom failures.
fn out_of_scope(err: Error) -> anyhow::Error {
    match err {
        Error::IrrationalSpectrum { .. } => {
            anyhow!("{err}; this instance is outside the toolkit's exact-rational scope")
        }
        other => other.into(),
    }
}

fn load_pair(path: &Path) -> Result<(TdPair, Option<ConstructionSpec>)> {
    let doc = PairDocument::load(path)?;
    let (a, astar) = doc.matrices()?;
    let provenance = match &doc.provenance {
        Some(s) => Some(ConstructionSpec::parse(s).context("invalid provenance spec")?),
        None => None,
    };
    let pair = TdPair::new(a, astar).map_err(out_of_scope)?;
    Ok((pair, provenance))
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<i32> {
    let doc = PairDocument::load(&args.path)?;
    let (a, astar) = doc.matrices()?;
    let report = verify_td_pair(&a, &astar).map_err(out_of_scope)?;
    if !report.passes() {
        if args.json {
            let body = json!({
                "command": "analyze",
                "verified": false,
                "report": reports::verification_json(&report),
            });
            println!("{}", serde_json::to_string_pretty(&body)?);
        } else {
            println!("{}", reports::render_verification(&report));
        }
        return Ok(1);
    }
    let pair = TdPair::new(a, astar).map_err(out_of_scope)?;

    let want_shape = args.shape || args.all;
    let want_split = args.split || args.all;
    let want_pa = args.param_array || args.all;
    let want_drinfeld = args.drinfeld || args.all;
    let want_form = args.form || args.all;

    let krawtchouk = pair.is_krawtchouk();
    let mut body = json!({
        "command": "analyze",
        "verified": true,
        "dim": pair.dim(),
        "diameter": pair.diameter(),
        "krawtchouk": krawtchouk,
        "shape": pair.shape().rho(),
    });
    let mut lines = vec![format!(
        "{}x{} pair: diameter {}, shape {:?}, krawtchouk type: {}",
        pair.dim(),
        pair.dim(),
        pair.diameter(),
        pair.shape().rho(),
        krawtchouk
    )];

    if want_shape {
        let factorizations = shape_factorization(pair.shape());
        lines.push(format!("shape factorizations {{d_j}}: {factorizations:?}"));
        body["shape_factorizations"] = json!(factorizations);
    }
    let theta = pair.standard_orderings().theta[0].clone();
    let theta_star = pair.standard_orderings().theta_star[1].clone();
    if want_split {
        let split = split_decomposition(&pair, &theta, &theta_star)?;
        let mut split_doc = reports::split_json(&split);
        match split_sequence(&pair, &theta, &theta_star) {
            Ok(zeta) => {
                lines.push(format!(
                    "split sequence: {:?}",
                    wire::scalars_to_strings(&zeta)
                ));
                split_doc["zeta"] = json!(wire::scalars_to_strings(&zeta));
            }
            Err(Error::Rho0NotOne { dim }) => {
                lines.push(format!("split sequence: unavailable (dim U_0 = {dim})"));
                split_doc["zeta_unavailable"] = json!(format!("dim U_0 = {dim}"));
            }
            Err(e) => return Err(e.into()),
        }
        lines.push(format!("split subspace dimensions: {:?}", split.u_dims()));
        body["split"] = split_doc;
    }
    if want_pa {
        match parameter_array(&pair) {
            Ok(pa) => {
                lines.push(format!(
                    "parameter array: theta {:?}; theta* {:?}; zeta {:?}",
                    wire::scalars_to_strings(&pa.theta),
                    wire::scalars_to_strings(&pa.theta_star),
                    wire::scalars_to_strings(&pa.zeta)
                ));
                body["parameter_array"] = reports::parameter_array_json(&pa);
            }
            Err(Error::Rho0NotOne { dim }) => {
                lines.push(format!("parameter array: unavailable (dim U_0 = {dim})"));
                body["parameter_array_unavailable"] = json!(format!("dim U_0 = {dim}"));
            }
            Err(e) => return Err(e.into()),
        }
    }
    if want_drinfeld {
        if krawtchouk {
            let report = drinfeld_checks(&pair, None)?;
            lines.push(format!(
                "drinfeld polynomial: {}  (coefficients {:?}, value at 1: {})",
                report.poly.poly(),
                wire::scalars_to_strings(report.poly.poly().coeffs()),
                wire::scalar_to_string(&report.value_at_one)
            ));
            body["drinfeld"] = json!({
                "coefficients": wire::scalars_to_strings(report.poly.poly().coeffs()),
                "display": report.poly.poly().to_string(),
                "value_at_one": wire::scalar_to_string(&report.value_at_one),
                "constant_term_is_one": report.constant_term_is_one,
                "nonzero_at_one": report.nonzero_at_one,
            });
        } else {
            lines.push("drinfeld polynomial: not defined (pair is not of Krawtchouk type)".into());
            body["drinfeld_unavailable"] = json!("pair is not of Krawtchouk type");
        }
    }
    if want_form {
        match invariant_form(&pair) {
            Ok(form) => {
                lines.push(format!(
                    "invariant form: {:?}",
                    wire::matrix_to_rows(form.matrix())
                ));
                body["form"] = reports::matrix_json(form.matrix());
            }
            Err(Error::FormSpaceDimension(k)) => {
                lines.push(format!("invariant form: solution space has dimension {k}"));
                body["form_space_dimension"] = json!(k);
            }
            Err(e) => return Err(e.into()),
        }
    }

    if args.json {
        println!("{}", serde_json::to_string_pretty(&body)?);
    } else {
        println!("{}", lines.join("\n"));
    }
    Ok(0)
}

fn cmd_iso(path1: &Path, path2: &Path, as_json: bool) -> Result<i32> {
    let (p1, _) = load_pair(path1)?;
    let (p2, _) = load_pair(path2)?;
    match iso_solver(&p1, &p2)? {
        IsoOutcome::Isomorphic(w) => {
            // One multiplication per identity, so the certificate can be
            // re-verified from the emitted data alone.
            let g = &w.gamma;
            let first = (g * p1.a()) == (p2.a() * g);
            let second = (g * p1.astar()) == (p2.astar() * g);
            let invertible = g.is_invertible();
            if as_json {
                let body = json!({
                    "command": "iso",
                    "isomorphic": true,
                    "certificate": reports::matrix_json(g),
                    "identities": {
                        "gamma_A1_equals_A2_gamma": first,
                        "gamma_A1star_equals_A2star_gamma": second,
                        "gamma_invertible": invertible,
                    },
                });
                println!("{}", serde_json::to_string_pretty(&body)?);
            } else {
                println!("isomorphic; certificate:");
                println!("{:?}", wire::matrix_to_rows(g));
                println!(
                    "identities re-checked: gamma A1 = A2 gamma: {first}; gamma A1* = A2* gamma: {second}; invertible: {invertible}"
                );
            }
            Ok(0)
        }
        IsoOutcome::NonIsomorphic => {
            if as_json {
                let body = json!({"command": "iso", "isomorphic": false});
                println!("{}", serde_json::to_string_pretty(&body)?);
            } else {
                println!("not isomorphic (intertwiner space is zero)");
            }
            Ok(1)
        }
    }
}

fn cmd_conjectures(path: &Path, as_json: bool) -> Result<i32> {
    let (pair, _) = load_pair(path)?;
    let suite = run_suite(&pair)?;
    let mut body = json!({
        "command": "conjectures",
        "dim": pair.dim(),
        "suite": reports::suite_json(&suite),
    });
    // Certificates of the companion isomorphisms written in the pair
    // algebra, for Krawtchouk-type pairs.
    if pair.is_krawtchouk() {
        let four = four_iso_report(&pair)?;
        let exprs = [
            ("to_negated", &four.to_negated),
            ("to_swapped", &four.to_swapped),
            ("to_negated_swapped", &four.to_negated_swapped),
        ]
        .into_iter()
        .map(|(name, w)| {
            let expr = express_in_pair_algebra(&pair, &w.gamma);
            (name.to_string(), reports::expression_json(&expr))
        })
        .collect::<serde_json::Map<String, Value>>();
        body["intertwiners_in_pair_algebra"] = Value::Object(exprs);
    }
    if as_json {
        println!("{}", serde_json::to_string_pretty(&body)?);
    } else {
        println!("conjecture checks ({}x{} pair):", pair.dim(), pair.dim());
        println!("{}", reports::render_suite(&suite));
    }
    Ok(if suite.all_hold() { 0 } else { 1 })
}

/// Everything checked per corpus instance, with theorem-level failures
/// separated from conjecture verdicts.
struct InstanceOutcome {
    hard_failures: Vec<String>,
    conjecture_failures: Vec<String>,
    body: Value,
}

fn run_instance(spec_str: &str) -> Result<InstanceOutcome> {
    let spec = ConstructionSpec::parse(spec_str)?;
    let mut hard = Vec::new();
    let pair = onsager_tensor(&spec).map_err(out_of_scope)?;
    let mut body = json!({
        "spec": spec.to_string(),
        "dim": pair.dim(),
        "diameter": pair.diameter(),
        "shape": pair.shape().rho(),
    });

    // Shape factorization must exist and contain the generator's multiset.
    let mut generator_multiset: Vec<usize> = spec.factors().iter().map(|(d, _)| *d).collect();
    generator_multiset.sort_unstable();
    let factorizations = shape_factorization(pair.shape());
    if factorizations.is_empty() {
        hard.push("shape admits no geometric-sum factorization".into());
    } else if !factorizations.contains(&generator_multiset) {
        hard.push(format!(
            "generator multiset {generator_multiset:?} missing from factorizations {factorizations:?}"
        ));
    }
    body["shape_factorizations"] = json!(factorizations);

    match parameter_array(&pair) {
        Ok(pa) => {
            if pa.zeta[0] != tdpair::linalg::scalar::int(1) {
                hard.push("split sequence does not start at 1".into());
            }
            body["parameter_array"] = reports::parameter_array_json(&pa);
        }
        Err(e) => hard.push(format!("parameter array failed: {e}")),
    }

    match invariant_form(&pair) {
        Ok(form) => {
            body["form"] = reports::matrix_json(form.matrix());
            match Dagger::new(&pair) {
                Ok(dag) => {
                    if &dag.apply(pair.a()) != pair.a()
                        || &dag.apply(pair.astar()) != pair.astar()
                    {
                        hard.push("antiautomorphism does not fix the pair".into());
                    }
                }
                Err(e) => hard.push(format!("antiautomorphism failed: {e}")),
            }
        }
        Err(e) => hard.push(format!("invariant form failed: {e}")),
    }

    match four_iso_report(&pair) {
        Ok(four) => body["four_iso"] = reports::four_iso_json(&four),
        Err(e) => hard.push(format!("companion isomorphisms failed: {e}")),
    }
    match dual_iso_check(&pair) {
        Ok(report) => {
            if !report.form_is_certificate {
                hard.push("form matrix is not a dual-pair certificate".into());
            }
            body["dual_iso"] = reports::dual_iso_json(&report);
        }
        Err(e) => hard.push(format!("dual isomorphism failed: {e}")),
    }

    match drinfeld_checks(&pair, Some(&spec)) {
        Ok(report) => {
            if !report.passes() {
                hard.push("drinfeld polynomial violates constant-term/value-at-one".into());
            }
            body["drinfeld"] = json!({
                "coefficients": wire::scalars_to_strings(report.poly.poly().coeffs()),
                "value_at_one": wire::scalar_to_string(&report.value_at_one),
                "matches_factor_product": report.matches_factor_product,
            });
        }
        Err(e) => hard.push(format!("drinfeld polynomial failed: {e}")),
    }

    // Schur contract: self-intertwiners are exactly the scalar line.
    let self_space = intertwining_space(&[pair.a(), pair.astar()], &[pair.a(), pair.astar()]);
    let schur_ok =
        self_space.len() == 1 && self_space[0].proportional_to(&Matrix::identity(pair.dim()));
    if !schur_ok {
        hard.push(format!(
            "self-intertwiner space has dimension {} or is not scalar",
            self_space.len()
        ));
    }

    let suite = run_suite(&pair)?;
    let mut conjecture_failures = Vec::new();
    for r in &suite.reports {
        if r.verdict == Verdict::Fails {
            if r.id == "dolan-grady" || r.id == "shape-factorization" {
                hard.push(format!("{} fails", r.id));
            } else {
                conjecture_failures.push(r.id.to_string());
            }
        }
    }
    body["conjectures"] = reports::suite_json(&suite);
    body["hard_failures"] = json!(hard);
    body["conjecture_failures"] = json!(conjecture_failures);

    Ok(InstanceOutcome {
        hard_failures: hard,
        conjecture_failures,
        body,
    })
}

fn cmd_corpus(path: &Path, jobs: usize, as_json: bool) -> Result<i32> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read corpus list {}", path.display()))?;
    let specs: Vec<String> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect();
    if specs.is_empty() {
        bail!("corpus list contains no specs");
    }
    let jobs = jobs.clamp(1, specs.len());

    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<InstanceOutcome>>>> =
        Mutex::new((0..specs.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= specs.len() {
                    break;
                }
                let outcome = run_instance(&specs[i]);
                results.lock().unwrap()[i] = Some(outcome);
            });
        }
    });
    let collected = results.into_inner().unwrap();

    let mut bodies = Vec::new();
    let mut lines = Vec::new();
    let mut hard_total = 0usize;
    for (spec, outcome) in specs.iter().zip(collected) {
        let outcome = outcome.expect("every instance processed")?;
        let status = if outcome.hard_failures.is_empty() {
            if outcome.conjecture_failures.is_empty() {
                "ok".to_string()
            } else {
                format!(
                    "potential counterexample, conjecture failures: {:?}",
                    outcome.conjecture_failures
                )
            }
        } else {
            hard_total += 1;
            format!("HARD FAILURES: {:?}", outcome.hard_failures)
        };
        lines.push(format!("{spec}: {status}"));
        bodies.push(outcome.body);
    }
    if as_json {
        let body = json!({
            "command": "corpus",
            "instances": bodies,
            "hard_failure_count": hard_total,
        });
        println!("{}", serde_json::to_string_pretty(&body)?);
    } else {
        println!("{}", lines.join("\n"));
        println!(
            "{} instance(s), {} with hard failures",
            specs.len(),
            hard_total
        );
    }
    Ok(if hard_total == 0 { 0 } else { 1 })
}
