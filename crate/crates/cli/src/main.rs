//! `specker`: exact computation and verification on finite Specker algebras.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage or input errors.

mod load;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use specker_core::json::{element_to_json, flat_to_json, morphism_to_json, proximity_to_json};
use specker_core::morphisms::{functor_sp, id_sp_roundtrip, naturality_check, sp_id_roundtrip};
use specker_core::oracle::{all_pass, DiffStatus, OpTable};
use specker_core::*;

use load::{usage, CliResult};

#[derive(Parser)]
#[command(
    name = "specker",
    version,
    about = "Exact computation in Specker algebras over totally ordered domains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Boolean algebra document, e.g. {"atoms": ["p","q"]}
    #[arg(long, global = true, value_name = "FILE")]
    algebra: Option<String>,
    /// Proximity document, or `leq`
    #[arg(long, global = true, value_name = "FILE|leq")]
    proximity: Option<String>,
    /// Term over the generators x_p, x_q, ...
    #[arg(long, global = true, value_name = "STRING")]
    expr: Option<String>,
    /// Morphism document; repeat for `compose`
    #[arg(long, global = true, value_name = "FILE")]
    morphism: Vec<String>,
    #[arg(long, global = true, default_value_t = 200)]
    samples: usize,
    #[arg(long = "coeff-bound", global = true, default_value_t = 10)]
    coeff_bound: i64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Scalar domain
    #[arg(long, global = true, value_enum, default_value_t = Domain::Int)]
    domain: Domain,
    /// Print JSON instead of canonical text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Domain {
    Int,
    Rat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rep {
    Perp,
    Flat,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of --expr (or of an element argument)
    Normalize {
        element: Option<String>,
    },
    /// Pointwise values at each atom
    Eval {
        element: Option<String>,
    },
    /// Switch between orthogonal and step-function form
    Convert {
        element: Option<String>,
        /// Target form; defaults to the other one
        #[arg(long, value_enum)]
        to: Option<Rep>,
    },
    /// Compare two elements: LEQ, GEQ, EQUAL or INCOMPARABLE
    Order {
        left: String,
        right: String,
    },
    Meet {
        left: String,
        right: String,
    },
    Join {
        left: String,
        right: String,
    },
    /// Check the de Vries axioms D1–D7 exhaustively
    CheckDevries,
    /// List every de Vries proximity on a small algebra
    EnumerateDevries,
    /// With --proximity: decide s ≺ t. With --morphism: the image of each element.
    Lift {
        elements: Vec<String>,
    },
    /// Sample the lifted proximity axioms P1–P10
    CheckProx,
    /// Check M1–M4 on idempotents, then sample M1–M7 on the lift
    CheckMorphism,
    /// The ⋆-composite of the --morphism arguments, first applied first
    Compose,
    /// Round trips between de Vries algebras and their powers, plus naturality
    EquivCheck,
    /// Differential test of every operation against the pointwise oracle
    OracleDiff,
}

/// What a command concluded, beyond having printed its output.
enum Verdict {
    Ok,
    Failed,
}

impl Verdict {
    fn from(passed: bool) -> Self {
        if passed {
            Verdict::Ok
        } else {
            Verdict::Failed
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.opts.domain {
        Domain::Int => run::<Int>(&cli.command, &cli.opts),
        Domain::Rat => run::<Rat>(&cli.command, &cli.opts),
    };
    match result {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn config(opts: &Opts) -> SampleConfig {
    SampleConfig {
        samples: opts.samples,
        coeff_bound: opts.coeff_bound,
        seed: opts.seed,
    }
}

fn sampling_header(opts: &Opts) -> String {
    format!(
        "seed {}, {} samples, coefficients in [-{k}, {k}]",
        opts.seed,
        opts.samples,
        k = opts.coeff_bound
    )
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("values serialize")
    );
}

fn report_json(report: &ProxReport) -> Value {
    json!({ "passed": report.passed(), "outcomes": report.outcomes })
}

fn sampled_report_json(opts: &Opts, report: &ProxReport) -> Value {
    let mut v = report_json(report);
    v["seed"] = json!(opts.seed);
    v["samples"] = json!(opts.samples);
    v["coeff_bound"] = json!(opts.coeff_bound);
    v
}

fn print_element<D: Scalar>(opts: &Opts, x: &Element<D>) {
    if opts.json {
        print_json(&element_to_json(x));
    } else {
        println!("{}", x.to_text());
    }
}

/// The element argument, falling back to --expr.
fn single_element<D: Scalar>(opts: &Opts, arg: &Option<String>) -> CliResult<Element<D>> {
    let alg = load::algebra(opts.algebra.as_deref())?;
    match (arg, &opts.expr) {
        (Some(arg), None) => load::element(&alg, arg),
        (None, Some(expr)) => Ok(Element::Perp(presentation::normalize_text(expr, &alg)?)),
        (Some(_), Some(_)) => Err(usage("give either an element or --expr, not both")),
        (None, None) => Err(usage("an element or --expr is required")),
    }
}

fn element_pair<D: Scalar>(
    opts: &Opts,
    left: &str,
    right: &str,
) -> CliResult<(Element<D>, Element<D>)> {
    let alg = load::algebra(opts.algebra.as_deref())?;
    Ok((load::element(&alg, left)?, load::element(&alg, right)?))
}

fn morphism_text(m: &DVMorphism) -> String {
    m.source()
        .algebra()
        .elements()
        .map(|e| format!("{e} ↦ {}", m.apply(&e)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn run<D: Scalar>(command: &Command, opts: &Opts) -> CliResult<Verdict> {
    match command {
        Command::Normalize { element } => {
            let x = single_element::<D>(opts, element)?;
            print_element(opts, &Element::Perp(x.to_perp()));
        }
        Command::Eval { element } => {
            let f = stone_eval_perp(&single_element::<D>(opts, element)?.to_perp());
            if opts.json {
                print_json(&load::point_to_json(&f));
            } else {
                println!("{f}");
            }
        }
        Command::Convert { element, to } => {
            let x = single_element::<D>(opts, element)?;
            let target = to.unwrap_or(match x {
                Element::Perp(_) => Rep::Flat,
                Element::Flat(_) => Rep::Perp,
            });
            let out = match target {
                Rep::Perp => Element::Perp(x.to_perp()),
                Rep::Flat => Element::Flat(x.to_flat()),
            };
            print_element(opts, &out);
        }
        Command::Order { left, right } => {
            let (s, t) = element_pair::<D>(opts, left, right)?;
            let (s, t) = (s.to_perp(), t.to_perp());
            let answer = match (s.leq(&t)?, t.leq(&s)?) {
                (true, true) => "EQUAL",
                (true, false) => "LEQ",
                (false, true) => "GEQ",
                (false, false) => "INCOMPARABLE",
            };
            if opts.json {
                print_json(&json!({ "order": answer }));
            } else {
                println!("{answer}");
            }
        }
        Command::Meet { left, right } | Command::Join { left, right } => {
            let is_meet = matches!(command, Command::Meet { .. });
            let (s, t) = element_pair::<D>(opts, left, right)?;
            // The answer keeps the form of the first argument.
            let out = match &s {
                Element::Perp(f) => {
                    let g = t.to_perp();
                    Element::Perp(if is_meet { f.meet(&g)? } else { f.join(&g)? })
                }
                Element::Flat(f) => {
                    let g = t.to_flat();
                    Element::Flat(if is_meet { f.meet(&g)? } else { f.join(&g)? })
                }
            };
            print_element(opts, &out);
        }
        Command::CheckDevries => {
            let alg = load::algebra(opts.algebra.as_deref())?;
            let rel = load::proximity(&alg, opts.proximity.as_deref())?;
            let report = check_devries(&rel)?;
            if opts.json {
                print_json(&report_json(&report));
            } else {
                println!("{}", report.summary());
            }
            return Ok(Verdict::from(report.passed()));
        }
        Command::EnumerateDevries => {
            let alg = load::algebra(opts.algebra.as_deref())?;
            let found = enumerate_devries(&alg)?;
            for rel in &found {
                if opts.json {
                    // One document per line, each loadable with --proximity.
                    println!("{}", proximity_to_json(rel)?);
                } else if rel.is_order() {
                    println!("leq");
                } else {
                    println!("{rel}");
                }
            }
            if !opts.json {
                println!("{} proximities", found.len());
            }
        }
        Command::Lift { elements } => return lift::<D>(opts, elements),
        Command::CheckProx => {
            let alg = load::algebra(opts.algebra.as_deref())?;
            let rel = load::proximity(&alg, opts.proximity.as_deref())?;
            let base = check_devries(&rel)?;
            if !base.passed() {
                println!("FAIL not a de Vries proximity: {}", base.summary());
                return Ok(Verdict::Failed);
            }
            let report = prox_axiom_sample::<D>(&DeVriesAlgebra::new(rel)?, &config(opts));
            if opts.json {
                print_json(&sampled_report_json(opts, &report));
            } else {
                println!("{}", sampling_header(opts));
                println!("{}", report.summary());
            }
            return Ok(Verdict::from(report.passed()));
        }
        Command::CheckMorphism => {
            let [path] = opts.morphism.as_slice() else {
                return Err(usage("check-morphism takes exactly one --morphism"));
            };
            let m = load::morphism(path)?;
            let base = check_dv_morphism(&m);
            let lifted = if base.passed() {
                Some(check_prox_morphism_sample(
                    &lift_morphism::<D>(&m)?,
                    &config(opts),
                )?)
            } else {
                None
            };
            let passed = base.passed() && lifted.as_ref().is_some_and(ProxReport::passed);
            if opts.json {
                let mut v = json!({ "passed": passed, "idempotent": report_json(&base) });
                if let Some(r) = &lifted {
                    v["lifted"] = sampled_report_json(opts, r);
                }
                print_json(&v);
            } else {
                println!("idempotents: {}", base.summary());
                match &lifted {
                    Some(r) => println!("lift ({}): {}", sampling_header(opts), r.summary()),
                    None => println!("lift: skipped"),
                }
            }
            return Ok(Verdict::from(passed));
        }
        Command::Compose => {
            let maps = opts
                .morphism
                .iter()
                .map(|p| load::morphism(p))
                .collect::<CliResult<Vec<_>>>()?;
            let (first, rest) = maps
                .split_first()
                .ok_or_else(|| usage("compose needs at least one --morphism"))?;
            let mut composite = first.clone();
            for m in rest {
                composite = star_compose_dv(m, &composite)?;
            }
            if opts.json {
                print_json(&morphism_to_json(&composite)?);
            } else {
                println!("{}", morphism_text(&composite));
            }
        }
        Command::EquivCheck => return equiv_check::<D>(opts),
        Command::OracleDiff => {
            let alg = match &opts.algebra {
                Some(path) => load::algebra(Some(path))?,
                None => Algebra::new(&["p", "q"])?,
            };
            let records = oracle_diff::<D>(&alg, &config(opts), &OpTable::default());
            if opts.json {
                for r in &records {
                    println!("{}", serde_json::to_string(r)?);
                }
            } else {
                println!("{}", sampling_header(opts));
                for r in &records {
                    match (r.status, &r.witness) {
                        (DiffStatus::Pass, _) => println!("PASS {} ({} cases)", r.op, r.case),
                        (DiffStatus::Fail, w) => println!(
                            "FAIL {} at case {}: {}",
                            r.op,
                            r.case,
                            w.as_deref().unwrap_or("no witness")
                        ),
                    }
                }
            }
            return Ok(Verdict::from(all_pass(&records)));
        }
    }
    Ok(Verdict::Ok)
}

fn lift<D: Scalar>(opts: &Opts, elements: &[String]) -> CliResult<Verdict> {
    match opts.morphism.as_slice() {
        [] => {
            let [s, t] = elements else {
                return Err(usage("lift with a proximity takes two elements"));
            };
            let alg = load::algebra(opts.algebra.as_deref())?;
            let dv = load::devries(&alg, opts.proximity.as_deref())?;
            let (s, t) = (load::element::<D>(&alg, s)?, load::element::<D>(&alg, t)?);
            let related = lift_check(&dv, &s.to_flat(), &t.to_flat())?;
            let answer = if related { "RELATED" } else { "UNRELATED" };
            if opts.json {
                print_json(&json!({ "related": related }));
            } else {
                println!("{answer}");
            }
        }
        [path] => {
            if elements.is_empty() {
                return Err(usage("lift with a morphism takes at least one element"));
            }
            let m = load::morphism(path)?;
            let pm = lift_morphism::<D>(&m)?;
            for arg in elements {
                let x = load::element::<D>(m.source().algebra(), arg)?;
                let image = pm.apply(&x.to_flat())?;
                if opts.json {
                    println!("{}", flat_to_json(&image));
                } else {
                    println!("{}", image.to_text());
                }
            }
        }
        _ => return Err(usage("lift takes at most one --morphism")),
    }
    Ok(Verdict::Ok)
}

fn equiv_check<D: Scalar>(opts: &Opts) -> CliResult<Verdict> {
    let alg = load::algebra(opts.algebra.as_deref())?;
    let dv = load::devries(&alg, opts.proximity.as_deref())?;
    let cfg = config(opts);
    let mut sections = vec![
        ("Id∘Sp".to_string(), id_sp_roundtrip::<D>(&dv)?),
        (
            "Sp∘Id".to_string(),
            sp_id_roundtrip::<D>(&functor_sp(&dv), &cfg)?,
        ),
    ];
    let maps = if opts.morphism.is_empty() {
        // Without explicit maps, every endomorphism of (B, ≤).
        if dv.rel().is_order() {
            enumerate_boolean_homs(&alg, &alg)?
        } else {
            Vec::new()
        }
    } else {
        opts.morphism
            .iter()
            .map(|p| load::morphism(p))
            .collect::<CliResult<Vec<_>>>()?
    };
    for m in &maps {
        let pm = lift_morphism::<D>(m)?;
        sections.push((
            format!("naturality {}", morphism_text(m)),
            naturality_check(&pm, &cfg)?,
        ));
    }
    let passed = sections.iter().all(|(_, r)| r.passed());
    if opts.json {
        let parts: Vec<Value> = sections
            .iter()
            .map(|(name, r)| json!({ "check": name, "report": report_json(r) }))
            .collect();
        print_json(&json!({
            "passed": passed,
            "seed": opts.seed,
            "samples": opts.samples,
            "checks": parts,
        }));
    } else {
        println!("{}", sampling_header(opts));
        for (name, r) in &sections {
            println!("{name}: {}", r.summary());
        }
    }
    Ok(Verdict::from(passed))
}
