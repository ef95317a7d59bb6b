//! Command-line front end: parses JSON inputs, dispatches to the library,
//! and emits machine-readable reports (or a plain-text rendering of them).
//!
//! Exit codes: 0 = success / affirmative answer, 1 = well-formed negative
//! answer (not liftable, not preserved, infeasible), 2 = input or usage
//! error. Every exit-1 report carries a machine-checkable certificate.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hochlift::error::Error;
use hochlift::hochschild::{CochainSpace, CoboundaryOutcome};
use hochlift::json as hj;
use hochlift::lift::{
    antisym_check, decide_lift, LiftDecision, PoissonCenter, SymmetricSolveOutcome,
};
use hochlift::{azumaya, weyl};

#[derive(Parser)]
#[command(
    name = "hochlift",
    about = "Exact lifting obstructions for algebra endomorphisms",
    version
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_parser = ["json", "text"], default_value = "json")]
    format: String,
    /// RNG seed for the property-based commands (selftest).
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure-constant algebra utilities.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Hochschild cochain computations.
    Hochschild {
        #[command(subcommand)]
        cmd: HochschildCmd,
    },
    /// Flat-lift decisions and center diagnostics.
    Lift {
        #[command(subcommand)]
        cmd: LiftCmd,
    },
    /// Separability and center-preservation diagnostics.
    Azumaya {
        #[command(subcommand)]
        cmd: AzumayaCmd,
    },
    /// Symbolic Weyl algebras in characteristic p.
    Weyl {
        #[command(subcommand)]
        cmd: WeylCmd,
    },
    /// Run the deterministic invariant suites.
    Selftest,
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Check associativity, unitality, and commutativity.
    Validate { algebra: PathBuf },
    /// Compute the center.
    Center { algebra: PathBuf },
}

#[derive(Subcommand)]
enum HochschildCmd {
    /// Cohomology dimension of the twisted complex in one degree.
    Dim {
        algebra: PathBuf,
        endo: PathBuf,
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    /// Check whether a degree-2 cochain is a cocycle.
    CocycleCheck {
        algebra: PathBuf,
        endo: PathBuf,
        cochain: PathBuf,
    },
    /// Solve the coboundary equation δ¹h = c.
    Solve {
        algebra: PathBuf,
        endo: PathBuf,
        cochain: PathBuf,
        /// Assert that the base is (a truncation of) a formally smooth
        /// algebra: an infeasible symmetric cocycle is then flagged.
        #[arg(long)]
        assert_formally_smooth: bool,
    },
}

#[derive(Subcommand)]
enum LiftCmd {
    /// Decide multiplicative liftability of an endomorphism.
    Decide { flatlift: PathBuf, endo: PathBuf },
    /// The Poisson bracket table on the center with the axiom checks.
    Poisson { flatlift: PathBuf },
    /// The antisymmetrization comparison on the center.
    Antisym { flatlift: PathBuf, endo: PathBuf },
}

#[derive(Subcommand)]
enum AzumayaCmd {
    /// Separability over the center, summarized.
    Check { algebra: PathBuf },
    /// Does a unital ring endomorphism preserve the center?
    CenterPreserved { algebra: PathBuf, endo: PathBuf },
    /// The separability element itself, when it exists.
    Separability { algebra: PathBuf },
}

#[derive(Args)]
struct WeylLiftArgs {
    endo: PathBuf,
    /// Total-degree bound for the correction ansatz.
    #[arg(long, default_value_t = 8)]
    degree_bound: u32,
}

#[derive(Subcommand)]
enum WeylCmd {
    /// Verify the Weyl relations on generator images.
    EndoCheck { endo: PathBuf },
    /// Decide liftability to A_n(Z/p²) via the bracket criterion.
    Decide { endo: PathBuf },
    /// Search for an explicit lift with bounded-degree corrections.
    Lift(WeylLiftArgs),
    /// The computed bracket constants of the canonical lift.
    BracketConstants {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch(_) => "dimension-mismatch",
        Error::Domain(_) => "domain",
        Error::DegreeOutOfRange(_) => "degree-out-of-range",
        Error::NotACocycle => "not-a-cocycle",
        Error::NotASubalgebra(_) => "not-a-subalgebra",
        Error::NotAMorphism(_) => "not-a-morphism",
        Error::NotALift(_) => "not-a-lift",
        Error::NotAssociative => "not-associative",
        Error::NotALinearLift => "not-a-linear-lift",
        Error::NotCentral => "not-central",
        Error::CenterNotPreserved => "center-not-preserved",
        Error::NotCommutative => "not-commutative",
        Error::NotDiagonal => "not-diagonal",
        Error::NotARingMorphism(_) => "not-a-ring-morphism",
        Error::MismatchedSignature(_) => "mismatched-signature",
        Error::NotAnEndo => "not-an-endo",
        Error::NotCentralMonomial(_) => "not-central",
        Error::InvalidInput(_) => "invalid-input",
        Error::Internal(_) => "internal",
    }
}

fn load_json(path: &Path) -> Result<Value, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

/// A finished report plus the affirmative/negative verdict for the exit
/// code.
struct Report {
    body: Value,
    affirmative: bool,
}

fn ok(body: Value) -> Result<Report, Error> {
    Ok(Report {
        body,
        affirmative: true,
    })
}

fn verdict(body: Value, affirmative: bool) -> Result<Report, Error> {
    Ok(Report { body, affirmative })
}

fn run(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        Command::Algebra { cmd } => match cmd {
            AlgebraCmd::Validate { algebra } => {
                let v = load_json(algebra)?;
                let rep = match hj::algebra_from_json(&v)? {
                    hj::ParsedAlgebra::Field(a) => a.validate(),
                    hj::ParsedAlgebra::Ring(a) => a.validate(),
                };
                verdict(
                    json!({
                        "associative": rep.associative,
                        "unital": rep.unital,
                        "commutative": rep.commutative,
                    }),
                    rep.associative && rep.unital,
                )
            }
            AlgebraCmd::Center { algebra } => {
                let a = hj::field_algebra_from_json(&load_json(algebra)?)?;
                let z = a.center();
                ok(json!({"center": hj::subspace_to_json(&z)}))
            }
        },
        Command::Hochschild { cmd } => match cmd {
            HochschildCmd::Dim {
                algebra,
                endo,
                degree,
            } => {
                let a = hj::field_algebra_from_json(&load_json(algebra)?)?;
                let f = hj::lin_map_from_json(a.gf(), &load_json(endo)?)?;
                if !a.is_algebra_morphism(&f)? {
                    return Err(Error::NotAMorphism("twist must be an algebra morphism".into()));
                }
                let space = CochainSpace::full(&a, f)?;
                let dim = space.hh_dim(*degree)?;
                ok(json!({"degree": degree, "hh_dim": dim}))
            }
            HochschildCmd::CocycleCheck {
                algebra,
                endo,
                cochain,
            } => {
                let a = hj::field_algebra_from_json(&load_json(algebra)?)?;
                let f = hj::lin_map_from_json(a.gf(), &load_json(endo)?)?;
                let c = hj::cochain_from_json(a.gf(), a.dim(), a.dim(), &load_json(cochain)?)?;
                let space = CochainSpace::full(&a, f)?;
                let is = space.is_cocycle(&c)?;
                verdict(json!({"is_cocycle": is}), is)
            }
            HochschildCmd::Solve {
                algebra,
                endo,
                cochain,
                assert_formally_smooth,
            } => {
                let a = hj::field_algebra_from_json(&load_json(algebra)?)?;
                let gf = a.gf();
                let f = hj::lin_map_from_json(gf, &load_json(endo)?)?;
                let c = hj::cochain_from_json(gf, a.dim(), a.dim(), &load_json(cochain)?)?;
                let space = CochainSpace::full(&a, f)?;
                if *assert_formally_smooth && c.is_symmetric() && a.validate().commutative {
                    match hochlift::lift::symmetric_coboundary_check(
                        &space,
                        &c,
                        true,
                    )? {
                        SymmetricSolveOutcome::Solved { h } => ok(json!({
                            "solved": true,
                            "primitive": hj::cochain_to_json(gf, &h),
                        })),
                        SymmetricSolveOutcome::Infeasible {
                            row,
                            witness,
                            expectation_violated,
                        } => verdict(
                            json!({
                                "solved": false,
                                "infeasible_row": row,
                                "infeasibility_witness": witness
                                    .iter()
                                    .map(|&x| hj::JsonRing::elem_to_json(&gf, x))
                                    .collect::<Vec<_>>(),
                                "formally_smooth_asserted": true,
                                "expectation_violated": expectation_violated,
                            }),
                            false,
                        ),
                    }
                } else {
                    match space.coboundary_solve(&c)? {
                        CoboundaryOutcome::Solved(h) => ok(json!({
                            "solved": true,
                            "primitive": hj::cochain_to_json(gf, &h),
                        })),
                        CoboundaryOutcome::Infeasible { row, witness } => verdict(
                            json!({
                                "solved": false,
                                "infeasible_row": row,
                                "infeasibility_witness": witness
                                    .iter()
                                    .map(|&x| hj::JsonRing::elem_to_json(&gf, x))
                                    .collect::<Vec<_>>(),
                            }),
                            false,
                        ),
                    }
                }
            }
        },
        Command::Lift { cmd } => match cmd {
            LiftCmd::Decide { flatlift, endo } => {
                let l = hj::flat_lift_from_json(&load_json(flatlift)?)?;
                let f = hj::lin_map_from_json(l.gf(), &load_json(endo)?)?;
                let decision = decide_lift(&l, &f)?;
                let liftable = matches!(decision, LiftDecision::Lifts { .. });
                verdict(hj::decision_to_json(&l, &f, &decision), liftable)
            }
            LiftCmd::Poisson { flatlift } => {
                let l = hj::flat_lift_from_json(&load_json(flatlift)?)?;
                let gf = l.gf();
                let pc = PoissonCenter::new(&l)?;
                let table: Vec<Value> = pc
                    .table
                    .iter()
                    .enumerate()
                    .flat_map(|(i, row)| {
                        row.iter()
                            .enumerate()
                            .map(move |(j, v)| (i, j, v))
                    })
                    .filter(|(_, _, v)| !v.iter().all(|&x| gf.is_zero(x)))
                    .map(|(i, j, v)| {
                        json!({
                            "i": i,
                            "j": j,
                            "val": v.iter().map(|&x| hj::JsonRing::elem_to_json(&gf, x)).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                ok(json!({
                    "center_dim": pc.center.dim(),
                    "table": table,
                    "antisymmetric": pc.antisymmetric(&l)?,
                    "jacobi": pc.jacobi(&l)?,
                    "leibniz": pc.leibniz(&l)?,
                }))
            }
            LiftCmd::Antisym { flatlift, endo } => {
                let l = hj::flat_lift_from_json(&load_json(flatlift)?)?;
                let gf = l.gf();
                let f = hj::lin_map_from_json(gf, &load_json(endo)?)?;
                let rep = antisym_check(&l, &f)?;
                let mismatch = rep.mismatch.as_ref().map(|m| {
                    json!({
                        "i": m.i,
                        "j": m.j,
                        "lhs": m.lhs.iter().map(|&x| hj::JsonRing::elem_to_json(&gf, x)).collect::<Vec<_>>(),
                        "rhs": m.rhs.iter().map(|&x| hj::JsonRing::elem_to_json(&gf, x)).collect::<Vec<_>>(),
                    })
                });
                let preserved = rep.bracket_preserved;
                verdict(
                    json!({
                        "identity_holds": rep.identity_holds,
                        "symmetric": rep.symmetric,
                        "poisson_preserved": preserved,
                        "mismatch": mismatch,
                    }),
                    preserved,
                )
            }
        },
        Command::Azumaya { cmd } => match cmd {
            AzumayaCmd::Check { algebra } => {
                let a = hj::field_algebra_from_json(&load_json(algebra)?)?;
                let z = a.center();
                let found = matches!(
                    azumaya::separability_element(&a, &z)?,
                    azumaya::SeparabilityOutcome::Found(_)
                );
                verdict(
                    json!({
                        "separable_over_center": found,
                        "center_dim": z.dim(),
                    }),
                    found,
                )
            }
            AzumayaCmd::CenterPreserved { algebra, endo } => {
                let a = hj::field_algebra_from_json(&load_json(algebra)?)?;
                let gf = a.gf();
                let f = hj::lin_map_from_json(gf, &load_json(endo)?)?;
                match azumaya::center_preserved(&a, &f)? {
                    azumaya::CenterPreservation::Preserved => verdict(
                        json!({"preserved": true, "witness": Value::Null}),
                        true,
                    ),
                    azumaya::CenterPreservation::Violated { witness, image } => verdict(
                        json!({
                            "preserved": false,
                            "witness": witness.iter().map(|&x| hj::JsonRing::elem_to_json(&gf, x)).collect::<Vec<_>>(),
                            "image": image.iter().map(|&x| hj::JsonRing::elem_to_json(&gf, x)).collect::<Vec<_>>(),
                        }),
                        false,
                    ),
                }
            }
            AzumayaCmd::Separability { algebra } => {
                let a = hj::field_algebra_from_json(&load_json(algebra)?)?;
                let gf = a.gf();
                let z = a.center();
                match azumaya::separability_element(&a, &z)? {
                    azumaya::SeparabilityOutcome::Found(e) => {
                        let d = a.dim();
                        let pairs: Vec<Value> = (0..d * d)
                            .filter(|&idx| !gf.is_zero(e.tensor[idx]))
                            .map(|idx| {
                                json!({
                                    "i": idx / d,
                                    "j": idx % d,
                                    "c": hj::JsonRing::elem_to_json(&gf, e.tensor[idx]),
                                })
                            })
                            .collect();
                        verdict(json!({"found": true, "element": pairs}), true)
                    }
                    azumaya::SeparabilityOutcome::NotFound { row, witness } => verdict(
                        json!({
                            "found": false,
                            "infeasible_row": row,
                            "infeasibility_witness": witness
                                .iter()
                                .map(|&x| hj::JsonRing::elem_to_json(&gf, x))
                                .collect::<Vec<_>>(),
                        }),
                        false,
                    ),
                }
            }
        },
        Command::Weyl { cmd } => match cmd {
            WeylCmd::EndoCheck { endo } => {
                let f = hj::weyl_endo_from_json(&load_json(endo)?)?;
                let is = weyl::is_weyl_endo(&f)?;
                verdict(json!({"is_endo": is}), is)
            }
            WeylCmd::Decide { endo } => {
                let f = hj::weyl_endo_from_json(&load_json(endo)?)?;
                let rep = weyl::decide_weyl_lift(&f)?;
                verdict(weyl_report_json(&rep), rep.preserved)
            }
            WeylCmd::Lift(args) => {
                let f = hj::weyl_endo_from_json(&load_json(&args.endo)?)?;
                let decision = weyl::decide_weyl_lift(&f)?;
                match weyl::search_lift(&f, args.degree_bound)? {
                    weyl::SearchOutcome::Found { images_x, images_d } => ok(json!({
                        "found": true,
                        "degree_bound": args.degree_bound,
                        "images_x": images_x.iter().map(hj::weyl_elem_to_json).collect::<Vec<_>>(),
                        "images_d": images_d.iter().map(hj::weyl_elem_to_json).collect::<Vec<_>>(),
                        "decision": weyl_report_json(&decision),
                    })),
                    weyl::SearchOutcome::NotFoundWithinBound => verdict(
                        json!({
                            "found": false,
                            "degree_bound": args.degree_bound,
                            "note": "a bounded search is not a proof of non-liftability; the decision field is decisive",
                            "decision": weyl_report_json(&decision),
                        }),
                        false,
                    ),
                }
            }
            WeylCmd::BracketConstants { p, n } => {
                let c = weyl::bracket_constants(*p, *n)?;
                ok(hj::bracket_constants_to_json(&c))
            }
        },
        Command::Selftest => {
            let report = hochlift::selftest::run(cli.seed);
            let passed = report.all_passed;
            verdict(
                serde_json::to_value(&report)
                    .map_err(|e| Error::Internal(format!("report serialization: {e}")))?,
                passed,
            )
        }
    }
}

fn weyl_report_json(rep: &weyl::PoissonReport) -> Value {
    json!({
        "liftable": rep.preserved,
        "poisson_preserved": rep.preserved,
        "center_images_x": rep.images_x.iter().map(hj::center_poly_to_json).collect::<Vec<_>>(),
        "center_images_d": rep.images_d.iter().map(hj::center_poly_to_json).collect::<Vec<_>>(),
        "violations": rep
            .violations
            .iter()
            .map(|v| {
                json!({
                    "pair": [v.u.to_string(), v.v.to_string()],
                    "lhs": hj::center_poly_to_json(&v.lhs),
                    "rhs": hj::center_poly_to_json(&v.rhs),
                })
            })
            .collect::<Vec<_>>(),
    })
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {val}\n")),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(item, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {item}\n")),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{v}\n")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.format == "text" {
                let mut s = String::new();
                render_text(&report.body, 0, &mut s);
                print!("{s}");
            } else {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.body).expect("serializable")
                );
            }
            if report.affirmative {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let body = json!({"error": {"kind": error_kind(&e), "detail": e.to_string()}});
            if cli.format == "text" {
                eprintln!("error ({}): {e}", error_kind(&e));
            } else {
                println!("{}", serde_json::to_string_pretty(&body).expect("serializable"));
            }
            ExitCode::from(2)
        }
    }
}
