mod document;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use document::{
    export_algebra, import_algebra, report_from_violations, spec_doc, to_json, ReportDocument,
    SpecDoc, TermDoc, SCHEMA_VERSION,
};
use gsca::builders::{d_weights, r_charges};
use gsca::{
    build, certify_triviality, realize, verify_canonical_relations, verify_realization, BuildSpec,
    CentralKind, Error, Family, HalfInt, Superalgebra,
};

#[derive(Parser)]
#[command(
    name = "gca",
    about = "Construct and verify Galilean (super)conformal algebras exactly",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Gca,
    Standard,
    #[value(name = "exotic-super")]
    ExoticSuper,
    N1,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Gca => Family::Gca,
            FamilyArg::Standard => Family::StandardSuper,
            FamilyArg::ExoticSuper => Family::ExoticSuper,
            FamilyArg::N1 => Family::N1Super,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CentralArg {
    None,
    Mass,
    Exotic,
}

impl From<CentralArg> for CentralKind {
    fn from(c: CentralArg) -> CentralKind {
        match c {
            CentralArg::None => CentralKind::None,
            CentralArg::Mass => CentralKind::Mass,
            CentralArg::Exotic => CentralKind::Exotic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SpecFlags {
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    #[arg(long, default_value_t = 1)]
    d: u32,
    #[arg(long = "two-ell", default_value_t = 1)]
    two_ell: i64,
    #[arg(long, value_enum, default_value = "none")]
    central: CentralArg,
    /// Read the algebra from an exported document instead of building it.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra and write it as a document.
    Build {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long = "two-ell", default_value_t = 1)]
        two_ell: i64,
        #[arg(long, value_enum, default_value = "none")]
        central: CentralArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-export an algebra document (or a freshly built algebra) verbatim.
    Export {
        #[command(flatten)]
        spec: SpecFlags,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one verification suite; exit 0 iff the report is empty.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Solve the central-extension constraints at d = 1 and certify
    /// triviality.
    Appendix {
        #[arg(long = "two-ell")]
        two_ell: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Graded antisymmetry plus the full super Jacobi scan.
    Jacobi {
        #[command(flatten)]
        spec: SpecFlags,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Dilatation weights, and R-charges where an R generator exists.
    Grading {
        #[command(flatten)]
        spec: SpecFlags,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Closure of the (centrally extended) abelian ideal.
    Closure {
        #[command(flatten)]
        spec: SpecFlags,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Homomorphism property of the free-field realization.
    Realization {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long = "two-ell")]
        two_ell: i64,
        #[arg(long, value_enum)]
        central: CentralArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Canonical (anti)commutation relations of the oscillator modes.
    OscillatorBasis {
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long = "two-ell")]
        two_ell: i64,
        /// Negate the fermion annihilators so that {a, a†} = +1.
        #[arg(long)]
        flip_fermion_sign: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The identity D + 2H_osc + l(l+1/2)d = 0.
    Hamiltonian {
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long = "two-ell")]
        two_ell: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn load_algebra(spec: &SpecFlags) -> Result<Superalgebra, Error> {
    if let Some(path) = &spec.input {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::IllegalSpec(format!("cannot read {}: {e}", path.display())))?;
        let doc = serde_json::from_str(&text)
            .map_err(|e| Error::IllegalSpec(format!("malformed document: {e}")))?;
        import_algebra(&doc)
    } else {
        let family = spec
            .family
            .ok_or_else(|| Error::IllegalSpec("--family or --input is required".into()))?;
        build(&BuildSpec::new(
            family.into(),
            spec.d,
            HalfInt::from_twice(spec.two_ell),
            spec.central.into(),
        ))
    }
}

fn write_out(out: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Error::IllegalSpec(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            std::io::stdout().flush().ok();
            Ok(())
        }
    }
}

fn emit_report(report: &ReportDocument, format: Format) -> ExitCode {
    match format {
        Format::Json => print!("{}", to_json(report)),
        Format::Text => {
            println!("{}: {}", report.check, report.status);
            for v in &report.violations {
                println!("  {} at [{}]", v.kind, v.witnesses.join(", "));
                for t in &v.residual {
                    println!("    {} * {}", t.coefficient, t.generator);
                }
            }
        }
    }
    if report.status == "pass" {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn alg_spec_doc(alg: &Superalgebra) -> SpecDoc {
    spec_doc(alg.family, alg.d, alg.ell.twice(), alg.central)
}

fn run() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Build {
            family,
            d,
            two_ell,
            central,
            out,
        } => {
            let alg = build(&BuildSpec::new(
                family.into(),
                d,
                HalfInt::from_twice(two_ell),
                central.into(),
            ))?;
            write_out(&out, &to_json(&export_algebra(&alg)))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Export { spec, out } => {
            let alg = load_algebra(&spec)?;
            write_out(&out, &to_json(&export_algebra(&alg)))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { check } => run_check(check),
        Command::Appendix { two_ell, format } => {
            let started = Instant::now();
            let cert = certify_triviality(HalfInt::from_twice(two_ell))?;
            eprintln!("appendix solved in {:?}", started.elapsed());
            match format {
                Format::Text => {
                    println!(
                        "unknowns: {}  constraints: {}  rank: {}  nullspace dimension: {}",
                        cert.n_unknowns, cert.n_constraints, cert.rank, cert.nullity
                    );
                    for (k, s) in cert.shifts.iter().enumerate() {
                        let parts: Vec<String> = s.iter().map(|c| c.to_string()).collect();
                        println!("cocycle {k}: absorbed by shifts [{}]", parts.join(", "));
                    }
                    println!(
                        "verdict: {}",
                        if cert.trivial {
                            "trivial"
                        } else {
                            "nontrivial"
                        }
                    );
                }
                Format::Json => {
                    let doc = serde_json::json!({
                        "schema_version": SCHEMA_VERSION,
                        "check": "appendix",
                        "twice_ell": two_ell,
                        "n_unknowns": cert.n_unknowns,
                        "n_constraints": cert.n_constraints,
                        "rank": cert.rank,
                        "nullity": cert.nullity,
                        "cocycles": cert.cocycles.iter().map(|v| {
                            v.iter().map(|c| c.to_string()).collect::<Vec<_>>()
                        }).collect::<Vec<_>>(),
                        "shifts": cert.shifts.iter().map(|v| {
                            v.iter().map(|c| c.to_string()).collect::<Vec<_>>()
                        }).collect::<Vec<_>>(),
                        "shifted_identical": cert.shifted_identical,
                        "verdict": if cert.trivial { "trivial" } else { "nontrivial" },
                    });
                    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
                    s.push('\n');
                    print!("{s}");
                }
            }
            Ok(if cert.trivial {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn run_check(check: Check) -> Result<ExitCode, Error> {
    match check {
        Check::Jacobi { spec, format } => {
            let alg = load_algebra(&spec)?;
            let started = Instant::now();
            let mut report = alg.verify_antisymmetry();
            report.entries.extend(alg.verify_super_jacobi().entries);
            eprintln!("jacobi scan finished in {:?}", started.elapsed());
            Ok(emit_report(
                &report_from_violations("jacobi", alg_spec_doc(&alg), &report),
                format,
            ))
        }
        Check::Grading { spec, format } => {
            let alg = load_algebra(&spec)?;
            let mut report = alg.verify_weight_grading(gsca::Generator::D, &d_weights(&alg))?;
            if alg.contains(&gsca::Generator::R) {
                report.entries.extend(
                    alg.verify_weight_grading(gsca::Generator::R, &r_charges(&alg))?
                        .entries,
                );
            }
            Ok(emit_report(
                &report_from_violations("grading", alg_spec_doc(&alg), &report),
                format,
            ))
        }
        Check::Closure { spec, format } => {
            let alg = load_algebra(&spec)?;
            let ideal: Vec<gsca::Generator> = alg
                .generators()
                .iter()
                .copied()
                .filter(|g| g.is_ideal() || g.is_central())
                .collect();
            let report = alg.verify_subalgebra_closure(&ideal)?;
            Ok(emit_report(
                &report_from_violations("closure", alg_spec_doc(&alg), &report),
                format,
            ))
        }
        Check::Realization {
            family,
            d,
            two_ell,
            central,
            format,
        } => {
            let spec = BuildSpec::new(
                family.into(),
                d,
                HalfInt::from_twice(two_ell),
                central.into(),
            );
            let started = Instant::now();
            let r = realize(&spec)?;
            let report = verify_realization(&r)?;
            eprintln!("realization check finished in {:?}", started.elapsed());
            let doc = ReportDocument {
                schema_version: SCHEMA_VERSION,
                check: "realization".into(),
                spec: spec_doc(spec.family, spec.d, two_ell, spec.central),
                status: if report.is_empty() { "pass" } else { "fail" }.into(),
                violations: report
                    .entries
                    .iter()
                    .map(|v| document::ViolationDoc {
                        kind: "homomorphism".into(),
                        witnesses: vec![v.left.to_string(), v.right.to_string()],
                        residual: vec![TermDoc {
                            generator: "(oscillator residual)".into(),
                            coefficient: v.residual.to_string(),
                        }],
                    })
                    .collect(),
            };
            Ok(emit_report(&doc, format))
        }
        Check::OscillatorBasis {
            d,
            two_ell,
            flip_fermion_sign,
            format,
        } => {
            let basis =
                gsca::build_oscillator_basis(HalfInt::from_twice(two_ell), d, flip_fermion_sign)?;
            let rel = verify_canonical_relations(&basis)?;
            let pass = rel.is_canonical_up_to_sign();
            let sign = rel
                .fermion_sign
                .map(|s| s.to_string())
                .unwrap_or_else(|| "inconsistent".into());
            let doc = ReportDocument {
                schema_version: SCHEMA_VERSION,
                check: "oscillator-basis".into(),
                spec: spec_doc(Family::StandardSuper, d, two_ell, CentralKind::Mass),
                status: if pass { "pass" } else { "fail" }.into(),
                violations: rel
                    .boson_violations
                    .iter()
                    .map(|(a, b, c, e, r)| (false, a, b, c, e, r))
                    .chain(
                        rel.fermion_violations
                            .iter()
                            .map(|(a, b, c, e, r)| (true, a, b, c, e, r)),
                    )
                    .map(|(odd, l1, i1, l2, i2, r)| document::ViolationDoc {
                        kind: if odd { "fermion" } else { "boson" }.into(),
                        witnesses: vec![format!("mode({l1},{i1})"), format!("mode({l2},{i2})")],
                        residual: vec![TermDoc {
                            generator: "(oscillator residual)".into(),
                            coefficient: r.to_string(),
                        }],
                    })
                    .collect(),
            };
            println!("fermion sign: {sign}");
            Ok(emit_report(&doc, format))
        }
        Check::Hamiltonian { d, two_ell, format } => {
            let residual = gsca::hamiltonian_residual(HalfInt::from_twice(two_ell), d)?;
            let pass = residual.is_zero();
            let doc = ReportDocument {
                schema_version: SCHEMA_VERSION,
                check: "hamiltonian".into(),
                spec: spec_doc(Family::StandardSuper, d, two_ell, CentralKind::Mass),
                status: if pass { "pass" } else { "fail" }.into(),
                violations: if pass {
                    Vec::new()
                } else {
                    vec![document::ViolationDoc {
                        kind: "hamiltonian".into(),
                        witnesses: vec!["D".into(), "H_osc".into()],
                        residual: vec![TermDoc {
                            generator: "(oscillator residual)".into(),
                            coefficient: residual.to_string(),
                        }],
                    }]
                },
            };
            Ok(emit_report(&doc, format))
        }
    }
}

fn main() -> ExitCode {
    if let Ok(n) = std::env::var("GCA_THREADS") {
        if let Ok(n) = n.parse::<usize>() {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .ok();
        }
    }
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
