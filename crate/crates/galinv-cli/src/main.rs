//! Command-line interface: solve invariant-form problems, analyze forms,
//! evaluate Poisson brackets, and reproduce the paper-derived results.
//!
//! Exit codes: 0 on success (verify-paper: no FAIL), 1 when verify-paper
//! records a FAIL, 2 on usage or input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use galinv::exact::Rational;
use galinv::forms::{galilean_form, GalileanParameters};
use galinv::invariants::{solve_invariant_forms, InvarianceProblem};
use galinv::io::{self, BoostExpansion};
use galinv::poisson::PoissonStructure;
use galinv::report::run_verification;

#[derive(Parser)]
#[command(
    name = "galinv",
    version,
    about = "Exact invariant bilinear forms of boost/rotation families and their Poisson bracket"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute all bilinear forms invariant under the generators in FILE.
    Solve {
        /// Generator file (JSON): {"dimension": d, "generators": [...]}.
        file: PathBuf,
        /// Expand built-in boosts as algebra generators instead of the
        /// parametric family.
        #[arg(long)]
        algebra: bool,
        /// Machine-readable JSON on stdout.
        #[arg(long)]
        json: bool,
        /// Also write the basis as JSON to this path.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Split a form, report rank and radical, and print the pseudo-inverse
    /// of its antisymmetric part.
    Analyze {
        /// Form file (JSON): explicit gram or galilean shorthand.
        file: PathBuf,
        /// Machine-readable JSON on stdout.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the Poisson bracket {f, g} induced by a form's
    /// antisymmetric part.
    Bracket {
        /// Form file (JSON): explicit gram or galilean shorthand.
        #[arg(long)]
        form: PathBuf,
        /// Convention factor for the bivector.
        #[arg(long, default_value = "1/4")]
        kappa: String,
        /// First observable, e.g. "t" or "3/2*x1^2*t - x2".
        #[arg(long)]
        f: String,
        /// Second observable.
        #[arg(long)]
        g: String,
        /// Machine-readable JSON on stdout.
        #[arg(long)]
        json: bool,
        /// Also print the bivector in the matrix file format.
        #[arg(long)]
        show_bivector: bool,
    },
    /// Recompute every paper-derived result and report PASS, FAIL or
    /// DISCREPANCY per claim.
    VerifyPaper {
        /// Spatial dimension n (1 to 4).
        #[arg(long)]
        dim: usize,
        /// Machine-readable JSON on stdout.
        #[arg(long)]
        json: bool,
    },
    /// Worked demonstrations.
    Demo {
        #[command(subcommand)]
        demo: DemoCommand,
    },
}

#[derive(Subcommand)]
enum DemoCommand {
    /// Build the boost-invariant form for (a, a0), analyze it, and print
    /// the coordinate brackets.
    Galilea {
        /// Spatial dimension n.
        #[arg(long)]
        dim: usize,
        /// Spatial parameter a as comma-separated rationals, e.g. "1,2,3".
        #[arg(long)]
        a: String,
        /// Time-time parameter a0.
        #[arg(long)]
        a0: String,
        /// Machine-readable JSON on stdout.
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("galinv: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Solve {
            file,
            algebra,
            json,
            output,
        } => cmd_solve(&file, algebra, json, output.as_deref()),
        Command::Analyze { file, json } => cmd_analyze(&file, json),
        Command::Bracket {
            form,
            kappa,
            f,
            g,
            json,
            show_bivector,
        } => cmd_bracket(&form, &kappa, &f, &g, json, show_bivector),
        Command::VerifyPaper { dim, json } => cmd_verify_paper(dim, json),
        Command::Demo {
            demo: DemoCommand::Galilea { dim, a, a0, json },
        } => cmd_demo_galilea(dim, &a, &a0, json),
    }
}

fn read_file(path: &std::path::Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn json_value(text: &str) -> serde_json::Value {
    serde_json::from_str(text).expect("internally generated JSON")
}

fn cmd_solve(
    file: &std::path::Path,
    algebra: bool,
    json: bool,
    output: Option<&std::path::Path>,
) -> Result<ExitCode, String> {
    let text = read_file(file)?;
    let mode = if algebra {
        BoostExpansion::Algebra
    } else {
        BoostExpansion::Parametric
    };
    let (dimension, families) =
        io::generators_from_json(&text, mode).map_err(|e| e.to_string())?;
    let generator_count = families.len();
    let basis = solve_invariant_forms(&InvarianceProblem::new(dimension, families));
    let basis_json = io::basis_to_json(&basis);
    if json {
        println!("{basis_json}");
    } else {
        println!("dimension: {dimension}");
        println!("generators: {generator_count}");
        println!("basis dimension: {}", basis.len());
        for (i, form) in basis.forms().iter().enumerate() {
            println!("form {}:", i + 1);
            print!("{form}");
        }
    }
    if let Some(path) = output {
        fs::write(path, basis_json)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn vector_strings(v: &galinv::forms::FourVector) -> Vec<String> {
    v.coordinates().iter().map(|r| r.to_string()).collect()
}

fn cmd_analyze(file: &std::path::Path, json: bool) -> Result<ExitCode, String> {
    let text = read_file(file)?;
    let form = io::form_from_json(&text).map_err(|e| e.to_string())?;
    let (sym, antisym) = form.split();
    let full_report = form.rank_report();
    let antisym_report = antisym.rank_report();
    let pinv = antisym.gram().pseudo_inverse();

    if json {
        let value = serde_json::json!({
            "dimension": form.dimension(),
            "gram": json_value(&io::matrix_to_json(form.gram())),
            "symmetric_part": json_value(&io::matrix_to_json(sym.gram())),
            "antisymmetric_part": json_value(&io::matrix_to_json(antisym.gram())),
            "rank": full_report.rank,
            "nondegenerate": full_report.nondegenerate,
            "radical_dimension": full_report.radical_basis.len(),
            "radical_basis": full_report.radical_basis.iter().map(vector_strings).collect::<Vec<_>>(),
            "antisymmetric_rank": antisym_report.rank,
            "antisymmetric_nondegenerate": antisym_report.nondegenerate,
            "antisymmetric_radical_dimension": antisym_report.radical_basis.len(),
            "antisymmetric_pseudo_inverse": json_value(&io::matrix_to_json(&pinv)),
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
        return Ok(ExitCode::SUCCESS);
    }

    println!("dimension: {}", form.dimension());
    println!("gram:");
    print!("{}", form.gram());
    println!("symmetric part:");
    print!("{}", sym.gram());
    println!("antisymmetric part:");
    print!("{}", antisym.gram());
    println!("rank: {}", full_report.rank);
    println!("nondegenerate: {}", full_report.nondegenerate);
    println!("radical dimension: {}", full_report.radical_basis.len());
    for v in &full_report.radical_basis {
        println!("radical vector: ({})", vector_strings(v).join(", "));
    }
    println!("antisymmetric rank: {}", antisym_report.rank);
    println!(
        "antisymmetric nondegenerate: {}",
        antisym_report.nondegenerate
    );
    println!("pseudo-inverse of antisymmetric part:");
    print!("{pinv}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_bracket(
    form_path: &std::path::Path,
    kappa: &str,
    f_text: &str,
    g_text: &str,
    json: bool,
    show_bivector: bool,
) -> Result<ExitCode, String> {
    let text = read_file(form_path)?;
    let form = io::form_from_json(&text).map_err(|e| e.to_string())?;
    let kappa = Rational::parse(kappa).map_err(|e| format!("--kappa: {e}"))?;
    let (_, antisym) = form.split();
    let structure =
        PoissonStructure::from_form(&antisym, kappa).map_err(|e| e.to_string())?;
    let f = structure
        .parse_observable(f_text)
        .map_err(|e| format!("--f: {e}"))?;
    let g = structure
        .parse_observable(g_text)
        .map_err(|e| format!("--g: {e}"))?;
    let bracket = structure.bracket(&f, &g);

    if json {
        let mut value = serde_json::json!({
            "f": f.to_string(),
            "g": g.to_string(),
            "kappa": structure.convention_factor().to_string(),
            "bracket": bracket.to_string(),
        });
        if show_bivector {
            value["bivector"] = json_value(&io::matrix_to_json(structure.bivector()));
        }
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!("{bracket}");
        if show_bivector {
            println!("bivector:");
            println!("{}", io::matrix_to_json(structure.bivector()));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_paper(dim: usize, json: bool) -> Result<ExitCode, String> {
    if !(1..=4).contains(&dim) {
        return Err(format!("--dim must be between 1 and 4, got {dim}"));
    }
    let report = run_verification(dim);
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_text());
    }
    if report.has_failures() {
        Ok(ExitCode::FAILURE)
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_demo_galilea(dim: usize, a_csv: &str, a0: &str, json: bool) -> Result<ExitCode, String> {
    if dim < 1 {
        return Err("--dim must be at least 1".to_string());
    }
    let a: Vec<Rational> = a_csv
        .split(',')
        .map(|token| Rational::parse(token.trim()).map_err(|e| format!("--a: {e}")))
        .collect::<Result<_, _>>()?;
    if a.len() != dim {
        return Err(format!("--a has {} components, expected {dim}", a.len()));
    }
    let a0 = Rational::parse(a0).map_err(|e| format!("--a0: {e}"))?;
    let params = GalileanParameters::new(a, a0);
    let form = galilean_form(&params);
    let (_, antisym) = form.split();
    let report = antisym.rank_report();

    let brackets: Vec<(String, String)> = match PoissonStructure::from_form_default(&antisym) {
        Ok(structure) => {
            let t = structure.parse_observable("t").unwrap();
            structure
                .observable_vars()
                .iter()
                .take(dim)
                .map(|x_name| {
                    let xi = structure.parse_observable(x_name).unwrap();
                    (
                        format!("{{t, {x_name}}}"),
                        structure.bracket(&t, &xi).to_string(),
                    )
                })
                .collect()
        }
        Err(_) => Vec::new(),
    };

    if json {
        let value = serde_json::json!({
            "spatial_dimension": dim,
            "form": json_value(&io::form_to_json(&form)),
            "antisymmetric_rank": report.rank,
            "antisymmetric_nondegenerate": report.nondegenerate,
            "radical_dimension": report.radical_basis.len(),
            "coordinate_brackets": brackets
                .iter()
                .map(|(k, v)| serde_json::json!({"bracket": k, "value": v}))
                .collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
        return Ok(ExitCode::SUCCESS);
    }

    println!("boost-invariant form on {dim} + 1 coordinates:");
    print!("{}", form.gram());
    println!("antisymmetric rank: {}", report.rank);
    println!("antisymmetric nondegenerate: {}", report.nondegenerate);
    println!("radical dimension: {}", report.radical_basis.len());
    if brackets.is_empty() {
        println!("a = 0: the antisymmetric part vanishes, no Poisson structure");
    } else {
        for (name, value) in &brackets {
            println!("{name} = {value}");
        }
    }
    Ok(ExitCode::SUCCESS)
}
