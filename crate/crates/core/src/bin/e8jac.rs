use clap::{Parser, Subcommand, ValueEnum};
use e8jacobi::catalog::{build, default_order, dimension_bound_table, info, pullback_max_table, rank_series, solve_cascade, FormName};
use e8jacobi::e8::{coset_min_norm, max_coset_min_norm, orbit_size, set_budget, shell, DominantWeight};
use e8jacobi::invring::sigma_label;
use e8jacobi::rational::to_string;
use e8jacobi::verify::{run_suite, Suite};
use e8jacobi::{Error, Result};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "e8jac", version, about = "Weyl-invariant E8 Jacobi forms")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Element budget for lattice enumerations (also read from E8JAC_BUDGET).
    #[arg(long, global = true, env = "E8JAC_BUDGET")]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// q-expansion of a named form.
    Expand {
        #[arg(long)]
        form: String,
        /// Highest power of q kept (default 3 for index <= 3, 2 for index 4).
        #[arg(long)]
        order: Option<usize>,
    },
    /// Weyl orbits in the shell of the given norm.
    Orbits {
        #[arg(long)]
        norm: u64,
    },
    /// Largest min{(v,v) : v in l + tE8}, or the minimum for one l given in fw coordinates.
    CosetMinima {
        #[arg(long)]
        t: u32,
        #[arg(long, value_delimiter = ',')]
        fw: Option<Vec<i32>>,
    },
    /// Ranks of the weak modules for index 0..=max.
    Rank {
        #[arg(long, default_value_t = 14)]
        max: usize,
    },
    /// Upper bounds for orthogonal modular form dimensions.
    Bounds {
        #[arg(long, default_value_t = 40)]
        max: i32,
    },
    /// max (m, v) over norm-4 vectors for the named orbits.
    PullbackMax,
    /// Nullspace of the q^0 cascade system.
    SolveCascade {
        #[arg(long)]
        t: u32,
        #[arg(long, allow_hyphen_values = true)]
        w0: i32,
        #[arg(long, value_delimiter = ',')]
        norms: Vec<i64>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn print(format: Format, value: serde_json::Value, text: String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("serializable")),
        Format::Text => print!("{text}"),
    }
}

fn orbit_name(m: &DominantWeight) -> String {
    sigma_label(m).map(str::to_string).unwrap_or_else(|| format!("Σ[{m}]"))
}

/// Ok(true) on success, Ok(false) on a failed verification.
fn run(cli: Cli) -> Result<bool> {
    let f = cli.format;
    match cli.command {
        Command::Expand { form, order } => {
            let name: FormName = form.parse()?;
            let order = order.unwrap_or_else(|| default_order(name));
            let a = build(name, order)?;
            let meta = info(name);
            let text = format!("{name}  weight {}  index {}\n{}\n", a.weight, a.index, a.display());
            print(f, json!({"form": a.to_json(), "metadata": meta.to_json()}), text);
        }
        Command::Orbits { norm } => {
            let reps = shell(norm)?;
            let rows: Vec<_> = reps
                .iter()
                .map(|(m, c)| json!({"count": c, "fw": m.fw(), "label": orbit_name(m), "orbit_size": orbit_size(m)}))
                .collect();
            let text: String = reps.iter().map(|(m, c)| format!("{:<8} {:<16} {c}\n", orbit_name(m), m.to_string())).collect();
            print(f, json!({"norm": norm, "orbits": rows}), text);
        }
        Command::CosetMinima { t, fw } => match fw {
            Some(x) => {
                let x: [i32; 8] = x.try_into().map_err(|_| Error::InvalidArgument("--fw needs 8 entries".into()))?;
                let l = e8jacobi::e8::E8Vector::from_fw(&x);
                let v = coset_min_norm(&l, t)?;
                print(f, json!({"fw": x, "min_norm": v, "t": t}), format!("{v}\n"));
            }
            None => {
                let v = max_coset_min_norm(t)?;
                print(f, json!({"max_min_norm": v, "t": t}), format!("{v}\n"));
            }
        },
        Command::Rank { max } => {
            let r = rank_series(max);
            let text = r[1..].iter().map(u64::to_string).collect::<Vec<_>>().join(" ") + "\n";
            print(f, json!({"ranks": r}), text);
        }
        Command::Bounds { max } => {
            let rows = dimension_bound_table(max)?;
            let js: Vec<_> =
                rows.iter().map(|r| json!({"notes": r.notes, "upper_bound": r.upper_bound, "weight": r.weight})).collect();
            let text: String = rows.iter().map(|r| format!("{:>3} {:>3}  {}\n", r.weight, r.upper_bound, r.notes)).collect();
            print(f, json!({"bounds": js}), text);
        }
        Command::PullbackMax => {
            let rows = pullback_max_table()?;
            let js: Vec<_> = rows.iter().map(|(l, v)| json!({"label": l, "max": v})).collect();
            let text: String = rows.iter().map(|(l, v)| format!("{l:<8} {v}\n")).collect();
            print(f, json!({"pullback_max": js}), text);
        }
        Command::SolveCascade { t, w0, norms } => {
            let s = solve_cascade(t, w0, &norms)?;
            let strs = |v: &Vec<e8jacobi::Rational>| v.iter().map(to_string).collect::<Vec<_>>();
            let text = if s.nullspace.is_empty() {
                "trivial\n".to_string()
            } else {
                s.nullspace.iter().map(|v| format!("({})\n", strs(v).join(", "))).collect()
            };
            let js = json!({
                "matrix": s.matrix.iter().map(strs).collect::<Vec<_>>(),
                "norms": s.norms,
                "nullspace": s.nullspace.iter().map(strs).collect::<Vec<_>>(),
                "t": t,
                "w0": w0,
            });
            print(f, js, text);
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let checks = run_suite(suite);
            let ok = checks.iter().all(|c| c.passed);
            let text: String = checks.iter().map(|c| format!("{c}\n")).collect();
            print(f, json!({"checks": checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(), "passed": ok}), text);
            if let Some(c) = checks.iter().find(|c| !c.passed) {
                eprintln!("first failure: {}: {}", c.name, c.detail);
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(b) = cli.budget {
        set_budget(b);
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
