//! `bitensor` — a calculator for the bitensorial algebra of phrases:
//! products, coproducts, antipodes, the duality pairing and its Gram
//! matrices, primitive elements, and the counting polynomials.
//!
//! Exit codes: 0 on success, 1 when a verification fails (a `check`
//! suite, a disagreeing `antipode --method both`, or a violated
//! comparison in `conjecture`), 2 on usage or parse errors.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use bitensor::hopfcore::{antipode_exp, antipode_subset, coproduct, cut_operator, product};
use bitensor::pairing::{
    gram_matrix, ideal_degree_dim, pair, pn_integral, pn_polynomial, radical_basis,
};
use bitensor::primitives::{conjecture_report, is_primitive, phi_u, prim_basis};
use bitensor::Element;
use bitensor_cli::format::{self, OutputFormat};
use bitensor_cli::{checks, parse};

#[derive(Parser)]
#[command(name = "bitensor", version, about = "Exact calculator for the bitensorial algebra of phrases")]
struct Cli {
    /// Alphabet size: letters are x1..x<dim>.
    #[arg(long, global = true, default_value_t = 1)]
    dim: u32,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Subset,
    Exp,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Deconcatenation coproduct of an expression.
    Coproduct { expr: String },
    /// Concatenation product of two expressions.
    Product { left: String, right: String },
    /// Antipode of an expression.
    Antipode {
        /// Construction to use; `both` cross-checks them.
        #[arg(long, value_enum, default_value_t = Method::Subset)]
        method: Method,
        expr: String,
    },
    /// One application of the cut derivation.
    Cut { expr: String },
    /// The primitive projector: alternating cut powers over (p+1)!.
    Phiu { expr: String },
    /// Whether an expression is primitive for the coproduct.
    IsPrimitive { expr: String },
    /// Duality pairing of two expressions.
    Pair { left: String, right: String },
    /// Gram matrices of the pairing, degree by degree.
    Gram {
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Radical of the pairing, degree by degree, with the dimension of
    /// the primitive-generated ideal alongside.
    Radical {
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Dimensions of the spaces of primitives, degree by degree.
    PrimDims {
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Compare the Lie span of constructed primitives with the full
    /// primitive spaces, degree by degree.
    Conjecture {
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// The counting polynomials and their signed integrals.
    Pn {
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
    },
    /// Run a named verification suite: all, hopf, pairing, primitives,
    /// or lemma27.
    Check { suite: String },
}

fn parse_or_exit(input: &str, dim: u32) -> Element {
    match parse::parse_element(input, dim) {
        Ok(e) => e,
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if cli.dim == 0 {
        eprintln!("error: --dim must be at least 1");
        std::process::exit(2);
    }
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let dim = cli.dim;
    let fmt = cli.format;
    match cli.command {
        Command::Coproduct { expr } => {
            let e = parse_or_exit(&expr, dim);
            println!("{}", format::tensor(&coproduct(&e), fmt));
            0
        }
        Command::Product { left, right } => {
            let l = parse_or_exit(&left, dim);
            let r = parse_or_exit(&right, dim);
            let p = product(&l, &r).expect("parsed over one alphabet");
            println!("{}", format::element(&p, fmt));
            0
        }
        Command::Antipode { method, expr } => {
            let e = parse_or_exit(&expr, dim);
            match method {
                Method::Subset => {
                    println!("{}", format::element(&antipode_subset(&e), fmt));
                    0
                }
                Method::Exp => {
                    println!("{}", format::element(&antipode_exp(&e), fmt));
                    0
                }
                Method::Both => {
                    let s = antipode_subset(&e);
                    let x = antipode_exp(&e);
                    if s == x {
                        println!("{}", format::element(&s, fmt));
                        0
                    } else {
                        eprintln!("error: antipode constructions disagree");
                        eprintln!("  subset: {s}");
                        eprintln!("  exp:    {x}");
                        1
                    }
                }
            }
        }
        Command::Cut { expr } => {
            let e = parse_or_exit(&expr, dim);
            println!("{}", format::element(&cut_operator(&e), fmt));
            0
        }
        Command::Phiu { expr } => {
            let e = parse_or_exit(&expr, dim);
            println!("{}", format::element(&phi_u(&e), fmt));
            0
        }
        Command::IsPrimitive { expr } => {
            let e = parse_or_exit(&expr, dim);
            let answer = is_primitive(&e);
            match fmt {
                OutputFormat::Json => println!("{}", json!(answer)),
                _ => println!("{answer}"),
            }
            0
        }
        Command::Pair { left, right } => {
            let l = parse_or_exit(&left, dim);
            let r = parse_or_exit(&right, dim);
            let v = pair(&l, &r).expect("parsed over one alphabet");
            println!("{}", format::rational(&v, fmt));
            0
        }
        Command::Gram { max_degree } => {
            match fmt {
                OutputFormat::Json => {
                    let rows: Vec<_> = (1..=max_degree)
                        .map(|n| {
                            let g = gram_matrix(n, dim);
                            json!({
                                "degree": n,
                                "rank": g.rank(),
                                "matrix": serde_json::from_str::<serde_json::Value>(
                                    &format::matrix(&g, OutputFormat::Json)
                                ).expect("own output"),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::Value::Array(rows));
                }
                _ => {
                    for n in 1..=max_degree {
                        let g = gram_matrix(n, dim);
                        println!("degree {n} (rank {}):", g.rank());
                        println!("{}", format::matrix(&g, fmt));
                    }
                }
            }
            0
        }
        Command::Radical { max_degree } => {
            match fmt {
                OutputFormat::Json => {
                    let rows: Vec<_> = (1..=max_degree)
                        .map(|n| {
                            let rad = radical_basis(n, dim);
                            let ideal = ideal_degree_dim(n, dim);
                            json!({
                                "degree": n,
                                "radical_dim": rad.len(),
                                "ideal_dim": ideal,
                                "ideal": if ideal == rad.len() { "equal" } else { "strict" },
                                "basis": rad.iter().map(format::element_json).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::Value::Array(rows));
                }
                _ => {
                    for n in 1..=max_degree {
                        let rad = radical_basis(n, dim);
                        let ideal = ideal_degree_dim(n, dim);
                        let relation = if ideal == rad.len() { "equal" } else { "strict" };
                        println!(
                            "degree {n}: radical dim {}, ideal dim {ideal} ({relation})",
                            rad.len()
                        );
                        for v in &rad {
                            println!("  {}", format::element(v, fmt));
                        }
                    }
                }
            }
            0
        }
        Command::PrimDims { max_degree } => {
            let dims: Vec<usize> = (1..=max_degree).map(|n| prim_basis(n, dim).len()).collect();
            match fmt {
                OutputFormat::Json => {
                    let rows: Vec<_> = dims
                        .iter()
                        .enumerate()
                        .map(|(i, d)| json!({ "degree": i + 1, "dim": d }))
                        .collect();
                    println!("{}", serde_json::Value::Array(rows));
                }
                _ => {
                    for (i, d) in dims.iter().enumerate() {
                        println!("degree {}: {d}", i + 1);
                    }
                }
            }
            0
        }
        Command::Conjecture { max_degree } => {
            let rows = conjecture_report(max_degree, dim);
            let all_hold = rows.iter().all(|r| r.lie_dim <= r.prim_dim);
            match fmt {
                OutputFormat::Json => {
                    let out: Vec<_> = rows
                        .iter()
                        .map(|r| {
                            json!({
                                "degree": r.degree,
                                "lie_dim": r.lie_dim,
                                "prim_dim": r.prim_dim,
                                "strict": r.strict(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::Value::Array(out));
                }
                _ => {
                    println!("degree  lie  prim");
                    for r in &rows {
                        let marker = if r.lie_dim == r.prim_dim { "=" } else { "<" };
                        println!("{:>6}  {:>3}  {:>4}  ({marker})", r.degree, r.lie_dim, r.prim_dim);
                    }
                }
            }
            if all_hold {
                0
            } else {
                eprintln!("error: a Lie span exceeds its primitive space");
                1
            }
        }
        Command::Pn { max_degree } => {
            match fmt {
                OutputFormat::Json => {
                    let rows: Vec<_> = (0..=max_degree)
                        .map(|n| {
                            let p = pn_polynomial(n);
                            json!({
                                "n": n,
                                "coeffs": serde_json::from_str::<serde_json::Value>(
                                    &format::polynomial(&p, OutputFormat::Json)
                                ).expect("own output"),
                                "integral": pn_integral(n).to_string(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::Value::Array(rows));
                }
                _ => {
                    for n in 0..=max_degree {
                        println!(
                            "P_{n} = {}   integral {}",
                            format::polynomial(&pn_polynomial(n), fmt),
                            format::rational(&pn_integral(n), fmt)
                        );
                    }
                }
            }
            0
        }
        Command::Check { suite } => {
            let Some(reports) = checks::suite(&suite) else {
                eprintln!(
                    "error: unknown suite '{suite}' (expected all, hopf, pairing, primitives, or lemma27)"
                );
                return 2;
            };
            let mut failed = 0usize;
            for r in &reports {
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                println!("{verdict} {} ({})", r.name, r.detail);
                if !r.passed {
                    failed += 1;
                }
            }
            if failed == 0 {
                println!("all {} checks passed", reports.len());
                0
            } else {
                println!("{failed} of {} checks failed", reports.len());
                1
            }
        }
    }
}
