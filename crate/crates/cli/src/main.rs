//! `schubert`: queries against the Grassmannian cohomology engine.
//!
//! Exit codes: 0 success, 1 golden mismatch, 2 usage or parse error,
//! 3 semantic error.

mod syntax;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use schubert_core::{
    chern_character, chern_classes, reference_report, symmetric_reduce, Alphabets, BundleExpr, Element,
    Error, Grassmannian, ReportEntry, RootPolynomial, ZeroLocusProblem,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Exact Schubert calculus and Chern class computations"
)]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,

    /// The Grassmannian Gr(K,N).
    #[arg(long, global = true, value_name = "K,N", value_parser = syntax::grassmannian)]
    gr: Option<Grassmannian>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply Schubert classes, e.g. `product --gr 3,7 1 1 211`.
    Product {
        #[arg(required = true, value_name = "PARTITION")]
        partitions: Vec<String>,
    },
    /// Integrate a product of classes with exponents, e.g. `1^6 111^2`.
    Intersect {
        #[arg(required = true, value_name = "PARTITION[^EXP]")]
        factors: Vec<String>,
    },
    /// Chern classes of a bundle expression.
    Chern {
        #[arg(long, value_name = "EXPR")]
        bundle: String,
        /// Highest degree to compute; defaults to the dimension.
        #[arg(long)]
        degree: Option<usize>,
        /// Print the Chern character instead.
        #[arg(long)]
        character: bool,
    },
    /// Write a polynomial in the roots x_i, y_j in elementary symmetric form.
    Reduce {
        #[arg(value_name = "POLYNOMIAL")]
        polynomial: String,
    },
    /// Invariants of the surface cut out by a section of a bundle.
    Surface {
        #[arg(long, value_name = "EXPR")]
        bundle: String,
        /// First Betti number of the surface.
        #[arg(long, default_value_t = 0)]
        b1: i64,
    },
    /// Recompute every reference value and compare.
    #[command(name = "paper-report")]
    Report {
        #[arg(long, hide = true)]
        corrupt: bool,
    },
}

enum Failure {
    Mismatch,
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn context(gr: Option<Grassmannian>) -> Result<Grassmannian, Failure> {
    gr.ok_or_else(|| Failure::Usage("this command needs --gr K,N".to_string()))
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn terms_json(x: &Element) -> Value {
    json!(x.to_records())
}

fn product(ctx: Grassmannian, tokens: &[String], as_json: bool) -> Result<(), Failure> {
    let partitions = tokens
        .iter()
        .map(|t| syntax::partition(t))
        .collect::<Result<Vec<_>, _>>()?;
    let mut acc = Element::one(ctx);
    for p in &partitions {
        acc = acc.multiply(&ctx.schubert(p)?)?;
    }
    if as_json {
        print_json(&json!({ "gr": [ctx.k(), ctx.n()], "terms": terms_json(&acc) }));
    } else {
        println!("{acc}");
    }
    Ok(())
}

fn intersect(ctx: Grassmannian, tokens: &[String], as_json: bool) -> Result<(), Failure> {
    let factors = tokens
        .iter()
        .map(|t| syntax::factor(t))
        .collect::<Result<Vec<_>, _>>()?;
    let value = ctx.intersection_number(&factors)?;
    if as_json {
        print_json(&json!({ "gr": [ctx.k(), ctx.n()], "value": value.to_string() }));
    } else {
        println!("{value}");
    }
    Ok(())
}

fn chern(
    ctx: Grassmannian,
    text: &str,
    degree: Option<usize>,
    character: bool,
    as_json: bool,
) -> Result<(), Failure> {
    let bundle = BundleExpr::parse(text)?;
    let degree = degree.unwrap_or(ctx.dimension()).min(ctx.dimension());
    if character {
        let ch = chern_character(&bundle, ctx, degree)?;
        if as_json {
            let parts: Vec<Value> = ch
                .iter()
                .enumerate()
                .map(|(i, x)| {
                    let terms: Vec<Value> = x
                        .terms()
                        .into_iter()
                        .map(|(p, c)| json!({ "partition": p, "coeff": c.to_string() }))
                        .collect();
                    json!({ "degree": i, "terms": terms })
                })
                .collect();
            print_json(&json!({ "bundle": bundle.to_string(), "character": parts }));
        } else {
            println!("ch({bundle}) on {ctx}");
            for (i, x) in ch.iter().enumerate() {
                println!("ch{i} = {x}");
            }
        }
        return Ok(());
    }
    let data = chern_classes(&bundle, ctx, degree)?;
    if as_json {
        let classes: Vec<Value> = data
            .classes()
            .iter()
            .enumerate()
            .map(|(i, c)| json!({ "degree": i, "terms": terms_json(c) }))
            .collect();
        print_json(
            &json!({ "bundle": bundle.to_string(), "rank": data.rank().to_string(), "classes": classes }),
        );
    } else {
        println!("{bundle} on {ctx}, rank {}", data.rank());
        for (i, c) in data.classes().iter().enumerate() {
            println!("c{i} = {c}");
        }
    }
    Ok(())
}

fn reduce(ctx: Option<Grassmannian>, text: &str, as_json: bool) -> Result<(), Failure> {
    let sizes = ctx.map(|g| Alphabets::new(g.k(), g.corank()));
    let poly = RootPolynomial::parse(text, sizes)?;
    let expansion = symmetric_reduce(&poly)?;
    if as_json {
        let terms: Vec<Value> = expansion
            .terms()
            .map(|(e, f, c)| json!({ "e": e, "f": f, "coeff": c.to_string() }))
            .collect();
        print_json(&json!({ "terms": terms }));
    } else {
        println!("{expansion}");
    }
    Ok(())
}

fn surface(ctx: Grassmannian, text: &str, b1: i64, as_json: bool) -> Result<(), Failure> {
    let problem = ZeroLocusProblem::new(ctx, BundleExpr::parse(text)?, b1)?;
    let inv = problem.invariants()?;
    if as_json {
        print_json(&json!(inv));
    } else {
        let [h00, h10, h20, h11] = inv.hodge;
        println!("zero locus of {} on {ctx}", problem.bundle());
        println!("c1^2   {}", inv.c1_sq);
        println!("c2     {}", inv.c2);
        println!("chi(O) {}", inv.chi_o);
        println!("q      {}", inv.q);
        println!("betti  {:?}", inv.betti);
        println!("h00 {h00}  h10 {h10}  h20 {h20}  h11 {h11}");
    }
    Ok(())
}

fn print_table(entries: &[&ReportEntry]) {
    let width = entries
        .iter()
        .map(|e| e.label.chars().count())
        .max()
        .unwrap_or(0);
    for e in entries {
        let status = if e.pass { "ok" } else { "FAIL" };
        println!(
            "{:<4} {:<width$}  expected {:>8}  computed {:>8}  [{}]",
            status, e.label, e.expected, e.computed, e.source
        );
    }
}

fn report(corrupt: bool, as_json: bool) -> Result<(), Failure> {
    let entries = reference_report(corrupt)?;
    let failed: Vec<&ReportEntry> = entries.iter().filter(|e| !e.pass).collect();
    if as_json {
        print_json(&json!(entries));
    } else {
        print_table(&entries.iter().collect::<Vec<_>>());
        println!(
            "{} of {} checks passed",
            entries.len() - failed.len(),
            entries.len()
        );
        if !failed.is_empty() {
            println!();
            println!("mismatches:");
            print_table(&failed);
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let as_json = cli.json;
    match cli.command {
        Command::Product { partitions } => product(context(cli.gr)?, &partitions, as_json),
        Command::Intersect { factors } => intersect(context(cli.gr)?, &factors, as_json),
        Command::Chern {
            bundle,
            degree,
            character,
        } => chern(context(cli.gr)?, &bundle, degree, character, as_json),
        Command::Reduce { polynomial } => reduce(cli.gr, &polynomial, as_json),
        Command::Surface { bundle, b1 } => surface(context(cli.gr)?, &bundle, b1, as_json),
        Command::Report { corrupt } => report(corrupt, as_json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() { 2 } else { 3 })
        }
    }
}
