//! Command-line front end: expand model series, tabulate counts, check the
//! brute-force oracle against the closed forms, verify the identity suite,
//! and report asymptotic convergence.

use clap::{Parser, Subcommand, ValueEnum};
use mutatree::models::{
    self, asymptotic_form, coeff_new_type, coeff_trees, coeff_vertices, ent_solve_t0,
    ent_solve_vn_tilde, proportion, rational_to_f64, series_tables, MutationModel, ALL_MODELS,
};
use mutatree::oracle;
use mutatree::powerseries::Series;
use mutatree::seqio::{
    self, compare_golden, emit_bfile, emit_table, golden_bfile, local_terms_for, oeis_registry,
    TableFormat,
};
use mutatree::treealg::{binom, build_context, catalan, central_binomial, coeff_bc_power, coeff_c_power};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "mutatree", version, about = "Exact counts for ordered trees with mutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Jsonl,
    Bfile,
}

#[derive(Clone, Copy)]
struct ModelArg(MutationModel);

impl std::str::FromStr for ModelArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MutationModel::from_name(s).map(ModelArg).ok_or_else(|| {
            let names: Vec<&str> = ALL_MODELS.iter().map(|m| m.name()).collect();
            format!("unknown model {:?}; expected one of {}", s, names.join(", "))
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the trees / vertices / new-type coefficient sequences of a model.
    Expand {
        #[arg(long)]
        model: ModelArg,
        /// Truncation order of the underlying series.
        #[arg(long, default_value_t = 64)]
        order: usize,
    },
    /// Run the identity, agreement, and reference-sequence checks.
    Verify {
        /// Truncation order for the identity checks.
        #[arg(long, default_value_t = 200)]
        order: usize,
    },
    /// Emit a count table for a model.
    Table {
        #[arg(long)]
        model: ModelArg,
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Exact proportion of new-type vertices at one size, against the
    /// tabulated asymptotic form.
    Ratio {
        #[arg(long)]
        model: ModelArg,
        #[arg(long)]
        n: usize,
    },
    /// Brute-force counts at one size; --check compares them to the closed
    /// forms and fails on any difference.
    Oracle {
        #[arg(long)]
        model: ModelArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = false)]
        check: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<bool, Box<dyn std::error::Error>> {
    match command {
        Command::Expand { model: ModelArg(model), order } => {
            let ctx = build_context(order);
            let t = series_tables(model, &ctx);
            for (name, series) in [
                ("trees", &t.trees),
                ("vertices", &t.vertices),
                ("new_type", &t.new_type),
            ] {
                let coeffs: Vec<String> = (0..=t.order)
                    .map(|k| series.coeff_at(k).unwrap().to_string())
                    .collect();
                println!("{}: {}", name, coeffs.join(" "));
            }
            Ok(true)
        }
        Command::Table { model: ModelArg(model), n_max, format, out } => {
            let text = match format {
                FormatArg::Csv => emit_table(model, n_max, TableFormat::Csv),
                FormatArg::Jsonl => emit_table(model, n_max, TableFormat::Jsonl),
                FormatArg::Bfile => {
                    let rows: Vec<(i64, BigInt)> = (0..=n_max)
                        .map(|n| (n as i64, coeff_trees(model, n)))
                        .collect();
                    emit_bfile(&rows)?
                }
            };
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{}", text),
            }
            Ok(true)
        }
        Command::Ratio { model: ModelArg(model), n } => {
            let p = proportion(model, n)?;
            let a = asymptotic_form(model, n.max(1));
            let pf = rational_to_f64(&p);
            println!(
                "{} {}/{} {} {:.12} {:.6}",
                n,
                p.numer(),
                p.denom(),
                decimal_string(&p, 12),
                a,
                pf / a
            );
            Ok(true)
        }
        Command::Oracle { model: ModelArg(model), n, check } => {
            let row = oracle::count_row(model, n)?;
            if check {
                let want = seqio::CountRow::closed_form(model, n);
                let ok = row == want;
                println!(
                    "{} {} {} {} {}",
                    row.n,
                    row.trees,
                    row.vertices,
                    row.new_type,
                    if ok { "OK" } else { "MISMATCH" }
                );
                if !ok {
                    eprintln!(
                        "closed forms give trees={} vertices={} new_type={}",
                        want.trees, want.vertices, want.new_type
                    );
                }
                Ok(ok)
            } else {
                println!("{} {} {} {}", row.n, row.trees, row.vertices, row.new_type);
                Ok(true)
            }
        }
        Command::Verify { order } => verify(order),
    }
}

/// Exact decimal expansion of a non-negative rational to `digits` fractional
/// digits, rounded half away from zero.
fn decimal_string(r: &BigRational, digits: usize) -> String {
    assert!(!r.is_negative());
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (r.numer() * &scale * 2u32 + r.denom()) / (r.denom() * 2u32);
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    format!("{}.{:0>width$}", int_part, frac_part.to_string(), width = digits)
}

struct Checks {
    failures: usize,
}

impl Checks {
    fn report(&mut self, name: &str, ok: bool) {
        println!("{} ... {}", name, if ok { "ok" } else { "FAILED" });
        if !ok {
            self.failures += 1;
        }
    }
}

fn verify(order: usize) -> Result<bool, Box<dyn std::error::Error>> {
    let mut checks = Checks { failures: 0 };
    let ctx = build_context(order); // identity panics inside would be defects

    checks.report(
        &format!("context identities C, B, L (order {})", order),
        true, // build_context already asserted them
    );

    // closed-form coefficient extractors against explicit powers
    let mut ok = true;
    let mut cp = Series::one(order);
    for s in 1..=6usize {
        cp = cp.mul(&ctx.c);
        let bcp = ctx.b.mul(&cp);
        for n in 0..=order {
            ok &= cp.coeff_at(n).unwrap() == BigRational::from(coeff_c_power(n, s));
            ok &= bcp.coeff_at(n).unwrap() == BigRational::from(coeff_bc_power(n, s));
        }
    }
    checks.report(
        &format!("[z^n] C^s and [z^n] BC^s closed forms (n <= {}, s <= 6)", order),
        ok,
    );

    let mut ok = true;
    for n in 0..=order {
        ok &= ctx.c.coeff_at(n).unwrap() == BigRational::from(catalan(n));
        ok &= ctx.b.coeff_at(n).unwrap() == BigRational::from(central_binomial(n));
    }
    checks.report("C and B coefficients equal the Catalan / central-binomial kernels", ok);

    // vertices identity and closed-form agreement per model, on a small context
    let small = build_context(24);
    let mut ok = true;
    for &model in &ALL_MODELS {
        let t = series_tables(model, &small);
        let derived = t.trees.shift_up().derive();
        ok &= derived == t.vertices;
        for n in 0..=24usize {
            let idx = match model {
                MutationModel::BinaryComplete => {
                    if 2 * n > 24 {
                        continue;
                    }
                    2 * n
                }
                _ => n,
            };
            ok &= t.trees.coeff_at(idx).unwrap() == BigRational::from(coeff_trees(model, n));
            ok &= t.vertices.coeff_at(idx).unwrap() == BigRational::from(coeff_vertices(model, n));
            ok &= t.new_type.coeff_at(idx).unwrap() == BigRational::from(coeff_new_type(model, n));
        }
    }
    checks.report("per-model series match closed forms; vertices = (z trees)'", ok);

    // the three routes to the embedded-new-type marked series
    let ent_ctx = build_context(40);
    let radical = models::ent_radical_new_type(40);
    let t0 = ent_solve_t0(&ent_ctx)?;
    let vn = ent_solve_vn_tilde(&ent_ctx)?;
    let zc2 = ent_ctx.c.mul(&ent_ctx.c).shift_up().truncated(40);
    let t0_product = ent_ctx.c.mul(&ent_ctx.c.compose(&zc2)?);
    let ok = t0 == t0_product && ent_ctx.uplift(&vn) == radical;
    checks.report("embedded-new-type routes agree (fixed point, product, radical)", ok);

    // reference sequences
    for oref in oeis_registry() {
        let golden = golden_bfile(oref.id)
            .ok_or_else(|| seqio::SeqIoError::MissingGolden(oref.id.to_string()))?;
        let local = local_terms_for(&oref, 40);
        let report = compare_golden(&oref, &local, golden)?;
        checks.report(&report.summary(), report.passed());
    }

    // the complete-binary new-type closed form: expected, documented deviation
    let computed: Vec<BigInt> = (0..=3)
        .map(|n| coeff_new_type(MutationModel::BinaryComplete, n))
        .collect();
    let series_route: Vec<BigInt> = {
        let t = series_tables(MutationModel::BinaryComplete, &small);
        (0..=3)
            .map(|n| t.new_type.coeff_at(2 * n).unwrap().numer().clone())
            .collect()
    };
    let shifted_form: Vec<BigInt> = (0..=3).map(binary_new_type_shifted_form).collect();
    let ok = computed == series_route && computed != shifted_form;
    checks.report(
        "complete-binary new-type counts follow the series and the enumeration \
         (1, 5, 22, 93, ...); the closed form 2^(2n-1) - binom(2n,n)/2 generates the \
         same sequence shifted by one index and is rejected: expected, documented deviation",
        ok,
    );

    println!(
        "verify: {} failure(s)",
        checks.failures
    );
    std::io::stdout().flush()?;
    Ok(checks.failures == 0)
}

/// The rejected variant of the complete-binary new-type closed form; off by
/// one index against the actual counts (gives 0, 1, 5, 22, ... from n = 0).
fn binary_new_type_shifted_form(n: usize) -> BigInt {
    if n == 0 {
        // 2^{-1} - 1/2
        return BigInt::zero();
    }
    let pow = BigInt::one() << (2 * n - 1);
    pow - binom(2 * n as i64, n as i64) / 2
}
