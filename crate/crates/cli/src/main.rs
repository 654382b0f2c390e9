//! Command-line front end: exact h0, alpha invariants, jump functions,
//! Waldschmidt bounds, grid recursion and the verification suite.
//!
//! All numeric output is exact: integers, or rationals as "p/q" strings.
//! Exit codes: 0 success / all checks pass, 1 verification violation,
//! 2 usage or input error.

mod config;
mod output;

use clap::{Parser, Subcommand, ValueEnum};
use fatpoints_core::invariants::{
    alpha_search, grid_sequence, jump_vector, waldschmidt_bounds, Accel,
};
use fatpoints_core::linsys::{conditions_matrix, witness_form, BiDegree};
use fatpoints_core::verifier::{run_suite, EnumSpec};
use fatpoints_core::Variant;

#[derive(Parser)]
#[command(name = "fatpoints", version, about = "Initial-degree invariants of fat point schemes on P1 x P1")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Star,
    Plus,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Star => Variant::Star,
            VariantArg::Plus => Variant::Plus,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of the space of bi-degree (d1,d2) forms through the scheme.
    H0 {
        /// Config file path or built-in name (example-2.9, example-3.final,
        /// grid-A-B, grid-minus-point-A).
        #[arg(long)]
        config: String,
        #[arg(long)]
        d1: usize,
        #[arg(long)]
        d2: usize,
    },
    /// Initial degree of the m-th symbolic power.
    Alpha {
        #[arg(long)]
        config: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Star)]
        variant: VariantArg,
        /// Symbolic power; multiplies the stored multiplicities.
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Also print a witness coefficient grid.
        #[arg(long)]
        witness: bool,
        /// Accelerate the degree scan mod this prime; the reported degree is
        /// always confirmed by a rational rank.
        #[arg(long)]
        modp: Option<u64>,
    },
    /// Jump vector alpha(I^(m)) - alpha(I^(m-1)) for m = 1..max-m.
    Jumps {
        #[arg(long)]
        config: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Star)]
        variant: VariantArg,
        #[arg(long = "max-m", default_value_t = 5)]
        max_m: u32,
    },
    /// Exact bounds on the Waldschmidt constant.
    Wald {
        #[arg(long)]
        config: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Star)]
        variant: VariantArg,
        #[arg(long = "max-m", default_value_t = 5)]
        max_m: u32,
    },
    /// Unroll the (a,b)-grid recursion for m = 1..max-m.
    Gridseq {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long = "max-m", default_value_t = 10)]
        max_m: u32,
    },
    /// Run the verification suite over a corpus of small configurations.
    Verify {
        /// Side of the affine coordinate box (points in {0..n-1}^2).
        #[arg(long = "box", default_value_t = 3)]
        box_size: usize,
        #[arg(long = "s-min", default_value_t = 1)]
        s_min: usize,
        #[arg(long = "s-max", default_value_t = 3)]
        s_max: usize,
        /// Subsample the enumeration to this many configurations.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-m", default_value_t = 3)]
        max_m: u32,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print the configuration as a config-file document.
    Config {
        #[arg(long)]
        config: String,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32, String> {
    let format = cli.format;
    match cli.command {
        Command::H0 { config, d1, d2 } => {
            let z = config::resolve_config(&config)?;
            let d = BiDegree::new(d1, d2);
            let cm = conditions_matrix(&z, d);
            let h0 = d.monomials() - cm.matrix.rank();
            output::h0(format, h0, cm.matrix.rows(), cm.matrix.cols());
            Ok(0)
        }
        Command::Alpha {
            config,
            variant,
            m,
            witness,
            modp,
        } => {
            let z = config::resolve_config(&config)?;
            let variant: Variant = variant.into();
            let accel = match modp {
                Some(p) => Accel::Modular(p),
                None => Accel::Rational,
            };
            let scaled = z.scaled(m);
            let (value, at) = alpha_search(&scaled, variant, accel);
            let wit = if witness {
                witness_form(&scaled, at)
            } else {
                None
            };
            output::alpha(format, variant, m, value, at, wit.as_ref());
            Ok(0)
        }
        Command::Jumps {
            config,
            variant,
            max_m,
        } => {
            if max_m < 1 {
                return Err("--max-m must be at least 1".into());
            }
            let z = config::resolve_config(&config)?;
            let jv = jump_vector(&z, max_m, variant.into());
            output::jumps(format, &jv);
            Ok(0)
        }
        Command::Wald {
            config,
            variant,
            max_m,
        } => {
            if max_m < 1 {
                return Err("--max-m must be at least 1".into());
            }
            let z = config::resolve_config(&config)?;
            let b = waldschmidt_bounds(&z, variant.into(), max_m).map_err(|e| e.to_string())?;
            output::wald(format, &b);
            Ok(0)
        }
        Command::Gridseq { a, b, max_m } => {
            if max_m < 1 {
                return Err("--max-m must be at least 1".into());
            }
            let mut rows = Vec::new();
            for m in 1..=max_m {
                let s = grid_sequence(a, b, m).map_err(|e| e.to_string())?;
                rows.push((s.a_m, s.b_m));
            }
            output::gridseq(format, a, b, &rows);
            Ok(0)
        }
        Command::Verify {
            box_size,
            s_min,
            s_max,
            sample,
            seed,
            max_m,
            jobs,
        } => {
            if let Some(n) = jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                    .map_err(|e| e.to_string())?;
            }
            if box_size == 0 {
                return Err("--box must be positive".into());
            }
            let coords: Vec<i64> = (0..box_size as i64).collect();
            let mut spec = EnumSpec::integer_box(&coords, &coords, s_min, s_max);
            if let Some(count) = sample {
                spec = spec.with_sample(count, seed);
            }
            let reports = run_suite(&spec, max_m);
            let pass = reports.iter().all(|r| r.passed());
            output::verify(format, &reports);
            Ok(if pass { 0 } else { 1 })
        }
        Command::Config { config } => {
            let z = config::resolve_config(&config)?;
            let doc = config::ConfigFile::from_config(&z);
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            Ok(0)
        }
    }
}
