//! `sgc`: skew polynomial arithmetic, skew generalized cyclic codes, BCH-type
//! certificates and MDS tables from the command line.

mod commands;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "sgc", version, about = "Skew generalized cyclic codes over finite fields")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Field order (a prime power)
    #[arg(long, global = true, conflicts_with_all = ["p", "m"])]
    pub q: Option<u32>,
    /// Field characteristic, used with --m
    #[arg(long, global = true, requires = "m")]
    pub p: Option<u32>,
    /// Extension degree over Z_p, used with --p
    #[arg(long, global = true, requires = "p")]
    pub m: Option<u32>,
    /// Defining polynomial as ascending coefficients "c0,c1,...,1"
    #[arg(long, global = true)]
    pub modulus: Option<String>,
    /// Exponent t of the automorphism a -> a^(p^t)
    #[arg(long, global = true, default_value_t = 0)]
    pub theta: u32,
    /// Parameter of the inner derivation gamma*(theta(a) - a); needs --theta != 0
    #[arg(long, global = true, default_value = "0")]
    pub gamma: String,
    /// Cap on enumerated candidates or codewords
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub budget: u64,
    /// Worker threads (default: available parallelism)
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// Seed for randomized harnesses
    #[arg(long, global = true, default_value_t = 2024)]
    pub seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Md,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Strict,
    RootsOnly,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormsArg {
    Classical,
    Twisted,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointsArg {
    NormValue,
    NormPower,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RangeArg {
    Theorem,
    Corollary,
}

#[derive(Args, Debug, Clone)]
pub struct BchArgs {
    /// Generator polynomial
    #[arg(long)]
    pub g: String,
    /// Code length
    #[arg(long)]
    pub n: usize,
    /// Witness point in GF(q^e), e.g. "w^5" in that field's own notation
    #[arg(long)]
    pub beta: String,
    /// Extension degree of the witness field
    #[arg(long, default_value_t = 1)]
    pub e: u32,
    /// Offset l
    #[arg(long, default_value_t = 0)]
    pub l: usize,
    /// Exponents m1[,m2,...]; more than one selects the multi-range check
    #[arg(long = "mvec", value_delimiter = ',', required = true)]
    pub mvec: Vec<usize>,
    /// Designed distance
    #[arg(long)]
    pub delta: usize,
    /// Ranges s2[,s3,...] for the extra exponents
    #[arg(long = "svec", value_delimiter = ',')]
    pub svec: Vec<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Strict)]
    pub mode: ModeArg,
    /// How unadorned norms in the hypotheses are read
    #[arg(long, value_enum, default_value_t = NormsArg::Classical)]
    pub norms: NormsArg,
    /// Evaluation point convention for the root conditions
    #[arg(long, value_enum, default_value_t = PointsArg::NormValue)]
    pub points: PointsArg,
    /// Also compute the exact minimum distance
    #[arg(long)]
    pub distance: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Field context, primitive element and Frobenius orbit
    Field {
        /// Element whose orbit is printed (default: the primitive element)
        #[arg(long)]
        elem: Option<String>,
    },
    /// Product f*g
    Mul { f: String, g: String },
    /// Quotient and remainder of f by g
    Divmod {
        f: String,
        g: String,
        /// Divide on the left (f = g*q + r) instead of the right
        #[arg(long)]
        left: bool,
    },
    /// Monic right gcd
    Gcd { f: String, g: String },
    /// Monic least common left multiple
    Lclm { f: String, g: String },
    /// Skew evaluation f(a), equal to the remainder of f by x - a
    Eval { f: String, a: String },
    /// i-th norm of a, twisted and classical
    Norm { i: usize, a: String },
    /// Code generated by g in length n
    Code {
        #[arg(long)]
        g: String,
        #[arg(long)]
        n: usize,
    },
    /// Parity matrix from the cofactor of a two-sided divisor, and the dual check
    Dual {
        /// Modulus f (monic, nonzero constant term)
        #[arg(long)]
        f: String,
        /// Two-sided divisor g of f
        #[arg(long)]
        g: String,
    },
    /// Separable 2D code modulo (f1(x1), f2(x2)); --theta is t1
    Code2d {
        #[arg(long)]
        f1: String,
        #[arg(long)]
        f2: String,
        /// Generator in x1, x2
        #[arg(long)]
        g: String,
        /// Exponent t2 of the second automorphism
        #[arg(long, default_value_t = 0)]
        theta2: u32,
    },
    /// Check a BCH-type witness against a code
    Bch(BchArgs),
    /// Randomized soundness sweep of the strict certifier
    Sweep {
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = NormsArg::Classical)]
        norms: NormsArg,
        #[arg(long, value_enum, default_value_t = PointsArg::NormValue)]
        points: PointsArg,
    },
    /// Generator as an lclm of linear factors over GF(q^e), then the MDS check
    ConstructMds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        beta: String,
        #[arg(long, default_value_t = 1)]
        e: u32,
        #[arg(long, default_value_t = 0)]
        l: usize,
        /// Exponents c1[,c2,...]
        #[arg(long = "cvec", value_delimiter = ',', required = true)]
        cvec: Vec<usize>,
        #[arg(long)]
        delta: usize,
        /// Ranges s2[,s3,...]
        #[arg(long = "svec", value_delimiter = ',')]
        svec: Vec<usize>,
        #[arg(long, value_enum, default_value_t = RangeArg::Theorem)]
        range: RangeArg,
    },
    /// MDS table over all monic generators with nonzero coefficients
    Table {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        /// Largest length (default: q - 1)
        #[arg(long)]
        n_max: Option<usize>,
        /// Check the published q = 11 witness rows instead of enumerating
        #[arg(long)]
        verify: bool,
    },
    /// Reproduce the worked examples
    Examples {
        /// 5.1 ... 5.5 or all
        #[arg(long, default_value = "all")]
        id: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            if let Err(e) = commands::emit(&cli.global, &out.text) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            for line in &out.notes {
                eprintln!("{line}");
            }
            ExitCode::from(if out.diff { 3 } else { 0 })
        }
        Err(commands::Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("usage: sgc [--q Q | --p P --m M] [--theta T] [--gamma G] <COMMAND> ...  (see sgc --help)");
            ExitCode::from(1)
        }
        Err(commands::Failure::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
