use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lexsegment_core::formulas::Degree3Reading;

#[derive(Debug, Parser)]
#[command(name = "lextool", version, about = "Monomial ideals, lexsegments and their closed-form invariants")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Field characteristic: 0 or a prime.
    #[arg(long = "char", global = true, default_value_t = 0, value_name = "0|p")]
    pub char_p: u64,
    /// Also run the independent oracle and compare.
    #[arg(long, global = true)]
    pub cross_check: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Binomial representations and the Macaulay operators.
    #[command(subcommand)]
    Macaulay(MacaulayOp),
    /// Lexsegments of monomials and their shadows.
    #[command(subcommand)]
    Lexseg(LexsegOp),
    /// Simplicial complexes given by facets.
    #[command(subcommand)]
    Simplicial(SimplicialOp),
    /// Brute-force invariants of a monomial ideal.
    #[command(subcommand)]
    Ideal(IdealOp),
    /// Closed forms for squarefree lexsegment ideals.
    #[command(subcommand)]
    Lexideal(LexidealOp),
    /// Gotzmann, linear-resolution and Taylor criteria.
    #[command(subcommand)]
    Gotzmann(GotzmannOp),
    /// Exhaustive formula-against-oracle sweep with a JSONL log.
    Sweep(SweepArgs),
}

#[derive(Debug, Subcommand)]
pub enum MacaulayOp {
    /// d-binomial representation of a.
    Rep { a: u128, d: u32 },
    /// a^<d>.
    Upper { a: u128, d: u32 },
    /// a_<d>.
    Lower { a: u128, d: u32 },
    /// a^(d).
    Paren { a: u128, d: u32 },
}

#[derive(Debug, Args)]
pub struct EndsArgs {
    /// Upper end; omitted for an initial segment.
    #[arg(long)]
    pub u: Option<String>,
    /// Lower end; omitted for a final segment.
    #[arg(long)]
    pub v: Option<String>,
    /// Number of variables (default: largest index in the ends).
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub squarefree: bool,
}

#[derive(Debug, Subcommand)]
pub enum LexsegOp {
    /// List L(u, v).
    Build(EndsArgs),
    /// Shadow of a set of monomials of one degree.
    Shadow {
        #[command(flatten)]
        set: IdealArgs,
        #[arg(long)]
        squarefree: bool,
    },
    /// Whether every iterated shadow of L(u, v) is a lexsegment.
    Complete(EndsArgs),
}

#[derive(Debug, Args)]
pub struct ComplexArgs {
    /// Facets as comma-separated vertex lists, e.g. `1,3,4`.
    pub facets: Vec<String>,
    /// Number of vertices (default: largest vertex).
    #[arg(long)]
    pub n: Option<usize>,
    /// Read `{"n", "facets"}` from a JSON file instead.
    #[arg(long, conflicts_with = "facets")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum SimplicialOp {
    /// f- and h-vectors.
    Fvector(ComplexArgs),
    /// Alexander dual.
    Dual(ComplexArgs),
    /// Cohen-Macaulayness over the chosen field.
    Cm(ComplexArgs),
    /// depth of the Stanley-Reisner ring.
    Depth(ComplexArgs),
}

#[derive(Debug, Args)]
pub struct IdealArgs {
    /// Generators such as `x1*x3^2`; commas also separate.
    pub gens: Vec<String>,
    /// Number of variables (default: largest index used).
    #[arg(long)]
    pub n: Option<usize>,
    /// Read `{"n", "gens"}` from a JSON file instead.
    #[arg(long, conflicts_with = "gens")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum IdealOp {
    /// Irredundant primary decomposition.
    Primdec(IdealArgs),
    /// Graded Betti numbers.
    Betti(IdealArgs),
    /// Castelnuovo-Mumford regularity of I.
    Reg(IdealArgs),
    /// depth of S/I.
    Depth(IdealArgs),
    /// Linear quotients by exhaustive order search.
    Linquot {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Largest generator count searched.
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
    /// Componentwise linearity.
    Cwl(IdealArgs),
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub u: Option<String>,
    #[arg(long)]
    pub v: Option<String>,
    /// u = x1..xq.
    #[arg(long, conflicts_with_all = ["u", "final_"])]
    pub initial: bool,
    /// v = x(n-q+1)..xn.
    #[arg(long = "final", conflicts_with = "v")]
    pub final_: bool,
}

#[derive(Debug, Subcommand)]
pub enum LexidealOp {
    /// Minimal primes from the closed forms.
    Primdec(SpecArgs),
    /// dim, depth, multiplicity, purity and Cohen-Macaulayness.
    Invariants(SpecArgs),
    /// Sequential Cohen-Macaulayness.
    Seqcm(SpecArgs),
    /// Invariants of a degree-2 segment with its certificate.
    Edge(SpecArgs),
    /// depth of a degree-3 segment and the clause deciding it.
    Deg3 {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = Reading::Corrected)]
        reading: Reading,
    },
    /// Set-system certificate for the arithmetical rank.
    Sv(SpecArgs),
    /// Sweep over all segments of one degree.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct GenEndsArgs {
    #[arg(long)]
    pub u: String,
    #[arg(long)]
    pub v: String,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum GotzmannOp {
    /// Whether an equigenerated ideal is Gotzmann.
    Test(IdealArgs),
    /// Closed criteria for the lexsegment ideal (L(u, v)).
    Classify(GenEndsArgs),
    /// The lex ideal with the same Hilbert function.
    Lexify(IdealArgs),
    /// Whether the Taylor resolution is minimal.
    TaylorMin(IdealArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Check {
    /// depth of squarefree segments, degree 2 or 3.
    Depth,
    /// minimal primes of completely segments.
    Primdec,
    /// dim, depth, multiplicity and purity of completely segments.
    Invariants,
    /// degree-2 invariants and certificates.
    Edge,
    /// degree-3 depth clauses.
    Deg3,
    /// sequential Cohen-Macaulayness of completely segments.
    Seqcm,
    /// certificate length against projective dimension.
    Sv,
    /// Gotzmann criterion for completely segments.
    Compg,
    /// Gotzmann criterion for the other segments.
    Noncomplete,
    /// linear resolution of lexsegment ideals.
    Adh,
    /// depth zero of lexsegment ideals.
    DepthZero,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub check: Check,
    /// Degree of squarefree segments.
    #[arg(long)]
    pub q: Option<usize>,
    /// Fewest variables (default: q, or 2 for the Gotzmann checks)
    #[arg(long)]
    pub n_min: Option<usize>,
    /// Most variables
    #[arg(long)]
    pub n_max: usize,
    /// Largest degree for the Gotzmann checks.
    #[arg(long, default_value_t = 4)]
    pub d_max: u32,
    /// Keep this many evenly spaced instances.
    #[arg(long)]
    pub sample: Option<usize>,
    /// JSONL log, one line per instance after a header line.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Continue the log in `--out` instead of starting over.
    #[arg(long, requires = "out")]
    pub resume: bool,
    /// Guard of the third depth clause, for the deg3 check.
    #[arg(long, value_enum, default_value_t = Reading::Corrected)]
    pub reading: Reading,
    /// Instances per parallel batch between log flushes.
    #[arg(long, default_value_t = 256)]
    pub chunk: usize,
}

impl Check {
    /// Checks over squarefree segments, as opposed to general lexsegment
    /// ideals.
    pub fn is_lexideal(self) -> bool {
        !matches!(self, Check::Compg | Check::Noncomplete | Check::Adh | Check::DepthZero)
    }
}

/// Guard of the third degree-3 depth clause: `literal` asks for `j_2 = 2`,
/// `corrected` for `v = x2*x3*x_j` with `j < i_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    Literal,
    Corrected,
}

impl From<Reading> for Degree3Reading {
    fn from(r: Reading) -> Degree3Reading {
        match r {
            Reading::Literal => Degree3Reading::Literal,
            Reading::Corrected => Degree3Reading::Corrected,
        }
    }
}
