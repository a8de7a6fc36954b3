//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use commscheme_core::{FieldPolicy, GroupKind};

use crate::cache::CACHE_ENV;

#[derive(Debug, Parser)]
#[command(
    name = "commscheme",
    version,
    about = "Exact checks for commuting schemes and the higher Chevalley restriction map"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Directory for cached per-degree results.
    #[arg(long, env = CACHE_ENV, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Ground field for group computations.
    #[arg(long, value_enum, default_value_t = FieldArg::Auto, global = true)]
    pub field: FieldArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    /// F_p, or F_{p^2} when an orthogonal group needs sqrt(-1).
    Auto,
    Prime,
    Quadratic,
    Rational,
}

impl FieldArg {
    pub fn policy(self) -> FieldPolicy {
        match self {
            FieldArg::Auto => FieldPolicy::Auto,
            FieldArg::Prime => FieldPolicy::Prime,
            FieldArg::Quadratic => FieldPolicy::Quadratic,
            FieldArg::Rational => FieldPolicy::Rational,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldArg::Auto => "auto",
            FieldArg::Prime => "prime",
            FieldArg::Quadratic => "quadratic",
            FieldArg::Rational => "rational",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    Gl,
    O,
    So,
    Sp,
}

impl From<GroupArg> for GroupKind {
    fn from(g: GroupArg) -> Self {
        match g {
            GroupArg::Gl => GroupKind::GL,
            GroupArg::O => GroupKind::O,
            GroupArg::So => GroupKind::SO,
            GroupArg::Sp => GroupKind::Sp,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct GroupOpts {
    #[arg(long, value_enum)]
    pub group: GroupArg,
    /// Size of the matrices.
    #[arg(long)]
    pub n: usize,
    /// Number of matrices in the tuple.
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    /// Characteristic (0 for the rationals).
    #[arg(long)]
    pub p: u64,
}

#[derive(Debug, Clone, Args)]
pub struct DegreeOpts {
    /// Single degree to compute.
    #[arg(long, conflicts_with = "max_degree")]
    pub degree: Option<u32>,
    /// Compute every degree from 0 up to this one.
    #[arg(long)]
    pub max_degree: Option<u32>,
}

impl DegreeOpts {
    pub fn degrees(&self) -> Vec<u32> {
        match (self.degree, self.max_degree) {
            (Some(m), _) => vec![m],
            (None, Some(hi)) => (0..=hi).collect(),
            (None, None) => (0..=4).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InvariantModule {
    /// Coordinate ring of the commuting scheme.
    Quotient,
    /// Polynomials on g^d.
    Free,
    /// Polynomials on (M_n)^d.
    Ambient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CertificateModule {
    /// The commutator ideal.
    Ibar,
    /// Polynomials on g^d.
    Free,
    /// Coordinate ring of the commuting scheme.
    Quotient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BettiModule {
    Ideal,
    Quotient,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximum of the quadratic form of the key lemma over the constraint set.
    LemmaMax {
        #[arg(long)]
        n: i64,
    },
    /// Graded Betti numbers of an ideal or quotient given by generators.
    Betti {
        /// Comma-separated variable names.
        #[arg(long)]
        vars: String,
        /// Comma-separated homogeneous generators.
        #[arg(long)]
        gens: String,
        /// Largest internal degree to inspect.
        #[arg(long, default_value_t = 6)]
        window: u32,
        /// Characteristic (0 for the rationals).
        #[arg(long, default_value_t = 32003)]
        p: u64,
        #[arg(long, value_enum, default_value_t = BettiModule::Ideal)]
        module: BettiModule,
    },
    /// Dimensions of the commutator ideal and the commuting scheme's coordinate ring.
    Hilbert {
        #[command(flatten)]
        group: GroupOpts,
        #[command(flatten)]
        degrees: DegreeOpts,
    },
    /// Dimensions of group invariants, degree by degree.
    Invariants {
        #[command(flatten)]
        group: GroupOpts,
        #[command(flatten)]
        degrees: DegreeOpts,
        #[arg(long, value_enum, default_value_t = InvariantModule::Quotient)]
        module: InvariantModule,
    },
    /// Injectivity and surjectivity of the restriction map to the Cartan.
    PhiCheck {
        #[command(flatten)]
        group: GroupOpts,
        #[command(flatten)]
        degrees: DegreeOpts,
    },
    /// Dimension check of the Cauchy decomposition of exterior powers.
    Cauchy {
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        dim_f: Option<u32>,
        #[arg(long)]
        dim_g: Option<u32>,
        /// Range used for parameters that are not given.
        #[arg(long, default_value_t = 8)]
        max_k: u32,
        #[arg(long, default_value_t = 4)]
        max_dim: u32,
    },
    /// Weyl-character certificate for good filtrations.
    Certificate {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: usize,
        /// Characteristic; required unless --character is given.
        #[arg(long)]
        p: Option<u64>,
        #[command(flatten)]
        degrees: DegreeOpts,
        #[arg(long, value_enum, default_value_t = CertificateModule::Ibar)]
        module: CertificateModule,
        /// Check a literal torus character `w1,w2:c;...` instead.
        #[arg(long)]
        character: Option<String>,
    },
    /// Evaluate the characteristic bounds.
    #[command(subcommand)]
    Bound(BoundCommand),
}

#[derive(Debug, Subcommand)]
pub enum BoundCommand {
    /// Bound above which Phi is an isomorphism.
    Iso {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u64,
    },
    /// Bound for good filtrations on the commutator ideal.
    Goodfil {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, allow_hyphen_values = true)]
        reg: i64,
    },
    /// Bound for good filtrations on the degree-m piece.
    Slice {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: i64,
    },
    /// Regularity bound for ideals generated in low degree.
    Chardin {
        #[arg(long)]
        kappa: u64,
        #[arg(long)]
        dvars: u64,
    },
}
