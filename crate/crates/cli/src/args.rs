use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use mcgdim::groups::DEFAULT_CAP;
use mcgdim::SurfaceKind;

#[derive(Parser, Debug)]
#[command(
    name = "mcgdim",
    version,
    about = "Dimensions of mapping class groups of surfaces"
)]
pub struct Cli {
    /// Print key-sorted JSON on stdout
    #[arg(long, global = true)]
    pub json: bool,
    /// Suppress progress messages on stderr
    #[arg(long, short, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// vcd of the mapping class group and the known dimension bracket
    Vcd(SurfaceArgs),
    /// Euler characteristic of a surface
    Chi(SurfaceArgs),
    /// Orbifold signature tools
    Sig {
        #[command(subcommand)]
        command: SigCommand,
    },
    /// Weyl-group surface and vcd for a quotient signature
    Weyl { signature: String },
    /// Exact subgroup chain length of a finite group
    Lambda(GroupArgs),
    /// List quotient signatures of N_g
    Enumerate {
        #[arg(long, short)]
        genus: u32,
        /// A single group order; takes precedence over --max-order
        #[arg(long)]
        order: Option<u64>,
        /// All orders up to this bound [default: 84(g-2)]
        #[arg(long, env = "MCGDIM_MAX_ORDER")]
        max_order: Option<u64>,
    },
    /// Bound cd_F(Mod(N_g)) by vcd(WF) + λ(F) over all finite F
    Criterion {
        #[arg(long, short)]
        genus: u32,
        /// Action table (TSV); switches to database mode
        #[arg(long)]
        actions: Option<PathBuf>,
        /// Largest group order to consider [default: 84(g-2)]
        #[arg(long, env = "MCGDIM_MAX_ORDER")]
        max_order: Option<u64>,
    },
    /// Exhaustive checks of the supporting inequalities
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum SigCommand {
    /// Canonical form and Euler characteristic data
    Parse {
        signature: String,
        /// Also solve Riemann–Hurwitz for a quotient of N_g
        #[arg(long, short)]
        genus: Option<u32>,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    Lemmas,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Kind {
    #[value(name = "N")]
    N,
    #[value(name = "S")]
    S,
}

impl From<Kind> for SurfaceKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::N => SurfaceKind::NonOrientable,
            Kind::S => SurfaceKind::Orientable,
        }
    }
}

#[derive(Args, Debug)]
pub struct SurfaceArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub kind: Kind,
    #[arg(long, short)]
    pub genus: u32,
    #[arg(long, short, default_value_t = 0)]
    pub punctures: u32,
    #[arg(long, short, default_value_t = 0)]
    pub boundary: u32,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("group").required(true).args(["cyclic", "dihedral", "symmetric", "perm", "product"])))]
pub struct GroupArgs {
    /// Cyclic group of order n
    #[arg(long)]
    pub cyclic: Option<usize>,
    /// Dihedral group of order 2n
    #[arg(long)]
    pub dihedral: Option<usize>,
    /// Symmetric group on d points
    #[arg(long)]
    pub symmetric: Option<usize>,
    /// Generators in cycle notation, separated by ';' or ','
    #[arg(long, requires = "degree")]
    pub perm: Option<String>,
    #[arg(long)]
    pub degree: Option<usize>,
    /// Product such as C2xD4
    #[arg(long)]
    pub product: Option<String>,
    /// Largest group order to build
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}
