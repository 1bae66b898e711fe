use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

#[derive(Debug, Parser)]
#[command(name = "cobound", version, about = "Knot cobordism bounds from cover invariants")]
pub struct Cli {
    /// Output format; not every command supports every format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
    Ascii,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// H_1 of the n-fold cyclic branched cover.
    Cover(CoverArgs),
    /// Eigenspace Betti numbers of the deck transformation over F_p.
    Eigen(EigenArgs),
    /// Invariant factors and primary ranks of the rational Alexander module.
    Alexander(KnotArgs),
    /// Best obstruction staircase for genus-g cobordisms K1 -> K0.
    Bound(BoundArgs),
    /// Render or propagate a staircase given by its corners.
    Staircase(StaircaseArgs),
    /// Metacyclic covers of K(1, J) and the bounds they give.
    Metacyclic {
        #[command(subcommand)]
        command: MetacyclicCommand,
    },
}

/// A knot JSON file, or a built-in name (`6_1`, `10_3`, `P<k>`, `K(<k>,U)`,
/// `P(3,-3,3)`, `unknot`).
#[derive(Debug, Args)]
pub struct KnotArgs {
    #[arg(long)]
    pub knot: String,
    /// Take this many copies of the knot (connected sum).
    #[arg(long, default_value = "1")]
    pub mult: BigInt,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    #[command(flatten)]
    pub knot: KnotArgs,
    /// Cover order, at least 2.
    #[arg(long)]
    pub n: BigInt,
}

#[derive(Debug, Args)]
pub struct EigenArgs {
    #[command(flatten)]
    pub knot: KnotArgs,
    #[arg(long)]
    pub n: BigInt,
    /// Prime with p = 1 mod n.
    #[arg(long)]
    pub p: BigInt,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long)]
    pub k1: String,
    #[arg(long, default_value = "1")]
    pub mult1: BigInt,
    #[arg(long)]
    pub k0: String,
    #[arg(long, default_value = "1")]
    pub mult0: BigInt,
    /// Genus of the cobordism.
    #[arg(long, conflicts_with = "g_max", required_unless_present = "g_max")]
    pub g: Option<BigInt>,
    /// Sweep genera 0..=G and stop at the first Q(0,0).
    #[arg(long)]
    pub g_max: Option<BigInt>,
    /// Largest cover order in the sweep.
    #[arg(long, default_value = "6")]
    pub max_n: BigInt,
    /// Largest prime in the sweep.
    #[arg(long, default_value = "97")]
    pub max_p: BigInt,
}

#[derive(Debug, Args)]
pub struct StaircaseArgs {
    /// Corners such as "(2,3),(5,1)".
    #[arg(long, conflicts_with = "sequence", required_unless_present = "sequence")]
    pub corners: Option<String>,
    /// Propagate the corners through this many genus shifts.
    #[arg(long, requires = "corners")]
    pub shifts: Option<BigInt>,
    /// Family as (g,a,b) triples such as "(0,4,2),(1,3,1)".
    #[arg(long)]
    pub sequence: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "alpha-6_1")]
    Alpha,
    #[value(name = "beta-10_3")]
    Beta,
}

#[derive(Debug, Subcommand)]
pub enum MetacyclicCommand {
    /// Lower bound on c0 for n K(1, alpha 6_1) -> m K(1, beta 10_3).
    Bound {
        #[arg(long)]
        alpha: BigInt,
        #[arg(long)]
        m: BigInt,
        #[arg(long)]
        g: BigInt,
        #[arg(long)]
        n: BigInt,
    },
    /// H_1 of the 3-fold cover of M_2(K(1, J)).
    Homology(KnotArgs),
    /// Eigenspace Betti number of one K(1, scale J) over F_7 or F_19.
    Eigen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        scale: BigInt,
        #[arg(long)]
        p: BigInt,
    },
    /// Eigenspace Betti number for n summands with a nontrivial ones.
    MultiEigen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: BigInt,
        #[arg(long)]
        a: BigInt,
        #[arg(long)]
        scale: BigInt,
        #[arg(long)]
        p: BigInt,
    },
    /// 3-fold cover of n L(9,2) as a connected sum.
    Lens {
        #[arg(long)]
        n: BigInt,
        #[arg(long)]
        a: BigInt,
    },
    /// Metabolizers of (Z9, 2/9)^n + (Z9, -2/9)^m.
    Metabolizers {
        #[arg(long)]
        n: BigInt,
        #[arg(long)]
        m: BigInt,
    },
    /// Check that no large self-annihilating subgroup avoids the first block.
    Support {
        #[arg(long)]
        n: BigInt,
        #[arg(long)]
        m: BigInt,
        #[arg(long)]
        g: BigInt,
    },
    /// Realized (c0, c2) corner for n K(1, alpha 6_1) -> m K(1, beta 10_3).
    Realize {
        #[arg(long)]
        n: BigInt,
        #[arg(long)]
        m: BigInt,
        #[arg(long)]
        alpha: BigInt,
        #[arg(long)]
        beta: BigInt,
        #[arg(long)]
        g: BigInt,
    },
    /// Equivariant metabolizers for a decorated P(3,-3,3) and its reverse.
    Reversibility {
        #[arg(long)]
        knot: String,
    },
}
