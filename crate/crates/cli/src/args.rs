use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Build and verify Hopf π-algebras, braces, matched pairs, post-Hopf
/// structures and Rota-Baxter operators from structure-constant documents.
///
/// Exit codes: 0 pass, 1 mathematical failure, 2 input or resource error.
/// Checker parallelism follows RAYON_NUM_THREADS.
#[derive(Debug, Parser)]
#[command(name = "hopfpi", version)]
pub struct Cli {
    /// Print the report as JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the full checker suite for a document's kind.
    Validate { file: PathBuf },
    /// Build a new structure; the output is validated before it is written.
    Construct {
        #[command(subcommand)]
        op: Construct,
        /// Output path; the document goes to stdout when omitted.
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Search for set-level Rota-Baxter operators on a graded group algebra.
    EnumerateRb {
        /// Group document holding the grading.
        #[arg(long)]
        group: PathBuf,
        /// Name of the grading inside the group document.
        #[arg(long)]
        deg: String,
        /// Refuse searches over more candidate maps than this.
        #[arg(long, default_value_t = hopfpi::enumerate::DEFAULT_BOUND)]
        bound: u128,
        /// Re-run the unpruned search and require identical results.
        #[arg(long)]
        oracle: bool,
        /// Field used when checking the linearized operators.
        #[arg(long, default_value = "rational")]
        field: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check the braid equation for the braidings of a brace.
    Ybe {
        file: PathBuf,
        /// Length of the grade sequences in the intertwiner comparison.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
        n: u8,
        /// Add one to an entry of the braiding before checking.
        #[arg(long, hide = true)]
        perturb: bool,
    },
    /// Write the bundled fixture gallery.
    Gallery {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct BraceIn {
    #[arg(long)]
    pub brace: PathBuf,
}

#[derive(Debug, Args)]
pub struct MpIn {
    #[arg(long)]
    pub mp: PathBuf,
}

#[derive(Debug, Args)]
pub struct PostHopfIn {
    #[arg(long = "post-hopf")]
    pub post_hopf: PathBuf,
}

#[derive(Debug, Args)]
pub struct RbIn {
    #[arg(long)]
    pub rb: PathBuf,
}

#[derive(Debug, Args)]
pub struct ActionIn {
    /// Action document: acting algebra, target algebra and left action.
    #[arg(long)]
    pub action: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Group algebra graded by a named grading.
    GroupAlgebra {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        deg: String,
        #[arg(long, default_value = "rational")]
        field: String,
    },
    /// Smash brace of a trivially graded algebra acting on a π-graded one.
    SmashPimod(ActionIn),
    /// Smash brace of a module-like bialgebra action.
    SmashModlike(ActionIn),
    /// Brace over a group of automorphisms of a trivially graded brace.
    AutBrace {
        #[arg(long)]
        brace: PathBuf,
        #[arg(long)]
        autos: PathBuf,
    },
    /// Bicrossed product of a matched pair.
    Bicrossed(MpIn),
    /// Matched pair `(H∘, H∘)` of a cocommutative brace over abelian π.
    BraceToMp(BraceIn),
    /// Brace of a matched pair satisfying the circle identity.
    MpToBrace(MpIn),
    /// Post-Hopf structure `x▷y = S(x₁)(x₂∘y)` of a brace.
    PostHopfFromBrace(BraceIn),
    /// Brace of a post-Hopf structure and its subadjacent algebra.
    BraceFromPostHopf(PostHopfIn),
    /// Subadjacent Hopf π-algebra of a cocommutative post-Hopf structure.
    Subadjacent(PostHopfIn),
    /// The antipode as a Rota-Baxter operator.
    AntipodeRb {
        #[arg(long)]
        hopf: PathBuf,
    },
    /// Conjugate an operator by a grade-preserving (anti)automorphism.
    TwistRb {
        #[arg(long)]
        rb: PathBuf,
        /// Linear map document with one block per grade.
        #[arg(long)]
        phi: PathBuf,
    },
    /// Operator of a factorization `H_α = G·K_α`.
    FactorizationRb {
        #[arg(long)]
        factorization: PathBuf,
    },
    /// Operator over a group of automorphisms of a trivially graded carrier.
    AutRb {
        #[arg(long)]
        rb: PathBuf,
        #[arg(long)]
        autos: PathBuf,
    },
    /// Descendent Hopf π-algebra of an operator.
    Descendent(RbIn),
    /// Brace on the descendent algebra of an operator (abelian π).
    BraceFromRb(RbIn),
}

impl Construct {
    pub fn name(&self) -> &'static str {
        match self {
            Construct::GroupAlgebra { .. } => "group-algebra",
            Construct::SmashPimod(_) => "smash-pimod",
            Construct::SmashModlike(_) => "smash-modlike",
            Construct::AutBrace { .. } => "aut-brace",
            Construct::Bicrossed(_) => "bicrossed",
            Construct::BraceToMp(_) => "brace-to-mp",
            Construct::MpToBrace(_) => "mp-to-brace",
            Construct::PostHopfFromBrace(_) => "post-hopf-from-brace",
            Construct::BraceFromPostHopf(_) => "brace-from-post-hopf",
            Construct::Subadjacent(_) => "subadjacent",
            Construct::AntipodeRb { .. } => "antipode-rb",
            Construct::TwistRb { .. } => "twist-rb",
            Construct::FactorizationRb { .. } => "factorization-rb",
            Construct::AutRb { .. } => "aut-rb",
            Construct::Descendent(_) => "descendent",
            Construct::BraceFromRb(_) => "brace-from-rb",
        }
    }
}
