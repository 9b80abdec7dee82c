use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod battle;
mod commands;
mod manifest;

use commands::{Fail, Out};

#[derive(Parser)]
#[command(
    name = "braidwo",
    version,
    about = "Braid normal forms, hydra dynamics and their ordinal mirrors"
)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Abbreviate large numbers to leading digits plus bit length.
    #[arg(long, global = true)]
    sci: bool,
    /// Also write a run manifest to this path.
    #[arg(long, global = true, value_name = "PATH")]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exponent sequence of a positive 3-braid word.
    Normalize { word: String },
    /// Order two braids (words or exponent sequences).
    Compare { a: String, b: String },
    /// Garside complexity, d and the bridge constant.
    Complexity { braid: String },
    /// Right greedy normal form.
    Greedy { braid: String },
    /// Ordinal of a 3-braid.
    Ord { braid: String },
    /// λ[x] for an ordinal below ε₀.
    Fundseq {
        ordinal: String,
        x: String,
        #[arg(long, default_value = "standard")]
        variant: String,
    },
    /// Hardy function H_α(x).
    Hardy {
        ordinal: String,
        x: String,
        #[arg(long, default_value = "standard")]
        variant: String,
        #[arg(long, default_value_t = braidwo::DEFAULT_BUDGET_BITS)]
        budget_bits: u64,
    },
    /// Ack_r(x), or the diagonal Ack(x) without --level.
    Ack {
        x: String,
        #[arg(long)]
        level: Option<u64>,
        /// Give up once the value exceeds 2^cutoff_bits.
        #[arg(long, default_value_t = 4096)]
        cutoff_bits: u64,
    },
    /// Least y with Ack_r(y) ≥ x, or the diagonal inverse without --level.
    Ackinv {
        x: String,
        #[arg(long)]
        level: Option<u64>,
    },
    #[command(subcommand)]
    Hydra(HydraCmd),
    /// Compare each step with the fundamental-sequence prediction.
    Mirror {
        braid: String,
        #[arg(long, default_value_t = 25)]
        horizon: u64,
    },
    #[command(subcommand)]
    Enum(EnumCmd),
    #[command(subcommand)]
    Count(CountCmd),
    #[command(subcommand)]
    Wo(WoCmd),
    #[command(subcommand)]
    Special(SpecialCmd),
    /// Run an acceptance suite by name or number, or all of them.
    Verify {
        suite: String,
        /// Worker threads; results are always reported in suite order.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Subcommand)]
enum HydraCmd {
    /// Iterate b → b{t} with t = 1, 2, ….
    Run {
        braid: String,
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = 100_000)]
        max_steps: u64,
        /// Write the trace as tab-separated records.
        #[arg(long, value_name = "PATH")]
        export: Option<PathBuf>,
    },
    /// Number of steps to reach 1 from b·σ₁^k.
    Length {
        braid: String,
        #[arg(long, default_value_t = 0)]
        k: u64,
        /// fast (phase-skipping dynamics), slow (step by step) or hardy.
        #[arg(long, default_value = "fast")]
        method: String,
        #[arg(long, default_value_t = braidwo::hydra::DEFAULT_FAST_MOVES)]
        max_moves: u64,
        #[arg(long, default_value_t = braidwo::DEFAULT_BUDGET_BITS)]
        budget_bits: u64,
    },
    /// Play the game interactively: pick a permitted position at each step.
    Battle {
        braid: String,
        #[arg(long, default_value = "battle-trace.tsv", value_name = "PATH")]
        trace_file: PathBuf,
    },
}

#[derive(Subcommand)]
enum EnumCmd {
    /// Div(Δ₃^ℓ) in increasing order.
    Divisors {
        l: u64,
        #[arg(long, default_value = "recursive")]
        mode: String,
        /// Skip the on-disk table cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// S_{k,ℓ}: braids of complexity ≤ ℓ below Δ₃^k.
    S { k: u64, l: u64 },
}

#[derive(Subcommand)]
enum CountCmd {
    /// |Div(Δ₃^ℓ)| = 2^{ℓ+3} − 3ℓ − 7.
    Total { l: u64 },
    /// card S_{k,ℓ} by the closed formula.
    S { k: u64, l: u64 },
}

#[derive(Args, Clone)]
struct WoArgs {
    k: u64,
    /// const:r, square, f_r:r or f_omega.
    #[arg(long, default_value = "const:0")]
    f: String,
    #[arg(long, default_value_t = 100_000)]
    max_len: u64,
}

#[derive(Subcommand)]
enum WoCmd {
    /// Longest (k,f)-simple descending sequence found greedily.
    Longest {
        #[command(flatten)]
        args: WoArgs,
        /// Also run the exhaustive search (tiny instances only).
        #[arg(long)]
        exhaustive: bool,
    },
    /// The dilated sequence b'_t for t in [0, t_max].
    Dilate {
        k: u64,
        #[arg(long)]
        t_max: Option<u64>,
        /// Window factor for the h(k) search.
        #[arg(long, default_value_t = 4)]
        window: u64,
    },
    /// Longest-sequence experiment; always writes a manifest.
    Experiment {
        #[command(flatten)]
        args: WoArgs,
    },
}

#[derive(Subcommand)]
enum SpecialCmd {
    /// Word of a skew tree such as "[3: <2>, <0>]".
    Skew { tree: String },
    /// Skew tree of a special n-braid word.
    Parse { n: u8, word: String },
    /// Iterate the special dynamics.
    Run {
        tree: String,
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = 100_000)]
        max_steps: u64,
        #[arg(long, default_value = "mirror-exact")]
        insertion: String,
    },
    /// ord^sp of a skew tree.
    Ord {
        tree: String,
        #[arg(long, default_value = "n-3")]
        convention: String,
    },
    /// Mirror check of the special dynamics.
    Mirror {
        tree: String,
        #[arg(long, default_value_t = 10)]
        horizon: u64,
        #[arg(long, default_value = "mirror-exact")]
        insertion: String,
        #[arg(long, default_value = "n-3")]
        convention: String,
    },
}

fn dispatch(cli: &Cli) -> Result<Out, Fail> {
    use commands as c;
    let sci = cli.sci;
    match &cli.cmd {
        Cmd::Normalize { word } => c::normalize(word),
        Cmd::Compare { a, b } => c::compare(a, b),
        Cmd::Complexity { braid } => c::complexity(braid),
        Cmd::Greedy { braid } => c::greedy(braid),
        Cmd::Ord { braid } => c::ord(braid),
        Cmd::Fundseq { ordinal, x, variant } => c::fundseq(ordinal, x, variant),
        Cmd::Hardy {
            ordinal,
            x,
            variant,
            budget_bits,
        } => c::hardy(ordinal, x, variant, *budget_bits, sci),
        Cmd::Ack { x, level, cutoff_bits } => c::ack(x, *level, *cutoff_bits, sci),
        Cmd::Ackinv { x, level } => c::ackinv(x, *level),
        Cmd::Hydra(HydraCmd::Run {
            braid,
            trace,
            max_steps,
            export,
        }) => c::hydra_run(braid, *trace, *max_steps, export.as_deref()),
        Cmd::Hydra(HydraCmd::Length {
            braid,
            k,
            method,
            max_moves,
            budget_bits,
        }) => c::hydra_length(braid, *k, method, *max_moves, *budget_bits, sci),
        Cmd::Hydra(HydraCmd::Battle { braid, trace_file }) => battle::battle(braid, trace_file, cli.json),
        Cmd::Mirror { braid, horizon } => c::mirror(braid, *horizon),
        Cmd::Enum(EnumCmd::Divisors { l, mode, no_cache }) => c::enum_divisors(*l, mode, *no_cache),
        Cmd::Enum(EnumCmd::S { k, l }) => c::enum_s(*k, *l),
        Cmd::Count(CountCmd::Total { l }) => c::count_total(*l, sci),
        Cmd::Count(CountCmd::S { k, l }) => c::count_s(*k, *l, sci),
        Cmd::Wo(WoCmd::Longest { args, exhaustive }) => c::wo_longest(args.k, &args.f, args.max_len, *exhaustive),
        Cmd::Wo(WoCmd::Dilate { k, t_max, window }) => c::wo_dilate(*k, *t_max, *window),
        Cmd::Wo(WoCmd::Experiment { args }) => c::wo_experiment(args.k, &args.f, args.max_len),
        Cmd::Special(SpecialCmd::Skew { tree }) => c::special_skew(tree),
        Cmd::Special(SpecialCmd::Parse { n, word }) => c::special_parse(*n, word),
        Cmd::Special(SpecialCmd::Run {
            tree,
            trace,
            max_steps,
            insertion,
        }) => c::special_run(tree, *trace, *max_steps, insertion),
        Cmd::Special(SpecialCmd::Ord { tree, convention }) => c::special_ord(tree, convention),
        Cmd::Special(SpecialCmd::Mirror {
            tree,
            horizon,
            insertion,
            convention,
        }) => c::special_mirror(tree, *horizon, insertion, convention),
        Cmd::Verify { suite, jobs } => c::verify(suite, *jobs),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let started = manifest::now_unix();
    let result = dispatch(&cli);
    let code = match &result {
        Ok(out) => out.code,
        Err(f) => f.code,
    };
    match &result {
        Ok(out) => out.print(cli.json),
        Err(f) => f.print(cli.json),
    }
    let experiment = matches!(cli.cmd, Cmd::Wo(WoCmd::Experiment { .. }));
    let path = cli
        .manifest
        .clone()
        .or_else(|| experiment.then(|| PathBuf::from("braidwo-manifest.json")));
    if let Some(path) = path {
        let m = manifest::RunManifest::new(argv, started, &result);
        if let Err(e) = m.write(&path) {
            eprintln!("error: cannot write manifest {}: {e}", path.display());
            return ExitCode::from(2);
        }
        if !cli.json {
            eprintln!("manifest written to {}", path.display());
        }
    }
    ExitCode::from(code)
}
