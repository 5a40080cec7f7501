use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use exact_algebra::QtZero;
use macdonald_ops::CACHE_DIR_ENV;
use verifier_cli::{run_suite, Format, Profile, Settings, CATALOG};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
    None,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

/// Exact checks of the Delta Conjecture and related identities.
///
/// Exit status: 0 when every theorem-status check passes, 1 when one fails,
/// 2 on usage or configuration errors (including a corrupt cache file).
/// Conjecture-status mismatches are reported but do not change the status.
#[derive(Debug, Parser)]
#[command(name = "delta-verifier", version)]
struct Cli {
    /// Parameter ranges: quick (operators to degree 4), full (degree 6), none.
    #[arg(long, value_enum, default_value = "quick")]
    profile: ProfileArg,
    /// Run only this check; repeat for several. Defaults to the whole catalog.
    #[arg(long = "check", value_name = "NAME")]
    checks: Vec<String>,
    /// Upper bound on n for every check, applied on top of the profile.
    #[arg(long, value_name = "N")]
    n_max: Option<usize>,
    /// Only cases with this k.
    #[arg(long, value_name = "K")]
    k: Option<usize>,
    /// Directory holding the H̃ cache files.
    #[arg(long, value_name = "DIR", env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    /// Number of x-variables in polynomial comparisons (default: n).
    #[arg(long, value_name = "N")]
    vars: Option<usize>,
    /// Read [0]_{q,t} as 0 in closed forms (the default).
    #[arg(long, conflicts_with = "qtint_one")]
    qtint_zero: bool,
    /// Read [0]_{q,t} as 1 in closed forms.
    #[arg(long)]
    qtint_one: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Worker threads (default: available parallelism).
    #[arg(long, value_name = "N")]
    threads: Option<usize>,
    /// No per-case progress on stderr.
    #[arg(long, short)]
    quiet: bool,
    /// Print the catalog and exit.
    #[arg(long)]
    list: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.list {
        for c in CATALOG {
            println!("{:<14} {:<10} {}", c.name, c.status, c.statement);
        }
        return ExitCode::SUCCESS;
    }
    let profile = match cli.profile {
        ProfileArg::Quick => Profile::Quick,
        ProfileArg::Full => Profile::Full,
        ProfileArg::None => Profile::None,
    };
    let mut settings = Settings::new(profile);
    settings.scope.n_max = cli.n_max;
    settings.scope.k = cli.k;
    settings.checks = cli.checks;
    settings.cache_dir = cli.cache_dir;
    settings.vars = cli.vars;
    settings.qtint_zero = if cli.qtint_one { QtZero::One } else { QtZero::Zero };
    settings.progress = !cli.quiet;
    settings.threads = cli.threads;
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Structured => Format::Structured,
    };
    match run_suite(&settings) {
        Ok(report) => {
            print!("{}", report.render(format));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("delta-verifier: {e}");
            ExitCode::from(2)
        }
    }
}
