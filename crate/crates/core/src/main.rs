use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use frbcs::cli::{self, DatasetSpec, ReportFormat, RunConfig, TNormSpec};
use frbcs::{Error, NormalizationMode, TNorm, WeightMode};

#[derive(Parser)]
#[command(name = "frbcs", version, about = "Compare T-norms in fuzzy rule-based classification")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cross-validate every dataset under every T-norm and write reports.
    Run {
        /// JSON run configuration; flags given alongside it override its fields.
        #[arg(long)]
        config: Option<PathBuf>,
        /// `<path>[:label-col]`, repeatable.
        #[arg(long = "data")]
        data: Vec<DatasetSpec>,
        /// `<name>[:alpha]`, repeatable; all nine at default alpha when omitted.
        #[arg(long = "tnorm")]
        tnorms: Vec<String>,
        #[arg(long)]
        repeats: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Comma-separated subset of `csv,md`.
        #[arg(long, value_delimiter = ',')]
        format: Vec<ReportFormat>,
        /// Use conf * supp as the rule weight instead of the confidence difference.
        #[arg(long)]
        conf_supp_weight: bool,
        /// Fit normalization on the whole dataset instead of per training fold.
        #[arg(long)]
        global_normalization: bool,
    },
    /// Print the rule base learned from a whole dataset.
    DumpRules {
        /// `<path>[:label-col]`
        #[arg(long)]
        data: DatasetSpec,
        #[arg(long, default_value = "product")]
        tnorm: String,
        /// Accepted for symmetry with `run`; training on the full set is deterministic.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        conf_supp_weight: bool,
    },
}

fn weight_mode(conf_supp: bool) -> WeightMode {
    if conf_supp {
        WeightMode::ConfidenceTimesSupport
    } else {
        WeightMode::ConfidenceDifference
    }
}

fn execute(command: Command) -> Result<(), Error> {
    match command {
        Command::Run {
            config,
            data,
            tnorms,
            repeats,
            seed,
            out,
            format,
            conf_supp_weight,
            global_normalization,
        } => {
            let mut cfg = match &config {
                Some(path) => RunConfig::from_json_file(path)?,
                None => RunConfig::new(Vec::new(), "reports"),
            };
            if !data.is_empty() {
                cfg.datasets = data;
            }
            if !tnorms.is_empty() {
                cfg.tnorms = tnorms.into_iter().map(TNormSpec::Text).collect();
            }
            if let Some(r) = repeats {
                cfg.repeats = r;
            }
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(o) = out {
                cfg.out = o;
            }
            if !format.is_empty() {
                cfg.formats = format;
            }
            if conf_supp_weight {
                cfg.weight_mode = WeightMode::ConfidenceTimesSupport;
            }
            if global_normalization {
                cfg.normalization = NormalizationMode::Global;
            }
            let report = cli::run(&cfg)?;
            print!("{}", frbcs::report::matrix_markdown(&report.run.matrix));
            if let Some((_, f)) = &report.friedman {
                println!("\n{}", frbcs::report::friedman_summary(f));
            }
            for f in &report.files {
                eprintln!("wrote {}", f.display());
            }
            Ok(())
        }
        Command::DumpRules {
            data,
            tnorm,
            seed: _,
            conf_supp_weight,
        } => {
            let t: TNorm = tnorm.parse()?;
            print!("{}", cli::dump_rules(&data, t, weight_mode(conf_supp_weight))?);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(1);
        }
        Err(e) => e.exit(),
    };
    match execute(args.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
