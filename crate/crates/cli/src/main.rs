mod cache;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fermat_cubic::arrangements::{conic_catalog, shadow_census_from, tangent_analysis, ConicArrangement};
use fermat_cubic::catalogs::{flex_catalog, PointKind};
use fermat_cubic::verify::verify_all;

use crate::cache::Cache;

#[derive(Parser, Debug)]
#[command(name = "ftl", version, about = "Torsion points, tangent lines and osculating conics of x^3 + y^3 + z^3")]
struct Cli {
    /// Output directory.
    #[arg(long, global = true, env = "FTL_OUT", default_value = "ftl-out")]
    out: PathBuf,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for the parallel sections.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    /// Rebuild catalogs instead of reusing cached files.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "txt",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AnyKind {
    Flex,
    Sextactic,
    Type9,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ArrangementKind {
    Sextactic,
    Type9,
}

impl From<AnyKind> for PointKind {
    fn from(k: AnyKind) -> Self {
        match k {
            AnyKind::Flex => PointKind::Flex,
            AnyKind::Sextactic => PointKind::Sextactic,
            AnyKind::Type9 => PointKind::Type9,
        }
    }
}

impl From<ArrangementKind> for PointKind {
    fn from(k: ArrangementKind) -> Self {
        match k {
            ArrangementKind::Sextactic => PointKind::Sextactic,
            ArrangementKind::Type9 => PointKind::Type9,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build (or reuse) a point catalog.
    Catalog { kind: AnyKind },
    /// Tangent lines and their residual points.
    Tangents { kind: ArrangementKind },
    /// Osculating conics through pairs of catalog points.
    Conics { kind: ArrangementKind },
    /// Points lying on at least two osculating conics.
    Census { kind: ArrangementKind },
    /// Run every acceptance check.
    Verify {
        #[arg(long, required = true)]
        all: bool,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Usage(String),
    #[error("{context}: {source}")]
    Io { context: String, source: std::io::Error },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
        }
    }
}

impl From<fermat_cubic::Error> for CliError {
    fn from(e: fermat_cubic::Error) -> Self {
        CliError::Verification(e.to_string())
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.into())
            .build_global()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    }
    let cache = Cache::new(&cli.out, !cli.no_cache)?;
    let format = cli.format;
    match cli.command {
        Command::Catalog { kind } => {
            let catalog = cache.catalog(kind.into())?;
            if format != Format::Json {
                let name = format!("catalog_{}.{}", catalog.kind(), format.extension());
                cache.write(&name, &render::catalog(&catalog, format)?)?;
            }
        }
        Command::Tangents { kind } => {
            let catalog = cache.catalog(kind.into())?;
            let report = tangent_analysis(&catalog, &flex_catalog(catalog.tower())?)?;
            let name = format!("tangents_{}.{}", catalog.kind(), format.extension());
            cache.write(&name, &render::tangents(&report, format)?)?;
        }
        Command::Conics { kind } => {
            let catalog = cache.catalog(kind.into())?;
            let conics = conic_catalog(&catalog)?;
            let name = format!("conics_{}.{}", catalog.kind(), format.extension());
            cache.write(&name, &render::conics(&conics, format)?)?;
        }
        Command::Census { kind } => {
            let catalog = cache.catalog(kind.into())?;
            let conics = conic_catalog(&catalog)?;
            let arrangement = ConicArrangement::new(&catalog, &conics)?;
            let locals = arrangement.all_local_intersections()?;
            let census = shadow_census_from(&arrangement, &locals)?;
            let name = format!("census_{}.{}", catalog.kind(), format.extension());
            cache.write(&name, &render::census(&census, format)?)?;
        }
        Command::Verify { .. } => {
            for kind in PointKind::ALL {
                cache.revalidate(kind)?;
            }
            let report = verify_all();
            print!("{}", render::report(&report, format)?);
            if let Some(c) = report.first_failure() {
                return Err(CliError::Verification(format!("{} failed: {}", c.name, c.computed)));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ftl: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
