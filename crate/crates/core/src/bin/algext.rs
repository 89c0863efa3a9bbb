use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use algext::scenario::{
    generate_example, parse_scenario, run, scenario_to_json, Format, Operation, Scenario, ScenarioError,
    CATALOG,
};
use algext::ToleranceProfile;

#[derive(Parser)]
#[command(name = "algext", version, about = "Algebraic extensions of normed algebras on finite models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the extensions and report their norms.
    Extend(Common),
    /// Enumerate characters of the (tower) extension.
    Characters(Common),
    /// Discriminants of the scenario's polynomials.
    Discriminant(Common),
    /// Radical and tractability verdicts.
    Tractable(Common),
    /// Quotients by the radical.
    Quotient(Common),
    /// Cole extensions, and the Cole tower when the scenario has further stages.
    Cole(Common),
    /// Šilov boundary of the ground algebra.
    Silov(Common),
    /// Compare the two extension constructions.
    Compare(Common),
    /// Standard tower over all polynomials.
    Tower(Common),
    /// Print a bundled scenario, or list the catalog.
    Example {
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every operation listed in the scenario.
    Run {
        #[command(flatten)]
        common: Common,
        /// Run a bundled scenario instead of a file.
        #[arg(long, conflicts_with = "scenario")]
        example: Option<String>,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    scenario: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<OutFormat>,
    /// JSON file with a full tolerance profile.
    #[arg(long)]
    tol_profile: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Table,
}

fn read(path: &PathBuf) -> Result<String, ScenarioError> {
    std::fs::read_to_string(path).map_err(|e| ScenarioError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn write(out: Option<&PathBuf>, text: &str) -> Result<(), ScenarioError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| ScenarioError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(common: &Common, example: Option<&str>) -> Result<Scenario, ScenarioError> {
    let mut scenario = match (example, &common.scenario) {
        (Some(name), _) => generate_example(name)?,
        (None, Some(path)) => parse_scenario(&read(path)?)?,
        (None, None) => return Err(ScenarioError::Validation("--scenario is required".into())),
    };
    if let Some(path) = &common.tol_profile {
        let tol: ToleranceProfile =
            serde_json::from_str(&read(path)?).map_err(|e| ScenarioError::Parse(e.to_string()))?;
        scenario.parameters.tolerances = Some(tol);
    }
    if let Some(seed) = common.seed {
        scenario.seed = seed;
    }
    match common.format {
        Some(OutFormat::Json) => scenario.format = Format::Json,
        Some(OutFormat::Table) => scenario.format = Format::Table,
        None => {}
    }
    Ok(scenario)
}

fn execute(common: &Common, example: Option<&str>, ops: Option<Vec<Operation>>) -> Result<(), ScenarioError> {
    let scenario = load(common, example)?;
    let report = run(&scenario, ops.as_deref())?;
    let text = match scenario.format {
        Format::Json => report.to_canonical_json(),
        Format::Table => report.to_table(),
    };
    write(common.out.as_ref(), &text)
}

fn single(common: &Common, op: Operation) -> Result<(), ScenarioError> {
    execute(common, None, Some(vec![op]))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Extend(c) => single(c, Operation::Extend),
        Command::Characters(c) => single(c, Operation::Characters),
        Command::Discriminant(c) => single(c, Operation::Discriminant),
        Command::Tractable(c) => single(c, Operation::Tractable),
        Command::Quotient(c) => single(c, Operation::Quotient),
        Command::Silov(c) => single(c, Operation::Silov),
        Command::Compare(c) => single(c, Operation::Compare),
        Command::Tower(c) => single(c, Operation::Tower),
        Command::Cole(c) => load(c, None).and_then(|s| {
            let mut ops = vec![Operation::Cole];
            if !s.cole_stages.is_empty() {
                ops.push(Operation::ColeTower);
            }
            execute(c, None, Some(ops))
        }),
        Command::Example { name: None, .. } => {
            for (name, about) in CATALOG {
                println!("{name:<32}{about}");
            }
            Ok(())
        }
        Command::Example { name: Some(name), out } => {
            generate_example(name).and_then(|s| write(out.as_ref(), &scenario_to_json(&s)))
        }
        Command::Run { common, example } => execute(common, example.as_deref(), None),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
