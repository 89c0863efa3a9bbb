// Run a bundled scenario and print its report, as the CLI would.
//
// `cargo run --example scenarios -- corollary-2-11`

use algext::scenario::{generate_example, run, CATALOG};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "example-4-4".to_string());
    let scenario = match generate_example(&name) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}; available:");
            for (name, about) in CATALOG {
                eprintln!("  {name:<32}{about}");
            }
            std::process::exit(2);
        }
    };
    match run(&scenario, None) {
        Ok(report) => print!("{}", report.to_table()),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}
