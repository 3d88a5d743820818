//! A parameter sweep comparing every criterion with the oracles, written
//! as CSV to stdout.

use yangtensor::cli::{run_sweep, write_sweep, Check, SweepFormat, SweepJob};
use yangtensor::criteria::ModuleSpec;
use yangtensor::exactalg::Rat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let job = SweepJob {
        specs: vec![ModuleSpec::rectangle(2, 1, 2, Rat::zero()), ModuleSpec::rectangle(1, 1, 2, Rat::zero())],
        vary: vec![0],
        window: Some((-4, 4)),
        checks: Check::ALL.to_vec(),
        cap: None,
    };
    let table = run_sweep(&job, None, None)?;
    write_sweep(&table, SweepFormat::Csv, std::io::stdout().lock())?;
    eprintln!("{} rows, {} disagreements", table.rows.len(), table.disagreements);
    Ok(())
}
