//! Runs every real N = 1 catalog entry and prints the Killing signature,
//! which separates real forms of the same complex algebra.

use etap::catalog::Catalog;
use etap::cli::{run_case, CaseSpec};
use etap::{FieldKind, Result};

fn main() -> Result<()> {
    let catalog = Catalog::load()?;
    for r in catalog.records().iter().filter(|r| r.field() == FieldKind::Real && r.input.copies == 1) {
        let o = run_case(&CaseSpec::from_input(&r.input), &catalog)?;
        let a = &o.report.analysis;
        println!(
            "{:<28} -> {:<8} total {:>2} Killing {:?}",
            r.input.to_string(),
            a.identification,
            a.total,
            a.fingerprint.killing_signature
        );
    }
    Ok(())
}
