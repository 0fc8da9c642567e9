//! Writes an algebra dump, reads it back and analyzes it without the
//! extended translation algebra.

use etap::catalog::Catalog;
use etap::cli::{run_case, AlgebraDump, AnyAlgebra, CaseSpec};
use etap::clifford::Signature;
use etap::Result;

fn main() -> Result<()> {
    let catalog = Catalog::load()?;
    let o = run_case(&CaseSpec::new(Signature::real(2, 2)), &catalog)?;
    let path = std::env::temp_dir().join("etap-sl5r.json");
    std::fs::write(&path, serde_json::to_string_pretty(&o.dump)?)?;
    let back: AlgebraDump = serde_json::from_str(&std::fs::read_to_string(&path)?)?;
    let a = AnyAlgebra::from_dump(&back)?.analyze(&catalog)?;
    println!("{} brackets written to {}", back.brackets.len(), path.display());
    println!("reloaded: {} dims {:?} Killing {:?}", a.identification, a.fingerprint.dims, a.fingerprint.killing_signature);
    assert_eq!(a, o.report.analysis);
    Ok(())
}
