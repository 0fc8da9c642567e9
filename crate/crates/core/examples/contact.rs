//! Low-dimensional cases whose prolongation is an infinite contact algebra.

use etap::catalog::{contact_dim, Catalog};
use etap::cli::{run_case, CaseSpec};
use etap::clifford::Signature;
use etap::Result;

fn main() -> Result<()> {
    let catalog = Catalog::load()?;
    let o = run_case(&CaseSpec::new(Signature::real(1, 0)).max_degree(5), &catalog)?;
    for d in &o.report.analysis.degrees {
        println!("g{:<3} computed {:>3}  weighted monomials {:>3}", d.deg, d.dim, contact_dim(1, d.deg));
    }
    println!("truncated: {}", o.report.analysis.truncated);
    Ok(())
}
