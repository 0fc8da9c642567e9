//! Prolongs the complex extended translation algebra with dim V = 7 and
//! identifies the result as F4.

use etap::catalog::Catalog;
use etap::clifford::{build_clifford_rep, Signature, Variant};
use etap::eta::build_eta;
use etap::prolong::full_prolongation;
use etap::spinforms::{form_pieces, FormContext};
use etap::structure::{identify, killing_and_radical, Fingerprint};
use etap::{EtapError, Gaussian, Result};

fn main() -> Result<()> {
    let rep = build_clifford_rep::<Gaussian>(Signature::complex(7), Variant::First)?;
    let ctx = FormContext::new(rep.multiple(1));
    let gram = form_pieces(&ctx)
        .into_iter()
        .filter(|p| p.invariants.epsilon().is_some())
        .find_map(|p| p.representative)
        .ok_or_else(|| EtapError::FormSelection("no admissible form".into()))?;
    let form = etap::spinforms::classify_form(&gram, &ctx)?
        .admissible()
        .ok_or_else(|| EtapError::FormSelection("rejected".into()))?;
    let eta = build_eta(ctx.module, form)?;
    let (g, report) = full_prolongation(&eta, 6)?;
    println!("dims by degree {:?}", report.dims);
    let k = killing_and_radical(&g)?;
    println!("Killing rank {} of {}, centroid {:?}", k.rank, g.dim(), k.centroid_dim);
    let catalog = Catalog::load()?;
    let fp = Fingerprint::of(&g, Some(&k));
    println!("identified as {}", identify(&catalog, &fp).map_or("?", |r| r.label.as_str()));
    Ok(())
}
