//! Lists the Spin-invariant bilinear forms on a module and their invariants.

use etap::clifford::{build_clifford_rep, Signature, Variant};
use etap::spinforms::{eta_family, form_pieces, FormContext};
use etap::{Rational, Result};

fn main() -> Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "3,1".into());
    let (p, q) = arg
        .split_once(',')
        .and_then(|(p, q)| Some((p.parse().ok()?, q.parse().ok()?)))
        .expect("usage: invariant_forms P,Q");
    let rep = build_clifford_rep::<Rational>(Signature::real(p, q), Variant::First)?;
    let ctx = FormContext::new(rep.multiple(1));
    println!("{} dim S = {} ({})", rep.sig, ctx.dim(), ctx.split.label());
    for piece in form_pieces(&ctx) {
        println!(
            "  {} dim {} epsilon {:?} nondegenerate {}",
            piece.invariants,
            piece.basis.len(),
            piece.invariants.epsilon(),
            piece.representative.is_some()
        );
    }
    println!("tau*sigma = -1 family has {} elements", eta_family(&ctx).len());
    Ok(())
}
