//! The degree-0 decomposition, the map g1 -> W and the automorphism swapping
//! g1 with g-1, on the (3,0) algebra.

use etap::cli::{build_case, CaseSpec};
use etap::clifford::Signature;
use etap::structure::{
    alpha_form, check_grading_element, check_h0_in_so_alpha, check_phi_equivariance, decompose_g0, phi_map,
    psi_automorphism,
};
use etap::{Rational, Result};

fn main() -> Result<()> {
    let case = build_case::<Rational>(&CaseSpec::new(Signature::real(3, 0)))?;
    let (g, eta) = (&case.algebra, &case.eta);
    let dec = decompose_g0(g, eta)?;
    println!("{:?}", dec.summary());
    println!("[E, X] = pX violations: {}", check_grading_element(g, &dec.grading));
    let alpha = alpha_form(eta, 0, 1, 2)?;
    println!("alpha signature {:?}", etap::spinforms::real_signature(&alpha));
    println!("h0 outside so(W, alpha): {}", check_h0_in_so_alpha(g, &dec, &alpha));
    let phi = phi_map(g, eta)?;
    println!("phi: g1 ({}) -> W injective, equivariance violations {}", phi.images.len(), check_phi_equivariance(g, eta, &dec, &phi));
    let psi = psi_automorphism(g, eta, 0)?;
    println!("psi bracket violations {}, phi relation violations {}", psi.check_automorphism(g), psi.check_phi_relation(g, eta, &phi));
    Ok(())
}
