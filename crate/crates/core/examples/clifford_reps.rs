//! Builds irreducible Clifford modules and checks `vu + uv = −2(v,u)` directly.

use etap::clifford::{build_clifford_rep, volume_square, Signature, Variant};
use etap::{Field, Gaussian, Rational, Result};

fn check<F: Field>(sig: Signature, variant: Variant) -> Result<()> {
    let rep = build_clifford_rep::<F>(sig, variant)?;
    let eta = sig.eta();
    for (a, ga) in rep.gammas.iter().enumerate() {
        for (b, gb) in rep.gammas.iter().enumerate() {
            let anti = ga.mul(gb).add(&gb.mul(ga));
            let want = if a == b { -2 * eta[a] } else { 0 };
            assert!(anti.sub(&etap::linalg::Matrix::identity(rep.dim_s()).scale(&F::from_i64(want))).is_zero());
        }
    }
    println!(
        "{:<14} dim S = {:>2}  vol^2 = {:>2}  variant {:?}",
        sig.to_string(),
        rep.dim_s(),
        volume_square(&sig),
        rep.variant
    );
    Ok(())
}

fn main() -> Result<()> {
    for (p, q) in [(1, 0), (3, 0), (2, 1), (3, 1), (7, 0), (3, 4), (4, 4)] {
        check::<Rational>(Signature::real(p, q), Variant::First)?;
    }
    for n in [4, 7, 8] {
        check::<Gaussian>(Signature::complex(n), Variant::First)?;
    }
    check::<Gaussian>(Signature::complex(7), Variant::Second)?;
    Ok(())
}
