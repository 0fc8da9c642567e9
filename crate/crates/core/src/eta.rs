//! Extended translation algebras `m = V ⊕ W` with `([s,t], v) = β(v·s, t)`.

use crate::clifford::{CliffordModule, CliffordRep, SpinLift};
use crate::error::{EtaViolation, EtapError, Result};
use crate::linalg::{kernel, span_rank, Matrix};
use crate::scalar::{Field, FieldKind, Gaussian, Rational};
use crate::spinforms::AdmissibleForm;

/// `m₋₂ = V` with an orthonormal-up-to-sign basis `e_k`, `m₋₁ = W` with the
/// module basis `s_a`, and `[s_a, s_b] = Σ_k Γᵏ_{ab} e_k`.
#[derive(Clone, Debug)]
pub struct ExtendedTranslationAlgebra<F> {
    pub module: CliffordModule<F>,
    pub form: AdmissibleForm<F>,
    pub epsilon: i8,
    pub eta: Vec<i64>,
    /// `Γᵏ = η_kk·γ_kᵀB`, one `dim W × dim W` matrix per basis vector of `V`.
    pub gamma: Vec<Matrix<F>>,
    pub lift: SpinLift<F>,
    /// Base field of the algebra; `Complex` also for complexified real inputs.
    pub field: FieldKind,
}

/// Checks the defining properties and builds the bracket tensor.
pub fn build_eta<F: Field>(module: CliffordModule<F>, form: AdmissibleForm<F>) -> Result<ExtendedTranslationAlgebra<F>> {
    let epsilon = form
        .epsilon()
        .ok_or_else(|| EtapError::Usage(format!("form with invariants {} has tau*sigma = +1", form.invariants)))?;
    let d = module.dim();
    if form.gram.rows() != d || form.gram.cols() != d {
        return Err(EtapError::Dimension(format!("form is {}x{}, module has dimension {d}", form.gram.rows(), form.gram.cols())));
    }
    let eta = module.eta();
    let gamma: Vec<Matrix<F>> = module
        .gammas
        .iter()
        .zip(&eta)
        .map(|(g, &e)| g.transpose().mul(&form.gram).scale(&F::from_i64(e)))
        .collect();
    let lift = module.spin_lift();
    let out = ExtendedTranslationAlgebra { module, form, epsilon, eta, gamma, lift, field: F::KIND };
    out.verify()?;
    Ok(out)
}

impl<F: Field> ExtendedTranslationAlgebra<F> {
    pub fn dim_v(&self) -> usize {
        self.gamma.len()
    }

    pub fn dim_w(&self) -> usize {
        self.module.dim()
    }

    /// Coordinates of `[s_a, s_b]` in `V`.
    pub fn bracket(&self, a: usize, b: usize) -> Vec<F> {
        self.gamma.iter().map(|g| g[(a, b)].clone()).collect()
    }

    pub fn verify(&self) -> Result<()> {
        let fail = |v| Err(EtapError::Eta(v));
        if !self.gamma.iter().all(|g| g.transpose() == g.neg()) {
            return fail(EtaViolation::Antisymmetry);
        }
        for (rv, rs) in self.lift.rho_v.iter().zip(&self.lift.rho_s) {
            for j in 0..self.dim_v() {
                let mut lhs = Matrix::zeros(self.dim_w(), self.dim_w());
                for k in 0..self.dim_v() {
                    if !rv[(j, k)].is_zero() {
                        lhs = lhs.add(&self.gamma[k].scale(&rv[(j, k)]));
                    }
                }
                let rhs = rs.transpose().mul(&self.gamma[j]).add(&self.gamma[j].mul(rs));
                if lhs != rhs {
                    return fail(EtaViolation::Equivariance);
                }
            }
        }
        let d = self.dim_w();
        let n = self.dim_v();
        let stacked = Matrix::from_fn(n * d, d, |r, i| self.gamma[r / d][(i, r % d)].clone());
        if !kernel(&stacked).is_empty() {
            return fail(EtaViolation::Nondegenerate);
        }
        let flat: Vec<Vec<F>> = self.gamma.iter().map(|g| g.entries().to_vec()).collect();
        if span_rank(&flat) != n {
            return fail(EtaViolation::Fundamental);
        }
        Ok(())
    }

    /// The same algebra with `β` replaced by `c·β`.
    pub fn rescaled(&self, c: &F) -> Result<Self> {
        let form = AdmissibleForm { gram: self.form.gram.scale(c), invariants: self.form.invariants };
        let mut out = build_eta(self.module.clone(), form)?;
        out.field = self.field;
        Ok(out)
    }
}

fn lift_matrix(m: &Matrix<Rational>) -> Matrix<Gaussian> {
    m.map(|x| Gaussian::from_rational(x.clone()))
}

/// Scalar extension to ℚ(i). No decomposition of `W ⊗ ℂ` is attempted.
pub fn complexify(eta: &ExtendedTranslationAlgebra<Rational>) -> ExtendedTranslationAlgebra<Gaussian> {
    let base = CliffordRep {
        sig: eta.module.base.sig,
        variant: eta.module.base.variant,
        gammas: eta.module.base.gammas.iter().map(lift_matrix).collect(),
    };
    let module = CliffordModule {
        sig: eta.module.sig,
        copies: eta.module.copies,
        base,
        gammas: eta.module.gammas.iter().map(lift_matrix).collect(),
    };
    ExtendedTranslationAlgebra {
        module,
        form: AdmissibleForm { gram: lift_matrix(&eta.form.gram), invariants: eta.form.invariants },
        epsilon: eta.epsilon,
        eta: eta.eta.clone(),
        gamma: eta.gamma.iter().map(lift_matrix).collect(),
        lift: SpinLift {
            pairs: eta.lift.pairs.clone(),
            rho_v: eta.lift.rho_v.iter().map(lift_matrix).collect(),
            rho_s: eta.lift.rho_s.iter().map(lift_matrix).collect(),
        },
        field: FieldKind::Complex,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{build_clifford_rep, Signature, Variant};
    use crate::spinforms::{classify_form, eta_family, form_pieces, FormContext, FormInvariants};

    fn real_eta(p: usize, q: usize) -> ExtendedTranslationAlgebra<Rational> {
        let rep = build_clifford_rep(Signature::real(p, q), Variant::First).unwrap();
        let ctx = FormContext::new(rep.multiple(1));
        let b = eta_family(&ctx)[0].1.clone();
        let form = classify_form(&b, &ctx).unwrap().admissible().unwrap();
        build_eta(ctx.module.clone(), form).unwrap()
    }

    fn complex_eta(n: usize, inv: &str) -> ExtendedTranslationAlgebra<Gaussian> {
        let rep = build_clifford_rep(Signature::complex(n), Variant::First).unwrap();
        let ctx = FormContext::new(rep.multiple(1));
        let want: FormInvariants = inv.parse().unwrap();
        let piece = form_pieces(&ctx).into_iter().find(|p| want.matches(&p.invariants)).unwrap();
        let form = classify_form(&piece.representative.unwrap(), &ctx).unwrap().admissible().unwrap();
        build_eta(ctx.module.clone(), form).unwrap()
    }

    #[test]
    fn examples() {
        let e = real_eta(3, 0);
        assert_eq!((e.dim_v(), e.dim_w()), (3, 4));
        assert_eq!(e.form.invariants.to_string(), "(-,+)");
        let e = complex_eta(8, "-,+");
        assert_eq!((e.dim_v(), e.dim_w()), (8, 16));
        let e = complex_eta(4, "+,-,+");
        assert_eq!((e.dim_v(), e.dim_w()), (4, 4));
    }

    #[test]
    fn singular_form_is_rejected() {
        let e = real_eta(3, 0);
        let bad = AdmissibleForm { gram: Matrix::zeros(4, 4), invariants: e.form.invariants };
        assert!(matches!(build_eta(e.module.clone(), bad), Err(EtapError::Eta(EtaViolation::Nondegenerate))));
    }

    #[test]
    fn complexification_keeps_entries() {
        let e = real_eta(4, 4);
        let c = complexify(&e);
        assert_eq!((c.dim_v(), c.dim_w()), (8, 16));
        for (g, h) in e.gamma.iter().zip(&c.gamma) {
            assert_eq!(lift_matrix(g), *h);
        }
        c.verify().unwrap();
    }

    #[test]
    fn rescaling_scales_brackets() {
        let e = real_eta(2, 1);
        let c = Rational::new(-3, 2);
        let r = e.rescaled(&c).unwrap();
        for (g, h) in e.gamma.iter().zip(&r.gamma) {
            assert_eq!(g.scale(&c), *h);
        }
    }
}
