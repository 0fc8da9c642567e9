//! so(V)-invariant bilinear forms on a Clifford module and their invariants.
//!
//! A form `β` with Gram matrix `B` has invariants `τ` (from `γᵀB = τBγ` for
//! every generator), `σ` (symmetry sign, `Bᵀ = σB`) and, when the module has a
//! chirality split `W = W⁺ ⊕ W⁻`, `ι` (`+1` if the halves are orthogonal,
//! `−1` if both are isotropic). Forms with `τσ = −1` define extended
//! translation algebras, with `ε = τ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::clifford::{commutant, normalize_row, CliffordModule, SpinLift};
use crate::error::{EtapError, Result};
use crate::linalg::{kernel_sparse, symmetric_signature, Matrix, SparseRow};
use crate::scalar::{Field, FieldKind, Rational};

fn sign_char(s: i8) -> char {
    if s > 0 {
        '+'
    } else {
        '-'
    }
}

/// `(τ, σ[, ι])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FormInvariants {
    pub tau: i8,
    pub sigma: i8,
    pub iota: Option<i8>,
}

impl FormInvariants {
    pub fn new(tau: i8, sigma: i8, iota: Option<i8>) -> Self {
        FormInvariants { tau, sigma, iota }
    }

    /// `ε`, defined when `τσ = −1`.
    pub fn epsilon(&self) -> Option<i8> {
        (self.tau * self.sigma == -1).then_some(self.tau)
    }

    /// Matches `other`, treating a missing `ι` in `self` as a wildcard.
    pub fn matches(&self, other: &FormInvariants) -> bool {
        self.tau == other.tau && self.sigma == other.sigma && (self.iota.is_none() || self.iota == other.iota)
    }
}

impl fmt::Display for FormInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}", sign_char(self.tau), sign_char(self.sigma))?;
        if let Some(i) = self.iota {
            write!(f, ",{}", sign_char(i))?;
        }
        f.write_str(")")
    }
}

impl FromStr for FormInvariants {
    type Err = EtapError;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || EtapError::Parse(format!("invalid form invariants `{s}`, expected T,S[,I] with signs + or -"));
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let signs: Vec<i8> = body
            .split(',')
            .map(|t| match t.trim() {
                "+" | "+1" => Ok(1),
                "-" | "-1" => Ok(-1),
                _ => Err(bad()),
            })
            .collect::<Result<_>>()?;
        match signs.as_slice() {
            [t, s] => Ok(FormInvariants::new(*t, *s, None)),
            [t, s, i] => Ok(FormInvariants::new(*t, *s, Some(*i))),
            _ => Err(bad()),
        }
    }
}

/// A form that passed every check, with its invariants.
#[derive(Clone, Debug)]
pub struct AdmissibleForm<F> {
    pub gram: Matrix<F>,
    pub invariants: FormInvariants,
}

impl<F: Field> AdmissibleForm<F> {
    pub fn tau(&self) -> i8 {
        self.invariants.tau
    }
    pub fn sigma(&self) -> i8 {
        self.invariants.sigma
    }
    pub fn iota(&self) -> Option<i8> {
        self.invariants.iota
    }
    pub fn epsilon(&self) -> Option<i8> {
        self.invariants.epsilon()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rejection {
    NotInvariant,
    NotSymmetricOrSkew,
    B3Fails,
    Degenerate,
    IotaFails,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rejection::NotInvariant => "not-invariant",
            Rejection::NotSymmetricOrSkew => "not-(anti)symmetric",
            Rejection::B3Fails => "B3-fails",
            Rejection::Degenerate => "degenerate",
            Rejection::IotaFails => "iota-fails",
        })
    }
}

/// Decomposition of the module under the spin action.
#[derive(Clone, Debug)]
pub enum SoSplit<F> {
    Irreducible,
    /// Eigenspaces of a chirality operator: the volume element, or `i` times it.
    Chiral { plus: Vec<Vec<F>>, minus: Vec<Vec<F>>, operator: Matrix<F> },
    /// Reducible, but without a chirality operator in the commutant.
    Isotypic,
}

impl<F> SoSplit<F> {
    pub fn is_chiral(&self) -> bool {
        matches!(self, SoSplit::Chiral { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            SoSplit::Irreducible => "irreducible",
            SoSplit::Chiral { .. } => "chiral",
            SoSplit::Isotypic => "isotypic",
        }
    }
}

/// The chirality operator of the module, when it exists and is not scalar.
fn chirality_operator<F: Field>(module: &CliffordModule<F>) -> Option<Matrix<F>> {
    let n = module.n();
    if n % 2 == 1 {
        return None;
    }
    let word: Vec<usize> = (0..n).collect();
    let mut w = module.element(&word).ok()?;
    let id = Matrix::identity(module.dim());
    let sq = w.mul(&w);
    if sq != id {
        let i = F::imaginary_unit()?;
        w = w.scale(&i);
    }
    if w == id || w == id.neg() {
        return None;
    }
    Some(w)
}

/// Splits `W` under the spin action of `so(V)`.
pub fn so_isotypic_split<F: Field>(module: &CliffordModule<F>, lift: &SpinLift<F>) -> SoSplit<F> {
    if let Some(w) = chirality_operator(module) {
        let id = Matrix::identity(module.dim());
        let plus = crate::linalg::kernel(&w.sub(&id));
        let minus = crate::linalg::kernel(&w.add(&id));
        return SoSplit::Chiral { plus, minus, operator: w };
    }
    if lift.is_empty() {
        return if module.dim() == 1 { SoSplit::Irreducible } else { SoSplit::Isotypic };
    }
    let comm = commutant(&lift.rho_s);
    let irreducible = match F::KIND {
        FieldKind::Complex => comm.len() == 1,
        FieldKind::Real => {
            // A real module is irreducible iff its commutant is a division
            // algebra, iff the trace form on the commutant has exactly one
            // positive direction.
            let k = comm.len();
            let gram = Matrix::from_fn(k, k, |a, b| {
                comm[a].mul(&comm[b]).trace().to_rational().expect("real entries")
            });
            let (pos, _, _) = symmetric_signature(&gram).expect("trace form is symmetric");
            pos == 1
        }
    };
    if irreducible {
        SoSplit::Irreducible
    } else {
        SoSplit::Isotypic
    }
}

/// Everything needed to enumerate and classify forms on one module.
#[derive(Clone, Debug)]
pub struct FormContext<F> {
    pub module: CliffordModule<F>,
    pub lift: SpinLift<F>,
    pub split: SoSplit<F>,
}

impl<F: Field> FormContext<F> {
    pub fn new(module: CliffordModule<F>) -> Self {
        let lift = module.spin_lift();
        let split = so_isotypic_split(&module, &lift);
        FormContext { module, lift, split }
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

/// Result of [`classify_form`].
#[derive(Clone, Debug)]
pub enum FormVerdict<F> {
    Admissible(AdmissibleForm<F>),
    Rejected(Rejection),
}

impl<F> FormVerdict<F> {
    pub fn admissible(self) -> Option<AdmissibleForm<F>> {
        match self {
            FormVerdict::Admissible(f) => Some(f),
            FormVerdict::Rejected(_) => None,
        }
    }
}

fn pairing<F: Field>(b: &Matrix<F>, u: &[F], w: &[F]) -> F {
    crate::linalg::dot(u, &b.mul_vec(w))
}

fn block_vanishes<F: Field>(b: &Matrix<F>, xs: &[Vec<F>], ys: &[Vec<F>]) -> bool {
    xs.iter().all(|u| ys.iter().all(|w| pairing(b, u, w).is_zero()))
}

/// Checks every admissibility property of `B` and computes its invariants.
pub fn classify_form<F: Field>(b: &Matrix<F>, ctx: &FormContext<F>) -> Result<FormVerdict<F>> {
    let d = ctx.dim();
    if b.rows() != d || b.cols() != d {
        return Err(EtapError::Dimension(format!("form is {}x{}, module has dimension {d}", b.rows(), b.cols())));
    }
    let bt = b.transpose();
    if !ctx.lift.rho_s.iter().all(|r| r.transpose().mul(b).add(&b.mul(r)).is_zero()) {
        return Ok(FormVerdict::Rejected(Rejection::NotInvariant));
    }
    if b.determinant().is_zero() {
        return Ok(FormVerdict::Rejected(Rejection::Degenerate));
    }
    let sigma = if bt == *b {
        1
    } else if bt == b.neg() {
        -1
    } else {
        return Ok(FormVerdict::Rejected(Rejection::NotSymmetricOrSkew));
    };
    let tau_of = |g: &Matrix<F>| {
        let l = g.transpose().mul(b);
        let r = b.mul(g);
        if l == r {
            Some(1)
        } else if l == r.neg() {
            Some(-1)
        } else {
            None
        }
    };
    let taus: Vec<Option<i8>> = ctx.module.gammas.iter().map(tau_of).collect();
    let tau = match taus.first() {
        Some(Some(t)) if taus.iter().all(|x| *x == Some(*t)) => *t,
        _ => return Ok(FormVerdict::Rejected(Rejection::B3Fails)),
    };
    let iota = match &ctx.split {
        SoSplit::Chiral { plus, minus, .. } => {
            if block_vanishes(b, plus, minus) && block_vanishes(b, minus, plus) {
                Some(1)
            } else if block_vanishes(b, plus, plus) && block_vanishes(b, minus, minus) {
                Some(-1)
            } else {
                return Ok(FormVerdict::Rejected(Rejection::IotaFails));
            }
        }
        _ => None,
    };
    Ok(FormVerdict::Admissible(AdmissibleForm {
        gram: b.clone(),
        invariants: FormInvariants::new(tau, sigma, iota),
    }))
}

/// Row builder for linear conditions on a `d×d` unknown matrix `B`.
struct FormSystem<F> {
    d: usize,
    rows: Vec<SparseRow<F>>,
}

impl<F: Field> FormSystem<F> {
    fn new(d: usize) -> Self {
        FormSystem { d, rows: Vec::new() }
    }

    fn push(&mut self, r: Vec<(usize, F)>) {
        let r = normalize_row(r);
        if !r.is_empty() {
            self.rows.push(r);
        }
    }

    /// `Xᵀ B + c·B Y = 0`.
    fn twisted(&mut self, x: &Matrix<F>, c: &F, y: &Matrix<F>) {
        let d = self.d;
        for i in 0..d {
            for j in 0..d {
                let mut r = Vec::new();
                for l in 0..d {
                    if !x[(l, i)].is_zero() {
                        r.push((l * d + j, x[(l, i)].clone()));
                    }
                    if !y[(l, j)].is_zero() {
                        r.push((i * d + l, c.clone() * y[(l, j)].clone()));
                    }
                }
                self.push(r);
            }
        }
    }

    fn symmetry(&mut self, sigma: i8) {
        let d = self.d;
        for i in 0..d {
            for j in i..d {
                if i == j {
                    if sigma < 0 {
                        self.push(vec![(i * d + i, F::one())]);
                    }
                } else {
                    self.push(vec![(i * d + j, F::one()), (j * d + i, F::from_i64(-sigma as i64))]);
                }
            }
        }
    }

    /// `uᵀ B w = 0` for all pairs.
    fn block_zero(&mut self, xs: &[Vec<F>], ys: &[Vec<F>]) {
        let d = self.d;
        for u in xs {
            for w in ys {
                let mut r = Vec::new();
                for i in 0..d {
                    if u[i].is_zero() {
                        continue;
                    }
                    for j in 0..d {
                        if !w[j].is_zero() {
                            r.push((i * d + j, u[i].clone() * w[j].clone()));
                        }
                    }
                }
                self.push(r);
            }
        }
    }

    fn solve(self) -> Vec<Matrix<F>> {
        let d = self.d;
        kernel_sparse(d * d, &self.rows)
            .into_iter()
            .map(|v| Matrix::from_fn(d, d, |i, j| v[i * d + j].clone()))
            .collect()
    }
}

/// Basis of all so(V)-invariant forms, each labeled with its invariants when
/// it is admissible on its own.
#[derive(Clone, Debug)]
pub struct FormSpace<F> {
    pub basis: Vec<Matrix<F>>,
    pub labels: Vec<std::result::Result<FormInvariants, Rejection>>,
}

pub fn invariant_form_space<F: Field>(ctx: &FormContext<F>) -> FormSpace<F> {
    let d = ctx.dim();
    let mut sys = FormSystem::new(d);
    let one = F::one();
    for r in &ctx.lift.rho_s {
        sys.twisted(r, &one, r);
    }
    if ctx.lift.is_empty() {
        // dim V = 1: so(V) = 0 and every form is invariant.
        return FormSpace {
            basis: (0..d * d).map(|k| Matrix::from_fn(d, d, |i, j| if i * d + j == k { F::one() } else { F::zero() })).collect(),
            labels: Vec::new(),
        }
        .labeled(ctx);
    }
    FormSpace { basis: sys.solve(), labels: Vec::new() }.labeled(ctx)
}

impl<F: Field> FormSpace<F> {
    fn labeled(mut self, ctx: &FormContext<F>) -> Self {
        self.labels = self
            .basis
            .iter()
            .map(|b| match classify_form(b, ctx).expect("dimensions agree") {
                FormVerdict::Admissible(f) => Ok(f.invariants),
                FormVerdict::Rejected(r) => Err(r),
            })
            .collect();
        self
    }
}

/// Forms with prescribed invariants: solutions of `γᵀB = τBγ`, `Bᵀ = σB`
/// and, when `ι` is given, the matching block conditions.
pub fn homogeneous_forms<F: Field>(ctx: &FormContext<F>, inv: FormInvariants) -> Vec<Matrix<F>> {
    let d = ctx.dim();
    let mut sys = FormSystem::new(d);
    let c = F::from_i64(-inv.tau as i64);
    for g in &ctx.module.gammas {
        sys.twisted(g, &c, g);
    }
    sys.symmetry(inv.sigma);
    if let (Some(iota), SoSplit::Chiral { plus, minus, .. }) = (inv.iota, &ctx.split) {
        if iota > 0 {
            sys.block_zero(plus, minus);
            sys.block_zero(minus, plus);
        } else {
            sys.block_zero(plus, plus);
            sys.block_zero(minus, minus);
        }
    }
    sys.solve()
}

/// One homogeneous piece of the form space.
#[derive(Clone, Debug)]
pub struct FormPiece<F> {
    pub invariants: FormInvariants,
    pub basis: Vec<Matrix<F>>,
    /// First nondegenerate element found by the grid search, if any.
    pub representative: Option<Matrix<F>>,
}

/// All nonzero homogeneous pieces, in the order `τ = +,−` then `σ = +,−`
/// then `ι = +,−` (`ι` only for chiral modules).
pub fn form_pieces<F: Field>(ctx: &FormContext<F>) -> Vec<FormPiece<F>> {
    let iotas: Vec<Option<i8>> = if ctx.split.is_chiral() { vec![Some(1), Some(-1)] } else { vec![None] };
    let mut out = Vec::new();
    for tau in [1i8, -1] {
        for sigma in [1i8, -1] {
            for &iota in &iotas {
                let inv = FormInvariants::new(tau, sigma, iota);
                let basis = homogeneous_forms(ctx, inv);
                if basis.is_empty() {
                    continue;
                }
                let representative = nondegenerate_combination(&basis).map(|c| combine(&basis, &c));
                out.push(FormPiece { invariants: inv, basis, representative });
            }
        }
    }
    out
}

/// The space of forms with `τσ = −1`: the `(+,−)` piece followed by the
/// `(−,+)` piece.
pub fn eta_family<F: Field>(ctx: &FormContext<F>) -> Vec<(FormInvariants, Matrix<F>)> {
    let mut out = Vec::new();
    for (tau, sigma) in [(1i8, -1i8), (-1, 1)] {
        let inv = FormInvariants::new(tau, sigma, None);
        for b in homogeneous_forms(ctx, inv) {
            out.push((inv, b));
        }
    }
    out
}

pub fn combine<F: Field>(basis: &[Matrix<F>], coeffs: &[i64]) -> Matrix<F> {
    let d = basis[0].rows();
    let mut m = Matrix::zeros(d, d);
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            m = m.add(&b.scale(&F::from_i64(c)));
        }
    }
    m
}

/// Searches integer coefficients in `{0,…,d}^k` for a nondegenerate
/// combination. `det(Σ cᵢBᵢ)` has degree `d`, so if it vanishes on the whole
/// grid it vanishes identically; `None` is therefore a proof that every
/// element of the span is degenerate.
pub fn nondegenerate_combination<F: Field>(basis: &[Matrix<F>]) -> Option<Vec<i64>> {
    let k = basis.len();
    if k == 0 {
        return None;
    }
    let d = basis[0].rows() as i64;
    // Enumerate by increasing total weight so that simple representatives
    // (single basis elements) are tried first.
    let mut coeffs = vec![0i64; k];
    for weight in 1..=(d * k as i64) {
        let mut found = None;
        grid_of_weight(&mut coeffs, 0, weight, d, &mut |c| {
            if combine(basis, c).determinant().is_zero() {
                false
            } else {
                found = Some(c.to_vec());
                true
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

fn grid_of_weight(c: &mut [i64], pos: usize, remaining: i64, max: i64, f: &mut impl FnMut(&[i64]) -> bool) -> bool {
    if pos == c.len() - 1 {
        if remaining > max {
            return false;
        }
        c[pos] = remaining;
        let stop = f(c);
        c[pos] = 0;
        return stop;
    }
    for v in (0..=remaining.min(max)).rev() {
        c[pos] = v;
        if grid_of_weight(c, pos + 1, remaining - v, max, f) {
            c[pos] = 0;
            return true;
        }
    }
    c[pos] = 0;
    false
}

/// Gram matrix of `b ⊗ aux` on `S ⊗ 𝕂^N` (index `s·N + c`).
pub fn build_tensor_form<F: Field>(b: &Matrix<F>, aux: &Matrix<F>) -> Result<Matrix<F>> {
    if !aux.is_square() || aux.determinant().is_zero() {
        return Err(EtapError::DegenerateAux);
    }
    let at = aux.transpose();
    if at != *aux && at != aux.neg() {
        return Err(EtapError::Usage("multiplicity form must be symmetric or skew".into()));
    }
    Ok(b.kron(aux))
}

/// Diagonal multiplicity form with `p` entries `+1` then `q` entries `−1`.
pub fn delta_form<F: Field>(p: usize, q: usize) -> Matrix<F> {
    let e: Vec<F> = (0..p + q).map(|k| F::from_i64(if k < p { 1 } else { -1 })).collect();
    Matrix::diagonal(&e)
}

/// Standard symplectic form on `𝕂^{2m}`, pairing `2k` with `2k+1`.
pub fn symplectic_form<F: Field>(n: usize) -> Result<Matrix<F>> {
    if n % 2 == 1 {
        return Err(EtapError::Usage(format!("symplectic multiplicity form needs even N, got {n}")));
    }
    let mut m = Matrix::zeros(n, n);
    for k in 0..n / 2 {
        m[(2 * k, 2 * k + 1)] = F::one();
        m[(2 * k + 1, 2 * k)] = -F::one();
    }
    Ok(m)
}

/// The rational signature of a real symmetric Gram matrix.
pub fn real_signature<F: Field>(m: &Matrix<F>) -> Option<(usize, usize, usize)> {
    let q: Vec<Vec<Rational>> =
        (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_rational()).collect::<Option<_>>()).collect::<Option<_>>()?;
    symmetric_signature(&Matrix::from_rows(q).ok()?).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{build_clifford_rep, Signature, Variant};
    use crate::scalar::Gaussian;

    fn real_ctx(p: usize, q: usize, n: usize) -> FormContext<Rational> {
        let rep = build_clifford_rep(Signature::real(p, q), Variant::First).unwrap();
        FormContext::new(rep.multiple(n))
    }

    fn complex_ctx(n: usize) -> FormContext<Gaussian> {
        let rep = build_clifford_rep(Signature::complex(n), Variant::First).unwrap();
        FormContext::new(rep.multiple(1))
    }

    fn has_piece<F: Field>(ctx: &FormContext<F>, want: &str) -> bool {
        let want: FormInvariants = want.parse().unwrap();
        form_pieces(ctx).iter().any(|p| want.matches(&p.invariants) && p.representative.is_some())
    }

    #[test]
    fn invariants_parse_and_print() {
        let i: FormInvariants = "-,+".parse().unwrap();
        assert_eq!(i, FormInvariants::new(-1, 1, None));
        assert_eq!(i.to_string(), "(-,+)");
        assert_eq!("+,-,+".parse::<FormInvariants>().unwrap().to_string(), "(+,-,+)");
        assert!("x,+".parse::<FormInvariants>().is_err());
        assert_eq!(i.epsilon(), Some(-1));
        assert_eq!(FormInvariants::new(-1, -1, None).epsilon(), None);
    }

    #[test]
    fn complex_examples() {
        assert!(has_piece(&complex_ctx(8), "-,+"));
        assert!(has_piece(&complex_ctx(3), "-,-"));
        assert!(has_piece(&complex_ctx(4), "+,-,+"));
    }

    #[test]
    fn real_examples() {
        let ctx = real_ctx(3, 1, 1);
        assert_eq!(eta_family(&ctx).len(), 4);
        let ctx = real_ctx(3, 0, 1);
        let fam = eta_family(&ctx);
        assert_eq!(fam.len(), 1);
        let f = classify_form(&fam[0].1, &ctx).unwrap().admissible().unwrap();
        assert_eq!(f.invariants.to_string(), "(-,+)");
    }

    #[test]
    fn classification_rules() {
        let ctx = real_ctx(3, 0, 1);
        let zero = Matrix::zeros(4, 4);
        assert!(matches!(classify_form(&zero, &ctx).unwrap(), FormVerdict::Rejected(Rejection::Degenerate)));
        assert!(classify_form(&Matrix::zeros(3, 3), &ctx).is_err());
        let b = eta_family(&ctx)[0].1.clone();
        let scaled = b.scale(&Rational::new(-7, 3));
        let a = classify_form(&b, &ctx).unwrap().admissible().unwrap();
        let c = classify_form(&scaled, &ctx).unwrap().admissible().unwrap();
        assert_eq!(a.invariants, c.invariants);
    }

    #[test]
    fn splits() {
        let c8 = complex_ctx(8);
        match &c8.split {
            SoSplit::Chiral { plus, minus, .. } => assert_eq!((plus.len(), minus.len()), (8, 8)),
            other => panic!("expected chiral split, got {}", other.label()),
        }
        assert!(matches!(complex_ctx(7).split, SoSplit::Irreducible));
        assert!(matches!(real_ctx(3, 0, 1).split, SoSplit::Irreducible));
        assert_eq!(commutant(&real_ctx(3, 0, 1).lift.rho_s).len(), 4);
    }

    #[test]
    fn tensor_forms() {
        let ctx = real_ctx(3, 0, 1);
        let b = eta_family(&ctx)[0].1.clone();
        assert_eq!(build_tensor_form(&b, &Matrix::identity(1)).unwrap(), b);
        let ctx2 = real_ctx(3, 0, 2);
        let beta = build_tensor_form(&b, &delta_form(1, 1)).unwrap();
        let f = classify_form(&beta, &ctx2).unwrap().admissible().unwrap();
        assert_eq!(f.sigma(), 1);
        assert_eq!(f.epsilon(), Some(-1));
        assert!(build_tensor_form(&b, &Matrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn admissible_forms_have_tau_equal_epsilon() {
        for (p, q) in [(3, 0), (2, 1), (2, 2), (3, 1), (4, 0), (1, 3)] {
            let ctx = real_ctx(p, q, 1);
            let space = invariant_form_space(&ctx);
            // Closed under transpose.
            for b in &space.basis {
                let t = b.transpose();
                let mut all = space.basis.clone();
                all.push(t);
                assert_eq!(crate::linalg::span_rank(&all.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>()), space.basis.len());
            }
            for (inv, b) in eta_family(&ctx) {
                if let Some(f) = classify_form(&b, &ctx).unwrap().admissible() {
                    assert_eq!(f.epsilon(), Some(f.tau()));
                    assert_eq!(f.invariants.tau, inv.tau);
                    let sym = if b.transpose() == b { 1 } else { -1 };
                    assert_eq!(f.sigma() * sym, 1);
                }
            }
        }
    }

    #[test]
    fn split_subspaces_are_invariant() {
        let ctx = complex_ctx(6);
        if let SoSplit::Chiral { plus, minus, .. } = &ctx.split {
            for half in [plus, minus] {
                let mut all = half.clone();
                for r in &ctx.lift.rho_s {
                    for v in half {
                        all.push(r.mul_vec(v));
                    }
                }
                assert_eq!(crate::linalg::span_rank(&all), half.len());
            }
        } else {
            panic!("n=6 splits");
        }
    }
}
