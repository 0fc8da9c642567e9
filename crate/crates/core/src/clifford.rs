//! Irreducible Clifford modules under the convention `vu + uv = −2(v,u)·1`,
//! so that a unit vector of positive norm acts with square `−Id`.
//!
//! Write `A(a,b)` for the real algebra with `a` generators squaring to `+1`
//! and `b` squaring to `−1`. A signature `(p,q)` gives `A(q,p)`. Modules are
//! built from a few explicit base cases with
//! `A(a+1,b+1) = A(a,b) ⊗ M₂(ℝ)` and the flip that trades four generators of
//! one square for four of the other (multiply each by their product).

use serde::{Deserialize, Serialize};

use crate::error::{EtapError, Result};
use crate::linalg::{kernel_sparse, Matrix, SparseRow};
use crate::scalar::{Field, FieldKind, Gaussian, Rational, Scalar};

/// Signature of `V`. For complex inputs `p = n` and `q = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
    pub field: FieldKind,
}

impl Signature {
    pub fn real(p: usize, q: usize) -> Self {
        Signature { p, q, field: FieldKind::Real }
    }

    pub fn complex(n: usize) -> Self {
        Signature { p: n, q: 0, field: FieldKind::Complex }
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// Diagonal of the Gram matrix of `V`: positives first.
    pub fn eta(&self) -> Vec<i64> {
        (0..self.n()).map(|k| if k < self.p { 1 } else { -1 }).collect()
    }

    pub fn label(&self) -> String {
        match self.field {
            FieldKind::Real => format!("({},{})", self.p, self.q),
            FieldKind::Complex => format!("n={}", self.n()),
        }
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.field {
            FieldKind::Real => write!(f, "real {}", self.label()),
            FieldKind::Complex => write!(f, "complex {}", self.label()),
        }
    }
}

/// Selects between the two inequivalent irreducible modules when they exist.
/// `First` is the module on which `γ₁⋯γₙ` acts by `+1` (or `+i`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    #[default]
    First,
    Second,
}

#[derive(Clone, Debug)]
pub struct CliffordRep<F> {
    pub sig: Signature,
    /// `None` when the irreducible module is unique.
    pub variant: Option<Variant>,
    pub gammas: Vec<Matrix<F>>,
}

type Q = Matrix<Rational>;

fn q_rows(rows: &[&[i64]]) -> Q {
    Q::from_i64_rows(rows)
}

fn pauli_x() -> Q {
    q_rows(&[&[0, 1], &[1, 0]])
}

fn pauli_z() -> Q {
    q_rows(&[&[1, 0], &[0, -1]])
}

fn rot_j() -> Q {
    q_rows(&[&[0, -1], &[1, 0]])
}

fn quaternion_units() -> [Q; 3] {
    let li = q_rows(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    let lj = q_rows(&[&[0, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, -1, 0, 0]]);
    let lk = li.mul(&lj);
    [li, lj, lk]
}

/// Generators of an irreducible module of `A(a,b)`: `(plus, minus)`.
fn real_generators(a: usize, b: usize) -> (Vec<Q>, Vec<Q>) {
    if a >= 1 && b >= 1 {
        let (plus, minus) = real_generators(a - 1, b - 1);
        let (x, z, j) = (pauli_x(), pauli_z(), rot_j());
        let dim = plus.first().or(minus.first()).map_or(1, Matrix::rows);
        let id = Q::identity(dim);
        let mut p: Vec<Q> = plus.iter().map(|g| g.kron(&z)).collect();
        p.push(id.kron(&x));
        let mut m: Vec<Q> = minus.iter().map(|g| g.kron(&z)).collect();
        m.push(id.kron(&j));
        return (p, m);
    }
    match (a, b) {
        (0, 0) => (vec![], vec![]),
        (1, 0) => (vec![Q::identity(1)], vec![]),
        (2, 0) => (vec![pauli_x(), pauli_z()], vec![]),
        (3, 0) => {
            let id = Q::identity(2);
            (vec![pauli_x().kron(&id), pauli_z().kron(&id), rot_j().kron(&rot_j())], vec![])
        }
        (0, 1) => (vec![], vec![rot_j()]),
        (0, 2) => {
            let [i, j, _] = quaternion_units();
            (vec![], vec![i, j])
        }
        (0, 3) => (vec![], quaternion_units().to_vec()),
        (0, 4) => {
            let z = pauli_z();
            let mut m: Vec<Q> = quaternion_units().iter().map(|u| u.kron(&z)).collect();
            m.push(Q::identity(4).kron(&rot_j()));
            (vec![], m)
        }
        (a, 0) => {
            let (mut plus, mut minus) = real_generators(a - 4, 4);
            let flipped = flip(minus.split_off(minus.len() - 4));
            plus.extend(flipped);
            (plus, minus)
        }
        (0, b) => {
            let (mut plus, mut minus) = real_generators(4, b - 4);
            let flipped = flip(plus.split_off(plus.len() - 4));
            minus.extend(flipped);
            (plus, minus)
        }
        _ => unreachable!(),
    }
}

/// Four mutually anticommuting generators of equal square `s` become four of
/// square `−s`; every other generator still anticommutes with them.
fn flip(four: Vec<Q>) -> Vec<Q> {
    let w = four[0].mul(&four[1]).mul(&four[2]).mul(&four[3]);
    four.iter().map(|f| f.mul(&w)).collect()
}

fn to_field<F: Field>(m: &Q) -> Matrix<F> {
    m.map(|x| F::from_rational(x.clone()))
}

/// Builds an irreducible `Cl(V)`-module. The variant is ignored when the
/// irreducible module is unique.
pub fn build_clifford_rep<F: Field>(sig: Signature, variant: Variant) -> Result<CliffordRep<F>> {
    let n = sig.n();
    if n == 0 {
        return Err(EtapError::Usage("dim V must be at least 1".into()));
    }
    let mut gammas: Vec<Matrix<F>> = match sig.field {
        FieldKind::Real => {
            let (plus, minus) = real_generators(sig.q, sig.p);
            minus.iter().chain(plus.iter()).map(to_field).collect()
        }
        FieldKind::Complex => {
            let i = F::imaginary_unit()
                .ok_or_else(|| EtapError::Usage("complex signature needs Gaussian scalars".into()))?;
            let (plus, minus) = real_generators(n.div_ceil(2), n / 2);
            let mut g: Vec<Matrix<F>> = plus.iter().map(|m| to_field::<F>(m).scale(&i)).collect();
            g.extend(minus.iter().map(to_field));
            g
        }
    };
    let has_variants = n % 2 == 1 && (sig.field == FieldKind::Complex || volume_square(&sig) == 1);
    if !has_variants {
        return Ok(CliffordRep { sig, variant: None, gammas });
    }
    let vol = gammas.iter().skip(1).fold(gammas[0].clone(), |acc, g| acc.mul(g));
    let c = vol[(0, 0)].clone();
    let first = c == F::one() || F::imaginary_unit().is_some_and(|i| c == i);
    if first != (variant == Variant::First) {
        gammas = gammas.iter().map(Matrix::neg).collect();
    }
    Ok(CliffordRep { sig, variant: Some(variant), gammas })
}

/// Sign of `(γ₁⋯γₙ)²`, from reordering and `γₖ² = −ηₖₖ`.
pub fn volume_square(sig: &Signature) -> i64 {
    let n = sig.n();
    let reorder = if (n * (n.saturating_sub(1)) / 2) % 2 == 0 { 1 } else { -1 };
    let squares: i64 = sig.eta().iter().map(|e| -e).product();
    reorder * squares
}

impl<F: Field> CliffordRep<F> {
    pub fn dim_s(&self) -> usize {
        self.gammas[0].rows()
    }

    pub fn n(&self) -> usize {
        self.gammas.len()
    }

    /// Product of generators in the given order; the empty word is `Id`.
    pub fn clifford_element(&self, word: &[usize]) -> Result<Matrix<F>> {
        clifford_word(&self.gammas, word)
    }

    /// `N` copies of this module, `S ⊗ 𝕂^N`, with index `s·N + c`.
    pub fn multiple(&self, copies: usize) -> CliffordModule<F> {
        let id = Matrix::identity(copies);
        let gammas = self.gammas.iter().map(|g| g.kron(&id)).collect();
        CliffordModule { sig: self.sig, copies, base: self.clone(), gammas }
    }
}

pub fn clifford_word<F: Field>(gammas: &[Matrix<F>], word: &[usize]) -> Result<Matrix<F>> {
    let dim = gammas.first().map_or(1, Matrix::rows);
    let mut m = Matrix::identity(dim);
    for &k in word {
        let g = gammas.get(k).ok_or(EtapError::IndexOutOfRange { index: k, len: gammas.len() })?;
        m = m.mul(g);
    }
    Ok(m)
}

/// A Clifford module `W = S ⊗ 𝕂^N` with its generator action.
#[derive(Clone, Debug)]
pub struct CliffordModule<F> {
    pub sig: Signature,
    pub copies: usize,
    pub base: CliffordRep<F>,
    pub gammas: Vec<Matrix<F>>,
}

impl<F: Field> CliffordModule<F> {
    pub fn dim(&self) -> usize {
        self.gammas[0].rows()
    }

    pub fn n(&self) -> usize {
        self.gammas.len()
    }

    pub fn eta(&self) -> Vec<i64> {
        self.sig.eta()
    }

    pub fn element(&self, word: &[usize]) -> Result<Matrix<F>> {
        clifford_word(&self.gammas, word)
    }

    pub fn spin_lift(&self) -> SpinLift<F> {
        spin_lift(&self.gammas, &self.eta())
    }
}

/// Spin lift of the basis `A_ab` (a < b) of `so(V)`, with
/// `ρ_V(A_ab)e_c = η_ac e_b − η_bc e_a` and `ρ_S(A_ab) = ½γ_aγ_b`.
#[derive(Clone, Debug)]
pub struct SpinLift<F> {
    pub pairs: Vec<(usize, usize)>,
    pub rho_v: Vec<Matrix<F>>,
    pub rho_s: Vec<Matrix<F>>,
}

pub fn spin_lift<F: Field>(gammas: &[Matrix<F>], eta: &[i64]) -> SpinLift<F> {
    let n = gammas.len();
    let half = F::from_rational(Rational::new(1, 2));
    let mut out = SpinLift { pairs: vec![], rho_v: vec![], rho_s: vec![] };
    for a in 0..n {
        for b in a + 1..n {
            let mut rv = Matrix::zeros(n, n);
            rv[(b, a)] = F::from_i64(eta[a]);
            rv[(a, b)] = F::from_i64(-eta[b]);
            out.pairs.push((a, b));
            out.rho_v.push(rv);
            out.rho_s.push(gammas[a].mul(&gammas[b]).scale(&half));
        }
    }
    out
}

impl<F: Field> SpinLift<F> {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `[ρ_S(A), γ_c] = Σ_d ρ_V(A)_{dc} γ_d` for every generator and lift element.
    pub fn check_derivation(&self, gammas: &[Matrix<F>]) -> bool {
        self.rho_s.iter().zip(&self.rho_v).all(|(rs, rv)| {
            (0..gammas.len()).all(|c| {
                let lhs = rs.commutator(&gammas[c]);
                let mut rhs = Matrix::zeros(lhs.rows(), lhs.cols());
                for (d, g) in gammas.iter().enumerate() {
                    if !rv[(d, c)].is_zero() {
                        rhs = rhs.add(&g.scale(&rv[(d, c)]));
                    }
                }
                lhs == rhs
            })
        })
    }
}

/// Basis of all `X` with `X·A = B·X` for each pair `(A, B)`.
pub fn intertwiners<F: Field>(pairs: &[(&Matrix<F>, &Matrix<F>)]) -> Vec<Matrix<F>> {
    let Some((a0, b0)) = pairs.first() else { return vec![] };
    let (d_in, d_out) = (a0.rows(), b0.rows());
    let mut rows: Vec<SparseRow<F>> = Vec::new();
    for (a, b) in pairs {
        // (X A)_{ij} − (B X)_{ij} with X index i·d_in + l.
        for i in 0..d_out {
            for j in 0..d_in {
                let mut r: Vec<(usize, F)> = Vec::new();
                for l in 0..d_in {
                    if !a[(l, j)].is_zero() {
                        r.push((i * d_in + l, a[(l, j)].clone()));
                    }
                }
                for l in 0..d_out {
                    if !b[(i, l)].is_zero() {
                        r.push((l * d_in + j, -b[(i, l)].clone()));
                    }
                }
                let r = normalize_row(r);
                if !r.is_empty() {
                    rows.push(r);
                }
            }
        }
    }
    kernel_sparse(d_in * d_out, &rows)
        .into_iter()
        .map(|v| Matrix::from_fn(d_out, d_in, |i, l| v[i * d_in + l].clone()))
        .collect()
}

/// Commutant of a family of square matrices.
pub fn commutant<F: Field>(mats: &[Matrix<F>]) -> Vec<Matrix<F>> {
    if mats.is_empty() {
        return vec![];
    }
    let pairs: Vec<_> = mats.iter().map(|m| (m, m)).collect();
    intertwiners(&pairs)
}

/// Sorts by column and merges duplicate columns, dropping zeros.
pub fn normalize_row<F: Scalar>(mut r: Vec<(usize, F)>) -> SparseRow<F> {
    r.sort_by_key(|(j, _)| *j);
    let mut out: SparseRow<F> = Vec::with_capacity(r.len());
    for (j, v) in r {
        match out.last_mut() {
            Some((lj, lv)) if *lj == j => *lv += v,
            _ => out.push((j, v)),
        }
        if out.last().is_some_and(|(_, v)| v.is_zero()) {
            out.pop();
        }
    }
    out
}

/// Reinterprets a rational module over ℚ(i).
pub fn complexify_rep(rep: &CliffordRep<Rational>) -> CliffordRep<Gaussian> {
    CliffordRep {
        sig: rep.sig,
        variant: rep.variant,
        gammas: rep.gammas.iter().map(|g| g.map(|x| Gaussian::from_rational(x.clone()))).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Irreducible real dimension of `A(a,b)` from the classification of real
    /// Clifford algebras: type by `(a − b) mod 8`.
    fn expected_real_dim(a: usize, b: usize) -> usize {
        let n = (a + b) as u32;
        let (d, double) = match (a as i64 - b as i64).rem_euclid(8) {
            0 | 2 => (1, false),
            1 => (1, true),
            3 | 7 => (2, false),
            4 | 6 => (4, false),
            5 => (4, true),
            _ => unreachable!(),
        };
        let total: usize = if double { 1usize << (n - 1) } else { 1usize << n } * d;
        let r = (total as f64).sqrt().round() as usize;
        assert_eq!(r * r, total);
        r
    }

    fn check_relations<F: Field>(rep: &CliffordRep<F>) {
        let eta = rep.sig.eta();
        let id = Matrix::<F>::identity(rep.dim_s());
        for i in 0..rep.n() {
            for j in 0..rep.n() {
                let ac = rep.gammas[i].mul(&rep.gammas[j]).add(&rep.gammas[j].mul(&rep.gammas[i]));
                let expect = if i == j { id.scale(&F::from_i64(-2 * eta[i])) } else { Matrix::zeros(id.rows(), id.cols()) };
                assert_eq!(ac, expect, "{} ({i},{j})", rep.sig);
            }
        }
    }

    #[test]
    fn real_reps_satisfy_relations_and_dimension_table() {
        for n in 1..=9 {
            for p in 0..=n {
                let sig = Signature::real(p, n - p);
                let rep: CliffordRep<Rational> = build_clifford_rep(sig, Variant::First).unwrap();
                check_relations(&rep);
                assert_eq!(rep.dim_s(), expected_real_dim(n - p, p), "{sig}");
                for g in &rep.gammas {
                    assert!(g.entries().iter().all(|x| *x == Rational::zero() || *x == Rational::one() || *x == -Rational::one()));
                }
            }
        }
    }

    #[test]
    fn complex_reps_satisfy_relations() {
        for n in 1..=9 {
            let rep: CliffordRep<Gaussian> = build_clifford_rep(Signature::complex(n), Variant::First).unwrap();
            check_relations(&rep);
            assert_eq!(rep.dim_s(), 1 << (n / 2));
        }
    }

    #[test]
    fn module_dimension_examples() {
        let d = |p, q| build_clifford_rep::<Rational>(Signature::real(p, q), Variant::First).unwrap().dim_s();
        assert_eq!(d(3, 0), 4);
        assert_eq!(d(8, 0), 16);
        assert_eq!(d(3, 1), 8);
        assert_eq!(d(1, 0), 2);
        let c: CliffordRep<Gaussian> = build_clifford_rep(Signature::complex(7), Variant::First).unwrap();
        assert_eq!(c.dim_s(), 8);
        assert!(build_clifford_rep::<Rational>(Signature::real(0, 0), Variant::First).is_err());
    }

    #[test]
    fn commutant_is_a_division_algebra() {
        for n in 1..=6 {
            for p in 0..=n {
                let rep: CliffordRep<Rational> = build_clifford_rep(Signature::real(p, n - p), Variant::First).unwrap();
                let k = commutant(&rep.gammas).len();
                assert!([1, 2, 4].contains(&k), "({p},{}) commutant {k}", n - p);
            }
            let rep: CliffordRep<Gaussian> = build_clifford_rep(Signature::complex(n), Variant::First).unwrap();
            assert_eq!(commutant(&rep.gammas).len(), 1);
        }
    }

    #[test]
    fn variants_exist_exactly_when_volume_squares_to_one() {
        for n in 1..=9usize {
            for p in 0..=n {
                let sig = Signature::real(p, n - p);
                let a: CliffordRep<Rational> = build_clifford_rep(sig, Variant::First).unwrap();
                let expect = n % 2 == 1 && (p as i64 - (n - p) as i64).rem_euclid(4) == 3;
                assert_eq!(a.variant.is_some(), expect, "{sig}");
                if expect && n <= 5 {
                    let b: CliffordRep<Rational> = build_clifford_rep(sig, Variant::Second).unwrap();
                    let pairs: Vec<_> = a.gammas.iter().zip(&b.gammas).collect();
                    assert!(intertwiners(&pairs).is_empty(), "{sig}");
                }
            }
        }
        let a: CliffordRep<Gaussian> = build_clifford_rep(Signature::complex(7), Variant::First).unwrap();
        let b: CliffordRep<Gaussian> = build_clifford_rep(Signature::complex(7), Variant::Second).unwrap();
        let pairs: Vec<_> = a.gammas.iter().zip(&b.gammas).collect();
        assert!(intertwiners(&pairs).is_empty());
    }

    #[test]
    fn spin_lift_is_a_derivation_and_homomorphism() {
        for (p, q) in [(3, 0), (2, 1), (3, 1), (2, 2), (4, 1)] {
            let rep: CliffordRep<Rational> = build_clifford_rep(Signature::real(p, q), Variant::First).unwrap();
            let lift = rep.multiple(1).spin_lift();
            assert!(lift.check_derivation(&rep.gammas));
            let eta = rep.sig.eta();
            for a in 0..lift.len() {
                let rv = &lift.rho_v[a];
                // η-skewness of ρ_V.
                for i in 0..rep.n() {
                    for j in 0..rep.n() {
                        let s = rv[(j, i)].clone() * Rational::integer(eta[j]) + rv[(i, j)].clone() * Rational::integer(eta[i]);
                        assert!(s.is_zero());
                    }
                }
                for b in 0..lift.len() {
                    let bracket_v = rv.commutator(&lift.rho_v[b]);
                    let bracket_s = lift.rho_s[a].commutator(&lift.rho_s[b]);
                    // Expand bracket_v in the ρ_V basis and map through ρ_S.
                    let mut image = Matrix::zeros(rep.dim_s(), rep.dim_s());
                    for (c, &(x, y)) in lift.pairs.iter().enumerate() {
                        let coeff = bracket_v[(y, x)].clone() * Rational::integer(eta[x]);
                        if !coeff.is_zero() {
                            image = image.add(&lift.rho_s[c].scale(&coeff));
                        }
                    }
                    assert_eq!(bracket_s, image);
                }
            }
        }
    }

    #[test]
    fn so3_spin_commutant_is_quaternionic() {
        let rep: CliffordRep<Rational> = build_clifford_rep(Signature::real(3, 0), Variant::First).unwrap();
        let lift = rep.multiple(1).spin_lift();
        assert_eq!(commutant(&lift.rho_s).len(), 4);
    }

    #[test]
    fn clifford_words() {
        let rep: CliffordRep<Rational> = build_clifford_rep(Signature::real(2, 3), Variant::First).unwrap();
        assert_eq!(rep.clifford_element(&[]).unwrap(), Matrix::identity(rep.dim_s()));
        let sq = rep.clifford_element(&[0, 0]).unwrap();
        assert_eq!(sq, Matrix::identity(rep.dim_s()).neg());
        assert!(rep.clifford_element(&[7]).is_err());
        for n in 1..=8 {
            for p in 0..=n {
                let sig = Signature::real(p, n - p);
                let rep: CliffordRep<Rational> = build_clifford_rep(sig, Variant::First).unwrap();
                let word: Vec<usize> = (0..n).collect();
                let w = rep.clifford_element(&word).unwrap();
                // Moving the second copy through the first: n(n−1)/2 transpositions.
                let swaps = n * (n - 1) / 2;
                let mut sign = if swaps % 2 == 0 { 1 } else { -1 };
                for e in sig.eta() {
                    sign *= -e;
                }
                assert_eq!(w.mul(&w), Matrix::identity(rep.dim_s()).scale(&Rational::integer(sign)));
            }
        }
    }
}
