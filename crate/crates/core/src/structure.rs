//! Structural analysis of a computed prolongation.

use serde::{Deserialize, Serialize};

use crate::catalog::{Catalog, ClassificationRecord};
use crate::clifford::normalize_row;
use crate::error::{EtapError, Result};
use crate::eta::ExtendedTranslationAlgebra;
use crate::linalg::{kernel, kernel_sparse, span_rank, BasisSolver, Echelon, Matrix, SparseRow};
use crate::prolong::GradedLieAlgebra;
use crate::scalar::{Field, FieldKind};
use crate::spinforms::real_signature;

fn consistency<T>(msg: impl Into<String>) -> Result<T> {
    Err(EtapError::Consistency(msg.into()))
}

/// Coordinates of `[x, b_a]` for `a` ranging over `g_{-1}` then `g_{-2}`,
/// restricted to the target degrees of an element of degree `p`.
pub fn action_vector<F: Field>(g: &GradedLieAlgebra<F>, p: i32, x: &[F]) -> Vec<F> {
    let mut out = Vec::new();
    for (src, tgt) in [(-1, p - 1), (-2, p - 2)] {
        let t = g.range(tgt);
        for a in g.range(src) {
            let v = g.bracket_with_basis(a, x);
            // [x, b_a] = −[b_a, x]
            out.extend(t.clone().map(|k| -v[k].clone()));
        }
    }
    out
}

fn embed<F: Field>(g: &GradedLieAlgebra<F>, deg: i32, local: &[F]) -> Vec<F> {
    let mut v = vec![F::zero(); g.dim()];
    for (k, c) in g.range(deg).zip(local) {
        v[k] = c.clone();
    }
    v
}

fn restrict<F: Field>(g: &GradedLieAlgebra<F>, deg: i32, v: &[F]) -> Vec<F> {
    g.range(deg).map(|k| v[k].clone()).collect()
}

fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Solver expressing degree-`p` elements through their action on `m`.
fn degree_solver<F: Field>(g: &GradedLieAlgebra<F>, p: i32) -> Result<BasisSolver<F>> {
    let actions: Vec<Vec<F>> = g.range(p).map(|i| action_vector(g, p, &g.unit(i))).collect();
    let len = actions.first().map_or(0, Vec::len);
    BasisSolver::new(len, actions)
}

/// Matrix of `[x, ·]` on `W`, for `x` of degree 0.
fn w_block<F: Field>(g: &GradedLieAlgebra<F>, x: &[F]) -> Matrix<F> {
    let w = g.range(-1);
    let mut m = Matrix::zeros(w.len(), w.len());
    for (a, col) in w.clone().enumerate() {
        let v = g.bracket(x, &g.unit(col));
        for (i, k) in w.clone().enumerate() {
            m[(i, a)] = v[k].clone();
        }
    }
    m
}

/// `g₀ = so(V) ⊕ 𝕂E ⊕ h₀`, with all vectors in global coordinates.
#[derive(Clone, Debug)]
pub struct DegreeZeroDecomposition<F> {
    pub so: Vec<Vec<F>>,
    pub grading: Vec<F>,
    pub h0: Vec<Vec<F>>,
    pub h0a: Vec<Vec<F>>,
    pub h0s: Vec<Vec<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G0Summary {
    pub dim_g0: usize,
    pub dim_so: usize,
    pub dim_h0: usize,
    pub dim_h0a: usize,
    pub dim_h0s: usize,
}

impl<F: Field> DegreeZeroDecomposition<F> {
    pub fn summary(&self) -> G0Summary {
        G0Summary {
            dim_g0: self.so.len() + 1 + self.h0.len(),
            dim_so: self.so.len(),
            dim_h0: self.h0.len(),
            dim_h0a: self.h0a.len(),
            dim_h0s: self.h0s.len(),
        }
    }
}

/// `h₀ = {D ∈ g₀ : [D, g₋₂] = 0}` computed from the brackets alone.
pub fn h0_from_brackets<F: Field>(g: &GradedLieAlgebra<F>) -> Vec<Vec<F>> {
    let v = g.range(-2);
    let basis: Vec<usize> = g.range(0).collect();
    let rows = v.len() * v.len();
    let m = Matrix::from_fn(rows, basis.len(), |r, c| {
        let (k, t) = (v.start + r / v.len(), v.start + r % v.len());
        g.bracket_basis(basis[c], k).iter().find(|(i, _)| *i == t).map_or(F::zero(), |(_, x)| x.clone())
    });
    kernel(&m).into_iter().map(|c| embed(g, 0, &c)).collect()
}

/// Splits `g₀` and verifies every relation of the decomposition.
pub fn decompose_g0<F: Field>(g: &GradedLieAlgebra<F>, eta: &ExtendedTranslationAlgebra<F>) -> Result<DegreeZeroDecomposition<F>> {
    let (nw, nv) = (eta.dim_w(), eta.dim_v());
    let solver = degree_solver(g, 0)?;
    let to_g0 = |dw: &Matrix<F>, dv: &Matrix<F>| -> Result<Vec<F>> {
        let mut act = Vec::with_capacity(nw * nw + nv * nv);
        for a in 0..nw {
            act.extend(dw.col(a));
        }
        for k in 0..nv {
            act.extend(dv.col(k));
        }
        match solver.coords(&act) {
            Some(c) => Ok(embed(g, 0, &c)),
            None => consistency("element is not a degree-0 derivation"),
        }
    };
    let so: Vec<Vec<F>> = eta
        .lift
        .rho_s
        .iter()
        .zip(&eta.lift.rho_v)
        .map(|(s, v)| to_g0(s, v))
        .collect::<Result<_>>()?;
    let grading = to_g0(
        &Matrix::identity(nw).neg(),
        &Matrix::identity(nv).scale(&F::from_i64(-2)),
    )?;
    let h0 = h0_from_brackets(g);

    let mut all = so.clone();
    all.push(grading.clone());
    all.extend(h0.iter().cloned());
    if so.len() + 1 + h0.len() != g.dim_of(0) || span_rank(&all) != g.dim_of(0) {
        return consistency("g0 is not so(V) + KE + h0");
    }
    for x in &so {
        for h in &h0 {
            if !is_zero_vec(&g.bracket(x, h)) {
                return consistency("[so(V), h0] != 0");
            }
        }
    }
    for i in g.range(0) {
        if !is_zero_vec(&g.bracket(&grading, &g.unit(i))) {
            return consistency("E is not central in g0");
        }
    }

    let b = &eta.form.gram;
    let blocks: Vec<Matrix<F>> = h0.iter().map(|h| w_block(g, h)).collect();
    let part = |sign: i64| -> Vec<Vec<F>> {
        let s = F::from_i64(sign);
        let cols: Vec<Vec<F>> =
            blocks.iter().map(|d| d.transpose().mul(b).add(&b.mul(d).scale(&s)).entries().to_vec()).collect();
        if cols.is_empty() {
            return Vec::new();
        }
        let m = Matrix::from_columns(cols[0].len(), &cols);
        kernel(&m)
            .into_iter()
            .map(|c| {
                let mut v = vec![F::zero(); g.dim()];
                for (x, h) in c.iter().zip(&h0) {
                    for (o, y) in v.iter_mut().zip(h) {
                        *o += x.clone() * y.clone();
                    }
                }
                v
            })
            .collect()
    };
    let h0a = part(1);
    let h0s = part(-1);
    let mut both = h0a.clone();
    both.extend(h0s.iter().cloned());
    if h0a.len() + h0s.len() != h0.len() || span_rank(&both) != h0.len() {
        return consistency("h0 is not h0a + h0s");
    }
    for (set, sign) in [(&h0a, 1i64), (&h0s, -1)] {
        for h in set.iter() {
            let d = w_block(g, h);
            for gk in &eta.module.gammas {
                if d.mul(gk) != gk.mul(&d).scale(&F::from_i64(sign)) {
                    return consistency("h0a/h0s elements do not (anti)commute with the Clifford action");
                }
            }
        }
    }
    let contained = |v: &[F], target: &[Vec<F>]| -> bool {
        if is_zero_vec(v) {
            return true;
        }
        let mut all = target.to_vec();
        all.push(v.to_vec());
        span_rank(&all) == span_rank(target)
    };
    for (l, r, t) in [(&h0a, &h0a, &h0a), (&h0a, &h0s, &h0s), (&h0s, &h0s, &h0a)] {
        for x in l.iter() {
            for y in r.iter() {
                if !contained(&g.bracket(x, y), t) {
                    return consistency("h0a/h0s bracket containment fails");
                }
            }
        }
    }
    Ok(DegreeZeroDecomposition { so, grading, h0, h0a, h0s })
}

/// Violations of `[E, X] = pX` over all basis elements.
pub fn check_grading_element<F: Field>(g: &GradedLieAlgebra<F>, e: &[F]) -> usize {
    (0..g.dim())
        .filter(|&i| {
            let p = g.degree_of(i);
            let lhs = g.bracket(e, &g.unit(i));
            let rhs: Vec<F> = g.unit(i).into_iter().map(|x| x * F::from_i64(p as i64)).collect();
            lhs != rhs
        })
        .count()
}

/// Gram matrix of `α(s,t) = ([y·z·s, t], x)` on `W`.
pub fn alpha_form<F: Field>(eta: &ExtendedTranslationAlgebra<F>, x: usize, y: usize, z: usize) -> Result<Matrix<F>> {
    let n = eta.dim_v();
    if n < 3 {
        return Err(EtapError::Usage("alpha form needs dim V >= 3".into()));
    }
    if x >= n || y >= n || z >= n || x == y || y == z || x == z {
        return Err(EtapError::Usage(format!("invalid vectors ({x},{y},{z}) for dim V = {n}")));
    }
    let gy = &eta.module.gammas[y];
    let gz = &eta.module.gammas[z];
    let alpha = gy.mul(gz).transpose().mul(&eta.gamma[x]).scale(&F::from_i64(eta.eta[x]));
    if alpha.transpose() != alpha {
        return consistency("alpha is not symmetric");
    }
    if alpha.determinant().is_zero() {
        return consistency("alpha is degenerate");
    }
    Ok(alpha)
}

/// Elements of `h₀` that are not `α`-skew.
pub fn check_h0_in_so_alpha<F: Field>(g: &GradedLieAlgebra<F>, dec: &DegreeZeroDecomposition<F>, alpha: &Matrix<F>) -> usize {
    dec.h0
        .iter()
        .filter(|h| {
            let d = w_block(g, h);
            !d.transpose().mul(alpha).add(&alpha.mul(&d)).is_zero()
        })
        .count()
}

/// `φ: g₁ → W`, `Dv = v·φ(D)`.
#[derive(Clone, Debug)]
pub struct PhiMap<F> {
    /// `φ` of each basis element of `g₁`, as vectors in `W`.
    pub images: Vec<Vec<F>>,
}

pub fn phi_map<F: Field>(g: &GradedLieAlgebra<F>, eta: &ExtendedTranslationAlgebra<F>) -> Result<PhiMap<F>> {
    let (v, w) = (g.range(-2), g.range(-1));
    let u = v.start;
    let g0 = &eta.module.gammas[0];
    let inv_norm = F::from_i64(eta.eta[0]).inv();
    let mut images = Vec::new();
    for d in g.range(1) {
        // [D, e_k] ∈ W.
        let act = |k: usize| -> Vec<F> {
            let r = g.bracket_basis(d, k);
            let mut out = vec![F::zero(); w.len()];
            for (i, c) in r {
                out[i - w.start] = c.clone();
            }
            out
        };
        let du = act(u);
        let s: Vec<F> = g0.mul_vec(&du).into_iter().map(|x| -(x * inv_norm.clone())).collect();
        for (k, gk) in v.clone().zip(&eta.module.gammas) {
            if act(k) != gk.mul_vec(&s) {
                return consistency("Dv != v.phi(D) for some basis v");
            }
        }
        images.push(s);
    }
    if span_rank(&images) != images.len() {
        return consistency("phi is not injective");
    }
    let mut closure = images.clone();
    for s in &images {
        for gk in &eta.module.gammas {
            closure.push(gk.mul_vec(s));
        }
    }
    if span_rank(&closure) != span_rank(&images) {
        return consistency("phi(g1) is not a Clifford submodule");
    }
    Ok(PhiMap { images })
}

impl<F: Field> PhiMap<F> {
    /// `φ` of a global coordinate vector supported on `g₁`.
    pub fn apply(&self, g: &GradedLieAlgebra<F>, x: &[F]) -> Vec<F> {
        let local = restrict(g, 1, x);
        let dim = self.images.first().map_or(0, Vec::len);
        let mut out = vec![F::zero(); dim];
        for (c, img) in local.iter().zip(&self.images) {
            if c.is_zero() {
                continue;
            }
            for (o, y) in out.iter_mut().zip(img) {
                *o += c.clone() * y.clone();
            }
        }
        out
    }
}

/// Violations of `φ([A, D]) = ρ_S(A)φ(D)` over spin elements and `g₁` basis.
pub fn check_phi_equivariance<F: Field>(
    g: &GradedLieAlgebra<F>,
    eta: &ExtendedTranslationAlgebra<F>,
    dec: &DegreeZeroDecomposition<F>,
    phi: &PhiMap<F>,
) -> usize {
    let mut bad = 0;
    for (a, rho) in dec.so.iter().zip(&eta.lift.rho_s) {
        for (d, img) in g.range(1).zip(&phi.images) {
            let lhs = phi.apply(g, &g.bracket(a, &g.unit(d)));
            if lhs != rho.mul_vec(img) {
                bad += 1;
            }
        }
    }
    bad
}

/// Degree-preserving automorphism `ψ` extending `s ↦ v·s` on `W`.
#[derive(Clone, Debug)]
pub struct PsiAutomorphism<F> {
    /// Matrix on global coordinates (column `i` = `ψ(b_i)`).
    pub matrix: Matrix<F>,
    pub v: usize,
}

pub fn psi_automorphism<F: Field>(g: &GradedLieAlgebra<F>, eta: &ExtendedTranslationAlgebra<F>, v: usize) -> Result<PsiAutomorphism<F>> {
    if v >= eta.dim_v() {
        return Err(EtapError::Usage(format!("vector index {v} out of range")));
    }
    let n = g.dim();
    let (vr, wr) = (g.range(-2), g.range(-1));
    let gv = &eta.module.gammas[v];
    let evv = eta.eta[v];
    let eps = eta.epsilon as i64;
    let mut psi = Matrix::zeros(n, n);
    let mut psi_inv = Matrix::zeros(n, n);
    // V: ψ(u) = ε(v,v)(u − 2(v,u)/(v,v)·v), diagonal in the orthogonal basis.
    for (k, idx) in vr.clone().enumerate() {
        let s = if k == v { -eps * evv } else { eps * evv };
        psi[(idx, idx)] = F::from_i64(s);
        psi_inv[(idx, idx)] = F::from_i64(s);
    }
    // W: ψ(s) = v·s, ψ⁻¹(s) = −v·s/(v,v).
    let inv_factor = F::from_i64(-evv).inv();
    for (a, ia) in wr.clone().enumerate() {
        for (b, ib) in wr.clone().enumerate() {
            psi[(ib, ia)] = gv[(b, a)].clone();
            psi_inv[(ib, ia)] = gv[(b, a)].clone() * inv_factor.clone();
        }
    }
    // Degree by degree: [ψX, a] = ψ[X, ψ⁻¹a].
    for p in 0..=g.top_degree() {
        let solver = degree_solver(g, p)?;
        let fill = |map_in: &Matrix<F>, map_out: &Matrix<F>, x: usize| -> Result<Vec<F>> {
            let mut act = Vec::new();
            for (src, tgt) in [(-1, p - 1), (-2, p - 2)] {
                for a in g.range(src) {
                    let pre = map_in.col(a);
                    let br = g.bracket_with_basis(x, &pre);
                    let img = map_out.mul_vec(&br);
                    act.extend(g.range(tgt).map(|k| img[k].clone()));
                }
            }
            match solver.coords(&act) {
                Some(c) => Ok(embed(g, p, &c)),
                None => consistency(format!("psi does not preserve g_{p}")),
            }
        };
        let cols: Vec<(usize, Vec<F>, Vec<F>)> = g
            .range(p)
            .map(|x| Ok((x, fill(&psi_inv, &psi, x)?, fill(&psi, &psi_inv, x)?)))
            .collect::<Result<_>>()?;
        for (x, fwd, back) in cols {
            for k in 0..n {
                psi[(k, x)] = fwd[k].clone();
                psi_inv[(k, x)] = back[k].clone();
            }
        }
    }
    if psi.mul(&psi_inv) != Matrix::identity(n) {
        return consistency("psi is not invertible");
    }
    Ok(PsiAutomorphism { matrix: psi, v })
}

impl<F: Field> PsiAutomorphism<F> {
    /// Basis pairs where `ψ[x,y] ≠ [ψx,ψy]`.
    pub fn check_automorphism(&self, g: &GradedLieAlgebra<F>) -> usize {
        let n = g.dim();
        let cols: Vec<Vec<F>> = (0..n).map(|i| self.matrix.col(i)).collect();
        let mut bad = 0;
        for i in 0..n {
            for j in i + 1..n {
                let (p, q) = (g.degree_of(i), g.degree_of(j));
                if !g.bracket_known(p, q) {
                    continue;
                }
                let lhs = self.matrix.mul_vec(&g.bracket(&g.unit(i), &g.unit(j)));
                if lhs != g.bracket(&cols[i], &cols[j]) {
                    bad += 1;
                }
            }
        }
        bad
    }

    /// Basis elements `D ∈ g₁` where `ψ(φ(D)) ≠ ε·φ(ψ⁻¹(D))`.
    pub fn check_phi_relation(&self, g: &GradedLieAlgebra<F>, eta: &ExtendedTranslationAlgebra<F>, phi: &PhiMap<F>) -> usize {
        let inv = match self.matrix.inverse() {
            Some(m) => m,
            None => return g.dim_of(1).max(1),
        };
        let gv = &eta.module.gammas[self.v];
        let eps = F::from_i64(eta.epsilon as i64);
        g.range(1)
            .zip(&phi.images)
            .filter(|(d, img)| {
                let lhs = gv.mul_vec(img);
                let rhs: Vec<F> = phi.apply(g, &inv.col(*d)).into_iter().map(|x| x * eps.clone()).collect();
                lhs != rhs
            })
            .count()
    }
}

/// Killing form data and the derived semisimplicity/simplicity flags.
#[derive(Clone, Debug)]
pub struct KillingData<F> {
    pub gram: Matrix<F>,
    pub rank: usize,
    /// `(n₊, n₋, n₀)` for algebras over ℚ.
    pub signature: Option<(usize, usize, usize)>,
    pub semisimple: bool,
    pub radical_dim: usize,
    pub centroid_dim: Option<usize>,
    pub simple: Option<bool>,
}

pub fn killing_form<F: Field>(g: &GradedLieAlgebra<F>) -> Matrix<F> {
    let n = g.dim();
    let ads: Vec<Matrix<F>> = (0..n).map(|i| g.ad(i)).collect();
    Matrix::from_fn(n, n, |i, j| {
        // tr(ad_i ad_j) = Σ_l Σ_k (ad_i)_{kl} (ad_j)_{lk}
        let mut s = F::zero();
        for l in 0..n {
            for (k, c) in g.bracket_basis(i, l) {
                let y = &ads[j][(l, *k)];
                if !y.is_zero() {
                    s += c.clone() * y.clone();
                }
            }
        }
        s
    })
}

/// Pairs `(x, y)` of basis elements with `K([x,y],·) + K(y,[x,·]) ≠ 0`,
/// i.e. failures of `ad(x)ᵀK + K·ad(x) = 0` counted by nonzero entry.
pub fn check_killing_invariance<F: Field>(g: &GradedLieAlgebra<F>, gram: &Matrix<F>) -> usize {
    let n = g.dim();
    let mut bad = 0;
    for x in 0..n {
        // (K·ad x)_{yz} = Σ_k K_{yk} c^k_{xz}
        let mut ka: Matrix<F> = Matrix::zeros(n, n);
        for z in 0..n {
            for (k, c) in g.bracket_basis(x, z) {
                for y in 0..n {
                    let v = &gram[(y, *k)];
                    if !v.is_zero() {
                        ka[(y, z)] += v.clone() * c.clone();
                    }
                }
            }
        }
        bad += ka.add(&ka.transpose()).entries().iter().filter(|v| !v.is_zero()).count();
    }
    bad
}

/// Killing form, semisimplicity (nondegeneracy), solvable radical
/// (`[g,g]^⊥`) and, for semisimple algebras, simplicity via the centroid.
pub fn killing_and_radical<F: Field>(g: &GradedLieAlgebra<F>) -> Result<KillingData<F>> {
    if g.truncated {
        return Err(EtapError::Usage("Killing form needs a finite algebra".into()));
    }
    let n = g.dim();
    let gram = killing_form(g);
    if gram.transpose() != gram {
        return consistency("Killing form is not symmetric");
    }
    let rank = gram.rank();
    let signature = if g.field == FieldKind::Real { real_signature(&gram) } else { None };
    let semisimple = rank == n;
    // Radical: vectors K-orthogonal to [g,g].
    let mut derived: Vec<Vec<F>> = Vec::new();
    let mut e = Echelon::new(n);
    for i in 0..n {
        for j in i + 1..n {
            let r = g.bracket_basis(i, j);
            if !r.is_empty() && e.insert(r).is_some() {
                derived.push(dense(r, n));
            }
        }
    }
    let radical_dim = if derived.is_empty() {
        n
    } else {
        let rows: Vec<Vec<F>> = derived.iter().map(|d| gram.mul_vec(d)).collect();
        kernel(&Matrix::from_rows(rows)?).len()
    };
    let (centroid_dim, simple) = if semisimple {
        let c = centroid_dim(g);
        (Some(c), Some(c == 1))
    } else {
        (None, None)
    };
    Ok(KillingData { gram, rank, signature, semisimple, radical_dim, centroid_dim, simple })
}

fn dense<F: Field>(r: &SparseRow<F>, n: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    for (k, c) in r {
        v[*k] = c.clone();
    }
    v
}

/// Basis indices of `g₋₁ ∪ g₁` if they generate `g`, otherwise all indices.
fn generating_set<F: Field>(g: &GradedLieAlgebra<F>) -> Vec<usize> {
    let gens: Vec<usize> = g.range(-1).chain(g.range(1)).collect();
    let n = g.dim();
    let mut e = Echelon::new(n);
    let mut span: Vec<Vec<F>> = Vec::new();
    for &i in &gens {
        let v = g.unit(i);
        if e.insert(&crate::linalg::sparse_from_dense(&v)).is_some() {
            span.push(v);
        }
    }
    let mut k = 0;
    while k < span.len() {
        for &i in &gens {
            let b = g.bracket_with_basis(i, &span[k]);
            if e.insert(&crate::linalg::sparse_from_dense(&b)).is_some() {
                span.push(b);
            }
        }
        k += 1;
    }
    if span.len() == n {
        gens
    } else {
        (0..n).collect()
    }
}

/// Dimension of the centroid: maps commuting with every `ad(x)`. Such maps
/// commute with `ad(E)` and so preserve the grading; the unknowns are one
/// block per degree.
pub fn centroid_dim<F: Field>(g: &GradedLieAlgebra<F>) -> usize {
    let degrees: Vec<i32> = (-2..=g.top_degree()).collect();
    let mut block_off = Vec::new();
    let mut total = 0;
    for &d in &degrees {
        block_off.push(total);
        total += g.dim_of(d) * g.dim_of(d);
    }
    let var = |deg: i32, i: usize, j: usize| -> usize {
        let k = (deg + 2) as usize;
        block_off[k] + i * g.dim_of(deg) + j
    };
    let mut rows = Vec::new();
    for x in generating_set(g) {
        let q = g.degree_of(x);
        for y in 0..g.dim() {
            let r = g.degree_of(y);
            let t = r + q;
            if g.dim_of(t) == 0 {
                continue;
            }
            let (ot, or) = (g.offset(t), g.offset(r));
            // c([x,y]) − [x, c(y)] = 0, component m of degree t.
            let xy = g.bracket_basis(x, y);
            for m in 0..g.dim_of(t) {
                let mut row = Vec::new();
                for (k, c) in xy {
                    row.push((var(t, m, k - ot), c.clone()));
                }
                for l in 0..g.dim_of(r) {
                    if let Some((_, u)) = g.bracket_basis(x, or + l).iter().find(|(i, _)| *i == ot + m) {
                        row.push((var(r, l, y - or), -u.clone()));
                    }
                }
                let row = normalize_row(row);
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    kernel_sparse(total, &rows).len()
}

/// Data compared against the catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Fingerprint {
    pub field: FieldKind,
    /// Dimensions of `g_{-2}, g_{-1}, …`.
    pub dims: Vec<usize>,
    pub dim_h0: usize,
    pub total: usize,
    pub killing_signature: Option<(usize, usize)>,
    pub simple: bool,
}

impl Fingerprint {
    pub fn of<F: Field>(g: &GradedLieAlgebra<F>, killing: Option<&KillingData<F>>) -> Self {
        Fingerprint {
            field: g.field,
            dims: g.dims.clone(),
            dim_h0: h0_from_brackets(g).len(),
            total: g.dim(),
            killing_signature: killing.and_then(|k| k.signature).map(|(p, m, _)| (p, m)),
            simple: killing.and_then(|k| k.simple).unwrap_or(false),
        }
    }

    /// Field-by-field differences from a record; empty when they agree.
    pub fn diff(&self, r: &ClassificationRecord) -> Vec<String> {
        let mut out = Vec::new();
        if self.field != r.field() {
            out.push(format!("field: expected {:?}, got {:?}", r.field(), self.field));
        }
        if self.dims != r.dims {
            out.push(format!("dims: expected {:?}, got {:?}", r.dims, self.dims));
        }
        if self.dim_h0 != r.h0_dim {
            out.push(format!("dim h0: expected {}, got {}", r.h0_dim, self.dim_h0));
        }
        if self.total != r.total {
            out.push(format!("total: expected {}, got {}", r.total, self.total));
        }
        if r.killing.is_some() && self.killing_signature != r.killing {
            out.push(format!("Killing signature: expected {:?}, got {:?}", r.killing, self.killing_signature));
        }
        if !self.simple {
            out.push("expected a simple algebra".into());
        }
        out
    }
}

/// The first catalog record whose fingerprint equals `fp`.
pub fn identify<'a>(catalog: &'a Catalog, fp: &Fingerprint) -> Option<&'a ClassificationRecord> {
    catalog.records().iter().find(|r| fp.diff(r).is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{build_clifford_rep, Signature, Variant};
    use crate::eta::build_eta;
    use crate::prolong::full_prolongation;
    use crate::scalar::{Gaussian, Rational};
    use crate::spinforms::{classify_form, form_pieces, FormContext, FormInvariants};

    fn eta_for<F: Field>(sig: Signature, inv: Option<&str>) -> ExtendedTranslationAlgebra<F> {
        let rep = build_clifford_rep::<F>(sig, Variant::First).unwrap();
        let ctx = FormContext::new(rep.multiple(1));
        let want: Option<FormInvariants> = inv.map(|s| s.parse().unwrap());
        let piece = form_pieces(&ctx)
            .into_iter()
            .find(|p| {
                p.representative.is_some()
                    && p.invariants.epsilon().is_some()
                    && want.map_or(true, |w| w.matches(&p.invariants))
            })
            .unwrap();
        let form = classify_form(&piece.representative.unwrap(), &ctx).unwrap().admissible().unwrap();
        build_eta(ctx.module.clone(), form).unwrap()
    }

    #[test]
    fn sp12_structure() {
        let eta: ExtendedTranslationAlgebra<Rational> = eta_for(Signature::real(3, 0), None);
        let (g, _) = full_prolongation(&eta, 6).unwrap();
        let dec = decompose_g0(&g, &eta).unwrap();
        assert_eq!(dec.h0.len(), 3);
        assert_eq!(check_grading_element(&g, &dec.grading), 0);
        let alpha = alpha_form(&eta, 0, 1, 2).unwrap();
        assert_eq!(check_h0_in_so_alpha(&g, &dec, &alpha), 0);
        let phi = phi_map(&g, &eta).unwrap();
        assert_eq!(phi.images.len(), 4);
        assert_eq!(check_phi_equivariance(&g, &eta, &dec, &phi), 0);
        let psi = psi_automorphism(&g, &eta, 0).unwrap();
        assert_eq!(psi.check_automorphism(&g), 0);
        assert_eq!(psi.check_phi_relation(&g, &eta, &phi), 0);
        let k = killing_and_radical(&g).unwrap();
        assert!(k.semisimple);
        assert_eq!(k.simple, Some(true));
        let (p, m, _) = k.signature.unwrap();
        assert_eq!((p, m), (8, 13));
        let cat = Catalog::load().unwrap();
        let fp = Fingerprint::of(&g, Some(&k));
        assert_eq!(identify(&cat, &fp).unwrap().label, "sp(1,2)");
    }

    #[test]
    fn sl5_is_simple() {
        let eta: ExtendedTranslationAlgebra<Gaussian> = eta_for(Signature::complex(4), Some("+,-,+"));
        let (g, _) = full_prolongation(&eta, 6).unwrap();
        let k = killing_and_radical(&g).unwrap();
        assert!(k.semisimple);
        assert_eq!(k.centroid_dim, Some(1));
        assert_eq!(decompose_g0(&g, &eta).unwrap().h0.len(), 1);
    }

    #[test]
    fn n6_is_not_semisimple() {
        let eta: ExtendedTranslationAlgebra<Gaussian> = eta_for(Signature::complex(6), None);
        let (g, _) = full_prolongation(&eta, 6).unwrap();
        assert_eq!(g.dim_of(1), 0);
        let k = killing_and_radical(&g).unwrap();
        assert!(!k.semisimple);
        assert!(k.radical_dim > 0);
    }

    #[test]
    fn sl5_real_signature() {
        let eta: ExtendedTranslationAlgebra<Rational> = eta_for(Signature::real(2, 2), None);
        let (g, _) = full_prolongation(&eta, 6).unwrap();
        let k = killing_and_radical(&g).unwrap();
        assert_eq!(g.dim(), 24);
        assert_eq!(k.simple, Some(true));
        let (p, m, _) = k.signature.unwrap();
        assert_eq!((p, m), (14, 10));
    }
}
