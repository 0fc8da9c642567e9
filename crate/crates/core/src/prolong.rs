//! Maximal transitive prolongation of an extended translation algebra.
//!
//! An element `X ∈ g_p` (`p ≥ 0`) is stored by its action on `m`: the map
//! `A: W → g_{p−1}`, `a ↦ [X,a]`, and `B: V → g_{p−2}`, `v ↦ [X,v]`. In the
//! flat "raw" layout, `A(s_a)` has coordinate `i` at `a·d_{p−1} + i` and
//! `B(e_k)` has coordinate `j` at `dim W·d_{p−1} + k·d_{p−2} + j`. `g_p` is the
//! space of such maps satisfying `X[a,b] = [Xa,b] + [a,Xb]` for all `a,b ∈ m`.
//! Its basis is read off the reduced row echelon form, so the coordinates of a
//! raw vector in `g_p` are its entries at the free columns.

use serde::{Deserialize, Serialize};

use crate::clifford::normalize_row;
use crate::error::{EtapError, Result};
use crate::eta::ExtendedTranslationAlgebra;
use crate::linalg::{kernel_sparse, span_rank, SparseRow};
use crate::scalar::{Field, FieldKind};

/// Default cutoff for prolongation runs.
pub const DEFAULT_MAX_DEGREE: usize = 6;

/// The cutoff from `ETAP_MAX_DEGREE`, or the default.
pub fn max_degree_from_env() -> usize {
    std::env::var("ETAP_MAX_DEGREE").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_DEGREE)
}

/// Finite-dimensional graded Lie algebra `g = ⊕_{p ≥ −2} g_p` with sparse
/// structure constants on a global basis ordered by degree.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedLieAlgebra<F> {
    pub field: FieldKind,
    /// `dims[k] = dim g_{k−2}`.
    pub dims: Vec<usize>,
    pub labels: Vec<String>,
    /// Free-form description of where the algebra came from.
    pub provenance: String,
    /// `table[i][j]` holds the coordinates of `[b_i, b_j]`.
    table: Vec<Vec<SparseRow<F>>>,
    /// Brackets landing above the top degree are unknown (truncated run).
    pub truncated: bool,
}

impl<F: Field> GradedLieAlgebra<F> {
    /// Assembles an algebra from `(i, j, k, c)` entries meaning `[b_i,b_j] ∋ c·b_k`,
    /// given for `i < j`; the rest follows by antisymmetry.
    pub fn from_structure_constants(
        field: FieldKind,
        dims: Vec<usize>,
        labels: Vec<String>,
        provenance: String,
        truncated: bool,
        entries: Vec<(usize, usize, usize, F)>,
    ) -> Result<Self> {
        let n: usize = dims.iter().sum();
        if labels.len() != n {
            return Err(EtapError::Dimension(format!("{} labels for dimension {n}", labels.len())));
        }
        let mut raw: Vec<Vec<Vec<(usize, F)>>> = vec![vec![Vec::new(); n]; n];
        for (i, j, k, c) in entries {
            if i >= n || j >= n || k >= n {
                return Err(EtapError::Dimension(format!("bracket index ({i},{j},{k}) out of range {n}")));
            }
            if i >= j {
                return Err(EtapError::Parse(format!("bracket entries need i < j, got ({i},{j})")));
            }
            raw[i][j].push((k, c.clone()));
            raw[j][i].push((k, -c));
        }
        let table = raw.into_iter().map(|r| r.into_iter().map(normalize_row).collect()).collect();
        Ok(GradedLieAlgebra { field, dims, labels, provenance, table, truncated })
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn top_degree(&self) -> i32 {
        self.dims.len() as i32 - 3
    }

    pub fn dim_of(&self, deg: i32) -> usize {
        usize::try_from(deg + 2).ok().and_then(|k| self.dims.get(k)).copied().unwrap_or(0)
    }

    pub fn offset(&self, deg: i32) -> usize {
        self.dims.iter().take((deg + 2).max(0) as usize).sum()
    }

    pub fn degree_of(&self, index: usize) -> i32 {
        let mut acc = 0;
        for (k, d) in self.dims.iter().enumerate() {
            acc += d;
            if index < acc {
                return k as i32 - 2;
            }
        }
        panic!("index {index} out of range");
    }

    /// Global indices of the basis of `g_deg`.
    pub fn range(&self, deg: i32) -> std::ops::Range<usize> {
        let o = self.offset(deg);
        o..o + self.dim_of(deg)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseRow<F> {
        &self.table[i][j]
    }

    /// `[x, y]` for coordinate vectors.
    pub fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.clone() * b.clone();
                for (k, c) in &self.table[i][j] {
                    out[*k] += ab.clone() * c.clone();
                }
            }
        }
        out
    }

    /// `[b_i, y]` for a coordinate vector `y`.
    pub fn bracket_with_basis(&self, i: usize, y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (k, c) in &self.table[i][j] {
                out[*k] += b.clone() * c.clone();
            }
        }
        out
    }

    /// Matrix of `ad(b_i)`, column `j` = coordinates of `[b_i, b_j]`.
    pub fn ad(&self, i: usize) -> crate::linalg::Matrix<F> {
        let n = self.dim();
        let mut m = crate::linalg::Matrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in &self.table[i][j] {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    /// Nonzero structure constants `(i, j, k, c)` with `i < j`.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, F)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for (k, c) in &self.table[i][j] {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    /// Whether the bracket of degrees `p` and `q` is known.
    pub fn bracket_known(&self, p: i32, q: i32) -> bool {
        !self.truncated || p + q <= self.top_degree()
    }

    pub fn check_antisymmetry(&self) -> usize {
        let n = self.dim();
        let mut bad = 0;
        for i in 0..n {
            for j in i..n {
                let neg: SparseRow<F> = self.table[j][i].iter().map(|(k, c)| (*k, -c.clone())).collect();
                if self.table[i][j] != neg {
                    bad += 1;
                }
            }
        }
        bad
    }

    /// Entries of `[g_p, g_q]` outside `g_{p+q}`.
    pub fn check_grading(&self) -> usize {
        let n = self.dim();
        let mut bad = 0;
        for i in 0..n {
            for j in 0..n {
                let target = self.degree_of(i) + self.degree_of(j);
                bad += self.table[i][j].iter().filter(|(k, _)| self.degree_of(*k) != target).count();
            }
        }
        bad
    }

    /// Basis triples `i < j < k` violating the Jacobi identity, restricted to
    /// triples whose brackets are all known.
    pub fn check_jacobi(&self) -> usize {
        let n = self.dim();
        let deg: Vec<i32> = (0..n).map(|i| self.degree_of(i)).collect();
        let top = self.top_degree();
        let mut bad = 0;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if self.truncated {
                        let (a, b, c) = (deg[i], deg[j], deg[k]);
                        if a + b + c > top || a + b > top || b + c > top || a + c > top {
                            continue;
                        }
                    }
                    let mut acc = vec![F::zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        // [[a,b],c] summed cyclically.
                        for (m, x) in &self.table[a][b] {
                            for (l, y) in &self.table[*m][c] {
                                acc[*l] += x.clone() * y.clone();
                            }
                        }
                    }
                    if acc.iter().any(|x| !x.is_zero()) {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    /// Elements `X` of non-negative degree with `[X, g₋₁] = 0`: the number of
    /// degrees where `g_p → Hom(g₋₁, g_{p−1})` fails to be injective.
    pub fn check_transitivity(&self) -> usize {
        let w = self.range(-1);
        let mut bad = 0;
        for p in 0..=self.top_degree() {
            let target = self.range(p - 1);
            let images: Vec<Vec<F>> = self
                .range(p)
                .map(|x| {
                    let mut v = Vec::new();
                    for a in w.clone() {
                        let row = &self.table[x][a];
                        let mut dense = vec![F::zero(); target.len()];
                        for (k, c) in row {
                            dense[k - target.start] = c.clone();
                        }
                        v.extend(dense);
                    }
                    v
                })
                .collect();
            if span_rank(&images) != self.dim_of(p) {
                bad += 1;
            }
        }
        bad
    }
}

/// Summary of a prolongation run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProlongationReport {
    /// `(degree, dimension)` for every computed degree.
    pub dims: Vec<(i32, usize)>,
    pub finite: bool,
    pub cutoff: usize,
    /// First `p ≥ 0` with `g_p = 0`, when reached.
    pub termination_degree: Option<i32>,
}

impl ProlongationReport {
    pub fn dim_of(&self, deg: i32) -> usize {
        self.dims.iter().find(|(d, _)| *d == deg).map_or(0, |(_, n)| *n)
    }

    pub fn total(&self) -> usize {
        self.dims.iter().map(|(_, n)| n).sum()
    }
}

/// One computed degree `p ≥ 0`.
#[derive(Clone, Debug)]
struct Component<F> {
    /// Raw vectors of the basis.
    basis: Vec<Vec<F>>,
    free: Vec<usize>,
}

/// Engine state: the ETA plus all degrees computed so far.
struct Engine<'a, F> {
    eta: &'a ExtendedTranslationAlgebra<F>,
    comps: Vec<Component<F>>,
}

impl<'a, F: Field> Engine<'a, F> {
    fn dim(&self, deg: i32) -> usize {
        match deg {
            -2 => self.eta.dim_v(),
            -1 => self.eta.dim_w(),
            d if d < -2 => 0,
            d => self.comps.get(d as usize).map_or(0, |c| c.basis.len()),
        }
    }

    /// `[x, s_b]` in local coordinates of `g_{r−1}`, for `x` in `g_r`.
    fn ad_w(&self, r: i32, x: usize, b: usize) -> SparseRow<F> {
        match r {
            -1 => crate::linalg::sparse_from_dense(&self.eta.bracket(x, b)),
            r if r >= 0 => {
                let d1 = self.dim(r - 1);
                let v = &self.comps[r as usize].basis[x];
                crate::linalg::sparse_from_dense(&v[b * d1..(b + 1) * d1])
            }
            _ => Vec::new(),
        }
    }

    /// `[x, e_k]` in local coordinates of `g_{r−2}`, for `x` in `g_r`.
    fn ad_v(&self, r: i32, x: usize, k: usize) -> SparseRow<F> {
        if r < 0 {
            return Vec::new();
        }
        let (d1, d2) = (self.dim(r - 1), self.dim(r - 2));
        let off = self.eta.dim_w() * d1 + k * d2;
        crate::linalg::sparse_from_dense(&self.comps[r as usize].basis[x][off..off + d2])
    }

    /// Transposed action tables: `t[b][j]` lists `(x, c)` with `[g_{r,x}, s_b]_j = c`.
    fn transposed_w(&self, r: i32) -> Vec<Vec<Vec<(usize, F)>>> {
        let target = self.dim(r - 1);
        let mut t = vec![vec![Vec::new(); target]; self.eta.dim_w()];
        for x in 0..self.dim(r) {
            for (b, tb) in t.iter_mut().enumerate() {
                for (j, c) in self.ad_w(r, x, b) {
                    tb[j].push((x, c));
                }
            }
        }
        t
    }

    fn transposed_v(&self, r: i32) -> Vec<Vec<Vec<(usize, F)>>> {
        let target = self.dim(r - 2);
        let mut t = vec![vec![Vec::new(); target]; self.eta.dim_v()];
        for x in 0..self.dim(r) {
            for (k, tk) in t.iter_mut().enumerate() {
                for (j, c) in self.ad_v(r, x, k) {
                    tk[j].push((x, c));
                }
            }
        }
        t
    }

    /// Linear system whose kernel is `g_p`.
    fn system(&self, p: i32) -> (usize, Vec<SparseRow<F>>) {
        let (nw, nv) = (self.eta.dim_w(), self.eta.dim_v());
        let (d1, d2) = (self.dim(p - 1), self.dim(p - 2));
        let off_b = nw * d1;
        let col_a = |a: usize, x: usize| a * d1 + x;
        let col_b = |k: usize, y: usize| off_b + k * d2 + y;
        let ncols = off_b + nv * d2;
        let mut rows = Vec::new();

        // a, b ∈ W: B([a,b]) − [A a, b] + [A b, a] = 0 in g_{p−2}.
        let tw1 = self.transposed_w(p - 1);
        for a in 0..nw {
            for b in a + 1..nw {
                let gab = self.eta.bracket(a, b);
                for j in 0..d2 {
                    let mut r = Vec::new();
                    for (k, c) in gab.iter().enumerate() {
                        if !c.is_zero() {
                            r.push((col_b(k, j), c.clone()));
                        }
                    }
                    for (x, c) in &tw1[b][j] {
                        r.push((col_a(a, *x), -c.clone()));
                    }
                    for (x, c) in &tw1[a][j] {
                        r.push((col_a(b, *x), c.clone()));
                    }
                    let r = normalize_row(r);
                    if !r.is_empty() {
                        rows.push(r);
                    }
                }
            }
        }

        // a ∈ W, v ∈ V: [A a, v] − [B v, a] = 0 in g_{p−3}.
        let d3 = self.dim(p - 3);
        if d3 > 0 {
            let tv1 = self.transposed_v(p - 1);
            let tw2 = self.transposed_w(p - 2);
            for a in 0..nw {
                for k in 0..nv {
                    for j in 0..d3 {
                        let mut r = Vec::new();
                        if let Some(list) = tv1.get(k).and_then(|t| t.get(j)) {
                            for (x, c) in list {
                                r.push((col_a(a, *x), c.clone()));
                            }
                        }
                        if let Some(list) = tw2.get(a).and_then(|t| t.get(j)) {
                            for (y, c) in list {
                                r.push((col_b(k, *y), -c.clone()));
                            }
                        }
                        let r = normalize_row(r);
                        if !r.is_empty() {
                            rows.push(r);
                        }
                    }
                }
            }
        }

        // v, u ∈ V: [B v, u] − [B u, v] = 0 in g_{p−4}.
        let d4 = self.dim(p - 4);
        if d4 > 0 {
            let tv2 = self.transposed_v(p - 2);
            for k in 0..nv {
                for l in k + 1..nv {
                    for j in 0..d4 {
                        let mut r = Vec::new();
                        for (y, c) in &tv2[l][j] {
                            r.push((col_b(k, *y), c.clone()));
                        }
                        for (y, c) in &tv2[k][j] {
                            r.push((col_b(l, *y), -c.clone()));
                        }
                        let r = normalize_row(r);
                        if !r.is_empty() {
                            rows.push(r);
                        }
                    }
                }
            }
        }
        (ncols, rows)
    }

    fn step(&mut self, p: i32) -> Result<usize> {
        let (ncols, rows) = self.system(p);
        let basis = kernel_sparse(ncols, &rows);
        let free = free_columns(&basis, ncols)?;
        // Transitivity: the W-part alone determines each element.
        let a_len = self.eta.dim_w() * self.dim(p - 1);
        let parts: Vec<Vec<F>> = basis.iter().map(|v| v[..a_len].to_vec()).collect();
        if span_rank(&parts) != basis.len() {
            return Err(EtapError::Consistency(format!("transitivity fails in degree {p}")));
        }
        let n = basis.len();
        self.comps.push(Component { basis, free });
        Ok(n)
    }
}

/// Free columns of a kernel basis in the engine's normal form: basis vector
/// `x` is 1 at column `f_x` and 0 at every other `f_y`.
fn free_columns<F: Field>(basis: &[Vec<F>], ncols: usize) -> Result<Vec<usize>> {
    let mut free = Vec::with_capacity(basis.len());
    for v in basis {
        // The free column of a kernel vector from back-substitution is its last nonzero entry.
        let f = (0..ncols).rev().find(|&c| !v[c].is_zero()).ok_or_else(|| EtapError::Consistency("zero kernel vector".into()))?;
        free.push(f);
    }
    for (x, v) in basis.iter().enumerate() {
        for (y, &f) in free.iter().enumerate() {
            let expect = if x == y { F::one() } else { F::zero() };
            if v[f] != expect {
                return Err(EtapError::Consistency("kernel basis is not in normal form".into()));
            }
        }
    }
    Ok(free)
}

/// `g₀`: degree-0 derivations `(D_W, D_V)` of `m`, as raw vectors
/// (column `a` of `D_W` at `a·dim W`, column `k` of `D_V` after that).
pub fn derivations_degree0<F: Field>(eta: &ExtendedTranslationAlgebra<F>) -> Result<Vec<Vec<F>>> {
    let mut e = Engine { eta, comps: Vec::new() };
    e.step(0)?;
    Ok(e.comps.pop().unwrap().basis)
}

/// Computes `g_p` for `p = 0, 1, …` until the first zero component (then
/// checks one further step) or until `max_degree`.
pub fn full_prolongation<F: Field>(
    eta: &ExtendedTranslationAlgebra<F>,
    max_degree: usize,
) -> Result<(GradedLieAlgebra<F>, ProlongationReport)> {
    let mut engine = Engine { eta, comps: Vec::new() };
    let mut termination = None;
    for p in 0..=max_degree as i32 {
        if engine.step(p)? == 0 {
            termination = Some(p);
            if engine.step(p + 1)? != 0 {
                return Err(EtapError::Consistency(format!("g_{} is nonzero after g_{p} = 0", p + 1)));
            }
            engine.comps.truncate(p as usize);
            break;
        }
    }
    let finite = termination.is_some();
    let g = assemble_brackets(&engine, !finite)?;
    let mut dims: Vec<(i32, usize)> = (-2..=g.top_degree()).map(|d| (d, g.dim_of(d))).collect();
    if let Some(t) = termination {
        dims.push((t, 0));
    }
    let report = ProlongationReport { dims, finite, cutoff: max_degree, termination_degree: termination };
    Ok((g, report))
}

fn labels_for(dims: &[usize]) -> Vec<String> {
    let mut out = Vec::new();
    for (k, &d) in dims.iter().enumerate() {
        for i in 0..d {
            out.push(match k {
                0 => format!("e{i}"),
                1 => format!("s{i}"),
                _ => format!("g{}_{i}", k - 2),
            });
        }
    }
    out
}

/// Builds the full structure constants from the per-degree actions on `m`.
fn assemble_brackets<F: Field>(engine: &Engine<'_, F>, truncated: bool) -> Result<GradedLieAlgebra<F>> {
    let eta = engine.eta;
    let top = engine.comps.len() as i32 - 1;
    let dims: Vec<usize> = (-2..=top).map(|d| engine.dim(d)).collect();
    let offset = |deg: i32| -> usize { dims.iter().take((deg + 2) as usize).sum() };
    let n: usize = dims.iter().sum();
    let mut table: Vec<Vec<SparseRow<F>>> = vec![vec![Vec::new(); n]; n];
    let (nw, nv) = (eta.dim_w(), eta.dim_v());
    let (ow, ov) = (offset(-1), offset(-2));

    let set = |table: &mut Vec<Vec<SparseRow<F>>>, i: usize, j: usize, row: SparseRow<F>| {
        table[j][i] = row.iter().map(|(k, c)| (*k, -c.clone())).collect();
        table[i][j] = row;
    };
    let shift = |row: SparseRow<F>, o: usize| -> SparseRow<F> { row.into_iter().map(|(k, c)| (k + o, c)).collect() };

    for a in 0..nw {
        for b in a + 1..nw {
            let row = shift(crate::linalg::sparse_from_dense(&eta.bracket(a, b)), ov);
            set(&mut table, ow + a, ow + b, row);
        }
    }
    for p in 0..=top {
        let op = offset(p);
        for x in 0..engine.dim(p) {
            for b in 0..nw {
                let row = shift(engine.ad_w(p, x, b), offset(p - 1));
                set(&mut table, op + x, ow + b, row);
            }
            for k in 0..nv {
                let row = shift(engine.ad_v(p, x, k), offset(p - 2));
                set(&mut table, op + x, ov + k, row);
            }
        }
    }

    // [g_p, g_q] for p, q ≥ 0 by increasing total degree, from
    // [[X,Y],a] = [X,[Y,a]] − [Y,[X,a]] for a ∈ m.
    for s in 0..=2 * top {
        for p in 0..=s.min(top) {
            let q = s - p;
            if q < p || q > top {
                continue;
            }
            for x in 0..engine.dim(p) {
                let ystart = if p == q { x + 1 } else { 0 };
                for y in ystart..engine.dim(q) {
                    let (gx, gy) = (offset(p) + x, offset(q) + y);
                    let row = bracket_via_action(&table, &dims, engine, s, gx, gy, ow, ov, nw, nv, truncated)?;
                    set(&mut table, gx, gy, row);
                }
            }
        }
    }
    let labels = labels_for(&dims);
    Ok(GradedLieAlgebra {
        field: eta.field,
        dims,
        labels,
        provenance: String::new(),
        table,
        truncated,
    })
}

#[allow(clippy::too_many_arguments)]
fn bracket_via_action<F: Field>(
    table: &[Vec<SparseRow<F>>],
    dims: &[usize],
    engine: &Engine<'_, F>,
    s: i32,
    gx: usize,
    gy: usize,
    ow: usize,
    ov: usize,
    nw: usize,
    nv: usize,
    truncated: bool,
) -> Result<SparseRow<F>> {
    let n: usize = dims.iter().sum();
    // [[X,Y], z] as a global coordinate vector.
    let act = |z: usize| -> Vec<F> {
        let mut out = vec![F::zero(); n];
        for (m, c) in &table[gy][z] {
            for (l, d) in &table[gx][*m] {
                out[*l] += c.clone() * d.clone();
            }
        }
        for (m, c) in &table[gx][z] {
            for (l, d) in &table[gy][*m] {
                out[*l] -= c.clone() * d.clone();
            }
        }
        out
    };
    let top = dims.len() as i32 - 3;
    if s > top {
        if truncated {
            return Ok(Vec::new());
        }
        // The result lies in g_s = 0 and must vanish on m.
        for z in (ow..ow + nw).chain(ov..ov + nv) {
            if act(z).iter().any(|c| !c.is_zero()) {
                return Err(EtapError::Consistency(format!("bracket into zero degree {s} is nonzero")));
            }
        }
        return Ok(Vec::new());
    }
    // Raw vector of [X,Y] in the layout of degree s.
    let off = |deg: i32| -> usize { dims.iter().take((deg + 2).max(0) as usize).sum() };
    let (d1, d2) = (dims[(s + 1) as usize], dims[s as usize]);
    let (o1, o2) = (off(s - 1), off(s - 2));
    let mut raw = vec![F::zero(); nw * d1 + nv * d2];
    for a in 0..nw {
        let v = act(ow + a);
        for i in 0..d1 {
            raw[a * d1 + i] = v[o1 + i].clone();
        }
    }
    for k in 0..nv {
        let v = act(ov + k);
        for j in 0..d2 {
            raw[nw * d1 + k * d2 + j] = v[o2 + j].clone();
        }
    }
    let comp = &engine.comps[s as usize];
    let coords: Vec<F> = comp.free.iter().map(|&f| raw[f].clone()).collect();
    // Membership check: the raw vector must be the combination of the basis.
    let mut back = vec![F::zero(); raw.len()];
    for (c, b) in coords.iter().zip(&comp.basis) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in back.iter_mut().zip(b) {
            if !x.is_zero() {
                *o += c.clone() * x.clone();
            }
        }
    }
    if back != raw {
        return Err(EtapError::Consistency(format!("bracket in degree {s} leaves g_{s}")));
    }
    let os = off(s);
    Ok(coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (os + i, c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{build_clifford_rep, Signature, Variant};
    use crate::eta::build_eta;
    use crate::scalar::{Gaussian, Rational, Scalar};
    use crate::spinforms::{classify_form, eta_family, form_pieces, FormContext, FormInvariants};

    fn real_eta(p: usize, q: usize) -> ExtendedTranslationAlgebra<Rational> {
        let rep = build_clifford_rep::<Rational>(Signature::real(p, q), Variant::First).unwrap();
        let ctx = FormContext::new(rep.multiple(1));
        let fam = eta_family(&ctx);
        let b = fam.iter().map(|(_, b)| b.clone()).find(|b| !b.determinant().is_zero()).unwrap();
        let form = classify_form(&b, &ctx).unwrap().admissible().unwrap();
        build_eta(ctx.module.clone(), form).unwrap()
    }

    fn complex_eta(n: usize, inv: &str) -> ExtendedTranslationAlgebra<Gaussian> {
        let rep = build_clifford_rep(Signature::complex(n), Variant::First).unwrap();
        let ctx = FormContext::new(rep.multiple(1));
        let want: FormInvariants = inv.parse().unwrap();
        let piece = form_pieces(&ctx).into_iter().find(|p| want.matches(&p.invariants) && p.representative.is_some()).unwrap();
        let form = classify_form(&piece.representative.unwrap(), &ctx).unwrap().admissible().unwrap();
        build_eta(ctx.module.clone(), form).unwrap()
    }

    fn dims<F: Field>(g: &GradedLieAlgebra<F>) -> Vec<usize> {
        g.dims.clone()
    }

    #[test]
    fn sl5_dimensions() {
        let (g, r) = full_prolongation(&complex_eta(4, "+,-,+"), 6).unwrap();
        assert_eq!(dims(&g), vec![4, 4, 8, 4, 4]);
        assert!(r.finite);
        assert_eq!(r.termination_degree, Some(3));
        assert_eq!(g.check_jacobi(), 0);
        assert_eq!(g.check_antisymmetry(), 0);
        assert_eq!(g.check_grading(), 0);
        assert_eq!(g.check_transitivity(), 0);
    }

    #[test]
    fn n5_has_no_positive_part() {
        let rep = build_clifford_rep::<Gaussian>(Signature::complex(5), Variant::First).unwrap();
        let ctx = FormContext::new(rep.multiple(1));
        let (inv, b) = eta_family(&ctx).into_iter().find(|(_, b)| !b.determinant().is_zero()).unwrap();
        let _ = inv;
        let form = classify_form(&b, &ctx).unwrap().admissible().unwrap();
        let (g, _) = full_prolongation(&build_eta(ctx.module.clone(), form).unwrap(), 6).unwrap();
        assert_eq!(g.dim_of(1), 0);
    }

    #[test]
    fn sp12_dimensions() {
        let (g, _) = full_prolongation(&real_eta(3, 0), 6).unwrap();
        assert_eq!(dims(&g), vec![3, 4, 7, 4, 3]);
        assert_eq!(g.check_jacobi(), 0);
    }

    #[test]
    fn contact_truncation() {
        let (g, r) = full_prolongation(&real_eta(1, 0), 4).unwrap();
        assert!(!r.finite);
        assert_eq!(dims(&g), vec![1, 2, 4, 6, 9, 12, 16]);
        assert_eq!(g.check_jacobi(), 0);
    }

    #[test]
    fn degree_zero_contains_grading_element() {
        let eta = real_eta(2, 1);
        let g0 = derivations_degree0(&eta).unwrap();
        let (nw, nv) = (eta.dim_w(), eta.dim_v());
        let mut e = vec![Rational::zero(); nw * nw + nv * nv];
        for a in 0..nw {
            e[a * nw + a] = -Rational::one();
        }
        for k in 0..nv {
            e[nw * nw + k * nv + k] = Rational::integer(-2);
        }
        let mut all = g0.clone();
        all.push(e);
        assert_eq!(span_rank(&all), g0.len());
    }
}
