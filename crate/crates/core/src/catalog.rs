//! Expected prolongations: the simple graded algebras, the non-simple and
//! excluded N=1 cases, and the contact algebras for `dim V ≤ 2`.

use std::fmt;

use serde::Serialize;

use crate::clifford::Signature;
use crate::error::{EtapError, Result};
use crate::scalar::FieldKind;
use crate::spinforms::FormInvariants;

/// Where a catalog number comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    /// Read off the classification tables.
    Table,
    /// Recomputed from the type label (dimension, maximal compact subalgebra).
    Computed,
}

/// Form on the multiplicity space `𝕂^N` of `W = S ⊗ 𝕂^N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AuxForm {
    /// `diag(+1,…,+1,−1,…,−1)` with `p` plus signs.
    Delta { p: usize, q: usize },
    /// The standard symplectic form.
    Symplectic,
}

impl AuxForm {
    pub fn identity(n: usize) -> Self {
        AuxForm::Delta { p: n, q: 0 }
    }
}

impl fmt::Display for AuxForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuxForm::Delta { p, q } => write!(f, "delta({p},{q})"),
            AuxForm::Symplectic => f.write_str("omega"),
        }
    }
}

/// Input data of a case: `V`, `N`, the form on `S` and the multiplicity form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseInput {
    pub sig: Signature,
    pub copies: usize,
    /// Invariants of the form on `S`; `None` accepts any admissible choice.
    #[serde(serialize_with = "ser_invariants")]
    pub base_form: Option<FormInvariants>,
    /// `None` for `N = 1`.
    pub aux: Option<AuxForm>,
}

fn ser_invariants<S: serde::Serializer>(v: &Option<FormInvariants>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(i) => s.serialize_str(&i.to_string()),
        None => s.serialize_none(),
    }
}

impl CaseInput {
    pub fn n1(sig: Signature) -> Self {
        CaseInput { sig, copies: 1, base_form: None, aux: None }
    }

    pub fn key(&self) -> String {
        let mut k = match self.sig.field {
            FieldKind::Real => format!("real-{}-{}-N{}", self.sig.p, self.sig.q, self.copies),
            FieldKind::Complex => format!("complex-{}-N{}", self.sig.n(), self.copies),
        };
        if let Some(b) = self.base_form {
            k.push_str(&format!("-{b}"));
        }
        if let Some(a) = self.aux {
            k.push_str(&format!("-{a}"));
        }
        k
    }
}

impl fmt::Display for CaseInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} N={}", self.sig, self.copies)?;
        if let Some(b) = self.base_form {
            write!(f, " form {b}")?;
        }
        if let Some(a) = self.aux {
            write!(f, " aux {a}")?;
        }
        Ok(())
    }
}

/// A maximal compact subalgebra, which fixes the Killing signature
/// `(dim g − dim k, dim k)` of a simple real form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompactPart {
    pub label: String,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RecordOrigins {
    /// One entry per degree `−2..=2`.
    pub dims: Vec<Origin>,
    pub h0: Origin,
    pub total: Origin,
    pub killing: Option<Origin>,
}

/// A simple graded Lie algebra expected as a prolongation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationRecord {
    pub key: String,
    /// Type label, e.g. `sl(5,C)` or `E I`.
    pub label: String,
    pub input: CaseInput,
    /// Dimensions of `g_{-2}, …, g_2`.
    pub dims: Vec<usize>,
    pub h0_dim: usize,
    pub h0_label: String,
    pub total: usize,
    pub compact: Option<CompactPart>,
    pub killing: Option<(usize, usize)>,
    pub origins: RecordOrigins,
}

impl ClassificationRecord {
    pub fn field(&self) -> FieldKind {
        self.input.sig.field
    }

    /// Internal consistency: totals, symmetric profile, Killing signature.
    pub fn check(&self) -> Result<()> {
        let fail = |m: &str| Err(EtapError::Consistency(format!("catalog record {}: {m}", self.key)));
        if self.dims.len() != 5 {
            return fail("expected five degrees");
        }
        if self.dims.iter().sum::<usize>() != self.total {
            return fail("total is not the sum of the degrees");
        }
        if self.dims[0] != self.dims[4] || self.dims[1] != self.dims[3] {
            return fail("profile is not symmetric");
        }
        if self.dims[0] != self.input.sig.n() {
            return fail("dim g_-2 differs from dim V");
        }
        let so = self.dims[0] * (self.dims[0] - 1) / 2;
        if self.dims[2] != so + 1 + self.h0_dim {
            return fail("dim g_0 is not dim so(V) + 1 + dim h0");
        }
        match (self.field(), &self.compact, self.killing) {
            (FieldKind::Real, Some(k), Some((p, m))) => {
                if m != k.dim || p + m != self.total {
                    return fail("Killing signature does not follow from the compact part");
                }
            }
            (FieldKind::Complex, None, None) => {}
            _ => return fail("Killing data inconsistent with the field"),
        }
        Ok(())
    }
}

/// `g_p` of the contact algebra in dimension `2ℓ+1`: monomials `x^a t^b` in
/// `2ℓ` variables of weight 1 and one of weight 2 with `|a| + 2b = p + 2`.
pub fn contact_dim(ell: usize, p: i32) -> usize {
    if p < -2 || ell == 0 {
        return 0;
    }
    let w = (p + 2) as usize;
    let m = 2 * ell;
    (0..=w / 2).map(|b| binomial(m - 1 + w - 2 * b, m - 1)).sum()
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Expected dimensions of an infinite (contact) prolongation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ContactDims {
    pub ell: usize,
    /// Field over which the contact algebra is defined.
    pub field: FieldKind,
    /// Whether the algebra is a complex one regarded as a real algebra.
    pub realified: bool,
}

impl ContactDims {
    pub fn dim(&self, p: i32) -> usize {
        contact_dim(self.ell, p) * if self.realified { 2 } else { 1 }
    }

    pub fn label(&self) -> String {
        let f = match self.field {
            FieldKind::Real => "real",
            FieldKind::Complex => "complex",
        };
        format!("{f} contact algebra in dim {}", 2 * self.ell + 1)
    }
}

/// What the classification predicts for an input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expectation<'a> {
    Simple(&'a ClassificationRecord),
    /// `g_{≥1} = 0`, Killing form degenerate.
    NonSimple { dim_so: usize },
    Infinite(ContactDims),
    /// No extended translation algebra exists.
    Excluded,
    /// Outside the catalog.
    Unlisted,
}

impl Expectation<'_> {
    pub fn label(&self) -> String {
        match self {
            Expectation::Simple(r) => r.label.clone(),
            Expectation::NonSimple { .. } => "non-simple, g1 = 0".into(),
            Expectation::Infinite(c) => c.label(),
            Expectation::Excluded => "no admissible form".into(),
            Expectation::Unlisted => "no record".into(),
        }
    }
}

pub struct Catalog {
    records: Vec<ClassificationRecord>,
}

struct Row {
    label: &'static str,
    input: CaseInput,
    dims: [usize; 5],
    h0: (usize, &'static str),
    compact: Option<(&'static str, usize)>,
}

fn real(p: usize, q: usize) -> Signature {
    Signature::real(p, q)
}

fn inv(s: &str) -> Option<FormInvariants> {
    Some(s.parse().expect("catalog invariants"))
}

fn case(sig: Signature, copies: usize, base_form: Option<FormInvariants>, aux: Option<AuxForm>) -> CaseInput {
    CaseInput { sig, copies, base_form, aux }
}

fn rows() -> Vec<Row> {
    use AuxForm::*;
    let c = Signature::complex;
    let id2 = Some(Delta { p: 2, q: 0 });
    let d11 = Some(Delta { p: 1, q: 1 });
    let w = Some(Symplectic);
    let s12 = [3, 4, 7, 4, 3];
    let s24 = [3, 8, 14, 8, 3];
    let a4 = [4, 4, 8, 4, 4];
    let a5 = [4, 8, 11, 8, 4];
    let a7 = [4, 16, 23, 16, 4];
    let f4 = [7, 8, 22, 8, 7];
    let e6 = [8, 16, 30, 16, 8];
    let row = |label, input, dims, h0, compact| Row { label, input, dims, h0, compact };
    vec![
        row("sl(5,C)", case(c(4), 1, inv("+,-,+"), None), a4, (1, "C"), None),
        row("sl(6,C)", case(c(4), 2, inv("+,-,+"), id2), a5, (4, "sl(2,C)+C"), None),
        row("sl(7,C)", case(c(4), 3, inv("+,-,+"), Some(Delta { p: 3, q: 0 })), [4, 12, 16, 12, 4], (9, "sl(3,C)+C"), None),
        row("sp(3,C)", case(c(3), 2, None, w), s12, (3, "sp(1,C)"), None),
        row("sp(4,C)", case(c(3), 4, None, w), s24, (10, "sp(2,C)"), None),
        row("F4", case(c(7), 1, None, None), f4, (0, "0"), None),
        row("E6", case(c(8), 1, inv("-,+"), None), e6, (1, "C"), None),
        row("sp(1,2)", case(real(3, 0), 1, None, None), s12, (3, "sp(1)"), Some(("sp(1)+sp(2)", 13))),
        row("sp(1,2)", case(real(0, 3), 1, None, None), s12, (3, "sp(1)"), Some(("sp(1)+sp(2)", 13))),
        row("sp(3,R)", case(real(2, 1), 1, None, None), s12, (3, "sp(1,R)"), Some(("u(3)", 9))),
        row("sl(5,R)", case(real(2, 2), 1, None, None), a4, (1, "R"), Some(("so(5)", 10))),
        row("sl(3,H)", case(real(4, 0), 1, None, None), a5, (4, "sl(1,H)+R"), Some(("sp(3)", 21))),
        row("sl(3,H)", case(real(0, 4), 1, None, None), a5, (4, "sl(1,H)+R"), Some(("sp(3)", 21))),
        row("su(3,3)", case(real(3, 1), 1, inv("+,-"), None), a5, (4, "su(1,1)+R"), Some(("s(u(3)+u(3))", 17))),
        row("su(2,4)", case(real(3, 1), 1, inv("-,+"), None), a5, (4, "su(2)+R"), Some(("s(u(2)+u(4))", 19))),
        row("su(2,3)", case(real(1, 3), 1, None, None), a4, (1, "R"), Some(("s(u(2)+u(3))", 12))),
        row("F II", case(real(7, 0), 1, None, None), f4, (0, "0"), Some(("so(9)", 36))),
        row("F I", case(real(3, 4), 1, None, None), f4, (0, "0"), Some(("sp(3)+sp(1)", 24))),
        row("E IV", case(real(8, 0), 1, None, None), e6, (1, "R"), Some(("F4", 52))),
        row("E IV", case(real(0, 8), 1, None, None), e6, (1, "R"), Some(("F4", 52))),
        row("E III", case(real(7, 1), 1, None, None), e6, (1, "R"), Some(("so(10)+u(1)", 46))),
        row("E II", case(real(3, 5), 1, None, None), e6, (1, "R"), Some(("su(6)+su(2)", 38))),
        row("E I", case(real(4, 4), 1, None, None), e6, (1, "R"), Some(("sp(4)", 36))),
        row("sl(6,R)", case(real(2, 2), 2, None, id2), a5, (4, "sl(2,R)+R"), Some(("so(6)", 15))),
        row("sl(4,H)", case(real(4, 0), 2, None, id2), a7, (16, "sl(2,H)+R"), Some(("sp(4)", 36))),
        row("su(4,4)", case(real(3, 1), 2, inv("+,-"), id2), a7, (16, "su(2,2)+R"), Some(("s(u(4)+u(4))", 31))),
        row("su(2,6)", case(real(3, 1), 2, inv("-,+"), id2), a7, (16, "su(4)+R"), Some(("s(u(2)+u(6))", 39))),
        row("su(2,4)", case(real(1, 3), 2, None, id2), a5, (4, "su(2)+R"), Some(("s(u(2)+u(4))", 19))),
        row("su(3,3)", case(real(1, 3), 2, None, d11), a5, (4, "su(1,1)+R"), Some(("s(u(3)+u(3))", 17))),
        row("sp(4,R)", case(real(2, 1), 2, None, id2), s24, (10, "sp(2,R)"), Some(("u(4)", 16))),
        row("sp(3,R)", case(real(1, 2), 2, None, w), s12, (3, "sp(1,R)"), Some(("u(3)", 9))),
        row("sp(1,3)", case(real(3, 0), 2, None, id2), s24, (10, "sp(2)"), Some(("sp(1)+sp(3)", 24))),
        row("sp(2,2)", case(real(3, 0), 2, None, d11), s24, (10, "sp(1,1)"), Some(("sp(2)+sp(2)", 20))),
    ]
}

impl Catalog {
    /// Builds the embedded catalog and checks every record.
    pub fn load() -> Result<Self> {
        use Origin::*;
        let records: Vec<ClassificationRecord> = rows()
            .into_iter()
            .map(|r| {
                let total = r.dims.iter().sum();
                let killing = r.compact.map(|(_, k)| (total - k, k));
                ClassificationRecord {
                    key: r.input.key(),
                    label: r.label.into(),
                    dims: r.dims.to_vec(),
                    h0_dim: r.h0.0,
                    h0_label: r.h0.1.into(),
                    total,
                    compact: r.compact.map(|(l, d)| CompactPart { label: l.into(), dim: d }),
                    killing,
                    origins: RecordOrigins {
                        dims: vec![Table, Table, Computed, Table, Table],
                        h0: Table,
                        total: Computed,
                        killing: killing.map(|_| Computed),
                    },
                    input: r.input,
                }
            })
            .collect();
        for r in &records {
            r.check()?;
        }
        Ok(Catalog { records })
    }

    pub fn records(&self) -> &[ClassificationRecord] {
        &self.records
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.records)?)
    }

    /// Expected outcome for an input with a resolved form choice.
    pub fn lookup(&self, input: &CaseInput) -> Expectation<'_> {
        let simple = self.records.iter().find(|r| {
            let want = &r.input;
            want.sig == input.sig
                && want.copies == input.copies
                && want.aux == input.aux
                && match (want.base_form, input.base_form) {
                    (None, _) => true,
                    (Some(w), Some(got)) => w.matches(&got),
                    (Some(_), None) => false,
                }
        });
        if let Some(r) = simple {
            return Expectation::Simple(r);
        }
        let sig = input.sig;
        let n = sig.n();
        if input.copies == 1 {
            if !n1_admissible(&sig) {
                return Expectation::Excluded;
            }
            if n <= 2 {
                return match sig.field {
                    FieldKind::Real if sig.p == 2 => {
                        Expectation::Infinite(ContactDims { ell: 1, field: FieldKind::Complex, realified: true })
                    }
                    _ => Expectation::Infinite(ContactDims { ell: 1, field: sig.field, realified: false }),
                };
            }
            let listed = self.records.iter().any(|r| r.input.copies == 1 && r.input.sig == sig);
            if !listed {
                return Expectation::NonSimple { dim_so: n * (n - 1) / 2 };
            }
            return Expectation::Unlisted;
        }
        if sig == Signature::real(0, 1) && input.copies == 2 && input.aux == Some(AuxForm::Symplectic) {
            return Expectation::Infinite(ContactDims { ell: 1, field: FieldKind::Real, realified: false });
        }
        Expectation::Unlisted
    }
}

/// Whether an extended translation algebra with `N = 1` exists.
pub fn n1_admissible(sig: &Signature) -> bool {
    let n = sig.n() % 8;
    match sig.field {
        FieldKind::Complex => !matches!(n, 1..=3),
        FieldKind::Real => {
            let s = (sig.p as i64 - sig.q as i64).rem_euclid(8);
            !matches!((n, s), (1, 7) | (2, 6) | (2, 0) | (3, 7))
        }
    }
}

/// Real signatures with `lo ≤ p+q ≤ hi`, in order of `n` then decreasing `p`.
pub fn real_signatures(lo: usize, hi: usize) -> Vec<Signature> {
    (lo..=hi).flat_map(|n| (0..=n).rev().map(move |p| Signature::real(p, n - p))).collect()
}

/// N=1 inputs expected to be non-simple with `3 ≤ dim V ≤ 9`.
pub fn nonsimple_cases(catalog: &Catalog) -> Vec<CaseInput> {
    let complex = (3..=9).map(Signature::complex);
    real_signatures(3, 9)
        .into_iter()
        .chain(complex)
        .map(CaseInput::n1)
        .filter(|c| matches!(catalog.lookup(c), Expectation::NonSimple { .. }))
        .collect()
}

/// N=1 inputs for which no extended translation algebra exists, `dim V ≤ 9`.
pub fn excluded_cases() -> Vec<CaseInput> {
    let complex = (1..=9).map(Signature::complex);
    real_signatures(1, 9).into_iter().chain(complex).filter(|s| !n1_admissible(s)).map(CaseInput::n1).collect()
}

/// The infinite cases: `(1,0)` and `(2,0)` with `N = 1`, `(0,1)` with `N = 2`.
pub fn contact_cases() -> Vec<CaseInput> {
    vec![
        CaseInput::n1(Signature::real(1, 0)),
        CaseInput::n1(Signature::real(2, 0)),
        case(Signature::real(0, 1), 2, None, Some(AuxForm::Symplectic)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_are_consistent() {
        let c = Catalog::load().unwrap();
        assert_eq!(c.records().len(), 33);
        let mut keys: Vec<&str> = c.records().iter().map(|r| r.key.as_str()).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 33);
    }

    #[test]
    fn contact_dims() {
        let got: Vec<usize> = (-2..=4).map(|p| contact_dim(1, p)).collect();
        assert_eq!(got, vec![1, 2, 4, 6, 9, 12, 16]);
        assert_eq!(contact_dim(2, -1), 4);
        for ell in 1..5 {
            assert_eq!(contact_dim(ell, 0), 2 * ell * ell + ell + 1);
        }
    }

    #[test]
    fn lookups() {
        let c = Catalog::load().unwrap();
        let e6 = CaseInput { base_form: inv("-,+,+"), ..CaseInput::n1(Signature::complex(8)) };
        match c.lookup(&e6) {
            Expectation::Simple(r) => assert_eq!((r.label.as_str(), r.total, r.h0_dim), ("E6", 78, 1)),
            other => panic!("{other:?}"),
        }
        match c.lookup(&CaseInput::n1(real(4, 4))) {
            Expectation::Simple(r) => assert_eq!(r.killing, Some((42, 36))),
            other => panic!("{other:?}"),
        }
        assert!(matches!(c.lookup(&CaseInput::n1(real(1, 0))), Expectation::Infinite(ContactDims { ell: 1, .. })));
        assert_eq!(c.lookup(&CaseInput::n1(real(0, 2))), Expectation::Excluded);
        assert_eq!(c.lookup(&CaseInput::n1(real(5, 0))), Expectation::NonSimple { dim_so: 10 });
        assert_eq!(c.lookup(&CaseInput::n1(Signature::complex(9))), Expectation::Excluded);
        let a5 = case(Signature::complex(4), 2, inv("+,-,+"), Some(AuxForm::identity(2)));
        match c.lookup(&a5) {
            Expectation::Simple(r) => assert_eq!((r.total, r.h0_dim), (35, 4)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn admissibility_pattern() {
        let ex: Vec<String> = excluded_cases().iter().filter(|c| c.sig.n() <= 3).map(|c| c.sig.to_string()).collect();
        assert_eq!(
            ex,
            [
                "real (0,1)",
                "real (1,1)",
                "real (0,2)",
                "real (1,2)",
                "complex n=1",
                "complex n=2",
                "complex n=3"
            ]
        );
    }
}
