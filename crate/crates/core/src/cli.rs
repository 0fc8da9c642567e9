//! Command-line front end: case pipeline, reports, algebra dumps and the
//! table verification driver.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::catalog::{
    contact_cases, excluded_cases, nonsimple_cases, AuxForm, CaseInput, Catalog, Expectation,
};
use crate::clifford::{build_clifford_rep, CliffordModule, CliffordRep, Signature, Variant};
use crate::error::{EtapError, Result};
use crate::eta::{build_eta, ExtendedTranslationAlgebra};
use crate::prolong::{full_prolongation, max_degree_from_env, GradedLieAlgebra, ProlongationReport};
use crate::scalar::{Field, FieldKind, Gaussian, Rational};
use crate::spinforms::{
    build_tensor_form, classify_form, delta_form, eta_family, form_pieces, homogeneous_forms, invariant_form_space,
    real_signature, symplectic_form, AdmissibleForm, FormContext, FormInvariants, FormPiece, FormVerdict,
};
use crate::structure::{
    alpha_form, check_grading_element, check_h0_in_so_alpha, check_killing_invariance, check_phi_equivariance,
    decompose_g0, identify, killing_and_radical, phi_map, psi_automorphism, Fingerprint, G0Summary, KillingData,
};

/// How the form on `S` is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormSelector {
    /// First nondegenerate homogeneous piece.
    Default,
    /// Index into the enumerated basis of the candidate family.
    Index(usize),
    Invariants(FormInvariants),
}

/// Everything needed to run one case end to end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseSpec {
    pub sig: Signature,
    pub copies: usize,
    pub variant: Variant,
    pub form: FormSelector,
    /// `None` picks the identity when the form on `S` has `τσ = −1`,
    /// the symplectic form otherwise.
    pub aux: Option<AuxForm>,
    pub max_degree: usize,
}

impl CaseSpec {
    pub fn new(sig: Signature) -> Self {
        CaseSpec {
            sig,
            copies: 1,
            variant: Variant::First,
            form: FormSelector::Default,
            aux: None,
            max_degree: crate::prolong::DEFAULT_MAX_DEGREE,
        }
    }

    pub fn from_input(input: &CaseInput) -> Self {
        CaseSpec {
            copies: input.copies,
            form: input.base_form.map_or(FormSelector::Default, FormSelector::Invariants),
            aux: input.aux,
            ..CaseSpec::new(input.sig)
        }
    }

    pub fn copies(mut self, n: usize) -> Self {
        self.copies = n;
        self
    }

    pub fn form(mut self, f: FormSelector) -> Self {
        self.form = f;
        self
    }

    pub fn aux(mut self, a: AuxForm) -> Self {
        self.aux = Some(a);
        self
    }

    pub fn max_degree(mut self, d: usize) -> Self {
        self.max_degree = d;
        self
    }
}

/// A form choice resolved against a concrete module.
#[derive(Clone, Debug)]
pub struct ResolvedForm<F> {
    pub input: CaseInput,
    pub module: CliffordModule<F>,
    pub form: AdmissibleForm<F>,
}

fn aux_matrix<F: Field>(aux: AuxForm, n: usize) -> Result<crate::linalg::Matrix<F>> {
    match aux {
        AuxForm::Delta { p, q } if p + q == n => Ok(delta_form(p, q)),
        AuxForm::Delta { p, q } => Err(EtapError::Usage(format!("multiplicity form delta({p},{q}) does not match N = {n}"))),
        AuxForm::Symplectic => symplectic_form(n),
    }
}

/// The basis of forms on `S` with `τσ = ts`, ordered `τ = +` first.
pub fn family_basis<F: Field>(ctx: &FormContext<F>, ts: i8) -> Vec<(FormInvariants, crate::linalg::Matrix<F>)> {
    if ts == -1 {
        return eta_family(ctx);
    }
    let mut out = Vec::new();
    for tau in [1i8, -1] {
        let inv = FormInvariants::new(tau, tau, None);
        out.extend(homogeneous_forms(ctx, inv).into_iter().map(|b| (inv, b)));
    }
    out
}

fn piece_list<F>(pieces: &[&FormPiece<F>]) -> String {
    let v: Vec<String> = pieces
        .iter()
        .map(|p| format!("{}{}", p.invariants, if p.representative.is_some() { "" } else { " (degenerate)" }))
        .collect();
    if v.is_empty() {
        "none".into()
    } else {
        v.join(", ")
    }
}

/// Picks the form on `S`, the multiplicity form and the resulting form on `W`.
pub fn resolve_form<F: Field>(spec: &CaseSpec, rep: &CliffordRep<F>) -> Result<ResolvedForm<F>> {
    let n = spec.copies;
    if n == 0 {
        return Err(EtapError::Usage("N must be at least 1".into()));
    }
    let ctx1 = FormContext::new(rep.multiple(1));
    let pieces = form_pieces(&ctx1);
    let accepts = |p: &FormPiece<F>| match &spec.form {
        FormSelector::Invariants(w) => w.matches(&p.invariants),
        _ => true,
    };
    let aux = match (n, spec.aux) {
        (1, None) => None,
        (1, Some(_)) => return Err(EtapError::Usage("a multiplicity form needs N > 1".into())),
        (_, Some(a)) => Some(a),
        (_, None) => {
            let eta_ok = pieces
                .iter()
                .any(|p| p.invariants.epsilon().is_some() && p.representative.is_some() && accepts(p));
            Some(if eta_ok { AuxForm::identity(n) } else { AuxForm::Symplectic })
        }
    };
    let ts: i8 = if aux == Some(AuxForm::Symplectic) { 1 } else { -1 };
    let family: Vec<&FormPiece<F>> = pieces.iter().filter(|p| p.invariants.tau * p.invariants.sigma == ts).collect();
    let (b, base_inv) = match &spec.form {
        FormSelector::Index(k) => {
            let basis = family_basis(&ctx1, ts);
            let (inv, b) = basis.get(*k).ok_or_else(|| {
                EtapError::FormSelection(format!("form index {k} out of range, {} candidates", basis.len()))
            })?;
            match classify_form(b, &ctx1)? {
                FormVerdict::Admissible(f) => (f.gram, f.invariants),
                FormVerdict::Rejected(r) => {
                    return Err(EtapError::FormSelection(format!("form {k} in the {inv} piece is rejected: {r}")))
                }
            }
        }
        FormSelector::Invariants(want) => {
            let matching: Vec<&FormPiece<F>> = family.iter().copied().filter(|p| want.matches(&p.invariants)).collect();
            match matching.as_slice() {
                [] => {
                    return Err(EtapError::FormSelection(format!(
                        "no form with invariants {want}; candidates: {}",
                        piece_list(&family)
                    )))
                }
                [p] => match &p.representative {
                    Some(b) => (b.clone(), p.invariants),
                    None => return Err(EtapError::FormSelection(format!("every form in the {} piece is degenerate", p.invariants))),
                },
                many => {
                    return Err(EtapError::FormSelection(format!(
                        "invariants {want} are ambiguous; candidates: {}",
                        piece_list(many)
                    )))
                }
            }
        }
        FormSelector::Default => match family.iter().find(|p| p.representative.is_some()) {
            Some(p) => (p.representative.clone().expect("checked"), p.invariants),
            None => {
                return Err(EtapError::FormSelection(format!(
                    "no admissible nondegenerate form on S for {}; pieces: {}",
                    spec.sig,
                    piece_list(&family)
                )))
            }
        },
    };
    let ctx = match aux {
        None => ctx1,
        Some(_) => FormContext::new(rep.multiple(n)),
    };
    let gram = match aux {
        None => b,
        Some(a) => build_tensor_form(&b, &aux_matrix(a, n)?)?,
    };
    let form = match classify_form(&gram, &ctx)? {
        FormVerdict::Admissible(f) => f,
        FormVerdict::Rejected(r) => return Err(EtapError::FormSelection(format!("form on W is rejected: {r}"))),
    };
    if form.epsilon().is_none() {
        return Err(EtapError::FormSelection(format!("form on W has invariants {} with tau*sigma = +1", form.invariants)));
    }
    Ok(ResolvedForm {
        input: CaseInput { sig: spec.sig, copies: n, base_form: Some(base_inv), aux },
        module: ctx.module,
        form,
    })
}

/// Whether some nondegenerate form on `S` has `τσ = −1`.
pub fn admissible_form_exists(sig: Signature) -> Result<bool> {
    fn go<F: Field>(sig: Signature) -> Result<bool> {
        let rep = build_clifford_rep::<F>(sig, Variant::First)?;
        let ctx = FormContext::new(rep.multiple(1));
        Ok(form_pieces(&ctx).iter().any(|p| p.invariants.epsilon().is_some() && p.representative.is_some()))
    }
    match sig.field {
        FieldKind::Real => go::<Rational>(sig),
        FieldKind::Complex => go::<Gaussian>(sig),
    }
}

/// An extended translation algebra together with its prolongation.
#[derive(Clone, Debug)]
pub struct Case<F> {
    pub input: CaseInput,
    pub variant: Option<Variant>,
    pub eta: ExtendedTranslationAlgebra<F>,
    pub algebra: GradedLieAlgebra<F>,
    pub prolongation: ProlongationReport,
}

pub fn build_case<F: Field>(spec: &CaseSpec) -> Result<Case<F>> {
    if spec.sig.field != F::KIND {
        return Err(EtapError::Usage(format!("{} needs {:?} scalars", spec.sig, spec.sig.field)));
    }
    let rep = build_clifford_rep::<F>(spec.sig, spec.variant)?;
    let variant = rep.variant;
    let r = resolve_form(spec, &rep)?;
    let eta = build_eta(r.module, r.form)?;
    let (mut algebra, prolongation) = full_prolongation(&eta, spec.max_degree)?;
    algebra.provenance = r.input.to_string();
    Ok(Case { input: r.input, variant, eta, algebra, prolongation })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeDim {
    pub deg: i32,
    pub dim: usize,
}

fn degree_dims<F: Field>(g: &GradedLieAlgebra<F>) -> Vec<DegreeDim> {
    (0..g.dims.len()).map(|k| DegreeDim { deg: k as i32 - 2, dim: g.dims[k] }).collect()
}

/// Violation counts of the algebra-level checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AlgebraChecks {
    pub antisymmetry: usize,
    pub grading: usize,
    pub jacobi: usize,
    pub transitivity: usize,
    pub killing_invariance: Option<usize>,
}

impl AlgebraChecks {
    pub fn total(&self) -> usize {
        self.antisymmetry + self.grading + self.jacobi + self.transitivity + self.killing_invariance.unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct KillingSummary {
    pub rank: usize,
    /// `(n₊, n₋, n₀)`, real algebras only.
    pub signature: Option<(usize, usize, usize)>,
    pub semisimple: bool,
    pub radical_dim: usize,
    pub centroid_dim: Option<usize>,
    pub simple: Option<bool>,
}

impl<F> From<&KillingData<F>> for KillingSummary {
    fn from(k: &KillingData<F>) -> Self {
        KillingSummary {
            rank: k.rank,
            signature: k.signature,
            semisimple: k.semisimple,
            radical_dim: k.radical_dim,
            centroid_dim: k.centroid_dim,
            simple: k.simple,
        }
    }
}

/// Everything computable from the brackets alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Analysis {
    pub field: FieldKind,
    pub degrees: Vec<DegreeDim>,
    pub truncated: bool,
    pub total: usize,
    pub dim_h0: usize,
    pub checks: AlgebraChecks,
    pub killing: Option<KillingSummary>,
    /// Catalog label, or `unrecognized`.
    pub identification: String,
    pub fingerprint: Fingerprint,
}

pub fn analyze_algebra<F: Field>(g: &GradedLieAlgebra<F>, catalog: &Catalog) -> Result<(Analysis, Option<KillingData<F>>)> {
    let killing = if g.truncated { None } else { Some(killing_and_radical(g)?) };
    let checks = AlgebraChecks {
        antisymmetry: g.check_antisymmetry(),
        grading: g.check_grading(),
        jacobi: g.check_jacobi(),
        transitivity: g.check_transitivity(),
        killing_invariance: killing.as_ref().map(|k| check_killing_invariance(g, &k.gram)),
    };
    let fingerprint = Fingerprint::of(g, killing.as_ref());
    let identification = identify(catalog, &fingerprint).map_or_else(|| "unrecognized".to_string(), |r| r.label.clone());
    let a = Analysis {
        field: g.field,
        degrees: degree_dims(g),
        truncated: g.truncated,
        total: g.dim(),
        dim_h0: fingerprint.dim_h0,
        checks,
        killing: killing.as_ref().map(KillingSummary::from),
        identification,
        fingerprint,
    };
    Ok((a, killing))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AlphaSummary {
    pub vectors: (usize, usize, usize),
    pub signature: Option<(usize, usize)>,
    pub h0_violations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PsiSummary {
    pub automorphism_violations: usize,
    pub phi_relation_violations: usize,
}

/// Checks that need the extended translation algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StructureChecks {
    pub g0: G0Summary,
    pub grading_element: usize,
    pub alpha: Option<AlphaSummary>,
    /// `None` for infinite prolongations, where `φ` need not be injective.
    pub phi_dim: Option<usize>,
    pub phi_equivariance: usize,
    pub psi: Option<PsiSummary>,
}

impl StructureChecks {
    pub fn total(&self) -> usize {
        self.grading_element
            + self.alpha.as_ref().map_or(0, |a| a.h0_violations)
            + self.phi_equivariance
            + self.psi.as_ref().map_or(0, |p| p.automorphism_violations + p.phi_relation_violations)
    }
}

/// Runs the decomposition, `α`, `φ` and (for simple outcomes) `ψ` checks.
pub fn structure_checks<F: Field>(
    g: &GradedLieAlgebra<F>,
    eta: &ExtendedTranslationAlgebra<F>,
    simple: bool,
) -> Result<StructureChecks> {
    let dec = decompose_g0(g, eta)?;
    let alpha = if eta.dim_v() >= 3 {
        let a = alpha_form(eta, 0, 1, 2)?;
        Some(AlphaSummary {
            vectors: (0, 1, 2),
            signature: real_signature(&a).filter(|_| g.field == FieldKind::Real).map(|(p, m, _)| (p, m)),
            h0_violations: check_h0_in_so_alpha(g, &dec, &a),
        })
    } else {
        None
    };
    let phi = if g.truncated { None } else { Some(phi_map(g, eta)?) };
    let phi_equivariance = phi.as_ref().map_or(0, |phi| check_phi_equivariance(g, eta, &dec, phi));
    let psi = match &phi {
        Some(phi) if simple => {
            let psi = psi_automorphism(g, eta, 0)?;
            Some(PsiSummary {
                automorphism_violations: psi.check_automorphism(g),
                phi_relation_violations: psi.check_phi_relation(g, eta, phi),
            })
        }
        _ => None,
    };
    Ok(StructureChecks {
        g0: dec.summary(),
        grading_element: check_grading_element(g, &dec.grading),
        alpha,
        phi_dim: phi.as_ref().map(|p| p.images.len()),
        phi_equivariance,
        psi,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
    Unlisted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogVerdict {
    pub expected: String,
    pub verdict: Verdict,
    pub diffs: Vec<String>,
}

/// Compares an analysis with what the catalog predicts.
pub fn compare(exp: &Expectation<'_>, a: &Analysis) -> CatalogVerdict {
    let dim = |deg: i32| a.degrees.iter().find(|d| d.deg == deg).map_or(0, |d| d.dim);
    let mut diffs = Vec::new();
    match exp {
        Expectation::Simple(r) => diffs = a.fingerprint.diff(r),
        Expectation::NonSimple { dim_so } => {
            if a.truncated {
                diffs.push("expected a finite algebra".into());
            }
            if dim(1) != 0 {
                diffs.push(format!("expected g1 = 0, got dim {}", dim(1)));
            }
            if a.killing.as_ref().is_some_and(|k| k.semisimple) {
                diffs.push("expected a degenerate Killing form".into());
            }
            if dim(0) != dim_so + 1 + a.dim_h0 {
                diffs.push(format!("dim g0 = {} is not {} + 1 + {}", dim(0), dim_so, a.dim_h0));
            }
        }
        Expectation::Infinite(c) => {
            if !a.truncated {
                diffs.push("expected an infinite prolongation".into());
            }
            for d in &a.degrees {
                if d.dim != c.dim(d.deg) {
                    diffs.push(format!("dim g{}: expected {}, got {}", d.deg, c.dim(d.deg), d.dim));
                }
            }
        }
        Expectation::Excluded => diffs.push("an admissible form exists".into()),
        Expectation::Unlisted => {}
    }
    let verdict = match (exp, diffs.is_empty()) {
        (Expectation::Unlisted, _) => Verdict::Unlisted,
        (_, true) => Verdict::Match,
        (_, false) => Verdict::Mismatch,
    };
    CatalogVerdict { expected: exp.label(), verdict, diffs }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InputEcho {
    pub signature: String,
    pub field: FieldKind,
    pub dim_v: usize,
    pub copies: usize,
    pub variant: Option<Variant>,
    /// Invariants of the chosen form on `S`.
    pub form: String,
    /// Invariants of the resulting form on `W`.
    pub form_on_w: String,
    pub aux: Option<String>,
    pub max_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub input: InputEcho,
    pub analysis: Analysis,
    pub structure: StructureChecks,
    pub catalog: CatalogVerdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing_ms: Option<u64>,
}

impl RunReport {
    pub fn consistent(&self) -> bool {
        self.analysis.checks.total() == 0 && self.structure.total() == 0
    }
}

/// Field-independent JSON form of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AlgebraDump {
    pub field: FieldKind,
    pub degrees: Vec<DegreeDim>,
    pub basis_labels: Vec<String>,
    /// `[i, j, k, c]`: `[b_i, b_j]` has coefficient `c` on `b_k`, `i < j`.
    pub brackets: Vec<(usize, usize, usize, String)>,
    pub provenance: String,
    /// Whether the top degree is a cutoff rather than the end of the algebra.
    #[serde(default)]
    pub truncated: bool,
}

pub fn dump_algebra<F: Field>(g: &GradedLieAlgebra<F>) -> AlgebraDump {
    AlgebraDump {
        field: g.field,
        degrees: degree_dims(g),
        basis_labels: g.labels.clone(),
        brackets: g.structure_constants().into_iter().map(|(i, j, k, c)| (i, j, k, c.to_string())).collect(),
        provenance: g.provenance.clone(),
        truncated: g.truncated,
    }
}

/// An algebra over either base field.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyAlgebra {
    Real(GradedLieAlgebra<Rational>),
    Complex(GradedLieAlgebra<Gaussian>),
}

impl AnyAlgebra {
    pub fn from_dump(d: &AlgebraDump) -> Result<Self> {
        fn load<F: Field>(d: &AlgebraDump) -> Result<GradedLieAlgebra<F>> {
            if d.degrees.len() < 2 || d.degrees.iter().enumerate().any(|(k, x)| x.deg != k as i32 - 2) {
                return Err(EtapError::Parse("degrees must be consecutive starting at -2".into()));
            }
            let entries = d
                .brackets
                .iter()
                .map(|(i, j, k, c)| Ok((*i, *j, *k, c.parse::<F>()?)))
                .collect::<Result<Vec<_>>>()?;
            GradedLieAlgebra::from_structure_constants(
                d.field,
                d.degrees.iter().map(|x| x.dim).collect(),
                d.basis_labels.clone(),
                d.provenance.clone(),
                d.truncated,
                entries,
            )
        }
        Ok(match d.field {
            FieldKind::Real => AnyAlgebra::Real(load(d)?),
            FieldKind::Complex => AnyAlgebra::Complex(load(d)?),
        })
    }

    pub fn dump(&self) -> AlgebraDump {
        match self {
            AnyAlgebra::Real(g) => dump_algebra(g),
            AnyAlgebra::Complex(g) => dump_algebra(g),
        }
    }

    pub fn analyze(&self, catalog: &Catalog) -> Result<Analysis> {
        match self {
            AnyAlgebra::Real(g) => Ok(analyze_algebra(g, catalog)?.0),
            AnyAlgebra::Complex(g) => Ok(analyze_algebra(g, catalog)?.0),
        }
    }
}

/// Report and algebra dump of one case.
#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub report: RunReport,
    pub dump: AlgebraDump,
}

fn run_case_in<F: Field>(spec: &CaseSpec, catalog: &Catalog) -> Result<CaseOutcome> {
    let start = Instant::now();
    let case = build_case::<F>(spec)?;
    let g = &case.algebra;
    let (analysis, killing) = analyze_algebra(g, catalog)?;
    let simple = killing.as_ref().and_then(|k| k.simple).unwrap_or(false);
    let structure = structure_checks(g, &case.eta, simple)?;
    let catalog_verdict = compare(&catalog.lookup(&case.input), &analysis);
    let input = InputEcho {
        signature: spec.sig.to_string(),
        field: spec.sig.field,
        dim_v: spec.sig.n(),
        copies: spec.copies,
        variant: case.variant,
        form: case.input.base_form.map(|f| f.to_string()).unwrap_or_default(),
        form_on_w: case.eta.form.invariants.to_string(),
        aux: case.input.aux.map(|a| a.to_string()),
        max_degree: spec.max_degree,
    };
    Ok(CaseOutcome {
        report: RunReport {
            input,
            analysis,
            structure,
            catalog: catalog_verdict,
            timing_ms: Some(start.elapsed().as_millis() as u64),
        },
        dump: dump_algebra(g),
    })
}

/// Builds, prolongs and analyzes one case.
pub fn run_case(spec: &CaseSpec, catalog: &Catalog) -> Result<CaseOutcome> {
    match spec.sig.field {
        FieldKind::Real => run_case_in::<Rational>(spec, catalog),
        FieldKind::Complex => run_case_in::<Gaussian>(spec, catalog),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Complex,
    Real,
    N1,
    Contact,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TableEntry {
    pub key: String,
    pub input: String,
    pub expected: String,
    pub verdict: Verdict,
    pub diffs: Vec<String>,
    pub fingerprint: Option<Fingerprint>,
    pub identification: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableSummary {
    pub suite: Suite,
    pub passed: usize,
    pub failed: usize,
    pub entries: Vec<TableEntry>,
}

enum SuiteCase {
    Run(CaseSpec),
    Excluded(Signature),
}

fn suite_cases(suite: Suite, catalog: &Catalog) -> Vec<(String, String, SuiteCase)> {
    let mut out: Vec<(String, String, SuiteCase)> = Vec::new();
    let push_run = |out: &mut Vec<_>, input: &CaseInput, spec: CaseSpec| {
        out.push((input.key(), input.to_string(), SuiteCase::Run(spec)));
    };
    let records = catalog.records().iter().filter(|r| match suite {
        Suite::Complex => r.field() == FieldKind::Complex,
        Suite::Real => r.field() == FieldKind::Real,
        Suite::N1 => r.input.copies == 1,
        Suite::Contact => false,
        Suite::All => true,
    });
    for r in records {
        push_run(&mut out, &r.input, CaseSpec::from_input(&r.input));
    }
    if matches!(suite, Suite::N1 | Suite::All) {
        for c in nonsimple_cases(catalog) {
            push_run(&mut out, &c, CaseSpec::from_input(&c));
        }
        for c in excluded_cases() {
            out.push((c.key(), c.to_string(), SuiteCase::Excluded(c.sig)));
        }
    }
    if matches!(suite, Suite::Contact | Suite::N1 | Suite::All) {
        for c in contact_cases() {
            if suite == Suite::N1 && c.copies != 1 {
                continue;
            }
            push_run(&mut out, &c, CaseSpec::from_input(&c).max_degree(4));
        }
    }
    out
}

/// Runs every case of a suite against the catalog.
pub fn verify_tables(suite: Suite, catalog: &Catalog) -> TableSummary {
    let mut entries = Vec::new();
    for (key, input, case) in suite_cases(suite, catalog) {
        let entry = match case {
            SuiteCase::Excluded(sig) => {
                let exists = admissible_form_exists(sig);
                let (verdict, diffs) = match exists {
                    Ok(false) => (Verdict::Match, Vec::new()),
                    Ok(true) => (Verdict::Mismatch, vec!["an admissible nondegenerate form exists".to_string()]),
                    Err(e) => (Verdict::Mismatch, vec![e.to_string()]),
                };
                TableEntry {
                    key,
                    input,
                    expected: Expectation::Excluded.label(),
                    verdict,
                    diffs,
                    fingerprint: None,
                    identification: None,
                }
            }
            SuiteCase::Run(spec) => match run_case(&spec, catalog) {
                Ok(o) => {
                    let mut diffs = o.report.catalog.diffs.clone();
                    let mut verdict = o.report.catalog.verdict;
                    if !o.report.consistent() {
                        diffs.push("internal consistency checks failed".into());
                        verdict = Verdict::Mismatch;
                    }
                    TableEntry {
                        key,
                        input,
                        expected: o.report.catalog.expected.clone(),
                        verdict,
                        diffs,
                        fingerprint: Some(o.report.analysis.fingerprint.clone()),
                        identification: Some(o.report.analysis.identification.clone()),
                    }
                }
                Err(e) => TableEntry {
                    key,
                    input,
                    expected: String::new(),
                    verdict: Verdict::Mismatch,
                    diffs: vec![e.to_string()],
                    fingerprint: None,
                    identification: None,
                },
            },
        };
        entries.push(entry);
    }
    let passed = entries.iter().filter(|e| e.verdict == Verdict::Match).count();
    TableSummary { suite, passed, failed: entries.len() - passed, entries }
}

fn sign_label(r: &RunReport) -> String {
    match r.input.field {
        FieldKind::Real => r.input.signature.trim_start_matches("real ").to_string(),
        FieldKind::Complex => format!("{}", r.input.dim_v),
    }
}

fn dims_label(d: &[DegreeDim]) -> String {
    let v: Vec<String> = d.iter().map(|x| x.dim.to_string()).collect();
    format!("({})", v.join(","))
}

/// Markdown rendering of a run report.
pub fn report_markdown(r: &RunReport) -> String {
    let a = &r.analysis;
    let dim = |deg: i32| a.degrees.iter().find(|d| d.deg == deg).map_or(0, |d| d.dim);
    let mut s = String::new();
    let _ = writeln!(s, "# {} N={}\n", r.input.signature, r.input.copies);
    let _ = writeln!(s, "| g | sign g-2 | dim g-1 | N | h0 | dims | Killing | catalog |");
    let _ = writeln!(s, "|---|---|---|---|---|---|---|---|");
    let killing = a
        .killing
        .as_ref()
        .map(|k| match k.signature {
            Some((p, m, z)) => format!("({p},{m},{z})"),
            None => format!("rank {}", k.rank),
        })
        .unwrap_or_else(|| "-".into());
    let _ = writeln!(
        s,
        "| {} | {} | {} | {} | {} | {}{} | {} | {} |",
        a.identification,
        sign_label(r),
        dim(-1),
        r.input.copies,
        a.dim_h0,
        dims_label(&a.degrees),
        if a.truncated { "..." } else { "" },
        killing,
        match r.catalog.verdict {
            Verdict::Match => format!("match: {}", r.catalog.expected),
            Verdict::Mismatch => format!("MISMATCH: {}", r.catalog.expected),
            Verdict::Unlisted => "no record".into(),
        }
    );
    let _ = writeln!(s, "\nform on S {}, form on W {}", r.input.form, r.input.form_on_w);
    if let Some(aux) = &r.input.aux {
        let _ = writeln!(s, "multiplicity form {aux}");
    }
    let g0 = &r.structure.g0;
    let _ = writeln!(
        s,
        "g0 = so(V) + KE + h0: {} = {} + 1 + {} (h0a {}, h0s {})",
        g0.dim_g0, g0.dim_so, g0.dim_h0, g0.dim_h0a, g0.dim_h0s
    );
    let _ = writeln!(
        s,
        "violations: algebra {}, structure {}",
        a.checks.total(),
        r.structure.total()
    );
    for d in &r.catalog.diffs {
        let _ = writeln!(s, "- {d}");
    }
    s
}

pub fn analysis_markdown(a: &Analysis) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "| g | dims | h0 | total | Killing | violations |");
    let _ = writeln!(s, "|---|---|---|---|---|---|");
    let killing = a
        .killing
        .as_ref()
        .map(|k| format!("rank {} {:?}", k.rank, k.signature.map(|(p, m, _)| (p, m))))
        .unwrap_or_else(|| "-".into());
    let _ = writeln!(
        s,
        "| {} | {} | {} | {} | {} | {} |",
        a.identification,
        dims_label(&a.degrees),
        a.dim_h0,
        a.total,
        killing,
        a.checks.total()
    );
    s
}

pub fn table_markdown(t: &TableSummary) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "| case | expected | identified | dims | Killing | verdict |");
    let _ = writeln!(s, "|---|---|---|---|---|---|");
    for e in &t.entries {
        let (dims, killing) = match &e.fingerprint {
            Some(f) => (
                format!("{:?}", f.dims),
                f.killing_signature.map_or("-".to_string(), |(p, m)| format!("({p},{m})")),
            ),
            None => ("-".into(), "-".into()),
        };
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} | {:?}{} |",
            e.input,
            e.expected,
            e.identification.as_deref().unwrap_or("-"),
            dims,
            killing,
            e.verdict,
            if e.diffs.is_empty() { String::new() } else { format!(": {}", e.diffs.join("; ")) }
        );
    }
    let _ = writeln!(s, "\n{} passed, {} failed", t.passed, t.failed);
    s
}

#[derive(Parser, Debug)]
#[command(name = "etap", version, about = "Extended translation algebras and their Tanaka prolongations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dump the Clifford generators of an irreducible module.
    Clifford(CliffordArgs),
    /// List the invariant bilinear forms on W.
    Forms(FormsArgs),
    /// Prolong an extended translation algebra and analyze the result.
    Prolong(ProlongArgs),
    /// Analyze an algebra dump.
    Analyze(AnalyzeArgs),
    /// Check the catalog end to end.
    VerifyTables(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct SigArgs {
    /// Real signature of V.
    #[arg(long, value_name = "P,Q", conflicts_with = "complex")]
    pub sig: Option<String>,
    /// Complex V of dimension --n.
    #[arg(long, requires = "n")]
    pub complex: bool,
    #[arg(long, value_name = "K")]
    pub n: Option<usize>,
}

impl SigArgs {
    pub fn signature(&self) -> Result<Signature> {
        match (&self.sig, self.complex, self.n) {
            (Some(s), false, _) => {
                let parts: Vec<&str> = s.split(',').collect();
                let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| EtapError::Parse(format!("invalid signature `{s}`")));
                match parts.as_slice() {
                    [p, q] => Ok(Signature::real(parse(p)?, parse(q)?)),
                    _ => Err(EtapError::Parse(format!("invalid signature `{s}`, expected P,Q"))),
                }
            }
            (None, true, Some(n)) => Ok(Signature::complex(n)),
            _ => Err(EtapError::Usage("give either --sig P,Q or --complex --n K".into())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    First,
    Second,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::First => Variant::First,
            VariantArg::Second => Variant::Second,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
}

#[derive(Args, Debug, Clone)]
pub struct CliffordArgs {
    #[command(flatten)]
    pub sig: SigArgs,
    #[arg(long, value_enum, default_value_t = VariantArg::First)]
    pub variant: VariantArg,
    /// Write the JSON to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct FormsArgs {
    #[command(flatten)]
    pub sig: SigArgs,
    #[arg(long = "N", default_value_t = 1)]
    pub copies: usize,
    #[arg(long, value_enum, default_value_t = VariantArg::First)]
    pub variant: VariantArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct ProlongArgs {
    #[command(flatten)]
    pub sig: SigArgs,
    #[arg(long = "N", default_value_t = 1)]
    pub copies: usize,
    #[arg(long, value_enum, default_value_t = VariantArg::First)]
    pub variant: VariantArg,
    /// Index into the enumerated basis of candidate forms on S.
    #[arg(long, conflicts_with = "form_invariants")]
    pub form: Option<usize>,
    /// Invariants of the form on S, e.g. `-,+` or `+,-,+`.
    #[arg(long, value_name = "T,S[,I]", allow_hyphen_values = true)]
    pub form_invariants: Option<String>,
    /// Multiplicity form for N > 1: `identity`, `symplectic` or `P,Q`.
    #[arg(long)]
    pub aux: Option<String>,
    /// Highest degree computed (default: ETAP_MAX_DEGREE or 6).
    #[arg(long)]
    pub max_degree: Option<usize>,
    /// Write the algebra dump to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Include wall-clock time in the report.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Debug, Clone)]
pub struct AnalyzeArgs {
    /// Algebra dump written by `prolong --out`.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, value_enum, default_value_t = Format::Md)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_aux(s: &str, n: usize) -> Result<AuxForm> {
    match s.trim() {
        "identity" => Ok(AuxForm::identity(n)),
        "symplectic" | "omega" => Ok(AuxForm::Symplectic),
        other => {
            let v: Vec<&str> = other.split(',').collect();
            let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| EtapError::Parse(format!("invalid multiplicity form `{s}`")));
            match v.as_slice() {
                [p, q] => Ok(AuxForm::Delta { p: parse(p)?, q: parse(q)? }),
                _ => Err(EtapError::Parse(format!("invalid multiplicity form `{s}`"))),
            }
        }
    }
}

impl ProlongArgs {
    pub fn spec(&self) -> Result<CaseSpec> {
        let form = match (&self.form, &self.form_invariants) {
            (Some(k), _) => FormSelector::Index(*k),
            (None, Some(s)) => FormSelector::Invariants(s.parse()?),
            (None, None) => FormSelector::Default,
        };
        Ok(CaseSpec {
            sig: self.sig.signature()?,
            copies: self.copies,
            variant: self.variant.into(),
            form,
            aux: self.aux.as_deref().map(|a| parse_aux(a, self.copies)).transpose()?,
            max_degree: self.max_degree.unwrap_or_else(max_degree_from_env),
        })
    }
}

fn matrix_strings<F: Field>(m: &crate::linalg::Matrix<F>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect()
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CliffordDump {
    signature: String,
    field: FieldKind,
    variant: Option<Variant>,
    dim_s: usize,
    /// Diagonal of the Gram matrix of `V`, matching the generator order.
    eta: Vec<i64>,
    gammas: Vec<Vec<Vec<String>>>,
}

fn clifford_json(sig: Signature, variant: Variant) -> Result<String> {
    fn go<F: Field>(sig: Signature, variant: Variant) -> Result<CliffordDump> {
        let rep = build_clifford_rep::<F>(sig, variant)?;
        Ok(CliffordDump {
            signature: sig.to_string(),
            field: sig.field,
            variant: rep.variant,
            dim_s: rep.dim_s(),
            eta: sig.eta(),
            gammas: rep.gammas.iter().map(matrix_strings).collect(),
        })
    }
    let d = match sig.field {
        FieldKind::Real => go::<Rational>(sig, variant)?,
        FieldKind::Complex => go::<Gaussian>(sig, variant)?,
    };
    Ok(serde_json::to_string_pretty(&d)?)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct FormEntry {
    index: usize,
    invariants: Option<String>,
    epsilon: Option<i8>,
    status: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct PieceEntry {
    invariants: String,
    epsilon: Option<i8>,
    dim: usize,
    nondegenerate: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct FormsListing {
    signature: String,
    copies: usize,
    dim_w: usize,
    split: String,
    dimension: usize,
    basis: Vec<FormEntry>,
    pieces: Vec<PieceEntry>,
    /// Dimension of the span of forms with `τσ = −1`.
    eta_dimension: usize,
    /// The basis that `prolong --form INDEX` indexes (forms on `S`).
    eta_basis: Vec<FormEntry>,
    default: Option<String>,
}

fn forms_listing(sig: Signature, copies: usize, variant: Variant) -> Result<FormsListing> {
    fn go<F: Field>(sig: Signature, copies: usize, variant: Variant) -> Result<FormsListing> {
        if copies == 0 {
            return Err(EtapError::Usage("N must be at least 1".into()));
        }
        let rep = build_clifford_rep::<F>(sig, variant)?;
        let ctx = FormContext::new(rep.multiple(copies));
        let space = invariant_form_space(&ctx);
        let basis = space
            .labels
            .iter()
            .enumerate()
            .map(|(index, l)| match l {
                Ok(inv) => FormEntry {
                    index,
                    invariants: Some(inv.to_string()),
                    epsilon: inv.epsilon(),
                    status: "admissible".into(),
                },
                Err(r) => FormEntry { index, invariants: None, epsilon: None, status: r.to_string() },
            })
            .collect();
        let pieces: Vec<PieceEntry> = form_pieces(&ctx)
            .iter()
            .map(|p| PieceEntry {
                invariants: p.invariants.to_string(),
                epsilon: p.invariants.epsilon(),
                dim: p.basis.len(),
                nondegenerate: p.representative.is_some(),
            })
            .collect();
        let eta_dimension = pieces.iter().filter(|p| p.epsilon.is_some()).map(|p| p.dim).sum();
        let ctx1 = FormContext::new(rep.multiple(1));
        let eta_basis = eta_family(&ctx1)
            .iter()
            .enumerate()
            .map(|(index, (inv, b))| {
                let status = match classify_form(b, &ctx1) {
                    Ok(FormVerdict::Admissible(_)) => "admissible".to_string(),
                    Ok(FormVerdict::Rejected(r)) => r.to_string(),
                    Err(e) => e.to_string(),
                };
                FormEntry { index, invariants: Some(inv.to_string()), epsilon: inv.epsilon(), status }
            })
            .collect();
        let default = resolve_form(&CaseSpec { variant, ..CaseSpec::new(sig).copies(copies) }, &rep)
            .ok()
            .map(|r| r.form.invariants.to_string());
        Ok(FormsListing {
            signature: sig.to_string(),
            copies,
            dim_w: ctx.dim(),
            split: ctx.split.label().into(),
            dimension: space.basis.len(),
            basis,
            pieces,
            eta_dimension,
            eta_basis,
            default,
        })
    }
    match sig.field {
        FieldKind::Real => go::<Rational>(sig, copies, variant),
        FieldKind::Complex => go::<Gaussian>(sig, copies, variant),
    }
}

fn forms_markdown(l: &FormsListing) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# invariant forms, {} N={} (dim W = {}, {})\n", l.signature, l.copies, l.dim_w, l.split);
    let _ = writeln!(s, "| invariants | epsilon | dim | nondegenerate |");
    let _ = writeln!(s, "|---|---|---|---|");
    for p in &l.pieces {
        let eps = p.epsilon.map_or("-".to_string(), |e| e.to_string());
        let _ = writeln!(s, "| {} | {} | {} | {} |", p.invariants, eps, p.dim, p.nondegenerate);
    }
    let _ = writeln!(s, "\nspace dimension {}, tau*sigma = -1 part {}", l.dimension, l.eta_dimension);
    if let Some(d) = &l.default {
        let _ = writeln!(s, "default form {d}");
    }
    s
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => {
            out.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                out.write_all(b"\n")?;
            }
        }
    }
    Ok(())
}

/// Executes a parsed command, writing reports to `out`. Returns the exit code.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Clifford(a) => {
            let text = clifford_json(a.sig.signature()?, a.variant.into())?;
            emit(out, a.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Forms(a) => {
            let l = forms_listing(a.sig.signature()?, a.copies, a.variant.into())?;
            let text = match a.format {
                Format::Json => serde_json::to_string_pretty(&l)?,
                Format::Md => forms_markdown(&l),
            };
            emit(out, a.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Prolong(a) => {
            let catalog = Catalog::load()?;
            let mut o = run_case(&a.spec()?, &catalog)?;
            if !a.timing {
                o.report.timing_ms = None;
            }
            if let Some(p) = &a.out {
                std::fs::write(p, serde_json::to_string_pretty(&o.dump)?)?;
            }
            let text = match a.format {
                Format::Json => serde_json::to_string_pretty(&o.report)?,
                Format::Md => report_markdown(&o.report),
            };
            emit(out, None, &text)?;
            Ok(if !o.report.consistent() {
                3
            } else if o.report.catalog.verdict == Verdict::Mismatch {
                1
            } else {
                0
            })
        }
        Command::Analyze(a) => {
            let catalog = Catalog::load()?;
            let dump: AlgebraDump = serde_json::from_str(&std::fs::read_to_string(&a.input)?)?;
            let analysis = AnyAlgebra::from_dump(&dump)?.analyze(&catalog)?;
            let text = match a.format {
                Format::Json => serde_json::to_string_pretty(&analysis)?,
                Format::Md => analysis_markdown(&analysis),
            };
            emit(out, a.out.as_deref(), &text)?;
            Ok(if analysis.checks.total() == 0 { 0 } else { 3 })
        }
        Command::VerifyTables(a) => {
            let catalog = Catalog::load()?;
            let t = verify_tables(a.suite, &catalog);
            let text = match a.format {
                Format::Json => serde_json::to_string_pretty(&t)?,
                Format::Md => table_markdown(&t),
            };
            emit(out, a.out.as_deref(), &text)?;
            Ok(if t.failed == 0 { 0 } else { 1 })
        }
    }
}

/// Entry point of the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match execute(&cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection_errors() {
        let rep = build_clifford_rep::<Rational>(Signature::real(3, 1), Variant::First).unwrap();
        let spec = CaseSpec::new(Signature::real(3, 1)).form(FormSelector::Invariants("+,+".parse().unwrap()));
        assert!(matches!(resolve_form(&spec, &rep), Err(EtapError::FormSelection(_))));
        let spec = CaseSpec::new(Signature::real(3, 1)).form(FormSelector::Index(99));
        assert!(matches!(resolve_form(&spec, &rep), Err(EtapError::FormSelection(_))));
        let rep = build_clifford_rep::<Rational>(Signature::real(0, 2), Variant::First).unwrap();
        assert!(matches!(resolve_form(&CaseSpec::new(Signature::real(0, 2)), &rep), Err(EtapError::FormSelection(_))));
    }

    #[test]
    fn auto_aux() {
        let rep = build_clifford_rep::<Rational>(Signature::real(1, 2), Variant::First).unwrap();
        let r = resolve_form(&CaseSpec::new(Signature::real(1, 2)).copies(2), &rep).unwrap();
        assert_eq!(r.input.aux, Some(AuxForm::Symplectic));
        let rep = build_clifford_rep::<Rational>(Signature::real(2, 1), Variant::First).unwrap();
        let r = resolve_form(&CaseSpec::new(Signature::real(2, 1)).copies(2), &rep).unwrap();
        assert_eq!(r.input.aux, Some(AuxForm::identity(2)));
    }

    #[test]
    fn dump_round_trip() {
        let catalog = Catalog::load().unwrap();
        let o = run_case(&CaseSpec::new(Signature::real(2, 1)), &catalog).unwrap();
        assert_eq!(o.report.catalog.verdict, Verdict::Match);
        let json = serde_json::to_string(&o.dump).unwrap();
        let back: AlgebraDump = serde_json::from_str(&json).unwrap();
        let a = AnyAlgebra::from_dump(&back).unwrap().analyze(&catalog).unwrap();
        assert_eq!(a, o.report.analysis);
        assert_eq!(a.identification, "sp(3,R)");
    }

    #[test]
    fn contact_case() {
        let catalog = Catalog::load().unwrap();
        let o = run_case(&CaseSpec::new(Signature::real(1, 0)).max_degree(4), &catalog).unwrap();
        assert_eq!(o.report.catalog.verdict, Verdict::Match, "{:?}", o.report.catalog.diffs);
        assert!(o.report.analysis.truncated);
    }

    #[test]
    fn aux_parsing() {
        assert_eq!(parse_aux("identity", 3).unwrap(), AuxForm::Delta { p: 3, q: 0 });
        assert_eq!(parse_aux("1,1", 2).unwrap(), AuxForm::Delta { p: 1, q: 1 });
        assert_eq!(parse_aux("symplectic", 2).unwrap(), AuxForm::Symplectic);
        assert!(parse_aux("x", 2).is_err());
    }
}
