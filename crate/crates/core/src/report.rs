//! End-to-end analysis of a germ and report serialization.
//!
//! The JSON schema is versioned by [`SCHEMA_VERSION`]. Polynomials are
//! stored in canonical printed form over the job's variable names and
//! classes in `H` as lists of `{exponents, coeff}` terms, so a report can
//! be re-checked without the library state that produced it.

use std::fmt::Write as _;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jetlocal::{self, ColengthResult, LctVerdict, DEFAULT_CUTOFF};
use crate::localcoh::{self, CohElem, CohTerm, KernelVerdict};
use crate::logvf::{self, Freeness, LogDerModule, LogDerivation};
use crate::polyring::{fmt_rat, parse_poly, parse_rat, Poly, Rat, Weights};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_TRUNCATION: u32 = 8;
/// Upper bound on generator subsets tried by the freeness search.
pub const FREENESS_SUBSETS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisOptions {
    pub cutoff: usize,
    pub truncation: u32,
    #[serde(default)]
    pub tags: Vec<String>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { cutoff: DEFAULT_CUTOFF, truncation: DEFAULT_TRUNCATION, tags: vec![] }
    }
}

impl AnalysisOptions {
    pub fn validate(&self) -> Result<()> {
        if self.cutoff < 2 {
            return Err(Error::InvalidClass(format!("cutoff must be at least 2, got {}", self.cutoff)));
        }
        if self.truncation < 1 {
            return Err(Error::InvalidClass("truncation must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct AnalysisJob {
    pub name: Option<String>,
    pub f: Poly,
    pub vars: Vec<String>,
    pub options: AnalysisOptions,
}

impl AnalysisJob {
    pub fn parse<S: AsRef<str>>(f: &str, vars: &[S], options: AnalysisOptions) -> Result<Self> {
        options.validate()?;
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let f = parse_poly(f, &vars)?;
        Ok(AnalysisJob { name: None, f, vars, options })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gates {
    pub singular_at_origin: bool,
    pub isolated: bool,
    /// Known only when implied by isolatedness.
    pub reduced: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colength {
    pub value: Option<usize>,
    /// `k` with `m^k` inside the ideal, when found.
    pub stabilization_order: Option<usize>,
}

impl From<&ColengthResult> for Colength {
    fn from(c: &ColengthResult) -> Self {
        Colength { value: c.finite(), stabilization_order: c.stabilization_order }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LctField {
    Holds,
    Fails { k: usize },
    NotApplicable { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSummary {
    pub multiplier: String,
    pub coefficients: Vec<String>,
    /// Trace of the linear part `δ_0`.
    pub trace: String,
}

impl GeneratorSummary {
    pub fn new(d: &LogDerivation, names: &[String]) -> Self {
        GeneratorSummary {
            multiplier: d.multiplier.render(names),
            coefficients: d.coefficients.iter().map(|s| s.render(names)).collect(),
            trace: fmt_rat(&d.linear_part().trace()),
        }
    }

    pub fn field(&self, names: &[String]) -> Result<LogDerivation> {
        Ok(LogDerivation {
            multiplier: parse_poly(&self.multiplier, names)?,
            coefficients: self.coefficients.iter().map(|s| parse_poly(s, names)).collect::<Result<_>>()?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TheoremCheck {
    /// No nonzero class of pole order `<= truncation` is killed by all
    /// logarithmic fields.
    Injective {
        truncation: u32,
        dimension: usize,
        /// Largest Euler eigenvalue on the truncation, when weights are known.
        euler_eigenvalue_max: Option<String>,
    },
    /// Quasihomogeneous germ with a nonzero truncated kernel.
    KernelFound { truncation: u32, kernel: Vec<Vec<CohTerm>> },
    InKernel { class: Vec<CohTerm>, certificate: Vec<CohTerm> },
    NotInKernel { class: Vec<CohTerm>, witness: GeneratorSummary, value: Vec<CohTerm> },
    Failed { reason: String },
    NotApplicable { reason: String },
}

impl TheoremCheck {
    pub fn label(&self) -> &'static str {
        match self {
            TheoremCheck::Injective { .. } => "injective",
            TheoremCheck::KernelFound { .. } => "kernel_found",
            TheoremCheck::InKernel { .. } => "in_kernel",
            TheoremCheck::NotInKernel { .. } => "not_in_kernel",
            TheoremCheck::Failed { .. } => "failed",
            TheoremCheck::NotApplicable { .. } => "not_applicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FreenessField {
    Free { basis: Vec<usize>, determinant: String, quotient: String },
    Inconclusive { subsets_checked: usize },
    NotChecked,
}

impl FreenessField {
    pub fn label(&self) -> &'static str {
        match self {
            FreenessField::Free { .. } => "free",
            FreenessField::Inconclusive { .. } => "inconclusive",
            FreenessField::NotChecked => "not_checked",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityReport {
    pub schema_version: u32,
    pub name: Option<String>,
    pub vars: Vec<String>,
    pub f: String,
    pub options: AnalysisOptions,
    pub gates: Gates,
    pub mu: Colength,
    pub tau: Colength,
    pub quasihomogeneous: Option<bool>,
    pub weights: Option<Vec<String>>,
    pub lct: LctField,
    pub derlog: Vec<GeneratorSummary>,
    pub theorem_check: TheoremCheck,
    pub freeness: FreenessField,
}

impl SingularityReport {
    pub fn mu(&self) -> Option<usize> {
        self.mu.value
    }

    pub fn tau(&self) -> Option<usize> {
        self.tau.value
    }

    pub fn lct_label(&self) -> String {
        match &self.lct {
            LctField::Holds => "holds".into(),
            LctField::Fails { k } => format!("fails:{k}"),
            LctField::NotApplicable { .. } => "not_applicable".into(),
        }
    }
}

fn terms_of(e: &CohElem) -> Vec<CohTerm> {
    e.to_terms()
}

fn lct_field(f: &Poly, weights: Option<&Weights>, qh: Option<bool>) -> LctField {
    match (qh, weights) {
        (Some(true), Some(w)) => match jetlocal::lct_check(f, w) {
            Ok(LctVerdict::Holds) => LctField::Holds,
            Ok(LctVerdict::Fails { k }) => LctField::Fails { k },
            Err(e) => LctField::NotApplicable { reason: e.to_string() },
        },
        (Some(true), None) => LctField::NotApplicable { reason: "no positive weights in the given coordinates".into() },
        (Some(false), _) => LctField::NotApplicable { reason: "not quasihomogeneous".into() },
        (None, _) => LctField::NotApplicable { reason: "not an isolated singular point".into() },
    }
}

fn freeness_field(module: &LogDerModule) -> FreenessField {
    match logvf::find_free_basis(module, FREENESS_SUBSETS) {
        Some((basis, Freeness::Free { determinant, quotient })) => {
            let names = Poly::default_names(module.f.nvars());
            FreenessField::Free { basis, determinant: determinant.render(&names), quotient: quotient.render(&names) }
        }
        _ => {
            let n = module.f.nvars();
            let g = module.generators.len();
            let total = if g < n { 0 } else { binomial(g, n) };
            FreenessField::Inconclusive { subsets_checked: total.min(FREENESS_SUBSETS) }
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn theorem_check(
    f: &Poly,
    module: &LogDerModule,
    qh: bool,
    weights: Option<&Weights>,
    options: &AnalysisOptions,
    names: &[String],
) -> TheoremCheck {
    let n = f.nvars();
    if qh {
        let r = localcoh::truncated_injectivity(f, module, options.truncation);
        if !r.is_injective() {
            return TheoremCheck::KernelFound {
                truncation: options.truncation,
                kernel: r.kernel.iter().map(terms_of).collect(),
            };
        }
        let euler_eigenvalue_max = weights.and_then(|w| {
            let deg = f.weighted_homogeneous_degree(w).ok()??;
            let w = w.scaled(&deg.recip());
            localcoh::euler_eigenvalues(&w, options.truncation).into_iter().map(|(_, l)| l).max().map(|l| fmt_rat(&l))
        });
        return TheoremCheck::Injective { truncation: options.truncation, dimension: r.dimension, euler_eigenvalue_max };
    }
    let unit = CohElem::unit(n);
    match localcoh::kernel_test(f, &unit, module, options.cutoff) {
        Ok(KernelVerdict::InKernel { certificate }) => {
            TheoremCheck::InKernel { class: terms_of(&unit), certificate: terms_of(&certificate) }
        }
        Ok(KernelVerdict::NotInKernel { witness, value }) => TheoremCheck::NotInKernel {
            class: terms_of(&unit),
            witness: GeneratorSummary::new(&witness, names),
            value: terms_of(&value),
        },
        Err(e) => TheoremCheck::Failed { reason: e.to_string() },
    }
}

/// Runs the full pipeline. Gate failures are recorded in the report.
pub fn analyze(job: &AnalysisJob) -> Result<SingularityReport> {
    job.options.validate()?;
    let f = &job.f;
    let n = f.nvars();
    if job.vars.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: job.vars.len() });
    }
    let names = &job.vars;
    let cutoff = job.options.cutoff;
    let singular = !f.is_zero() && f.in_m_squared();
    let (grad, j) = crate::polyring::jacobian_ideals(f);

    let module = logvf::derlog_generators(f);
    debug_assert!(module.verify());
    let derlog: Vec<GeneratorSummary> = module.generators.iter().map(|d| GeneratorSummary::new(d, names)).collect();

    let mu_r = jetlocal::colength(&grad, n, cutoff);
    let isolated = mu_r.finite().is_some();
    let mut report = SingularityReport {
        schema_version: SCHEMA_VERSION,
        name: job.name.clone(),
        vars: names.clone(),
        f: f.render(names),
        options: job.options.clone(),
        gates: Gates { singular_at_origin: singular, isolated, reduced: isolated.then_some(true) },
        mu: Colength::from(&mu_r),
        tau: Colength { value: None, stabilization_order: None },
        quasihomogeneous: None,
        weights: None,
        lct: LctField::NotApplicable { reason: String::new() },
        derlog,
        theorem_check: TheoremCheck::NotApplicable { reason: String::new() },
        freeness: FreenessField::NotChecked,
    };
    // the field subsets and determinants are built in the default names
    let freeness = freeness_field(&module);
    report.freeness = rename_freeness(freeness, n, names)?;

    if !singular {
        report.lct = LctField::NotApplicable { reason: "not singular at the origin".into() };
        report.theorem_check = TheoremCheck::NotApplicable { reason: "not singular at the origin".into() };
        return Ok(report);
    }
    if !isolated {
        report.lct = lct_field(f, None, None);
        report.theorem_check =
            TheoremCheck::NotApplicable { reason: format!("singular locus is not isolated (cutoff {cutoff})") };
        return Ok(report);
    }
    let tau_r = jetlocal::colength(&j, n, cutoff);
    report.tau = Colength::from(&tau_r);
    let qh = mu_r.finite() == tau_r.finite();
    report.quasihomogeneous = Some(qh);
    let weights = if qh { logvf::find_weights(f) } else { None };
    report.weights = weights.as_ref().map(|w| w.as_slice().iter().map(fmt_rat).collect());
    report.lct = lct_field(f, weights.as_ref(), Some(qh));
    report.theorem_check = theorem_check(f, &module, qh, weights.as_ref(), &job.options, names);
    Ok(report)
}

fn rename_freeness(field: FreenessField, n: usize, names: &[String]) -> Result<FreenessField> {
    Ok(match field {
        FreenessField::Free { basis, determinant, quotient } => {
            let default = Poly::default_names(n);
            FreenessField::Free {
                basis,
                determinant: parse_poly(&determinant, &default)?.render(names),
                quotient: parse_poly(&quotient, &default)?.render(names),
            }
        }
        other => other,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// Re-checks every certificate embedded in `r` from its serialized data.
pub fn verify_report(r: &SingularityReport) -> Result<()> {
    let bad = |m: String| Err(Error::CertificateInvalid(m));
    let names = &r.vars;
    let f = parse_poly(&r.f, names)?;
    let n = f.nvars();
    let fields: Vec<LogDerivation> = r.derlog.iter().map(|g| g.field(names)).collect::<Result<_>>()?;
    for (i, (d, g)) in fields.iter().zip(&r.derlog).enumerate() {
        if !d.verify(&f) {
            return bad(format!("generator {i} is not logarithmic"));
        }
        if parse_rat(&g.trace)? != d.linear_part().trace() {
            return bad(format!("generator {i} has a wrong trace"));
        }
    }
    if let (Some(mu), Some(tau), Some(qh)) = (r.mu.value, r.tau.value, r.quasihomogeneous) {
        if qh != (mu == tau) {
            return bad("quasihomogeneity flag disagrees with mu and tau".into());
        }
    }
    match &r.theorem_check {
        TheoremCheck::InKernel { class, certificate } => {
            let g = CohElem::from_coh_terms(n, class)?;
            let h = CohElem::from_coh_terms(n, certificate)?;
            if !localcoh::verify_certificate(&f, &g, &h) {
                return bad("kernel certificate does not satisfy f*h = 0, f_i*h = -d_i g".into());
            }
            if r.quasihomogeneous != Some(false) {
                return bad("kernel certificate reported for a quasihomogeneous germ".into());
            }
        }
        TheoremCheck::NotInKernel { class, witness, value } => {
            let g = CohElem::from_coh_terms(n, class)?;
            let v = CohElem::from_coh_terms(n, value)?;
            let d = witness.field(names)?;
            if !d.verify(&f) || v.is_zero() || localcoh::derivation_action(&d, &g) != v {
                return bad("non-membership witness does not re-verify".into());
            }
        }
        TheoremCheck::Injective { truncation, euler_eigenvalue_max, .. } => {
            if r.quasihomogeneous != Some(true) {
                return bad("injectivity reported for a non-quasihomogeneous germ".into());
            }
            if let (Some(max), Some(w)) = (euler_eigenvalue_max, &r.weights) {
                let w = Weights::new(w.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?)?;
                let deg = f.weighted_homogeneous_degree(&w)?.ok_or(Error::NotQuasihomogeneousInput)?;
                let w = w.scaled(&deg.recip());
                let top = localcoh::euler_eigenvalues(&w, *truncation).into_iter().map(|(_, l)| l).max();
                if top.as_ref() != Some(&parse_rat(max)?) || !parse_rat(max)?.is_negative() {
                    return bad("Euler eigenvalue bound does not re-verify".into());
                }
            }
        }
        _ => {}
    }
    if let FreenessField::Free { basis, determinant, quotient } = &r.freeness {
        let det = parse_poly(determinant, names)?;
        let q = parse_poly(quotient, names)?;
        let matrix: Vec<Vec<Poly>> =
            basis.iter().map(|&i| fields.get(i).map(|d| d.coefficients.clone())).collect::<Option<_>>().ok_or_else(
                || Error::CertificateInvalid("freeness basis index out of range".into()),
            )?;
        if basis.len() != n || logvf::poly_det(&matrix) != det || &q * &f != det || q.constant_term().is_zero() {
            return bad("Saito determinant does not re-verify".into());
        }
    }
    Ok(())
}

/// Serializes a report after re-verifying its certificates.
pub fn emit_report(r: &SingularityReport, format: Format) -> Result<Vec<u8>> {
    verify_report(r)?;
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).map_err(|e| Error::Io(e.to_string()))?;
            s.push('\n');
            Ok(s.into_bytes())
        }
        Format::Text => render_text(r).map(String::into_bytes),
    }
}

pub fn parse_report(json: &str) -> Result<SingularityReport> {
    serde_json::from_str(json).map_err(|e| Error::Io(e.to_string()))
}

fn show_class(terms: &[CohTerm], names: &[String]) -> Result<String> {
    Ok(CohElem::from_coh_terms(names.len(), terms)?.render(names))
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or("unknown".to_string(), T::to_string)
}

fn render_text(r: &SingularityReport) -> Result<String> {
    let names = &r.vars;
    let mut out = String::new();
    let w = &mut out;
    if let Some(name) = &r.name {
        writeln!(w, "{name}").unwrap();
    }
    writeln!(w, "f = {}  in ({})", r.f, names.join(", ")).unwrap();
    writeln!(
        w,
        "gates: singular_at_origin={} isolated={} reduced={}",
        r.gates.singular_at_origin,
        r.gates.isolated,
        opt(&r.gates.reduced)
    )
    .unwrap();
    let col = |c: &Colength| match (c.value, c.stabilization_order) {
        (Some(v), Some(k)) => format!("{v} (m^{k} in ideal)"),
        _ => "not finite".to_string(),
    };
    if r.gates.isolated {
        writeln!(w, "mu = {}", col(&r.mu)).unwrap();
        writeln!(w, "tau = {}", col(&r.tau)).unwrap();
    } else {
        writeln!(w, "mu: not finite up to cutoff {}", r.options.cutoff).unwrap();
    }
    writeln!(w, "quasihomogeneous: {}", opt(&r.quasihomogeneous)).unwrap();
    if let Some(ws) = &r.weights {
        writeln!(w, "weights: ({})", ws.join(", ")).unwrap();
    }
    match &r.lct {
        LctField::NotApplicable { reason } => writeln!(w, "lct: not applicable ({reason})").unwrap(),
        _ => writeln!(w, "lct: {}", r.lct_label()).unwrap(),
    }
    writeln!(w, "Der(-log D): {} generators", r.derlog.len()).unwrap();
    for (i, g) in r.derlog.iter().enumerate() {
        let d = g.field(names)?;
        writeln!(w, "  [{i}] {}   multiplier {}   trace {}", d.render(names), g.multiplier, g.trace).unwrap();
    }
    match &r.theorem_check {
        TheoremCheck::Injective { truncation, dimension, euler_eigenvalue_max } => {
            writeln!(w, "theorem check: d1 injective on pole order <= {truncation} ({dimension} classes)").unwrap();
            if let Some(m) = euler_eigenvalue_max {
                writeln!(w, "  Euler eigenvalues all <= {m} < 0").unwrap();
            }
        }
        TheoremCheck::KernelFound { truncation, kernel } => {
            writeln!(w, "theorem check: nonzero kernel on pole order <= {truncation}").unwrap();
            for k in kernel {
                writeln!(w, "  {}", show_class(k, names)?).unwrap();
            }
        }
        TheoremCheck::InKernel { class, certificate } => {
            let f = parse_poly(&r.f, names)?;
            let h = CohElem::from_coh_terms(names.len(), certificate)?;
            writeln!(w, "theorem check: {} in ker d1", show_class(class, names)?).unwrap();
            writeln!(w, "  h = {}", h.render(names)).unwrap();
            writeln!(w, "  f*h = {}", localcoh::module_action(&f, &h).render(names)).unwrap();
            for (v, fi) in names.iter().zip(f.gradient()) {
                writeln!(w, "  f_{v}*h = {}", localcoh::module_action(&fi, &h).render(names)).unwrap();
            }
        }
        TheoremCheck::NotInKernel { class, witness, value } => {
            let d = witness.field(names)?;
            writeln!(w, "theorem check: {} not in ker d1", show_class(class, names)?).unwrap();
            writeln!(w, "  delta = {}", d.render(names)).unwrap();
            writeln!(w, "  delta({}) = {}", show_class(class, names)?, show_class(value, names)?).unwrap();
        }
        TheoremCheck::Failed { reason } => writeln!(w, "theorem check: failed ({reason})").unwrap(),
        TheoremCheck::NotApplicable { reason } => writeln!(w, "theorem check: not applicable ({reason})").unwrap(),
    }
    match &r.freeness {
        FreenessField::Free { basis, determinant, quotient } => {
            writeln!(w, "freeness: free, basis {basis:?}, det = {determinant} = ({quotient}) * f").unwrap()
        }
        FreenessField::Inconclusive { subsets_checked } => {
            writeln!(w, "freeness: inconclusive ({subsets_checked} subsets checked)").unwrap()
        }
        FreenessField::NotChecked => writeln!(w, "freeness: not checked").unwrap(),
    }
    Ok(out)
}

/// Verdict of a single `kernel` query, serialized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum KernelReport {
    InKernel { class: Vec<CohTerm>, certificate: Vec<CohTerm> },
    NotInKernel { class: Vec<CohTerm>, witness: GeneratorSummary, value: Vec<CohTerm> },
}

pub fn kernel_report(f: &Poly, names: &[String], g: &CohElem, cutoff: usize) -> Result<KernelReport> {
    if !f.in_m_squared() {
        return Err(Error::NotSingularAtOrigin);
    }
    let (grad, _) = crate::polyring::jacobian_ideals(f);
    if jetlocal::colength(&grad, f.nvars(), cutoff).finite().is_none() {
        return Err(Error::NotIsolated { cutoff });
    }
    let module = logvf::derlog_generators(f);
    Ok(match localcoh::kernel_test(f, g, &module, cutoff)? {
        KernelVerdict::InKernel { certificate } => {
            if !localcoh::verify_certificate(f, g, &certificate) {
                return Err(Error::CertificateInvalid("kernel certificate".into()));
            }
            KernelReport::InKernel { class: g.to_terms(), certificate: certificate.to_terms() }
        }
        KernelVerdict::NotInKernel { witness, value } => {
            if !witness.verify(f) || value.is_zero() {
                return Err(Error::CertificateInvalid("witness".into()));
            }
            KernelReport::NotInKernel { class: g.to_terms(), witness: GeneratorSummary::new(&witness, names), value: value.to_terms() }
        }
    })
}

pub fn render_kernel_report(k: &KernelReport, f: &Poly, names: &[String]) -> Result<String> {
    let mut out = String::new();
    match k {
        KernelReport::InKernel { class, certificate } => {
            let h = CohElem::from_coh_terms(names.len(), certificate)?;
            writeln!(out, "{} in ker d1", show_class(class, names)?).unwrap();
            writeln!(out, "h = {}", h.render(names)).unwrap();
            writeln!(out, "f*h = {}", localcoh::module_action(f, &h).render(names)).unwrap();
            for (v, fi) in names.iter().zip(f.gradient()) {
                writeln!(out, "f_{v}*h = {}", localcoh::module_action(&fi, &h).render(names)).unwrap();
            }
        }
        KernelReport::NotInKernel { class, witness, value } => {
            let d = witness.field(names)?;
            writeln!(out, "{} not in ker d1", show_class(class, names)?).unwrap();
            writeln!(out, "delta = {}", d.render(names)).unwrap();
            writeln!(out, "delta(g) = {}", show_class(value, names)?).unwrap();
        }
    }
    Ok(out)
}

/// Parses `"c:a1,a2,.."` into one term `c [x^-a]`.
pub fn parse_class_term(spec: &str, nvars: usize) -> Result<(Vec<u32>, Rat)> {
    let bad = || Error::InvalidClass(format!("expected COEFF:a1,..,an, got `{spec}`"));
    let (c, a) = spec.split_once(':').ok_or_else(bad)?;
    let coeff = parse_rat(c)?;
    let exps: Vec<u32> = a.split(',').map(|s| s.trim().parse::<u32>().map_err(|_| bad())).collect::<Result<_>>()?;
    if exps.len() != nvars {
        return Err(Error::DimensionMismatch { expected: nvars, got: exps.len() });
    }
    Ok((exps, coeff))
}
