//! The top local cohomology module `H = H^n_0(O)` and the map `d1`.
//!
//! `H` is modelled by finite sums of inverse monomials
//! `[x^-a] = [1/(x_1^{a_1} .. x_n^{a_n})]` with every `a_i >= 1`. A
//! polynomial acts by `x^b [x^-a] = [x^(b-a)]` when `a - b >= 1`
//! componentwise and by 0 otherwise, and `∂_i [x^-a] = -a_i [x^-(a+e_i)]`.
//!
//! With `α = (f, f_1, .., f_n)`, the class `d1([g])` vanishes iff
//! `ψ_g = (0, -∂_1 g, .., -∂_n g)` equals `(f h, f_1 h, .., f_n h)` for
//! some `h ∈ H`. Such an `h` is the kernel certificate. Conversely a
//! logarithmic field with `δ([g]) != 0` witnesses `d1([g]) != 0`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grobner::ModVector;
use crate::jetlocal;
use crate::linalg::{self, row_from_rats, Echelon};
use crate::logvf::{euler_field, LogDerModule, LogDerivation};
use crate::polyring::{fmt_rat, parse_rat, weighted_degree, Monomial, Poly, Rat, Weights};

/// Finite rational combination of inverse monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohElem {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl CohElem {
    pub fn zero(nvars: usize) -> Self {
        CohElem { nvars, terms: BTreeMap::new() }
    }

    /// `[1/(x_1 .. x_n)]`.
    pub fn unit(nvars: usize) -> Self {
        CohElem::inverse_monomial(vec![1; nvars]).expect("valid exponents")
    }

    pub fn inverse_monomial(exponents: Vec<u32>) -> Result<Self> {
        let mut e = CohElem::zero(exponents.len());
        e.add_term(exponents, Rat::from_integer(1.into()))?;
        Ok(e)
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Rat)>>(nvars: usize, terms: I) -> Result<Self> {
        let mut e = CohElem::zero(nvars);
        for (a, c) in terms {
            e.add_term(a, c)?;
        }
        Ok(e)
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: Rat) -> Result<()> {
        if exponents.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: exponents.len() });
        }
        if exponents.contains(&0) {
            return Err(Error::InvalidClass(format!("exponent vector {exponents:?} has a zero entry")));
        }
        self.add_raw(Monomial::new(exponents), c);
        Ok(())
    }

    fn add_raw(&mut self, a: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(a).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &Monomial) -> Rat {
        self.terms.get(a).cloned().unwrap_or_else(Rat::zero)
    }

    /// Largest `|a|` in the support; 0 for the zero class.
    pub fn pole_order(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Smallest `p` with `m^p · self = 0`.
    pub fn annihilating_power(&self) -> u32 {
        if self.is_zero() {
            0
        } else {
            self.pole_order() + 1 - self.nvars as u32
        }
    }

    pub fn add(&self, other: &CohElem) -> CohElem {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_raw(a.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CohElem) -> CohElem {
        self.add(&other.scale(&Rat::from_integer((-1).into())))
    }

    pub fn scale(&self, c: &Rat) -> CohElem {
        if c.is_zero() {
            return CohElem::zero(self.nvars);
        }
        CohElem { nvars: self.nvars, terms: self.terms.iter().map(|(a, x)| (a.clone(), x * c)).collect() }
    }

    pub fn render<S: AsRef<str>>(&self, names: &[S]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (a, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if abs != Rat::from_integer(1.into()) {
                out.push_str(&fmt_rat(&abs));
                out.push('*');
            }
            out.push_str(&format!("[1/({})]", a.render(names)));
        }
        out
    }

    /// Serializable `(exponents, coefficient)` list.
    pub fn to_terms(&self) -> Vec<CohTerm> {
        self.terms.iter().map(|(a, c)| CohTerm { exponents: a.exponents().to_vec(), coeff: fmt_rat(c) }).collect()
    }

    pub fn from_coh_terms(nvars: usize, terms: &[CohTerm]) -> Result<Self> {
        let mut e = CohElem::zero(nvars);
        for t in terms {
            e.add_term(t.exponents.clone(), parse_rat(&t.coeff)?)?;
        }
        Ok(e)
    }
}

impl fmt::Display for CohElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Poly::default_names(self.nvars)))
    }
}

/// One inverse monomial term in serialized form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohTerm {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

/// `x^b [x^-a] = [x^(b-a)]` if `a_i > b_i` for all `i`, else 0.
fn shift(b: &Monomial, a: &Monomial) -> Option<Monomial> {
    let e: Option<Vec<u32>> = a.exponents().iter().zip(b.exponents()).map(|(&ai, &bi)| (ai > bi).then(|| ai - bi)).collect();
    e.map(Monomial::new)
}

/// `p · e`.
pub fn module_action(p: &Poly, e: &CohElem) -> CohElem {
    assert_eq!(p.nvars(), e.nvars, "variable count mismatch");
    let mut out = CohElem::zero(e.nvars);
    for (b, c) in p.terms() {
        for (a, x) in &e.terms {
            if let Some(t) = shift(b, a) {
                out.add_raw(t, c * x);
            }
        }
    }
    out
}

/// `∂_i e`.
pub fn partial(e: &CohElem, i: usize) -> CohElem {
    let mut out = CohElem::zero(e.nvars);
    for (a, c) in &e.terms {
        let mut ex = a.exponents().to_vec();
        let ai = ex[i];
        ex[i] += 1;
        out.add_raw(Monomial::new(ex), -(c * Rat::from_integer(ai.into())));
    }
    out
}

/// `δ(e) = sum_i s_i ∂_i e` for a raw field with coefficients `s`, in one
/// pass over term pairs.
pub fn field_action(coefficients: &[Poly], e: &CohElem) -> CohElem {
    let mut out = CohElem::zero(e.nvars);
    for (i, s) in coefficients.iter().enumerate() {
        for (a, x) in &e.terms {
            let ai = a.exponents()[i];
            let mut raised = a.exponents().to_vec();
            raised[i] += 1;
            let raised = Monomial::new(raised);
            for (b, c) in s.terms() {
                if let Some(t) = shift(b, &raised) {
                    out.add_raw(t, -(c * x * Rat::from_integer(ai.into())));
                }
            }
        }
    }
    out
}

pub fn derivation_action(delta: &LogDerivation, e: &CohElem) -> CohElem {
    field_action(&delta.coefficients, e)
}

/// Coefficient of `[1/(x_1 .. x_n)]`.
pub fn residue(e: &CohElem) -> Rat {
    e.coeff(&Monomial::new(vec![1; e.nvars]))
}

/// `<[g], h> = res([g·h])`.
pub fn residue_pairing(e: &CohElem, p: &Poly) -> Rat {
    residue(&module_action(p, e))
}

/// Element of `H^{n+1}`; slot 0 belongs to `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohVector(pub Vec<CohElem>);

impl CohVector {
    pub fn components(&self) -> &[CohElem] {
        &self.0
    }
}

/// `ψ_g = (0, -∂_1 g, .., -∂_n g)`; `d1([g])` is its image under `β ⊗ 1`.
pub fn d1_presentation(f: &Poly, g: &CohElem) -> CohVector {
    let n = f.nvars();
    assert_eq!(g.nvars, n);
    let mut v = Vec::with_capacity(n + 1);
    v.push(CohElem::zero(n));
    for i in 0..n {
        v.push(partial(g, i).scale(&Rat::from_integer((-1).into())));
    }
    CohVector(v)
}

/// `(f h, f_1 h, .., f_n h)`.
pub fn alpha_image(f: &Poly, h: &CohElem) -> CohVector {
    let mut v = vec![module_action(f, h)];
    v.extend(f.gradient().iter().map(|fi| module_action(fi, h)));
    CohVector(v)
}

/// Prescribed values `φ(f), φ(f_1), .., φ(f_n)` of a map `J -> H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialHom {
    pub images: Vec<CohElem>,
}

impl PartialHom {
    pub fn from_presentation(psi: &CohVector) -> Self {
        PartialHom { images: psi.0.clone() }
    }

    /// Well-definedness on `J`: `sum_k s_k φ(g_k) = 0` for every syzygy `s`.
    pub fn is_consistent(&self, syzygies: &[ModVector]) -> bool {
        syzygies.iter().all(|s| {
            let n = self.images[0].nvars;
            s.components().iter().zip(&self.images).fold(CohElem::zero(n), |acc, (p, e)| acc.add(&module_action(p, e))).is_zero()
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelVerdict {
    /// `f h = 0` and `f_i h = -∂_i g` for all `i`.
    InKernel { certificate: CohElem },
    /// `δ([g]) = value != 0` for the logarithmic field `witness`.
    NotInKernel { witness: LogDerivation, value: CohElem },
}

/// Checks `f·h = 0` and `f_i·h = -∂_i g` exactly.
pub fn verify_certificate(f: &Poly, g: &CohElem, h: &CohElem) -> bool {
    alpha_image(f, h) == d1_presentation(f, g)
}

/// Decides whether `d1([g]) = 0`.
pub fn kernel_test(f: &Poly, g: &CohElem, derlog: &LogDerModule, cutoff: usize) -> Result<KernelVerdict> {
    for delta in &derlog.generators {
        let value = derivation_action(delta, g);
        if !value.is_zero() {
            debug_assert!(delta.verify(f));
            return Ok(KernelVerdict::NotInKernel { witness: delta.clone(), value });
        }
    }
    match certificate_solve(f, g, cutoff)? {
        Some(h) => Ok(KernelVerdict::InKernel { certificate: h }),
        None => Err(Error::CertificateSearchFailed),
    }
}

/// Search space bound for certificates of `[g]`: the `N` with
/// `m^{N+1} ⊆ K_g = <f> + m^p <f_1..f_n>`, where `m^p` kills every `∂_i g`.
pub fn certificate_bound(f: &Poly, g: &CohElem, cutoff: usize) -> Option<(u32, usize)> {
    let n = f.nvars();
    let psi = d1_presentation(f, g);
    let p = psi.0.iter().map(CohElem::annihilating_power).max().unwrap_or(0);
    let mut k_gens = vec![f.clone()];
    let shifts = Monomial::of_degree(n, p);
    for fi in f.gradient() {
        for m in &shifts {
            k_gens.push(fi.mul_monomial(m, &Rat::from_integer(1.into())));
        }
    }
    let s = jetlocal::smallest_mpower(&k_gens, n, cutoff)?;
    Some((p, s - 1))
}

/// Builds `h` with `α ⊗ 1 (h) = ψ_g` through the residue pairing.
///
/// `h = sum_{|b| <= N} c_b [x^-(b+1)]` where `c_b` is the value of the
/// functional `q ↦ res(q h)` on `x^b`. The constraints are
/// `res(m f h) = 0` and `res(m f_i h) = res(m φ_i)` for all monomials `m`
/// up to the bound. Returns `None` if the system has no solution or the
/// solution fails exact re-verification.
pub fn certificate_solve(f: &Poly, g: &CohElem, cutoff: usize) -> Result<Option<CohElem>> {
    let n = f.nvars();
    if g.nvars != n {
        return Err(Error::NvarsMismatch { left: n, right: g.nvars });
    }
    let psi = d1_presentation(f, g);
    if psi.0.iter().all(CohElem::is_zero) {
        return Ok(Some(CohElem::zero(n)));
    }
    let Some((p, big_n)) = certificate_bound(f, g, cutoff) else { return Ok(None) };
    let unknowns = Monomial::below_degree(n, big_n as u32 + 1);
    let index: HashMap<&Monomial, usize> = unknowns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let top = big_n.max(p as usize) as u32;

    let mut alpha = vec![f.clone()];
    alpha.extend(f.gradient());
    let mut eqs = Vec::new();
    for m in Monomial::below_degree(n, top + 1) {
        let shifted = Monomial::new(m.exponents().iter().map(|e| e + 1).collect());
        for (gk, phik) in alpha.iter().zip(&psi.0) {
            let prod = gk.mul_monomial(&m, &Rat::from_integer(1.into()));
            let row: Vec<(usize, Rat)> = prod.terms().filter_map(|(t, c)| index.get(t).map(|&i| (i, c.clone()))).collect();
            let rhs = phik.coeff(&shifted);
            if row.is_empty() && rhs.is_zero() {
                continue;
            }
            eqs.push((row, rhs));
        }
    }
    let Some(x) = linalg::solve(unknowns.len(), eqs) else { return Ok(None) };
    let mut h = CohElem::zero(n);
    for (b, c) in unknowns.iter().zip(x) {
        h.add_raw(Monomial::new(b.exponents().iter().map(|e| e + 1).collect()), c);
    }
    Ok(verify_certificate(f, g, &h).then_some(h))
}

/// Inverse monomials `[x^-a]` with `|a| <= order`, by pole order then grevlex.
pub fn inverse_monomials_up_to(nvars: usize, order: u32) -> Vec<Monomial> {
    if (order as usize) < nvars {
        return vec![];
    }
    Monomial::below_degree(nvars, order + 1 - nvars as u32)
        .into_iter()
        .map(|b| Monomial::new(b.exponents().iter().map(|e| e + 1).collect()))
        .collect()
}

/// Kernel of `[g] ↦ (δ_j([g]))_j` on classes of pole order `<= N`.
#[derive(Clone, Debug)]
pub struct InjectivityReport {
    pub truncation: u32,
    pub dimension: usize,
    pub kernel: Vec<CohElem>,
}

impl InjectivityReport {
    pub fn is_injective(&self) -> bool {
        self.kernel.is_empty()
    }
}

pub fn truncated_injectivity(f: &Poly, derlog: &LogDerModule, order: u32) -> InjectivityReport {
    let n = f.nvars();
    let basis = inverse_monomials_up_to(n, order);
    let mut equations: BTreeMap<(usize, Monomial), Vec<(usize, Rat)>> = BTreeMap::new();
    for (col, a) in basis.iter().enumerate() {
        let e = CohElem { nvars: n, terms: std::iter::once((a.clone(), Rat::from_integer(1.into()))).collect() };
        for (j, delta) in derlog.generators.iter().enumerate() {
            for (t, c) in derivation_action(delta, &e).terms {
                equations.entry((j, t)).or_default().push((col, c));
            }
        }
    }
    let mut ech = Echelon::new(basis.len());
    for (_, row) in equations {
        ech.insert(row_from_rats(row));
    }
    let kernel = ech
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut e = CohElem::zero(n);
            for (a, c) in basis.iter().zip(v) {
                e.add_raw(a.clone(), c);
            }
            e
        })
        .collect();
    InjectivityReport { truncation: order, dimension: basis.len(), kernel }
}

/// Eigenvalues `-sum w_i a_i` of the Euler field on `[x^-a]`, `|a| <= N`.
pub fn euler_eigenvalues(w: &Weights, order: u32) -> Vec<(Monomial, Rat)> {
    let e = euler_field(w);
    inverse_monomials_up_to(w.len(), order)
        .into_iter()
        .map(|a| {
            let lambda = -weighted_degree(&a, w).expect("matching arity");
            debug_assert_eq!(
                derivation_action(&e, &CohElem::inverse_monomial(a.exponents().to_vec()).unwrap()),
                CohElem::inverse_monomial(a.exponents().to_vec()).unwrap().scale(&lambda)
            );
            (a, lambda)
        })
        .collect()
}
