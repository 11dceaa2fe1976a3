//! Local algebra at the origin through truncated jet spaces.
//!
//! For an ideal `I` of the polynomial ring, `d_k = dim O/(I + m^k)` is a
//! finite linear-algebra problem in the space of jets of order `< k`.
//! When `d_k = d_{k+1}` we have `m^k ⊆ I + m^{k+1}` and Nakayama's lemma
//! upgrades this to `m^k ⊆ I` in the local ring, so `d_k` is the exact
//! colength.

use std::collections::HashMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, row_from_rats, Echelon, SparseRow};
use crate::polyring::{Monomial, Poly, Rat, Weights};

/// Default maximal truncation order for colength searches.
pub const DEFAULT_CUTOFF: usize = 30;

/// Jets of order `< k`: the monomials of total degree `< k`, ordered by
/// degree and by descending grevlex inside a degree.
#[derive(Clone, Debug)]
pub struct JetSpace {
    nvars: usize,
    order: usize,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl JetSpace {
    pub fn new(nvars: usize, order: usize) -> Self {
        let basis = Monomial::below_degree(nvars, order as u32);
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        JetSpace { nvars, order, basis, index }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of the jet of `p`.
    pub fn row(&self, p: &Poly) -> SparseRow {
        row_from_rats(p.terms().filter_map(|(m, c)| self.index_of(m).map(|i| (i, c.clone()))))
    }

    /// The multiples `x^b * g` whose jets span `(I + m^k)/m^k`, tagged by
    /// generator index and multiplier.
    pub fn ideal_multiples<'a>(&'a self, gens: &'a [Poly]) -> impl Iterator<Item = (usize, Monomial, Poly)> + 'a {
        gens.iter().enumerate().flat_map(move |(i, g)| {
            let ord = g.ord().map(|o| o as usize).unwrap_or(self.order);
            let room = self.order.saturating_sub(ord);
            Monomial::below_degree(self.nvars, room as u32)
                .into_iter()
                .map(move |b| (i, b.clone(), g.mul_monomial(&b, &Rat::from_integer(1.into())).truncate(self.order as u32)))
        })
    }

    /// Echelon form of `(I + m^k)/m^k` in this jet space.
    pub fn ideal_echelon(&self, gens: &[Poly]) -> Echelon {
        let mut ech = Echelon::new(self.dim());
        for (_, _, p) in self.ideal_multiples(gens) {
            if !p.is_zero() {
                ech.insert(self.row(&p));
            }
        }
        ech
    }
}

/// Monomial basis of `O/(I + m^k)`: the non-pivot jet monomials.
pub fn quotient_basis(gens: &[Poly], nvars: usize, k: usize) -> Vec<Monomial> {
    assert!(k >= 1, "truncation order must be positive");
    let jet = JetSpace::new(nvars, k);
    let ech = jet.ideal_echelon(gens);
    jet.basis().iter().enumerate().filter(|(i, _)| !ech.is_pivot(*i)).map(|(_, m)| m.clone()).collect()
}

/// `[d_1, ..., d_kmax]` with `d_k = dim O/(I + m^k)`, from one elimination.
///
/// Pivots sit on the lowest-degree term of each echelon row, so the pivots
/// of degree `< k` count the rank of the projection to jets of order `< k`.
pub fn jet_dimensions(gens: &[Poly], nvars: usize, kmax: usize) -> Vec<usize> {
    let jet = JetSpace::new(nvars, kmax);
    let ech = jet.ideal_echelon(gens);
    let mut pivots_by_degree = vec![0usize; kmax];
    let mut monos_by_degree = vec![0usize; kmax];
    for (i, m) in jet.basis().iter().enumerate() {
        let d = m.degree() as usize;
        monos_by_degree[d] += 1;
        if ech.is_pivot(i) {
            pivots_by_degree[d] += 1;
        }
    }
    let mut out = Vec::with_capacity(kmax);
    let mut acc = 0usize;
    for d in 0..kmax {
        acc += monos_by_degree[d] - pivots_by_degree[d];
        out.push(acc);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ColengthValue {
    Finite { value: usize },
    NotFiniteUpTo { cutoff: usize },
}

/// Colength with its Nakayama certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColengthResult {
    pub value: ColengthValue,
    /// `k` with `d_k = d_{k+1}`, hence `m^k ⊆ I`.
    pub stabilization_order: Option<usize>,
    /// `d_1, d_2, ...` as far as they were computed.
    pub dims: Vec<usize>,
}

impl ColengthResult {
    pub fn finite(&self) -> Option<usize> {
        match self.value {
            ColengthValue::Finite { value } => Some(value),
            ColengthValue::NotFiniteUpTo { .. } => None,
        }
    }

    pub fn certificate(&self) -> String {
        match self.stabilization_order {
            Some(k) => {
                let (k1, d) = (k + 1, self.dims[k - 1]);
                format!("m^{k} ⊆ I + m^{k1} (d_{k} = d_{k1} = {d}), hence m^{k} ⊆ I")
            }
            None => format!("d_k strictly increasing for k < {}", self.dims.len()),
        }
    }
}

/// Colength of `I` in the local ring, searching truncation orders up to `cutoff`.
pub fn colength(gens: &[Poly], nvars: usize, cutoff: usize) -> ColengthResult {
    assert!(cutoff >= 2, "cutoff must be at least 2");
    let mut level = cutoff.min(8);
    loop {
        let dims = jet_dimensions(gens, nvars, level);
        if let Some(k) = (1..level).find(|&k| dims[k - 1] == dims[k]) {
            return ColengthResult {
                value: ColengthValue::Finite { value: dims[k - 1] },
                stabilization_order: Some(k),
                dims,
            };
        }
        if level == cutoff {
            return ColengthResult { value: ColengthValue::NotFiniteUpTo { cutoff }, stabilization_order: None, dims };
        }
        level = (level * 2).min(cutoff);
    }
}

/// Milnor number (colength of `<f_1..f_n>`) and Tjurina number (colength
/// of `<f, f_1..f_n>`).
///
/// A finite Milnor number certifies an isolated singular point, which in
/// turn forces `f` to be reduced.
pub fn milnor_tjurina(f: &Poly, cutoff: usize) -> Result<(ColengthResult, ColengthResult)> {
    if f.is_zero() {
        return Err(Error::NotIsolated { cutoff });
    }
    if !f.in_m_squared() {
        return Err(Error::NotSingularAtOrigin);
    }
    let (grad, j) = crate::polyring::jacobian_ideals(f);
    let mu = colength(&grad, f.nvars(), cutoff);
    if mu.finite().is_none() {
        return Err(Error::NotIsolated { cutoff });
    }
    let tau = colength(&j, f.nvars(), cutoff);
    Ok((mu, tau))
}

/// Expression `x^g ≡ sum_i q_i g_i  mod m^{k+1}` for one monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialCertificate {
    pub monomial: Monomial,
    pub cofactors: Vec<Poly>,
}

/// Result of testing `m^k ⊆ I` in the local ring.
#[derive(Clone, Debug)]
pub struct MPowerResult {
    pub k: usize,
    pub contained: bool,
    /// First degree-`k` monomial outside `I + m^{k+1}`, if any.
    pub missing: Option<Monomial>,
    pub certificates: Vec<MonomialCertificate>,
}

impl MPowerResult {
    /// Re-expands every certificate and checks the truncated identity.
    pub fn verify(&self, gens: &[Poly]) -> bool {
        if !self.contained {
            return self.missing.is_some();
        }
        let nvars = gens.first().map(Poly::nvars).unwrap_or(0);
        let count = Monomial::of_degree(nvars, self.k as u32).len();
        self.certificates.len() == count
            && self.certificates.iter().all(|c| {
                let mut diff = Poly::monomial(c.monomial.clone(), Rat::from_integer(1.into()));
                for (q, g) in c.cofactors.iter().zip(gens) {
                    diff = &diff - &(q * g);
                }
                diff.truncate(self.k as u32 + 1).is_zero()
            })
    }
}

/// Decides `m^k ⊆ I` via `m^k ⊆ I + m^{k+1}` and returns explicit cofactors.
pub fn mpower_in_ideal(gens: &[Poly], nvars: usize, k: usize) -> MPowerResult {
    assert!(k >= 1);
    let jet = JetSpace::new(nvars, k + 1);
    let ech = jet.ideal_echelon(gens);
    let targets = Monomial::of_degree(nvars, k as u32);
    let missing = targets
        .iter()
        .find(|m| !ech.contains(vec![(jet.index_of(m).expect("in jet"), 1.into())]))
        .cloned();
    if missing.is_some() {
        return MPowerResult { k, contained: false, missing, certificates: vec![] };
    }
    let multiples: Vec<(usize, Monomial, Poly)> = jet.ideal_multiples(gens).filter(|(_, _, p)| !p.is_zero()).collect();
    // unknown j is the coefficient of multiples[j]; one equation per jet monomial
    let mut columns: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); jet.dim()];
    for (j, (_, _, p)) in multiples.iter().enumerate() {
        for (m, c) in p.terms() {
            columns[jet.index_of(m).expect("truncated")].push((j, c.clone()));
        }
    }
    let certificates = targets
        .into_iter()
        .map(|t| {
            let ti = jet.index_of(&t).expect("in jet");
            let eqs = columns
                .iter()
                .enumerate()
                .map(|(i, col)| (col.clone(), if i == ti { Rat::from_integer(1.into()) } else { Rat::zero() }))
                .collect();
            let x = linalg::solve(multiples.len(), eqs).expect("monomial lies in the span");
            let mut cofactors = vec![Poly::zero(nvars); gens.len()];
            for (c, (gi, b, _)) in x.into_iter().zip(&multiples) {
                cofactors[*gi].add_term(b.clone(), c);
            }
            MonomialCertificate { monomial: t, cofactors }
        })
        .collect();
    MPowerResult { k, contained: true, missing: None, certificates }
}

/// Smallest `k <= cutoff` with `m^k ⊆ I`, if the colength stabilizes.
pub fn smallest_mpower(gens: &[Poly], nvars: usize, cutoff: usize) -> Option<usize> {
    colength(gens, nvars, cutoff).stabilization_order
}

/// Monomials of weighted degree exactly `d` (finitely many: weights are positive).
pub fn monomials_of_weighted_degree(w: &Weights, d: &Rat) -> Vec<Monomial> {
    fn rec(w: &[Rat], i: usize, left: &Rat, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == w.len() {
            if left.is_zero() {
                out.push(Monomial::new(cur.clone()));
            }
            return;
        }
        let mut e = 0u32;
        let mut rem = left.clone();
        while !rem.is_negative() {
            cur.push(e);
            rec(w, i + 1, &rem, cur, out);
            cur.pop();
            rem -= &w[i];
            e += 1;
        }
    }
    let mut out = Vec::new();
    if d.is_negative() {
        return out;
    }
    rec(w.as_slice(), 0, d, &mut Vec::new(), &mut out);
    out
}

/// `dim (O/<f_1..f_n>)_d` for a weighted homogeneous `f`.
pub fn graded_milnor_piece(f: &Poly, w: &Weights, d: &Rat) -> Result<usize> {
    let deg_f = f.weighted_homogeneous_degree(w)?.ok_or(Error::NotQuasihomogeneousInput)?;
    let monos = monomials_of_weighted_degree(w, d);
    if monos.is_empty() {
        return Ok(0);
    }
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut ech = Echelon::new(monos.len());
    for (i, fi) in f.gradient().iter().enumerate() {
        if fi.is_zero() {
            continue;
        }
        let target = d - (&deg_f - &w.as_slice()[i]);
        for b in monomials_of_weighted_degree(w, &target) {
            let p = fi.mul_monomial(&b, &Rat::from_integer(1.into()));
            ech.insert(row_from_rats(p.terms().map(|(m, c)| (index[m], c.clone()))));
        }
    }
    Ok(monos.len() - ech.rank())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LctVerdict {
    Holds,
    Fails { k: usize },
}

/// Graded vanishing test `(O/J_f)_{k - sum w} = 0` for `k = 1..n-2`, with
/// weights normalized so that `f` has degree 1.
pub fn lct_check(f: &Poly, w: &Weights) -> Result<LctVerdict> {
    let deg = f.weighted_homogeneous_degree(w)?.ok_or(Error::NotQuasihomogeneousInput)?;
    let w = w.scaled(&deg.recip());
    let n = f.nvars();
    let total = w.sum();
    for k in 1..n.saturating_sub(1) {
        let d = Rat::from_integer(k.into()) - &total;
        if graded_milnor_piece(f, &w, &d)? != 0 {
            return Ok(LctVerdict::Fails { k });
        }
    }
    Ok(LctVerdict::Holds)
}

/// Sum of all graded pieces up to the top degree `sum (1 - 2 w_i)` of the
/// Milnor algebra (weights normalized to `deg f = 1`).
pub fn graded_milnor_total(f: &Poly, w: &Weights) -> Result<usize> {
    let deg = f.weighted_homogeneous_degree(w)?.ok_or(Error::NotQuasihomogeneousInput)?;
    let w = w.scaled(&deg.recip());
    let top: Rat = w.as_slice().iter().fold(Rat::zero(), |acc, wi| acc + Rat::from_integer(1.into()) - wi - wi);
    // degrees are multiples of 1/L, L the lcm of the weight denominators
    let mut l = num_bigint::BigInt::from(1);
    for wi in w.as_slice() {
        l = num_integer::Integer::lcm(&l, wi.denom());
    }
    let step = Rat::new(1.into(), l);
    let mut d = Rat::zero();
    let mut total = 0;
    while d <= top {
        total += graded_milnor_piece(f, &w, &d)?;
        d += &step;
    }
    Ok(total)
}
