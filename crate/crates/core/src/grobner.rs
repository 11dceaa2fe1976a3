//! Buchberger's algorithm for ideals and submodules of free modules over
//! `Q[x_1..x_n]`, with cofactor tracking and Schreyer syzygies.
//!
//! Every basis element remembers its expression in the input generators,
//! so normal forms can report cofactors with respect to the original
//! generating set.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Poly, Rat};

/// Term orders on monomials (rank 1) or module terms `x^a e_i`.
///
/// For module terms, a lower component index is the larger basis vector.
/// `GrevLex` and `Lex` on modules behave as term-over-position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermOrder {
    GrevLex,
    Lex,
    PositionOverTerm(MonomialOrder),
    TermOverPosition(MonomialOrder),
}

impl Default for TermOrder {
    fn default() -> Self {
        TermOrder::GrevLex
    }
}

impl TermOrder {
    pub fn monomial_order(&self) -> MonomialOrder {
        match self {
            TermOrder::GrevLex => MonomialOrder::GrevLex,
            TermOrder::Lex => MonomialOrder::Lex,
            TermOrder::PositionOverTerm(o) | TermOrder::TermOverPosition(o) => *o,
        }
    }

    pub fn cmp_terms(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        let mo = self.monomial_order();
        match self {
            TermOrder::PositionOverTerm(_) => b.1.cmp(&a.1).then_with(|| mo.cmp(a.0, b.0)),
            _ => mo.cmp(a.0, b.0).then_with(|| b.1.cmp(&a.1)),
        }
    }
}

/// Element of a free module `Q[x]^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModVector {
    components: Vec<Poly>,
}

impl ModVector {
    pub fn new(components: Vec<Poly>) -> Self {
        assert!(!components.is_empty(), "rank must be positive");
        let n = components[0].nvars();
        assert!(components.iter().all(|p| p.nvars() == n), "mixed variable counts");
        ModVector { components }
    }

    pub fn zero(rank: usize, nvars: usize) -> Self {
        ModVector { components: vec![Poly::zero(nvars); rank] }
    }

    pub fn unit(rank: usize, i: usize, nvars: usize) -> Self {
        let mut v = ModVector::zero(rank, nvars);
        v.components[i] = Poly::one(nvars);
        v
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn nvars(&self) -> usize {
        self.components[0].nvars()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Poly> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &ModVector) -> ModVector {
        ModVector { components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &ModVector) -> ModVector {
        ModVector { components: self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect() }
    }

    pub fn mul_poly(&self, p: &Poly) -> ModVector {
        ModVector { components: self.components.iter().map(|c| c * p).collect() }
    }

    /// `sum_i v_i g_i`.
    pub fn dot(&self, gens: &[Poly]) -> Poly {
        assert_eq!(gens.len(), self.rank());
        let mut acc = Poly::zero(self.nvars());
        for (c, g) in self.components.iter().zip(gens) {
            acc = &acc + &(c * g);
        }
        acc
    }

    /// Scales to coprime integer coefficients with a positive leading
    /// coefficient in the first nonzero component.
    pub fn primitive(&self) -> ModVector {
        use num_integer::Integer;
        let mut den = num_bigint::BigInt::one();
        let mut g = num_bigint::BigInt::zero();
        for p in &self.components {
            for (_, c) in p.terms() {
                den = den.lcm(c.denom());
            }
        }
        for p in &self.components {
            for (_, c) in p.terms() {
                g = g.gcd(&(c.numer() * (&den / c.denom())));
            }
        }
        if g.is_zero() {
            return self.clone();
        }
        let mut s = Rat::new(den, g);
        if let Some(first) = self.components.iter().find(|p| !p.is_zero()) {
            let (_, lc) = first.leading_term(MonomialOrder::GrevLex).expect("nonzero");
            if *lc < Rat::zero() {
                s = -s;
            }
        }
        ModVector { components: self.components.iter().map(|p| p.scale(&s)).collect() }
    }
}

type Term = (Monomial, usize);

/// Terms sorted ascending under the order; the leading term is last.
#[derive(Clone, Debug)]
struct SVec {
    terms: Vec<(Term, Rat)>,
}

impl SVec {
    fn from_mod(v: &ModVector, order: TermOrder) -> SVec {
        let mut terms: Vec<(Term, Rat)> = v
            .components
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.terms().map(move |(m, c)| ((m.clone(), i), c.clone())))
            .collect();
        terms.sort_by(|a, b| order.cmp_terms((&a.0 .0, a.0 .1), (&b.0 .0, b.0 .1)));
        SVec { terms }
    }

    fn to_mod(&self, rank: usize, nvars: usize) -> ModVector {
        let mut comps = vec![Poly::zero(nvars); rank];
        for ((m, i), c) in &self.terms {
            comps[*i].add_term(m.clone(), c.clone());
        }
        ModVector { components: comps }
    }

    fn lead(&self) -> Option<&(Term, Rat)> {
        self.terms.last()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn scale(&mut self, c: &Rat) {
        for (_, x) in &mut self.terms {
            *x = &*x * c;
        }
    }

    /// `self - c * x^shift * g`.
    fn sub_scaled(&self, c: &Rat, shift: &Monomial, g: &SVec, order: TermOrder) -> SVec {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted: Vec<(Term, Rat)> = g.terms.iter().map(|((m, k), x)| ((m.mul(shift), *k), x * c)).collect();
        while i < self.terms.len() || j < shifted.len() {
            let ord = if i >= self.terms.len() {
                Ordering::Greater
            } else if j >= shifted.len() {
                Ordering::Less
            } else {
                let a = &self.terms[i].0;
                let b = &shifted[j].0;
                order.cmp_terms((&a.0, a.1), (&b.0, b.1))
            };
            match ord {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((shifted[j].0.clone(), -shifted[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = &self.terms[i].1 - &shifted[j].1;
                    if !v.is_zero() {
                        out.push((self.terms[i].0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SVec { terms: out }
    }
}

#[derive(Clone, Debug)]
struct Elem {
    v: SVec,
    /// Expression of `v` in the input generators.
    repr: Vec<Poly>,
}

fn lin_comb_add(acc: &mut [Poly], coeff: &Poly, vec: &[Poly]) {
    if coeff.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(vec) {
        if !b.is_zero() {
            *a = &*a + &(coeff * b);
        }
    }
}

/// Full reduction of `p` by `basis`; returns remainder and per-basis quotients.
fn reduce(basis: &[Elem], p: SVec, order: TermOrder, nvars: usize) -> (SVec, Vec<Poly>) {
    let mut p = p;
    let mut rem_desc: Vec<(Term, Rat)> = Vec::new();
    let mut quot = vec![Poly::zero(nvars); basis.len()];
    while let Some(((m, comp), c)) = p.lead().cloned() {
        let hit = basis.iter().enumerate().find_map(|(k, b)| {
            let ((lm, lcomp), lc) = b.v.lead()?;
            if *lcomp != comp {
                return None;
            }
            lm.quotient_of(&m).map(|s| (k, s, lc.clone()))
        });
        match hit {
            Some((k, shift, lc)) => {
                let coeff = &c / &lc;
                p = p.sub_scaled(&coeff, &shift, &basis[k].v, order);
                quot[k].add_term(shift, coeff);
            }
            None => {
                rem_desc.push(p.terms.pop().expect("nonempty"));
            }
        }
    }
    rem_desc.reverse();
    (SVec { terms: rem_desc }, quot)
}

fn s_vector(a: &Elem, b: &Elem, order: TermOrder, nvars: usize) -> (SVec, Vec<Poly>, Monomial, Monomial) {
    let ((ma, _), ca) = a.v.lead().expect("nonzero");
    let ((mb, _), cb) = b.v.lead().expect("nonzero");
    let l = ma.lcm(mb);
    let ua = ma.quotient_of(&l).expect("lcm");
    let ub = mb.quotient_of(&l).expect("lcm");
    let inv_a = ca.recip();
    let inv_b = cb.recip();
    let zero = SVec { terms: vec![] };
    let sa = zero.sub_scaled(&-inv_a.clone(), &ua, &a.v, order);
    let s = sa.sub_scaled(&inv_b, &ub, &b.v, order);
    let mut repr = vec![Poly::zero(nvars); a.repr.len()];
    lin_comb_add(&mut repr, &Poly::monomial(ua.clone(), inv_a), &a.repr);
    lin_comb_add(&mut repr, &Poly::monomial(ub.clone(), -inv_b), &b.repr);
    (s, repr, ua, ub)
}

/// Gröbner basis of an ideal (rank 1) or submodule.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: TermOrder,
    rank: usize,
    nvars: usize,
    ninputs: usize,
    elems: Vec<Elem>,
    reduced: bool,
}

/// Remainder of a division together with cofactors over the input generators:
/// `input = sum_i cofactors[i] * gens[i] + remainder`.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub remainder: ModVector,
    pub cofactors: Vec<Poly>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Membership {
    Member(Vec<Poly>),
    NonMember,
}

impl GroebnerBasis {
    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn generators(&self) -> Vec<ModVector> {
        self.elems.iter().map(|e| e.v.to_mod(self.rank, self.nvars)).collect()
    }

    /// Generators of a rank-1 basis as polynomials.
    pub fn polys(&self) -> Vec<Poly> {
        self.generators().into_iter().map(|v| v.components[0].clone()).collect()
    }

    /// Expression of each basis element in the input generators.
    pub fn representations(&self) -> Vec<Vec<Poly>> {
        self.elems.iter().map(|e| e.repr.clone()).collect()
    }

    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.elems.iter().map(|e| e.v.lead().expect("nonzero").0.clone()).collect()
    }

    fn check_shape(&self, v: &ModVector) -> Result<()> {
        if v.rank() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: v.rank() });
        }
        if v.nvars() != self.nvars {
            return Err(Error::NvarsMismatch { left: self.nvars, right: v.nvars() });
        }
        Ok(())
    }

    fn cofactors_from(&self, quot: &[Poly]) -> Vec<Poly> {
        let mut out = vec![Poly::zero(self.nvars); self.ninputs];
        for (q, e) in quot.iter().zip(&self.elems) {
            lin_comb_add(&mut out, q, &e.repr);
        }
        out
    }

    pub fn normal_form(&self, v: &ModVector) -> Result<Reduction> {
        self.check_shape(v)?;
        let (rem, quot) = reduce(&self.elems, SVec::from_mod(v, self.order), self.order, self.nvars);
        Ok(Reduction { remainder: rem.to_mod(self.rank, self.nvars), cofactors: self.cofactors_from(&quot) })
    }

    pub fn normal_form_poly(&self, p: &Poly) -> Result<(Poly, Vec<Poly>)> {
        let r = self.normal_form(&ModVector::new(vec![p.clone()]))?;
        Ok((r.remainder.components[0].clone(), r.cofactors))
    }

    pub fn contains(&self, v: &ModVector) -> Result<bool> {
        Ok(self.normal_form(v)?.remainder.is_zero())
    }

    /// Re-checks Buchberger's criterion: every S-vector reduces to zero.
    pub fn check_s_pairs(&self) -> bool {
        for i in 0..self.elems.len() {
            for j in (i + 1)..self.elems.len() {
                if self.elems[i].v.lead().unwrap().0 .1 != self.elems[j].v.lead().unwrap().0 .1 {
                    continue;
                }
                let (s, _, _, _) = s_vector(&self.elems[i], &self.elems[j], self.order, self.nvars);
                let (rem, _) = reduce(&self.elems, s, self.order, self.nvars);
                if !rem.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

fn chain_criterion(basis: &[Elem], pending: &BTreeSet<(usize, usize)>, i: usize, j: usize, l: &Monomial, comp: usize) -> bool {
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    basis.iter().enumerate().any(|(k, e)| {
        if k == i || k == j {
            return false;
        }
        let ((lm, c), _) = e.v.lead().expect("nonzero");
        *c == comp && lm.divides(l) && !pending.contains(&key(i, k)) && !pending.contains(&key(j, k))
    })
}

/// Computes a reduced Gröbner basis of the span of `gens`.
///
/// Pair selection is normal (smallest lcm under the order), ties broken by
/// the pair indices, so the output is deterministic.
pub fn buchberger(gens: &[ModVector], order: TermOrder) -> GroebnerBasis {
    assert!(!gens.is_empty(), "empty generator list");
    let rank = gens[0].rank();
    let nvars = gens[0].nvars();
    assert!(gens.iter().all(|g| g.rank() == rank && g.nvars() == nvars), "inconsistent generators");
    let m = gens.len();

    let mut basis: Vec<Elem> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let mut v = SVec::from_mod(g, order);
        let Some((_, lc)) = v.lead().cloned() else { continue };
        let inv = lc.recip();
        v.scale(&inv);
        let mut repr = vec![Poly::zero(nvars); m];
        repr[i] = Poly::constant(nvars, inv);
        basis.push(Elem { v, repr });
    }

    let lead_comp = |e: &Elem| e.v.lead().expect("nonzero").0 .1;
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            if lead_comp(&basis[i]) == lead_comp(&basis[j]) {
                pending.insert((i, j));
            }
        }
    }

    while !pending.is_empty() {
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = basis[a.0].v.lead().unwrap().0 .0.lcm(&basis[a.1].v.lead().unwrap().0 .0);
                let lb = basis[b.0].v.lead().unwrap().0 .0.lcm(&basis[b.1].v.lead().unwrap().0 .0);
                let ca = lead_comp(&basis[a.0]);
                let cb = lead_comp(&basis[b.0]);
                order.cmp_terms((&la, ca), (&lb, cb)).then_with(|| (a.1, a.0).cmp(&(b.1, b.0)))
            })
            .expect("nonempty");
        pending.remove(&(i, j));

        let ((mi, comp), _) = basis[i].v.lead().unwrap().clone();
        let ((mj, _), _) = basis[j].v.lead().unwrap().clone();
        if rank == 1 && mi.is_coprime(&mj) {
            continue;
        }
        let l = mi.lcm(&mj);
        if chain_criterion(&basis, &pending, i, j, &l, comp) {
            continue;
        }

        let (s, mut repr, _, _) = s_vector(&basis[i], &basis[j], order, nvars);
        let (mut r, quot) = reduce(&basis, s, order, nvars);
        if r.is_zero() {
            continue;
        }
        for (q, e) in quot.iter().zip(&basis) {
            lin_comb_add(&mut repr, &-q, &e.repr);
        }
        let inv = r.lead().unwrap().1.recip();
        r.scale(&inv);
        for p in &mut repr {
            *p = p.scale(&inv);
        }
        let new = basis.len();
        let c = r.lead().unwrap().0 .1;
        basis.push(Elem { v: r, repr });
        for k in 0..new {
            if lead_comp(&basis[k]) == c {
                pending.insert((k, new));
            }
        }
    }

    let elems = interreduce(basis, order, nvars);
    GroebnerBasis { order, rank, nvars, ninputs: m, elems, reduced: true }
}

/// Drops elements with redundant leading terms, then tail-reduces.
fn interreduce(basis: Vec<Elem>, order: TermOrder, nvars: usize) -> Vec<Elem> {
    let leads: Vec<Term> = basis.iter().map(|e| e.v.lead().unwrap().0.clone()).collect();
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            !(0..basis.len()).any(|j| {
                j != i
                    && leads[j].1 == leads[i].1
                    && leads[j].0.divides(&leads[i].0)
                    && (leads[j].0 != leads[i].0 || j < i)
            })
        })
        .collect();
    let mut elems: Vec<Elem> = basis.into_iter().zip(keep).filter_map(|(e, k)| k.then_some(e)).collect();
    for idx in 0..elems.len() {
        let others: Vec<Elem> = elems.iter().enumerate().filter(|(k, _)| *k != idx).map(|(_, e)| e.clone()).collect();
        let head = elems[idx].v.terms.last().cloned().expect("nonzero");
        let mut tail = elems[idx].v.clone();
        tail.terms.pop();
        let (mut rem, quot) = reduce(&others, tail, order, nvars);
        rem.terms.push(head);
        let mut repr = elems[idx].repr.clone();
        for (q, e) in quot.iter().zip(&others) {
            lin_comb_add(&mut repr, &-q, &e.repr);
        }
        elems[idx] = Elem { v: rem, repr };
    }
    elems.sort_by(|a, b| {
        let (ta, _) = a.v.lead().unwrap();
        let (tb, _) = b.v.lead().unwrap();
        order.cmp_terms((&ta.0, ta.1), (&tb.0, tb.1))
    });
    elems
}

/// Gröbner basis of the ideal generated by `gens`.
pub fn ideal_basis(gens: &[Poly], order: TermOrder) -> GroebnerBasis {
    let vs: Vec<ModVector> = gens.iter().map(|g| ModVector::new(vec![g.clone()])).collect();
    buchberger(&vs, order)
}

/// Decides `p in <gens>` over the polynomial ring; members come with cofactors.
pub fn ideal_membership(p: &Poly, gens: &[Poly]) -> Result<Membership> {
    if gens.is_empty() {
        return Ok(if p.is_zero() { Membership::Member(vec![]) } else { Membership::NonMember });
    }
    let gb = ideal_basis(gens, TermOrder::GrevLex);
    let (rem, cof) = gb.normal_form_poly(p)?;
    Ok(if rem.is_zero() { Membership::Member(cof) } else { Membership::NonMember })
}

/// Generators of the syzygy module `{s : sum_i s_i g_i = 0}` of a list of
/// polynomials, obtained from the S-pair reductions of a Gröbner basis
/// (Schreyer) and translated back to the input generators.
pub fn syzygies(gens: &[Poly]) -> Vec<ModVector> {
    assert!(!gens.is_empty(), "empty generator list");
    let nvars = gens[0].nvars();
    let m = gens.len();
    let order = TermOrder::GrevLex;
    let gb = ideal_basis(gens, order);
    let g = &gb.elems;
    let to_inputs = |over_gb: &[Poly]| -> ModVector {
        let mut acc = vec![Poly::zero(nvars); m];
        for (q, e) in over_gb.iter().zip(g) {
            lin_comb_add(&mut acc, q, &e.repr);
        }
        ModVector { components: acc }
    };

    let mut out: Vec<ModVector> = Vec::new();
    let leads: Vec<Monomial> = g.iter().map(|e| e.v.lead().unwrap().0 .0.clone()).collect();
    for j in 0..g.len() {
        for i in 0..j {
            let l = leads[i].lcm(&leads[j]);
            let redundant = (0..g.len()).any(|k| {
                k != i
                    && k != j
                    && leads[k].divides(&l)
                    && leads[i].lcm(&leads[k]) != l
                    && leads[j].lcm(&leads[k]) != l
            });
            if redundant {
                continue;
            }
            let (s, _, ua, ub) = s_vector(&g[i], &g[j], order, nvars);
            let (rem, quot) = reduce(g, s, order, nvars);
            debug_assert!(rem.is_zero());
            let mut over_gb = quot.into_iter().map(|q| -&q).collect::<Vec<_>>();
            let inv_i = g[i].v.lead().unwrap().1.recip();
            let inv_j = g[j].v.lead().unwrap().1.recip();
            over_gb[i].add_term(ua, inv_i);
            over_gb[j].add_term(ub, -inv_j);
            out.push(to_inputs(&over_gb));
        }
    }
    for (i, gi) in gens.iter().enumerate() {
        let (rem, quot) = reduce(g, SVec::from_mod(&ModVector::new(vec![gi.clone()]), order), order, nvars);
        debug_assert!(rem.is_zero());
        let back = to_inputs(&quot);
        out.push(ModVector::unit(m, i, nvars).sub(&back));
    }

    let mut seen = std::collections::HashSet::new();
    out.into_iter()
        .filter(|v| !v.is_zero())
        .map(|v| v.primitive())
        .filter(|v| seen.insert(v.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn ps(list: &[&str], vars: &[&str]) -> Vec<Poly> {
        list.iter().map(|s| parse_poly(s, vars).unwrap()).collect()
    }

    #[test]
    fn trivial_basis() {
        let xy = ["x", "y"];
        let gb = ideal_basis(&ps(&["x", "y"], &xy), TermOrder::GrevLex);
        assert_eq!(gb.polys(), ps(&["y", "x"], &xy));
        assert!(gb.is_reduced());
    }

    #[test]
    fn s_pair_closure_finds_y_cubed() {
        // x^3 - x(x^2 - y) = xy; x*xy - y(x^2 - y) = y^2 ... closure contains y^2 hence y^3
        let xy = ["x", "y"];
        let gens = ps(&["x^2 - y", "x^3"], &xy);
        let gb = ideal_basis(&gens, TermOrder::GrevLex);
        assert!(gb.check_s_pairs());
        let y3 = parse_poly("y^3", &xy).unwrap();
        assert!(gb.normal_form_poly(&y3).unwrap().0.is_zero());
        // lex with x > y yields the elimination polynomial y^3 directly
        let lex = ideal_basis(&gens, TermOrder::Lex);
        assert!(lex.polys().contains(&y3) || lex.polys().contains(&parse_poly("y^2", &xy).unwrap()));
        assert!(lex.check_s_pairs());
    }

    #[test]
    fn zero_ideal() {
        let gb = ideal_basis(&[Poly::zero(2)], TermOrder::GrevLex);
        assert!(gb.is_empty());
        let p = parse_poly("x + 1", &["x", "y"]).unwrap();
        assert_eq!(gb.normal_form_poly(&p).unwrap().0, p);
        assert!(gb.normal_form_poly(&Poly::zero(2)).unwrap().0.is_zero());
    }

    #[test]
    fn normal_form_examples() {
        let xy = ["x", "y"];
        let gb = ideal_basis(&ps(&["x", "y"], &xy), TermOrder::GrevLex);
        assert!(gb.normal_form_poly(&parse_poly("x^2+y", &xy).unwrap()).unwrap().0.is_zero());
        assert_eq!(gb.normal_form_poly(&Poly::one(2)).unwrap().0, Poly::one(2));
        let f = ps(&["x^2 + y^3 - x*y", "x*y^2 + 1"], &xy);
        let p = &(&parse_poly("x", &xy).unwrap() * &f[0]) + &(&parse_poly("y", &xy).unwrap() * &f[1]);
        let gb = ideal_basis(&f, TermOrder::GrevLex);
        let (rem, cof) = gb.normal_form_poly(&p).unwrap();
        assert!(rem.is_zero());
        assert_eq!(&(&cof[0] * &f[0]) + &(&cof[1] * &f[1]), p);
        assert!(gb.normal_form(&ModVector::new(vec![p.clone(), p])).is_err());
    }

    #[test]
    fn membership_examples() {
        let xy = ["x", "y"];
        let gens = ps(&["2*x", "3*y^2"], &xy);
        match ideal_membership(&parse_poly("x^2+y^3", &xy).unwrap(), &gens).unwrap() {
            Membership::Member(c) => {
                assert_eq!(c, ps(&["1/2*x", "1/3*y"], &xy));
            }
            Membership::NonMember => panic!("expected member"),
        }
        assert_eq!(ideal_membership(&Poly::one(2), &ps(&["x", "y"], &xy)).unwrap(), Membership::NonMember);
        assert_eq!(ideal_membership(&parse_poly("y", &xy).unwrap(), &ps(&["x"], &xy)).unwrap(), Membership::NonMember);
    }

    #[test]
    fn koszul_syzygy() {
        let xy = ["x", "y"];
        let gens = ps(&["x", "y"], &xy);
        let syz = syzygies(&gens);
        assert_eq!(syz.len(), 1);
        assert_eq!(syz[0].components(), &ps(&["y", "-x"], &xy)[..]);
        assert!(syzygies(&ps(&["x^2 + y"], &xy)).is_empty());
    }

    #[test]
    fn node_syzygies_give_euler_fields() {
        let xy = ["x", "y"];
        let gens = ps(&["x*y", "y", "x"], &xy);
        let syz = syzygies(&gens);
        for s in &syz {
            assert!(s.dot(&gens).is_zero());
        }
        let mgb = buchberger(&syz, TermOrder::TermOverPosition(MonomialOrder::GrevLex));
        for target in [ps(&["-1", "x", "0"], &xy), ps(&["-1", "0", "y"], &xy)] {
            assert!(mgb.contains(&ModVector::new(target)).unwrap());
        }
    }

    #[test]
    fn module_basis_position_over_term() {
        let xy = ["x", "y"];
        let a = ModVector::new(ps(&["x", "y"], &xy));
        let b = ModVector::new(ps(&["y", "0"], &xy));
        for order in [
            TermOrder::PositionOverTerm(MonomialOrder::GrevLex),
            TermOrder::TermOverPosition(MonomialOrder::GrevLex),
        ] {
            let gb = buchberger(&[a.clone(), b.clone()], order);
            assert!(gb.check_s_pairs());
            let v = a.mul_poly(&parse_poly("y", &xy).unwrap()).sub(&b.mul_poly(&parse_poly("x", &xy).unwrap()));
            assert!(gb.contains(&v).unwrap());
            assert!(!gb.contains(&ModVector::new(ps(&["1", "0"], &xy))).unwrap());
        }
    }
}
