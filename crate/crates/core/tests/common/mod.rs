#![allow(dead_code)]

use std::collections::BTreeMap;

use logcoh::corpus::{Corpus, CorpusEntry};
use logcoh::localcoh::{self, inverse_monomials_up_to, module_action, CohElem};
use logcoh::polyring::{parse_poly, Monomial};
use logcoh::{Poly, Rat};
use num_traits::{One, Zero};

pub fn p(s: &str, vars: &[&str]) -> Poly {
    parse_poly(s, vars).unwrap()
}

pub fn entry_poly(e: &CorpusEntry) -> Poly {
    parse_poly(&e.f, &e.vars).unwrap()
}

pub fn corpus() -> Corpus {
    Corpus::bundled()
}

/// Inverse monomial with coefficient 1.
pub fn inv(a: &[u32]) -> CohElem {
    CohElem::inverse_monomial(a.to_vec()).unwrap()
}

/// Plain Gauss-Jordan on a dense augmented system; `None` if inconsistent.
pub fn dense_solve(mut rows: Vec<(Vec<Rat>, Rat)>, ncols: usize) -> Option<Vec<Rat>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(i) = (r..rows.len()).find(|&i| !rows[i].0[c].is_zero()) else { continue };
        rows.swap(r, i);
        let lead = rows[r].0[c].clone();
        for x in rows[r].0.iter_mut() {
            *x = &*x / &lead;
        }
        rows[r].1 = &rows[r].1 / &lead;
        for i in 0..rows.len() {
            if i != r && !rows[i].0[c].is_zero() {
                let fac = rows[i].0[c].clone();
                for cc in c..ncols {
                    let v = &fac * &rows[r].0[cc];
                    rows[i].0[cc] -= v;
                }
                let v = &fac * &rows[r].1;
                rows[i].1 -= v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|(_, b)| !b.is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); ncols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = rows[row].1.clone();
    }
    Some(x)
}

/// Dense rank.
pub fn dense_rank(rows: Vec<Vec<Rat>>, ncols: usize) -> usize {
    let n = rows.len();
    let aug: Vec<(Vec<Rat>, Rat)> = rows.into_iter().map(|r| (r, Rat::zero())).collect();
    let mut m = aug;
    let mut r = 0;
    for c in 0..ncols {
        let Some(i) = (r..n).find(|&i| !m[i].0[c].is_zero()) else { continue };
        m.swap(r, i);
        for i in (r + 1)..n {
            if !m[i].0[c].is_zero() {
                let fac = &m[i].0[c] / &m[r].0[c];
                for cc in c..ncols {
                    let v = &fac * &m[r].0[cc];
                    m[i].0[cc] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Expected `f_i h` for the unit class: `[1/(x_1 .. x_i^2 .. x_n)]`.
pub fn doubled(n: usize, i: usize) -> CohElem {
    let mut a = vec![1; n];
    a[i] = 2;
    inv(&a)
}

/// Searches `h` with `(f h, f_1 h, .., f_n h) = (0, -∂_1 g, .., -∂_n g)`
/// over all inverse monomials of pole order `<= cap` by coefficient
/// matching, without using the residue pairing.
pub fn brute_force_certificate(f: &Poly, g: &CohElem, cap: u32) -> Option<CohElem> {
    let n = f.nvars();
    let cols = inverse_monomials_up_to(n, cap);
    let mut alpha = vec![f.clone()];
    alpha.extend(f.gradient());
    let mut targets = vec![CohElem::zero(n)];
    for i in 0..n {
        // -∂_i [x^-a] = a_i [x^-(a+e_i)], written out by hand
        let mut t = CohElem::zero(n);
        for (a, c) in g.terms() {
            let mut e = a.exponents().to_vec();
            let ai = e[i];
            e[i] += 1;
            t = t.add(&CohElem::from_terms(n, [(e, c * Rat::from_integer(ai.into()))]).unwrap());
        }
        targets.push(t);
    }
    let mut rows: BTreeMap<(usize, Monomial), (Vec<Rat>, Rat)> = BTreeMap::new();
    let blank = || (vec![Rat::zero(); cols.len()], Rat::zero());
    for (k, gk) in alpha.iter().enumerate() {
        for (j, a) in cols.iter().enumerate() {
            for (t, c) in module_action(gk, &inv(a.exponents())).terms() {
                rows.entry((k, t.clone())).or_insert_with(blank).0[j] += c;
            }
        }
        for (t, c) in targets[k].terms() {
            rows.entry((k, t.clone())).or_insert_with(blank).1 = c.clone();
        }
    }
    let x = dense_solve(rows.into_values().collect(), cols.len())?;
    let mut h = CohElem::zero(n);
    for (a, c) in cols.iter().zip(x) {
        if !c.is_zero() {
            h = h.add(&CohElem::from_terms(n, [(a.exponents().to_vec(), c)]).unwrap());
        }
    }
    debug_assert!(localcoh::verify_certificate(f, g, &h));
    Some(h)
}

pub fn one() -> Rat {
    Rat::one()
}
