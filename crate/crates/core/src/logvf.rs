//! Logarithmic vector fields `Der(-log D)` of a hypersurface germ `D = {f = 0}`.
//!
//! A field `δ = sum s_i ∂_i` is logarithmic iff `δ(f) = a·f` for some
//! multiplier `a`, i.e. iff `(-a, s_1, .., s_n)` is a syzygy of
//! `(f, f_1, .., f_n)`. Syzygies over the polynomial ring generate the
//! localized module, so the same generators serve at the origin.

use std::fmt;

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::grobner::{self, GroebnerBasis, ModVector, TermOrder};
use crate::jetlocal::{self, ColengthResult};
use crate::linalg;
use crate::polyring::{jacobian_ideals, Monomial, MonomialOrder, Poly, Rat, Weights};

/// `δ = sum s_i ∂_i` together with its multiplier `a`, `δ(f) = a·f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LogDerivation {
    pub multiplier: Poly,
    pub coefficients: Vec<Poly>,
}

impl LogDerivation {
    pub fn nvars(&self) -> usize {
        self.coefficients.len()
    }

    /// `δ(p) = sum s_i ∂_i p`.
    pub fn apply(&self, p: &Poly) -> Poly {
        let mut acc = Poly::zero(p.nvars());
        for (i, s) in self.coefficients.iter().enumerate() {
            if !s.is_zero() {
                acc = &acc + &(s * &p.partial_derivative(i).expect("index in range"));
            }
        }
        acc
    }

    /// Re-expands `sum s_i f_i - a f`.
    pub fn verify(&self, f: &Poly) -> bool {
        (&self.apply(f) - &(&self.multiplier * f)).is_zero()
    }

    /// The syzygy `(-a, s_1, .., s_n)` of `(f, f_1, .., f_n)`.
    pub fn to_syzygy(&self) -> ModVector {
        let mut comps = Vec::with_capacity(self.nvars() + 1);
        comps.push(-&self.multiplier);
        comps.extend(self.coefficients.iter().cloned());
        ModVector::new(comps)
    }

    pub fn from_syzygy(s: &ModVector) -> Self {
        let c = s.components();
        LogDerivation { multiplier: -&c[0], coefficients: c[1..].to_vec() }
    }

    /// All coefficients vanish at the origin, i.e. `δ ∈ m·Der`.
    pub fn vanishes_at_origin(&self) -> bool {
        self.coefficients.iter().all(|s| s.constant_term().is_zero())
    }

    pub fn linear_part(&self) -> LinearPart {
        let n = self.nvars();
        let matrix = self
            .coefficients
            .iter()
            .map(|s| (0..n).map(|j| s.coeff(&Monomial::var(n, j))).collect())
            .collect();
        LinearPart { matrix }
    }

    pub fn scale(&self, c: &Poly) -> LogDerivation {
        LogDerivation { multiplier: &self.multiplier * c, coefficients: self.coefficients.iter().map(|s| s * c).collect() }
    }

    pub fn add(&self, other: &LogDerivation) -> LogDerivation {
        LogDerivation {
            multiplier: &self.multiplier + &other.multiplier,
            coefficients: self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a + b).collect(),
        }
    }

    /// `s_1*dx + s_2*dy` style rendering.
    pub fn render<S: AsRef<str>>(&self, names: &[S]) -> String {
        let mut out = String::new();
        for (s, v) in self.coefficients.iter().zip(names).filter(|(s, _)| !s.is_zero()) {
            let body = s.render(names);
            let (neg, body) = match body.strip_prefix('-') {
                Some(rest) if s.len() == 1 => (true, rest.to_string()),
                _ => (false, body),
            };
            let term = if s.len() > 1 { format!("({body})*d{}", v.as_ref()) } else { format!("{body}*d{}", v.as_ref()) };
            match (out.is_empty(), neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            "0".to_string()
        } else {
            out
        }
    }
}

impl fmt::Display for LogDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Poly::default_names(self.nvars())))
    }
}

/// Matrix of `δ_0`: entry `(i, j)` is the coefficient of `x_j` in `s_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearPart {
    pub matrix: Vec<Vec<Rat>>,
}

impl LinearPart {
    pub fn trace(&self) -> Rat {
        self.matrix.iter().enumerate().fold(Rat::zero(), |acc, (i, row)| acc + &row[i])
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().all(|r| r.iter().all(Zero::is_zero))
    }
}

/// Generating set of `Der(-log D)`.
#[derive(Clone, Debug)]
pub struct LogDerModule {
    pub f: Poly,
    pub generators: Vec<LogDerivation>,
}

impl LogDerModule {
    pub fn verify(&self) -> bool {
        self.generators.iter().all(|d| d.verify(&self.f))
    }

    /// Gröbner basis (term over position) of the syzygy vectors.
    pub fn syzygy_basis(&self) -> GroebnerBasis {
        let vs: Vec<ModVector> = self.generators.iter().map(LogDerivation::to_syzygy).collect();
        grobner::buchberger(&vs, TermOrder::TermOverPosition(MonomialOrder::GrevLex))
    }

    /// Membership of a field (with its multiplier) in the polynomial module
    /// spanned by the generators.
    pub fn contains(&self, field: &LogDerivation) -> bool {
        if self.generators.is_empty() {
            return field.to_syzygy().is_zero();
        }
        self.syzygy_basis().contains(&field.to_syzygy()).expect("matching rank")
    }
}

/// Generators of `Der(-log D)` from the syzygies of `(f, f_1, .., f_n)`.
pub fn derlog_generators(f: &Poly) -> LogDerModule {
    assert!(!f.is_zero(), "f must be nonzero");
    let (_, j) = jacobian_ideals(f);
    let generators = grobner::syzygies(&j).iter().map(LogDerivation::from_syzygy).collect();
    LogDerModule { f: f.clone(), generators }
}

/// Outcome of the `μ = τ` test.
#[derive(Clone, Debug)]
pub struct Quasihomogeneity {
    pub quasihomogeneous: bool,
    pub mu: ColengthResult,
    pub tau: ColengthResult,
}

/// Decides quasihomogeneity of an isolated germ by comparing Milnor and
/// Tjurina numbers.
pub fn quasihomogeneity_test(f: &Poly, cutoff: usize) -> Result<Quasihomogeneity> {
    let (mu, tau) = jetlocal::milnor_tjurina(f, cutoff)?;
    let quasihomogeneous = mu.finite() == tau.finite();
    Ok(Quasihomogeneity { quasihomogeneous, mu, tau })
}

/// Positive weights making `f` weighted homogeneous of degree 1 in the
/// given coordinates, if they exist.
///
/// `None` does not rule out quasihomogeneity after a coordinate change.
/// When the solution is not unique, the barycenter of the vertices of
/// `{w >= 0, sum w_i a_i = 1 on the support}` is returned; it is strictly
/// positive whenever any positive solution exists.
pub fn find_weights(f: &Poly) -> Option<Weights> {
    let n = f.nvars();
    let support: Vec<Vec<u32>> = f.terms().map(|(m, _)| m.exponents().to_vec()).collect();
    if support.is_empty() {
        return None;
    }
    let used: Vec<usize> = (0..n).filter(|&i| support.iter().any(|a| a[i] > 0)).collect();
    // solve with the variables of `free_zero` pinned to 0; unique solutions only
    let solve_pinned = |pinned: &[usize]| -> Option<Vec<Rat>> {
        let active: Vec<usize> = used.iter().copied().filter(|i| !pinned.contains(i)).collect();
        let eqs: Vec<(Vec<(usize, Rat)>, Rat)> = support
            .iter()
            .map(|a| {
                let row = active.iter().enumerate().map(|(c, &i)| (c, Rat::from_integer(a[i].into()))).collect();
                (row, Rat::one())
            })
            .collect();
        let rank = linalg::rank(active.len(), eqs.iter().map(|(r, _)| r.clone()));
        if rank != active.len() {
            return None;
        }
        let x = linalg::solve(active.len(), eqs)?;
        let mut w = vec![Rat::zero(); n];
        for (c, &i) in active.iter().enumerate() {
            w[i] = x[c].clone();
        }
        Some(w)
    };

    let mut vertices: Vec<Vec<Rat>> = Vec::new();
    for mask in 0u32..(1 << used.len()) {
        let pinned: Vec<usize> = used.iter().enumerate().filter(|(b, _)| mask & (1 << b) != 0).map(|(_, &i)| i).collect();
        if let Some(w) = solve_pinned(&pinned) {
            if w.iter().all(|x| *x >= Rat::zero()) && !vertices.contains(&w) {
                vertices.push(w);
            }
        }
    }
    if vertices.is_empty() {
        return None;
    }
    let k = Rat::from_integer((vertices.len() as i64).into());
    let mut w: Vec<Rat> = (0..n)
        .map(|i| vertices.iter().fold(Rat::zero(), |acc, v| acc + &v[i]) / &k)
        .collect();
    for i in 0..n {
        if !used.contains(&i) {
            w[i] = Rat::one();
        }
    }
    let w = Weights::new(w).ok()?;
    (f.weighted_homogeneous_degree(&w).ok()?? == Rat::one()).then_some(w)
}

/// The Euler field `sum w_i x_i ∂_i`, with multiplier 1 when `f` has weighted degree 1.
pub fn euler_field(w: &Weights) -> LogDerivation {
    let n = w.len();
    LogDerivation {
        multiplier: Poly::one(n),
        coefficients: (0..n).map(|i| Poly::var(n, i).scale(&w.as_slice()[i])).collect(),
    }
}

/// Per-generator linear-part traces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceReport {
    pub traces: Vec<Rat>,
    /// True when the zero-trace property was required and checked.
    pub vanishing_checked: bool,
    /// Number of random `O`-combinations whose linear part was also checked.
    pub combinations_checked: usize,
}

/// Linear-part traces of the generators. For non-quasihomogeneous
/// isolated germs every trace must vanish, also on random combinations
/// `sum p_j δ_j` with affine-linear `p_j`.
pub fn trace_vanishing_report(module: &LogDerModule, quasihomogeneous: bool) -> Result<TraceReport> {
    let traces: Vec<Rat> = module.generators.iter().map(|d| d.linear_part().trace()).collect();
    if quasihomogeneous {
        return Ok(TraceReport { traces, vanishing_checked: false, combinations_checked: 0 });
    }
    if let Some((index, t)) = traces.iter().enumerate().find(|(_, t)| !t.is_zero()) {
        return Err(Error::TraceObstructionFound { index, trace: crate::polyring::fmt_rat(t) });
    }
    let n = module.f.nvars();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let rounds = 8;
    for _ in 0..rounds {
        let mut combo = LogDerivation { multiplier: Poly::zero(n), coefficients: vec![Poly::zero(n); n] };
        for d in &module.generators {
            let mut p = Poly::constant(n, Rat::from_integer(rng.random_range(-9i64..=9).into()));
            for i in 0..n {
                p.add_term(Monomial::var(n, i), Rat::from_integer(rng.random_range(-9i64..=9).into()));
            }
            combo = combo.add(&d.scale(&p));
        }
        let t = combo.linear_part().trace();
        if !t.is_zero() {
            return Err(Error::TraceObstructionFound { index: usize::MAX, trace: crate::polyring::fmt_rat(&t) });
        }
    }
    Ok(TraceReport { traces, vanishing_checked: true, combinations_checked: rounds })
}

/// The fields `f_i ∂_j - f_j ∂_i`, `i < j`, each with multiplier 0.
pub fn annihilator_generators(f: &Poly) -> Vec<LogDerivation> {
    let n = f.nvars();
    let grad = f.gradient();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut coefficients = vec![Poly::zero(n); n];
            coefficients[j] = grad[i].clone();
            coefficients[i] = -&grad[j];
            out.push(LogDerivation { multiplier: Poly::zero(n), coefficients });
        }
    }
    out
}

/// Determinant of a square polynomial matrix by cofactor expansion.
pub fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    let nv = m[0][0].nvars();
    match n {
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = Poly::zero(nv);
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, p)| p.clone()).collect()).collect();
                let term = &m[0][c] * &poly_det(&minor);
                acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Freeness {
    /// `det = quotient · f` with `quotient(0) != 0`.
    Free { determinant: Poly, quotient: Poly },
    Inconclusive { determinant: Poly },
}

/// Saito's criterion for `n` logarithmic fields.
pub fn saito_freeness_check(f: &Poly, fields: &[LogDerivation]) -> Result<Freeness> {
    let n = f.nvars();
    if fields.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: fields.len() });
    }
    let matrix: Vec<Vec<Poly>> = fields.iter().map(|d| d.coefficients.clone()).collect();
    let determinant = poly_det(&matrix);
    let gb = grobner::ideal_basis(std::slice::from_ref(f), TermOrder::GrevLex);
    let (rem, cof) = gb.normal_form_poly(&determinant)?;
    if rem.is_zero() && !cof[0].constant_term().is_zero() {
        let quotient = cof[0].clone();
        debug_assert_eq!(&quotient * f, determinant);
        return Ok(Freeness::Free { determinant, quotient });
    }
    Ok(Freeness::Inconclusive { determinant })
}

/// Searches `n`-subsets of the generators (lexicographic index order,
/// at most `max_subsets`) for one passing Saito's criterion.
pub fn find_free_basis(module: &LogDerModule, max_subsets: usize) -> Option<(Vec<usize>, Freeness)> {
    let n = module.f.nvars();
    let g = module.generators.len();
    if g < n {
        return None;
    }
    let mut idx: Vec<usize> = (0..n).collect();
    let mut tried = 0;
    loop {
        if tried >= max_subsets {
            return None;
        }
        tried += 1;
        let fields: Vec<LogDerivation> = idx.iter().map(|&i| module.generators[i].clone()).collect();
        if let Ok(r @ Freeness::Free { .. }) = saito_freeness_check(&module.f, &fields) {
            return Some((idx, r));
        }
        // next combination
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < g - n + i {
                idx[i] += 1;
                for k in (i + 1)..n {
                    idx[k] = idx[k - 1] + 1;
                }
                break;
            }
        }
    }
}
