//! Fraction-free sparse row echelon forms over the integers.
//!
//! Rows are kept primitive (coprime integer entries, positive leading
//! entry). A row's pivot is its first nonzero column, so the pivot set of
//! the echelon form depends only on the row space and the column order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyring::Rat;

/// Sparse integer row; entries sorted by strictly increasing column.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Clears denominators of a rational row and makes it primitive.
pub fn row_from_rats<I>(entries: I) -> SparseRow
where
    I: IntoIterator<Item = (usize, Rat)>,
{
    let mut v: Vec<(usize, Rat)> = entries.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by_key(|(c, _)| *c);
    let mut merged: Vec<(usize, Rat)> = Vec::with_capacity(v.len());
    for (c, x) in v {
        match merged.last_mut() {
            Some((lc, lx)) if *lc == c => *lx += x,
            _ => merged.push((c, x)),
        }
    }
    merged.retain(|(_, x)| !x.is_zero());
    let mut den = BigInt::one();
    for (_, x) in &merged {
        den = den.lcm(x.denom());
    }
    let mut row: SparseRow = merged.into_iter().map(|(c, x)| (c, x.numer() * (&den / x.denom()))).collect();
    make_primitive(&mut row);
    row
}

fn make_primitive(row: &mut SparseRow) {
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// `a*r - b*p`.
fn combine(r: &SparseRow, a: &BigInt, p: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let take_r = j >= p.len() || (i < r.len() && r[i].0 < p[j].0);
        let take_p = i >= r.len() || (j < p.len() && p[j].0 < r[i].0);
        if take_r {
            out.push((r[i].0, a * &r[i].1));
            i += 1;
        } else if take_p {
            out.push((p[j].0, -(b * &p[j].1)));
            j += 1;
        } else {
            let v = a * &r[i].1 - b * &p[j].1;
            if !v.is_zero() {
                out.push((r[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally built row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    pivots: Vec<Option<SparseRow>>,
    rank: usize,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, pivots: vec![None; ncols], rank: 0 }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Eliminates leading entries until the leading column has no pivot.
    /// Returns the empty row iff `row` lies in the row space.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        while let Some((c, a)) = row.first() {
            let Some(p) = &self.pivots[*c] else { break };
            let b = &p[0].1;
            let g = a.gcd(b);
            let (ra, pb) = (b / &g, a / &g);
            row = combine(&row, &ra, p, &pb);
            make_primitive(&mut row);
        }
        row
    }

    /// Inserts a row; returns its pivot column if it enlarged the row space.
    pub fn insert(&mut self, row: SparseRow) -> Option<usize> {
        let row = self.reduce(row);
        let c = row.first()?.0;
        assert!(c < self.ncols, "column {c} out of range");
        self.pivots[c] = Some(row);
        self.rank += 1;
        Some(c)
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivots[c].is_some()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivots[c].is_some()).collect()
    }

    /// Solves for the pivot variables given values for the free ones.
    /// Free columns not listed are 0.
    fn back_substitute(&self, assigned: &[(usize, Rat)], extra: Option<usize>) -> Vec<Rat> {
        let mut x = vec![Rat::zero(); self.ncols];
        for (c, v) in assigned {
            x[*c] = v.clone();
        }
        for c in (0..self.ncols).rev() {
            let Some(row) = &self.pivots[c] else { continue };
            if Some(c) == extra {
                continue;
            }
            let mut acc = Rat::zero();
            let mut rhs = Rat::zero();
            for (j, a) in &row[1..] {
                if Some(*j) == extra {
                    rhs = Rat::from_integer(a.clone());
                } else {
                    acc += Rat::from_integer(a.clone()) * &x[*j];
                }
            }
            x[c] = (rhs - acc) / Rat::from_integer(row[0].1.clone());
        }
        x
    }

    /// Basis of the right kernel `{x : row . x = 0 for every row}`, one
    /// vector per free column with that entry set to 1.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        (0..self.ncols)
            .filter(|&c| self.pivots[c].is_none())
            .map(|free| self.back_substitute(&[(free, Rat::one())], None))
            .collect()
    }
}

/// Solves `A x = b` exactly. Each equation is `(sparse coefficients, rhs)`.
/// Returns the solution with all free variables set to zero, or `None` if
/// the system is inconsistent.
pub fn solve(ncols: usize, equations: Vec<(Vec<(usize, Rat)>, Rat)>) -> Option<Vec<Rat>> {
    let mut ech = Echelon::new(ncols + 1);
    for (coeffs, rhs) in equations {
        let row = row_from_rats(coeffs.into_iter().chain(std::iter::once((ncols, rhs))));
        ech.insert(row);
    }
    if ech.is_pivot(ncols) {
        return None;
    }
    let mut x = ech.back_substitute(&[], Some(ncols));
    x.truncate(ncols);
    Some(x)
}

/// Rank of a family of rational rows.
pub fn rank(ncols: usize, rows: impl IntoIterator<Item = Vec<(usize, Rat)>>) -> usize {
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(row_from_rats(r));
    }
    ech.rank()
}
