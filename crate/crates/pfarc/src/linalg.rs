//! Exact sparse integer linear algebra.
//!
//! Rank computations run a fraction-free row elimination over the integers:
//! rows are combined by cross-multiplication and divided by their content,
//! so intermediates stay integral and bounded. The span solver additionally
//! records how each echelon row was combined from the input vectors, which
//! turns membership queries into exact coefficient extraction; only that
//! final extraction forms rational quotients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Sparse integer vector: column index to non-zero coefficient.
pub type SparseVec = BTreeMap<usize, BigInt>;

/// Build a sparse vector, dropping zero entries.
pub fn sparse_from(entries: impl IntoIterator<Item = (usize, BigInt)>) -> SparseVec {
    entries
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

fn content(v: &SparseVec) -> BigInt {
    let mut g = BigInt::zero();
    for c in v.values() {
        g = num_integer::Integer::gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_by(v: &mut SparseVec, d: &BigInt) {
    if d.is_one() {
        return;
    }
    for c in v.values_mut() {
        *c = &*c / d;
    }
}

/// `dst = a*dst - b*src`, then divided by its content.
fn cross_eliminate(dst: &mut SparseVec, a: &BigInt, src: &SparseVec, b: &BigInt) {
    for c in dst.values_mut() {
        *c *= a;
    }
    for (col, c) in src {
        let entry = dst.entry(*col).or_insert_with(BigInt::zero);
        *entry -= b * c;
    }
    dst.retain(|_, c| !c.is_zero());
    let g = content(dst);
    if !g.is_zero() && !g.is_one() {
        divide_by(dst, &g);
    }
}

/// Rank over the rationals of the span of the given integer vectors.
pub fn rank(vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    // pivot column -> reduced row with that leading column
    let mut pivots: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for mut row in vectors {
        loop {
            let Some((&lead, _)) = row.iter().next() else { break };
            if !pivots.contains_key(&lead) {
                let g = content(&row);
                if !g.is_zero() && !g.is_one() {
                    divide_by(&mut row, &g);
                }
                pivots.insert(lead, row);
                break;
            }
            let p = &pivots[&lead];
            let a = p[&lead].clone();
            let b = row[&lead].clone();
            cross_eliminate(&mut row, &a, p, &b);
        }
    }
    pivots.len()
}

/// Echelon form of a list of vectors that remembers, for every echelon row,
/// its expression as a rational combination of the original vectors.
///
/// Combination bookkeeping can be restricted to the first `tracked` inputs;
/// `solve` then reports coefficients for those inputs only, which is enough
/// when the trailing inputs are an ideal component whose coefficients are
/// never inspected.
pub struct SpanSolver {
    tracked: usize,
    // pivot column -> (reduced row, combination over the tracked inputs)
    pivots: BTreeMap<usize, (SparseVec, Vec<BigRational>)>,
}

impl SpanSolver {
    pub fn new(vectors: &[SparseVec]) -> Self {
        Self::with_tracked(vectors, vectors.len())
    }

    pub fn with_tracked(vectors: &[SparseVec], tracked: usize) -> Self {
        let mut solver = SpanSolver {
            tracked,
            pivots: BTreeMap::new(),
        };
        for (i, v) in vectors.iter().enumerate() {
            let mut combo = vec![BigRational::zero(); tracked];
            if i < tracked {
                combo[i] = BigRational::one();
            }
            solver.insert(v.clone(), combo);
        }
        solver
    }

    fn insert(&mut self, mut row: SparseVec, mut combo: Vec<BigRational>) {
        loop {
            let Some((&lead, _)) = row.iter().next() else { return };
            if !self.pivots.contains_key(&lead) {
                let g = content(&row);
                if !g.is_zero() && !g.is_one() {
                    divide_by(&mut row, &g);
                    let gr = BigRational::from(g);
                    for c in combo.iter_mut() {
                        *c /= &gr;
                    }
                }
                self.pivots.insert(lead, (row, combo));
                return;
            }
            let (p, pcombo) = &self.pivots[&lead];
            let a = p[&lead].clone();
            let b = row[&lead].clone();
            // row := a*row - b*p, combo kept in lockstep
            for c in row.values_mut() {
                *c *= &a;
            }
            for (col, c) in p {
                let entry = row.entry(*col).or_insert_with(BigInt::zero);
                *entry -= &b * c;
            }
            row.retain(|_, c| !c.is_zero());
            let (ar, br) = (BigRational::from(a), BigRational::from(b));
            for (c, pc) in combo.iter_mut().zip(pcombo.iter()) {
                *c = &*c * &ar - pc * &br;
            }
            let g = content(&row);
            if !g.is_zero() && !g.is_one() {
                divide_by(&mut row, &g);
                let gr = BigRational::from(g);
                for c in combo.iter_mut() {
                    *c /= &gr;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Express `target` in the span of the input vectors. Returns the
    /// coefficient over each tracked input, or `None` when the target is
    /// outside the span. Free inputs (those that never became pivots) get 0.
    pub fn solve(&self, target: &SparseVec) -> Option<Vec<BigRational>> {
        let mut residual = target.clone();
        let mut denom = BigInt::one();
        let mut coeffs = vec![BigRational::zero(); self.tracked];
        loop {
            let Some((&lead, _)) = residual.iter().next() else {
                return Some(coeffs);
            };
            let (prow, pcombo) = self.pivots.get(&lead)?;
            let a = residual[&lead].clone();
            let d = prow[&lead].clone();
            // residual/denom loses (a / (denom * d)) * prow
            let t = BigRational::new(a.clone(), &denom * &d);
            for (c, pc) in coeffs.iter_mut().zip(pcombo.iter()) {
                *c += &t * pc;
            }
            for c in residual.values_mut() {
                *c *= &d;
            }
            for (col, c) in prow {
                let entry = residual.entry(*col).or_insert_with(BigInt::zero);
                *entry -= &a * c;
            }
            residual.retain(|_, c| !c.is_zero());
            denom *= &d;
            // keep the pair (residual, denom) reduced
            let mut g = content(&residual);
            g = num_integer::Integer::gcd(&g, &denom);
            if !g.is_zero() && !g.is_one() {
                divide_by(&mut residual, &g);
                denom /= &g;
            }
        }
    }

    /// Whether `target` lies in the rational span of the inputs.
    pub fn contains(&self, target: &SparseVec) -> bool {
        let mut residual = target.clone();
        loop {
            let Some((&lead, _)) = residual.iter().next() else { return true };
            let Some((prow, _)) = self.pivots.get(&lead) else { return false };
            let a = residual[&lead].clone();
            let d = prow[&lead].clone();
            cross_eliminate(&mut residual, &d, prow, &a);
        }
    }
}

/// Inverse of a small dense integer matrix, exact. Returns `None` when the
/// matrix is singular; asserts entries of the inverse are integers, which
/// holds exactly for unimodular inputs.
pub fn invert_integer_matrix(m: &[Vec<BigInt>]) -> Option<Vec<Vec<BigInt>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|c| BigRational::from(c.clone())).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let d = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &d;
            inv[col][j] /= &d;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &a[col][j] * &f;
                a[r][j] -= t;
                let t = &inv[col][j] * &f;
                inv[r][j] -= t;
            }
        }
    }
    let mut out = Vec::with_capacity(n);
    for row in inv {
        let mut int_row = Vec::with_capacity(n);
        for c in row {
            if !c.denom().is_one() {
                return None;
            }
            int_row.push(c.numer().clone());
        }
        out.push(int_row);
    }
    Some(out)
}
