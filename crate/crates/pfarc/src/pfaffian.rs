//! Pfaffians of diagonal minors of the generic skew-symmetric matrix and
//! their normalized jet derivatives.
//!
//! A minor is named by its strictly increasing row list `u_1 < ... < u_h`
//! (`h` even). The Pfaffian is the signed sum over perfect matchings of the
//! rows; its `n`-th normalized derivative distributes jet weight `n` over
//! the matched pairs. Both are computed directly over the integers.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{Monomial, Poly, XGen, XVars};

/// Row set of a diagonal minor: strictly increasing, even length.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MinorSpec {
    rows: Vec<u32>,
}

impl MinorSpec {
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if rows.len() % 2 != 0 {
            return Err(Error::OddLength(rows));
        }
        if !rows.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::NonMonotoneRows(rows));
        }
        Ok(MinorSpec { rows })
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

/// All perfect matchings of positions `0..h` with their permutation signs.
///
/// Pairs are produced by always matching the smallest unmatched position
/// first, so each matching comes out as `(a_1,b_1),...,(a_l,b_l)` with
/// `a_1 < a_2 < ...` and `a_i < b_i`. The sign is the sign of the
/// permutation `(a_1, b_1, a_2, b_2, ...)` of `0..h`.
fn perfect_matchings(h: usize) -> Vec<(Vec<(usize, usize)>, i32)> {
    fn rec(
        h: usize,
        used: &mut Vec<bool>,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<(Vec<(usize, usize)>, i32)>,
    ) {
        let a = match (0..h).find(|&i| !used[i]) {
            None => {
                let perm: Vec<usize> = current.iter().flat_map(|&(a, b)| [a, b]).collect();
                out.push((current.clone(), perm_sign(&perm)));
                return;
            }
            Some(a) => a,
        };
        used[a] = true;
        for b in (a + 1)..h {
            if used[b] {
                continue;
            }
            used[b] = true;
            current.push((a, b));
            rec(h, used, current, out);
            current.pop();
            used[b] = false;
        }
        used[a] = false;
    }
    let mut out = Vec::new();
    rec(h, &mut vec![false; h], &mut Vec::new(), &mut out);
    out
}

/// Sign of a permutation given as a sequence of distinct comparable values.
pub fn perm_sign<T: Ord>(seq: &[T]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in (i + 1)..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Ordered compositions of `n` into `parts` non-negative summands, in
/// lexicographic order on `(n_1, ..., n_parts)`.
pub fn compositions(n: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(n: u32, parts: usize, stack: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 0 {
            if n == 0 {
                out.push(stack.clone());
            }
            return;
        }
        if parts == 1 {
            stack.push(n);
            out.push(stack.clone());
            stack.pop();
            return;
        }
        for first in 0..=n {
            stack.push(first);
            rec(n - first, parts - 1, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// The Pfaffian of the minor as an integer polynomial; 1 for the empty minor.
pub fn pfaffian(p: u32, minor: &MinorSpec) -> Poly<XGen> {
    pfaffian_derivative(p, minor, 0)
}

/// The `n`-th normalized derivative of the Pfaffian, expanded directly as a
/// signed sum over perfect matchings and weight compositions.
pub fn pfaffian_derivative(p: u32, minor: &MinorSpec, n: u32) -> Poly<XGen> {
    let vars = XVars { p };
    let rows = minor.rows();
    let h = rows.len();
    if h == 0 {
        return if n == 0 {
            Poly::one(vars)
        } else {
            Poly::zero(vars)
        };
    }
    let l = h / 2;
    let mut terms = Vec::new();
    for (pairs, sign) in perfect_matchings(h) {
        for comp in compositions(n, l) {
            let mono = Monomial::from_pairs(pairs.iter().zip(comp.iter()).map(|(&(a, b), &k)| {
                (
                    XGen {
                        k,
                        u: rows[a],
                        v: rows[b],
                    },
                    1,
                )
            }));
            terms.push((mono, BigInt::from(sign)));
        }
    }
    Poly::from_terms(vars, terms)
}

/// Value of a written sequence `dbar^n |w_1, ..., w_h|` with rows in any
/// order and repeats allowed.
///
/// Zero on a repeated row; otherwise the sign of the permutation sorting
/// the written list into its canonical descending form, times the
/// derivative of the Pfaffian on the sorted rows.
pub fn jseq_value(p: u32, written_rows: &[u32], n: u32) -> Result<Poly<XGen>> {
    if written_rows.len() % 2 != 0 {
        return Err(Error::OddLength(written_rows.to_vec()));
    }
    if let Some(&bad) = written_rows.iter().find(|&&r| r < 1 || r > p) {
        return Err(Error::IndexOutOfBounds {
            u: bad,
            v: bad,
            k: n,
            p,
        });
    }
    let mut sorted = written_rows.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(Poly::zero(XVars { p }));
    }
    // The canonical sequence reads descending left-to-right, i.e. position i
    // from the right holds the i-th smallest row; reading the written list
    // right-to-left therefore spells out the permutation whose sign we need.
    let reversed: Vec<u32> = written_rows.iter().rev().copied().collect();
    let sign = perm_sign(&reversed);
    let minor = MinorSpec::new(sorted)?;
    let poly = pfaffian_derivative(p, &minor, n);
    Ok(if sign < 0 { poly.neg() } else { poly })
}

/// Number of perfect matchings of `h` points: `(h-1)!! = 1*3*5*...*(h-1)`.
pub fn double_factorial_odd(h: usize) -> usize {
    if h == 0 {
        return 1;
    }
    (1..h).step_by(2).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{dbar, Generator};
    use itertools::Itertools;
    use num_traits::One;

    fn xp(p: u32, u: u32, v: u32, k: u32) -> Poly<XGen> {
        Poly::generator(XVars { p }, XGen { k, u, v }).unwrap()
    }

    fn minor(rows: &[u32]) -> MinorSpec {
        MinorSpec::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn two_by_two_pfaffian() {
        assert_eq!(pfaffian(2, &minor(&[1, 2])), xp(2, 1, 2, 0));
    }

    #[test]
    fn four_by_four_pfaffian() {
        let expect = xp(4, 1, 2, 0)
            .mul(&xp(4, 3, 4, 0))
            .sub(&xp(4, 1, 3, 0).mul(&xp(4, 2, 4, 0)))
            .add(&xp(4, 1, 4, 0).mul(&xp(4, 2, 3, 0)));
        assert_eq!(pfaffian(4, &minor(&[1, 2, 3, 4])), expect);
    }

    #[test]
    fn empty_pfaffian_is_one() {
        assert_eq!(pfaffian(2, &minor(&[])), Poly::one(XVars { p: 2 }));
        assert!(pfaffian_derivative(2, &minor(&[]), 1).is_zero());
    }

    #[test]
    fn minor_spec_rejects_bad_rows() {
        assert!(MinorSpec::new(vec![1, 2, 3]).is_err());
        assert!(MinorSpec::new(vec![2, 1]).is_err());
        assert!(MinorSpec::new(vec![1, 1]).is_err());
    }

    #[test]
    fn derivative_of_two_by_two() {
        assert_eq!(pfaffian_derivative(2, &minor(&[1, 2]), 1), xp(2, 1, 2, 1));
        assert_eq!(pfaffian_derivative(2, &minor(&[1, 2]), 0), xp(2, 1, 2, 0));
    }

    #[test]
    fn derivative_of_four_by_four() {
        let expect = xp(4, 1, 2, 1)
            .mul(&xp(4, 3, 4, 0))
            .add(&xp(4, 1, 2, 0).mul(&xp(4, 3, 4, 1)))
            .sub(&xp(4, 1, 3, 1).mul(&xp(4, 2, 4, 0)))
            .sub(&xp(4, 1, 3, 0).mul(&xp(4, 2, 4, 1)))
            .add(&xp(4, 1, 4, 1).mul(&xp(4, 2, 3, 0)))
            .add(&xp(4, 1, 4, 0).mul(&xp(4, 2, 3, 1)));
        assert_eq!(pfaffian_derivative(4, &minor(&[1, 2, 3, 4]), 1), expect);
    }

    #[test]
    fn jseq_value_examples() {
        // one transposition: |1,2| = -|2,1|
        assert_eq!(jseq_value(2, &[1, 2], 0).unwrap(), xp(2, 1, 2, 0).neg());
        // repeated row kills the value
        assert!(jseq_value(2, &[1, 1], 3).unwrap().is_zero());
        // canonical written order is the identity
        assert_eq!(jseq_value(2, &[2, 1], 1).unwrap(), xp(2, 1, 2, 1));
        // odd length is a contract violation
        assert!(jseq_value(2, &[1], 0).is_err());
    }

    /// Determinant by cofactor expansion along the first row; the
    /// independent classical oracle for `Pf^2 = det`.
    fn determinant(vars: XVars, entries: &[Vec<Poly<XGen>>]) -> Poly<XGen> {
        let n = entries.len();
        if n == 0 {
            return Poly::one(vars);
        }
        if n == 1 {
            return entries[0][0].clone();
        }
        let mut acc = Poly::zero(vars);
        for j in 0..n {
            let sub: Vec<Vec<Poly<XGen>>> = (1..n)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| entries[r][c].clone())
                        .collect()
                })
                .collect();
            let cofactor = determinant(vars, &sub);
            let signed = if j % 2 == 0 {
                entries[0][j].mul(&cofactor)
            } else {
                entries[0][j].mul(&cofactor).neg()
            };
            acc = acc.add(&signed);
        }
        acc
    }

    fn skew_matrix(p: u32, rows: &[u32]) -> Vec<Vec<Poly<XGen>>> {
        let vars = XVars { p };
        rows.iter()
            .map(|&u| {
                rows.iter()
                    .map(|&v| match crate::ring::normalize_xgen(p, u, v, 0).unwrap() {
                        None => Poly::zero(vars),
                        Some((g, s)) => {
                            let gp = Poly::generator(vars, g).unwrap();
                            if s < 0 {
                                gp.neg()
                            } else {
                                gp
                            }
                        }
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn pfaffian_squared_is_determinant() {
        let p = 7u32;
        for h in [2usize, 4, 6] {
            for rows in (1..=p).combinations(h) {
                let m = minor(&rows);
                let pf = pfaffian(p, &m);
                let det = determinant(XVars { p }, &skew_matrix(p, &rows));
                assert_eq!(pf.mul(&pf), det, "rows {rows:?}");
            }
        }
    }

    #[test]
    fn derivative_agrees_with_dbar_of_pfaffian() {
        let p = 6u32;
        for h in [2usize, 4, 6] {
            for rows in (1..=p).combinations(h) {
                let m = minor(&rows);
                let base = pfaffian(p, &m);
                for n in 0..=3u32 {
                    assert_eq!(
                        pfaffian_derivative(p, &m, n),
                        dbar(n, &base),
                        "rows {rows:?} n {n}"
                    );
                }
            }
        }
    }

    /// The fully symmetrized form: sum over all permutations of the rows and
    /// all weight compositions, divided by l! 2^l. Evaluated with exact
    /// integer arithmetic; the division must be exact.
    fn symmetrized_derivative(p: u32, rows: &[u32], n: u32) -> Poly<XGen> {
        let vars = XVars { p };
        let h = rows.len();
        let l = h / 2;
        let mut acc = Poly::zero(vars);
        for perm in (0..h).permutations(h) {
            let sign = perm_sign(&perm);
            for comp in compositions(n, l) {
                let mut term = Poly::constant(vars, sign);
                for (j, &k) in comp.iter().enumerate() {
                    let u = rows[perm[2 * j]];
                    let v = rows[perm[2 * j + 1]];
                    let factor = match crate::ring::normalize_xgen(p, u, v, k).unwrap() {
                        None => Poly::zero(vars),
                        Some((g, s)) => {
                            let gp = Poly::generator(vars, g).unwrap();
                            if s < 0 {
                                gp.neg()
                            } else {
                                gp
                            }
                        }
                    };
                    term = term.mul(&factor);
                }
                acc = acc.add(&term);
            }
        }
        let mut denom = BigInt::one();
        for i in 1..=l {
            denom *= BigInt::from(i as u64);
        }
        denom *= BigInt::from(2u64).pow(l as u32);
        acc.div_exact(&denom).expect("symmetrized sum not divisible")
    }

    #[test]
    fn symmetrized_form_matches_matching_expansion() {
        for (rows, n_max) in [(vec![1u32, 2], 3u32), (vec![1, 2, 3, 4], 2), (vec![2, 3, 5, 6], 1)] {
            let m = minor(&rows);
            for n in 0..=n_max {
                assert_eq!(
                    symmetrized_derivative(6, &rows, n),
                    pfaffian_derivative(6, &m, n),
                    "rows {rows:?} n {n}"
                );
            }
        }
    }

    #[test]
    fn laplace_expansion_along_first_row() {
        // P(B) = sum_{i=2}^{h} (-1)^i x^(0)_{u_1 u_i} P(B minus rows u_1, u_i)
        let p = 6u32;
        for h in [2usize, 4, 6] {
            for rows in (1..=p).combinations(h) {
                let m = minor(&rows);
                let mut acc = Poly::zero(XVars { p });
                for i in 2..=h {
                    let u1 = rows[0];
                    let ui = rows[i - 1];
                    let rest: Vec<u32> = rows
                        .iter()
                        .copied()
                        .filter(|&r| r != u1 && r != ui)
                        .collect();
                    let sub = pfaffian(p, &minor(&rest));
                    let term = xp(p, u1, ui, 0).mul(&sub);
                    acc = acc.add(&if i % 2 == 0 { term } else { term.neg() });
                }
                assert_eq!(acc, pfaffian(p, &m), "rows {rows:?}");
            }
        }
    }

    #[test]
    fn monomial_count_matches_double_factorial() {
        for h in [0usize, 2, 4, 6] {
            let rows: Vec<u32> = (1..=h as u32).collect();
            let pf = pfaffian(h.max(1) as u32, &minor(&rows));
            assert_eq!(pf.num_terms(), double_factorial_odd(h));
            for (_, c) in pf.terms() {
                assert!(c.is_one() || (-c).is_one());
            }
        }
    }

    #[test]
    fn derivative_terms_stay_canonical() {
        let f = pfaffian_derivative(5, &minor(&[1, 3, 4, 5]), 2);
        for (m, _) in f.terms() {
            for (g, _) in m.factors() {
                assert!(g.in_bounds(&XVars { p: 5 }), "non-canonical {g}");
            }
        }
    }
}
