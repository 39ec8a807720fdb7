//! Finite graded pieces of the skew jet ring, the Pfaffian jet ideal,
//! exact rank computation, the integral basis certificate, straightening,
//! and the two-factor relation families.
//!
//! Everything here is organized by the bigrading (degree, weight) and,
//! internally, by row content: every Pfaffian derivative, every ideal
//! generator multiple, and every standard product is homogeneous for the
//! multiplicity vector of its row indices, so ranks and solves decompose
//! into small independent blocks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, SparseVec, SpanSolver};
use crate::order::JSeq;
use crate::pfaffian::{jseq_value, pfaffian_derivative, perm_sign, MinorSpec};
use crate::ring::{binom, monomials_of_bidegree, xgens, Monomial, Poly, XGen, XVars};
use crate::standard::{enumerate_standard, StandardProduct};

/// The polynomial named by a sequence: the weighted Pfaffian derivative on
/// its rows.
pub fn jseq_poly(p: u32, j: &JSeq) -> Poly<XGen> {
    let minor = MinorSpec::new(j.rows().to_vec()).expect("JSeq rows are a valid minor");
    pfaffian_derivative(p, &minor, j.wt())
}

/// The ring element of an ordered product of sequences.
pub fn product_poly(p: u32, js: &[JSeq]) -> Poly<XGen> {
    let mut acc = Poly::one(XVars { p });
    for j in js {
        acc = acc.mul(&jseq_poly(p, j));
    }
    acc
}

/// A full (degree, weight) component of the skew ring: its monomial basis
/// in a fixed order, with positions for exact linear algebra.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub p: u32,
    pub h: u32,
    pub degree: u32,
    pub weight: u32,
    basis: Vec<Monomial<XGen>>,
    index: BTreeMap<Monomial<XGen>, usize>,
}

impl GradedPiece {
    /// Enumerate the component. Jet weights above `weight` cannot appear.
    pub fn new(p: u32, h: u32, degree: u32, weight: u32) -> Self {
        let mut basis = monomials_of_bidegree(&xgens(p, weight), degree, weight);
        // stable position order: descending in the expanded generator word
        basis.sort_by_key(|b| std::cmp::Reverse(b.word()));
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        GradedPiece {
            p,
            h,
            degree,
            weight,
            basis,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial<XGen>] {
        &self.basis
    }

    pub fn position(&self, m: &Monomial<XGen>) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coefficient vector of a polynomial in this piece.
    pub fn vector_of(&self, f: &Poly<XGen>) -> Result<SparseVec> {
        let mut v = SparseVec::new();
        for (m, c) in f.terms() {
            let pos = self
                .position(m)
                .ok_or_else(|| Error::PieceMembership(format!("{m}")))?;
            v.insert(pos, c.clone());
        }
        Ok(v)
    }
}

/// All monomials of the given bidegree whose row content equals `content`.
pub fn monomials_with_content(
    p: u32,
    degree: u32,
    weight: u32,
    content: &[u32],
) -> Vec<Monomial<XGen>> {
    let gens: Vec<XGen> = xgens(p, weight)
        .into_iter()
        .filter(|g| content[(g.u - 1) as usize] > 0 && content[(g.v - 1) as usize] > 0)
        .collect();
    fn rec(
        gens: &[XGen],
        pos: usize,
        d: u32,
        w: u32,
        rem: &mut Vec<u32>,
        stack: &mut Vec<(XGen, u32)>,
        out: &mut Vec<Monomial<XGen>>,
    ) {
        if d == 0 {
            if w == 0 && rem.iter().all(|&r| r == 0) {
                out.push(Monomial::from_pairs(stack.iter().copied()));
            }
            return;
        }
        if pos >= gens.len() {
            return;
        }
        let g = gens[pos];
        let (ui, vi) = ((g.u - 1) as usize, (g.v - 1) as usize);
        let mut cap = d.min(rem[ui]).min(rem[vi]);
        if g.k > 0 {
            cap = cap.min(w / g.k);
        }
        for e in (0..=cap).rev() {
            if e > 0 {
                stack.push((g, e));
                rem[ui] -= e;
                rem[vi] -= e;
            }
            rec(gens, pos + 1, d - e, w - e * g.k, rem, stack, out);
            if e > 0 {
                stack.pop();
                rem[ui] += e;
                rem[vi] += e;
            }
        }
    }
    let mut out = Vec::new();
    if content.iter().sum::<u32>() != 2 * degree {
        return out;
    }
    rec(
        &gens,
        0,
        degree,
        weight,
        &mut content.to_vec(),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// The spanning set of the (degree, weight) component of the ideal
/// generated by size-`minor_size` Pfaffian derivatives: every monomial
/// multiple of every derivative that lands in the component.
pub fn ideal_span(p: u32, minor_size: u32, degree: u32, weight: u32) -> Vec<Poly<XGen>> {
    let mut out = Vec::new();
    if minor_size % 2 != 0 {
        return out; // no odd-size minors exist
    }
    let half = minor_size / 2;
    if degree < half || minor_size > p {
        return out;
    }
    let cof_deg = degree - half;
    for rows in combinations(p, minor_size as usize) {
        let minor = MinorSpec::new(rows).expect("ascending by construction");
        for n in 0..=weight {
            let deriv = pfaffian_derivative(p, &minor, n);
            for cof in monomials_of_bidegree(&xgens(p, weight - n), cof_deg, weight - n) {
                let mono_poly =
                    Poly::from_terms(XVars { p }, [(cof.clone(), BigInt::one())]);
                out.push(mono_poly.mul(&deriv));
            }
        }
    }
    out
}

/// Content-restricted ideal span: only minors and cofactors compatible with
/// the given row content.
pub fn ideal_span_in_content(
    p: u32,
    minor_size: u32,
    degree: u32,
    weight: u32,
    content: &[u32],
) -> Vec<Poly<XGen>> {
    let mut out = Vec::new();
    if minor_size % 2 != 0 {
        return out;
    }
    let half = minor_size / 2;
    if degree < half || minor_size > p {
        return out;
    }
    let cof_deg = degree - half;
    let support: Vec<u32> = (1..=p).filter(|&r| content[(r - 1) as usize] > 0).collect();
    for rows in subsets(&support, minor_size as usize) {
        let mut residual = content.to_vec();
        for &r in &rows {
            residual[(r - 1) as usize] -= 1;
        }
        let minor = MinorSpec::new(rows).expect("ascending by construction");
        for n in 0..=weight {
            let deriv = pfaffian_derivative(p, &minor, n);
            for cof in monomials_with_content(p, cof_deg, weight - n, &residual) {
                let mono_poly =
                    Poly::from_terms(XVars { p }, [(cof.clone(), BigInt::one())]);
                out.push(mono_poly.mul(&deriv));
            }
        }
    }
    out
}

fn combinations(p: u32, k: usize) -> Vec<Vec<u32>> {
    subsets(&(1..=p).collect::<Vec<_>>(), k)
}

fn subsets(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    use itertools::Itertools;
    items.iter().copied().combinations(k).collect()
}

/// Rank over the rationals of a family of vectors inside a piece.
pub fn exact_rank(vectors: &[Poly<XGen>], piece: &GradedPiece) -> Result<usize> {
    let rows: Result<Vec<SparseVec>> = vectors.iter().map(|f| piece.vector_of(f)).collect();
    Ok(linalg::rank(rows?))
}

/// Outcome of the integral basis check on one graded piece.
///
/// The verdict composes three exact statements: the standard images stay
/// independent after adjoining the ideal component, their count matches the
/// quotient dimension, and every ambient monomial is an integer combination
/// of standard images plus an ideal element.
#[derive(Clone, Debug, Serialize)]
pub struct BasisCertificate {
    pub p: u32,
    pub h: u32,
    pub degree: u32,
    pub weight: u32,
    pub dim_ambient: usize,
    pub rank_ideal: usize,
    pub n_standard: usize,
    pub rank_combined: usize,
    pub integral_spanning: bool,
    pub verdict: bool,
    /// First ambient monomial that failed integral spanning, if any.
    pub witness: Option<String>,
}

struct Block {
    /// Column ids for the monomials of this content class.
    cols: BTreeMap<Monomial<XGen>, usize>,
    /// Global indices (into the cell's standard list) of this block's
    /// standard products, in solver input order.
    standard_ids: Vec<usize>,
    solver: SpanSolver,
    rank_ideal: usize,
    rank_combined: usize,
}

/// Solver state for one (p, h, degree, weight) cell, reused across the
/// certificate and any number of straightening calls.
pub struct CellContext {
    pub p: u32,
    pub h: u32,
    pub degree: u32,
    pub weight: u32,
    piece: GradedPiece,
    standard: Vec<StandardProduct>,
    blocks: BTreeMap<Vec<u32>, Block>,
}

impl CellContext {
    pub fn new(p: u32, h: u32, degree: u32, weight: u32) -> Self {
        let piece = GradedPiece::new(p, h, degree, weight);
        let standard = enumerate_standard(p, h, degree, weight);

        // ambient monomials per content class
        let mut monos_by_content: BTreeMap<Vec<u32>, Vec<Monomial<XGen>>> = BTreeMap::new();
        for m in piece.basis() {
            monos_by_content
                .entry(m.content(p))
                .or_default()
                .push(m.clone());
        }

        // standard products per content class, keeping global ids
        let mut std_by_content: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
        for (idx, sp) in standard.iter().enumerate() {
            std_by_content.entry(sp.content(p)).or_default().push(idx);
        }

        let mut blocks = BTreeMap::new();
        for (content, monomials) in monos_by_content {
            let cols: BTreeMap<Monomial<XGen>, usize> = monomials
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, m)| (m, i))
                .collect();
            let to_vec = |f: &Poly<XGen>| -> SparseVec {
                f.terms()
                    .map(|(m, c)| (cols[m], c.clone()))
                    .collect()
            };
            let standard_ids = std_by_content.remove(&content).unwrap_or_default();
            let mut inputs: Vec<SparseVec> = standard_ids
                .iter()
                .map(|&idx| to_vec(&product_poly(p, standard[idx].factors())))
                .collect();
            let ideal_vecs: Vec<SparseVec> =
                ideal_span_in_content(p, h + 2, degree, weight, &content)
                    .iter()
                    .map(&to_vec)
                    .collect();
            let rank_ideal = linalg::rank(ideal_vecs.iter().cloned());
            inputs.extend(ideal_vecs);
            let solver = SpanSolver::with_tracked(&inputs, standard_ids.len());
            let rank_combined = solver.rank();
            blocks.insert(
                content,
                Block {
                    cols,
                    standard_ids,
                    solver,
                    rank_ideal,
                    rank_combined,
                },
            );
        }
        CellContext {
            p,
            h,
            degree,
            weight,
            piece,
            standard,
            blocks,
        }
    }

    pub fn piece(&self) -> &GradedPiece {
        &self.piece
    }

    pub fn standard_products(&self) -> &[StandardProduct] {
        &self.standard
    }

    /// Run the integral basis certificate for this cell.
    pub fn certificate(&self) -> BasisCertificate {
        let dim_ambient = self.piece.dim();
        let n_standard = self.standard.len();
        let rank_ideal: usize = self.blocks.values().map(|b| b.rank_ideal).sum();
        let rank_combined: usize = self.blocks.values().map(|b| b.rank_combined).sum();

        let mut integral_spanning = true;
        let mut witness = None;
        'outer: for block in self.blocks.values() {
            for (mono, &col) in block.cols.iter() {
                let target: SparseVec =
                    std::iter::once((col, BigInt::one())).collect();
                match block.solver.solve(&target) {
                    None => {
                        integral_spanning = false;
                        witness = Some(format!("{mono} not in the combined span"));
                        break 'outer;
                    }
                    Some(coeffs) => {
                        if let Some(bad) = coeffs.iter().position(|c| !c.denom().is_one()) {
                            integral_spanning = false;
                            witness = Some(format!(
                                "{mono} needs non-integer coefficient {} on {}",
                                coeffs[bad],
                                StandardDisplay(&self.standard[block.standard_ids[bad]]),
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }

        let verdict = rank_combined == rank_ideal + n_standard
            && dim_ambient - rank_ideal == n_standard
            && integral_spanning;
        BasisCertificate {
            p: self.p,
            h: self.h,
            degree: self.degree,
            weight: self.weight,
            dim_ambient,
            rank_ideal,
            n_standard,
            rank_combined,
            integral_spanning,
            verdict,
            witness,
        }
    }

    /// Express `f` as an integer combination of standard products modulo
    /// the ideal component. Errors when the combination does not exist or
    /// is not integral.
    pub fn straighten(&self, f: &Poly<XGen>) -> Result<Vec<(StandardProduct, BigInt)>> {
        match f.bidegree()? {
            None => return Ok(vec![]),
            Some((d, w)) => {
                if (d, w) != (self.degree, self.weight) {
                    return Err(Error::InvalidParameter(format!(
                        "polynomial has bidegree ({d},{w}), cell is ({},{})",
                        self.degree, self.weight
                    )));
                }
            }
        }
        let mut out: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (content, part) in f.split_by_content(self.p) {
            let block = self
                .blocks
                .get(&content)
                .ok_or_else(|| Error::PieceMembership(format!("content {content:?}")))?;
            let target: SparseVec = part
                .terms()
                .map(|(m, c)| {
                    block
                        .cols
                        .get(m)
                        .copied()
                        .map(|col| (col, c.clone()))
                        .ok_or_else(|| Error::PieceMembership(format!("{m}")))
                })
                .collect::<Result<_>>()?;
            let coeffs = block.solver.solve(&target).ok_or(Error::NotInSpan)?;
            for (slot, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if !c.denom().is_one() {
                    return Err(Error::NonIntegralSolution {
                        context: format!(
                            "coefficient {c} on {}",
                            StandardDisplay(&self.standard[block.standard_ids[slot]])
                        ),
                    });
                }
                let entry = out
                    .entry(block.standard_ids[slot])
                    .or_insert_with(BigInt::zero);
                *entry += c.numer();
            }
        }
        Ok(out
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| (self.standard[idx].clone(), c))
            .collect())
    }
}

struct StandardDisplay<'a>(&'a StandardProduct);

impl std::fmt::Display for StandardDisplay<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The integral basis certificate for one graded piece.
pub fn verify_standard_basis(p: u32, h: u32, degree: u32, weight: u32) -> BasisCertificate {
    CellContext::new(p, h, degree, weight).certificate()
}

/// One-shot straightening; builds the cell context internally.
pub fn straighten(
    f: &Poly<XGen>,
    p: u32,
    h: u32,
    degree: u32,
    weight: u32,
) -> Result<Vec<(StandardProduct, BigInt)>> {
    CellContext::new(p, h, degree, weight).straighten(f)
}

/// Whether `f` lies in the rational span of the (degree, weight) component
/// of the ideal generated by size-`minor_size` Pfaffian derivatives.
pub fn reduces_to_zero_mod_ideal(p: u32, minor_size: u32, f: &Poly<XGen>) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let (degree, weight) = f.bidegree()?.expect("nonzero");
    for (content, part) in f.split_by_content(p) {
        let span = ideal_span_in_content(p, minor_size, degree, weight, &content);
        let mut cols: BTreeMap<Monomial<XGen>, usize> = BTreeMap::new();
        let mut intern = |f: &Poly<XGen>| -> SparseVec {
            let mut v = SparseVec::new();
            for (m, c) in f.terms() {
                let next = cols.len();
                let id = *cols.entry(m.clone()).or_insert(next);
                v.insert(id, c.clone());
            }
            v
        };
        let vectors: Vec<SparseVec> = span.iter().map(&mut intern).collect();
        let target = intern(&part);
        let solver = SpanSolver::with_tracked(&vectors, 0);
        if !solver.contains(&target) {
            return Ok(false);
        }
    }
    Ok(true)
}

// --- Relation families ------------------------------------------------------

/// Parameters of the seeded two-factor relation family.
///
/// `upper` and `lower` are written row lists (leftmost first); the last `i`
/// entries of `upper` and the last `j` entries of `lower` are pooled and
/// alternated over. The seed prescribes the coefficients `a_{k0..k0+l0}`
/// with `l0 = i + j - len(upper) - 1`; the remaining coefficients are
/// completed through the inverse binomial matrix. An empty seed means the
/// all-zero seed.
#[derive(Clone, Debug, Serialize)]
pub struct RelationParams {
    pub upper: Vec<u32>,
    pub lower: Vec<u32>,
    pub i: usize,
    pub j: usize,
    pub k0: u32,
    pub m: u32,
    pub seed: Vec<i64>,
}

/// A generated relation: the completed coefficients and the polynomial.
#[derive(Clone, Debug)]
pub struct RelationOutcome {
    pub coefficients: Vec<BigInt>,
    pub poly: Poly<XGen>,
    pub l0: usize,
}

fn validate_relation_params(params: &RelationParams) -> Result<usize> {
    let h = params.upper.len();
    let hp = params.lower.len();
    if h % 2 != 0 || hp % 2 != 0 {
        return Err(Error::InvalidParameter("factor sizes must be even".into()));
    }
    if hp > h {
        return Err(Error::InvalidParameter(
            "the lower factor may not be larger than the upper".into(),
        ));
    }
    if params.i > h || params.j > hp {
        return Err(Error::InvalidParameter(
            "pooled counts exceed factor sizes".into(),
        ));
    }
    let l0 = (params.i + params.j) as i64 - h as i64 - 1;
    if l0 < 0 {
        return Err(Error::InvalidParameter(format!(
            "pool sizes give l0 = {l0} < 0"
        )));
    }
    let l0 = l0 as usize;
    if params.k0 > params.m || params.k0 as usize + l0 > params.m as usize {
        return Err(Error::InvalidParameter(
            "seed window must fit inside 0..=m".into(),
        ));
    }
    if !params.seed.is_empty() && params.seed.len() != l0 + 1 {
        return Err(Error::InvalidParameter(format!(
            "seed must have {} entries (or none for the zero seed)",
            l0 + 1
        )));
    }
    Ok(l0)
}

/// Complete the seed `a_{k0..k0+l0}` to all of `a_0..a_m` through the
/// inverse of the binomial matrix `c_{j,i} = C(k0+j, i)`, whose determinant
/// is a unit.
fn complete_coefficients(k0: u32, l0: usize, m: u32, seed: &[BigInt]) -> Vec<BigInt> {
    if seed.is_empty() {
        return vec![BigInt::zero(); m as usize + 1];
    }
    let c: Vec<Vec<BigInt>> = (0..=l0)
        .map(|jj| {
            (0..=l0)
                .map(|ii| binom((k0 as u64) + jj as u64, ii as i64))
                .collect()
        })
        .collect();
    let b = linalg::invert_integer_matrix(&c)
        .expect("binomial coefficient matrix is unimodular");
    // beta_l = sum_j b[l][j] seed[j]
    let beta: Vec<BigInt> = (0..=l0)
        .map(|l| (0..=l0).map(|jj| &b[l][jj] * &seed[jj]).sum())
        .collect();
    let coeffs: Vec<BigInt> = (0..=m as usize)
        .map(|k| {
            (0..=l0)
                .map(|l| binom(k as u64, l as i64) * &beta[l])
                .sum()
        })
        .collect();
    for (jj, s) in seed.iter().enumerate() {
        debug_assert_eq!(&coeffs[k0 as usize + jj], s, "seed not reproduced");
    }
    coeffs
}

/// Assemble the seeded two-factor relation.
///
/// The sum runs over all ways to split the pooled rows between the two
/// underlined segments, signed by the split permutation, with the weight
/// split `(m-k, k)` weighted by the completed coefficient `a_k`. The
/// result is guaranteed to reduce to zero modulo the ideal of minors two
/// larger than the upper factor; `check_relation` verifies exactly that.
pub fn generate_relation(p: u32, params: &RelationParams) -> Result<RelationOutcome> {
    use itertools::Itertools;
    let l0 = validate_relation_params(params)?;
    let seed: Vec<BigInt> = params.seed.iter().map(|&s| BigInt::from(s)).collect();
    let coefficients = complete_coefficients(params.k0, l0, params.m, &seed);

    let h = params.upper.len();
    let hp = params.lower.len();
    let upper_prefix = &params.upper[..h - params.i];
    let lower_prefix = &params.lower[..hp - params.j];
    let pool: Vec<u32> = params.upper[h - params.i..]
        .iter()
        .chain(params.lower[hp - params.j..].iter())
        .copied()
        .collect();

    let vars = XVars { p };
    let mut acc = Poly::zero(vars);
    let slots: Vec<usize> = (0..pool.len()).collect();
    for first in slots.iter().copied().combinations(params.i) {
        let second: Vec<usize> = slots
            .iter()
            .copied()
            .filter(|s| !first.contains(s))
            .collect();
        let arrangement: Vec<usize> = first.iter().chain(second.iter()).copied().collect();
        let sign = perm_sign(&arrangement);
        let seq1: Vec<u32> = upper_prefix
            .iter()
            .copied()
            .chain(first.iter().map(|&s| pool[s]))
            .collect();
        let seq2: Vec<u32> = lower_prefix
            .iter()
            .copied()
            .chain(second.iter().map(|&s| pool[s]))
            .collect();
        for (k, a_k) in coefficients.iter().enumerate() {
            if a_k.is_zero() {
                continue;
            }
            let f1 = jseq_value(p, &seq1, params.m - k as u32)?;
            if f1.is_zero() {
                continue;
            }
            let f2 = jseq_value(p, &seq2, k as u32)?;
            if f2.is_zero() {
                continue;
            }
            let term = f1.mul(&f2).scale(&(a_k * BigInt::from(sign)));
            acc = acc.add(&term);
        }
    }
    Ok(RelationOutcome {
        coefficients,
        poly: acc,
        l0,
    })
}

/// The unseeded symmetrized relation: the whole upper factor is pooled
/// together with the last `s` rows of the lower factor, at a single
/// derivative split `(0, k)` with `k < s`.
pub fn basic_relation(p: u32, pool: &[u32], lower_prefix: &[u32], s: usize, k: u32) -> Result<Poly<XGen>> {
    use itertools::Itertools;
    if s > pool.len() {
        return Err(Error::InvalidParameter("s exceeds the pool".into()));
    }
    let h = pool.len() - s;
    let hp = lower_prefix.len() + s;
    if h % 2 != 0 || hp % 2 != 0 {
        return Err(Error::InvalidParameter("factor sizes must be even".into()));
    }
    if (k as usize) >= s {
        return Err(Error::InvalidParameter(
            "derivative order must stay below the pooled tail size".into(),
        ));
    }
    let vars = XVars { p };
    let mut acc = Poly::zero(vars);
    let slots: Vec<usize> = (0..pool.len()).collect();
    for first in slots.iter().copied().combinations(h) {
        let second: Vec<usize> = slots
            .iter()
            .copied()
            .filter(|c| !first.contains(c))
            .collect();
        let arrangement: Vec<usize> = first.iter().chain(second.iter()).copied().collect();
        let sign = perm_sign(&arrangement);
        let seq1: Vec<u32> = first.iter().map(|&c| pool[c]).collect();
        let seq2: Vec<u32> = lower_prefix
            .iter()
            .copied()
            .chain(second.iter().map(|&c| pool[c]))
            .collect();
        let f1 = jseq_value(p, &seq1, 0)?;
        if f1.is_zero() {
            continue;
        }
        let f2 = jseq_value(p, &seq2, k)?;
        if f2.is_zero() {
            continue;
        }
        acc = acc.add(&f1.mul(&f2).scale(&BigInt::from(sign)));
    }
    Ok(acc)
}

/// Result of checking one relation instance against the ideal.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub label: String,
    pub p: u32,
    pub degree: u32,
    pub weight: u32,
    pub minor_size: u32,
    pub coefficients: Vec<String>,
    /// Membership in the span of minors two larger than the upper factor.
    pub in_ideal: bool,
    /// The ideal generated by odd-size minors is zero, so the only element
    /// it contains is zero itself; this flag records that literal reading.
    pub vanishes_identically: bool,
    pub pass: bool,
}

/// Generate and verify one seeded relation instance.
pub fn check_relation(p: u32, label: &str, params: &RelationParams) -> Result<RelationCheck> {
    let outcome = generate_relation(p, params)?;
    let minor_size = params.upper.len() as u32 + 2;
    let (degree, weight) = outcome
        .poly
        .bidegree()?
        .unwrap_or(((params.upper.len() + params.lower.len()) as u32 / 2, params.m));
    let in_ideal = reduces_to_zero_mod_ideal(p, minor_size, &outcome.poly)?;
    Ok(RelationCheck {
        label: label.to_string(),
        p,
        degree,
        weight,
        minor_size,
        coefficients: outcome.coefficients.iter().map(|c| c.to_string()).collect(),
        in_ideal,
        vanishes_identically: outcome.poly.is_zero(),
        pass: in_ideal,
    })
}

/// Generate and verify one symmetrized relation instance.
pub fn check_basic_relation(
    p: u32,
    label: &str,
    pool: &[u32],
    lower_prefix: &[u32],
    s: usize,
    k: u32,
) -> Result<RelationCheck> {
    let rel = basic_relation(p, pool, lower_prefix, s, k)?;
    let minor_size = (pool.len() - s) as u32 + 2;
    let (degree, weight) = rel
        .bidegree()?
        .unwrap_or(((pool.len() + lower_prefix.len()) as u32 / 2, k));
    let in_ideal = reduces_to_zero_mod_ideal(p, minor_size, &rel)?;
    Ok(RelationCheck {
        label: label.to_string(),
        p,
        degree,
        weight,
        minor_size,
        coefficients: vec![],
        in_ideal,
        vanishes_identically: rel.is_zero(),
        pass: in_ideal,
    })
}

/// The curated relation suite: seeded instances spanning upper factor sizes
/// 2 and 4 with derivative budgets up to 3, plus symmetrized instances.
pub fn curated_relation_suite() -> Vec<(u32, String, RelationParams)> {
    let rp = |upper: &[u32], lower: &[u32], i: usize, j: usize, k0: u32, m: u32, seed: &[i64]| {
        RelationParams {
            upper: upper.to_vec(),
            lower: lower.to_vec(),
            i,
            j,
            k0,
            m,
            seed: seed.to_vec(),
        }
    };
    let table: Vec<(u32, RelationParams)> = vec![
        (4, rp(&[2, 1], &[4, 3], 2, 1, 0, 0, &[1])),
        (4, rp(&[2, 1], &[4, 3], 2, 1, 1, 1, &[1])),
        (4, rp(&[2, 1], &[4, 3], 2, 1, 2, 2, &[1])),
        (4, rp(&[2, 1], &[4, 3], 2, 1, 1, 3, &[2])),
        (4, rp(&[2, 1], &[4, 3], 2, 2, 0, 1, &[1, 0])),
        (4, rp(&[2, 1], &[4, 3], 2, 2, 1, 3, &[1, 2])),
        (4, rp(&[3, 1], &[4, 2], 2, 1, 0, 1, &[1])),
        (4, rp(&[2, 1], &[3, 2], 2, 1, 0, 2, &[3])),
        (3, rp(&[2, 1], &[3, 2], 2, 2, 0, 1, &[1, 1])),
        (2, rp(&[2, 1], &[2, 1], 2, 2, 1, 2, &[1, -1])),
        (6, rp(&[4, 3, 2, 1], &[6, 5], 4, 1, 0, 0, &[1])),
        (6, rp(&[4, 3, 2, 1], &[6, 5], 4, 1, 1, 1, &[2])),
        (6, rp(&[4, 3, 2, 1], &[6, 5], 3, 2, 0, 1, &[1])),
        (6, rp(&[4, 3, 2, 1], &[6, 5], 4, 2, 0, 1, &[1, 0])),
        (6, rp(&[4, 3, 2, 1], &[6, 5], 4, 2, 1, 3, &[1, 1])),
        (5, rp(&[4, 3, 2, 1], &[5, 2], 4, 1, 0, 1, &[1])),
        (4, rp(&[4, 3, 2, 1], &[2, 1], 4, 2, 0, 2, &[1, 1])),
        (8, rp(&[4, 3, 2, 1], &[8, 7, 6, 5], 3, 2, 0, 0, &[1])),
        (8, rp(&[4, 3, 2, 1], &[8, 7, 6, 5], 3, 3, 0, 1, &[1, -1])),
        (8, rp(&[4, 3, 2, 1], &[8, 7, 6, 5], 4, 2, 2, 3, &[1, 3])),
        (8, rp(&[4, 3, 2, 1], &[8, 7, 6, 5], 4, 4, 0, 3, &[1, 0, 2, 0])),
        (6, rp(&[4, 3, 2, 1], &[6, 5, 4, 3], 3, 2, 1, 2, &[1])),
        (4, rp(&[4, 3, 2, 1], &[4, 3, 2, 1], 4, 3, 0, 2, &[1, 1, 1])),
        (6, rp(&[5, 3, 2, 1], &[6, 4], 4, 1, 0, 2, &[2])),
        (4, rp(&[2, 1], &[4, 3], 2, 1, 0, 1, &[])),
    ];
    table
        .into_iter()
        .enumerate()
        .map(|(idx, (p, params))| {
            let label = format!(
                "seeded-{:02} upper{:?} lower{:?} i={} j={} k0={} m={}",
                idx, params.upper, params.lower, params.i, params.j, params.k0, params.m
            );
            (p, label, params)
        })
        .collect()
}

/// The curated symmetrized (unseeded) instances.
pub fn curated_basic_suite() -> Vec<(u32, String, Vec<u32>, Vec<u32>, usize, u32)> {
    let table: Vec<(u32, Vec<u32>, Vec<u32>, usize, u32)> = vec![
        (5, vec![3, 2, 1], vec![5, 4, 2], 1, 0),
        (6, vec![3, 2, 1], vec![6, 5, 4], 1, 0),
        (6, vec![4, 3, 2, 1], vec![6, 5], 2, 0),
        (6, vec![4, 3, 2, 1], vec![6, 5], 2, 1),
        (6, vec![5, 4, 3, 2, 1], vec![6], 1, 0),
        (7, vec![5, 4, 3, 2, 1], vec![7, 6, 5], 1, 0),
        (4, vec![3, 2, 1], vec![4, 3, 2], 1, 0),
        (8, vec![6, 5, 4, 3, 2, 1], vec![8, 7], 2, 1),
    ];
    table
        .into_iter()
        .enumerate()
        .map(|(idx, (p, pool, prefix, s, k))| {
            let label = format!("symmetrized-{idx:02} pool{pool:?} prefix{prefix:?} s={s} k={k}");
            (p, label, pool, prefix, s, k)
        })
        .collect()
}
