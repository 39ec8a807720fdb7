//! The jet coordinate ring, the invariant-generating ring homomorphism,
//! tableau leading terms, and the symplectic Lie algebra action.
//!
//! The homomorphism sends `x^(k)_{uv}` to the `k`-th normalized derivative
//! of the bilinear pairing of copies `u` and `v`. Monomials of the jet ring
//! are read as column-aligned tableaux whose word order drives the leading
//! term analysis; the symplectic action is realized by integer derivations
//! indexed by a Lie algebra basis element and a jet level.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, SparseVec};
use crate::order::ESeq;
use crate::quotient::product_poly;
use crate::ring::{agens, dbar, monomials_of_bidegree, AGen, AVars, Monomial, Poly, XGen};
use crate::standard::{canonical_lift, enumerate_standard, StandardProduct};

/// The ring homomorphism into the jet coordinate ring, with generator
/// images cached per `(u, v, k)`.
pub struct JetMap {
    p: u32,
    h: u32,
    cache: HashMap<XGen, Poly<AGen>>,
}

impl JetMap {
    pub fn new(p: u32, h: u32) -> Result<Self> {
        if h % 2 != 0 {
            return Err(Error::InvalidParameter(format!("h = {h} must be even")));
        }
        Ok(JetMap {
            p,
            h,
            cache: HashMap::new(),
        })
    }

    pub fn avars(&self) -> AVars {
        AVars {
            p: self.p,
            h: self.h,
        }
    }

    /// Image of a single generator: the `k`-th normalized derivative of
    /// `sum_i (a^(0)_{u,2i-1} a^(0)_{v,2i} - a^(0)_{v,2i-1} a^(0)_{u,2i})`.
    pub fn image(&mut self, g: XGen) -> Poly<AGen> {
        if let Some(hit) = self.cache.get(&g) {
            return hit.clone();
        }
        let vars = self.avars();
        let mut base = Poly::zero(vars);
        for i in 1..=(self.h / 2) {
            let term = |a: u32, b: u32, la: u32, lb: u32| -> Poly<AGen> {
                let ga = Poly::generator(vars, AGen { k: 0, i: a, l: la }).unwrap();
                let gb = Poly::generator(vars, AGen { k: 0, i: b, l: lb }).unwrap();
                ga.mul(&gb)
            };
            base = base
                .add(&term(g.u, g.v, 2 * i - 1, 2 * i))
                .sub(&term(g.v, g.u, 2 * i - 1, 2 * i));
        }
        let image = dbar(g.k, &base);
        self.cache.insert(g, image.clone());
        image
    }

    /// Apply the homomorphism term by term.
    pub fn apply(&mut self, f: &Poly<XGen>) -> Poly<AGen> {
        let vars = self.avars();
        let mut acc = Poly::zero(vars);
        for (mono, c) in f.terms() {
            let mut term = Poly::constant(vars, c.clone());
            for &(g, e) in mono.factors() {
                let img = self.image(g);
                for _ in 0..e {
                    term = term.mul(&img);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

/// One-shot application of the homomorphism.
pub fn qh(p: u32, h: u32, f: &Poly<XGen>) -> Result<Poly<AGen>> {
    Ok(JetMap::new(p, h)?.apply(f))
}

/// A tableau entry: a generator or the star placeholder. Stars compare
/// strictly greater than every generator.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum TabEntry {
    Entry(AGen),
    Star,
}

/// Column-aligned representation of a jet-ring monomial: column `l` (from
/// the right) collects the factors with coordinate index `l`, sorted, with
/// stars padding the columns to a common height.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau {
    h: u32,
    // rows[r][l-1] holds the column-l entry of row r
    rows: Vec<Vec<Option<AGen>>>,
}

impl Tableau {
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, row: usize, l: u32) -> Option<AGen> {
        self.rows[row][(l - 1) as usize]
    }

    /// The tableau word: rows top to bottom, each read from column `h`
    /// down to column 1.
    pub fn word(&self) -> Vec<TabEntry> {
        let mut w = Vec::with_capacity(self.rows.len() * self.h as usize);
        for row in &self.rows {
            for entry in row.iter().rev() {
                w.push(match entry {
                    Some(g) => TabEntry::Entry(*g),
                    None => TabEntry::Star,
                });
            }
        }
        w
    }

    /// The monomial the tableau represents.
    pub fn monomial(&self) -> Monomial<AGen> {
        Monomial::from_pairs(
            self.rows
                .iter()
                .flatten()
                .filter_map(|e| e.map(|g| (g, 1))),
        )
    }

    /// Column entries weakly increase downward, stars at the bottom.
    pub fn is_column_monotone(&self) -> bool {
        for l in 0..self.h as usize {
            for r in 1..self.rows.len() {
                let below = self.rows[r][l];
                let above = self.rows[r - 1][l];
                match (above, below) {
                    (None, Some(_)) => return false,
                    (Some(a), Some(b)) if b < a => return false,
                    _ => {}
                }
            }
        }
        true
    }
}

impl std::fmt::Display for Tableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (idx, row) in self.rows.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "|")?;
            for (pos, entry) in row.iter().rev().enumerate() {
                if pos > 0 {
                    write!(f, " ")?;
                }
                match entry {
                    Some(g) => write!(f, "{g}")?,
                    None => write!(f, "*")?,
                }
            }
            write!(f, "|")?;
        }
        Ok(())
    }
}

/// The tableau of a monomial: column `l` collects all factors with
/// coordinate `l` in ascending order, padded with stars at the bottom.
/// Round-trips with [`Tableau::monomial`].
pub fn tableau_of(mono: &Monomial<AGen>, h: u32) -> Tableau {
    let mut columns: Vec<Vec<AGen>> = vec![Vec::new(); h as usize];
    for &(g, e) in mono.factors() {
        for _ in 0..e {
            columns[(g.l - 1) as usize].push(g);
        }
    }
    for col in &mut columns {
        col.sort();
    }
    let height = columns.iter().map(Vec::len).max().unwrap_or(0);
    let rows = (0..height)
        .map(|r| columns.iter().map(|col| col.get(r).copied()).collect())
        .collect();
    Tableau { h, rows }
}

/// The leading monomial of a non-zero polynomial under the tableau word
/// order, with its coefficient.
pub fn leading_monomial(f: &Poly<AGen>, h: u32) -> Result<(Monomial<AGen>, BigInt)> {
    let mut best: Option<(Vec<TabEntry>, Monomial<AGen>, BigInt)> = None;
    for (m, c) in f.terms() {
        let word = tableau_of(m, h).word();
        if best.as_ref().is_none_or(|(bw, _, _)| word > *bw) {
            best = Some((word, m.clone(), c.clone()));
        }
    }
    best.map(|(_, m, c)| (m, c))
        .ok_or_else(|| Error::InvalidParameter("leading monomial of zero".into()))
}

/// The tableau of a standard lift chain: row `a` has entry
/// `a^(k^a_l)_{u^a_l, l}` in column `l` up to the factor's size, stars
/// beyond. Errors unless the chain is the canonical lift of its norms.
pub fn t_map(es: &[ESeq], h: u32) -> Result<Tableau> {
    let js: Vec<_> = es.iter().map(ESeq::norm).collect();
    if canonical_lift(&js).as_deref() != Some(es) {
        return Err(Error::NotStandard);
    }
    let rows = es
        .iter()
        .map(|e| {
            (1..=h)
                .map(|l| {
                    if (l as usize) <= e.sz() {
                        let (u, k) = e.pair_at(l as usize);
                        Some(AGen { k, i: u, l })
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    Ok(Tableau { h, rows })
}

/// Check the leading-term law for one standard product: the image's
/// leading monomial is the tableau of the lift, with unit coefficient.
pub fn verify_leading_product(sp: &StandardProduct, p: u32, h: u32) -> Result<bool> {
    let image = qh(p, h, &product_poly(p, sp.factors()))?;
    if image.is_zero() {
        return Ok(false);
    }
    let (lead, coeff) = leading_monomial(&image, h)?;
    let expected = t_map(sp.lift(), h)?.monomial();
    Ok(lead == expected && coeff.abs().is_one())
}

/// Batch leading-term verification over a grading grid.
#[derive(Clone, Debug, Serialize)]
pub struct LeadingReport {
    pub p: u32,
    pub h: u32,
    pub cells: Vec<LeadingCell>,
    pub checked: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LeadingCell {
    pub degree: u32,
    pub weight: u32,
    pub products: usize,
    pub pass: bool,
    pub witness: Option<String>,
}

pub fn verify_leading(p: u32, h: u32, deg_max: u32, wt_max: u32) -> Result<LeadingReport> {
    let mut cells = Vec::new();
    let mut checked = 0usize;
    for d in 0..=deg_max {
        for w in 0..=wt_max {
            let mut cell = LeadingCell {
                degree: d,
                weight: w,
                products: 0,
                pass: true,
                witness: None,
            };
            for sp in enumerate_standard(p, h, d, w) {
                cell.products += 1;
                checked += 1;
                if !verify_leading_product(&sp, p, h)? {
                    cell.pass = false;
                    cell.witness.get_or_insert_with(|| format!("{sp}"));
                }
            }
            cells.push(cell);
        }
    }
    Ok(LeadingReport {
        p,
        h,
        checked,
        pass: cells.iter().all(|c| c.pass),
        cells,
    })
}

// --- Symplectic Lie algebra action ------------------------------------------

type Mat = Vec<Vec<BigInt>>;

/// The Gram matrix of the symplectic form `sum_i dz_{2i-1} ^ dz_{2i}`:
/// antisymmetric blocks `[[0,1],[-1,0]]` down the diagonal.
pub fn symplectic_gram(h: u32) -> Mat {
    let n = h as usize;
    let mut j = vec![vec![BigInt::zero(); n]; n];
    for b in 0..(n / 2) {
        j[2 * b][2 * b + 1] = BigInt::one();
        j[2 * b + 1][2 * b] = -BigInt::one();
    }
    j
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            for k in 0..n {
                *cell += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

fn mat_transpose(a: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| a[j][i].clone()).collect())
        .collect()
}

fn mat_add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

fn is_zero_mat(a: &Mat) -> bool {
    a.iter().all(|r| r.iter().all(Zero::is_zero))
}

/// An infinitesimal symplectic transformation at a jet level: an `h x h`
/// integer matrix `g` with `g^T J + J g = 0` together with the level `m`.
///
/// Rational elements are rational combinations of integer ones, and every
/// invariance statement is linear in the matrix, so integer entries lose
/// no generality.
#[derive(Clone, Debug)]
pub struct SpElement {
    g: Mat,
    m: u32,
}

impl SpElement {
    pub fn new(g: Mat, m: u32) -> Result<Self> {
        let h = g.len();
        if g.iter().any(|r| r.len() != h) || h % 2 != 0 {
            return Err(Error::InvalidParameter(
                "matrix must be square of even size".into(),
            ));
        }
        let j = symplectic_gram(h as u32);
        let lhs = mat_add(&mat_mul(&mat_transpose(&g), &j), &mat_mul(&j, &g));
        if !is_zero_mat(&lhs) {
            return Err(Error::InvalidParameter(
                "matrix does not preserve the symplectic form".into(),
            ));
        }
        Ok(SpElement { g, m })
    }

    pub fn level(&self) -> u32 {
        self.m
    }

    pub fn matrix(&self) -> &Mat {
        &self.g
    }
}

/// The standard basis of the symplectic Lie algebra: `-J S` over a basis
/// `S` of symmetric matrices, `h(h+1)/2` elements, re-verified against the
/// defining identity on construction.
pub fn sp_basis(h: u32) -> Vec<SpElement> {
    let n = h as usize;
    let j = symplectic_gram(h);
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for a in 0..n {
        for b in a..n {
            let mut s = vec![vec![BigInt::zero(); n]; n];
            s[a][b] += BigInt::one();
            s[b][a] += BigInt::one();
            let g = mat_mul(&j, &s)
                .into_iter()
                .map(|row| row.into_iter().map(|c| -c).collect())
                .collect();
            out.push(SpElement::new(g, 0).expect("basis satisfies the form identity"));
        }
    }
    out
}

/// Apply the derivation of `g` at its jet level: on generators
/// `a^(k)_{il} -> sum_{l'} g_{l,l'} a^(k-m)_{i,l'}` (zero when `k < m`),
/// extended by the Leibniz rule.
pub fn sp_action(g: &SpElement, f: &Poly<AGen>) -> Poly<AGen> {
    let vars = *f.vars();
    let m = g.m;
    let mat = &g.g;
    let image = |gen: AGen| -> Poly<AGen> {
        if gen.k < m {
            return Poly::zero(vars);
        }
        let mut acc = Poly::zero(vars);
        for lp in 1..=vars.h {
            let c = &mat[(gen.l - 1) as usize][(lp - 1) as usize];
            if c.is_zero() {
                continue;
            }
            let target = Poly::generator(
                vars,
                AGen {
                    k: gen.k - m,
                    i: gen.i,
                    l: lp,
                },
            )
            .expect("indices stay in bounds");
            acc = acc.add(&target.scale(c));
        }
        acc
    };
    let mut acc = Poly::zero(vars);
    for (mono, coeff) in f.terms() {
        for (idx, &(gen, e)) in mono.factors().iter().enumerate() {
            let dg = image(gen);
            if dg.is_zero() {
                continue;
            }
            let rest = Monomial::from_pairs(
                mono.factors()
                    .iter()
                    .enumerate()
                    .map(|(i2, &(g2, e2))| (g2, if i2 == idx { e2 - 1 } else { e2 })),
            );
            let rest_poly = Poly::from_terms(vars, [(rest, coeff * BigInt::from(e))]);
            acc = acc.add(&dg.mul(&rest_poly));
        }
    }
    acc
}

/// Report of the generator-invariance batch.
#[derive(Clone, Debug, Serialize)]
pub struct InvarianceReport {
    pub p: u32,
    pub h: u32,
    pub k_max: u32,
    pub m_max: u32,
    pub checks: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// Check that every pairing generator image is killed by every basis
/// derivation at every jet level in range.
pub fn verify_invariance(p: u32, h: u32, k_max: u32, m_max: u32) -> Result<InvarianceReport> {
    let mut map = JetMap::new(p, h)?;
    let basis = sp_basis(h);
    let mut checks = 0usize;
    let mut failures = Vec::new();
    for u in 1..=p {
        for v in (u + 1)..=p {
            for k in 0..=k_max {
                let image = map.image(XGen { k, u, v });
                for (bi, b) in basis.iter().enumerate() {
                    for m in 0..=m_max {
                        let el = SpElement {
                            g: b.g.clone(),
                            m,
                        };
                        checks += 1;
                        let acted = sp_action(&el, &image);
                        if !acted.is_zero() {
                            failures.push(format!(
                                "generator ({u},{v},{k}) basis #{bi} level {m}"
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(InvarianceReport {
        p,
        h,
        k_max,
        m_max,
        checks,
        pass: failures.is_empty(),
        failures,
    })
}

/// Check that images of Pfaffian derivatives of minors two larger than the
/// pairing rank vanish identically.
pub fn verify_minor_kernel(p: u32, h: u32, n_max: u32) -> Result<bool> {
    use itertools::Itertools;
    let mut map = JetMap::new(p, h)?;
    for rows in (1..=p).combinations((h + 2) as usize) {
        let minor = crate::pfaffian::MinorSpec::new(rows)?;
        for n in 0..=n_max {
            let im = map.apply(&crate::pfaffian::pfaffian_derivative(p, &minor, n));
            if !im.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Joint-kernel dimension of all basis derivations on a jet-ring component
/// versus the rank of the standard images there.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantDimensions {
    pub degree: u32,
    pub weight: u32,
    pub dim_kernel: usize,
    pub dim_image: usize,
    pub pass: bool,
}

/// Compute both sides on the (degree, weight) component of the jet ring;
/// `degree` counts jet-ring variables, so standard products contribute at
/// half that degree.
pub fn invariant_dimension(
    p: u32,
    h: u32,
    degree: u32,
    weight: u32,
    m_max: u32,
) -> Result<InvariantDimensions> {
    let avars = AVars { p, h };
    let source = monomials_of_bidegree(&agens(p, h, weight), degree, weight);
    let src_poly = |m: &Monomial<AGen>| Poly::from_terms(avars, [(m.clone(), BigInt::one())]);

    // stack the derivation images; kernel = dim - rank of the stacked map
    let basis = sp_basis(h);
    let mut target_ids: BTreeMap<(usize, u32, Monomial<AGen>), usize> = BTreeMap::new();
    let mut columns: Vec<SparseVec> = Vec::with_capacity(source.len());
    for mono in &source {
        let mut col = SparseVec::new();
        for (bi, b) in basis.iter().enumerate() {
            for m in 0..=m_max.min(weight) {
                let el = SpElement {
                    g: b.g.clone(),
                    m,
                };
                let image = sp_action(&el, &src_poly(mono));
                for (tm, c) in image.terms() {
                    let next = target_ids.len();
                    let id = *target_ids
                        .entry((bi, m, tm.clone()))
                        .or_insert(next);
                    col.insert(id, c.clone());
                }
            }
        }
        columns.push(col);
    }
    let dim_kernel = source.len() - linalg::rank(columns);

    // rank of the standard images of matching bidegree
    let dim_image = if degree % 2 == 0 {
        let mut map = JetMap::new(p, h)?;
        let mut cols: BTreeMap<Monomial<AGen>, usize> = BTreeMap::new();
        let mut vecs = Vec::new();
        for sp in enumerate_standard(p, h, degree / 2, weight) {
            let im = map.apply(&product_poly(p, sp.factors()));
            let mut v = SparseVec::new();
            for (m, c) in im.terms() {
                let next = cols.len();
                let id = *cols.entry(m.clone()).or_insert(next);
                v.insert(id, c.clone());
            }
            vecs.push(v);
        }
        linalg::rank(vecs)
    } else {
        0
    };

    Ok(InvariantDimensions {
        degree,
        weight,
        dim_kernel,
        dim_image,
        pass: dim_kernel == dim_image,
    })
}

/// Injectivity surrogate on one component: the images of the standard
/// products must stay linearly independent.
#[derive(Clone, Debug, Serialize)]
pub struct InjectivityCell {
    pub degree: u32,
    pub weight: u32,
    pub n_standard: usize,
    pub rank_image: usize,
    pub pass: bool,
}

pub fn verify_injectivity(p: u32, h: u32, degree: u32, weight: u32) -> Result<InjectivityCell> {
    let mut map = JetMap::new(p, h)?;
    let sps = enumerate_standard(p, h, degree, weight);
    // images split by copy content; rank per block
    let mut by_content: BTreeMap<Vec<u32>, Vec<Poly<AGen>>> = BTreeMap::new();
    for sp in &sps {
        let im = map.apply(&product_poly(p, sp.factors()));
        by_content.entry(sp.content(p)).or_default().push(im);
    }
    let mut rank_image = 0usize;
    for polys in by_content.values() {
        let mut cols: BTreeMap<Monomial<AGen>, usize> = BTreeMap::new();
        let mut vecs = Vec::new();
        for f in polys {
            let mut v = SparseVec::new();
            for (m, c) in f.terms() {
                let next = cols.len();
                let id = *cols.entry(m.clone()).or_insert(next);
                v.insert(id, c.clone());
            }
            vecs.push(v);
        }
        rank_image += linalg::rank(vecs);
    }
    Ok(InjectivityCell {
        degree,
        weight,
        n_standard: sps.len(),
        rank_image,
        pass: rank_image == sps.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::JSeq;
    use crate::pfaffian::{pfaffian, pfaffian_derivative, MinorSpec};
    use crate::ring::XVars;

    fn ag(i: u32, l: u32, k: u32) -> AGen {
        AGen { k, i, l }
    }

    fn ap(p: u32, h: u32, i: u32, l: u32, k: u32) -> Poly<AGen> {
        Poly::generator(AVars { p, h }, ag(i, l, k)).unwrap()
    }

    fn xp(p: u32, u: u32, v: u32, k: u32) -> Poly<XGen> {
        Poly::generator(XVars { p }, XGen { k, u, v }).unwrap()
    }

    fn j(rows: &[u32], wt: u32) -> JSeq {
        JSeq::new(rows.to_vec(), wt).unwrap()
    }

    #[test]
    fn image_of_base_generator() {
        let im = qh(2, 2, &xp(2, 1, 2, 0)).unwrap();
        let expect = ap(2, 2, 1, 1, 0)
            .mul(&ap(2, 2, 2, 2, 0))
            .sub(&ap(2, 2, 2, 1, 0).mul(&ap(2, 2, 1, 2, 0)));
        assert_eq!(im, expect);
    }

    #[test]
    fn image_of_derived_generator_is_leibniz_expansion() {
        let im = qh(2, 2, &xp(2, 1, 2, 1)).unwrap();
        let expect = ap(2, 2, 1, 1, 1)
            .mul(&ap(2, 2, 2, 2, 0))
            .add(&ap(2, 2, 1, 1, 0).mul(&ap(2, 2, 2, 2, 1)))
            .sub(&ap(2, 2, 2, 1, 1).mul(&ap(2, 2, 1, 2, 0)))
            .sub(&ap(2, 2, 2, 1, 0).mul(&ap(2, 2, 1, 2, 1)));
        assert_eq!(im, expect);
    }

    #[test]
    fn oversized_pfaffian_maps_to_zero() {
        let f = pfaffian(4, &MinorSpec::new(vec![1, 2, 3, 4]).unwrap());
        assert!(qh(4, 2, &f).unwrap().is_zero());
    }

    #[test]
    fn qh_commutes_with_derivation() {
        let f = xp(3, 1, 2, 0)
            .mul(&xp(3, 2, 3, 1))
            .sub(&xp(3, 1, 3, 0).scale_i64(2));
        for l in 0..=3 {
            let lhs = qh(3, 2, &dbar(l, &f)).unwrap();
            let rhs = dbar(l, &qh(3, 2, &f).unwrap());
            assert_eq!(lhs, rhs, "l={l}");
        }
    }

    #[test]
    fn tableau_examples() {
        // one row
        let m = Monomial::from_pairs([(ag(1, 1, 0), 1), (ag(2, 2, 0), 1)]);
        let t = tableau_of(&m, 2);
        assert_eq!(t.height(), 1);
        assert_eq!(t.entry(0, 1), Some(ag(1, 1, 0)));
        assert_eq!(t.entry(0, 2), Some(ag(2, 2, 0)));

        // two rows in one column, stars in the other
        let m = Monomial::from_pairs([(ag(1, 1, 0), 1), (ag(1, 1, 1), 1)]);
        let t = tableau_of(&m, 2);
        assert_eq!(t.height(), 2);
        assert_eq!(t.entry(0, 1), Some(ag(1, 1, 0)));
        assert_eq!(t.entry(1, 1), Some(ag(1, 1, 1)));
        assert_eq!(t.entry(0, 2), None);
        assert!(t.is_column_monotone());

        // the empty monomial
        let t = tableau_of(&Monomial::one(), 2);
        assert_eq!(t.height(), 0);
    }

    #[test]
    fn tableau_round_trip() {
        for d in 0..=3u32 {
            for w in 0..=2u32 {
                for m in monomials_of_bidegree(&agens(2, 2, w), d, w) {
                    let t = tableau_of(&m, 2);
                    assert_eq!(t.monomial(), m);
                    assert!(t.is_column_monotone());
                }
            }
        }
    }

    #[test]
    fn leading_monomial_examples() {
        let im = qh(2, 2, &xp(2, 1, 2, 0)).unwrap();
        let (lead, coeff) = leading_monomial(&im, 2).unwrap();
        assert_eq!(lead, Monomial::from_pairs([(ag(1, 1, 0), 1), (ag(2, 2, 0), 1)]));
        assert_eq!(coeff, BigInt::one());

        let single = ap(2, 2, 1, 1, 1);
        let (lead, _) = leading_monomial(&single, 2).unwrap();
        assert_eq!(lead, Monomial::from_pairs([(ag(1, 1, 1), 1)]));

        let im = qh(2, 2, &crate::quotient::jseq_poly(2, &j(&[1, 2], 1))).unwrap();
        let (lead, coeff) = leading_monomial(&im, 2).unwrap();
        assert_eq!(lead, Monomial::from_pairs([(ag(1, 1, 0), 1), (ag(2, 2, 1), 1)]));
        assert_eq!(coeff, BigInt::one());

        assert!(leading_monomial(&Poly::zero(AVars { p: 2, h: 2 }), 2).is_err());
    }

    #[test]
    fn t_map_examples() {
        let es = vec![ESeq::new(vec![(2, 0), (1, 0)]).unwrap()];
        let t = t_map(&es, 2).unwrap();
        assert_eq!(t.height(), 1);
        assert_eq!(t.entry(0, 1), Some(ag(1, 1, 0)));
        assert_eq!(t.entry(0, 2), Some(ag(2, 2, 0)));

        let es = vec![
            ESeq::new(vec![(2, 0), (1, 0)]).unwrap(),
            ESeq::new(vec![(2, 1), (1, 0)]).unwrap(),
        ];
        let t = t_map(&es, 2).unwrap();
        assert_eq!(t.height(), 2);
        assert_eq!(t.entry(1, 2), Some(ag(2, 2, 1)));
        assert!(t.is_column_monotone());

        assert_eq!(t_map(&[], 2).unwrap().height(), 0);

        // a non-canonical chain is rejected
        let bad = vec![ESeq::new(vec![(1, 0), (2, 0)]).unwrap()];
        assert!(t_map(&bad, 2).is_err());
    }

    #[test]
    fn leading_law_examples() {
        let sp = crate::standard::standard_product(vec![j(&[1, 2], 0)]).unwrap();
        assert!(verify_leading_product(&sp, 2, 2).unwrap());

        let sp = crate::standard::standard_product(vec![j(&[1, 2], 0), j(&[1, 2], 1)]).unwrap();
        assert!(verify_leading_product(&sp, 2, 2).unwrap());

        let report = verify_leading(3, 2, 2, 2).unwrap();
        assert!(report.pass, "{report:?}");
        assert!(report.checked > 0);
    }

    #[test]
    fn sp_basis_satisfies_identity_and_count() {
        for h in [2u32, 4] {
            let basis = sp_basis(h);
            assert_eq!(basis.len(), (h * (h + 1) / 2) as usize);
            let jm = symplectic_gram(h);
            for b in &basis {
                let lhs = mat_add(
                    &mat_mul(&mat_transpose(b.matrix()), &jm),
                    &mat_mul(&jm, b.matrix()),
                );
                assert!(is_zero_mat(&lhs));
            }
        }
    }

    #[test]
    fn sp_element_rejects_non_symplectic() {
        let bad = vec![
            vec![BigInt::one(), BigInt::zero()],
            vec![BigInt::zero(), BigInt::one()],
        ];
        assert!(SpElement::new(bad, 0).is_err());
    }

    #[test]
    fn sp_action_trivial_cases() {
        let f = ap(2, 2, 1, 1, 1).mul(&ap(2, 2, 2, 2, 0));
        // level beyond every jet weight in f kills it
        for b in sp_basis(2) {
            let el = SpElement::new(b.matrix().clone(), 5).unwrap();
            assert!(sp_action(&el, &f).is_zero());
        }
        // constants die under any derivation
        let c = Poly::constant(AVars { p: 2, h: 2 }, 7);
        for b in sp_basis(2) {
            assert!(sp_action(&b, &c).is_zero());
        }
    }

    #[test]
    fn sp_action_kills_pairing_on_diagonal_element() {
        let diag = SpElement::new(
            vec![
                vec![BigInt::one(), BigInt::zero()],
                vec![BigInt::zero(), -BigInt::one()],
            ],
            0,
        )
        .unwrap();
        let x_image = qh(2, 2, &xp(2, 1, 2, 0)).unwrap();
        assert!(sp_action(&diag, &x_image).is_zero());
    }

    #[test]
    fn sp_action_respects_bigrading() {
        // derivations preserve the variable count and lower the weight by m
        let f = ap(2, 2, 1, 1, 2).mul(&ap(2, 2, 2, 2, 1));
        for b in sp_basis(2) {
            for m in 0..=2u32 {
                let el = SpElement::new(b.matrix().clone(), m).unwrap();
                let out = sp_action(&el, &f);
                if let Some((d, w)) = out.bidegree().unwrap() {
                    assert_eq!(d, 2);
                    assert_eq!(w, 3 - m);
                }
            }
        }
    }

    #[test]
    fn invariance_report_small() {
        let report = verify_invariance(2, 2, 2, 2).unwrap();
        assert!(report.pass, "{:?}", report.failures);
        // 1 generator pair, 3 jet weights, 3 basis elements, 3 levels
        assert_eq!(report.checks, 27);

        // no generators exist for p = 1
        let report = verify_invariance(1, 2, 2, 2).unwrap();
        assert!(report.pass);
        assert_eq!(report.checks, 0);
    }

    #[test]
    fn minor_kernel_small() {
        assert!(verify_minor_kernel(4, 2, 2).unwrap());
    }

    #[test]
    fn invariant_dimension_examples() {
        let out = invariant_dimension(2, 2, 2, 0, 0).unwrap();
        assert_eq!((out.dim_kernel, out.dim_image), (1, 1));
        let out = invariant_dimension(2, 2, 2, 1, 1).unwrap();
        assert_eq!((out.dim_kernel, out.dim_image), (1, 1));
        let out = invariant_dimension(2, 2, 1, 0, 0).unwrap();
        assert_eq!((out.dim_kernel, out.dim_image), (0, 0));
    }

    #[test]
    fn injectivity_examples() {
        let cell = verify_injectivity(4, 2, 2, 0).unwrap();
        assert!(cell.pass);
        assert_eq!(cell.n_standard, 20);

        for d in 0..=3 {
            for w in 0..=3 {
                let cell = verify_injectivity(2, 2, d, w).unwrap();
                assert!(cell.pass, "d={d} w={w}: {cell:?}");
            }
        }

        // empty cell passes vacuously
        let cell = verify_injectivity(1, 2, 2, 0).unwrap();
        assert!(cell.pass);
        assert_eq!(cell.n_standard, 0);
    }

    #[test]
    fn images_of_oversized_derivatives_vanish() {
        // relations: derivatives of minors two larger than the pairing rank
        let minor = MinorSpec::new(vec![1, 2, 3, 4]).unwrap();
        for n in 0..=3 {
            let f = pfaffian_derivative(4, &minor, n);
            assert!(qh(4, 2, &f).unwrap().is_zero(), "n={n}");
        }
    }
}
