//! Exact sparse arithmetic in the two differential polynomial rings.
//!
//! Generators of the skew ring are `x^(k)_{uv}` with `1 <= u < v <= p` and
//! jet weight `k >= 0`; the relations `x_{vu} = -x_{uv}` and `x_{uu} = 0`
//! are applied eagerly, so only canonical generators are ever stored.
//! Generators of the jet coordinate ring are `a^(k)_{il}` with
//! `1 <= i <= p`, `1 <= l <= h`. Both rings carry the normalized derivation
//! `dbar^l = (1/l!) d^l`, implemented per-monomial by distributing the
//! derivation order over factors so all intermediates stay integral.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Binomial coefficient as an arbitrary-precision integer.
///
/// Returns 0 when `k < 0` or `k > n`, matching the convention used for
/// derivation coefficients.
pub fn binom(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// A generator of one of the two polynomial rings.
///
/// Implementations carry a jet weight `k` and know how to raise it, which
/// is all the derivation needs: `dbar^l g = C(k+l, l) * raise(g, l)`.
pub trait Generator: Copy + Clone + Eq + Ord + std::hash::Hash + fmt::Debug + fmt::Display {
    /// Alphabet descriptor: index bounds the generator must satisfy.
    type Vars: Clone + Eq + PartialEq + fmt::Debug + fmt::Display;

    fn jet(&self) -> u32;
    fn with_jet(&self, k: u32) -> Self;
    fn in_bounds(&self, vars: &Self::Vars) -> bool;

    /// Accumulate this generator's row content into `acc` (index 0 = row 1).
    fn add_content(&self, acc: &mut [u32], times: u32);

    /// Index tuple used by the JSON wire form (`[u, v, k]` or `[i, l, k]`).
    fn index_tuple(&self) -> [u32; 3];
    fn from_index_tuple(t: [u32; 3]) -> Self;

    /// Ring tag for the JSON wire form.
    const RING_TAG: &'static str;
}

/// Canonical generator `x^(k)_{uv}` of the skew ring, stored with `u < v`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct XGen {
    pub k: u32,
    pub u: u32,
    pub v: u32,
}

/// Generator `a^(k)_{il}` of the jet coordinate ring.
///
/// Field order matters: the derived `Ord` is lexicographic on `(k, i, l)`,
/// which is the order used for tableau words.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AGen {
    pub k: u32,
    pub i: u32,
    pub l: u32,
}

/// Alphabet of the skew ring: rows and columns range over `1..=p`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct XVars {
    pub p: u32,
}

/// Alphabet of the jet coordinate ring: copies `1..=p`, coordinates `1..=h`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct AVars {
    pub p: u32,
    pub h: u32,
}

impl fmt::Display for XVars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X(p={})", self.p)
    }
}

impl fmt::Display for AVars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A(p={},h={})", self.p, self.h)
    }
}

impl fmt::Display for XGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^({})_{{{}{}}}", self.k, self.u, self.v)
    }
}

impl fmt::Display for AGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^({})_{{{}{}}}", self.k, self.i, self.l)
    }
}

impl Generator for XGen {
    type Vars = XVars;

    fn jet(&self) -> u32 {
        self.k
    }

    fn with_jet(&self, k: u32) -> Self {
        XGen { k, ..*self }
    }

    fn in_bounds(&self, vars: &XVars) -> bool {
        self.u >= 1 && self.u < self.v && self.v <= vars.p
    }

    fn add_content(&self, acc: &mut [u32], times: u32) {
        acc[(self.u - 1) as usize] += times;
        acc[(self.v - 1) as usize] += times;
    }

    fn index_tuple(&self) -> [u32; 3] {
        [self.u, self.v, self.k]
    }

    fn from_index_tuple(t: [u32; 3]) -> Self {
        XGen {
            u: t[0],
            v: t[1],
            k: t[2],
        }
    }

    const RING_TAG: &'static str = "X";
}

impl Generator for AGen {
    type Vars = AVars;

    fn jet(&self) -> u32 {
        self.k
    }

    fn with_jet(&self, k: u32) -> Self {
        AGen { k, ..*self }
    }

    fn in_bounds(&self, vars: &AVars) -> bool {
        self.i >= 1 && self.i <= vars.p && self.l >= 1 && self.l <= vars.h
    }

    fn add_content(&self, acc: &mut [u32], times: u32) {
        acc[(self.i - 1) as usize] += times;
    }

    fn index_tuple(&self) -> [u32; 3] {
        [self.i, self.l, self.k]
    }

    fn from_index_tuple(t: [u32; 3]) -> Self {
        AGen {
            i: t[0],
            l: t[1],
            k: t[2],
        }
    }

    const RING_TAG: &'static str = "A";
}

/// Canonicalize the index triple of a would-be `x^(k)_{uv}`.
///
/// Returns `None` for a diagonal entry (the generator is zero) and
/// otherwise the stored generator together with the sign picked up from the
/// skew relation: `-1` exactly when the input had `u > v`.
pub fn normalize_xgen(p: u32, u: u32, v: u32, k: u32) -> Result<Option<(XGen, i32)>> {
    if u < 1 || v < 1 || u > p || v > p {
        return Err(Error::IndexOutOfBounds { u, v, k, p });
    }
    if u == v {
        return Ok(None);
    }
    if u < v {
        Ok(Some((XGen { k, u, v }, 1)))
    } else {
        Ok(Some((XGen { k, u: v, v: u }, -1)))
    }
}

/// A monomial: strictly increasing generators with positive exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial<G: Generator> {
    factors: Vec<(G, u32)>,
}

impl<G: Generator> Monomial<G> {
    pub fn one() -> Self {
        Monomial {
            factors: Vec::new(),
        }
    }

    pub fn generator(g: G) -> Self {
        Monomial {
            factors: vec![(g, 1)],
        }
    }

    /// Build from arbitrary (generator, exponent) pairs; merges repeats and
    /// drops zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (G, u32)>) -> Self {
        let mut factors: Vec<(G, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_by_key(|f| f.0);
        let mut merged: Vec<(G, u32)> = Vec::with_capacity(factors.len());
        for (g, e) in factors {
            match merged.last_mut() {
                Some((lg, le)) if *lg == g => *le += e,
                _ => merged.push((g, e)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn factors(&self) -> &[(G, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total degree: sum of exponents.
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    /// Total weight: exponent-weighted sum of jet indices.
    pub fn weight(&self) -> u32 {
        self.factors.iter().map(|&(g, e)| g.jet() * e).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial::from_pairs(
            self.factors
                .iter()
                .chain(other.factors.iter())
                .map(|&(g, e)| (g, e)),
        )
    }

    /// Row content as a multiplicity vector over `1..=p`.
    pub fn content(&self, p: u32) -> Vec<u32> {
        let mut acc = vec![0u32; p as usize];
        for &(g, e) in &self.factors {
            g.add_content(&mut acc, e);
        }
        acc
    }

    /// The monomial expanded into a generator word (ascending).
    pub fn word(&self) -> Vec<G> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for &(g, e) in &self.factors {
            for _ in 0..e {
                w.push(g);
            }
        }
        w
    }
}

impl<G: Generator> fmt::Display for Monomial<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (idx, (g, e)) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            write!(f, "{g}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A sparse polynomial with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored. Every value is immutable after
/// construction; all operations return fresh polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<G: Generator> {
    vars: G::Vars,
    terms: BTreeMap<Monomial<G>, BigInt>,
}

impl<G: Generator> Poly<G> {
    pub fn zero(vars: G::Vars) -> Self {
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: G::Vars, c: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        let c = c.into();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { vars, terms }
    }

    pub fn one(vars: G::Vars) -> Self {
        Poly::constant(vars, 1)
    }

    /// Single generator as a polynomial; bounds are checked against `vars`.
    pub fn generator(vars: G::Vars, g: G) -> Result<Self> {
        if !g.in_bounds(&vars) {
            return Err(Error::InvalidParameter(format!(
                "generator {g} out of bounds for alphabet {vars}"
            )));
        }
        Ok(Poly::from_terms(vars, [(Monomial::generator(g), BigInt::one())]))
    }

    pub fn from_terms(
        vars: G::Vars,
        terms: impl IntoIterator<Item = (Monomial<G>, BigInt)>,
    ) -> Self {
        let mut map: BTreeMap<Monomial<G>, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            *map.entry(m).or_insert_with(BigInt::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Poly { vars, terms: map }
    }

    pub fn vars(&self) -> &G::Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<G>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial<G>) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    fn ensure_same_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::AlphabetMismatch {
                lhs: format!("{}", self.vars),
                rhs: format!("{}", other.vars),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ensure_same_vars(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Poly {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ensure_same_vars(other)?;
        let mut terms: BTreeMap<Monomial<G>, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let entry = terms.entry(m).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Poly {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("alphabet mismatch in add")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("alphabet mismatch in sub")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("alphabet mismatch in mul")
    }

    pub fn neg(&self) -> Self {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Poly::zero(self.vars.clone());
        }
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, coeff)| (m.clone(), coeff * c))
                .collect(),
        }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    /// Exact division by an integer scalar. Errors if any coefficient is
    /// not divisible.
    pub fn div_exact(&self, d: &BigInt) -> Result<Self> {
        assert!(!d.is_zero(), "division by zero");
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (q, r) = num_integer::Integer::div_rem(c, d);
            if !r.is_zero() {
                return Err(Error::NonIntegralSolution {
                    context: format!("coefficient {c} of {m} not divisible by {d}"),
                });
            }
            terms.insert(m.clone(), q);
        }
        Ok(Poly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// `(degree, weight)` when the polynomial is bihomogeneous.
    pub fn bidegree(&self) -> Result<Option<(u32, u32)>> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Ok(None),
            Some(m) => (m.degree(), m.weight()),
        };
        for m in it {
            if (m.degree(), m.weight()) != first {
                return Err(Error::NonHomogeneous);
            }
        }
        Ok(Some(first))
    }

    /// Split into content-homogeneous parts, keyed by row-content vector.
    pub fn split_by_content(&self, p: u32) -> BTreeMap<Vec<u32>, Poly<G>> {
        let mut out: BTreeMap<Vec<u32>, Poly<G>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = m.content(p);
            out.entry(key)
                .or_insert_with(|| Poly::zero(self.vars.clone()))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }
}

impl<G: Generator> fmt::Display for Poly<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if a.is_one() && !m.is_one() {
                write!(f, "{m}")?;
            } else if m.is_one() {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

/// The `l`-th normalized derivative of a single generator power `g^e`.
fn dbar_power<G: Generator>(vars: &G::Vars, l: u32, g: G, e: u32) -> Poly<G> {
    if e == 0 {
        return if l == 0 {
            Poly::one(vars.clone())
        } else {
            Poly::zero(vars.clone())
        };
    }
    let mut acc = Poly::zero(vars.clone());
    for j in 0..=l {
        let rest = dbar_power(vars, l - j, g, e - 1);
        if rest.is_zero() {
            continue;
        }
        let raised = g.with_jet(g.jet() + j);
        let coeff = binom((g.jet() + j) as u64, j as i64);
        let factor = Poly::from_terms(vars.clone(), [(Monomial::generator(raised), coeff)]);
        acc = acc.add(&factor.mul(&rest));
    }
    acc
}

fn dbar_factors<G: Generator>(vars: &G::Vars, l: u32, factors: &[(G, u32)]) -> Poly<G> {
    match factors.split_first() {
        None => {
            if l == 0 {
                Poly::one(vars.clone())
            } else {
                Poly::zero(vars.clone())
            }
        }
        Some((&(g, e), rest)) => {
            let mut acc = Poly::zero(vars.clone());
            for i in 0..=l {
                let left = dbar_power(vars, i, g, e);
                let right = dbar_factors(vars, l - i, rest);
                if left.is_zero() || right.is_zero() {
                    continue;
                }
                acc = acc.add(&left.mul(&right));
            }
            acc
        }
    }
}

/// The `l`-th normalized derivative `dbar^l f = (1/l!) d^l f`.
///
/// Computed by distributing the order over factors with the generator rule
/// `dbar^l g^(k) = C(k+l, l) g^(k+l)`, so the result is integral by
/// construction rather than by an a-posteriori division.
pub fn dbar<G: Generator>(l: u32, f: &Poly<G>) -> Poly<G> {
    if l == 0 {
        return f.clone();
    }
    let mut acc = Poly::zero(f.vars.clone());
    for (m, c) in &f.terms {
        let dm = dbar_factors(&f.vars, l, m.factors());
        acc = acc.add(&dm.scale(c));
    }
    acc
}

/// All monomials over `gens` with the given total degree and weight.
///
/// Generators must be passed in ascending order; the output is then in a
/// deterministic order with canonical factor lists.
pub fn monomials_of_bidegree<G: Generator>(gens: &[G], degree: u32, weight: u32) -> Vec<Monomial<G>> {
    let mut out = Vec::new();
    let mut stack: Vec<(G, u32)> = Vec::new();
    fn rec<G: Generator>(
        gens: &[G],
        pos: usize,
        d: u32,
        w: u32,
        stack: &mut Vec<(G, u32)>,
        out: &mut Vec<Monomial<G>>,
    ) {
        if d == 0 {
            if w == 0 {
                out.push(Monomial::from_pairs(stack.iter().copied()));
            }
            return;
        }
        if pos >= gens.len() {
            return;
        }
        let g = gens[pos];
        let k = g.jet();
        let max_e = if k == 0 { d } else { d.min(w / k) };
        for e in (0..=max_e).rev() {
            if e > 0 {
                stack.push((g, e));
            }
            rec(gens, pos + 1, d - e, w - e * k, stack, out);
            if e > 0 {
                stack.pop();
            }
        }
    }
    rec(gens, 0, degree, weight, &mut stack, &mut out);
    out
}

/// Ascending list of skew-ring generators with jet weight at most `k_max`.
pub fn xgens(p: u32, k_max: u32) -> Vec<XGen> {
    let mut gens = Vec::new();
    for k in 0..=k_max {
        for u in 1..=p {
            for v in (u + 1)..=p {
                gens.push(XGen { k, u, v });
            }
        }
    }
    gens.sort();
    gens
}

/// Ascending list of jet-ring generators with jet weight at most `k_max`.
pub fn agens(p: u32, h: u32, k_max: u32) -> Vec<AGen> {
    let mut gens = Vec::new();
    for k in 0..=k_max {
        for i in 1..=p {
            for l in 1..=h {
                gens.push(AGen { k, i, l });
            }
        }
    }
    gens.sort();
    gens
}

// --- JSON wire form -------------------------------------------------------
//
// {"ring":"X"|"A","p":p,"h":h,"terms":[[coeff_string,[[idx,idx,k,exp],...]],...]}
// Coefficients are decimal strings so arbitrary precision survives transport.

impl Poly<XGen> {
    pub fn to_json(&self) -> Value {
        poly_json(self, self.vars.p, 0)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let (ring, p, _h, terms) = parse_poly_json(value)?;
        if ring != "X" {
            return Err(Error::InvalidParameter(format!(
                "expected ring \"X\", got {ring:?}"
            )));
        }
        let vars = XVars { p };
        let mut out = Vec::new();
        for (c, gens) in terms {
            let mono = Monomial::from_pairs(gens.into_iter().map(|(t, e)| {
                (XGen::from_index_tuple(t), e)
            }));
            for (g, _) in mono.factors() {
                if !g.in_bounds(&vars) {
                    return Err(Error::IndexOutOfBounds {
                        u: g.u,
                        v: g.v,
                        k: g.k,
                        p,
                    });
                }
            }
            out.push((mono, c));
        }
        Ok(Poly::from_terms(vars, out))
    }
}

impl Poly<AGen> {
    pub fn to_json(&self) -> Value {
        poly_json(self, self.vars.p, self.vars.h)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let (ring, p, h, terms) = parse_poly_json(value)?;
        if ring != "A" {
            return Err(Error::InvalidParameter(format!(
                "expected ring \"A\", got {ring:?}"
            )));
        }
        let vars = AVars { p, h };
        let mut out = Vec::new();
        for (c, gens) in terms {
            let mono = Monomial::from_pairs(gens.into_iter().map(|(t, e)| {
                (AGen::from_index_tuple(t), e)
            }));
            for (g, _) in mono.factors() {
                if !g.in_bounds(&vars) {
                    return Err(Error::IndexOutOfBounds {
                        u: g.i,
                        v: g.l,
                        k: g.k,
                        p,
                    });
                }
            }
            out.push((mono, c));
        }
        Ok(Poly::from_terms(vars, out))
    }
}

fn poly_json<G: Generator>(poly: &Poly<G>, p: u32, h: u32) -> Value {
    let terms: Vec<Value> = poly
        .terms
        .iter()
        .map(|(m, c)| {
            let gens: Vec<Value> = m
                .factors()
                .iter()
                .map(|(g, e)| {
                    let [a, b, k] = g.index_tuple();
                    json!([a, b, k, e])
                })
                .collect();
            json!([c.to_string(), gens])
        })
        .collect();
    json!({
        "ring": G::RING_TAG,
        "p": p,
        "h": h,
        "terms": terms,
    })
}

type ParsedTerms = Vec<(BigInt, Vec<([u32; 3], u32)>)>;

fn parse_poly_json(value: &Value) -> Result<(String, u32, u32, ParsedTerms)> {
    let bad = |msg: &str| Error::InvalidParameter(format!("malformed polynomial JSON: {msg}"));
    let obj = value.as_object().ok_or_else(|| bad("not an object"))?;
    let ring = obj
        .get("ring")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing ring tag"))?
        .to_string();
    let p = obj
        .get("p")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing p"))? as u32;
    let h = obj.get("h").and_then(Value::as_u64).unwrap_or(0) as u32;
    let terms_v = obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing terms"))?;
    let mut terms = Vec::new();
    for t in terms_v {
        let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
            bad("term is not a [coeff, factors] pair")
        })?;
        let coeff: BigInt = pair[0]
            .as_str()
            .ok_or_else(|| bad("coefficient is not a string"))?
            .parse()
            .map_err(|_| bad("coefficient is not an integer"))?;
        let gens_v = pair[1]
            .as_array()
            .ok_or_else(|| bad("factor list is not an array"))?;
        let mut gens = Vec::new();
        for g in gens_v {
            let quad = g.as_array().filter(|a| a.len() == 4).ok_or_else(|| {
                bad("factor is not a [idx, idx, k, exp] quadruple")
            })?;
            let nums: Vec<u32> = quad
                .iter()
                .map(|x| x.as_u64().map(|n| n as u32))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| bad("factor indices are not integers"))?;
            gens.push(([nums[0], nums[1], nums[2]], nums[3]));
        }
        terms.push((coeff, gens));
    }
    Ok((ring, p, h, terms))
}
