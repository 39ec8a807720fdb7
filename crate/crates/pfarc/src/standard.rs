//! Standard monomials: the canonical lift predicate and graded enumeration.
//!
//! An ordered product `J_1 J_2 ... J_m` is standard when it admits a lift
//! `E_1 E_2 ... E_m` with `||E_a|| = J_a` such that the chain ascends in the
//! partial order, `E_1` is the largest lift of `J_1`, and each `E_{a+1}` is
//! the largest lift of `J_{a+1}` dominating `E_a`. The lift is unique when
//! it exists and is built greedily.

use std::collections::HashMap;
use std::rc::Rc;

use crate::order::{e_max, largest_dominating, ESeq, JSeq};

/// A standard product: the sequence factors together with their canonical
/// lift chain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardProduct {
    js: Vec<JSeq>,
    es: Vec<ESeq>,
}

impl StandardProduct {
    pub fn factors(&self) -> &[JSeq] {
        &self.js
    }

    pub fn lift(&self) -> &[ESeq] {
        &self.es
    }

    /// Total degree: half the total size.
    pub fn degree(&self) -> u32 {
        self.js.iter().map(JSeq::degree).sum()
    }

    pub fn weight(&self) -> u32 {
        self.js.iter().map(JSeq::wt).sum()
    }

    /// Row content over `1..=p`: how often each row appears across factors.
    pub fn content(&self, p: u32) -> Vec<u32> {
        let mut acc = vec![0u32; p as usize];
        for j in &self.js {
            for &r in j.rows() {
                acc[(r - 1) as usize] += 1;
            }
        }
        acc
    }
}

impl std::fmt::Display for StandardProduct {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.js.is_empty() {
            return write!(f, "1");
        }
        for (idx, j) in self.js.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{j}")?;
        }
        Ok(())
    }
}

/// The canonical lift of an ordered product, or `None` when the product is
/// not standard.
///
/// Greedy construction: start from the largest lift of the first factor and
/// repeatedly take the largest dominating lift of the next one. A factor
/// larger than the running lift (or with no dominating lift at all) makes
/// the product non-standard.
pub fn canonical_lift(js: &[JSeq]) -> Option<Vec<ESeq>> {
    let mut es: Vec<ESeq> = Vec::with_capacity(js.len());
    for j in js {
        let next = match es.last() {
            None => Some(e_max(j)),
            Some(prev) => {
                if j.sz() > prev.sz() {
                    None
                } else {
                    largest_dominating(prev, j).expect("size checked above")
                }
            }
        };
        es.push(next?);
    }
    Some(es)
}

/// Whether the ordered product is standard.
pub fn is_standard(js: &[JSeq]) -> bool {
    canonical_lift(js).is_some()
}

/// Assemble a [`StandardProduct`] from its factors, when standard.
pub fn standard_product(js: Vec<JSeq>) -> Option<StandardProduct> {
    let es = canonical_lift(&js)?;
    Some(StandardProduct { js, es })
}

type Chain = Vec<(JSeq, ESeq)>;

struct Enumerator {
    candidates: Vec<JSeq>,
    memo: HashMap<(ESeq, u32, u32), Rc<Vec<Chain>>>,
}

impl Enumerator {
    /// All chains extending `last` that consume exactly the remaining
    /// degree and weight budget.
    fn extend(&mut self, last: &ESeq, rd: u32, rw: u32) -> Rc<Vec<Chain>> {
        if rd == 0 {
            return Rc::new(if rw == 0 { vec![vec![]] } else { vec![] });
        }
        let key = (last.clone(), rd, rw);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let mut chains = Vec::new();
        for idx in 0..self.candidates.len() {
            let next = self.candidates[idx].clone();
            if next.degree() > rd || next.wt() > rw || next.sz() > last.sz() {
                continue;
            }
            let dominated = largest_dominating(last, &next).expect("size checked above");
            let Some(e_next) = dominated else { continue };
            let suffixes = self.extend(&e_next, rd - next.degree(), rw - next.wt());
            for suffix in suffixes.iter() {
                let mut chain = Vec::with_capacity(suffix.len() + 1);
                chain.push((next.clone(), e_next.clone()));
                chain.extend(suffix.iter().cloned());
                chains.push(chain);
            }
        }
        let rc = Rc::new(chains);
        self.memo.insert(key, rc.clone());
        rc
    }
}

/// All standard products over rows `1..=p` with factor sizes at most
/// `h_max`, total degree `d` and total weight `w`.
///
/// A factor of size `s` and weight `n` contributes `s/2` to the degree and
/// `n` to the weight. Enumeration is a depth-first extension by the next
/// factor in ascending sequence order, memoized on the running lift and the
/// remaining budget; the output order is deterministic.
pub fn enumerate_standard(p: u32, h_max: u32, d: u32, w: u32) -> Vec<StandardProduct> {
    if d == 0 {
        return if w == 0 {
            vec![StandardProduct {
                js: vec![],
                es: vec![],
            }]
        } else {
            vec![]
        };
    }
    let mut candidates = Vec::new();
    for sz in (2..=h_max.min(2 * d) as usize).step_by(2) {
        for wt in 0..=w {
            candidates.extend(crate::order::all_jseqs(p, sz, wt));
        }
    }
    candidates.sort();
    let mut en = Enumerator {
        candidates,
        memo: HashMap::new(),
    };
    let mut out = Vec::new();
    for idx in 0..en.candidates.len() {
        let first = en.candidates[idx].clone();
        if first.degree() > d || first.wt() > w {
            continue;
        }
        let e1 = e_max(&first);
        let suffixes = en.extend(&e1, d - first.degree(), w - first.wt());
        for suffix in suffixes.iter() {
            let mut js = Vec::with_capacity(suffix.len() + 1);
            let mut es = Vec::with_capacity(suffix.len() + 1);
            js.push(first.clone());
            es.push(e1.clone());
            for (jn, en_) in suffix {
                js.push(jn.clone());
                es.push(en_.clone());
            }
            out.push(StandardProduct { js, es });
        }
    }
    out
}
