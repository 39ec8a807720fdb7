//! Sequence combinatorics: derived Pfaffian sequences, their weighted
//! lifts, the orders tying them together, and the domination machinery.
//!
//! A [`JSeq`] names a normalized Pfaffian derivative `dbar^n |u_h,...,u_1|`
//! with strictly increasing rows. An [`ESeq`] distributes the weight over
//! the rows: `|(u_h,k_h),...,(u_1,k_1)|` with distinct rows in any order.
//!
//! Sequences are written right-to-left: position 1 is the rightmost entry.
//! Stored vectors keep the written (left-to-right) order and all positional
//! accessors index from the right, so position `i` of a stored list `v` is
//! `v[len - i]`. This convention is applied once here and nowhere else.

use std::cmp::Ordering;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::pfaffian::compositions;

/// A normalized Pfaffian derivative `dbar^n |u_h,...,u_1|`, canonical
/// representative of its sign orbit: rows strictly increasing, size even.
///
/// The empty sequence must carry weight 0 (higher derivatives of the empty
/// Pfaffian are zero and name no ring element).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct JSeq {
    rows: Vec<u32>,
    wt: u32,
}

impl JSeq {
    pub fn new(rows: Vec<u32>, wt: u32) -> Result<Self> {
        if rows.len() % 2 != 0 {
            return Err(Error::OddLength(rows));
        }
        if !rows.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::NonMonotoneRows(rows));
        }
        if rows.is_empty() && wt > 0 {
            return Err(Error::InvalidParameter(
                "the empty sequence only exists at weight 0".into(),
            ));
        }
        Ok(JSeq { rows, wt })
    }

    /// Rows in ascending order (position 1 holds the smallest).
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn wt(&self) -> u32 {
        self.wt
    }

    pub fn sz(&self) -> usize {
        self.rows.len()
    }

    /// Contribution to the degree grading: half the size.
    pub fn degree(&self) -> u32 {
        (self.rows.len() / 2) as u32
    }

    /// Row at position `i`, counted from the right starting at 1. Because
    /// rows are stored ascending this is simply the i-th smallest row.
    pub fn row_at(&self, i: usize) -> u32 {
        self.rows[i - 1]
    }
}

impl std::fmt::Display for JSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "d^{}|", self.wt)?;
        for (idx, r) in self.rows.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "|")
    }
}

impl PartialOrd for JSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for JSeq {
    /// The total order on sequences: larger size first, then smaller
    /// weight, then the written word (rows read descending) lexicographic.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .sz()
            .cmp(&self.sz())
            .then_with(|| self.wt.cmp(&other.wt))
            .then_with(|| self.rows.iter().rev().cmp(other.rows.iter().rev()))
    }
}

/// Strict total order on sequences.
pub fn j_prec(a: &JSeq, b: &JSeq) -> bool {
    a.cmp(b) == Ordering::Less
}

/// A weighted lift `|(u_h,k_h),...,(u_1,k_1)|`: distinct rows, any order,
/// even length. Stored in written order; `pair_at` indexes from the right.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ESeq {
    pairs: Vec<(u32, u32)>,
}

impl ESeq {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        if pairs.len() % 2 != 0 {
            return Err(Error::OddLength(pairs.iter().map(|&(u, _)| u).collect()));
        }
        let mut rows: Vec<u32> = pairs.iter().map(|&(u, _)| u).collect();
        rows.sort_unstable();
        if rows.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!(
                "repeated row in lift {pairs:?}"
            )));
        }
        Ok(ESeq { pairs })
    }

    /// Pairs in written order: index 0 is `(u_h, k_h)`.
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn sz(&self) -> usize {
        self.pairs.len()
    }

    pub fn wt(&self) -> u32 {
        self.pairs.iter().map(|&(_, k)| k).sum()
    }

    /// Pair at position `i`, counted from the right starting at 1.
    pub fn pair_at(&self, i: usize) -> (u32, u32) {
        self.pairs[self.pairs.len() - i]
    }

    /// The truncation `E(s)`: the last `s` pairs (positions 1..=s).
    pub fn truncated(&self, s: usize) -> ESeq {
        ESeq {
            pairs: self.pairs[self.pairs.len() - s..].to_vec(),
        }
    }

    pub fn rows_sorted(&self) -> Vec<u32> {
        let mut rows: Vec<u32> = self.pairs.iter().map(|&(u, _)| u).collect();
        rows.sort_unstable();
        rows
    }

    /// The underlying sequence `||E||`: sorted rows, summed weight. Carries
    /// no sign.
    pub fn norm(&self) -> JSeq {
        JSeq {
            rows: self.rows_sorted(),
            wt: self.wt(),
        }
    }
}

impl std::fmt::Display for ESeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "|")?;
        for (idx, (u, k)) in self.pairs.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "({u},{k})")?;
        }
        write!(f, "|")
    }
}

/// The order on row/weight pairs: weight decides first, then the row.
pub fn pair_le(a: (u32, u32), b: (u32, u32)) -> bool {
    a.1 < b.1 || (a.1 == b.1 && a.0 <= b.0)
}

/// The partial order on lifts: `a <= b` when `sz(b) <= sz(a)` and the pairs
/// of `b` dominate positionwise from the right over `b`'s length.
pub fn e_partial_le(a: &ESeq, b: &ESeq) -> bool {
    if b.sz() > a.sz() {
        return false;
    }
    (1..=b.sz()).all(|i| pair_le(a.pair_at(i), b.pair_at(i)))
}

impl PartialOrd for ESeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ESeq {
    /// The total order on lifts: larger size first, then smaller total
    /// weight, then the written pair word lexicographic under the pair
    /// order (weight before row).
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .sz()
            .cmp(&self.sz())
            .then_with(|| self.wt().cmp(&other.wt()))
            .then_with(|| {
                self.pairs
                    .iter()
                    .map(|&p| (p.1, p.0))
                    .cmp(other.pairs.iter().map(|&p| (p.1, p.0)))
            })
    }
}

/// Strict total order on lifts.
pub fn e_total_prec(a: &ESeq, b: &ESeq) -> bool {
    a.cmp(b) == Ordering::Less
}

/// All lifts of `j`: every arrangement of its rows times every composition
/// of its weight.
///
/// Deterministic order: row arrangements ascend lexicographically read from
/// position 1 upward, and for each arrangement the weight vectors
/// `(k_1,...,k_h)` (again read from position 1) ascend lexicographically.
pub fn enumerate_e(j: &JSeq) -> Vec<ESeq> {
    let h = j.sz();
    let mut out = Vec::new();
    for positions in j.rows().iter().copied().permutations(h) {
        // positions[i] is the row at position i+1; stored order reverses.
        for comp in compositions(j.wt(), h) {
            let mut pairs: Vec<(u32, u32)> = positions
                .iter()
                .copied()
                .zip(comp.iter().copied())
                .collect();
            pairs.reverse();
            out.push(ESeq { pairs });
        }
    }
    out
}

/// The largest lift of `j` under the total order: all weight on the
/// leftmost position, rows ascending from the right.
pub fn e_max(j: &JSeq) -> ESeq {
    let mut pairs = Vec::with_capacity(j.sz());
    for (idx, &u) in j.rows().iter().rev().enumerate() {
        pairs.push((u, if idx == 0 { j.wt() } else { 0 }));
    }
    ESeq { pairs }
}

/// The shift invariant `L(E, J')`.
///
/// With the rows of `E`'s truncation to `sz(j)` sorted ascending, this is
/// the least shift `i_0` such that row `i` of `j` dominates sorted row
/// `i - i_0` for every `i > i_0`. It ignores all weights.
pub fn l_invariant(e: &ESeq, j: &JSeq) -> Result<u32> {
    let hp = j.sz();
    if hp > e.sz() {
        return Err(Error::SizeViolation {
            j: j.sz(),
            e: e.sz(),
        });
    }
    let sorted = e.truncated(hp).rows_sorted();
    'shift: for i0 in 0..=hp {
        for i in (i0 + 1)..=hp {
            if j.row_at(i) < sorted[i - i0 - 1] {
                continue 'shift;
            }
        }
        return Ok(i0 as u32);
    }
    unreachable!("the shift hp always satisfies the vacuous condition")
}

/// Criterion for `j` to dominate `e`: some lift of `j` lies above `e`.
///
/// Decided by the weight-slack test `wt(j) - wt(e(h')) >= L(e, j)`, which
/// the exhaustive lift enumeration must (and does) agree with.
pub fn is_greater(j: &JSeq, e: &ESeq) -> Result<bool> {
    let hp = j.sz();
    let l = l_invariant(e, j)?;
    let slack = j.wt() as i64 - e.truncated(hp).wt() as i64;
    Ok(slack >= l as i64)
}

/// Least total weight of a lift on `rows` dominating the positionwise
/// constraints.
///
/// Each position needs at least its constraint weight, plus one more when
/// the assigned row falls below the constraint row; minimizing the number
/// of deficient positions is a sorted greedy matching.
fn min_weight_to_dominate(rows: &[u32], constraints: &[(u32, u32)]) -> u32 {
    debug_assert_eq!(rows.len(), constraints.len());
    let base: u32 = constraints.iter().map(|&(_, b)| b).sum();
    let mut wanted: Vec<u32> = constraints.iter().map(|&(a, _)| a).collect();
    wanted.sort_unstable();
    let mut matched = 0usize;
    let mut ptr = 0usize;
    for &a in &wanted {
        while ptr < rows.len() && rows[ptr] < a {
            ptr += 1;
        }
        if ptr < rows.len() {
            matched += 1;
            ptr += 1;
        } else {
            break;
        }
    }
    base + (rows.len() - matched) as u32
}

/// The largest lift of `j` dominating `e`, or `None` when no lift does.
///
/// Built greedily from the leftmost position down: at each position take
/// the largest feasible pair (maximal weight first, then maximal row),
/// where feasibility means the remaining rows can still absorb the
/// remaining weight against the remaining constraints. Cross-checked
/// against the exhaustive enumeration in tests.
pub fn largest_dominating(e: &ESeq, j: &JSeq) -> Result<Option<ESeq>> {
    let hp = j.sz();
    if hp > e.sz() {
        return Err(Error::SizeViolation {
            j: j.sz(),
            e: e.sz(),
        });
    }
    // constraints[i-1] is the pair to dominate at position i.
    let constraints: Vec<(u32, u32)> = (1..=hp).map(|i| e.pair_at(i)).collect();
    let mut rows_avail: Vec<u32> = j.rows().to_vec();
    let mut w_rem = j.wt();
    if min_weight_to_dominate(&rows_avail, &constraints) > w_rem {
        return Ok(None);
    }
    let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(hp);
    for pos in (1..=hp).rev() {
        let (a, b) = constraints[pos - 1];
        let rest_cons = &constraints[..pos - 1];
        let mut best: Option<(u32, u32, usize)> = None; // (weight, row, index)
        for (idx, &v) in rows_avail.iter().enumerate() {
            let min_c = b + u32::from(v < a);
            let mut rest_rows = rows_avail.clone();
            rest_rows.remove(idx);
            let rest_min = min_weight_to_dominate(&rest_rows, rest_cons);
            if rest_min > w_rem {
                continue;
            }
            let c_max = w_rem - rest_min;
            if c_max < min_c {
                continue;
            }
            if best.is_none_or(|(bc, bv, _)| (c_max, v) > (bc, bv)) {
                best = Some((c_max, v, idx));
            }
        }
        match best {
            None => return Ok(None),
            Some((c, v, idx)) => {
                rows_avail.remove(idx);
                w_rem -= c;
                pairs.push((v, c));
            }
        }
    }
    debug_assert_eq!(w_rem, 0);
    Ok(Some(ESeq { pairs }))
}

/// All sequences over rows `1..=p` with the given even size and weight, in
/// ascending total order.
pub fn all_jseqs(p: u32, sz: usize, wt: u32) -> Vec<JSeq> {
    if sz == 0 {
        return if wt == 0 {
            vec![JSeq { rows: vec![], wt: 0 }]
        } else {
            vec![]
        };
    }
    let mut out: Vec<JSeq> = (1..=p)
        .combinations(sz)
        .map(|rows| JSeq { rows, wt })
        .collect();
    out.sort();
    out
}

/// All lifts over rows `1..=p` with the given even size and exact weight.
pub fn all_eseqs(p: u32, sz: usize, wt: u32) -> Vec<ESeq> {
    if sz == 0 {
        return if wt == 0 {
            vec![ESeq { pairs: vec![] }]
        } else {
            vec![]
        };
    }
    let mut out = Vec::new();
    for rows in (1..=p).combinations(sz) {
        let j = JSeq { rows, wt };
        out.extend(enumerate_e(&j));
    }
    out
}
