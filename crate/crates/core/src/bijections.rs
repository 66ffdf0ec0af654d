//! Statistic-preserving bijections.
//!
//! Three maps live here:
//!
//! * `tau`, a spread- and block-preserving bijection from `R_n(1/23)` to
//!   `R_n(12/3)`;
//! * `T`, from noncrossing RGF words to ballot pairs (firsts/lasts flags),
//!   with an iterative reconstruction as its inverse;
//! * the folklore correspondence between ballot pairs and 321-avoiding
//!   permutations (LRM positions paired with LRM values).
//!
//! Composing the last two identifies noncrossing partitions of `[n]` with
//! `Av_n(321)` so that spread maps to inversions, block to the number of
//! left-to-right maxima, checkpoints to fixed points, and apices to
//! descents.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::patterns::{is_noncrossing, perm_contains};
use crate::perm::Permutation;
use crate::rgf::Rgf;
use crate::stats::pos_val;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("word is not in R_n(1/23)")]
    NotSingleOneInsertion,
    #[error("word is not in R_n(12/3)")]
    NotRunThenConstant,
    #[error("word has a 1212 subword (crossing partition)")]
    Crossing,
    #[error("permutation contains the pattern 321")]
    Contains321,
    #[error("invalid ballot pair: {0}")]
    BadBallotPair(String),
    #[error("cannot parse ballot pair from {0:?}")]
    Parse(String),
}

/// A pair of equal-length binary vectors with equal weight whose `p` prefix
/// counts strictly dominate the shifted `v` prefix counts:
/// `#1s(p_1..p_i) > #1s(v_1..v_{i-1})` for every `1 <= i <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BallotPair {
    p: Vec<bool>,
    v: Vec<bool>,
}

impl BallotPair {
    pub fn new(p: Vec<bool>, v: Vec<bool>) -> Result<Self, BijectionError> {
        if p.len() != v.len() {
            return Err(BijectionError::BadBallotPair(format!(
                "length mismatch: {} vs {}",
                p.len(),
                v.len()
            )));
        }
        let weight = |bits: &[bool]| bits.iter().filter(|&&b| b).count();
        if weight(&p) != weight(&v) {
            return Err(BijectionError::BadBallotPair(
                "weights differ".to_string(),
            ));
        }
        let mut ones_p = 0usize;
        let mut ones_v_prev = 0usize;
        for i in 0..p.len() {
            if p[i] {
                ones_p += 1;
            }
            if ones_p <= ones_v_prev {
                return Err(BijectionError::BadBallotPair(format!(
                    "prefix dominance fails at index {}",
                    i + 1
                )));
            }
            if v[i] {
                ones_v_prev += 1;
            }
        }
        Ok(BallotPair { p, v })
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn pos(&self) -> &[bool] {
        &self.p
    }

    pub fn val(&self) -> &[bool] {
        &self.v
    }
}

impl fmt::Display for BallotPair {
    /// Two bit strings, e.g. `110,011`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.p {
            f.write_str(if b { "1" } else { "0" })?;
        }
        f.write_str(",")?;
        for &b in &self.v {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BallotPair {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .trim()
            .split_once(',')
            .ok_or_else(|| BijectionError::Parse(s.to_string()))?;
        let bits = |part: &str| -> Result<Vec<bool>, BijectionError> {
            part.trim()
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(BijectionError::Parse(s.to_string())),
                })
                .collect()
        };
        BallotPair::new(bits(a)?, bits(b)?)
    }
}

/// All valid ballot pairs of length `n`; there are Catalan(n) of them.
pub fn ballot_pairs(n: usize) -> Vec<BallotPair> {
    let mut out = Vec::new();
    let mut p = vec![false; n];
    let mut v = vec![false; n];
    fn extend(
        i: usize,
        n: usize,
        ones_p: usize,
        ones_v: usize,
        p: &mut Vec<bool>,
        v: &mut Vec<bool>,
        out: &mut Vec<BallotPair>,
    ) {
        if i == n {
            if ones_p == ones_v {
                out.push(BallotPair {
                    p: p.clone(),
                    v: v.clone(),
                });
            }
            return;
        }
        for pi in [false, true] {
            let ones_p2 = ones_p + pi as usize;
            // dominance at index i+1 compares against v_1..v_i
            if ones_p2 <= ones_v {
                continue;
            }
            for vi in [false, true] {
                let ones_v2 = ones_v + vi as usize;
                // the surplus must still be closable by the remaining slots
                if ones_v2 > ones_p2 || ones_p2 - ones_v2 > n - i - 1 {
                    continue;
                }
                p[i] = pi;
                v[i] = vi;
                extend(i + 1, n, ones_p2, ones_v2, p, v, out);
            }
        }
        p[i] = false;
        v[i] = false;
    }
    extend(0, n, 0, 0, &mut p, &mut v, &mut out);
    out
}

/// The bijection `R_n(1/23) -> R_n(12/3)`: a word obtained by inserting an
/// extra 1 at index `l+k` into `1^l 2 3 ... m` maps to `1 2 ... m` followed
/// by `n - m` copies of `m - k + 1`. Preserves spread and block.
pub fn tau(w: &Rgf) -> Result<Rgf, BijectionError> {
    let n = w.len();
    if n == 0 || w.word() == (1..=n).collect::<Vec<_>>().as_slice() {
        return Ok(w.clone());
    }
    let (_, k, m) = parse_single_one_insertion(w.word())?;
    let mut word: Vec<usize> = (1..=m).collect();
    word.extend(std::iter::repeat_n(m - k + 1, n - m));
    Ok(Rgf::new(word).expect("tau image is a valid RGF"))
}

/// Inverse of [`tau`]: rebuild the insertion word from the run-then-constant
/// shape.
pub fn tau_inverse(u: &Rgf) -> Result<Rgf, BijectionError> {
    let word = u.word();
    let n = word.len();
    if n == 0 || word == (1..=n).collect::<Vec<_>>().as_slice() {
        return Ok(u.clone());
    }
    // initial strictly increasing run 1 2 ... m, then a constant c <= m
    let mut m = 1usize;
    while m < n && word[m] == m + 1 {
        m += 1;
    }
    let c = word[m];
    if c > m || word[m..].iter().any(|&a| a != c) {
        return Err(BijectionError::NotRunThenConstant);
    }
    let k = m - c + 1;
    let l = n - m;
    let mut out = Vec::with_capacity(n);
    out.extend(std::iter::repeat_n(1, l));
    if k == 1 {
        out.push(1);
        out.extend(2..=m);
    } else {
        out.extend(2..=k);
        out.push(1);
        out.extend(k + 1..=m);
    }
    Ok(Rgf::new(out).expect("tau preimage is a valid RGF"))
}

/// Decompose a word of `R_n(1/23)` as `(l, k, m)`: an extra 1 inserted at
/// index `l + k` into the base word `1^l 2 3 ... m`. When every 1 sits in
/// the leading run the insertion index is taken inside the run, so `k = 1`.
fn parse_single_one_insertion(w: &[usize]) -> Result<(usize, usize, usize), BijectionError> {
    let n = w.len();
    let ones: Vec<usize> = (0..n).filter(|&i| w[i] == 1).collect();
    let run = (0..n).take_while(|&i| w[i] == 1).count();
    let (l, k) = if ones.len() == run {
        // all 1s lead: the inserted 1 is the last of the run
        (run - 1, 1)
    } else if ones.len() == run + 1 {
        let late = ones[run]; // 0-based index of the lone late 1
        (run, late + 1 - run)
    } else {
        return Err(BijectionError::NotSingleOneInsertion);
    };
    let m = n - l;
    // validate against the reconstructed word
    let mut expect = Vec::with_capacity(n);
    expect.extend(std::iter::repeat_n(1, l));
    if k == 1 {
        expect.push(1);
        expect.extend(2..=m);
    } else {
        expect.extend(2..=k);
        expect.push(1);
        expect.extend(k + 1..=m);
    }
    if expect != w {
        return Err(BijectionError::NotSingleOneInsertion);
    }
    Ok((l, k, m))
}

/// The map `T`: mark first and last occurrences of each letter of a
/// noncrossing word. Rejects crossing input.
pub fn to_ballot(w: &Rgf) -> Result<BallotPair, BijectionError> {
    let word = w.word();
    if !is_noncrossing(word) {
        return Err(BijectionError::Crossing);
    }
    let n = word.len();
    let k = w.max_letter();
    let mut first = vec![0usize; k + 1];
    let mut last = vec![0usize; k + 1];
    for (i, &a) in word.iter().enumerate() {
        if first[a] == 0 {
            first[a] = i + 1;
        }
        last[a] = i + 1;
    }
    let mut p = vec![false; n];
    let mut v = vec![false; n];
    for letter in 1..=k {
        p[first[letter] - 1] = true;
        v[last[letter] - 1] = true;
    }
    Ok(BallotPair::new(p, v).expect("firsts/lasts of a noncrossing word form a ballot pair"))
}

/// Reconstruct the unique noncrossing word with the given firsts/lasts
/// flags. Walks the pair once, keeping the set of letters whose first
/// occurrence is placed but whose last is still open; the ballot property
/// keeps that set nonempty whenever it is consulted.
pub fn from_ballot(b: &BallotPair) -> Rgf {
    let n = b.len();
    let mut word: Vec<usize> = Vec::with_capacity(n);
    let mut open: Vec<usize> = Vec::new(); // ascending; max is the last entry
    let mut max = 0usize;
    for i in 0..n {
        match (b.p[i], b.v[i]) {
            (true, true) => {
                // simultaneously a first and a last: the open set is unchanged
                max += 1;
                word.push(max);
            }
            (true, false) => {
                max += 1;
                word.push(max);
                open.push(max);
            }
            (false, true) => {
                let letter = open.pop().expect("ballot dominance keeps a letter open");
                word.push(letter);
            }
            (false, false) => {
                let letter = *open.last().expect("ballot dominance keeps a letter open");
                word.push(letter);
            }
        }
    }
    Rgf::new(word).expect("reconstruction yields a valid RGF")
}

/// From a ballot pair to the 321-avoiding permutation whose LRM positions
/// and values it records: LRM values are written at LRM positions in
/// increasing order, and the remaining values fill the remaining positions
/// in increasing order.
pub fn ballot_to_perm(b: &BallotPair) -> Permutation {
    let n = b.len();
    let positions: Vec<usize> = (0..n).filter(|&i| b.p[i]).collect();
    let values: Vec<usize> = (1..=n).filter(|&v| b.v[v - 1]).collect();
    let mut word = vec![0usize; n];
    for (&i, &v) in positions.iter().zip(values.iter()) {
        word[i] = v;
    }
    let mut rest = (1..=n).filter(|&v| !b.v[v - 1]);
    for slot in word.iter_mut() {
        if *slot == 0 {
            *slot = rest.next().expect("equal weights leave matching leftovers");
        }
    }
    Permutation::new(word).expect("ballot reconstruction is a permutation")
}

/// The `pos`/`val` pair of a 321-avoiding permutation. Rejects input
/// containing 321, where the pair would break the ballot condition.
pub fn perm_to_ballot(p: &Permutation) -> Result<BallotPair, BijectionError> {
    let pattern = Permutation::new(vec![3, 2, 1]).unwrap();
    if perm_contains(p, &pattern) {
        return Err(BijectionError::Contains321);
    }
    let (pos, val) = pos_val(p.word());
    Ok(BallotPair::new(pos, val).expect("pos/val of a 321-avoider form a ballot pair"))
}

/// Noncrossing word to 321-avoiding permutation: `ballot_to_perm ∘ T`.
pub fn partition_to_perm(w: &Rgf) -> Result<Permutation, BijectionError> {
    Ok(ballot_to_perm(&to_ballot(w)?))
}

/// Inverse composite: 321-avoiding permutation back to the noncrossing word.
pub fn perm_to_partition(p: &Permutation) -> Result<Rgf, BijectionError> {
    Ok(from_ballot(&perm_to_ballot(p)?))
}
