//! Generating functions over avoidance classes: brute-force enumeration
//! sums, the closed forms and recursions of [`formulas`], and the
//! verification harness comparing the two routes exactly.

pub mod formulas;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::patterns::{characterized_class, av321, ClassKey, PatternSet};
use crate::poly::{PolyError, Var};
use crate::rgf::{Rgf, RgfWords};
use crate::stats;
use crate::MultiPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenfunError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("polynomial still involves {0}; specialize it before reading rows")]
    NotUnivariate(Var),
    #[error("unknown formula id {0:?}")]
    UnknownId(String),
}

/// Statistics on RGF words selectable for brute-force generating functions;
/// listed order maps onto the variables `q, t, x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RgfStat {
    Spread,
    Block,
    Dim,
    Cp,
    Ap,
    Maj,
}

impl RgfStat {
    pub fn of(self, w: &[usize]) -> usize {
        match self {
            RgfStat::Spread => stats::spread(w),
            RgfStat::Block => stats::block(w),
            RgfStat::Dim => stats::dim(w),
            RgfStat::Cp => stats::checkpoint_count(w),
            RgfStat::Ap => stats::apex_count(w),
            RgfStat::Maj => stats::apex_major(w),
        }
    }
}

impl FromStr for RgfStat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "spread" => Ok(RgfStat::Spread),
            "block" => Ok(RgfStat::Block),
            "dim" => Ok(RgfStat::Dim),
            "cp" => Ok(RgfStat::Cp),
            "ap" => Ok(RgfStat::Ap),
            "maj" => Ok(RgfStat::Maj),
            other => Err(format!("unknown partition statistic {other:?}")),
        }
    }
}

/// Permutation statistics, same variable convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermStat {
    Inv,
    Lrm,
    Fix,
    Des,
    Maj,
}

impl PermStat {
    pub fn of(self, p: &[usize]) -> usize {
        match self {
            PermStat::Inv => stats::inversions(p),
            PermStat::Lrm => stats::lrm_indices(p).len(),
            PermStat::Fix => stats::fixed_points(p),
            PermStat::Des => stats::descents(p).len(),
            PermStat::Maj => stats::major_index(p),
        }
    }
}

impl FromStr for PermStat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inv" => Ok(PermStat::Inv),
            "lrm" => Ok(PermStat::Lrm),
            "fix" => Ok(PermStat::Fix),
            "des" => Ok(PermStat::Des),
            "maj" => Ok(PermStat::Maj),
            other => Err(format!("unknown permutation statistic {other:?}")),
        }
    }
}

fn exponents_of<S: Copy, F: Fn(S, &[usize]) -> usize>(
    stats: &[S],
    w: &[usize],
    eval: F,
) -> [u32; 3] {
    let mut exps = [0u32; 3];
    for (slot, &stat) in exps.iter_mut().zip(stats.iter()) {
        *slot = eval(stat, w) as u32;
    }
    exps
}

/// Brute-force joint generating function of up to three RGF statistics over
/// `Π_n(P)`, mapping the listed statistics onto `q, t, x` in order.
pub fn rgf_class_genfun(
    n: usize,
    ps: &PatternSet,
    chosen: &[RgfStat],
) -> Result<MultiPoly, PolyError> {
    assert!(chosen.len() <= 3, "at most three statistics map onto q, t, x");
    let mut acc = MultiPoly::zero();
    let mut words = RgfWords::new(n);
    while let Some(w) = words.next_word() {
        if ps.avoided_by_word(w) {
            acc = acc.add(&MultiPoly::term(
                exponents_of(chosen, w, |s: RgfStat, w| s.of(w)),
                1,
            ))?;
        }
    }
    Ok(acc)
}

/// Data-parallel variant of [`rgf_class_genfun`]; `threads <= 1` falls back
/// to the sequential path. Polynomial addition is associative and
/// commutative, so the reduction order does not affect the canonical result.
pub fn rgf_class_genfun_threads(
    n: usize,
    ps: &PatternSet,
    chosen: &[RgfStat],
    threads: usize,
) -> Result<MultiPoly, PolyError> {
    if threads <= 1 {
        return rgf_class_genfun(n, ps, chosen);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("worker pool");
    pool.install(|| {
        crate::rgf::rgfs(n)
            .par_bridge()
            .filter(|w| ps.avoided_by_word(w.word()))
            .map(|w| {
                Ok(MultiPoly::term(
                    exponents_of(chosen, w.word(), |s: RgfStat, w| s.of(w)),
                    1,
                ))
            })
            .try_reduce(MultiPoly::zero, |a, b| a.add(&b))
    })
}

/// Brute-force joint generating function of permutation statistics over
/// `Av_n(321)`.
pub fn av321_genfun(n: usize, chosen: &[PermStat]) -> Result<MultiPoly, PolyError> {
    assert!(chosen.len() <= 3, "at most three statistics map onto q, t, x");
    let mut acc = MultiPoly::zero();
    for p in av321(n) {
        acc = acc.add(&MultiPoly::term(
            exponents_of(chosen, p.word(), |s: PermStat, w| s.of(w)),
            1,
        ))?;
    }
    Ok(acc)
}

/// `Σ q^spread t^block` over `Π_n(P)` by enumeration.
pub fn sb_bruteforce(n: usize, ps: &PatternSet) -> Result<MultiPoly, PolyError> {
    rgf_class_genfun(n, ps, &[RgfStat::Spread, RgfStat::Block])
}

/// `Σ q^dim` over `Π_n(P)` by enumeration.
pub fn dim_bruteforce(n: usize, ps: &PatternSet) -> Result<MultiPoly, PolyError> {
    rgf_class_genfun(n, ps, &[RgfStat::Dim])
}

/// `Σ q^inv t^LRM x^fix` over `Av_n(321)` by enumeration.
pub fn i_bruteforce(n: usize) -> Result<MultiPoly, PolyError> {
    av321_genfun(n, &[PermStat::Inv, PermStat::Lrm, PermStat::Fix])
}

/// `Σ q^maj t^des x^LRM` over `Av_n(321)` by enumeration.
pub fn m_bruteforce(n: usize) -> Result<MultiPoly, PolyError> {
    av321_genfun(n, &[PermStat::Maj, PermStat::Des, PermStat::Lrm])
}

/// `|Π_n(P)|` by enumeration.
pub fn class_count(n: usize, ps: &PatternSet) -> i64 {
    let mut count = 0i64;
    let mut words = RgfWords::new(n);
    while let Some(w) = words.next_word() {
        if ps.avoided_by_word(w) {
            count += 1;
        }
    }
    count
}

/// Every implemented formula, named by avoidance class (and statistic
/// tuple, for the two permutation polynomials).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[allow(non_camel_case_types)]
pub enum FormulaId {
    Sb12_3,
    Sb1_23,
    Sb13_2,
    Sb1_2_3,
    Sb13_24,
    Sb1_2_3_1_23,
    Sb1_2_3_13_2,
    Sb1_2_3_12_3,
    Sb1_23_13_2,
    Sb1_23_123,
    Sb13_2_12_3,
    Sb12_3_123,
    Sb13_2_123,
    Sb123_13_24,
    Sb123_13_24Literal,
    Sb1_2_3_13_24,
    I,
    M,
}

impl FormulaId {
    pub const ALL: [FormulaId; 18] = [
        FormulaId::Sb12_3,
        FormulaId::Sb1_23,
        FormulaId::Sb13_2,
        FormulaId::Sb1_2_3,
        FormulaId::Sb13_24,
        FormulaId::Sb1_2_3_1_23,
        FormulaId::Sb1_2_3_13_2,
        FormulaId::Sb1_2_3_12_3,
        FormulaId::Sb1_23_13_2,
        FormulaId::Sb1_23_123,
        FormulaId::Sb13_2_12_3,
        FormulaId::Sb12_3_123,
        FormulaId::Sb13_2_123,
        FormulaId::Sb123_13_24,
        FormulaId::Sb123_13_24Literal,
        FormulaId::Sb1_2_3_13_24,
        FormulaId::I,
        FormulaId::M,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FormulaId::Sb12_3 => "SB_12/3",
            FormulaId::Sb1_23 => "SB_1/23",
            FormulaId::Sb13_2 => "SB_13/2",
            FormulaId::Sb1_2_3 => "SB_1/2/3",
            FormulaId::Sb13_24 => "SB_13/24",
            FormulaId::Sb1_2_3_1_23 => "SB_1/2/3_1/23",
            FormulaId::Sb1_2_3_13_2 => "SB_1/2/3_13/2",
            FormulaId::Sb1_2_3_12_3 => "SB_1/2/3_12/3",
            FormulaId::Sb1_23_13_2 => "SB_1/23_13/2",
            FormulaId::Sb1_23_123 => "SB_1/23_123",
            FormulaId::Sb13_2_12_3 => "SB_13/2_12/3",
            FormulaId::Sb12_3_123 => "SB_12/3_123",
            FormulaId::Sb13_2_123 => "SB_13/2_123",
            FormulaId::Sb123_13_24 => "SB_123_13/24",
            FormulaId::Sb123_13_24Literal => "SB_123_13/24_literal",
            FormulaId::Sb1_2_3_13_24 => "SB_1/2/3_13/24",
            FormulaId::I => "I",
            FormulaId::M => "M",
        }
    }

    /// Pattern set whose brute-force sum is the oracle; `None` for the two
    /// permutation polynomials, whose oracle sums over `Av_n(321)`.
    pub fn oracle_patterns(self) -> Option<PatternSet> {
        let s = match self {
            FormulaId::Sb12_3 => "12/3",
            FormulaId::Sb1_23 => "1/23",
            FormulaId::Sb13_2 => "13/2",
            FormulaId::Sb1_2_3 => "1/2/3",
            FormulaId::Sb13_24 => "13/24",
            FormulaId::Sb1_2_3_1_23 => "1/2/3;1/23",
            FormulaId::Sb1_2_3_13_2 => "1/2/3;13/2",
            FormulaId::Sb1_2_3_12_3 => "1/2/3;12/3",
            FormulaId::Sb1_23_13_2 => "1/23;13/2",
            FormulaId::Sb1_23_123 => "1/23;123",
            FormulaId::Sb13_2_12_3 => "13/2;12/3",
            FormulaId::Sb12_3_123 => "12/3;123",
            FormulaId::Sb13_2_123 => "13/2;123",
            FormulaId::Sb123_13_24 | FormulaId::Sb123_13_24Literal => "123;13/24",
            FormulaId::Sb1_2_3_13_24 => "1/2/3;13/24",
            FormulaId::I | FormulaId::M => return None,
        };
        Some(s.parse().expect("oracle pattern strings are well formed"))
    }

    /// The literal Motzkin recursion is shipped to document its mismatch
    /// with the oracle; every other formula is expected to agree.
    pub fn expected_to_match(self) -> bool {
        self != FormulaId::Sb123_13_24Literal
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormulaId {
    type Err = GenfunError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        FormulaId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| GenfunError::UnknownId(s.to_string()))
    }
}

impl Serialize for FormulaId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// All values `formula(id, 0..=n_max)`, computed from the closed form or
/// recursion only.
pub fn formula_sequence(id: FormulaId, n_max: usize) -> Result<Vec<MultiPoly>, PolyError> {
    match id {
        FormulaId::Sb13_24 => formulas::sb_13_24_seq(n_max),
        FormulaId::Sb13_2_123 => formulas::sb_fibonacci_seq(n_max),
        FormulaId::Sb123_13_24 => formulas::sb_motzkin_seq(n_max, false),
        FormulaId::Sb123_13_24Literal => formulas::sb_motzkin_seq(n_max, true),
        FormulaId::I => formulas::i_seq(n_max),
        FormulaId::M => formulas::m_seq(n_max),
        _ => (0..=n_max).map(|n| formula(id, n)).collect(),
    }
}

/// One formula value. The `1/2/3` closed form starts at `n = 2`; below that
/// it falls back to the enumeration values.
pub fn formula(id: FormulaId, n: usize) -> Result<MultiPoly, PolyError> {
    match id {
        FormulaId::Sb12_3 | FormulaId::Sb1_23 => formulas::sb_12_3(n),
        FormulaId::Sb13_2 => formulas::sb_13_2(n),
        FormulaId::Sb1_2_3 => {
            if n < 2 {
                sb_bruteforce(n, &id.oracle_patterns().unwrap())
            } else {
                formulas::sb_1_2_3(n)
            }
        }
        FormulaId::Sb1_2_3_1_23 | FormulaId::Sb1_2_3_12_3 => formulas::pairs::three_shapes(n),
        FormulaId::Sb1_2_3_13_2 => formulas::pairs::sb_1_2_3_and_13_2(n),
        FormulaId::Sb1_23_13_2 => formulas::pairs::sb_1_23_and_13_2(n),
        FormulaId::Sb1_23_123 | FormulaId::Sb12_3_123 => formulas::pairs::q_analog_tail(n),
        FormulaId::Sb13_2_12_3 => formulas::pairs::sb_13_2_and_12_3(n),
        FormulaId::Sb1_2_3_13_24 => formulas::sb_1_2_3_and_13_24(n),
        FormulaId::Sb13_24
        | FormulaId::Sb13_2_123
        | FormulaId::Sb123_13_24
        | FormulaId::Sb123_13_24Literal
        | FormulaId::I
        | FormulaId::M => Ok(formula_sequence(id, n)?.pop().expect("sequence reaches n")),
    }
}

/// The enumeration oracle matching a formula id at one size.
pub fn oracle(id: FormulaId, n: usize) -> Result<MultiPoly, PolyError> {
    match id {
        FormulaId::I => i_bruteforce(n),
        FormulaId::M => m_bruteforce(n),
        _ => sb_bruteforce(n, &id.oracle_patterns().unwrap()),
    }
}

/// One row of a verification report.
#[derive(Debug, Clone)]
pub struct VerifyRow {
    pub n: usize,
    pub formula: MultiPoly,
    pub oracle: MultiPoly,
    pub equal: bool,
    /// `formula - oracle`; zero when they agree.
    pub difference: MultiPoly,
}

impl Serialize for VerifyRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut row = serializer.serialize_struct("VerifyRow", 5)?;
        row.serialize_field("n", &self.n)?;
        row.serialize_field("formula_terms", &self.formula.term_records())?;
        row.serialize_field("oracle_terms", &self.oracle.term_records())?;
        row.serialize_field("equal", &self.equal)?;
        row.serialize_field("difference_terms", &self.difference.term_records())?;
        row.end()
    }
}

/// Formula-versus-oracle comparison for one id over `0..=n_max`.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub id: FormulaId,
    /// False only for the literal Motzkin recursion, which documents a
    /// known mismatch.
    pub expected_to_match: bool,
    pub all_equal: bool,
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    /// A report passes when agreement matches expectation.
    pub fn passed(&self) -> bool {
        self.all_equal == self.expected_to_match
    }
}

/// Compare the formula route against the enumeration oracle for every
/// `n <= n_max`. Disagreements are recorded, not raised.
pub fn verify(id: FormulaId, n_max: usize) -> Result<VerifyReport, PolyError> {
    let formulas = formula_sequence(id, n_max)?;
    let mut rows = Vec::with_capacity(n_max + 1);
    for (n, f) in formulas.into_iter().enumerate() {
        let o = oracle(id, n)?;
        let difference = f.sub(&o)?;
        rows.push(VerifyRow {
            n,
            equal: difference.is_zero(),
            formula: f,
            oracle: o,
            difference,
        });
    }
    Ok(VerifyReport {
        id,
        expected_to_match: id.expected_to_match(),
        all_equal: rows.iter().all(|r| r.equal),
        rows,
    })
}

/// Exhaustive spread-maximizer search over `R_n(123)` and over all of
/// `Π_n`.
#[derive(Debug, Clone, Serialize)]
pub struct MaxSpreadReport {
    pub n: usize,
    /// Maximum spread over `R_n(123)`.
    pub max_spread: usize,
    /// `⌊n/2⌋ ⌈n/2⌉`.
    pub expected_max: usize,
    pub max_matches_expected: bool,
    pub maximizer_count: usize,
    /// `⌈n/2⌉`.
    pub expected_block: usize,
    pub all_maximizers_have_expected_block: bool,
    /// Every maximizer is `1 2 ... ⌈n/2⌉` followed by a permutation of
    /// `{1, ..., ⌊n/2⌋}`.
    pub all_maximizers_have_prefix_form: bool,
    pub sample_maximizers: Vec<String>,
    /// Maximum spread over all of `Π_n`, with its maximizer census.
    pub pi_max_spread: usize,
    pub pi_maximizer_count: usize,
    /// For odd `n = 2k+1`, `k >= 1`: does every word `1 2 ... k k π` with
    /// `π` a permutation of `[k]` attain the maximum? `None` for even `n`
    /// and `n = 1`.
    pub pi_second_family_all_maximize: Option<bool>,
    /// Whether the `Π_n` maximizers are exactly the prefix-form words plus
    /// (for odd `n`) the `1 2 ... k k π` family. Exhaustive search says no
    /// from `n = 5` on: the thrice-used letter of an odd-length maximizer
    /// can be any `j <= k`, e.g. 12112 at `n = 5`.
    pub pi_maximizers_are_claimed_families: bool,
}

fn is_prefix_form(w: &[usize]) -> bool {
    let n = w.len();
    let high = n.div_ceil(2);
    if (1..=high).any(|i| w[i - 1] != i) {
        return false;
    }
    is_permutation_of_range(&w[high..], n / 2)
}

fn is_second_family(w: &[usize]) -> bool {
    let n = w.len();
    if n.is_multiple_of(2) || n < 3 {
        return false;
    }
    let k = n / 2;
    if (1..=k).any(|i| w[i - 1] != i) || w[k] != k {
        return false;
    }
    is_permutation_of_range(&w[k + 1..], k)
}

fn is_permutation_of_range(tail: &[usize], k: usize) -> bool {
    if tail.len() != k {
        return false;
    }
    let mut seen = vec![false; k + 1];
    for &a in tail {
        if a == 0 || a > k || seen[a] {
            return false;
        }
        seen[a] = true;
    }
    true
}

pub fn max_spread_report(n: usize) -> MaxSpreadReport {
    assert!(n >= 1);
    let class = characterized_class(n, ClassKey::P123);
    let max_spread = class.iter().map(Rgf::spread).max().unwrap();
    let maximizers: Vec<&Rgf> = class.iter().filter(|w| w.spread() == max_spread).collect();
    let expected_max = (n / 2) * n.div_ceil(2);
    let expected_block = n.div_ceil(2);

    let mut pi_max = 0usize;
    let mut pi_maximizers: Vec<Vec<usize>> = Vec::new();
    let mut words = RgfWords::new(n);
    while let Some(w) = words.next_word() {
        let s = stats::spread(w);
        if s > pi_max {
            pi_max = s;
            pi_maximizers.clear();
        }
        if s == pi_max {
            pi_maximizers.push(w.to_vec());
        }
    }
    let pi_families_ok = pi_maximizers
        .iter()
        .all(|w| is_prefix_form(w) || is_second_family(w))
        && pi_max == expected_max;
    let second_family_included = if n % 2 == 1 && n >= 3 {
        let k = n / 2;
        let mut all = true;
        let mut tail: Vec<usize> = (1..=k).collect();
        loop {
            let mut w: Vec<usize> = (1..=k).collect();
            w.push(k);
            w.extend_from_slice(&tail);
            if stats::spread(&w) != pi_max {
                all = false;
                break;
            }
            if !crate::perm::next_permutation(&mut tail) {
                break;
            }
        }
        Some(all)
    } else {
        None
    };

    MaxSpreadReport {
        n,
        max_spread,
        expected_max,
        max_matches_expected: max_spread == expected_max,
        maximizer_count: maximizers.len(),
        expected_block,
        all_maximizers_have_expected_block: maximizers
            .iter()
            .all(|w| w.block() == expected_block),
        all_maximizers_have_prefix_form: maximizers.iter().all(|w| is_prefix_form(w.word())),
        sample_maximizers: maximizers.iter().take(5).map(|w| w.to_string()).collect(),
        pi_max_spread: pi_max,
        pi_maximizer_count: pi_maximizers.len(),
        pi_second_family_all_maximize: second_family_included,
        pi_maximizers_are_claimed_families: pi_families_ok,
    }
}

/// Substitution used when flattening polynomials into integer sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Assign {
    Int(i64),
    ToVar(Var),
}

/// `|Π_n(P)|` for `n` in `from..=to`.
pub fn class_counts(ps: &PatternSet, from: usize, to: usize) -> Vec<i64> {
    (from..=to).map(|n| class_count(n, ps)).collect()
}

/// `|Av_n(321)|` for `n` in `from..=to`.
pub fn av321_counts(from: usize, to: usize) -> Vec<i64> {
    (from..=to).map(|n| av321(n).len() as i64).collect()
}

/// Integer specializations `formula(id, n)(q, t, x)` for `n` in
/// `from..=to`.
pub fn formula_values(
    id: FormulaId,
    q: i64,
    t: i64,
    x: i64,
    from: usize,
    to: usize,
) -> Result<Vec<i64>, GenfunError> {
    let seq = formula_sequence(id, to)?;
    seq[from..=to]
        .iter()
        .map(|p| p.specialize_int(&q, &t, &x).map_err(GenfunError::from))
        .collect()
}

fn substituted_formula(
    id: FormulaId,
    assigns: &[(Var, Assign)],
    n: usize,
) -> Result<MultiPoly, GenfunError> {
    let mut poly = formula(id, n)?;
    for &(var, assign) in assigns {
        let replacement = match assign {
            Assign::Int(v) => MultiPoly::constant(v),
            Assign::ToVar(u) => MultiPoly::var(u),
        };
        poly = poly.substitute(var, &replacement)?;
    }
    Ok(poly)
}

/// All coefficients of `formula(id, n)` after the given substitutions, in
/// canonical term order. Works for any number of surviving variables.
pub fn coefficient_list(
    id: FormulaId,
    assigns: &[(Var, Assign)],
    n: usize,
) -> Result<Vec<i64>, GenfunError> {
    Ok(substituted_formula(id, assigns, n)?
        .terms()
        .map(|(_, c)| *c)
        .collect())
}

/// Coefficient row of `formula(id, n)` after the given substitutions: the
/// dense coefficients of the surviving variable `by`, from the lowest
/// present exponent to the highest, optionally reversed.
pub fn coefficient_row(
    id: FormulaId,
    assigns: &[(Var, Assign)],
    by: Var,
    desc: bool,
    n: usize,
) -> Result<Vec<i64>, GenfunError> {
    let poly = substituted_formula(id, assigns, n)?;
    let (_, mut row) = poly.coefficients_in(by).ok_or_else(|| {
        let leftover = Var::ALL
            .iter()
            .copied()
            .find(|&v| v != by && poly.degree_in(v) > 0)
            .unwrap_or(by);
        GenfunError::NotUnivariate(leftover)
    })?;
    if desc {
        row.reverse();
    }
    Ok(row)
}

/// Rows for `n` in `from..=to`, flattened into one sequence (a coefficient
/// triangle read row by row).
pub fn coefficient_rows_flat(
    id: FormulaId,
    assigns: &[(Var, Assign)],
    by: Var,
    desc: bool,
    from: usize,
    to: usize,
) -> Result<Vec<i64>, GenfunError> {
    let mut out = Vec::new();
    for n in from..=to {
        out.extend(coefficient_row(id, assigns, by, desc, n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, u32, u32, u32)]) -> MultiPoly {
        MultiPoly::from_terms(terms.iter().map(|&(c, q, t, x)| ([q, t, x], c))).unwrap()
    }

    fn pat(s: &str) -> PatternSet {
        s.parse().unwrap()
    }

    #[test]
    fn sb_bruteforce_small_values() {
        // noncrossing at n = 3: all five partitions of [3]
        assert_eq!(
            sb_bruteforce(3, &pat("13/24")).unwrap(),
            poly(&[(1, 0, 3, 0), (2, 1, 2, 0), (1, 2, 2, 0), (1, 2, 1, 0)])
        );
        assert_eq!(sb_bruteforce(0, &pat("13/24")).unwrap(), MultiPoly::one());
        assert_eq!(
            sb_bruteforce(2, &pat("12/3")).unwrap(),
            poly(&[(1, 0, 2, 0), (1, 1, 1, 0)])
        );
    }

    #[test]
    fn dim_bruteforce_small_values() {
        assert_eq!(
            dim_bruteforce(3, &pat("13/24")).unwrap(),
            poly(&[(4, 3, 0, 0), (1, 4, 0, 0)])
        );
        assert_eq!(dim_bruteforce(0, &PatternSet::empty()).unwrap(), MultiPoly::one());
        assert_eq!(
            dim_bruteforce(1, &pat("13/24")).unwrap(),
            poly(&[(1, 1, 0, 0)])
        );
    }

    #[test]
    fn dim_is_sb_with_t_replaced_by_q() {
        for n in 0..=6 {
            let sb = sb_bruteforce(n, &pat("13/24")).unwrap();
            let dim = dim_bruteforce(n, &pat("13/24")).unwrap();
            assert_eq!(sb.substitute(Var::Q, &MultiPoly::var(Var::Q)).unwrap(), sb);
            assert_eq!(
                sb.substitute(Var::T, &MultiPoly::var(Var::Q)).unwrap(),
                dim,
                "n = {n}"
            );
        }
    }

    #[test]
    fn i_and_m_bruteforce_small_values() {
        assert_eq!(i_bruteforce(1).unwrap(), poly(&[(1, 0, 1, 1)]));
        assert_eq!(
            i_bruteforce(2).unwrap(),
            poly(&[(1, 0, 2, 2), (1, 1, 1, 0)])
        );
        assert_eq!(m_bruteforce(1).unwrap(), poly(&[(1, 0, 0, 1)]));
        assert_eq!(
            m_bruteforce(2).unwrap(),
            poly(&[(1, 0, 0, 2), (1, 1, 1, 1)])
        );
        assert_eq!(i_bruteforce(4).unwrap().coefficient_sum().unwrap(), 14);
        assert_eq!(m_bruteforce(4).unwrap().coefficient_sum().unwrap(), 14);
    }

    #[test]
    fn formula_ids_round_trip_and_parse() {
        for id in FormulaId::ALL {
            assert_eq!(id.as_str().parse::<FormulaId>().unwrap(), id);
        }
        assert!("SB_99".parse::<FormulaId>().is_err());
    }

    #[test]
    fn verify_small_all_ids() {
        for id in FormulaId::ALL {
            let report = verify(id, 5).unwrap();
            assert!(report.passed(), "{id} failed verification at n <= 5");
            if id == FormulaId::Sb123_13_24Literal {
                assert!(!report.all_equal);
                let bad = &report.rows[2];
                assert_eq!(bad.n, 2);
                // difference is exactly q - qt
                assert_eq!(bad.difference, poly(&[(1, 1, 0, 0), (-1, 1, 1, 0)]));
            } else {
                assert!(report.all_equal, "{id}");
            }
        }
    }

    #[test]
    fn parallel_oracle_agrees_with_sequential() {
        let ps = pat("13/24");
        let chosen = [RgfStat::Spread, RgfStat::Block];
        let seq = rgf_class_genfun(7, &ps, &chosen).unwrap();
        let par = rgf_class_genfun_threads(7, &ps, &chosen, 3).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn max_spread_small() {
        let r = max_spread_report(2);
        assert_eq!(r.max_spread, 1);
        assert!(r.max_matches_expected);
        assert_eq!(r.sample_maximizers, vec!["11".to_string()]);

        let r = max_spread_report(6);
        assert_eq!(r.max_spread, 9);
        assert!(r.max_matches_expected);
        assert!(r.all_maximizers_have_expected_block);
        assert!(r.all_maximizers_have_prefix_form);
        assert!(r.pi_maximizers_are_claimed_families);

        let r = max_spread_report(3);
        assert!(r.pi_maximizers_are_claimed_families);
        assert_eq!(r.pi_second_family_all_maximize, Some(true));

        // From n = 5 on, odd-length maximizers over the full Bell class
        // repeat any letter j <= k three times, not just k: 12112 has
        // spread 6. The two claimed shapes are included but not exhaustive.
        let r = max_spread_report(5);
        assert_eq!(r.pi_max_spread, 6);
        assert_eq!(r.pi_maximizer_count, 6);
        assert_eq!(r.pi_second_family_all_maximize, Some(true));
        assert!(!r.pi_maximizers_are_claimed_families);

        let r = max_spread_report(7);
        assert_eq!(r.max_spread, 12);
        assert!(r.max_matches_expected && r.all_maximizers_have_prefix_form);
        assert_eq!(r.pi_maximizer_count, 24);
        assert_eq!(r.pi_second_family_all_maximize, Some(true));
        assert!(!r.pi_maximizers_are_claimed_families);
    }

    #[test]
    fn witness_word_for_n11() {
        let w: Rgf = "12345653142".parse().unwrap();
        assert_eq!(w.spread(), 30);
        assert_eq!(w.block(), 6);
        assert!(is_prefix_form(w.word()));
    }

    #[test]
    fn sequences_and_rows() {
        assert_eq!(
            class_counts(&pat("13/24"), 0, 6),
            vec![1, 1, 2, 5, 14, 42, 132]
        );
        assert_eq!(av321_counts(0, 6), vec![1, 1, 2, 5, 14, 42, 132]);
        assert_eq!(
            formula_values(FormulaId::I, 1, 1, 1, 0, 6).unwrap(),
            vec![1, 1, 2, 5, 14, 42, 132]
        );
        // Motzkin polynomial rows by descending t-degree
        let rows = coefficient_rows_flat(
            FormulaId::Sb123_13_24,
            &[(Var::Q, Assign::Int(1))],
            Var::T,
            true,
            0,
            6,
        )
        .unwrap();
        assert_eq!(
            rows,
            vec![1, 1, 1, 1, 1, 3, 1, 6, 2, 1, 10, 10, 1, 15, 30, 5]
        );
        // leaving q in place is an error when reading rows by t
        assert!(matches!(
            coefficient_rows_flat(FormulaId::Sb13_24, &[], Var::T, false, 3, 3),
            Err(GenfunError::NotUnivariate(Var::Q))
        ));
    }
}
