//! Pattern containment and avoidance.
//!
//! A partition `σ` of `[k]` occurs in `π` of `[n]` when some subset
//! `S ⊆ [n]` has `st(π ∩ S) = σ`. Containment is decided on the RGF
//! encodings: restricting to `S` and standardizing corresponds to canonical
//! relabeling of the subword, so the generic test enumerates `k`-subsets and
//! compares relabeled subwords. This subset search is the correctness
//! oracle; the characterized generators below provide the fast path for the
//! six classes with known descriptions.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::partition::SetPartition;
use crate::perm::Permutation;
use crate::rgf::{Rgf, RgfWords};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("unknown class key {0:?}")]
    UnknownKey(String),
    #[error("cannot parse pattern set from {0:?}: {1}")]
    Parse(String, String),
}

/// A set of partition patterns to avoid. May be empty (avoid nothing).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PatternSet {
    patterns: Vec<SetPartition>,
    words: Vec<Vec<usize>>,
}

impl PatternSet {
    pub fn new(patterns: Vec<SetPartition>) -> Self {
        let words = patterns.iter().map(|p| p.to_rgf().word().to_vec()).collect();
        PatternSet { patterns, words }
    }

    pub fn empty() -> Self {
        PatternSet::default()
    }

    pub fn patterns(&self) -> &[SetPartition] {
        &self.patterns
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// True when the RGF word `w` avoids every pattern in the set.
    pub fn avoided_by_word(&self, w: &[usize]) -> bool {
        self.words.iter().all(|v| !word_contains(w, v))
    }

    pub fn avoided_by(&self, p: &SetPartition) -> bool {
        self.avoided_by_word(p.to_rgf().word())
    }
}

impl FromStr for PatternSet {
    type Err = PatternError;

    /// Parse the `;`-separated grammar, e.g. `"13/2;123"`. An empty string
    /// is the empty pattern set.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(PatternSet::empty());
        }
        let patterns: Result<Vec<SetPartition>, PatternError> = s
            .split(';')
            .map(|tok| {
                tok.trim()
                    .parse::<SetPartition>()
                    .map_err(|e| PatternError::Parse(s.to_string(), e.to_string()))
            })
            .collect();
        Ok(PatternSet::new(patterns?))
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Does `p` contain `sigma` as a pattern?
pub fn partition_contains(p: &SetPartition, sigma: &SetPartition) -> bool {
    word_contains(p.to_rgf().word(), sigma.to_rgf().word())
}

/// Does `p` avoid every pattern of `ps`?
pub fn avoids_all(p: &SetPartition, ps: &PatternSet) -> bool {
    ps.avoided_by(p)
}

/// Subset-enumeration containment on RGF words: is there a subsequence of
/// `w` whose canonical relabeling equals the pattern word `v`?
pub fn word_contains(w: &[usize], v: &[usize]) -> bool {
    let n = w.len();
    let k = v.len();
    if k > n {
        return false;
    }
    if k == 0 {
        return true;
    }
    let max_letter = w.iter().copied().max().unwrap_or(0);
    let mut map = vec![0usize; max_letter + 1];
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        let mut next = 0usize;
        let mut ok = true;
        for j in 0..k {
            let a = w[c[j]];
            let label = if map[a] == 0 {
                next += 1;
                map[a] = next;
                next
            } else {
                map[a]
            };
            if label != v[j] {
                ok = false;
                break;
            }
        }
        for &idx in c.iter() {
            map[w[idx]] = 0;
        }
        if ok {
            return true;
        }
        // next k-combination in lexicographic order
        let mut j = k;
        loop {
            if j == 0 {
                return false;
            }
            j -= 1;
            if c[j] < n - k + j {
                break;
            }
        }
        c[j] += 1;
        for l in j + 1..k {
            c[l] = c[l - 1] + 1;
        }
    }
}

/// Visit the RGF word of every member of `Π_n(P)` in lexicographic order.
/// This is the allocation-free engine for brute-force generating functions.
pub fn for_each_avoider(n: usize, ps: &PatternSet, mut f: impl FnMut(&[usize])) {
    let mut words = RgfWords::new(n);
    while let Some(w) = words.next_word() {
        if ps.avoided_by_word(w) {
            f(w);
        }
    }
}

/// The avoidance class `Π_n(P)`, generically filtered from all of `Π_n`.
pub fn avoidance_class(n: usize, ps: &PatternSet) -> impl Iterator<Item = SetPartition> {
    let ps = ps.clone();
    let mut words = RgfWords::new(n);
    std::iter::from_fn(move || loop {
        let w = words.next_word()?;
        if ps.avoided_by_word(w) {
            return Some(Rgf::new(w.to_vec()).unwrap().to_partition());
        }
    })
}

/// The six single patterns whose avoidance classes have direct RGF
/// characterizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[allow(non_camel_case_types)]
pub enum ClassKey {
    /// `1/2/3`: words using only the letters 1 and 2
    P1_2_3,
    /// `1/23`: a single 1 inserted into a word `1^l 2 3 ... m`
    P1_23,
    /// `13/2`: weakly increasing words
    P13_2,
    /// `12/3`: an initial run `1 2 ... m` followed by a constant `<= m`
    P12_3,
    /// `123`: no letter used more than twice
    P123,
    /// `13/24`: no `1212` subword pattern (noncrossing)
    P13_24,
}

impl ClassKey {
    pub const ALL: [ClassKey; 6] = [
        ClassKey::P1_2_3,
        ClassKey::P1_23,
        ClassKey::P13_2,
        ClassKey::P12_3,
        ClassKey::P123,
        ClassKey::P13_24,
    ];

    /// The pattern this key avoids.
    pub fn pattern(self) -> SetPartition {
        self.as_str().parse().unwrap()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClassKey::P1_2_3 => "1/2/3",
            ClassKey::P1_23 => "1/23",
            ClassKey::P13_2 => "13/2",
            ClassKey::P12_3 => "12/3",
            ClassKey::P123 => "123",
            ClassKey::P13_24 => "13/24",
        }
    }
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassKey {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassKey::ALL
            .iter()
            .copied()
            .find(|k| k.as_str() == s.trim())
            .ok_or_else(|| PatternError::UnknownKey(s.to_string()))
    }
}

/// Generate `R_n(key)` directly from its characterization, without generic
/// filtering. Words come out in no particular order; as a set the result
/// equals `avoidance_class(n, {key})` mapped through `to_rgf`.
pub fn characterized_class(n: usize, key: ClassKey) -> Vec<Rgf> {
    if n == 0 {
        return vec![Rgf::empty()];
    }
    let mut out = Vec::new();
    match key {
        ClassKey::P1_2_3 => {
            // 1 followed by any word over {1, 2}
            for mask in 0u64..(1u64 << (n - 1)) {
                let mut word = Vec::with_capacity(n);
                word.push(1);
                for b in 0..n - 1 {
                    word.push(if mask >> b & 1 == 1 { 2 } else { 1 });
                }
                out.push(Rgf::new(word).unwrap());
            }
        }
        ClassKey::P13_2 => {
            // weakly increasing: each step either repeats or introduces
            // the next letter
            for mask in 0u64..(1u64 << (n - 1)) {
                let mut word = Vec::with_capacity(n);
                let mut letter = 1usize;
                word.push(1);
                for b in 0..n - 1 {
                    if mask >> b & 1 == 1 {
                        letter += 1;
                    }
                    word.push(letter);
                }
                out.push(Rgf::new(word).unwrap());
            }
        }
        ClassKey::P12_3 => {
            out.push(Rgf::new((1..=n).collect()).unwrap());
            for m in 1..n {
                for c in 1..=m {
                    let mut word: Vec<usize> = (1..=m).collect();
                    word.extend(std::iter::repeat_n(c, n - m));
                    out.push(Rgf::new(word).unwrap());
                }
            }
        }
        ClassKey::P1_23 => {
            // one extra 1 inserted at index l+k into 1^l 2 3 ... m;
            // l = 0 only admits k = 1 (the strictly increasing word)
            for l in 0..n {
                let m = n - l;
                let k_max = if l == 0 { 1 } else { m };
                for k in 1..=k_max {
                    let mut word = Vec::with_capacity(n);
                    word.extend(std::iter::repeat_n(1, l));
                    if k == 1 {
                        word.push(1);
                        word.extend(2..=m);
                    } else {
                        word.extend(2..=k);
                        word.push(1);
                        word.extend(k + 1..=m);
                    }
                    out.push(Rgf::new(word).unwrap());
                }
            }
        }
        ClassKey::P123 => {
            let mut word = Vec::with_capacity(n);
            let mut counts = vec![0usize; n + 2];
            gen_at_most_twice(n, &mut word, &mut counts, 0, &mut out);
        }
        ClassKey::P13_24 => {
            let mut word = Vec::with_capacity(n);
            // letters that may still be repeated without creating 1212
            let mut alive: Vec<usize> = Vec::new();
            gen_noncrossing(n, &mut word, &mut alive, 0, &mut out);
        }
    }
    out
}

/// Extend by any letter used at most once so far (so it never reaches three
/// occurrences).
fn gen_at_most_twice(
    n: usize,
    word: &mut Vec<usize>,
    counts: &mut [usize],
    max: usize,
    out: &mut Vec<Rgf>,
) {
    if word.len() == n {
        out.push(Rgf::new(word.clone()).unwrap());
        return;
    }
    for a in 1..=max + 1 {
        if counts[a] < 2 {
            counts[a] += 1;
            word.push(a);
            gen_at_most_twice(n, word, counts, max.max(a), out);
            word.pop();
            counts[a] -= 1;
        }
    }
}

/// Extend a 1212-free word. Repeating a letter `a` is allowed only while no
/// smaller letter has appeared after `first(a)`; those still-repeatable
/// letters are kept in `alive` (sorted), and appending `a` retires every
/// larger one.
fn gen_noncrossing(
    n: usize,
    word: &mut Vec<usize>,
    alive: &mut Vec<usize>,
    max: usize,
    out: &mut Vec<Rgf>,
) {
    if word.len() == n {
        out.push(Rgf::new(word.clone()).unwrap());
        return;
    }
    // introduce a new letter: never creates a crossing
    word.push(max + 1);
    alive.push(max + 1);
    gen_noncrossing(n, word, alive, max + 1, out);
    alive.pop();
    word.pop();

    // repeat an alive letter
    for i in 0..alive.len() {
        let a = alive[i];
        let killed: Vec<usize> = alive.split_off(i + 1);
        word.push(a);
        gen_noncrossing(n, word, alive, max, out);
        word.pop();
        alive.extend(killed);
    }
}

/// Does the word `w` contain `patt` as a subword pattern? Distinct pattern
/// letters must map to distinct word values with the same relative order,
/// and repeated pattern letters must map to equal values. E.g. `1212`
/// detects a crossing, `111` a letter used three times.
pub fn subword_pattern_contains(w: &[usize], patt: &[usize]) -> bool {
    if patt.is_empty() {
        return true;
    }
    let max_patt = *patt.iter().max().unwrap();
    let mut assigned: Vec<Option<usize>> = vec![None; max_patt + 1];
    subword_search(w, patt, 0, 0, &mut assigned)
}

fn subword_search(
    w: &[usize],
    patt: &[usize],
    wi: usize,
    pi: usize,
    assigned: &mut [Option<usize>],
) -> bool {
    if pi == patt.len() {
        return true;
    }
    if patt.len() - pi > w.len() - wi {
        return false;
    }
    let x = patt[pi];
    for pos in wi..w.len() {
        let a = w[pos];
        match assigned[x] {
            Some(v) => {
                if v != a {
                    continue;
                }
                if subword_search(w, patt, pos + 1, pi + 1, assigned) {
                    return true;
                }
            }
            None => {
                let consistent = assigned.iter().enumerate().all(|(y, slot)| match slot {
                    Some(v) => (y < x && *v < a) || (y > x && *v > a),
                    None => true,
                });
                if !consistent {
                    continue;
                }
                assigned[x] = Some(a);
                if subword_search(w, patt, pos + 1, pi + 1, assigned) {
                    assigned[x] = None;
                    return true;
                }
                assigned[x] = None;
            }
        }
    }
    false
}

/// A partition (given by its RGF word) is noncrossing exactly when the word
/// has no 1212 subword pattern.
pub fn is_noncrossing(w: &[usize]) -> bool {
    !subword_pattern_contains(w, &[1, 2, 1, 2])
}

/// Does `p` contain `tau` as a classical permutation pattern?
pub fn perm_contains(p: &Permutation, tau: &Permutation) -> bool {
    perm_word_contains(p.word(), tau.word())
}

fn perm_word_contains(p: &[usize], tau: &[usize]) -> bool {
    fn search(p: &[usize], tau: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        let j = chosen.len();
        if j == tau.len() {
            return true;
        }
        for pos in start..p.len() {
            if tau.len() - j > p.len() - pos {
                return false;
            }
            let v = p[pos];
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(i, &u)| (tau[i] < tau[j]) == (u < v));
            if consistent {
                chosen.push(v);
                if search(p, tau, pos + 1, chosen) {
                    chosen.pop();
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if tau.len() > p.len() {
        return false;
    }
    search(p, tau, 0, &mut Vec::with_capacity(tau.len()))
}

/// All 321-avoiding permutations of `[n]` in lexicographic order, generated
/// by prefix search: a prefix can extend by `v` only if `v` is at least the
/// largest value that already sits below an earlier larger value.
pub fn av321(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn extend(
        n: usize,
        word: &mut Vec<usize>,
        used: &mut [bool],
        max: usize,
        bound: usize,
        out: &mut Vec<Permutation>,
    ) {
        if word.len() == n {
            out.push(Permutation::new(word.clone()).unwrap());
            return;
        }
        for v in 1..=n {
            if used[v] || v < bound {
                continue;
            }
            used[v] = true;
            word.push(v);
            // a value below the running max becomes the new floor: anything
            // smaller after it would complete a 321
            let new_bound = if v < max { v.max(bound) } else { bound };
            extend(n, word, used, max.max(v), new_bound, out);
            word.pop();
            used[v] = false;
        }
    }
    extend(n, &mut word, &mut used, 0, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::permutations;
    use crate::rgf::{partitions, rgfs};

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn ps(s: &str) -> PatternSet {
        s.parse().unwrap()
    }

    #[test]
    fn containment_worked_examples() {
        assert!(partition_contains(&p("12/345/6"), &p("1/23")));
        assert!(!partition_contains(&p("12/345/6"), &p("1/2/3/4")));
        let any = p("13/24");
        assert!(partition_contains(&any, &any));
    }

    #[test]
    fn avoids_all_examples() {
        assert!(avoids_all(&p("13/2"), &ps("13/24")));
        assert!(!avoids_all(&p("13/24"), &ps("13/24")));
        assert!(avoids_all(&p("1/2/3"), &ps("1/23;12/3")));
    }

    #[test]
    fn avoidance_class_counts() {
        assert_eq!(avoidance_class(4, &ps("13/24")).count(), 14);
        assert_eq!(avoidance_class(3, &PatternSet::empty()).count(), 5);
        assert_eq!(avoidance_class(5, &ps("13/2;123")).count(), 8);
    }

    #[test]
    fn containment_is_transitive_small() {
        // if p contains sigma and sigma contains rho then p contains rho
        let pool: Vec<SetPartition> = (1..=4).flat_map(partitions).collect();
        for big in partitions(5) {
            for sigma in &pool {
                if !partition_contains(&big, sigma) {
                    continue;
                }
                for rho in &pool {
                    if rho.n() <= sigma.n() && partition_contains(sigma, rho) {
                        assert!(
                            partition_contains(&big, rho),
                            "{big} ⊇ {sigma} ⊇ {rho}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn subword_pattern_examples() {
        // 12312433 encodes 14/25/378/6, whose blocks {1,4} and {2,5}
        // cross: positions 1,2,4,5 spell out 1212.
        let w: Rgf = "12312433".parse().unwrap();
        assert!(subword_pattern_contains(w.word(), &[1, 2, 1, 2]));
        assert!(!is_noncrossing(w.word()));
        // 11231 nests instead of crossing
        assert!(!subword_pattern_contains(&[1, 1, 2, 3, 1], &[1, 2, 1, 2]));
        assert!(subword_pattern_contains(&[1, 2, 1, 2], &[1, 2, 1, 2]));
        assert!(!subword_pattern_contains(&[1, 2, 2, 1], &[1, 2, 1, 2]));
        assert!(subword_pattern_contains(&[1, 1, 1], &[1, 1]));
        assert!(!subword_pattern_contains(&[1, 1], &[1, 1, 1]));
        // smaller pattern letters must map to smaller values
        assert!(subword_pattern_contains(&[1, 2, 3, 1], &[1, 2]));
        assert!(!subword_pattern_contains(&[3, 2, 1], &[1, 2]));
    }

    #[test]
    fn noncrossing_matches_1212_freedom_and_pattern_avoidance() {
        for n in 0..=8 {
            let mut words = RgfWords::new(n);
            let pattern = ps("13/24");
            while let Some(w) = words.next_word() {
                let avoid = pattern.avoided_by_word(w);
                let free = is_noncrossing(w);
                let xyxy = !subword_pattern_contains(w, &[1, 2, 1, 2]);
                assert_eq!(avoid, free, "{w:?}");
                assert_eq!(free, xyxy);
            }
        }
    }

    #[test]
    fn perm_pattern_examples() {
        let c = |a: &str, b: &str| {
            perm_contains(&a.parse().unwrap(), &b.parse().unwrap())
        };
        assert!(c("1432", "321"));
        assert!(!c("1342", "321"));
        assert!(c("231", "231"));
        assert!(c("25314", "321"));
        assert!(!c("2314", "321"));
    }

    #[test]
    fn av321_matches_filter_oracle() {
        for n in 0..=7 {
            let direct = av321(n);
            let filtered: Vec<Permutation> = permutations(n)
                .filter(|p| !perm_contains(p, &"321".parse().unwrap()))
                .collect();
            assert_eq!(direct, filtered, "n = {n}");
        }
    }

    #[test]
    fn av321_counts_are_catalan() {
        let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(av321(n).len(), c, "n = {n}");
        }
    }

    #[test]
    fn av321_n3_lists_the_five() {
        let got: Vec<String> = av321(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["123", "132", "213", "231", "312"]);
    }

    #[test]
    fn characterized_small_examples() {
        let mut got: Vec<String> = characterized_class(3, ClassKey::P13_2)
            .iter()
            .map(|w| w.to_string())
            .collect();
        got.sort_unstable();
        assert_eq!(got, vec!["111", "112", "122", "123"]);

        let mut got: Vec<String> = characterized_class(2, ClassKey::P123)
            .iter()
            .map(|w| w.to_string())
            .collect();
        got.sort_unstable();
        assert_eq!(got, vec!["11", "12"]);

        assert_eq!(characterized_class(3, ClassKey::P13_24).len(), 5);
        assert_eq!(characterized_class(0, ClassKey::P1_23), vec![Rgf::empty()]);
    }

    #[test]
    fn characterized_classes_match_generic_filter() {
        for key in ClassKey::ALL {
            let pattern = PatternSet::new(vec![key.pattern()]);
            for n in 0..=7 {
                let mut direct: Vec<Rgf> = characterized_class(n, key);
                direct.sort();
                let mut filtered: Vec<Rgf> = Vec::new();
                for w in rgfs(n) {
                    if pattern.avoided_by_word(w.word()) {
                        filtered.push(w);
                    }
                }
                assert_eq!(direct, filtered, "key {key}, n = {n}");
            }
        }
    }

    /// The two-pattern avoidance classes have explicit membership lists;
    /// build each family directly and compare with the generic filter.
    #[test]
    fn two_pattern_classes_match_their_families() {
        let part = |blocks: Vec<Vec<usize>>, n: usize| SetPartition::new(n, blocks).unwrap();
        let interval = |a: usize, b: usize| (a..=b).collect::<Vec<usize>>();
        let singletons =
            |r: std::ops::RangeInclusive<usize>| r.map(|e| vec![e]).collect::<Vec<Vec<usize>>>();

        for n in 3..=6usize {
            let one_block = part(vec![interval(1, n)], n);
            let all_singletons = part(singletons(1..=n), n);

            let mut families: Vec<(&str, Vec<SetPartition>)> = Vec::new();

            families.push((
                "1/2/3;1/23",
                vec![
                    one_block.clone(),
                    part(vec![interval(1, n - 1), vec![n]], n),
                    part(vec![[interval(1, n - 2), vec![n]].concat(), vec![n - 1]], n),
                ],
            ));

            let mut two_intervals = vec![one_block.clone()];
            for k in 1..n {
                two_intervals.push(part(vec![interval(1, k), interval(k + 1, n)], n));
            }
            families.push(("1/2/3;13/2", two_intervals));

            families.push((
                "1/2/3;12/3",
                vec![
                    one_block.clone(),
                    part(vec![vec![1], interval(2, n)], n),
                    part(vec![[vec![1], interval(3, n)].concat(), vec![2]], n),
                ],
            ));

            let mut prefix_block = vec![one_block.clone()];
            for k in 1..n {
                let mut blocks = vec![interval(1, k)];
                blocks.extend(singletons(k + 1..=n));
                prefix_block.push(part(blocks, n));
            }
            families.push(("1/23;13/2", prefix_block));

            families.push((
                "1/23;12/3",
                vec![
                    one_block.clone(),
                    part([vec![vec![1, n]], singletons(2..=n - 1)].concat(), n),
                    all_singletons.clone(),
                ],
            ));

            let mut pair_1k = vec![all_singletons.clone()];
            for k in 2..=n {
                let mut blocks = vec![vec![1, k]];
                blocks.extend((2..=n).filter(|&e| e != k).map(|e| vec![e]));
                pair_1k.push(part(blocks, n));
            }
            families.push(("1/23;123", pair_1k));

            let mut suffix_block = Vec::new();
            for k in 1..=n {
                let mut blocks = singletons(1..=k - 1);
                blocks.push(interval(k, n));
                suffix_block.push(part(blocks, n));
            }
            families.push(("13/2;12/3", suffix_block));

            let mut last_joins_k = vec![all_singletons.clone()];
            for k in 1..n {
                let mut blocks = vec![vec![k, n]];
                blocks.extend((1..n).filter(|&e| e != k).map(|e| vec![e]));
                last_joins_k.push(part(blocks, n));
            }
            families.push(("12/3;123", last_joins_k));

            for (patterns, mut family) in families {
                family.sort();
                family.dedup();
                let mut class: Vec<SetPartition> =
                    avoidance_class(n, &patterns.parse().unwrap()).collect();
                class.sort();
                assert_eq!(class, family, "class {patterns} at n = {n}");
            }

            // 13/2;123: blocks of size <= 2 with weakly increasing word
            let class = avoidance_class(n, &"13/2;123".parse().unwrap());
            let mut count = 0usize;
            for p in class {
                assert!(p.blocks().iter().all(|b| b.len() <= 2), "{p}");
                let w = p.to_rgf();
                assert!(w.word().windows(2).all(|ab| ab[0] <= ab[1]), "{p}");
                count += 1;
            }
            let fib = [0, 1, 2, 3, 5, 8, 13][n];
            assert_eq!(count, fib, "Fibonacci count at n = {n}");
        }
    }

    #[test]
    fn pattern_set_parsing() {
        let set = ps("13/2;123");
        assert_eq!(set.patterns().len(), 2);
        assert_eq!(set.to_string(), "13/2;123");
        assert!(ps("").is_empty());
        assert!("13//2".parse::<PatternSet>().is_err());
    }
}
