//! Combinatorial statistics on RGF words and permutations.
//!
//! Partition statistics are computed on the RGF encoding: `block` is the
//! largest letter, `spread` sums `last(l) - first(l)` over the letters of
//! the word, and the dimension index is their sum. The checkpoint, apex and
//! apex-major-index statistics mirror fixed points, descents and the major
//! index of 321-avoiding permutations.
//!
//! Functions here take raw word slices so enumeration loops can run without
//! allocating; `Rgf` and `Permutation` expose the same statistics as
//! methods. All indices in results are 1-based, matching the combinatorial
//! conventions.

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::perm::Permutation;
use crate::rgf::Rgf;

/// Largest letter of an RGF word (0 for the empty word).
pub fn block(w: &[usize]) -> usize {
    w.iter().copied().max().unwrap_or(0)
}

/// Sum of `last(l) - first(l)` over all letters `l` of an RGF word. Equals
/// the blockwise sum of `max - min` over the encoded partition.
pub fn spread(w: &[usize]) -> usize {
    let k = block(w);
    let mut first = vec![0usize; k + 1];
    let mut last = vec![0usize; k + 1];
    for (i, &a) in w.iter().enumerate() {
        if first[a] == 0 {
            first[a] = i + 1;
        }
        last[a] = i + 1;
    }
    (1..=k).map(|l| last[l] - first[l]).sum()
}

/// Dimension index: `spread + block`.
pub fn dim(w: &[usize]) -> usize {
    spread(w) + block(w)
}

/// 1-based indices of first and last occurrences of letters.
///
/// Position `i` is a *first* when its letter does not occur earlier, and a
/// *last* when its letter does not occur later.
pub fn firsts_lasts(w: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = block(w);
    let mut first = vec![0usize; k + 1];
    let mut last = vec![0usize; k + 1];
    for (i, &a) in w.iter().enumerate() {
        if first[a] == 0 {
            first[a] = i + 1;
        }
        last[a] = i + 1;
    }
    let mut firsts: Vec<usize> = (1..=k).map(|l| first[l]).collect();
    let mut lasts: Vec<usize> = (1..=k).map(|l| last[l]).collect();
    firsts.sort_unstable();
    lasts.sort_unstable();
    (firsts, lasts)
}

/// 1-based indices of left-to-right maxima: positions whose letter exceeds
/// every earlier letter. The first index qualifies vacuously. In an RGF
/// these are exactly the first occurrences.
pub fn lrm_indices(word: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut max = 0usize;
    for (i, &a) in word.iter().enumerate() {
        if a > max {
            out.push(i + 1);
            max = a;
        }
    }
    out
}

/// Checkpoints of an RGF word: left-to-right maxima all of whose later
/// letters are strictly larger. The tail condition holds vacuously at the
/// last index, so a length-1 word has checkpoint set `{1}`.
pub fn checkpoints(w: &[usize]) -> Vec<usize> {
    let n = w.len();
    // suffix_min[i] = min(w[i..]), suffix_min[n] = usize::MAX (vacuous)
    let mut suffix_min = vec![usize::MAX; n + 1];
    for i in (0..n).rev() {
        suffix_min[i] = w[i].min(suffix_min[i + 1]);
    }
    let mut out = Vec::new();
    let mut max = 0usize;
    for (i, &a) in w.iter().enumerate() {
        if a > max {
            max = a;
            if suffix_min[i + 1] > a {
                out.push(i + 1);
            }
        }
    }
    out
}

/// Apices of an RGF word: left-to-right maxima `i` with `w_i >= w_{i+1}`.
/// The last index is never an apex.
pub fn apices(w: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut max = 0usize;
    for (i, &a) in w.iter().enumerate() {
        if a > max {
            max = a;
            if i + 1 < w.len() && a >= w[i + 1] {
                out.push(i + 1);
            }
        }
    }
    out
}

/// Number of apices.
pub fn apex_count(w: &[usize]) -> usize {
    apices(w).len()
}

/// Apex major index: the sum of the apex positions.
pub fn apex_major(w: &[usize]) -> usize {
    apices(w).iter().sum()
}

/// Number of checkpoints.
pub fn checkpoint_count(w: &[usize]) -> usize {
    checkpoints(w).len()
}

/// Inversions of a permutation word: pairs `i < j` with `π_i > π_j`.
pub fn inversions(p: &[usize]) -> usize {
    let mut count = 0;
    for j in 1..p.len() {
        for i in 0..j {
            if p[i] > p[j] {
                count += 1;
            }
        }
    }
    count
}

/// Number of fixed points `π_i = i`.
pub fn fixed_points(p: &[usize]) -> usize {
    p.iter().enumerate().filter(|&(i, &v)| v == i + 1).count()
}

/// 1-based descent positions: `i` with `π_i > π_{i+1}`.
pub fn descents(p: &[usize]) -> Vec<usize> {
    (1..p.len()).filter(|&i| p[i - 1] > p[i]).collect()
}

/// Major index: the sum of the descent positions.
pub fn major_index(p: &[usize]) -> usize {
    descents(p).iter().sum()
}

/// The `pos`/`val` vectors of a permutation: `pos` marks the positions of
/// left-to-right maxima and `val` marks their values.
pub fn pos_val(p: &[usize]) -> (Vec<bool>, Vec<bool>) {
    let n = p.len();
    let mut pos = vec![false; n];
    let mut val = vec![false; n];
    let mut max = 0usize;
    for (i, &v) in p.iter().enumerate() {
        if v > max {
            max = v;
            pos[i] = true;
            val[v - 1] = true;
        }
    }
    (pos, val)
}

/// A named list of integer statistics for one object, serialized as a flat
/// JSON map in insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatProfile {
    entries: Vec<(&'static str, usize)>,
}

impl StatProfile {
    /// spread/block/dim plus the checkpoint, apex and apex-major statistics
    /// of an RGF word.
    pub fn for_rgf(w: &Rgf) -> Self {
        let word = w.word();
        let s = spread(word);
        let b = block(word);
        StatProfile {
            entries: vec![
                ("spread", s),
                ("block", b),
                ("dim", s + b),
                ("cp", checkpoint_count(word)),
                ("ap", apex_count(word)),
                ("maj", apex_major(word)),
            ],
        }
    }

    /// The five permutation statistics of Section 5: inversions,
    /// left-to-right maxima, fixed points, descents, major index.
    pub fn for_permutation(p: &Permutation) -> Self {
        let word = p.word();
        StatProfile {
            entries: vec![
                ("inv", inversions(word)),
                ("lrm", lrm_indices(word).len()),
                ("fix", fixed_points(word)),
                ("des", descents(word).len()),
                ("maj", major_index(word)),
            ],
        }
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.entries.iter().find(|(k, _)| *k == name).map(|&(_, v)| v)
    }

    pub fn entries(&self) -> &[(&'static str, usize)] {
        &self.entries
    }
}

impl Serialize for StatProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for (k, v) in &self.entries {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl Rgf {
    pub fn spread(&self) -> usize {
        spread(self.word())
    }

    pub fn block(&self) -> usize {
        block(self.word())
    }

    pub fn dim(&self) -> usize {
        dim(self.word())
    }

    pub fn stats(&self) -> StatProfile {
        StatProfile::for_rgf(self)
    }
}

impl Permutation {
    pub fn stats(&self) -> StatProfile {
        StatProfile::for_permutation(self)
    }

    pub fn pos_val(&self) -> (Vec<bool>, Vec<bool>) {
        pos_val(self.word())
    }
}
