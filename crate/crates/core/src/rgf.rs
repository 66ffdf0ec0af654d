//! Restricted growth functions: the canonical word encoding of a set
//! partition. A word `a_1 ... a_n` of positive integers is an RGF when
//! `a_1 = 1` and each later letter exceeds the running maximum by at most
//! one. The letter at position `i` names the block containing `i`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::partition::SetPartition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RgfError {
    #[error("letter {letter} at position {position} violates the growth condition")]
    Growth { position: usize, letter: usize },
    #[error("letters must be positive")]
    ZeroLetter,
    #[error("cannot parse RGF from {0:?}")]
    Parse(String),
}

/// A validated restricted growth function.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rgf {
    word: Vec<usize>,
}

impl Rgf {
    pub fn new(word: Vec<usize>) -> Result<Self, RgfError> {
        let mut max = 0usize;
        for (i, &a) in word.iter().enumerate() {
            if a == 0 {
                return Err(RgfError::ZeroLetter);
            }
            if a > max + 1 {
                return Err(RgfError::Growth {
                    position: i + 1,
                    letter: a,
                });
            }
            max = max.max(a);
        }
        Ok(Rgf { word })
    }

    pub fn empty() -> Self {
        Rgf { word: Vec::new() }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Largest letter, i.e. the number of blocks of the encoded partition.
    pub fn max_letter(&self) -> usize {
        self.word.iter().copied().max().unwrap_or(0)
    }

    /// Decode into the set partition whose `j`-th block collects the
    /// positions holding the letter `j`.
    pub fn to_partition(&self) -> SetPartition {
        let k = self.max_letter();
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (i, &a) in self.word.iter().enumerate() {
            blocks[a - 1].push(i + 1);
        }
        SetPartition::new(self.word.len(), blocks).expect("an RGF always decodes to a valid partition")
    }
}

impl fmt::Display for Rgf {
    /// A digit string when every letter is below 10, comma-separated
    /// integers otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.iter().all(|&a| a < 10) {
            for &a in &self.word {
                write!(f, "{a}")?;
            }
        } else {
            for (i, &a) in self.word.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Rgf {
    type Err = RgfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Rgf::empty());
        }
        let word: Result<Vec<usize>, RgfError> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| RgfError::Parse(s.to_string())))
                .collect()
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| RgfError::Parse(s.to_string()))
                })
                .collect()
        };
        Rgf::new(word?)
    }
}

/// In-place generator of all RGF words of a fixed length, in lexicographic
/// order. This is the engine behind every partition enumerator; hot loops
/// use [`RgfWords::next_word`] to avoid per-item allocation.
///
/// The generator is a pure value: a fresh one restarts the stream, and
/// independent instances can be advanced on different threads.
#[derive(Debug, Clone)]
pub struct RgfWords {
    word: Vec<usize>,
    // prefix_max[i] = max(word[..i]), with prefix_max[0] = 0
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl RgfWords {
    pub fn new(n: usize) -> Self {
        RgfWords {
            word: vec![1; n],
            prefix_max: vec![1; n + 1],
            started: false,
            done: false,
        }
    }

    /// Advance to the next word and return it, or `None` when exhausted.
    pub fn next_word(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.prefix_max[0] = 0;
            for i in 0..self.word.len() {
                self.word[i] = 1;
                self.prefix_max[i + 1] = 1;
            }
            if self.word.is_empty() {
                self.done = true;
                return Some(&self.word); // the single empty word
            }
            return Some(&self.word);
        }
        // Find the rightmost position that can still grow: position i may
        // hold any letter up to prefix_max[i] + 1.
        let n = self.word.len();
        let mut i = n;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.word[i] <= self.prefix_max[i] {
                break;
            }
        }
        self.word[i] += 1;
        self.prefix_max[i + 1] = self.prefix_max[i].max(self.word[i]);
        for j in i + 1..n {
            self.word[j] = 1;
            self.prefix_max[j + 1] = self.prefix_max[j];
        }
        Some(&self.word)
    }
}

/// All RGFs of length `n` in lexicographic order.
pub fn rgfs(n: usize) -> impl Iterator<Item = Rgf> {
    let mut gen = RgfWords::new(n);
    std::iter::from_fn(move || {
        gen.next_word().map(|w| Rgf {
            word: w.to_vec(),
        })
    })
}

/// All set partitions of `[n]`, one per RGF, in lexicographic RGF order.
/// The count is the Bell number `B(n)`.
pub fn partitions(n: usize) -> impl Iterator<Item = SetPartition> {
    rgfs(n).map(|w| w.to_partition())
}
