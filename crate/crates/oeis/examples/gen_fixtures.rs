//! Regenerate the committed b-file fixtures in `fixtures/`.
//!
//! Every sequence is computed here from first principles (closed forms or
//! direct object enumeration), deliberately independent of the `setpart`
//! crate, so cross-checks against these files compare two separate routes.
//! When network access is available, `fixtures/` can instead be refreshed
//! with authoritative downloads from oeis.org; the file headers say which
//! construction produced them.
//!
//! Run with `cargo run -p setpart-oeis --example gen_fixtures`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn catalan(n: u64) -> i64 {
    (binom(2 * n, n) / (n as u128 + 1)) as i64
}

fn motzkin(up_to: usize) -> Vec<i64> {
    let mut m = vec![1i64; 1];
    for n in 1..=up_to {
        let mut v = m[n - 1];
        if n >= 2 {
            for k in 0..=n - 2 {
                v += m[k] * m[n - 2 - k];
            }
        }
        m.push(v);
    }
    m
}

/// Motzkin paths of length `n` (steps +1/0/-1, staying nonnegative, ending
/// at 0) counted by area, where area is the sum of the heights after each
/// step.
fn motzkin_paths_by_area(n: usize) -> Vec<i64> {
    let mut counts: BTreeMap<usize, i64> = BTreeMap::new();
    fn walk(left: usize, height: usize, area: usize, counts: &mut BTreeMap<usize, i64>) {
        if left == 0 {
            if height == 0 {
                *counts.entry(area).or_insert(0) += 1;
            }
            return;
        }
        // the walk must still be able to return to height 0
        if height > left {
            return;
        }
        walk(left - 1, height + 1, area + height + 1, counts);
        walk(left - 1, height, area + height, counts);
        if height > 0 {
            walk(left - 1, height - 1, area + height - 1, counts);
        }
    }
    walk(n, 0, 0, &mut counts);
    dense_row(&counts)
}

/// Tilings of a 1 x n strip by monominoes and dominoes, counted by the
/// total number of tiles.
fn tilings_by_tiles(n: usize) -> Vec<i64> {
    let mut counts: BTreeMap<usize, i64> = BTreeMap::new();
    fn place(left: usize, tiles: usize, counts: &mut BTreeMap<usize, i64>) {
        if left == 0 {
            *counts.entry(tiles).or_insert(0) += 1;
            return;
        }
        place(left - 1, tiles + 1, counts);
        if left >= 2 {
            place(left - 2, tiles + 1, counts);
        }
    }
    place(n, 0, &mut counts);
    dense_row(&counts)
}

/// Words of length `n` over {1, 2} starting with 1: spread sums
/// `last - first` per letter, block is the number of distinct letters.
fn one_two_words(n: usize) -> Vec<(usize, usize)> {
    assert!(n >= 1);
    let mut out = Vec::new();
    for mask in 0u64..(1 << (n - 1)) {
        let word: Vec<usize> = std::iter::once(1)
            .chain((0..n - 1).map(|b| if mask >> b & 1 == 1 { 2 } else { 1 }))
            .collect();
        let mut spread = 0;
        let mut block = 0;
        for letter in [1usize, 2] {
            let first = word.iter().position(|&a| a == letter);
            let last = word.iter().rposition(|&a| a == letter);
            if let (Some(f), Some(l)) = (first, last) {
                spread += l - f;
                block += 1;
            }
        }
        out.push((spread, block));
    }
    out
}

fn dim_row(n: usize) -> Vec<i64> {
    let mut counts: BTreeMap<usize, i64> = BTreeMap::new();
    for (spread, block) in one_two_words(n) {
        *counts.entry(spread + block).or_insert(0) += 1;
    }
    dense_row(&counts)
}

/// Coefficients of the joint spread/block distribution in canonical
/// (spread, block)-lexicographic order.
fn sb_row(n: usize) -> Vec<i64> {
    let mut counts: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for key in one_two_words(n) {
        *counts.entry(key).or_insert(0) += 1;
    }
    counts.into_values().collect()
}

fn dense_row(counts: &BTreeMap<usize, i64>) -> Vec<i64> {
    let (&lo, _) = counts.first_key_value().unwrap();
    let (&hi, _) = counts.last_key_value().unwrap();
    (lo..=hi).map(|k| counts.get(&k).copied().unwrap_or(0)).collect()
}

fn write_bfile(dir: &Path, name: &str, header: &[&str], terms: &[i64]) {
    let mut text = String::new();
    for line in header {
        text.push_str(&format!("# {line}\n"));
    }
    for (i, v) in terms.iter().enumerate() {
        text.push_str(&format!("{i} {v}\n"));
    }
    fs::write(dir.join(name), text).unwrap();
    println!("{name}: {} terms", terms.len());
}

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    fs::create_dir_all(&dir).unwrap();

    let catalan_terms: Vec<i64> = (0..=30).map(catalan).collect();
    write_bfile(
        &dir,
        "b000108.txt",
        &[
            "A000108: Catalan numbers.",
            "Generated locally from the closed form C(2n,n)/(n+1).",
            "Refresh from https://oeis.org/A000108/b000108.txt for authoritative data.",
        ],
        &catalan_terms,
    );

    write_bfile(
        &dir,
        "b001006.txt",
        &[
            "A001006: Motzkin numbers.",
            "Generated locally from M(n) = M(n-1) + sum M(k) M(n-2-k).",
            "Refresh from https://oeis.org/A001006/b001006.txt for authoritative data.",
        ],
        &motzkin(30),
    );

    let mut a055151 = Vec::new();
    for n in 0u64..=16 {
        for k in 0..=n / 2 {
            a055151.push((binom(n, 2 * k) * catalan(k) as u128) as i64);
        }
    }
    write_bfile(
        &dir,
        "b055151.txt",
        &[
            "A055151: Motzkin polynomial coefficients: triangle T(n,k) = C(n,2k) Catalan(k),",
            "rows n >= 0, 0 <= k <= n/2, flattened. Generated locally from the closed form.",
            "Refresh from https://oeis.org/A055151/b055151.txt for authoritative data.",
        ],
        &a055151,
    );

    let mut a129181 = Vec::new();
    for n in 0..=12 {
        a129181.extend(motzkin_paths_by_area(n));
    }
    write_bfile(
        &dir,
        "b129181.txt",
        &[
            "A129181: Motzkin paths of length n counted by area (sum of heights),",
            "triangle rows n >= 0 flattened. Generated locally by exhaustive path walks.",
            "Refresh from https://oeis.org/A129181/b129181.txt for authoritative data.",
        ],
        &a129181,
    );

    let mut a129710 = Vec::new();
    for n in 1..=16 {
        a129710.extend(tilings_by_tiles(n));
    }
    write_bfile(
        &dir,
        "b129710.txt",
        &[
            "A129710: tilings of a 1 x n strip by monominoes and dominoes, counted by",
            "total tiles; triangle rows n >= 1 flattened. Generated locally by exhaustive",
            "tiling enumeration. Refresh from https://oeis.org/A129710/b129710.txt for",
            "authoritative data.",
        ],
        &a129710,
    );

    let mut a120933 = Vec::new();
    a120933.push(1); // the empty word
    for n in 1..=16 {
        a120933.extend(dim_row(n));
    }
    write_bfile(
        &dir,
        "b120933.txt",
        &[
            "A120933: dimension-index distribution over words of length n on {1,2}",
            "(partitions into at most two blocks); triangle rows n >= 0 flattened.",
            "Generated locally by exhaustive word enumeration. Refresh from",
            "https://oeis.org/A120933/b120933.txt for authoritative data.",
        ],
        &a120933,
    );

    let mut a296612 = Vec::new();
    a296612.push(1);
    for n in 1..=14 {
        a296612.extend(sb_row(n));
    }
    write_bfile(
        &dir,
        "b296612.txt",
        &[
            "A296612: joint spread/block coefficients over words of length n on {1,2},",
            "read per n in (spread, block)-lexicographic order; rows n >= 0 flattened.",
            "Generated locally by exhaustive word enumeration. Refresh from",
            "https://oeis.org/A296612/b296612.txt for authoritative data.",
        ],
        &a296612,
    );
}
