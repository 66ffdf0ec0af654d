//! Exhaustive cross-checks at their full stated ranges. These are heavier
//! than the unit tests (full Bell-class scans up to n = 12) but still run
//! in seconds.

use setpart::bijections::{ballot_pairs, tau, tau_inverse};
use setpart::genfun::{self, FormulaId};
use setpart::patterns::{av321, characterized_class, ClassKey, PatternSet};
use setpart::rgf::{partitions, rgfs, RgfWords};
use setpart::stats;
use setpart::Rgf;

/// Independent Bell oracle via the Bell triangle.
fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        row = next;
    }
    row[0]
}

#[test]
fn partition_enumeration_counts_to_twelve() {
    let expected: [u64; 13] = [
        1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597,
    ];
    for (n, &b) in expected.iter().enumerate() {
        assert_eq!(bell(n), b, "triangle oracle at {n}");
    }
    for n in 0..=10 {
        assert_eq!(partitions(n).count() as u64, bell(n), "partitions({n})");
    }
    // the partition stream maps the word stream one-to-one; count words
    // for the two largest sizes
    for n in 11..=12 {
        let mut words = RgfWords::new(n);
        let mut count = 0u64;
        while words.next_word().is_some() {
            count += 1;
        }
        assert_eq!(count, bell(n), "words({n})");
    }
}

#[test]
fn rgf_round_trip_to_nine() {
    for n in 0..=9 {
        for w in rgfs(n) {
            assert_eq!(w.to_partition().to_rgf(), w);
        }
    }
}

#[test]
fn characterized_classes_match_generic_filter_to_ten() {
    for key in ClassKey::ALL {
        let pattern = PatternSet::new(vec![key.pattern()]);
        for n in 0..=10 {
            let mut direct: Vec<Rgf> = characterized_class(n, key);
            direct.sort();
            let mut filtered: Vec<Rgf> = Vec::new();
            let mut words = RgfWords::new(n);
            while let Some(w) = words.next_word() {
                if pattern.avoided_by_word(w) {
                    filtered.push(Rgf::new(w.to_vec()).unwrap());
                }
            }
            assert_eq!(direct, filtered, "key {key}, n = {n}");
        }
    }
}

#[test]
fn single_pattern_formulas_verify_to_twelve() {
    for id in [
        FormulaId::Sb12_3,
        FormulaId::Sb1_23,
        FormulaId::Sb13_2,
        FormulaId::Sb1_2_3,
        FormulaId::Sb13_24,
    ] {
        let report = genfun::verify(id, 12).unwrap();
        assert!(report.all_equal, "{id} disagrees with its oracle");
    }
}

#[test]
fn the_two_transported_classes_share_their_distribution() {
    // the insertion bijection carries spread and block across, so the two
    // enumeration oracles must agree as polynomials
    for n in 0..=10 {
        let a = genfun::sb_bruteforce(n, &"1/23".parse().unwrap()).unwrap();
        let b = genfun::sb_bruteforce(n, &"12/3".parse().unwrap()).unwrap();
        assert_eq!(a, b, "n = {n}");
    }
}

#[test]
fn inversions_of_avoiders_sum_lrm_excesses_to_nine() {
    // in a 321-avoider the non-LRM letters increase, so inversions are
    // counted by how far each LRM value sits above its position
    for n in 0..=9 {
        for p in av321(n) {
            let w = p.word();
            let lrm_sum: usize = stats::lrm_indices(w)
                .iter()
                .map(|&i| w[i - 1] - i)
                .sum();
            assert_eq!(stats::inversions(w), lrm_sum, "{p}");
        }
    }
}

#[test]
fn tau_preserves_statistics_to_ten() {
    for n in 0..=10 {
        let source = characterized_class(n, ClassKey::P1_23);
        let mut images: Vec<Rgf> = Vec::new();
        for w in &source {
            let img = tau(w).unwrap();
            assert_eq!(img.spread(), w.spread());
            assert_eq!(img.block(), w.block());
            assert_eq!(tau_inverse(&img).unwrap(), *w);
            images.push(img);
        }
        images.sort();
        images.dedup();
        let mut target = characterized_class(n, ClassKey::P12_3);
        target.sort();
        assert_eq!(images, target, "bijective onto R_{n}(12/3)");
    }
}

#[test]
fn ballot_pair_counts_are_catalan_to_ten() {
    let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
    for (n, &c) in catalan.iter().enumerate() {
        assert_eq!(ballot_pairs(n).len(), c, "n = {n}");
    }
}
