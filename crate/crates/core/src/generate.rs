//! Seeded instance generators for tests and benchmarks.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::tuples::{relabel_first_occurrence, Element, TupleSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` tuples of `k` distinct elements drawn uniformly from `[m]`.
pub fn random_rows<R: Rng>(rng: &mut R, n: usize, m: usize, k: usize) -> Vec<Vec<Element>> {
    assert!(k <= m, "tuple size exceeds alphabet");
    (0..n)
        .map(|_| {
            let mut t: Vec<Element> = index::sample(rng, m, k).iter().map(|e| e as Element + 1).collect();
            t.sort_unstable();
            t
        })
        .collect()
}

/// Like [`random_rows`], relabeled so that every element of `[m']` occurs.
pub fn random_tuple_set<R: Rng>(rng: &mut R, n: usize, m: usize, k: usize) -> TupleSet {
    let rows = random_rows(rng, n, m, k);
    if rows.is_empty() {
        return TupleSet::new(k, 0, []).expect("k >= 1");
    }
    relabel_first_occurrence(&TupleSet::from_rows(&rows).expect("valid rows"))
}

/// A special set of `n >= 4` triples over `[m]`, `m >= 5`: `n - 3` copies of
/// `{1,2,3}` plus one triple through each of 1, 2, 3 whose other two elements
/// are random from `4..=m`. Rows are shuffled.
pub fn special_rows<R: Rng>(rng: &mut R, n: usize, m: usize) -> Vec<Vec<Element>> {
    assert!(n >= 4 && m >= 5, "special sets need n >= 4 and m >= 5");
    let mut rows = vec![vec![1, 2, 3]; n - 3];
    for anchor in 1..=3 {
        let mut t: Vec<Element> = index::sample(rng, m - 3, 2).iter().map(|e| e as Element + 4).collect();
        t.push(anchor);
        t.sort_unstable();
        rows.push(t);
    }
    rows.shuffle(rng);
    rows
}

/// Rows of decimal tokens, one tuple per line.
pub fn render_rows(rows: &[Vec<Element>]) -> String {
    let mut out = String::new();
    for r in rows {
        let tokens: Vec<String> = r.iter().map(Element::to_string).collect();
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::is_special;

    #[test]
    fn reproducible() {
        let a = random_rows(&mut rng(7), 20, 9, 3);
        let b = random_rows(&mut rng(7), 20, 9, 3);
        assert_eq!(a, b);
        assert!(a
            .iter()
            .all(|t| t.len() == 3 && t.windows(2).all(|w| w[0] < w[1]) && t[2] <= 9));
    }

    #[test]
    fn special_rows_are_special() {
        for n in 4..13 {
            for seed in 0..5 {
                let rows = special_rows(&mut rng(seed), n, 9);
                let ts = TupleSet::from_rows(&rows).unwrap();
                assert!(is_special(&ts).unwrap(), "n = {n}, seed = {seed}");
            }
        }
    }

    #[test]
    fn relabeled_sets_use_every_element() {
        let ts = random_tuple_set(&mut rng(1), 3, 20, 3);
        let mut seen = vec![false; ts.m() + 1];
        for t in ts.iter() {
            for &e in t {
                seen[e as usize] = true;
            }
        }
        assert!(seen[1..].iter().all(|&s| s));
    }
}
