//! Fairness and speciality.

use crate::error::{Error, Result};
use crate::tuples::{Element, TupleSet};

/// An element of `[m]` missed by fewer than `c` tuples, if any.
///
/// Anchor scan: every element outside the first `c` tuples is missed by all of
/// them, so only the elements of those anchors need counting. O(n c^2 k^2).
pub fn unfair_element(ts: &TupleSet, c: usize) -> Option<Element> {
    if ts.len() < c {
        return (ts.m() > 0).then_some(1);
    }
    let mut candidates: Vec<Element> = (0..c).flat_map(|i| ts.tuple(i).iter().copied()).collect();
    candidates.sort_unstable();
    candidates.dedup();
    let mut missed = vec![0usize; candidates.len()];
    for t in ts.iter() {
        for (e, count) in candidates.iter().zip(missed.iter_mut()) {
            if !t.contains(e) {
                *count += 1;
            }
        }
    }
    candidates
        .iter()
        .zip(&missed)
        .find(|(_, &count)| count < c)
        .map(|(&e, _)| e)
}

/// Every element of `[m]` is missed by at least `c` tuples.
pub fn is_c_fair(ts: &TupleSet, c: usize) -> bool {
    unfair_element(ts, c).is_none()
}

/// Fairness via a full occurrence count over `[m]`.
pub fn is_c_fair_counting(ts: &TupleSet, c: usize) -> bool {
    let mut occurrences = vec![0usize; ts.m() + 1];
    for t in ts.iter() {
        for &e in t {
            occurrences[e as usize] += 1;
        }
    }
    occurrences[1..].iter().all(|&o| ts.len() - o >= c)
}

/// `is_c_fair(ts, 2)`.
pub fn is_fair(ts: &TupleSet) -> bool {
    is_c_fair(ts, 2)
}

/// If `ts` is special, the triple repeated `n - 3` times.
///
/// Special: `n - 3` copies of a triple `abc` plus three triples meeting `abc`
/// in exactly `a`, `b` and `c` respectively. Requires `n >= 4`.
pub fn special_triple(ts: &TupleSet) -> Result<Option<[Element; 3]>> {
    if ts.k() != 3 {
        return Err(Error::WrongTupleSize {
            expected: 3,
            found: ts.k(),
        });
    }
    let n = ts.len();
    if n < 4 {
        return Ok(None);
    }
    // With n >= 7 the repeated triple fills all but three slots, so it is
    // among the first four tuples.
    let scan = if n >= 7 { 4 } else { n };
    let mut candidates: Vec<&[Element]> = (0..scan).map(|i| ts.tuple(i)).collect();
    candidates.sort_unstable();
    candidates.dedup();
    for cand in candidates {
        let mut copies = 0;
        let mut hit = [false; 3];
        let mut rest_ok = true;
        for t in ts.iter() {
            if t == cand {
                copies += 1;
                continue;
            }
            let mut shared = (0..3).filter(|&j| t.contains(&cand[j]));
            match (shared.next(), shared.next()) {
                (Some(j), None) if !hit[j] => hit[j] = true,
                _ => {
                    rest_ok = false;
                    break;
                }
            }
        }
        if rest_ok && copies == n - 3 && hit.iter().all(|&h| h) {
            return Ok(Some([cand[0], cand[1], cand[2]]));
        }
    }
    Ok(None)
}

pub fn is_special(ts: &TupleSet) -> Result<bool> {
    special_triple(ts).map(|t| t.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(rows: &[[u32; 3]]) -> TupleSet {
        TupleSet::from_rows(rows).unwrap()
    }

    #[test]
    fn fairness_examples() {
        assert!(is_c_fair(&ts(&[[1, 2, 3], [1, 4, 5], [2, 4, 5], [6, 7, 8]]), 2));
        assert!(!is_c_fair(&ts(&[[1, 2, 3], [1, 2, 3], [1, 2, 3]]), 1));
        let special_pattern = ts(&[
            [1, 2, 3],
            [1, 2, 3],
            [1, 2, 3],
            [1, 2, 3],
            [1, 4, 5],
            [2, 4, 5],
            [3, 4, 5],
        ]);
        // 1, 2, 3 occur 5 of 7 times; 4, 5 occur 3 times
        assert!(is_c_fair(&special_pattern, 2));
        assert!(!is_c_fair(&special_pattern, 3));
        assert!(is_c_fair_counting(&special_pattern, 2));
        assert!(!is_c_fair_counting(&special_pattern, 3));
    }

    #[test]
    fn fewer_tuples_than_colors() {
        let t = ts(&[[1, 2, 3]]);
        assert!(!is_c_fair(&t, 2));
        assert_eq!(unfair_element(&t, 2), Some(1));
    }

    #[test]
    fn unfair_element_outside_first_anchor() {
        // 4 lies in the second anchor only and is missed by one tuple
        let t = ts(&[[1, 2, 3], [4, 5, 6], [4, 7, 8]]);
        assert_eq!(unfair_element(&t, 2), Some(4));
        assert!(!is_c_fair_counting(&t, 2));
    }

    #[test]
    fn special_examples() {
        let special = ts(&[[1, 2, 3], [1, 2, 3], [1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 7, 8]]);
        assert_eq!(special_triple(&special).unwrap(), Some([1, 2, 3]));
        assert!(!is_special(&ts(&[[1, 2, 3], [1, 4, 5], [2, 4, 5], [6, 7, 8]])).unwrap());
        assert!(!is_special(&ts(&[[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4], [5, 6, 7]])).unwrap());
    }

    #[test]
    fn special_needs_each_residual_to_hit_one() {
        // 1**, 1**, 3**: element 2 never hit
        let t = ts(&[[1, 2, 3], [1, 2, 3], [1, 2, 3], [1, 4, 5], [1, 4, 6], [3, 7, 8]]);
        assert!(!is_special(&t).unwrap());
        // 12* touches two elements of the repeated triple
        let t = ts(&[[1, 2, 3], [1, 2, 3], [1, 2, 3], [1, 2, 5], [2, 4, 6], [3, 7, 8]]);
        assert!(!is_special(&t).unwrap());
        // four copies plus three residuals is n - 3 only when n = 7
        let t = ts(&[
            [1, 2, 3],
            [1, 2, 3],
            [1, 2, 3],
            [1, 2, 3],
            [1, 4, 5],
            [2, 4, 6],
            [3, 7, 8],
        ]);
        assert!(is_special(&t).unwrap());
    }

    #[test]
    fn special_small_and_shuffled() {
        let t = ts(&[[3, 7, 8], [1, 4, 5], [1, 2, 3], [2, 4, 6]]);
        assert_eq!(special_triple(&t).unwrap(), Some([1, 2, 3]));
        let t = ts(&[[3, 7, 8], [1, 4, 5], [2, 4, 6]]);
        assert!(!is_special(&t).unwrap());
        let t = ts(&[
            [4, 5, 6],
            [1, 4, 5],
            [1, 2, 3],
            [2, 4, 6],
            [1, 2, 3],
            [1, 2, 3],
            [1, 2, 3],
        ]);
        assert!(!is_special(&t).unwrap());
        let t = ts(&[
            [3, 5, 6],
            [1, 4, 5],
            [1, 2, 3],
            [2, 4, 6],
            [1, 2, 3],
            [1, 2, 3],
            [1, 2, 3],
        ]);
        assert!(is_special(&t).unwrap());
    }

    #[test]
    fn wrong_tuple_size() {
        let t = TupleSet::from_rows(&[[1, 2], [3, 4]]).unwrap();
        assert_eq!(is_special(&t), Err(Error::WrongTupleSize { expected: 3, found: 2 }));
    }
}
