//! Exhaustive search for nice colorings. Exponential; meant for small
//! instances and as the reference the fast solvers are tested against.

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::tuples::TupleSet;

pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// First nice coloring in lexicographic order of assignment vectors, tuple 0
/// most significant.
///
/// With `partial_only` the search runs over all `(c + 1)^n` partial colorings
/// with uncolored ordered before color 0; otherwise over the `c^n` total ones.
pub fn oracle_nice_coloring(ts: &TupleSet, c: u32, partial_only: bool, budget: u64) -> Result<Option<Coloring>> {
    if c == 0 {
        return Err(Error::ZeroColors);
    }
    let n = ts.len();
    let base = if partial_only { c + 1 } else { c };
    let needed = (base as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }

    let words = ts.m() / 64 + 1;
    let masks: Vec<Vec<u64>> = ts
        .iter()
        .map(|t| {
            let mut mask = vec![0u64; words];
            for &e in t {
                mask[e as usize / 64] |= 1 << (e % 64);
            }
            mask
        })
        .collect();
    let offset = u32::from(partial_only);

    let mut digits = vec![0u32; n];
    let mut common = vec![vec![0u64; words]; c as usize];
    let mut used = vec![false; c as usize];
    loop {
        // a class is nice iff it is nonempty and no element is in all members
        used.fill(false);
        for (d, mask) in digits.iter().zip(&masks) {
            if *d < offset {
                continue;
            }
            let color = (*d - offset) as usize;
            if used[color] {
                for (w, m) in common[color].iter_mut().zip(mask) {
                    *w &= m;
                }
            } else {
                used[color] = true;
                common[color].copy_from_slice(mask);
            }
        }
        let nice = used.iter().all(|&u| u) && common.iter().all(|w| w.iter().all(|&x| x == 0));
        if nice {
            let assignment = digits
                .iter()
                .map(|&d| (d >= offset).then(|| (d - offset) as Color))
                .collect();
            return Coloring::new(c, assignment).map(Some);
        }
        // odometer, last position fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < base {
                break;
            }
            digits[pos] = 0;
        }
    }
}
