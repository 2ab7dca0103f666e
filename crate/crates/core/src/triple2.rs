//! Linear-time decision and construction of nice 2-colorings of triples.
//!
//! For `n >= 6` a set of triples has a nice 2-coloring iff it is fair and not
//! special. Construction picks a fair, non-special sub-multiset of at most 15
//! triples, colors it by brute force, and paints everything else color 0.

use crate::coloring::{is_nice, Coloring};
use crate::error::{Error, Result};
use crate::oracle::{oracle_nice_coloring, DEFAULT_BUDGET};
use crate::predicates::{is_fair, special_triple};
use crate::tuples::{Element, TupleSet};

pub const MAX_CORE_SIZE: usize = 15;

/// A constant-size sub-multiset that is fair and non-special whenever its
/// parent is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreSubset {
    /// Indices into the parent, in insertion order.
    pub indices: Vec<usize>,
    /// The induced instance, `witness.tuple(j) == parent.tuple(indices[j])`.
    pub witness: TupleSet,
}

fn require_triples(ts: &TupleSet) -> Result<()> {
    if ts.k() != 3 {
        return Err(Error::WrongTupleSize {
            expected: 3,
            found: ts.k(),
        });
    }
    Ok(())
}

pub fn decide_2colorable_triples(ts: &TupleSet) -> Result<bool> {
    require_triples(ts)?;
    if ts.len() <= 5 {
        return Ok(oracle_nice_coloring(ts, 2, false, DEFAULT_BUDGET)?.is_some());
    }
    Ok(is_fair(ts) && special_triple(ts)?.is_none())
}

pub fn extract_core_subset(ts: &TupleSet) -> Result<CoreSubset> {
    require_triples(ts)?;
    let n = ts.len();
    if n < 6 {
        return Err(Error::PreconditionViolated("core subset needs at least 6 triples"));
    }
    let mut anchor_elements: Vec<Element> = ts.tuple(0).iter().chain(ts.tuple(1)).copied().collect();
    anchor_elements.sort_unstable();
    anchor_elements.dedup();

    let mut taken = vec![false; n];
    let mut indices = vec![0, 1];
    taken[0] = true;
    taken[1] = true;

    // first two avoiders of every anchor element, one pass
    let mut avoiders = vec![0u8; anchor_elements.len()];
    for (i, t) in ts.iter().enumerate() {
        for (e, found) in anchor_elements.iter().zip(avoiders.iter_mut()) {
            if *found < 2 && !t.contains(e) {
                *found += 1;
                if !taken[i] {
                    taken[i] = true;
                    indices.push(i);
                }
            }
        }
        if avoiders.iter().all(|&f| f == 2) {
            break;
        }
    }
    if avoiders.iter().any(|&f| f < 2) {
        return Err(Error::PreconditionViolated("instance is not fair"));
    }

    let mut next = 0;
    while indices.len() < 6 {
        while taken[next] {
            next += 1;
        }
        taken[next] = true;
        indices.push(next);
    }

    let mut witness = ts.subset(&indices);
    if let Some(g) = special_triple(&witness)? {
        let extra = (0..n)
            .find(|&i| !taken[i] && ts.tuple(i) != g)
            .ok_or(Error::PreconditionViolated("instance is special"))?;
        indices.push(extra);
        witness = ts.subset(&indices);
    }
    debug_assert!(indices.len() <= MAX_CORE_SIZE);
    Ok(CoreSubset { indices, witness })
}

/// A nice 2-coloring of `ts`, if one exists.
pub fn color_2_triples(ts: &TupleSet) -> Result<Option<Coloring>> {
    require_triples(ts)?;
    if ts.len() <= 5 {
        return oracle_nice_coloring(ts, 2, false, DEFAULT_BUDGET);
    }
    if !decide_2colorable_triples(ts)? {
        return Ok(None);
    }
    let core = extract_core_subset(ts)?;
    let size = core.indices.len();
    let mut local = Coloring::uncolored(2, size)?;
    let found = (0u32..1 << size).find(|mask| {
        for j in 0..size {
            local.set(j, Some((mask >> (size - 1 - j)) & 1));
        }
        is_nice(&core.witness, &local)
    });
    let Some(_) = found else {
        unreachable!("fair non-special core without a nice 2-coloring");
    };
    let mut col = Coloring::uncolored(2, ts.len())?;
    for (j, &i) in core.indices.iter().enumerate() {
        col.set(i, local.get(j));
    }
    col.extend_uncolored(0);
    Ok(Some(col))
}
