//! Linear-time nice c-coloring of k-tuples for fixed `c` and `k`.
//!
//! The first `s = (k + 1)(c - 1) + 1` tuples are anchors. Elements that occur
//! in no anchor are merged into one dummy element [`STAR`], every distinct
//! merged tuple is kept at most `c` times, and the resulting kernel (whose size
//! depends only on `c` and `k`) is searched exactly. A nice partial coloring of
//! the kernel is a nice partial coloring of the original instance, and if the
//! original has one then so does the kernel with every color on an anchor.

use std::collections::HashMap;

use crate::coloring::{partialize, Color, Coloring};
use crate::error::{Error, Result};
use crate::oracle::{oracle_nice_coloring, DEFAULT_BUDGET};
use crate::tuples::{Element, TupleSet};

/// The dummy element standing for every element outside the anchors.
pub const STAR: Element = 0;

pub fn anchor_count(c: u32, k: usize) -> usize {
    (k + 1) * (c as usize - 1) + 1
}

/// `c` times the number of distinct merged tuples over the `k s` anchor
/// elements plus [`STAR`] (which may repeat).
pub fn kernel_size_bound(c: u32, k: usize) -> u128 {
    let real = (k * anchor_count(c, k)) as u128;
    let distinct: u128 = (0..=k as u128).map(|j| binomial(real, j)).sum();
    c as u128 * distinct
}

fn binomial(n: u128, r: u128) -> u128 {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// A tuple over the anchor elements plus [`STAR`]: sorted, stars first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CollapsedTuple(Box<[Element]>);

impl CollapsedTuple {
    pub fn elements(&self) -> &[Element] {
        &self.0
    }

    pub fn stars(&self) -> usize {
        self.0.iter().take_while(|&&e| e == STAR).count()
    }

    pub fn real(&self) -> &[Element] {
        &self.0[self.stars()..]
    }

    pub fn contains(&self, e: Element) -> bool {
        self.0.contains(&e)
    }
}

/// Every tuple of an instance rewritten over the anchor alphabet, index-aligned
/// with the original.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapsedInstance {
    k: usize,
    anchors: Vec<usize>,
    core_alphabet: Vec<Element>,
    elements: Vec<Element>,
}

impl CollapsedInstance {
    pub fn len(&self) -> usize {
        self.elements.len() / self.k
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn tuple(&self, index: usize) -> &[Element] {
        &self.elements[index * self.k..(index + 1) * self.k]
    }

    pub fn anchors(&self) -> &[usize] {
        &self.anchors
    }

    /// Elements occurring in the anchors, sorted.
    pub fn core_alphabet(&self) -> &[Element] {
        &self.core_alphabet
    }
}

/// The constant-size instance the search runs on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    pub kernel: Vec<CollapsedTuple>,
    /// Original index of each kernel tuple.
    pub back_map: Vec<usize>,
    pub anchors: Vec<usize>,
    pub core_alphabet: Vec<Element>,
}

/// Merges every element outside the first `s` tuples into [`STAR`].
pub fn collapse_alphabet(ts: &TupleSet, c: u32) -> Result<CollapsedInstance> {
    if c == 0 {
        return Err(Error::ZeroColors);
    }
    let s = anchor_count(c, ts.k());
    if ts.len() < s {
        return Err(Error::TooFewTuples { n: ts.len(), s });
    }
    let mut in_core = vec![false; ts.m() + 1];
    for i in 0..s {
        for &e in ts.tuple(i) {
            in_core[e as usize] = true;
        }
    }
    let core_alphabet = (1..=ts.m() as Element).filter(|&e| in_core[e as usize]).collect();
    let mut elements = Vec::with_capacity(ts.len() * ts.k());
    for t in ts.iter() {
        let start = elements.len();
        elements.extend(t.iter().map(|&e| if in_core[e as usize] { e } else { STAR }));
        elements[start..].sort_unstable();
    }
    Ok(CollapsedInstance {
        k: ts.k(),
        anchors: (0..s).collect(),
        core_alphabet,
        elements,
    })
}

/// Keeps the first `c` copies (by index) of every distinct merged tuple.
pub fn dedup_capped(collapsed: &CollapsedInstance, c: u32) -> ReducedInstance {
    let mut seen: HashMap<&[Element], u32> = HashMap::new();
    let mut kernel = Vec::new();
    let mut back_map = Vec::new();
    for i in 0..collapsed.len() {
        let t = collapsed.tuple(i);
        let copies = seen.entry(t).or_insert(0);
        if *copies < c {
            *copies += 1;
            kernel.push(CollapsedTuple(t.into()));
            back_map.push(i);
        }
    }
    ReducedInstance {
        kernel,
        back_map,
        anchors: collapsed.anchors.clone(),
        core_alphabet: collapsed.core_alphabet.clone(),
    }
}

pub fn reduce(ts: &TupleSet, c: u32) -> Result<ReducedInstance> {
    collapse_alphabet(ts, c).map(|collapsed| dedup_capped(&collapsed, c))
}

/// A nice total c-coloring of `ts`, if one exists. Deterministic.
pub fn solve_general(ts: &TupleSet, c: u32) -> Result<Option<Coloring>> {
    if c == 0 {
        return Err(Error::ZeroColors);
    }
    let partial = if ts.len() < anchor_count(c, ts.k()) {
        match oracle_nice_coloring(ts, c, false, DEFAULT_BUDGET) {
            Err(Error::BudgetExceeded { .. }) => search_uncollapsed(ts, c)?,
            other => return other,
        }
    } else {
        let reduced = reduce(ts, c)?;
        let anchor_types: Vec<&[Element]> = reduced.anchors.iter().map(|&i| ts.tuple(i)).collect();
        let Some(classes) = KernelSearch::new(&reduced.kernel, anchor_types, c).run() else {
            return Ok(None);
        };
        let mut col = Coloring::uncolored(c, ts.len())?;
        for (kernel_index, color) in classes {
            col.set(reduced.back_map[kernel_index], Some(color));
        }
        Some(col)
    };
    Ok(partial.map(|mut col| {
        col.extend_uncolored(0);
        col
    }))
}

/// Kernel search directly on a small instance, every tuple a potential anchor.
fn search_uncollapsed(ts: &TupleSet, c: u32) -> Result<Option<Coloring>> {
    let kernel: Vec<CollapsedTuple> = ts.iter().map(|t| CollapsedTuple(t.into())).collect();
    let anchor_types: Vec<&[Element]> = ts.iter().collect();
    let Some(classes) = KernelSearch::new(&kernel, anchor_types, c).run() else {
        return Ok(None);
    };
    let mut col = Coloring::uncolored(c, ts.len())?;
    for (i, color) in classes {
        col.set(i, Some(color));
    }
    Ok(Some(col))
}

/// A nice partial c-coloring using every color at most `k + 1` times.
pub fn solve_partial_bounded(ts: &TupleSet, c: u32) -> Result<Option<Coloring>> {
    match solve_general(ts, c)? {
        Some(col) => partialize(ts, &col, &[]).map(Some),
        None => Ok(None),
    }
}

/// What a slot of the search needs from the kernel tuple assigned to it.
#[derive(Debug, Clone)]
enum Requirement {
    /// A copy of the given anchor tuple.
    Anchor(Vec<Element>),
    /// A tuple avoiding `open[0]` whose intersection with `open` is `keep`.
    Witness { open: Vec<Element>, keep: Vec<Element> },
}

impl Requirement {
    fn accepts(&self, t: &CollapsedTuple) -> bool {
        match self {
            Requirement::Anchor(a) => t.elements() == a.as_slice(),
            Requirement::Witness { open, keep } => open.iter().all(|&e| t.contains(e) == keep.contains(&e)),
        }
    }
}

/// Exact search for `c` disjoint classes, each a chain anchor, w1, w2, ... where
/// `w_j` avoids the smallest element common to all earlier chain members. A
/// class whose common elements run out is nice; chains have at most `k + 1`
/// members. Slot-to-tuple assignment is maintained as a bipartite matching so
/// that classes competing for scarce tuples are resolved exactly.
struct KernelSearch<'a> {
    kernel: &'a [CollapsedTuple],
    anchor_types: Vec<Vec<Element>>,
    c: u32,
    slots: Vec<(Requirement, Color)>,
    slot_tuple: Vec<usize>,
    owner: Vec<Option<usize>>,
}

impl<'a> KernelSearch<'a> {
    fn new(kernel: &'a [CollapsedTuple], anchors: Vec<&[Element]>, c: u32) -> Self {
        let mut anchor_types: Vec<Vec<Element>> = Vec::new();
        for a in anchors {
            if !anchor_types.iter().any(|t| t == a) {
                anchor_types.push(a.to_vec());
            }
        }
        KernelSearch {
            kernel,
            anchor_types,
            c,
            slots: Vec::new(),
            slot_tuple: Vec::new(),
            owner: vec![None; kernel.len()],
        }
    }

    /// `(kernel index, color)` for every tuple in a nice partial coloring.
    fn run(mut self) -> Option<Vec<(usize, Color)>> {
        if !self.start_class(0, 0) {
            return None;
        }
        Some(
            self.slot_tuple
                .iter()
                .zip(&self.slots)
                .map(|(&t, (_, color))| (t, *color))
                .collect(),
        )
    }

    // Classes take anchor types in non-decreasing order; colors are symmetric.
    fn start_class(&mut self, color: Color, first_anchor: usize) -> bool {
        if color == self.c {
            return true;
        }
        for pos in first_anchor..self.anchor_types.len() {
            let anchor = self.anchor_types[pos].clone();
            if !self.push(Requirement::Anchor(anchor.clone()), color) {
                continue;
            }
            if self.extend_class(color, anchor, pos) {
                return true;
            }
            self.pop();
        }
        false
    }

    fn extend_class(&mut self, color: Color, open: Vec<Element>, anchor_pos: usize) -> bool {
        let Some((&first, rest)) = open.split_first() else {
            return self.start_class(color + 1, anchor_pos);
        };
        debug_assert_ne!(first, STAR);
        // subsets of `rest` by size, smallest first
        let mut keeps: Vec<Vec<Element>> = (0u32..1 << rest.len())
            .map(|mask| {
                rest.iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect()
            })
            .collect();
        keeps.sort_by_key(Vec::len);
        for keep in keeps {
            let requirement = Requirement::Witness {
                open: open.clone(),
                keep: keep.clone(),
            };
            if !self.push(requirement, color) {
                continue;
            }
            if self.extend_class(color, keep, anchor_pos) {
                return true;
            }
            self.pop();
        }
        false
    }

    fn push(&mut self, requirement: Requirement, color: Color) -> bool {
        let slot = self.slots.len();
        self.slots.push((requirement, color));
        self.slot_tuple.push(usize::MAX);
        let mut visited = vec![false; self.kernel.len()];
        if self.augment(slot, &mut visited) {
            true
        } else {
            self.slots.pop();
            self.slot_tuple.pop();
            false
        }
    }

    fn pop(&mut self) {
        self.slots.pop();
        let t = self.slot_tuple.pop().expect("pop without push");
        self.owner[t] = None;
    }

    fn augment(&mut self, slot: usize, visited: &mut [bool]) -> bool {
        for t in 0..self.kernel.len() {
            if visited[t] || !self.slots[slot].0.accepts(&self.kernel[t]) {
                continue;
            }
            visited[t] = true;
            let free = match self.owner[t] {
                None => true,
                Some(other) => self.augment(other, visited),
            };
            if free {
                self.owner[t] = Some(slot);
                self.slot_tuple[slot] = t;
                return true;
            }
        }
        false
    }
}
