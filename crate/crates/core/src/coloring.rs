//! Colorings of tuple multisets and the niceness predicate.

use crate::error::{Error, Result};
use crate::tuples::TupleSet;

pub type Color = u32;

/// A total or partial assignment of colors `0..c` to tuple indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    c: u32,
    assignment: Vec<Option<Color>>,
}

impl Coloring {
    pub fn new(c: u32, assignment: Vec<Option<Color>>) -> Result<Self> {
        if c == 0 {
            return Err(Error::ZeroColors);
        }
        if let Some(&color) = assignment.iter().flatten().find(|&&color| color >= c) {
            return Err(Error::ColorOutOfRange { color, c });
        }
        Ok(Coloring { c, assignment })
    }

    pub fn total(c: u32, colors: impl IntoIterator<Item = Color>) -> Result<Self> {
        Coloring::new(c, colors.into_iter().map(Some).collect())
    }

    pub fn uncolored(c: u32, n: usize) -> Result<Self> {
        Coloring::new(c, vec![None; n])
    }

    pub fn colors(&self) -> u32 {
        self.c
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<Color> {
        self.assignment[index]
    }

    pub fn set(&mut self, index: usize, color: Option<Color>) {
        assert!(color.is_none_or(|c| c < self.c), "color out of range");
        self.assignment[index] = color;
    }

    pub fn assignment(&self) -> &[Option<Color>] {
        &self.assignment
    }

    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    /// Number of tuples carrying each color.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.c as usize];
        for &color in self.assignment.iter().flatten() {
            sizes[color as usize] += 1;
        }
        sizes
    }

    pub fn class(&self, color: Color) -> Vec<usize> {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, &a)| a == Some(color))
            .map(|(i, _)| i)
            .collect()
    }

    /// Colors every uncolored tuple with `color`.
    pub fn extend_uncolored(&mut self, color: Color) {
        assert!(color < self.c);
        for a in self.assignment.iter_mut().filter(|a| a.is_none()) {
            *a = Some(color);
        }
    }

    /// True iff every colored tuple of `self` has the same color in `other`.
    pub fn is_restriction_of(&self, other: &Coloring) -> bool {
        self.len() == other.len()
            && self
                .assignment
                .iter()
                .zip(&other.assignment)
                .all(|(a, b)| a.is_none() || a == b)
    }
}

/// Whether for every color and every element of `[m]` some tuple of that color
/// avoids the element. A color with no tuples is never nice.
///
/// Runs in O(n k^2): elements outside the first tuple of a class are avoided by
/// that tuple, so only its `k` elements need a witness.
pub fn is_nice(ts: &TupleSet, col: &Coloring) -> bool {
    if col.len() != ts.len() {
        return false;
    }
    let c = col.colors() as usize;
    let k = ts.k();
    let mut first = vec![usize::MAX; c];
    for (i, color) in col.assignment().iter().enumerate() {
        if let Some(color) = *color {
            if first[color as usize] == usize::MAX {
                first[color as usize] = i;
            }
        }
    }
    if first.contains(&usize::MAX) {
        return false;
    }
    // witnessed[color * k + j]: element j of the class's first tuple is avoided
    let mut witnessed = vec![false; c * k];
    let mut missing = c * k;
    for (i, color) in col.assignment().iter().enumerate() {
        let Some(color) = *color else { continue };
        let color = color as usize;
        let tuple = ts.tuple(i);
        for (j, e) in ts.tuple(first[color]).iter().enumerate() {
            let slot = &mut witnessed[color * k + j];
            if !*slot && !tuple.contains(e) {
                *slot = true;
                missing -= 1;
            }
        }
        if missing == 0 {
            return true;
        }
    }
    missing == 0
}

/// Shrinks a nice coloring to a nice partial coloring with at most `k + 1`
/// tuples per color, keeping each pinned tuple colored.
///
/// Per color: keep the pinned tuple (or the first tuple of the class), then for
/// each of its elements the first same-colored tuple avoiding it.
pub fn partialize(ts: &TupleSet, col: &Coloring, pinned: &[usize]) -> Result<Coloring> {
    if col.len() != ts.len() {
        return Err(Error::ColoringLengthMismatch {
            expected: ts.len(),
            found: col.len(),
        });
    }
    let c = col.colors() as usize;
    let mut seed = vec![None; c];
    for &index in pinned {
        if index >= ts.len() {
            return Err(Error::IndexOutOfRange { index, n: ts.len() });
        }
        match col.get(index) {
            Some(color) if seed[color as usize].is_none() => seed[color as usize] = Some(index),
            _ => return Err(Error::PinnedColorClash { index }),
        }
    }
    if !is_nice(ts, col) {
        return Err(Error::NotNice);
    }
    for (color, slot) in seed.iter_mut().enumerate() {
        if slot.is_none() {
            *slot = col.assignment().iter().position(|&a| a == Some(color as Color));
        }
    }
    let seed: Vec<usize> = seed
        .into_iter()
        .map(|s| s.expect("nice coloring uses every color"))
        .collect();

    let k = ts.k();
    let mut keep = vec![None; ts.len()];
    let mut open = vec![true; c * k];
    for (color, &s) in seed.iter().enumerate() {
        keep[s] = Some(color as Color);
    }
    for (i, a) in col.assignment().iter().enumerate() {
        let Some(color) = *a else { continue };
        let tuple = ts.tuple(i);
        for (j, e) in ts.tuple(seed[color as usize]).iter().enumerate() {
            let slot = &mut open[color as usize * k + j];
            if *slot && !tuple.contains(e) {
                *slot = false;
                keep[i] = Some(color);
            }
        }
    }
    Coloring::new(col.colors(), keep)
}
