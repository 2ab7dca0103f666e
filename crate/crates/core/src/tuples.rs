//! Instances: multisets of k-tuples over a normalized alphabet `[m]`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Element identifier in `[1, m]`. Zero is never a valid element of a
/// [`TupleSet`]; the general solver reuses it for the merged dummy element.
pub type Element = u32;

/// A set of `k` distinct elements, stored in strictly increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KTuple(Vec<Element>);

impl KTuple {
    pub fn new(elements: impl Into<Vec<Element>>) -> Result<Self> {
        let mut elements = elements.into();
        if elements.is_empty() {
            return Err(Error::ZeroTupleSize);
        }
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedElementInTuple {
                index: 0,
                token: w[0].to_string(),
            });
        }
        if elements[0] == 0 {
            return Err(Error::ElementOutOfRange { element: 0, m: 0 });
        }
        Ok(KTuple(elements))
    }

    pub fn elements(&self) -> &[Element] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: Element) -> bool {
        self.0.binary_search(&e).is_ok()
    }
}

impl fmt::Display for KTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_elements(f, &self.0)
    }
}

fn write_elements(f: &mut fmt::Formatter<'_>, elements: &[Element]) -> fmt::Result {
    write!(f, "{{")?;
    for (i, e) in elements.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{e}")?;
    }
    write!(f, "}}")
}

/// A multiset of `n` k-tuples. Tuples are addressed by index; duplicates are
/// distinct members.
///
/// Storage is one flat buffer of `n * k` elements, each tuple sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TupleSet {
    k: usize,
    m: usize,
    elements: Vec<Element>,
}

impl TupleSet {
    /// Builds an instance over the alphabet `[m]`. Elements of `[m]` that occur
    /// in no tuple are allowed; [`normalize`] never produces them.
    pub fn new(k: usize, m: usize, tuples: impl IntoIterator<Item = KTuple>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroTupleSize);
        }
        let mut elements = Vec::new();
        for (index, t) in tuples.into_iter().enumerate() {
            if t.len() != k {
                return Err(Error::NonUniformTupleSize {
                    index,
                    expected: k,
                    found: t.len(),
                });
            }
            if let Some(&e) = t.elements().last().filter(|&&e| e as usize > m) {
                return Err(Error::ElementOutOfRange { element: e, m });
            }
            elements.extend_from_slice(t.elements());
        }
        Ok(TupleSet { k, m, elements })
    }

    /// Convenience constructor from plain rows; `m` is the largest element.
    pub fn from_rows<R: AsRef<[Element]>>(rows: &[R]) -> Result<Self> {
        let k = rows.first().map_or(0, |r| r.as_ref().len());
        let m = rows.iter().flat_map(|r| r.as_ref().iter().copied()).max().unwrap_or(0) as usize;
        let tuples = rows
            .iter()
            .enumerate()
            .map(|(index, r)| {
                KTuple::new(r.as_ref().to_vec()).map_err(|e| match e {
                    Error::RepeatedElementInTuple { token, .. } => Error::RepeatedElementInTuple { index, token },
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        TupleSet::new(k, m, tuples)
    }

    pub(crate) fn from_flat(k: usize, m: usize, elements: Vec<Element>) -> Self {
        debug_assert!(k > 0 && elements.len().is_multiple_of(k));
        TupleSet { k, m, elements }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Alphabet size.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of tuples.
    pub fn len(&self) -> usize {
        self.elements.len() / self.k
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn tuple(&self, index: usize) -> &[Element] {
        &self.elements[index * self.k..(index + 1) * self.k]
    }

    pub fn iter(&self) -> std::slice::ChunksExact<'_, Element> {
        self.elements.chunks_exact(self.k)
    }

    /// The sub-multiset at `indices`, over the same alphabet.
    pub fn subset(&self, indices: &[usize]) -> TupleSet {
        let mut elements = Vec::with_capacity(indices.len() * self.k);
        for &i in indices {
            elements.extend_from_slice(self.tuple(i));
        }
        TupleSet::from_flat(self.k, self.m, elements)
    }

    pub fn to_rows(&self) -> Vec<Vec<Element>> {
        self.iter().map(<[Element]>::to_vec).collect()
    }
}

impl fmt::Display for TupleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write_elements(f, t)?;
        }
        Ok(())
    }
}

/// Bijection between raw tokens and normalized element ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    tokens: Vec<String>,
    ids: HashMap<String, Element>,
}

impl Alphabet {
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn token(&self, e: Element) -> &str {
        &self.tokens[e as usize - 1]
    }

    pub fn id(&self, token: &str) -> Option<Element> {
        self.ids.get(token).copied()
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    fn intern(&mut self, token: &str) -> Element {
        if let Some(&id) = self.ids.get(token) {
            return id;
        }
        self.tokens.push(token.to_owned());
        let id = self.tokens.len() as Element;
        self.ids.insert(token.to_owned(), id);
        id
    }

    /// Identity alphabet `1..=m` rendered as decimal tokens.
    pub fn numeric(m: usize) -> Self {
        let mut a = Alphabet::default();
        for e in 1..=m {
            a.intern(&e.to_string());
        }
        a
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct NormalizeOptions {
    /// Accept zero tuples instead of failing with [`Error::EmptyInput`].
    pub allow_empty: bool,
    /// Required tuple size; inferred from the first tuple when absent.
    pub k: Option<usize>,
}

/// Relabels raw tokens to `[m]` in first-occurrence order (tuples scanned in
/// order, tokens left to right).
pub fn normalize<T: AsRef<str>>(raw: &[Vec<T>]) -> Result<(TupleSet, Alphabet)> {
    normalize_with(raw, NormalizeOptions::default())
}

pub fn normalize_with<T: AsRef<str>>(raw: &[Vec<T>], options: NormalizeOptions) -> Result<(TupleSet, Alphabet)> {
    let k = match (options.k, raw.first()) {
        (Some(k), _) => k,
        (None, Some(first)) => first.len(),
        (None, None) if options.allow_empty => 1,
        (None, None) => return Err(Error::EmptyInput),
    };
    if raw.is_empty() && !options.allow_empty {
        return Err(Error::EmptyInput);
    }
    if k == 0 {
        return Err(Error::ZeroTupleSize);
    }
    let mut alphabet = Alphabet::default();
    let mut elements = Vec::with_capacity(raw.len() * k);
    for (index, row) in raw.iter().enumerate() {
        if row.len() != k {
            return Err(Error::NonUniformTupleSize {
                index,
                expected: k,
                found: row.len(),
            });
        }
        let start = elements.len();
        for token in row {
            elements.push(alphabet.intern(token.as_ref()));
        }
        let tuple = &mut elements[start..];
        tuple.sort_unstable();
        if let Some(w) = tuple.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedElementInTuple {
                index,
                token: alphabet.token(w[0]).to_owned(),
            });
        }
    }
    Ok((TupleSet::from_flat(k, alphabet.len(), elements), alphabet))
}

/// Relabels an instance to first-occurrence order, dropping elements that
/// occur nowhere. Two instances are equivalent iff their canonical forms
/// agree after also sorting tuples.
pub fn relabel_first_occurrence(ts: &TupleSet) -> TupleSet {
    let mut map = vec![0 as Element; ts.m() + 1];
    let mut next = 0;
    let mut elements = Vec::with_capacity(ts.elements.len());
    for t in ts.iter() {
        let start = elements.len();
        for &e in t {
            if map[e as usize] == 0 {
                next += 1;
                map[e as usize] = next;
            }
            elements.push(map[e as usize]);
        }
        elements[start..].sort_unstable();
    }
    TupleSet::from_flat(ts.k(), next as usize, elements)
}
