//! Nice colorings of multisets of k-tuples.
//!
//! A (partial) c-coloring of a multiset of k-tuples over `[m]` is *nice* when
//! every color class contains, for every element `i`, a tuple avoiding `i`.
//! The crate decides and constructs such colorings in linear time, translates
//! them to polychromatic colorings of hypergraphs, and uses them to split
//! tournament teams into groups of three and four.

pub mod coloring;
pub mod error;
pub mod format;
pub mod general;
pub mod generate;
pub mod hypergraph;
pub mod oracle;
pub mod predicates;
pub mod scheduler;
pub mod triple2;
pub mod tuples;

pub use coloring::{is_nice, partialize, Color, Coloring};
pub use error::{Error, Result};
pub use general::{solve_general, solve_partial_bounded};
pub use hypergraph::{from_hypergraph, to_hypergraph, MultiHypergraph, VertexColoring};
pub use oracle::oracle_nice_coloring;
pub use predicates::{is_c_fair, is_special};
pub use triple2::{color_2_triples, decide_2colorable_triples};
pub use tuples::{normalize, Alphabet, Element, KTuple, TupleSet};

/// Decides and constructs a nice c-coloring, dispatching triples with two
/// colors to the characterization-based solver.
///
/// ```
/// use nicecolor::{is_nice, solve, TupleSet};
///
/// let ts = TupleSet::from_rows(&[[1, 2, 3], [4, 5, 6], [7, 8, 9], [1, 5, 9], [2, 6, 7], [3, 4, 8]])?;
/// let coloring = solve(&ts, 2)?.expect("colorable");
/// assert!(is_nice(&ts, &coloring));
/// # Ok::<(), nicecolor::Error>(())
/// ```
pub fn solve(ts: &TupleSet, c: u32) -> Result<Option<Coloring>> {
    if c == 2 && ts.k() == 3 {
        color_2_triples(ts)
    } else {
        solve_general(ts, c)
    }
}
