//! Inputs shared by the benchmarks in `benches/`.

use webbasis::{GeneralTwoRowTableau, Matching};

/// `(1, n+1), (2, n+2), ..., (n, 2n)`: every pair of arcs crosses.
pub fn all_crossing(n: usize) -> Matching {
    let arcs: Vec<_> = (1..=n).map(|i| (i, i + n)).collect();
    Matching::from_arcs(2 * n, &arcs).unwrap()
}

/// Columns `(1, 2n), (2, 2n-1), ..., (n, n+1)`, the arcs of the fully nested
/// web. The bottom row is strictly decreasing.
pub fn nested_filling(n: usize) -> GeneralTwoRowTableau {
    let cols = (1..=n).map(|k| (k, 2 * n + 1 - k)).collect();
    GeneralTwoRowTableau::new(cols).unwrap()
}
