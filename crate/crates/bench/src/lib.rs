//! Fixtures shared by the benchmarks.

use kiss4d_core::{CatalogId, Configuration, SearchParams};

/// Every catalog entry, built once.
pub fn catalog() -> Vec<(CatalogId, Configuration)> {
    CatalogId::ALL
        .into_iter()
        .map(|id| (id, id.build()))
        .collect()
}

/// A small search that finishes in milliseconds.
pub fn quick_search(points: usize) -> SearchParams {
    SearchParams {
        restarts: 2,
        hops: 2,
        descent_steps: 300,
        maximin_refine_steps: 300,
        ..SearchParams::with_points(points)
    }
}
