//! Size guards for the exponential-cost operations.
//!
//! Every guard can be overridden through the `CAYGEN_MAX_VERTICES`
//! environment variable, which is read on each query so that callers inherit
//! whatever the launching process configured.

use std::env;

/// Environment variable overriding the vertex limits below.
pub const MAX_VERTICES_ENV: &str = "CAYGEN_MAX_VERTICES";

/// Default vertex bound for automorphism and isomorphism searches.
pub const DEFAULT_SEARCH_VERTEX_LIMIT: usize = 1000;

/// Returns the vertex limit: the environment override if set and parseable,
/// otherwise `default`.
pub fn vertex_limit(default: usize) -> usize {
    match env::var(MAX_VERTICES_ENV) {
        Ok(v) => v.trim().parse().unwrap_or(default),
        Err(_) => default,
    }
}

/// Vertex bound applied by the automorphism/isomorphism search.
pub fn search_vertex_limit() -> usize {
    vertex_limit(DEFAULT_SEARCH_VERTEX_LIMIT)
}
