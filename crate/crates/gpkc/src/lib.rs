//! Batch tooling on top of `gpkc-core`: textual rendering of
//! classifications, the (n,k) census with CSV/JSON output, and the
//! classifier-versus-oracle verification report.

pub mod census;
pub mod render;
pub mod verify;

use gpkc_core::SearchConfig;

/// Environment variable that caps the oracle's vertex bound.
pub const MAX_VERTICES_VAR: &str = "GPKC_MAX_VERTICES";

/// Default search limits, with the vertex bound taken from
/// [`MAX_VERTICES_VAR`] when it is set to a number.
pub fn search_config_from_env() -> SearchConfig {
    let mut cfg = SearchConfig::default();
    if let Some(v) = std::env::var(MAX_VERTICES_VAR).ok().and_then(|s| s.trim().parse().ok()) {
        cfg.max_vertices = v;
    }
    cfg
}
