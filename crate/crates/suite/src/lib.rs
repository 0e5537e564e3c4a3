//! End-to-end acceptance tests; see `tests/acceptance.rs`.
