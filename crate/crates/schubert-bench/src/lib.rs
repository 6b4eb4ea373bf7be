//! Benchmark-only crate; see `benches/groups.rs`.
