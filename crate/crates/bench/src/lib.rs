//! Criterion benchmarks for `bbw-core`; see `benches/`.
