//! Criterion benchmarks for `broomkit-core`; see `benches/`.
