//! Criterion benchmarks for `unsharp-core`; see `benches/`.
