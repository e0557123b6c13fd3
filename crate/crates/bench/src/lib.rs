//! Criterion benchmarks for bellforge; see `benches/`.
