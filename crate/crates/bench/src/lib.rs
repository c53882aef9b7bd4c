//! Criterion benchmarks for the omega-core kernels; see `benches/kernels.rs`.
