//! Benchmarks for flopcalc live in `benches/`.
