//! Criterion benchmarks for the axiom checkers live in `benches/`.
