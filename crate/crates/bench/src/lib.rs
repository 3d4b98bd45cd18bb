//! Benchmark-only crate; see `benches/kernels.rs`.
//!
//! The interesting costs live in big-integer series convolution (building
//! Delta and f), prime point-counting sweeps, and exact tower-field
//! inversion. Run with `cargo bench -p mf4-bench`.
