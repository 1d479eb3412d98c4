//! Benchmark harness for the vertex-weighted matching toolkit: graph file
//! parsing, seeded weight generation, synthetic graph generators, and the
//! experiment driver behind the `vwmatch` binary.

pub mod experiment;
pub mod generate;
pub mod io;
pub mod weightgen;
