//! The book, compiled.
//!
//! Each chapter of the mdbook guide under `book/` is included here as a doc
//! module, so `cargo test --doc` runs every code block in the book and the
//! prose can never drift from the API. One module per chapter keeps a
//! failing doc-test attributable to its source file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/lattices.md")]
pub mod lattices {}

#[doc = include_str!("../../../book/src/pearson.md")]
pub mod pearson_forward {}

#[doc = include_str!("../../../book/src/detection.md")]
pub mod detection {}

#[doc = include_str!("../../../book/src/para-krawtchouk.md")]
pub mod para_krawtchouk_study {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
