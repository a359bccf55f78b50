//! The guide's chapters as doc modules, so every listing runs as a doctest.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/realizability.md")]
pub mod realizability {}

#[doc = include_str!("../../../book/src/classical.md")]
pub mod classical {}

#[doc = include_str!("../../../book/src/local.md")]
pub mod local {}

#[doc = include_str!("../../../book/src/algebraic.md")]
pub mod algebraic {}

#[doc = include_str!("../../../book/src/congruences.md")]
pub mod congruences {}

#[doc = include_str!("../../../book/src/survey.md")]
pub mod survey {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
