//! Exact-arithmetic toolkit for deciding when an algebra endomorphism lifts
//! along a square-zero extension of the coefficients.
//!
//! Given a finite-dimensional algebra `A` over a field `k`, a flat lift of
//! `A` over a truncation ring `R` (`Z/p²` or `k[t]/(t²)`), and an
//! endomorphism `f` of `A`, the failure of any `R`-linear lift of `f` to be
//! multiplicative is measured by a 2-cocycle with values in `A` twisted by
//! `f` on both sides. The endomorphism lifts multiplicatively exactly when
//! that cocycle is a coboundary, and the crate both decides this by an exact
//! linear solve and produces the corrected lift or an independently
//! checkable obstruction certificate.
//!
//! On the center of `A`, the lift induces a Poisson bracket and the
//! antisymmetrization of the restricted cocycle computes exactly the failure
//! of `f` to preserve it. For algebras that are separable over their center
//! — matrix algebras, products of such, and symbolic Weyl algebras in
//! characteristic `p` — this turns the lifting question into a bracket
//! computation, which the [`weyl`] module carries out on sparse
//! normal-ordered elements.
//!
//! See the `book/` directory of the repository for a guided tour.

pub mod algebra;
pub mod azumaya;
pub mod coeff;
pub mod error;
pub mod families;
pub mod hochschild;
pub mod json;
pub mod lift;
pub mod linalg;
pub mod selftest;
pub mod weyl;

pub use error::{Error, Result};

// Every code block in the book is a doctest, so `cargo test --doc` keeps
// the guide in sync with the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/coefficients.md")]
    mod coefficients {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/hochschild.md")]
    mod hochschild {}
    #[doc = include_str!("../../../book/src/lifting.md")]
    mod lifting {}
    #[doc = include_str!("../../../book/src/center-and-symmetry.md")]
    mod center_and_symmetry {}
    #[doc = include_str!("../../../book/src/azumaya.md")]
    mod azumaya {}
    #[doc = include_str!("../../../book/src/weyl.md")]
    mod weyl {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
