//! Finitely supported Mal'cev–Neumann series over finite rings.

pub mod elemset;
pub mod error;
pub mod group;
pub mod harness;
pub mod ideal;
pub mod props;
pub mod report;
pub mod ring;
pub mod series;

pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use group::{group_make, GroupElement, GroupSpec, OrderedGroup};
pub use report::PropertyReport;
pub use ring::{Elem, FiniteRing, RingAutomorphism, RingSpec};
pub use series::{Series, TwistSpec, TwistSystem};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/ideals.md")]
    mod ideals {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/properties.md")]
    mod properties {}
    #[doc = include_str!("../../../book/src/harness.md")]
    mod harness {}
}
