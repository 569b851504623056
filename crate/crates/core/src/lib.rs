//! Monochromatic d-dominating covers of 2-colored complete digraphs with
//! loops, the paradoxical-tournament constructions behind the matching lower
//! bounds, and exhaustive oracles that check both on small instances.
//!
//! ```
//! use domcover::colored::ColoredCompleteDigraph;
//! use domcover::cover::{cover, verify_cover};
//!
//! let k = ColoredCompleteDigraph::random(12, 0.5, 7);
//! let cert = cover(&k, 2).unwrap();
//! assert!(cert.parts.len() <= 8);
//! assert!(verify_cover(&k, &cert, 2).is_ok());
//! ```
//!
//! The guide under `book/` walks through each module; its code listings are
//! compiled and run as doctests of this crate.

mod bits;
pub mod cli;
pub mod colored;
pub mod cover;
pub mod digraph;
pub mod error;
pub mod oracle;
pub mod paradox;

pub use colored::{Color, ColoredCompleteDigraph, UndirectedGraph};
pub use cover::{CoverCertificate, CoverPart};
pub use digraph::{Digraph, DominationCertificate, Tournament};
pub use error::{Error, Result};

// Every chapter of the guide is pulled in here so `cargo test --doc` runs its
// listings against the current API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/domination.md")]
    mod domination {}
    #[doc = include_str!("../../../book/src/colorings.md")]
    mod colorings {}
    #[doc = include_str!("../../../book/src/covering.md")]
    mod covering {}
    #[doc = include_str!("../../../book/src/tournaments.md")]
    mod tournaments {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
