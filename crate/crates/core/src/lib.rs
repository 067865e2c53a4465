//! Spectral analysis of weighted and signed graphs.
//!
//! The crate builds graph Laplacians, computes minimal-energy spectral
//! drawings and partitions graphs by normalized cuts, signed normalized
//! cuts and ratio cuts. All linear algebra runs on dense matrices through
//! the Jacobi solvers in [`eigen`].
//!
//! Node indices are 0-based in the API. Error messages and the text
//! formats of the command-line tool are 1-based.
//!
//! ```
//! use speclap::{gallery, kway};
//!
//! let g = gallery::w1();
//! let result = kway::cluster(&g, 4, kway::Mode::Ncut, &Default::default()).unwrap();
//! assert_eq!(result.partition.k(), 4);
//! ```

pub mod drawing;
pub mod eigen;
pub mod error;
pub mod gallery;
pub mod graph;
pub mod kway;
pub mod laplacian;
pub mod ncut2;

pub use error::{Error, Result};
pub use graph::{Graph, NodeSubset, SignFilter};
