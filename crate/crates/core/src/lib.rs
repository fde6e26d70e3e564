//! Hamiltonian chromatic numbers of trees.
//!
//! A hamiltonian coloring of a tree `T` on `n` vertices assigns non-negative
//! integers so that `D(u,v) + |h(u) − h(v)| ≥ n − 1` for every pair, where
//! `D` is the detour (longest path) distance; in a tree that is the ordinary
//! distance. `hc(T)` is the minimum span over all such colorings.
//!
//! - [`tree`] and [`rooted`]: trees, weight centers, detour levels.
//! - [`bounds`]: the weight-center and graph-center lower bounds.
//! - [`ordering`]: certifying orderings and the colorings they induce.
//! - [`families`]: stars, brooms, `A_d` trees, caterpillars.
//! - [`solver`]: verification and exact search for small trees.
//! - [`corpus`]: exhaustive non-isomorphic tree corpora.

pub mod bounds;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod families;
pub mod io;
pub mod ordering;
pub mod par;
pub mod rooted;
pub mod solver;
pub mod tree;

pub use error::{Error, Result};
pub use ordering::{Coloring, Ordering};
pub use rooted::{analyze, RootedView};
pub use tree::{Tree, Vertex};
