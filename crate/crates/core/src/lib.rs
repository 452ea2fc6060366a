//! Cops and robber with a radius of capture: exact solver, graph families,
//! products, outerplanar embeddings, codecs, and executable checks of the
//! structural results about rc.

pub mod error;
pub mod game;
pub mod generators;
pub mod graph;
pub mod io;
pub mod outerplanar;
pub mod products;
pub mod results;
pub mod suites;
pub mod theory;

pub use error::{EmbeddingError, GameError, GraphError, ParseError, RecordError, RetractionError};
pub use game::{radius_capture_number, solve_cwrc, Game, SearchMode, Strategy, WinAnalysis};
pub use graph::{DistanceMatrix, Graph};
