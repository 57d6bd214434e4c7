use thiserror::Error;

use crate::graph::MAX_ORDER;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {order} is outside the supported range {min}..={max}")]
    OrderOutOfRange { order: usize, min: usize, max: usize },
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,
    #[error("operation requires a connected graph")]
    DisconnectedGraph,
    #[error("landmark set must not be empty")]
    EmptyLandmarkSet,
    #[error("landmark {0} listed more than once")]
    DuplicateLandmark(usize),
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("scope too large: {0}")]
    ScopeTooLarge(String),
    #[error("invalid census record: {0}")]
    InvalidRecord(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    pub(crate) fn order(order: usize) -> Self {
        Error::OrderOutOfRange {
            order,
            min: 0,
            max: MAX_ORDER,
        }
    }
}

pub(crate) fn order_range(order: usize, min: usize, max: usize) -> Result<()> {
    if (min..=max).contains(&order) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange { order, min, max })
    }
}
