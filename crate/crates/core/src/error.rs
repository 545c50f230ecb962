use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{} is not unit-norm (norm deviates from 1 by {deviation:.3e})", point_label(*.index))]
    NotUnitNorm {
        index: Option<usize>,
        deviation: f64,
    },

    #[error("fiber offset is undefined for antipodal circles")]
    UndefinedOffset,

    #[error("{name} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),

    #[error("point {0} projects within grouping tolerance of more than one circle")]
    GroupingAmbiguity(usize),

    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("rotation did not give a stable grouping across seeds")]
    NonGenericRotation,

    #[error("configuration is not kissing (min distance {min_distance})")]
    NotKissing { min_distance: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("graph enumeration limited to at most 8 vertices, got {0}")]
    TooManyVertices(usize),

    #[error("{pairs}x2+{singles}x1 has {} points, more than the kissing number 24", 2 * pairs + singles)]
    ExceedsKissingNumber { pairs: usize, singles: usize },

    #[error("search failed: {0}")]
    Search(String),
}

fn point_label(index: Option<usize>) -> String {
    match index {
        Some(i) => format!("point {i}"),
        None => "point".to_owned(),
    }
}
