use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("empty family")]
    EmptyFamily,
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("degenerate strip pair")]
    DegenerateStripPair,
    #[error("invalid strip: {0}")]
    InvalidStrip(&'static str),
    #[error("no planar hexagon exists for a degenerate polygon")]
    NoPlanarHexagon,
    #[error("edge index {index} out of range (polygon has {half} antipodal edge pairs)")]
    EdgeIndex { index: usize, half: usize },
    #[error("figure is not centrally symmetric")]
    NotSymmetric,
    #[error("certificate requires acute triangle")]
    NotAcute,
    #[error("cover fails to contain the rotated figure at angle {angle} rad")]
    RotationContainment { angle: f64 },
    #[error("point ({x}, {y}) is not on the arc of polar angles [0, pi/3)")]
    PointOffArc { x: f64, y: f64 },
    #[error("width and chord checks disagree on segment {index} (width: {by_width}, chord: {by_chord})")]
    MethodDisagreement {
        index: usize,
        by_width: bool,
        by_chord: bool,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
