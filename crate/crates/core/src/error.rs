use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no facets given")]
    EmptyInput,
    #[error("facet {facet} has {found} vertices, expected {expected}")]
    NotPure {
        facet: usize,
        expected: usize,
        found: usize,
    },
    #[error("facet {facet} duplicates facet {first}")]
    DuplicateFacet { facet: usize, first: usize },
    #[error("facet {facet} repeats vertex `{token}`")]
    DuplicateVertexInFacet { facet: usize, token: String },
    #[error("zero-dimensional complexes are not supported")]
    ZeroDimensional,
    #[error("complex is not stacked")]
    NotStacked,
    #[error("walk step {step} does not cross a codimension-one face")]
    InvalidWalk { step: usize },
    #[error("path has a single facet, end vertices are undefined")]
    PathTooShort,
    #[error("faces are not separated: their union lies in a shared codimension-one face")]
    NotSeparated,
    #[error("vertex set is not a face of the complex")]
    NotAFace,
    #[error("vertex set is not a codimension-one face of the complex")]
    NotCodimOneFace,
    #[error("block {block} is not independent: vertices {a} and {b} share a facet")]
    NotIndependent { block: usize, a: usize, b: usize },
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("unknown token `{0}`")]
    UnknownToken(String),
    #[error("element `{0}` appears more than once")]
    Overlap(String),
    #[error("element `{0}` is not covered by any block")]
    MissingElement(String),
    #[error("{0}")]
    Syntax(String),
    #[error("argument out of supported range: {0}")]
    OutOfRange(String),
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Error {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }
}
