use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },
    #[error("letter {letter} out of range for {strands} strands")]
    LetterRange { letter: u32, strands: u32 },
    #[error("exponent sequence {0} is not normal")]
    NotNormal(String),
    #[error("operation undefined on the trivial braid")]
    Trivial,
    #[error("word too long to materialize ({0} letters)")]
    TooLong(String),
    #[error("budget exhausted: {0}")]
    Exhausted(String),
    #[error("cap exceeded: {0}")]
    Cap(String),
    #[error("position {chosen} not permitted; permitted positions are {permitted:?}")]
    NotPermitted { chosen: usize, permitted: Vec<usize> },
    #[error("not a special braid: violation at letter {position}")]
    NotSpecial { position: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("index {index} out of range (size {size})")]
    IndexRange { index: String, size: usize },
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
