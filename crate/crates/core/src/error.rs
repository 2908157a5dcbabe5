use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {elem} is outside 1..={n}")]
    OutOfRange { elem: usize, n: usize },

    #[error("ambient size {n} exceeds the supported maximum {max}")]
    TooLarge { n: usize, max: usize },

    #[error("cc(J) is undefined for the empty set")]
    EmptyCyclicComposition,

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid skew shape: {0}")]
    InvalidShape(String),

    #[error("letters repeat in word {0:?}")]
    RepeatedLetter(Vec<u32>),

    #[error("words share letters and cannot be shuffled")]
    OverlappingSupports,

    #[error("cyclic shuffles need two nonempty words")]
    EmptyWord,

    #[error("no permutation of length {n} has cyclic descent set {set}")]
    Unrealizable { n: usize, set: String },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    #[error("function is not symmetric")]
    NotSymmetric,

    #[error("function is not cyclic quasi-symmetric: M{left:?} has coefficient {left_coeff}, M{right:?} has {right_coeff}")]
    NotCyclic {
        left: Vec<usize>,
        left_coeff: String,
        right: Vec<usize>,
        right_coeff: String,
    },

    #[error("graph has a directed cycle")]
    Cyclic,

    #[error("arc ({0}, {1}) uses an unknown vertex")]
    UnknownVertex(u32, u32),

    #[error("vertex {0} is neither a source nor a sink")]
    NotSourceOrSink(u32),

    #[error("toric class exceeds the size cap {0}")]
    ClassTooLarge(usize),

    #[error("shape {0} is a connected ribbon")]
    ConnectedRibbon(String),

    #[error("argument out of range: {0}")]
    OutOfBounds(String),

    #[error("word {0:?} is not in the required shuffle set")]
    NotInShuffleSet(Vec<u32>),

    #[error("not enough permutations with cyclic descent set {0}")]
    InsufficientPermutations(String),

    #[error("coefficient depends on the chosen permutation: {0}")]
    NotWellDefined(String),

    #[error("class {0} is Escher (empty or full) and has no permutations")]
    EscherClass(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
