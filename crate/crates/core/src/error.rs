use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("words do not satisfy the overlap equation xw = wy")]
    NotOverlapping,

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("morphism is erasing (letter `{0}` has an empty image)")]
    Erasing(char),

    #[error("morphism is cyclic (all images are powers of one word); leftmost and rightmost conjugates exist only for acyclic morphisms")]
    Cyclic,

    #[error("morphism is not prolongable at letter `{0}`")]
    NotProlongable(char),

    #[error("morphism has no prolongable power (no letter a with φ^k(a) = a·w, w nonempty)")]
    NoProlongablePower,

    #[error("fixed point starting at `{letter}` is finite (length {length})")]
    FiniteFixedPoint { letter: char, length: usize },

    #[error("morphism is not primitive")]
    NotPrimitive,

    #[error("morphism is not marked")]
    NotMarked,

    #[error("morphism is not well-marked")]
    NotWellMarked,

    #[error("mirror equation reverse(φ_R(u)·w) = φ_R(v)·w does not hold")]
    MirrorHypothesis,

    #[error("conjugate word is not a palindrome")]
    ConjugateWordNotPalindrome,

    #[error("image of `{letter}` has length {image_len}, longer than the conjugate word ({word_len})")]
    ImageLongerThanConjugateWord {
        letter: char,
        image_len: usize,
        word_len: usize,
    },

    #[error("no chain of right shifts links the morphism to a right conjugate with the given word")]
    NoShiftChain,

    #[error("constructed conjugate failed the class P check")]
    WitnessNotInClassP,

    #[error("requested length {requested} exceeds the supported bound {max}")]
    LengthOverflow { requested: usize, max: usize },

    #[error("word occurs {0} time(s) in the analysed prefix; at least two occurrences are needed")]
    TooFewOccurrences(usize),

    #[error("source word is periodic")]
    PeriodicSource,

    #[error("word is not a factor of the analysed prefix")]
    NotAFactor,

    #[error("morphism power would produce {0} letters; refusing to materialise it")]
    PowerTooLarge(usize),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("symbol `{symbol}` used in the image of `{head}` has no rule")]
    UnknownSymbol { symbol: char, head: char },

    #[error("duplicate rule for `{0}`")]
    DuplicateHead(char),
}
