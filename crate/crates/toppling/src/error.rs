use core::fmt;

/// Every failure the library can report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    LoopEdge(usize),
    Disconnected,
    BadVertex(usize),
    EmptyGraph,
    ZeroMultiplicity(usize, usize),
    TooManyVertices(usize),
    EmptySet,
    Overlap,
    NegativeOffQ(usize),
    MissingQ,
    NotIncreasing(usize),
    LastNotV,
    /// Part `U_{i+1} \ U_i` is disconnected (1-based part index).
    PartDisconnected(usize),
    /// Prefix `U_i` is disconnected (1-based).
    PrefixDisconnected(usize),
    LengthMismatch,
    BadK(usize),
    TooShort,
    TailMismatch,
    BadPartIndex(usize),
    NotMinimalRep,
    NotMergedFrom,
    NotAFlag,
    LeadingTermMismatch,
    CompositionNonzero { k: usize, row: usize, col: usize },
    UnitEntry { k: usize, row: usize, col: usize },
    IdentityViolation { degree: usize },
    NotGroebner,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Error::*;
        match self {
            LoopEdge(v) => write!(f, "loop at vertex {}", v + 1),
            Disconnected => f.write_str("graph is disconnected"),
            BadVertex(v) => write!(f, "vertex index {} out of range", v + 1),
            EmptyGraph => f.write_str("graph has no vertices"),
            ZeroMultiplicity(u, v) => write!(f, "edge {}-{} has multiplicity 0", u + 1, v + 1),
            TooManyVertices(n) => write!(f, "{} vertices exceeds the supported maximum", n),
            EmptySet => f.write_str("empty vertex set"),
            Overlap => f.write_str("vertex sets overlap"),
            NegativeOffQ(v) => write!(f, "negative value at non-distinguished vertex {}", v + 1),
            MissingQ => f.write_str("first set of the flag does not contain q"),
            NotIncreasing(i) => write!(f, "flag is not strictly increasing at position {}", i),
            LastNotV => f.write_str("last set of the flag is not the whole vertex set"),
            PartDisconnected(i) => write!(f, "part {} of the flag is disconnected", i),
            PrefixDisconnected(i) => write!(f, "set {} of the flag is disconnected", i),
            LengthMismatch => f.write_str("flags have different lengths"),
            BadK(k) => write!(f, "flag length {} out of range", k),
            TooShort => f.write_str("flag too short for this operation"),
            TailMismatch => f.write_str("flags differ beyond the first set"),
            BadPartIndex(j) => write!(f, "part index {} out of range", j),
            NotMinimalRep => f.write_str("flag is not the minimal representative of its class"),
            NotMergedFrom => f.write_str("flag is not a merge of the given flag"),
            NotAFlag => f.write_str("pulled back chain is not a connected flag"),
            LeadingTermMismatch => f.write_str("leading term differs from the predicted one"),
            CompositionNonzero { k, row, col } => {
                write!(f, "phi_{} * phi_{} nonzero at ({}, {})", k, k + 1, row, col)
            }
            UnitEntry { k, row, col } => write!(f, "unit entry in phi_{} at ({}, {})", k, row, col),
            IdentityViolation { degree } => {
                write!(f, "Hilbert series identity fails at degree {}", degree)
            }
            NotGroebner => f.write_str("an S-pair does not reduce to zero"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
