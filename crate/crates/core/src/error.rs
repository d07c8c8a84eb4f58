use thiserror::Error;

use crate::kernel::KernelVerdict;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate arc or edge ({0}, {1})")]
    Duplicate(usize, usize),

    #[error("vertices {0} and {1} are not adjacent, so the set is not a clique")]
    NotAClique(usize, usize),

    #[error("graph is not chordal: induced hole {hole:?}")]
    NotChordal { hole: Vec<usize> },

    #[error("not clique-acyclic: directed cycle of one-way arcs {cycle:?}")]
    NotCliqueAcyclic { cycle: Vec<usize> },

    #[error("edge {{{0}, {1}}} is bidirected but an orientation is required")]
    NotAnOrientation(usize, usize),

    #[error("clique-acyclicity of a super-orientation is only decided here with chordal evidence")]
    Undecidable,

    #[error("claw centered at {center} with leaves {leaves:?}")]
    Claw { center: usize, leaves: [usize; 3] },

    #[error("no sink in the clique {vertices:?}")]
    NoSink { vertices: Vec<usize> },

    #[error("invalid bipartite root: {0}")]
    InvalidRoot(String),

    #[error("invalid augmentation certificate: {0}")]
    InvalidCertificate(String),

    #[error("invalid geometric representation: {0}")]
    InvalidRepresentation(String),

    #[error("atom on vertices {vertices:?} is not the line graph of a bipartite multigraph")]
    NotDeAtom { vertices: Vec<usize> },

    #[error("certificate required for the atom on vertices {vertices:?}")]
    CertificateRequired { vertices: Vec<usize> },

    #[error("atom solver failed: {0}")]
    AtomFailed(String),

    #[error("internal verification failed: {verdict}")]
    VerificationFailed { verdict: KernelVerdict },

    #[error("instance has {n} vertices, above the limit of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// True for errors that say the input is outside the class a solver accepts,
    /// as opposed to malformed input or an internal failure.
    pub fn is_class_violation(&self) -> bool {
        matches!(
            self,
            Error::NotAClique(..)
                | Error::NotChordal { .. }
                | Error::NotCliqueAcyclic { .. }
                | Error::NotAnOrientation(..)
                | Error::Undecidable
                | Error::Claw { .. }
                | Error::NoSink { .. }
                | Error::NotDeAtom { .. }
                | Error::CertificateRequired { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
