use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Matrix or vector shape does not fit the requested operation.
    InvalidDimension {
        expected: usize,
        found: usize,
    },
    /// Input to the Hermitian eigensolver is not Hermitian.
    NotHermitian {
        deviation: f64,
    },
    ZeroNorm,
    InvalidQubitSubset(&'static str),
    PartitionError(&'static str),
    SuperluminalInput(f64),
    DegenerateHelicity,
    OffShell {
        e: f64,
        mass_squared: f64,
    },
    InvalidDirection,
    DegenerateMomenta,
    ProjectionAnnihilated {
        weight: f64,
    },
    UnreachableAngle(f64),
    InvalidParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDimension { expected, found } => {
                write!(f, "invalid dimension: expected {expected}, found {found}")
            }
            Error::NotHermitian { deviation } => {
                write!(f, "matrix is not Hermitian (max deviation {deviation:e})")
            }
            Error::ZeroNorm => f.write_str("cannot normalize a null vector"),
            Error::InvalidQubitSubset(why) => write!(f, "invalid qubit subset: {why}"),
            Error::PartitionError(why) => write!(f, "invalid bipartition: {why}"),
            Error::SuperluminalInput(v) => write!(f, "speed {v} is not below the speed of light"),
            Error::DegenerateHelicity => f.write_str("helicity is undefined for zero three-momentum"),
            Error::OffShell { e, mass_squared } => {
                write!(f, "four-momentum is off shell (e = {e}, m^2 = {mass_squared})")
            }
            Error::InvalidDirection => f.write_str("boost direction must be a nonzero finite vector"),
            Error::DegenerateMomenta => {
                f.write_str("the two momentum labels coincide; a dichotomic encoding needs xi0 > 0")
            }
            Error::ProjectionAnnihilated { weight } => {
                write!(f, "positive-parity projection has vanishing weight {weight:e}")
            }
            Error::UnreachableAngle(d) => {
                write!(f, "Wigner angle {d} is outside [0, pi/2)")
            }
            Error::InvalidParameter(why) => write!(f, "invalid parameter: {why}"),
        }
    }
}

impl core::error::Error for Error {}
