use thiserror::Error;

pub type Result<T, E = GeomError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("({s}, {p}) is not a point of the symmetrized bidisc")]
    NotInDomain { s: String, p: String },
    #[error("{0} is not in the closed unit disc")]
    OutsideDisc(String),
    #[error("automorphism has a pole at {0}")]
    Pole(String),
    #[error("identity automorphism: all points fixed")]
    AllPointsFixed,
    #[error("automorphism is not irrotational")]
    NotIrrotational,
    #[error("automorphism is not hyperbolic")]
    NotHyperbolic,
    #[error("elliptic automorphism does not parametrize a geodesic")]
    Elliptic,
    #[error("royal point has no {0}")]
    RoyalPoint(&'static str),
    #[error("zero tangent vector")]
    ZeroVector,
    #[error("the two points coincide")]
    EqualPoints,
    #[error("point is not on the geodesic")]
    NotOnGeodesic,
    #[error("boundary base point")]
    BoundaryPoint,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl GeomError {
    pub(crate) fn not_in_domain(s: num_complex::Complex64, p: num_complex::Complex64) -> Self {
        GeomError::NotInDomain {
            s: s.to_string(),
            p: p.to_string(),
        }
    }
}
