use thiserror::Error;

use crate::triangle::{Infeasibility, ValidityReport};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid surface signature (k = {k}, n = {n}): {reason}")]
    Signature {
        k: i64,
        n: i64,
        reason: &'static str,
    },

    #[error("{field} has length {found}, expected {expected} for this signature")]
    Length {
        field: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("the zero tuple is not the coordinate of any lamination")]
    ZeroTuple,

    /// `t_s` and `ψ_s` must agree mod 2: above plus below plus straight-core
    /// counts in `S'_s` fill an even-sized β-arc.
    #[error("t_{index} = {t} and ψ_{index} = {psi} differ in parity; no lamination has these coordinates")]
    OutsideImage { index: usize, t: i64, psi: i64 },

    #[error("invalid triangle coordinates: {0}")]
    Invalid(ValidityReport),

    #[error(transparent)]
    Infeasible(#[from] Infeasibility),

    #[error("malformed strand diagram: {0}")]
    MalformedDiagram(String),

    #[error("enumeration needs {needed} steps, above the work ceiling {ceiling}")]
    BudgetExceeded { needed: u128, ceiling: u128 },

    #[error("{region} has {slots} strand ends; brute-force matching is limited to {limit}")]
    RegionTooLarge {
        region: crate::surface::RegionId,
        slots: usize,
        limit: usize,
    },
}
