//! Generalized Dynnikov coordinates for integral laminations on the
//! non-orientable surface `N_{k,n}`: `k` crosscaps, `n` punctures and one
//! boundary component.
//!
//! [`TriangleCoords`] are intersection numbers with a fixed arc system;
//! [`DynnikovCoords`] are the compact integer tuple that determines them.
//! [`encode`] and [`decode`] convert between the two, [`build_diagram`] and
//! [`trace`] recover the curves themselves, and [`oracle`] checks everything
//! against brute force.

pub mod dynnikov;
pub mod error;
pub mod lamination;
pub mod oracle;
pub mod render;
pub mod surface;
pub mod triangle;

pub use dynnikov::{
    compute_xy, decode, encode, encode_raw, r_count, DynnikovCoords, InverseIntermediates,
};
pub use error::{Error, Result};
pub use lamination::{
    build_diagram, component_count, trace, Endpoint, ExtraComponent, Piece, PieceKind, PieceRef,
    Side, Sidedness, StrandDiagram, TracedComponent,
};
pub use oracle::{
    check_bijection, check_bijection_with, enumerate_census_configurations, enumerate_dynnikov_box,
    Configuration, DynnikovBox, EnumerationBudget, OracleReport, OracleTracer,
};
pub use render::{render_svg, RenderOptions};
pub use surface::{RegionId, Signature};
pub use triangle::{
    Arc, ArcKind, CoreEncoding, EndCensus, Infeasibility, LoopSide, RegionCensus, SCensus,
    SPrimeCensus, TriangleCoords, ValidityReport, Violation,
};
