//! Grid problems in the plane: find the points of `Z[i]` or `Z[ω]`
//! (the latter constrained through its `√2 ↦ −√2` conjugate) that fall
//! in given convex regions.
//!
//! These enumeration problems are the geometric core of gate
//! approximation: a candidate gate entry is a grid point that must land
//! in a small target region, and its algebraic conjugate in a second
//! region keeping the remaining matrix entries bounded. The difficulty
//! is that the target regions are extremely thin slivers; enumerated
//! naively, almost every lattice point in the bounding box misses. The
//! fix is a change of basis: a *grid operator* — an invertible linear
//! map preserving the lattice — reshapes the regions until they are
//! well-approximated by their bounding boxes ("upright"), where simple
//! row-by-row enumeration is output-sensitive.
//!
//! The pieces:
//!
//! - [`one_dim`]: the exact one-dimensional problem over `Z[√2]`, the
//!   base case everything reduces to.
//! - [`region`]: certified convex regions (boxes, disks, polygons) with
//!   interval-arithmetic membership and line queries.
//! - [`operator`]: exact grid operators `N/√2` over `Z[√2]` matrices,
//!   and regions transformed by them.
//! - [`ellipse`]: ellipses, uprightness, and the enclosing ellipse of a
//!   region.
//! - [`step`]: skew reduction — uprighting one ellipse over `Z[i]`, or a
//!   bullet-linked pair over `Z[ω]` via the step lemma.
//! - [`solvers`]: the scaled enumerators tying it all together.
//!
//! Throughout, a strict division of labor keeps results trustworthy:
//! *decisions* (which operator to apply, how many candidates to try) may
//! use floating point, but *facts* (membership, solution lists, bounds)
//! are established exactly or by certified interval arithmetic.

pub mod ellipse;
pub mod one_dim;
pub mod operator;
pub mod region;
pub mod solvers;
pub mod step;

pub use ellipse::{enclosing_ellipse, uprightness, Ellipse, EllipseRegion};
pub use one_dim::{one_d_grid, GridInterval};
pub use operator::{GridOperator, TransformedRegion};
pub use region::{Box2, ConvexPolygon, ConvexRegion, Disk, Membership};
pub use solvers::{GridSolution, ScaledGridZi, ScaledGridZomega};
pub use step::{
    step, to_upright_pair, to_upright_zi, EllipsePairState, StepConstants, StepError,
    DEFAULT_STEP_CONSTANTS,
};
