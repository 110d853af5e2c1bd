//! Error types, one enum per subsystem.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("image array is not a bijection")]
    NotAPermutation,
    #[error("degree {0} exceeds the supported maximum")]
    DegreeTooLarge(usize),
    #[error("generators act on different degrees")]
    DegreeMismatch,
    #[error("group order would exceed the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("subgroup relation does not hold")]
    NotASubgroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("|J : H∩J| = {found}, expected 2")]
    BadIndex { found: usize },
    #[error("H must be a proper subgroup of G")]
    HEqualsG,
    #[error("arc reverser lies inside the vertex stabiliser")]
    GInH,
    #[error("edge endpoints must be two distinct vertices")]
    LoopEdge,
    #[error("edge references an unknown vertex")]
    BadVertex,
    #[error("the given action is not arc-transitive")]
    NotArcTransitive,
    #[error("isomorphism search exceeded the node budget of {budget}")]
    SearchCapExceeded { budget: u64 },
    #[error("subgroup of order {order} too large for extender enumeration (max 256)")]
    SubgroupTooLarge { order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RotaryError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("z is not an involution")]
    ZNotInvolution,
    #[error("z lies inside ⟨a⟩")]
    ZInsideA,
    #[error("operation requires a non-degenerate pair (graph is a two-vertex extender or a simple cycle)")]
    DegenerateGraph,
    #[error("group-theoretic value disagrees with the direct computation: {0}")]
    CrossCheckFailed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripleError {
    #[error("{0} is not an involution")]
    NotInvolution(&'static str),
    #[error("x, y, z must be pairwise distinct")]
    NotDistinct,
    #[error("x and z must commute")]
    NotCommuting,
    #[error("z lies inside ⟨x,y⟩")]
    ZInsideH,
    #[error("|xy| = {0} < 3, the underlying graph degenerates")]
    EdgeOrderTooSmall(u64),
    #[error("|zy| = {0} < 3, the face length degenerates")]
    FaceOrderTooSmall(u64),
    #[error("generators act on different degrees")]
    DegreeMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Rotary(#[from] RotaryError),
    #[error(transparent)]
    Triple(#[from] TripleError),
    #[error("construction requires a non-degenerate underlying graph")]
    DegenerateGraph,
    #[error("construction yields fewer than three faces")]
    FewFaces,
    #[error("not a surface: {0}")]
    NotASurface(String),
    #[error("maps have different labelled ground sets")]
    LabelMismatch,
    #[error("isomorphism search exceeded the node budget of {budget}")]
    SearchCapExceeded { budget: u64 },
    #[error("edge stabiliser neither swaps nor fixes the two incident faces")]
    InconsistentAction,
    #[error("group-theoretic value disagrees with the direct computation: {0}")]
    CrossCheckFailed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("construction is ill-defined: {0}")]
    IllDefined(String),
    #[error("frozen data failed verification: {0}")]
    DataCorrupt(String),
}
