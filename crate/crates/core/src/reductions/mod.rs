//! Hardness-reduction gadgets and instance transformations.

mod gadgets;

pub use gadgets::{
    acyclic_edge_gadget, edge_bichromatic_path, star_edge_gadget, star_vertex_f,
    star_vertex_gadget, ClaimOutcome, Gadget, GadgetKind, GadgetObject,
};

mod equality;

pub use equality::{acyclic_equality_gadget, verify_equality_gadget, EqualityGadget};

mod transforms;

pub use transforms::{
    reduce_3col_to_star3, reduce_acyclic_vertexsplit, reduce_colouring_to_injective_5p1,
    reduce_connmatching_to_acyclic, reduce_edgecol_to_acyclic_edgecol,
    reduce_edgecol_to_star_edgecol, reduce_injective_bipartite, reduce_listcol_to_colouring,
    reduce_star3_dominating_clique, BackTranslation, Instance, ReductionResult, SourceProblem,
    SourceSolution,
};
