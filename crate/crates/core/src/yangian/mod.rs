//! Matrix realization of elementary Yangian modules and their tensor
//! products, quantum minors, singular vectors, intertwiners and the
//! brute-force irreducibility oracle.

mod action;
mod gz;
mod intertwiner;
mod minors;
mod oracle;
mod rmatrix;
mod singular;
mod symmetrizer;
pub mod tensor;

pub use action::{
    module_action, module_action_with_cap, realize, realized_action, GeneratorSet, RealizedModule,
    TensorModule, DEFAULT_DIM_CAP,
};
pub use gz::{gz_eigenbasis_check, gz_eigenbasis_report, gz_eigenlines, GzReport};
pub use intertwiner::{
    check_intertwining, direct_product_form, intertwiner, intertwiner_function, intertwiner_with_cap,
    jucys_murphy_elements, jucys_murphy_form, jucys_murphy_numerator, pair_order, Intertwiner,
};
pub use minors::{
    a_series, a_series_at, abcd_indices, abcd_series, minor_denominator, quantum_minor,
    quantum_minor_apply, quantum_minor_at, quantum_minor_reversed, transpose_generators, AbcdSeries,
};
pub use oracle::{
    burnside_irreducible, check_defining_relations, cocyclicity_oracle, coproduct_minor_check,
    cyclicity_oracle, default_relation_pairs, determinant_is_central, irreducible_oracle,
    irreducible_oracle_detailed, minor_orderings_agree, sample_points, OracleMethod, OracleVerdict,
};
pub use rmatrix::{yang_r, yang_r_cleared, yang_r_on};
pub use singular::{
    a_denominator, a_eigenvalues, drinfeld_check, elementary_a_eigenvalue, is_singular, minor_eigenvalue,
    rho, singular_vector, twist_factor, twist_power, zeta_matches_top_scheme,
};
pub use symmetrizer::{symmetrizer_image, young_symmetrizer, SymmetrizerImage, SymmetrizerSet, AMBIENT_LIMIT};
pub use tensor::{TensorSpace, VectorFactor};

use crate::criteria::CriteriaError;
use crate::diagrams::DiagramError;
use crate::exactalg::AlgebraError;

/// Errors raised while realizing modules and running the oracle.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum YangianError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Criteria(#[from] CriteriaError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("R(u, v) has a pole at u = v")]
    PoleAtEqualArguments,
    #[error("realized dimension {dim} exceeds the cap {cap}")]
    DimensionCapExceeded { dim: usize, cap: usize },
    #[error("tensor space (C^{n})^{{⊗{boxes}}} is too large to realize")]
    AmbientTooLarge { boxes: usize, n: usize },
    #[error("modules have different N ({0} vs {1})")]
    MismatchedRank(usize, usize),
    #[error("no modules given")]
    NoModules,
    #[error("index sequences must be strictly increasing in 1..=N and of equal length: {0}")]
    BadIndexSequence(String),
    #[error("vector is not singular: {0}")]
    NotSingular(String),
    #[error("module pair is not (reversed Young diagram, Young diagram): {0}")]
    ShapeNotSpecial(String),
    #[error("joint spectrum is not simple over Q: {0}")]
    DegenerateSpectrum(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
