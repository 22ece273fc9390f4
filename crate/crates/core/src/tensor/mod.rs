//! Crossed modules, crossed squares and non-abelian tensor products.

mod build;
mod crossed;
mod maps;
mod nfold;
mod square;
mod theorems;

pub use build::{
    build_q_tensor_presentation, build_tensor_presentation, compute_q_tensor, compute_tensor, PresentationShape,
    Symbol, TensorCaps, TensorKind, TensorPresentation, TensorResult, DEFAULT_GENERATOR_CAP, DEFAULT_PLAIN_FACTOR_CAP,
    DEFAULT_Q_FACTOR_CAP, DEFAULT_RESULT_ORDER_CAP,
};
pub use crossed::{pullback, validate_crossed_module, CrossedLaw, CrossedModule, CrossedViolation, Pullback};
pub use maps::{check_power_expansion, induced_hom, map_symbols, natural_maps, tau_image, NaturalMaps};
pub use nfold::{
    check_nfold_exact_sequence, iterated_tensor, n_fold_tensor, ExactnessReport, Iterated, NFold, ITERATED_FOLD_CAP,
};
pub use square::{CrossedSquare, SquareViolation};
pub use theorems::{
    check_surjection_order_law, check_tensor_powerful, tau_chain, SurjectionReport, TensorPowerfulCheck,
};
