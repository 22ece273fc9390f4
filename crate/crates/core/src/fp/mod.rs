//! Finitely presented groups and coset enumeration.

mod abelian;
mod enumerate;
mod presentation;
mod reference;
pub mod tietze;
mod todd_coxeter;
mod word;

pub use abelian::{abelian_quotient_order, AbelianOrder};
pub use enumerate::{enumerate_group, enumerate_group_capped, table_to_group, EnumeratedGroup};
pub use presentation::Presentation;
pub use reference::reference_presentation;
pub use todd_coxeter::{todd_coxeter, CosetStatus, CosetTable, DEFAULT_MAX_COSETS};
pub use word::{reduce, Word};
