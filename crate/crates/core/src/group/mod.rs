//! Finite groups as exact multiplication tables.

pub mod catalog;
mod fingerprint;
mod hom;
mod quotient;
mod subgroup;
mod table;

pub use catalog::{catalog, CatalogSpec};
pub use fingerprint::{abelian_invariants, fingerprint, Fingerprint};
pub use hom::{ActionByAutomorphisms, Homomorphism};
pub use quotient::{quotient_group, Quotient};
pub use subgroup::{
    center, centralizer_of, commutator_subgroup, iterated_commutator, normal_closure, power_set, power_subgroup,
    preimage, product_of_normals, product_of_subgroups, SubgroupRef,
};
pub use table::{
    validate_table, Axiom, Group, GroupTable, TableData, Violation, DEFAULT_ORDER_CAP, EXHAUSTIVE_ASSOC_CAP,
};

use std::sync::Arc;

/// `subgroup_closure` under its conventional name.
pub fn subgroup_closure(g: &Group, seeds: impl IntoIterator<Item = usize>) -> SubgroupRef {
    SubgroupRef::closure(g, seeds)
}

pub fn shared(t: GroupTable) -> Group {
    Arc::new(t)
}
