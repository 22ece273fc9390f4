pub mod corpus;
pub mod suite;
