//! Polynomial invariants of finite-dimensional semisimple Hopf algebras,
//! computed exactly over cyclotomic fields.

pub mod catalog;
pub mod cyclo;
pub mod exec;
pub mod hopf;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod reprings;
