//! A generic finite-dimensional Hopf algebra engine over a cyclotomic field.
//!
//! Elements are dense coefficient vectors in the algebra's basis; structure
//! tensors are stored sparsely. Every check here is exhaustive over basis
//! tuples, so this module doubles as the oracle for closed-form formulas.

mod data;
mod dual;
mod json;
mod module;
mod quasi;
mod validate;

pub use data::{Element, HopfAlgebraData, HopfTables, Sparse};
pub use dual::{dual_hopf, dual_r_matrix};
pub use json::{from_json, to_json, HopfJsonError};
pub use module::{
    convolution_inverse, convolution_product, decompose_character, direct_sum, dual_module, is_algebra_map,
    matrix_coalgebra_character, tensor_module, trivial_module, Character, DecomposeError, ModuleRep,
};
pub use quasi::{
    antipode_of_drinfeld_holds, braided_dimension, braided_dimension_with, dual_drinfeld, dual_drinfeld_identity,
    drinfeld_element, drinfeld_inverse, normalized_scalar, r_dimension, r_dimension_with, validate_braiding,
    validate_braiding_with, validate_r_matrix, validate_r_matrix_with, BraidingForm, RMatrix,
};
pub use validate::{validate_hopf, validate_hopf_with};

use std::fmt;

/// Which identity a validator was checking when it found a counterexample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Shape,
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    ComultMultiplicative,
    CounitMultiplicative,
    Antipode,
    AntipodeSquare,
    RCounit,
    RInvertible,
    RIntertwines,
    RCoproductFirst,
    RCoproductSecond,
    DrinfeldCentral,
    DrinfeldInvertible,
    B1,
    B2,
    B3,
    B4,
    BraidingInvertible,
    ModuleAction,
    MatrixCoalgebra,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Check::Shape => "shape",
            Check::Associativity => "associativity",
            Check::Unit => "unit",
            Check::Coassociativity => "coassociativity",
            Check::Counit => "counit",
            Check::ComultMultiplicative => "comultiplication is an algebra map",
            Check::CounitMultiplicative => "counit is an algebra map",
            Check::Antipode => "antipode",
            Check::AntipodeSquare => "antipode squares to identity",
            Check::RCounit => "R counit normalization",
            Check::RInvertible => "R invertibility",
            Check::RIntertwines => "R intertwines coproduct and opposite coproduct",
            Check::RCoproductFirst => "(coproduct x id)R = R13 R23",
            Check::RCoproductSecond => "(id x coproduct)R = R13 R12",
            Check::DrinfeldCentral => "Drinfeld element is central",
            Check::DrinfeldInvertible => "Drinfeld element is invertible",
            Check::B1 => "(B1)",
            Check::B2 => "(B2)",
            Check::B3 => "(B3)",
            Check::B4 => "(B4)",
            Check::BraidingInvertible => "braiding convolution invertibility",
            Check::ModuleAction => "module action",
            Check::MatrixCoalgebra => "matrix coalgebra",
        };
        f.write_str(s)
    }
}

/// A counterexample: the failed identity and the basis indices where it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: Check,
    pub witness: Vec<usize>,
    pub detail: String,
}

impl Violation {
    pub fn new(check: Check, witness: Vec<usize>, detail: impl Into<String>) -> Self {
        Violation { check, witness, detail: detail.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.check, self.witness)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

impl std::error::Error for Violation {}

pub type Report = Result<(), Violation>;
