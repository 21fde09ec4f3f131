//! Matroids of linear codes over prime fields, their lattices of cyclic
//! flats, uniform-minor detection and locally repairable code parameters.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod field;
pub mod input;
pub mod lattice;
pub mod lrc;
pub mod matroid;
pub mod set;
pub mod uniform;

pub use error::{Error, Result};
pub use field::FieldMatrix;
pub use lattice::{
    enumerate_cyclic_flats, minor_cyclic_flats, Configuration, CoveringEdge, CyclicFlat,
    CyclicFlatLattice, EdgeLabel, MinorFormula,
};
pub use lrc::{BinaryStructure, CodeAnalysis, Locality, LrcReport};
pub use matroid::{Limits, Matroid, MinorSpec};
pub use set::ElementSet;
pub use uniform::{Certificate, UniformDetector, UniformWitness};
