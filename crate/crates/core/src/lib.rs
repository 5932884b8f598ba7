pub mod algebra;
pub mod bimodule;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod exactlin;
pub mod structure;
pub mod random;
