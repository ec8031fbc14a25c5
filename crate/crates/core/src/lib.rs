//! Critical cells, multigraded Betti tables and Mayer-Vietoris spectral
//! sequences of one-critical multi-filtered cell complexes over `F_p`.

pub mod complex;
pub mod field;
pub mod error;
pub mod filtration;
pub mod koszul;
pub mod spectral;
pub mod generators;
pub mod io;
pub mod morse;
pub mod cli;
