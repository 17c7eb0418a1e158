//! Bounded complexes of graded free modules: homology, tensor squares and
//! the symmetric/exterior splitting.

pub mod bruteforce;
pub mod chain;
pub mod homology;
pub mod square;

pub use bruteforce::{homology_lengths_bruteforce, suggested_degree_bound};
pub use chain::ChainComplex;
pub use homology::{
    euler_characteristic, homology_hilbert_numerators, homology_lengths, homology_vanishes, tensor_module_homology,
    HomologyLengths,
};
pub use square::{psi2_euler, sym2, tensor_square, wedge2, AdamsSquares, ComplexInvolution, SplitElement, TensorIndex, TensorSquare};
