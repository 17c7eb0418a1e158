//! Gröbner bases, normal forms and syzygies for homogeneous submodules of
//! graded free modules over a polynomial ring.

pub mod buchberger;
pub mod hilbert;
pub mod order;
pub mod syzygy;
pub mod vector;

pub use buchberger::{buchberger, GbOptions, GroebnerBasis};
pub use hilbert::{finite_hilbert_function, hilbert_function_value, module_numerator, LaurentPoly};
pub use order::{ModuleOrder, SchreyerFrame};
pub use syzygy::{apply_columns, preimage, syzygies, syzygies_of, SyzygyModule};
pub use vector::{Ambient, FreeVector};
