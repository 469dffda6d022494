//! Exact arithmetic over `F_p`: field elements, dense matrices, the group
//! `SL(2, F_p)` with its conjugacy classes, Laurent polynomials and
//! determinants of matrices of Laurent polynomials.

mod fp;
mod laurent;
mod matrix;
mod polymatrix;
mod sl2;

pub use fp::{is_prime, FieldElem, Fp};
pub use laurent::LaurentPoly;
pub use matrix::FFMatrix;
pub use polymatrix::LaurentMatrix;
pub use sl2::{conjugacy_partition, sl2_elements, ConjClass, ConjClassTable, Mat2};
