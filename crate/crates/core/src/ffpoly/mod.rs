//! Prime-field and quadratic-extension arithmetic with a univariate
//! polynomial toolbox: factorization, resultants, interpolation and square roots.

mod factor;
pub mod fp;
pub mod fp2;
mod poly;
mod resultant;
mod sqrt;

pub use factor::{
    distinct_degree, distinct_irreducible_factors, equal_degree, factorize, is_irreducible,
    roots_with_multiplicity, squarefree_decomposition, squarefree_part, Factorization,
};
pub use fp::PrimeContext;
pub use fp2::{roots_in_fp2, Fp2, Fp2Elem, Fp2Poly};
pub use poly::{product, FpPoly};
pub use resultant::{bareiss_det, discriminant, interpolate, resultant, resultant_in_x, FpBiPoly};
pub use sqrt::{poly_sqrt, poly_sqrt_exact};
