//! Exact linear algebra over Z, F_p and Q[t].

pub mod abelian;
pub mod factor;
pub mod int_matrix;
pub mod modp;
pub mod poly;
pub mod poly_smith;
pub mod smith;

pub use abelian::AbelianGroup;
pub use factor::{factor_rational_poly, is_irreducible, Factorization};
pub use int_matrix::IntMatrix;
pub use modp::{is_prime, rank_mod_p};
pub use poly::RatPoly;
pub use poly_smith::{poly_smith_normal_form, ModuleDecomposition, PolyMatrix};
pub use smith::{cokernel_group, smith_normal_form, SmithForm};
