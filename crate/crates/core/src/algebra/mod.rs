//! Exact scalars, polynomials, rational functions and linear algebra.

pub mod linalg;
pub mod partial;
pub mod poly;
pub mod ratfunc;
pub mod scalar;
pub mod sturm;

pub use linalg::{LinalgError, Matrix, Rref, SolutionSpace};
pub use partial::{
    decompose, integrate_zero_residue, partial_fractions, rational_roots, FactoredDenominator,
    PartialFractionError, PartialFractionForm, PoleFactor, PoleTerms,
};
pub use poly::{
    poly_square_root, ComplexPolynomial, Poly, RealPolynomial, SquareRoot, SquareRootError,
};
pub use ratfunc::RationalFunction;
pub use scalar::{
    format_rational, int, parse_rational, rat, rational_sqrt, rational_to_f64, GaussianRational,
    Rational, Scalar,
};
pub use sturm::{isolate_roots, refine, RootInterval, SturmSequence};
