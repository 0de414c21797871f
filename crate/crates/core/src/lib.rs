//! Exact construction of rational Pythagorean-hodograph space curves with
//! rational arc length.
//!
//! A curve is generated from a quaternion polynomial pre-image `A` with
//! hodograph `F = A î Ā`. Three constructions are provided:
//!
//! - [`linear`]: solve `α Ḃ − α̇ B = μ 𝓕` for a prescribed denominator `α`.
//! - [`residue`]: integrate `λ 𝓕` for rational `λ` whose residues vanish.
//! - [`dual`]: envelope of a family of hyperplanes orthogonal to `𝓕`.
//!
//! [`verify`] certifies the results independently and [`hermite`] solves
//! C¹ interpolation problems inside the resulting solution spaces. All
//! arithmetic is exact over ℚ or ℚ(i).

pub mod algebra;
pub mod curve;
pub mod dual;
pub mod factorization;
pub mod hermite;
pub mod linear;
pub mod quaternion;
pub mod residue;
pub mod serde_util;
pub mod verify;

pub use algebra::{
    ComplexPolynomial, GaussianRational, Matrix, Poly, Rational, RationalFunction, RealPolynomial,
    RootInterval,
};
pub use curve::{BasisCurve, BasisLabel, CurveKind, CurveSolution, Provenance, SolutionBasis};
pub use dual::{envelope_curve, osculating_normals, recover_offset, DualError, HyperplaneFamily};
pub use factorization::{factor_hodograph, FactorError, ScaledPreimage};
pub use hermite::{hermite_c1, HermiteData, HermiteError, HermiteSolution};
pub use linear::{existence_report, solve_linear_system, ExistenceReport, LinearError};
pub use quaternion::{
    hodograph_f, slope_field, Biquaternion, BiquaternionPolynomial, Quaternion,
    QuaternionPolynomial, RationalQuaternion,
};
pub use residue::{
    basis_curves, integrate_curve, lambda_space, residue_constraints, LambdaAnsatz, ResidueError,
};
pub use verify::{
    check_arc_length, check_ph, cusp_report, span_membership, verify_curve, CheckOutcome,
    Membership, VerificationReport, VerifyError,
};
