//! Constant-slope curves as envelopes of hyperplane families
//! `⟨N(t), X⟩ + h(t) = 0` osculating the slope field.

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{Matrix, Rational, RationalFunction, RealPolynomial};
use crate::curve::{CurveKind, CurveSolution, Provenance};
use crate::quaternion::{slope_field, QuatPoly, QuaternionPolynomial, RationalQuaternion};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DualError {
    #[error("the normal field and its first three derivatives are linearly dependent")]
    DegenerateEnvelope,
    #[error("offset h = 0 gives the trivial envelope R = 0")]
    DegenerateTrivial,
    #[error("curve tangents are not orthogonal to the normal field: <N, R'> = {0}")]
    NotAnEnvelopeSolution(String),
}

/// `N` together with the offset `h`.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperplaneFamily {
    pub normal: QuaternionPolynomial,
    pub offset: RationalFunction,
}

/// Basis of all `N` with `deg N ≤ deg_n` and
/// `⟨N, 𝓕⟩ = ⟨N, 𝓕'⟩ = ⟨N, 𝓕''⟩ = 0`.
pub fn osculating_normals(a: &QuaternionPolynomial, deg_n: usize) -> Vec<QuaternionPolynomial> {
    let sf = slope_field(a);
    let derivs = [sf.clone(), sf.derivative(), sf.derivative().derivative()];
    let cols = 4 * (deg_n + 1);
    let span = sf.deg() + deg_n + 1;
    let mut rows = vec![vec![Rational::zero(); cols]; 3 * span];
    for (d, g) in derivs.iter().enumerate() {
        let gc = g.components();
        for k in 0..=deg_n {
            for c in 0..4 {
                for (p, v) in gc[c].coeffs().iter().enumerate() {
                    rows[d * span + k + p][4 * k + c] += v.clone();
                }
            }
        }
    }
    Matrix::with_cols(cols, rows)
        .nullspace()
        .into_iter()
        .map(|v| {
            QuatPoly::new(
                v.chunks(4)
                    .map(|q| {
                        RationalQuaternion::new(
                            q[0].clone(),
                            q[1].clone(),
                            q[2].clone(),
                            q[3].clone(),
                        )
                    })
                    .collect(),
            )
        })
        .collect()
}

/// Smallest `deg N ≤ cap` with a nonzero osculating normal. The cap
/// defaults to `3·deg 𝓕`.
pub fn osculating_normal_sweep(
    a: &QuaternionPolynomial,
    cap: Option<usize>,
) -> Option<(usize, Vec<QuaternionPolynomial>)> {
    let cap = cap.unwrap_or(3 * slope_field(a).deg());
    (0..=cap).find_map(|d| {
        let ns = osculating_normals(a, d);
        (!ns.is_empty()).then_some((d, ns))
    })
}

fn det3(m: &[[&RealPolynomial; 3]; 3]) -> RealPolynomial {
    let t = |a: &RealPolynomial, b: &RealPolynomial, c: &RealPolynomial| &(a * b) * c;
    let pos = &(&t(m[0][0], m[1][1], m[2][2]) + &t(m[0][1], m[1][2], m[2][0]))
        + &t(m[0][2], m[1][0], m[2][1]);
    let neg = &(&t(m[0][2], m[1][1], m[2][0]) + &t(m[0][0], m[1][2], m[2][1]))
        + &t(m[0][1], m[1][0], m[2][2]);
    &pos - &neg
}

/// Cofactor matrix `C[r][c]` of a 4×4 polynomial matrix.
fn cofactors(m: &[[RealPolynomial; 4]; 4]) -> [[RealPolynomial; 4]; 4] {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            let rows: Vec<usize> = (0..4).filter(|&i| i != r).collect();
            let cols: Vec<usize> = (0..4).filter(|&j| j != c).collect();
            let minor: [[&RealPolynomial; 3]; 3] =
                std::array::from_fn(|i| std::array::from_fn(|j| &m[rows[i]][cols[j]]));
            let d = det3(&minor);
            if (r + c) % 2 == 0 {
                d
            } else {
                -d
            }
        })
    })
}

/// Intersection of `H, Ḣ, Ḧ, H⃛` by Cramer's rule over the rational
/// functions.
pub fn envelope_curve(family: &HyperplaneFamily) -> Result<CurveSolution, DualError> {
    if family.offset.is_zero() {
        return Err(DualError::DegenerateTrivial);
    }
    let mut ns = vec![family.normal.clone()];
    for _ in 0..3 {
        let next = ns.last().unwrap().derivative();
        ns.push(next);
    }
    let m: [[RealPolynomial; 4]; 4] = std::array::from_fn(|r| ns[r].components());
    let cof = cofactors(&m);
    let det = (0..4).fold(RealPolynomial::zero(), |acc, j| {
        &acc + &(&m[0][j] * &cof[0][j])
    });
    if det.is_zero() {
        return Err(DualError::DegenerateEnvelope);
    }
    let mut rhs = vec![-family.offset.clone()];
    for _ in 0..3 {
        let next = rhs.last().unwrap().derivative();
        rhs.push(next);
    }
    let det_rf = RationalFunction::from_poly(det);
    // X = M⁻¹ b with M⁻¹ = Cᵀ / det
    let comps: [RationalFunction; 4] = std::array::from_fn(|i| {
        let s = (0..4).fold(RationalFunction::zero(), |acc, n| {
            &acc + &(&rhs[n] * &RationalFunction::from_poly(cof[n][i].clone()))
        });
        &s / &det_rf
    });
    Ok(CurveSolution::from_components(
        &comps,
        CurveKind::ArcLength,
        Provenance::Dual {
            normal: family.normal.clone(),
            offset: family.offset.clone(),
        },
    ))
}

/// `h = −⟨N, R⟩` for a curve whose tangents lie in the hyperplanes.
pub fn recover_offset(
    curve: &CurveSolution,
    normal: &QuaternionPolynomial,
) -> Result<RationalFunction, DualError> {
    let tangent = normal.dot(&curve.velocity_numerator());
    if !tangent.is_zero() {
        return Err(DualError::NotAnEnvelopeSolution(tangent.to_string()));
    }
    let h = normal.dot(&curve.numerator);
    Ok(-RationalFunction::new(h, curve.alpha.clone()))
}

/// `⟨N^{(d)}, 𝓕⟩` for `d = 0..=3`, used to check the differentiated
/// orthogonality relations.
pub fn orthogonality_profile(
    a: &QuaternionPolynomial,
    normal: &QuaternionPolynomial,
) -> Vec<RealPolynomial> {
    let sf = slope_field(a);
    let mut n = normal.clone();
    let mut out = Vec::new();
    for _ in 0..4 {
        out.push(n.dot(&sf));
        n = n.derivative();
    }
    out
}
