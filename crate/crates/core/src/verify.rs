//! Independent certification of curves: PH property, exact arc length,
//! constant slope, tangency, cusps and solution-space membership.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{
    format_rational, isolate_roots, poly_square_root, rational_sqrt, Matrix, Rational,
    RationalFunction, RealPolynomial, RootInterval,
};
use crate::curve::{BasisLabel, CurveKind, CurveSolution, SolutionBasis};
use crate::quaternion::{hodograph_f, slope_field, QuaternionPolynomial};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("cannot extract mu: {0}")]
    CannotExtractMu(String),
    #[error("curve is not in the span of the basis: {0}")]
    NotInSpan(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckOutcome {
    pub fn pass() -> Self {
        Self {
            passed: true,
            witness: None,
        }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        Self {
            passed: false,
            witness: Some(witness.into()),
        }
    }

    fn with_note(passed: bool, note: impl Into<String>) -> Self {
        Self {
            passed,
            witness: Some(note.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: BTreeMap<String, CheckOutcome>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.values().all(|c| c.passed)
    }

    pub fn insert(&mut self, name: &str, outcome: CheckOutcome) {
        self.checks.insert(name.to_string(), outcome);
    }

    pub fn failures(&self) -> impl Iterator<Item = (&String, &CheckOutcome)> {
        self.checks.iter().filter(|(_, c)| !c.passed)
    }
}

fn dot3(a: &[RationalFunction; 3], b: &[RationalFunction; 3]) -> RationalFunction {
    a.iter()
        .zip(b)
        .fold(RationalFunction::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// Whether `p` times some positive rational is the square of a rational
/// polynomial with a rational square root factor.
fn is_rational_square(p: &RealPolynomial) -> Result<(), String> {
    let sq = poly_square_root(p).map_err(|e| format!("{p}: {e}"))?;
    rational_sqrt(&sq.scale).map(|_| ()).ok_or_else(|| {
        format!(
            "{p}: leading coefficient {} is not a rational square",
            format_rational(&sq.scale)
        )
    })
}

/// Passes iff `ṙ·ṙ` is the square of a rational function.
pub fn check_ph(r: &[RationalFunction; 3]) -> CheckOutcome {
    let v = r.clone().map(|c| c.derivative());
    let s = dot3(&v, &v);
    if s.is_zero() {
        return CheckOutcome::pass();
    }
    match is_rational_square(s.num()).and_then(|_| is_rational_square(s.den())) {
        Ok(()) => CheckOutcome::pass(),
        Err(w) => CheckOutcome::fail(format!("speed squared {s} is not a square: {w}")),
    }
}

/// Passes iff `(d/dt Re R)² = |d/dt Im R|²` exactly.
pub fn check_arc_length(c: &CurveSolution) -> CheckOutcome {
    let Some(s) = c.arc_length() else {
        return CheckOutcome::fail("curve carries no arc length");
    };
    let ds = s.derivative();
    let v = c.space_curve().map(|x| x.derivative());
    let lhs = &ds * &ds;
    let rhs = dot3(&v, &v);
    if lhs == rhs {
        CheckOutcome::pass()
    } else {
        CheckOutcome::fail(format!("s'^2 - |r'|^2 = {}", &lhs - &rhs))
    }
}

/// `N(Im V) = (Re V)²` for `V = α Ḃ − α̇ B`, the 4D slope-1 identity.
pub fn check_constant_slope(c: &CurveSolution) -> CheckOutcome {
    let v = c.velocity_numerator();
    let w = v.scalar_part();
    let vec = v.vector_part();
    let diff = &vec.norm() - &(&w * &w);
    if diff.is_zero() {
        CheckOutcome::pass()
    } else {
        CheckOutcome::fail(format!("N(Im V) - (Re V)^2 = {diff}"))
    }
}

/// Velocity proportional to the prescribed field: `ṙ ∥ F`, and `Ṙ ∥ 𝓕`
/// when the curve carries arc length.
pub fn check_tangency(c: &CurveSolution, a: &QuaternionPolynomial) -> CheckOutcome {
    let v = c.velocity_numerator();
    let field = match c.kind {
        CurveKind::ArcLength => slope_field(a),
        CurveKind::PhOnly => hodograph_f(a),
    };
    let vc = v.components();
    let fc = field.components();
    let range = match c.kind {
        CurveKind::ArcLength => 0..4,
        CurveKind::PhOnly => 1..4,
    };
    for p in range.clone() {
        for q in p + 1..range.end {
            let m = &(&vc[p] * &fc[q]) - &(&vc[q] * &fc[p]);
            if !m.is_zero() {
                return CheckOutcome::fail(format!("minor ({p},{q}) of [V | field] is {m}"));
            }
        }
    }
    CheckOutcome::pass()
}

/// `μ` from the curve, or the content of the vector part of `α Ḃ − α̇ B`.
pub fn extract_mu(c: &CurveSolution) -> Result<RealPolynomial, VerifyError> {
    if let Some(m) = &c.mu {
        if !m.is_zero() {
            return Ok(m.clone());
        }
    }
    let v = c.velocity_numerator().vector_part();
    if v.is_zero() {
        return Err(VerifyError::CannotExtractMu(
            "velocity vanishes identically".into(),
        ));
    }
    Ok(v.content())
}

/// Isolating intervals of the real roots of `μ` in `[lo, hi]`.
pub fn cusp_report(
    c: &CurveSolution,
    lo: &Rational,
    hi: &Rational,
) -> Result<Vec<RootInterval>, VerifyError> {
    let mu = extract_mu(c)?;
    Ok(isolate_roots(&mu, lo, hi))
}

/// Coefficients of a curve in a basis plus constant translation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Membership {
    pub coefficients: Vec<LabeledCoefficient>,
    /// `(x, y, z)` translation.
    #[serde(with = "crate::serde_util::rational_vec")]
    pub translation: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledCoefficient {
    pub label: BasisLabel,
    #[serde(with = "crate::serde_util::rational")]
    pub value: Rational,
}

impl Membership {
    pub fn coefficient(&self, label: &BasisLabel) -> Option<&Rational> {
        self.coefficients
            .iter()
            .find(|c| &c.label == label)
            .map(|c| &c.value)
    }
}

/// Solves `r = Σ c_j r_j + θ` on the vector parts by coefficient matching.
pub fn span_membership(
    curve: &CurveSolution,
    basis: &SolutionBasis,
) -> Result<Membership, VerifyError> {
    let den = basis
        .curves
        .iter()
        .map(|b| &b.curve.alpha)
        .chain(std::iter::once(&curve.alpha))
        .fold(RealPolynomial::one(), |acc, a| {
            let g = acc.gcd(a);
            (&acc * a).div_exact(&g).expect("lcm")
        });
    let lift = |c: &CurveSolution| -> [RealPolynomial; 3] {
        let k = den
            .div_exact(&c.alpha)
            .expect("denominator divides the lcm");
        let [_, x, y, z] = c.numerator.components();
        [&x * &k, &y * &k, &z * &k]
    };
    let target = lift(curve);
    let members: Vec<[RealPolynomial; 3]> = basis.curves.iter().map(|b| lift(&b.curve)).collect();
    let n = members.len() + 3;
    let top = members
        .iter()
        .flat_map(|m| m.iter())
        .chain(target.iter())
        .map(|p| p.coeffs().len())
        .max()
        .unwrap_or(0)
        .max(den.coeffs().len());
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for c in 0..3 {
        for p in 0..top {
            let mut row: Vec<Rational> = members.iter().map(|m| m[c].coeff(p)).collect();
            for t in 0..3 {
                row.push(if t == c {
                    den.coeff(p)
                } else {
                    Rational::zero()
                });
            }
            rows.push(row);
            rhs.push(target[c].coeff(p));
        }
    }
    let m = Matrix::with_cols(n, rows);
    let sol = m.solve(&rhs).map_err(|_| {
        let aug = Matrix::with_cols(
            n + 1,
            m.to_rows().into_iter().zip(&rhs).map(|(mut r, b)| {
                r.push(b.clone());
                r
            }).collect(),
        );
        let aug_rank = aug.rank();
        VerifyError::NotInSpan(format!(
            "coefficient system of rank {} over {} unknowns is inconsistent with the curve (augmented rank {})",
            m.rank(),
            n,
            aug_rank
        ))
    })?;
    let x = sol.particular;
    let coefficients = basis
        .curves
        .iter()
        .zip(&x)
        .map(|(b, c)| LabeledCoefficient {
            label: b.label,
            value: c.clone(),
        })
        .collect();
    let k = members.len();
    Ok(Membership {
        coefficients,
        translation: x[k..k + 3].to_vec(),
    })
}

/// Runs every applicable check. `a` enables the tangency check and
/// `interval` the cusp check.
pub fn verify_curve(
    c: &CurveSolution,
    a: Option<&QuaternionPolynomial>,
    interval: Option<(&Rational, &Rational)>,
) -> VerificationReport {
    let mut rep = VerificationReport::default();
    rep.insert("ph", check_ph(&c.space_curve()));
    if c.kind == CurveKind::ArcLength {
        rep.insert("arc_length", check_arc_length(c));
        rep.insert("constant_slope", check_constant_slope(c));
    }
    if let Some(a) = a {
        rep.insert("tangency", check_tangency(c, a));
    }
    if let Some((lo, hi)) = interval {
        let outcome = match cusp_report(c, lo, hi) {
            Ok(ivs) if ivs.is_empty() => CheckOutcome::with_note(
                true,
                format!(
                    "no real roots of mu in [{}, {}]",
                    format_rational(lo),
                    format_rational(hi)
                ),
            ),
            Ok(ivs) => CheckOutcome::fail(
                ivs.iter()
                    .map(|iv| format!("[{}, {}]", format_rational(&iv.lo), format_rational(&iv.hi)))
                    .collect::<Vec<_>>()
                    .join(", "),
            ),
            Err(e) => CheckOutcome::fail(e.to_string()),
        };
        rep.insert("cusp_free", outcome);
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;
    use crate::curve::Provenance;
    use crate::quaternion::{qpoly, QuatPoly};

    fn poly_curve(rows: &[[i64; 4]], kind: CurveKind) -> CurveSolution {
        CurveSolution::new(
            qpoly(rows),
            RealPolynomial::one(),
            None,
            kind,
            Provenance::Input,
        )
    }

    #[test]
    fn ph_examples() {
        let line = poly_curve(&[[0, 0, 0, 0], [0, 1, 0, 0]], CurveKind::PhOnly);
        assert!(check_ph(&line.space_curve()).passed);
        let parabola = poly_curve(
            &[[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]],
            CurveKind::PhOnly,
        );
        let out = check_ph(&parabola.space_curve());
        assert!(!out.passed);
        assert!(out.witness.is_some());
    }

    #[test]
    fn arc_length_requires_scalar_part() {
        let a = qpoly(&[[0, 1, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]]);
        let r = CurveSolution::new(
            slope_field(&a).integral(),
            RealPolynomial::one(),
            None,
            CurveKind::ArcLength,
            Provenance::Input,
        );
        assert!(check_arc_length(&r).passed);
        assert!(check_tangency(&r, &a).passed);
        let mut broken = r.clone();
        let mut comps = broken.numerator.components();
        comps[0] = RealPolynomial::zero();
        broken.numerator = QuatPoly::from_components(comps);
        assert!(!check_arc_length(&broken).passed);
        assert!(!check_constant_slope(&broken).passed);
    }

    #[test]
    fn cusp_examples() {
        let mut c = poly_curve(&[[0, 1, 0, 0]], CurveKind::ArcLength);
        c.mu = Some(RealPolynomial::from_ints(&[1, 0, 1]));
        assert!(cusp_report(&c, &int(-10), &int(10)).unwrap().is_empty());
        c.mu = Some(RealPolynomial::from_ints(&[0, -1, 1]));
        let ivs = cusp_report(&c, &int(-1), &int(2)).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].contains(&int(0)) && ivs[1].contains(&int(1)));
    }

    #[test]
    fn membership_roundtrip() {
        let a = poly_curve(
            &[[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]],
            CurveKind::PhOnly,
        );
        let b = poly_curve(
            &[[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 1, 0, 0]],
            CurveKind::PhOnly,
        );
        let basis = SolutionBasis::new(
            vec![
                crate::curve::BasisCurve {
                    label: BasisLabel::Index(0),
                    curve: a.clone(),
                },
                crate::curve::BasisCurve {
                    label: BasisLabel::Index(1),
                    curve: b.clone(),
                },
            ],
            CurveKind::PhOnly,
        );
        let target = CurveSolution::linear_combination(&[(int(3), &a), (int(-2), &b)]).translated(
            &crate::quaternion::RationalQuaternion::from_ints(0, 1, 2, 3),
        );
        let m = span_membership(&target, &basis).unwrap();
        assert_eq!(m.coefficient(&BasisLabel::Index(0)), Some(&int(3)));
        assert_eq!(m.coefficient(&BasisLabel::Index(1)), Some(&int(-2)));
        assert_eq!(m.translation, vec![int(1), int(2), int(3)]);
        let off = poly_curve(
            &[[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0]],
            CurveKind::PhOnly,
        );
        assert!(matches!(
            span_membership(&off, &basis),
            Err(VerifyError::NotInSpan(_))
        ));
    }
}
