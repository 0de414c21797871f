//! Rational curves `R(t) = B(t)/α(t)` in `H ≅ R⁴` and labeled solution bases.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::scalar::{denominator_lcm, numerator_gcd};
use crate::algebra::{format_rational, Rational, RationalFunction, RealPolynomial};
use crate::quaternion::{QuatPoly, QuaternionPolynomial, RationalQuaternion};

/// How a curve was produced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum Provenance {
    Linear,
    Minors,
    Residue {
        lambda: RationalFunction,
    },
    Dual {
        normal: QuaternionPolynomial,
        offset: RationalFunction,
    },
    Combination,
    Hermite,
    Input,
}

/// Whether the scalar part carries the arc length or is absent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    /// `Re R` is an arc length of `Im R`.
    ArcLength,
    /// Only the vector part is meaningful; `Re B = 0`.
    PhOnly,
}

/// `R = B/α` with `gcd(content B, α) = 1` and `α` monic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveSolution {
    #[serde(rename = "B")]
    pub numerator: QuaternionPolynomial,
    #[serde(with = "crate::serde_util::real_poly")]
    pub alpha: RealPolynomial,
    #[serde(
        with = "crate::serde_util::real_poly_opt",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub mu: Option<RealPolynomial>,
    pub kind: CurveKind,
    pub provenance: Provenance,
}

impl CurveSolution {
    /// Builds and reduces `B/α`. A supplied `μ` is divided by the square of
    /// the cancelled factor so that `α Ḃ − α̇ B = μ 𝓕` keeps holding.
    pub fn new(
        numerator: QuaternionPolynomial,
        alpha: RealPolynomial,
        mu: Option<RealPolynomial>,
        kind: CurveKind,
        provenance: Provenance,
    ) -> Self {
        assert!(!alpha.is_zero(), "zero denominator");
        let g = numerator.content().gcd(&alpha);
        let g = if g.is_zero() { alpha.clone() } else { g };
        let mut b = numerator;
        let mut a = alpha;
        let mut mu = mu;
        if !g.is_constant() {
            b = QuatPoly::from_components(
                b.components()
                    .map(|c| c.div_exact(&g).expect("content divides")),
            );
            a = a.div_exact(&g).expect("gcd divides");
            mu = mu.map(|m| {
                m.div_exact(&(&g * &g))
                    .expect("square of cancelled factor divides mu")
            });
        }
        let lead = a.leading();
        let inv = Rational::one() / &lead;
        let b = b.scale(&inv);
        let a = a.scale(&inv);
        // α Ḃ − α̇ B is quadratic in (B, α)
        let mu = mu.map(|m| m.scale(&(&inv * &inv)));
        Self {
            numerator: b,
            alpha: a,
            mu,
            kind,
            provenance,
        }
    }

    /// Combines four rational components over a common monic denominator.
    pub fn from_components(
        comps: &[RationalFunction; 4],
        kind: CurveKind,
        provenance: Provenance,
    ) -> Self {
        let den = comps.iter().fold(RealPolynomial::one(), |acc, c| {
            let g = acc.gcd(c.den());
            (&acc * c.den()).div_exact(&g).expect("lcm")
        });
        let parts = comps
            .clone()
            .map(|c| c.num() * &den.div_exact(c.den()).expect("denominator divides the lcm"));
        Self::new(
            QuatPoly::from_components(parts),
            den,
            None,
            kind,
            provenance,
        )
    }

    /// A constant point.
    pub fn constant(q: &RationalQuaternion, kind: CurveKind) -> Self {
        Self::new(
            QuatPoly::constant(q.clone()),
            RealPolynomial::one(),
            None,
            kind,
            Provenance::Input,
        )
    }

    pub fn components(&self) -> [RationalFunction; 4] {
        self.numerator.over(&self.alpha)
    }

    /// `r = Im R`.
    pub fn space_curve(&self) -> [RationalFunction; 3] {
        let [_, x, y, z] = self.components();
        [x, y, z]
    }

    /// `s = Re R`, absent for PH-only curves.
    pub fn arc_length(&self) -> Option<RationalFunction> {
        match self.kind {
            CurveKind::ArcLength => Some(RationalFunction::new(
                self.numerator.scalar_part(),
                self.alpha.clone(),
            )),
            CurveKind::PhOnly => None,
        }
    }

    pub fn derivative_components(&self) -> [RationalFunction; 4] {
        self.components().map(|c| c.derivative())
    }

    /// Numerator of `Ṙ` over `α²`: `α Ḃ − α̇ B`.
    pub fn velocity_numerator(&self) -> QuaternionPolynomial {
        let b = &self.numerator;
        &b.derivative().scale_poly(&self.alpha) - &b.scale_poly(&self.alpha.derivative())
    }

    pub fn is_polynomial(&self) -> bool {
        self.alpha.is_constant()
    }

    /// `R(t)`, or `None` at a pole.
    pub fn eval(&self, t: &Rational) -> Option<RationalQuaternion> {
        let a = self.alpha.eval(t);
        if a.is_zero() {
            return None;
        }
        Some(self.numerator.eval(t).scale(&(Rational::one() / a)))
    }

    /// `Ṙ(t)`, or `None` at a pole.
    pub fn eval_velocity(&self, t: &Rational) -> Option<RationalQuaternion> {
        let a = self.alpha.eval(t);
        if a.is_zero() {
            return None;
        }
        Some(
            self.velocity_numerator()
                .eval(t)
                .scale(&(Rational::one() / (&a * &a))),
        )
    }

    /// `R + q`.
    pub fn translated(&self, q: &RationalQuaternion) -> Self {
        let shift = QuatPoly::from_poly_times(&self.alpha, q);
        let mut out = self.clone();
        out.numerator = &self.numerator + &shift;
        out
    }

    /// `c·R`.
    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        out.numerator = self.numerator.scale(c);
        out.mu = self.mu.as_ref().map(|m| m.scale(c));
        out
    }

    /// `Σ c_i R_i`, PH-only unless every term carries arc length.
    pub fn linear_combination(terms: &[(Rational, &CurveSolution)]) -> Self {
        let kind = if terms.iter().all(|(_, c)| c.kind == CurveKind::ArcLength) {
            CurveKind::ArcLength
        } else {
            CurveKind::PhOnly
        };
        let mut acc = [
            RationalFunction::zero(),
            RationalFunction::zero(),
            RationalFunction::zero(),
            RationalFunction::zero(),
        ];
        for (c, curve) in terms {
            if c.is_zero() {
                continue;
            }
            let comps = curve.components();
            for (a, x) in acc.iter_mut().zip(comps.iter()) {
                *a = &*a + &x.scale(c);
            }
        }
        if kind == CurveKind::PhOnly {
            acc[0] = RationalFunction::zero();
        }
        Self::from_components(&acc, kind, Provenance::Combination)
    }

    /// Drops the scalar part.
    pub fn to_ph_only(&self) -> Self {
        let mut b = self.numerator.components();
        b[0] = RealPolynomial::zero();
        let mut out = self.clone();
        out.numerator = QuatPoly::from_components(b);
        out.kind = CurveKind::PhOnly;
        out
    }

    /// Smallest integer `t₀ ≥ 0` with `α(t₀) ≠ 0`.
    pub fn base_parameter(&self) -> Rational {
        let mut t = Rational::zero();
        while self.alpha.eval(&t).is_zero() {
            t += Rational::one();
        }
        t
    }

    /// Canonical representative up to translation and scaling: `R(t₀) = 0`
    /// at [`CurveSolution::base_parameter`], integer numerator coefficients
    /// with gcd 1, and positive leading coefficient in the first nonzero
    /// component. `μ` is scaled along.
    pub fn canonical(&self) -> Self {
        let t0 = self.base_parameter();
        let p = self.eval(&t0).expect("t0 is not a pole");
        let moved = self.translated(&-p);
        let coeffs: Vec<Rational> = moved
            .numerator
            .coeffs()
            .iter()
            .flat_map(|q| q.to_array())
            .collect();
        if coeffs.iter().all(Zero::is_zero) {
            return moved;
        }
        let lcm = denominator_lcm(coeffs.iter());
        let gcd = numerator_gcd(coeffs.iter());
        let mut c = Rational::new(lcm, gcd).abs();
        let lead_sign = moved
            .numerator
            .components()
            .iter()
            .find(|p| !p.is_zero())
            .map(|p| p.leading().is_negative())
            .unwrap_or(false);
        if lead_sign {
            c = -c;
        }
        moved.scaled(&c)
    }
}

impl fmt::Display for CurveSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.alpha)
    }
}

/// Label of a basis curve: a polynomial power `t^k` of `λ`, a pole term
/// `(t − β_pole)^power` (with `imaginary` selecting the `i_c` part at a
/// non-real pole), or a running index for methods without a natural label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisLabel {
    Power(u32),
    Pole {
        pole: usize,
        power: i32,
        imaginary: bool,
    },
    Index(usize),
}

impl BasisLabel {
    pub fn pole(pole: usize, power: i32) -> Self {
        Self::Pole {
            pole,
            power,
            imaginary: false,
        }
    }

    /// The exponent `ℓ` of a single-pole label, with polynomial powers
    /// counted as nonnegative exponents.
    pub fn exponent(&self) -> Option<i32> {
        match *self {
            Self::Power(k) => Some(k as i32),
            Self::Pole {
                power,
                imaginary: false,
                ..
            } => Some(power),
            _ => None,
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Power(k) => write!(f, "t^{k}"),
            Self::Pole {
                pole,
                power,
                imaginary,
            } => {
                write!(f, "pole{pole}^{power}")?;
                if *imaginary {
                    write!(f, "(im)")?;
                }
                Ok(())
            }
            Self::Index(i) => write!(f, "#{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisCurve {
    pub label: BasisLabel,
    pub curve: CurveSolution,
}

/// Basis of an affine solution space. Constant translations are not
/// listed; `translations` counts them (3 for space curves, 4 when the arc
/// length can be shifted too).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionBasis {
    pub curves: Vec<BasisCurve>,
    pub kind: CurveKind,
    pub translations: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
}

impl SolutionBasis {
    pub fn new(curves: Vec<BasisCurve>, kind: CurveKind) -> Self {
        let translations = match kind {
            CurveKind::ArcLength => 4,
            CurveKind::PhOnly => 3,
        };
        Self {
            curves,
            kind,
            translations,
            diagnostics: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn get(&self, label: &BasisLabel) -> Option<&CurveSolution> {
        self.curves
            .iter()
            .find(|c| &c.label == label)
            .map(|c| &c.curve)
    }

    /// Members whose reduced denominator is not constant.
    pub fn non_polynomial(&self) -> impl Iterator<Item = &BasisCurve> {
        self.curves.iter().filter(|c| !c.curve.is_polynomial())
    }

    pub fn restricted(&self, labels: &[BasisLabel]) -> Self {
        let curves = labels
            .iter()
            .filter_map(|l| {
                self.get(l).map(|c| BasisCurve {
                    label: *l,
                    curve: c.clone(),
                })
            })
            .collect();
        Self {
            curves,
            kind: self.kind,
            translations: self.translations,
            diagnostics: self.diagnostics.clone(),
        }
    }
}

/// Formats `B/α` component by component, for diagnostics.
pub fn describe(c: &CurveSolution) -> String {
    let names = ["s", "x", "y", "z"];
    let comps = c.components();
    names
        .iter()
        .zip(comps.iter())
        .map(|(n, f)| format!("{n} = {f}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// `format_rational` for quaternion components, used in reports.
pub fn format_point(q: &RationalQuaternion) -> [String; 4] {
    q.to_array().map(|c| format_rational(&c))
}
