//! Curves `R = ∫ λ 𝓕 dt` where `λ` is chosen in partial-fraction form
//! subject to the zero-residue conditions at each pole.

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{
    decompose, FactoredDenominator, GaussianRational, Matrix, PartialFractionError,
    PartialFractionForm, PoleTerms, Rational, RationalFunction, RealPolynomial, Scalar,
};
use crate::curve::{BasisCurve, BasisLabel, CurveKind, CurveSolution, Provenance, SolutionBasis};
use crate::quaternion::{slope_field, Biquaternion, QuaternionPolynomial};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ResidueError {
    #[error("nonzero residue {residue:?} at pole {root}")]
    NonzeroResidue {
        root: Box<GaussianRational>,
        residue: Box<Biquaternion>,
    },
    #[error("{0}")]
    PartialFraction(#[from] PartialFractionError),
    #[error("empty lambda space: {0}")]
    EmptySpace(String),
    #[error("label {0} is not a free index of the lambda space")]
    DependentLabel(BasisLabel),
}

/// Candidate `λ`: pole terms `(t − β_i)^j`, `−k_i ≤ j ≤ −1`, from the
/// factored denominator and optionally a polynomial part of bounded degree.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaAnsatz {
    pub poles: FactoredDenominator,
    pub polynomial_degree: Option<u32>,
    pub mode: CurveKind,
}

/// One unknown of the residue system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Unknown {
    /// Real or imaginary part of `λ_{pole, exponent}`.
    Pole {
        pole: usize,
        exponent: i32,
        imaginary: bool,
    },
    /// Coefficient of `t^k` in the polynomial part.
    Power(u32),
}

impl Unknown {
    pub fn label(&self) -> BasisLabel {
        match *self {
            Unknown::Pole {
                pole,
                exponent,
                imaginary,
            } => BasisLabel::Pole {
                pole,
                power: exponent,
                imaginary,
            },
            Unknown::Power(k) => BasisLabel::Power(k),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowOrigin {
    /// Quaternion component `component` (0 = scalar) of the residue at `pole`,
    /// real or imaginary part.
    Residue {
        pole: usize,
        component: usize,
        imaginary: bool,
    },
    /// Conjugate pairing between `pole` and `partner` for one coefficient.
    Reality {
        pole: usize,
        partner: usize,
        exponent: i32,
        imaginary: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstraintRow {
    pub origin: RowOrigin,
    #[serde(with = "crate::serde_util::rational_vec")]
    pub coefficients: Vec<Rational>,
}

/// Homogeneous linear system over the real and imaginary parts of the
/// `λ` coefficients.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidueSystem {
    pub unknowns: Vec<Unknown>,
    pub rows: Vec<ConstraintRow>,
}

impl ResidueSystem {
    pub fn matrix(&self) -> Matrix<Rational> {
        Matrix::with_cols(
            self.unknowns.len(),
            self.rows.iter().map(|r| r.coefficients.clone()).collect(),
        )
    }

    pub fn column(&self, u: &Unknown) -> Option<usize> {
        self.unknowns.iter().position(|x| x == u)
    }

    /// Rows coming from residues at `pole` (excluding reality rows).
    pub fn residue_rows(&self, pole: usize) -> impl Iterator<Item = &ConstraintRow> {
        self.rows
            .iter()
            .filter(move |r| matches!(r.origin, RowOrigin::Residue { pole: p, .. } if p == pole))
    }
}

/// Taylor coefficients `𝓕_0, …, 𝓕_order` of `𝓕` at `β`.
pub fn slope_field_taylor(
    a: &QuaternionPolynomial,
    beta: &GaussianRational,
    order: usize,
) -> Vec<Biquaternion> {
    let mut t = slope_field(a).to_complex().taylor(beta);
    t.resize(order + 1, Biquaternion::zero());
    t
}

fn components_for(mode: CurveKind) -> std::ops::Range<usize> {
    match mode {
        CurveKind::ArcLength => 0..4,
        CurveKind::PhOnly => 1..4,
    }
}

/// `Σ_m λ_{i,−m} 𝓕_{i,m−1} = 0` per pole, split into real rows. Unknowns
/// are ordered pole by pole, most negative exponent first, then the
/// polynomial coefficients.
pub fn residue_constraints(a: &QuaternionPolynomial, ansatz: &LambdaAnsatz) -> ResidueSystem {
    let mut unknowns = Vec::new();
    for (i, f) in ansatz.poles.factors().iter().enumerate() {
        for e in (1..=f.multiplicity as i32).rev() {
            unknowns.push(Unknown::Pole {
                pole: i,
                exponent: -e,
                imaginary: false,
            });
            if !f.root.is_real() {
                unknowns.push(Unknown::Pole {
                    pole: i,
                    exponent: -e,
                    imaginary: true,
                });
            }
        }
    }
    if let Some(d) = ansatz.polynomial_degree {
        unknowns.extend((0..=d).map(Unknown::Power));
    }
    let n = unknowns.len();
    let col = |u: Unknown| {
        unknowns
            .iter()
            .position(|x| *x == u)
            .expect("unknown registered")
    };
    let mut rows = Vec::new();
    for (i, f) in ansatz.poles.factors().iter().enumerate() {
        let k = f.multiplicity as usize;
        let taylor = slope_field_taylor(a, &f.root, k);
        let complex = !f.root.is_real();
        for c in components_for(ansatz.mode) {
            for imag_row in [false, true] {
                if imag_row && !complex {
                    continue;
                }
                let mut coeffs = vec![Rational::zero(); n];
                for m in 1..=k {
                    let fc = taylor[m - 1].to_array()[c].clone();
                    let e = -(m as i32);
                    // (a + b i)(p + q i) = (ap − bq) + (aq + bp) i
                    let (p, q) = (fc.re, fc.im);
                    let re_col = col(Unknown::Pole {
                        pole: i,
                        exponent: e,
                        imaginary: false,
                    });
                    if complex {
                        let im_col = col(Unknown::Pole {
                            pole: i,
                            exponent: e,
                            imaginary: true,
                        });
                        if imag_row {
                            coeffs[re_col] = q;
                            coeffs[im_col] = p;
                        } else {
                            coeffs[re_col] = p;
                            coeffs[im_col] = -q;
                        }
                    } else {
                        coeffs[re_col] = p;
                    }
                }
                rows.push(ConstraintRow {
                    origin: RowOrigin::Residue {
                        pole: i,
                        component: c,
                        imaginary: imag_row,
                    },
                    coefficients: coeffs,
                });
            }
        }
    }
    for (i, f) in ansatz.poles.factors().iter().enumerate() {
        if f.root.is_real() {
            continue;
        }
        let partner = ansatz
            .poles
            .index_of(&f.root.conj())
            .expect("conjugate-closed denominator");
        if partner < i {
            continue;
        }
        for e in 1..=f.multiplicity as i32 {
            for imag in [false, true] {
                let mut coeffs = vec![Rational::zero(); n];
                coeffs[col(Unknown::Pole {
                    pole: i,
                    exponent: -e,
                    imaginary: imag,
                })] = Rational::one();
                let sign = if imag {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                coeffs[col(Unknown::Pole {
                    pole: partner,
                    exponent: -e,
                    imaginary: imag,
                })] = sign;
                rows.push(ConstraintRow {
                    origin: RowOrigin::Reality {
                        pole: i,
                        partner,
                        exponent: -e,
                        imaginary: imag,
                    },
                    coefficients: coeffs,
                });
            }
        }
    }
    ResidueSystem { unknowns, rows }
}

/// A basis element of the admissible `λ`, labeled by its free index.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaBasisElement {
    pub label: BasisLabel,
    pub lambda: PartialFractionForm,
}

impl LambdaBasisElement {
    pub fn rational_function(&self) -> RationalFunction {
        self.lambda.reconstruct().expect("basis elements are real")
    }
}

fn form_from_vector(
    ansatz: &LambdaAnsatz,
    sys: &ResidueSystem,
    v: &[Rational],
) -> PartialFractionForm {
    let poles = ansatz
        .poles
        .factors()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let coefficients = (1..=f.multiplicity as i32)
                .map(|e| {
                    let re = sys
                        .column(&Unknown::Pole {
                            pole: i,
                            exponent: -e,
                            imaginary: false,
                        })
                        .map_or_else(Rational::zero, |c| v[c].clone());
                    let im = sys
                        .column(&Unknown::Pole {
                            pole: i,
                            exponent: -e,
                            imaginary: true,
                        })
                        .map_or_else(Rational::zero, |c| v[c].clone());
                    GaussianRational::new(re, im)
                })
                .collect();
            PoleTerms {
                root: f.root.clone(),
                coefficients,
            }
        })
        .collect();
    let poly = match ansatz.polynomial_degree {
        Some(d) => RealPolynomial::new(
            (0..=d)
                .map(|k| v[sys.column(&Unknown::Power(k)).expect("power column")].clone())
                .collect(),
        ),
        None => RealPolynomial::zero(),
    };
    PartialFractionForm {
        polynomial_part: poly,
        poles,
    }
}

/// Basis of all `λ` in the ansatz satisfying the residue conditions: one
/// element per free unknown, with that unknown 1, the other free unknowns
/// 0 and the dependent ones eliminated.
pub fn lambda_space(
    a: &QuaternionPolynomial,
    ansatz: &LambdaAnsatz,
) -> Result<Vec<LambdaBasisElement>, ResidueError> {
    let sys = residue_constraints(a, ansatz);
    let rref = sys.matrix().rref();
    let mut is_pivot = vec![false; sys.unknowns.len()];
    for &p in &rref.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..sys.unknowns.len()).filter(|&c| !is_pivot[c]).collect();
    let ns = sys.matrix().nullspace();
    if ns.is_empty() {
        return Err(ResidueError::EmptySpace(
            "the residue conditions only admit lambda = 0; see the existence report for the poles"
                .into(),
        ));
    }
    Ok(free
        .iter()
        .zip(ns)
        .map(|(&c, v)| LambdaBasisElement {
            label: sys.unknowns[c].label(),
            lambda: form_from_vector(ansatz, &sys, &v),
        })
        .collect())
}

/// The quaternion residue `Σ_m λ_{i,−m} 𝓕_{i,m−1}` at every pole.
pub fn residues(
    a: &QuaternionPolynomial,
    lambda: &PartialFractionForm,
) -> Vec<(GaussianRational, Biquaternion)> {
    lambda
        .poles
        .iter()
        .map(|p| {
            let k = p.coefficients.len();
            let taylor = slope_field_taylor(a, &p.root, k.max(1));
            let r = p
                .coefficients
                .iter()
                .zip(&taylor)
                .fold(Biquaternion::zero(), |acc, (l, f)| acc + f.scale(l));
            (p.root.clone(), r)
        })
        .collect()
}

/// `R = ∫ λ 𝓕 dt`, each component integrated termwise from its partial
/// fractions with zero constants. In PH-only mode only `Im R` is formed.
pub fn integrate_curve(
    a: &QuaternionPolynomial,
    lambda: &PartialFractionForm,
    mode: CurveKind,
) -> Result<CurveSolution, ResidueError> {
    for (root, r) in residues(a, lambda) {
        let bad = match mode {
            CurveKind::ArcLength => !r.is_zero(),
            CurveKind::PhOnly => !r.vector_part().is_zero(),
        };
        if bad {
            return Err(ResidueError::NonzeroResidue {
                root: Box::new(root),
                residue: Box::new(r),
            });
        }
    }
    if !lambda.is_conjugate_symmetric() {
        return Err(PartialFractionError::NotReal.into());
    }
    let den = lambda.denominator();
    let trimmed = PartialFractionForm {
        polynomial_part: lambda.polynomial_part.clone(),
        poles: lambda
            .poles
            .iter()
            .filter(|p| p.order() > 0)
            .cloned()
            .collect(),
    };
    let (num, _) = trimmed.reconstruct_complex();
    let fc = slope_field(a).components();
    let mut comps: [RationalFunction; 4] = Default::default();
    for c in components_for(mode) {
        let g = &num * &fc[c].to_complex();
        let (q, poles) = decompose(&g, &den);
        let form = PartialFractionForm {
            polynomial_part: q.to_real().ok_or(PartialFractionError::NotReal)?,
            poles,
        };
        comps[c] = form.antiderivative()?.reconstruct()?;
    }
    let lam = lambda.reconstruct()?;
    Ok(CurveSolution::from_components(
        &comps,
        mode,
        Provenance::Residue { lambda: lam },
    ))
}

/// Basis curves for the requested labels. Pole multiplicities are raised
/// as needed to cover the labels and the full band of the residue
/// conditions (`deg 𝓕 + 1`); labels must be free indices.
pub fn basis_curves(
    a: &QuaternionPolynomial,
    poles: &FactoredDenominator,
    labels: &[BasisLabel],
    mode: CurveKind,
) -> Result<SolutionBasis, ResidueError> {
    let band = slope_field(a).deg() as u32 + 1;
    let mut factors = Vec::new();
    for (i, f) in poles.factors().iter().enumerate() {
        let need = labels
            .iter()
            .filter_map(|l| match *l {
                BasisLabel::Pole { pole, power, .. } if pole == i => Some((-power) as u32),
                _ => None,
            })
            .max()
            .unwrap_or(0);
        factors.push((f.root.clone(), f.multiplicity.max(need).max(band)));
    }
    // conjugate partners must keep equal multiplicities
    for i in 0..factors.len() {
        if let Some(j) = factors.iter().position(|(r, _)| *r == factors[i].0.conj()) {
            let m = factors[i].1.max(factors[j].1);
            factors[i].1 = m;
            factors[j].1 = m;
        }
    }
    let polynomial_degree = labels
        .iter()
        .filter_map(|l| match l {
            BasisLabel::Power(k) => Some(*k),
            _ => None,
        })
        .max();
    let ansatz = LambdaAnsatz {
        poles: FactoredDenominator::new(factors)?,
        polynomial_degree,
        mode,
    };
    let space = lambda_space(a, &ansatz)?;
    let mut curves = Vec::new();
    for l in labels {
        let el = space
            .iter()
            .find(|e| &e.label == l)
            .ok_or(ResidueError::DependentLabel(*l))?;
        curves.push(BasisCurve {
            label: *l,
            curve: integrate_curve(a, &el.lambda, mode)?,
        });
    }
    let mut basis = SolutionBasis::new(curves, mode);
    basis.translations = 3;
    Ok(basis)
}

/// Labels `ℓ` in `range` for a single real pole at `root`: negative `ℓ`
/// are pole terms, nonnegative `ℓ` polynomial powers. Dependent indices of
/// the band are skipped.
pub fn single_pole_basis(
    a: &QuaternionPolynomial,
    root: &Rational,
    range: std::ops::RangeInclusive<i32>,
    mode: CurveKind,
) -> Result<SolutionBasis, ResidueError> {
    let lo = (*range.start()).min(-1);
    let poles = FactoredDenominator::real(&[(root.clone(), (-lo) as u32)])?;
    let hi = (*range.end()).max(0) as u32;
    let band = slope_field(a).deg() as u32 + 1;
    let ansatz = LambdaAnsatz {
        poles: FactoredDenominator::real(&[(root.clone(), ((-lo) as u32).max(band))])?,
        polynomial_degree: Some(hi),
        mode,
    };
    let free: Vec<BasisLabel> = lambda_space(a, &ansatz)?
        .into_iter()
        .map(|e| e.label)
        .collect();
    let labels: Vec<BasisLabel> = range
        .map(|l| {
            if l < 0 {
                BasisLabel::pole(0, l)
            } else {
                BasisLabel::Power(l as u32)
            }
        })
        .filter(|l| free.contains(l))
        .collect();
    basis_curves(a, &poles, &labels, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, rat};
    use crate::quaternion::qpoly;

    fn eq9() -> QuaternionPolynomial {
        qpoly(&[[0, 1, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]])
    }

    fn ansatz(mult: u32, mode: CurveKind) -> LambdaAnsatz {
        LambdaAnsatz {
            poles: FactoredDenominator::real(&[(int(0), mult)]).unwrap(),
            polynomial_degree: None,
            mode,
        }
    }

    fn row(r: &ConstraintRow) -> Vec<i64> {
        r.coefficients
            .iter()
            .map(|c| c.to_integer().try_into().unwrap())
            .collect()
    }

    #[test]
    fn eq9_rows() {
        let sys = residue_constraints(&eq9(), &ansatz(5, CurveKind::ArcLength));
        let rows: Vec<Vec<i64>> = sys.rows.iter().map(row).collect();
        // columns λ₋₅ … λ₋₁; components w, x, y, z
        assert_eq!(
            rows,
            vec![
                vec![1, 0, 1, 0, 2],
                vec![1, 0, -1, 0, 0],
                vec![0, 2, 0, 0, 2],
                vec![0, 0, -2, 2, 0]
            ]
        );
        let ph = residue_constraints(&eq9(), &ansatz(5, CurveKind::PhOnly));
        assert_eq!(ph.rows.len(), 3);
    }

    #[test]
    fn eq9_dependencies() {
        let ph = lambda_space(&eq9(), &ansatz(5, CurveKind::PhOnly)).unwrap();
        assert_eq!(ph.len(), 2);
        let al = lambda_space(&eq9(), &ansatz(5, CurveKind::ArcLength)).unwrap();
        assert_eq!(al.len(), 1);
        assert_eq!(al[0].label, BasisLabel::pole(0, -1));
        let l = &al[0].lambda;
        for e in -5..=-2 {
            assert_eq!(l.coefficient(0, e), GaussianRational::from(int(-1)));
        }
    }

    #[test]
    fn below_band_unconstrained() {
        let sys = residue_constraints(&eq9(), &ansatz(8, CurveKind::ArcLength));
        let c = sys
            .column(&Unknown::Pole {
                pole: 0,
                exponent: -7,
                imaginary: false,
            })
            .unwrap();
        assert!(sys.rows.iter().all(|r| r.coefficients[c].is_zero()));
    }

    #[test]
    fn r_minus_7() {
        let basis = single_pole_basis(&eq9(), &int(0), -7..=-7, CurveKind::ArcLength).unwrap();
        let r = basis.curves[0].curve.space_curve();
        // −1/(3t⁶) j − 2/(5t⁵) k + 1/(4t⁴)(i + 2k) − 2/(3t³) j − 1/(2t²) i
        let t = |k: usize| RealPolynomial::monomial(int(1), k);
        assert_eq!(
            r[0],
            &RationalFunction::new(RealPolynomial::constant(rat(1, 4)), t(4))
                - &RationalFunction::new(RealPolynomial::constant(rat(1, 2)), t(2))
        );
        assert_eq!(
            r[1],
            &RationalFunction::new(RealPolynomial::constant(rat(-1, 3)), t(6))
                - &RationalFunction::new(RealPolynomial::constant(rat(2, 3)), t(3))
        );
        assert_eq!(
            r[2],
            &RationalFunction::new(RealPolynomial::constant(rat(-2, 5)), t(5))
                + &RationalFunction::new(RealPolynomial::constant(rat(1, 2)), t(4))
        );
    }

    #[test]
    fn violation_rejected() {
        let l = PartialFractionForm {
            polynomial_part: RealPolynomial::zero(),
            poles: vec![PoleTerms {
                root: GaussianRational::from(int(0)),
                coefficients: vec![GaussianRational::from(int(1))],
            }],
        };
        assert!(matches!(
            integrate_curve(&eq9(), &l, CurveKind::ArcLength),
            Err(ResidueError::NonzeroResidue { .. })
        ));
    }

    #[test]
    fn complex_poles_give_real_curves() {
        let i = GaussianRational::unit();
        let poles = FactoredDenominator::new(vec![(i.clone(), 4), (i.conj(), 4)]).unwrap();
        let ans = LambdaAnsatz {
            poles,
            polynomial_degree: None,
            mode: CurveKind::ArcLength,
        };
        let a = qpoly(&[[0, 1, 0, 1], [1, 0, 0, 0]]);
        let space = lambda_space(&a, &ans).unwrap();
        assert!(!space.is_empty());
        for el in &space {
            let c = integrate_curve(&a, &el.lambda, CurveKind::ArcLength).unwrap();
            assert!(!c.is_polynomial());
            let v = c.velocity_numerator();
            assert!(!v.is_zero());
            assert!(c.eval(&int(0)).is_some());
        }
    }

    #[test]
    fn one_more_row_per_pole() {
        let a = qpoly(&[[0, 0, 0, 1], [0, 0, 0, -1], [-2, 0, 0, 1], [1, 0, 0, 0]]);
        let poles = FactoredDenominator::real(&[(int(0), 2), (int(1), 2)]).unwrap();
        let al = residue_constraints(
            &a,
            &LambdaAnsatz {
                poles: poles.clone(),
                polynomial_degree: None,
                mode: CurveKind::ArcLength,
            },
        );
        let ph = residue_constraints(
            &a,
            &LambdaAnsatz {
                poles,
                polynomial_degree: None,
                mode: CurveKind::PhOnly,
            },
        );
        for p in 0..2 {
            assert_eq!(al.residue_rows(p).count(), ph.residue_rows(p).count() + 1);
        }
    }
}
