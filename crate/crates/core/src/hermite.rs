//! C¹ Hermite interpolation inside a space of rational-arc-length curves.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{format_rational, isolate_roots, Matrix, Rational};
use crate::curve::{BasisCurve, BasisLabel, CurveKind, CurveSolution, Provenance, SolutionBasis};
use crate::quaternion::{hodograph_f, QuaternionPolynomial, RationalQuaternion};
use crate::residue::{single_pole_basis, ResidueError};
use crate::verify::LabeledCoefficient;

/// Pole-term and polynomial labels of the default basis at a single pole.
pub const DEFAULT_LABELS: [i32; 5] = [-7, -6, -1, 0, 1];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HermiteError {
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error("hodograph at t = {t} is not parallel to the prescribed derivative")]
    DirectionMismatch { t: String, endpoint: usize },
    #[error("basis member {label} has a pole in the interpolation interval")]
    PoleInInterval { label: BasisLabel },
    #[error("interpolation system is infeasible (rank {rank}, augmented rank {augmented_rank})")]
    Infeasible { rank: usize, augmented_rank: usize },
    #[error("interpolation system is underdetermined (rank {rank} for {unknowns} unknowns); choose another basis")]
    Underdetermined { rank: usize, unknowns: usize },
    #[error(transparent)]
    Basis(#[from] ResidueError),
}

/// End points and derivative vectors at `t0`, `t1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HermiteData {
    #[serde(with = "crate::serde_util::rational")]
    pub t0: Rational,
    #[serde(with = "crate::serde_util::rational")]
    pub t1: Rational,
    #[serde(with = "crate::serde_util::rational_vec")]
    pub p0: Vec<Rational>,
    #[serde(with = "crate::serde_util::rational_vec")]
    pub p1: Vec<Rational>,
    #[serde(with = "crate::serde_util::rational_vec")]
    pub d0: Vec<Rational>,
    #[serde(with = "crate::serde_util::rational_vec")]
    pub d1: Vec<Rational>,
}

impl HermiteData {
    pub fn validate(&self) -> Result<(), HermiteError> {
        if self.t0 == self.t1 {
            return Err(HermiteError::InvalidData("t0 equals t1".into()));
        }
        for (name, v) in [
            ("p0", &self.p0),
            ("p1", &self.p1),
            ("d0", &self.d0),
            ("d1", &self.d1),
        ] {
            if v.len() != 3 {
                return Err(HermiteError::InvalidData(format!(
                    "{name} must have 3 entries"
                )));
            }
        }
        if self.d0.iter().all(Zero::is_zero) || self.d1.iter().all(Zero::is_zero) {
            return Err(HermiteError::InvalidData("zero derivative vector".into()));
        }
        Ok(())
    }

    fn endpoint(&self, l: usize) -> (&Rational, RationalQuaternion, RationalQuaternion) {
        let v = |x: &[Rational]| {
            RationalQuaternion::new(Rational::zero(), x[0].clone(), x[1].clone(), x[2].clone())
        };
        if l == 0 {
            (&self.t0, v(&self.p0), v(&self.d0))
        } else {
            (&self.t1, v(&self.p1), v(&self.d1))
        }
    }

    /// Samples positions and derivatives of `c` at `t0`, `t1`.
    pub fn sample(c: &CurveSolution, t0: Rational, t1: Rational) -> Option<Self> {
        let xyz = |q: RationalQuaternion| vec![q.x, q.y, q.z];
        Some(Self {
            p0: xyz(c.eval(&t0)?),
            p1: xyz(c.eval(&t1)?),
            d0: xyz(c.eval_velocity(&t0)?),
            d1: xyz(c.eval_velocity(&t1)?),
            t0,
            t1,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HermiteSolution {
    pub curve: CurveSolution,
    pub coefficients: Vec<LabeledCoefficient>,
    #[serde(with = "crate::serde_util::rational_vec")]
    pub translation: Vec<Rational>,
    pub rank: usize,
}

impl HermiteSolution {
    pub fn coefficient(&self, label: &BasisLabel) -> Option<&Rational> {
        self.coefficients
            .iter()
            .find(|c| &c.label == label)
            .map(|c| &c.value)
    }
}

/// Default basis: arc-length curves with a single pole at `pole` and the
/// labels of [`DEFAULT_LABELS`].
pub fn default_basis(
    a: &QuaternionPolynomial,
    pole: &Rational,
) -> Result<SolutionBasis, HermiteError> {
    let full = single_pole_basis(a, pole, -7..=1, CurveKind::ArcLength)?;
    let labels: Vec<BasisLabel> = DEFAULT_LABELS
        .iter()
        .map(|&l| {
            if l < 0 {
                BasisLabel::pole(0, l)
            } else {
                BasisLabel::Power(l as u32)
            }
        })
        .collect();
    for l in &labels {
        if full.get(l).is_none() {
            return Err(ResidueError::DependentLabel(*l).into());
        }
    }
    Ok(full.restricted(&labels))
}

/// Checks `F(t_ℓ) × d_ℓ = 0` with `F(t_ℓ) ≠ 0`.
pub fn check_directions(a: &QuaternionPolynomial, data: &HermiteData) -> Result<(), HermiteError> {
    let f = hodograph_f(a);
    for l in 0..2 {
        let (t, _, d) = data.endpoint(l);
        let ft = f.eval(t);
        if ft.is_zero() || !ft.cross(&d).is_zero() {
            return Err(HermiteError::DirectionMismatch {
                t: format_rational(t),
                endpoint: l,
            });
        }
    }
    Ok(())
}

/// Solves `r(t_ℓ) = p_ℓ` and `⟨ṙ(t_ℓ), d_ℓ⟩ = |d_ℓ|²` over the basis
/// coefficients and a translation. Because `ṙ(t_ℓ)` is parallel to `d_ℓ`
/// for every member, the second condition forces `ṙ(t_ℓ) = d_ℓ`.
pub fn hermite_c1(
    a: &QuaternionPolynomial,
    data: &HermiteData,
    basis: &SolutionBasis,
) -> Result<HermiteSolution, HermiteError> {
    data.validate()?;
    check_directions(a, data)?;
    let (lo, hi) = if data.t0 < data.t1 {
        (&data.t0, &data.t1)
    } else {
        (&data.t1, &data.t0)
    };
    for BasisCurve { label, curve } in &basis.curves {
        if !isolate_roots(&curve.alpha, lo, hi).is_empty() {
            return Err(HermiteError::PoleInInterval { label: *label });
        }
    }
    let n = basis.len() + 3;
    let mut rows = Vec::with_capacity(8);
    let mut rhs = Vec::with_capacity(8);
    for l in 0..2 {
        let (t, p, d) = data.endpoint(l);
        let pos: Vec<[Rational; 4]> = basis
            .curves
            .iter()
            .map(|b| b.curve.eval(t).expect("no pole in interval").to_array())
            .collect();
        for c in 1..4 {
            let mut row: Vec<Rational> = pos.iter().map(|q| q[c].clone()).collect();
            for k in 1..4 {
                row.push(if k == c {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                });
            }
            rows.push(row);
            rhs.push(p.to_array()[c].clone());
        }
        let mut row: Vec<Rational> = basis
            .curves
            .iter()
            .map(|b| {
                b.curve
                    .eval_velocity(t)
                    .expect("no pole in interval")
                    .vector_part()
                    .dot(&d)
            })
            .collect();
        row.extend(std::iter::repeat_n(Rational::zero(), 3));
        rows.push(row);
        rhs.push(d.dot(&d));
    }
    let m = Matrix::with_cols(n, rows);
    let rank = m.rank();
    let sol = m.solve(&rhs).map_err(|_| {
        let aug = Matrix::with_cols(
            n + 1,
            m.to_rows()
                .into_iter()
                .zip(&rhs)
                .map(|(mut r, b)| {
                    r.push(b.clone());
                    r
                })
                .collect(),
        );
        HermiteError::Infeasible {
            rank,
            augmented_rank: aug.rank(),
        }
    })?;
    if !sol.nullspace.is_empty() {
        return Err(HermiteError::Underdetermined { rank, unknowns: n });
    }
    let x = sol.particular;
    let k = basis.len();
    let terms: Vec<(Rational, &CurveSolution)> = x
        .iter()
        .zip(&basis.curves)
        .map(|(c, b)| (c.clone(), &b.curve))
        .collect();
    let shift = RationalQuaternion::new(
        Rational::zero(),
        x[k].clone(),
        x[k + 1].clone(),
        x[k + 2].clone(),
    );
    let mut curve = CurveSolution::linear_combination(&terms).translated(&shift);
    curve.provenance = Provenance::Hermite;
    let coefficients = basis
        .curves
        .iter()
        .zip(&x)
        .map(|(b, c)| LabeledCoefficient {
            label: b.label,
            value: c.clone(),
        })
        .collect();
    Ok(HermiteSolution {
        curve,
        coefficients,
        translation: x[k..].to_vec(),
        rank,
    })
}
