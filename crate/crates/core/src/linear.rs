//! Curves from the linear identity `α Ḃ − α̇ B = μ 𝓕` with prescribed `A`
//! and `α`, solved by coefficient matching.

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{FactoredDenominator, GaussianRational, Matrix, Rational, RealPolynomial};
use crate::curve::{BasisCurve, BasisLabel, CurveKind, CurveSolution, Provenance, SolutionBasis};
use crate::quaternion::{
    is_h_reduced, slope_field, Biquaternion, QuatPoly, QuaternionPolynomial, RationalQuaternion,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinearError {
    #[error("alpha must be nonzero")]
    ZeroAlpha,
    #[error("A must be nonzero")]
    ZeroPreimage,
}

/// Dependence data at one root `z` of `α`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootReport {
    pub root: GaussianRational,
    pub multiplicity: u32,
    /// `𝓕_0, …, 𝓕_n` of `𝓕(t) = Σ (t − z)^i 𝓕_i`.
    pub taylor: Vec<Biquaternion>,
    pub rank: usize,
    pub dependent: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExistenceReport {
    pub roots: Vec<RootReport>,
    pub reduced: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl ExistenceReport {
    /// Non-polynomial solutions exist for large enough `deg B`.
    pub fn admits_rational_solutions(&self) -> bool {
        self.roots.iter().any(|r| r.dependent)
    }

    pub fn summary(&self) -> String {
        let parts: Vec<String> = self
            .roots
            .iter()
            .map(|r| {
                format!(
                    "root {} (multiplicity {}): rank {} of {} Taylor coefficients, {}",
                    r.root,
                    r.multiplicity,
                    r.rank,
                    r.taylor.len(),
                    if r.dependent {
                        "dependent"
                    } else {
                        "independent"
                    }
                )
            })
            .collect();
        if parts.is_empty() {
            "alpha has no roots".into()
        } else {
            parts.join("; ")
        }
    }
}

/// Per-root linear dependence of the first `n + 1` Taylor coefficients of
/// `𝓕` over the Gaussian rationals.
pub fn existence_report(a: &QuaternionPolynomial, alpha: &FactoredDenominator) -> ExistenceReport {
    let reduced = a.is_zero() || is_h_reduced(a, &RationalQuaternion::i()).reduced;
    let mut warnings = Vec::new();
    if !reduced {
        warnings.push("A is not i-reduced; the criterion assumes it is".to_string());
    }
    let sf = slope_field(a).to_complex();
    let roots = alpha
        .factors()
        .iter()
        .map(|f| {
            let n = f.multiplicity as usize;
            let mut taylor = sf.taylor(&f.root);
            taylor.resize(n + 1, Biquaternion::zero());
            let m = Matrix::from_rows(taylor.iter().map(|q| q.to_array().to_vec()).collect());
            let rank = m.rank();
            RootReport {
                root: f.root.clone(),
                multiplicity: f.multiplicity,
                taylor,
                rank,
                dependent: rank <= n,
            }
        })
        .collect();
    ExistenceReport {
        roots,
        reduced,
        warnings,
    }
}

/// Degree of `μ` balancing `α Ḃ − α̇ B = μ 𝓕`, `None` when negative.
pub fn default_mu_degree(
    a: &QuaternionPolynomial,
    alpha: &RealPolynomial,
    deg_b: usize,
) -> Option<usize> {
    let d = deg_b as i64 - slope_field(a).deg() as i64 + alpha.deg() as i64 - 1;
    (d >= 0).then_some(d as usize)
}

/// `α·k·t^{k−1} − α̇·t^k`, the image of `t^k` under `B ↦ α Ḃ − α̇ B`.
fn image_of_power(alpha: &RealPolynomial, k: usize) -> RealPolynomial {
    let da = alpha.derivative();
    let a_part = if k == 0 {
        RealPolynomial::zero()
    } else {
        alpha
            .scale(&Rational::from_integer((k as i64).into()))
            .shift_up(k - 1)
    };
    &a_part - &da.shift_up(k)
}

fn add_column(
    rows: &mut [Vec<Rational>],
    col: usize,
    offset: usize,
    p: &RealPolynomial,
    sign: i32,
) {
    for (i, c) in p.coeffs().iter().enumerate() {
        let v = if sign < 0 { -c.clone() } else { c.clone() };
        rows[offset + i][col] += v;
    }
}

/// All `(B, μ)` with `deg B ≤ deg_b`, `deg μ ≤ deg_mu` solving the identity.
/// Constant translations `B += c·α` are reported through
/// [`SolutionBasis::translations`] only; the listed members are the
/// genuine solutions in canonical form.
pub fn solve_linear_system(
    a: &QuaternionPolynomial,
    alpha: &RealPolynomial,
    deg_b: usize,
    deg_mu: Option<usize>,
) -> Result<SolutionBasis, LinearError> {
    if alpha.is_zero() {
        return Err(LinearError::ZeroAlpha);
    }
    if a.is_zero() {
        return Err(LinearError::ZeroPreimage);
    }
    let sf = slope_field(a);
    let fc = sf.components();
    let deg_mu = deg_mu.or_else(|| default_mu_degree(a, alpha, deg_b));
    let n_mu = deg_mu.map_or(0, |d| d + 1);
    let n_b = 4 * (deg_b + 1);
    let top = (alpha.deg() + deg_b).max(n_mu + sf.deg()) + 1;
    let cols = n_mu + n_b;
    let mut rows = vec![vec![Rational::zero(); cols]; 4 * top];
    for c in 0..4 {
        let off = c * top;
        for j in 0..n_mu {
            add_column(&mut rows, j, off, &fc[c].shift_up(j), -1);
        }
        for k in 0..=deg_b {
            add_column(
                &mut rows,
                n_mu + 4 * k + c,
                off,
                &image_of_power(alpha, k),
                1,
            );
        }
    }
    let m = Matrix::with_cols(cols, rows);
    let vectors: Vec<(Vec<Rational>, QuaternionPolynomial)> = m
        .nullspace()
        .into_iter()
        .map(|v| (v[..n_mu].to_vec(), unpack_b(&v[n_mu..], deg_b)))
        .collect();
    Ok(assemble(a, alpha, vectors, Provenance::Linear))
}

fn unpack_b(v: &[Rational], deg_b: usize) -> QuaternionPolynomial {
    QuatPoly::new(
        (0..=deg_b)
            .map(|k| {
                RationalQuaternion::new(
                    v[4 * k].clone(),
                    v[4 * k + 1].clone(),
                    v[4 * k + 2].clone(),
                    v[4 * k + 3].clone(),
                )
            })
            .collect(),
    )
}

/// Separates solutions with `μ ≠ 0` from translations by row reduction on
/// the stacked `[μ | B]` vectors, then canonicalizes the genuine ones.
fn assemble(
    a: &QuaternionPolynomial,
    alpha: &RealPolynomial,
    vectors: Vec<(Vec<Rational>, QuaternionPolynomial)>,
    provenance: Provenance,
) -> SolutionBasis {
    let n_mu = vectors.iter().map(|(m, _)| m.len()).max().unwrap_or(0);
    let n_b = vectors
        .iter()
        .map(|(_, b)| b.coeffs().len())
        .max()
        .unwrap_or(0);
    let rows: Vec<Vec<Rational>> = vectors
        .iter()
        .map(|(mu, b)| {
            let mut r = mu.clone();
            r.resize(n_mu, Rational::zero());
            for k in 0..n_b {
                r.extend(b.coeff(k).to_array());
            }
            r
        })
        .collect();
    let cols = n_mu + 4 * n_b;
    let rref = Matrix::with_cols(cols, rows).rref();
    let mut curves = Vec::new();
    for (k, &p) in rref.pivots.iter().enumerate() {
        if p >= n_mu {
            continue;
        }
        let row = rref.matrix.row(k);
        let mu = RealPolynomial::new(row[..n_mu].to_vec());
        let b = unpack_b(&row[n_mu..], n_b.saturating_sub(1));
        let curve = CurveSolution::new(
            b,
            alpha.clone(),
            Some(mu),
            CurveKind::ArcLength,
            provenance.clone(),
        )
        .canonical();
        curves.push(BasisCurve {
            label: BasisLabel::Index(curves.len()),
            curve,
        });
    }
    let mut basis = SolutionBasis::new(curves, CurveKind::ArcLength);
    if basis.is_empty() {
        let report = FactoredDenominator::from_polynomial(alpha)
            .map(|d| existence_report(a, &d).summary())
            .unwrap_or_else(|_| {
                "existence report unavailable: alpha does not split over the Gaussian rationals"
                    .into()
            });
        basis
            .diagnostics
            .push(format!("only trivial solutions at these degrees; {report}"));
    } else if basis.non_polynomial().next().is_none() {
        basis
            .diagnostics
            .push("all solutions are polynomial".into());
    }
    basis
}

/// Same solution space, with `μ` eliminated through the 2×2 minors of the
/// columns `α Ḃ − α̇ B` and `𝓕`.
pub fn minors_system(
    a: &QuaternionPolynomial,
    alpha: &RealPolynomial,
    deg_b: usize,
) -> Result<SolutionBasis, LinearError> {
    if alpha.is_zero() {
        return Err(LinearError::ZeroAlpha);
    }
    if a.is_zero() {
        return Err(LinearError::ZeroPreimage);
    }
    let sf = slope_field(a);
    let fc = sf.components();
    let n_b = 4 * (deg_b + 1);
    let top = alpha.deg() + deg_b + sf.deg() + 1;
    let pairs: Vec<(usize, usize)> = (0..4)
        .flat_map(|p| (p + 1..4).map(move |q| (p, q)))
        .collect();
    let mut rows = vec![vec![Rational::zero(); n_b]; pairs.len() * top];
    for (pi, &(p, q)) in pairs.iter().enumerate() {
        let off = pi * top;
        for k in 0..=deg_b {
            let img = image_of_power(alpha, k);
            // X_p 𝓕_q − X_q 𝓕_p
            add_column(&mut rows, 4 * k + p, off, &(&img * &fc[q]), 1);
            add_column(&mut rows, 4 * k + q, off, &(&img * &fc[p]), -1);
        }
    }
    let m = Matrix::with_cols(n_b, rows);
    let (lead_c, lead_f) = fc
        .iter()
        .enumerate()
        .find(|(_, f)| !f.is_zero())
        .expect("slope field is nonzero");
    let mut vectors = Vec::new();
    for v in m.nullspace() {
        let b = unpack_b(&v, deg_b);
        let x =
            (&b.derivative().scale_poly(alpha) - &b.scale_poly(&alpha.derivative())).components();
        let Some(mu) = x[lead_c].div_exact(lead_f) else {
            continue;
        };
        if (0..4).any(|c| &mu * &fc[c] != x[c]) {
            continue;
        }
        vectors.push((mu.coeffs().to_vec(), b));
    }
    Ok(assemble(a, alpha, vectors, Provenance::Minors))
}

/// Smallest `deg B` in `from..=to` with a non-polynomial solution.
pub fn sweep_degree(
    a: &QuaternionPolynomial,
    alpha: &RealPolynomial,
    from: usize,
    to: usize,
) -> Result<Option<(usize, SolutionBasis)>, LinearError> {
    for d in from..=to {
        let basis = solve_linear_system(a, alpha, d, None)?;
        if basis.non_polynomial().next().is_some() {
            return Ok(Some((d, basis)));
        }
    }
    Ok(None)
}
