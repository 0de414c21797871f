//! Partial fraction decomposition over Gaussian-rational poles and exact
//! integration of residue-free rational functions.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::poly::{ComplexPolynomial, Poly, RealPolynomial};
use super::ratfunc::RationalFunction;
use super::scalar::{int, rational_sqrt, GaussianRational, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PartialFractionError {
    #[error("invalid factored denominator: {0}")]
    InvalidFactors(String),
    #[error("factored denominator {factored} does not match the reduced denominator {actual}")]
    DenominatorMismatch { factored: String, actual: String },
    #[error("nonzero residue {residue} at pole {root}")]
    NonzeroResidue {
        root: Box<GaussianRational>,
        residue: Box<GaussianRational>,
    },
    #[error("decomposition is not conjugate-symmetric; the function is not real")]
    NotReal,
    #[error("denominator {0} does not split into rational or Gaussian-rational linear factors")]
    UnsupportedDenominator(String),
}

/// A pole `β` of multiplicity `k`, i.e. the factor `(t - β)^k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PoleFactor {
    pub root: GaussianRational,
    pub multiplicity: u32,
}

impl fmt::Debug for PoleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(t - {})^{}", self.root, self.multiplicity)
    }
}

/// `∏ (t - β_i)^{k_i}` with pairwise distinct roots and conjugate-closed
/// non-real roots.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FactoredDenominator {
    factors: Vec<PoleFactor>,
}

impl fmt::Debug for FactoredDenominator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|p| format!("{p:?}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FactoredDenominator {
    pub fn new(factors: Vec<(GaussianRational, u32)>) -> Result<Self, PartialFractionError> {
        let factors: Vec<PoleFactor> = factors
            .into_iter()
            .map(|(root, multiplicity)| PoleFactor { root, multiplicity })
            .collect();
        for (i, a) in factors.iter().enumerate() {
            if a.multiplicity == 0 {
                return Err(PartialFractionError::InvalidFactors(format!(
                    "zero multiplicity at {}",
                    a.root
                )));
            }
            if factors[i + 1..].iter().any(|b| b.root == a.root) {
                return Err(PartialFractionError::InvalidFactors(format!(
                    "repeated root {}",
                    a.root
                )));
            }
            if !a.root.is_real() {
                let c = a.root.conj();
                if !factors
                    .iter()
                    .any(|b| b.root == c && b.multiplicity == a.multiplicity)
                {
                    return Err(PartialFractionError::InvalidFactors(format!(
                        "conjugate of {} missing or with different multiplicity",
                        a.root
                    )));
                }
            }
        }
        Ok(Self { factors })
    }

    /// Denominator with rational roots only.
    pub fn real(roots: &[(Rational, u32)]) -> Result<Self, PartialFractionError> {
        Self::new(
            roots
                .iter()
                .map(|(r, k)| (GaussianRational::real(r.clone()), *k))
                .collect(),
        )
    }

    /// The trivial denominator 1.
    pub fn none() -> Self {
        Self::default()
    }

    pub fn factors(&self) -> &[PoleFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.multiplicity as usize).sum()
    }

    pub fn index_of(&self, root: &GaussianRational) -> Option<usize> {
        self.factors.iter().position(|f| &f.root == root)
    }

    pub fn expand(&self) -> ComplexPolynomial {
        self.factors
            .iter()
            .fold(ComplexPolynomial::one(), |acc, f| {
                &acc * &ComplexPolynomial::linear_root(f.root.clone()).pow(f.multiplicity)
            })
    }

    /// The expanded denominator as a real polynomial.
    pub fn expand_real(&self) -> RealPolynomial {
        self.expand()
            .to_real()
            .expect("conjugate-closed roots give a real product")
    }

    /// `den / (t - β_i)^{k_i}`.
    pub fn cofactor(&self, i: usize) -> ComplexPolynomial {
        self.factors
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .fold(ComplexPolynomial::one(), |acc, (_, f)| {
                &acc * &ComplexPolynomial::linear_root(f.root.clone()).pow(f.multiplicity)
            })
    }

    /// Factors a real polynomial whose roots are rational, or which leaves
    /// a power of one quadratic with Gaussian-rational roots after rational
    /// roots are removed. General root isolation is out of scope.
    pub fn from_polynomial(p: &RealPolynomial) -> Result<Self, PartialFractionError> {
        if p.is_zero() {
            return Err(PartialFractionError::UnsupportedDenominator("0".into()));
        }
        let mut rest = p.monic();
        let mut factors: Vec<(GaussianRational, u32)> = Vec::new();
        for root in rational_roots(&rest)
            .map_err(|_| PartialFractionError::UnsupportedDenominator(p.to_string()))?
        {
            let lin = RealPolynomial::linear_root(root.clone());
            let mut k = 0;
            while let Some(q) = rest.div_exact(&lin) {
                rest = q;
                k += 1;
            }
            factors.push((GaussianRational::real(root), k));
        }
        if !rest.is_constant() {
            let sq = rest.squarefree();
            if sq.deg() != 2 {
                return Err(PartialFractionError::UnsupportedDenominator(p.to_string()));
            }
            let b = sq.coeff(1);
            let c = sq.coeff(0);
            let disc = &b * &b - &c * int(4);
            let im = rational_sqrt(&-disc)
                .ok_or_else(|| PartialFractionError::UnsupportedDenominator(p.to_string()))?;
            let mut k = 0;
            while let Some(q) = rest.div_exact(&sq) {
                rest = q;
                k += 1;
            }
            if !rest.is_constant() {
                return Err(PartialFractionError::UnsupportedDenominator(p.to_string()));
            }
            let re = -b / int(2);
            let im = im / int(2);
            factors.push((GaussianRational::new(re.clone(), im.clone()), k));
            factors.push((GaussianRational::new(re, -im), k));
        }
        Self::new(factors)
    }
}

/// Distinct rational roots of `p`, ascending. Fails if the integer
/// coefficients needed for the candidate search are too large to factor by
/// trial division.
pub fn rational_roots(p: &RealPolynomial) -> Result<Vec<Rational>, &'static str> {
    if p.is_zero() {
        return Err("zero polynomial");
    }
    let (_, prim) = p.primitive_part();
    let mut roots = Vec::new();
    let mut low = 0;
    while prim.coeff(low).is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(Rational::zero());
    }
    let reduced = Poly::new(prim.coeffs()[low..].to_vec());
    if reduced.deg() == 0 {
        return Ok(roots);
    }
    let c0 = reduced.coeff(0).to_integer().abs();
    let cn = reduced.leading().to_integer().abs();
    let ps = divisors(&c0)?;
    let qs = divisors(&cn)?;
    let mut cands: Vec<Rational> = Vec::new();
    for a in &ps {
        for b in &qs {
            let r = Rational::new(a.clone(), b.clone());
            cands.push(r.clone());
            cands.push(-r);
        }
    }
    cands.sort();
    cands.dedup();
    for c in cands {
        if reduced.eval(&c).is_zero() {
            roots.push(c);
        }
    }
    roots.sort();
    Ok(roots)
}

pub(crate) fn divisors(n: &BigInt) -> Result<Vec<BigInt>, &'static str> {
    let n = n
        .to_u64()
        .filter(|&v| v < (1u64 << 48))
        .ok_or("coefficient too large")?;
    let mut out = Vec::new();
    let r = n.sqrt();
    for d in 1..=r {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d != n / d {
                out.push(BigInt::from(n / d));
            }
        }
    }
    Ok(out)
}

/// Pole coefficients `λ_{i,j}` of one root. `coefficients[m]` multiplies
/// `(t - root)^{-(m+1)}`.
#[derive(Clone, PartialEq, Debug)]
pub struct PoleTerms {
    pub root: GaussianRational,
    pub coefficients: Vec<GaussianRational>,
}

impl PoleTerms {
    /// Coefficient of `(t - root)^exponent` for `exponent <= -1`.
    pub fn at(&self, exponent: i32) -> GaussianRational {
        assert!(exponent <= -1, "pole exponents are negative");
        self.coefficients
            .get((-exponent - 1) as usize)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn residue(&self) -> GaussianRational {
        self.at(-1)
    }

    /// Highest pole order with nonzero coefficient.
    pub fn order(&self) -> u32 {
        self.coefficients
            .iter()
            .rposition(|c| !c.is_zero())
            .map_or(0, |p| p as u32 + 1)
    }
}

/// `p(t) + Σ_i Σ_j λ_{i,j} (t - β_i)^j`.
#[derive(Clone, PartialEq, Debug)]
pub struct PartialFractionForm {
    pub polynomial_part: RealPolynomial,
    pub poles: Vec<PoleTerms>,
}

impl PartialFractionForm {
    pub fn polynomial(p: RealPolynomial) -> Self {
        Self {
            polynomial_part: p,
            poles: Vec::new(),
        }
    }

    /// Coefficient `λ_{i,j}`.
    pub fn coefficient(&self, pole: usize, exponent: i32) -> GaussianRational {
        self.poles[pole].at(exponent)
    }

    /// Denominator made of the poles with their current orders.
    pub fn denominator(&self) -> FactoredDenominator {
        FactoredDenominator {
            factors: self
                .poles
                .iter()
                .filter(|p| p.order() > 0)
                .map(|p| PoleFactor {
                    root: p.root.clone(),
                    multiplicity: p.order(),
                })
                .collect(),
        }
    }

    /// True when coefficients at conjugate poles are conjugate.
    pub fn is_conjugate_symmetric(&self) -> bool {
        self.poles.iter().all(|p| {
            if p.root.is_real() {
                return p.coefficients.iter().all(GaussianRational::is_real);
            }
            let c = p.root.conj();
            self.poles.iter().any(|q| {
                q.root == c
                    && (0..p.coefficients.len().max(q.coefficients.len()))
                        .all(|m| p.at(-(m as i32) - 1).conj() == q.at(-(m as i32) - 1))
            })
        })
    }

    /// Sum of all terms over the Gaussian rationals: `(num, den)`.
    pub fn reconstruct_complex(&self) -> (ComplexPolynomial, ComplexPolynomial) {
        let den = self.denominator();
        let d = den.expand();
        let mut num = &self.polynomial_part.to_complex() * &d;
        for p in &self.poles {
            let Some(i) = den.index_of(&p.root) else {
                continue;
            };
            let k = den.factors[i].multiplicity;
            let cof = den.cofactor(i);
            let lin = ComplexPolynomial::linear_root(p.root.clone());
            for e in 1..=k {
                let c = p.at(-(e as i32));
                if c.is_zero() {
                    continue;
                }
                let term = &cof * &lin.pow(k - e);
                num = &num + &term.scale(&c);
            }
        }
        (num, d)
    }

    /// The real rational function this form represents.
    pub fn reconstruct(&self) -> Result<RationalFunction, PartialFractionError> {
        let (num, den) = self.reconstruct_complex();
        let num = num.to_real().ok_or(PartialFractionError::NotReal)?;
        let den = den.to_real().ok_or(PartialFractionError::NotReal)?;
        Ok(RationalFunction::new(num, den))
    }

    /// Termwise antiderivative. The polynomial part is integrated in powers
    /// of `t` with zero constant term and `(t-β)^j` becomes
    /// `(t-β)^{j+1}/(j+1)`.
    pub fn antiderivative(&self) -> Result<Self, PartialFractionError> {
        let mut poles = Vec::new();
        for p in &self.poles {
            let res = p.residue();
            if !res.is_zero() {
                return Err(PartialFractionError::NonzeroResidue {
                    root: Box::new(p.root.clone()),
                    residue: Box::new(res),
                });
            }
            let coefficients = (1..p.coefficients.len())
                .map(|m| {
                    // exponent j = -(m+1) integrates to exponent -m
                    let j = -(m as i64) - 1;
                    p.coefficients[m].clone() / GaussianRational::from_int(j + 1)
                })
                .collect();
            poles.push(PoleTerms {
                root: p.root.clone(),
                coefficients,
            });
        }
        Ok(Self {
            polynomial_part: self.polynomial_part.integral(),
            poles,
        })
    }
}

/// Decomposes `num / den` where `den` is given in factored form. The
/// numerator need not be reduced against `den`; coefficients of absent
/// powers come out zero.
pub fn decompose(
    num: &ComplexPolynomial,
    den: &FactoredDenominator,
) -> (ComplexPolynomial, Vec<PoleTerms>) {
    let d = den.expand();
    let (q, r) = num.div_rem(&d);
    let mut poles = Vec::with_capacity(den.len());
    for (i, f) in den.factors.iter().enumerate() {
        let k = f.multiplicity as usize;
        let rs = r.taylor_coefficients(&f.root);
        let gs = den.cofactor(i).taylor_coefficients(&f.root);
        let g0_inv = GaussianRational::one() / gs[0].clone();
        // power series quotient r/g in u = t - β up to u^{k-1}
        let mut series: Vec<GaussianRational> = Vec::with_capacity(k);
        for m in 0..k {
            let mut acc = rs.get(m).cloned().unwrap_or_else(GaussianRational::zero);
            for (l, s) in series.iter().enumerate() {
                if let Some(g) = gs.get(m - l) {
                    acc = acc - s.clone() * g.clone();
                }
            }
            series.push(acc * g0_inv.clone());
        }
        // series[m] multiplies u^{m-k}, i.e. exponent -(k-m)
        let coefficients = (0..k).map(|e| series[k - 1 - e].clone()).collect();
        poles.push(PoleTerms {
            root: f.root.clone(),
            coefficients,
        });
    }
    (q, poles)
}

/// Partial fractions of a real rational function. `den` must reproduce the
/// reduced denominator of `f`.
pub fn partial_fractions(
    f: &RationalFunction,
    den: &FactoredDenominator,
) -> Result<PartialFractionForm, PartialFractionError> {
    let expanded = den.expand_real();
    if &expanded != f.den() {
        return Err(PartialFractionError::DenominatorMismatch {
            factored: format!("{den:?}"),
            actual: f.den().to_string(),
        });
    }
    let (q, poles) = decompose(&f.num().to_complex(), den);
    let polynomial_part = q.to_real().ok_or(PartialFractionError::NotReal)?;
    let form = PartialFractionForm {
        polynomial_part,
        poles,
    };
    if !form.is_conjugate_symmetric() {
        return Err(PartialFractionError::NotReal);
    }
    Ok(form)
}

/// Exact antiderivative of a residue-free partial fraction form.
pub fn integrate_zero_residue(
    pf: &PartialFractionForm,
) -> Result<RationalFunction, PartialFractionError> {
    pf.antiderivative()?.reconstruct()
}
