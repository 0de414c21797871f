//! Job file schema.

use serde::{Deserialize, Serialize};

use phcurves::algebra::{GaussianRational, Rational, RealPolynomial};
use phcurves::{
    BasisLabel, CurveKind, CurveSolution, HermiteData, QuaternionPolynomial, RationalFunction,
};

fn arc_length() -> CurveKind {
    CurveKind::ArcLength
}

/// A pole given either as a rational string/integer or as `{"re", "im"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Root {
    Real(#[serde(with = "phcurves::serde_util::rational")] Rational),
    Complex(GaussianRational),
}

impl Root {
    pub fn to_gaussian(&self) -> GaussianRational {
        match self {
            Root::Real(r) => GaussianRational::real(r.clone()),
            Root::Complex(g) => g.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoleSpec {
    pub root: Root,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Job {
    /// Pre-image of a vectorial hodograph.
    Factor { hodograph: QuaternionPolynomial },
    ConstructLinear {
        #[serde(rename = "A")]
        a: QuaternionPolynomial,
        #[serde(with = "phcurves::serde_util::real_poly")]
        alpha: RealPolynomial,
        deg_b: usize,
        #[serde(default)]
        deg_mu: Option<usize>,
    },
    /// Either integrates a given `lambda` or builds basis curves for
    /// `labels` (all free labels by default).
    ConstructResidue {
        #[serde(rename = "A")]
        a: QuaternionPolynomial,
        poles: Vec<PoleSpec>,
        #[serde(default)]
        polynomial_degree: Option<u32>,
        #[serde(default = "arc_length")]
        mode: CurveKind,
        #[serde(default)]
        lambda: Option<RationalFunction>,
        #[serde(default)]
        labels: Option<Vec<BasisLabel>>,
    },
    /// Envelope for the offset `h`. Without `normal`, the first nonzero
    /// osculating normal of degree `deg_n` (or the smallest such degree)
    /// is used.
    ConstructDual {
        #[serde(rename = "A")]
        a: QuaternionPolynomial,
        h: RationalFunction,
        #[serde(default)]
        normal: Option<QuaternionPolynomial>,
        #[serde(default)]
        deg_n: Option<usize>,
    },
    /// Basis for a single real pole with labels in `range` (inclusive).
    Basis {
        #[serde(rename = "A")]
        a: QuaternionPolynomial,
        #[serde(with = "phcurves::serde_util::rational")]
        pole: Rational,
        range: [i32; 2],
        #[serde(default = "arc_length")]
        mode: CurveKind,
    },
    Verify {
        curve: CurveSolution,
        #[serde(rename = "A", default)]
        a: Option<QuaternionPolynomial>,
        #[serde(default, with = "interval_opt")]
        interval: Option<[Rational; 2]>,
    },
    Hermite {
        #[serde(rename = "A")]
        a: QuaternionPolynomial,
        data: HermiteData,
        #[serde(with = "phcurves::serde_util::rational")]
        pole: Rational,
        /// Pole exponents (negative) and polynomial powers; defaults to
        /// `[-7, -6, -1, 0, 1]`.
        #[serde(default)]
        labels: Option<Vec<i32>>,
    },
    /// Samples `curve` at `from, from + step, …, to`.
    Sample {
        curve: CurveSolution,
        #[serde(with = "phcurves::serde_util::rational")]
        from: Rational,
        #[serde(with = "phcurves::serde_util::rational")]
        to: Rational,
        #[serde(with = "phcurves::serde_util::rational")]
        step: Rational,
    },
}

impl Job {
    pub fn name(&self) -> &'static str {
        match self {
            Job::Factor { .. } => "factor",
            Job::ConstructLinear { .. } => "construct-linear",
            Job::ConstructResidue { .. } => "construct-residue",
            Job::ConstructDual { .. } => "construct-dual",
            Job::Basis { .. } => "basis",
            Job::Verify { .. } => "verify",
            Job::Hermite { .. } => "hermite",
            Job::Sample { .. } => "sample",
        }
    }
}

mod interval_opt {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<[Rational; 2]>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => phcurves::serde_util::rational_vec::serialize(v, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<[Rational; 2]>, D::Error> {
        #[derive(Deserialize)]
        struct W(#[serde(with = "phcurves::serde_util::rational_vec")] Vec<Rational>);
        let Some(W(v)) = Option::<W>::deserialize(d)? else {
            return Ok(None);
        };
        let [lo, hi]: [Rational; 2] = v
            .try_into()
            .map_err(|_| serde::de::Error::custom("interval must have two entries"))?;
        Ok(Some([lo, hi]))
    }
}
