//! Exact real root isolation by Sturm sequences.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::RealPolynomial;
use super::scalar::{int, Rational};

/// An isolating interval `[lo, hi]` holding exactly one real root. `lo == hi`
/// means the root is the rational `lo` itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootInterval {
    #[serde(with = "crate::serde_util::rational")]
    pub lo: Rational,
    #[serde(with = "crate::serde_util::rational")]
    pub hi: Rational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<RealPolynomial>,
}

impl SturmSequence {
    /// Sturm chain of the squarefree part of `p`. Panics on the zero polynomial.
    pub fn new(p: &RealPolynomial) -> Self {
        assert!(!p.is_zero(), "Sturm sequence of the zero polynomial");
        let p0 = p.squarefree();
        let mut seq = vec![p0.clone(), p0.derivative()];
        while !seq.last().unwrap().is_zero() && !seq.last().unwrap().is_constant() {
            let n = seq.len();
            let r = -seq[n - 2].rem(&seq[n - 1]);
            seq.push(r);
        }
        seq.retain(|q| !q.is_zero());
        Self { seq }
    }

    pub fn polynomial(&self) -> &RealPolynomial {
        &self.seq[0]
    }

    pub fn sign_changes(&self, x: &Rational) -> usize {
        let mut changes = 0;
        let mut last = 0;
        for q in &self.seq {
            let s = q.sign_at(x);
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.sign_changes(a) - self.sign_changes(b)
    }
}

/// Isolating intervals for the distinct real roots of `p` in `[a, b]`,
/// ascending. The zero polynomial and empty intervals give no roots.
pub fn isolate_roots(p: &RealPolynomial, a: &Rational, b: &Rational) -> Vec<RootInterval> {
    if p.is_zero() || a > b || p.is_constant() {
        return Vec::new();
    }
    let s = SturmSequence::new(p);
    let mut out = Vec::new();
    if s.polynomial().eval(a).is_zero() {
        out.push(RootInterval {
            lo: a.clone(),
            hi: a.clone(),
        });
    }
    let n = s.count(a, b);
    isolate(&s, a.clone(), b.clone(), n, &mut out);
    out
}

fn isolate(
    s: &SturmSequence,
    lo: Rational,
    hi: Rational,
    count: usize,
    out: &mut Vec<RootInterval>,
) {
    if count == 0 {
        return;
    }
    if count == 1 {
        if s.polynomial().eval(&hi).is_zero() {
            out.push(RootInterval { lo: hi.clone(), hi });
        } else {
            out.push(RootInterval { lo, hi });
        }
        return;
    }
    let mid = (&lo + &hi) / int(2);
    let left = s.count(&lo, &mid);
    isolate(s, lo, mid.clone(), left, out);
    isolate(s, mid, hi, count - left, out);
}

/// Shrinks an isolating interval until its width is at most `tol`.
pub fn refine(p: &RealPolynomial, iv: &RootInterval, tol: &Rational) -> RootInterval {
    let mut iv = iv.clone();
    if iv.is_exact() {
        return iv;
    }
    let s = SturmSequence::new(p);
    let q = s.polynomial();
    while &iv.width() > tol {
        let mid = (&iv.lo + &iv.hi) / int(2);
        if q.eval(&mid).is_zero() {
            return RootInterval {
                lo: mid.clone(),
                hi: mid,
            };
        }
        if s.count(&iv.lo, &mid) == 1 {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
    iv
}

/// Cauchy bound: all real roots lie in `[-B, B]`.
pub fn root_bound(p: &RealPolynomial) -> Rational {
    if p.is_constant() {
        return Rational::one();
    }
    let lead = p.leading();
    let m = p.coeffs()[..p.deg()]
        .iter()
        .map(|c| (c / &lead).abs())
        .fold(Rational::zero(), |acc, v| if v > acc { v } else { acc });
    m + Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> RealPolynomial {
        RealPolynomial::from_ints(cs)
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_roots(&p(&[1, 0, 1]), &int(-10), &int(10)).is_empty());
    }

    #[test]
    fn two_roots() {
        let ivs = isolate_roots(&p(&[0, -1, 1]), &int(-1), &int(2));
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].contains(&int(0)));
        assert!(ivs[1].contains(&int(1)));
    }

    #[test]
    fn irrational_roots_refined() {
        let q = p(&[-2, 0, 1]);
        let ivs = isolate_roots(&q, &int(0), &int(3));
        assert_eq!(ivs.len(), 1);
        let r = refine(&q, &ivs[0], &rat(1, 1000));
        assert!(r.lo < rat(1415, 1000) && r.hi > rat(1414, 1000));
    }

    #[test]
    fn multiple_root_counted_once() {
        let q = &p(&[-1, 1]).pow(3) * &p(&[2, 1]);
        let ivs = isolate_roots(&q, &int(-5), &int(5));
        assert_eq!(ivs.len(), 2);
    }

    proptest! {
        #[test]
        fn isolates_planted_roots(mut roots in proptest::collection::btree_set(-8i64..9, 1..5)) {
            let roots: Vec<i64> = std::mem::take(&mut roots).into_iter().collect();
            let q = roots.iter().fold(p(&[1, 0, 1]), |acc, &r| &acc * &p(&[-r, 1]));
            let ivs = isolate_roots(&q, &int(-10), &int(10));
            prop_assert_eq!(ivs.len(), roots.len());
            for (iv, r) in ivs.iter().zip(&roots) {
                prop_assert!(iv.contains(&int(*r)));
            }
        }
    }
}
