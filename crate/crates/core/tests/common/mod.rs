#![allow(dead_code)]

use num_traits::{ToPrimitive, Zero};
use phcurves::algebra::{int, rat};
use phcurves::quaternion::qpoly;
use phcurves::{QuaternionPolynomial, Rational, RationalFunction, RealPolynomial};

pub type Vec3 = [RationalFunction; 3];

pub fn zero3() -> Vec3 {
    Default::default()
}

/// `c · v · (t − β)^e`.
pub fn mono(c: Rational, v: [i64; 3], beta: i64, e: i32) -> Vec3 {
    let base = RealPolynomial::linear_root(int(beta)).pow(e.unsigned_abs());
    let f = if e >= 0 {
        RationalFunction::from_poly(base)
    } else {
        RationalFunction::new(RealPolynomial::from_ints(&[1]), base)
    };
    v.map(|x| f.scale(&(&c * int(x))))
}

pub fn add3(a: &Vec3, b: &Vec3) -> Vec3 {
    [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]]
}

pub fn sub3(a: &Vec3, b: &Vec3) -> Vec3 {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

pub fn scale3(a: &Vec3, c: &Rational) -> Vec3 {
    a.clone().map(|x| x.scale(c))
}

pub fn konst(v: [Rational; 3]) -> Vec3 {
    v.map(RationalFunction::constant)
}

/// Sum of `c · v · (t − β)^e` terms.
pub fn terms(beta: i64, ts: &[(Rational, [i64; 3], i32)]) -> Vec3 {
    ts.iter().fold(zero3(), |acc, (c, v, e)| {
        add3(&acc, &mono(c.clone(), *v, beta, *e))
    })
}

/// `(Σ v_k t^k) / den` with ascending coefficient rows.
pub fn over(rows: &[[i64; 3]], den: RealPolynomial) -> Vec3 {
    let comp = |c: usize| RealPolynomial::from_ints(&rows.iter().map(|r| r[c]).collect::<Vec<_>>());
    [0, 1, 2].map(|c| RationalFunction::new(comp(c), den.clone()))
}

pub fn eq9_a() -> QuaternionPolynomial {
    qpoly(&[[0, 1, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]])
}

pub fn eq10() -> Vec3 {
    over(
        &[
            [0, 150, 0],
            [0, 200, 200],
            [-150, 300, 0],
            [-300, 1200, 0],
            [-96, -160, 480],
            [0, -600, 1200],
            [-300, -300, -300],
            [-100, 200, 0],
            [75, 0, 0],
        ],
        RealPolynomial::monomial(int(1), 4),
    )
}

pub fn r_m7() -> Vec3 {
    terms(
        0,
        &[
            (rat(-1, 3), [0, 1, 0], -6),
            (rat(-2, 5), [0, 0, 1], -5),
            (rat(1, 4), [1, 0, 2], -4),
            (rat(-2, 3), [0, 1, 0], -3),
            (rat(-1, 2), [1, 0, 0], -2),
        ],
    )
}

pub fn r_m6() -> Vec3 {
    terms(
        0,
        &[
            (rat(-2, 5), [0, 1, 0], -5),
            (rat(-1, 2), [0, 0, 1], -4),
            (rat(1, 3), [1, 0, 2], -3),
            (int(-1), [0, 1, 0], -2),
            (int(-1), [1, 0, 0], -1),
        ],
    )
}

pub fn r_0() -> Vec3 {
    terms(
        0,
        &[
            (int(2), [0, 1, 0], 1),
            (int(1), [0, 0, 1], 2),
            (rat(-1, 3), [1, 0, 2], 3),
            (rat(1, 2), [0, 1, 0], 4),
            (rat(1, 5), [1, 0, 0], 5),
        ],
    )
}

pub fn r_1() -> Vec3 {
    terms(
        0,
        &[
            (int(1), [0, 1, 0], 2),
            (rat(2, 3), [0, 0, 1], 3),
            (rat(-1, 4), [1, 0, 2], 4),
            (rat(2, 5), [0, 1, 0], 5),
            (rat(1, 6), [1, 0, 0], 6),
        ],
    )
}

pub fn r_m1() -> Vec3 {
    terms(
        0,
        &[
            (rat(1, 2), [0, 1, 0], -4),
            (rat(2, 3), [0, 1, 1], -3),
            (rat(-1, 2), [1, -2, 0], -2),
            (int(-1), [1, -4, 0], -1),
            (int(-2), [0, 1, -2], 1),
            (int(-1), [1, 1, 1], 2),
            (rat(-1, 3), [1, -2, 0], 3),
            (rat(1, 4), [1, 0, 0], 4),
        ],
    )
}

pub fn p_m2() -> Vec3 {
    terms(
        0,
        &[
            (rat(-1, 2), [0, 1, 0], -4),
            (rat(-2, 3), [0, 0, 1], -3),
            (rat(1, 2), [1, -2, 2], -2),
            (int(-2), [0, 2, 1], -1),
            (int(-1), [1, -2, 2], 1),
            (rat(1, 2), [1, 2, 0], 2),
            (rat(1, 3), [1, 0, 0], 3),
        ],
    )
}

pub fn p_m1() -> Vec3 {
    terms(
        0,
        &[
            (rat(2, 3), [0, 1, 0], -3),
            (int(1), [0, 0, 1], -2),
            (int(-1), [1, 0, 2], -1),
            (int(-1), [1, 0, -2], 1),
            (rat(-1, 2), [1, 0, 2], 2),
            (rat(2, 3), [0, 1, 0], 3),
            (rat(1, 4), [1, 0, 0], 4),
        ],
    )
}

pub fn planar_a() -> QuaternionPolynomial {
    qpoly(&[[0, 0, 0, 1], [0, 0, 0, -1], [-2, 0, 0, 1], [1, 0, 0, 0]])
}

pub fn planar_r0() -> Vec3 {
    terms(
        0,
        &[
            (int(1), [1, 0, 0], -1),
            (int(1), [1, -4, 0], 1),
            (int(1), [-2, -1, 0], 2),
            (rat(1, 3), [7, 6, 0], 3),
            (rat(1, 2), [1, -5, 0], 4),
            (rat(1, 5), [-7, 4, 0], 5),
            (rat(1, 3), [1, 0, 0], 6),
        ],
    )
}

pub fn planar_r1() -> Vec3 {
    terms(
        1,
        &[
            (int(2), [0, 1, 0], -1),
            (rat(-1, 30), [103, -111, 0], 0),
            (int(-1), [4, -6, 0], 1),
            (int(1), [1, 3, 0], 2),
            (rat(10, 3), [1, 0, 0], 3),
            (rat(3, 2), [1, -1, 0], 4),
            (rat(1, 5), [-3, -4, 0], 5),
            (rat(-1, 3), [1, 0, 0], 6),
        ],
    )
}

/// The planar curve with the 4j/t term missing.
pub fn planar_uncorrected() -> Vec3 {
    over(
        &[
            [-3, 12, 0],
            [2, 0, 0],
            [7, 0, 0],
            [-3, -9, 0],
            [-4, 3, 0],
            [1, 0, 0],
        ],
        RealPolynomial::from_ints(&[0, -3, 3]),
    )
}

/// Pre-image of the spatial two-pole example with the `t²` coefficient
/// that reproduces the displayed Taylor data.
pub fn spatial_a() -> QuaternionPolynomial {
    qpoly(&[
        [-1, 2, -1, 2],
        [1, -2, 1, -2],
        [-1, 0, 3, 4],
        [0, 1, -2, -1],
    ])
}

/// The same with the alternative `t²` coefficient.
pub fn spatial_a_uncorrected() -> QuaternionPolynomial {
    qpoly(&[
        [-1, 2, -1, 2],
        [1, -2, 1, -2],
        [-1, -2, 3, 4],
        [0, 1, -2, -1],
    ])
}

pub fn spatial_r0() -> Vec3 {
    let rows = [
        [0, 120, -90],
        [0, 0, 0],
        [-120, 360, 30],
        [-30, -180, 210],
        [-20, -80, -190],
        [-135, 30, 90],
        [108, 36, 18],
        [-20, -20, -10],
    ];
    over(&rows, RealPolynomial::from_ints(&[0, 15]))
}

/// `(1/(15(t−1))) Σ_k v_k (t−1)^k`; `first` is the `k = 1` term.
fn spatial_r1_with(first: Vec3) -> Vec3 {
    let tail: [([i64; 3], i32); 7] = [
        ([120, 60, -120], -1),
        ([480, 60, -120], 1),
        ([150, 120, -240], 2),
        ([-140, -20, -160], 3),
        ([-105, 90, -30], 4),
        ([12, 84, 42], 5),
        ([20, 20, 10], 6),
    ];
    let s = terms(
        1,
        &tail
            .iter()
            .map(|(v, e)| (rat(1, 15), *v, *e))
            .collect::<Vec<_>>(),
    );
    add3(&s, &first)
}

/// Second particular solution with the linear term in `t − 1`.
pub fn spatial_r1() -> Vec3 {
    spatial_r1_with(mono(rat(1, 15), [287, -106, 22], 1, 0))
}

/// Variant with the linear term in `t + 1`.
pub fn spatial_r1_uncorrected() -> Vec3 {
    let t_plus_1 = RationalFunction::new(
        RealPolynomial::from_ints(&[1, 1]),
        RealPolynomial::from_ints(&[-15, 15]),
    );
    spatial_r1_with([287, -106, 22].map(|c| t_plus_1.scale(&int(c))))
}

pub fn envelope_normal() -> QuaternionPolynomial {
    qpoly(&[
        [-1, -1, 1, 0],
        [0, 6, 0, 0],
        [6, -12, -6, 3],
        [-9, 7, 8, -8],
        [0, 0, 3, 6],
        [-3, 3, 0, 0],
        [1, -1, 0, 1],
    ])
}

pub fn envelope_curve_reference() -> Vec3 {
    let x = [
        0, 0, -6, 60, -255, 564, -504, -724, 2634, -2700, 294, 672, 105,
    ];
    let y = [
        6, -64, 312, -888, 1520, -888, -1932, 4384, -3174, 600, 1036, 168, 0,
    ];
    let z = [
        0, 8, -96, 528, -1740, 3720, -4860, 3040, 180, -720, -140, 0, 0,
    ];
    let q = RealPolynomial::from_ints(&[-1, 4, -6, 4, 1]).pow(3);
    let den = &RealPolynomial::monomial(int(6), 4) * &q;
    [x, y, z].map(|c| RationalFunction::new(RealPolynomial::from_ints(&c), den.clone()))
}

pub fn uncorrected_offset() -> RationalFunction {
    let n =
        &RealPolynomial::monomial(int(-1), 3) * &RealPolynomial::from_ints(&[-1, 6, -12, 10, 3]);
    RationalFunction::new(
        n,
        RealPolynomial::from_ints(&[-30, 0, 180, -270, 0, -90, 30]),
    )
}

pub fn recovered_offset() -> RationalFunction {
    RationalFunction::new(
        RealPolynomial::from_ints(&[1, -6, 12, -10, -3]),
        RealPolynomial::monomial(int(30), 3),
    )
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn eval_f64(p: &RealPolynomial, t: f64) -> f64 {
    p.coeffs()
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * t + to_f64(c))
}

pub fn eval_rf_f64(f: &RationalFunction, t: f64) -> f64 {
    eval_f64(f.num(), t) / eval_f64(f.den(), t)
}

/// Adaptive Simpson quadrature.
pub fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn step<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
                + step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
        }
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(f, a, b, fa, fm, fb, whole, tol, 50)
}

pub fn is_zero3(v: &Vec3) -> bool {
    v.iter().all(Zero::is_zero)
}
