//! Random basis jobs, for smoke testing and benchmarking.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use phcurves::algebra::Rational;
use phcurves::quaternion::is_h_reduced;
use phcurves::{CurveKind, Quaternion, QuaternionPolynomial, RationalQuaternion};

use crate::job::Job;

fn random_preimage(rng: &mut ChaCha8Rng) -> QuaternionPolynomial {
    loop {
        let deg = rng.gen_range(1..=2);
        let coeffs: Vec<RationalQuaternion> = (0..=deg)
            .map(|_| {
                Quaternion::from_ints(
                    rng.gen_range(-3..=3),
                    rng.gen_range(-3..=3),
                    rng.gen_range(-3..=3),
                    rng.gen_range(-3..=3),
                )
            })
            .collect();
        let a = QuaternionPolynomial::new(coeffs);
        if a.deg() == deg && is_h_reduced(&a, &Quaternion::i()).reduced {
            return a;
        }
    }
}

/// A `basis` job with a random î-reduced pre-image and a small integer pole.
pub fn generate(seed: u64) -> Job {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_preimage(&mut rng);
    let pole = Rational::from_integer(rng.gen_range(-3i64..=3).into());
    Job::Basis {
        a,
        pole,
        range: [-7, 1],
        mode: CurveKind::ArcLength,
    }
}
