//! Seeded random elements of Gamma0(N), for property checks and numeric spot checks.

use crate::level::Level;
use crate::matrix::UnimodularMatrix;
use num_integer::Integer;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic generator used by the CLI and tests.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random (a b; c d) in Gamma0(N) with c = N t, 0 < |t| <= max_t, and |d| <= max_d.
/// With `gamma2` the matrix is also congruent to the identity mod 2.
pub fn random_gamma0<R: Rng>(level: Level, rng: &mut R, max_t: i64, max_d: i64, gamma2: bool) -> UnimodularMatrix {
    let n = level.n() as i64;
    loop {
        let t = rng.gen_range(1..=max_t) * if rng.gen() { 1 } else { -1 };
        let c = n * t;
        let d = rng.gen_range(-max_d..=max_d);
        if gamma2 && (t.is_odd() || d.is_even()) {
            continue;
        }
        let g = c.gcd(&d);
        if g != 1 {
            continue;
        }
        // a d - b c = 1
        let (_, x, y) = crate::arith::xgcd_i64(d, c).expect("coprime");
        // d x + c y = 1: a = x, b = -y; shift a by multiples of c to vary it
        let shift = rng.gen_range(-3..=3);
        let (a, b) = (x + shift * c, -y + shift * d);
        if gamma2 && (a.is_even() || b.is_odd()) {
            // (a + c, b + d) flips both parities since c is even and d odd
            let (a2, b2) = (a + c, b + d);
            if a2.is_even() || b2.is_odd() {
                continue;
            }
            return UnimodularMatrix::new(a2, b2, c, d).expect("det 1");
        }
        return UnimodularMatrix::new(a, b, c, d).expect("det 1");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_lie_in_the_group() {
        let level = Level::new(105).unwrap();
        let mut rng = seeded_rng(7);
        for gamma2 in [false, true] {
            for _ in 0..200 {
                let g = random_gamma0(level, &mut rng, 20, 500, gamma2);
                assert!(g.in_gamma0(105));
                assert_eq!(g.in_gamma2(), gamma2 || g.in_gamma2());
                if gamma2 {
                    assert!(g.in_gamma2(), "{g}");
                }
            }
        }
    }
}
