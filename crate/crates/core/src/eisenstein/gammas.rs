use crate::arith::xgcd;
use crate::error::Result;
use crate::level::Level;
use crate::matrix::{matrix_to_cusp, Cusp, UnimodularMatrix};
use crate::p1::odd_lift;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

/// The matrix (1 + 4se, -2l; -4sue, 1 + 4se) of Gamma0(N) ∩ Gamma(2) sending 1/u to -1/u,
/// where u is odd, e = N / gcd(u, N) and l u - 2 s e = 1.
///
/// The solution with the least non-negative l is shifted by `choice` steps
/// (l, s) -> (l + 2e, s + u), which gives another valid matrix.
pub fn flip_matrix(level: Level, u: &BigInt, choice: i64) -> UnimodularMatrix {
    assert!(u.is_odd(), "flip_matrix needs an odd denominator");
    let n = BigInt::from(level.n());
    let e = &n / u.gcd(&n);
    let two_e = &e * 2;
    let (g, x, _) = xgcd(u, &two_e).expect("u is odd, hence nonzero");
    debug_assert!(g.is_one());
    let l = x.mod_floor(&two_e) + &two_e * choice;
    let s_num: BigInt = &l * u - 1;
    debug_assert!(s_num.is_multiple_of(&two_e));
    let s = s_num / &two_e;
    let diag = BigInt::one() + BigInt::from(4) * &s * &e;
    let g = UnimodularMatrix::unchecked(
        diag.clone(),
        BigInt::from(-2) * &l,
        BigInt::from(-4) * &s * u * &e,
        diag,
    );
    debug_assert!(g.in_gamma0(level.n()) && g.in_gamma2());
    debug_assert_eq!(
        g.act(&Cusp::from_pair(BigInt::one(), u.clone())),
        Cusp::from_pair(-BigInt::one(), u.clone())
    );
    g
}

/// The pair (g1, g2) fixing the flips 1/(s x + 2) -> -1/(s x + 2) and 1/(s x) -> -1/(s x),
/// with s the odd lift of k modulo N.
///
/// When u = s x + 2 (or s x) shares a factor with N, the Bezout equation is taken modulo
/// 2N / gcd(u, N) instead of 2N (resp. 2N/x), which keeps it solvable.
pub fn build_gammas(level: Level, x: u64, k: i64) -> Result<(UnimodularMatrix, UnimodularMatrix)> {
    build_gammas_with(level, x, k, 0)
}

pub fn build_gammas_with(
    level: Level,
    x: u64,
    k: i64,
    choice: i64,
) -> Result<(UnimodularMatrix, UnimodularMatrix)> {
    level.check_prime_divisor(x)?;
    let s = BigInt::from(odd_lift(k, level.n() as i64));
    let sx = s * x;
    let g1 = flip_matrix(level, &(&sx + 2), choice);
    let g2 = flip_matrix(level, &sx, choice);
    Ok((g1, g2))
}

/// A matrix of Gamma0(N) ∩ Gamma(2) sending the cusp p/q (p, q odd) to -p/q.
///
/// With W = (p x; q y) in SL2(Z), it is W' T^t W^-1 where W' = (p -x; -q y) sends
/// infinity to -p/q; t runs over even residues until the lower-left entry is divisible by N.
/// `choice` adds 2N to the first admissible t.
pub fn reflection_matrix(level: Level, x: &Cusp, choice: i64) -> UnimodularMatrix {
    assert!(x.num.is_odd() && x.den.is_odd(), "reflection needs p, q odd, got {x}");
    let w = matrix_to_cusp(x);
    let w_bar = UnimodularMatrix::unchecked(w.a.clone(), -w.b.clone(), -w.c.clone(), w.d.clone());
    let n = level.n() as i64;
    let w_inv = w.inverse();
    for t in (0..2 * n).step_by(2) {
        let g = w_bar.mul(&UnimodularMatrix::translation(t)).mul(&w_inv);
        if g.in_gamma0(level.n()) {
            let g = if choice == 0 {
                g
            } else {
                w_bar.mul(&UnimodularMatrix::translation(t + 2 * n * choice)).mul(&w_inv)
            };
            debug_assert!(g.in_gamma2() && g.in_gamma0(level.n()));
            debug_assert_eq!(g.act(x), x.negated());
            return g;
        }
    }
    unreachable!("an even t with q t = 2y mod N always exists for odd q");
}
