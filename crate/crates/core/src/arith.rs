//! Exact scalars: rationals, the sawtooth function and Dedekind sums.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: impl Into<BigInt>) -> Rational {
    Rational::from_integer(p.into())
}

/// "p/q", or "p" when q = 1.
pub fn rational_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p.trim().parse().ok()?, q))
        }
        None => Some(rat_int(s.trim().parse::<BigInt>().ok()?)),
    }
}

/// Periodic first Bernoulli function: 0 on integers, frac(x) - 1/2 elsewhere.
pub fn bbar1(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        x - x.floor() - rat(1, 2)
    }
}

/// Extended gcd: returns (g, x, y) with g > 0 and a x + b y = g.
pub fn xgcd(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt, BigInt)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroGcd);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_negative() {
        Ok((-r0, -s0, -t0))
    } else {
        Ok((r0, s0, t0))
    }
}

pub fn xgcd_i64(a: i64, b: i64) -> Result<(i64, i64, i64)> {
    let (g, x, y) = xgcd(&BigInt::from(a), &BigInt::from(b))?;
    Ok((
        g.to_i64().expect("gcd fits"),
        x.to_i64().expect("cofactor fits"),
        y.to_i64().expect("cofactor fits"),
    ))
}

fn check_pair(u: &BigInt, v: &BigInt) -> Result<()> {
    if !v.is_positive() {
        return Err(Error::NonPositiveModulus(v.to_string()));
    }
    let g = u.gcd(v);
    if !g.is_one() {
        return Err(Error::NotCoprime {
            a: u.to_string(),
            b: v.to_string(),
            g: g.to_string(),
        });
    }
    Ok(())
}

/// Dedekind sum s(u, v) = sum over t = 1..v-1 of B1(t/v) B1(tu/v), by direct summation.
///
/// Each summand is (2t - v)(2r - v) / 4v^2 with r = tu mod v, so the loop is pure
/// integer arithmetic and r is advanced by addition.
pub fn dedekind_sum(u: impl Into<BigInt>, v: impl Into<BigInt>) -> Result<Rational> {
    let (u, v) = (u.into(), v.into());
    check_pair(&u, &v)?;
    let vv = v
        .to_i64()
        .filter(|&x| x <= 1 << 31)
        .ok_or_else(|| Error::TooLarge(v.to_string()))?;
    let step = u.mod_floor(&v).to_i64().expect("reduced below v");
    let mut r = 0i64;
    let acc = if vv < 1 << 20 {
        // |summand| < 4v^2 and there are v of them: fits in i64
        let mut acc = 0i64;
        for t in 1..vv {
            r += step;
            if r >= vv {
                r -= vv;
            }
            acc += (2 * t - vv) * (2 * r - vv);
        }
        acc as i128
    } else {
        let mut acc = 0i128;
        for t in 1..vv {
            r += step;
            if r >= vv {
                r -= vv;
            }
            acc += ((2 * t - vv) as i128) * ((2 * r - vv) as i128);
        }
        acc
    };
    Ok(small_ratio(acc, 4 * (vv as i128) * (vv as i128)))
}

/// Same value as [`dedekind_sum`], in O(log v) steps via reciprocity.
///
/// Works with the integer 6v s(u, v): if A = 6u s(v mod u, u) then
/// 6v s(u, v) = (u^2 + v^2 + 1 - 3uv - 2vA) / 2u exactly.
pub fn dedekind_sum_fast(u: impl Into<BigInt>, v: impl Into<BigInt>) -> Result<Rational> {
    let (u, v) = (u.into(), v.into());
    check_pair(&u, &v)?;
    let six_v = BigInt::from(6) * &v;
    if let (Some(uu), Some(vv)) = (u.mod_floor(&v).to_i128(), v.to_i128()) {
        if vv < (1i128 << 40) {
            return Ok(small_ratio(six_v_sum_small(uu, vv), 6 * vv));
        }
    }
    Ok(Rational::new(six_v_sum_big(u.mod_floor(&v), v), six_v))
}

/// p/q for machine-size p and q > 0, reduced before leaving i128.
fn small_ratio(p: i128, q: i128) -> Rational {
    let g = p.gcd(&q);
    Rational::new_raw(BigInt::from(p / g), BigInt::from(q / g))
}

fn six_v_sum_small(u: i128, v: i128) -> i128 {
    let mut chain = Vec::new();
    let (mut u, mut v) = (u, v);
    while v != 1 {
        chain.push((u, v));
        let next = (v % u, u);
        u = next.0;
        v = next.1;
    }
    let mut acc = 0i128;
    for &(u, v) in chain.iter().rev() {
        let num = u * u + v * v + 1 - 3 * u * v - 2 * v * acc;
        debug_assert_eq!(num % (2 * u), 0);
        acc = num / (2 * u);
    }
    acc
}

fn six_v_sum_big(u: BigInt, v: BigInt) -> BigInt {
    let mut chain = Vec::new();
    let (mut u, mut v) = (u, v);
    while !v.is_one() {
        let r = v.mod_floor(&u);
        chain.push((u.clone(), v));
        v = u;
        u = r;
    }
    let mut acc = BigInt::zero();
    for (u, v) in chain.into_iter().rev() {
        let num: BigInt = &u * &u + &v * &v + 1 - BigInt::from(3) * &u * &v - BigInt::from(2) * &v * &acc;
        let two_u = BigInt::from(2) * &u;
        debug_assert!(num.is_multiple_of(&two_u));
        acc = num / two_u;
    }
    acc
}

/// Sum of divisors.
pub fn sigma1(n: u64) -> u64 {
    let mut s = 0;
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            s += d;
            if d * d != n {
                s += n / d;
            }
        }
        d += 1;
    }
    s
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Prime factors in increasing order, each listed once.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Inverse of a modulo n, if a is a unit.
pub fn inverse_mod(a: i64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (g, x, _) = xgcd_i64(a.rem_euclid(n as i64), n as i64).ok()?;
    (g == 1).then(|| x.rem_euclid(n as i64) as u64)
}

pub fn to_big(x: i64) -> BigInt {
    BigInt::from(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sawtooth_values() {
        assert_eq!(bbar1(&rat(0, 1)), rat(0, 1));
        assert_eq!(bbar1(&rat(1, 2)), rat(0, 1));
        assert_eq!(bbar1(&rat(7, 3)), rat(-1, 6));
        assert_eq!(bbar1(&rat(-1, 3)), rat(1, 6));
    }

    #[test]
    fn xgcd_examples() {
        let f = |a: i64, b: i64| xgcd_i64(a, b).unwrap();
        assert_eq!(f(3, 5), (1, 2, -1));
        assert_eq!(f(15, 1), (1, 0, 1));
        assert_eq!(f(6, 4), (2, 1, -1));
        assert_eq!(f(-4, 6), (2, 1, 1));
        assert_eq!(xgcd_i64(0, 0), Err(Error::ZeroGcd));
    }

    #[test]
    fn dedekind_examples() {
        assert_eq!(dedekind_sum(0, 1).unwrap(), rat(0, 1));
        assert_eq!(dedekind_sum(1, 3).unwrap(), rat(1, 18));
        assert_eq!(dedekind_sum(1, 15).unwrap(), rat(91, 90));
        assert_eq!(dedekind_sum(1, 30).unwrap(), rat(203, 90));
        assert_eq!(dedekind_sum_fast(1, 3).unwrap(), rat(1, 18));
        assert_eq!(dedekind_sum_fast(0, 1).unwrap(), rat(0, 1));
        assert_eq!(dedekind_sum_fast(5, 7).unwrap(), dedekind_sum(5, 7).unwrap());
        assert!(matches!(dedekind_sum(2, 4), Err(Error::NotCoprime { .. })));
        assert!(matches!(dedekind_sum_fast(1, 0), Err(Error::NonPositiveModulus(_))));
    }

    #[test]
    fn dedekind_by_sawtooth() {
        // definitional summand, written out with bbar1
        for v in 1..40i64 {
            for u in -v..2 * v {
                if u.gcd(&v) != 1 {
                    continue;
                }
                let mut s = Rational::zero();
                for t in 1..v {
                    s += bbar1(&rat(t, v)) * bbar1(&rat(t * u, v));
                }
                assert_eq!(dedekind_sum(u, v).unwrap(), s, "s({u},{v})");
            }
        }
    }

    #[test]
    fn fast_path_handles_huge_moduli() {
        let v: BigInt = BigInt::from(10).pow(30) + 7;
        let u: BigInt = BigInt::from(10).pow(17) + 3;
        let s = dedekind_sum_fast(u.clone(), v.clone()).unwrap();
        let t = dedekind_sum_fast(v.clone(), u.clone()).unwrap();
        let uv = Rational::new(u.clone(), v.clone());
        let recip = rat(-1, 4)
            + (uv.clone() + uv.recip() + Rational::new(BigInt::one(), &u * &v)) / rat_int(12);
        assert_eq!(s + t, recip);
    }

    #[test]
    fn divisor_sums() {
        assert_eq!(sigma1(1), 1);
        assert_eq!(sigma1(12), 28);
        assert_eq!(prime_factors(105), vec![3, 5, 7]);
        assert_eq!(inverse_mod(2, 15), Some(8));
        assert_eq!(inverse_mod(3, 15), None);
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_string(&rat(-14, 1)), "-14");
        assert_eq!(rational_string(&rat(6, 4)), "3/2");
        assert_eq!(parse_rational("-3/6"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("x"), None);
    }
}
