//! 2x2 integer matrices of determinant 1 and their action on cusps.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use std::fmt;

/// A point of P1(Q): num/den in lowest terms with den >= 0; 1/0 is the cusp at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cusp {
    pub num: BigInt,
    pub den: BigInt,
}

impl Cusp {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Cusp> {
        let (num, den) = (num.into(), den.into());
        let g = num.gcd(&den);
        if !g.is_one() {
            return Err(Error::NotCoprime {
                a: num.to_string(),
                b: den.to_string(),
                g: g.to_string(),
            });
        }
        Ok(Self::normalized(num, den))
    }

    /// Reduces and normalizes the sign; panics on (0, 0).
    pub fn from_pair(num: BigInt, den: BigInt) -> Cusp {
        let g = num.gcd(&den);
        assert!(!g.is_zero(), "0/0 is not a cusp");
        Self::normalized(num / &g, den / g)
    }

    fn normalized(num: BigInt, den: BigInt) -> Cusp {
        if den.is_negative() || (den.is_zero() && num.is_negative()) {
            Cusp { num: -num, den: -den }
        } else {
            Cusp { num, den }
        }
    }

    pub fn infinity() -> Cusp {
        Cusp { num: BigInt::one(), den: BigInt::zero() }
    }

    pub fn zero() -> Cusp {
        Cusp { num: BigInt::zero(), den: BigInt::one() }
    }

    pub fn is_infinity(&self) -> bool {
        self.den.is_zero()
    }

    /// Reflection x -> -x.
    pub fn negated(&self) -> Cusp {
        Self::normalized(-self.num.clone(), self.den.clone())
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            write!(f, "oo")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Integer matrix (a b; c d) with ad - bc = 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl UnimodularMatrix {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = UnimodularMatrix { a: a.into(), b: b.into(), c: c.into(), d: d.into() };
        if !(&m.a * &m.d - &m.b * &m.c).is_one() {
            return Err(Error::Determinant(m.to_string()));
        }
        Ok(m)
    }

    pub(crate) fn unchecked(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        let m = UnimodularMatrix { a, b, c, d };
        debug_assert!((&m.a * &m.d - &m.b * &m.c).is_one(), "det != 1 for {m}");
        m
    }

    pub fn identity() -> Self {
        Self::unchecked(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    /// S = (0 -1; 1 0).
    pub fn s() -> Self {
        Self::unchecked(BigInt::zero(), -BigInt::one(), BigInt::one(), BigInt::zero())
    }

    /// R = (0 -1; 1 -1), of order 3 in PSL2(Z).
    pub fn r() -> Self {
        Self::unchecked(BigInt::zero(), -BigInt::one(), BigInt::one(), -BigInt::one())
    }

    pub fn translation(t: impl Into<BigInt>) -> Self {
        Self::unchecked(BigInt::one(), t.into(), BigInt::zero(), BigInt::one())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::unchecked(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }

    pub fn inverse(&self) -> Self {
        Self::unchecked(self.d.clone(), -self.b.clone(), -self.c.clone(), self.a.clone())
    }

    pub fn neg(&self) -> Self {
        Self::unchecked(-self.a.clone(), -self.b.clone(), -self.c.clone(), -self.d.clone())
    }

    /// Moebius action on a cusp.
    pub fn act(&self, x: &Cusp) -> Cusp {
        Cusp::from_pair(&self.a * &x.num + &self.b * &x.den, &self.c * &x.num + &self.d * &x.den)
    }

    pub fn in_gamma0(&self, n: u64) -> bool {
        self.c.is_multiple_of(&BigInt::from(n))
    }

    /// Congruent to the identity modulo 2.
    pub fn in_gamma2(&self) -> bool {
        let two = BigInt::from(2);
        self.a.is_odd() && self.d.is_odd() && self.b.is_multiple_of(&two) && self.c.is_multiple_of(&two)
    }

    pub fn require_gamma0(&self, n: u64) -> Result<()> {
        if self.in_gamma0(n) {
            Ok(())
        } else {
            Err(Error::NotInGroup { matrix: self.to_string(), group: format!("Gamma0({n})") })
        }
    }

    pub fn require_gamma0_gamma2(&self, n: u64) -> Result<()> {
        if self.in_gamma0(n) && self.in_gamma2() {
            Ok(())
        } else {
            Err(Error::NotInGroup {
                matrix: self.to_string(),
                group: format!("Gamma0({n}) ∩ Gamma(2)"),
            })
        }
    }

    /// h g h^-1 with h = (1 1; 0 2); integral when g is in Gamma(2).
    pub fn conjugate_by_h(&self) -> Self {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let top = b + d - a - c;
        debug_assert!(top.is_even());
        Self::unchecked(a + c, top / 2, c * 2, d - c)
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn to_i64s(&self) -> Option<[i64; 4]> {
        Some([self.a.to_i64()?, self.b.to_i64()?, self.c.to_i64()?, self.d.to_i64()?])
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}

/// Row-major [a, b, c, d]; entries beyond 64 bits are written as strings.
impl Serialize for UnimodularMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<serde_json::Value> = self
            .entries()
            .iter()
            .map(|x| match x.to_i64() {
                Some(i) => serde_json::Value::from(i),
                None => serde_json::Value::from(x.to_string()),
            })
            .collect();
        v.serialize(s)
    }
}

/// Solves p y - q x = 1 and returns W = (p x; q y), so W(oo) = p/q.
pub fn matrix_to_cusp(x: &Cusp) -> UnimodularMatrix {
    if x.is_infinity() {
        return UnimodularMatrix::identity();
    }
    let (_, s, t) = crate::arith::xgcd(&x.num, &x.den).expect("cusp is not 0/0");
    // p s + q t = 1  =>  y = s, x = -t
    UnimodularMatrix::unchecked(x.num.clone(), -t, x.den.clone(), s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> UnimodularMatrix {
        UnimodularMatrix::new(a, b, c, d).unwrap()
    }

    #[test]
    fn determinant_is_checked() {
        assert!(UnimodularMatrix::new(1, 1, 1, 1).is_err());
        assert!(UnimodularMatrix::new(2, 1, 1, 1).is_ok());
    }

    #[test]
    fn action_and_inverse() {
        let g = m(2, 1, 15, 8);
        let x = Cusp::new(3, 7).unwrap();
        assert_eq!(g.inverse().act(&g.act(&x)), x);
        assert_eq!(g.act(&Cusp::infinity()), Cusp::new(2, 15).unwrap());
        assert_eq!(m(1, 0, 0, 1).act(&Cusp::new(-1, 0).unwrap()), Cusp::infinity());
        assert!(g.in_gamma0(15) && !g.in_gamma2());
    }

    #[test]
    fn conjugation_by_h_is_integral() {
        let g = m(1, 2, 30, 61);
        assert!(g.in_gamma2());
        let hg = g.conjugate_by_h();
        // h g = hg h
        let h = [[1i64, 1], [0, 2]];
        let g4 = g.to_i64s().unwrap();
        let k4 = hg.to_i64s().unwrap();
        let lhs = [
            h[0][0] * g4[0] + h[0][1] * g4[2],
            h[0][0] * g4[1] + h[0][1] * g4[3],
            h[1][1] * g4[2],
            h[1][1] * g4[3],
        ];
        let rhs = [k4[0], k4[0] + 2 * k4[1], k4[2], k4[2] + 2 * k4[3]];
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn matrix_to_cusp_sends_infinity() {
        for (p, q) in [(0, 1), (3, 7), (-5, 12), (1, 0)] {
            let x = Cusp::new(p, q).unwrap();
            assert_eq!(matrix_to_cusp(&x).act(&Cusp::infinity()), x);
        }
    }
}
