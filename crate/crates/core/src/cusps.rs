//! Cusps of X0(N), ramification indices, and divisors of the Eisenstein basis.

use crate::arith::{rat, rational_string, Rational};
use crate::error::{Error, Result};
use crate::level::Level;
use crate::matrix::Cusp;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

/// A cusp class, keyed by the divisor gcd(denominator, N): 1 is the cusp 0,
/// N is infinity, and any other key d stands for 1/d.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CuspClass {
    pub key: u64,
}

impl std::fmt::Display for CuspClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.key)
    }
}

pub fn cusp_classify(level: Level, a: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<CuspClass> {
    let x = Cusp::new(a, c)?;
    Ok(classify(level, &x))
}

pub fn classify(level: Level, x: &Cusp) -> CuspClass {
    let key = x.den.gcd(&BigInt::from(level.n())).to_u64().expect("divides N");
    CuspClass { key }
}

pub fn all_cusps(level: Level) -> Vec<CuspClass> {
    level.divisors().into_iter().map(|key| CuspClass { key }).collect()
}

/// 1 at infinity, N at 0, and N/d at 1/d.
pub fn ramification_index(level: Level, y: CuspClass) -> u64 {
    let n = level.n();
    if y.key == n {
        1
    } else if y.key == 1 {
        n
    } else {
        n / y.key
    }
}

/// Constant term of E_m at the cusp y, normalized so that it is m - 1 at infinity.
pub fn eisenstein_a0(level: Level, m: u64, y: CuspClass) -> Result<Rational> {
    level.check_index(m)?;
    let g = y.key.gcd(&m) as i64;
    Ok(rat(g * g, m as i64) - rat(1, 1))
}

/// Formal Q-combination of cusp classes; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CuspDivisor {
    coeffs: BTreeMap<CuspClass, Rational>,
}

impl CuspDivisor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, y: CuspClass, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(y).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&y);
        }
    }

    pub fn coefficient(&self, y: CuspClass) -> Rational {
        self.coeffs.get(&y).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CuspClass, &Rational)> {
        self.coeffs.iter()
    }

    pub fn degree(&self) -> Rational {
        self.coeffs.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn negated(&self) -> Self {
        CuspDivisor { coeffs: self.coeffs.iter().map(|(k, v)| (*k, -v)).collect() }
    }

    pub fn scaled(&self, s: &Rational) -> Self {
        let mut out = CuspDivisor::new();
        for (k, v) in &self.coeffs {
            out.add_term(*k, &(v * s));
        }
        out
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &o.coeffs {
            out.add_term(*k, v);
        }
        out
    }

    /// Readable form such as "14[15] - 14[1] - 2[3] + 2[5]" (keys in brackets).
    pub fn to_display_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (k, v)) in self.coeffs.iter().enumerate() {
            let neg = v < &Rational::zero();
            let mag = rational_string(&if neg { -v } else { v.clone() });
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            s.push_str(&format!("{mag}[{}]", k.key));
        }
        s
    }
}

/// {"d": "p/q"} keyed by the divisor string.
impl Serialize for CuspDivisor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m: BTreeMap<String, String> =
            self.coeffs.iter().map(|(k, v)| (k.key.to_string(), rational_string(v))).collect();
        m.serialize(s)
    }
}

/// Divisor of E_m: sum over cusps of ramification index times constant term.
pub fn eisenstein_divisor(level: Level, m: u64) -> Result<CuspDivisor> {
    level.check_index(m)?;
    let mut d = CuspDivisor::new();
    for y in all_cusps(level) {
        let e = Rational::from_integer(ramification_index(level, y).into());
        d.add_term(y, &(e * eisenstein_a0(level, m, y)?));
    }
    if !d.degree().is_zero() || !d.is_integral() {
        return Err(Error::NonIntegral { c: 0, d: 0, value: d.to_display_string() });
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(k: u64) -> CuspClass {
        CuspClass { key: k }
    }

    #[test]
    fn classify_examples() {
        let n = Level::new(15).unwrap();
        assert_eq!(cusp_classify(n, 1, 0).unwrap(), key(15));
        assert_eq!(cusp_classify(n, 0, 1).unwrap(), key(1));
        assert_eq!(cusp_classify(n, 1, 7).unwrap(), key(1));
        assert_eq!(cusp_classify(n, 2, 9).unwrap(), key(3));
        assert!(cusp_classify(n, 2, 4).is_err());
    }

    #[test]
    fn ramification_examples() {
        let n = Level::new(15).unwrap();
        assert_eq!(ramification_index(n, key(15)), 1);
        assert_eq!(ramification_index(n, key(1)), 15);
        assert_eq!(ramification_index(n, key(3)), 5);
    }

    #[test]
    fn constant_terms() {
        let n = Level::new(15).unwrap();
        assert_eq!(eisenstein_a0(n, 15, key(15)).unwrap(), rat(14, 1));
        assert_eq!(eisenstein_a0(n, 15, key(1)).unwrap(), rat(-14, 15));
        assert_eq!(eisenstein_a0(n, 3, key(5)).unwrap(), rat(-2, 3));
        assert!(eisenstein_a0(n, 1, key(5)).is_err());
    }

    #[test]
    fn divisor_tables() {
        let n = Level::new(15).unwrap();
        let table = |m| {
            let d = eisenstein_divisor(n, m).unwrap();
            [15, 1, 3, 5].map(|k| d.coefficient(key(k)))
        };
        assert_eq!(table(15), [14, -14, -2, 2].map(|x| rat(x, 1)));
        assert_eq!(table(3), [2, -10, 10, -2].map(|x| rat(x, 1)));
        assert_eq!(table(5), [4, -12, -4, 12].map(|x| rat(x, 1)));
        let json = serde_json::to_string(&eisenstein_divisor(n, 15).unwrap()).unwrap();
        assert_eq!(json, r#"{"1":"-14","15":"14","3":"-2","5":"2"}"#);
    }
}
