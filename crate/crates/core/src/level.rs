use crate::arith::{is_prime, prime_factors};
use crate::error::{Error, Result};
use serde::Serialize;

/// A level N: a positive, odd, square-free integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Level(u64);

impl Level {
    pub fn new(n: u64) -> Result<Level> {
        if n == 0 {
            return Err(Error::InvalidLevel { n, reason: "must be positive" });
        }
        if n % 2 == 0 {
            return Err(Error::InvalidLevel { n, reason: "must be odd" });
        }
        if prime_factors(n).iter().any(|p| n % (p * p) == 0) {
            return Err(Error::InvalidLevel { n, reason: "must be square-free" });
        }
        Ok(Level(n))
    }

    pub fn n(self) -> u64 {
        self.0
    }

    pub fn primes(self) -> Vec<u64> {
        prime_factors(self.0)
    }

    /// All positive divisors, increasing.
    pub fn divisors(self) -> Vec<u64> {
        (1..=self.0).filter(|d| self.0 % d == 0).collect()
    }

    /// Divisors m > 1: the indices of the Eisenstein basis.
    pub fn eisenstein_indices(self) -> Vec<u64> {
        self.divisors().into_iter().filter(|&m| m > 1).collect()
    }

    pub fn check_index(self, m: u64) -> Result<()> {
        if m > 1 && self.0 % m == 0 {
            Ok(())
        } else {
            Err(Error::InvalidDivisor { n: self.0, m })
        }
    }

    pub fn check_prime_divisor(self, x: u64) -> Result<()> {
        if is_prime(x) && self.0 % x == 0 {
            Ok(())
        } else {
            Err(Error::NotPrimeDivisor(x))
        }
    }

    /// The level of a divisor m of N (itself odd and square-free).
    pub fn sublevel(self, m: u64) -> Result<Level> {
        if m == 0 || self.0 % m != 0 {
            return Err(Error::InvalidDivisor { n: self.0, m });
        }
        Ok(Level(m))
    }

    /// Units of Z/N, increasing.
    pub fn units(self) -> Vec<u64> {
        if self.0 == 1 {
            return vec![0];
        }
        (1..self.0).filter(|&u| num_integer::gcd(u, self.0) == 1).collect()
    }

    /// |P1(Z/N)| = product of (p + 1).
    pub fn p1_size(self) -> usize {
        self.primes().iter().map(|p| (p + 1) as usize).product()
    }

    pub fn cusp_count(self) -> usize {
        1 << self.primes().len()
    }

    /// Genus of X0(N) from the index, elliptic point and cusp counts.
    pub fn genus(self) -> u64 {
        let ps = self.primes();
        let index: i64 = ps.iter().map(|&p| p as i64 + 1).product();
        let e2: i64 = ps
            .iter()
            .map(|&p| match p % 4 {
                1 => 2,
                _ => 0,
            })
            .product();
        let e3: i64 = ps
            .iter()
            .map(|&p| match p % 3 {
                0 => 1,
                1 => 2,
                _ => 0,
            })
            .product();
        let cusps = self.cusp_count() as i64;
        let twelve_g = 12 + index - 3 * e2 - 4 * e3 - 6 * cusps;
        debug_assert!(twelve_g >= 0 && twelve_g % 12 == 0);
        (twelve_g / 12) as u64
    }
}

impl std::fmt::Display for Level {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Level::new(15).is_ok());
        assert!(Level::new(1).is_ok());
        assert!(Level::new(16).is_err());
        assert!(Level::new(9).is_err());
        assert!(Level::new(0).is_err());
    }

    #[test]
    fn genus_table() {
        let g: Vec<u64> = [11, 15, 21, 33, 35, 105, 1, 3, 37]
            .iter()
            .map(|&n| Level::new(n).unwrap().genus())
            .collect();
        assert_eq!(g, vec![1, 1, 1, 3, 3, 13, 0, 0, 2]);
    }

    #[test]
    fn counts() {
        let n = Level::new(105).unwrap();
        assert_eq!(n.p1_size(), 192);
        assert_eq!(n.cusp_count(), 8);
        assert_eq!(n.eisenstein_indices(), vec![3, 5, 7, 15, 21, 35, 105]);
        assert_eq!(Level::new(15).unwrap().units().len(), 8);
    }
}
