//! Manin symbols, the relation quotient presenting the homology of X0(N) relative to
//! the cusps, boundaries, Hecke operators and the Eisenstein checks.

mod chain;
pub mod linalg;
mod presentation;
mod verify;

pub use chain::FormalChain;
pub use presentation::HomologyPresentation;
pub use verify::verify_eisenstein;

use crate::arith::{is_prime, Rational};
use crate::cusps::{classify, CuspClass, CuspDivisor};
use crate::error::{Error, Result};
use crate::level::Level;
use crate::matrix::{Cusp, UnimodularMatrix};
use crate::p1::{omega_reps, CosetReps, P1Class, P1List};
use linalg::{hermite_basis, lattice_coordinates, lcm_of_denominators};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::sync::OnceLock;

/// Everything needed to compute with modular symbols at one level. Immutable after
/// construction, so it can be shared between threads.
#[derive(Debug)]
pub struct ModularSymbols {
    level: Level,
    list: P1List,
    reps: CosetReps,
    presentation: HomologyPresentation,
    /// cusp classes of g.0 and g.oo for each generator
    ends: Vec<(CuspClass, CuspClass)>,
    lattice: OnceLock<Lattice>,
}

/// Common denominator and Hermite basis of the image of the integral chains.
type Lattice = (BigInt, Vec<(usize, Vec<BigInt>)>);

/// Builds the presentation for the level.
pub fn presentation(level: Level) -> ModularSymbols {
    ModularSymbols::new(level)
}

impl ModularSymbols {
    pub fn new(level: Level) -> Self {
        let list = P1List::new(level);
        let reps = omega_reps(&list);
        let presentation = HomologyPresentation::new(&list);
        let ends = reps
            .matrices
            .iter()
            .map(|g| {
                (classify(level, &g.act(&Cusp::zero())), classify(level, &g.act(&Cusp::infinity())))
            })
            .collect();
        ModularSymbols { level, list, reps, presentation, ends, lattice: OnceLock::new() }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn list(&self) -> &P1List {
        &self.list
    }

    pub fn reps(&self) -> &CosetReps {
        &self.reps
    }

    pub fn presentation(&self) -> &HomologyPresentation {
        &self.presentation
    }

    pub fn rank(&self) -> usize {
        self.presentation.rank()
    }

    /// Canonical coordinates of the class of a chain.
    pub fn reduce(&self, chain: &FormalChain) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.rank()];
        for (g, c) in chain.terms() {
            let img = self.presentation.image(self.list.index_of(g));
            for (o, x) in out.iter_mut().zip(img) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    /// Sum of c_g ([g.oo] - [g.0]): each Manin symbol is the path from g.0 to g.oo.
    pub fn boundary(&self, chain: &FormalChain) -> CuspDivisor {
        let mut d = CuspDivisor::new();
        for (g, c) in chain.terms() {
            let (start, end) = self.ends[self.list.index_of(g)];
            d.add_term(end, c);
            d.add_term(start, &-c);
        }
        d
    }

    /// The path {alpha, beta} written in Manin symbols via continued fractions.
    pub fn modular_symbol(&self, alpha: &Cusp, beta: &Cusp) -> FormalChain {
        if alpha == beta {
            return FormalChain::new();
        }
        self.path_from_zero(beta).minus(&self.path_from_zero(alpha))
    }

    /// {0, x} = {0, oo} + sum of {p_{k-1}/q_{k-1}, p_k/q_k} over the convergents of x.
    fn path_from_zero(&self, x: &Cusp) -> FormalChain {
        let mut chain = FormalChain::new();
        if x.num.is_zero() {
            return chain;
        }
        chain.add_term(P1Class { c: 0, d: 1 }, &Rational::one());
        if x.is_infinity() {
            return chain;
        }
        let (mut p, mut q) = (x.num.clone(), x.den.clone());
        let (mut h_prev, mut k_prev) = (BigInt::one(), BigInt::zero());
        let (mut h_prev2, mut k_prev2) = (BigInt::zero(), BigInt::one());
        while !q.is_zero() {
            let (a, r) = p.div_mod_floor(&q);
            p = std::mem::replace(&mut q, r);
            let h = &a * &h_prev + &h_prev2;
            let k = &a * &k_prev + &k_prev2;
            let eps = &h * &k_prev - &h_prev * &k;
            let d = if eps.is_one() { k_prev.clone() } else { -k_prev.clone() };
            let i = self.list.index_big(&k, &d).expect("consecutive convergents are coprime");
            chain.add_term(self.list.class(i), &Rational::one());
            h_prev2 = std::mem::replace(&mut h_prev, h);
            k_prev2 = std::mem::replace(&mut k_prev, k);
        }
        chain
    }

    /// T_l for a prime l not dividing N: each xi(g) = {g.0, g.oo} goes to the sum of
    /// {M g.0, M g.oo} over M = (1 j; 0 l), 0 <= j < l, and M = (l 0; 0 1).
    pub fn hecke(&self, l: u64, chain: &FormalChain) -> Result<FormalChain> {
        if !is_prime(l) || self.level.n() % l == 0 {
            return Err(Error::HeckePrime { l, n: self.level.n() });
        }
        let lb = BigInt::from(l);
        let mut mats: Vec<[BigInt; 3]> =
            (0..l).map(|j| [BigInt::one(), BigInt::from(j), lb.clone()]).collect();
        mats.push([lb.clone(), BigInt::zero(), BigInt::one()]);
        let act = |m: &[BigInt; 3], x: &Cusp| {
            Cusp::from_pair(&m[0] * &x.num + &m[1] * &x.den, &m[2] * &x.den)
        };
        let mut out = FormalChain::new();
        for (g, c) in chain.terms() {
            let rep = &self.reps.matrices[self.list.index_of(g)];
            let (zero, inf) = (rep.act(&Cusp::zero()), rep.act(&Cusp::infinity()));
            for m in &mats {
                out = out.plus(&self.modular_symbol(&act(m, &zero), &act(m, &inf)).scaled(c));
            }
        }
        Ok(out)
    }

    fn lattice(&self) -> &(BigInt, Vec<(usize, Vec<BigInt>)>) {
        self.lattice.get_or_init(|| {
            let n = self.list.len();
            let scale = lcm_of_denominators((0..n).flat_map(|i| self.presentation.image(i)));
            let rows = (0..n)
                .map(|i| {
                    self.presentation
                        .image(i)
                        .iter()
                        .map(|x| (x * Rational::from_integer(scale.clone())).to_integer())
                        .collect()
                })
                .collect();
            (scale.clone(), hermite_basis(rows, self.rank()))
        })
    }

    /// Coordinates in a Z-basis of the image of the integral chains (the integral
    /// homology modulo torsion), or None if the class is not integral.
    pub fn integral_coordinates(&self, chain: &FormalChain) -> Option<Vec<BigInt>> {
        let (scale, basis) = self.lattice();
        let target: Option<Vec<BigInt>> = self
            .reduce(chain)
            .iter()
            .map(|x| {
                let y = x * Rational::from_integer(scale.clone());
                y.is_integer().then(|| y.to_integer())
            })
            .collect();
        lattice_coordinates(basis, &target?)
    }

    /// Coset representative of a class.
    pub fn rep(&self, g: &P1Class) -> &UnimodularMatrix {
        &self.reps.matrices[self.list.index_of(g)]
    }
}

pub fn boundary(ms: &ModularSymbols, chain: &FormalChain) -> CuspDivisor {
    ms.boundary(chain)
}

pub fn modular_symbol(ms: &ModularSymbols, alpha: &Cusp, beta: &Cusp) -> FormalChain {
    ms.modular_symbol(alpha, beta)
}

pub fn hecke(ms: &ModularSymbols, l: u64, chain: &FormalChain) -> Result<FormalChain> {
    ms.hecke(l, chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn ms(n: u64) -> ModularSymbols {
        ModularSymbols::new(Level::new(n).unwrap())
    }

    #[test]
    fn ranks() {
        for (n, r) in [(15, 5), (21, 5), (33, 9), (35, 9), (11, 3), (1, 0)] {
            assert_eq!(ms(n).rank(), r, "N={n}");
        }
    }

    #[test]
    fn identity_symbol() {
        let s = ms(15);
        let xi = FormalChain::single(P1Class { c: 0, d: 1 });
        let b = s.boundary(&xi);
        assert_eq!(b.coefficient(CuspClass { key: 15 }), rat(1, 1));
        assert_eq!(b.coefficient(CuspClass { key: 1 }), rat(-1, 1));
        assert_eq!(s.modular_symbol(&Cusp::zero(), &Cusp::infinity()), xi);
    }

    #[test]
    fn symbols_match_manin_symbols() {
        let s = ms(21);
        for (i, g) in s.list().classes().iter().enumerate() {
            let rep = &s.reps().matrices[i];
            let path = s.modular_symbol(&rep.act(&Cusp::zero()), &rep.act(&Cusp::infinity()));
            assert_eq!(s.reduce(&path), s.reduce(&FormalChain::single(*g)), "class {g}");
        }
    }

    #[test]
    fn symbol_boundaries() {
        let s = ms(15);
        let half = Cusp::new(1, 2).unwrap();
        let b = s.boundary(&s.modular_symbol(&Cusp::zero(), &half));
        let mut expect = CuspDivisor::new();
        expect.add_term(CuspClass { key: 1 }, &rat(-1, 1));
        expect.add_term(CuspClass { key: 1 }, &rat(1, 1));
        assert_eq!(b, expect);
        let x = Cusp::new(-7, 30).unwrap();
        assert!(s.modular_symbol(&x, &x).is_zero());
        let b = s.boundary(&s.modular_symbol(&Cusp::new(2, 5).unwrap(), &x));
        assert_eq!(b.coefficient(CuspClass { key: 15 }), rat(1, 1));
        assert_eq!(b.coefficient(CuspClass { key: 5 }), rat(-1, 1));
    }

    #[test]
    fn hecke_rejects_bad_primes() {
        let s = ms(15);
        assert!(s.hecke(3, &FormalChain::new()).is_err());
        assert!(s.hecke(4, &FormalChain::new()).is_err());
        assert!(s.hecke(2, &FormalChain::new()).unwrap().is_zero());
    }
}
