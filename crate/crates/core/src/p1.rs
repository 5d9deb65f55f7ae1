//! The projective line over Z/N and explicit coset representatives of Gamma0(N) in SL2(Z).

use crate::arith::inverse_mod;
use crate::error::{Error, Result};
use crate::level::Level;
use crate::matrix::UnimodularMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

/// A point (c : d) of P1(Z/N), stored as its canonical representative: the
/// lexicographically least pair in the orbit under scaling by units. In
/// particular c is 0 or a divisor of N.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct P1Class {
    pub c: u64,
    pub d: u64,
}

impl Serialize for P1Class {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.c, self.d].serialize(s)
    }
}

impl std::fmt::Display for P1Class {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}:{})", self.c, self.d)
    }
}

fn residue(x: &BigInt, n: u64) -> u64 {
    x.mod_floor(&BigInt::from(n)).to_u64().expect("residue below n")
}

fn valid_pair(c: u64, d: u64, n: u64) -> bool {
    num_integer::gcd(num_integer::gcd(c, d), n) == 1
}

/// Canonical representative of (c : d), by direct search over the unit orbit.
pub fn p1_normalize(level: Level, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<P1Class> {
    let n = level.n();
    let (cb, db) = (c.into(), d.into());
    let (c, d) = (residue(&cb, n), residue(&db, n));
    if !valid_pair(c, d, n) {
        return Err(Error::NotInP1 { c: cb.to_string(), d: db.to_string(), n });
    }
    Ok(level
        .units()
        .into_iter()
        .map(|u| P1Class { c: (u * c) % n, d: (u * d) % n })
        .min()
        .expect("at least one unit"))
}

/// All of P1(Z/N) in increasing canonical order, with a constant-time lookup table.
#[derive(Clone, Debug)]
pub struct P1List {
    level: Level,
    classes: Vec<P1Class>,
    table: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl P1List {
    pub fn new(level: Level) -> P1List {
        let n = level.n();
        let nn = n as usize;
        let units = level.units();
        let mut owner = vec![NONE; nn * nn];
        let mut reps: Vec<(P1Class, Vec<usize>)> = Vec::new();
        for c in 0..n {
            for d in 0..n {
                let slot = (c * n + d) as usize;
                if owner[slot] != NONE || !valid_pair(c, d, n) {
                    continue;
                }
                let orbit: Vec<usize> =
                    units.iter().map(|u| (((u * c) % n) * n + (u * d) % n) as usize).collect();
                let min = *orbit.iter().min().unwrap();
                let rep = P1Class { c: (min / nn) as u64, d: (min % nn) as u64 };
                for &o in &orbit {
                    owner[o] = reps.len() as u32;
                }
                reps.push((rep, orbit));
            }
        }
        reps.sort_by_key(|(rep, _)| *rep);
        let mut table = vec![NONE; nn * nn];
        for (i, (_, orbit)) in reps.iter().enumerate() {
            for &o in orbit {
                table[o] = i as u32;
            }
        }
        let classes = reps.into_iter().map(|(rep, _)| rep).collect();
        P1List { level, classes, table }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[P1Class] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> P1Class {
        self.classes[i]
    }

    /// Index of the class of (c : d) for arbitrary integers.
    pub fn index(&self, c: i64, d: i64) -> Option<usize> {
        let n = self.level.n() as i64;
        let slot = (c.rem_euclid(n) * n + d.rem_euclid(n)) as usize;
        let i = self.table[slot];
        (i != NONE).then_some(i as usize)
    }

    pub fn index_big(&self, c: &BigInt, d: &BigInt) -> Option<usize> {
        let n = self.level.n();
        let slot = (residue(c, n) * n + residue(d, n)) as usize;
        let i = self.table[slot];
        (i != NONE).then_some(i as usize)
    }

    pub fn index_of(&self, g: &P1Class) -> usize {
        self.index(g.c as i64, g.d as i64).expect("canonical class is in the list")
    }

    pub fn normalize(&self, c: i64, d: i64) -> Result<P1Class> {
        self.index(c, d).map(|i| self.classes[i]).ok_or_else(|| Error::NotInP1 {
            c: c.to_string(),
            d: d.to_string(),
            n: self.level.n(),
        })
    }

    /// Class of the bottom row of a matrix.
    pub fn index_of_matrix(&self, g: &UnimodularMatrix) -> usize {
        self.index_big(&g.c, &g.d).expect("bottom row of a unimodular matrix is primitive")
    }

    /// Right action of S = (0 -1; 1 0): (c : d) -> (d : -c).
    pub fn times_s(&self, i: usize) -> usize {
        let g = self.classes[i];
        self.index(g.d as i64, -(g.c as i64)).unwrap()
    }

    /// Right action of R = (0 -1; 1 -1): (c : d) -> (d : -c - d).
    pub fn times_r(&self, i: usize) -> usize {
        let g = self.classes[i];
        self.index(g.d as i64, -(g.c as i64) - g.d as i64).unwrap()
    }
}

/// Classes of P1(Z/N) in the documented order.
pub fn p1_list(level: Level) -> Vec<P1Class> {
    P1List::new(level).classes
}

/// A coset representative for each class, aligned with the list order.
#[derive(Clone, Debug)]
pub struct CosetReps {
    pub matrices: Vec<UnimodularMatrix>,
}

impl CosetReps {
    pub fn get(&self, list: &P1List, g: &P1Class) -> &UnimodularMatrix {
        &self.matrices[list.index_of(g)]
    }
}

fn assemble(list: &P1List, family: Vec<UnimodularMatrix>) -> CosetReps {
    let mut slots: Vec<Option<UnimodularMatrix>> = vec![None; list.len()];
    for g in family {
        let i = list.index_of_matrix(&g);
        assert!(slots[i].is_none(), "two representatives in the coset of {}", list.class(i));
        slots[i] = Some(g);
    }
    let matrices = slots
        .into_iter()
        .enumerate()
        .map(|(i, g)| g.unwrap_or_else(|| panic!("no representative for {}", list.class(i))))
        .collect();
    CosetReps { matrices }
}

/// The family built from (0 -1; 1 k), the identity, and (-1 -l; m lm-1) for 1 < m < N.
pub fn omega_reps(list: &P1List) -> CosetReps {
    let n = list.level().n() as i64;
    let mut family = Vec::with_capacity(list.len());
    for k in 0..n {
        family.push(UnimodularMatrix::unchecked(0.into(), (-1).into(), 1.into(), k.into()));
    }
    if n > 1 {
        family.push(UnimodularMatrix::identity());
    }
    for m in list.level().divisors() {
        let m = m as i64;
        if m == 1 || m == n {
            continue;
        }
        for l in 0..n / m {
            family.push(UnimodularMatrix::unchecked(
                (-1).into(),
                (-l).into(),
                m.into(),
                (l * m - 1).into(),
            ));
        }
    }
    assemble(list, family)
}

/// Odd integer s_k = k + (delta_k - 1) N with delta_k the parity of k; congruent to k mod N.
pub fn odd_lift(k: i64, n: i64) -> i64 {
    let delta = k.rem_euclid(2);
    let s = k + (delta - 1) * n;
    debug_assert!(s.rem_euclid(2) == 1);
    s
}

/// Representatives congruent to the identity mod 2, one in each coset.
///
/// For the class (1 : k) the matrix is (s N^2, s N - 1; s N + 1, s) with s the odd lift of k;
/// the class (0 : 1) takes the identity; for 1 < m < N the matrix
/// (-1, -t; N + m, -1 + (N + m) t) with t = -l + delta_l N/m lies over (m : -1 - lm).
pub fn omega_tilde_reps(list: &P1List) -> CosetReps {
    let n = list.level().n() as i64;
    let big = BigInt::from;
    let mut family = Vec::with_capacity(list.len());
    for k in 0..n {
        let s = big(odd_lift(k, n));
        let nb = big(n);
        family.push(UnimodularMatrix::unchecked(
            &s * &nb * &nb,
            &s * &nb - 1,
            &s * &nb + 1,
            s,
        ));
    }
    if n > 1 {
        family.push(UnimodularMatrix::identity());
    }
    for m in list.level().divisors() {
        let m = m as i64;
        if m == 1 || m == n {
            continue;
        }
        for l in 0..n / m {
            let t = -l + l.rem_euclid(2) * (n / m);
            family.push(UnimodularMatrix::unchecked(
                big(-1),
                big(-t),
                big(n + m),
                big(-1) + big(n + m) * big(t),
            ));
        }
    }
    let reps = assemble(list, family);
    for g in &reps.matrices {
        assert!(g.in_gamma2(), "{g} is not congruent to the identity mod 2");
    }
    reps
}

/// For 1 < m < N and k a unit mod N/m: the residue s in [0, N/m) with
/// (km : -1) = (m : sm - 1) in P1(Z/N).
pub fn twist_map(level: Level, m: u64, k: i64) -> Result<u64> {
    let n = level.n();
    if m <= 1 || m >= n || n % m != 0 {
        return Err(Error::InvalidDivisor { n, m });
    }
    let q = n / m;
    let k_inv = inverse_mod(k, q).ok_or(Error::NotUnit { k, modulus: q })?;
    let m_inv = inverse_mod(m as i64, q).expect("m is prime to N/m");
    Ok(((m_inv as u128 * ((1 + q - k_inv) % q) as u128) % q as u128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lvl(n: u64) -> Level {
        Level::new(n).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(p1_normalize(lvl(15), 0, 1).unwrap(), P1Class { c: 0, d: 1 });
        assert_eq!(p1_normalize(lvl(15), 2, 4).unwrap(), P1Class { c: 1, d: 2 });
        assert!(p1_normalize(lvl(15), 3, 6).is_err());
        let list = P1List::new(lvl(15));
        assert_eq!(list.normalize(2, 4).unwrap(), P1Class { c: 1, d: 2 });
        assert_eq!(list.normalize(3, -1).unwrap(), P1Class { c: 3, d: 4 });
    }

    #[test]
    fn list_sizes() {
        assert_eq!(p1_list(lvl(15)).len(), 24);
        assert_eq!(p1_list(lvl(3)).len(), 4);
        assert_eq!(p1_list(lvl(105)).len(), 192);
        assert_eq!(p1_list(lvl(1)).len(), 1);
    }

    #[test]
    fn omega_examples() {
        let list = P1List::new(lvl(15));
        let om = omega_reps(&list);
        let g10 = list.normalize(1, 0).unwrap();
        assert_eq!(om.get(&list, &g10), &UnimodularMatrix::new(0, -1, 1, 0).unwrap());
        let g3 = list.normalize(3, -1).unwrap();
        assert_eq!(om.get(&list, &g3), &UnimodularMatrix::new(-1, 0, 3, -1).unwrap());
    }

    #[test]
    fn omega_tilde_shares_cosets() {
        for n in [3, 5, 15, 21, 105] {
            let list = P1List::new(lvl(n));
            let om = omega_reps(&list);
            let ot = omega_tilde_reps(&list);
            assert_eq!(ot.matrices.len(), list.len());
            for (a, b) in om.matrices.iter().zip(&ot.matrices) {
                assert!(a.mul(&b.inverse()).in_gamma0(n));
                assert!(b.in_gamma2());
            }
        }
    }

    #[test]
    fn printed_last_representative_sits_over_one_zero() {
        let list = P1List::new(lvl(15));
        let printed = UnimodularMatrix::new(15, 14, 16, 15).unwrap();
        assert_eq!(list.class(list.index_of_matrix(&printed)), P1Class { c: 1, d: 0 });
    }

    #[test]
    fn twist_examples() {
        let n = lvl(15);
        assert_eq!(twist_map(n, 3, 1).unwrap(), 0);
        assert_eq!(twist_map(n, 3, 2).unwrap(), 1);
        assert!(twist_map(n, 3, 5).is_err());
        let image: std::collections::BTreeSet<u64> =
            (1..5).map(|k| twist_map(n, 3, k).unwrap()).collect();
        assert_eq!(image.len(), 4);
    }
}
