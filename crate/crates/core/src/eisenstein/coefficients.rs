use super::gammas::{build_gammas_with, reflection_matrix};
use super::period::p_m_unchecked;
use crate::arith::{dedekind_sum_fast, inverse_mod, rational_string, Rational};
use crate::error::Result;
use crate::level::Level;
use crate::matrix::Cusp;
use crate::p1::{omega_tilde_reps, CosetReps, P1Class, P1List};
use num_traits::Zero;
use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

/// How a class of P1(Z/m) is matched when evaluating F_m.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Shape {
    /// (1 : 1) or (-1 : 1).
    Trivial,
    /// (r - 1 : r + 1) with r odd and prime to m.
    Sawtooth { r: u64 },
    /// (±(1 + kx) : 1), or (1 : ±(1 + kx)) when transposed, with x a prime of m.
    Exceptional { x: u64, k: u64, transposed: bool },
    /// None of the above (needs three or more primes): both endpoints are reflected directly.
    Reflection,
}

/// Normalization of stored values: `Even` holds F itself, `Element` holds F/6.
/// Serialized as the divisor applied to F (1 or 6).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Even,
    Element,
}

impl Scale {
    pub fn factor(self) -> u64 {
        match self {
            Scale::Even => 1,
            Scale::Element => 6,
        }
    }
}

/// Values of F_m (or F_m / 6) on every class of P1(Z/N), in list order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisensteinCoefficients {
    pub level: Level,
    pub m: u64,
    pub scale: Scale,
    pub values: Vec<(P1Class, Rational)>,
    pub shapes: Vec<Shape>,
}

impl EisensteinCoefficients {
    pub fn get(&self, g: &P1Class) -> Option<&Rational> {
        self.values.iter().find(|(h, _)| h == g).map(|(_, v)| v)
    }

    pub fn to_element_scale(&self) -> EisensteinCoefficients {
        let six = Rational::from_integer(6.into());
        let values = match self.scale {
            Scale::Even => self.values.iter().map(|(g, v)| (*g, v / &six)).collect(),
            Scale::Element => self.values.clone(),
        };
        EisensteinCoefficients { scale: Scale::Element, values, ..self.clone() }
    }
}

struct Values<'a>(&'a [(P1Class, Rational)]);

impl Serialize for Values<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (g, v) in self.0 {
            let mut entry = BTreeMap::new();
            entry.insert("F", serde_json::Value::from(rational_string(v)));
            entry.insert("g", serde_json::json!([g.c, g.d]));
            seq.serialize_element(&entry)?;
        }
        seq.end()
    }
}

impl Serialize for EisensteinCoefficients {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(4))?;
        map.serialize_entry("N", &self.level.n())?;
        map.serialize_entry("m", &self.m)?;
        map.serialize_entry("scale", &self.scale.factor())?;
        map.serialize_entry("values", &Values(&self.values))?;
        map.end()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Component {
    Plus,
    Minus,
    CZero,
    DZero,
    Ratio(u64),
}

fn component(p: u64, c: u64, d: u64) -> Component {
    let (c, d) = (c % p, d % p);
    if c == 0 {
        Component::CZero
    } else if d == 0 {
        Component::DZero
    } else if c == d {
        Component::Plus
    } else if c + d == p {
        Component::Minus
    } else {
        Component::Ratio(c * inverse_mod(d as i64, p).unwrap() % p)
    }
}

/// Chinese remaindering for residues modulo distinct primes.
fn crt(parts: &[(u64, u64)]) -> u64 {
    let m: u64 = parts.iter().map(|(p, _)| p).product();
    parts.iter().fold(0u64, |acc, &(p, r)| {
        let q = m / p;
        let coef = (r as u128 * inverse_mod(q as i64, p).unwrap() as u128 % p as u128) as u64;
        ((acc as u128 + coef as u128 * q as u128) % m as u128) as u64
    })
}

/// Shape of (c : d) in P1(Z/m). Every class is matched; classes that fit none of the
/// closed forms are reported as [`Shape::Reflection`].
pub fn classify_shape(level_m: Level, c: u64, d: u64) -> Shape {
    let m = level_m.n();
    let primes = level_m.primes();
    let comps: Vec<Component> = primes.iter().map(|&p| component(p, c, d)).collect();
    if comps.iter().all(|x| *x == Component::Plus) || comps.iter().all(|x| *x == Component::Minus) {
        return Shape::Trivial;
    }
    let signed = comps.iter().position(|x| matches!(x, Component::Plus | Component::Minus));
    let Some(i) = signed else {
        let parts: Vec<(u64, u64)> = primes
            .iter()
            .zip(&comps)
            .map(|(&p, comp)| {
                let r = match *comp {
                    Component::CZero => 1,
                    Component::DZero => p - 1,
                    Component::Ratio(t) => {
                        (1 + t) % p * inverse_mod((p + 1 - t) as i64, p).unwrap() % p
                    }
                    _ => unreachable!(),
                };
                (p, r)
            })
            .collect();
        let r = crt(&parts);
        return Shape::Sawtooth { r: if r % 2 == 0 { r + m } else { r } };
    };
    let x = primes[i];
    let (t, transposed) = if !comps.contains(&Component::DZero) {
        (c % m * inverse_mod(d as i64, m).unwrap() % m, false)
    } else if !comps.contains(&Component::CZero) {
        (d % m * inverse_mod(c as i64, m).unwrap() % m, true)
    } else {
        return Shape::Reflection;
    };
    let signed_t = if t % x == 1 { t } else { (m - t) % m };
    debug_assert_eq!(signed_t % x, 1);
    Shape::Exceptional { x, k: (signed_t - 1) / x, transposed }
}

/// Per-level data for evaluating F_m, shared by all classes.
struct Evaluator {
    level_m: Level,
    list_m: P1List,
    tilde: CosetReps,
    choice: i64,
}

impl Evaluator {
    fn new(level_m: Level, choice: i64) -> Self {
        let list_m = P1List::new(level_m);
        let tilde = omega_tilde_reps(&list_m);
        Evaluator { level_m, list_m, tilde, choice }
    }

    fn value(&self, shape: Shape, i_m: usize) -> Rational {
        let m = self.level_m.n();
        let six = Rational::from_integer(6.into());
        match shape {
            Shape::Trivial => Rational::zero(),
            Shape::Sawtooth { r } => {
                let s1 = dedekind_sum_fast(r, m).unwrap();
                let s2 = dedekind_sum_fast(r, 2 * m).unwrap();
                Rational::from_integer(12.into()) * (s1 - Rational::from_integer(2.into()) * s2)
            }
            Shape::Exceptional { x, k, transposed } => {
                let (g1, g2) = build_gammas_with(self.level_m, x, k as i64, self.choice).unwrap();
                let v = six * (p_m_unchecked(m, &g1) - p_m_unchecked(m, &g2));
                if transposed {
                    -v
                } else {
                    v
                }
            }
            Shape::Reflection => self.reflected(i_m),
        }
    }

    fn reflected(&self, i_m: usize) -> Rational {
        let m = self.level_m.n();
        let g = &self.tilde.matrices[i_m];
        let a = g.act(&Cusp::from_pair(1.into(), 1.into()));
        let b = g.act(&Cusp::from_pair((-1).into(), 1.into()));
        let ga = reflection_matrix(self.level_m, &a, self.choice);
        let gb = reflection_matrix(self.level_m, &b, self.choice);
        Rational::from_integer(6.into()) * (p_m_unchecked(m, &ga) - p_m_unchecked(m, &gb))
    }
}

/// F_m through the reflections of both endpoints, valid for every class; an
/// independent route used to cross-check the closed forms.
pub fn f_value_by_reflection(level: Level, m: u64, g: &P1Class) -> Result<Rational> {
    level.check_index(m)?;
    let ev = Evaluator::new(level.sublevel(m)?, 0);
    let i_m = ev.list_m.index(g.c as i64, g.d as i64).expect("reduction of a P1 point");
    Ok(ev.reflected(i_m))
}

/// F_m on every class of P1(Z/N), in the even normalization (values divisible by 6).
///
/// F_m(g) depends only on g modulo m, so each class is reduced to level m first.
pub fn f_values(level: Level, m: u64) -> Result<EisensteinCoefficients> {
    f_values_with(level, m, 0, 1)
}

/// As [`f_values`], with an alternative Bezout solution in every constructed matrix
/// (`choice` = 0 is the default) and up to `jobs` worker threads.
pub fn f_values_with(level: Level, m: u64, choice: i64, jobs: usize) -> Result<EisensteinCoefficients> {
    level.check_index(m)?;
    let list = P1List::new(level);
    let ev = Evaluator::new(level.sublevel(m)?, choice);
    let reduced: Vec<usize> = list
        .classes()
        .iter()
        .map(|g| ev.list_m.index(g.c as i64, g.d as i64).expect("reduction of a P1 point"))
        .collect();
    let mut distinct = reduced.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let eval = |&i: &usize| {
        let h = ev.list_m.class(i);
        let shape = classify_shape(ev.level_m, h.c, h.d);
        (i, (shape, ev.value(shape, i)))
    };
    let table: BTreeMap<usize, (Shape, Rational)> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
        pool.install(|| distinct.par_iter().map(eval).collect())
    } else {
        distinct.iter().map(eval).collect()
    };
    let mut values = Vec::with_capacity(list.len());
    let mut shapes = Vec::with_capacity(list.len());
    for (g, i) in list.classes().iter().zip(&reduced) {
        let (shape, v) = &table[i];
        values.push((*g, v.clone()));
        shapes.push(*shape);
    }
    Ok(EisensteinCoefficients { level, m, scale: Scale::Even, values, shapes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn lvl(n: u64) -> Level {
        Level::new(n).unwrap()
    }

    #[test]
    fn shapes_at_fifteen() {
        let m = lvl(15);
        assert_eq!(classify_shape(m, 1, 1), Shape::Trivial);
        assert_eq!(classify_shape(m, 14, 1), Shape::Trivial);
        assert_eq!(classify_shape(m, 0, 2), Shape::Sawtooth { r: 1 });
        assert_eq!(classify_shape(m, 4, 1), Shape::Exceptional { x: 3, k: 1, transposed: false });
        assert_eq!(classify_shape(m, 1, 10), Shape::Exceptional { x: 3, k: 3, transposed: true });
        let shape = classify_shape(lvl(105), 70, 1);
        assert_eq!(shape, Shape::Exceptional { x: 3, k: 23, transposed: false });
    }

    #[test]
    fn three_primes_need_reflection() {
        // (1:1) at 3, (1:0) at 5, (0:1) at 7
        let c = crt(&[(3, 1), (5, 1), (7, 0)]);
        let d = crt(&[(3, 1), (5, 0), (7, 1)]);
        assert_eq!(classify_shape(lvl(105), c, d), Shape::Reflection);
    }

    #[test]
    fn sawtooth_value() {
        let f = f_values(lvl(15), 15).unwrap();
        assert_eq!(f.get(&P1Class { c: 0, d: 1 }), Some(&rat(-42, 1)));
        assert_eq!(f.get(&P1Class { c: 1, d: 1 }), Some(&rat(0, 1)));
        assert_eq!(f.get(&P1Class { c: 1, d: 14 }), Some(&rat(0, 1)));
    }

    #[test]
    fn closed_forms_agree_with_reflection() {
        for (n, m) in [(15, 15), (15, 3), (21, 21), (35, 5), (105, 105)] {
            let f = f_values(lvl(n), m).unwrap();
            for (g, v) in &f.values {
                assert_eq!(&f_value_by_reflection(lvl(n), m, g).unwrap(), v, "N={n} m={m} g={g}");
            }
        }
    }

    #[test]
    fn serialization_schema() {
        let f = f_values(lvl(15), 15).unwrap();
        let v: serde_json::Value = serde_json::to_value(&f).unwrap();
        assert_eq!(v["N"], 15);
        assert_eq!(v["scale"], 1);
        assert_eq!(v["values"].as_array().unwrap().len(), 24);
        assert_eq!(v["values"][0]["g"], serde_json::json!([0, 1]));
        assert_eq!(v["values"][0]["F"], "-42");
        let e = serde_json::to_value(f.to_element_scale()).unwrap();
        assert_eq!(e["scale"], 6);
        assert_eq!(e["values"][0]["F"], "-7");
    }
}
