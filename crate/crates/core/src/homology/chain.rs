use crate::arith::{rational_string, Rational};
use crate::p1::P1Class;
use num_traits::Zero;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

/// Finite Q-combination of Manin symbols xi(g); zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalChain {
    coeffs: BTreeMap<P1Class, Rational>,
}

impl FormalChain {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(g: P1Class) -> Self {
        let mut c = Self::new();
        c.add_term(g, &Rational::from_integer(1.into()));
        c
    }

    pub fn add_term(&mut self, g: P1Class, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(g).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&g);
        }
    }

    pub fn coefficient(&self, g: &P1Class) -> Rational {
        self.coeffs.get(g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&P1Class, &Rational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scaled(&self, s: &Rational) -> Self {
        let mut out = Self::new();
        for (g, c) in &self.coeffs {
            out.add_term(*g, &(c * s));
        }
        out
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &o.coeffs {
            out.add_term(*g, c);
        }
        out
    }

    pub fn minus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &o.coeffs {
            out.add_term(*g, &-c);
        }
        out
    }
}

/// {"(c:d)": "p/q"} in class order.
impl Serialize for FormalChain {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m: BTreeMap<String, String> =
            self.coeffs.iter().map(|(g, c)| (g.to_string(), rational_string(c))).collect();
        m.serialize(s)
    }
}
