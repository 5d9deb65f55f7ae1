use super::coefficients::f_values;
use crate::arith::{rational_string, Rational};
use crate::cusps::{eisenstein_divisor, CuspClass};
use crate::error::{Error, Result};
use crate::homology::linalg::solve;
use crate::homology::{FormalChain, ModularSymbols};
use crate::level::Level;
use crate::matrix::Cusp;
use crate::p1::P1Class;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

/// The chain sum over g of (F_m(g)/6) xi(g). Fails if some coefficient is not an integer.
pub fn eisenstein_element(level: Level, m: u64) -> Result<FormalChain> {
    let f = f_values(level, m)?.to_element_scale();
    let mut chain = FormalChain::new();
    for (g, v) in &f.values {
        if !v.is_integer() {
            return Err(Error::NonIntegral { c: g.c, d: g.d, value: rational_string(v) });
        }
        chain.add_term(*g, v);
    }
    Ok(chain)
}

/// e_N = 1/(1 - N) times the sum over units v of (F_N((1 : v))/6) {0, 1/v}.
#[derive(Clone, Debug, Serialize)]
pub struct WindingElement {
    #[serde(rename = "N")]
    pub level: Level,
    /// n = (N - 1) / gcd(N - 1, 12); n e_N should be integral.
    pub multiplier: u64,
    /// (v, coefficient of {0, 1/v}).
    #[serde(serialize_with = "serialize_terms")]
    pub terms: Vec<(u64, Rational)>,
    #[serde(skip)]
    pub chain: FormalChain,
}

fn serialize_terms<S: serde::Serializer>(
    terms: &[(u64, Rational)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<serde_json::Value> = terms
        .iter()
        .map(|(v, c)| serde_json::json!({"v": v, "coefficient": rational_string(c)}))
        .collect();
    v.serialize(s)
}

pub fn winding_element(level: Level) -> Result<WindingElement> {
    let ms = ModularSymbols::new(level);
    winding_element_in(&ms)
}

pub fn winding_element_in(ms: &ModularSymbols) -> Result<WindingElement> {
    let level = ms.level();
    let n = level.n();
    let f = f_values(level, n)?.to_element_scale();
    let denom = Rational::from_integer((1 - n as i64).into());
    let mut terms = Vec::new();
    let mut chain = FormalChain::new();
    for v in level.units() {
        let g = ms.list().normalize(1, v as i64)?;
        let coeff = f.get(&g).expect("every class has a value") / &denom;
        let path = ms.modular_symbol(&Cusp::zero(), &Cusp::from_pair(1.into(), (v as i64).into()));
        chain = chain.plus(&path.scaled(&coeff));
        terms.push((v, coeff));
    }
    let multiplier = (n - 1) / (n - 1).gcd(&12);
    Ok(WindingElement { level, multiplier, terms, chain })
}

/// The class {0, oo} + sum over m of c_m E_m, where the c_m are fixed by requiring the
/// boundary to vanish: sum c_m div(E_m) = [oo] - [0].
///
/// Its difference with {0, oo} lies in the Eisenstein part, which is the property
/// that characterizes the winding element.
pub fn winding_element_via_boundary(ms: &ModularSymbols) -> Result<FormalChain> {
    let level = ms.level();
    let ms_idx = level.eisenstein_indices();
    let keys = level.divisors();
    let divisors: Vec<_> =
        ms_idx.iter().map(|&m| eisenstein_divisor(level, m)).collect::<Result<_>>()?;
    let rows: Vec<Vec<Rational>> = keys
        .iter()
        .map(|&k| divisors.iter().map(|d| d.coefficient(CuspClass { key: k })).collect())
        .collect();
    let rhs: Vec<Rational> = keys
        .iter()
        .map(|&k| {
            if k == level.n() {
                Rational::one()
            } else if k == 1 {
                -Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    let c = solve(&rows, &rhs).ok_or(Error::Inconclusive("divisors do not span".into()))?;
    let mut chain = FormalChain::new();
    chain.add_term(P1Class { c: 0, d: 1 }, &Rational::one());
    for (m, cm) in ms_idx.iter().zip(&c) {
        if !cm.is_zero() {
            chain = chain.plus(&eisenstein_element(level, *m)?.scaled(cm));
        }
    }
    Ok(chain)
}
