use super::DEFAULT_FLOOR;
use crate::error::{Error, Result};
use crate::matrix::{Cusp, UnimodularMatrix};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Polygonal path in the chart z = chart(tau), optionally starting or ending at the
/// cusp chart(oo) (straight up from the first or last point).
#[derive(Clone, Debug)]
pub struct Leg {
    pub chart: UnimodularMatrix,
    pub points: Vec<Complex64>,
    pub from_cusp: bool,
    pub to_cusp: bool,
}

impl Leg {
    pub fn new(chart: UnimodularMatrix, points: Vec<Complex64>) -> Self {
        Leg { chart, points, from_cusp: false, to_cusp: false }
    }

    /// Straight segment, or a detour up to height `raise` and back when given.
    fn segment(chart: UnimodularMatrix, p: Complex64, q: Complex64, raise: Option<f64>) -> Self {
        let points = match raise {
            Some(h) if h > p.im.max(q.im) => {
                vec![p, Complex64::new(p.re, h), Complex64::new(q.re, h), q]
            }
            _ => vec![p, q],
        };
        Leg::new(chart, points)
    }

    pub fn pieces(&self) -> usize {
        self.points.len().saturating_sub(1) + self.from_cusp as usize + self.to_cusp as usize
    }

    pub fn chart_cusp(&self) -> Cusp {
        self.chart.act(&Cusp::infinity())
    }

    fn image(&self, tau: Complex64) -> Complex64 {
        let f = |x: &BigInt| x.to_f64().unwrap();
        let s = &self.chart;
        (tau * f(&s.a) + f(&s.b)) / (tau * f(&s.c) + f(&s.d))
    }
}

#[derive(Clone, Debug)]
pub struct PathSpec {
    pub legs: Vec<Leg>,
    /// Minimum height of any waypoint in its chart.
    pub floor: f64,
}

impl PathSpec {
    /// Checks heights and that consecutive legs meet in the upper half-plane.
    pub fn validate(&self) -> Result<()> {
        let n = self.legs.len();
        if n == 0 {
            return Err(Error::Numeric("empty path".into()));
        }
        for (i, leg) in self.legs.iter().enumerate() {
            if leg.points.is_empty() {
                return Err(Error::Numeric(format!("leg {i} has no points")));
            }
            if (leg.from_cusp && i != 0) || (leg.to_cusp && i != n - 1) {
                return Err(Error::Numeric(format!("leg {i} touches a cusp in the middle of the path")));
            }
            if let Some(p) = leg.points.iter().find(|p| p.im < self.floor) {
                return Err(Error::Numeric(format!("waypoint {p} of leg {i} lies below {}", self.floor)));
            }
        }
        for (i, w) in self.legs.windows(2).enumerate() {
            let x = w[0].image(*w[0].points.last().unwrap());
            let y = w[1].image(w[1].points[0]);
            if (x - y).norm() > 1e-9 * (1.0 + x.norm()) {
                return Err(Error::Numeric(format!("legs {i} and {} do not meet: {x} vs {y}", i + 1)));
            }
        }
        Ok(())
    }
}

/// Ford-circle charts for x = p/q: the identity, then sigma_k with columns the k-th and
/// (k-1)-th convergents (second column negated if needed for determinant 1). Each entry
/// but the last carries the offset t with chart(t + i) = next(i), the two Ford circles
/// being tangent there.
fn ford_chain(x: &Cusp) -> Vec<(UnimodularMatrix, BigInt)> {
    let (mut p, mut q) = (x.num.clone(), x.den.clone());
    let mut quotients = Vec::new();
    while !q.is_zero() {
        let (a, r) = p.div_mod_floor(&q);
        quotients.push(a);
        p = q;
        q = r;
    }
    let mut out = vec![(UnimodularMatrix::identity(), BigInt::zero())];
    let mut flipped = false;
    let (mut h0, mut h1) = (BigInt::from(0), BigInt::from(1));
    let (mut k0, mut k1) = (BigInt::from(1), BigInt::from(0));
    for a in &quotients {
        out.last_mut().unwrap().1 = if flipped { -a.clone() } else { a.clone() };
        let h = a * &h1 + &h0;
        let k = a * &k1 + &k0;
        h0 = std::mem::replace(&mut h1, h);
        k0 = std::mem::replace(&mut k1, k);
        flipped = (&h1 * &k0 - &h0 * &k1).is_negative();
        let chart = if flipped {
            UnimodularMatrix::new(h1.clone(), -h0.clone(), k1.clone(), -k0.clone())
        } else {
            UnimodularMatrix::new(h1.clone(), h0.clone(), k1.clone(), k0.clone())
        }
        .expect("consecutive convergents");
        out.push((chart, BigInt::zero()));
    }
    out
}

fn c64(x: &BigInt) -> f64 {
    x.to_f64().unwrap()
}

/// Path from z0 to g(z0) through the Ford charts of g(oo). With `raise`, each straight
/// piece detours up to that height in its chart.
pub fn period_path(g: &UnimodularMatrix, z0: Complex64, raise: Option<f64>) -> Result<PathSpec> {
    if z0.im < 1.0 {
        return Err(Error::Numeric(format!("base point {z0} must have height at least 1")));
    }
    let i = Complex64::new(0.0, 1.0);
    if g.c.is_zero() {
        // g = +-(1 t; 0 1)
        let t = c64(&(&g.b * &g.d));
        let leg = Leg::segment(UnimodularMatrix::identity(), z0, z0 + t, raise);
        return Ok(PathSpec { legs: vec![leg], floor: DEFAULT_FLOOR });
    }
    let chain = ford_chain(&g.act(&Cusp::infinity()));
    let n = chain.len() - 1;
    let mut legs = Vec::new();
    for (k, (chart, t)) in chain.iter().enumerate() {
        let start = if k == 0 { z0 } else { i };
        let end = if k < n {
            i + c64(t)
        } else {
            let h = chart.inverse().mul(g);
            debug_assert!(h.c.is_zero());
            z0 + c64(&(&h.b * &h.d))
        };
        legs.push(Leg::segment(chart.clone(), start, end, raise));
    }
    Ok(PathSpec { legs, floor: DEFAULT_FLOOR })
}

/// Path between two distinct cusps: up the Ford charts of `a` in reverse, across the
/// chart at infinity, and down the Ford charts of `b`.
pub fn cusp_path(a: &Cusp, b: &Cusp) -> Result<PathSpec> {
    if a == b {
        return Err(Error::Numeric(format!("path from {a} to itself")));
    }
    let i = Complex64::new(0.0, 1.0);
    let mut legs = Vec::new();
    let mut across = Leg::new(UnimodularMatrix::identity(), Vec::new());
    if a.is_infinity() {
        across.from_cusp = true;
    } else {
        let chain = ford_chain(a);
        let n = chain.len() - 1;
        for k in (1..=n).rev() {
            let mut leg = Leg::new(chain[k].0.clone(), vec![i]);
            if k < n {
                leg.points.insert(0, i + c64(&chain[k].1));
            } else {
                leg.from_cusp = true;
            }
            legs.push(leg);
        }
        across.points.push(i + c64(&chain[0].1));
    }
    let tail = if b.is_infinity() {
        across.to_cusp = true;
        Vec::new()
    } else {
        let chain = ford_chain(b);
        let n = chain.len() - 1;
        across.points.push(i + c64(&chain[0].1));
        (1..=n)
            .map(|k| {
                let mut leg = Leg::new(chain[k].0.clone(), vec![i]);
                if k < n {
                    leg.points.push(i + c64(&chain[k].1));
                } else {
                    leg.to_cusp = true;
                }
                leg
            })
            .collect()
    };
    if across.points.is_empty() {
        across.points.push(i);
    }
    legs.push(across);
    legs.extend(tail);
    Ok(PathSpec { legs, floor: DEFAULT_FLOOR })
}
