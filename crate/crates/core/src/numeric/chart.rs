use super::paths::Leg;
use crate::arith::{xgcd, Rational};
use crate::error::{Error, Result};
use crate::matrix::UnimodularMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use std::f64::consts::PI;

/// A Q-combination of G((alpha z + beta)/delta), where G = 1 - 24 sum sigma1(n) q^n is the
/// weight-2 Eisenstein series. Only combinations whose non-holomorphic corrections
/// cancel (coefficients weighted by delta/alpha summing to zero) are modular.
#[derive(Clone, Debug)]
pub struct Integrand {
    terms: Vec<(Rational, [i64; 3])>,
}

impl Integrand {
    /// E_m(z) = m G(mz) - G(z).
    pub fn eisenstein(m: u64) -> Self {
        let m = m as i64;
        Integrand {
            terms: vec![(Rational::from_integer(m.into()), [m, 0, 1]), (Rational::from_integer((-1).into()), [1, 0, 1])],
        }
    }

    /// 2 E_m(z) - c E_m((z + 1)/2).
    pub fn pullback(m: u64, c: Rational) -> Self {
        let mi = m as i64;
        let r = |x: i64| Rational::from_integer(x.into());
        Integrand {
            terms: vec![
                (r(2 * mi), [mi, 0, 1]),
                (r(-2), [1, 0, 1]),
                (-(c.clone() * r(mi)), [mi, mi, 2]),
                (c, [1, 1, 2]),
            ],
        }
    }

    /// Expansion of (f | sigma)(tau) = f(sigma tau) (c tau + d)^-2 at infinity.
    ///
    /// Writing (alpha beta; 0 delta) sigma = sigma' (a b; 0 d) with sigma' in SL2(Z), the
    /// term G((alpha z + beta)/delta) contributes (delta/d)^2 G((a tau + b)/d); the
    /// non-holomorphic parts cancel in the sum.
    pub fn in_chart(&self, sigma: &UnimodularMatrix) -> ChartExpansion {
        let mut constant = Rational::zero();
        let mut series = Vec::new();
        for (coef, [alpha, beta, delta]) in &self.terms {
            let (al, be, de) = (BigInt::from(*alpha), BigInt::from(*beta), BigInt::from(*delta));
            let m11 = &al * &sigma.a + &be * &sigma.c;
            let m12 = &al * &sigma.b + &be * &sigma.d;
            let m21 = &de * &sigma.c;
            let m22 = &de * &sigma.d;
            let g = m11.gcd(&m21);
            let (x, y) = (&m11 / &g, &m21 / &g);
            let (_, v, w) = xgcd(&x, &y).expect("nonzero column");
            // x v + y w = 1, so sigma' = (x, -w; y, v)
            let a = g.clone();
            let det = BigInt::from(alpha * delta);
            let d = &det / &a;
            let b = (&v * &m12 + &w * &m22).mod_floor(&d);
            debug_assert!((-&y * &m11 + &x * &m21).is_zero());
            let ratio = Rational::new(de.clone(), d.clone());
            let weight = coef * &ratio * &ratio;
            constant += &weight;
            series.push(Series {
                weight: -24.0 * weight.to_f64().unwrap(),
                a: a.to_f64().unwrap(),
                b: b.to_f64().unwrap(),
                d: d.to_f64().unwrap(),
            });
        }
        ChartExpansion { constant, series }
    }
}

#[derive(Clone, Debug)]
struct Series {
    weight: f64,
    a: f64,
    b: f64,
    d: f64,
}

/// (f | sigma)(tau) = constant + sum over pieces of weight * sum_n sigma1(n) e(n (a tau + b)/d).
#[derive(Clone, Debug)]
pub struct ChartExpansion {
    pub constant: Rational,
    series: Vec<Series>,
}

/// Sum over n > k of n rho^n.
fn tail_sum(rho: f64, k: usize) -> f64 {
    let k = k as f64;
    rho.powf(k + 1.0) * (k + 1.0 - k * rho) / ((1.0 - rho) * (1.0 - rho))
}

const MAX_TERMS: usize = 2_000_000;

fn sigma_table(k: usize) -> Vec<f64> {
    let mut s = vec![0.0; k + 1];
    for d in 1..=k {
        for n in (d..=k).step_by(d) {
            s[n] += d as f64;
        }
    }
    s
}

impl ChartExpansion {
    pub fn constant_term(&self) -> &Rational {
        &self.constant
    }

    /// Value of the expansion at tau, using `terms` q-powers of each piece.
    pub fn evaluate(&self, tau: Complex64, terms: usize) -> Complex64 {
        let sig = sigma_table(terms);
        let mut v = Complex64::new(self.constant.to_f64().unwrap(), 0.0);
        for s in &self.series {
            let base = (Complex64::i() * 2.0 * PI * (tau * s.a + s.b) / s.d).exp();
            let mut pw = Complex64::new(1.0, 0.0);
            for sn in sig.iter().skip(1) {
                pw *= base;
                v += pw * s.weight * sn;
            }
        }
        v
    }

    /// Terms needed so that |weight| d/(pi a) sum_{n>k} n rho^n < budget.
    fn terms_for(&self, s: &Series, y: f64, budget: f64) -> Result<usize> {
        let rho = (-2.0 * PI * s.a * y / s.d).exp();
        let scale = s.weight.abs() * s.d / (PI * s.a);
        let mut k = 8;
        while scale * tail_sum(rho, k) >= budget {
            k = k * 5 / 4 + 1;
            if k > MAX_TERMS {
                return Err(Error::Numeric(format!("more than {MAX_TERMS} terms needed at height {y}")));
            }
        }
        Ok(k)
    }

    fn bound(&self, s: &Series, y: f64, k: usize) -> f64 {
        let rho = (-2.0 * PI * s.a * y / s.d).exp();
        s.weight.abs() * s.d / (PI * s.a) * tail_sum(rho, k)
    }

    /// Series part of the antiderivative at the given points, each truncated to `k[i]` terms.
    fn antiderivative_series(&self, s: &Series, taus: &[Complex64], k: usize, sig: &[f64]) -> Vec<Complex64> {
        taus.iter()
            .map(|tau| {
                let base = (Complex64::i() * 2.0 * PI * (tau * s.a + s.b) / s.d).exp();
                let step = s.d / (2.0 * PI * s.a);
                let mut pw = Complex64::new(1.0, 0.0);
                let mut acc = Complex64::new(0.0, 0.0);
                for (n, sn) in sig.iter().enumerate().take(k + 1).skip(1) {
                    pw *= base;
                    acc += pw * (sn / n as f64);
                }
                // integral of e(n(a tau + b)/d) is d/(2 pi i n a) times the same exponential
                acc * s.weight * step / Complex64::i()
            })
            .collect()
    }

    /// Integral over one leg; returns (value, tail bound, max terms).
    pub(crate) fn integrate_leg(
        &self,
        leg: &Leg,
        terms: Option<usize>,
        budget: f64,
    ) -> Result<(Complex64, f64, usize)> {
        let c = self.constant.to_f64().unwrap();
        if (leg.from_cusp || leg.to_cusp) && !self.constant.is_zero() {
            return Err(Error::Numeric(format!(
                "integrand has constant term {} at the cusp {}: the integral diverges",
                self.constant,
                leg.chart_cusp()
            )));
        }
        let pts = &leg.points;
        let mut value = Complex64::new(0.0, 0.0);
        for w in pts.windows(2) {
            value += (w[1] - w[0]) * c;
        }
        let per = budget / (self.series.len().max(1) as f64);
        let mut bound = 0.0;
        let mut used = 0;
        for s in &self.series {
            // piece heights: each straight piece, plus the vertical ends at a cusp
            let mut heights: Vec<f64> = pts.windows(2).map(|w| w[0].im.min(w[1].im)).collect();
            if leg.from_cusp {
                heights.push(pts[0].im);
            }
            if leg.to_cusp {
                heights.push(pts[pts.len() - 1].im);
            }
            let ks: Vec<usize> = match terms {
                Some(k) => vec![k; heights.len()],
                None => heights.iter().map(|&y| self.terms_for(s, y, per)).collect::<Result<_>>()?,
            };
            let kmax = ks.iter().copied().max().unwrap_or(0);
            let sig = sigma_table(kmax);
            used = used.max(kmax);
            let mut idx = 0;
            for w in pts.windows(2) {
                let k = ks[idx];
                let ends = self.antiderivative_series(s, w, k, &sig);
                value += ends[1] - ends[0];
                bound += self.bound(s, heights[idx], k);
                idx += 1;
            }
            if leg.from_cusp {
                let k = ks[idx];
                value += self.antiderivative_series(s, &pts[..1], k, &sig)[0];
                bound += self.bound(s, heights[idx], k) / 2.0;
                idx += 1;
            }
            if leg.to_cusp {
                let k = ks[idx];
                value -= self.antiderivative_series(s, &pts[pts.len() - 1..], k, &sig)[0];
                bound += self.bound(s, heights[idx], k) / 2.0;
            }
        }
        Ok((value, bound, used))
    }
}
