//! Floating-point cross-checks: integrals of weight-2 Eisenstein combinations along
//! paths in the upper half-plane, evaluated term by term from q-expansions.
//!
//! A path is a list of legs. Each leg lives in a chart z = sigma(tau) with sigma in
//! SL2(Z); there the integrand is expanded at the cusp sigma(oo) through the slash
//! action, and each straight piece is integrated in closed form. Charts are chained
//! along Ford circles (consecutive continued-fraction convergents), which keeps every
//! waypoint at Im(tau) = 1 in its own chart.

mod chart;
mod paths;

pub use chart::{ChartExpansion, Integrand};
pub use paths::{cusp_path, period_path, Leg, PathSpec};

use crate::arith::{rational_string, Rational};
use crate::eisenstein::{classify_shape, period, Shape};
use crate::error::{Error, Result};
use crate::level::Level;
use crate::matrix::{Cusp, UnimodularMatrix};
use crate::p1::{omega_tilde_reps, P1Class, P1List};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::Serialize;

/// Default bound on the discarded tail of every integral.
pub const DEFAULT_TAIL: f64 = 1e-10;
/// Waypoints must stay at least this high in their chart.
pub const DEFAULT_FLOOR: f64 = 0.5;

/// Result of a path integral.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Integral {
    pub re: f64,
    pub im: f64,
    /// Rigorous bound on the truncated part.
    pub tail_bound: f64,
    /// Largest number of q-terms used on any piece.
    pub terms: usize,
}

impl Integral {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Integral of `f` along `path`. With `terms = Some(k)` every series is cut after k
/// terms and the call fails if the resulting tail bound exceeds `tail`; with `None`
/// the count is chosen per piece to meet `tail`.
pub fn integrate(f: &Integrand, path: &PathSpec, terms: Option<usize>, tail: f64) -> Result<Integral> {
    path.validate()?;
    let pieces: usize = path.legs.iter().map(|l| l.pieces()).sum::<usize>().max(1);
    let budget = tail / pieces as f64;
    let mut total = Complex64::new(0.0, 0.0);
    let mut bound = 0.0;
    let mut used = 0;
    for leg in &path.legs {
        let exp = f.in_chart(&leg.chart);
        let r = exp.integrate_leg(leg, terms, budget)?;
        total += r.0;
        bound += r.1;
        used = used.max(r.2);
    }
    if bound > tail {
        return Err(Error::Numeric(format!("tail bound {bound:e} exceeds {tail:e}")));
    }
    Ok(Integral { re: total.re, im: total.im, tail_bound: bound, terms: used })
}

/// Integral of E_m(z) dz along a path.
pub fn integrate_eisenstein(
    level: Level,
    m: u64,
    path: &PathSpec,
    terms: Option<usize>,
) -> Result<Integral> {
    level.check_index(m)?;
    integrate(&Integrand::eisenstein(m), path, terms, DEFAULT_TAIL)
}

#[derive(Clone, Debug, Serialize)]
pub struct PeriodCheck {
    pub matrix: UnimodularMatrix,
    pub exact: String,
    pub numeric_re: f64,
    pub numeric_im: f64,
    pub residual: f64,
    pub tail_bound: f64,
    pub pass: bool,
}

/// Compares the closed-form period of E_m at g with the integral from i to g(i).
pub fn verify_period(level: Level, m: u64, g: &UnimodularMatrix, tol: f64) -> Result<PeriodCheck> {
    let exact = period(level, m, g)?;
    let path = period_path(g, Complex64::new(0.0, 1.0), None)?;
    let num = integrate_eisenstein(level, m, &path, None)?;
    let residual = (num.value() - Complex64::new(exact.to_f64().unwrap(), 0.0)).norm();
    Ok(PeriodCheck {
        matrix: g.clone(),
        exact: rational_string(&exact),
        numeric_re: num.re,
        numeric_im: num.im,
        residual,
        tail_bound: num.tail_bound,
        pass: residual < tol,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct KstarSample {
    pub class: P1Class,
    pub r: u64,
    pub exact: String,
    /// Real part of the integral for the half-weighted candidate, or null if divergent.
    pub half: Option<f64>,
    /// Same for the unit-weighted candidate.
    pub one: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KstarResolution {
    /// Weight of E_m((z+1)/2) that reproduces the closed form: "1/2" or "1".
    pub factor: String,
    pub samples: Vec<KstarSample>,
}

/// Decides between the integrands 2E_m(z) - c E_m((z+1)/2), c in {1, 1/2}, by integrating
/// each from g(1) to g(-1) (g the representative of the class that is congruent to the
/// identity mod 2) and comparing the real part with 12(s(r, m) - 2 s(r, 2m)).
pub fn resolve_kstar_normalization(
    level: Level,
    m: u64,
    samples: &[P1Class],
    tol: f64,
) -> Result<KstarResolution> {
    level.check_index(m)?;
    if samples.is_empty() {
        return Err(Error::Inconclusive("no sample classes".into()));
    }
    let list = P1List::new(level);
    let tilde = omega_tilde_reps(&list);
    let lm = level.sublevel(m)?;
    let candidates = [
        Integrand::pullback(m, Rational::new(1.into(), 2.into())),
        Integrand::pullback(m, Rational::from_integer(1.into())),
    ];
    let exact_values = crate::eisenstein::f_values(level, m)?;
    let mut out = Vec::new();
    let mut wins = [true, true];
    for g in samples {
        let Shape::Sawtooth { r } = classify_shape(lm, g.c % m, g.d % m) else {
            return Err(Error::Inconclusive(format!("class {g} is not of the form (r-1 : r+1)")));
        };
        let exact = exact_values.get(g).cloned().expect("class in list");
        let rep = tilde.get(&list, g);
        let a = rep.act(&Cusp::from_pair(1.into(), 1.into()));
        let b = rep.act(&Cusp::from_pair((-1).into(), 1.into()));
        let path = cusp_path(&a, &b)?;
        let mut vals = [None, None];
        for (i, f) in candidates.iter().enumerate() {
            vals[i] = integrate(f, &path, None, DEFAULT_TAIL).ok().map(|v| v.re);
            let ok = vals[i].is_some_and(|v| (v - exact.to_f64().unwrap()).abs() < tol);
            wins[i] &= ok;
        }
        out.push(KstarSample { class: *g, r, exact: rational_string(&exact), half: vals[0], one: vals[1] });
    }
    let factor = match wins {
        [true, false] => "1/2",
        [false, true] => "1",
        [true, true] => return Err(Error::Inconclusive("both candidates match".into())),
        [false, false] => return Err(Error::Inconclusive("neither candidate matches".into())),
    };
    Ok(KstarResolution { factor: factor.into(), samples: out })
}

#[cfg(test)]
mod tests;
