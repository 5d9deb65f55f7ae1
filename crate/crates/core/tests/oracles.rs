//! Independent oracles for derived values.
//!
//! The coefficient function is recomputed here from scratch as a limit of log eta
//! quotients: the integrand 2E_m(z) - E_m((z+1)/2)/2 is, up to a constant, the
//! derivative of a combination of log eta(Az), and the imaginary part of log eta at a
//! cusp is an explicit Dedekind-sum expression. No closed form from the library is used.

use eisenstein_elements::arith::{rat, Rational};
use eisenstein_elements::cusps::{all_cusps, eisenstein_divisor};
use eisenstein_elements::matrix::matrix_to_cusp;
use eisenstein_elements::numeric::Integrand;
use eisenstein_elements::eisenstein::{f_values, period, q_expansion};
use eisenstein_elements::p1::{omega_tilde_reps, P1List};
use eisenstein_elements::sampling::{random_gamma0, seeded_rng};
use eisenstein_elements::{Cusp, Level};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

fn lv(n: u64) -> Level {
    Level::new(n).unwrap()
}

/// 2v times the sawtooth x - floor(x) - 1/2 at x = p/v (0 at integers).
fn twice_sawtooth(p: i64, v: i64) -> i128 {
    let r = p.rem_euclid(v);
    if r == 0 { 0 } else { (2 * r - v) as i128 }
}

/// Textbook Dedekind sum, summed over a common denominator 4v^2.
fn dedekind(u: i64, v: i64) -> Rational {
    let num: i128 = (1..v).map(|t| twice_sawtooth(t, v) * twice_sawtooth((t as i128 * u as i128 % v as i128) as i64, v)).sum();
    Rational::new(num.into(), (4 * v as i128 * v as i128).into())
}

/// (g, x, y) with a x + b y = g, in the floor-division convention.
fn xgcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        return (a.abs(), if a >= 0 { 1 } else { -1 }, 0);
    }
    let (g, x, y) = xgcd(b, a.mod_floor(&b));
    (g, y, x - Integer::div_floor(&a, &b) * y)
}

type M = (i64, i64, i64, i64);

fn mul(p: M, q: M) -> M {
    (p.0 * q.0 + p.1 * q.2, p.0 * q.1 + p.1 * q.3, p.2 * q.0 + p.3 * q.2, p.2 * q.1 + p.3 * q.3)
}

/// Singular and imaginary parts of w log eta(A z) as z tends to the cusp p/c along the
/// geodesic M(iT): (coefficient of pi T, coefficient of log T, coefficient of pi i).
fn log_eta_at_cusp(a: M, p: i64, c: i64, w: Rational) -> (Rational, Rational, Rational) {
    let mq = if c == 0 {
        if p > 0 { (1, 0, 0, 1) } else { (-1, 0, 0, -1) }
    } else {
        let (_, x, y) = xgcd(p, c);
        (p, -y, c, x)
    };
    let pm = mul(a, mq);
    let g = pm.0.gcd(&pm.2);
    let (al, ka) = (pm.0 / g, pm.2 / g);
    let (_, x, y) = xgcd(al, ka);
    let mp = (al, -y, ka, x);
    let inv = (mp.3, -mp.1, -mp.2, mp.0);
    let u = mul(inv, pm);
    assert!(u.2 == 0 && u.0 > 0 && u.3 > 0);
    let t_coef = rat(-u.0, 12 * u.3) * &w;
    let mut im = rat(u.1, 12 * u.3) * &w;
    let mut log_t = Rational::zero();
    let (al, be, ka, de) = mp;
    if ka == 0 {
        im += &w * rat(al * be, 12);
    } else {
        let (al, ka, de) = if ka < 0 { (-al, -ka, -de) } else { (al, ka, de) };
        log_t += &w / rat(2, 1);
        im += &w * (rat(al + de, 12 * ka) - dedekind(de, ka));
    }
    (t_coef, log_t, im)
}

/// Imaginary part (in units of pi i) of the log-eta primitive at a cusp, which must be
/// a regular point of the primitive.
fn primitive_at(m: i64, p: i64, c: i64) -> Rational {
    let terms: [(M, i64); 4] = [((m, 0, 0, 1), 2), ((1, 0, 0, 1), -2), ((m, m, 0, 2), -1), ((1, 1, 0, 2), 1)];
    let mut total = (Rational::zero(), Rational::zero(), Rational::zero());
    for (a, w) in terms {
        let (t, l, i) = log_eta_at_cusp(a, p, c, rat(w, 1));
        total.0 += t;
        total.1 += l;
        total.2 += i;
    }
    assert!(total.0.is_zero() && total.1.is_zero(), "primitive is singular at {p}/{c}");
    total.2
}

fn cusp_pair(x: &Cusp) -> (i64, i64) {
    (x.num.to_i64().unwrap(), x.den.to_i64().unwrap())
}

#[test]
fn coefficients_agree_with_the_eta_limit() {
    for n in [15u64, 21, 33, 35, 105] {
        let level = lv(n);
        let list = P1List::new(level);
        let reps = omega_tilde_reps(&list);
        for m in level.eisenstein_indices() {
            let f = f_values(level, m).unwrap();
            for (g, value) in &f.values {
                let rep = reps.get(&list, g);
                let a = cusp_pair(&rep.act(&Cusp::new(1, 1).unwrap()));
                let b = cusp_pair(&rep.act(&Cusp::new(-1, 1).unwrap()));
                let m = m as i64;
                let oracle = (primitive_at(m, b.0, b.1) - primitive_at(m, a.0, a.1)) * rat(12, 1);
                assert_eq!(value, &oracle, "N={n} m={m} class {g}");
            }
        }
    }
}

/// Period of E_m from the textbook Dedekind sum.
fn period_oracle(m: i64, g: (i64, i64, i64, i64)) -> Rational {
    let (a, b, c, d) = g;
    if c == 0 {
        return rat(b, d) * rat(m - 1, 1);
    }
    let sg = c.signum();
    rat(a + d, c) * rat(m - 1, 1) + rat(12 * sg, 1) * (dedekind(d, c.abs()) - dedekind(d, c.abs() / m))
}

#[test]
fn periods_agree_with_the_textbook_sum() {
    let mut rng = seeded_rng(11);
    for n in [15u64, 21, 35] {
        let level = lv(n);
        for m in level.eisenstein_indices() {
            for _ in 0..30 {
                let g = random_gamma0(level, &mut rng, 4, 100, false);
                let e = g.to_i64s().unwrap();
                assert_eq!(period(level, m, &g).unwrap(), period_oracle(m as i64, (e[0], e[1], e[2], e[3])));
            }
        }
    }
}

fn sigma1_naive(n: u64) -> i64 {
    (1..=n).filter(|d| n % d == 0).sum::<u64>() as i64
}

#[test]
fn q_expansion_from_divisor_sums() {
    let level = lv(35);
    for m in [5u64, 7, 35] {
        let a = q_expansion(level, m, 80).unwrap();
        assert_eq!(a[0], m as i64 - 1);
        for n in 1..=80u64 {
            let mut expect = 24 * sigma1_naive(n);
            if n % m == 0 {
                expect -= 24 * m as i64 * sigma1_naive(n / m);
            }
            assert_eq!(a[n as usize], expect);
        }
    }
}

/// Divisor coefficient at 1/c = (cusp width N / gcd(c^2, N)) times the constant term of
/// E_m slashed by a matrix sending infinity to 1/c, computed from the slash action on
/// the q-expansion rather than from the closed formula.
#[test]
fn divisors_from_slashed_constant_terms() {
    for n in [15u64, 21, 33, 35, 105] {
        let level = lv(n);
        for m in level.eisenstein_indices() {
            let div = eisenstein_divisor(level, m).unwrap();
            for y in all_cusps(level) {
                let c = y.key;
                let cusp = if c == n { Cusp::infinity() } else if c == 1 { Cusp::zero() } else { Cusp::new(1, c).unwrap() };
                let width = (n / (c * c).gcd(&n)) as i64;
                let a0 = Integrand::eisenstein(m).in_chart(&matrix_to_cusp(&cusp)).constant_term().clone();
                assert_eq!(div.coefficient(y), a0 * rat(width, 1), "N={n} m={m} cusp {c}");
            }
        }
    }
}
