use crate::arith::{dedekind_sum_fast, Rational};
use crate::error::Result;
use crate::level::Level;
use crate::matrix::UnimodularMatrix;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// The period of E_m(z)dz along z0 -> g z0, for g in Gamma0(N):
/// (a + d)(m - 1)/c + 12 sgn(c) (s(d, |c|) - s(d, |c|/m)), or b(m - 1)/d when c = 0.
pub fn period(level: Level, m: u64, g: &UnimodularMatrix) -> Result<Rational> {
    level.check_index(m)?;
    g.require_gamma0(level.n())?;
    Ok(period_unchecked(m, g))
}

/// Same formula; only m | c is required.
pub(crate) fn period_unchecked(m: u64, g: &UnimodularMatrix) -> Rational {
    let mb = BigInt::from(m);
    let m1 = Rational::from_integer(&mb - 1);
    if g.c.is_zero() {
        return Rational::new(g.b.clone(), g.d.clone()) * m1;
    }
    let abs_c = g.c.abs();
    let main = Rational::new(&g.a + &g.d, g.c.clone()) * m1;
    let diff = dedekind_sum_fast(g.d.clone(), abs_c.clone()).expect("d is prime to c")
        - dedekind_sum_fast(g.d.clone(), &abs_c / &mb).expect("d is prime to c/m");
    let twelve = Rational::from_integer(12 * g.c.signum());
    main + twelve * diff
}

/// P_m(g) = (2 pi(g) - pi(h g h^-1)) / 12 with h = (1 1; 0 2), for g in Gamma0(N) ∩ Gamma(2).
pub fn p_m(level: Level, m: u64, g: &UnimodularMatrix) -> Result<Rational> {
    level.check_index(m)?;
    g.require_gamma0_gamma2(level.n())?;
    Ok(p_m_unchecked(m, g))
}

pub(crate) fn p_m_unchecked(m: u64, g: &UnimodularMatrix) -> Rational {
    let two = Rational::from_integer(2.into());
    (two * period_unchecked(m, g) - period_unchecked(m, &g.conjugate_by_h()))
        / Rational::from_integer(12.into())
}
