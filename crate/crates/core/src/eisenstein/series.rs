use crate::arith::sigma1;
use crate::error::Result;
use crate::level::Level;

/// E_m = m E2(mz) - E2(z), where E2 = 1 - 24 sum sigma1(n) q^n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EisensteinSeries {
    pub level: Level,
    pub m: u64,
}

impl EisensteinSeries {
    pub fn new(level: Level, m: u64) -> Result<Self> {
        level.check_index(m)?;
        Ok(EisensteinSeries { level, m })
    }

    /// a_0 = m - 1 and a_n = 24 sigma1(n) - 24 m sigma1(n/m), the last term only when m | n.
    pub fn coefficient(&self, n: u64) -> i64 {
        if n == 0 {
            return self.m as i64 - 1;
        }
        let mut a = 24 * sigma1(n) as i64;
        if n % self.m == 0 {
            a -= 24 * self.m as i64 * sigma1(n / self.m) as i64;
        }
        a
    }
}

/// Coefficients a_0, ..., a_{n_max}.
pub fn q_expansion(level: Level, m: u64, n_max: u64) -> Result<Vec<i64>> {
    let e = EisensteinSeries::new(level, m)?;
    Ok((0..=n_max).map(|n| e.coefficient(n)).collect())
}
