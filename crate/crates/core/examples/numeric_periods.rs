//! Periods by numerical integration of q-expansions along Ford-circle paths, compared
//! with the exact values; and the weight of E_m((z+1)/2) fixed by comparison.

use eisenstein_elements::numeric::{
    cusp_path, integrate, period_path, resolve_kstar_normalization, verify_period, Integrand, DEFAULT_TAIL,
};
use eisenstein_elements::p1::P1Class;
use eisenstein_elements::sampling::{random_gamma0, seeded_rng};
use eisenstein_elements::{Cusp, Level};
use num_complex::Complex64;

fn main() {
    let level = Level::new(15).unwrap();
    let mut rng = seeded_rng(5);
    for m in [3, 5, 15] {
        for _ in 0..3 {
            let g = random_gamma0(level, &mut rng, 4, 60, false);
            let c = verify_period(level, m, &g, 1e-6).unwrap();
            println!(
                "m = {m:>2} {:<24} exact {:>6}  numeric {:>12.8}  residual {:.1e}  tail {:.1e}",
                g.to_string(),
                c.exact,
                c.numeric_re,
                c.residual,
                c.tail_bound
            );
        }
    }

    // the same period along a path raised to height 3 in every chart
    let g = random_gamma0(level, &mut rng, 4, 60, false);
    let path = period_path(&g, Complex64::new(0.0, 1.0), Some(3.0)).unwrap();
    let v = integrate(&Integrand::eisenstein(15), &path, None, DEFAULT_TAIL).unwrap();
    println!("raised path for {g}: {:.10} + {:.1e} i", v.re, v.im);

    // between two cusps the integrand must vanish at both ends
    let path = cusp_path(&Cusp::new(1, 3).unwrap(), &Cusp::new(-1, 3).unwrap()).unwrap();
    match integrate(&Integrand::eisenstein(15), &path, None, DEFAULT_TAIL) {
        Ok(v) => println!("1/3 -> -1/3: {}", v.re),
        Err(e) => println!("1/3 -> -1/3: {e}"),
    }

    let samples = [P1Class { c: 0, d: 1 }, P1Class { c: 1, d: 0 }, P1Class { c: 1, d: 3 }, P1Class { c: 1, d: 12 }];
    match resolve_kstar_normalization(level, 15, &samples, 1e-4) {
        Ok(r) => {
            println!("weight of E_15((z+1)/2): {}", r.factor);
            for s in r.samples {
                println!("  {} exact {} half {:?} one {:?}", s.class, s.exact, s.half, s.one);
            }
        }
        Err(e) => println!("{e}"),
    }
}
