use super::*;
use crate::cusps::{all_cusps, eisenstein_a0};
use crate::matrix::matrix_to_cusp;

fn lv(n: u64) -> Level {
    Level::new(n).unwrap()
}

fn mat(a: i64, b: i64, c: i64, d: i64) -> UnimodularMatrix {
    UnimodularMatrix::new(a, b, c, d).unwrap()
}

fn i() -> Complex64 {
    Complex64::new(0.0, 1.0)
}

#[test]
fn translation_period() {
    let path = period_path(&mat(1, 1, 0, 1), i(), None).unwrap();
    let v = integrate_eisenstein(lv(15), 15, &path, None).unwrap();
    assert!((v.re - 14.0).abs() < 1e-12 && v.im.abs() < 1e-12, "{v:?}");
}

#[test]
fn lower_unipotent_period() {
    let c = verify_period(lv(15), 15, &mat(1, 0, 15, 1), 1e-8).unwrap();
    assert_eq!(c.exact, "14");
    assert!(c.pass, "{c:?}");
}

#[test]
fn identity_has_zero_period() {
    let path = period_path(&UnimodularMatrix::identity(), Complex64::new(0.3, 1.2), None).unwrap();
    let v = integrate_eisenstein(lv(21), 7, &path, None).unwrap();
    assert!(v.value().norm() < 1e-12);
}

#[test]
fn assorted_periods_match() {
    let level = lv(15);
    for g in [mat(2, 1, 15, 8), mat(4, -1, 45, -11), mat(7, 2, 45, 13), mat(-1, 0, 30, -1)] {
        for m in [3, 5, 15] {
            let c = verify_period(level, m, &g, 1e-7).unwrap();
            assert!(c.pass, "{m} {c:?}");
        }
    }
}

#[test]
fn raised_paths_agree() {
    let level = lv(21);
    let g = mat(5, 2, 42, 17);
    let z0 = Complex64::new(0.1, 1.3);
    let flat = integrate_eisenstein(level, 21, &period_path(&g, z0, None).unwrap(), None).unwrap();
    let high = integrate_eisenstein(level, 21, &period_path(&g, z0, Some(2.5)).unwrap(), None).unwrap();
    assert!((flat.value() - high.value()).norm() < 1e-8);
}

#[test]
fn numeric_homomorphism() {
    let level = lv(35);
    let g = mat(3, 1, 35, 12);
    let h = mat(2, 1, 35, 18);
    let gh = g.mul(&h);
    let f = |x: &UnimodularMatrix| {
        let p = period_path(x, i(), None).unwrap();
        integrate_eisenstein(level, 5, &p, None).unwrap().value()
    };
    assert!((f(&gh) - f(&g) - f(&h)).norm() < 1e-8);
}

#[test]
fn more_terms_shrink_the_tail() {
    let g = mat(2, 1, 15, 8);
    let path = period_path(&g, i(), None).unwrap();
    let f = Integrand::eisenstein(15);
    let mut last = f64::INFINITY;
    for k in [20, 40, 80, 160] {
        let v = integrate(&f, &path, Some(k), 1e3).unwrap();
        assert!(v.tail_bound < last);
        last = v.tail_bound;
    }
    assert!(integrate(&f, &path, Some(2), 1e-12).is_err());
}

#[test]
fn constant_terms_match_cusp_data() {
    for n in [15u64, 21, 105] {
        let level = lv(n);
        for m in level.eisenstein_indices() {
            let f = Integrand::eisenstein(m);
            for y in all_cusps(level) {
                let x = if y.key == n { Cusp::infinity() } else { Cusp::new(1, y.key).unwrap() };
                let x = if y.key == 1 { Cusp::zero() } else { x };
                let chart = matrix_to_cusp(&x);
                assert_eq!(f.in_chart(&chart).constant_term(), &eisenstein_a0(level, m, y).unwrap());
            }
        }
    }
}

#[test]
fn divergent_cusp_integral_is_an_error() {
    let path = cusp_path(&Cusp::zero(), &Cusp::infinity()).unwrap();
    assert!(integrate(&Integrand::eisenstein(15), &path, None, DEFAULT_TAIL).is_err());
}

#[test]
fn half_weight_reproduces_the_closed_form() {
    let level = lv(15);
    let list = P1List::new(level);
    let zero_one = P1Class { c: 0, d: 1 };
    let mut samples: Vec<P1Class> = list
        .classes()
        .iter()
        .copied()
        .filter(|g| *g != zero_one && matches!(classify_shape(level, g.c, g.d), Shape::Sawtooth { .. }))
        .take(3)
        .collect();
    samples.insert(0, zero_one);
    assert_eq!(samples.len(), 4);
    let r = resolve_kstar_normalization(level, 15, &samples, 1e-4).unwrap();
    assert_eq!(r.factor, "1/2");
    assert_eq!(r.samples[0].exact, "-42");
    assert!((r.samples[0].half.unwrap() + 42.0).abs() < 1e-4);
}
