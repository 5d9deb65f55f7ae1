use super::{FormalChain, ModularSymbols};
use crate::arith::{rational_string, Rational};
use crate::cusps::eisenstein_divisor;
use crate::eisenstein::{f_value_by_reflection, f_values, f_values_with};
use crate::report::{Check, Report};
use num_traits::Zero;
use serde_json::json;

/// Exact checks that the chain sum (F_m(g)/6) xi(g) is the Eisenstein element of E_m:
/// boundary, Hecke eigenvalues, integrality and independence of auxiliary choices.
pub fn verify_eisenstein(ms: &ModularSymbols, m: u64) -> Report {
    let level = ms.level();
    let mut report = Report::new(level.n(), Some(m));
    let f = match f_values(level, m) {
        Ok(f) => f,
        Err(e) => {
            report.push(Check::new("coefficients", false, json!(e.to_string())));
            return report;
        }
    };
    let six = Rational::from_integer(6.into());
    let bad: Vec<String> = f
        .values
        .iter()
        .filter(|(_, v)| !(v / &six).is_integer())
        .map(|(g, v)| format!("{g}: {}", rational_string(v)))
        .collect();
    report.push(Check::new(
        "integrality",
        bad.is_empty(),
        json!({"classes": f.values.len(), "non_integral": bad}),
    ));

    let mut chain = FormalChain::new();
    for (g, v) in &f.values {
        chain.add_term(*g, &(v / &six));
    }

    let expected = eisenstein_divisor(level, m).expect("m was validated").negated();
    let got = ms.boundary(&chain);
    report.push(Check::new(
        "boundary",
        got == expected,
        json!({
            "boundary": got,
            "expected": expected,
            "global_sign": 1,
            "readable": got.to_display_string(),
        }),
    ));

    let reduced = ms.reduce(&chain);
    for l in [2u64, 13] {
        if level.n() % l == 0 {
            continue;
        }
        let image = ms.hecke(l, &chain).map(|t| ms.reduce(&t));
        let scale = Rational::from_integer((l + 1).into());
        let (pass, detail) = match image {
            Ok(img) => {
                let ok = img.iter().zip(&reduced).all(|(a, b)| *a == b * &scale);
                let mismatch = img
                    .iter()
                    .zip(&reduced)
                    .filter(|(a, b)| **a != *b * &scale)
                    .count();
                (ok, json!({"eigenvalue": l + 1, "rank": reduced.len(), "mismatched_coordinates": mismatch}))
            }
            Err(e) => (false, json!(e.to_string())),
        };
        report.push(Check::new(format!("hecke_T{l}"), pass, detail));
    }

    let alt = f_values_with(level, m, 1, 1);
    let same = alt.as_ref().map(|a| a.values == f.values).unwrap_or(false);
    report.push(Check::new(
        "bezout_invariance",
        same,
        json!({"alternative_choice": 1, "identical": same}),
    ));

    let zero_at_units = [(1i64, 1i64), (-1, 1)].iter().all(|&(c, d)| {
        let g = ms.list().normalize(c, d).expect("(±1 : 1) is a point");
        f.get(&g).map(|v| v.is_zero()).unwrap_or(false)
    });
    report.push(Check::new("vanishes_at_plus_minus_one", zero_at_units, json!(null)));

    let disagree: Vec<String> = f
        .values
        .iter()
        .filter(|(g, v)| f_value_by_reflection(level, m, g).map(|w| &w != v).unwrap_or(true))
        .map(|(g, _)| g.to_string())
        .collect();
    report.push(Check::new(
        "closed_forms_match_reflection_route",
        disagree.is_empty(),
        json!({"disagreeing_classes": disagree}),
    ));
    report
}
