//! The coefficients F_m / 6 of the Eisenstein element, which closed form produced each
//! one, and the full battery of exact checks.

use eisenstein_elements::eisenstein::f_values;
use eisenstein_elements::homology::{verify_eisenstein, ModularSymbols};
use eisenstein_elements::Level;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().unwrap());
    let n = args.next().unwrap_or(15);
    let m = args.next().unwrap_or(n);
    let level = Level::new(n).expect("odd square-free level");

    let f = f_values(level, m).unwrap();
    let e = f.to_element_scale();
    for ((g, v), shape) in e.values.iter().zip(&f.shapes) {
        println!("{:>10}  {:>6}  {:?}", g.to_string(), v.to_string(), shape);
    }

    let ms = ModularSymbols::new(level);
    let report = verify_eisenstein(&ms, m);
    for c in &report.checks {
        println!("{:<36} {}", c.name, if c.pass { "ok" } else { "FAILED" });
    }
    println!("{}", serde_json::to_string(&e).unwrap());
}
