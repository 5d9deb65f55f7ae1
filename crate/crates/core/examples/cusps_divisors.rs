//! Cusps of X0(N) and the divisors of the Eisenstein series E_m.

use eisenstein_elements::cusps::{all_cusps, cusp_classify, eisenstein_a0, eisenstein_divisor, ramification_index};
use eisenstein_elements::Level;

fn main() {
    let n: u64 = std::env::args().nth(1).map(|a| a.parse().unwrap()).unwrap_or(15);
    let level = Level::new(n).expect("odd square-free level");

    println!("{} cusps on X0({n})", all_cusps(level).len());
    for y in all_cusps(level) {
        println!("  key {:>4}  ramification {:>4}", y.key, ramification_index(level, y));
    }
    for (a, c) in [(2, 9), (7, 30), (1, 0), (4, 5)] {
        println!("class of {a}/{c}: key {}", cusp_classify(level, a, c).unwrap().key);
    }

    for m in level.eisenstein_indices() {
        let div = eisenstein_divisor(level, m).unwrap();
        let a0: Vec<String> = all_cusps(level)
            .into_iter()
            .map(|y| eisenstein_a0(level, m, y).unwrap().to_string())
            .collect();
        println!("div E_{m} = {}   constant terms {a0:?}", div.to_display_string());
    }
}
