//! Exact periods of E_m on Gamma0(N), the homomorphism property, and the twisted
//! period used for the Eisenstein element.

use eisenstein_elements::eisenstein::{p_m, period};
use eisenstein_elements::sampling::{random_gamma0, seeded_rng};
use eisenstein_elements::{Level, UnimodularMatrix};

fn main() {
    let level = Level::new(15).unwrap();
    let g = UnimodularMatrix::new(1, 0, 15, 1).unwrap();
    println!("period of E_15 at {g}: {}", period(level, 15, &g).unwrap());

    let mut rng = seeded_rng(2024);
    for m in level.eisenstein_indices() {
        let a = random_gamma0(level, &mut rng, 5, 100, true);
        let b = random_gamma0(level, &mut rng, 5, 100, true);
        let (pa, pb, pab) = (
            period(level, m, &a).unwrap(),
            period(level, m, &b).unwrap(),
            period(level, m, &a.mul(&b)).unwrap(),
        );
        println!("m = {m:>2}: {a} -> {pa}, {b} -> {pb}, product -> {pab}");
        assert_eq!(pab, pa + pb);
        println!("        P_m of the product: {}", p_m(level, m, &a.mul(&b)).unwrap());
    }
}
