//! Hecke operators on the relative homology, and the Eisenstein eigenvalue l + 1.

use eisenstein_elements::arith::rat_int;
use eisenstein_elements::eisenstein::eisenstein_element;
use eisenstein_elements::homology::ModularSymbols;
use eisenstein_elements::Level;

fn main() {
    for n in [15u64, 21, 35] {
        let level = Level::new(n).unwrap();
        let ms = ModularSymbols::new(level);
        println!("N = {n}: homology rank {}", ms.rank());
        for m in level.eisenstein_indices() {
            let e = eisenstein_element(level, m).unwrap();
            let base = ms.reduce(&e);
            for l in [2u64, 11, 13].into_iter().filter(|l| n % l != 0) {
                let image = ms.reduce(&ms.hecke(l, &e).unwrap());
                let ok = image.iter().zip(&base).all(|(a, b)| *a == b * rat_int(l + 1));
                println!("  T_{l:<2} E_{m:<3} = {:>2} E_{m:<3} {}", l + 1, if ok { "ok" } else { "MISMATCH" });
            }
        }
    }
}
