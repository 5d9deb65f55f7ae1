//! P1(Z/N), the coset representatives built from it, and the right actions of S and R.

use eisenstein_elements::p1::{omega_reps, omega_tilde_reps, twist_map, P1List};
use eisenstein_elements::Level;

fn main() {
    let n: u64 = std::env::args().nth(1).map(|a| a.parse().unwrap()).unwrap_or(15);
    let level = Level::new(n).expect("odd square-free level");
    let list = P1List::new(level);
    println!("|P1(Z/{n})| = {} (product of p + 1 = {})", list.len(), level.p1_size());

    let reps = omega_reps(&list);
    let tilde = omega_tilde_reps(&list);
    println!("{:>8}  {:>8}  {:>8}  {:<22} {}", "class", "*S", "*R", "representative", "rep = 1 mod 2");
    for (i, g) in list.classes().iter().enumerate() {
        println!(
            "{:>8}  {:>8}  {:>8}  {:<22} {}",
            g.to_string(),
            list.class(list.times_s(i)).to_string(),
            list.class(list.times_r(i)).to_string(),
            reps.matrices[i].to_string(),
            tilde.matrices[i]
        );
    }

    for m in level.divisors().into_iter().filter(|&m| m > 1 && m < n) {
        let images: Vec<u64> = (1..(n / m) as i64)
            .filter(|k| num_integer::Integer::gcd(k, &((n / m) as i64)) == 1)
            .map(|k| twist_map(level, m, k).unwrap())
            .collect();
        println!("twists for m = {m}: {images:?}");
    }
}
