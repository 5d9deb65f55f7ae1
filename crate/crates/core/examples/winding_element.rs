//! The winding element: its expression through {0, 1/v} symbols, its boundary, and the
//! lattice coordinates of its integral multiple.

use eisenstein_elements::arith::rat_int;
use eisenstein_elements::eisenstein::{winding_element_in, winding_element_via_boundary};
use eisenstein_elements::homology::ModularSymbols;
use eisenstein_elements::Level;

fn main() {
    let n: u64 = std::env::args().nth(1).map(|a| a.parse().unwrap()).unwrap_or(15);
    let ms = ModularSymbols::new(Level::new(n).expect("odd square-free level"));
    let w = winding_element_in(&ms).unwrap();
    for (v, c) in &w.terms {
        println!("{c:>10} {{0, 1/{v}}}");
    }
    println!("boundary: {}", ms.boundary(&w.chain).to_display_string());
    let scaled = w.chain.scaled(&rat_int(w.multiplier));
    match ms.integral_coordinates(&scaled) {
        Some(c) => println!("{} e_N = {:?}", w.multiplier, c.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        None => println!("{} e_N is not integral", w.multiplier),
    }

    // {0, oo} corrected by Eisenstein elements so that the boundary vanishes
    let reference = winding_element_via_boundary(&ms).unwrap();
    println!("reduced sum formula:   {:?}", ms.reduce(&w.chain).iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("reduced {{0, oo}} + Eis: {:?}", ms.reduce(&reference).iter().map(|x| x.to_string()).collect::<Vec<_>>());
}
