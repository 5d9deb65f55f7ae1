//! Dedekind sums two ways, and the reciprocity law they satisfy.
//!
//! ```bash
//! cargo run --example dedekind_reciprocity -- 355 113
//! ```

use eisenstein_elements::arith::{dedekind_sum, dedekind_sum_fast, rat, rational_string};
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (u, v) = match args[..] {
        [u, v] => (u, v),
        _ => (355, 113),
    };

    let fast = dedekind_sum_fast(u, v).expect("coprime, v > 0");
    let direct = dedekind_sum(u, v).expect("small enough to sum directly");
    println!("s({u}, {v}) = {}   (direct: {})", rational_string(&fast), rational_string(&direct));

    let back = dedekind_sum_fast(v, u).expect("coprime");
    let (bu, bv) = (BigInt::from(u), BigInt::from(v));
    let rhs = rat(-1, 4)
        + (BigRational::new(bu.clone(), bv.clone())
            + BigRational::new(bv.clone(), bu.clone())
            + BigRational::new(1.into(), &bu * &bv))
            / rat(12, 1);
    println!("s({u}, {v}) + s({v}, {u}) = {}", rational_string(&(fast.clone() + &back)));
    println!("-1/4 + (u/v + v/u + 1/uv)/12 = {}", rational_string(&rhs));
    assert_eq!(fast + back, rhs);

    // the fast path has no size limit
    let big: BigInt = BigInt::from(10).pow(40) + 1;
    let s = dedekind_sum_fast(BigInt::from(7), big.clone()).unwrap();
    println!("s(7, 10^40 + 1) has a {}-digit denominator", s.denom().to_string().len());
}
