//! The products `a_i a a_j^-1` of the SL(2) table, computed exactly.
//!
//! Three of the six matrices usually quoted for this table carry swapped
//! labels: `[[1, alpha+delta], [0, 1]]` is `a0 a a3^-1` (while
//! `-a3 a a0^-1` has `-(alpha+delta)` in the corner), and likewise for
//! `a1 a a2^-1` and `a2 a a3^-1`.

use pingpong::exactgeom::rat;
use pingpong::projlinear::{Matrix2, Sl2Params};

pub fn main() {
    let params = Sl2Params::new(rat(1, 1), rat(3, 2), rat(2, 1), rat(1, 1));
    let (a, t) = params.elements();
    let p = |i: usize, j: usize| &(&t[i] * &a) * &t[j].try_inverse().unwrap();

    println!("alpha = 1, beta = 3/2, gamma = 2, delta = 1");
    println!("-a2 a a0^-1 = {}", -&p(2, 0));
    println!("-a3 a a1^-1 = {}", -&p(3, 1));
    println!(" a1 a a0^-1 = {}", p(1, 0));
    println!(" a2 a a3^-1 = {}", p(2, 3));
    println!(" a0 a a3^-1 = {}", p(0, 3));
    println!(" a1 a a2^-1 = {}", p(1, 2));
    println!("-a3 a a0^-1 = {}", -&p(3, 0));

    assert_eq!(p(0, 3), Matrix2::from_ints(1, 2, 0, 1));
    assert_eq!(-&p(3, 0), Matrix2::from_ints(1, -2, 0, 1));
}
