//! The free group of rank 2 acting on itself: `F = A' u aA'` and the
//! disjointness of `A'`, `bA'`, `b^2A'` inside a ball.

use pingpong::wordkit::{corollary_ball_check, RegularActionModel, Word};

pub fn main() {
    let model = RegularActionModel { rank: 2, radius: 7 };
    let b = Word::parse("g2").unwrap();
    let a = Word::parse("g1").unwrap();
    println!("b in aA': {}", model.in_translate(&a, &b));
    print!("{}", corollary_ball_check(7).unwrap());
}
