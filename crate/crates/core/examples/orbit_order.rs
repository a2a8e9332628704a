//! Orders the free group on `s_1, s_2` by where words send 0.

use pingpong::circlemaps::sunic_generators;
use pingpong::exactgeom::{int, CirclePoint};
use pingpong::wordkit::{enumerate_reduced, orbit_order_compare, Word};

pub fn main() {
    let gens = sunic_generators(2).unwrap();
    let zero = CirclePoint::new(int(0));
    let mut words: Vec<Word> = enumerate_reduced(2, 2).collect();
    words.push(Word::empty());
    words.sort_by(|u, v| orbit_order_compare(u, v, &gens, &zero).unwrap());
    let line: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    println!("{}", line.join(" < "));
}
