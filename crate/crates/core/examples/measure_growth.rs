//! How much of the circle the partial orbit of the seed arc covers as the
//! word length grows.

use pingpong::certkit::{generators, Certificate, Recipe};
use pingpong::circlemaps::{example_certificate, partial_orbit_union, ExampleKind};

pub fn main() {
    let cert = Certificate::III(example_certificate(ExampleKind::SunicRankK { k: 2 }).unwrap());
    let g = generators(&cert, &Recipe::rank_k_mirror(2)).unwrap();
    let seed = g.seed.unwrap();
    for len in 0..=4 {
        let covered = partial_orbit_union(&g.elements, &seed, len);
        println!("L = {len}: measure {}", covered.measure());
    }
}
