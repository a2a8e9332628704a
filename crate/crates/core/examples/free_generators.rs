//! Reads free generators off certificates and searches the ball of reduced
//! words for a relation among them.

use pingpong::certkit::{generators, Certificate, Recipe};
use pingpong::circlemaps::{example_certificate, standard_condition_ii, ExampleKind};
use pingpong::exactgeom::CirclePoint;
use pingpong::projlinear::{sl2_example_certificate, Sl2Params};
use pingpong::wordkit::{freeness_oracle, OracleMode};
use pingpong::exactgeom::int;

pub fn main() {
    let ii = Certificate::II(standard_condition_ii(3).unwrap());
    let g = generators(&ii, &Recipe::FromII).unwrap();
    for (w, e) in g.words.iter().zip(&g.elements) {
        println!("{} = {e}", w.display_with(&g.names));
    }
    print!("{}", freeness_oracle(&g.elements, 6, &OracleMode::ElementIdentity));

    let sunic = Certificate::III(example_certificate(ExampleKind::SunicRankK { k: 3 }).unwrap());
    let g = generators(&sunic, &Recipe::rank_k_mirror(3)).unwrap();
    println!("seed {}", g.seed.as_ref().unwrap());
    let zero = OracleMode::Basepoint(CirclePoint::new(int(0)));
    print!("{}", freeness_oracle(&g.elements, 4, &zero));

    let sl2 = Certificate::III(sl2_example_certificate(&Sl2Params::ints(1, 1, 1, 1)).unwrap());
    let recipe = Recipe::FromIIIPairs {
        first: (2, 0),
        second: (3, 1),
    };
    let g = generators(&sl2, &recipe).unwrap();
    for (w, e) in g.words.iter().zip(&g.elements) {
        println!("{} = {e}", w.display_with(&g.names));
    }
    print!("{}", freeness_oracle(&g.elements, 10, &OracleMode::ElementIdentity));
}
