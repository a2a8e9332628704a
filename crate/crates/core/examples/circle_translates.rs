//! The two rows of the circle picture: the seven translates of `[0,1/7)`
//! under rotation, and Bennett's six translates for `k = 3` with the three
//! uncovered gaps.

use pingpong::circlemaps::{example_certificate, ExampleKind};
use pingpong::exactgeom::{ArcSet, CirclePoint};

pub fn main() {
    let standard = example_certificate(ExampleKind::Standard { n: 7 }).unwrap();
    println!("rotations, n = 7");
    for (i, t) in standard.translates().iter().enumerate() {
        println!("  a{i}A = {t}");
    }

    let bennett = example_certificate(ExampleKind::Bennett { k: 3 }).unwrap();
    println!("Bennett, k = 3");
    let mut covered = ArcSet::<CirclePoint>::empty();
    for (j, t) in bennett.translates().iter().enumerate() {
        println!("  b{j}A = {t}");
        covered = covered.union(t);
    }
    for gap in covered.complement().arcs() {
        let m = ArcSet::normalize([gap.clone()]).measure();
        println!("  gap {gap} has measure {m}");
    }
}
