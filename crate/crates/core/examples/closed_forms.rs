//! Composing rotations with the order-two map `a` gives the same canonical
//! maps as the closed forms.

use pingpong::circlemaps::{bennett_b, closed_s, closed_s0, closed_t, rotation, standard_a};
use pingpong::exactgeom::rat;

pub fn main() {
    for n in 3..=10 {
        let a = standard_a(n).unwrap();
        assert!(a.compose(&a).is_identity());
    }
    println!("a o a = 1 for n = 3..10");

    for k in 2..=5usize {
        let n = 2 * k + 1;
        let a = standard_a(n).unwrap();
        let r = rotation(rat(1, n as i64));
        assert_eq!(a.compose(&r), closed_s0(k).unwrap());
        for i in 1..=k {
            let ri = rotation(rat(i as i64, n as i64));
            assert_eq!(ri.compose(&a).compose(&ri), closed_s(i, k).unwrap());
        }
        for j in 0..k {
            let lj = bennett_b(2 * j, k).unwrap();
            let t = lj.compose(&a).compose(&r).compose(&lj.inverse());
            assert_eq!(t, closed_t(j, k).unwrap());
        }
        println!("k = {k}: s0 = {}", closed_s0(k).unwrap());
    }
}
