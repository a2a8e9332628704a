//! Grows the three-translate certificate one translate at a time, then
//! turns five translates into a quasi-Schottky configuration.

use pingpong::certkit::Certificate;
use pingpong::circlemaps::standard_condition_ii;

pub fn main() {
    let mut cert = standard_condition_ii(3).unwrap().to_iii();
    while cert.n() < 8 {
        cert = cert.amplify().unwrap();
        let report = cert.verify().unwrap();
        println!("n = {}: {}", cert.n(), if report.passed() { "PASS" } else { "FAIL" });
        assert!(report.passed());
    }

    let five = standard_condition_ii(3).unwrap().to_iii().amplify_to(5).unwrap();
    let iv = five.to_schottky().unwrap();
    println!("f1 = {}", iv.f1);
    println!("f2 = {}", iv.f2);
    for (name, set) in iv.sets() {
        println!("{name} = {set}");
    }
    print!("{}", Certificate::IV(iv).verify().unwrap());
}
