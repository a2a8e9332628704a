//! Parses every certificate document shipped next to this example and
//! verifies it. `broken.cert` is expected to fail with a witness.

use std::fs;
use std::path::Path;

use pingpong::cli::{AnyCertificate, CertificateDocument};

pub fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples");
    let mut files: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "cert"))
        .collect();
    files.sort();
    for path in files {
        let text = fs::read_to_string(&path).unwrap();
        let doc = CertificateDocument::parse(&text).unwrap();
        let report = match doc.certificate().unwrap() {
            AnyCertificate::Circle(c) => c.verify().unwrap(),
            AnyCertificate::Projective(c) => c.verify().unwrap(),
        };
        let name = path.file_name().unwrap().to_string_lossy();
        let verdict = if report.passed() { "PASS" } else { "FAIL" };
        println!("{name}: {verdict}");
        for c in report.failures() {
            println!("  {} -- {}", c.name, c.witness.as_deref().unwrap_or(""));
        }
        assert_eq!(report.passed(), name != "broken.cert");
    }
}
