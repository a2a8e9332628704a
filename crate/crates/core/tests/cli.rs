use std::fs;
use std::path::{Path, PathBuf};

use pingpong::cli::{run, AnyCertificate, CertificateDocument, DocumentError};
use pingpong::exactgeom::Domain;

fn corpus(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn documents() -> Vec<PathBuf> {
    let mut files: Vec<_> = fs::read_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("examples"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "cert"))
        .collect();
    files.sort();
    files
}

fn pingpong(args: &[&str]) -> (i32, String) {
    let out = run(std::iter::once("pingpong").chain(args.iter().copied()));
    (out.code, out.output)
}

#[test]
fn verify_exit_codes() {
    assert_eq!(pingpong(&["verify", &corpus("circle_n7.cert")]).0, 0);
    let (code, out) = pingpong(&["verify", &corpus("broken.cert")]);
    assert_eq!(code, 1);
    assert!(out.contains("a1A n a2A = [1/3,2/3)"), "{out}");
    assert_eq!(pingpong(&["verify", "no/such/file.cert"]).0, 2);
    assert_eq!(pingpong(&["verify"]).0, 2);
    assert_eq!(pingpong(&["frobnicate"]).0, 2);
}

#[test]
fn syntax_errors_exit_two() {
    let dir = std::env::temp_dir().join(format!("pingpong-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.cert");
    fs::write(&bad, "space circle\nelement a rot 1/0\ngenerators a\n").unwrap();
    let (code, out) = pingpong(&["verify", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.contains("line 2, column 15"), "{out}");
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn freeness_on_sanov() {
    let (code, out) = pingpong(&["freeness", &corpus("sanov.cert"), "--max-len", "6"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("g1 = u = mat [1 2; 0 1]"));
}

#[test]
fn freeness_with_basepoint() {
    let (code, out) = pingpong(&["freeness", &corpus("sunic_k2.cert"), "--max-len", "4", "--basepoint", "0"]);
    assert_eq!(code, 0, "{out}");
    let (code, _) = pingpong(&["freeness", &corpus("sanov.cert"), "--max-len", "3", "--basepoint", "1:0"]);
    // (1:0) is fixed by u, so its orbit is not free
    assert_eq!(code, 1);
    assert_eq!(pingpong(&["freeness", &corpus("sanov.cert"), "--max-len", "3", "--basepoint", "1/2"]).0, 2);
}

#[test]
fn generators_command() {
    let (code, out) = pingpong(&["generators", &corpus("circle_n3_ii.cert"), "--recipe", "ii"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("g1 = a a1^-1 a0 a^-1 a0^-1 a1 = "));
    let (code, out) = pingpong(&[
        "generators",
        &corpus("sl2_1111.cert"),
        "--recipe",
        "iii4",
        "--pairing",
        "0,3,1,2",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("g1 = a0 a a3^-1 = mat [1 2; 0 1]"), "{out}");
    assert!(out.contains("g2 = a1 a a2^-1 = mat [1 0; 2 1]"), "{out}");
    let (code, out) = pingpong(&["generators", &corpus("circle_n7.cert"), "--recipe", "rankk", "--k", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("free orbit seed: [0,1/7)"));
    assert_eq!(pingpong(&["generators", &corpus("circle_n7.cert"), "--recipe", "rankk", "--k", "4"]).0, 2);
    assert_eq!(pingpong(&["generators", &corpus("broken.cert"), "--recipe", "ii"]).0, 1);
}

#[test]
fn amplify_and_schottky() {
    let (code, out) = pingpong(&["amplify", &corpus("circle_n3_ii.cert"), "--to", "6"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("bind a5 a5") && out.contains("# verify: PASS"));
    let amplified = CertificateDocument::parse(&out).unwrap();
    assert!(matches!(amplified.certificate().unwrap(), AnyCertificate::Circle(_)));

    let (code, out) = pingpong(&["schottky", &corpus("schottky_n5.cert")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("condition iv"));
    assert_eq!(pingpong(&["schottky", &corpus("circle_n3_ii.cert")]).0, 2);
}

#[test]
fn order_command() {
    let (code, out) = pingpong(&["order", &corpus("sunic_k2.cert"), "--u", "g1", "--v", "g2"]);
    assert_eq!((code, out.as_str()), (0, "g1 vs g2 at 0: less\n"));
    let (_, out) = pingpong(&["order", &corpus("sunic_k2.cert"), "--u", "", "--v", "g1"]);
    assert_eq!(out, "1 vs g1 at 0: less\n");
    assert_eq!(pingpong(&["order", &corpus("sanov.cert"), "--u", "g1", "--v", "g2"]).0, 2);
    assert_eq!(pingpong(&["order", &corpus("sunic_k2.cert"), "--u", "g7", "--v", "g2"]).0, 2);
}

#[test]
fn corollary_command() {
    assert_eq!(pingpong(&["corollary-check", "--max-len", "5"]).0, 0);
    assert_eq!(pingpong(&["corollary-check", "--max-len", "1"]).0, 2);
}

#[test]
fn example_command_matches_corpus() {
    for (args, file) in [
        (vec!["example", "standard", "--n", "7"], "circle_n7.cert"),
        (vec!["example", "bennett", "--k", "3"], "bennett_k3.cert"),
        (vec!["example", "sl2"], "sl2_1111.cert"),
        (vec!["example", "sanov"], "sanov.cert"),
        (vec!["example", "sunic", "--k", "2"], "sunic_k2.cert"),
        (vec!["example", "standard", "--n", "5"], "schottky_n5.cert"),
    ] {
        let (code, out) = pingpong(&args);
        assert_eq!(code, 0);
        assert_eq!(out, fs::read_to_string(corpus(file)).unwrap(), "{file}");
    }
    assert_eq!(pingpong(&["example", "standard", "--n", "2"]).0, 2);
    assert_eq!(pingpong(&["example", "sl2", "--alpha", "1/2"]).0, 2);
}

#[test]
fn corpus_round_trips() {
    for path in documents() {
        let text = fs::read_to_string(&path).unwrap();
        let doc = CertificateDocument::parse(&text).unwrap();
        let again = CertificateDocument::parse(&doc.to_string()).unwrap();
        assert_eq!(doc, again, "{}", path.display());
        assert_eq!(doc.to_string(), again.to_string());
    }
}

#[test]
fn corpus_verifies_and_passes_the_oracle() {
    for path in documents() {
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let file = path.to_string_lossy();
        let expected = if name == "broken.cert" { 1 } else { 0 };
        assert_eq!(pingpong(&["verify", &file]).0, expected, "{name}");
        if expected == 0 {
            let doc = CertificateDocument::parse(&fs::read_to_string(&path).unwrap()).unwrap();
            let len = if doc.space == Domain::Projective { "10" } else { "6" };
            let (code, out) = pingpong(&["freeness", &file, "--max-len", len]);
            assert_eq!(code, 0, "{name}: {out}");
        }
    }
}

#[test]
fn document_parse_matches_catalog() {
    let text = fs::read_to_string(corpus("circle_n3_ii.cert")).unwrap();
    let doc = CertificateDocument::parse(&text).unwrap();
    let expected = pingpong::certkit::Certificate::II(pingpong::circlemaps::standard_condition_ii(3).unwrap());
    assert_eq!(doc.certificate().unwrap(), AnyCertificate::Circle(expected));
    let err = CertificateDocument::parse(&text.replace("bind a1 a1\n", "")).unwrap_err();
    assert!(matches!(err, DocumentError::Semantic(_)));
}
