//! The ten acceptance criteria, all with exact arithmetic. Prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::process::ExitCode;

use pingpong::certkit::{generators, Certificate, CondII, CondIII, Recipe};
use pingpong::circlemaps::{
    bennett_b, closed_s, closed_s0, closed_t, example_certificate, partial_orbit_union, rotation,
    standard_a, standard_condition_ii, ExampleKind, PLHomeo,
};
use pingpong::cli::run;
use pingpong::exactgeom::{int, rat, ArcSet, CirclePoint, Rational};
use pingpong::projlinear::{classic_pairs, sl2_example_certificate, ClassicPair, Matrix2, Sl2Params};
use pingpong::wordkit::{
    corollary_ball_check, enumerate_reduced, freeness_oracle, orbit_order_compare, Letter,
    OracleMode, Word,
};
use pingpong::{Action, Report};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(report: Report) -> Result<(), String> {
    ensure(report.passed(), || report.to_string())
}

fn arc(p: Rational, q: Rational) -> ArcSet<CirclePoint> {
    ArcSet::arc(CirclePoint::new(p), CirclePoint::new(q)).unwrap()
}

fn circle_translates() -> Outcome {
    let out = run(["pingpong", "example", "standard", "--n", "7"]);
    ensure(out.code == 0, || out.output.clone())?;
    let standard = example_certificate(ExampleKind::Standard { n: 7 }).unwrap();
    for (i, t) in standard.translates().iter().enumerate() {
        let want = arc(rat(i as i64, 7), rat(i as i64 + 1, 7));
        ensure(*t == want, || format!("a{i}A = {t}, expected {want}"))?;
        let line = format!("# a{i}A = {want}");
        ensure(out.output.contains(&line), || format!("missing `{line}`"))?;
    }

    let out = run(["pingpong", "example", "bennett", "--k", "3"]);
    ensure(out.code == 0, || out.output.clone())?;
    let bennett = example_certificate(ExampleKind::Bennett { k: 3 }).unwrap();
    let got: BTreeSet<String> = bennett.translates().iter().map(|t| t.to_string()).collect();
    let want: BTreeSet<String> = [(0, 1, 1, 7), (4, 21, 1, 3), (1, 3, 10, 21), (11, 21, 2, 3), (2, 3, 17, 21), (6, 7, 1, 1)]
        .iter()
        .map(|&(a, b, c, d)| arc(rat(a, b), rat(c, d)).to_string())
        .collect();
    ensure(got == want, || format!("b-row {got:?}, expected {want:?}"))?;
    let covered = bennett.translates().iter().fold(ArcSet::empty(), |acc, t| acc.union(t));
    let gaps = covered.complement();
    ensure(gaps.arcs().len() == 3, || format!("gaps {gaps}"))?;
    for g in gaps.arcs() {
        let m = ArcSet::normalize([g.clone()]).measure();
        ensure(m == rat(1, 21), || format!("gap {g} has measure {m}"))?;
        let line = format!("# gap {g}, measure 1/21");
        ensure(out.output.contains(&line), || format!("missing `{line}`"))?;
    }
    Ok(format!("7 rotation translates, 6 Bennett translates, gaps {gaps}"))
}

fn order_two() -> Outcome {
    for n in 3..=10 {
        let a = standard_a(n).unwrap();
        ensure(a.compose(&a) == PLHomeo::identity(), || format!("n = {n}: a o a = {}", a.compose(&a)))?;
    }
    Ok("n = 3..10".into())
}

fn closed_forms() -> Outcome {
    let mut count = 0;
    for k in 2..=5usize {
        let n = 2 * k + 1;
        let a = standard_a(n).unwrap();
        let r = rotation(rat(1, n as i64));
        ensure(a.compose(&r) == closed_s0(k).unwrap(), || format!("k = {k}: a r != s0"))?;
        count += 1;
        for i in 1..=k {
            let ri = rotation(rat(i as i64, n as i64));
            let s = ri.compose(&a).compose(&ri);
            ensure(s == closed_s(i, k).unwrap(), || format!("k = {k}: r^{i} a r^{i} = {s}"))?;
            count += 1;
        }
        for i in 0..k {
            let li = bennett_b(2 * i, k).unwrap();
            let t = li.compose(&a).compose(&r).compose(&li.inverse());
            ensure(t == closed_t(i, k).unwrap(), || format!("k = {k}: l^{i} a r l^-{i} = {t}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} canonical equalities, k = 2..5"))
}

fn sl2_products() -> Outcome {
    let (a, t) = Sl2Params::ints(1, 1, 1, 1).elements();
    let p = |i: usize, j: usize| &(&t[i] * &a) * &t[j].try_inverse().unwrap();
    let m = Matrix2::from_ints;
    // the displayed matrices; the last three are labelled a3aa2^-1, -a3aa0^-1,
    // -a2aa1^-1 in the source but equal the index-swapped products
    let table = [
        ("-a2 a a0^-1", -&p(2, 0), m(1, -1, -1, 2)),
        ("-a3 a a1^-1", -&p(3, 1), m(2, -1, -1, 1)),
        ("a1 a a0^-1", p(1, 0), m(0, -1, 1, -2)),
        ("a2 a a3^-1", p(2, 3), m(0, -1, 1, 2)),
        ("a0 a a3^-1", p(0, 3), m(1, 2, 0, 1)),
        ("a1 a a2^-1", p(1, 2), m(1, 0, 2, 1)),
    ];
    for (label, got, want) in &table {
        ensure(got == want, || format!("{label} = {got}, expected {want}"))?;
    }
    let literal = -&p(3, 0);
    ensure(literal == m(1, -2, 0, 1), || format!("-a3 a a0^-1 = {literal}"))?;
    Ok("6 displayed matrices entry-exact (3 under index-swapped labels)".into())
}

fn verified_with_lemma<E: Action>(name: &str, c: CondIII<E>) -> Result<(), String> {
    passed(Certificate::III(c.clone()).verify().map_err(|e| format!("{name}: {e}"))?)
        .map_err(|e| format!("{name}: {e}"))?;
    passed(c.inequality_lemma_check().map_err(|e| format!("{name}: {e}"))?).map_err(|e| format!("{name}: {e}"))
}

fn certificate_suite() -> Outcome {
    let mut count = 0;
    for n in 3..=10 {
        verified_with_lemma(&format!("standard({n})"), example_certificate(ExampleKind::Standard { n }).unwrap())?;
        count += 1;
    }
    for k in 2..=5 {
        verified_with_lemma(&format!("bennett({k})"), example_certificate(ExampleKind::Bennett { k }).unwrap())?;
        count += 1;
    }
    let mut grid: Vec<Sl2Params> = Vec::new();
    for bits in 0..16 {
        let v = |b: usize| if bits >> b & 1 == 1 { 2 } else { 1 };
        grid.push(Sl2Params::ints(v(0), v(1), v(2), v(3)));
    }
    grid.push(Sl2Params::new(int(2), rat(1, 2), int(3), rat(1, 3)));
    grid.push(Sl2Params::new(rat(1, 3), int(3), int(1), int(1)));
    for params in &grid {
        let name = format!("sl2({}, {}, {}, {})", params.alpha, params.beta, params.gamma, params.delta);
        verified_with_lemma(&name, sl2_example_certificate(params).unwrap())?;
        count += 1;
    }
    Ok(format!("{count} certificates verified, inequality lemma exhaustive on each"))
}

fn constructions() -> Outcome {
    let mut c = standard_condition_ii(3).unwrap().to_iii();
    while c.n() < 8 {
        c = c.amplify().map_err(|e| e.to_string())?;
        passed(Certificate::III(c.clone()).verify().unwrap()).map_err(|e| format!("n = {}: {e}", c.n()))?;
    }
    let five = example_certificate(ExampleKind::Standard { n: 5 }).unwrap();
    let grown = standard_condition_ii(3).unwrap().to_iii().amplify().unwrap().amplify().unwrap();
    for (name, src) in [("standard(5)", five), ("amplify^2(standard(3))", grown)] {
        let iv = src.to_schottky().map_err(|e| format!("{name}: {e}"))?;
        let report = Certificate::IV(iv).verify().unwrap();
        let inclusions = report.checks.iter().filter(|c| c.name.contains("within")).count();
        ensure(inclusions == 4, || format!("{name}: {inclusions} inclusion checks"))?;
        passed(report).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok("amplify 3 -> 8 verified at each step; both Schottky conversions verified".into())
}

fn oracle_pass<E: Action>(name: &str, gens: &[E], len: usize, mode: &OracleMode<E::Point>) -> Result<(), String> {
    passed(freeness_oracle(gens, len, mode)).map_err(|e| format!("{name}: {e}"))
}

fn oracle_cross_checks() -> Outcome {
    let identity = OracleMode::ElementIdentity;
    let ii = CondII {
        a1: rotation(rat(2, 3)),
        a2: rotation(rat(1, 3)),
        ..standard_condition_ii(3).unwrap()
    };
    let g = generators(&Certificate::II(ii), &Recipe::FromII).map_err(|e| e.to_string())?;
    oracle_pass("from_ii standard(3)", &g.elements, 6, &identity)?;

    let zero = OracleMode::Basepoint(CirclePoint::new(int(0)));
    for k in [2, 3] {
        let cert = Certificate::III(example_certificate(ExampleKind::SunicRankK { k }).unwrap());
        let g = generators(&cert, &Recipe::rank_k_mirror(k)).map_err(|e| e.to_string())?;
        oracle_pass(&format!("rank_k sunic({k})"), &g.elements, 6, &identity)?;
        oracle_pass(&format!("rank_k sunic({k}) at 0"), &g.elements, 4, &zero)?;
    }

    let sl2 = Certificate::III(sl2_example_certificate(&Sl2Params::ints(1, 1, 1, 1)).unwrap());
    for (first, second) in [((0, 1), (2, 3)), ((2, 0), (3, 1))] {
        let g = generators(&sl2, &Recipe::FromIIIPairs { first, second }).map_err(|e| e.to_string())?;
        oracle_pass(&format!("sl2 pairing {first:?} {second:?}"), &g.elements, 10, &OracleMode::ElementIdentity)?;
    }
    let (u, v) = classic_pairs(&ClassicPair::Uv { u: int(2), v: int(2) }).unwrap();
    oracle_pass("uv(2,2)", &[u, v], 10, &OracleMode::ElementIdentity)?;
    Ok("PL at L = 6, matrices at L = 10, sunic orbits of 0 at L = 4".into())
}

fn positive_words(k: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut all = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 0..k {
                let mut longer: Vec<usize> = w.clone();
                longer.push(g);
                next.push(longer);
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

fn order_suite() -> Outcome {
    let zero = CirclePoint::new(int(0));
    let mut lex_pairs = 0usize;
    let mut invariance = 0usize;
    for k in [2, 3] {
        let gens = pingpong::circlemaps::sunic_generators(k).unwrap();
        let words = positive_words(k, 5);
        let as_word = |w: &[usize]| Word::reduce(w.iter().map(|&g| Letter::gen(g)));
        for (i, u) in words.iter().enumerate() {
            for v in &words[i + 1..] {
                // slice comparison is lexicographic with prefixes first
                let want = u.cmp(v);
                let got = orbit_order_compare(&as_word(u), &as_word(v), &gens, &zero).unwrap();
                ensure(got == want, || format!("k = {k}: {u:?} vs {v:?} gave {got:?}"))?;
                lex_pairs += 1;
            }
        }

        let mut small: Vec<Word> = enumerate_reduced(k, 2).collect();
        small.push(Word::empty());
        let mut multipliers: Vec<Word> = enumerate_reduced(k, 3).collect();
        multipliers.push(Word::empty());
        for (i, u) in small.iter().enumerate() {
            for v in &small[i + 1..] {
                let base = orbit_order_compare(u, v, &gens, &zero).unwrap();
                ensure(base != Ordering::Equal, || format!("{u} and {v} tie"))?;
                for w in &multipliers {
                    let got = orbit_order_compare(&w.mul(u), &w.mul(v), &gens, &zero).unwrap();
                    ensure(got == base, || format!("k = {k}: {u} vs {v} flips under {w}"))?;
                    invariance += 1;
                }
            }
        }
    }
    Ok(format!("{lex_pairs} lex pairs, {invariance} left-invariance checks"))
}

fn corollary() -> Outcome {
    passed(corollary_ball_check(7).map_err(|e| e.to_string())?)?;
    Ok("radius 7".into())
}

fn measure_growth() -> Outcome {
    let cert = Certificate::III(example_certificate(ExampleKind::SunicRankK { k: 2 }).unwrap());
    let g = generators(&cert, &Recipe::rank_k_mirror(2)).map_err(|e| e.to_string())?;
    let seed = g.seed.ok_or("no seed")?;
    let measures: Vec<Rational> = (0..=4)
        .map(|len| partial_orbit_union(&g.elements, &seed, len).measure())
        .collect();
    for w in measures.windows(2) {
        ensure(w[0] < w[1], || format!("not increasing: {measures:?}"))?;
    }
    ensure(measures.iter().all(|m| *m <= int(1)), || format!("exceeds 1: {measures:?}"))?;
    let shown: Vec<String> = measures.iter().map(|m| m.to_string()).collect();
    Ok(format!("measures {}", shown.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("circle translates and gaps", circle_translates),
        ("order-two map", order_two),
        ("closed forms", closed_forms),
        ("SL2 displayed products", sl2_products),
        ("certificate suite", certificate_suite),
        ("proof constructions", constructions),
        ("oracle cross-checks", oracle_cross_checks),
        ("order suite", order_suite),
        ("corollary ball check", corollary),
        ("measure monotonicity", measure_growth),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {} {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
