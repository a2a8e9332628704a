//! Command dispatch for the `pingpong` binary.
//!
//! [`run`] takes the full argument vector (program name first) and returns
//! the exit code with the text to print: 0 on success, 1 when a
//! verification or oracle check fails, 2 on bad input.

mod document;

use std::cmp::Ordering;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use document::{
    AnyCertificate, CertificateDocument, Condition, DocumentError, ElementLiteral, PointLiteral,
    Role, SetLiteral, Space,
};

use crate::certkit::{generators, CertError, Certificate, CondII, Recipe};
use crate::circlemaps::{bennett_generators, example_certificate, sunic_generators, ExampleKind, PLHomeo};
use crate::exactgeom::{parse_rational, Domain, ArcSet, CirclePoint, CyclicPoint, Rational};
use crate::projlinear::{sl2_example_certificate, Matrix2, Sl2Params};
use crate::wordkit::{corollary_ball_check, freeness_oracle, orbit_order_compare, OracleMode, Word};

#[derive(Debug, Parser)]
#[command(name = "pingpong", version, about = "Exact ping-pong certificates on the circle and the projective line")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RecipeArg {
    /// two commutators from condition (ii)
    #[value(name = "ii")]
    Ii,
    /// two elements a_i a a_j^-1 from four translates
    #[value(name = "iii4")]
    Iii4,
    /// k elements a_i a a_j^-1 from 2k+1 translates
    #[value(name = "rankk")]
    RankK,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a certificate exactly
    Verify { file: PathBuf },
    /// Extract free generators from a certificate
    Generators {
        file: PathBuf,
        #[arg(long)]
        recipe: RecipeArg,
        #[arg(long)]
        k: Option<usize>,
        /// comma-separated translator indices, two per generator
        #[arg(long, value_delimiter = ',')]
        pairing: Vec<usize>,
    },
    /// Enlarge a condition (ii)/(iii) certificate to N translates
    Amplify {
        file: PathBuf,
        #[arg(long)]
        to: usize,
    },
    /// Turn a certificate with at least five translates into condition (iv)
    Schottky { file: PathBuf },
    /// Search the ball of reduced words for a relation
    Freeness {
        file: PathBuf,
        #[arg(long = "max-len")]
        max_len: usize,
        /// compare orbit points of this basepoint instead of elements
        #[arg(long)]
        basepoint: Option<String>,
    },
    /// Compare two words by their orbit points (circle documents only)
    Order {
        file: PathBuf,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        basepoint: Option<String>,
    },
    /// Print a catalog certificate
    Example {
        #[command(subcommand)]
        kind: ExampleArg,
    },
    /// Check the covering and disjointness of the regular action model
    CorollaryCheck {
        #[arg(long = "max-len")]
        max_len: usize,
    },
}

#[derive(Debug, Subcommand)]
enum ExampleArg {
    Standard {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    Bennett {
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    Sunic {
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    Sl2 {
        #[arg(long, default_value = "1")]
        alpha: String,
        #[arg(long, default_value = "1")]
        beta: String,
        #[arg(long, default_value = "1")]
        gamma: String,
        #[arg(long, default_value = "1")]
        delta: String,
    },
    Sanov,
}

/// Exit code and the text produced by a command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { code: 0, output }
    }

    fn verdict(passed: bool, output: String) -> Self {
        Outcome {
            code: if passed { 0 } else { 1 },
            output,
        }
    }

    fn input(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            output: format!("error: {message}\n"),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                code,
                output: e.render().to_string(),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(outcome) => outcome,
    }
}

type Res = Result<Outcome, Outcome>;

fn load(path: &PathBuf) -> Result<CertificateDocument, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::input(format!("cannot read {}: {e}", path.display())))?;
    CertificateDocument::parse(&text).map_err(|e| Outcome::input(format!("{}: {e}", path.display())))
}

fn certificate(doc: &CertificateDocument) -> Result<AnyCertificate, Outcome> {
    doc.certificate().map_err(Outcome::input)
}

/// Input errors exit with 2; an unverified certificate is a verdict (1).
fn cert_error(e: CertError) -> Outcome {
    match e {
        CertError::NotVerified(report) => Outcome::verdict(false, report.to_string()),
        other => Outcome::input(other),
    }
}

fn dispatch(command: Command) -> Res {
    match command {
        Command::Verify { file } => match certificate(&load(&file)?)? {
            AnyCertificate::Circle(c) => verify(&c),
            AnyCertificate::Projective(c) => verify(&c),
        },
        Command::Generators {
            file,
            recipe,
            k,
            pairing,
        } => {
            let recipe = build_recipe(recipe, k, &pairing)?;
            match certificate(&load(&file)?)? {
                AnyCertificate::Circle(c) => show_generators(&c, &recipe),
                AnyCertificate::Projective(c) => show_generators(&c, &recipe),
            }
        }
        Command::Amplify { file, to } => match certificate(&load(&file)?)? {
            AnyCertificate::Circle(c) => amplify(&c, to),
            AnyCertificate::Projective(c) => amplify(&c, to),
        },
        Command::Schottky { file } => match certificate(&load(&file)?)? {
            AnyCertificate::Circle(c) => schottky(&c),
            AnyCertificate::Projective(c) => schottky(&c),
        },
        Command::Freeness {
            file,
            max_len,
            basepoint,
        } => {
            let doc = load(&file)?;
            match doc.space {
                Domain::Circle => freeness::<PLHomeo>(&doc, max_len, basepoint.as_deref()),
                Domain::Projective => freeness::<Matrix2>(&doc, max_len, basepoint.as_deref()),
            }
        }
        Command::Order { file, u, v, basepoint } => order(&load(&file)?, &u, &v, basepoint.as_deref()),
        Command::Example { kind } => example(kind),
        Command::CorollaryCheck { max_len } => {
            let report = corollary_ball_check(max_len).map_err(Outcome::input)?;
            Ok(Outcome::verdict(report.passed(), report.to_string()))
        }
    }
}

fn verify<S: Space>(cert: &Certificate<S>) -> Res {
    let report = cert.verify().map_err(cert_error)?;
    Ok(Outcome::verdict(report.passed(), report.to_string()))
}

fn build_recipe(arg: RecipeArg, k: Option<usize>, pairing: &[usize]) -> Result<Recipe, Outcome> {
    let pairs = |p: &[usize]| -> Result<Vec<(usize, usize)>, Outcome> {
        if !p.len().is_multiple_of(2) {
            return Err(Outcome::input("--pairing needs an even number of indices"));
        }
        Ok(p.chunks(2).map(|c| (c[0], c[1])).collect())
    };
    match arg {
        RecipeArg::Ii => {
            if !pairing.is_empty() {
                return Err(Outcome::input("--pairing does not apply to recipe ii"));
            }
            Ok(Recipe::FromII)
        }
        RecipeArg::Iii4 => {
            if pairing.is_empty() {
                return Ok(Recipe::n4_default());
            }
            let p = pairs(pairing)?;
            if p.len() != 2 {
                return Err(Outcome::input("recipe iii4 takes --pairing i,j,p,q"));
            }
            Ok(Recipe::FromIIIPairs {
                first: p[0],
                second: p[1],
            })
        }
        RecipeArg::RankK => {
            let k = k.ok_or_else(|| Outcome::input("recipe rankk needs --k"))?;
            let pairing = if pairing.is_empty() { None } else { Some(pairs(pairing)?) };
            Ok(Recipe::RankK { k, pairing })
        }
    }
}

fn show_generators<S: Space>(cert: &Certificate<S>, recipe: &Recipe) -> Res {
    let gens = generators(cert, recipe).map_err(cert_error)?;
    let mut out = String::new();
    for (i, (w, e)) in gens.words.iter().zip(&gens.elements).enumerate() {
        let _ = writeln!(out, "g{} = {} = {}", i + 1, w.display_with(&gens.names), e.to_literal());
    }
    if let Some(seed) = &gens.seed {
        let _ = writeln!(out, "free orbit seed: {seed}");
    }
    Ok(Outcome::ok(out))
}

fn amplify<S: Space>(cert: &Certificate<S>, to: usize) -> Res {
    let iii = match cert {
        Certificate::II(c) => c.to_iii(),
        Certificate::III(c) => c.clone(),
        Certificate::IV(_) => return Err(Outcome::input("amplify needs a condition ii or iii certificate")),
    };
    let bigger = iii.amplify_to(to).map_err(cert_error)?;
    let cert = Certificate::III(bigger);
    let report = cert.verify().map_err(cert_error)?;
    let mut out = CertificateDocument::from_certificate(&cert).to_string();
    let _ = writeln!(out, "# verify: {}", if report.passed() { "PASS" } else { "FAIL" });
    Ok(Outcome::verdict(report.passed(), out))
}

fn schottky<S: Space>(cert: &Certificate<S>) -> Res {
    let iii = match cert {
        Certificate::III(c) => c,
        _ => return Err(Outcome::input("schottky needs a condition iii certificate")),
    };
    let iv = iii.to_schottky().map_err(cert_error)?;
    let cert = Certificate::IV(iv);
    let report = cert.verify().map_err(cert_error)?;
    let mut out = CertificateDocument::from_certificate(&cert).to_string();
    let _ = writeln!(out, "# verify: {}", if report.passed() { "PASS" } else { "FAIL" });
    Ok(Outcome::verdict(report.passed(), out))
}

/// Generators named on the `generators` line, or else the default recipe
/// for the certificate's condition.
fn oracle_generators<S: Space>(doc: &CertificateDocument) -> Result<(Vec<String>, Vec<S>), Outcome> {
    if !doc.generators.is_empty() {
        let elems = doc.generator_elements::<S>().map_err(Outcome::input)?;
        return Ok((doc.generators.clone(), elems));
    }
    let cert = S::from_any(doc.certificate().map_err(Outcome::input)?)
        .ok_or_else(|| Outcome::input("document space does not match"))?;
    let (cert, recipe) = match cert {
        Certificate::IV(c) => return Ok((vec!["f1".into(), "f2".into()], vec![c.f1, c.f2])),
        Certificate::II(c) => (Certificate::II(c), Recipe::FromII),
        Certificate::III(c) if c.n() >= 5 => {
            let k = (c.n() - 1) / 2;
            (Certificate::III(c), Recipe::RankK { k, pairing: None })
        }
        Certificate::III(c) if c.n() == 4 => (Certificate::III(c), Recipe::n4_default()),
        Certificate::III(mut c) => {
            let a2 = c.translators.pop().expect("three translators");
            let a1 = c.translators.pop().expect("three translators");
            let a0 = c.translators.pop().expect("three translators");
            let ii = CondII { base: c.base, ambient: c.ambient, a: c.a, a0, a1, a2 };
            (Certificate::II(ii), Recipe::FromII)
        }
    };
    let gens = generators(&cert, &recipe).map_err(cert_error)?;
    let names = gens.words.iter().map(|w| w.display_with(&gens.names)).collect();
    Ok((names, gens.elements))
}

fn freeness<S: Space>(doc: &CertificateDocument, max_len: usize, basepoint: Option<&str>) -> Res {
    if max_len < 1 {
        return Err(Outcome::input("--max-len must be at least 1"));
    }
    let (names, elems) = oracle_generators::<S>(doc)?;
    let mode = match basepoint {
        None => OracleMode::ElementIdentity,
        Some(text) => OracleMode::Basepoint(
            <S::Point as CyclicPoint>::parse(text).map_err(|e| Outcome::input(format!("--basepoint: {e}")))?,
        ),
    };
    let mut out = String::new();
    for (i, (name, e)) in names.iter().zip(&elems).enumerate() {
        let _ = writeln!(out, "g{} = {name} = {}", i + 1, e.to_literal());
    }
    let report = freeness_oracle(&elems, max_len, &mode);
    out.push_str(&report.to_string());
    Ok(Outcome::verdict(report.passed(), out))
}

fn order(doc: &CertificateDocument, u: &str, v: &str, basepoint: Option<&str>) -> Res {
    if doc.space != Domain::Circle {
        return Err(Outcome::input("the orbit order is defined for circle documents only"));
    }
    let (_, gens) = oracle_generators::<PLHomeo>(doc)?;
    let u = Word::parse(u).map_err(|e| Outcome::input(format!("--u: {e}")))?;
    let v = Word::parse(v).map_err(|e| Outcome::input(format!("--v: {e}")))?;
    let p = match basepoint {
        None => CirclePoint::cut(),
        Some(text) => CirclePoint::parse(text).map_err(|e| Outcome::input(format!("--basepoint: {e}")))?,
    };
    let ord = orbit_order_compare(&u, &v, &gens, &p).map_err(Outcome::input)?;
    let word = match ord {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    };
    Ok(Outcome::ok(format!("{u} vs {v} at {p}: {word}\n")))
}

fn comment_translates<P: CyclicPoint>(out: &mut String, translates: &[ArcSet<P>], label: &str) {
    for (i, t) in translates.iter().enumerate() {
        let _ = writeln!(out, "# {label}{i}A = {t}");
    }
}

fn positive(text: &str, name: &str) -> Result<Rational, Outcome> {
    parse_rational(text).map_err(|e| Outcome::input(format!("--{name}: {e}")))
}

fn example(kind: ExampleArg) -> Res {
    let catalog = |e: crate::circlemaps::CatalogError| Outcome::input(e);
    let mut out;
    match kind {
        ExampleArg::Standard { n } => {
            let c = example_certificate(ExampleKind::Standard { n }).map_err(catalog)?;
            let translates = c.translates();
            out = CertificateDocument::from_certificate(&Certificate::III(c)).to_string();
            comment_translates(&mut out, &translates, "a");
        }
        ExampleArg::Sunic { k } => {
            let c = example_certificate(ExampleKind::SunicRankK { k }).map_err(catalog)?;
            let translates = c.translates();
            let named: Vec<(String, PLHomeo)> = sunic_generators(k)
                .map_err(catalog)?
                .into_iter()
                .enumerate()
                .map(|(i, s)| (format!("s{}", i + 1), s))
                .collect();
            out = CertificateDocument::from_certificate(&Certificate::III(c))
                .with_generators(&named)
                .to_string();
            let _ = writeln!(out, "# s_i = r^i a r^i = a_i a a_(n-i)^-1");
            comment_translates(&mut out, &translates, "a");
        }
        ExampleArg::Bennett { k } => {
            let c = example_certificate(ExampleKind::Bennett { k }).map_err(catalog)?;
            let translates = c.translates();
            let gaps = translates
                .iter()
                .fold(ArcSet::<CirclePoint>::empty(), |acc, t| acc.union(t))
                .complement();
            let named: Vec<(String, PLHomeo)> = bennett_generators(k)
                .map_err(catalog)?
                .into_iter()
                .enumerate()
                .map(|(i, t)| (format!("t{i}"), t))
                .collect();
            out = CertificateDocument::from_certificate(&Certificate::III(c))
                .with_generators(&named)
                .to_string();
            let _ = writeln!(out, "# t_i = b_2i a b_(2i+1)^-1");
            comment_translates(&mut out, &translates, "b");
            for gap in gaps.arcs() {
                let single = ArcSet::normalize([gap.clone()]);
                let _ = writeln!(out, "# gap {gap}, measure {}", single.measure());
            }
        }
        ExampleArg::Sl2 {
            alpha,
            beta,
            gamma,
            delta,
        } => {
            let params = Sl2Params::new(
                positive(&alpha, "alpha")?,
                positive(&beta, "beta")?,
                positive(&gamma, "gamma")?,
                positive(&delta, "delta")?,
            );
            let c = sl2_example_certificate(&params).map_err(Outcome::input)?;
            let translates = c.translates();
            let uncovered = translates
                .iter()
                .fold(ArcSet::empty(), |acc, t| acc.union(t))
                .complement();
            out = CertificateDocument::from_certificate(&Certificate::III(c)).to_string();
            comment_translates(&mut out, &translates, "a");
            let _ = writeln!(out, "# uncovered directions: {uncovered}");
        }
        ExampleArg::Sanov => {
            let c = sl2_example_certificate(&Sl2Params::ints(1, 1, 1, 1)).map_err(Outcome::input)?;
            let named = [
                ("u".to_string(), Matrix2::from_ints(1, 2, 0, 1)),
                ("v".to_string(), Matrix2::from_ints(1, 0, 2, 1)),
            ];
            out = CertificateDocument::from_certificate(&Certificate::III(c))
                .with_generators(&named)
                .to_string();
            let _ = writeln!(out, "# u = a0 a a3^-1, v = a1 a a2^-1 (pairing 0,3,1,2)");
        }
    }
    Ok(Outcome::ok(out))
}
