//! The line-oriented certificate document.
//!
//! ```text
//! # comment
//! space circle|projective
//! element <name> rot <q> | pl [(x,y),...] | mat [a b; c d]
//! set <name> arcs [p,q) ... | full | empty     (projective points: x:y)
//! condition ii|iii|iv
//! bind <role> <name>          roles: A Y a a0..aN f1 f2 U0 U1p U1m U2p U2m
//! generators <name> ...       optional free-generator candidates
//! ```

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::action::Action;
use crate::certkit::{Certificate, CondII, CondIII, CondIV};
use crate::circlemaps::PLHomeo;
use crate::exactgeom::{
    parse_rational, Arc, ArcSet, CirclePoint, CyclicPoint, Domain, LiteralError, ProjPoint, Rational,
};
use crate::projlinear::Matrix2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Semantic(String),
}

fn semantic(line: usize, message: impl fmt::Display) -> DocumentError {
    DocumentError::Semantic(format!("line {line}: {message}"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementLiteral {
    Rot(Rational),
    Pl(Vec<(Rational, Rational)>),
    Mat([Rational; 4]),
}

impl fmt::Display for ElementLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementLiteral::Rot(q) => write!(f, "rot {q}"),
            ElementLiteral::Pl(pairs) => {
                f.write_str("pl [")?;
                for (i, (x, y)) in pairs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "({x},{y})")?;
                }
                f.write_str("]")
            }
            ElementLiteral::Mat([a, b, c, d]) => write!(f, "mat [{a} {b}; {c} {d}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointLiteral {
    /// Kept as written (not reduced mod 1) so `[6/7,1)` survives a round trip.
    Circle(Rational),
    Proj(ProjPoint),
}

impl fmt::Display for PointLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLiteral::Circle(q) => write!(f, "{q}"),
            PointLiteral::Proj(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetLiteral {
    Full,
    Empty,
    Arcs(Vec<(PointLiteral, PointLiteral)>),
}

impl fmt::Display for SetLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetLiteral::Full => f.write_str("full"),
            SetLiteral::Empty => f.write_str("empty"),
            SetLiteral::Arcs(arcs) => {
                f.write_str("arcs")?;
                for (p, q) in arcs {
                    write!(f, " [{p},{q})")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    II,
    III,
    IV,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::II => "ii",
            Condition::III => "iii",
            Condition::IV => "iv",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Base,
    Ambient,
    Cover,
    Translator(usize),
    F1,
    F2,
    U0,
    U1p,
    U1m,
    U2p,
    U2m,
}

impl Role {
    fn parse(text: &str) -> Option<Role> {
        Some(match text {
            "A" => Role::Base,
            "Y" => Role::Ambient,
            "a" => Role::Cover,
            "f1" => Role::F1,
            "f2" => Role::F2,
            "U0" => Role::U0,
            "U1p" => Role::U1p,
            "U1m" => Role::U1m,
            "U2p" => Role::U2p,
            "U2m" => Role::U2m,
            _ => {
                let digits = text.strip_prefix('a')?;
                if digits.is_empty()
                    || !digits.bytes().all(|b| b.is_ascii_digit())
                    || (digits.len() > 1 && digits.starts_with('0'))
                {
                    return None;
                }
                Role::Translator(digits.parse().ok()?)
            }
        })
    }

    fn is_set(self) -> bool {
        matches!(
            self,
            Role::Base | Role::Ambient | Role::U0 | Role::U1p | Role::U1m | Role::U2p | Role::U2m
        )
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Base => f.write_str("A"),
            Role::Ambient => f.write_str("Y"),
            Role::Cover => f.write_str("a"),
            Role::Translator(i) => write!(f, "a{i}"),
            Role::F1 => f.write_str("f1"),
            Role::F2 => f.write_str("f2"),
            Role::U0 => f.write_str("U0"),
            Role::U1p => f.write_str("U1p"),
            Role::U1m => f.write_str("U1m"),
            Role::U2p => f.write_str("U2p"),
            Role::U2m => f.write_str("U2m"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateDocument {
    pub space: Domain,
    pub elements: Vec<(String, ElementLiteral)>,
    pub sets: Vec<(String, SetLiteral)>,
    pub condition: Option<Condition>,
    pub bindings: BTreeMap<Role, String>,
    pub generators: Vec<String>,
}

struct Cursor<'a> {
    line: usize,
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, message: impl Into<String>) -> DocumentError {
        DocumentError::Syntax {
            line: self.line,
            column: self.text[..self.pos].chars().count() + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), DocumentError> {
        match self.peek() {
            Some(found) if found == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(found) => Err(self.err(format!("expected `{c}`, found `{found}`"))),
            None => Err(self.err(format!("expected `{c}`, found end of line"))),
        }
    }

    /// A run of characters satisfying `pred`; returns the start position too.
    fn take(&mut self, pred: impl Fn(char) -> bool) -> (usize, &'a str) {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len = rest.find(|c: char| !pred(c)).unwrap_or(rest.len());
        self.pos += len;
        (start, &rest[..len])
    }

    fn word(&mut self, what: &str) -> Result<&'a str, DocumentError> {
        let (_, w) = self.take(|c| c.is_ascii_alphanumeric() || c == '_');
        if w.is_empty() {
            return Err(self.err(format!("expected {what}")));
        }
        Ok(w)
    }

    fn name(&mut self) -> Result<&'a str, DocumentError> {
        let w = self.word("a name")?;
        if w.starts_with(|c: char| c.is_ascii_digit()) {
            return Err(self.err(format!("name `{w}` must not start with a digit")));
        }
        Ok(w)
    }

    fn literal_at(&self, start: usize, err: LiteralError) -> DocumentError {
        DocumentError::Syntax {
            line: self.line,
            column: self.text[..start].chars().count() + 1,
            message: err.to_string(),
        }
    }

    fn rational(&mut self) -> Result<Rational, DocumentError> {
        let (start, tok) = self.take(|c| c.is_ascii_digit() || matches!(c, '-' | '+' | '/'));
        if tok.is_empty() {
            return Err(self.err("expected a rational literal"));
        }
        parse_rational(tok).map_err(|e| self.literal_at(start, e))
    }

    fn point(&mut self) -> Result<PointLiteral, DocumentError> {
        let (start, tok) =
            self.take(|c| c.is_ascii_digit() || matches!(c, '-' | '+' | '/' | ':'));
        if tok.is_empty() {
            return Err(self.err("expected a point"));
        }
        if tok.contains(':') {
            ProjPoint::parse(tok)
                .map(PointLiteral::Proj)
                .map_err(|e| self.literal_at(start, e))
        } else {
            parse_rational(tok)
                .map(PointLiteral::Circle)
                .map_err(|e| self.literal_at(start, e))
        }
    }

    fn end(&mut self) -> Result<(), DocumentError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }
}

fn parse_element(cur: &mut Cursor) -> Result<ElementLiteral, DocumentError> {
    match cur.word("`rot`, `pl` or `mat`")? {
        "rot" => Ok(ElementLiteral::Rot(cur.rational()?)),
        "pl" => {
            cur.expect('[')?;
            let mut pairs = Vec::new();
            loop {
                if cur.peek() == Some(']') {
                    cur.expect(']')?;
                    break;
                }
                if !pairs.is_empty() {
                    cur.expect(',')?;
                }
                cur.expect('(')?;
                let x = cur.rational()?;
                cur.expect(',')?;
                let y = cur.rational()?;
                cur.expect(')')?;
                pairs.push((x, y));
            }
            Ok(ElementLiteral::Pl(pairs))
        }
        "mat" => {
            cur.expect('[')?;
            let a = cur.rational()?;
            let b = cur.rational()?;
            cur.expect(';')?;
            let c = cur.rational()?;
            let d = cur.rational()?;
            cur.expect(']')?;
            Ok(ElementLiteral::Mat([a, b, c, d]))
        }
        other => Err(cur.err(format!("unknown element form `{other}`"))),
    }
}

fn parse_set(cur: &mut Cursor) -> Result<SetLiteral, DocumentError> {
    match cur.word("`arcs`, `full` or `empty`")? {
        "full" => Ok(SetLiteral::Full),
        "empty" => Ok(SetLiteral::Empty),
        "arcs" => {
            let mut arcs = Vec::new();
            while !cur.at_end() {
                cur.expect('[')?;
                let p = cur.point()?;
                cur.expect(',')?;
                let q = cur.point()?;
                cur.expect(')')?;
                arcs.push((p, q));
            }
            Ok(SetLiteral::Arcs(arcs))
        }
        other => Err(cur.err(format!("unknown set form `{other}`"))),
    }
}

fn roles_for(condition: Condition, bindings: &BTreeMap<Role, String>) -> Result<Vec<Role>, String> {
    Ok(match condition {
        Condition::II => vec![
            Role::Base,
            Role::Ambient,
            Role::Cover,
            Role::Translator(0),
            Role::Translator(1),
            Role::Translator(2),
        ],
        Condition::III => {
            let n = bindings
                .keys()
                .filter(|r| matches!(r, Role::Translator(_)))
                .count();
            if n < 3 {
                return Err(format!("condition iii needs at least a0, a1, a2; found {n} translators"));
            }
            let mut roles = vec![Role::Base, Role::Ambient, Role::Cover];
            roles.extend((0..n).map(Role::Translator));
            roles
        }
        Condition::IV => vec![
            Role::F1,
            Role::F2,
            Role::U0,
            Role::U1p,
            Role::U1m,
            Role::U2p,
            Role::U2m,
        ],
    })
}

impl CertificateDocument {
    pub fn new(space: Domain) -> Self {
        CertificateDocument {
            space,
            elements: Vec::new(),
            sets: Vec::new(),
            condition: None,
            bindings: BTreeMap::new(),
            generators: Vec::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let mut doc: Option<CertificateDocument> = None;
        let mut defined_at: BTreeMap<String, usize> = BTreeMap::new();
        let mut bind_lines: BTreeMap<Role, usize> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let mut cur = Cursor {
                line: line_no,
                text: content,
                pos: 0,
            };
            if cur.at_end() {
                continue;
            }
            let keyword = cur.word("a keyword")?;
            if keyword == "space" {
                if doc.is_some() {
                    return Err(semantic(line_no, "`space` declared twice"));
                }
                let space = match cur.word("`circle` or `projective`")? {
                    "circle" => Domain::Circle,
                    "projective" => Domain::Projective,
                    other => return Err(cur.err(format!("unknown space `{other}`"))),
                };
                cur.end()?;
                doc = Some(CertificateDocument::new(space));
                continue;
            }
            let Some(d) = doc.as_mut() else {
                return Err(semantic(line_no, "the first declaration must be `space`"));
            };
            match keyword {
                "element" | "set" => {
                    let name = cur.name()?.to_string();
                    if let Some(prev) = defined_at.get(&name) {
                        return Err(semantic(line_no, format!("`{name}` already defined on line {prev}")));
                    }
                    if keyword == "element" {
                        let lit = parse_element(&mut cur)?;
                        cur.end()?;
                        d.check_element(&lit).map_err(|m| semantic(line_no, m))?;
                        d.elements.push((name.clone(), lit));
                    } else {
                        let lit = parse_set(&mut cur)?;
                        cur.end()?;
                        d.check_set(&lit).map_err(|m| semantic(line_no, m))?;
                        d.sets.push((name.clone(), lit));
                    }
                    defined_at.insert(name, line_no);
                }
                "condition" => {
                    let c = match cur.word("`ii`, `iii` or `iv`")? {
                        "ii" => Condition::II,
                        "iii" => Condition::III,
                        "iv" => Condition::IV,
                        other => return Err(cur.err(format!("unknown condition `{other}`"))),
                    };
                    cur.end()?;
                    if d.condition.is_some() {
                        return Err(semantic(line_no, "`condition` declared twice"));
                    }
                    d.condition = Some(c);
                }
                "bind" => {
                    let (start, role_text) = cur.take(|c| c.is_ascii_alphanumeric());
                    let role = Role::parse(role_text).ok_or_else(|| DocumentError::Syntax {
                        line: line_no,
                        column: start + 1,
                        message: format!("unknown role `{role_text}`"),
                    })?;
                    let name = cur.name()?.to_string();
                    cur.end()?;
                    if let Some(prev) = bind_lines.get(&role) {
                        return Err(semantic(line_no, format!("role {role} already bound on line {prev}")));
                    }
                    bind_lines.insert(role, line_no);
                    d.bindings.insert(role, name);
                }
                "generators" => {
                    if !d.generators.is_empty() {
                        return Err(semantic(line_no, "`generators` declared twice"));
                    }
                    while !cur.at_end() {
                        d.generators.push(cur.name()?.to_string());
                    }
                    if d.generators.is_empty() {
                        return Err(cur.err("expected at least one generator name"));
                    }
                }
                other => {
                    return Err(DocumentError::Syntax {
                        line: line_no,
                        column: 1 + content.len() - content.trim_start().len(),
                        message: format!("unknown keyword `{other}`"),
                    })
                }
            }
        }
        let doc = doc.ok_or_else(|| DocumentError::Semantic("missing `space` declaration".into()))?;
        doc.check_references()?;
        Ok(doc)
    }

    fn check_element(&self, lit: &ElementLiteral) -> Result<(), String> {
        match (self.space, lit) {
            (Domain::Circle, ElementLiteral::Mat(_)) => {
                Err("`mat` elements belong to projective documents".into())
            }
            (Domain::Projective, ElementLiteral::Rot(_) | ElementLiteral::Pl(_)) => {
                Err("`rot`/`pl` elements belong to circle documents".into())
            }
            (Domain::Circle, _) => PLHomeo::from_literal(lit).map(drop),
            (Domain::Projective, _) => Matrix2::from_literal(lit).map(drop),
        }
    }

    fn check_set(&self, lit: &SetLiteral) -> Result<(), String> {
        match self.space {
            Domain::Circle => set_from_literal::<PLHomeo>(lit).map(drop),
            Domain::Projective => set_from_literal::<Matrix2>(lit).map(drop),
        }
    }

    fn check_references(&self) -> Result<(), DocumentError> {
        let is_element = |n: &str| self.elements.iter().any(|(e, _)| e == n);
        let is_set = |n: &str| self.sets.iter().any(|(s, _)| s == n);
        for (role, name) in &self.bindings {
            let ok = if role.is_set() { is_set(name) } else { is_element(name) };
            if !ok {
                let kind = if role.is_set() { "set" } else { "element" };
                return Err(DocumentError::Semantic(format!(
                    "role {role} is bound to `{name}`, which is not a defined {kind}"
                )));
            }
        }
        for g in &self.generators {
            if !is_element(g) {
                return Err(DocumentError::Semantic(format!("generator `{g}` is not a defined element")));
            }
        }
        match self.condition {
            None if self.generators.is_empty() => Err(DocumentError::Semantic(
                "document declares neither a condition nor generators".into(),
            )),
            None => Ok(()),
            Some(c) => {
                let roles = roles_for(c, &self.bindings).map_err(DocumentError::Semantic)?;
                for r in &roles {
                    if !self.bindings.contains_key(r) {
                        return Err(DocumentError::Semantic(format!(
                            "condition {c} requires role {r}, which is not bound"
                        )));
                    }
                }
                for r in self.bindings.keys() {
                    if !roles.contains(r) {
                        return Err(DocumentError::Semantic(format!(
                            "role {r} is not used by condition {c}"
                        )));
                    }
                }
                Ok(())
            }
        }
    }

    fn element<S: Space>(&self, name: &str) -> Result<S, DocumentError> {
        let lit = self
            .elements
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, l)| l)
            .ok_or_else(|| DocumentError::Semantic(format!("no element `{name}`")))?;
        S::from_literal(lit).map_err(DocumentError::Semantic)
    }

    fn set<S: Space>(&self, name: &str) -> Result<ArcSet<S::Point>, DocumentError> {
        let lit = self
            .sets
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, l)| l)
            .ok_or_else(|| DocumentError::Semantic(format!("no set `{name}`")))?;
        set_from_literal::<S>(lit).map_err(DocumentError::Semantic)
    }

    fn role_element<S: Space>(&self, role: Role) -> Result<S, DocumentError> {
        self.element(&self.bindings[&role])
    }

    fn role_set<S: Space>(&self, role: Role) -> Result<ArcSet<S::Point>, DocumentError> {
        self.set::<S>(&self.bindings[&role])
    }

    fn typed_certificate<S: Space>(&self) -> Result<Certificate<S>, DocumentError> {
        let condition = self
            .condition
            .ok_or_else(|| DocumentError::Semantic("document declares no condition".into()))?;
        Ok(match condition {
            Condition::II => Certificate::II(CondII {
                base: self.role_set::<S>(Role::Base)?,
                ambient: self.role_set::<S>(Role::Ambient)?,
                a: self.role_element(Role::Cover)?,
                a0: self.role_element(Role::Translator(0))?,
                a1: self.role_element(Role::Translator(1))?,
                a2: self.role_element(Role::Translator(2))?,
            }),
            Condition::III => {
                let n = roles_for(condition, &self.bindings)
                    .map_err(DocumentError::Semantic)?
                    .len()
                    - 3;
                Certificate::III(CondIII {
                    base: self.role_set::<S>(Role::Base)?,
                    ambient: self.role_set::<S>(Role::Ambient)?,
                    a: self.role_element(Role::Cover)?,
                    translators: (0..n)
                        .map(|i| self.role_element(Role::Translator(i)))
                        .collect::<Result<_, _>>()?,
                })
            }
            Condition::IV => Certificate::IV(CondIV {
                f1: self.role_element(Role::F1)?,
                f2: self.role_element(Role::F2)?,
                u0: self.role_set::<S>(Role::U0)?,
                u1p: self.role_set::<S>(Role::U1p)?,
                u1m: self.role_set::<S>(Role::U1m)?,
                u2p: self.role_set::<S>(Role::U2p)?,
                u2m: self.role_set::<S>(Role::U2m)?,
            }),
        })
    }

    /// The certificate described by the document.
    pub fn certificate(&self) -> Result<AnyCertificate, DocumentError> {
        Ok(match self.space {
            Domain::Circle => AnyCertificate::Circle(self.typed_certificate()?),
            Domain::Projective => AnyCertificate::Projective(self.typed_certificate()?),
        })
    }

    /// Elements listed on the `generators` line.
    pub fn generator_elements<S: Space>(&self) -> Result<Vec<S>, DocumentError> {
        if S::DOMAIN != self.space {
            return Err(DocumentError::Semantic(format!(
                "document space is {}, not {}",
                self.space,
                S::DOMAIN
            )));
        }
        self.generators.iter().map(|g| self.element(g)).collect()
    }

    /// A document whose names are the role names.
    pub fn from_certificate<S: Space>(cert: &Certificate<S>) -> Self {
        let mut doc = CertificateDocument::new(S::DOMAIN);
        let el = |doc: &mut Self, role: Role, e: &S| {
            doc.elements.push((role.to_string(), e.to_literal()));
            doc.bindings.insert(role, role.to_string());
        };
        let set = |doc: &mut Self, role: Role, s: &ArcSet<S::Point>| {
            doc.sets.push((role.to_string(), set_to_literal::<S>(s)));
            doc.bindings.insert(role, role.to_string());
        };
        match cert {
            Certificate::II(c) => {
                doc.condition = Some(Condition::II);
                set(&mut doc, Role::Base, &c.base);
                set(&mut doc, Role::Ambient, &c.ambient);
                el(&mut doc, Role::Cover, &c.a);
                for (i, t) in [&c.a0, &c.a1, &c.a2].into_iter().enumerate() {
                    el(&mut doc, Role::Translator(i), t);
                }
            }
            Certificate::III(c) => {
                doc.condition = Some(Condition::III);
                set(&mut doc, Role::Base, &c.base);
                set(&mut doc, Role::Ambient, &c.ambient);
                el(&mut doc, Role::Cover, &c.a);
                for (i, t) in c.translators.iter().enumerate() {
                    el(&mut doc, Role::Translator(i), t);
                }
            }
            Certificate::IV(c) => {
                doc.condition = Some(Condition::IV);
                el(&mut doc, Role::F1, &c.f1);
                el(&mut doc, Role::F2, &c.f2);
                for (role, s) in [
                    (Role::U0, &c.u0),
                    (Role::U1p, &c.u1p),
                    (Role::U1m, &c.u1m),
                    (Role::U2p, &c.u2p),
                    (Role::U2m, &c.u2m),
                ] {
                    set(&mut doc, role, s);
                }
            }
        }
        doc
    }

    /// Adds named elements and lists them on the `generators` line.
    pub fn with_generators<S: Space>(mut self, named: &[(String, S)]) -> Self {
        for (name, e) in named {
            self.elements.push((name.clone(), e.to_literal()));
            self.generators.push(name.clone());
        }
        self
    }
}

impl fmt::Display for CertificateDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "space {}", self.space)?;
        for (name, lit) in &self.elements {
            writeln!(f, "element {name} {lit}")?;
        }
        for (name, lit) in &self.sets {
            writeln!(f, "set {name} {lit}")?;
        }
        if let Some(c) = self.condition {
            writeln!(f, "condition {c}")?;
        }
        for (role, name) in &self.bindings {
            writeln!(f, "bind {role} {name}")?;
        }
        if !self.generators.is_empty() {
            writeln!(f, "generators {}", self.generators.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum AnyCertificate {
    Circle(Certificate<PLHomeo>),
    Projective(Certificate<Matrix2>),
}

/// Element types that have a document representation.
pub trait Space: Action {
    const DOMAIN: Domain;

    fn from_literal(lit: &ElementLiteral) -> Result<Self, String>;

    fn to_literal(&self) -> ElementLiteral;

    fn point_from_literal(lit: &PointLiteral) -> Result<Self::Point, String>;

    fn point_to_literal(p: &Self::Point) -> PointLiteral;

    fn from_any(cert: AnyCertificate) -> Option<Certificate<Self>>;
}

impl Space for PLHomeo {
    const DOMAIN: Domain = Domain::Circle;

    fn from_literal(lit: &ElementLiteral) -> Result<Self, String> {
        match lit {
            ElementLiteral::Rot(q) => Ok(PLHomeo::rotation(q.clone())),
            ElementLiteral::Pl(pairs) => PLHomeo::from_pairs(pairs).map_err(|e| e.to_string()),
            ElementLiteral::Mat(_) => Err("matrix in a circle document".into()),
        }
    }

    fn to_literal(&self) -> ElementLiteral {
        match self.rotation_amount() {
            Some(q) => ElementLiteral::Rot(q),
            None => ElementLiteral::Pl(
                self.breakpoints()
                    .into_iter()
                    .map(|(x, y)| (x.coordinate().clone(), y.coordinate().clone()))
                    .collect(),
            ),
        }
    }

    fn point_from_literal(lit: &PointLiteral) -> Result<CirclePoint, String> {
        match lit {
            PointLiteral::Circle(q) => Ok(CirclePoint::new(q.clone())),
            PointLiteral::Proj(p) => Err(format!("projective point {p} in a circle document")),
        }
    }

    fn point_to_literal(p: &CirclePoint) -> PointLiteral {
        PointLiteral::Circle(p.coordinate().clone())
    }

    fn from_any(cert: AnyCertificate) -> Option<Certificate<Self>> {
        match cert {
            AnyCertificate::Circle(c) => Some(c),
            AnyCertificate::Projective(_) => None,
        }
    }
}

impl Space for Matrix2 {
    const DOMAIN: Domain = Domain::Projective;

    fn from_literal(lit: &ElementLiteral) -> Result<Self, String> {
        match lit {
            ElementLiteral::Mat([a, b, c, d]) => Matrix2::relaxed(a.clone(), b.clone(), c.clone(), d.clone())
                .map(|(m, _)| m)
                .map_err(|e| e.to_string()),
            _ => Err("circle map in a projective document".into()),
        }
    }

    fn to_literal(&self) -> ElementLiteral {
        ElementLiteral::Mat(self.entries().clone())
    }

    fn point_from_literal(lit: &PointLiteral) -> Result<ProjPoint, String> {
        match lit {
            PointLiteral::Proj(p) => Ok(p.clone()),
            PointLiteral::Circle(q) => Err(format!("circle point {q} in a projective document")),
        }
    }

    fn point_to_literal(p: &ProjPoint) -> PointLiteral {
        PointLiteral::Proj(p.clone())
    }

    fn from_any(cert: AnyCertificate) -> Option<Certificate<Self>> {
        match cert {
            AnyCertificate::Projective(c) => Some(c),
            AnyCertificate::Circle(_) => None,
        }
    }
}

fn set_from_literal<S: Space>(lit: &SetLiteral) -> Result<ArcSet<S::Point>, String> {
    match lit {
        SetLiteral::Full => Ok(ArcSet::full()),
        SetLiteral::Empty => Ok(ArcSet::empty()),
        SetLiteral::Arcs(arcs) => {
            let mut raw = Vec::with_capacity(arcs.len());
            for (p, q) in arcs {
                let (p, q) = (S::point_from_literal(p)?, S::point_from_literal(q)?);
                raw.push(Arc::new(p, q).map_err(|e| e.to_string())?);
            }
            Ok(ArcSet::normalize(raw))
        }
    }
}

fn set_to_literal<S: Space>(set: &ArcSet<S::Point>) -> SetLiteral {
    if set.is_empty() {
        return SetLiteral::Empty;
    }
    if set.is_full() {
        return SetLiteral::Full;
    }
    let cut = <S::Point as CyclicPoint>::cut();
    SetLiteral::Arcs(
        set.arcs()
            .into_iter()
            .filter_map(|a| match a {
                Arc::Proper { left, right } => {
                    let r = match (S::DOMAIN, right == cut) {
                        // write an arc ending at the cut as `[p,1)`
                        (Domain::Circle, true) => PointLiteral::Circle(Rational::from_integer(1.into())),
                        _ => S::point_to_literal(&right),
                    };
                    Some((S::point_to_literal(&left), r))
                }
                _ => None,
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circlemaps::{example_certificate, standard_condition_ii, ExampleKind};

    const STANDARD_3: &str = "\
# the thirds of the circle
space circle
element a pl [(0,1/3),(1/3,0)]
element a0 rot 0
element a1 rot 1/3
element a2 rot 2/3
set A arcs [0,1/3)
set Y full
condition ii
bind A A
bind Y Y
bind a a
bind a0 a0
bind a1 a1
bind a2 a2
";

    #[test]
    fn parses_standard_three() {
        let doc = CertificateDocument::parse(STANDARD_3).unwrap();
        let expected = Certificate::II(standard_condition_ii(3).unwrap());
        assert_eq!(doc.certificate().unwrap(), AnyCertificate::Circle(expected));
    }

    #[test]
    fn round_trip() {
        let doc = CertificateDocument::parse(STANDARD_3).unwrap();
        let again = CertificateDocument::parse(&doc.to_string()).unwrap();
        assert_eq!(doc, again);
        let cert = Certificate::III(example_certificate(ExampleKind::Bennett { k: 3 }).unwrap());
        let doc = CertificateDocument::from_certificate(&cert);
        let back = CertificateDocument::parse(&doc.to_string()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.certificate().unwrap(), AnyCertificate::Circle(cert));
    }

    #[test]
    fn missing_role_is_semantic() {
        let text = STANDARD_3.replace("bind a1 a1\n", "");
        let err = CertificateDocument::parse(&text).unwrap_err();
        assert!(matches!(err, DocumentError::Semantic(ref m) if m.contains("a1")), "{err}");
    }

    #[test]
    fn zero_denominator_is_syntax() {
        let text = STANDARD_3.replace("rot 1/3", "rot 1/0");
        let err = CertificateDocument::parse(&text).unwrap_err();
        assert_eq!(
            err,
            DocumentError::Syntax {
                line: 5,
                column: 16,
                message: "zero denominator in `1/0`".into()
            }
        );
    }

    #[test]
    fn other_errors() {
        let cases = [
            ("space circle\nfoo", "unknown keyword"),
            ("element a rot 0", "first declaration"),
            ("space circle\nelement a mat [1 0; 0 1]\ngenerators a", "projective"),
            ("space projective\nset A arcs [0,1/2)\n", "circle point 0 in a projective"),
            ("space projective\nset A arcs [1:0,0:1)\ngenerators", "expected at least one"),
            ("space circle\nset A arcs [1/2,1/2)\n", "ambiguous"),
            ("space circle\nelement a rot 0\nelement a rot 1/2\ngenerators a", "already defined"),
            ("space circle\nelement a rot 0\ngenerators b", "not a defined element"),
            ("space circle\nelement a rot 0\n", "neither"),
            ("space projective\nelement m mat [1 0; 0 -1]\ngenerators m", "not positive"),
            ("space circle\nelement f pl [(0,0),(1/3,2/3),(2/3,1/3)]\ngenerators f", "cyclic order"),
            ("space circle\nset A arcs [0,1/2\n", "expected `)`"),
        ];
        for (text, needle) in cases {
            let err = CertificateDocument::parse(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?}: {err}");
        }
    }

    #[test]
    fn projective_document() {
        let text = "space projective\nelement u mat [1 2; 0 1]\nelement v mat [1 0; 2 1]\ngenerators u v\n";
        let doc = CertificateDocument::parse(text).unwrap();
        let gens: Vec<Matrix2> = doc.generator_elements().unwrap();
        assert_eq!(gens[0], Matrix2::from_ints(1, 2, 0, 1));
        assert!(doc.generator_elements::<PLHomeo>().is_err());
        assert!(doc.certificate().is_err());
        assert_eq!(doc.to_string(), text);
    }
}
