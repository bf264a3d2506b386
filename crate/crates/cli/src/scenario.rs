//! Scenario files: definitions of monoids, sets, actions, situations,
//! augmentations and spaces, followed by jobs. One statement per line; `#`
//! starts a comment.
//!
//! ```text
//! trunc 4
//! seed 7
//! monoid Z2 = cyclic 2
//! monoid Mzero: elems 1,x,0; unit 1; mul x*x=0 x*0=0 0*x=0 0*0=0
//! set X: elems +,a,b; base +
//! action swap = Z2 on X: left 1.+=+ 1.a=b 1.b=a; right trivial
//! situation S = submonoid Mzero {1,0}
//! augment A = translation Z2
//! space E = wedge(circle, circle)
//! space F:
//!   sset N=1
//!   deg 0: *
//!   deg 1: e
//!   d 0 e = |*
//!   d 1 e = |*
//! end
//! homology nerve(Z2) upto 4
//! verify comparison A upto 3
//! counterexample partial-monoid S p=3
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use cyclic_bar::algebra::format::{parse_action, parse_monoid, parse_set};
use cyclic_bar::algebra::{
    cyclic, symmetric, trivial, with_zero, AlgebraError, DiscreteMonoid, FiniteSet, GAugmentedSituation,
    OperationSituation, TwoSidedAction,
};
use cyclic_bar::checks::inversion_augmentation;
use cyclic_bar::sset::format::from_text;
use cyclic_bar::sset::SimplicialSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

/// A space, with every name already resolved. Built lazily at the truncation
/// a job asks for.
#[derive(Clone, Debug)]
pub enum SpaceExpr {
    Point,
    Circle,
    Simplex(usize),
    Boundary(usize),
    Sphere(usize),
    Nerve(Arc<DiscreteMonoid>),
    CyclicBar(Arc<TwoSidedAction>),
    Wedge(Box<SpaceExpr>, Box<SpaceExpr>),
    Product(Box<SpaceExpr>, Box<SpaceExpr>),
    Smash(Box<SpaceExpr>, Box<SpaceExpr>),
    Skeleton(Box<SpaceExpr>, usize),
    Cone(Box<SpaceExpr>),
    /// Diagonal of the generalized wedge over a point.
    PointedWedge(Box<SpaceExpr>),
    GeneralizedWedge(Arc<OperationSituation>),
    Intermediate(Arc<GAugmentedSituation>),
    CyclicWedge(Arc<GAugmentedSituation>),
    Given(Arc<SimplicialSet>),
    CorruptedNerve,
}

#[derive(Clone, Debug)]
pub struct Space {
    pub label: String,
    pub expr: SpaceExpr,
}

#[derive(Clone, Debug)]
pub struct Situation {
    pub sit: Arc<OperationSituation>,
    /// Ambient monoid and submonoid names for `submonoid` situations.
    pub partial: Option<(Arc<DiscreteMonoid>, Vec<String>)>,
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct Augment {
    pub aug: Arc<GAugmentedSituation>,
    pub label: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub enum VerifyJob {
    Identities(Space),
    Comparison(Augment, Option<usize>),
    Bijection(Augment, Option<usize>),
    Shear(String, Arc<TwoSidedAction>, Side),
    WedgeNerve(Arc<DiscreteMonoid>, Option<usize>),
    Suspension(Space, Option<usize>),
    CyclicComponents(Arc<DiscreteMonoid>),
    Semidirect(Augment),
    LoopGroup(Space, usize),
    Gluing(usize),
    Realization(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum JobKind {
    Build,
    Homology,
    Verify,
    Counterexample,
}

#[derive(Clone, Debug)]
pub enum JobBody {
    Build(Space),
    Homology {
        space: Space,
        upto: Option<usize>,
        reduced: bool,
        expect: Option<Vec<String>>,
    },
    Verify(VerifyJob),
    PartialMonoid(Situation, usize),
}

#[derive(Clone, Debug)]
pub struct Job {
    pub line: usize,
    pub text: String,
    pub body: JobBody,
}

impl Job {
    pub fn kind(&self) -> JobKind {
        match self.body {
            JobBody::Build(_) => JobKind::Build,
            JobBody::Homology { .. } => JobKind::Homology,
            JobBody::Verify(_) => JobKind::Verify,
            JobBody::PartialMonoid(..) => JobKind::Counterexample,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Scenario {
    pub trunc: usize,
    pub seed: u64,
    pub cap: usize,
    pub monoids: BTreeMap<String, Arc<DiscreteMonoid>>,
    pub sets: BTreeMap<String, Arc<FiniteSet>>,
    pub actions: BTreeMap<String, Arc<TwoSidedAction>>,
    pub situations: BTreeMap<String, Situation>,
    pub augments: BTreeMap<String, Augment>,
    pub spaces: BTreeMap<String, Space>,
    pub jobs: Vec<Job>,
}

pub const DEFAULT_TRUNC: usize = 4;
pub const DEFAULT_CAP: usize = 1_000_000;

impl Default for Scenario {
    fn default() -> Self {
        Scenario {
            trunc: DEFAULT_TRUNC,
            seed: 0,
            cap: DEFAULT_CAP,
            monoids: BTreeMap::new(),
            sets: BTreeMap::new(),
            actions: BTreeMap::new(),
            situations: BTreeMap::new(),
            augments: BTreeMap::new(),
            spaces: BTreeMap::new(),
            jobs: Vec::new(),
        }
    }
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceExpr::Point => write!(f, "point"),
            SpaceExpr::Circle => write!(f, "circle"),
            SpaceExpr::Simplex(n) => write!(f, "simplex({n})"),
            SpaceExpr::Boundary(n) => write!(f, "boundary({n})"),
            SpaceExpr::Sphere(n) => write!(f, "sphere({n})"),
            SpaceExpr::Nerve(m) => write!(f, "nerve({})", m.name()),
            SpaceExpr::CyclicBar(a) => write!(f, "cyclic-bar({} on {} elements)", a.monoid().name(), a.carrier().len()),
            SpaceExpr::Wedge(a, b) => write!(f, "wedge({a}, {b})"),
            SpaceExpr::Product(a, b) => write!(f, "product({a}, {b})"),
            SpaceExpr::Smash(a, b) => write!(f, "smash({a}, {b})"),
            SpaceExpr::Skeleton(a, k) => write!(f, "skeleton({a}, {k})"),
            SpaceExpr::Cone(a) => write!(f, "cone({a})"),
            SpaceExpr::PointedWedge(a) => write!(f, "pointed-wedge({a})"),
            SpaceExpr::GeneralizedWedge(s) => write!(f, "generalized-wedge({})", s.describe()),
            SpaceExpr::Intermediate(a) => write!(f, "intermediate({})", a.describe()),
            SpaceExpr::CyclicWedge(a) => write!(f, "cyclic-wedge({})", a.describe()),
            SpaceExpr::Given(_) => write!(f, "given"),
            SpaceExpr::CorruptedNerve => write!(f, "corrupted-nerve"),
        }
    }
}

/// A small tokenizer for space expressions like `wedge(circle, nerve(Z2))`.
struct Expr<'a> {
    s: &'a [u8],
    pos: usize,
}

#[derive(Debug)]
enum Term {
    Atom(String),
    Call(String, Vec<Term>),
}

fn ident_char(c: u8) -> bool {
    c.is_ascii_alphanumeric() || b"_-'+".contains(&c)
}

impl<'a> Expr<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Term, String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && ident_char(self.s[self.pos]) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err("expected a name".into());
        }
        let name = String::from_utf8_lossy(&self.s[start..self.pos]).into_owned();
        self.skip_ws();
        if self.pos < self.s.len() && self.s[self.pos] == b'(' {
            self.pos += 1;
            let mut args = Vec::new();
            loop {
                args.push(self.term()?);
                self.skip_ws();
                match self.s.get(self.pos) {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(format!("unclosed argument list of `{name}`")),
                }
            }
            Ok(Term::Call(name, args))
        } else {
            Ok(Term::Atom(name))
        }
    }
}

fn parse_term(text: &str) -> Result<Term, String> {
    let mut e = Expr {
        s: text.as_bytes(),
        pos: 0,
    };
    let t = e.term()?;
    e.skip_ws();
    if e.pos != e.s.len() {
        return Err(format!("unexpected `{}`", &text[e.pos..]));
    }
    Ok(t)
}

struct Parser {
    sc: Scenario,
    line: usize,
}

impl Parser {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            msg: msg.into(),
        }
    }

    fn alg(&self, e: AlgebraError) -> ParseError {
        self.err(e.to_string())
    }

    fn monoid(&self, name: &str) -> Result<Arc<DiscreteMonoid>, ParseError> {
        self.sc
            .monoids
            .get(name)
            .cloned()
            .ok_or_else(|| self.err(format!("undefined monoid `{name}`")))
    }

    /// Sets, or monoids read as sets pointed at their unit.
    fn set(&self, name: &str) -> Option<Arc<FiniteSet>> {
        self.sc
            .sets
            .get(name)
            .cloned()
            .or_else(|| self.sc.monoids.get(name).map(|m| Arc::new(m.as_set().clone())))
    }

    fn action(&self, name: &str) -> Result<Arc<TwoSidedAction>, ParseError> {
        self.sc
            .actions
            .get(name)
            .cloned()
            .ok_or_else(|| self.err(format!("undefined action `{name}`")))
    }

    fn situation(&self, name: &str) -> Result<Situation, ParseError> {
        self.sc
            .situations
            .get(name)
            .cloned()
            .ok_or_else(|| self.err(format!("undefined situation `{name}`")))
    }

    fn augment(&self, name: &str) -> Result<Augment, ParseError> {
        self.sc
            .augments
            .get(name)
            .cloned()
            .ok_or_else(|| self.err(format!("undefined augmentation `{name}`")))
    }

    fn number(&self, t: &Term) -> Result<usize, ParseError> {
        match t {
            Term::Atom(s) => s.parse().map_err(|_| self.err(format!("expected a number, got `{s}`"))),
            Term::Call(n, _) => Err(self.err(format!("expected a number, got `{n}(..)`"))),
        }
    }

    fn space_expr(&self, t: &Term) -> Result<SpaceExpr, ParseError> {
        let arity = |args: &[Term], n: usize, name: &str| {
            if args.len() == n {
                Ok(())
            } else {
                Err(self.err(format!("`{name}` takes {n} argument(s)")))
            }
        };
        let name_of = |t: &Term| match t {
            Term::Atom(s) => Ok(s.clone()),
            Term::Call(n, _) => Err(self.err(format!("expected a name, got `{n}(..)`"))),
        };
        let sub = |t: &Term| self.space_expr(t).map(Box::new);
        Ok(match t {
            Term::Atom(a) => match a.as_str() {
                "point" => SpaceExpr::Point,
                "circle" => SpaceExpr::Circle,
                "corrupted-nerve" => SpaceExpr::CorruptedNerve,
                other => {
                    self.sc
                        .spaces
                        .get(other)
                        .ok_or_else(|| self.err(format!("undefined space `{other}`")))?
                        .expr
                        .clone()
                }
            },
            Term::Call(f, args) => match f.as_str() {
                "simplex" | "boundary" | "sphere" => {
                    arity(args, 1, f)?;
                    let n = self.number(&args[0])?;
                    match f.as_str() {
                        "simplex" => SpaceExpr::Simplex(n),
                        "boundary" => SpaceExpr::Boundary(n),
                        _ => SpaceExpr::Sphere(n),
                    }
                }
                "nerve" => {
                    arity(args, 1, f)?;
                    SpaceExpr::Nerve(self.monoid(&name_of(&args[0])?)?)
                }
                "cyclic-bar" => {
                    arity(args, 1, f)?;
                    let n = name_of(&args[0])?;
                    match self.sc.actions.get(&n) {
                        Some(a) => SpaceExpr::CyclicBar(a.clone()),
                        None => SpaceExpr::CyclicBar(Arc::new(TwoSidedAction::translation(self.monoid(&n)?))),
                    }
                }
                "wedge" | "product" | "smash" => {
                    arity(args, 2, f)?;
                    let (a, b) = (sub(&args[0])?, sub(&args[1])?);
                    match f.as_str() {
                        "wedge" => SpaceExpr::Wedge(a, b),
                        "product" => SpaceExpr::Product(a, b),
                        _ => SpaceExpr::Smash(a, b),
                    }
                }
                "skeleton" => {
                    arity(args, 2, f)?;
                    SpaceExpr::Skeleton(sub(&args[0])?, self.number(&args[1])?)
                }
                "cone" => {
                    arity(args, 1, f)?;
                    SpaceExpr::Cone(sub(&args[0])?)
                }
                "pointed-wedge" => {
                    arity(args, 1, f)?;
                    SpaceExpr::PointedWedge(sub(&args[0])?)
                }
                "generalized-wedge" => {
                    arity(args, 1, f)?;
                    SpaceExpr::GeneralizedWedge(self.situation(&name_of(&args[0])?)?.sit)
                }
                "intermediate" | "cyclic-wedge" => {
                    arity(args, 1, f)?;
                    let a = self.augment(&name_of(&args[0])?)?.aug;
                    if f == "intermediate" {
                        SpaceExpr::Intermediate(a)
                    } else {
                        SpaceExpr::CyclicWedge(a)
                    }
                }
                other => return Err(self.err(format!("unknown construction `{other}`"))),
            },
        })
    }

    fn space(&self, text: &str) -> Result<Space, ParseError> {
        let t = parse_term(text.trim()).map_err(|m| self.err(m))?;
        Ok(Space {
            label: text.trim().to_string(),
            expr: self.space_expr(&t)?,
        })
    }

    fn define_monoid(&mut self, rest: &str) -> Result<(), ParseError> {
        if let Some((name, def)) = rest.split_once('=').filter(|(n, _)| !n.contains(':')) {
            let name = name.trim();
            let mut words = def.split_whitespace();
            let kind = words.next().unwrap_or("");
            let arg = words.next().map(|n| n.parse::<usize>());
            let m = match (kind, arg) {
                ("cyclic", Some(Ok(n))) if n >= 1 => cyclic(n),
                ("symmetric", Some(Ok(n))) if (1..=5).contains(&n) => symmetric(n),
                ("zero", None) => with_zero(),
                ("trivial", None) => trivial(),
                _ => {
                    return Err(self.err(format!(
                        "unknown monoid `{}`; expected cyclic <n>, symmetric <n>, zero or trivial",
                        def.trim()
                    )))
                }
            };
            self.sc.monoids.insert(name.to_string(), Arc::new(m.renamed(name)));
            return Ok(());
        }
        let m = parse_monoid(&format!("monoid {rest}")).map_err(|e| self.alg(e))?;
        self.sc.monoids.insert(m.name().to_string(), Arc::new(m));
        Ok(())
    }

    fn define_action(&mut self, rest: &str) -> Result<(), ParseError> {
        let (name, def) = rest
            .split_once('=')
            .ok_or_else(|| self.err("expected `action <name> = ...`"))?;
        let name = name.trim().to_string();
        let def = def.trim();
        let act = if let Some(g) = def.strip_prefix("translation ") {
            TwoSidedAction::translation(self.monoid(g.trim())?)
        } else if let Some(g) = def.strip_prefix("pointed-translation ") {
            TwoSidedAction::pointed_translation(self.monoid(g.trim())?)
        } else {
            parse_action(
                &format!("action {def}"),
                |m| self.sc.monoids.get(m).cloned(),
                |x| self.set(x),
            )
            .map_err(|e| self.alg(e))?
        };
        self.sc.actions.insert(name, Arc::new(act));
        Ok(())
    }

    fn define_situation(&mut self, rest: &str) -> Result<(), ParseError> {
        let (name, def) = rest
            .split_once('=')
            .ok_or_else(|| self.err("expected `situation <name> = ...`"))?;
        let name = name.trim().to_string();
        let def = def.trim();
        let (kind, arg) = def.split_once(char::is_whitespace).unwrap_or((def, ""));
        let arg = arg.trim();
        let (sit, partial) = match kind {
            "monoid" => (OperationSituation::of_monoid(self.monoid(arg)?), None),
            "point" => {
                let x = self.set(arg).ok_or_else(|| self.err(format!("undefined set `{arg}`")))?;
                (OperationSituation::over_point(x).map_err(|e| self.alg(e))?, None)
            }
            "submonoid" => {
                let (m, elems) = arg
                    .split_once('{')
                    .ok_or_else(|| self.err("expected `submonoid <monoid> {a,b,...}`"))?;
                let m = self.monoid(m.trim())?;
                let elems: Vec<String> = elems
                    .trim_end_matches('}')
                    .split(',')
                    .map(|s| s.trim().to_string())
                    .filter(|s| !s.is_empty())
                    .collect();
                let refs: Vec<&str> = elems.iter().map(String::as_str).collect();
                let sit = OperationSituation::submonoid(&m, &refs).map_err(|e| self.alg(e))?;
                (sit, Some((m, elems)))
            }
            "action" => {
                let (act, iota) = arg
                    .split_once(" iota ")
                    .ok_or_else(|| self.err("expected `action <action> iota a,b,...`"))?;
                let act = self.action(act.trim())?;
                let iota = iota
                    .split(',')
                    .map(|s| {
                        act.carrier()
                            .index(s.trim())
                            .ok_or_else(|| self.err(format!("unknown element `{}`", s.trim())))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                (OperationSituation::new((*act).clone(), iota).map_err(|e| self.alg(e))?, None)
            }
            _ => return Err(self.err(format!("unknown situation `{def}`"))),
        };
        self.sc.situations.insert(
            name.clone(),
            Situation {
                sit: Arc::new(sit),
                partial,
                label: name,
            },
        );
        Ok(())
    }

    fn define_augment(&mut self, rest: &str) -> Result<(), ParseError> {
        let (name, def) = rest
            .split_once('=')
            .ok_or_else(|| self.err("expected `augment <name> = ...`"))?;
        let name = name.trim().to_string();
        let words: Vec<&str> = def.split_whitespace().collect();
        let aug = match words.as_slice() {
            ["translation", g] => GAugmentedSituation::translation(self.monoid(g)?),
            ["inversion", h] => inversion_augmentation(self.monoid(h)?).map_err(|e| self.alg(e))?,
            ["trivial", g, "on", s] => GAugmentedSituation::trivial(self.monoid(g)?, (*self.situation(s)?.sit).clone()),
            [s, "with", ah, am] => {
                let sit = (*self.situation(s)?.sit).clone();
                GAugmentedSituation::new(sit, (*self.action(ah)?).clone(), (*self.action(am)?).clone())
                    .map_err(|e| self.alg(e))?
            }
            _ => {
                return Err(self.err(
                    "expected translation <G>, inversion <H>, trivial <G> on <situation> or <situation> with <action> <action>",
                ))
            }
        };
        self.sc.augments.insert(
            name.clone(),
            Augment {
                aug: Arc::new(aug),
                label: name,
            },
        );
        Ok(())
    }

    /// Split a trailing `upto N`, `samples K`, `instances K` or `p=N` option.
    fn option(&self, text: &str, key: &str) -> Result<(String, Option<usize>), ParseError> {
        let words: Vec<&str> = text.split_whitespace().collect();
        for (k, w) in words.iter().enumerate() {
            let value = if *w == key {
                words.get(k + 1).copied()
            } else {
                w.strip_prefix(key).and_then(|v| v.strip_prefix('='))
            };
            if let Some(v) = value {
                let n = v.parse().map_err(|_| self.err(format!("`{key}` needs a number")))?;
                let mut rest = words.clone();
                rest.drain(k..(if *w == key { k + 2 } else { k + 1 }));
                return Ok((rest.join(" "), Some(n)));
            }
            if *w == key {
                return Err(self.err(format!("`{key}` needs a number")));
            }
        }
        Ok((text.to_string(), None))
    }

    fn verify_job(&self, rest: &str) -> Result<VerifyJob, ParseError> {
        let (what, arg) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
        let arg = arg.trim();
        Ok(match what {
            "identities" => VerifyJob::Identities(self.space(arg)?),
            "comparison" | "bijection" => {
                let (a, upto) = self.option(arg, "upto")?;
                let aug = self.augment(a.trim())?;
                if what == "comparison" {
                    VerifyJob::Comparison(aug, upto)
                } else {
                    VerifyJob::Bijection(aug, upto)
                }
            }
            "shear" => {
                let words: Vec<&str> = arg.split_whitespace().collect();
                let side = match words.get(1) {
                    Some(&"left") | None => Side::Left,
                    Some(&"right") => Side::Right,
                    Some(s) => return Err(self.err(format!("side must be left or right, got `{s}`"))),
                };
                let name = words.first().ok_or_else(|| self.err("`shear` needs an action"))?;
                let act = match self.sc.actions.get(*name) {
                    Some(a) => a.clone(),
                    None => Arc::new(TwoSidedAction::translation(self.monoid(name)?)),
                };
                VerifyJob::Shear(name.to_string(), act, side)
            }
            "wedge-nerve" => {
                let (m, upto) = self.option(arg, "upto")?;
                VerifyJob::WedgeNerve(self.monoid(m.trim())?, upto)
            }
            "suspension" => {
                let (s, upto) = self.option(arg, "upto")?;
                VerifyJob::Suspension(self.space(&s)?, upto)
            }
            "cyclic-components" => VerifyJob::CyclicComponents(self.monoid(arg)?),
            "semidirect" => VerifyJob::Semidirect(self.augment(arg)?),
            "loop-group" => {
                let (s, samples) = self.option(arg, "samples")?;
                VerifyJob::LoopGroup(self.space(&s)?, samples.unwrap_or(1000))
            }
            "gluing" | "realization" => {
                let (_, n) = self.option(arg, "instances")?;
                let n = n.unwrap_or(60);
                if what == "gluing" {
                    VerifyJob::Gluing(n)
                } else {
                    VerifyJob::Realization(n)
                }
            }
            other => return Err(self.err(format!("unknown check `{other}`"))),
        })
    }

    fn job(&self, keyword: &str, rest: &str) -> Result<JobBody, ParseError> {
        Ok(match keyword {
            "build" => JobBody::Build(self.space(rest)?),
            "homology" => {
                let (rest, expect) = match rest.split_once(" expect ") {
                    Some((r, e)) => (r, Some(e.split(',').map(|g| g.trim().to_string()).collect())),
                    None => (rest, None),
                };
                let (rest, upto) = self.option(rest, "upto")?;
                let (space, reduced) = match rest.trim().strip_suffix(" reduced") {
                    Some(s) => (s, true),
                    None => (rest.trim(), false),
                };
                JobBody::Homology {
                    space: self.space(space)?,
                    upto,
                    reduced,
                    expect,
                }
            }
            "verify" => JobBody::Verify(self.verify_job(rest)?),
            "counterexample" => {
                let (rest, p) = self.option(rest, "p")?;
                let mut words = rest.split_whitespace();
                if words.next() != Some("partial-monoid") {
                    return Err(self.err("the only counterexample search is `partial-monoid`"));
                }
                let sit = match words.next() {
                    Some(s) => self.situation(s)?,
                    None => self
                        .sc
                        .situations
                        .values()
                        .rev()
                        .find(|s| s.partial.is_some())
                        .cloned()
                        .ok_or_else(|| self.err("no submonoid situation defined"))?,
                };
                if sit.partial.is_none() {
                    return Err(self.err(format!("situation `{}` is not a submonoid situation", sit.label)));
                }
                JobBody::PartialMonoid(sit, p.unwrap_or(3))
            }
            _ => unreachable!(),
        })
    }
}

fn header_number<T: std::str::FromStr>(p: &Parser, rest: &str, what: &str) -> Result<T, ParseError> {
    rest.trim()
        .replace('_', "")
        .parse()
        .map_err(|_| p.err(format!("`{what}` needs a number")))
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ParseError> {
    let mut p = Parser {
        sc: Scenario::default(),
        line: 0,
    };
    let mut lines = text.lines().enumerate();
    while let Some((k, raw)) = lines.next() {
        p.line = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "trunc" => {
                p.sc.trunc = header_number(&p, rest, "trunc")?;
                if p.sc.trunc == 0 {
                    return Err(p.err("truncation must be positive"));
                }
            }
            "seed" => p.sc.seed = header_number(&p, rest, "seed")?,
            "cap" => p.sc.cap = header_number(&p, rest, "cap")?,
            "monoid" => p.define_monoid(rest)?,
            "set" => {
                let (name, set) = parse_set(line).map_err(|e| p.alg(e))?;
                p.sc.sets.insert(name, Arc::new(set));
            }
            "action" => p.define_action(rest)?,
            "situation" => p.define_situation(rest)?,
            "augment" => p.define_augment(rest)?,
            "space" => {
                if let Some(name) = rest.strip_suffix(':') {
                    let start = p.line;
                    let mut body = String::new();
                    let mut closed = false;
                    for (_, l) in lines.by_ref() {
                        if l.trim() == "end" {
                            closed = true;
                            break;
                        }
                        body.push_str(l.trim());
                        body.push('\n');
                    }
                    if !closed {
                        return Err(p.err("space block without `end`"));
                    }
                    let set = from_text(&body).map_err(|e| ParseError {
                        line: start,
                        msg: format!("in space `{}`: {e}", name.trim()),
                    })?;
                    let name = name.trim().to_string();
                    p.sc.spaces.insert(
                        name.clone(),
                        Space {
                            label: name,
                            expr: SpaceExpr::Given(Arc::new(set)),
                        },
                    );
                } else {
                    let (name, def) = rest
                        .split_once('=')
                        .ok_or_else(|| p.err("expected `space <name> = <expr>` or `space <name>:`"))?;
                    let mut space = p.space(def)?;
                    space.label = name.trim().to_string();
                    p.sc.spaces.insert(name.trim().to_string(), space);
                }
            }
            "build" | "homology" | "verify" | "counterexample" => {
                let body = p.job(keyword, rest)?;
                p.sc.jobs.push(Job {
                    line: p.line,
                    text: line.to_string(),
                    body,
                });
            }
            other => return Err(p.err(format!("unknown statement `{other}`"))),
        }
    }
    Ok(p.sc)
}

/// Wrap a bare simplicial set file as a scenario with a single space `input`.
pub fn scenario_for_set(set: SimplicialSet) -> Scenario {
    let mut sc = Scenario {
        trunc: set.truncation().max(1),
        ..Scenario::default()
    };
    sc.spaces.insert(
        "input".into(),
        Space {
            label: "input".into(),
            expr: SpaceExpr::Given(Arc::new(set)),
        },
    );
    sc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal() {
        let sc = parse_scenario("monoid Z2 = cyclic 2\nhomology nerve(Z2) upto 4\n").unwrap();
        assert_eq!(sc.jobs.len(), 1);
        assert_eq!(sc.jobs[0].kind(), JobKind::Homology);
    }

    #[test]
    fn undefined_names_report_the_line() {
        let err = parse_scenario("trunc 3\n\nhomology nerve(Z5) upto 2\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.msg.contains("Z5"));
    }

    #[test]
    fn axiom_violations_surface() {
        let err = parse_scenario("monoid B: elems 1,a,b; unit 1; mul a*a=b a*b=a b*a=a b*b=a\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.msg.contains("associativity"), "{}", err.msg);
    }

    #[test]
    fn options() {
        let sc = parse_scenario(
            "monoid M = zero\nsituation S = submonoid M {1,0}\ncounterexample partial-monoid p=3\nverify gluing instances 5\n",
        )
        .unwrap();
        assert!(matches!(sc.jobs[0].body, JobBody::PartialMonoid(_, 3)));
        assert!(matches!(sc.jobs[1].body, JobBody::Verify(VerifyJob::Gluing(5))));
    }

    #[test]
    fn inline_space_block() {
        let text = "space F:\n sset N=1\n deg 0: *\n deg 1: e\n d 0 e = |*\n d 1 e = |*\nend\nhomology F upto 1\n";
        let sc = parse_scenario(text).unwrap();
        assert!(sc.spaces.contains_key("F"));
        assert_eq!(sc.jobs[0].line, 8);
        assert!(parse_scenario("space F:\n sset N=1\n").is_err());
    }

    #[test]
    fn nested_expressions() {
        let sc = parse_scenario("monoid Z3 = cyclic 3\nspace X = wedge(circle, skeleton(nerve(Z3), 2))\nbuild X\n").unwrap();
        assert!(matches!(sc.spaces["X"].expr, SpaceExpr::Wedge(..)));
        assert!(parse_scenario("build wedge(circle\n").is_err());
    }
}
