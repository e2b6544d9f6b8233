use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qfield::{Field, RatFunc};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum GenKind {
    T,
    TInv,
    X,
    P,
}

/// A generator symbol such as `T1`, `T1^-1`, `X2` or `P3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Gen {
    pub kind: GenKind,
    pub index: usize,
}

impl Gen {
    pub fn t(i: usize) -> Self {
        Gen {
            kind: GenKind::T,
            index: i,
        }
    }
    pub fn t_inv(i: usize) -> Self {
        Gen {
            kind: GenKind::TInv,
            index: i,
        }
    }
    pub fn x(i: usize) -> Self {
        Gen {
            kind: GenKind::X,
            index: i,
        }
    }
    pub fn p(i: usize) -> Self {
        Gen {
            kind: GenKind::P,
            index: i,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::T => write!(f, "T{}", self.index),
            GenKind::TInv => write!(f, "T{}^-1", self.index),
            GenKind::X => write!(f, "X{}", self.index),
            GenKind::P => write!(f, "P{}", self.index),
        }
    }
}

impl FromStr for Gen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad generator {s:?}"));
        let (body, inv) = match s.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let mut chars = body.chars();
        let head = chars.next().ok_or_else(bad)?;
        let index: usize = chars.as_str().parse().map_err(|_| bad())?;
        let kind = match (head, inv) {
            ('T', false) => GenKind::T,
            ('T', true) => GenKind::TInv,
            ('X', false) => GenKind::X,
            ('P', false) => GenKind::P,
            _ => return Err(bad()),
        };
        Ok(Gen { kind, index })
    }
}

impl Serialize for Gen {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Formal linear combination of words in the generators.
///
/// The empty word is the identity.
#[derive(Clone, PartialEq, Debug)]
pub struct Expr<F> {
    terms: BTreeMap<Vec<Gen>, F>,
}

impl<F: Field> Expr<F> {
    pub fn zero() -> Self {
        Expr { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(F::one())
    }

    pub fn scalar(c: F) -> Self {
        Self::term(Vec::new(), c)
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(vec![g], F::one())
    }

    pub fn term(word: Vec<Gen>, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(word, c);
        }
        Expr { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Gen], &F)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn gens(&self) -> BTreeSet<Gen> {
        self.terms.keys().flatten().copied().collect()
    }

    fn add_term(&mut self, word: Vec<Gen>, c: F) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                let s = e.get().plus(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }

    pub fn negate(&self) -> Self {
        self.scale(&F::one().negate())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Expr {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v.times(c))).collect(),
        }
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1.times(c2));
            }
        }
        out
    }

    /// Product of the given factors, left to right.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Self {
        factors.into_iter().fold(Self::one(), |acc, f| acc.times(f))
    }

    /// Replace every generator `g` for which `f(g)` is `Some`.
    pub fn substitute(&self, f: &impl Fn(Gen) -> Option<Self>) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::scalar(c.clone());
            for g in w {
                let img = f(*g).unwrap_or_else(|| Self::gen(*g));
                acc = acc.times(&img);
            }
            out = out.plus(&acc);
        }
        out
    }

    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Expr<G>> {
        let mut out = Expr::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }
}

impl<F: Field> fmt::Display for Expr<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word: Vec<String> = w.iter().map(ToString::to_string).collect();
                match (w.is_empty(), c.is_one()) {
                    (true, _) => format!("({c})"),
                    (false, true) => word.join("*"),
                    (false, false) => format!("({c})*{}", word.join("*")),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

macro_rules! expr_ops {
    ($tr:ident, $m:ident, $inh:ident) => {
        impl<F: Field> $tr<Expr<F>> for Expr<F> {
            type Output = Expr<F>;
            fn $m(self, rhs: Expr<F>) -> Expr<F> {
                Expr::$inh(&self, &rhs)
            }
        }
        impl<F: Field> $tr<&Expr<F>> for &Expr<F> {
            type Output = Expr<F>;
            fn $m(self, rhs: &Expr<F>) -> Expr<F> {
                Expr::$inh(self, rhs)
            }
        }
    };
}

expr_ops!(Add, add, plus);
expr_ops!(Sub, sub, minus);
expr_ops!(Mul, mul, times);

impl<F: Field> Neg for Expr<F> {
    type Output = Expr<F>;
    fn neg(self) -> Expr<F> {
        self.negate()
    }
}

impl From<Gen> for Expr<RatFunc> {
    fn from(g: Gen) -> Self {
        Expr::gen(g)
    }
}

/// An asserted identity `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct Relation<F> {
    pub name: String,
    pub lhs: Expr<F>,
    pub rhs: Expr<F>,
}

impl<F: Field> Relation<F> {
    pub fn new(name: impl Into<String>, lhs: Expr<F>, rhs: Expr<F>) -> Self {
        Relation {
            name: name.into(),
            lhs,
            rhs,
        }
    }

    /// `lhs - rhs`
    pub fn residual(&self) -> Expr<F> {
        self.lhs.minus(&self.rhs)
    }

    pub fn gens(&self) -> BTreeSet<Gen> {
        let mut g = self.lhs.gens();
        g.extend(self.rhs.gens());
        g
    }

    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Relation<G>> {
        Ok(Relation {
            name: self.name.clone(),
            lhs: self.lhs.try_map(&f)?,
            rhs: self.rhs.try_map(&f)?,
        })
    }
}

impl<F: Field> fmt::Display for Relation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}", self.name, self.lhs, self.rhs)
    }
}
