use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::expr::{Expr, Gen, GenKind, Relation};
use crate::error::{invalid, Error, Result};
use crate::linalg::{algebra_span_dimension, inverse};
use crate::matrix::Matrix;
use crate::qfield::{Field, RatFunc, Rational};

/// Generator images as square matrices of one common size.
///
/// `T_i^-1` is computed from `T_i` on first use unless given explicitly.
#[derive(Clone)]
pub struct Assignment<F> {
    dim: usize,
    matrices: BTreeMap<Gen, Matrix<F>>,
    inverses: RefCell<BTreeMap<Gen, Matrix<F>>>,
}

impl<F: Field> std::fmt::Debug for Assignment<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.matrices.iter()).finish()
    }
}

impl<F: Field> Assignment<F> {
    pub fn new(dim: usize) -> Self {
        Assignment {
            dim,
            matrices: BTreeMap::new(),
            inverses: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn from_map(dim: usize, matrices: BTreeMap<Gen, Matrix<F>>) -> Result<Self> {
        let mut a = Self::new(dim);
        for (g, m) in matrices {
            a.insert(g, m)?;
        }
        Ok(a)
    }

    pub fn insert(&mut self, g: Gen, m: Matrix<F>) -> Result<()> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return invalid(format!(
                "{g} is {}x{} but the assignment has dimension {}",
                m.rows(),
                m.cols(),
                self.dim
            ));
        }
        self.inverses.borrow_mut().clear();
        self.matrices.insert(g, m);
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, g: Gen) -> Option<&Matrix<F>> {
        self.matrices.get(&g)
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> + '_ {
        self.matrices.keys().copied()
    }

    pub fn matrices(&self) -> &BTreeMap<Gen, Matrix<F>> {
        &self.matrices
    }

    fn matrix_of(&self, g: Gen) -> Result<Matrix<F>> {
        if let Some(m) = self.matrices.get(&g) {
            return Ok(m.clone());
        }
        if g.kind == GenKind::TInv {
            if let Some(m) = self.inverses.borrow().get(&g) {
                return Ok(m.clone());
            }
            let t = self
                .matrices
                .get(&Gen::t(g.index))
                .ok_or_else(|| Error::InvalidArgument(format!("missing generator {}", Gen::t(g.index))))?;
            let inv = inverse(t, &Gen::t(g.index).to_string())?;
            self.inverses.borrow_mut().insert(g, inv.clone());
            return Ok(inv);
        }
        Err(Error::InvalidArgument(format!("missing generator {g}")))
    }

    /// Matrix of a formal expression.
    pub fn eval(&self, e: &Expr<F>) -> Result<Matrix<F>> {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (word, c) in e.terms() {
            let mut acc: Option<Matrix<F>> = None;
            for g in word {
                let m = self.matrix_of(*g)?;
                acc = Some(match acc {
                    None => m,
                    Some(a) => a.mul(&m),
                });
            }
            let term = match acc {
                None => Matrix::scalar(self.dim, c.clone()),
                Some(a) => a.scale(c),
            };
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Adds each substitution target, evaluated in order.
    pub fn extend(&self, subst: &Substitution<F>) -> Result<Self> {
        let mut out = self.clone();
        for (g, image) in &subst.steps {
            let m = out.eval(image)?;
            out.insert(*g, m)?;
        }
        Ok(out)
    }

    /// Only the listed generators.
    pub fn restrict_to(&self, gens: &[Gen]) -> Result<Self> {
        let mut out = Self::new(self.dim);
        for g in gens {
            out.insert(*g, self.matrix_of(*g)?)?;
        }
        Ok(out)
    }

    /// Block-diagonal sum over a common generator set.
    pub fn direct_sum(parts: &[Self]) -> Result<Self> {
        let Some(first) = parts.first() else {
            return invalid("direct sum of no assignments");
        };
        let gens: Vec<Gen> = first.gens().collect();
        let dim = parts.iter().map(|p| p.dim).sum();
        let mut out = Self::new(dim);
        for g in gens {
            let blocks = parts.iter().map(|p| p.matrix_of(g)).collect::<Result<Vec<_>>>()?;
            out.insert(g, Matrix::direct_sum(&blocks))?;
        }
        Ok(out)
    }

    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Assignment<G>> {
        let mut out = Assignment::new(self.dim);
        for (g, m) in &self.matrices {
            out.insert(*g, m.try_map(&f)?)?;
        }
        Ok(out)
    }
}

impl Assignment<RatFunc> {
    /// Exact values at `q = q0`.
    pub fn specialize(&self, q0: &Rational) -> Result<Assignment<Rational>> {
        self.try_map(|x| x.specialize(q0))
    }
}

/// Ordered definitions `target := image`; an image may use earlier targets.
#[derive(Clone, Debug)]
pub struct Substitution<F> {
    pub steps: Vec<(Gen, Expr<F>)>,
}

impl<F: Field> Substitution<F> {
    pub fn new(steps: Vec<(Gen, Expr<F>)>) -> Self {
        Substitution { steps }
    }

    pub fn targets(&self) -> Vec<Gen> {
        self.steps.iter().map(|(g, _)| *g).collect()
    }

    /// Each target's image with earlier targets expanded away.
    pub fn expanded(&self) -> BTreeMap<Gen, Expr<F>> {
        let mut done: BTreeMap<Gen, Expr<F>> = BTreeMap::new();
        for (g, image) in &self.steps {
            let e = image.substitute(&|h| done.get(&h).cloned());
            done.insert(*g, e);
        }
        done
    }

    /// Rewrite `e` in terms of the non-target generators.
    pub fn apply(&self, e: &Expr<F>) -> Expr<F> {
        let done = self.expanded();
        e.substitute(&|h| done.get(&h).cloned())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub pass: bool,
    /// Largest residual entry; `"0"` when the relation holds.
    pub max_residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub relations: Vec<RelationCheck>,
}

impl VerifyReport {
    pub fn failures(&self) -> Vec<&RelationCheck> {
        self.relations.iter().filter(|r| !r.pass).collect()
    }
}

/// Evaluates `lhs - rhs` for every relation.
pub fn verify<F: Field>(a: &Assignment<F>, relations: &[Relation<F>]) -> Result<VerifyReport> {
    let mut checks = Vec::with_capacity(relations.len());
    for rel in relations {
        let r = a.eval(&rel.residual())?;
        let max = r.max_entry().map_or_else(|| "0".to_string(), ToString::to_string);
        checks.push(RelationCheck {
            name: rel.name.clone(),
            pass: r.is_zero(),
            max_residual: max,
        });
    }
    Ok(VerifyReport {
        pass: checks.iter().all(|c| c.pass),
        relations: checks,
    })
}

/// Dimension of the algebra generated by the assigned matrices.
pub fn algebra_dimension<F: Field>(a: &Assignment<F>) -> usize {
    let gens: Vec<Matrix<F>> = a
        .matrices
        .iter()
        .filter(|(g, _)| g.kind != GenKind::TInv)
        .map(|(_, m)| m.clone())
        .collect();
    if gens.is_empty() {
        return usize::from(a.dim > 0);
    }
    algebra_span_dimension(&gens)
}

/// Generators mentioned by a relation suite.
pub fn suite_gens<F: Field>(relations: &[Relation<F>]) -> BTreeSet<Gen> {
    relations.iter().flat_map(Relation::gens).collect()
}
