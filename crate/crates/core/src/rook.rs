//! The rook monoid: partial injections of `{1..k}` and the `q = 1`
//! specialization of the q-rook generators.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::matrix::Matrix;
use crate::presentations::{algebra_dimension, Assignment, Gen};
use crate::qfield::{Field, Rational};

/// A partial injective map on `{1..k}`; `image[i]` is the image of `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PartialInjection {
    image: Vec<Option<usize>>,
}

impl PartialInjection {
    pub fn new(image: Vec<Option<usize>>) -> Result<Self> {
        let k = image.len();
        let mut seen = BTreeSet::new();
        for &v in image.iter().flatten() {
            if v == 0 || v > k {
                return invalid(format!("image {v} outside 1..={k}"));
            }
            if !seen.insert(v) {
                return invalid(format!("{v} is hit twice"));
            }
        }
        Ok(PartialInjection { image })
    }

    pub fn identity(k: usize) -> Self {
        PartialInjection {
            image: (1..=k).map(Some).collect(),
        }
    }

    pub fn empty(k: usize) -> Self {
        PartialInjection { image: vec![None; k] }
    }

    pub fn k(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, i: usize) -> Option<usize> {
        self.image.get(i.checked_sub(1)?).copied().flatten()
    }

    pub fn rank(&self) -> usize {
        self.image.iter().flatten().count()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.k() != other.k() {
            return invalid(format!("cannot compose maps on {} and {} points", self.k(), other.k()));
        }
        Ok(PartialInjection {
            image: other.image.iter().map(|v| v.and_then(|j| self.apply(j))).collect(),
        })
    }

    /// The 0/1 matrix with a 1 in row `f(j)`, column `j`.
    pub fn to_matrix<F: Field>(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.k(), self.k());
        for (j, v) in self.image.iter().enumerate() {
            if let Some(i) = v {
                m.set(i - 1, j, F::one());
            }
        }
        m
    }

    pub fn from_matrix<F: Field>(m: &Matrix<F>) -> Result<Self> {
        if !m.is_square() {
            return invalid("rook matrices are square");
        }
        let mut image = vec![None; m.cols()];
        for (i, j, v) in m.nonzeros() {
            if !v.is_one() || image[j].is_some() {
                return invalid("not a rook matrix");
            }
            image[j] = Some(i + 1);
        }
        Self::new(image)
    }
}

impl fmt::Debug for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .image
            .iter()
            .map(|v| v.map_or_else(|| "-".to_string(), |i| i.to_string()))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Every partial injection of `{1..k}`, ordered.
pub fn enumerate_rook(k: usize) -> Vec<PartialInjection> {
    fn rec(k: usize, used: &mut Vec<bool>, prefix: &mut Vec<Option<usize>>, out: &mut Vec<PartialInjection>) {
        if prefix.len() == k {
            out.push(PartialInjection { image: prefix.clone() });
            return;
        }
        prefix.push(None);
        rec(k, used, prefix, out);
        prefix.pop();
        for v in 1..=k {
            if !used[v] {
                used[v] = true;
                prefix.push(Some(v));
                rec(k, used, prefix, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut vec![false; k + 1], &mut Vec::new(), &mut out);
    out
}

/// `sum_i C(k,i)^2 i!`
pub fn rook_cardinality(k: usize) -> u128 {
    let binom = |n: u128, r: u128| (0..r).fold(1u128, |acc, i| acc * (n - i) / (i + 1));
    let fact = |n: u128| (1..=n).product::<u128>();
    (0..=k as u128).map(|i| binom(k as u128, i).pow(2) * fact(i)).sum()
}

/// `T_i` is the transposition `(i, i+1)` and `P_i` the partial identity on
/// `{i+1..k}`, as `k x k` matrices.
pub fn generators_q1(k: usize) -> Result<Assignment<Rational>> {
    if k == 0 {
        return invalid("k must be at least 1");
    }
    let mut a = Assignment::new(k);
    for i in 1..k {
        let mut image: Vec<Option<usize>> = (1..=k).map(Some).collect();
        image.swap(i - 1, i);
        a.insert(Gen::t(i), PartialInjection { image }.to_matrix())?;
    }
    for (i, p) in projections(k).into_iter().enumerate() {
        a.insert(Gen::p(i + 1), p.to_matrix())?;
    }
    Ok(a)
}

fn projections(k: usize) -> Vec<PartialInjection> {
    (1..=k)
        .map(|i| PartialInjection {
            image: (1..=k).map(|j| (j > i).then_some(j)).collect(),
        })
        .collect()
}

/// Left multiplication by `g` on the monoid basis.
fn left_regular(
    g: &PartialInjection,
    basis: &[PartialInjection],
    index: &HashMap<&PartialInjection, usize>,
) -> Result<Matrix<Rational>> {
    let mut m = Matrix::zeros(basis.len(), basis.len());
    for (j, b) in basis.iter().enumerate() {
        let prod = g.compose(b)?;
        m.set(index[&prod], j, <Rational as Field>::one());
    }
    Ok(m)
}

/// The generators acting on the monoid algebra by left multiplication.
pub fn regular_representation(k: usize) -> Result<Assignment<Rational>> {
    let basis = enumerate_rook(k);
    let index: HashMap<&PartialInjection, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut a = Assignment::new(basis.len());
    for (g, m) in generators_q1(k)?.matrices() {
        let f = PartialInjection::from_matrix(m)?;
        a.insert(*g, left_regular(&f, &basis, &index)?)?;
    }
    Ok(a)
}

/// Dimension of the rook monoid algebra, as the word span of the generators
/// in the left-regular representation.
pub fn monoid_algebra_dimension(k: usize) -> Result<usize> {
    if k == 0 {
        return Ok(1);
    }
    Ok(algebra_dimension(&regular_representation(k)?))
}

/// All products of the `q = 1` generators, as partial injections.
pub fn monoid_closure(k: usize) -> Result<BTreeSet<PartialInjection>> {
    let gens: Vec<PartialInjection> = generators_q1(k)?
        .matrices()
        .values()
        .map(PartialInjection::from_matrix)
        .collect::<Result<_>>()?;
    let mut seen = BTreeSet::from([PartialInjection::identity(k)]);
    let mut frontier = vec![PartialInjection::identity(k)];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = x.compose(g)?;
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    Ok(seen)
}
