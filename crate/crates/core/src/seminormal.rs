//! Seminormal (tableau basis) representations of affine and cyclotomic
//! Hecke algebras.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::matrix::Matrix;
use crate::presentations::{Assignment, Gen};
use crate::qfield::RatFunc;
use crate::shapes::{
    content, enumerate_standard_tableaux, ContentRule, MultiPartition, Partition, Shape, SkewShape, StandardTableau,
};

/// A module with basis `v_L` indexed by standard tableaux `L`.
#[derive(Clone, Debug)]
pub struct Representation {
    pub k: usize,
    pub shape: Shape,
    pub rule: ContentRule,
    pub basis: Vec<StandardTableau>,
    assignment: Assignment<RatFunc>,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Images of `X_1..X_k` and `T_1..T_{k-1}`.
    pub fn assignment(&self) -> &Assignment<RatFunc> {
        &self.assignment
    }

    pub fn matrices(&self) -> &BTreeMap<Gen, Matrix<RatFunc>> {
        self.assignment.matrices()
    }

    pub fn x(&self, i: usize) -> &Matrix<RatFunc> {
        self.assignment.get(Gen::x(i)).expect("1 <= i <= k")
    }

    pub fn t(&self, i: usize) -> &Matrix<RatFunc> {
        self.assignment.get(Gen::t(i)).expect("1 <= i < k")
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<usize> {
        self.basis.binary_search(t).ok()
    }
}

impl Serialize for Representation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let fillings: Vec<_> = self.basis.iter().map(StandardTableau::filling).collect();
        let matrices: BTreeMap<String, &Matrix<RatFunc>> =
            self.matrices().iter().map(|(g, m)| (g.to_string(), m)).collect();
        let mut st = s.serialize_struct("Representation", 4)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("shape", &self.shape)?;
        st.serialize_field("basis", &fillings)?;
        st.serialize_field("matrices", &matrices)?;
        st.end()
    }
}

/// The module of `shape` with contents from `rule`.
///
/// `X_i v_L = CT(L(i)) v_L` and
/// `T_i v_L = (T_i)_{LL} v_L + (q^{-1} + (T_i)_{LL}) v_{s_i L}`.
pub fn build(shape: &Shape, rule: &ContentRule) -> Result<Representation> {
    let basis = enumerate_standard_tableaux(shape);
    let k = shape.size();
    let d = basis.len();
    let contents: Vec<Vec<RatFunc>> = basis
        .iter()
        .map(|t| t.positions().iter().map(|c| content(c, rule)).collect())
        .collect::<Result<_>>()?;

    let mut a = Assignment::new(d);
    for i in 1..=k {
        let diag: Vec<RatFunc> = contents.iter().map(|c| c[i - 1].clone()).collect();
        a.insert(Gen::x(i), Matrix::diagonal(&diag))?;
    }
    let q = RatFunc::q();
    let qinv = RatFunc::q_pow(-1);
    let qq = RatFunc::q_minus_qinv();
    for i in 1..k {
        let mut m = Matrix::zeros(d, d);
        for (j, l) in basis.iter().enumerate() {
            let (a_cell, b_cell) = (l.cell_of(i), l.cell_of(i + 1));
            let diag = if a_cell.comp == b_cell.comp && a_cell.row == b_cell.row {
                q.clone()
            } else if a_cell.comp == b_cell.comp && a_cell.col == b_cell.col {
                qinv.neg()
            } else {
                let (ci, cn) = (&contents[j][i - 1], &contents[j][i]);
                let den = cn.sub(ci);
                if den.is_zero() {
                    return Err(Error::DegenerateContent {
                        i,
                        next: i + 1,
                        value: ci.to_string(),
                    });
                }
                cn.mul(&qq).div(&den)?
            };
            if let Some(s) = l.swap(i) {
                let row = basis.binary_search(&s).expect("s_i L is in the basis");
                m.set(row, j, qinv.add(&diag));
            }
            m.set(j, j, diag);
        }
        a.insert(Gen::t(i), m)?;
    }
    Ok(Representation {
        k,
        shape: shape.clone(),
        rule: rule.clone(),
        basis,
        assignment: a,
    })
}

/// The calibrated module of a skew shape with `CT(b) = q^{2(c-r)}`.
pub fn calibrated_skew_module(skew: &SkewShape, k: usize) -> Result<Representation> {
    if skew.size() != k {
        return invalid(format!("{skew} has {} boxes, not {k}", skew.size()));
    }
    build(&Shape::Skew(skew.clone()), &ContentRule::Plain)
}

/// The module of an `r`-multipartition with `CT(b) = u_i q^{2(c-r)}`.
pub fn cyclotomic_module(lambda: &MultiPartition, u: &[RatFunc]) -> Result<Representation> {
    if u.len() != lambda.r() {
        return invalid(format!("{} parameters given for {} components", u.len(), lambda.r()));
    }
    build(&Shape::Multi(lambda.clone()), &ContentRule::Cyclotomic(u.to_vec()))
}

/// The module of `(k-1,d)/(d-1)` with `CT(b) = u_1 q^{2(c-r)+2}`.
pub fn shifted_skew_module(k: usize, d: usize, u1: &RatFunc) -> Result<Representation> {
    if d == 0 || d >= k {
        return invalid(format!("need 1 <= d < k, got d = {d}, k = {k}"));
    }
    if u1.is_zero() {
        return invalid("u1 must be nonzero");
    }
    let outer = Partition::new(vec![k - 1, d])?;
    let inner = Partition::new(if d > 1 { vec![d - 1] } else { vec![] })?;
    build(
        &Shape::Skew(SkewShape::new(outer, inner)?),
        &ContentRule::Shifted(u1.clone()),
    )
}

/// Basis vectors whose tableau has shape `shape` after removing `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct RestrictionBlock {
    pub shape: Shape,
    pub indices: Vec<usize>,
}

/// Split the basis by the shape of `L` with its largest entry removed.
///
/// Blocks come in the order of the removed box.
pub fn restrict(rep: &Representation) -> Result<Vec<RestrictionBlock>> {
    if rep.k == 0 {
        return invalid("cannot restrict a module with k = 0");
    }
    let mut by_cell: BTreeMap<_, RestrictionBlock> = BTreeMap::new();
    for (j, l) in rep.basis.iter().enumerate() {
        let last = l.cell_of(rep.k);
        let smaller = l.remove_largest()?;
        by_cell
            .entry(last)
            .or_insert_with(|| RestrictionBlock {
                shape: smaller.shape().clone(),
                indices: Vec::new(),
            })
            .indices
            .push(j);
    }
    Ok(by_cell.into_values().collect())
}
