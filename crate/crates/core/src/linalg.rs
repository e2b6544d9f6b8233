//! Exact Gaussian elimination: inversion, kernels and incremental span bases.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::qfield::Field;

/// Sparse vector as `(index, value)` pairs with strictly increasing indices.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn to_sparse<F: Field>(dense: &[F]) -> SparseVec<F> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

/// `a - c * b`
fn axpy<F: Field>(a: &SparseVec<F>, c: &F, b: &SparseVec<F>) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ai = a.get(i).map(|e| e.0);
        let bj = b.get(j).map(|e| e.0);
        match (ai, bj) {
            (Some(x), Some(y)) if x == y => {
                let v = a[i].1.minus(&c.times(&b[j].1));
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, c.times(&b[j].1).negate()));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Row-echelon basis of a growing subspace.
///
/// Each stored row has leading entry 1 at its pivot; rows are kept sorted by
/// pivot, and candidates are reduced in ascending pivot order.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F> {
    rows: Vec<SparseVec<F>>,
}

impl<F: Field> Default for EchelonBasis<F> {
    fn default() -> Self {
        EchelonBasis { rows: Vec::new() }
    }
}

impl<F: Field> EchelonBasis<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis; returns the remainder.
    pub fn reduce(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        for row in &self.rows {
            let pivot = row[0].0;
            if v.is_empty() {
                break;
            }
            if let Ok(pos) = v.binary_search_by_key(&pivot, |e| e.0) {
                let c = v[pos].1.clone();
                v = axpy(&v, &c, row);
            }
        }
        v
    }

    /// Insert `v`; returns the normalized new row if `v` was independent.
    pub fn insert(&mut self, v: SparseVec<F>) -> Option<SparseVec<F>> {
        let r = self.reduce(v);
        if r.is_empty() {
            return None;
        }
        let inv = r[0].1.inverse().expect("nonzero pivot");
        let r: SparseVec<F> = r.into_iter().map(|(i, x)| (i, x.times(&inv))).collect();
        let pivot = r[0].0;
        let at = self.rows.partition_point(|row| row[0].0 < pivot);
        self.rows.insert(at, r.clone());
        Some(r)
    }
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    let mut basis = EchelonBasis::new();
    for i in 0..m.rows() {
        basis.insert(to_sparse(m.row(i)));
    }
    basis.dim()
}

/// Basis of `{ x : m x = 0 }`.
pub fn kernel<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<F>> = m.to_rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inverse().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = x.times(&inv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = x.minus(&f.times(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![F::zero(); cols];
            v[fc] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = a[row][fc].negate();
            }
            v
        })
        .collect()
}

/// Gauss-Jordan inverse; `name` labels the error.
pub fn inverse<F: Field>(m: &Matrix<F>, name: &str) -> Result<Matrix<F>> {
    if !m.is_square() {
        return Err(Error::NotInvertible(name.to_string()));
    }
    let n = m.rows();
    let mut a = m.to_rows();
    let mut inv = Matrix::<F>::identity(n).to_rows();
    for c in 0..n {
        let p = (c..n)
            .find(|&i| !a[i][c].is_zero())
            .ok_or_else(|| Error::NotInvertible(name.to_string()))?;
        a.swap(c, p);
        inv.swap(c, p);
        let f = a[c][c].inverse()?;
        for x in a[c].iter_mut() {
            *x = x.times(&f);
        }
        for x in inv[c].iter_mut() {
            *x = x.times(&f);
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let g = a[i][c].clone();
                let (ra, ri) = (a[c].clone(), inv[c].clone());
                for (x, y) in a[i].iter_mut().zip(&ra) {
                    *x = x.minus(&g.times(y));
                }
                for (x, y) in inv[i].iter_mut().zip(&ri) {
                    *x = x.minus(&g.times(y));
                }
            }
        }
    }
    Ok(Matrix::from_rows(inv))
}

/// Dimension of the unital algebra generated by `gens`.
///
/// Breadth-first saturation: start from the identity, multiply every new
/// basis element on the right by each generator, and keep what is
/// independent of the span so far. Terminates since the span lives in a
/// space of dimension `n^2`.
pub fn algebra_span_dimension<F: Field>(gens: &[Matrix<F>]) -> usize {
    let Some(first) = gens.first() else {
        return 1;
    };
    let n = first.rows();
    let mut basis = EchelonBasis::new();
    let id = Matrix::<F>::identity(n);
    basis.insert(to_sparse(id.entries()));
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for b in &frontier {
            for g in gens {
                let prod = b.mul(g);
                if basis.insert(to_sparse(prod.entries())).is_some() {
                    next.push(prod);
                }
            }
        }
        frontier = next;
    }
    basis.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::{RatFunc, Rational};

    fn r(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    #[test]
    fn inverse_and_singular() {
        let m = Matrix::from_rows(vec![vec![r(2), r(1)], vec![r(1), r(1)]]);
        let inv = inverse(&m, "m").unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        let s = Matrix::from_rows(vec![vec![r(1), r(2)], vec![r(2), r(4)]]);
        assert_eq!(inverse(&s, "s"), Err(Error::NotInvertible("s".into())));
    }

    #[test]
    fn kernel_of_jordan_block() {
        let n = Matrix::from_rows(vec![vec![r(0), r(1)], vec![r(0), r(0)]]);
        let k = kernel(&n);
        assert_eq!(k, vec![vec![r(1), r(0)]]);
        assert_eq!(rank(&n), 1);
    }

    #[test]
    fn full_matrix_algebra_from_two_generators() {
        // E12 and E21 generate all of M_2
        let e12 = Matrix::from_rows(vec![
            vec![RatFunc::zero(), RatFunc::one()],
            vec![RatFunc::zero(), RatFunc::zero()],
        ]);
        let e21 = Matrix::from_rows(vec![
            vec![RatFunc::zero(), RatFunc::zero()],
            vec![RatFunc::one(), RatFunc::zero()],
        ]);
        assert_eq!(algebra_span_dimension(&[e12.clone(), e21]), 4);
        assert_eq!(algebra_span_dimension(&[e12]), 2);
    }
}
