//! Tensor powers of the fundamental module `V` of `U_q gl(n)`, R-matrices,
//! and the action of cyclotomic Hecke algebras on `V^{⊗k}`.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::matrix::Matrix;
use crate::presentations::{
    algebra_dimension, relations_a_algebra, relations_cyclotomic, verify, Assignment, Expr, Gen, Relation,
    Substitution, VerifyReport,
};
use crate::qfield::{Field, RatFunc, Rational};
use crate::shapes::{enumerate_standard_tableaux, index_set_h, Shape};

/// `V = V_1 ⊕ ... ⊕ V_r` with `dim V_j = m_j`; basis indices are
/// contiguous per component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedBasis {
    dims: Vec<usize>,
}

impl GradedBasis {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return invalid(format!("component dimensions {dims:?} must be positive"));
        }
        Ok(GradedBasis { dims })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn n(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn r(&self) -> usize {
        self.dims.len()
    }

    /// Component (1-based) of the 0-based basis index `i`.
    pub fn degree(&self, i: usize) -> usize {
        let mut end = 0;
        for (j, m) in self.dims.iter().enumerate() {
            end += m;
            if i < end {
                return j + 1;
            }
        }
        panic!("basis index {i} out of range")
    }
}

/// Generators of `U_q gl(n)` acting on `V`.
#[derive(Clone, Debug)]
pub struct FundamentalModule {
    pub n: usize,
    /// `e_1..e_{n-1}`
    pub e: Vec<Matrix<RatFunc>>,
    /// `f_1..f_{n-1}`
    pub f: Vec<Matrix<RatFunc>>,
    /// `q^{ε_1}..q^{ε_n}`
    pub k_plus: Vec<Matrix<RatFunc>>,
    /// `q^{-ε_1}..q^{-ε_n}`
    pub k_minus: Vec<Matrix<RatFunc>>,
}

impl FundamentalModule {
    /// `K_i = q^{ε_i - ε_{i+1}}` for `1 <= i < n`.
    pub fn k_ratio(&self, i: usize, inverse: bool) -> Matrix<RatFunc> {
        let (a, b) = if inverse {
            (&self.k_minus, &self.k_plus)
        } else {
            (&self.k_plus, &self.k_minus)
        };
        a[i - 1].mul(&b[i])
    }
}

fn unit(n: usize, row: usize, col: usize) -> Matrix<RatFunc> {
    let mut m = Matrix::zeros(n, n);
    m.set(row, col, RatFunc::one());
    m
}

/// `e_i v_{i+1} = v_i`, `f_i v_i = v_{i+1}`, `q^{±ε_i} v_i = q^{±1} v_i`.
pub fn build_v(n: usize) -> Result<FundamentalModule> {
    if n == 0 {
        return invalid("n must be at least 1");
    }
    let diag = |i: usize, e: i64| {
        Matrix::diagonal(
            &(0..n)
                .map(|j| if j == i { RatFunc::q_pow(e) } else { RatFunc::one() })
                .collect::<Vec<_>>(),
        )
    };
    Ok(FundamentalModule {
        n,
        e: (0..n - 1).map(|i| unit(n, i, i + 1)).collect(),
        f: (0..n - 1).map(|i| unit(n, i + 1, i)).collect(),
        k_plus: (0..n).map(|i| diag(i, 1)).collect(),
        k_minus: (0..n).map(|i| diag(i, -1)).collect(),
    })
}

/// Index of `v_i ⊗ v_j` in `V ⊗ V`.
fn pair(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

fn flip_column(m: &mut Matrix<RatFunc>, n: usize, i: usize, j: usize) {
    m.set(pair(n, j, i), pair(n, i, j), RatFunc::one());
}

fn r_column(m: &mut Matrix<RatFunc>, n: usize, i: usize, j: usize) {
    let col = pair(n, i, j);
    match i.cmp(&j) {
        std::cmp::Ordering::Equal => m.set(col, col, RatFunc::q()),
        std::cmp::Ordering::Greater => flip_column(m, n, i, j),
        std::cmp::Ordering::Less => {
            flip_column(m, n, i, j);
            m.set(col, col, RatFunc::q_minus_qinv());
        }
    }
}

/// `Ř` on `V ⊗ V`.
pub fn rmatrix(n: usize) -> Matrix<RatFunc> {
    let mut m = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            r_column(&mut m, n, i, j);
        }
    }
    m
}

/// `Ř^{-1} = Ř - (q - q^{-1})`.
pub fn rmatrix_inv(n: usize) -> Matrix<RatFunc> {
    rmatrix(n).sub_scalar(&RatFunc::q_minus_qinv())
}

/// The flip `v ⊗ w ↦ w ⊗ v`.
pub fn flip(n: usize) -> Matrix<RatFunc> {
    let mut m = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            flip_column(&mut m, n, i, j);
        }
    }
    m
}

/// `Ř` on pairs of equal degree, the flip otherwise.
pub fn smatrix(basis: &GradedBasis) -> Matrix<RatFunc> {
    let n = basis.n();
    let mut m = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            if basis.degree(i) == basis.degree(j) {
                r_column(&mut m, n, i, j);
            } else {
                flip_column(&mut m, n, i, j);
            }
        }
    }
    m
}

/// `d(v) = u_j v` for `v` of degree `j`.
pub fn dop(basis: &GradedBasis, u: &[RatFunc]) -> Result<Matrix<RatFunc>> {
    if u.len() != basis.r() {
        return invalid(format!("{} parameters for {} components", u.len(), basis.r()));
    }
    Ok(Matrix::diagonal(
        &(0..basis.n())
            .map(|i| u[basis.degree(i) - 1].clone())
            .collect::<Vec<_>>(),
    ))
}

/// `id^{⊗(pos-1)} ⊗ local ⊗ id^{⊗...}` on `V^{⊗k}`, where `local` acts on
/// `width` consecutive factors starting at `pos` (1-based).
pub fn embed(local: &Matrix<RatFunc>, n: usize, width: usize, pos: usize, k: usize) -> Result<Matrix<RatFunc>> {
    if pos == 0 || pos + width - 1 > k {
        return invalid(format!("{width} factors at position {pos} do not fit in {k}"));
    }
    let left = Matrix::identity(n.pow((pos - 1) as u32));
    let right = Matrix::identity(n.pow((k + 1 - pos - width) as u32));
    Ok(left.kron(local).kron(&right))
}

/// `T_i ↦ Ř_i` and `X_1 ↦ Ř_1^{-1}...Ř_{k-1}^{-1} Š_{k-1}...Š_1 d_1`.
pub fn phi_p(k: usize, basis: &GradedBasis, u: &[RatFunc]) -> Result<Assignment<RatFunc>> {
    if k == 0 {
        return invalid("k must be at least 1");
    }
    let n = basis.n();
    let (r, rinv, s) = (rmatrix(n), rmatrix_inv(n), smatrix(basis));
    let mut x1 = embed(&dop(basis, u)?, n, 1, 1, k)?;
    for i in 1..k {
        x1 = embed(&s, n, 2, i, k)?.mul(&x1);
    }
    for i in (1..k).rev() {
        x1 = embed(&rinv, n, 2, i, k)?.mul(&x1);
    }
    let mut a = Assignment::new(n.pow(k as u32));
    a.insert(Gen::x(1), x1)?;
    for i in 1..k {
        a.insert(Gen::t(i), embed(&r, n, 2, i, k)?)?;
    }
    Ok(a)
}

/// Defines `X_{i+1} = T_i X_i T_i` for `1 <= i < k`.
pub fn x_from_x1(k: usize) -> Substitution<RatFunc> {
    let g = |h| Expr::gen(h);
    Substitution::new(
        (1..k)
            .map(|i| (Gen::x(i + 1), g(Gen::t(i)) * g(Gen::x(i)) * g(Gen::t(i))))
            .collect(),
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiReport {
    pub cyclotomic: VerifyReport,
    /// Present when `r = 2`, `m_1 = 1`, `u = (0, 1)` and `k >= 2`.
    pub a_algebra: Option<VerifyReport>,
    /// Whether `Φ_P(X_1) = d_1`; present when `r = 2`, `m_1 = 1`, `u = (0, 1)`.
    pub x1_equals_d1: Option<bool>,
}

impl PhiReport {
    pub fn pass(&self) -> bool {
        self.cyclotomic.pass && self.a_algebra.as_ref().is_none_or(|r| r.pass) && self.x1_equals_d1.unwrap_or(true)
    }
}

fn is_rook_case(basis: &GradedBasis, u: &[RatFunc]) -> bool {
    basis.r() == 2 && basis.dims()[0] == 1 && u.len() == 2 && u[0].is_zero() && u[1].is_one()
}

/// Checks the cyclotomic relations for `Φ_P`, and in the rook case also the
/// two-parameter quotient relations and `Φ_P(X_1) = d_1`.
pub fn verify_phi_p(k: usize, basis: &GradedBasis, u: &[RatFunc]) -> Result<PhiReport> {
    let a = phi_p(k, basis, u)?;
    verify_phi_assignment(&a, k, basis, u)
}

/// As [`verify_phi_p`] for an already built (possibly altered) assignment.
pub fn verify_phi_assignment(
    a: &Assignment<RatFunc>,
    k: usize,
    basis: &GradedBasis,
    u: &[RatFunc],
) -> Result<PhiReport> {
    phi_report(a, k, basis, u, |c| Ok(c.clone()))
}

/// As [`verify_phi_p`] with `q` specialized to `q0`.
pub fn verify_phi_p_at(k: usize, basis: &GradedBasis, u: &[RatFunc], q0: &Rational) -> Result<PhiReport> {
    phi_report(&phi_p(k, basis, u)?, k, basis, u, |c| c.specialize(q0))
}

fn phi_report<F: Field>(
    a: &Assignment<RatFunc>,
    k: usize,
    basis: &GradedBasis,
    u: &[RatFunc],
    conv: impl Fn(&RatFunc) -> Result<F> + Copy,
) -> Result<PhiReport> {
    let rels = |rs: Vec<Relation<RatFunc>>| rs.iter().map(|r| r.try_map(conv)).collect::<Result<Vec<_>>>();
    let full = a.extend(&x_from_x1(k))?.try_map(conv)?;
    let cyclotomic = verify(&full, &rels(relations_cyclotomic(k, u)?)?)?;
    let rook = is_rook_case(basis, u);
    let a_algebra = if rook && k >= 2 {
        Some(verify(
            &a.try_map(conv)?,
            &rels(relations_a_algebra(k, &u[0], &u[1])?)?,
        )?)
    } else {
        None
    };
    let x1_equals_d1 = if rook {
        let d1 = embed(&dop(basis, u)?, basis.n(), 1, 1, k)?.try_map(conv)?;
        Some(full.get(Gen::x(1)) == Some(&d1))
    } else {
        None
    };
    Ok(PhiReport {
        cyclotomic,
        a_algebra,
        x1_equals_d1,
    })
}

/// Dimension of the image of the Hecke algebra in `End(V^{⊗k})`.
pub fn centralizer_dimension(k: usize, basis: &GradedBasis, u: &[RatFunc]) -> Result<usize> {
    Ok(algebra_dimension(&phi_p(k, basis, u)?))
}

/// As [`centralizer_dimension`] with `q` specialized to `q0`.
pub fn centralizer_dimension_at(k: usize, basis: &GradedBasis, u: &[RatFunc], q0: &Rational) -> Result<usize> {
    Ok(algebra_dimension(&phi_p(k, basis, u)?.specialize(q0)?))
}

/// `sum d_λ^2` over `r`-multipartitions of `k` with `ℓ(λ^{(j)}) <= m_j`.
pub fn predicted_centralizer_dimension(k: usize, basis: &GradedBasis) -> Result<usize> {
    Ok(index_set_h(k, basis.r())?
        .into_iter()
        .filter(|lam| lam.components().iter().zip(basis.dims()).all(|(p, &m)| p.length() <= m))
        .map(|lam| enumerate_standard_tableaux(&Shape::Multi(lam)).len().pow(2))
        .sum())
}

/// A rule for extending the generators of `U_q gl(n)` to `V ⊗ V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Coproduct {
    /// `Δ(e_i) = e_i ⊗ K_i + 1 ⊗ e_i`, `Δ(f_i) = f_i ⊗ 1 + K_i^{-1} ⊗ f_i`
    EK,
    /// `Δ(e_i) = e_i ⊗ 1 + K_i ⊗ e_i`, `Δ(f_i) = f_i ⊗ K_i^{-1} + 1 ⊗ f_i`
    KE,
}

impl Coproduct {
    pub const CANDIDATES: [Coproduct; 2] = [Coproduct::EK, Coproduct::KE];

    /// Images of all generators on `V ⊗ V`, named.
    pub fn images(self, v: &FundamentalModule) -> Vec<(String, Matrix<RatFunc>)> {
        let id = Matrix::identity(v.n);
        let mut out = Vec::new();
        for i in 1..v.n {
            let (e, f) = (&v.e[i - 1], &v.f[i - 1]);
            let (k, kinv) = (v.k_ratio(i, false), v.k_ratio(i, true));
            let (de, df) = match self {
                Coproduct::EK => (e.kron(&k).add(&id.kron(e)), f.kron(&id).add(&kinv.kron(f))),
                Coproduct::KE => (e.kron(&id).add(&k.kron(e)), f.kron(&kinv).add(&id.kron(f))),
            };
            out.push((format!("e{i}"), de));
            out.push((format!("f{i}"), df));
        }
        for i in 1..=v.n {
            out.push((format!("q^e{i}"), v.k_plus[i - 1].kron(&v.k_plus[i - 1])));
            out.push((format!("q^-e{i}"), v.k_minus[i - 1].kron(&v.k_minus[i - 1])));
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoproductReport {
    pub convention: Coproduct,
    /// Per candidate, the generators whose image does not commute with `Ř`.
    pub failures: Vec<(Coproduct, Vec<String>)>,
}

/// Picks the coproduct for which `Ř` commutes with every generator on `V ⊗ V`.
pub fn intertwiner_fix_coproduct(n: usize) -> Result<CoproductReport> {
    if n < 2 {
        return invalid("n must be at least 2");
    }
    let v = build_v(n)?;
    let r = rmatrix(n);
    let mut failures = Vec::new();
    let mut winner = None;
    for c in Coproduct::CANDIDATES {
        let bad: Vec<String> = c
            .images(&v)
            .into_iter()
            .filter(|(_, m)| r.mul(m) != m.mul(&r))
            .map(|(name, _)| name)
            .collect();
        if bad.is_empty() && winner.is_none() {
            winner = Some(c);
        }
        failures.push((c, bad));
    }
    Ok(CoproductReport {
        convention: winner.ok_or(Error::ConventionNotFound)?,
        failures,
    })
}
