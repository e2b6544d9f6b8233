use super::assignment::Substitution;
use super::expr::{Expr, Gen, Relation};
use crate::error::{invalid, Result};
use crate::qfield::RatFunc;

type E = Expr<RatFunc>;
type Rel = Relation<RatFunc>;

fn t(i: usize) -> E {
    E::gen(Gen::t(i))
}

fn t_inv(i: usize) -> E {
    E::gen(Gen::t_inv(i))
}

fn x(i: usize) -> E {
    E::gen(Gen::x(i))
}

fn p(i: usize) -> E {
    E::gen(Gen::p(i))
}

fn c(v: RatFunc) -> E {
    E::scalar(v)
}

fn q() -> E {
    c(RatFunc::q())
}

fn qq() -> E {
    c(RatFunc::q_minus_qinv())
}

fn rel(name: String, lhs: E, rhs: E) -> Rel {
    Relation::new(name, lhs, rhs)
}

/// `X_2 = T_1 X_1 T_1`
fn x2_formal() -> E {
    t(1) * x(1) * t(1)
}

/// Quadratic, braid and distant commutation relations on `T_1..T_{k-1}`.
fn hecke_relations(k: usize, quadratic_constant: &RatFunc, names: [&str; 3]) -> Vec<Rel> {
    let mut out = Vec::new();
    for i in 1..k {
        out.push(rel(
            format!("{}[i={i}]", names[0]),
            t(i) * t(i),
            qq() * t(i) + c(quadratic_constant.clone()),
        ));
    }
    for i in 1..k.saturating_sub(1) {
        out.push(rel(
            format!("{}[i={i}]", names[1]),
            t(i) * t(i + 1) * t(i),
            t(i + 1) * t(i) * t(i + 1),
        ));
    }
    for i in 1..k {
        for j in i + 2..k {
            out.push(rel(format!("{}[i={i},j={j}]", names[2]), t(i) * t(j), t(j) * t(i)));
        }
    }
    out
}

fn a_relations(k: usize) -> Vec<Rel> {
    hecke_relations(k, &RatFunc::one(), ["A1", "A2", "A3"])
}

/// `P_{i+1} = q P_i T_i^{-1} P_i` and its expanded form.
fn p_recursion(k: usize, name: &str) -> Vec<Rel> {
    let mut out = Vec::new();
    for i in 1..k {
        out.push(rel(format!("{name}[i={i}]"), p(i + 1), q() * p(i) * t_inv(i) * p(i)));
        out.push(rel(
            format!("{name}[i={i}] expanded"),
            p(i + 1),
            q() * (p(i) * t(i) * p(i) - qq() * p(i)),
        ));
    }
    out
}

/// `P_i T_j = T_j P_i = q P_i` for `j < i`.
fn p_absorbs_t(k: usize, name: &str) -> Vec<Rel> {
    let mut out = Vec::new();
    for i in 1..=k {
        for j in 1..i.min(k) {
            out.push(rel(format!("{name}[i={i},j={j}] left"), p(i) * t(j), q() * p(i)));
            out.push(rel(format!("{name}[i={i},j={j}] right"), t(j) * p(i), q() * p(i)));
        }
    }
    out
}

/// `P_i T_j = T_j P_i` for `i < j <= k-1`.
fn p_commutes_t(k: usize, name: &str) -> Vec<Rel> {
    let mut out = Vec::new();
    for i in 1..=k {
        for j in i + 1..k {
            out.push(rel(format!("{name}[i={i},j={j}]"), p(i) * t(j), t(j) * p(i)));
        }
    }
    out
}

fn p_idempotent(k: usize, name: &str) -> Vec<Rel> {
    (1..=k)
        .map(|i| rel(format!("{name}[i={i}]"), p(i) * p(i), p(i)))
        .collect()
}

/// The q-rook monoid presentation in generators `P_1..P_k`, `T_1..T_{k-1}`.
pub fn relations_rook(k: usize) -> Result<Vec<Rel>> {
    if k == 0 {
        return invalid("k must be at least 1");
    }
    let mut out = a_relations(k);
    out.extend(p_idempotent(k, "R1"));
    for i in 1..=k {
        for j in i + 1..=k {
            out.push(rel(format!("R2[i={i},j={j}]"), p(i) * p(j), p(j) * p(i)));
        }
    }
    out.extend(p_commutes_t(k, "R3"));
    out.extend(p_absorbs_t(k, "R4"));
    out.extend(p_recursion(k, "R5"));
    Ok(out)
}

/// The presentation in generators `X_1`, `T_1..T_{k-1}` with `X_1^2 = X_1`.
pub fn relations_ak_presentation(k: usize) -> Result<Vec<Rel>> {
    if k < 2 {
        return invalid("this presentation needs k >= 2");
    }
    let one = E::one();
    let mut out = a_relations(k);
    for j in 2..k {
        out.push(rel(format!("B1[j={j}]"), x(1) * t(j), t(j) * x(1)));
    }
    out.push(rel("B2".into(), x(1) * x(1), x(1)));
    out.push(rel("B3".into(), x(1) * t(1) * x(1) * t(1), t(1) * x(1) * t(1) * x(1)));
    let b4 = E::product(&[&one - &x(1), t(1) - q(), &one - &x(1), &one - &x2_formal()]);
    out.push(rel("B4".into(), b4, E::zero()));
    Ok(out)
}

/// How to read the mixed `X`/`T` relation of the affine Hecke algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AffineVariant {
    /// `X_i T_i = T_i X_{i+1} - (q - q^{-1}) X_{i+1}`, which holds in every
    /// seminormal module.
    #[default]
    Standard,
    /// `X_i T_i = T_i X_{i+1} + (q - q^{-1}) X_i`.
    PlusXi,
}

/// Affine Hecke relations in `X_1..X_k`, `T_1..T_{k-1}`.
pub fn relations_affine(k: usize) -> Result<Vec<Rel>> {
    relations_affine_variant(k, AffineVariant::Standard)
}

pub fn relations_affine_variant(k: usize, variant: AffineVariant) -> Result<Vec<Rel>> {
    if k == 0 {
        return invalid("k must be at least 1");
    }
    let mut out = hecke_relations(k, &RatFunc::one(), ["quadratic", "braid", "far"]);
    for i in 1..=k {
        for j in i + 1..=k {
            out.push(rel(format!("XX[i={i},j={j}]"), x(i) * x(j), x(j) * x(i)));
        }
    }
    for i in 1..k {
        let rhs = match variant {
            AffineVariant::Standard => t(i) * x(i + 1) - qq() * x(i + 1),
            AffineVariant::PlusXi => t(i) * x(i + 1) + qq() * x(i),
        };
        out.push(rel(format!("XT[i={i}]"), x(i) * t(i), rhs));
    }
    for i in 1..=k {
        for j in 1..k {
            if j != i && j + 1 != i {
                out.push(rel(format!("XT far[i={i},j={j}]"), x(i) * t(j), t(j) * x(i)));
            }
        }
    }
    if k >= 2 {
        out.push(rel(
            "X1T1X1T1".into(),
            x(1) * t(1) * x(1) * t(1),
            t(1) * x(1) * t(1) * x(1),
        ));
    }
    for i in 2..=k {
        let left: Vec<E> = (1..i).rev().map(t).collect();
        let right: Vec<E> = (1..i).map(t).collect();
        let word = E::product(left.iter().chain([&x(1)]).chain(right.iter()));
        out.push(rel(format!("X[i={i}]"), x(i), word));
    }
    Ok(out)
}

/// `(X_1 - u_1)...(X_1 - u_r)`
fn x1_polynomial(u: &[RatFunc]) -> E {
    let factors: Vec<E> = u.iter().map(|ui| x(1) - c(ui.clone())).collect();
    E::product(&factors)
}

/// Affine relations plus `(X_1 - u_1)...(X_1 - u_r) = 0`.
pub fn relations_cyclotomic(k: usize, u: &[RatFunc]) -> Result<Vec<Rel>> {
    if u.is_empty() {
        return invalid("need at least one parameter u");
    }
    let mut out = relations_affine(k)?;
    out.push(rel("cyclotomic".into(), x1_polynomial(u), E::zero()));
    Ok(out)
}

/// Constant term of the quadratic `T_i` relation in the two-parameter algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum QuadraticVariant {
    /// `T_i^2 = (q - q^{-1}) T_i + 1`
    #[default]
    One,
    /// `T_i^2 = (q - q^{-1}) T_i + q`
    Q,
}

/// The two-parameter quotient algebra in generators `X_1`, `T_1..T_{k-1}`.
pub fn relations_a_algebra(k: usize, u1: &RatFunc, u2: &RatFunc) -> Result<Vec<Rel>> {
    relations_a_algebra_variant(k, u1, u2, QuadraticVariant::One)
}

pub fn relations_a_algebra_variant(
    k: usize,
    u1: &RatFunc,
    u2: &RatFunc,
    variant: QuadraticVariant,
) -> Result<Vec<Rel>> {
    if k < 2 {
        return invalid("this presentation needs k >= 2");
    }
    if u2.is_zero() {
        return invalid("u2 must be nonzero");
    }
    let constant = match variant {
        QuadraticVariant::One => RatFunc::one(),
        QuadraticVariant::Q => RatFunc::q(),
    };
    let mut out = hecke_relations(k, &constant, ["quadratic", "braid", "far"]);
    for j in 2..k {
        out.push(rel(format!("X1T far[j={j}]"), x(1) * t(j), t(j) * x(1)));
    }
    out.push(rel(
        "X1T1X1T1".into(),
        x(1) * t(1) * x(1) * t(1),
        t(1) * x(1) * t(1) * x(1),
    ));
    out.push(rel(
        "X1 quadratic".into(),
        x1_polynomial(&[u1.clone(), u2.clone()]),
        E::zero(),
    ));
    out.push(rel("ideal".into(), ideal_generator_p(u1, u2), E::zero()));
    Ok(out)
}

/// The element generating the minimal ideal of the column shape, with
/// `X_2 = T_1 X_1 T_1`.
pub fn ideal_generator_p(u1: &RatFunc, u2: &RatFunc) -> E {
    let x2 = x2_formal();
    let cu2 = c(u2.clone());
    if u1.is_zero() {
        E::product(&[x(1) - cu2.clone(), t(1) - q(), x(1) - cu2.clone(), x2 - cu2])
    } else {
        let q2u1 = c(RatFunc::q_pow(2).mul(u1));
        E::product(&[x(1) - cu2.clone(), &x2 - &cu2, x2 - q2u1])
    }
}

/// Relations between `P_1`, `P_2` and `T_j` equivalent to `B1`-`B4`.
pub fn relations_bprime(k: usize) -> Result<Vec<Rel>> {
    if k < 2 {
        return invalid("this presentation needs k >= 2");
    }
    let mut out = Vec::new();
    for j in 2..k {
        out.push(rel(format!("B1'[j={j}]"), p(1) * t(j), t(j) * p(1)));
    }
    out.push(rel("B2'".into(), p(1) * p(1), p(1)));
    out.push(rel("B3'".into(), p(2) * t(1), t(1) * p(2)));
    out.push(rel("B4'".into(), p(2) * p(2), p(2)));
    Ok(out)
}

/// `P_i P_j = P_j P_i = P_j` for `i <= j`, and `P_1 X_2 = P_1 - P_2`.
pub fn relations_projection_nesting(k: usize) -> Result<Vec<Rel>> {
    if k < 2 {
        return invalid("needs k >= 2");
    }
    let mut out = Vec::new();
    for i in 1..=k {
        for j in i..=k {
            out.push(rel(format!("nest[i={i},j={j}] left"), p(i) * p(j), p(j)));
            out.push(rel(format!("nest[i={i},j={j}] right"), p(j) * p(i), p(j)));
        }
    }
    out.push(rel("P1X2".into(), p(1) * x(2), p(1) - p(2)));
    Ok(out)
}

/// The `P`/`T` relations `E1`-`E5` derived from the `X_1` presentation.
pub fn relations_e(k: usize) -> Result<Vec<Rel>> {
    if k == 0 {
        return invalid("k must be at least 1");
    }
    let mut out = a_relations(k);
    out.extend(p_commutes_t(k, "E1"));
    for i in 1..=k {
        for j in 1..i {
            out.push(rel(format!("E2[i={i},j={j}] left"), p(i) * p(j), p(i)));
            out.push(rel(format!("E2[i={i},j={j}] right"), p(j) * p(i), p(i)));
        }
    }
    out.extend(p_idempotent(k, "E3"));
    out.extend(p_absorbs_t(k, "E4"));
    out.extend(p_recursion(k, "E5"));
    Ok(out)
}

/// Defines `P_1 = 1 - X_1` and `P_{i+1} = q(P_i T_i P_i - (q - q^{-1}) P_i)`.
pub fn map_x_to_p(k: usize) -> Substitution<RatFunc> {
    let mut steps = Vec::new();
    if k >= 1 {
        steps.push((Gen::p(1), E::one() - x(1)));
    }
    for i in 1..k {
        steps.push((Gen::p(i + 1), q() * (p(i) * t(i) * p(i) - qq() * p(i))));
    }
    Substitution::new(steps)
}

/// Defines `X_1 = 1 - P_1` and `X_{i+1} = T_i X_i T_i`.
pub fn map_p_to_x(k: usize) -> Substitution<RatFunc> {
    let mut steps = Vec::new();
    if k >= 1 {
        steps.push((Gen::x(1), E::one() - p(1)));
    }
    for i in 1..k {
        steps.push((Gen::x(i + 1), t(i) * x(i) * t(i)));
    }
    Substitution::new(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::presentations::verify;
    use crate::seminormal::cyclotomic_module;
    use crate::shapes::MultiPartition;

    fn names(rels: &[Rel]) -> Vec<String> {
        rels.iter().map(|r| r.name.clone()).collect()
    }

    #[test]
    fn rook_suite_sizes() {
        assert_eq!(names(&relations_rook(1).unwrap()), vec!["R1[i=1]"]);
        let k2 = names(&relations_rook(2).unwrap());
        assert_eq!(
            k2,
            vec![
                "A1[i=1]",
                "R1[i=1]",
                "R1[i=2]",
                "R2[i=1,j=2]",
                "R4[i=2,j=1] left",
                "R4[i=2,j=1] right",
                "R5[i=1]",
                "R5[i=1] expanded"
            ]
        );
        assert!(names(&relations_rook(3).unwrap()).contains(&"A2[i=1]".to_string()));
        assert!(relations_rook(0).is_err());
    }

    #[test]
    fn ak_presentation_sizes() {
        assert_eq!(
            names(&relations_ak_presentation(2).unwrap()),
            vec!["A1[i=1]", "B2", "B3", "B4"]
        );
        let k3 = names(&relations_ak_presentation(3).unwrap());
        assert!(k3.contains(&"B1[j=2]".to_string()) && k3.contains(&"A2[i=1]".to_string()));
        assert!(relations_ak_presentation(1).is_err());
    }

    #[test]
    fn affine_and_cyclotomic_suites() {
        let k2 = relations_affine(2).unwrap();
        assert!(names(&k2).contains(&"XX[i=1,j=2]".to_string()));
        let k1 = relations_affine(1).unwrap();
        assert!(k1.is_empty());
        let cyc = relations_cyclotomic(1, &[RatFunc::zero(), RatFunc::one()]).unwrap();
        let last = cyc.last().unwrap();
        assert_eq!(last.residual(), x(1) * x(1) - x(1));
        assert!(relations_cyclotomic(2, &[]).is_err());
    }

    #[test]
    fn plus_xi_affine_relation_fails_on_a_module() {
        let u = [RatFunc::from_int(1), RatFunc::from_int(5)];
        let r = cyclotomic_module(&MultiPartition::from_rows(&[&[2], &[]]).unwrap(), &u).unwrap();
        let lit = relations_affine_variant(2, AffineVariant::PlusXi).unwrap();
        let report = verify(r.assignment(), &lit).unwrap();
        let failed: Vec<_> = report.failures().iter().map(|c| c.name.clone()).collect();
        assert_eq!(failed, vec!["XT[i=1]"]);
        assert!(verify(r.assignment(), &relations_affine(2).unwrap()).unwrap().pass);
    }

    #[test]
    fn a_algebra_requires_nonzero_u2() {
        assert!(relations_a_algebra(2, &RatFunc::one(), &RatFunc::zero()).is_err());
        assert!(relations_a_algebra(1, &RatFunc::one(), &RatFunc::one()).is_err());
    }

    #[test]
    fn maps_are_mutually_inverse_on_x1() {
        let back = map_x_to_p(3).apply(&map_p_to_x(3).apply(&x(1)));
        assert_eq!(back, x(1));
        let back = map_p_to_x(3).apply(&map_x_to_p(3).apply(&p(1)));
        assert_eq!(back, p(1));
    }

    #[test]
    fn x2_in_the_mixed_module() {
        let u = [RatFunc::zero(), RatFunc::one()];
        let r = cyclotomic_module(&MultiPartition::from_rows(&[&[1], &[1]]).unwrap(), &u).unwrap();
        let a = r.assignment().restrict_to(&[Gen::x(1), Gen::t(1)]).unwrap();
        let p_only = a
            .extend(&map_x_to_p(2))
            .unwrap()
            .restrict_to(&[Gen::p(1), Gen::p(2), Gen::t(1)])
            .unwrap();
        let with_x = p_only.extend(&map_p_to_x(2)).unwrap();
        assert_eq!(
            with_x.get(Gen::x(2)).unwrap(),
            &Matrix::diagonal(&[RatFunc::one(), RatFunc::zero()])
        );
    }

    #[test]
    fn bprime_b4_expansion() {
        let rels = relations_bprime(2).unwrap();
        let b4 = rels.iter().find(|r| r.name == "B4'").unwrap();
        let expanded = map_x_to_p(2).apply(&b4.residual());
        assert!(expanded.gens().iter().all(|g| matches!(
            g.kind,
            crate::presentations::GenKind::X | crate::presentations::GenKind::T
        )));
        assert!(expanded.num_terms() > 4);
    }
}
