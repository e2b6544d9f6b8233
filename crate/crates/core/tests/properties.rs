use proptest::prelude::*;

use qrook::presentations::{relations_cyclotomic, verify, Gen};
use qrook::qfield::{RatFunc, Rational};
use qrook::seminormal::{cyclotomic_module, restrict};
use qrook::shapes::{
    bratteli, content, enumerate_partitions, enumerate_standard_tableaux, index_set_h, BratteliFamily, Cell,
    ContentRule, MultiPartition, Shape,
};

fn multipartition() -> impl Strategy<Value = MultiPartition> {
    (1usize..=4, 1usize..=3, any::<prop::sample::Index>()).prop_map(|(k, r, i)| {
        let all = index_set_h(k, r).unwrap();
        all[i.index(all.len())].clone()
    })
}

/// Distinct nonzero rationals, so contents in different components never meet.
fn generic_u(r: usize) -> impl Strategy<Value = Vec<RatFunc>> {
    prop::collection::btree_set((-9i64..=9).prop_filter("nonzero", |n| *n != 0), r)
        .prop_map(|s| s.into_iter().map(RatFunc::from_int).collect())
}

fn module_and_u() -> impl Strategy<Value = (MultiPartition, Vec<RatFunc>)> {
    multipartition().prop_flat_map(|lam| {
        let r = lam.r();
        (Just(lam), generic_u(r))
    })
}

fn is_standard(filling: &[Vec<Vec<Option<usize>>>]) -> bool {
    filling.iter().all(|comp| {
        let rows_ok = comp.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = comp.windows(2).all(|rs| rs[1].iter().zip(&rs[0]).all(|(b, a)| a < b));
        rows_ok && cols_ok
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn enumerated_tableaux_are_standard(lam in multipartition()) {
        let shape = Shape::Multi(lam);
        let ts = enumerate_standard_tableaux(&shape);
        prop_assert!(!ts.is_empty());
        for t in &ts {
            prop_assert!(is_standard(&t.filling()));
        }
        prop_assert!(ts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn content_depends_on_diagonal_only(comp in 1usize..=3, row in 1usize..=6, col in 1usize..=6, shift in 1usize..=4) {
        let u: Vec<RatFunc> = vec![RatFunc::from_int(2), RatFunc::from_int(-3), RatFunc::q()];
        let rule = ContentRule::Cyclotomic(u);
        let a = content(&Cell::in_comp(comp, row, col), &rule).unwrap();
        let b = content(&Cell::in_comp(comp, row + shift, col + shift), &rule).unwrap();
        prop_assert_eq!(a, b);
        let p = content(&Cell::plain(row, col), &ContentRule::Plain).unwrap();
        let p2 = content(&Cell::plain(row + shift, col + shift), &ContentRule::Plain).unwrap();
        prop_assert_eq!(p, p2);
    }

    #[test]
    fn seminormal_modules_satisfy_relations((lam, u) in module_and_u()) {
        let k = lam.size();
        let rep = cyclotomic_module(&lam, &u).unwrap();
        let report = verify(rep.assignment(), &relations_cyclotomic(k, &u).unwrap()).unwrap();
        prop_assert!(report.pass, "{:?}", report.failures());
        let qinv = RatFunc::q_pow(-1);
        for i in 1..k {
            let t = rep.t(i);
            let quad = t.sub_scalar(&RatFunc::q()).mul(&t.sub_scalar(&qinv.neg()));
            prop_assert!(quad.is_zero());
        }
    }

    #[test]
    fn restriction_blocks_are_closed((lam, u) in module_and_u()) {
        let k = lam.size();
        prop_assume!(k >= 2);
        let rep = cyclotomic_module(&lam, &u).unwrap();
        let blocks = restrict(&rep).unwrap();
        let total: usize = blocks.iter().map(|b| b.indices.len()).sum();
        prop_assert_eq!(total, rep.dim());
        let gens = (1..k).map(Gen::x).chain((1..k - 1).map(Gen::t));
        for g in gens {
            let m = rep.assignment().get(g).unwrap();
            for b in &blocks {
                let outside: Vec<usize> = (0..rep.dim()).filter(|j| !b.indices.contains(j)).collect();
                prop_assert!(m.submatrix(&outside, &b.indices).is_zero());
            }
        }
    }

    #[test]
    fn specialized_modules_keep_the_quadratic_relation((lam, u) in module_and_u(), n in 2i64..=5) {
        let k = lam.size();
        let rep = cyclotomic_module(&lam, &u).unwrap();
        let q0 = Rational::from_integer(n.into());
        if let Ok(a) = rep.assignment().specialize(&q0) {
            let qq = Rational::new((n * n - 1).into(), n.into());
            for i in 1..k {
                let t = a.get(Gen::t(i)).unwrap();
                prop_assert_eq!(t.mul(t), t.scale(&qq).add(&qrook::matrix::Matrix::identity(t.rows())));
            }
        }
    }
}

#[test]
fn partitions_are_reverse_lex_and_complete() {
    let counts = [1, 1, 2, 3, 5, 7, 11, 15];
    for (k, &c) in counts.iter().enumerate() {
        let ps = enumerate_partitions(k);
        assert_eq!(ps.len(), c);
        assert!(ps.windows(2).all(|w| w[0].rows() > w[1].rows()));
    }
}

#[test]
fn quotient_graph_is_type_b_without_column_descendants() {
    let column = MultiPartition::from_rows(&[&[1, 1], &[]]).unwrap();
    let b = bratteli(5, BratteliFamily::TypeB);
    let a = bratteli(5, BratteliFamily::AQuotient);
    for m in 0..=5 {
        let kept: Vec<_> = b.levels[m].iter().filter(|l| !l.contains(&column)).cloned().collect();
        let mut got = a.levels[m].clone();
        let mut want = kept;
        got.sort();
        want.sort();
        assert_eq!(got, want, "level {m}");
    }
}
