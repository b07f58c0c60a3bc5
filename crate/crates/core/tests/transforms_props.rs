mod common;

use common::{point, triangular_map, vars};
use keller_core::keller::{as_cubic_linear, is_keller, CubicLinearForm};
use keller_core::polyring::{rat, PolyMap, Polynomial, Rational};
use keller_core::transforms::{
    clear_denominators, conjugate_by_linear, cor1_extension, extend_variables, scale_conjugate, theorem_b_diagonal,
    translate_to_origin, DiagonalTransform,
};
use num_traits::Zero;
use proptest::prelude::*;

fn upper_rows(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(-3i64..=3, n * n).prop_map(move |flat| {
        (0..n).map(|i| (0..n).map(|j| if j > i { flat[i * n + j] } else { 0 }).collect()).collect()
    })
}

fn weights(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scaling_is_pointwise_conjugation(f in triangular_map(2, 3), r in prop_oneof![-3i64..=-1, 1i64..=3], a in point(2)) {
        let g = scale_conjugate(&f, &rat(r)).unwrap();
        let ra: Vec<Rational> = a.iter().map(|x| x * rat(r)).collect();
        let expected: Vec<Rational> = f.eval(&ra).unwrap().into_iter().map(|y| y / rat(r)).collect();
        prop_assert_eq!(g.eval(&a).unwrap(), expected);
        prop_assert!(is_keller(&g).unwrap());
    }

    #[test]
    fn extension_keeps_keller_and_fixes_new_variables(f in triangular_map(2, 3), m in 1usize..=2) {
        let g = extend_variables(&f, m).unwrap();
        prop_assert_eq!(g.len(), 2 + m);
        prop_assert!(is_keller(&g).unwrap());
        for k in 0..m {
            prop_assert_eq!(g.component(2 + k), &Polynomial::var_at(g.vars(), 2 + k));
        }
    }

    #[test]
    fn conjugation_is_pointwise(f in triangular_map(2, 2), b in -3i64..=3, a in point(2)) {
        let m = vec![vec![rat(1), rat(b)], vec![rat(0), rat(1)]];
        let minv = vec![vec![rat(1), rat(-b)], vec![rat(0), rat(1)]];
        let g = conjugate_by_linear(&f, &m).unwrap();
        let apply = |m: &Vec<Vec<Rational>>, x: &[Rational]| -> Vec<Rational> {
            m.iter().map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum()).collect()
        };
        let expected = apply(&m, &f.eval(&apply(&minv, &a)).unwrap());
        prop_assert_eq!(g.eval(&a).unwrap(), expected);
    }

    #[test]
    fn translation_vanishes_at_origin(f in triangular_map(2, 3), a in point(2)) {
        let g = translate_to_origin(&f, &a).unwrap();
        prop_assert!(g.vanishes_at_origin());
        prop_assert!(is_keller(&g).unwrap());
    }

    #[test]
    fn theorem_b_is_integral_and_keller(rows in upper_rows(3), w in weights(3)) {
        let form = CubicLinearForm::from_i64_rows(&rows).unwrap();
        let t = DiagonalTransform::from_i64(&w).unwrap();
        let out = theorem_b_diagonal(&form, &t).unwrap();
        prop_assert!(out.is_integral());
        prop_assert!(is_keller(&out.to_map()).unwrap());
    }

    #[test]
    fn cor1_rows_carry_row_sums(rows in upper_rows(3)) {
        let form = CubicLinearForm::from_i64_rows(&rows).unwrap();
        let ext = cor1_extension(&form).unwrap();
        prop_assert_eq!(ext.nvars(), 4);
        for i in 0..3 {
            let sum: Rational = form.row(i).iter().sum();
            prop_assert_eq!(&ext.row(i)[..3], form.row(i));
            prop_assert_eq!(&ext.row(i)[3], &sum);
        }
        let last = ext.row(3);
        prop_assert!(last.iter().all(Zero::is_zero));
        prop_assert!(is_keller(&ext.to_map()).unwrap());
    }

    #[test]
    fn clearing_denominators_gives_integer_rows(nums in prop::collection::vec(-4i64..=4, 4), dens in prop::collection::vec(1i64..=6, 4)) {
        let v = vars(2);
        let rows = vec![
            vec![Rational::new(nums[0].into(), dens[0].into()), Rational::new(nums[1].into(), dens[1].into())],
            vec![Rational::new(nums[2].into(), dens[2].into()), Rational::new(nums[3].into(), dens[3].into())],
        ];
        let form = CubicLinearForm::new(&v, rows).unwrap();
        let (s, out) = clear_denominators(&form).unwrap();
        prop_assert!(out.is_integral());
        let s3 = Rational::from_integer(&s * &s * &s);
        let conj = scale_conjugate(&form.to_map(), &s3).unwrap();
        let back = as_cubic_linear(&conj).unwrap();
        prop_assert_eq!(back.rows(), out.rows());
    }
}

#[test]
fn zero_weight_is_rejected() {
    assert!(DiagonalTransform::from_i64(&[1, 0]).is_err());
    let f = PolyMap::identity(&vars(2));
    assert!(scale_conjugate(&f, &rat(0)).is_err());
}
