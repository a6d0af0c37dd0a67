//! Property tests for the exact-arithmetic layer.

use claspkit::arith::{cyc_eval, LaurentPoly, RationalFunction, Var};
use num::BigRational;
use proptest::prelude::*;

fn arb_poly(vars: &'static [Var]) -> impl Strategy<Value = LaurentPoly> {
    let term = (
        prop::sample::select(vars),
        -4i64..=4,
        -9i64..=9,
        1i64..=9,
    );
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        let mut acc = LaurentPoly::zero();
        for (v, e, n, d) in terms {
            let coeff = BigRational::new(n.into(), d.into());
            acc = acc + LaurentPoly::var_pow(v, e).scale(&coeff);
        }
        acc
    })
}

fn arb_poly3() -> impl Strategy<Value = LaurentPoly> {
    arb_poly(&Var::ALL)
}

fn arb_qpoly() -> impl Strategy<Value = LaurentPoly> {
    arb_poly(&[Var::Q])
}

proptest! {
    #[test]
    fn addition_is_associative_and_commutative(
        x in arb_poly3(), y in arb_poly3(), z in arb_poly3()
    ) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x + &y, &y + &x);
    }

    #[test]
    fn multiplication_distributes(x in arb_poly3(), y in arb_poly3(), z in arb_poly3()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
    }

    #[test]
    fn additive_inverse(x in arb_poly3()) {
        prop_assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn canonical_equality_is_cross_multiplication(
        p in arb_qpoly(), r in arb_qpoly(), s in arb_qpoly(), t in arb_qpoly()
    ) {
        prop_assume!(!r.is_zero() && !s.is_zero() && !t.is_zero());
        // Scaling numerator and denominator together is invisible.
        let x = RationalFunction::new(p.clone(), r.clone()).unwrap();
        let y = RationalFunction::new(&p * &s, &r * &s).unwrap();
        prop_assert_eq!(&x, &y);
        prop_assert!(x.eq_cross(&y));
        // On arbitrary pairs the two equalities coincide.
        let z = RationalFunction::new(s.clone(), t.clone()).unwrap();
        prop_assert_eq!(x == z, x.eq_cross(&z));
    }

    #[test]
    fn field_operations_cancel(p in arb_qpoly(), r in arb_qpoly()) {
        prop_assume!(!p.is_zero() && !r.is_zero());
        let x = RationalFunction::new(p, r).unwrap();
        prop_assert_eq!(&x * &x.inv().unwrap(), RationalFunction::one());
        prop_assert_eq!(x.div(&x).unwrap(), RationalFunction::one());
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn cyclotomic_evaluation_is_a_ring_homomorphism(
        x in arb_qpoly(), y in arb_qpoly(), ell in 3u32..=12
    ) {
        let prod = cyc_eval(&(&x * &y), ell);
        let prod_images = &cyc_eval(&x, ell) * &cyc_eval(&y, ell);
        prop_assert_eq!(prod, prod_images);
        let sum = cyc_eval(&(&x + &y), ell);
        let sum_images = &cyc_eval(&x, ell) + &cyc_eval(&y, ell);
        prop_assert_eq!(sum, sum_images);
    }

    #[test]
    fn substitution_commutes_with_multiplication(
        x in arb_poly3(), y in arb_poly3(), a in 0i64..=4, b in 0i64..=4
    ) {
        let subst = |p: &LaurentPoly| p.substitute(Var::A, a).substitute(Var::B, b);
        prop_assert_eq!(subst(&(&x * &y)), &subst(&x) * &subst(&y));
        prop_assert!(subst(&x).is_q_only());
    }
}
