use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use proptest::prelude::*;

use parafrob_core::eqp::{eventual_max, ext_gcd, int_divmod, poly_divmod};
use parafrob_core::{Polynomial, QuasiPolynomial, ResidueClass};

const SPAN: i64 = 200;

fn binomial_poly(coeffs: &[i64]) -> Polynomial {
    let mut acc = Polynomial::zero();
    let mut basis = Polynomial::one();
    for (k, &c) in coeffs.iter().enumerate() {
        acc = &acc + &basis.scale(&BigRational::from_integer(c.into()));
        let k = k as i64;
        let factor = Polynomial::new(vec![
            BigRational::new((-k).into(), (k + 1).into()),
            BigRational::new(1.into(), (k + 1).into()),
        ]);
        basis = &basis * &factor;
    }
    acc
}

/// Integer-valued components written in the binomial basis, so that
/// rational coefficients such as `t(t-1)/2` show up.
fn eqp(max_period: u64, degrees: std::ops::RangeInclusive<usize>, positive: bool) -> impl Strategy<Value = QuasiPolynomial> {
    (1..=max_period).prop_flat_map(move |period| {
        let component = degrees.clone().prop_flat_map(move |deg| {
            let lead = if positive { 1i64..=2 } else { -3i64..=3 };
            (proptest::collection::vec(-3i64..=3, deg), lead).prop_map(|(mut c, l)| {
                c.push(if l == 0 { 1 } else { l });
                binomial_poly(&c)
            })
        });
        proptest::collection::vec(component, period as usize)
            .prop_map(move |c| QuasiPolynomial::new(period, c, 0).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn poly_divmod_identity(f in eqp(2, 0..=2, false), g in eqp(2, 1..=2, true)) {
        let (q, r) = poly_divmod(&f, &g).unwrap();
        let t0 = q.threshold().max(r.threshold());
        for t in t0..=t0 + SPAN {
            prop_assert_eq!(f.eval_component(t), q.eval(t).unwrap() * g.eval_component(t) + r.eval(t).unwrap());
        }
        prop_assert!(r.degree() <= g.degree());
    }

    #[test]
    fn int_divmod_range(f in eqp(3, 0..=3, false), g in eqp(2, 0..=2, true)) {
        let (q, r) = int_divmod(&f, &g).unwrap();
        let t0 = q.threshold().max(r.threshold());
        for t in t0..=t0 + SPAN {
            let (gt, rt) = (g.eval_component(t), r.eval(t).unwrap());
            prop_assert_eq!(f.eval_component(t), q.eval(t).unwrap() * &gt + &rt);
            prop_assert!(BigInt::from(0) <= rt && rt < gt);
        }
    }

    #[test]
    fn bezout_pointwise(f in eqp(2, 0..=2, false), g in eqp(2, 0..=1, false)) {
        let (d, p, q) = ext_gcd(&f, &g).unwrap();
        for t in d.threshold()..=d.threshold() + SPAN {
            let (ft, gt) = (f.eval_component(t), g.eval_component(t));
            let dt = d.eval(t).unwrap();
            prop_assert_eq!(&dt, &ft.gcd(&gt));
            prop_assert_eq!(dt, p.eval_component(t) * ft + q.eval_component(t) * gt);
        }
    }

    #[test]
    fn restrict_matches_eval(f in eqp(3, 0..=3, false), k in 1u64..=4, j in 0u64..12) {
        let m = f.period() * k;
        let j = j % m;
        let p = f.restrict(j, m).unwrap();
        let local = f.restrict_class(ResidueClass::new(m, j));
        for s in 0..60i64 {
            let t = m as i64 * s + j as i64;
            let direct = p.eval_integer(&BigInt::from(s));
            prop_assert_eq!(direct.as_ref(), Some(&f.eval_component(t)));
            prop_assert_eq!(local.eval_component(s), f.eval_component(t));
        }
        if m % f.integral_modulus() == 0 {
            prop_assert!(p.has_integer_coeffs());
        }
    }

    #[test]
    fn branches_round_trip(f in eqp(2, 0..=3, false), m in 1u64..=4) {
        let branches: Vec<_> = (0..m)
            .map(|j| {
                let c = ResidueClass::new(m, j);
                (c, f.restrict_class(c))
            })
            .collect();
        let back = QuasiPolynomial::from_branches(&branches).unwrap().normalize();
        prop_assert!(back.same_components(&f.normalize()));
    }

    #[test]
    fn eventual_max_pointwise(f in eqp(2, 0..=2, false), g in eqp(3, 0..=2, false)) {
        let h = eventual_max(&f, &g);
        for t in h.threshold()..=h.threshold() + SPAN {
            prop_assert_eq!(h.eval(t).unwrap(), f.eval_component(t).max(g.eval_component(t)));
        }
    }

    #[test]
    fn normalize_preserves_values(f in eqp(3, 0..=3, false), k in 1u64..=4) {
        let lifted = f.lift(f.period() * k);
        let n = lifted.normalize();
        prop_assert!(f.period() % n.period() == 0);
        for t in 0..=SPAN {
            prop_assert_eq!(n.eval_component(t), f.eval_component(t));
        }
    }

    #[test]
    fn ring_operations_pointwise(f in eqp(2, 0..=2, false), g in eqp(3, 0..=2, false)) {
        let (sum, prod, diff) = (&f + &g, &f * &g, &f - &g);
        for t in 0..=60 {
            let (ft, gt) = (f.eval_component(t), g.eval_component(t));
            prop_assert_eq!(sum.eval_component(t), &ft + &gt);
            prop_assert_eq!(prod.eval_component(t), &ft * &gt);
            prop_assert_eq!(diff.eval_component(t), ft - gt);
        }
    }
}
