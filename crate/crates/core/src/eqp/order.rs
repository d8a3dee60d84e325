//! Eventual comparison and maxima.

use std::cmp::Ordering;

use super::class::{lcm_u64, ResidueClass};
use super::poly::Polynomial;
use super::qp::QuasiPolynomial;
use super::sign::{eventual_sign, sign_threshold};

/// Per residue class of the common period, how `f(t)` relates to `g(t)` for
/// every `t >= threshold` in that class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EventualOrder {
    pub period: u64,
    pub relations: Vec<Ordering>,
    pub threshold: i64,
}

impl EventualOrder {
    pub fn relation(&self, t: i64) -> Ordering {
        self.relations[t.rem_euclid(self.period as i64) as usize]
    }

    /// The common relation when it is the same on every class.
    pub fn uniform(&self) -> Option<Ordering> {
        let first = self.relations[0];
        self.relations.iter().all(|&r| r == first).then_some(first)
    }
}

/// Eventual ordering of two polynomials on one class, with the threshold
/// from which it holds pointwise. Identical polynomials compare `Equal`
/// with threshold `floor`.
pub fn compare_on(
    f: &Polynomial,
    g: &Polynomial,
    class: ResidueClass,
    floor: i64,
) -> (Ordering, i64) {
    let diff = f - g;
    (eventual_sign(&diff), sign_threshold(&diff, class, floor))
}

pub fn eventual_compare(f: &QuasiPolynomial, g: &QuasiPolynomial) -> EventualOrder {
    let period = lcm_u64(f.period(), g.period());
    let floor = f.threshold().max(g.threshold());
    let mut threshold = floor;
    let mut relations = Vec::with_capacity(period as usize);
    for r in 0..period {
        let (ord, t0) = compare_on(
            f.component(r),
            g.component(r),
            ResidueClass::new(period, r),
            floor,
        );
        relations.push(ord);
        threshold = threshold.max(t0);
    }
    EventualOrder {
        period,
        relations,
        threshold,
    }
}

fn pick(f: &QuasiPolynomial, g: &QuasiPolynomial, want: Ordering) -> QuasiPolynomial {
    let order = eventual_compare(f, g);
    let components = (0..order.period)
        .map(|r| {
            if order.relations[r as usize] == want.reverse() {
                g.component(r).clone()
            } else {
                f.component(r).clone()
            }
        })
        .collect();
    QuasiPolynomial::from_parts(order.period, components, order.threshold)
}

/// Pointwise maximum, eventually.
pub fn eventual_max(f: &QuasiPolynomial, g: &QuasiPolynomial) -> QuasiPolynomial {
    pick(f, g, Ordering::Greater)
}

/// Pointwise minimum, eventually.
pub fn eventual_min(f: &QuasiPolynomial, g: &QuasiPolynomial) -> QuasiPolynomial {
    pick(f, g, Ordering::Less)
}

/// Maximum of a nonempty family.
pub fn eventual_max_of<'a>(
    items: impl IntoIterator<Item = &'a QuasiPolynomial>,
) -> Option<QuasiPolynomial> {
    let mut it = items.into_iter();
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, x| eventual_max(&acc, x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn odd_case_candidates() {
        // 2s^2 + s - 1 against 2s^2 + s - 2
        let f = QuasiPolynomial::from_i64s(&[-1, 1, 2]);
        let g = QuasiPolynomial::from_i64s(&[-2, 1, 2]);
        let ord = eventual_compare(&f, &g);
        assert_eq!(ord.uniform(), Some(Ordering::Greater));
        assert_eq!(eventual_max(&g, &f), f);
        assert_eq!(eventual_compare(&f, &f).uniform(), Some(Ordering::Equal));
        assert_eq!(eventual_max(&f, &f), f);
    }

    #[test]
    fn dominance_threshold_matches_scan() {
        let f = QuasiPolynomial::from_i64s(&[0, 0, 1]);
        let g = QuasiPolynomial::from_i64s(&[0, 100]);
        let ord = eventual_compare(&f, &g);
        assert_eq!(ord.uniform(), Some(Ordering::Greater));
        let last_not_greater = (1..=200i64).filter(|t| t * t <= 100 * t).max().unwrap();
        assert_eq!(last_not_greater, 100);
        assert_eq!(ord.threshold, 101);
    }

    #[test]
    fn mixed_period_max() {
        let a = QuasiPolynomial::from_i64s(&[3, 2]);
        let b = QuasiPolynomial::new(
            2,
            vec![
                Polynomial::from_i64s(&[0, 0, 1]),
                Polynomial::from_i64s(&[7]),
            ],
            0,
        )
        .unwrap();
        let c = QuasiPolynomial::new(
            3,
            vec![
                Polynomial::from_i64s(&[1, 3]),
                Polynomial::from_i64s(&[-5, 0, 1]),
                Polynomial::from_i64s(&[0, 1]),
            ],
            2,
        )
        .unwrap();
        let d = QuasiPolynomial::from_i64s(&[40]);
        let m = eventual_max_of([&a, &b, &c, &d]).unwrap();
        for t in m.threshold()..m.threshold() + 20 {
            let want = [&a, &b, &c, &d]
                .iter()
                .map(|q| q.eval_component(t))
                .max()
                .unwrap();
            assert_eq!(m.eval(t).unwrap(), want, "t = {t}");
        }
        assert!(m.eval(m.threshold() + 1).unwrap() > BigInt::from(0));
    }
}
