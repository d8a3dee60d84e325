use num_integer::Integer;
use proptest::prelude::*;

use parafrob_core::oracle::{apery_table, frobenius_int, is_member, IntGenerators, Semigroup};

/// Reachability by dynamic programming up to `bound`.
fn reachable(gens: &[u64], bound: usize) -> Vec<bool> {
    let mut reach = vec![false; bound + 1];
    reach[0] = true;
    for u in 1..=bound {
        reach[u] = gens.iter().any(|&g| g as usize <= u && reach[u - g as usize]);
    }
    reach
}

fn bound(gens: &[u64]) -> usize {
    let hi = *gens.iter().max().unwrap() as usize;
    hi * hi + hi
}

fn generators() -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::vec(1u64..=40, 1..=5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn frobenius_matches_dp(g in generators()) {
        let d = g.iter().fold(0u64, |a, &b| a.gcd(&b));
        let reduced: Vec<u64> = g.iter().map(|x| x / d).collect();
        let reach = reachable(&reduced, bound(&reduced));
        let largest = (0..reach.len()).rev().find(|&u| !reach[u]).map_or(-1, |u| u as i128);
        prop_assert_eq!(frobenius_int(&IntGenerators::new(g).unwrap()), d as i128 * largest);
    }

    #[test]
    fn membership_matches_dp(g in generators()) {
        let gens = IntGenerators::new(g.clone()).unwrap();
        let b = bound(&g);
        let reach = reachable(&g, b);
        prop_assert!(!is_member(&gens, -1));
        for (u, &r) in reach.iter().enumerate() {
            prop_assert_eq!(is_member(&gens, u as i128), r, "u = {}", u);
        }
    }

    #[test]
    fn apery_minima_are_least_members(g in generators(), base in 1u64..=45) {
        let gens = IntGenerators::new(g.clone()).unwrap();
        let table = apery_table(&gens, base);
        let reach = reachable(&g, bound(&g) + 45 * 45);
        for r in 0..base {
            let least = (r as usize..reach.len()).step_by(base as usize).find(|&u| reach[u]);
            prop_assert_eq!(table.minima[r as usize], least.map(|u| u as u64), "residue {}", r);
        }
    }

    #[test]
    fn frobenius_is_maximal_gap(g in generators()) {
        let s = Semigroup::new(IntGenerators::new(g).unwrap());
        let f = s.frobenius();
        let d = s.gcd() as i128;
        prop_assert!(!s.contains(f));
        for k in 1..=60 {
            prop_assert!(s.contains(f + k * d));
        }
    }
}
