//! Frobenius numbers and membership for concrete integer generators.
//!
//! Everything here is computed from Apéry tables: for a base `b`, entry `j`
//! is the least semigroup element congruent to `j` modulo `b`. With the
//! generators divided by their gcd, the Frobenius number is the largest
//! entry minus `b`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_integer::Integer;

/// A nonempty list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntGenerators(Vec<u64>);

impl IntGenerators {
    /// `None` when the list is empty or contains a zero.
    pub fn new(gens: Vec<u64>) -> Option<Self> {
        (!gens.is_empty() && gens.iter().all(|&g| g > 0)).then_some(IntGenerators(gens))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn gcd(&self) -> u64 {
        self.0.iter().fold(0, |acc, &g| acc.gcd(&g))
    }

    pub fn min(&self) -> u64 {
        *self.0.iter().min().unwrap()
    }

    fn divided(&self, d: u64) -> IntGenerators {
        IntGenerators(self.0.iter().map(|g| g / d).collect())
    }
}

/// Least semigroup element in each residue class modulo `base`; `None`
/// marks a class the semigroup never reaches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyTable {
    pub base: u64,
    pub minima: Vec<Option<u64>>,
}

impl AperyTable {
    pub fn contains(&self, u: i128) -> bool {
        if u < 0 {
            return false;
        }
        let j = (u % self.base as i128) as usize;
        self.minima[j].is_some_and(|m| u >= m as i128)
    }
}

/// Apéry table of the semigroup generated by `g` with respect to `base`.
///
/// When `base` is one of the generators the table is filled by the
/// round-robin method in `O(base * n)`; otherwise by Dijkstra over the
/// residues.
pub fn apery_table(g: &IntGenerators, base: u64) -> AperyTable {
    assert!(base > 0, "Apéry base must be positive");
    if g.0.contains(&base) {
        round_robin(g, base)
    } else {
        dijkstra(g, base)
    }
}

fn round_robin(g: &IntGenerators, base: u64) -> AperyTable {
    let b = base as usize;
    let mut minima: Vec<Option<u64>> = vec![None; b];
    minima[0] = Some(0);
    for &a in &g.0 {
        let step = (a % base) as usize;
        if step == 0 {
            continue;
        }
        let d = (b).gcd(&step);
        let cycle = b / d;
        for r in 0..d {
            // start the sweep at the smallest known entry on this cycle
            let mut pos = r;
            let mut best: Option<(u64, usize)> = None;
            for _ in 0..cycle {
                if let Some(v) = minima[pos] {
                    if best.is_none_or(|(bv, _)| v < bv) {
                        best = Some((v, pos));
                    }
                }
                pos = (pos + step) % b;
            }
            let Some((_, start)) = best else { continue };
            let mut pos = start;
            for _ in 0..cycle {
                let next = (pos + step) % b;
                if let Some(v) = minima[pos] {
                    let cand = v + a;
                    if minima[next].is_none_or(|w| cand < w) {
                        minima[next] = Some(cand);
                    }
                }
                pos = next;
            }
        }
    }
    AperyTable { base, minima }
}

fn dijkstra(g: &IntGenerators, base: u64) -> AperyTable {
    let b = base as usize;
    let mut minima: Vec<Option<u64>> = vec![None; b];
    let mut heap = BinaryHeap::new();
    minima[0] = Some(0);
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((dist, pos))) = heap.pop() {
        if minima[pos] != Some(dist) {
            continue;
        }
        for &a in &g.0 {
            let next = (pos + (a % base) as usize) % b;
            let cand = dist + a;
            if minima[next].is_none_or(|w| cand < w) {
                minima[next] = Some(cand);
                heap.push(Reverse((cand, next)));
            }
        }
    }
    AperyTable { base, minima }
}

/// The Frobenius number in the group generated by `g`: for gcd `d`, this is
/// `d * F(g/d)`, and a single generator `a` gives `-a`.
pub fn frobenius_int(g: &IntGenerators) -> i128 {
    let d = g.gcd();
    let reduced = g.divided(d);
    let base = reduced.min();
    let table = apery_table(&reduced, base);
    let largest = table
        .minima
        .iter()
        .map(|m| m.expect("coprime generators reach every residue"))
        .max()
        .unwrap();
    d as i128 * (largest as i128 - base as i128)
}

/// Whether `u` is a nonnegative integer combination of `g`. Values outside
/// the group `gcd(g) * Z` are never members.
pub fn is_member(g: &IntGenerators, u: i128) -> bool {
    Semigroup::new(g.clone()).contains(u)
}

/// A semigroup with its Apéry table computed once, for repeated queries.
#[derive(Clone, Debug)]
pub struct Semigroup {
    gens: IntGenerators,
    gcd: u64,
    table: AperyTable,
}

impl Semigroup {
    pub fn new(gens: IntGenerators) -> Self {
        let gcd = gens.gcd();
        let reduced = gens.divided(gcd);
        let table = apery_table(&reduced, reduced.min());
        Semigroup { gens, gcd, table }
    }

    pub fn generators(&self) -> &IntGenerators {
        &self.gens
    }

    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    pub fn contains(&self, u: i128) -> bool {
        let d = self.gcd as i128;
        u.rem_euclid(d) == 0 && self.table.contains(u / d)
    }

    pub fn frobenius(&self) -> i128 {
        let largest = self.table.minima.iter().map(|m| m.unwrap()).max().unwrap();
        self.gcd as i128 * (largest as i128 - self.table.base as i128)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(v: &[u64]) -> IntGenerators {
        IntGenerators::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(frobenius_int(&gens(&[5, 6, 7])), 9);
        assert_eq!(frobenius_int(&gens(&[1])), -1);
        assert_eq!(frobenius_int(&gens(&[7, 1, 9])), -1);
        assert_eq!(frobenius_int(&gens(&[4, 6])), 2);
        assert_eq!(frobenius_int(&gens(&[6])), -6);
    }

    #[test]
    fn membership() {
        let g = gens(&[5, 6, 7]);
        assert!(!is_member(&g, 9));
        assert!(is_member(&g, 10));
        assert!(is_member(&g, 0));
        assert!(!is_member(&gens(&[5, 7]), 23));
        assert!(!is_member(&gens(&[4, 6]), 9));
        assert!(is_member(&gens(&[4, 6]), 10));
        assert!(!is_member(&g, -5));
    }

    #[test]
    fn apery_tables() {
        let g = gens(&[5, 6, 7]);
        let t = apery_table(&g, 5);
        assert_eq!(t.minima, vec![Some(0), Some(6), Some(7), Some(13), Some(14)]);
        let t = apery_table(&gens(&[5, 7]), 5);
        assert_eq!(t.minima, vec![Some(0), Some(21), Some(7), Some(28), Some(14)]);
        let t = apery_table(&gens(&[4]), 4);
        assert_eq!(t.minima, vec![Some(0), None, None, None]);
    }

    #[test]
    fn base_outside_generators_matches_round_robin() {
        let g = gens(&[5, 6, 7]);
        let t = apery_table(&g, 4);
        for (j, m) in t.minima.iter().enumerate() {
            let m = m.unwrap();
            assert_eq!(m % 4, j as u64);
            assert!(is_member(&g, m as i128));
            let mut below = m as i128 - 4;
            while below >= 0 {
                assert!(!is_member(&g, below));
                below -= 4;
            }
        }
    }

    #[test]
    fn cached_semigroup_agrees() {
        let s = Semigroup::new(gens(&[6, 10, 15]));
        assert_eq!(s.frobenius(), frobenius_int(s.generators()));
        assert_eq!(s.frobenius(), 29);
    }
}
