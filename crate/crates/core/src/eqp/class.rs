//! Residue classes of the parameter and piecewise assembly.

use num_integer::Integer;

/// The arithmetic progression `t ≡ residue (mod modulus)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueClass {
    pub modulus: u64,
    pub residue: u64,
}

impl ResidueClass {
    pub fn new(modulus: u64, residue: u64) -> Self {
        assert!(modulus > 0, "residue class modulus must be positive");
        ResidueClass {
            modulus,
            residue: residue % modulus,
        }
    }

    /// All integers.
    pub fn whole() -> Self {
        ResidueClass::new(1, 0)
    }

    pub fn contains(&self, t: i64) -> bool {
        t.rem_euclid(self.modulus as i64) as u64 == self.residue
    }

    /// The `factor` subclasses modulo `modulus * factor`.
    pub fn refine(&self, factor: u64) -> impl Iterator<Item = ResidueClass> + '_ {
        let m = self.modulus * factor;
        (0..factor).map(move |i| ResidueClass::new(m, self.residue + self.modulus * i))
    }

    /// The subclasses modulo `new_modulus`, which must be a multiple of the
    /// current modulus.
    pub fn refine_to(&self, new_modulus: u64) -> impl Iterator<Item = ResidueClass> + '_ {
        debug_assert_eq!(new_modulus % self.modulus, 0);
        self.refine(new_modulus / self.modulus)
    }

    /// Maps a class of the local variable `s`, where `t = modulus*s + residue`,
    /// to the corresponding class of `t`.
    pub fn compose(&self, inner: ResidueClass) -> ResidueClass {
        ResidueClass::new(
            self.modulus * inner.modulus,
            self.residue + self.modulus * inner.residue,
        )
    }

    /// Smallest member of the class that is `>= t`.
    pub fn first_at_or_above(&self, t: i64) -> i64 {
        let m = self.modulus as i64;
        let r = self.residue as i64;
        t + (r - t).rem_euclid(m)
    }

    /// Smallest local index `s` with `modulus*s + residue >= t`, clamped at 0.
    pub fn local_threshold(&self, t: i64) -> i64 {
        let m = self.modulus as i64;
        let r = self.residue as i64;
        Integer::div_ceil(&(t - r), &m).max(0)
    }

    /// Smallest `t` such that every member `t' >= t` of the class has local
    /// index `>= s0`.
    pub fn global_threshold(&self, s0: i64) -> i64 {
        let m = self.modulus as i64;
        let r = self.residue as i64;
        (m * s0 + r - m + 1).max(0)
    }
}

pub(crate) fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Fills a dense residue table of period `lcm(moduli)` from pieces that
/// partition the integers.
pub(crate) fn fill_table<T: Clone>(pieces: &[(ResidueClass, T)]) -> Option<(u64, Vec<T>)> {
    let period = pieces.iter().fold(1, |acc, (c, _)| lcm_u64(acc, c.modulus));
    let mut table: Vec<Option<T>> = vec![None; period as usize];
    for (class, value) in pieces {
        let mut r = class.residue;
        while r < period {
            if table[r as usize].is_some() {
                return None;
            }
            table[r as usize] = Some(value.clone());
            r += class.modulus;
        }
    }
    let table: Option<Vec<T>> = table.into_iter().collect();
    table.map(|t| (period, t))
}
