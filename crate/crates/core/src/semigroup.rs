//! Numerical semigroups and their elementary invariants.

use std::fmt;

use crate::cofinite::CofiniteSet;
use crate::error::{Error, Result};

/// Upper limit on the Frobenius bound `(a₁ − 1)(aₙ − 1)` accepted by
/// [`NumericalSemigroup::from_generators`].
pub const MAX_FROBENIUS_BOUND: u64 = 1 << 22;

/// A numerical semigroup `Γ ⊆ ℕ`, stored as a cofinite set with `min = 0`
/// and threshold equal to the conductor.
#[derive(Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    set: CofiniteSet,
    multiplicity: u32,
    gaps: Vec<u32>,
    pf: Vec<i64>,
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`. Redundant generators are dropped.
    pub fn from_generators(gens: &[u32]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::GcdNotOne { gcd: g });
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let e = sorted[0] as usize;
        let bound = u64::from(sorted[0] - 1) * u64::from(sorted[sorted.len() - 1] - 1);
        if bound > MAX_FROBENIUS_BOUND {
            return Err(Error::TooLarge {
                bound,
                limit: MAX_FROBENIUS_BOUND,
            });
        }

        // Closure until the first run of e consecutive members.
        let mut member: Vec<bool> = Vec::new();
        let mut run = 0usize;
        let mut n = 0usize;
        let conductor = loop {
            let m = n == 0
                || sorted
                    .iter()
                    .any(|&a| (a as usize) <= n && member[n - a as usize]);
            member.push(m);
            run = if m { run + 1 } else { 0 };
            if run == e {
                break n + 1 - e;
            }
            n += 1;
        };
        let set = CofiniteSet::from_fn(0, conductor as i64, |z| member[z as usize]);
        Ok(Self::from_set(set))
    }

    /// The semigroup whose gap set is `gaps`.
    pub fn from_gaps(gaps: &[u32]) -> Result<Self> {
        let invalid = || Error::InvalidGapSet {
            gaps: gaps.to_vec(),
        };
        if gaps.contains(&0) {
            return Err(invalid());
        }
        let conductor = gaps.iter().copied().max().map_or(0, |f| f as i64 + 1);
        let set = CofiniteSet::from_fn(0, conductor, |z| !gaps.contains(&(z as u32)));
        let members: Vec<i64> = set.members_below(conductor).filter(|&z| z > 0).collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i..] {
                if !set.contains(x + y) {
                    return Err(invalid());
                }
            }
        }
        Ok(Self::from_set(set))
    }

    /// `ℕ`, the semigroup of the regular ring `k[[t]]`.
    pub fn natural() -> Self {
        Self::from_set(CofiniteSet::from_start(0))
    }

    /// `set` must be a numerical semigroup (contains 0, additively closed, cofinite).
    pub(crate) fn from_set(set: CofiniteSet) -> Self {
        debug_assert_eq!(set.min(), 0);
        let c = set.threshold();
        let multiplicity = (1..).find(|&z| set.contains(z)).unwrap() as u32;
        let e = i64::from(multiplicity);
        let gaps: Vec<u32> = (1..c).filter(|&z| !set.contains(z)).map(|z| z as u32).collect();
        let positive: Vec<i64> = set.members_below(c.max(1) + e).filter(|&z| z > 0).collect();
        let generators: Vec<u32> = positive
            .iter()
            .copied()
            .filter(|&z| {
                !positive
                    .iter()
                    .take_while(|&&a| 2 * a <= z)
                    .any(|&a| set.contains(z - a))
            })
            .map(|z| z as u32)
            .collect();
        let pf = if gaps.is_empty() {
            vec![-1]
        } else {
            gaps.iter()
                .map(|&z| i64::from(z))
                .filter(|&z| generators.iter().all(|&a| set.contains(z + i64::from(a))))
                .collect()
        };
        NumericalSemigroup {
            generators,
            set,
            multiplicity,
            gaps,
            pf,
        }
    }

    /// Minimal generating set, ascending.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Largest gap, `-1` for `ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.set.threshold() - 1
    }

    pub fn conductor(&self) -> i64 {
        self.set.threshold()
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn genus(&self) -> u32 {
        self.gaps.len() as u32
    }

    pub fn is_natural(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn contains(&self, z: i64) -> bool {
        self.set.contains(z)
    }

    /// `Γ` as a cofinite set.
    pub fn as_set(&self) -> &CofiniteSet {
        &self.set
    }

    /// `M = Γ ∖ {0}`.
    pub fn maximal_ideal(&self) -> CofiniteSet {
        let c = self.conductor();
        let set = &self.set;
        CofiniteSet::from_fn(1, c.max(1), |z| set.contains(z))
    }

    /// Least member of `Γ` in each residue class mod `n`, ordered by residue.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::NotAMember { value: n });
        }
        Ok((0..n)
            .map(|r| {
                let mut w = r;
                while !self.contains(w) {
                    w += n;
                }
                w
            })
            .collect())
    }

    /// Pseudo-Frobenius numbers; `{-1}` for `ℕ` so the type is 1.
    pub fn pseudo_frobenius(&self) -> &[i64] {
        &self.pf
    }

    /// Cohen-Macaulay type `t = |PF(Γ)|`.
    pub fn cm_type(&self) -> usize {
        self.pf.len()
    }

    pub fn is_symmetric(&self) -> bool {
        2 * i64::from(self.genus()) == self.frobenius() + 1
    }

    /// Least `r ≥ 1` with `(r+1)·M = e + r·M`.
    pub fn reduction_number_m(&self) -> Result<u32> {
        if self.is_natural() {
            return Err(Error::RegularRing);
        }
        let m = self.maximal_ideal();
        let e = i64::from(self.multiplicity);
        let cap = self.conductor() + e;
        let mut level = m.clone();
        for r in 1..=cap {
            let next = level.sum(&m);
            if next == level.translate(e) {
                return Ok(r as u32);
            }
            level = next;
        }
        Err(Error::Internal(format!(
            "maximal-ideal sumsets of {self} did not stabilize within {cap} steps"
        )))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "⟨{}⟩", gens.join(","))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}
