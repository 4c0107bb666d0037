//! Slow, direct reference computations on `BTreeSet`s, independent of the
//! bit-window representation used by the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// `members ∪ [tail, ∞)`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cof {
    pub members: BTreeSet<i64>,
    pub tail: i64,
}

impl Cof {
    pub fn new(members: impl IntoIterator<Item = i64>, tail: i64) -> Self {
        let members = members.into_iter().filter(|&z| z < tail).collect();
        Cof { members, tail }.tidy()
    }

    fn tidy(mut self) -> Self {
        while self.members.remove(&(self.tail - 1)) {
            self.tail -= 1;
        }
        self
    }

    pub fn contains(&self, z: i64) -> bool {
        z >= self.tail || self.members.contains(&z)
    }

    pub fn min(&self) -> i64 {
        self.members.first().copied().unwrap_or(self.tail)
    }

    /// Members below `bound`, including tail members.
    pub fn below(&self, bound: i64) -> Vec<i64> {
        (self.min()..bound).filter(|&z| self.contains(z)).collect()
    }

    pub fn sum(&self, other: &Cof) -> Cof {
        let tail = (self.min() + other.tail).min(other.min() + self.tail);
        let mut members = BTreeSet::new();
        for a in self.below(tail - other.min()) {
            for b in other.below(tail - a) {
                members.insert(a + b);
            }
        }
        Cof::new(members, tail)
    }

    pub fn multiple(&self, k: u32) -> Cof {
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.sum(self);
        }
        acc
    }

    pub fn shift(&self, x: i64) -> Cof {
        Cof::new(self.members.iter().map(|z| z + x), self.tail + x)
    }

    /// `{z : z + other ⊆ self}`
    pub fn colon(&self, other: &Cof) -> Cof {
        let fits = |z: i64| other.below(self.tail - z).iter().all(|&y| self.contains(z + y));
        let start = self.min() - other.min();
        let tail = self.tail - other.min();
        Cof::new((start..tail).filter(|&z| fits(z)), tail)
    }

    pub fn subset(&self, other: &Cof) -> bool {
        self.below(self.tail.max(other.tail)).iter().all(|&z| other.contains(z))
    }

    /// `|self ∖ other|` for `other ⊆ self`
    pub fn gap_count(&self, other: &Cof) -> usize {
        self.below(other.tail).into_iter().filter(|&z| !other.contains(z)).count()
    }

    /// `|E ∖ (E + M)|`
    pub fn mu(&self, m: &Cof) -> usize {
        self.gap_count(&self.sum(m))
    }
}

pub struct Sg {
    pub gens: Vec<u32>,
    pub set: Cof,
}

impl Sg {
    /// Closure of `gens` computed by dynamic programming up to a safe bound.
    pub fn new(gens: &[u32]) -> Sg {
        let a = *gens.iter().min().unwrap() as usize;
        let b = *gens.iter().max().unwrap() as usize;
        let bound = (a.max(2) - 1) * (b.max(2) - 1) + 2 * b + 2;
        let mut reach = vec![false; bound];
        reach[0] = true;
        for z in 1..bound {
            reach[z] = gens.iter().any(|&g| g as usize <= z && reach[z - g as usize]);
        }
        let members = (0..bound as i64).filter(|&z| reach[z as usize]);
        Sg {
            gens: gens.to_vec(),
            set: Cof::new(members, bound as i64),
        }
    }

    pub fn frobenius(&self) -> i64 {
        self.set.tail - 1
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..self.set.tail).filter(|&z| !self.set.contains(z)).collect()
    }

    pub fn multiplicity(&self) -> i64 {
        (1..).find(|&z| self.set.contains(z)).unwrap()
    }

    pub fn maximal(&self) -> Cof {
        let mut m = self.set.clone();
        m.members.remove(&0);
        if m.tail == 0 {
            m = Cof::new([], 1);
        }
        m
    }

    /// `{z : f − z ∉ Γ}`
    pub fn k0(&self) -> Cof {
        let f = self.frobenius();
        Cof::new((0..=f.max(0)).filter(|&z| !self.set.contains(f - z)), f + 1)
    }

    pub fn pf(&self) -> Vec<i64> {
        let m = self.maximal();
        self.gaps()
            .into_iter()
            .filter(|&z| m.below(self.set.tail + 1).iter().all(|&y| self.set.contains(z + y)))
            .collect()
    }

    pub fn cm_type(&self) -> usize {
        self.pf().len().max(1)
    }

    pub fn symmetric(&self) -> bool {
        2 * self.gaps().len() as i64 == self.frobenius() + 1
    }

    pub fn almost_gorenstein(&self) -> bool {
        let m = self.maximal();
        m.sum(&self.k0()).subset(&m)
    }

    pub fn trace(&self) -> Cof {
        let k = self.k0();
        k.sum(&self.set.colon(&k))
    }

    pub fn nearly_gorenstein(&self) -> bool {
        self.maximal().subset(&self.trace())
    }

    /// `e + f − α ∈ Γ` for every gap `α`
    pub fn canonical_reduction(&self) -> bool {
        let e = self.multiplicity();
        let f = self.frobenius();
        self.gaps().iter().all(|&a| self.set.contains(e + f - a))
    }

    pub fn minimal_multiplicity(&self) -> bool {
        self.gens_minimal().len() as i64 == self.multiplicity()
    }

    pub fn gens_minimal(&self) -> Vec<i64> {
        let m = self.maximal();
        let m2 = m.sum(&m);
        m.below(self.set.tail + self.multiplicity() + 1)
            .into_iter()
            .filter(|&z| !m2.contains(z))
            .collect()
    }

    pub fn canonical_index(&self) -> u32 {
        let k = self.k0();
        let mut n = 1;
        loop {
            if k.multiple(n + 1) == k.multiple(n) {
                return n;
            }
            n += 1;
        }
    }

    pub fn two_agl(&self) -> bool {
        let k = self.k0();
        self.canonical_index() == 2 && k.sum(&k).gap_count(&k) == 2
    }

    /// Least `|Γ ∖ (x + K₀)|` over `x > 0` with `x + K₀ ⊆ Γ`.
    pub fn min_mono_colength(&self) -> usize {
        let k = self.k0();
        (1..=self.set.tail.max(1))
            .map(|x| k.shift(x))
            .filter(|i| i.subset(&self.set))
            .map(|i| self.set.gap_count(&i))
            .min()
            .unwrap()
    }
}
