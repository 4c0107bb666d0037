//! Relative ideals over a numerical semigroup and the monomial slice of the
//! canonical-ideal theory: the normalized canonical ideal `K₀`, its trace,
//! the family of translates `x + K₀` contained in `Γ`, colengths, and the
//! canonical index.
//!
//! Exponent sets stand in for monomial ideals of `k[[t^Γ]]`: products become
//! Minkowski sums, colon ideals become `E − F = {z : z + F ⊆ E}`, lengths of
//! `R/I` become gap counts `|Γ ∖ E|`, and multiplication by `t^x` becomes
//! translation by `x`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cofinite::CofiniteSet;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Exponent of a monomial `t^value`.
pub type Exponent = i64;

/// A cofinite set `E` with `E + Γ ⊆ E`.
#[derive(Clone)]
pub struct RelativeIdeal<'a> {
    set: CofiniteSet,
    base: &'a NumericalSemigroup,
}

fn same_base(a: &NumericalSemigroup, b: &NumericalSemigroup) -> bool {
    std::ptr::eq(a, b) || a.generators() == b.generators()
}

impl<'a> RelativeIdeal<'a> {
    /// Wraps `set`, checking closure under addition of every generator.
    pub fn new(base: &'a NumericalSemigroup, set: CofiniteSet) -> Result<Self> {
        let closed = base
            .generators()
            .iter()
            .all(|&a| set.translate(Exponent::from(a)).is_subset(&set));
        if closed {
            Ok(RelativeIdeal { set, base })
        } else {
            Err(Error::NotAnIdeal)
        }
    }

    fn wrap(base: &'a NumericalSemigroup, set: CofiniteSet) -> Self {
        RelativeIdeal { set, base }
    }

    /// `Γ` itself, the unit ideal.
    pub fn unit(base: &'a NumericalSemigroup) -> Self {
        Self::wrap(base, base.as_set().clone())
    }

    /// `M = Γ ∖ {0}`.
    pub fn maximal(base: &'a NumericalSemigroup) -> Self {
        Self::wrap(base, base.maximal_ideal())
    }

    /// `x + Γ`.
    pub fn principal(base: &'a NumericalSemigroup, x: Exponent) -> Self {
        Self::wrap(base, base.as_set().translate(x))
    }

    /// `⋃ (xᵢ + Γ)`; `None` for an empty generator list.
    pub fn generated_by(base: &'a NumericalSemigroup, gens: &[Exponent]) -> Option<Self> {
        let mut iter = gens.iter();
        let first = *iter.next()?;
        let mut set = base.as_set().translate(first);
        for &x in iter {
            set = set.union(&base.as_set().translate(x));
        }
        Some(Self::wrap(base, set))
    }

    pub fn base(&self) -> &'a NumericalSemigroup {
        self.base
    }

    pub fn set(&self) -> &CofiniteSet {
        &self.set
    }

    pub fn into_set(self) -> CofiniteSet {
        self.set
    }

    /// Least element `m(E)`.
    pub fn min(&self) -> Exponent {
        self.set.min()
    }

    pub fn contains(&self, z: Exponent) -> bool {
        self.set.contains(z)
    }

    pub fn is_subset(&self, other: &RelativeIdeal<'_>) -> bool {
        self.set.is_subset(&other.set)
    }

    fn check_base(&self, other: &RelativeIdeal<'_>) -> Result<()> {
        if same_base(self.base, other.base) {
            Ok(())
        } else {
            Err(Error::BaseMismatch)
        }
    }

    /// Product of monomial ideals: `E + F`.
    pub fn sum(&self, other: &RelativeIdeal<'_>) -> Result<Self> {
        self.check_base(other)?;
        Ok(Self::wrap(self.base, self.set.sum(&other.set)))
    }

    /// `(E − F) = {z : z + F ⊆ E}`.
    pub fn colon(&self, other: &RelativeIdeal<'_>) -> Result<Self> {
        self.check_base(other)?;
        Ok(Self::wrap(self.base, self.set.colon(&other.set)))
    }

    pub fn intersection(&self, other: &RelativeIdeal<'_>) -> Result<Self> {
        self.check_base(other)?;
        Ok(Self::wrap(self.base, self.set.intersection(&other.set)))
    }

    /// `x + E`.
    pub fn translate(&self, x: Exponent) -> Self {
        Self::wrap(self.base, self.set.translate(x))
    }

    /// `k`-fold sumset `k·E`, `k ≥ 1`.
    pub fn multiple(&self, k: u32) -> Self {
        Self::wrap(self.base, self.set.multiple(k))
    }

    /// Minimal generators `E ∖ (E + M)`, ascending.
    pub fn minimal_generators(&self) -> Vec<Exponent> {
        let shifted = self.set.sum(&self.base.maximal_ideal());
        self.set.difference(&shifted)
    }

    /// Minimal number of generators `μ(E) = |E ∖ (E + M)|`.
    pub fn mu(&self) -> usize {
        let shifted = self.set.sum(&self.base.maximal_ideal());
        self.set.difference_len(&shifted)
    }

    /// Cohen-Macaulay type `|(E − M) ∖ E|`.
    pub fn ideal_type(&self) -> Result<usize> {
        if self.base.is_natural() {
            return Err(Error::RegularRing);
        }
        let socle = self.set.colon(&self.base.maximal_ideal());
        Ok(socle.difference_len(&self.set))
    }

    /// `|Γ ∖ E|` for `E ⊆ Γ`.
    pub fn colength(&self) -> Result<usize> {
        let gamma = self.base.as_set();
        if !self.set.is_subset(gamma) {
            return Err(Error::NotContained);
        }
        Ok(gamma.difference_len(&self.set))
    }

    /// True iff `E ⊆ M` is a reduction of `M`, decided by sumset iteration and
    /// by the valuation shortcut `m(E) = e`; the two must agree.
    pub fn is_reduction_of_m(&self) -> Result<bool> {
        let by_sumsets = self.is_reduction_of_m_by_sumsets()?;
        let by_valuation = self.min() == Exponent::from(self.base.multiplicity());
        if by_sumsets != by_valuation {
            return Err(Error::InternalDisagreement {
                what: "reduction of the maximal ideal".into(),
                detail: format!(
                    "E = {} over {}: sumsets say {by_sumsets}, valuation says {by_valuation}",
                    self.set, self.base
                ),
            });
        }
        Ok(by_sumsets)
    }

    /// Searches for `r ≤ c + e` with `(r+1)·M = E + r·M`.
    pub fn is_reduction_of_m_by_sumsets(&self) -> Result<bool> {
        if self.base.is_natural() {
            return Err(Error::RegularRing);
        }
        let m = self.base.maximal_ideal();
        if !self.set.is_subset(&m) {
            return Err(Error::NotContained);
        }
        let cap = self.base.conductor() + Exponent::from(self.base.multiplicity());
        let mut power = m.clone();
        for _ in 1..=cap {
            let next = power.sum(&m);
            if next == self.set.sum(&power) {
                return Ok(true);
            }
            power = next;
        }
        Ok(false)
    }
}

impl PartialEq for RelativeIdeal<'_> {
    fn eq(&self, other: &Self) -> bool {
        same_base(self.base, other.base) && self.set == other.set
    }
}

impl fmt::Debug for RelativeIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RelativeIdeal({} over {})", self.set, self.base)
    }
}

impl fmt::Display for RelativeIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.set.fmt(f)
    }
}

/// `K₀ = {z : f − z ∉ Γ}`, the canonical fractional ideal normalized to `min = 0`.
pub fn canonical_ideal(base: &NumericalSemigroup) -> RelativeIdeal<'_> {
    let f = base.frobenius();
    let set = CofiniteSet::from_fn(0, f + 1, |z| !base.contains(f - z));
    RelativeIdeal::wrap(base, set)
}

/// `A₀ = Γ − K₀`: the shifts `x` with `x + K₀ ⊆ Γ`.
pub fn canonical_shifts(base: &NumericalSemigroup) -> RelativeIdeal<'_> {
    let k0 = canonical_ideal(base);
    RelativeIdeal::wrap(base, base.as_set().colon(k0.set()))
}

/// Trace of the canonical module, `K₀ + (Γ − K₀)`.
pub fn trace(base: &NumericalSemigroup) -> RelativeIdeal<'_> {
    let k0 = canonical_ideal(base);
    let shifts = base.as_set().colon(k0.set());
    RelativeIdeal::wrap(base, k0.set().sum(&shifts))
}

/// Least `n ≥ 1` with `(n+1)·K₀ = n·K₀`.
pub fn canonical_index(base: &NumericalSemigroup) -> Result<u32> {
    let k0 = canonical_ideal(base);
    let cap = base.conductor() + Exponent::from(base.multiplicity());
    let mut power = k0.set().clone();
    for n in 1..=cap {
        let next = power.sum(k0.set());
        if next == power {
            return Ok(n as u32);
        }
        power = next;
    }
    Err(Error::Internal(format!(
        "powers of the canonical ideal of {base} did not stabilize within {cap} steps"
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftColength {
    pub shift: Exponent,
    pub colength: usize,
}

/// The canonical ideals `x + K₀ ⊆ Γ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialCanonicalFamily {
    /// `A₀ = Γ − K₀`
    pub shifts: CofiniteSet,
    /// Minimal elements of `A₀` under `x ≤ y ⟺ y − x ∈ Γ`; these give the
    /// inclusion-maximal members of the family.
    pub maximal_shifts: Vec<Exponent>,
    /// `|Γ ∖ (x + K₀)|` for every shift `x ≤ max(maximal_shifts) + max(c, 1)`.
    pub colengths: Vec<ShiftColength>,
}

impl MonomialCanonicalFamily {
    pub fn colength_of(&self, shift: Exponent) -> Option<usize> {
        self.colengths
            .iter()
            .find(|sc| sc.shift == shift)
            .map(|sc| sc.colength)
    }

    /// Least colength over proper members (`x > 0`).
    pub fn min_proper_colength(&self) -> usize {
        self.colengths
            .iter()
            .filter(|sc| sc.shift > 0)
            .map(|sc| sc.colength)
            .min()
            .expect("the family always has a positive shift below the reporting bound")
    }
}

pub fn canonical_family(base: &NumericalSemigroup) -> MonomialCanonicalFamily {
    let k0 = canonical_ideal(base);
    let shifts = canonical_shifts(base);
    let maximal_shifts = shifts.minimal_generators();
    let bound = maximal_shifts.last().copied().unwrap_or(0) + base.conductor().max(1);
    let gamma = base.as_set();
    let colengths = shifts
        .set()
        .members_below(bound + 1)
        .map(|x| ShiftColength {
            shift: x,
            colength: gamma.difference_len(&k0.set().translate(x)),
        })
        .collect();
    MonomialCanonicalFamily {
        shifts: shifts.into_set(),
        maximal_shifts,
        colengths,
    }
}

/// Every relative ideal `J` with `lower ⊆ J ⊆ upper`, in a fixed order, stopping
/// after `cap` ideals. The flag is true when the enumeration was complete.
pub fn ideals_between<'a>(
    lower: &RelativeIdeal<'a>,
    upper: &RelativeIdeal<'a>,
    cap: usize,
) -> Result<(Vec<RelativeIdeal<'a>>, bool)> {
    lower.check_base(upper)?;
    if !lower.is_subset(upper) {
        return Err(Error::NotContained);
    }
    let base = lower.base;
    let free = upper.set.difference(&lower.set);
    let mut out = Vec::new();
    let mut include = Vec::with_capacity(free.len());
    let complete = extend_ideals(base, &lower.set, &free, &mut include, &mut out, cap);
    Ok((out, complete))
}

/// Decides membership of `free[include.len()]`; an element is forced in when it
/// lies above an already included one in the `Γ`-order.
fn extend_ideals<'a>(
    base: &'a NumericalSemigroup,
    lower: &CofiniteSet,
    free: &[Exponent],
    include: &mut Vec<bool>,
    out: &mut Vec<RelativeIdeal<'a>>,
    cap: usize,
) -> bool {
    if out.len() >= cap {
        return false;
    }
    let i = include.len();
    if i == free.len() {
        let extra = free.iter().zip(include.iter()).filter(|(_, &inc)| inc).map(|(&z, _)| z);
        let set = lower.union(&CofiniteSet::from_members(extra, lower.threshold()));
        out.push(RelativeIdeal::wrap(base, set));
        return true;
    }
    let z = free[i];
    let forced = (0..i).any(|k| include[k] && base.contains(z - free[k]));
    let mut complete = true;
    let choices: &[bool] = if forced { &[true] } else { &[false, true] };
    for &choice in choices {
        include.push(choice);
        complete &= extend_ideals(base, lower, free, include, out, cap);
        include.pop();
        if !complete {
            break;
        }
    }
    complete
}
