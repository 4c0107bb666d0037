//! Cofinite integer sets: the carrier for semigroups, relative ideals and
//! their sumsets.
//!
//! A [`CofiniteSet`] stores a least member `lo`, a threshold `T` past which
//! every integer is a member, and a packed bit window over `[lo, T)`. The
//! representation is normalized on construction (`lo` is the least member,
//! `T` is as small as possible), but equality is always decided by membership.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

const WORD: i64 = 64;

#[derive(Clone)]
pub struct CofiniteSet {
    lo: i64,
    threshold: i64,
    /// bit `k` is position `lo + k`; bits at or beyond `threshold - lo` are zero
    words: Vec<u64>,
}

fn words_for(len: i64) -> usize {
    ((len.max(0) + WORD - 1) / WORD) as usize
}

/// Growable bit window anchored at `base`, used while assembling a set.
struct Window {
    base: i64,
    len: i64,
    words: Vec<u64>,
}

impl Window {
    fn new(base: i64, end: i64) -> Self {
        let len = (end - base).max(0);
        Window {
            base,
            len,
            words: vec![0; words_for(len)],
        }
    }

    fn set(&mut self, z: i64) {
        let k = z - self.base;
        debug_assert!(k >= 0 && k < self.len);
        self.words[(k / WORD) as usize] |= 1u64 << (k % WORD);
    }

    /// ORs `bits` into positions `z..z+64`, silently dropping anything outside the window.
    fn or_at(&mut self, z: i64, bits: u64) {
        let k = z - self.base;
        if bits == 0 || k >= self.len || k <= -WORD {
            return;
        }
        if k < 0 {
            self.or_at(self.base, bits >> (-k));
            return;
        }
        let w = (k / WORD) as usize;
        let b = k % WORD;
        self.words[w] |= bits << b;
        if b > 0 && w + 1 < self.words.len() {
            self.words[w + 1] |= bits >> (WORD - b);
        }
    }

    fn finish(mut self) -> CofiniteSet {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
        CofiniteSet {
            lo: self.base,
            threshold: self.base + self.len,
            words: self.words,
        }
        .normalized()
    }
}

impl CofiniteSet {
    /// The set `[start, ∞)`.
    pub fn from_start(start: i64) -> Self {
        CofiniteSet {
            lo: start,
            threshold: start,
            words: Vec::new(),
        }
    }

    /// Members of `[lo, threshold)` are those satisfying `pred`; everything at
    /// or above `threshold` is a member.
    pub fn from_fn(lo: i64, threshold: i64, pred: impl Fn(i64) -> bool) -> Self {
        let threshold = threshold.max(lo);
        let mut win = Window::new(lo, threshold);
        for z in lo..threshold {
            if pred(z) {
                win.set(z);
            }
        }
        win.finish()
    }

    /// The given finite members together with every integer `>= threshold`.
    pub fn from_members(members: impl IntoIterator<Item = i64>, threshold: i64) -> Self {
        let below: Vec<i64> = members.into_iter().filter(|&z| z < threshold).collect();
        let lo = below.iter().copied().min().unwrap_or(threshold);
        let mut win = Window::new(lo, threshold);
        for z in below {
            win.set(z);
        }
        win.finish()
    }

    fn normalized(mut self) -> Self {
        // tighten threshold
        while self.threshold > self.lo && self.raw_get(self.threshold - 1 - self.lo) {
            self.threshold -= 1;
        }
        // advance lo to the least member
        let len = self.threshold - self.lo;
        let mut first = len;
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                first = i as i64 * WORD + i64::from(w.trailing_zeros());
                break;
            }
        }
        let first = first.min(len);
        if first > 0 {
            let new_lo = self.lo + first;
            let new_len = self.threshold - new_lo;
            let mut win = Window::new(new_lo, self.threshold);
            let mut s = new_lo;
            while s < self.threshold {
                win.or_at(s, self.chunk(s));
                s += WORD;
            }
            // re-mask only; tail ones from chunk() lie past the window
            let rem = new_len % WORD;
            if rem != 0 {
                if let Some(last) = win.words.last_mut() {
                    *last &= (1u64 << rem) - 1;
                }
            }
            self.lo = new_lo;
            self.words = win.words;
        }
        self.words.truncate(words_for(self.threshold - self.lo));
        self
    }

    fn raw_get(&self, k: i64) -> bool {
        k >= 0
            && k < self.threshold - self.lo
            && (self.words[(k / WORD) as usize] >> (k % WORD)) & 1 == 1
    }

    /// Raw stored bits at offsets `k..k+64` (zero outside the window), `k > -64`.
    fn raw_bits(&self, k: i64) -> u64 {
        if k <= -WORD {
            return 0;
        }
        if k < 0 {
            return self.raw_bits(0) << (-k);
        }
        let w = (k / WORD) as usize;
        let b = k % WORD;
        let low = self.words.get(w).copied().unwrap_or(0);
        if b == 0 {
            return low;
        }
        let high = self.words.get(w + 1).copied().unwrap_or(0);
        (low >> b) | (high << (WORD - b))
    }

    /// Membership bits for `start..start+64`, bit `i` set iff `start + i` is a member.
    pub fn chunk(&self, start: i64) -> u64 {
        if start >= self.threshold {
            return !0;
        }
        if start + WORD <= self.lo {
            return 0;
        }
        let k = start - self.lo;
        let raw = self.raw_bits(k);
        let tail_from = self.threshold - start;
        if tail_from >= WORD {
            raw
        } else {
            raw | (!0u64 << tail_from)
        }
    }

    pub fn contains(&self, z: i64) -> bool {
        if z >= self.threshold {
            true
        } else {
            self.raw_get(z - self.lo)
        }
    }

    /// Least member.
    pub fn min(&self) -> i64 {
        self.lo
    }

    /// Least `T` with `[T, ∞)` contained in the set.
    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    /// Members strictly below the threshold, ascending.
    pub fn finite_members(&self) -> impl Iterator<Item = i64> + '_ {
        (self.lo..self.threshold).filter(move |&z| self.raw_get(z - self.lo))
    }

    /// Members in `[lo, bound)`, ascending.
    pub fn members_below(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (self.lo..bound).filter(move |&z| self.contains(z))
    }

    /// Minkowski sum `{x + y}`.
    pub fn sum(&self, other: &CofiniteSet) -> CofiniteSet {
        let lo = self.lo + other.lo;
        let threshold = (self.threshold + other.lo).min(other.threshold + self.lo);
        let mut win = Window::new(lo, threshold);
        let (small, big) = if self.threshold - self.lo <= other.threshold - other.lo {
            (self, other)
        } else {
            (other, self)
        };
        for x in small.finite_members() {
            let mut s = big.lo;
            while x + s < threshold {
                win.or_at(x + s, big.chunk(s));
                s += WORD;
            }
        }
        win.finish()
    }

    /// `k`-fold sumset of `self` (`k >= 1`).
    pub fn multiple(&self, k: u32) -> CofiniteSet {
        assert!(k >= 1, "multiple requires k >= 1");
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.sum(self);
        }
        acc
    }

    /// `x + self`.
    pub fn translate(&self, x: i64) -> CofiniteSet {
        CofiniteSet {
            lo: self.lo + x,
            threshold: self.threshold + x,
            words: self.words.clone(),
        }
    }

    /// True iff `x + self ⊆ other`.
    fn shifted_subset(&self, x: i64, other: &CofiniteSet) -> bool {
        let mut s = self.lo;
        while s + x < other.threshold {
            if self.chunk(s) & !other.chunk(s + x) != 0 {
                return false;
            }
            s += WORD;
        }
        true
    }

    pub fn is_subset(&self, other: &CofiniteSet) -> bool {
        self.shifted_subset(0, other)
    }

    /// Colon `(self − other) = {z : z + other ⊆ self}`.
    pub fn colon(&self, other: &CofiniteSet) -> CofiniteSet {
        let lo = self.lo - other.lo;
        let hi = self.threshold - other.lo;
        CofiniteSet::from_fn(lo, hi, |z| other.shifted_subset(z, self))
    }

    pub fn union(&self, other: &CofiniteSet) -> CofiniteSet {
        let lo = self.lo.min(other.lo);
        let threshold = self.threshold.min(other.threshold);
        let mut win = Window::new(lo, threshold);
        let mut s = lo;
        while s < threshold {
            win.or_at(s, self.chunk(s) | other.chunk(s));
            s += WORD;
        }
        win.finish()
    }

    pub fn intersection(&self, other: &CofiniteSet) -> CofiniteSet {
        let lo = self.lo.max(other.lo);
        let threshold = self.threshold.max(other.threshold);
        let mut win = Window::new(lo, threshold);
        let mut s = lo;
        while s < threshold {
            win.or_at(s, self.chunk(s) & other.chunk(s));
            s += WORD;
        }
        win.finish()
    }

    /// The finite set `self ∖ other`, ascending.
    pub fn difference(&self, other: &CofiniteSet) -> Vec<i64> {
        (self.lo..other.threshold)
            .filter(|&z| self.contains(z) && !other.contains(z))
            .collect()
    }

    /// `|self ∖ other|`.
    pub fn difference_len(&self, other: &CofiniteSet) -> usize {
        let mut count = 0usize;
        let mut s = self.lo;
        while s < other.threshold {
            let mut bits = self.chunk(s) & !other.chunk(s);
            let span = other.threshold - s;
            if span < WORD {
                bits &= (1u64 << span) - 1;
            }
            count += bits.count_ones() as usize;
            s += WORD;
        }
        count
    }
}

impl PartialEq for CofiniteSet {
    fn eq(&self, other: &Self) -> bool {
        self.is_subset(other) && other.is_subset(self)
    }
}

impl Eq for CofiniteSet {}

impl fmt::Debug for CofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CofiniteSet({self})")
    }
}

impl fmt::Display for CofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let finite: Vec<String> = self.finite_members().map(|z| z.to_string()).collect();
        if finite.is_empty() {
            write!(f, "[{},∞)", self.threshold)
        } else {
            write!(f, "{{{}}} ∪ [{},∞)", finite.join(","), self.threshold)
        }
    }
}

impl Serialize for CofiniteSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let members: Vec<i64> = self.finite_members().collect();
        let mut st = serializer.serialize_struct("CofiniteSet", 3)?;
        st.serialize_field("lo", &self.lo)?;
        st.serialize_field("threshold", &self.threshold)?;
        st.serialize_field("members", &members)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct CofiniteSetRepr {
    #[allow(dead_code)]
    lo: i64,
    threshold: i64,
    members: Vec<i64>,
}

impl<'de> Deserialize<'de> for CofiniteSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CofiniteSetRepr::deserialize(deserializer)?;
        Ok(CofiniteSet::from_members(repr.members, repr.threshold))
    }
}
