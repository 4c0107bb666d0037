//! Exhaustive enumeration of numerical semigroups by genus.
//!
//! Every semigroup of genus `g + 1` arises from exactly one semigroup of
//! genus `g` by removing a minimal generator larger than its Frobenius
//! number. Walking that tree depth-first, children ordered by the removed
//! generator, visits each semigroup once in a fixed order.

use rayon::prelude::*;

use crate::cofinite::CofiniteSet;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Largest genus the tree enumerator accepts.
pub const GENUS_CEILING: u32 = 30;
/// Largest genus the subset oracle accepts.
pub const NAIVE_LIMIT: u32 = 12;
/// Subtrees rooted at this genus are the parallel work units.
pub const DEFAULT_SPLIT_GENUS: u32 = 8;

/// A node of the genus tree. Bit `z` of `members` is set iff `z ∈ Γ`; every
/// `z ≥ 128` is a member. With `g ≤ 30`, `f ≤ 59` and every minimal
/// generator is at most `f + e ≤ 90`, so 128 bits always suffice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeNode {
    members: u128,
    frobenius: i32,
    multiplicity: u32,
    genus: u32,
}

impl TreeNode {
    /// `ℕ`
    pub fn root() -> Self {
        TreeNode {
            members: !0,
            frobenius: -1,
            multiplicity: 1,
            genus: 0,
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn frobenius(&self) -> i32 {
        self.frobenius
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    fn contains(&self, z: u32) -> bool {
        z >= 128 || (self.members >> z) & 1 == 1
    }

    /// Minimal generators greater than the Frobenius number, ascending.
    pub fn effective_generators(&self) -> Vec<u32> {
        let lo = (self.frobenius + 1).max(1) as u32;
        (lo..lo + self.multiplicity)
            .filter(|&x| {
                !(self.multiplicity..=x / 2).any(|a| self.contains(a) && self.contains(x - a))
            })
            .collect()
    }

    /// The semigroup with `x` removed; `x` must be an effective generator.
    pub fn child(&self, x: u32) -> TreeNode {
        TreeNode {
            members: self.members & !(1u128 << x),
            frobenius: x as i32,
            multiplicity: if x == self.multiplicity { x + 1 } else { self.multiplicity },
            genus: self.genus + 1,
        }
    }

    pub fn gaps(&self) -> Vec<u32> {
        (1..=self.frobenius.max(0) as u32).filter(|&z| !self.contains(z)).collect()
    }

    pub fn to_semigroup(&self) -> NumericalSemigroup {
        let c = i64::from(self.frobenius) + 1;
        NumericalSemigroup::from_set(CofiniteSet::from_fn(0, c, |z| self.contains(z as u32)))
    }
}

/// Pre-order walk of the genus tree down to a maximum genus.
pub struct Census {
    stack: Vec<TreeNode>,
    g_max: u32,
}

impl Census {
    pub fn new(g_max: u32) -> Result<Self> {
        check_ceiling(g_max)?;
        Ok(Self::below(TreeNode::root(), g_max))
    }

    fn below(node: TreeNode, g_max: u32) -> Self {
        Census {
            stack: vec![node],
            g_max,
        }
    }
}

impl Iterator for Census {
    type Item = TreeNode;

    fn next(&mut self) -> Option<TreeNode> {
        let node = self.stack.pop()?;
        if node.genus < self.g_max {
            for x in node.effective_generators().into_iter().rev() {
                self.stack.push(node.child(x));
            }
        }
        Some(node)
    }
}

fn check_ceiling(g_max: u32) -> Result<()> {
    if g_max > GENUS_CEILING {
        Err(Error::CeilingExceeded {
            requested: g_max,
            ceiling: GENUS_CEILING,
        })
    } else {
        Ok(())
    }
}

/// Visits every semigroup of genus `≤ g_max` once, in tree order; returns counts per genus.
pub fn enumerate_by_genus<F: FnMut(&NumericalSemigroup)>(
    g_max: u32,
    mut visitor: F,
) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; g_max as usize + 1];
    for node in Census::new(g_max)? {
        counts[node.genus as usize] += 1;
        visitor(&node.to_semigroup());
    }
    Ok(counts)
}

/// Semigroups of genus `≤ g_max` satisfying `predicate`, in tree order.
pub fn filtered<P: Fn(&NumericalSemigroup) -> bool>(
    g_max: u32,
    predicate: P,
) -> Result<Vec<NumericalSemigroup>> {
    Ok(Census::new(g_max)?
        .map(|node| node.to_semigroup())
        .filter(|s| predicate(s))
        .collect())
}

enum Task {
    Single(TreeNode),
    Subtree(TreeNode),
}

/// Work units in pre-order: nodes above `split` stand alone, nodes at `split`
/// carry their whole subtree.
fn tasks(g_max: u32, split: u32) -> Vec<Task> {
    let split = split.min(g_max);
    Census::below(TreeNode::root(), split)
        .map(|node| {
            if node.genus == split {
                Task::Subtree(node)
            } else {
                Task::Single(node)
            }
        })
        .collect()
}

/// Semigroup counts per genus, computed in parallel without materializing semigroups.
pub fn count_by_genus(g_max: u32) -> Result<Vec<u64>> {
    check_ceiling(g_max)?;
    let len = g_max as usize + 1;
    let counts = tasks(g_max, DEFAULT_SPLIT_GENUS)
        .par_iter()
        .map(|task| {
            let mut counts = vec![0u64; len];
            match task {
                Task::Single(node) => counts[node.genus as usize] += 1,
                Task::Subtree(node) => {
                    for n in Census::below(*node, g_max) {
                        counts[n.genus as usize] += 1;
                    }
                }
            }
            counts
        })
        .reduce(
            || vec![0u64; len],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(counts)
}

/// Applies `f` to every semigroup of genus `≤ g_max` in parallel; results come
/// back in the same order as the sequential walk.
pub fn par_map<T, F>(g_max: u32, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&NumericalSemigroup) -> T + Sync,
{
    check_ceiling(g_max)?;
    let chunks: Vec<Vec<T>> = tasks(g_max, DEFAULT_SPLIT_GENUS)
        .par_iter()
        .map(|task| match task {
            Task::Single(node) => vec![f(&node.to_semigroup())],
            Task::Subtree(node) => Census::below(*node, g_max)
                .map(|n| f(&n.to_semigroup()))
                .collect(),
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// All semigroups of genus `g`, found by testing every `g`-subset of
/// `[1, 2g − 1]` for complement closure; sorted by gap list.
pub fn naive_enumerate(g: u32) -> Result<Vec<NumericalSemigroup>> {
    if g > NAIVE_LIMIT {
        return Err(Error::OracleTooLarge {
            genus: g,
            limit: NAIVE_LIMIT,
        });
    }
    if g == 0 {
        return Ok(vec![NumericalSemigroup::natural()]);
    }
    let top = 2 * g - 1;
    let mut out = Vec::new();
    let mut subset: Vec<u32> = (1..=g).collect();
    loop {
        if complement_closed(&subset, top) {
            out.push(NumericalSemigroup::from_gaps(&subset)?);
        }
        // next g-subset of [1, top] in lexicographic order
        let k = subset.len();
        let Some(i) = (0..k).rev().find(|&i| subset[i] < top - (k - 1 - i) as u32) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
    Ok(out)
}

fn complement_closed(gaps: &[u32], top: u32) -> bool {
    let mut is_gap = vec![false; top as usize + 1];
    for &a in gaps {
        is_gap[a as usize] = true;
    }
    let members: Vec<u32> = (1..=top).filter(|&z| !is_gap[z as usize]).collect();
    members.iter().all(|&x| {
        members
            .iter()
            .take_while(|&&y| x + y <= top)
            .all(|&y| !is_gap[(x + y) as usize])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(s: &NumericalSemigroup) -> Vec<u32> {
        s.generators().to_vec()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_by_genus(0, |_| {}).unwrap(), vec![1]);
        assert_eq!(enumerate_by_genus(3, |_| {}).unwrap(), vec![1, 1, 2, 4]);
        assert_eq!(count_by_genus(7).unwrap()[7], 39);
    }

    #[test]
    fn naive_examples() {
        let g1: Vec<_> = naive_enumerate(1).unwrap().iter().map(gens).collect();
        assert_eq!(g1, vec![vec![2, 3]]);
        let g2: Vec<_> = naive_enumerate(2).unwrap().iter().map(gens).collect();
        assert_eq!(g2, vec![vec![3, 4, 5], vec![2, 5]]);
        assert_eq!(naive_enumerate(4).unwrap().len(), 7);
        assert_eq!(naive_enumerate(0).unwrap(), vec![NumericalSemigroup::natural()]);
        assert!(matches!(naive_enumerate(13), Err(Error::OracleTooLarge { .. })));
    }

    #[test]
    fn ceiling() {
        assert!(matches!(
            enumerate_by_genus(31, |_| {}),
            Err(Error::CeilingExceeded { requested: 31, ceiling: 30 })
        ));
        assert!(count_by_genus(31).is_err());
    }

    #[test]
    fn tree_order_is_deterministic_and_matches_parallel_map() {
        let mut seq = Vec::new();
        enumerate_by_genus(9, |s| seq.push(gens(s))).unwrap();
        let par = par_map(9, gens).unwrap();
        assert_eq!(seq, par);
        let mut again = Vec::new();
        enumerate_by_genus(9, |s| again.push(gens(s))).unwrap();
        assert_eq!(seq, again);
    }

    #[test]
    fn filtered_examples() {
        let mm = filtered(4, |s| s.embedding_dimension() == s.multiplicity() as usize).unwrap();
        assert!(mm.iter().any(|s| s.generators() == [3, 4, 5]));
        let gor: Vec<_> = filtered(2, |s| s.is_symmetric() && !s.is_natural())
            .unwrap()
            .iter()
            .map(gens)
            .collect();
        assert_eq!(gor, vec![vec![2, 3], vec![2, 5]]);
        assert_eq!(filtered(0, |_| true).unwrap(), vec![NumericalSemigroup::natural()]);
    }

    #[test]
    fn nodes_agree_with_constructed_semigroups() {
        for node in Census::new(8).unwrap() {
            let s = node.to_semigroup();
            assert_eq!(s.genus(), node.genus());
            assert_eq!(s.frobenius(), i64::from(node.frobenius()));
            assert_eq!(s.multiplicity(), node.multiplicity());
            assert_eq!(s.gaps(), node.gaps().as_slice());
            let rebuilt = NumericalSemigroup::from_generators(s.generators()).unwrap();
            assert_eq!(rebuilt, s);
        }
    }
}
