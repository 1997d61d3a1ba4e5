//! Partitions of nonnegative coweights and Jordan types of colored divisors.
//!
//! A partition of `ν` is an unordered multiset of nonzero elements of the
//! nonnegative coroot monoid summing to `ν`; the empty multiset is the
//! unique partition of `0`. Partitions are stored canonically as
//! lexicographically nonincreasing part lists, so equality of partitions is
//! equality of lists.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{coweight_box, Coweight};

/// Hard cap on enumeration size; vector partitions grow quickly and an
/// unbounded enumeration could exhaust memory long before finishing.
pub const DEFAULT_PARTITION_CAP: usize = 1_000_000;

/// A multiset of nonzero nonnegative coweights, sorted nonincreasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoweightPartition {
    parts: Vec<Coweight>,
}

impl CoweightPartition {
    /// The empty partition (the unique partition of `0`).
    pub fn empty() -> Self {
        CoweightPartition { parts: Vec::new() }
    }

    /// Builds a partition from parts, validating and sorting them into
    /// canonical order.
    pub fn new(mut parts: Vec<Coweight>) -> Result<Self> {
        for p in &parts {
            if p.is_zero() {
                return Err(Error::InvalidPartition("parts must be nonzero".into()));
            }
            if !p.is_dominant_sum() {
                return Err(Error::InvalidPartition(format!(
                    "part {p} has a negative coordinate"
                )));
            }
        }
        if let Some(first) = parts.first() {
            let rank = first.rank();
            if parts.iter().any(|p| p.rank() != rank) {
                return Err(Error::InvalidPartition("parts of mixed rank".into()));
            }
        }
        parts.sort_by(|a, b| b.cmp(a));
        Ok(CoweightPartition { parts })
    }

    pub fn parts(&self) -> &[Coweight] {
        &self.parts
    }

    /// Number of parts, written `|Γ|`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts; `None` for the empty partition, whose rank is
    /// indeterminate.
    pub fn sum(&self) -> Option<Coweight> {
        let mut iter = self.parts.iter();
        let first = iter.next()?.clone();
        Some(iter.fold(first, |acc, p| acc.checked_add(p).expect("equal ranks")))
    }

    /// Sum of the parts as a coweight of the given rank (zero when empty).
    pub fn sum_with_rank(&self, rank: usize) -> Coweight {
        self.sum().unwrap_or_else(|| Coweight::zero(rank))
    }

    /// Multiset union with another partition, re-sorted into canonical form.
    pub fn concat(&self, other: &CoweightPartition) -> Result<CoweightPartition> {
        if let (Some(a), Some(b)) = (self.parts.first(), other.parts.first()) {
            if a.rank() != b.rank() {
                return Err(Error::RankMismatch {
                    left: a.rank(),
                    right: b.rank(),
                });
            }
        }
        let mut parts = self.parts.clone();
        parts.extend(other.parts.iter().cloned());
        parts.sort_by(|a, b| b.cmp(a));
        Ok(CoweightPartition { parts })
    }
}

impl fmt::Display for CoweightPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `ν`, in ascending lexicographic order of the canonical
/// part lists, capped at [`DEFAULT_PARTITION_CAP`].
pub fn enumerate_partitions(nu: &Coweight) -> Result<Vec<CoweightPartition>> {
    enumerate_partitions_capped(nu, DEFAULT_PARTITION_CAP)
}

/// As [`enumerate_partitions`], failing loudly once more than `cap`
/// partitions would be produced.
pub fn enumerate_partitions_capped(nu: &Coweight, cap: usize) -> Result<Vec<CoweightPartition>> {
    if !nu.is_dominant_sum() {
        return Err(Error::NotDominantSum(nu.to_string()));
    }
    // Candidate parts: nonzero points of the box 0 ⪯ x ⪯ ν, in descending
    // lexicographic order. Recursive descent with nonincreasing parts visits
    // each multiset exactly once.
    let mut candidates = coweight_box(nu)?;
    candidates.retain(|c| !c.is_zero());
    candidates.reverse();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(&candidates, nu, 0, &mut stack, &mut out, cap)?;
    out.sort();
    Ok(out)
}

fn descend(
    candidates: &[Coweight],
    remaining: &Coweight,
    from: usize,
    stack: &mut Vec<Coweight>,
    out: &mut Vec<CoweightPartition>,
    cap: usize,
) -> Result<()> {
    if remaining.is_zero() {
        if out.len() >= cap {
            return Err(Error::PartitionCapExceeded { cap });
        }
        let mut parts = stack.clone();
        parts.sort_by(|a, b| b.cmp(a));
        out.push(CoweightPartition { parts });
        return Ok(());
    }
    for idx in from..candidates.len() {
        let part = &candidates[idx];
        let next = remaining.checked_sub(part).expect("equal ranks");
        if !next.is_dominant_sum() {
            continue;
        }
        stack.push(part.clone());
        descend(candidates, &next, idx, stack, out, cap)?;
        stack.pop();
    }
    Ok(())
}

/// `|𝔓(ν)|` without materializing the partitions: an unbounded-multiplicity
/// sweep over the candidate parts, one coin at a time, on the box
/// `0 ⪯ x ⪯ ν`.
pub fn count_partitions(nu: &Coweight) -> Result<BigUint> {
    if !nu.is_dominant_sum() {
        return Err(Error::NotDominantSum(nu.to_string()));
    }
    let points = coweight_box(nu)?;
    let mut ways: BTreeMap<Coweight, BigUint> = points
        .iter()
        .map(|p| (p.clone(), BigUint::zero()))
        .collect();
    ways.insert(Coweight::zero(nu.rank()), BigUint::one());
    for part in &points {
        if part.is_zero() {
            continue;
        }
        for x in &points {
            let Ok(prev) = x.checked_sub(part) else { continue };
            if !prev.is_dominant_sum() {
                continue;
            }
            let add = ways[&prev].clone();
            if !add.is_zero() {
                let updated = &ways[x] + add;
                ways.insert(x.clone(), updated);
            }
        }
    }
    Ok(ways.remove(nu).expect("bound is in its own box"))
}

/// Opaque label for a support point of a colored divisor. Only equality
/// matters; no curve geometry is attached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointId(pub u64);

/// A formal colored divisor: finitely many distinct points, each weighted by
/// a nonzero nonnegative coweight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDivisor {
    support: Vec<(PointId, Coweight)>,
}

impl ColoredDivisor {
    pub fn new(support: Vec<(PointId, Coweight)>) -> Result<Self> {
        let mut ids: Vec<PointId> = support.iter().map(|(id, _)| *id).collect();
        ids.sort();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidDivisor("repeated point id".into()));
        }
        for (id, w) in &support {
            if w.is_zero() {
                return Err(Error::InvalidDivisor(format!("zero weight at point {}", id.0)));
            }
            if !w.is_dominant_sum() {
                return Err(Error::InvalidDivisor(format!(
                    "weight {w} at point {} has a negative coordinate",
                    id.0
                )));
            }
        }
        Ok(ColoredDivisor { support })
    }

    pub fn empty() -> Self {
        ColoredDivisor { support: Vec::new() }
    }

    pub fn support(&self) -> &[(PointId, Coweight)] {
        &self.support
    }
}

/// The Jordan type of a colored divisor: the multiset of its weights, with
/// the support points forgotten.
pub fn jordan_type(divisor: &ColoredDivisor) -> CoweightPartition {
    let parts = divisor.support.iter().map(|(_, w)| w.clone()).collect();
    CoweightPartition::new(parts).expect("divisor weights are valid parts")
}

/// Jordan type in the ungraded case: local multiplicities of a divisor on a
/// curve, returned as a nonincreasing integer partition of the total.
pub fn jordan_type_integer(multiplicities: &[u64]) -> Vec<u64> {
    let mut parts: Vec<u64> = multiplicities.iter().copied().filter(|&m| m > 0).collect();
    parts.sort_by(|a, b| b.cmp(a));
    parts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(coords: &[i64]) -> Coweight {
        Coweight::new(coords.to_vec())
    }

    fn partition(parts: &[&[i64]]) -> CoweightPartition {
        CoweightPartition::new(parts.iter().map(|p| cw(p)).collect()).unwrap()
    }

    #[test]
    fn partition_of_zero_is_empty() {
        let all = enumerate_partitions(&cw(&[0, 0])).unwrap();
        assert_eq!(all, vec![CoweightPartition::empty()]);
        assert_eq!(count_partitions(&cw(&[0, 0])).unwrap(), BigUint::one());
    }

    #[test]
    fn a1_partitions_are_integer_partitions() {
        let all = enumerate_partitions(&cw(&[2])).unwrap();
        assert_eq!(all, vec![partition(&[&[1], &[1]]), partition(&[&[2]])]);
        // p(5) = 7
        assert_eq!(count_partitions(&cw(&[5])).unwrap(), BigUint::from(7u32));
        assert_eq!(enumerate_partitions(&cw(&[5])).unwrap().len(), 7);
    }

    #[test]
    fn a2_partitions_of_1_1() {
        let all = enumerate_partitions(&cw(&[1, 1])).unwrap();
        assert_eq!(
            all,
            vec![partition(&[&[1, 0], &[0, 1]]), partition(&[&[1, 1]])]
        );
        assert_eq!(count_partitions(&cw(&[1, 1])).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn negative_input_rejected() {
        assert!(matches!(
            enumerate_partitions(&cw(&[-1, 0])),
            Err(Error::NotDominantSum(_))
        ));
        assert!(matches!(
            count_partitions(&cw(&[0, -2])),
            Err(Error::NotDominantSum(_))
        ));
    }

    #[test]
    fn cap_fails_loudly() {
        assert!(matches!(
            enumerate_partitions_capped(&cw(&[4]), 3),
            Err(Error::PartitionCapExceeded { cap: 3 })
        ));
    }

    #[test]
    fn enumeration_invariants() {
        for nu in [cw(&[3, 1]), cw(&[2, 2]), cw(&[0, 3])] {
            let all = enumerate_partitions(&nu).unwrap();
            let count = count_partitions(&nu).unwrap();
            assert_eq!(BigUint::from(all.len()), count);
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, all, "sorted, duplicate-free output");
            for gamma in &all {
                assert_eq!(gamma.sum_with_rank(2), nu);
                for w in gamma.parts().windows(2) {
                    assert!(w[0] >= w[1], "canonical nonincreasing order");
                }
            }
        }
    }

    #[test]
    fn concat_examples() {
        let a = partition(&[&[1]]);
        assert_eq!(a.concat(&a).unwrap(), partition(&[&[1], &[1]]));
        let g = partition(&[&[2], &[1]]);
        assert_eq!(g.concat(&CoweightPartition::empty()).unwrap(), g);
        assert_eq!(CoweightPartition::empty().concat(&g).unwrap(), g);
        let left = partition(&[&[1, 1]]);
        let right = partition(&[&[1, 0]]);
        assert_eq!(
            left.concat(&right).unwrap(),
            partition(&[&[1, 1], &[1, 0]])
        );
        assert!(a.concat(&left).is_err());
    }

    #[test]
    fn concat_commutes_and_associates() {
        let a = partition(&[&[2, 0]]);
        let b = partition(&[&[1, 1], &[1, 0]]);
        let c = partition(&[&[0, 1]]);
        assert_eq!(a.concat(&b).unwrap(), b.concat(&a).unwrap());
        assert_eq!(
            a.concat(&b).unwrap().concat(&c).unwrap(),
            a.concat(&b.concat(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn jordan_type_forgets_points() {
        let alpha = cw(&[1, 0]);
        let e = ColoredDivisor::new(vec![
            (PointId(1), alpha.clone()),
            (PointId(2), alpha.clone()),
        ])
        .unwrap();
        assert_eq!(jordan_type(&e), partition(&[&[1, 0], &[1, 0]]));

        let doubled = ColoredDivisor::new(vec![(PointId(7), cw(&[2, 0]))]).unwrap();
        assert_eq!(jordan_type(&doubled), partition(&[&[2, 0]]));

        assert_eq!(jordan_type(&ColoredDivisor::empty()), CoweightPartition::empty());

        // Permuting the support leaves the Jordan type unchanged.
        let swapped = ColoredDivisor::new(vec![
            (PointId(2), alpha.clone()),
            (PointId(1), alpha),
        ])
        .unwrap();
        assert_eq!(jordan_type(&e), jordan_type(&swapped));
    }

    #[test]
    fn divisor_validation() {
        let alpha = cw(&[1]);
        assert!(ColoredDivisor::new(vec![
            (PointId(1), alpha.clone()),
            (PointId(1), alpha.clone())
        ])
        .is_err());
        assert!(ColoredDivisor::new(vec![(PointId(1), cw(&[0]))]).is_err());
        assert!(ColoredDivisor::new(vec![(PointId(1), cw(&[-1]))]).is_err());
    }

    #[test]
    fn jordan_type_integer_examples() {
        assert_eq!(jordan_type_integer(&[1, 1, 1]), vec![1, 1, 1]);
        assert_eq!(jordan_type_integer(&[3]), vec![3]);
        assert_eq!(jordan_type_integer(&[1, 2]), vec![2, 1]);
    }
}
