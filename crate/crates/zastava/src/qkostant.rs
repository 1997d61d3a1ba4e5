//! The q-analogue of Kostant's partition function over positive coroots.
//!
//! `kostant_q(rs, λ)` is the generating polynomial whose coefficient of
//! `q^k` counts the multisets of `k` positive coroots of `rs` summing to
//! `λ`. Normalization, pinned once and used everywhere:
//!
//! - the grading variable counts the *number of parts* of the multiset,
//!   so `kostant_q(0) = 1` (the empty multiset) and the constant term
//!   vanishes for every `λ ≠ 0`;
//! - the degree equals `⟨λ, ρ⟩` (a maximal decomposition uses only simple
//!   coroots) and the lowest exponent is the minimal number of positive
//!   coroots needed.
//!
//! This normalization is the unique one under which the stalk polynomial
//! `q⁻¹·𝒫(μ, q²)` of [`crate::stalks`] is an honest polynomial with zero
//! constant term.
//!
//! Two independent routes are provided: a bounded-box dynamic program
//! ([`kostant_table`]) and an exhaustive enumeration
//! ([`kostant_q_bruteforce`]) used as its oracle.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::QPolynomial;
use crate::rootdata::{coweight_box, Coweight, RootSystem};

/// Height bound for the brute-force enumeration.
pub const BRUTE_FORCE_HEIGHT_BOUND: i64 = 12;

/// Partition-function values for every coweight in a box `0 ⪯ λ ⪯ bound`.
#[derive(Debug, Clone)]
pub struct KostantTable {
    root_system: RootSystem,
    bound: Coweight,
    values: BTreeMap<Coweight, QPolynomial>,
}

impl KostantTable {
    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn bound(&self) -> &Coweight {
        &self.bound
    }

    /// The stored polynomial for `λ`, or `None` outside the box.
    pub fn value(&self, lambda: &Coweight) -> Option<&QPolynomial> {
        self.values.get(lambda)
    }

    pub fn values(&self) -> &BTreeMap<Coweight, QPolynomial> {
        &self.values
    }
}

/// Single dynamic-programming sweep over the box `0 ⪯ λ ⪯ bound`: positive
/// coroots are folded in one at a time, each as an unbounded-multiplicity
/// update `values[λ] += q·values[λ−γ]` in an order compatible with
/// componentwise subtraction. The result does not depend on the coroot
/// order (the generating function is a commutative product).
pub fn kostant_table(rs: &RootSystem, bound: &Coweight) -> Result<KostantTable> {
    let values = table_from_coroots(rs.positive_coroots(), bound)?;
    Ok(KostantTable {
        root_system: rs.clone(),
        bound: bound.clone(),
        values,
    })
}

fn table_from_coroots(
    coroots: &[Coweight],
    bound: &Coweight,
) -> Result<BTreeMap<Coweight, QPolynomial>> {
    let points = coweight_box(bound)?;
    let mut values: BTreeMap<Coweight, QPolynomial> = points
        .iter()
        .map(|p| (p.clone(), QPolynomial::zero()))
        .collect();
    values.insert(Coweight::zero(bound.rank()), QPolynomial::one());
    for gamma in coroots {
        // Lexicographic order extends the componentwise order, so λ−γ is
        // final for this γ before λ is touched; that makes the update count
        // arbitrary multiplicities of γ.
        for lambda in &points {
            let Ok(prev) = lambda.checked_sub(gamma) else {
                continue;
            };
            if !prev.is_dominant_sum() {
                continue;
            }
            let contribution = values[&prev].shift_up(1);
            if contribution.is_zero() {
                continue;
            }
            let updated = &values[lambda] + &contribution;
            values.insert(lambda.clone(), updated);
        }
    }
    Ok(values)
}

/// The q-Kostant polynomial of a single coweight. Returns the zero
/// polynomial when `λ` has a negative coordinate.
pub fn kostant_q(rs: &RootSystem, lambda: &Coweight) -> QPolynomial {
    assert_eq!(lambda.rank(), rs.rank(), "coweight rank does not match root system");
    if !lambda.is_dominant_sum() {
        return QPolynomial::zero();
    }
    let table = kostant_table(rs, lambda).expect("dominant bound");
    table.values[lambda].clone()
}

/// Oracle for [`kostant_q`]: exhaustively enumerates the nonincreasing
/// sequences of positive coroots (in the fixed order of
/// [`RootSystem::positive_coroots`]) summing to `λ`, grading by length.
/// Guarded by [`BRUTE_FORCE_HEIGHT_BOUND`] on `⟨λ, ρ⟩`.
pub fn kostant_q_bruteforce(rs: &RootSystem, lambda: &Coweight) -> Result<QPolynomial> {
    assert_eq!(lambda.rank(), rs.rank(), "coweight rank does not match root system");
    let height = lambda.pairing_rho();
    if height > BRUTE_FORCE_HEIGHT_BOUND {
        return Err(Error::HeightBoundExceeded {
            height,
            bound: BRUTE_FORCE_HEIGHT_BOUND,
        });
    }
    if !lambda.is_dominant_sum() {
        return Ok(QPolynomial::zero());
    }
    let mut result = QPolynomial::zero();
    let coroots = rs.positive_coroots();
    descend(coroots, lambda, coroots.len(), 0, &mut result);
    Ok(result)
}

fn descend(
    coroots: &[Coweight],
    remaining: &Coweight,
    max_index: usize,
    parts: usize,
    acc: &mut QPolynomial,
) {
    if remaining.is_zero() {
        acc.add_term(parts, &BigInt::one());
        return;
    }
    for idx in 0..max_index {
        let gamma = &coroots[idx];
        let next = remaining.checked_sub(gamma).expect("equal ranks");
        if next.is_dominant_sum() {
            descend(coroots, &next, idx + 1, parts + 1, acc);
        }
    }
}
