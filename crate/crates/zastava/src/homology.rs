//! Bounded complexes of free ℤ-modules: homology, base change, and the
//! rank-table independence check.
//!
//! The coefficient ring is fixed to ℤ. Its residue fields are ℚ (the zero
//! ideal) and 𝔽_p (a prime p); both are represented by [`PrimeSpec`].
//! Conventions: upper indices, differentials raise degree by one, and
//! `d^{i+1}·d^i = 0` is checked at construction.
//!
//! Base change to a residue field is computed along two independent routes:
//! once through integral homology plus torsion counting (the
//! universal-coefficient route), and once by reducing the differentials and
//! taking plain linear-algebra ranks. [`tensor_homology_dims`] returns both
//! so that callers can compare them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::snf::smith_normal_form;
use crate::stalks::StalkTable;

/// A residue field of ℤ: the fraction field ℚ for `Zero`, or 𝔽_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PrimeSpec {
    Zero,
    Prime(u64),
}

impl PrimeSpec {
    /// Validates primality before wrapping.
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 {
            return Err(Error::NotPrime(p));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::NotPrime(p));
            }
            d += 1;
        }
        Ok(PrimeSpec::Prime(p))
    }
}

impl fmt::Display for PrimeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeSpec::Zero => write!(f, "0"),
            PrimeSpec::Prime(p) => write!(f, "{p}"),
        }
    }
}

/// A bounded complex of finitely generated free ℤ-modules on a contiguous
/// degree range, with `differentials[i]` mapping degree `lo+i` to `lo+i+1`
/// as a `ranks[i+1] × ranks[i]` matrix acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    lo: i64,
    ranks: Vec<usize>,
    differentials: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn new(lo: i64, ranks: Vec<usize>, differentials: Vec<IntMatrix>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::InvalidComplex("empty degree range".into()));
        }
        if differentials.len() + 1 != ranks.len() {
            return Err(Error::InvalidComplex(format!(
                "{} degrees need {} differentials, got {}",
                ranks.len(),
                ranks.len() - 1,
                differentials.len()
            )));
        }
        for (i, d) in differentials.iter().enumerate() {
            if d.rows() != ranks[i + 1] || d.cols() != ranks[i] {
                return Err(Error::InvalidComplex(format!(
                    "differential {i} has shape {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    ranks[i + 1],
                    ranks[i]
                )));
            }
        }
        for i in 0..differentials.len().saturating_sub(1) {
            let square = differentials[i + 1].matmul(&differentials[i])?;
            if !square.is_zero() {
                return Err(Error::InvalidComplex(format!(
                    "d^{}·d^{} is nonzero",
                    i + 1,
                    i
                )));
            }
        }
        Ok(ChainComplex {
            lo,
            ranks,
            differentials,
        })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn differentials(&self) -> &[IntMatrix] {
        &self.differentials
    }

    /// Degreewise direct sum; both complexes must live on the same range.
    pub fn direct_sum(&self, other: &ChainComplex) -> Result<ChainComplex> {
        if self.lo != other.lo || self.ranks.len() != other.ranks.len() {
            return Err(Error::InvalidComplex(
                "direct summands must share a degree range".into(),
            ));
        }
        let ranks: Vec<usize> = self
            .ranks
            .iter()
            .zip(&other.ranks)
            .map(|(a, b)| a + b)
            .collect();
        let mut differentials = Vec::with_capacity(self.differentials.len());
        for (i, (da, db)) in self.differentials.iter().zip(&other.differentials).enumerate() {
            let mut block = IntMatrix::zeros(ranks[i + 1], ranks[i]);
            for r in 0..da.rows() {
                for c in 0..da.cols() {
                    block[(r, c)] = da[(r, c)].clone();
                }
            }
            for r in 0..db.rows() {
                for c in 0..db.cols() {
                    block[(da.rows() + r, da.cols() + c)] = db[(r, c)].clone();
                }
            }
            differentials.push(block);
        }
        ChainComplex::new(self.lo, ranks, differentials)
    }
}

// Wire format: {"degrees":[lo,hi],"ranks":[…],"differentials":[[row-major]…]}.
#[derive(Serialize, Deserialize)]
struct WireComplex {
    degrees: [i64; 2],
    ranks: Vec<usize>,
    differentials: Vec<Vec<WireInt>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireInt {
    Int(i64),
    Str(String),
}

impl Serialize for ChainComplex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = WireComplex {
            degrees: [self.lo, self.hi()],
            ranks: self.ranks.clone(),
            differentials: self
                .differentials
                .iter()
                .map(|d| {
                    d.entries()
                        .iter()
                        .map(|e| WireInt::Str(e.to_string()))
                        .collect()
                })
                .collect(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ChainComplex {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = WireComplex::deserialize(deserializer)?;
        let [lo, hi] = wire.degrees;
        if hi - lo + 1 != wire.ranks.len() as i64 {
            return Err(D::Error::custom(format!(
                "degree range [{lo},{hi}] does not match {} ranks",
                wire.ranks.len()
            )));
        }
        let mut differentials = Vec::with_capacity(wire.differentials.len());
        for (i, flat) in wire.differentials.into_iter().enumerate() {
            let rows = *wire.ranks.get(i + 1).ok_or_else(|| {
                D::Error::custom("more differentials than degree steps")
            })?;
            let cols = wire.ranks[i];
            let mut entries = Vec::with_capacity(flat.len());
            for e in flat {
                entries.push(match e {
                    WireInt::Int(n) => BigInt::from(n),
                    WireInt::Str(s) => s
                        .parse()
                        .map_err(|_| D::Error::custom(format!("invalid entry `{s}`")))?,
                });
            }
            differentials.push(
                IntMatrix::from_entries(rows, cols, entries)
                    .map_err(|e| D::Error::custom(e.to_string()))?,
            );
        }
        ChainComplex::new(lo, wire.ranks, differentials).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// Homology of one degree: free rank and torsion invariant factors
/// (each > 1, in a divisibility chain).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub rank: usize,
    #[serde(serialize_with = "bigints_as_strings")]
    pub torsion: Vec<BigInt>,
}

fn bigints_as_strings<S: Serializer>(
    values: &[BigInt],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let strings: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    strings.serialize(serializer)
}

/// Per-degree homology of a complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologySummary {
    pub lo: i64,
    pub groups: Vec<HomologyGroup>,
}

impl HomologySummary {
    pub fn group(&self, degree: i64) -> Option<&HomologyGroup> {
        usize::try_from(degree - self.lo)
            .ok()
            .and_then(|i| self.groups.get(i))
    }

    /// `χ = Σ (−1)^i · rank H^i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(i, g)| sign(self.lo + i as i64) * g.rank as i64)
            .sum()
    }
}

fn sign(degree: i64) -> i64 {
    if degree.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Integral homology via Smith normal form: in degree `i`,
/// `rank H^i = ranks[i] − rank d^i − rank d^{i−1}` and the torsion invariant
/// factors are the invariant factors of `d^{i−1}` that exceed 1.
pub fn homology(complex: &ChainComplex) -> HomologySummary {
    let n = complex.ranks.len();
    let snfs: Vec<_> = complex
        .differentials
        .iter()
        .map(smith_normal_form)
        .collect();
    let mut groups = Vec::with_capacity(n);
    for i in 0..n {
        let rank_out = if i < snfs.len() { snfs[i].rank() } else { 0 };
        let (rank_in, torsion) = if i > 0 {
            let snf = &snfs[i - 1];
            let torsion: Vec<BigInt> = snf
                .invariant_factors()
                .into_iter()
                .filter(|f| !f.is_one())
                .collect();
            (snf.rank(), torsion)
        } else {
            (0, Vec::new())
        };
        groups.push(HomologyGroup {
            rank: complex.ranks[i] - rank_out - rank_in,
            torsion,
        });
    }
    HomologySummary {
        lo: complex.lo,
        groups,
    }
}

/// Both computation routes for the base-changed homology dimensions
/// `dim_{κ(𝔭)} H^i(κ(𝔭) ⊗ᴸ M)`, indexed from the lowest degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorDims {
    pub lo: i64,
    /// Universal-coefficient route: `rank H^i + t_i(𝔭) + t_{i+1}(𝔭)`, where
    /// `t` counts torsion invariant factors divisible by the prime.
    pub by_formula: Vec<usize>,
    /// Reduction route: ranks of the differentials over the residue field.
    pub by_reduction: Vec<usize>,
}

impl TensorDims {
    pub fn agree(&self) -> bool {
        self.by_formula == self.by_reduction
    }
}

fn torsion_count(group: &HomologyGroup, p: u64) -> usize {
    let p = BigInt::from(p);
    group
        .torsion
        .iter()
        .filter(|f| f.mod_floor(&p).is_zero())
        .count()
}

/// Computes the per-degree dimensions after base change to `κ(𝔭)`, along
/// both routes.
pub fn tensor_homology_dims(complex: &ChainComplex, prime: PrimeSpec) -> TensorDims {
    let integral = homology(complex);
    let n = complex.ranks.len();

    let by_formula: Vec<usize> = (0..n)
        .map(|i| {
            let mut dim = integral.groups[i].rank;
            if let PrimeSpec::Prime(p) = prime {
                dim += torsion_count(&integral.groups[i], p);
                if i + 1 < n {
                    dim += torsion_count(&integral.groups[i + 1], p);
                }
            }
            dim
        })
        .collect();

    let field_ranks: Vec<usize> = complex
        .differentials
        .iter()
        .map(|d| match prime {
            PrimeSpec::Zero => rank_rational(d),
            PrimeSpec::Prime(p) => rank_mod_p(d, p),
        })
        .collect();
    let by_reduction: Vec<usize> = (0..n)
        .map(|i| {
            let out = if i < field_ranks.len() { field_ranks[i] } else { 0 };
            let inc = if i > 0 { field_ranks[i - 1] } else { 0 };
            complex.ranks[i] - out - inc
        })
        .collect();

    TensorDims {
        lo: complex.lo,
        by_formula,
        by_reduction,
    }
}

/// `Σ (−1)^i · dim H^i(κ(𝔭) ⊗ᴸ M)`, computed along the reduction route.
/// The value is independent of `𝔭`.
pub fn euler_characteristic(complex: &ChainComplex, prime: PrimeSpec) -> i64 {
    let dims = tensor_homology_dims(complex, prime);
    dims.by_reduction
        .iter()
        .enumerate()
        .map(|(i, &d)| sign(complex.lo + i as i64) * d as i64)
        .sum()
}

/// Rank over ℚ by Gaussian elimination on exact rationals.
#[allow(clippy::needless_range_loop)]
fn rank_rational(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<BigRational>> = (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| BigRational::from_integer(m[(i, j)].clone()))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(pivot_row) = (rank..m.rows()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let pivot = a[rank][col].clone();
        for r in rank + 1..m.rows() {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pivot;
            for c in col..m.cols() {
                let delta = &factor * &a[rank][c];
                a[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == m.rows() {
            break;
        }
    }
    rank
}

/// Rank over 𝔽_p by Gaussian elimination with modular inverses.
#[allow(clippy::needless_range_loop)]
fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let modulus = BigInt::from(p);
    let mut a: Vec<Vec<u64>> = (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| {
                    let r = m[(i, j)].mod_floor(&modulus);
                    u64::try_from(r).expect("residue fits")
                })
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(pivot_row) = (rank..m.rows()).find(|&r| !a[r][col].is_multiple_of(p)) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let inv = inv_mod(a[rank][col] % p, p);
        for r in rank + 1..m.rows() {
            if a[r][col].is_multiple_of(p) {
                continue;
            }
            let factor = (a[r][col] % p) as u128 * inv as u128 % p as u128;
            for c in col..m.cols() {
                let sub = factor * (a[rank][c] % p) as u128 % p as u128;
                let cur = (a[r][c] % p) as u128;
                a[r][c] = ((cur + p as u128 - sub) % p as u128) as u64;
            }
        }
        rank += 1;
        if rank == m.rows() {
            break;
        }
    }
    rank
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p−2) mod p, p prime.
    let mut base = a as u128 % p as u128;
    let mut exp = p - 2;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Verdict of the cross-prime rank comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceVerdict {
    pub independent: bool,
    pub detail: String,
}

/// Compares stalk tables computed over several residue fields: they must
/// share the ambient space and stratum list, and the verdict is positive
/// exactly when all degree-rank maps agree entrywise. A positive verdict
/// means the integral stalk and costalk cohomology modules are free, with
/// the common ranks.
pub fn rank_table_independence(
    tables: &std::collections::BTreeMap<PrimeSpec, StalkTable>,
) -> Result<IndependenceVerdict> {
    let mut iter = tables.iter();
    let Some((first_prime, reference)) = iter.next() else {
        return Ok(IndependenceVerdict {
            independent: true,
            detail: "no tables supplied".into(),
        });
    };
    for (prime, table) in iter.clone() {
        if table.ambient != reference.ambient || table.side != reference.side {
            return Err(Error::AmbientMismatch(format!(
                "table for 𝔭={prime} does not match the table for 𝔭={first_prime}"
            )));
        }
        if table.entries.len() != reference.entries.len()
            || table
                .entries
                .iter()
                .zip(&reference.entries)
                .any(|(a, b)| a.nu != b.nu || a.gamma != b.gamma || a.dim != b.dim)
        {
            return Err(Error::AmbientMismatch(format!(
                "stratum lists differ between 𝔭={first_prime} and 𝔭={prime}"
            )));
        }
    }
    for (prime, table) in iter {
        for (i, (entry, ref_entry)) in table.entries.iter().zip(&reference.entries).enumerate() {
            if entry.degree_ranks != ref_entry.degree_ranks {
                return Ok(IndependenceVerdict {
                    independent: false,
                    detail: format!(
                        "entry {i} (ν={}, Γ={}) differs between 𝔭={first_prime} and 𝔭={prime}",
                        entry.nu, entry.gamma
                    ),
                });
            }
        }
    }
    Ok(IndependenceVerdict {
        independent: true,
        detail: format!(
            "ranks agree across 𝔭 ∈ {{{}}}; integral stalk cohomology is free with the common ranks",
            tables
                .keys()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn mult_by(n: i64) -> ChainComplex {
        ChainComplex::new(
            0,
            vec![1, 1],
            vec![IntMatrix::from_ints(1, 1, &[n]).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn validation_catches_bad_complexes() {
        // Shape mismatch.
        assert!(ChainComplex::new(
            0,
            vec![2, 1],
            vec![IntMatrix::from_ints(1, 1, &[1]).unwrap()]
        )
        .is_err());
        // d² ≠ 0.
        let d0 = IntMatrix::from_ints(1, 1, &[1]).unwrap();
        let d1 = IntMatrix::from_ints(1, 1, &[1]).unwrap();
        assert!(matches!(
            ChainComplex::new(0, vec![1, 1, 1], vec![d0, d1]),
            Err(Error::InvalidComplex(_))
        ));
        // Composable pair is fine: ×2 then 0.
        let d0 = IntMatrix::from_ints(1, 1, &[2]).unwrap();
        let d1 = IntMatrix::from_ints(1, 1, &[0]).unwrap();
        assert!(ChainComplex::new(0, vec![1, 1, 1], vec![d0, d1]).is_ok());
    }

    #[test]
    fn zero_differential() {
        let h = homology(&mult_by(0));
        assert_eq!(h.groups[0], HomologyGroup { rank: 1, torsion: vec![] });
        assert_eq!(h.groups[1], HomologyGroup { rank: 1, torsion: vec![] });
    }

    #[test]
    fn multiplication_by_two() {
        let h = homology(&mult_by(2));
        assert_eq!(h.groups[0], HomologyGroup { rank: 0, torsion: vec![] });
        assert_eq!(
            h.groups[1],
            HomologyGroup { rank: 0, torsion: vec![BigInt::from(2)] }
        );
    }

    #[test]
    fn acyclic_identity() {
        let h = homology(&mult_by(1));
        assert!(h.groups.iter().all(|g| g.rank == 0 && g.torsion.is_empty()));
    }

    #[test]
    fn tensor_dims_for_multiplication_by_two() {
        let c = mult_by(2);
        let at2 = tensor_homology_dims(&c, PrimeSpec::prime(2).unwrap());
        assert_eq!(at2.by_formula, vec![1, 1]);
        assert!(at2.agree());
        let at0 = tensor_homology_dims(&c, PrimeSpec::Zero);
        assert_eq!(at0.by_formula, vec![0, 0]);
        assert!(at0.agree());
        let at3 = tensor_homology_dims(&c, PrimeSpec::prime(3).unwrap());
        assert_eq!(at3.by_formula, vec![0, 0]);
        assert!(at3.agree());
    }

    #[test]
    fn euler_characteristics() {
        let c = mult_by(2);
        for p in [PrimeSpec::Zero, PrimeSpec::Prime(2), PrimeSpec::Prime(3)] {
            assert_eq!(euler_characteristic(&c, p), 0);
        }
        assert_eq!(euler_characteristic(&mult_by(1), PrimeSpec::Zero), 0);
        let free = ChainComplex::new(
            0,
            vec![2, 1],
            vec![IntMatrix::zeros(1, 2)],
        )
        .unwrap();
        for p in [PrimeSpec::Zero, PrimeSpec::Prime(2), PrimeSpec::Prime(5)] {
            assert_eq!(euler_characteristic(&free, p), 1);
        }
        // Odd starting degree flips the sign.
        let shifted = ChainComplex::new(1, vec![2, 1], vec![IntMatrix::zeros(1, 2)]).unwrap();
        assert_eq!(euler_characteristic(&shifted, PrimeSpec::Zero), -1);
    }

    #[test]
    fn direct_sum_concatenates_homology() {
        let a = mult_by(2);
        let b = mult_by(3);
        let sum = a.direct_sum(&b).unwrap();
        let h = homology(&sum);
        assert_eq!(h.groups[1].rank, 0);
        assert_eq!(
            h.groups[1].torsion,
            vec![BigInt::from(6)],
        );
        // H¹ = ℤ/2 ⊕ ℤ/3 ≅ ℤ/6: one invariant factor.
        let ha = homology(&a);
        let hb = homology(&b);
        assert_eq!(h.groups[0].rank, ha.groups[0].rank + hb.groups[0].rank);
    }

    #[test]
    fn prime_validation() {
        assert!(PrimeSpec::prime(2).is_ok());
        assert!(PrimeSpec::prime(97).is_ok());
        assert!(matches!(PrimeSpec::prime(1), Err(Error::NotPrime(1))));
        assert!(matches!(PrimeSpec::prime(91), Err(Error::NotPrime(91))));
    }

    #[test]
    fn field_rank_helpers() {
        let m = IntMatrix::from_ints(2, 2, &[2, 4, 6, 8]).unwrap();
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 0);
        assert_eq!(rank_mod_p(&m, 3), 2);
        let singular = IntMatrix::from_ints(2, 2, &[1, 2, 2, 4]).unwrap();
        assert_eq!(rank_rational(&singular), 1);
        assert_eq!(rank_mod_p(&singular, 5), 1);
    }

    #[test]
    fn complex_serde_round_trip() {
        let c = ChainComplex::new(
            -1,
            vec![2, 2, 1],
            vec![
                IntMatrix::from_ints(2, 2, &[2, 0, 0, 4]).unwrap(),
                IntMatrix::zeros(1, 2),
            ],
        )
        .unwrap();
        let json = serde_json::to_string(&c).unwrap();
        let back: ChainComplex = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        // The documented wire schema.
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["degrees"], serde_json::json!([-1, 1]));
        assert_eq!(parsed["ranks"], serde_json::json!([2, 2, 1]));
    }

    #[test]
    fn independence_of_identical_tables() {
        use crate::rootdata::{Coweight, RootSystem};
        use crate::stalks::{zastava_stalk_table, Side};
        use std::collections::BTreeMap;

        let rs = RootSystem::named("A2").unwrap();
        let mu = Coweight::new(vec![1, 1]);
        let table = zastava_stalk_table(&rs, &mu, Side::Stalk).unwrap();
        let mut tables = BTreeMap::new();
        tables.insert(PrimeSpec::Zero, table.clone());
        tables.insert(PrimeSpec::Prime(2), table.clone());
        tables.insert(PrimeSpec::Prime(3), table.clone());
        let verdict = rank_table_independence(&tables).unwrap();
        assert!(verdict.independent);

        // Perturb one rank: located failure.
        let mut perturbed = table.clone();
        let m = *perturbed.entries[1].degree_ranks.0.keys().next().unwrap();
        perturbed.entries[1]
            .degree_ranks
            .0
            .insert(m, BigUint::from(99u32));
        tables.insert(PrimeSpec::Prime(3), perturbed);
        let verdict = rank_table_independence(&tables).unwrap();
        assert!(!verdict.independent);
        assert!(verdict.detail.contains("entry 1"));

        // Mismatched ambient: hard error.
        let other = zastava_stalk_table(&rs, &Coweight::new(vec![1, 0]), Side::Stalk).unwrap();
        tables.insert(PrimeSpec::Prime(3), other);
        assert!(matches!(
            rank_table_independence(&tables),
            Err(Error::AmbientMismatch(_))
        ));
    }
}
