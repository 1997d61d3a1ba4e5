//! Stalk and costalk tables of intersection cohomology complexes, and their
//! validators.
//!
//! For a stratum with partition `Γ = [ν₁,…,ν_r]` the table polynomial is the
//! product `P^{ν₁}···P^{ν_r}`, where `P^ν = q⁻¹·𝒫(ν, q²)` for `ν ≠ 0` and
//! `P^∅ = 1`. The polynomial depends only on `Γ` — no operation here takes a
//! curve, and genus enters only through the dimension offsets of the ambient
//! stack.
//!
//! Each table entry stores both the polynomial and its re-indexing into
//! honest cohomological degrees: on a stratum of dimension `d`, the
//! coefficient of `q^n` sits in degree `m = −d − n` on the stalk side and
//! `m = −d + n` on the costalk side. Keeping both forms makes the
//! re-indexing itself checkable, which is what [`reindex_check`] does.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::CoweightPartition;
use crate::poly::QPolynomial;
use crate::qkostant::{kostant_q, kostant_table, KostantTable};
use crate::rootdata::{Coweight, GroupDims, RootSystem};
use crate::strata::{drinfeld_strata, zastava_strata};

/// Which restriction functor a table describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Stalk,
    Costalk,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Stalk => write!(f, "stalk"),
            Side::Costalk => write!(f, "costalk"),
        }
    }
}

/// The ambient space of a table. Carries every constant needed to interpret
/// the entries (in particular the genus offsets), so a serialized table is
/// self-describing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Ambient {
    Zastava {
        mu: Coweight,
    },
    Drinfeld {
        lambda: Coweight,
        genus: u32,
        torus_rank: usize,
        dims: GroupDims,
        cutoff: Coweight,
    },
    BunU {
        genus: u32,
        dim_u: usize,
        cutoff: Coweight,
    },
}

impl Ambient {
    /// The parity class every occupied cohomological degree must lie in.
    pub fn expected_degree_parity(&self) -> i64 {
        match self {
            Ambient::Zastava { .. } => 0,
            Ambient::Drinfeld { genus, dims, .. } => {
                ((*genus as i64 - 1) * dims.dim_b as i64).rem_euclid(2)
            }
            Ambient::BunU { genus, dim_u, .. } => {
                ((*genus as i64 - 1) * *dim_u as i64).rem_euclid(2)
            }
        }
    }
}

/// Ranks per cohomological degree. Values are unbounded nonnegative
/// integers; on the wire they are decimal strings keyed by the degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreeRanks(pub BTreeMap<i64, BigUint>);

impl DegreeRanks {
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigUint)> {
        self.0.iter()
    }
}

impl Serialize for DegreeRanks {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: BTreeMap<i64, String> =
            self.0.iter().map(|(m, r)| (*m, r.to_string())).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DegreeRanks {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Rank {
            Int(u64),
            Str(String),
        }
        let raw = BTreeMap::<i64, Rank>::deserialize(deserializer)?;
        let mut out = BTreeMap::new();
        for (m, r) in raw {
            let value = match r {
                Rank::Int(n) => BigUint::from(n),
                Rank::Str(s) => s
                    .parse()
                    .map_err(|_| D::Error::custom(format!("invalid rank `{s}`")))?,
            };
            out.insert(m, value);
        }
        Ok(DegreeRanks(out))
    }
}

/// One stratum row of a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub nu: Coweight,
    pub gamma: CoweightPartition,
    pub dim: i64,
    pub poly: QPolynomial,
    pub degree_ranks: DegreeRanks,
}

/// A full stalk or costalk table over the strata of an ambient space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StalkTable {
    pub ambient: Ambient,
    pub side: Side,
    pub entries: Vec<TableEntry>,
}

/// A located violation inside a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Index into `entries`, when the violation is tied to one stratum.
    pub entry: Option<usize>,
    pub message: String,
}

/// Outcome of a validator run; empty means pass.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, entry: Option<usize>, message: String) {
        self.violations.push(Violation { entry, message });
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pass() {
            return write!(f, "pass");
        }
        writeln!(f, "{} violation(s):", self.violations.len())?;
        for v in &self.violations {
            match v.entry {
                Some(i) => writeln!(f, "  entry {i}: {}", v.message)?,
                None => writeln!(f, "  {}", v.message)?,
            }
        }
        Ok(())
    }
}

/// `P^μ`: the constant 1 for `μ = 0`, and `q⁻¹·𝒫(μ, q²)` otherwise.
pub fn p_poly(rs: &RootSystem, mu: &Coweight) -> Result<QPolynomial> {
    if !mu.is_dominant_sum() {
        return Err(Error::NotDominantSum(mu.to_string()));
    }
    if mu.is_zero() {
        return Ok(QPolynomial::one());
    }
    kostant_q(rs, mu).substitute_q_squared().divide_by_q()
}

fn p_poly_from_table(table: &KostantTable, part: &Coweight) -> QPolynomial {
    table
        .value(part)
        .expect("partition parts lie in the table box")
        .substitute_q_squared()
        .divide_by_q()
        .expect("the partition function of a nonzero coweight has zero constant term")
}

/// The table polynomial of a stratum: the product of `P^{νᵢ}` over the parts
/// of `Γ`, with the empty product equal to 1.
pub fn stalk_poly_for_partition(rs: &RootSystem, gamma: &CoweightPartition) -> QPolynomial {
    gamma.parts().iter().fold(QPolynomial::one(), |acc, part| {
        &acc * &p_poly(rs, part).expect("partition parts are dominant")
    })
}

fn reindex(poly: &QPolynomial, dim: i64, side: Side) -> DegreeRanks {
    let mut map = BTreeMap::new();
    for n in poly.exponents() {
        let m = match side {
            Side::Stalk => -dim - n as i64,
            Side::Costalk => -dim + n as i64,
        };
        let coeff = poly.coeff(n);
        let rank = coeff
            .to_biguint()
            .expect("table polynomials have nonnegative coefficients");
        map.insert(m, rank);
    }
    DegreeRanks(map)
}

fn build_entry(
    ktable: &KostantTable,
    nu: Coweight,
    gamma: CoweightPartition,
    dim: i64,
    side: Side,
) -> TableEntry {
    let poly = gamma
        .parts()
        .iter()
        .fold(QPolynomial::one(), |acc, part| {
            &acc * &p_poly_from_table(ktable, part)
        });
    let degree_ranks = reindex(&poly, dim, side);
    TableEntry {
        nu,
        gamma,
        dim,
        poly,
        degree_ranks,
    }
}

/// The full (co)stalk table of the intersection cohomology complex of the
/// Zastava scheme `Z^μ`.
pub fn zastava_stalk_table(rs: &RootSystem, mu: &Coweight, side: Side) -> Result<StalkTable> {
    let strata = zastava_strata(rs, mu)?;
    let ktable = kostant_table(rs, mu)?;
    let entries: Vec<TableEntry> = strata
        .into_par_iter()
        .map(|s| build_entry(&ktable, s.nu, s.gamma, s.dim, side))
        .collect();
    Ok(StalkTable {
        ambient: Ambient::Zastava { mu: mu.clone() },
        side,
        entries,
    })
}

/// The (co)stalk table of the Drinfeld compactification of degree-λ Borel
/// torsors on a genus-g curve, truncated at the given defect cutoff.
pub fn drinfeld_stalk_table(
    rs: &RootSystem,
    lambda: &Coweight,
    genus: u32,
    torus_rank: usize,
    cutoff: &Coweight,
    side: Side,
) -> Result<StalkTable> {
    let strata = drinfeld_strata(rs, lambda, genus, torus_rank, cutoff)?;
    let dims = rs.group_dims(torus_rank)?;
    let ktable = kostant_table(rs, cutoff)?;
    let entries: Vec<TableEntry> = strata
        .into_par_iter()
        .map(|s| build_entry(&ktable, s.mu, s.gamma, s.dim, side))
        .collect();
    Ok(StalkTable {
        ambient: Ambient::Drinfeld {
            lambda: lambda.clone(),
            genus,
            torus_rank,
            dims,
            cutoff: cutoff.clone(),
        },
        side,
        entries,
    })
}

/// The (co)stalk table of the compactification of the stack of U-torsors on
/// a genus-g curve, truncated at the given defect cutoff. Same polynomials
/// as the Borel case; only the dimension offset changes.
pub fn bun_u_stalk_table(
    rs: &RootSystem,
    genus: u32,
    cutoff: &Coweight,
    side: Side,
) -> Result<StalkTable> {
    if cutoff.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            left: cutoff.rank(),
            right: rs.rank(),
        });
    }
    if !cutoff.is_dominant_sum() {
        return Err(Error::NotDominantSum(cutoff.to_string()));
    }
    let dim_u = rs.positive_coroots().len();
    let genus_term = (genus as i64 - 1) * dim_u as i64;
    let ktable = kostant_table(rs, cutoff)?;
    let mut index = Vec::new();
    for mu in crate::rootdata::coweight_box(cutoff)? {
        let offset = -mu.pairing_2rho() + genus_term;
        for gamma in crate::partitions::enumerate_partitions(&mu)? {
            let dim = gamma.len() as i64 + offset;
            index.push((mu.clone(), gamma, dim));
        }
    }
    let entries: Vec<TableEntry> = index
        .into_par_iter()
        .map(|(mu, gamma, dim)| build_entry(&ktable, mu, gamma, dim, side))
        .collect();
    Ok(StalkTable {
        ambient: Ambient::BunU {
            genus,
            dim_u,
            cutoff: cutoff.clone(),
        },
        side,
        entries,
    })
}

/// Costalk polynomial of the semiinfinite Gaitsgory sheaf on the orbit
/// indexed by `ν`: the substitution `𝒫(−ν, q²)`, which vanishes unless `−ν`
/// lies in the nonnegative coroot monoid.
pub fn gaitsgory_costalk(rs: &RootSystem, nu: &Coweight) -> QPolynomial {
    kostant_q(rs, &nu.negated()).substitute_q_squared()
}

/// Cross-check tying the stalk polynomials to the Gaitsgory costalks: for
/// `μ ≻ 0`, the identity `q·P^μ = 𝒫(μ, q²)` must hold.
pub fn crosscheck_gaitsgory(rs: &RootSystem, mu: &Coweight) -> Result<bool> {
    if !mu.is_dominant_sum() || mu.is_zero() {
        return Err(Error::NotStrictlyDominant(mu.to_string()));
    }
    let lhs = p_poly(rs, mu)?.shift_up(1);
    let rhs = gaitsgory_costalk(rs, &mu.negated());
    Ok(lhs == rhs)
}

/// Parity validator: every exponent of a stratum polynomial must be
/// congruent to `|Γ|` mod 2, and every occupied cohomological degree across
/// the table must lie in the parity class determined by the ambient space.
pub fn parity_check(table: &StalkTable) -> CheckReport {
    let mut report = CheckReport::default();
    let expected = table.ambient.expected_degree_parity();
    for (i, entry) in table.entries.iter().enumerate() {
        let parts_parity = entry.gamma.len() % 2;
        for n in entry.poly.exponents() {
            if n % 2 != parts_parity {
                report.push(
                    Some(i),
                    format!(
                        "exponent {n} of {} is not congruent to |Γ| = {} mod 2",
                        entry.poly,
                        entry.gamma.len()
                    ),
                );
            }
        }
        for (m, rank) in entry.degree_ranks.iter() {
            if rank.is_zero() {
                continue;
            }
            if m.rem_euclid(2) != expected {
                report.push(
                    Some(i),
                    format!("occupied degree {m} has parity {} instead of {expected}", m.rem_euclid(2)),
                );
            }
        }
    }
    report
}

/// Support validator for stalk tables.
///
/// The open stratum must carry exactly the constant polynomial 1 in degree
/// `−dim`. Every other stratum must have vanishing constant term,
/// equivalently occupied degrees `≤ −dim − 1`, together with the sharper
/// bound that the lowest exponent is at least `|Γ|` (so occupied degrees are
/// `≤ −dim − |Γ|`; on strata with `dim = |Γ|` this is the `−2|Γ|` bound).
pub fn support_condition_check(table: &StalkTable) -> Result<CheckReport> {
    if table.side != Side::Stalk {
        return Err(Error::WrongSide {
            expected: Side::Stalk.to_string(),
            found: table.side.to_string(),
        });
    }
    let mut report = CheckReport::default();
    for (i, entry) in table.entries.iter().enumerate() {
        if entry.gamma.is_empty() {
            if !entry.poly.is_one() {
                report.push(Some(i), format!("open stratum polynomial is {}, expected 1", entry.poly));
            }
            let expected: BTreeMap<i64, BigUint> =
                [(-entry.dim, BigUint::one())].into_iter().collect();
            if entry.degree_ranks.0 != expected {
                report.push(
                    Some(i),
                    format!("open stratum ranks are not exactly {{{} ↦ 1}}", -entry.dim),
                );
            }
            continue;
        }
        if entry.poly.coeff(0) != BigInt::zero() {
            report.push(
                Some(i),
                format!(
                    "constant term of {} on stratum (ν={}, Γ={}) is nonzero",
                    entry.poly, entry.nu, entry.gamma
                ),
            );
        }
        for (m, rank) in entry.degree_ranks.iter() {
            if !rank.is_zero() && *m > -entry.dim - 1 {
                report.push(
                    Some(i),
                    format!("occupied degree {m} exceeds −dim−1 = {}", -entry.dim - 1),
                );
            }
        }
        if let Some(low) = entry.poly.low_degree() {
            if low < entry.gamma.len() {
                report.push(
                    Some(i),
                    format!(
                        "lowest exponent {low} is below the part count {}",
                        entry.gamma.len()
                    ),
                );
            }
        }
    }
    Ok(report)
}

/// Duality validator: a stalk table and a costalk table over the same
/// strata must have rank maps related by `m ↦ −m − 2·dim` on each stratum.
pub fn duality_check(stalk: &StalkTable, costalk: &StalkTable) -> Result<CheckReport> {
    if stalk.side != Side::Stalk {
        return Err(Error::WrongSide {
            expected: Side::Stalk.to_string(),
            found: stalk.side.to_string(),
        });
    }
    if costalk.side != Side::Costalk {
        return Err(Error::WrongSide {
            expected: Side::Costalk.to_string(),
            found: costalk.side.to_string(),
        });
    }
    if stalk.ambient != costalk.ambient {
        return Err(Error::AmbientMismatch(
            "stalk and costalk tables describe different spaces".into(),
        ));
    }
    if stalk.entries.len() != costalk.entries.len() {
        return Err(Error::AmbientMismatch(format!(
            "tables have {} vs {} strata",
            stalk.entries.len(),
            costalk.entries.len()
        )));
    }
    let mut report = CheckReport::default();
    for (i, (s, c)) in stalk.entries.iter().zip(&costalk.entries).enumerate() {
        if s.nu != c.nu || s.gamma != c.gamma || s.dim != c.dim {
            report.push(Some(i), "stratum lists disagree".into());
            continue;
        }
        let reflected: BTreeMap<i64, BigUint> = s
            .degree_ranks
            .0
            .iter()
            .map(|(m, r)| (-m - 2 * s.dim, r.clone()))
            .collect();
        if reflected != c.degree_ranks.0 {
            report.push(
                Some(i),
                format!(
                    "costalk ranks on (ν={}, Γ={}) are not the m ↦ −m−2·dim reflection",
                    s.nu, s.gamma
                ),
            );
        }
    }
    Ok(report)
}

/// Internal-consistency validator: recomputes each entry's degree map from
/// its polynomial, dimension and side.
pub fn reindex_check(table: &StalkTable) -> CheckReport {
    let mut report = CheckReport::default();
    for (i, entry) in table.entries.iter().enumerate() {
        let expected = reindex(&entry.poly, entry.dim, table.side);
        if expected != entry.degree_ranks {
            report.push(
                Some(i),
                format!(
                    "degree map of stratum (ν={}, Γ={}) does not match its polynomial",
                    entry.nu, entry.gamma
                ),
            );
        }
    }
    report
}
