//! Stratification catalogs with dimension formulas.
//!
//! Three families of spaces are cataloged, each stratified by a defect
//! coweight `ν` together with a partition `Γ ∈ 𝔓(ν)`:
//!
//! - partially symmetrized powers `C^μ`: stratum dimension `|Γ|`;
//! - Zastava schemes `Z^μ`: stratum dimension `|Γ| + ⟨μ−ν, 2ρ⟩`;
//! - Drinfeld compactifications of the stack of Borel torsors of degree λ
//!   on a genus-g curve: stratum dimension
//!   `|Γ| + ⟨λ−ν, 2ρ⟩ + (g−1)·dim B`.
//!
//! Dimensions of stacks may be negative; nothing here clamps them. Closure
//! relations between strata are not modeled; catalogs are flat lists.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, CoweightPartition};
use crate::rootdata::{coweight_box, Coweight, GroupDims, RootSystem};

/// A stratum of the Zastava scheme `Z^μ`, indexed by `ν ⪯ μ` and
/// `Γ ∈ 𝔓(ν)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZastavaStratum {
    pub mu: Coweight,
    pub nu: Coweight,
    pub gamma: CoweightPartition,
    pub dim: i64,
}

/// A stratum of the Drinfeld compactification of degree-λ Borel torsors,
/// indexed by the defect `mu ∈ Y_{⪰0}` and `Γ ∈ 𝔓(mu)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrinfeldStratum {
    pub lambda: Coweight,
    pub mu: Coweight,
    pub gamma: CoweightPartition,
    pub genus: u32,
    pub dims: GroupDims,
    pub dim: i64,
}

/// A stratum of the partially symmetrized power `C^μ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymPowerStratum {
    pub mu: Coweight,
    pub gamma: CoweightPartition,
    pub dim: i64,
}

/// Dimensions of the four torsor stacks attached to a degree `λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliDims {
    pub bun_t: i64,
    pub bun_b: i64,
    pub bun_bminus: i64,
    pub bun_u: i64,
}

/// Regularity of a torus degree relative to the genus: `in_bun_t_r` holds
/// when `⟨λ,α⟩ < 2−2g` for every positive root, `r_mu_smooth` when
/// `⟨λ,α⟩ > 2g−2` for every positive root. Both comparisons are strict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityBounds {
    pub in_bun_t_r: bool,
    pub r_mu_smooth: bool,
}

fn ensure_rank(rs: &RootSystem, cw: &Coweight) -> Result<()> {
    if cw.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            left: cw.rank(),
            right: rs.rank(),
        });
    }
    Ok(())
}

fn ensure_dominant(cw: &Coweight) -> Result<()> {
    if cw.is_dominant_sum() {
        Ok(())
    } else {
        Err(Error::NotDominantSum(cw.to_string()))
    }
}

/// The strata of `Z^μ`, one record per pair `(ν, Γ)` with `0 ⪯ ν ⪯ μ` and
/// `Γ ∈ 𝔓(ν)`, in ascending order of `ν` and then of `Γ`.
pub fn zastava_strata(rs: &RootSystem, mu: &Coweight) -> Result<Vec<ZastavaStratum>> {
    ensure_rank(rs, mu)?;
    ensure_dominant(mu)?;
    let mut out = Vec::new();
    for nu in coweight_box(mu)? {
        let complement_2rho = mu.checked_sub(&nu)?.pairing_2rho();
        for gamma in enumerate_partitions(&nu)? {
            let dim = gamma.len() as i64 + complement_2rho;
            out.push(ZastavaStratum {
                mu: mu.clone(),
                nu: nu.clone(),
                gamma,
                dim,
            });
        }
    }
    Ok(out)
}

/// The strata of the Drinfeld compactification with defect bounded by
/// `cutoff`. The full stratum set is indexed by the whole nonnegative
/// monoid, so a cutoff is mandatory.
pub fn drinfeld_strata(
    rs: &RootSystem,
    lambda: &Coweight,
    genus: u32,
    torus_rank: usize,
    cutoff: &Coweight,
) -> Result<Vec<DrinfeldStratum>> {
    ensure_rank(rs, lambda)?;
    ensure_rank(rs, cutoff)?;
    ensure_dominant(cutoff)?;
    let dims = rs.group_dims(torus_rank)?;
    let genus_term = (genus as i64 - 1) * dims.dim_b as i64;
    let mut out = Vec::new();
    for mu in coweight_box(cutoff)? {
        let degree_2rho = lambda.checked_sub(&mu)?.pairing_2rho();
        for gamma in enumerate_partitions(&mu)? {
            let dim = gamma.len() as i64 + degree_2rho + genus_term;
            out.push(DrinfeldStratum {
                lambda: lambda.clone(),
                mu: mu.clone(),
                gamma,
                genus,
                dims,
                dim,
            });
        }
    }
    Ok(out)
}

/// Dimension of the stratum of the unipotent compactification indexed by
/// `Γ ∈ 𝔓(μ)`: `|Γ| − ⟨μ,2ρ⟩ + (g−1)·dim U`.
pub fn bun_u_stratum_dim(
    rs: &RootSystem,
    mu: &Coweight,
    gamma: &CoweightPartition,
    genus: u32,
) -> Result<i64> {
    ensure_rank(rs, mu)?;
    let sum = gamma.sum_with_rank(rs.rank());
    if &sum != mu {
        return Err(Error::PartitionSumMismatch {
            sum: sum.to_string(),
            expected: mu.to_string(),
        });
    }
    let dim_u = rs.positive_coroots().len() as i64;
    Ok(gamma.len() as i64 - mu.pairing_2rho() + (genus as i64 - 1) * dim_u)
}

/// Dimensions of the stacks of T-, B-, B⁻- and U-torsors of degree `λ` on a
/// genus-`g` curve.
pub fn moduli_dims(
    rs: &RootSystem,
    lambda: &Coweight,
    genus: u32,
    torus_rank: usize,
) -> Result<ModuliDims> {
    ensure_rank(rs, lambda)?;
    let dims = rs.group_dims(torus_rank)?;
    let g1 = genus as i64 - 1;
    let degree = lambda.pairing_2rho();
    Ok(ModuliDims {
        bun_t: g1 * dims.dim_t as i64,
        bun_b: g1 * dims.dim_b as i64 + degree,
        bun_bminus: g1 * dims.dim_b as i64 - degree,
        bun_u: g1 * dims.dim_u as i64,
    })
}

/// Dimension `⟨μ, ρ⟩` of the central fiber of `Z^μ` over a point of the
/// closed stratum of `C^μ`.
pub fn central_fiber_dim(rs: &RootSystem, mu: &Coweight) -> Result<i64> {
    ensure_rank(rs, mu)?;
    ensure_dominant(mu)?;
    Ok(mu.pairing_rho())
}

/// Strict regularity bounds on a torus degree `λ` against every positive
/// root, computed through the Cartan pairing.
pub fn regularity_bounds(rs: &RootSystem, lambda: &Coweight, genus: u32) -> Result<RegularityBounds> {
    ensure_rank(rs, lambda)?;
    let upper = 2 - 2 * genus as i64;
    let lower = 2 * genus as i64 - 2;
    let mut in_bun_t_r = true;
    let mut r_mu_smooth = true;
    for root in rs.positive_roots() {
        let pairing = rs.pairing_coweight_root(lambda, root)?;
        in_bun_t_r &= pairing < upper;
        r_mu_smooth &= pairing > lower;
    }
    Ok(RegularityBounds {
        in_bun_t_r,
        r_mu_smooth,
    })
}

/// The strata of `C^μ`, one per `Γ ∈ 𝔓(μ)`, each of dimension `|Γ|`.
pub fn sympower_strata(rs: &RootSystem, mu: &Coweight) -> Result<Vec<SymPowerStratum>> {
    ensure_rank(rs, mu)?;
    ensure_dominant(mu)?;
    Ok(enumerate_partitions(mu)?
        .into_iter()
        .map(|gamma| {
            let dim = gamma.len() as i64;
            SymPowerStratum {
                mu: mu.clone(),
                gamma,
                dim,
            }
        })
        .collect())
}
