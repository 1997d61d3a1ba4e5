//! Root systems from Cartan matrices, and coroot-lattice combinatorics.
//!
//! Everything downstream works in coordinates: a [`Coweight`] is an integer
//! vector in the basis of simple coroots. Root systems are specified by a
//! [`CartanMatrix`] only; no Euclidean embedding is ever constructed.
//!
//! Index convention, used consistently everywhere in this crate: the entry
//! `a[i][j]` of a Cartan matrix is the pairing of the j-th simple coroot with
//! the i-th simple root,
//!
//! ```text
//! a[i][j] = ⟨αⱼ∨, αᵢ⟩ = 2(αᵢ, αⱼ)/(αⱼ, αⱼ).
//! ```
//!
//! With this orientation, reflecting coroot-coordinate vectors through
//! `v ↦ v − (A·v)ᵢ·eᵢ` generates exactly the coroots of the group, and the
//! transposed recursion generates its roots in simple-root coordinates. The
//! built-in matrices below follow this convention (so e.g. `B2` is
//! `[[2,-2],[-1,2]]`, whose positive coroots are `(1,0),(0,1),(1,1),(2,1)`).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Closure stops with [`Error::NotFiniteType`] once this many distinct roots
/// have been generated. Large enough for every finite type of rank ≤ 8,
/// small enough to fail fast on affine input.
pub const REFLECTION_CLOSURE_BOUND: usize = 10_000;

/// An integer vector in the simple-coroot basis.
///
/// The derived `Ord` is plain lexicographic order on coordinates, used for
/// canonical sorting; the root-theoretic dominance order is [`Coweight::leq`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight {
    coords: Vec<i64>,
}

impl Coweight {
    pub fn new(coords: Vec<i64>) -> Self {
        Coweight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Coweight {
            coords: vec![0; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// True when the coweight is a nonnegative combination of simple coroots,
    /// i.e. lies in the monoid over which partitions and strata are indexed.
    pub fn is_dominant_sum(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// The order `λ ⪯ μ`: true iff `μ − λ` is a sum of positive coroots,
    /// equivalently iff every coordinate of `μ − λ` is nonnegative.
    pub fn leq(&self, other: &Coweight) -> Result<bool> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| a <= b))
    }

    /// `⟨μ, ρ⟩`: each simple coroot pairs to 1 with the half-sum of positive
    /// roots, so this is the coordinate sum (the "height" of μ).
    pub fn pairing_rho(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// `⟨μ, 2ρ⟩ = 2⟨μ, ρ⟩`.
    pub fn pairing_2rho(&self) -> i64 {
        2 * self.pairing_rho()
    }

    pub fn checked_add(&self, other: &Coweight) -> Result<Coweight> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(Coweight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Coweight) -> Result<Coweight> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(Coweight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn negated(&self) -> Coweight {
        Coweight {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    fn ensure_dominant_sum(&self) -> Result<()> {
        if self.is_dominant_sum() {
            Ok(())
        } else {
            Err(Error::NotDominantSum(self.to_string()))
        }
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// All coweights `x` with `0 ⪯ x ⪯ bound`, in ascending lexicographic order.
pub fn coweight_box(bound: &Coweight) -> Result<Vec<Coweight>> {
    bound.ensure_dominant_sum()?;
    let mut out = vec![Coweight::zero(bound.rank())];
    for (axis, &b) in bound.coords.iter().enumerate() {
        let mut next = Vec::with_capacity(out.len() * (b as usize + 1));
        for prefix in &out {
            for v in 0..=b {
                let mut coords = prefix.coords.clone();
                coords[axis] = v;
                next.push(Coweight::new(coords));
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// A finite-type Cartan matrix; see the module docs for the index convention.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    #[allow(clippy::needless_range_loop)]
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let rank = entries.len();
        if rank == 0 {
            return Err(Error::InvalidCartan("rank must be positive".into()));
        }
        if entries.iter().any(|row| row.len() != rank) {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        for i in 0..rank {
            if entries[i][i] != 2 {
                return Err(Error::InvalidCartan(format!(
                    "diagonal entry ({i},{i}) is {}, expected 2",
                    entries[i][i]
                )));
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                if entries[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry ({i},{j}) is positive"
                    )));
                }
                if (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "entries ({i},{j}) and ({j},{i}) must vanish together"
                    )));
                }
            }
        }
        Ok(CartanMatrix { rank, entries })
    }

    /// Built-in matrices for the named types accepted on the command line:
    /// `A1`..`A8`, `B2`..`B4`, `C2`..`C4`, `D4`, `G2`, `F4`.
    pub fn named(name: &str) -> Result<Self> {
        let unknown = || {
            Error::InvalidCartan(format!(
                "unknown type `{name}` (expected A1..A8, B2..B4, C2..C4, D4, G2, F4)"
            ))
        };
        let (letter, n): (char, usize) = {
            let mut chars = name.chars();
            let letter = chars.next().ok_or_else(unknown)?;
            let n = chars.as_str().parse().map_err(|_| unknown())?;
            (letter.to_ascii_uppercase(), n)
        };
        let entries = match (letter, n) {
            ('A', 1..=8) => chain(n, &[]),
            // The last simple root is short: its column carries the −2.
            ('B', 2..=4) => chain(n, &[(n - 2, n - 1, -2)]),
            ('C', 2..=4) => chain(n, &[(n - 1, n - 2, -2)]),
            ('D', 4) => {
                // Star with center node 1 (0-indexed).
                let mut m = chain(3, &[]);
                for row in &mut m {
                    row.push(0);
                }
                m.push(vec![0, 0, 0, 2]);
                m[1][3] = -1;
                m[3][1] = -1;
                m
            }
            ('G', 2) => vec![vec![2, -1], vec![-3, 2]],
            ('F', 4) => vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2],
            ],
            _ => return Err(unknown()),
        };
        CartanMatrix::new(entries)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// `(A·v)ᵢ` for a coroot-coordinate vector `v`.
    fn apply_row(&self, i: usize, v: &[i64]) -> i64 {
        self.entries[i].iter().zip(v).map(|(a, c)| a * c).sum()
    }

    /// `(Aᵀ·v)ᵢ` for a root-coordinate vector `v`.
    fn apply_col(&self, i: usize, v: &[i64]) -> i64 {
        v.iter()
            .enumerate()
            .map(|(j, c)| self.entries[j][i] * c)
            .sum()
    }
}

/// Tridiagonal simply-laced chain of the given rank, with the listed
/// overrides applied afterwards.
#[allow(clippy::needless_range_loop)]
fn chain(n: usize, overrides: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = 2;
        if i + 1 < n {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    for &(i, j, v) in overrides {
        m[i][j] = v;
    }
    m
}

/// Dimensions of the torus, unipotent radical and Borel of a reductive group
/// with the given root system and torus rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDims {
    pub dim_t: usize,
    pub dim_u: usize,
    pub dim_b: usize,
}

/// A finite root system, stored as the positive coroots (in simple-coroot
/// coordinates) together with the positive roots (in simple-root
/// coordinates); the latter are only needed for coweight-against-root
/// pairings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    cartan: CartanMatrix,
    positive_coroots: Vec<Coweight>,
    positive_roots: Vec<Vec<i64>>,
}

impl RootSystem {
    /// Runs the reflection closure on the simple (co)roots and keeps the
    /// positive half. Fails with [`Error::NotFiniteType`] when the closure
    /// exceeds [`REFLECTION_CLOSURE_BOUND`] vectors.
    pub fn build(cartan: CartanMatrix) -> Result<Self> {
        let positive_coroots = reflection_closure(&cartan, false)?
            .into_iter()
            .map(Coweight::new)
            .collect();
        let positive_roots = reflection_closure(&cartan, true)?;
        Ok(RootSystem {
            cartan,
            positive_coroots,
            positive_roots,
        })
    }

    pub fn named(name: &str) -> Result<Self> {
        Self::build(CartanMatrix::named(name)?)
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// Positive coroots in simple-coroot coordinates, sorted by height and
    /// then lexicographically. This fixed order is the enumeration order used
    /// by the partition-function dynamic programming and its oracle.
    pub fn positive_coroots(&self) -> &[Coweight] {
        &self.positive_coroots
    }

    /// Positive roots in simple-root coordinates, same ordering scheme.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// `⟨λ, α⟩` for a coweight `λ` and a root `α` given in simple-root
    /// coordinates `m`: bilinearity gives `Σᵢⱼ cᵢ mⱼ ⟨αᵢ∨, αⱼ⟩ = Σⱼ mⱼ (A·c)ⱼ`
    /// in the index convention of this module.
    pub fn pairing_coweight_root(&self, lambda: &Coweight, root: &[i64]) -> Result<i64> {
        if lambda.rank() != self.rank() {
            return Err(Error::RankMismatch {
                left: lambda.rank(),
                right: self.rank(),
            });
        }
        Ok((0..self.rank())
            .map(|j| root[j] * self.cartan.apply_row(j, lambda.coords()))
            .sum())
    }

    /// Group dimensions for a reductive group with this root system whose
    /// maximal torus has the given rank.
    pub fn group_dims(&self, torus_rank: usize) -> Result<GroupDims> {
        if torus_rank < self.rank() {
            return Err(Error::TorusRankTooSmall {
                torus_rank,
                rank: self.rank(),
            });
        }
        let dim_u = self.positive_coroots.len();
        Ok(GroupDims {
            dim_t: torus_rank,
            dim_u,
            dim_b: torus_rank + dim_u,
        })
    }

    /// The zero coweight of matching rank.
    pub fn zero_coweight(&self) -> Coweight {
        Coweight::zero(self.rank())
    }
}

/// Orbit of the simple basis vectors under the simple reflections
/// `v ↦ v − (A·v)ᵢ·eᵢ` (or the transposed form), restricted to the positive
/// cone. The full orbit is the whole root system, so the positive half is
/// read off by sign.
fn reflection_closure(cartan: &CartanMatrix, transposed: bool) -> Result<Vec<Vec<i64>>> {
    let rank = cartan.rank();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        seen.insert(e.clone());
        frontier.push(e);
    }
    while let Some(v) = frontier.pop() {
        for i in 0..rank {
            let pairing = if transposed {
                cartan.apply_col(i, &v)
            } else {
                cartan.apply_row(i, &v)
            };
            let mut w = v.clone();
            w[i] -= pairing;
            if seen.insert(w.clone()) {
                if seen.len() > REFLECTION_CLOSURE_BOUND {
                    return Err(Error::NotFiniteType {
                        bound: REFLECTION_CLOSURE_BOUND,
                    });
                }
                frontier.push(w);
            }
        }
    }
    let mut positive: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|v| v.iter().all(|&c| c >= 0) && v.iter().any(|&c| c != 0))
        .collect();
    positive.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    Ok(positive)
}
