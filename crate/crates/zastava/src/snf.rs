//! Smith normal form of integer matrices.
//!
//! [`smith_normal_form`] factors `A = U·D·V` with `U`, `V` unimodular and
//! `D` diagonal with a divisibility chain `d₁ | d₂ | … ≥ 0` (zeros last).
//! Pivots are chosen by smallest nonzero absolute value, which keeps
//! coefficient growth tame at the matrix sizes this crate deals with;
//! correctness does not depend on the pivoting rule.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::matrix::IntMatrix;

/// The factorization `A = U·D·V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Number of nonzero diagonal entries of `D`.
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).take_while(|&i| !self.d[(i, i)].is_zero()).count()
    }

    /// The nonzero diagonal entries `d₁ | d₂ | …`, all positive.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .filter(|d| !d.is_zero())
            .collect()
    }
}

struct Calc {
    d: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

// Every mutation keeps A = U·D·V: a row operation E on D is compensated by
// U ← U·E⁻¹, a column operation F by V ← F⁻¹·V.
impl Calc {
    fn new(a: &IntMatrix) -> Self {
        Calc {
            d: a.clone(),
            u: IntMatrix::identity(a.rows()),
            v: IntMatrix::identity(a.cols()),
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.d.swap_rows(i, j);
        self.u.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.d.swap_cols(i, j);
        self.v.swap_rows(i, j);
    }

    /// `R_i += t·R_j` on `D`.
    fn add_row(&mut self, i: usize, j: usize, t: &BigInt) {
        self.d.add_row_multiple(i, j, t);
        self.u.add_col_multiple(j, i, &-t);
    }

    /// `C_i += t·C_j` on `D`.
    fn add_col(&mut self, i: usize, j: usize, t: &BigInt) {
        self.d.add_col_multiple(i, j, t);
        self.v.add_row_multiple(j, i, &-t);
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        self.u.negate_col(i);
    }

    /// Position of a smallest-in-absolute-value nonzero entry of the
    /// trailing submatrix starting at `(k, k)`, if any.
    fn min_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in k..self.d.rows() {
            for j in k..self.d.cols() {
                let e = &self.d[(i, j)];
                if e.is_zero() {
                    continue;
                }
                let a = e.abs();
                match &best {
                    Some((_, m)) if *m <= a => {}
                    _ => best = Some(((i, j), a)),
                }
            }
        }
        best.map(|(pos, _)| pos)
    }

    /// Clears row and column `k` against the pivot at `(k, k)` with
    /// Euclidean steps, re-selecting the pivot whenever a remainder becomes
    /// the new minimum, and then enforces that the pivot divides the whole
    /// trailing submatrix.
    fn process_pivot(&mut self, k: usize) -> bool {
        loop {
            let Some((pi, pj)) = self.min_pivot(k) else {
                return false;
            };
            self.swap_rows(k, pi);
            self.swap_cols(k, pj);

            let mut reduced = false;
            for i in k + 1..self.d.rows() {
                if self.d[(i, k)].is_zero() {
                    continue;
                }
                let t = -(&self.d[(i, k)] / &self.d[(k, k)]);
                if !t.is_zero() {
                    self.add_row(i, k, &t);
                }
                reduced |= !self.d[(i, k)].is_zero();
            }
            for j in k + 1..self.d.cols() {
                if self.d[(k, j)].is_zero() {
                    continue;
                }
                let t = -(&self.d[(k, j)] / &self.d[(k, k)]);
                if !t.is_zero() {
                    self.add_col(j, k, &t);
                }
                reduced |= !self.d[(k, j)].is_zero();
            }
            if reduced {
                // Some remainder survived; it is smaller than the pivot, so
                // the next round picks it up.
                continue;
            }

            // Row and column k are clear. Make the pivot divide everything
            // that remains, pulling one offending row in when necessary.
            if let Some(bad_row) = self.find_nondivisible_row(k) {
                self.add_row(k, bad_row, &BigInt::from(1));
                continue;
            }
            if self.d[(k, k)].is_negative() {
                self.negate_row(k);
            }
            return true;
        }
    }

    fn find_nondivisible_row(&self, k: usize) -> Option<usize> {
        let pivot = &self.d[(k, k)];
        for i in k + 1..self.d.rows() {
            for j in k + 1..self.d.cols() {
                if !self.d[(i, j)].mod_floor(pivot).is_zero() {
                    return Some(i);
                }
            }
        }
        None
    }
}

/// Computes the Smith normal form of `a`.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let mut calc = Calc::new(a);
    let steps = a.rows().min(a.cols());
    for k in 0..steps {
        if !calc.process_pivot(k) {
            break;
        }
    }
    SmithDecomposition {
        u: calc.u,
        d: calc.d,
        v: calc.v,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, entries: &[i64]) -> IntMatrix {
        IntMatrix::from_ints(rows, cols, entries).unwrap()
    }

    fn check_factorization(a: &IntMatrix) -> SmithDecomposition {
        let snf = smith_normal_form(a);
        let product = snf.u.matmul(&snf.d).unwrap().matmul(&snf.v).unwrap();
        assert_eq!(&product, a, "A = U·D·V");
        assert!(snf.d.is_diagonal());
        let factors = snf.invariant_factors();
        for w in factors.windows(2) {
            assert!(w[1].mod_floor(&w[0]).is_zero(), "divisibility chain");
        }
        snf
    }

    #[test]
    fn identity_is_fixed() {
        let snf = check_factorization(&IntMatrix::identity(3));
        assert!(snf.d.is_identity());
        assert_eq!(snf.rank(), 3);
    }

    #[test]
    fn hand_checked_2x2() {
        // gcd of entries is 2 and |det| = 8, so the factors are (2, 4).
        let snf = check_factorization(&m(2, 2, &[2, 4, 6, 8]));
        assert_eq!(
            snf.invariant_factors(),
            vec![BigInt::from(2), BigInt::from(4)]
        );
    }

    #[test]
    fn zero_matrix() {
        let snf = check_factorization(&m(2, 3, &[0, 0, 0, 0, 0, 0]));
        assert!(snf.d.is_zero());
        assert_eq!(snf.rank(), 0);
        assert!(snf.invariant_factors().is_empty());
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        let snf = check_factorization(&m(2, 3, &[1, 2, 3, 2, 4, 6]));
        assert_eq!(snf.rank(), 1);
        let snf = check_factorization(&m(3, 1, &[4, 6, 10]));
        assert_eq!(snf.invariant_factors(), vec![BigInt::from(2)]);
    }

    #[test]
    fn negative_entries_normalize() {
        let snf = check_factorization(&m(2, 2, &[-2, 0, 0, -3]));
        assert_eq!(
            snf.invariant_factors(),
            vec![BigInt::from(1), BigInt::from(6)]
        );
    }

    #[test]
    fn single_pathological_entry() {
        let snf = check_factorization(&m(1, 1, &[-7]));
        assert_eq!(snf.invariant_factors(), vec![BigInt::from(7)]);
    }
}
