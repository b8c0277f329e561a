//! Numeric ledger for bundles on geometric formal orbifolds: a bundle is
//! recorded as (cover order, rank, degree on the representing cover), and
//! the degree/slope laws, refinement invariance and the projection formula
//! are checked as exact identities on these records.

use super::BundleError;
use crate::rat::{rint, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LedgerBundle {
    /// Order of the Galois group of the representing cover.
    pub gamma: u64,
    pub rank: u64,
    /// Degree on the representing cover (not the orbifold degree).
    pub degree: i64,
}

impl LedgerBundle {
    pub fn new(gamma: u64, rank: u64, degree: i64) -> Result<Self, BundleError> {
        if gamma == 0 || rank == 0 {
            return Err(BundleError::BadLedger(
                "cover order and rank must be positive".into(),
            ));
        }
        Ok(LedgerBundle { gamma, rank, degree })
    }

    /// Orbifold degree: deg(V) / |Gamma|.
    pub fn orb_degree(&self) -> Rat {
        Rat::new(self.degree as i128, self.gamma as i128)
    }

    /// Orbifold slope: orbifold degree divided by rank.
    pub fn orb_slope(&self) -> Rat {
        self.orb_degree() / rint(self.rank as i128)
    }

    /// Re-represent on a cover refined by a factor k: the degree scales by
    /// the index, so orbifold degree and slope are unchanged.
    pub fn refine(&self, k: u64) -> Self {
        LedgerBundle {
            gamma: self.gamma * k,
            rank: self.rank,
            degree: self.degree * k as i64,
        }
    }

    pub fn dual(&self) -> Self {
        LedgerBundle { gamma: self.gamma, rank: self.rank, degree: -self.degree }
    }

    pub fn tensor(&self, other: &Self) -> Result<Self, BundleError> {
        if self.gamma != other.gamma {
            return Err(BundleError::CoverMismatch { a: self.gamma, b: other.gamma });
        }
        Ok(LedgerBundle {
            gamma: self.gamma,
            rank: self.rank * other.rank,
            degree: self.rank as i64 * other.degree + other.rank as i64 * self.degree,
        })
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, BundleError> {
        if self.gamma != other.gamma {
            return Err(BundleError::CoverMismatch { a: self.gamma, b: other.gamma });
        }
        Ok(LedgerBundle {
            gamma: self.gamma,
            rank: self.rank + other.rank,
            degree: self.degree + other.degree,
        })
    }

    /// Pullback along a finite etale cover of degree dcov: rank unchanged,
    /// degree multiplied.
    pub fn pullback_etale(&self, dcov: u64) -> Self {
        LedgerBundle {
            gamma: self.gamma,
            rank: self.rank,
            degree: self.degree * dcov as i64,
        }
    }

    /// Direct image along a finite etale cover of degree dcov: rank
    /// multiplied, degree preserved (equal Euler characteristics plus the
    /// etale Riemann-Hurwitz relation between the two genera).
    pub fn pushforward_etale(&self, dcov: u64) -> Self {
        LedgerBundle {
            gamma: self.gamma,
            rank: self.rank * dcov,
            degree: self.degree,
        }
    }

    /// Frobenius pullback: degree scales by the characteristic.
    pub fn frobenius_pullback(&self, p: u64) -> Self {
        LedgerBundle {
            gamma: self.gamma,
            rank: self.rank,
            degree: self.degree * p as i64,
        }
    }

    /// Slope-comparison semistability against an explicit list of
    /// sub-bundle records.
    pub fn semistable_against(&self, subs: &[LedgerBundle]) -> bool {
        subs.iter().all(|w| w.orb_slope() <= self.orb_slope())
    }
}

/// Residual of the projection formula on ledger records: both sides of
/// `f_*(f^* V (x) F) = V (x) f_* F` are expanded with the ledger rules and
/// their rank and degree differences returned. The contract is (0, 0).
pub fn projection_formula_residual(
    v: &LedgerBundle,
    f: &LedgerBundle,
    dcov: u64,
) -> Result<(i128, i128), BundleError> {
    if v.gamma != f.gamma {
        return Err(BundleError::CoverMismatch { a: v.gamma, b: f.gamma });
    }
    let lhs = v.pullback_etale(dcov).tensor(f)?.pushforward_etale(dcov);
    let rhs = v.tensor(&f.pushforward_etale(dcov))?;
    Ok((
        lhs.rank as i128 - rhs.rank as i128,
        lhs.degree as i128 - rhs.degree as i128,
    ))
}
