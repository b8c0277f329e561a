//! Orbifold genus, ramification divisors and the Riemann-Hurwitz identities
//! as exact residual checkers. Everything returns rationals; a consistent
//! descriptor makes every residual identically zero, not merely small.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::localfield::{ProfileError, RamificationProfile};
use crate::orbifold::{FormalOrbifold, MorphismDescriptor, OrbifoldError, PointId};
use crate::rat::{rint, Rat};

/// Finitely supported Q-divisor on a curve.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QDivisor {
    pub coefficients: BTreeMap<PointId, Rat>,
}

impl QDivisor {
    pub fn degree(&self) -> Rat {
        self.coefficients.values().cloned().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.values().all(|c| c.is_zero())
    }
}

/// degram/degree of a profile, the per-point genus contribution.
fn ram_ratio(profile: &RamificationProfile) -> Rat {
    Rat::new(profile.degram() as i128, profile.degree() as i128)
}

/// `g(X,P) = g(X) + 1/2 sum over supp(P) of degram(P(x)) / [P(x):K_x]`.
pub fn orbifold_genus(orb: &FormalOrbifold) -> Rat {
    let mut sum = Rat::zero();
    for (_, profile) in orb.branch.entries() {
        sum += ram_ratio(profile);
    }
    rint(orb.curve.genus as i128) + sum / rint(2)
}

/// Ramification divisor of a descriptor: at each source point y the
/// coefficient is `degram(Q(y)/P(f(y))) / [Q(y):K_{Y,y}]`, computed through
/// the two towers `K_x <= K_y <= Q(y)` and `K_x <= P(x) <= Q(y)`. Zero
/// exactly at etale points.
pub fn ramification_divisor(m: &MorphismDescriptor) -> Result<QDivisor, OrbifoldError> {
    m.structure_validate()?;
    let mut coefficients = BTreeMap::new();
    for fp in &m.fiber {
        let q = m.source.branch.at(&fp.source);
        let p_prof = m.target.branch.at(&fp.target);
        let dq = q.degree();
        let de = fp.local_degree();
        let dp = p_prof.degree();
        // [Q(y) : K_x] = dq * de must be a multiple of [P(x) : K_x]
        let total = dq
            .checked_mul(de)
            .ok_or_else(|| OrbifoldError::Invalid("degree overflow".into()))?;
        if total % dp != 0 {
            return Err(ProfileError::NotSubextension.into());
        }
        let ratio = total / dp; // [Q(y) : P(x)]
        let degram_over_base = q.degram() as i128 + dq as i128 * fp.local_ext.degram() as i128;
        let rel = degram_over_base - ratio as i128 * p_prof.degram() as i128;
        if rel < 0 {
            return Err(ProfileError::NotSubextension.into());
        }
        let coeff = Rat::new(rel, dq as i128);
        if !coeff.is_zero() {
            coefficients.insert(fp.source.clone(), coeff);
        }
    }
    Ok(QDivisor { coefficients })
}

/// Riemann-Hurwitz residual for formal orbifolds:
/// `(2 g(Y,Q) - 2) - d (2 g(X,P) - 2) - deg D`. The identity is checked with
/// the Euler-characteristic convention `d(2g(X,P)-2)`, under which it
/// specializes to the classical formula on trivial branch data.
pub fn rh_residual(m: &MorphismDescriptor) -> Result<Rat, OrbifoldError> {
    let d = rint(m.degree as i128);
    let gy = orbifold_genus(&m.source);
    let gx = orbifold_genus(&m.target);
    let div = ramification_divisor(m)?;
    Ok((rint(2) * gy - rint(2)) - d * (rint(2) * gx - rint(2)) - div.degree())
}

/// Classical Riemann-Hurwitz residual of the same descriptor, ignoring all
/// orbifold data: `(2g(Y)-2) - d(2g(X)-2) - sum_y degram(K_y/K_x)`.
pub fn classical_rh_residual(m: &MorphismDescriptor) -> Rat {
    let d = m.degree as i128;
    let gy = m.source.curve.genus as i128;
    let gx = m.target.curve.genus as i128;
    let ram: i128 = m.fiber.iter().map(|fp| fp.local_ext.degram() as i128).sum();
    rint((2 * gy - 2) - d * (2 * gx - 2) - ram)
}

/// One branched point of a Galois cover record: the inertia profile of
/// `Q(y_j)/P(x_j)` and the local degree `[Q(y_j):K_{Y,y_j}]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchPointRecord {
    pub inertia: RamificationProfile,
    pub q_local_degree: u64,
}

/// Numeric record of a G-Galois cover of (formal orbifold) curves. The
/// orbifold lists are empty for a plain cover of curves; `cover_orbifold`
/// pairs each Q-profile with the number of points carrying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisCoverRecord {
    pub group_order: u64,
    pub genus_base: u64,
    pub genus_cover: u64,
    pub branch: Vec<BranchPointRecord>,
    pub base_orbifold: Vec<RamificationProfile>,
    pub cover_orbifold: Vec<(RamificationProfile, u64)>,
}

impl GaloisCoverRecord {
    /// Plain record of a cover of curves: inertia = local extension profile.
    pub fn classical(
        group_order: u64,
        genus_base: u64,
        genus_cover: u64,
        inertia: impl IntoIterator<Item = RamificationProfile>,
    ) -> Self {
        GaloisCoverRecord {
            group_order,
            genus_base,
            genus_cover,
            branch: inertia
                .into_iter()
                .map(|profile| BranchPointRecord { inertia: profile, q_local_degree: 1 })
                .collect(),
            base_orbifold: vec![],
            cover_orbifold: vec![],
        }
    }

    fn orbifold_genus_base(&self) -> Rat {
        let mut sum = Rat::zero();
        for prof in &self.base_orbifold {
            sum += ram_ratio(prof);
        }
        rint(self.genus_base as i128) + sum / rint(2)
    }

    fn orbifold_genus_cover(&self) -> Rat {
        let mut sum = Rat::zero();
        for (prof, count) in &self.cover_orbifold {
            sum += rint(*count as i128) * ram_ratio(prof);
        }
        rint(self.genus_cover as i128) + sum / rint(2)
    }
}

/// Hilbert's form of Riemann-Hurwitz for a G-Galois cover of curves:
/// `(2g(Y)-2) - |G|(2g(X)-2) - sum_j (|G|/|I^j|) sum_i (|I^j_i|-1)`, the
/// inner sum taken over the lower filtration of the inertia profile.
pub fn hilbert_rh_residual(rec: &GaloisCoverRecord) -> Rat {
    let g = rint(rec.group_order as i128);
    let lhs = rint(2 * rec.genus_cover as i128 - 2);
    let base = g * rint(2 * rec.genus_base as i128 - 2);
    let mut ram = Rat::zero();
    for b in &rec.branch {
        let hil = rint(b.inertia.hilbert_sum() as i128);
        let isize = rint(b.inertia.degree() as i128);
        ram += g / isize * hil;
    }
    lhs - base - ram
}

/// Orbifold variant: genera are orbifold genera and each inertia term is
/// additionally divided by `[Q(y_j):K_{Y,y_j}]`.
pub fn orbifold_hilbert_rh_residual(rec: &GaloisCoverRecord) -> Rat {
    let g = rint(rec.group_order as i128);
    let lhs = rint(2) * rec.orbifold_genus_cover() - rint(2);
    let base = g * (rint(2) * rec.orbifold_genus_base() - rint(2));
    let mut ram = Rat::zero();
    for b in &rec.branch {
        let hil = rint(b.inertia.hilbert_sum() as i128);
        let isize = rint(b.inertia.degree() as i128);
        let dq = rint(b.q_local_degree as i128);
        ram += g / (isize * dq) * hil;
    }
    lhs - base - ram
}
