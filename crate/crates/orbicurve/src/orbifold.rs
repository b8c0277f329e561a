//! Curves, branch data, formal orbifolds and morphism descriptors.
//!
//! Points are opaque ids: every formula in scope consumes only genus,
//! degrees and local profiles, so curves carry no function-field data.

use std::collections::{BTreeMap, BTreeSet};

use crate::localfield::{ProfileError, RamificationProfile};

/// Opaque name of a closed point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointId(pub String);

impl PointId {
    pub fn new(s: impl Into<String>) -> Self {
        PointId(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for PointId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum OrbifoldError {
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error("INVALID_ORBIFOLD: {0}")]
    Invalid(String),
    #[error("INVALID_MORPHISM: {0}")]
    InvalidMorphism(String),
}

/// A smooth projective curve: a name, a genus and its named points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub id: String,
    pub genus: u64,
    pub points: BTreeSet<PointId>,
}

impl Curve {
    pub fn new(id: impl Into<String>, genus: u64, points: impl IntoIterator<Item = PointId>) -> Self {
        Curve { id: id.into(), genus, points: points.into_iter().collect() }
    }
}

/// Finitely supported assignment of ramification profiles to points.
/// Trivial profiles are never stored, so the map's keys are the support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchData {
    p: u64,
    assignment: BTreeMap<PointId, RamificationProfile>,
}

impl BranchData {
    /// The trivial branch data O.
    pub fn trivial(p: u64) -> Self {
        BranchData { p, assignment: BTreeMap::new() }
    }

    pub fn new(
        p: u64,
        entries: impl IntoIterator<Item = (PointId, RamificationProfile)>,
    ) -> Result<Self, OrbifoldError> {
        let mut assignment = BTreeMap::new();
        for (pt, profile) in entries {
            if profile.residue_char() != p {
                return Err(OrbifoldError::Invalid(format!(
                    "profile at {pt} has characteristic {} but branch data is over {p}",
                    profile.residue_char()
                )));
            }
            if !profile.is_trivial() {
                assignment.insert(pt, profile);
            }
        }
        Ok(BranchData { p, assignment })
    }

    pub fn residue_char(&self) -> u64 {
        self.p
    }

    /// Profile at a point; trivial off the support.
    pub fn at(&self, pt: &PointId) -> RamificationProfile {
        self.assignment
            .get(pt)
            .cloned()
            .unwrap_or_else(|| RamificationProfile::trivial(self.p))
    }

    pub fn support(&self) -> impl Iterator<Item = &PointId> {
        self.assignment.keys()
    }

    pub fn support_set(&self) -> BTreeSet<PointId> {
        self.assignment.keys().cloned().collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&PointId, &RamificationProfile)> {
        self.assignment.iter()
    }

    pub fn is_trivial(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Pointwise compositum; supp(PP') = supp(P) u supp(P').
    pub fn join(&self, other: &Self) -> Result<Self, OrbifoldError> {
        if self.p != other.p {
            return Err(ProfileError::PrimeMismatch(self.p, other.p).into());
        }
        let mut out = self.assignment.clone();
        for (pt, q) in &other.assignment {
            let merged = match out.get(pt) {
                Some(p) => p.compositum(q)?,
                None => q.clone(),
            };
            out.insert(pt.clone(), merged);
        }
        Ok(BranchData { p: self.p, assignment: out })
    }

    /// Pointwise meet; supp is contained in supp(P) n supp(P').
    pub fn meet(&self, other: &Self) -> Result<Self, OrbifoldError> {
        if self.p != other.p {
            return Err(ProfileError::PrimeMismatch(self.p, other.p).into());
        }
        let mut out = BTreeMap::new();
        for (pt, p) in &self.assignment {
            if let Some(q) = other.assignment.get(pt) {
                let m = p.meet(q)?;
                if !m.is_trivial() {
                    out.insert(pt.clone(), m);
                }
            }
        }
        Ok(BranchData { p: self.p, assignment: out })
    }

    /// Pointwise containment.
    pub fn leq(&self, other: &Self) -> bool {
        self.p == other.p
            && self
                .assignment
                .iter()
                .all(|(pt, prof)| prof.leq(&other.at(pt)))
    }
}

/// A curve with branch data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalOrbifold {
    pub curve: Curve,
    pub branch: BranchData,
}

impl FormalOrbifold {
    pub fn new(curve: Curve, branch: BranchData) -> Result<Self, OrbifoldError> {
        for pt in branch.support() {
            if !curve.points.contains(pt) {
                return Err(OrbifoldError::Invalid(format!(
                    "branch support point {pt} is not a point of curve {}",
                    curve.id
                )));
            }
        }
        Ok(FormalOrbifold { curve, branch })
    }

    pub fn plain(curve: Curve, p: u64) -> Self {
        let branch = BranchData::trivial(p);
        FormalOrbifold { curve, branch }
    }
}

/// One source point of a morphism descriptor: where it maps and the profile
/// of the local extension `K_{Y,y} / K_{X,f(y)}` induced by the covering
/// map itself. Tame points carry `tame e_y`; descriptors generated from
/// explicit covers carry the full (possibly wild) local profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberPoint {
    pub source: PointId,
    pub target: PointId,
    pub local_ext: RamificationProfile,
}

impl FiberPoint {
    /// Ramification index e_y = [K_{Y,y} : K_{X,x}] in this model.
    pub fn local_degree(&self) -> u64 {
        self.local_ext.degree()
    }
}

/// Combinatorial descriptor of a cover of formal orbifolds f: (Y,Q) -> (X,P).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismDescriptor {
    pub degree: u64,
    pub source: FormalOrbifold,
    pub target: FormalOrbifold,
    pub fiber: Vec<FiberPoint>,
}

/// Per-point verdicts from `morphism_validate`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismReport {
    /// Q >= f*P everywhere.
    pub valid: bool,
    /// Per source point: Q(y) = f*P(y) and degree bookkeeping collapses,
    /// i.e. the orbifold morphism is etale there.
    pub etale: BTreeMap<PointId, bool>,
    /// Points where Q(y) does not contain f*P(y).
    pub violations: Vec<PointId>,
}

impl MorphismDescriptor {
    /// Structural sanity: every declared source point appears exactly once
    /// in the fiber, targets are declared points, and over every declared
    /// target point the local degrees sum to the covering degree.
    pub fn structure_validate(&self) -> Result<(), OrbifoldError> {
        let mut seen = BTreeSet::new();
        let mut per_target: BTreeMap<&PointId, u64> = BTreeMap::new();
        for fp in &self.fiber {
            if !self.source.curve.points.contains(&fp.source) {
                return Err(OrbifoldError::InvalidMorphism(format!(
                    "fiber source {} is not a declared point",
                    fp.source
                )));
            }
            if !self.target.curve.points.contains(&fp.target) {
                return Err(OrbifoldError::InvalidMorphism(format!(
                    "fiber target {} is not a declared point",
                    fp.target
                )));
            }
            if !seen.insert(fp.source.clone()) {
                return Err(OrbifoldError::InvalidMorphism(format!(
                    "source point {} listed twice",
                    fp.source
                )));
            }
            *per_target.entry(&fp.target).or_insert(0) += fp.local_degree();
        }
        for pt in &self.source.curve.points {
            if !seen.contains(pt) {
                return Err(OrbifoldError::InvalidMorphism(format!(
                    "source point {pt} has no fiber record"
                )));
            }
        }
        for pt in &self.target.curve.points {
            let total = per_target.get(pt).copied().unwrap_or(0);
            if total != self.degree {
                return Err(OrbifoldError::InvalidMorphism(format!(
                    "local degrees over {pt} sum to {total}, expected {}",
                    self.degree
                )));
            }
        }
        Ok(())
    }

    /// `f*P(y) = P(f(y)) K_{Y,y}` at one fiber point. Tame local extensions
    /// base-change the profile; a wild local extension is in-model when it
    /// absorbs P(x) entirely (the Galois-cover case P(x) <= K_{Y,y}) or when
    /// P(x) is tame, in which case only the ramification index matters and
    /// the tame order drops by gcd. Anything else mixes two wild parts and
    /// is rejected.
    pub fn pullback_profile(
        target_profile: &RamificationProfile,
        local_ext: &RamificationProfile,
    ) -> Result<RamificationProfile, ProfileError> {
        let p = target_profile.residue_char();
        if target_profile.is_trivial() {
            return Ok(RamificationProfile::trivial(p));
        }
        if local_ext.is_tame() {
            return target_profile.base_change_tame(local_ext.degree());
        }
        if target_profile.leq(local_ext) {
            return Ok(RamificationProfile::trivial(p));
        }
        if target_profile.is_tame() {
            let n = target_profile.tame_order();
            return RamificationProfile::tame(p, n / num_integer::gcd(n, local_ext.degree()));
        }
        Err(ProfileError::WildBaseChange(local_ext.degree()))
    }

    /// Pull back arbitrary branch data on the target along this descriptor.
    /// Requires every local extension tame; support lands inside the
    /// preimage of supp(P).
    pub fn pullback_branch_data(&self, data: &BranchData) -> Result<BranchData, OrbifoldError> {
        let mut entries = vec![];
        for fp in &self.fiber {
            if !fp.local_ext.is_tame() {
                return Err(ProfileError::WildBaseChange(fp.local_degree()).into());
            }
            let prof = Self::pullback_profile(&data.at(&fp.target), &fp.local_ext)?;
            entries.push((fp.source.clone(), prof));
        }
        BranchData::new(data.residue_char(), entries)
    }

    /// Morphism check per the containment criterion Q >= f*P, with per-point
    /// etale flags (Q(y) = f*P(y) and e_y [Q(y):K_{Y,y}] = [P(x):K_{X,x}]).
    pub fn validate(&self) -> Result<MorphismReport, OrbifoldError> {
        self.structure_validate()?;
        let mut etale = BTreeMap::new();
        let mut violations = vec![];
        for fp in &self.fiber {
            let p_at = self.target.branch.at(&fp.target);
            let q_at = self.source.branch.at(&fp.source);
            let pulled = Self::pullback_profile(&p_at, &fp.local_ext)?;
            if !pulled.leq(&q_at) {
                violations.push(fp.source.clone());
                etale.insert(fp.source.clone(), false);
                continue;
            }
            let is_etale = q_at == pulled
                && q_at.degree() * fp.local_degree() == p_at.degree();
            etale.insert(fp.source.clone(), is_etale);
        }
        Ok(MorphismReport { valid: violations.is_empty(), etale, violations })
    }

    /// Identity descriptor (X,P) -> (X,P') over the same curve.
    pub fn identity(
        curve: Curve,
        source_branch: BranchData,
        target_branch: BranchData,
    ) -> Result<Self, OrbifoldError> {
        let p = source_branch.residue_char();
        let fiber = curve
            .points
            .iter()
            .map(|pt| FiberPoint {
                source: pt.clone(),
                target: pt.clone(),
                local_ext: RamificationProfile::trivial(p),
            })
            .collect();
        let source = FormalOrbifold::new(curve.clone(), source_branch)?;
        let target = FormalOrbifold::new(curve, target_branch)?;
        Ok(MorphismDescriptor { degree: 1, source, target, fiber })
    }
}

/// Local profile on the fiber product at a point w = (y, z): base-change
/// both profiles to the local field of the product (tame local degrees,
/// lcm-driven) and take the compositum.
pub fn fiber_product_profile(
    q_at_y: &RamificationProfile,
    r_at_z: &RamificationProfile,
    e_y: u64,
    e_z: u64,
) -> Result<RamificationProfile, ProfileError> {
    let p = q_at_y.residue_char();
    if e_y == 0 || e_y.is_multiple_of(p) {
        return Err(ProfileError::WildBaseChange(e_y));
    }
    if e_z == 0 || e_z.is_multiple_of(p) {
        return Err(ProfileError::WildBaseChange(e_z));
    }
    let e_w = num_integer::lcm(e_y, e_z);
    let qy = q_at_y.base_change_tame(e_w / e_y)?;
    let rz = r_at_z.base_change_tame(e_w / e_z)?;
    qy.compositum(&rz)
}
