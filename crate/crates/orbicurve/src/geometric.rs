//! Geometricity verdicts for branch data.
//!
//! The engine applies the sufficient conditions (trivial data, purely wild
//! data, Harbater-Katz-Gabber configurations, the lcm rule, products of
//! geometric factors) and the tame iff-characterization; everything else is
//! Unknown. Unknown is a first-class answer: the rule set is deliberately
//! incomplete because a full characterization is an open problem, so the
//! engine never overclaims.

use num_integer::Integer;

use crate::orbifold::{BranchData, FormalOrbifold, PointId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictStatus {
    Geometric,
    NotGeometric,
    Unknown,
}

impl VerdictStatus {
    pub fn name(&self) -> &'static str {
        match self {
            VerdictStatus::Geometric => "Geometric",
            VerdictStatus::NotGeometric => "NotGeometric",
            VerdictStatus::Unknown => "Unknown",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
}

impl RuleId {
    pub fn name(&self) -> &'static str {
        match self {
            RuleId::R1 => "R1",
            RuleId::R2 => "R2",
            RuleId::R3 => "R3",
            RuleId::R4 => "R4",
            RuleId::R5 => "R5",
            RuleId::R6 => "R6",
        }
    }
}

/// Outcome of the rule engine, with the rule that fired and an optional
/// decomposition witness (factor branch data whose join recovers the input).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub rule: Option<RuleId>,
    pub citation: String,
    pub witness: Option<Vec<BranchData>>,
}

impl Verdict {
    fn geometric(rule: RuleId, citation: &str, witness: Option<Vec<BranchData>>) -> Self {
        Verdict {
            status: VerdictStatus::Geometric,
            rule: Some(rule),
            citation: citation.into(),
            witness,
        }
    }

    fn not_geometric(citation: &str) -> Self {
        Verdict {
            status: VerdictStatus::NotGeometric,
            rule: Some(RuleId::R5),
            citation: citation.into(),
            witness: None,
        }
    }

    fn unknown() -> Self {
        Verdict {
            status: VerdictStatus::Unknown,
            rule: None,
            citation: "no decision rule applies; geometricity is open for this configuration"
                .into(),
            witness: None,
        }
    }
}

/// Split branch data pointwise into its tame part (tame orders, no wild
/// components) and its wild part (trivial tame order, same wild multiset).
/// The join of the two parts recovers the input.
pub fn split_tame_wild(data: &BranchData) -> (BranchData, BranchData) {
    let p = data.residue_char();
    let mut tame_entries = vec![];
    let mut wild_entries = vec![];
    for (pt, prof) in data.entries() {
        if prof.tame_order() > 1 {
            tame_entries.push((
                pt.clone(),
                crate::localfield::RamificationProfile::tame(p, prof.tame_order())
                    .expect("tame part of a valid profile"),
            ));
        }
        if prof.wild_rank() > 0 {
            let wild = prof
                .wild()
                .iter()
                .map(|c| (c.label.clone(), c.jump))
                .collect();
            wild_entries.push((
                pt.clone(),
                crate::localfield::RamificationProfile::new(p, 1, wild)
                    .expect("wild part of a valid profile"),
            ));
        }
    }
    (
        BranchData::new(p, tame_entries).expect("tame split"),
        BranchData::new(p, wild_entries).expect("wild split"),
    )
}

fn is_projective_line(orb: &FormalOrbifold) -> bool {
    orb.curve.genus == 0
}

/// R3: two support points on the line, one purely tame of order n, the
/// other with tame part exactly n (arbitrary wild part): a local extension
/// with this shape is realized by a cover ramified only over the two points.
fn hkg_applies(orb: &FormalOrbifold) -> bool {
    if !is_projective_line(orb) {
        return false;
    }
    let support: Vec<&PointId> = orb.branch.support().collect();
    if support.len() != 2 {
        return false;
    }
    let a = orb.branch.at(support[0]);
    let b = orb.branch.at(support[1]);
    (a.is_tame() && b.tame_order() == a.tame_order())
        || (b.is_tame() && a.tame_order() == b.tame_order())
}

/// R4: on the line, with tame orders n_i at the support, let n_max be
/// maximal. If n_max equals the lcm of the other orders and either the
/// maximal point is tame or the maximum is attained twice, the data
/// decomposes into two-point factors each covered by R3.
fn lcm_rule(orb: &FormalOrbifold) -> Option<Vec<BranchData>> {
    if !is_projective_line(orb) {
        return None;
    }
    let entries: Vec<(&PointId, _)> = orb.branch.entries().collect();
    if entries.len() < 2 {
        return None;
    }
    let p = orb.branch.residue_char();
    let (i0, _) = entries
        .iter()
        .enumerate()
        .max_by_key(|(_, (_, prof))| prof.tame_order())?;
    let n_max = entries[i0].1.tame_order();
    let mut lcm_rest = 1u64;
    for (k, (_, prof)) in entries.iter().enumerate() {
        if k != i0 {
            lcm_rest = lcm_rest.lcm(&prof.tame_order());
        }
    }
    if lcm_rest != n_max {
        return None;
    }
    let max_is_tame = entries[i0].1.is_tame();
    let duplicate_max = entries
        .iter()
        .enumerate()
        .find(|(k, (_, prof))| *k != i0 && prof.tame_order() == n_max)
        .map(|(k, _)| k);
    if !max_is_tame && duplicate_max.is_none() {
        return None;
    }
    // decomposition witness: one two-point factor per non-maximal point,
    // plus a factor pinning the maximal point against a duplicate when the
    // maximal profile is wild
    let x0 = entries[i0].0.clone();
    let mut factors = vec![];
    for (k, (pt, prof)) in entries.iter().enumerate() {
        if k == i0 {
            continue;
        }
        let tame_mirror =
            crate::localfield::RamificationProfile::tame(p, prof.tame_order()).ok()?;
        let factor = BranchData::new(
            p,
            vec![((*pt).clone(), (*prof).clone()), (x0.clone(), tame_mirror)],
        )
        .ok()?;
        factors.push(factor);
    }
    if !max_is_tame {
        let i1 = duplicate_max?;
        let x1 = entries[i1].0.clone();
        let mirror = crate::localfield::RamificationProfile::tame(p, n_max).ok()?;
        let factor = BranchData::new(
            p,
            vec![(x0.clone(), entries[i0].1.clone()), (x1, mirror)],
        )
        .ok()?;
        factors.push(factor);
    }
    Some(factors)
}

/// Decide geometricity of a formal orbifold.
pub fn geometric_verdict(orb: &FormalOrbifold) -> Verdict {
    let data = &orb.branch;

    // R1: trivial branch data is realized by the identity cover
    if data.is_trivial() {
        return Verdict::geometric(RuleId::R1, "trivial branch data (identity cover)", None);
    }

    // R2: purely wild data is geometric (realized through covers of the
    // line totally ramified at one point, pulled back along a tame-degree
    // projection)
    if data.entries().all(|(_, prof)| prof.is_purely_wild()) {
        return Verdict::geometric(
            RuleId::R2,
            "purely wild branch data on a smooth projective curve is geometric",
            None,
        );
    }

    // R3: Harbater-Katz-Gabber configuration on the line
    if hkg_applies(orb) {
        return Verdict::geometric(
            RuleId::R3,
            "Harbater-Katz-Gabber cover: two-point data on the line, one point tame, \
             matching tame degrees",
            None,
        );
    }

    // R4: lcm rule on the line
    if let Some(factors) = lcm_rule(orb) {
        return Verdict::geometric(
            RuleId::R4,
            "maximal tame order equals the lcm of the others and is either tame or \
             attained twice; product of two-point covers",
            Some(factors),
        );
    }

    // R5: the iff-characterization for purely tame data
    if data.entries().all(|(_, prof)| prof.is_tame()) {
        let support_size = data.support().count();
        if !is_projective_line(orb) {
            return Verdict::geometric(
                RuleId::R5,
                "tame data on a curve of genus >= 1 is geometric",
                None,
            );
        }
        if support_size > 2 {
            return Verdict::geometric(
                RuleId::R5,
                "tame data on the line with more than two support points is geometric",
                None,
            );
        }
        if support_size == 2 {
            let pts: Vec<&PointId> = data.support().collect();
            if data.at(pts[0]).tame_order() == data.at(pts[1]).tame_order() {
                return Verdict::geometric(
                    RuleId::R5,
                    "tame data on the line at two points with equal orders is geometric",
                    None,
                );
            }
            return Verdict::not_geometric(
                "tame data on the line at two points with different orders is not \
                 geometric (tame characterization, iff)",
            );
        }
        return Verdict::not_geometric(
            "nontrivial tame data on the line supported at a single point is not \
             geometric: the fundamental group of this orbifold is trivial",
        );
    }

    // R6: product closure through the tame/wild split
    let (tame_part, wild_part) = split_tame_wild(data);
    if !tame_part.is_trivial() && !wild_part.is_trivial() {
        let tame_orb = FormalOrbifold::new(orb.curve.clone(), tame_part.clone())
            .expect("support shrinks under splitting");
        let tame_verdict = geometric_verdict(&tame_orb);
        if tame_verdict.status == VerdictStatus::Geometric {
            return Verdict::geometric(
                RuleId::R6,
                "join of geometric factors: geometric tame part joined with purely \
                 wild part",
                Some(vec![tame_part, wild_part]),
            );
        }
    }

    Verdict::unknown()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localfield::RamificationProfile;
    use crate::orbifold::Curve;

    fn pt(s: &str) -> PointId {
        PointId::new(s)
    }

    fn orb(genus: u64, p: u64, entries: Vec<(&str, RamificationProfile)>) -> FormalOrbifold {
        let points: Vec<PointId> = entries.iter().map(|(s, _)| pt(s)).collect();
        let bd = BranchData::new(
            p,
            entries.into_iter().map(|(s, prof)| (pt(s), prof)),
        )
        .unwrap();
        FormalOrbifold::new(Curve::new("X", genus, points), bd).unwrap()
    }

    fn tame(p: u64, n: u64) -> RamificationProfile {
        RamificationProfile::tame(p, n).unwrap()
    }

    fn mixed(p: u64, n: u64, jumps: &[u64]) -> RamificationProfile {
        RamificationProfile::with_auto_labels(p, n, "w", jumps).unwrap()
    }

    #[test]
    fn trivial_data_is_geometric() {
        let o = orb(0, 2, vec![]);
        let v = geometric_verdict(&o);
        assert_eq!(v.status, VerdictStatus::Geometric);
        assert_eq!(v.rule, Some(RuleId::R1));
    }

    #[test]
    fn single_tame_point_on_line_is_not_geometric() {
        let o = orb(0, 3, vec![("0", tame(3, 2))]);
        let v = geometric_verdict(&o);
        assert_eq!(v.status, VerdictStatus::NotGeometric);
        assert_eq!(v.rule, Some(RuleId::R5));
    }

    #[test]
    fn purely_wild_is_geometric() {
        let o = orb(0, 2, vec![("0", mixed(2, 1, &[3])), ("inf", mixed(2, 1, &[1]))]);
        let v = geometric_verdict(&o);
        assert_eq!(v.status, VerdictStatus::Geometric);
        assert_eq!(v.rule, Some(RuleId::R2));
    }

    #[test]
    fn hkg_configuration_fires() {
        // Q(0) = tame 4, Q(inf) = tame 4 with a wild jump, p = 3
        let o = orb(0, 3, vec![("0", tame(3, 4)), ("inf", mixed(3, 4, &[1]))]);
        let v = geometric_verdict(&o);
        assert_eq!(v.status, VerdictStatus::Geometric);
        assert_eq!(v.rule, Some(RuleId::R3));
    }

    #[test]
    fn lcm_rule_with_wild_maximum_and_duplicate() {
        // tame orders (4, 4, 2); maximal point wild, duplicate max present
        let o = orb(
            0,
            3,
            vec![
                ("0", mixed(3, 4, &[1])),
                ("1", mixed(3, 4, &[2])),
                ("inf", tame(3, 2)),
            ],
        );
        let v = geometric_verdict(&o);
        assert_eq!(v.status, VerdictStatus::Geometric);
        assert_eq!(v.rule, Some(RuleId::R4));
        // witness joins back to the original data
        let factors = v.witness.unwrap();
        let mut joined = BranchData::trivial(3);
        for f in &factors {
            joined = joined.join(f).unwrap();
        }
        assert_eq!(joined, o.branch);
    }

    #[test]
    fn tame_iff_branches() {
        // genus >= 1: geometric
        let v = geometric_verdict(&orb(2, 5, vec![("a", tame(5, 3))]));
        assert_eq!(v.status, VerdictStatus::Geometric);
        assert_eq!(v.rule, Some(RuleId::R5));
        // line, three points: geometric
        let v = geometric_verdict(&orb(
            0,
            5,
            vec![("0", tame(5, 2)), ("1", tame(5, 3)), ("inf", tame(5, 7))],
        ));
        assert_eq!(v.status, VerdictStatus::Geometric);
        // line, two equal points: geometric (via R3, equal tame pair)
        let v = geometric_verdict(&orb(0, 5, vec![("0", tame(5, 4)), ("inf", tame(5, 4))]));
        assert_eq!(v.status, VerdictStatus::Geometric);
        // line, two unequal points: not geometric
        let v = geometric_verdict(&orb(0, 5, vec![("0", tame(5, 2)), ("inf", tame(5, 3))]));
        assert_eq!(v.status, VerdictStatus::NotGeometric);
    }

    #[test]
    fn mixed_data_on_higher_genus_uses_product_closure() {
        let o = orb(1, 2, vec![("a", mixed(2, 3, &[1]))]);
        let v = geometric_verdict(&o);
        assert_eq!(v.status, VerdictStatus::Geometric);
        assert_eq!(v.rule, Some(RuleId::R6));
        let parts = v.witness.unwrap();
        assert_eq!(parts.len(), 2);
        let joined = parts[0].join(&parts[1]).unwrap();
        assert_eq!(joined, o.branch);
    }

    #[test]
    fn undecided_mixed_configuration_is_unknown() {
        // single support point on the line, mixed tame + wild, no rule fires
        let o = orb(0, 2, vec![("0", mixed(2, 3, &[1]))]);
        let v = geometric_verdict(&o);
        assert_eq!(v.status, VerdictStatus::Unknown);
        assert_eq!(v.rule, None);
    }

    #[test]
    fn split_reconstructs() {
        let p = 2;
        let bd = BranchData::new(p, vec![(pt("x"), mixed(p, 3, &[1]))]).unwrap();
        let (t, w) = split_tame_wild(&bd);
        assert_eq!(t.at(&pt("x")), tame(p, 3));
        assert!(w.at(&pt("x")).is_purely_wild());
        assert_eq!(t.join(&w).unwrap(), bd);
        // degenerate splits
        let pure_t = BranchData::new(p, vec![(pt("x"), tame(p, 5))]).unwrap();
        let (t2, w2) = split_tame_wild(&pure_t);
        assert_eq!(t2, pure_t);
        assert!(w2.is_trivial());
    }
}
