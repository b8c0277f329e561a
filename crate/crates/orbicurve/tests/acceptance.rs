//! Acceptance suite: every criterion below prints one PASS/FAIL line and
//! fails the test on any violation. All comparisons are exact; there are no
//! tolerances anywhere.
//!
//! Run with `cargo test --test acceptance -- --show-output` to see the
//! per-criterion lines.

use std::collections::BTreeSet;
use std::process::Command;

use num_traits::Zero;

use orbicurve::algebra::Fq;
use orbicurve::bundles::{
    cocycle_validate, count_fixed_vectors, is_invariant_section, projection_formula_residual,
    pullback_witness, pushforward_invariants, EquivariantBundle, GammaSetCover, Group,
    LedgerBundle,
};
use orbicurve::covers::{
    etale_identity_residual, random_cover_spec, CoverAnalysis, CoverFamily, CoverSpec,
    RandomBounds,
};
use orbicurve::genus::{
    classical_rh_residual, hilbert_rh_residual, orbifold_hilbert_rh_residual, rh_residual,
};
use orbicurve::geometric::{geometric_verdict, RuleId, VerdictStatus};
use orbicurve::localfield::RamificationProfile;
use orbicurve::orbifold::{BranchData, Curve, FormalOrbifold, PointId};
use orbicurve::rat::rint;
use orbicurve::rng::SplitMix64;

fn report(number: u32, description: &str, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {number:02}: {status} - {description}");
    for f in failures.iter().take(5) {
        println!("    {f}");
    }
    assert!(
        failures.is_empty(),
        "criterion {number} failed with {} violations",
        failures.len()
    );
}

/// Multisets of size up to `max_len` from `values` (combinations with
/// repetition, nondecreasing order).
fn multisets(values: &[u64], max_len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<u64>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = vec![];
        for m in &layer {
            let start = m.last().map(|&l| values.iter().position(|&v| v == l).unwrap()).unwrap_or(0);
            for &v in &values[start..] {
                let mut ext = m.clone();
                ext.push(v);
                next.push(ext);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// The criterion-1 profile space: p in {2,3,5}, tame order <= 12 coprime to
/// p, up to three wild components with jumps <= 9 coprime to p.
fn criterion_sweep() -> Vec<RamificationProfile> {
    let mut out = vec![];
    for p in [2u64, 3, 5] {
        let tames: Vec<u64> = (1..=12).filter(|n| n % p != 0).collect();
        let jumps: Vec<u64> = (1..=9).filter(|m| m % p != 0).collect();
        for jumpset in multisets(&jumps, 3) {
            for &n in &tames {
                out.push(
                    RamificationProfile::with_auto_labels(p, n, "w", &jumpset)
                        .expect("sweep profile"),
                );
            }
        }
    }
    out
}

#[test]
fn criterion_01_dual_path_different() {
    let sweep = criterion_sweep();
    let mut failures = vec![];
    for prof in &sweep {
        let character_sum = prof.degram();
        let hilbert = prof.hilbert_sum();
        let enumerated = prof.degram_enumerated();
        if character_sum != hilbert || character_sum != enumerated {
            failures.push(format!(
                "{prof:?}: character sum {character_sum}, Hilbert {hilbert}, enumerated {enumerated}"
            ));
        }
    }
    report(
        1,
        &format!(
            "conductor-discriminant degram equals Hilbert sum over the lower filtration \
             ({} profiles, exact)",
            sweep.len()
        ),
        &failures,
    );
}

#[test]
fn criterion_02_hasse_arf_integrality() {
    let sweep = criterion_sweep();
    let mut failures = vec![];
    let mut breaks_checked = 0u64;
    for prof in &sweep {
        let psi = prof.herbrand();
        let mut upper: Vec<u64> = prof.wild().iter().map(|c| c.jump).collect();
        upper.sort_unstable();
        upper.dedup();
        for u in upper {
            let lb = psi.psi(&rint(u as i128));
            breaks_checked += 1;
            if *lb.denom() != 1 {
                failures.push(format!("{prof:?}: psi({u}) = {lb} is not an integer"));
            }
        }
    }
    report(
        2,
        &format!("every lower break in the sweep is an integer ({breaks_checked} breaks)"),
        &failures,
    );
}

#[test]
fn criterion_03_tower_formula() {
    let mut rng = SplitMix64::new(0x70BE5);
    let mut failures = vec![];
    let sweep = criterion_sweep();
    for _ in 0..500 {
        let full = &sweep[rng.below(sweep.len() as u64) as usize];
        // random subextension: a divisor of the tame order and a subset of
        // the wild components
        let divisors: Vec<u64> = (1..=full.tame_order())
            .filter(|d| full.tame_order().is_multiple_of(*d))
            .collect();
        let n = *rng.pick(&divisors);
        let mask = rng.below(1 << full.wild_rank() as u64);
        let wild: Vec<(String, u64)> = full
            .wild()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, c)| (c.label.clone(), c.jump))
            .collect();
        let sub = RamificationProfile::new(full.residue_char(), n, wild).unwrap();
        let rel = RamificationProfile::degram_relative(&sub, full).unwrap();
        let ratio = full.degree() / sub.degree();
        if full.degram() != rel + ratio * sub.degram() {
            failures.push(format!("tower identity failed for sub {sub:?} of {full:?}"));
        }
    }
    report(
        3,
        "tower formula degram(full) = degram(full/sub) + [full:sub] degram(sub) \
         on 500 randomized chains (exact)",
        &failures,
    );
}

/// Shared oracle corpus: at least 200 covers of each family.
fn oracle_corpus() -> Vec<(CoverSpec, CoverAnalysis)> {
    let bounds = RandomBounds::default();
    let mut out = vec![];
    let kummer_fields = [13u64, 25, 27, 7, 9];
    for i in 0..200u64 {
        let field = Fq::from_order(kummer_fields[(i % 5) as usize]).unwrap();
        let spec = random_cover_spec(CoverFamily::Kummer, 1000 + i, &field, &bounds).unwrap();
        let analysis = spec.analyze().unwrap();
        out.push((spec, analysis));
    }
    let as_fields = [2u64, 4, 8, 3, 9, 27, 5, 25];
    for i in 0..200u64 {
        let field = Fq::from_order(as_fields[(i % 8) as usize]).unwrap();
        let spec =
            random_cover_spec(CoverFamily::ArtinSchreier, 2000 + i, &field, &bounds).unwrap();
        let analysis = spec.analyze().unwrap();
        out.push((spec, analysis));
    }
    out
}

#[test]
fn criterion_04_etale_genus_identity_oracle() {
    let corpus = oracle_corpus();
    let mut failures = vec![];
    for (spec, analysis) in &corpus {
        let residual = etale_identity_residual(analysis).unwrap();
        if !residual.is_zero() {
            failures.push(format!("{}: residual {residual}", spec.render()));
        }
        // genus integrality is part of the analysis contract; re-assert the
        // branch support law as well
        let bd = analysis.branch_data().unwrap();
        if bd.support().count() != analysis.branch.len() {
            failures.push(format!("{}: B_f support mismatch", spec.render()));
        }
    }
    report(
        4,
        &format!(
            "etale genus identity residual is exactly zero on {} randomized covers \
             (200 Kummer + 200 Artin-Schreier)",
            corpus.len()
        ),
        &failures,
    );
}

#[test]
fn criterion_05_rh_specialization() {
    let corpus = oracle_corpus();
    let mut failures = vec![];
    for (spec, analysis) in &corpus {
        let m = analysis.trivial_descriptor().unwrap();
        let orb = rh_residual(&m).unwrap();
        let classical = classical_rh_residual(&m);
        if orb != classical {
            failures.push(format!(
                "{}: orbifold residual {orb} != classical {classical}",
                spec.render()
            ));
        }
        if !orb.is_zero() {
            failures.push(format!("{}: residual {orb} nonzero", spec.render()));
        }
    }
    report(
        5,
        "with trivial branch data the orbifold RH residual equals the classical \
         residual (and both vanish) on every oracle cover",
        &failures,
    );
}

#[test]
fn criterion_06_hilbert_rh_consistency() {
    let corpus = oracle_corpus();
    let mut failures = vec![];
    for (spec, analysis) in &corpus {
        let rec = analysis.classical_record();
        let h = hilbert_rh_residual(&rec);
        let oh = orbifold_hilbert_rh_residual(&rec);
        if !h.is_zero() || !oh.is_zero() {
            failures.push(format!("{}: hilbert {h}, orbifold {oh}", spec.render()));
        }
        let orec = analysis.etale_orbifold_record();
        let oe = orbifold_hilbert_rh_residual(&orec);
        if !oe.is_zero() {
            failures.push(format!("{}: etale orbifold record residual {oe}", spec.render()));
        }
    }
    report(
        6,
        "Hilbert RH and orbifold Hilbert RH residuals vanish on every oracle cover, \
         with inertia sums from the lower filtration",
        &failures,
    );
}

fn check_lattice_pair(a: &BranchData, b: &BranchData, failures: &mut Vec<String>) {
    let join = a.join(b).unwrap();
    let meet = a.meet(b).unwrap();
    let sup_a: BTreeSet<_> = a.support_set();
    let sup_b: BTreeSet<_> = b.support_set();
    let expected_join_support: BTreeSet<_> = sup_a.union(&sup_b).cloned().collect();
    if join.support_set() != expected_join_support {
        failures.push(format!("join support law failed: {a:?} vs {b:?}"));
    }
    let inter: BTreeSet<_> = sup_a.intersection(&sup_b).cloned().collect();
    if !meet.support_set().is_subset(&inter) {
        failures.push(format!("meet support law failed: {a:?} vs {b:?}"));
    }
    if !a.leq(&join) || !meet.leq(a) {
        failures.push(format!("order law failed: {a:?} vs {b:?}"));
    }
    if join != b.join(a).unwrap() || meet != b.meet(a).unwrap() {
        failures.push(format!("commutativity failed: {a:?} vs {b:?}"));
    }
    if a.join(a).unwrap() != *a || a.meet(a).unwrap() != *a {
        failures.push(format!("idempotence failed: {a:?}"));
    }
}

#[test]
fn criterion_07_lattice_laws() {
    let mut failures = vec![];

    // Exhaustive core: two points, tame orders {1,2,3,4,6}, at most one
    // wild component from the two-field universe {a:1, b:3}. A label names
    // a field, so it pins its jump.
    let p = 5u64;
    let mut profiles = vec![RamificationProfile::trivial(p)];
    for n in [1u64, 2, 3, 4, 6] {
        profiles.push(RamificationProfile::tame(p, n).unwrap());
        for (label, jump) in [("a", 1u64), ("b", 3)] {
            profiles
                .push(RamificationProfile::new(p, n, vec![(label.into(), jump)]).unwrap());
        }
    }
    let points = [PointId::new("0"), PointId::new("inf")];
    let mut datas = vec![];
    for p0 in &profiles {
        for p1 in &profiles {
            datas.push(
                BranchData::new(
                    p,
                    vec![(points[0].clone(), p0.clone()), (points[1].clone(), p1.clone())],
                )
                .unwrap(),
            );
        }
    }
    let mut pairs = 0u64;
    for a in &datas {
        for b in &datas {
            pairs += 1;
            check_lattice_pair(a, b, &mut failures);
            if !failures.is_empty() {
                break;
            }
        }
        if !failures.is_empty() {
            break;
        }
    }

    // associativity, exhaustive on the single-point slice of the space
    let singles: Vec<BranchData> = profiles
        .iter()
        .map(|prof| BranchData::new(p, vec![(points[0].clone(), prof.clone())]).unwrap())
        .collect();
    let mut triples = 0u64;
    for a in &singles {
        for b in &singles {
            for c in &singles {
                triples += 1;
                let l = a.join(b).unwrap().join(c).unwrap();
                let r = a.join(&b.join(c).unwrap()).unwrap();
                if l != r {
                    failures.push("join associativity failed".to_string());
                }
                let lm = a.meet(b).unwrap().meet(c).unwrap();
                let rm = a.meet(&b.meet(c).unwrap()).unwrap();
                if lm != rm {
                    failures.push("meet associativity failed".to_string());
                }
            }
        }
    }

    // seeded randomized sweep over the wide space: three points, the full
    // criterion-1 profile family truncated to at most one wild component
    let mut rng = SplitMix64::new(77);
    let wide_points = [PointId::new("0"), PointId::new("1"), PointId::new("inf")];
    let mut wide = 0u64;
    for p in [2u64, 3, 5] {
        let tames: Vec<u64> = (1..=12).filter(|n| n % p != 0).collect();
        let jumps: Vec<u64> = (1..=9).filter(|m| m % p != 0).collect();
        // field universe: one label per admissible jump
        let random_data = |rng: &mut SplitMix64| {
            let entries: Vec<(PointId, RamificationProfile)> = wide_points
                .iter()
                .map(|pt| {
                    let n = *rng.pick(&tames);
                    let wild = if rng.below(2) == 0 {
                        vec![]
                    } else {
                        let j = *rng.pick(&jumps);
                        vec![(format!("f{j}"), j)]
                    };
                    (pt.clone(), RamificationProfile::new(p, n, wild).unwrap())
                })
                .collect();
            BranchData::new(p, entries).unwrap()
        };
        for _ in 0..700 {
            wide += 1;
            let a = random_data(&mut rng);
            let b = random_data(&mut rng);
            let c = random_data(&mut rng);
            check_lattice_pair(&a, &b, &mut failures);
            let l = a.join(&b).unwrap().join(&c).unwrap();
            let r = a.join(&b.join(&c).unwrap()).unwrap();
            if l != r {
                failures.push("wide join associativity failed".to_string());
            }
            if !failures.is_empty() {
                break;
            }
        }
    }

    report(
        7,
        &format!(
            "lattice laws: {pairs} exhaustive two-point pairs, {triples} exhaustive \
             associativity triples, {wide} randomized three-point triples (exact)"
        ),
        &failures,
    );
}

#[test]
fn criterion_08_genus_monotonicity() {
    let sweep = criterion_sweep();
    let mut failures = vec![];
    let mut pairs = 0u64;
    for full in &sweep {
        let full_ratio = rint(full.degram() as i128) / rint(full.degree() as i128);
        let divisors: Vec<u64> = (1..=full.tame_order())
            .filter(|d| full.tame_order() % d == 0)
            .collect();
        for &n in &divisors {
            for mask in 0u64..(1 << full.wild_rank()) {
                let wild: Vec<(String, u64)> = full
                    .wild()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, c)| (c.label.clone(), c.jump))
                    .collect();
                let sub = RamificationProfile::new(full.residue_char(), n, wild).unwrap();
                if !sub.leq(full) {
                    failures.push(format!("constructed sub not leq full: {sub:?} {full:?}"));
                    continue;
                }
                pairs += 1;
                let sub_ratio =
                    rint(sub.degram() as i128) / rint(sub.degree() as i128);
                if sub_ratio > full_ratio {
                    failures.push(format!(
                        "monotonicity failed: {sub:?} ratio {sub_ratio} > {full:?} ratio {full_ratio}"
                    ));
                }
            }
        }
    }
    report(
        8,
        &format!(
            "leq(a,b) implies degram(a)/degree(a) <= degram(b)/degree(b) \
             ({pairs} ordered pairs from the sweep, exact rational comparison)"
        ),
        &failures,
    );
}

#[test]
fn criterion_09_geometricity_verdicts() {
    let mut failures = vec![];
    let pt = |s: &str| PointId::new(s);

    let orb = |genus: u64, p: u64, entries: Vec<(&str, RamificationProfile)>| {
        let points: Vec<PointId> = entries.iter().map(|(s, _)| pt(s)).collect();
        let bd = BranchData::new(p, entries.into_iter().map(|(s, prof)| (pt(s), prof))).unwrap();
        FormalOrbifold::new(Curve::new("X", genus, points), bd).unwrap()
    };
    let tame = |p: u64, n: u64| RamificationProfile::tame(p, n).unwrap();
    let mixed = |p: u64, n: u64, jumps: &[u64]| {
        RamificationProfile::with_auto_labels(p, n, "w", jumps).unwrap()
    };

    let mut expect = |name: &str, orbifold: &FormalOrbifold, want: VerdictStatus| {
        let v = geometric_verdict(orbifold);
        if v.status != want {
            failures.push(format!(
                "{name}: expected {}, got {} via {:?}",
                want.name(),
                v.status.name(),
                v.rule
            ));
        }
    };

    // trivial data on any curve
    expect("trivial on line", &orb(0, 2, vec![]), VerdictStatus::Geometric);
    expect("trivial on genus 3", &orb(3, 5, vec![]), VerdictStatus::Geometric);
    // single tame point on the line
    expect(
        "single tame point",
        &orb(0, 3, vec![("0", tame(3, 2))]),
        VerdictStatus::NotGeometric,
    );
    // purely wild data
    expect(
        "purely wild single point",
        &orb(0, 2, vec![("inf", mixed(2, 1, &[3]))]),
        VerdictStatus::Geometric,
    );
    expect(
        "purely wild two points genus 2",
        &orb(2, 3, vec![("a", mixed(3, 1, &[1])), ("b", mixed(3, 1, &[2, 4]))]),
        VerdictStatus::Geometric,
    );
    // HKG configurations
    expect(
        "hkg tame4/tame4*wild1",
        &orb(0, 3, vec![("0", tame(3, 4)), ("inf", mixed(3, 4, &[1]))]),
        VerdictStatus::Geometric,
    );
    expect(
        "hkg purely tame equal pair",
        &orb(0, 5, vec![("0", tame(5, 6)), ("inf", tame(5, 6))]),
        VerdictStatus::Geometric,
    );
    // tame characterization on genus >= 1
    expect(
        "tame on elliptic",
        &orb(1, 5, vec![("a", tame(5, 3))]),
        VerdictStatus::Geometric,
    );
    expect(
        "tame three points on line",
        &orb(0, 5, vec![("0", tame(5, 2)), ("1", tame(5, 3)), ("inf", tame(5, 4))]),
        VerdictStatus::Geometric,
    );
    expect(
        "tame unequal pair on line",
        &orb(0, 5, vec![("0", tame(5, 2)), ("inf", tame(5, 3))]),
        VerdictStatus::NotGeometric,
    );

    // exhaustive small sweep: no contradictory certificates, and the
    // NotGeometric verdicts come only from the tame iff rule
    let p = 5u64;
    let mut profile_pool = vec![RamificationProfile::trivial(p)];
    for n in [1u64, 2, 3, 4, 6] {
        for wild in [vec![], vec![1u64]] {
            if n == 1 && wild.is_empty() {
                continue;
            }
            profile_pool.push(RamificationProfile::with_auto_labels(p, n, "s", &wild).unwrap());
        }
    }
    for g in [0u64, 1] {
        for a in &profile_pool {
            for b in &profile_pool {
                for c in &profile_pool {
                    let entries: Vec<(&str, RamificationProfile)> = [
                        ("0", a.clone()),
                        ("1", b.clone()),
                        ("inf", c.clone()),
                    ]
                    .into_iter()
                    .filter(|(_, prof)| !prof.is_trivial())
                    .collect();
                    let o = orb(g, p, entries);
                    let v = geometric_verdict(&o);
                    if v.status == VerdictStatus::NotGeometric {
                        if v.rule != Some(RuleId::R5) {
                            failures.push(format!(
                                "NotGeometric issued by {:?} instead of the tame iff rule",
                                v.rule
                            ));
                        }
                        let all_tame = o.branch.entries().all(|(_, prof)| prof.is_tame());
                        if !all_tame || g != 0 {
                            failures.push(format!(
                                "NotGeometric on non-tame or positive-genus data: {o:?}"
                            ));
                        }
                    }
                    // R6 monotonicity: geometric splits certify the join
                    if v.status == VerdictStatus::Geometric {
                        if let Some(witness) = &v.witness {
                            let mut joined = BranchData::trivial(p);
                            for f in witness {
                                joined = joined.join(f).unwrap();
                            }
                            if joined != o.branch {
                                failures.push("witness does not join back".to_string());
                            }
                        }
                    }
                }
            }
        }
    }

    // B_f of oracle covers is never NotGeometric
    for (spec, analysis) in oracle_corpus().iter().take(100) {
        let orb = analysis.base_orbifold().unwrap();
        let v = geometric_verdict(&orb);
        if v.status == VerdictStatus::NotGeometric {
            failures.push(format!("B_f NotGeometric for {}", spec.render()));
        }
    }

    // mixed data built by joining the branch data of a tame and a wild
    // cover over the same field is geometric (product closure), so the
    // verdict must never be NotGeometric
    let bounds = RandomBounds::default();
    for q in [8u64, 9, 25, 27] {
        let field = Fq::from_order(q).unwrap();
        for seed in 0..25u64 {
            let kummer =
                random_cover_spec(CoverFamily::Kummer, 5000 + seed, &field, &bounds).unwrap();
            let wild = random_cover_spec(CoverFamily::ArtinSchreier, 6000 + seed, &field, &bounds)
                .unwrap();
            let bd_k = kummer.analyze().unwrap().branch_data().unwrap();
            let bd_w = wild.analyze().unwrap().branch_data().unwrap();
            let joined = bd_k.join(&bd_w).unwrap();
            let points: Vec<PointId> = joined.support_set().into_iter().collect();
            let orbifold =
                FormalOrbifold::new(Curve::new("P1", 0, points), joined).unwrap();
            let v = geometric_verdict(&orbifold);
            if v.status == VerdictStatus::NotGeometric {
                failures.push(format!(
                    "join of {} and {} judged NotGeometric",
                    kummer.render(),
                    wild.render()
                ));
            }
        }
    }

    report(
        9,
        "curated geometricity suite plus exhaustive small sweep: statuses match, \
         NotGeometric only from the tame iff rule, witnesses join back, oracle B_f \
         (and joins of tame with wild oracle data) never NotGeometric",
        &failures,
    );
}

#[test]
fn criterion_10_cocycle_and_invariant_pushforward() {
    let mut failures = vec![];
    let f9 = Fq::from_order(9).unwrap();

    // exhaustive cocycle validation over regular covers for |Gamma| <= 8
    let groups: Vec<(&str, Group)> = vec![
        ("Z1", Group::cyclic(1)),
        ("Z2", Group::cyclic(2)),
        ("Z3", Group::cyclic(3)),
        ("Z4", Group::cyclic(4)),
        ("Z5", Group::cyclic(5)),
        ("Z6", Group::cyclic(6)),
        ("Z7", Group::cyclic(7)),
        ("Z8", Group::cyclic(8)),
        ("V4", Group::direct_product(&Group::cyclic(2), &Group::cyclic(2))),
        ("Z2xZ4", Group::direct_product(&Group::cyclic(2), &Group::cyclic(4))),
        (
            "Z2^3",
            Group::direct_product(
                &Group::direct_product(&Group::cyclic(2), &Group::cyclic(2)),
                &Group::cyclic(2),
            ),
        ),
        ("S3", Group::symmetric_3()),
        ("D4", Group::dihedral_4()),
        ("Q8", Group::quaternion_8()),
    ];
    let mut rng = SplitMix64::new(101);
    for (name, group) in &groups {
        let cover = GammaSetCover::regular(group.clone());
        let trivial = EquivariantBundle::trivial(&cover, &f9, 2);
        if !cocycle_validate(&cover, &trivial) {
            failures.push(format!("{name}: trivial bundle rejected"));
        }
        let (gauged, _) = EquivariantBundle::random_pullback(&cover, &f9, 2, &mut rng);
        if !cocycle_validate(&cover, &gauged) {
            failures.push(format!("{name}: gauged pullback rejected"));
        }
        if group.order() > 1 {
            let mut corrupted = gauged.clone();
            let mut m = corrupted.lambda(1, 0).clone();
            m.set(0, 0, f9.add(m.get(0, 0), &f9.one()));
            corrupted.set_lambda(1, 0, m);
            if cocycle_validate(&cover, &corrupted) {
                failures.push(format!("{name}: corrupted bundle accepted"));
            }
        }
    }

    // 100 randomized pullback bundles recover the base rank with an
    // explicit descent witness
    let fields = [2u64, 3, 4, 5, 7, 8, 9];
    let group_pool = [
        Group::cyclic(2),
        Group::cyclic(3),
        Group::cyclic(4),
        Group::direct_product(&Group::cyclic(2), &Group::cyclic(2)),
        Group::symmetric_3(),
    ];
    let mut rng = SplitMix64::new(555);
    for trial in 0..100 {
        let field = Fq::from_order(fields[(trial % fields.len() as u64) as usize]).unwrap();
        let group = group_pool[(trial % group_pool.len() as u64) as usize].clone();
        let blocks = 1 + (trial % 2) as usize;
        let cover = GammaSetCover::regular_blocks(group, blocks);
        let rank = 1 + (trial % 3) as usize;
        let (bundle, gauges) = EquivariantBundle::random_pullback(&cover, &field, rank, &mut rng);
        let inv = match pushforward_invariants(&cover, &bundle) {
            Ok(inv) => inv,
            Err(e) => {
                failures.push(format!("trial {trial}: {e}"));
                continue;
            }
        };
        if inv.ranks != vec![rank; cover.base_size()] {
            failures.push(format!(
                "trial {trial}: invariant ranks {:?}, expected {rank}",
                inv.ranks
            ));
            continue;
        }
        let witness = pullback_witness(&cover, &gauges, rank);
        for b in 0..cover.base_size() {
            if witness[b].rank() != rank {
                failures.push(format!("trial {trial}: witness not injective"));
            }
            for j in 0..rank {
                let col: Vec<_> = (0..witness[b].nrows())
                    .map(|i| witness[b].get(i, j).clone())
                    .collect();
                if !is_invariant_section(&cover, &bundle, b, &col) {
                    failures.push(format!("trial {trial}: witness column not invariant"));
                }
            }
        }
    }

    // tiny brute-force cross-check of the invariant dimension
    let cover = GammaSetCover::regular(Group::cyclic(2));
    let f3 = Fq::prime(3).unwrap();
    let mut rng = SplitMix64::new(9);
    let (bundle, _) = EquivariantBundle::random_pullback(&cover, &f3, 1, &mut rng);
    let inv = pushforward_invariants(&cover, &bundle).unwrap();
    let fixed = count_fixed_vectors(&cover, &bundle, 0);
    if fixed != 3u128.pow(inv.ranks[0] as u32) {
        failures.push(format!(
            "brute-force fixed count {fixed} disagrees with dimension {}",
            inv.ranks[0]
        ));
    }

    report(
        10,
        "exhaustive cocycle validation for |Gamma| <= 8 regular covers; invariant \
         pushforward of 100 randomized pullback bundles recovers the base rank with \
         explicit witnesses",
        &failures,
    );
}

#[test]
fn criterion_11_projection_formula_ledger() {
    let mut failures = vec![];
    let mut rng = SplitMix64::new(0xBEEF);
    let gammas = [1u64, 2, 3, 4, 5, 6, 8, 12];
    for trial in 0..1000 {
        let gamma = *rng.pick(&gammas);
        let v = LedgerBundle::new(gamma, rng.range(1, 5), rng.range(0, 40) as i64 - 20).unwrap();
        let f = LedgerBundle::new(gamma, rng.range(1, 5), rng.range(0, 40) as i64 - 20).unwrap();
        let dcov = rng.range(1, 6);
        match projection_formula_residual(&v, &f, dcov) {
            Ok((0, 0)) => {}
            other => failures.push(format!("trial {trial}: projection residual {other:?}")),
        }
    }
    for trial in 0..1000 {
        let gamma = *rng.pick(&gammas);
        let l = LedgerBundle::new(gamma, rng.range(1, 5), rng.range(0, 40) as i64 - 20).unwrap();
        let k = rng.range(1, 7);
        let r = l.refine(k);
        if r.orb_degree() != l.orb_degree() || r.orb_slope() != l.orb_slope() {
            failures.push(format!("trial {trial}: refine changed invariants"));
        }
    }
    report(
        11,
        "projection formula residual (0,0) on 1000 randomized triples; orbifold \
         degree and slope invariant under 1000 randomized refinements",
        &failures,
    );
}

#[test]
fn criterion_12_cli_determinism_and_exit_codes() {
    let mut failures = vec![];
    let bin = env!("CARGO_BIN_EXE_orbicurve");

    let run = |args: &[&str]| -> (String, String, i32) {
        let out = Command::new(bin).args(args).output().expect("spawn CLI");
        (
            String::from_utf8_lossy(&out.stdout).into_owned(),
            String::from_utf8_lossy(&out.stderr).into_owned(),
            out.status.code().unwrap_or(-1),
        )
    };

    // byte-identical JSON reports under fixed seeds
    for args in [
        vec!["oracle", "--family", "kummer", "--trials", "25", "--seed", "7", "--format", "json"],
        vec![
            "oracle", "--family", "artin_schreier", "--trials", "25", "--seed", "11", "--q", "8",
            "--format", "json",
        ],
        vec!["bundle-check", "--trials", "50", "--seed", "3", "--format", "json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        if a != b {
            failures.push(format!("nondeterministic report for {args:?}"));
        }
        if a.2 != 0 {
            failures.push(format!("sweep {args:?} exited {}", a.2));
        }
    }

    // malformed-input corpus: every document is rejected with exit 2
    let malformed: Vec<(&str, Vec<&str>)> = vec![
        ("truncated json", vec!["genus", "--inline", "{\"v\":1,"]),
        ("missing version", vec!["degram", "--inline", r#"{"p":2,"tame":3}"#]),
        ("wrong version", vec!["degram", "--inline", r#"{"v":9,"p":2,"tame":3}"#]),
        (
            "tame order divisible by p",
            vec!["degram", "--inline", r#"{"v":1,"p":2,"tame":4}"#],
        ),
        (
            "jump divisible by p",
            vec!["degram", "--inline", r#"{"v":1,"p":3,"wild":[{"jump":6}]}"#],
        ),
        ("unknown verb", vec!["transmogrify"]),
        ("unknown family", vec!["oracle", "--family", "weierstrass"]),
        ("missing input", vec!["genus"]),
        (
            "unknown field",
            vec!["genus", "--inline", r#"{"v":1,"curve":{"id":"X","genus":0,"points":[]},"p":2,"bogus":1}"#],
        ),
    ];
    for (name, args) in malformed {
        let (_, stderr, code) = run(&args);
        if code != 2 {
            failures.push(format!("{name}: expected exit 2, got {code}"));
        }
        if stderr.trim().is_empty() {
            failures.push(format!("{name}: no diagnostic on stderr"));
        }
    }

    // a mathematically inconsistent morphism document exits 1
    let bad_rh = r#"{"v":1,"p":2,"degree":2,"source_genus":3,"target_genus":0,
                     "fiber":[{"y":"y0","x":"inf","e":{"wild":[{"jump":3}]}}]}"#;
    let (_, _, code) = run(&["rh-check", "--inline", bad_rh]);
    if code != 1 {
        failures.push(format!("inconsistent rh-check: expected exit 1, got {code}"));
    }

    // a consistent one exits 0
    let good_rh = r#"{"v":1,"p":2,"degree":2,"source_genus":1,"target_genus":0,
                      "fiber":[{"y":"y0","x":"inf","e":{"wild":[{"jump":3}]}}]}"#;
    let (stdout, _, code) = run(&["rh-check", "--inline", good_rh]);
    if code != 0 {
        failures.push(format!("consistent rh-check: expected exit 0, got {code}: {stdout}"));
    }

    report(
        12,
        "CLI reports are byte-identical under fixed seeds; exit-code contract holds \
         on the malformed-input corpus",
        &failures,
    );
}
