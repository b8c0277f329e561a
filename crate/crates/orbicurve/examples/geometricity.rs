//! Geometricity verdicts: which branch data come from an actual cover.
//! The engine is three-valued; Unknown is an honest answer where the
//! decision problem is open.
//!
//! Run with: cargo run --example geometricity

use orbicurve::geometric::{geometric_verdict, split_tame_wild};
use orbicurve::localfield::RamificationProfile;
use orbicurve::orbifold::{BranchData, Curve, FormalOrbifold, PointId};

fn verdict_line(name: &str, orb: &FormalOrbifold) {
    let v = geometric_verdict(orb);
    let rule = v.rule.map(|r| r.name()).unwrap_or("-");
    println!("{name:46} {:12} [{}] {}", v.status.name(), rule, v.citation);
}

fn main() {
    println!("=== Geometricity of branch data ===\n");
    let pt = |s: &str| PointId::new(s);
    let tame = |p: u64, n: u64| RamificationProfile::tame(p, n).unwrap();
    let mixed = |p: u64, n: u64, jumps: &[u64]| {
        RamificationProfile::with_auto_labels(p, n, "w", jumps).unwrap()
    };
    let orb = |genus: u64, p: u64, entries: Vec<(&str, RamificationProfile)>| {
        let points: Vec<PointId> = entries.iter().map(|(s, _)| pt(s)).collect();
        let bd =
            BranchData::new(p, entries.into_iter().map(|(s, prof)| (pt(s), prof))).unwrap();
        FormalOrbifold::new(Curve::new("X", genus, points), bd).unwrap()
    };

    verdict_line("trivial data", &orb(0, 2, vec![]));
    verdict_line("single tame point on the line", &orb(0, 3, vec![("0", tame(3, 2))]));
    verdict_line(
        "two unequal tame points on the line",
        &orb(0, 5, vec![("0", tame(5, 2)), ("inf", tame(5, 3))]),
    );
    verdict_line(
        "two equal tame points on the line",
        &orb(0, 5, vec![("0", tame(5, 4)), ("inf", tame(5, 4))]),
    );
    verdict_line(
        "three tame points on the line",
        &orb(0, 5, vec![("0", tame(5, 2)), ("1", tame(5, 3)), ("inf", tame(5, 4))]),
    );
    verdict_line("tame point on an elliptic curve", &orb(1, 5, vec![("a", tame(5, 3))]));
    verdict_line("purely wild point", &orb(0, 2, vec![("inf", mixed(2, 1, &[3]))]));
    verdict_line(
        "HKG pair: tame 4 and tame-4-with-wild",
        &orb(0, 3, vec![("0", tame(3, 4)), ("inf", mixed(3, 4, &[1]))]),
    );
    verdict_line(
        "mixed single point on the line (open)",
        &orb(0, 2, vec![("0", mixed(2, 3, &[1]))]),
    );
    verdict_line(
        "mixed point on an elliptic curve",
        &orb(1, 2, vec![("a", mixed(2, 3, &[1]))]),
    );

    // the tame/wild split behind the product-closure rule
    let bd = BranchData::new(2, vec![(pt("x"), mixed(2, 3, &[1]))]).unwrap();
    let (t, w) = split_tame_wild(&bd);
    println!("\nsplit of a mixed profile at x:");
    println!("  tame part  at x: tame {}", t.at(&pt("x")).tame_order());
    println!("  wild part  at x: rank {}", w.at(&pt("x")).wild_rank());
    assert_eq!(t.join(&w).unwrap(), bd);
    println!("  join of the parts recovers the data");
}
