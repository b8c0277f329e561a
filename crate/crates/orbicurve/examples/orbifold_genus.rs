//! Orbifold genus: the curve genus plus half the sum of normalized
//! differents over the branch support, as an exact rational.
//!
//! Run with: cargo run --example orbifold_genus

use orbicurve::genus::orbifold_genus;
use orbicurve::localfield::RamificationProfile;
use orbicurve::orbifold::{BranchData, Curve, FormalOrbifold, PointId};
use orbicurve::rat::{rat, rat_display, rint};

fn main() {
    println!("=== Orbifold genus ===\n");
    let pt = PointId::new;

    // trivial branch data: the plain curve genus
    let plain = FormalOrbifold::plain(Curve::new("X", 4, [pt("a")]), 2);
    println!("(X, O) with g(X) = 4: genus {}", rat_display(&orbifold_genus(&plain)));
    assert_eq!(orbifold_genus(&plain), rint(4));

    // a single wild point of jump 1 in characteristic 2 on the line:
    // degram 2 over degree 2 contributes 1/2
    let w1 = RamificationProfile::with_auto_labels(2, 1, "w", &[1]).unwrap();
    let orb = FormalOrbifold::new(
        Curve::new("P1", 0, [pt("inf")]),
        BranchData::new(2, vec![(pt("inf"), w1)]).unwrap(),
    )
    .unwrap();
    let g = orbifold_genus(&orb);
    println!("(P1, wild jump 1 at inf), p = 2: genus {}", rat_display(&g));
    assert_eq!(g, rat(1, 2));

    // two tame order-3 points: each contributes (1/2)(2/3)
    let t3 = RamificationProfile::tame(5, 3).unwrap();
    let orb = FormalOrbifold::new(
        Curve::new("P1", 0, [pt("0"), pt("inf")]),
        BranchData::new(5, vec![(pt("0"), t3.clone()), (pt("inf"), t3)]).unwrap(),
    )
    .unwrap();
    let g = orbifold_genus(&orb);
    println!("(P1, tame 3 at two points): genus {}", rat_display(&g));
    assert_eq!(g, rat(2, 3));

    // genus grows with the branch data: compare nested profiles
    let small = RamificationProfile::tame(2, 3).unwrap();
    let large = RamificationProfile::with_auto_labels(2, 3, "w", &[1]).unwrap();
    let mk = |prof: RamificationProfile| {
        FormalOrbifold::new(
            Curve::new("P1", 0, [pt("x")]),
            BranchData::new(2, vec![(pt("x"), prof)]).unwrap(),
        )
        .unwrap()
    };
    let gs = orbifold_genus(&mk(small));
    let gl = orbifold_genus(&mk(large));
    println!("\nmonotonicity: {} <= {} for nested branch data", rat_display(&gs), rat_display(&gl));
    assert!(gs <= gl);
}
