//! Riemann-Hurwitz as a zero-residual identity: ramification divisors of
//! morphism descriptors, the orbifold formula, its classical
//! specialization, and both Hilbert forms.
//!
//! Run with: cargo run --example riemann_hurwitz

use orbicurve::genus::{
    classical_rh_residual, hilbert_rh_residual, orbifold_hilbert_rh_residual,
    ramification_divisor, rh_residual, GaloisCoverRecord,
};
use orbicurve::localfield::RamificationProfile;
use orbicurve::orbifold::{
    BranchData, Curve, FiberPoint, FormalOrbifold, MorphismDescriptor, PointId,
};
use orbicurve::rat::rat_display;

fn main() {
    println!("=== Riemann-Hurwitz residuals ===\n");
    let pt = PointId::new;

    // the degree-2 cover with one totally wildly ramified point of jump 3
    // (genus-1 total space over the line), trivial data on both sides
    let w3 = RamificationProfile::with_auto_labels(2, 1, "c", &[3]).unwrap();
    let trivial_sides = MorphismDescriptor {
        degree: 2,
        source: FormalOrbifold::plain(Curve::new("E", 1, [pt("y")]), 2),
        target: FormalOrbifold::plain(Curve::new("P1", 0, [pt("inf")]), 2),
        fiber: vec![FiberPoint { source: pt("y"), target: pt("inf"), local_ext: w3.clone() }],
    };
    let div = ramification_divisor(&trivial_sides).unwrap();
    println!("wild cover, trivial data: divisor degree {}", rat_display(&div.degree()));
    println!("  orbifold residual  = {}", rat_display(&rh_residual(&trivial_sides).unwrap()));
    println!("  classical residual = {}", rat_display(&classical_rh_residual(&trivial_sides)));
    assert_eq!(rh_residual(&trivial_sides).unwrap(), classical_rh_residual(&trivial_sides));

    // the same cover as an etale morphism onto (P1, B_f): the branch data
    // absorbs the ramification and the divisor vanishes
    let bf = BranchData::new(2, vec![(pt("inf"), w3.clone())]).unwrap();
    let etale = MorphismDescriptor {
        degree: 2,
        source: FormalOrbifold::plain(Curve::new("E", 1, [pt("y")]), 2),
        target: FormalOrbifold::new(Curve::new("P1", 0, [pt("inf")]), bf).unwrap(),
        fiber: vec![FiberPoint { source: pt("y"), target: pt("inf"), local_ext: w3.clone() }],
    };
    let rep = etale.validate().unwrap();
    println!("\netale onto (P1, B_f): valid = {}, etale at y = {}", rep.valid, rep.etale[&pt("y")]);
    let div = ramification_divisor(&etale).unwrap();
    println!("  divisor degree = {}", rat_display(&div.degree()));
    println!("  residual       = {}", rat_display(&rh_residual(&etale).unwrap()));
    assert!(div.is_zero());

    // identity morphisms are etale with zero residual
    let t4 = RamificationProfile::tame(3, 4).unwrap();
    let bd = BranchData::new(3, vec![(pt("0"), t4)]).unwrap();
    let idm = MorphismDescriptor::identity(Curve::new("P1", 0, [pt("0")]), bd.clone(), bd).unwrap();
    println!("\nidentity morphism residual = {}", rat_display(&rh_residual(&idm).unwrap()));

    // Hilbert's form on the cyclic cover records
    println!("\nHilbert forms:");
    let t3 = RamificationProfile::tame(2, 3).unwrap();
    let kummer = GaloisCoverRecord::classical(3, 0, 0, vec![t3.clone(), t3]);
    println!(
        "  degree-3 tame cover, two branch points: residual {}",
        rat_display(&hilbert_rh_residual(&kummer))
    );
    let artin = GaloisCoverRecord::classical(2, 0, 1, vec![w3]);
    println!(
        "  degree-2 wild cover, one branch point:  residual {}",
        rat_display(&hilbert_rh_residual(&artin))
    );
    println!(
        "  orbifold variants: {} and {}",
        rat_display(&orbifold_hilbert_rh_residual(&kummer)),
        rat_display(&orbifold_hilbert_rh_residual(&artin))
    );
}
