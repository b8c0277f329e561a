//! Equivariant bundles on finite free covers: the cocycle identity, the
//! invariant pushforward, and descent witnesses showing that a pulled-back
//! bundle recovers its base.
//!
//! Run with: cargo run --example equivariant_descent

use orbicurve::algebra::Fq;
use orbicurve::bundles::{
    cocycle_validate, is_invariant_section, pullback_witness, pushforward_invariants,
    EquivariantBundle, GammaSetCover, Group, Matrix,
};
use orbicurve::rng::SplitMix64;

fn main() {
    println!("=== Equivariant bundles and descent ===\n");

    // the regular S3 cover of two base points, bundles over F_9
    let cover = GammaSetCover::regular_blocks(Group::symmetric_3(), 2);
    let f9 = Fq::from_order(9).unwrap();
    println!(
        "cover: |Gamma| = {}, total set {}, base set {}",
        cover.group().order(),
        cover.total_size(),
        cover.base_size()
    );

    // the trivial bundle is a cocycle; corrupting one matrix breaks it
    let trivial = EquivariantBundle::trivial(&cover, &f9, 2);
    println!("trivial rank-2 bundle cocycle valid: {}", cocycle_validate(&cover, &trivial));
    let mut corrupted = trivial.clone();
    let mut m = Matrix::identity(&f9, 2);
    m.set(0, 1, f9.one());
    corrupted.set_lambda(1, 0, m);
    println!("corrupted bundle cocycle valid:      {}", cocycle_validate(&cover, &corrupted));
    assert!(!cocycle_validate(&cover, &corrupted));

    // gauge the trivial bundle by random changes of basis: still a cocycle,
    // and the invariant pushforward recovers the base rank
    let mut rng = SplitMix64::new(42);
    let (bundle, gauges) = EquivariantBundle::random_pullback(&cover, &f9, 2, &mut rng);
    println!("\nrandom gauge of a rank-2 pullback:");
    println!("  cocycle valid: {}", cocycle_validate(&cover, &bundle));
    let inv = pushforward_invariants(&cover, &bundle).unwrap();
    println!("  invariant ranks per base point: {:?}", inv.ranks);
    assert_eq!(inv.ranks, vec![2, 2]);

    // the gauges give an explicit isomorphism with the base fiber: each
    // witness column is an invariant section and the columns are independent
    let witness = pullback_witness(&cover, &gauges, 2);
    for (b, w) in witness.iter().enumerate() {
        assert_eq!(w.rank(), 2);
        for j in 0..2 {
            let col: Vec<_> = (0..w.nrows()).map(|i| w.get(i, j).clone()).collect();
            assert!(is_invariant_section(&cover, &bundle, b, &col));
        }
        println!("  base point {b}: witness is injective with invariant columns");
    }

    // a rank-1 sign bundle on the regular Z/2 cover: a valid cocycle, and
    // because the action is free it is a coboundary, so the invariants are
    // one-dimensional
    let z2 = GammaSetCover::regular(Group::cyclic(2));
    let f5 = Fq::prime(5).unwrap();
    let mut sign = EquivariantBundle::trivial(&z2, &f5, 1);
    let mut minus = Matrix::identity(&f5, 1);
    minus.set(0, 0, f5.from_i64(-1));
    sign.set_lambda(1, 0, minus.clone());
    sign.set_lambda(1, 1, minus);
    println!("\nsign bundle on the free Z/2 orbit:");
    println!("  cocycle valid: {}", cocycle_validate(&z2, &sign));
    let inv = pushforward_invariants(&z2, &sign).unwrap();
    println!("  invariant rank: {} (multiplicity of the trivial representation)", inv.ranks[0]);
    assert_eq!(inv.ranks, vec![1]);
}
