//! The lattice of branch data on a curve: pointwise compositum (join),
//! intersection (meet), containment, pullback along tame base change and
//! the fiber-product profile.
//!
//! Run with: cargo run --example branch_data_lattice

use orbicurve::localfield::RamificationProfile;
use orbicurve::orbifold::{fiber_product_profile, BranchData, PointId};

fn main() {
    println!("=== Branch-data lattice ===\n");
    let p = 5;
    let pt = PointId::new;
    let tame = |n| RamificationProfile::tame(p, n).unwrap();

    let a = BranchData::new(p, vec![(pt("0"), tame(3)), (pt("1"), tame(2))]).unwrap();
    let b = BranchData::new(p, vec![(pt("1"), tame(4)), (pt("inf"), tame(3))]).unwrap();

    let join = a.join(&b).unwrap();
    let meet = a.meet(&b).unwrap();
    println!("supp(A)     = {:?}", a.support_set());
    println!("supp(B)     = {:?}", b.support_set());
    println!("supp(A v B) = {:?}  (union)", join.support_set());
    println!("supp(A ^ B) = {:?}  (inside the intersection)", meet.support_set());
    assert_eq!(join.support().count(), 3);
    assert_eq!(meet.support().count(), 1);

    // at the shared point the join takes the compositum (lcm of tame
    // orders) and the meet the intersection (gcd)
    println!("\nat the shared point 1: join has tame order {}, meet tame order {}",
        join.at(&pt("1")).tame_order(),
        meet.at(&pt("1")).tame_order());
    assert_eq!(join.at(&pt("1")).tame_order(), 4);
    assert_eq!(meet.at(&pt("1")).tame_order(), 2);

    // the order relations P <= PP' and P ^ P' <= P
    assert!(a.leq(&join));
    assert!(meet.leq(&a));
    println!("\nA <= A v B and A ^ B <= A hold");

    // labels make the wild lattice decidable: shared labels intersect,
    // distinct labels concatenate
    let wa = RamificationProfile::new(2, 1, vec![("a".into(), 1), ("b".into(), 3)]).unwrap();
    let wb = RamificationProfile::new(2, 1, vec![("a".into(), 1), ("c".into(), 5)]).unwrap();
    let wmeet = wa.meet(&wb).unwrap();
    let wjoin = wa.compositum(&wb).unwrap();
    println!("\nwild meet keeps the shared field only: rank {}", wmeet.wild_rank());
    println!("wild join concatenates distinct fields: rank {}", wjoin.wild_rank());
    assert_eq!(wmeet.wild_rank(), 1);
    assert_eq!(wjoin.wild_rank(), 3);

    // tame base change: t = s^e divides the tame order and scales jumps
    let mixed = RamificationProfile::with_auto_labels(3, 2, "w", &[1]).unwrap();
    let pulled = mixed.base_change_tame(2).unwrap();
    println!(
        "\nbase change by e = 2: tame {} -> {}, jump 1 -> {}",
        mixed.tame_order(),
        pulled.tame_order(),
        pulled.wild()[0].jump
    );
    assert_eq!(pulled.tame_order(), 1);
    assert_eq!(pulled.wild()[0].jump, 2);

    // fiber product of two tame local profiles: lcm-driven compositum
    let q = fiber_product_profile(
        &RamificationProfile::tame(5, 3).unwrap(),
        &RamificationProfile::tame(5, 4).unwrap(),
        1,
        1,
    )
    .unwrap();
    println!("\nfiber product of tame 3 and tame 4 over the same point: tame {}", q.tame_order());
    assert_eq!(q.tame_order(), 12);
}
