//! Ramification profiles and their differents, computed two independent
//! ways: the conductor-discriminant character sum and Hilbert's sum over
//! the lower filtration reconstructed through the Herbrand function.
//!
//! Run with: cargo run --example profiles_and_differents

use orbicurve::localfield::{herbrand_psi, RamificationProfile};
use orbicurve::rat::{rat, rint};

fn show(name: &str, profile: &RamificationProfile) {
    println!("{name}");
    println!("  degree [L:K]          = {}", profile.degree());
    println!("  degram (character sum) = {}", profile.degram());
    println!("  degram (Hilbert sum)   = {}", profile.hilbert_sum());
    print!("  lower filtration       =");
    for (brk, order) in profile.lower_filtration() {
        print!(" (break {brk}, |G| = {order})");
    }
    println!("\n");
}

fn main() {
    println!("=== Differents of local-field extensions ===\n");

    // tame cyclic of order 5: four tame characters, conductor 1 each
    let tame5 = RamificationProfile::tame(3, 5).unwrap();
    show("tame cyclic, n = 5, p = 3", &tame5);
    assert_eq!(tame5.degram(), 4);

    // one wild component of jump 2 in characteristic 3: (p-1)(m+1) = 6
    let wild2 = RamificationProfile::with_auto_labels(3, 1, "w", &[2]).unwrap();
    show("purely wild, jump 2, p = 3", &wild2);
    assert_eq!(wild2.degram(), 6);

    // mixed: Z/3 x Z/2 over k((t)) with upper jump 1 in characteristic 2.
    // Character sum: (3-1) + 3*(1+1) = 8; tower route: 4 + 4 = 8.
    let mixed = RamificationProfile::with_auto_labels(2, 3, "w", &[1]).unwrap();
    show("mixed, n = 3 with one jump-1 component, p = 2", &mixed);
    assert_eq!(mixed.degram(), 8);

    // the Herbrand function stretches upper numbering to lower numbering:
    // the jump-1 break lands at psi(1) = 3
    println!("Herbrand psi for the mixed profile:");
    for u in 0..=3 {
        println!("  psi({u}) = {}", herbrand_psi(&mixed, &rint(u)));
    }
    assert_eq!(herbrand_psi(&mixed, &rint(1)), rint(3));
    assert_eq!(herbrand_psi(&mixed, &rat(1, 2)), rat(3, 2));

    // two wild components: the character sum sees all three nonzero
    // character vectors of F_2^2
    let two = RamificationProfile::new(
        2,
        1,
        vec![("a".into(), 1), ("b".into(), 3)],
    )
    .unwrap();
    show("two components, jumps 1 and 3, p = 2", &two);
    assert_eq!(two.degram(), 10);

    // relative different through the tower formula
    let sub = RamificationProfile::tame(2, 3).unwrap();
    let rel = RamificationProfile::degram_relative(&sub, &mixed).unwrap();
    println!("relative different of the mixed profile over its tame part = {rel}");
    assert_eq!(rel, 4);

    println!("\nall dual-path checks agreed");
}
