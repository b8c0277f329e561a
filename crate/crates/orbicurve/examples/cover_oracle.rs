//! The explicit-cover oracle: Kummer and Artin-Schreier covers of the line
//! over F_q, their closed-form analyses, and the etale genus identity that
//! cross-checks the curve genus against local different sums.
//!
//! Run with: cargo run --example cover_oracle

use num_traits::Zero;

use orbicurve::algebra::{Fq, Poly, RationalFunction};
use orbicurve::covers::{
    analyze_artin_schreier, analyze_kummer, etale_identity_residual, random_cover_spec,
    ArtinSchreierCoverSpec, CoverFamily, KummerCoverSpec, RandomBounds,
};
use orbicurve::genus::orbifold_genus;
use orbicurve::rat::rat_display;

fn main() {
    println!("=== Explicit covers of the line over F_q ===\n");

    // y^5 = x(x-1)(x-2)(x-3)(x-4) over F_11: five tame branch points
    let f11 = Fq::from_order(11).unwrap();
    let spec = KummerCoverSpec::new(f11.clone(), 5, (0..5).map(|c| (f11.from_u64(c), 1))).unwrap();
    let a = analyze_kummer(&spec).unwrap();
    println!("{}", spec.render());
    println!("  genus of the cover = {}", a.genus_cover);
    println!("  branch points      = {}", a.branch.len());
    assert_eq!(a.genus_cover, 6);

    // y^2 - y = x^3 over F_2: one wild point of jump 3 over infinity
    let f2 = Fq::from_order(2).unwrap();
    let cube = RationalFunction::from_poly(Poly::from_i64(&f2, &[0, 0, 0, 1]));
    let spec = ArtinSchreierCoverSpec::new(cube).unwrap();
    let a = analyze_artin_schreier(&spec).unwrap();
    println!("\n{}", spec.render());
    println!("  genus of the cover = {}", a.genus_cover);
    let orb = a.base_orbifold().unwrap();
    println!("  g(P1, B_f)         = {}", rat_display(&orbifold_genus(&orb)));
    println!(
        "  etale identity residual = {}",
        rat_display(&etale_identity_residual(&a).unwrap())
    );
    assert_eq!(a.genus_cover, 1);

    // an Artin-Schreier function is reduced before analysis: x^2 is
    // equivalent to x modulo the image of g -> g^p - g
    let square = RationalFunction::from_poly(Poly::from_i64(&f2, &[0, 0, 1]));
    let spec = ArtinSchreierCoverSpec::new(square).unwrap();
    println!("\ny^2 - y = x^2 reduces to {}", spec.render());
    assert_eq!(spec.function().numerator().degree(), Some(1));

    // randomized sweep: the identity g(P1, B_f) = 1 + (g(Y) - 1)/d crosses
    // the classical genus of the total space against local degram sums
    println!("\nrandomized oracle sweep:");
    let bounds = RandomBounds::default();
    let f13 = Fq::from_order(13).unwrap();
    let f8 = Fq::from_order(8).unwrap();
    let mut checked = 0;
    for seed in 0..60u64 {
        for (family, field) in [(CoverFamily::Kummer, &f13), (CoverFamily::ArtinSchreier, &f8)] {
            let spec = random_cover_spec(family, seed, field, &bounds).unwrap();
            let analysis = spec.analyze().unwrap();
            let residual = etale_identity_residual(&analysis).unwrap();
            assert!(residual.is_zero(), "residual nonzero for {}", spec.render());
            checked += 1;
        }
    }
    println!("  {checked}/{checked} residuals identically zero");
}
