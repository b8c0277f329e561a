//! The bundle ledger: orbifold degree and slope, refinement invariance,
//! tensor/dual/sum arithmetic, etale transport and the projection formula
//! as an exact (0,0) residual.
//!
//! Run with: cargo run --example bundle_ledger

use orbicurve::bundles::{projection_formula_residual, LedgerBundle};
use orbicurve::rat::rat_display;
use orbicurve::rng::SplitMix64;

fn main() {
    println!("=== Orbifold bundle ledger ===\n");

    let l = LedgerBundle::new(2, 1, 3).unwrap();
    println!(
        "(|Gamma| = {}, rank {}, degree {}): orbifold degree {}, slope {}",
        l.gamma,
        l.rank,
        l.degree,
        rat_display(&l.orb_degree()),
        rat_display(&l.orb_slope())
    );

    // refinement re-represents the bundle on a bigger cover without moving
    // the orbifold invariants
    let r = l.refine(3);
    println!(
        "refined by 3: (|Gamma| = {}, degree {}), orbifold degree still {}",
        r.gamma,
        r.degree,
        rat_display(&r.orb_degree())
    );
    assert_eq!(l.orb_degree(), r.orb_degree());

    // tensor adds slopes, dual negates degree
    let a = LedgerBundle::new(4, 2, 3).unwrap();
    let b = LedgerBundle::new(4, 1, 5).unwrap();
    let t = a.tensor(&b).unwrap();
    println!(
        "\ntensor: slope {} + {} = {}",
        rat_display(&a.orb_slope()),
        rat_display(&b.orb_slope()),
        rat_display(&t.orb_slope())
    );
    assert_eq!(t.orb_slope(), a.orb_slope() + b.orb_slope());
    assert_eq!(a.dual().orb_degree(), -a.orb_degree());

    // etale transport: pullback multiplies degree, pushforward multiplies
    // rank and preserves degree
    let v = LedgerBundle::new(2, 1, 2).unwrap();
    let up = v.pullback_etale(3);
    let down = v.pushforward_etale(3);
    println!("\npullback along degree 3: (rank {}, degree {})", up.rank, up.degree);
    println!("pushforward along degree 3: (rank {}, degree {})", down.rank, down.degree);

    // the projection formula: both sides expanded by the ledger rules agree
    let f = LedgerBundle::new(2, 1, 3).unwrap();
    let lhs = v.pullback_etale(2).tensor(&f).unwrap().pushforward_etale(2);
    let rhs = v.tensor(&f.pushforward_etale(2)).unwrap();
    println!(
        "\nprojection formula: lhs (rank {}, degree {}), rhs (rank {}, degree {})",
        lhs.rank, lhs.degree, rhs.rank, rhs.degree
    );
    assert_eq!(projection_formula_residual(&v, &f, 2).unwrap(), (0, 0));

    // a seeded sweep: the residual is identically (0,0)
    let mut rng = SplitMix64::new(7);
    let gammas = [1u64, 2, 3, 4, 6, 8];
    for _ in 0..1000 {
        let gamma = *rng.pick(&gammas);
        let v = LedgerBundle::new(gamma, rng.range(1, 4), rng.range(0, 20) as i64 - 10).unwrap();
        let f = LedgerBundle::new(gamma, rng.range(1, 4), rng.range(0, 20) as i64 - 10).unwrap();
        let dcov = rng.range(1, 5);
        assert_eq!(projection_formula_residual(&v, &f, dcov).unwrap(), (0, 0));
    }
    println!("\n1000/1000 randomized projection-formula residuals are (0, 0)");
}
