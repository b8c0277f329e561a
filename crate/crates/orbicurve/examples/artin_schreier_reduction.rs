//! Artin-Schreier reduction with checkable witnesses: normalize the right
//! side of y^p - y = f so that every pole order is coprime to p, returning
//! the g with f - reduced = g^p - g.
//!
//! Run with: cargo run --example artin_schreier_reduction

use orbicurve::algebra::{as_reduce, Fq, Poly, RationalFunction};

fn show(field: &Fq, f: &RationalFunction) {
    let red = as_reduce(f).unwrap();
    println!("f        = {}", f.render());
    println!("reduced  = {}", red.reduced.render());
    println!("witness  = {}", red.witness.render());
    print!("poles    =");
    for (place, order) in &red.poles {
        print!(" ({}, order {})", place.render(field), order);
    }
    println!();
    // the witness makes the reduction independently checkable
    assert_eq!(f.sub(&red.reduced), red.witness.wp());
    println!("checked: f - reduced = witness^p - witness\n");
}

fn main() {
    println!("=== Artin-Schreier reduction over F_2 ===\n");
    let f2 = Fq::prime(2).unwrap();

    // x^2 = (x^2 - x) + x is equivalent to x
    show(&f2, &RationalFunction::from_poly(Poly::from_i64(&f2, &[0, 0, 1])));

    // x^3 is already reduced (pole order 3 coprime to 2)
    show(&f2, &RationalFunction::from_poly(Poly::from_i64(&f2, &[0, 0, 0, 1])));

    // 1/x^4 reduces to 1/x through two subtractions
    let inv4 = RationalFunction::new(Poly::one(&f2), Poly::from_i64(&f2, &[0, 0, 0, 0, 1]))
        .unwrap();
    show(&f2, &inv4);

    // a mixed function with several poles
    let mixed = RationalFunction::new(
        Poly::from_i64(&f2, &[1, 0, 0, 0, 0, 0, 1]), // x^6 + 1
        Poly::from_i64(&f2, &[0, 0, 1]),             // x^2
    )
    .unwrap();
    show(&f2, &mixed);

    // a pole that is not rational over the configured field is rejected
    let f3 = Fq::prime(3).unwrap();
    let irrational = RationalFunction::new(
        Poly::one(&f3),
        Poly::from_i64(&f3, &[1, 0, 1]), // x^2 + 1, irreducible over F_3
    )
    .unwrap();
    match as_reduce(&irrational) {
        Err(e) => println!("1/(x^2+1) over F_3: {e}"),
        Ok(_) => unreachable!("irrational poles are out of model"),
    }
}
