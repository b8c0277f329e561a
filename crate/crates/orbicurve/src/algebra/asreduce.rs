//! Artin-Schreier reduction: replace `f` by a representative of
//! `f + wp(k(x))` all of whose pole orders are coprime to p, together with
//! the witness `g` such that `f - reduced = g^p - g`. The witness makes
//! every reduction independently checkable.

use std::collections::BTreeMap;

use super::field::FqElem;
use super::poly::Poly;
use super::ratfunc::{Place, RationalFunction};
use super::AlgebraError;

#[derive(Debug, Clone)]
pub struct AsReduction {
    pub reduced: RationalFunction,
    /// `f - reduced = witness^p - witness`.
    pub witness: RationalFunction,
    /// Pole orders of `reduced`, infinity included; all coprime to p.
    pub poles: BTreeMap<Place, u64>,
}

impl AsReduction {
    /// A reduced function with no poles is a constant; the associated cover
    /// splits (geometrically it is a disjoint union of trivial sheets).
    pub fn is_split(&self) -> bool {
        self.poles.is_empty()
    }
}

/// Reduce `f` modulo the image of the Artin-Schreier operator.
///
/// Every pole must be rational over the configured field (else
/// UNSUPPORTED_POLE). A leftover constant term is removed when it lies in
/// the image of `wp` on F_q and kept otherwise; either way it contributes
/// no pole.
pub fn as_reduce(f: &RationalFunction) -> Result<AsReduction, AlgebraError> {
    let field = f.field().clone();
    let p = field.characteristic();

    // surface irrational poles before doing any work
    let initial_poles = f.poles()?;

    let mut current = f.clone();
    let mut witness = RationalFunction::zero(&field);

    // pole at infinity: the polynomial part
    loop {
        let (poly_part, _) = current.poly_split();
        match poly_part.degree() {
            Some(m) if m > 0 && (m as u64).is_multiple_of(p) => {
                let beta = field.pth_root(poly_part.leading().unwrap());
                let step = RationalFunction::from_poly(Poly::monomial(
                    &field,
                    beta,
                    m / p as usize,
                ));
                current = current.sub(&step.wp());
                witness = witness.add(&step);
            }
            _ => break,
        }
    }

    // finite poles, one at a time; a wp-step at c only touches the pole at c
    for (place, _) in initial_poles {
        let c = match place {
            Place::Finite(c) => c,
            Place::Infinity => continue,
        };
        loop {
            let m = current.pole_order_at(&c);
            if m == 0 || !(m as u64).is_multiple_of(p) {
                break;
            }
            let alpha = current.laurent_lead_at(&c, m);
            let beta = field.pth_root(&alpha);
            let step = RationalFunction::new(
                Poly::constant(&field, beta),
                Poly::linear_root(&field, &c).pow(m as u64 / p),
            )?;
            current = current.sub(&step.wp());
            witness = witness.add(&step);
        }
    }

    // leftover constant: solvable iff it is in the image of wp on F_q
    let (poly_part, _) = current.poly_split();
    if poly_part.degree() == Some(0) {
        let c = poly_part.coeff(0);
        if let Some(beta) = solve_wp(&field, &c) {
            let step = RationalFunction::from_poly(Poly::constant(&field, beta));
            current = current.sub(&step.wp());
            witness = witness.add(&step);
        }
    }

    let mut poles = BTreeMap::new();
    for (place, m) in current.poles()? {
        debug_assert!(!(m as u64).is_multiple_of(p), "reduced pole order divisible by p");
        poles.insert(place, m as u64);
    }
    Ok(AsReduction { reduced: current, witness, poles })
}

/// Solve `beta^p - beta = c` over F_q by scanning; None when c has nonzero
/// trace to the prime field.
fn solve_wp(field: &super::field::Fq, c: &FqElem) -> Option<FqElem> {
    let p = field.characteristic() as u128;
    field
        .elements()
        .find(|b| field.sub(&field.pow(b, p), b) == *c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Fq;

    fn rf(field: &Fq, num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_i64(field, num), Poly::from_i64(field, den)).unwrap()
    }

    fn check_witness(f: &RationalFunction, red: &AsReduction) {
        assert_eq!(f.sub(&red.reduced), red.witness.wp());
    }

    #[test]
    fn x_squared_reduces_to_x_char_2() {
        let f2 = Fq::prime(2).unwrap();
        let f = rf(&f2, &[0, 0, 1], &[1]);
        let red = as_reduce(&f).unwrap();
        assert_eq!(red.reduced, rf(&f2, &[0, 1], &[1]));
        assert_eq!(red.poles.len(), 1);
        assert_eq!(red.poles[&Place::Infinity], 1);
        check_witness(&f, &red);
        // witness is x
        assert_eq!(red.witness, rf(&f2, &[0, 1], &[1]));
    }

    #[test]
    fn x_cubed_already_reduced_char_2() {
        let f2 = Fq::prime(2).unwrap();
        let f = rf(&f2, &[0, 0, 0, 1], &[1]);
        let red = as_reduce(&f).unwrap();
        assert_eq!(red.reduced, f);
        assert_eq!(red.poles[&Place::Infinity], 3);
        assert!(red.witness.is_zero());
    }

    #[test]
    fn inverse_fourth_power_reduces_in_two_steps() {
        let f2 = Fq::prime(2).unwrap();
        let f = rf(&f2, &[1], &[0, 0, 0, 0, 1]);
        let red = as_reduce(&f).unwrap();
        assert_eq!(red.reduced, rf(&f2, &[1], &[0, 1]));
        assert_eq!(red.poles[&Place::Finite(f2.from_u64(0))], 1);
        // explicit witness 1/x^2 + 1/x
        let expected = rf(&f2, &[1], &[0, 0, 1]).add(&rf(&f2, &[1], &[0, 1]));
        assert_eq!(red.witness, expected);
        check_witness(&f, &red);
    }

    #[test]
    fn idempotent() {
        let f3 = Fq::prime(3).unwrap();
        let f = rf(&f3, &[0, 0, 0, 1, 0, 0, 2, 0, 0, 1], &[1]).add(&rf(&f3, &[2], &[0, 0, 0, 1]));
        let red = as_reduce(&f).unwrap();
        check_witness(&f, &red);
        let red2 = as_reduce(&red.reduced).unwrap();
        assert_eq!(red.reduced, red2.reduced);
        assert!(red2.witness.is_zero());
        for m in red.poles.values() {
            assert!(m % 3 != 0);
        }
    }

    #[test]
    fn removable_constant_is_removed() {
        // over F_4 every element has trace zero or one; pick one with trace 0
        let f4 = Fq::extension(2, 2).unwrap();
        let c = f4
            .elements()
            .find(|e| !f4.is_zero(e) && solve_wp(&f4, e).is_some())
            .expect("F_4 has nonzero trace-zero elements");
        let f = RationalFunction::from_poly(Poly::constant(&f4, c));
        let red = as_reduce(&f).unwrap();
        assert!(red.reduced.is_zero());
        check_witness(&f, &red);
    }
}
