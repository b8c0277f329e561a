//! Rational functions over a finite field, kept in canonical form:
//! monic denominator coprime to the numerator. Pole orders at rational
//! points are read off the denominator's linear factors.

use super::field::{Fq, FqElem};
use super::poly::Poly;
use super::AlgebraError;

/// A closed point of the projective line over the configured field.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Finite(FqElem),
    Infinity,
}

impl Place {
    pub fn render(&self, field: &Fq) -> String {
        match self {
            Place::Finite(c) => field.render_pretty(c),
            Place::Infinity => "inf".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    /// Build and normalize. The denominator must be nonzero.
    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        let mut rf = RationalFunction { num, den };
        rf.normalize();
        Ok(rf)
    }

    pub fn from_poly(p: Poly) -> Self {
        let one = Poly::one(p.field());
        RationalFunction { num: p, den: one }
    }

    pub fn zero(field: &Fq) -> Self {
        Self::from_poly(Poly::zero(field))
    }

    pub fn field(&self) -> &Fq {
        self.num.field()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one(self.num.field());
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree().unwrap_or(0) > 0 {
            self.num = self.num.div_rem(&g).0;
            self.den = self.den.div_rem(&g).0;
        }
        let lead = self.den.leading().unwrap().clone();
        if lead != self.num.field().one() {
            let li = self.num.field().inv(&lead).unwrap();
            self.num = self.num.scale(&li);
            self.den = self.den.scale(&li);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::new(num, den).unwrap()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).unwrap()
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u64) -> Self {
        Self::new(self.num.pow(e), self.den.pow(e)).unwrap()
    }

    /// `f^p - f`, the Artin-Schreier operator.
    pub fn wp(&self) -> Self {
        self.pow(self.field().characteristic()).sub(self)
    }

    /// Polynomial part and proper remainder: `f = q + r/den` with deg r < deg den.
    pub fn poly_split(&self) -> (Poly, RationalFunction) {
        let (q, r) = self.num.div_rem(&self.den);
        (q, RationalFunction::new(r, self.den.clone()).unwrap())
    }

    /// Pole order at a finite point (multiplicity of the root in the
    /// canonical denominator; zero if no pole).
    pub fn pole_order_at(&self, c: &FqElem) -> usize {
        let f = self.field();
        let lin = Poly::linear_root(f, c);
        let mut d = self.den.clone();
        let mut m = 0;
        loop {
            let (q, r) = d.div_rem(&lin);
            if r.is_zero() {
                d = q;
                m += 1;
            } else {
                break;
            }
        }
        m
    }

    /// Pole order at infinity: deg num - deg den when positive.
    pub fn pole_order_at_infinity(&self) -> usize {
        match (self.num.degree(), self.den.degree()) {
            (Some(n), Some(d)) if n > d => n - d,
            _ => 0,
        }
    }

    /// Leading Laurent coefficient at a finite pole of order m:
    /// `lim (x-c)^m f(x)`.
    pub fn laurent_lead_at(&self, c: &FqElem, m: usize) -> FqElem {
        let f = self.field();
        let lin = Poly::linear_root(f, c).pow(m as u64);
        let (den_red, r) = self.den.div_rem(&lin);
        assert!(r.is_zero(), "pole order mismatch");
        let nv = self.num.eval(c);
        let dv = den_red.eval(c);
        f.mul(&nv, &f.inv(&dv).expect("canonical form has coprime num/den"))
    }

    /// All poles over the configured field with orders, infinity included.
    /// Errors with UNSUPPORTED_POLE if the denominator has a factor with no
    /// rational root.
    pub fn poles(&self) -> Result<Vec<(Place, usize)>, AlgebraError> {
        let (roots, rest) = self.den.rational_roots();
        if rest.degree().unwrap_or(0) > 0 {
            return Err(AlgebraError::UnsupportedPole(format!(
                "denominator factor of degree {} has no rational root",
                rest.degree().unwrap()
            )));
        }
        let mut out: Vec<(Place, usize)> =
            roots.into_iter().map(|(c, m)| (Place::Finite(c), m)).collect();
        let mi = self.pole_order_at_infinity();
        if mi > 0 {
            out.push((Place::Infinity, mi));
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        if self.den.degree() == Some(0) {
            self.num.render()
        } else {
            format!("({}) / ({})", self.num.render(), self.den.render())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5x(num: &[i64], den: &[i64]) -> RationalFunction {
        let f = Fq::prime(5).unwrap();
        RationalFunction::new(Poly::from_i64(&f, num), Poly::from_i64(&f, den)).unwrap()
    }

    #[test]
    fn canonical_form_reduces_and_makes_monic() {
        // (x^2 - 1) / (2x - 2) = (x + 1) / 2 -> num 3x+3, den 1 after monic scaling
        let r = f5x(&[-1, 0, 1], &[-2, 2]);
        assert_eq!(r.denominator().degree(), Some(0));
    }

    #[test]
    fn pole_orders() {
        // 1 / (x^2 (x-1))
        let r = f5x(&[1], &[0, 0, 1]).div(&f5x(&[-1, 1], &[1])).unwrap();
        let f = r.field().clone();
        assert_eq!(r.pole_order_at(&f.from_u64(0)), 2);
        assert_eq!(r.pole_order_at(&f.from_u64(1)), 1);
        assert_eq!(r.pole_order_at(&f.from_u64(2)), 0);
        // x^3 has pole order 3 at infinity
        let p = f5x(&[0, 0, 0, 1], &[1]);
        assert_eq!(p.pole_order_at_infinity(), 3);
    }

    #[test]
    fn laurent_lead() {
        // 3/(x-2)^2 + 1/(x-2): lead at order 2 is 3
        let f = Fq::prime(5).unwrap();
        let t1 = f5x(&[3], &[-2, 1]).mul(&f5x(&[1], &[-2, 1]));
        let t2 = f5x(&[1], &[-2, 1]);
        let r = t1.add(&t2);
        assert_eq!(r.laurent_lead_at(&f.from_u64(2), 2), f.from_u64(3));
    }

    #[test]
    fn wp_operator() {
        // over F_2: wp(x) = x^2 - x
        let f = Fq::prime(2).unwrap();
        let x = RationalFunction::from_poly(Poly::from_i64(&f, &[0, 1]));
        let w = x.wp();
        assert_eq!(w.numerator(), &Poly::from_i64(&f, &[0, 1, 1]));
    }

    #[test]
    fn irrational_pole_detected() {
        // 1/(x^2+1) over F_3: x^2+1 is irreducible
        let f = Fq::prime(3).unwrap();
        let r = RationalFunction::new(Poly::one(&f), Poly::from_i64(&f, &[1, 0, 1])).unwrap();
        assert!(matches!(r.poles(), Err(AlgebraError::UnsupportedPole(_))));
    }
}
