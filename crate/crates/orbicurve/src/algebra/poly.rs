//! Dense univariate polynomials over a finite field.

use super::field::{Fq, FqElem};

/// Polynomial in one variable, little-endian coefficients, no trailing zeros.
/// The zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: Fq,
    coeffs: Vec<FqElem>,
}

impl Poly {
    pub fn new(field: &Fq, coeffs: Vec<FqElem>) -> Self {
        let mut p = Poly { field: field.clone(), coeffs };
        p.normalize();
        p
    }

    pub fn zero(field: &Fq) -> Self {
        Poly { field: field.clone(), coeffs: vec![] }
    }

    pub fn one(field: &Fq) -> Self {
        Poly { field: field.clone(), coeffs: vec![field.one()] }
    }

    pub fn constant(field: &Fq, c: FqElem) -> Self {
        Self::new(field, vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(field: &Fq, c: FqElem, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Self::new(field, coeffs)
    }

    /// `x - c`.
    pub fn linear_root(field: &Fq, c: &FqElem) -> Self {
        Self::new(field, vec![field.neg(c), field.one()])
    }

    pub fn from_i64(field: &Fq, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    fn normalize(&mut self) {
        while self
            .coeffs
            .last()
            .map(|c| self.field.is_zero(c))
            .unwrap_or(false)
        {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&FqElem> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> FqElem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.field.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Poly::new(&self.field, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.field.sub(&self.coeff(i), &other.coeff(i)))
            .collect();
        Poly::new(&self.field, coeffs)
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        Poly::new(&self.field, coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.field.add(&coeffs[i + j], &self.field.mul(a, b));
            }
        }
        Poly::new(&self.field, coeffs)
    }

    pub fn scale(&self, c: &FqElem) -> Poly {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Poly::new(&self.field, coeffs)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division: `(quotient, remainder)` with deg r < deg divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let f = &self.field;
        let dl = f.inv(divisor.leading().unwrap()).unwrap();
        let mut rem = self.clone();
        let dd = divisor.degree().unwrap();
        let mut quot = vec![f.zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = f.mul(rem.leading().unwrap(), &dl);
            let shift = rd - dd;
            quot[shift] = f.add(&quot[shift], &c);
            let t = Poly::monomial(f, c, shift).mul(divisor);
            rem = rem.sub(&t);
        }
        (Poly::new(f, quot), rem)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scale to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&self.field.inv(l).unwrap()),
        }
    }

    pub fn eval(&self, x: &FqElem) -> FqElem {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    /// Roots in the base field with multiplicities, by scanning all q
    /// elements and stripping linear factors. Returns the remaining
    /// root-free cofactor as well.
    pub fn rational_roots(&self) -> (Vec<(FqElem, usize)>, Poly) {
        let f = &self.field;
        let mut rest = self.clone();
        let mut roots = vec![];
        if self.is_zero() {
            return (roots, rest);
        }
        for c in f.elements() {
            if f.is_zero(&rest.eval(&c)) {
                let lin = Poly::linear_root(f, &c);
                let mut mult = 0;
                loop {
                    let (q, r) = rest.div_rem(&lin);
                    if r.is_zero() {
                        rest = q;
                        mult += 1;
                    } else {
                        break;
                    }
                }
                roots.push((c, mult));
            }
            if rest.degree() == Some(0) {
                break;
            }
        }
        (roots, rest)
    }

    /// Render with variable `x`, mostly for reports and examples.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let mut parts = vec![];
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if f.is_zero(c) {
                continue;
            }
            let cs = f.render_pretty(c);
            let part = match k {
                0 => cs,
                1 if cs == "1" => "x".into(),
                1 => format!("{}*x", cs),
                _ if cs == "1" => format!("x^{}", k),
                _ => format!("{}*x^{}", cs, k),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_rem_recombines() {
        let f = Fq::prime(5).unwrap();
        let a = Poly::from_i64(&f, &[1, 2, 0, 3, 4]);
        let b = Poly::from_i64(&f, &[2, 1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().map(|d| d < 2).unwrap_or(true));
    }

    #[test]
    fn gcd_of_common_factor() {
        let f = Fq::prime(7).unwrap();
        let common = Poly::from_i64(&f, &[3, 1]); // x + 3
        let a = common.mul(&Poly::from_i64(&f, &[1, 1]));
        let b = common.mul(&Poly::from_i64(&f, &[2, 0, 1]));
        assert_eq!(a.gcd(&b), common.monic());
    }

    #[test]
    fn roots_with_multiplicity() {
        let f = Fq::prime(5).unwrap();
        // (x-1)^2 (x-2)
        let p = Poly::linear_root(&f, &f.from_u64(1))
            .pow(2)
            .mul(&Poly::linear_root(&f, &f.from_u64(2)));
        let (roots, rest) = p.rational_roots();
        assert!(rest.degree() == Some(0));
        assert_eq!(roots.len(), 2);
        let m: std::collections::BTreeMap<_, _> = roots.into_iter().collect();
        assert_eq!(m[&f.from_u64(1)], 2);
        assert_eq!(m[&f.from_u64(2)], 1);
    }
}
