//! Finite fields `F_q = F_p[t]/(m)` with exact coefficient-vector arithmetic.
//!
//! The field is a context object (`Fq`); elements are plain coefficient
//! vectors and every operation goes through the field, so values stay
//! immutable and freely shareable. Elements serialize as little-endian
//! coefficient vectors in the modulus basis, e.g. `[1,0,2]` in F_27.

use super::AlgebraError;

/// A finite field of order `q = p^d`, fixed modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fq {
    p: u64,
    d: usize,
    /// Monic irreducible of degree `d` over the prime field, little-endian,
    /// length `d + 1`.
    modulus: Vec<u64>,
}

/// An element of `Fq`: little-endian coefficient vector of length `d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FqElem {
    coeffs: Vec<u64>,
}

impl FqElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

// --- dense polynomial helpers over the prime field -------------------------
// Little-endian coefficient vectors with entries reduced mod p; `norm`
// strips trailing zeros so deg(v) = v.len() - 1.

fn norm(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn psub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    norm(out)
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += (x as u128) * (y as u128);
        }
    }
    norm(out.into_iter().map(|c| (c % p as u128) as u64).collect())
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    // extended Euclid on integers
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert_eq!(r0, 1, "not invertible mod p");
    s0.rem_euclid(p as i128) as u64
}

/// Remainder of `a` modulo `b` (b nonzero, any leading coefficient).
fn prem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = norm(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let lead_inv = inv_mod_p(*b.last().unwrap(), p);
    let mut r = norm(a.to_vec());
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = (*r.last().unwrap() as u128 * lead_inv as u128 % p as u128) as u64;
        // r -= c * x^shift * b
        for (i, &bc) in b.iter().enumerate() {
            let sub = (c as u128 * bc as u128 % p as u128) as u64;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = norm(r);
    }
    r
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (norm(a.to_vec()), norm(b.to_vec()));
    while !b.is_empty() {
        let r = prem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let li = inv_mod_p(lead, p);
        a = a
            .into_iter()
            .map(|c| (c as u128 * li as u128 % p as u128) as u64)
            .collect();
    }
    a
}

/// `t^e mod f` by square-and-multiply.
fn pexp_mod(t: &[u64], e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut base = prem(t, f, p);
    let mut acc = vec![1u64];
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = prem(&pmul(&acc, &base, p), f, p);
        }
        base = prem(&pmul(&base, &base, p), f, p);
        e >>= 1;
    }
    acc
}

/// Monic irreducibility over F_p: `x^(p^d) = x (mod f)` and the Frobenius
/// power at every maximal proper subfield index is coprime to `f`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = norm(f.to_vec());
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    // frob[k] = x^(p^k) mod f
    let mut t = prem(&x, &f, p);
    let mut frob = vec![t.clone()];
    for _ in 0..d {
        t = pexp_mod(&t, p, &f, p);
        frob.push(t.clone());
    }
    if frob[d] != prem(&x, &f, p) {
        return false;
    }
    let mut primes = vec![];
    let mut m = d;
    let mut q = 2;
    while q * q <= m {
        if m.is_multiple_of(q) {
            primes.push(q);
            while m.is_multiple_of(q) {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    for ell in primes {
        let diff = psub(&frob[d / ell], &x, p);
        if pgcd(&diff, &f, p).len() != 1 {
            return false;
        }
    }
    true
}

impl Fq {
    /// The prime field F_p (modulus `x`).
    pub fn prime(p: u64) -> Result<Self, AlgebraError> {
        Self::from_modulus(p, vec![0, 1])
    }

    /// F_{p^d} with the lexicographically smallest monic irreducible modulus.
    pub fn extension(p: u64, d: usize) -> Result<Self, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        if d == 0 {
            return Err(AlgebraError::BadModulus("degree must be >= 1".into()));
        }
        if d == 1 {
            return Self::prime(p);
        }
        // enumerate lower coefficients in base-p counting order
        let total = (p as u128).checked_pow(d as u32).expect("field too large");
        for idx in 0..total {
            let mut c = idx;
            let mut coeffs = Vec::with_capacity(d + 1);
            for _ in 0..d {
                coeffs.push((c % p as u128) as u64);
                c /= p as u128;
            }
            coeffs.push(1);
            if is_irreducible(&coeffs, p) {
                return Self::from_modulus(p, coeffs);
            }
        }
        unreachable!("an irreducible of every degree exists")
    }

    /// Build from an explicit monic modulus; verified irreducible.
    pub fn from_modulus(p: u64, modulus: Vec<u64>) -> Result<Self, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(AlgebraError::BadModulus("p too large".into()));
        }
        let modulus = norm(modulus.into_iter().map(|c| c % p).collect());
        if modulus.len() < 2 {
            return Err(AlgebraError::BadModulus("modulus must have degree >= 1".into()));
        }
        if modulus.last() != Some(&1) {
            return Err(AlgebraError::BadModulus("modulus must be monic".into()));
        }
        if !is_irreducible(&modulus, p) {
            return Err(AlgebraError::BadModulus("modulus is reducible".into()));
        }
        let d = modulus.len() - 1;
        Ok(Fq { p, d, modulus })
    }

    /// F_q for a prime power q.
    pub fn from_order(q: u64) -> Result<Self, AlgebraError> {
        let mut p = 2;
        while p * p <= q {
            if q.is_multiple_of(p) {
                let mut d = 0;
                let mut m = q;
                while m.is_multiple_of(p) {
                    m /= p;
                    d += 1;
                }
                if m != 1 {
                    return Err(AlgebraError::NotPrimePower(q));
                }
                return Self::extension(p, d);
            }
            p += 1;
        }
        if q < 2 {
            return Err(AlgebraError::NotPrimePower(q));
        }
        Self::prime(q) // q itself prime
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> usize {
        self.d
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Field size q = p^d.
    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.d as u32)
    }

    pub fn is_prime_field(&self) -> bool {
        self.d == 1
    }

    pub fn zero(&self) -> FqElem {
        FqElem { coeffs: vec![0; self.d] }
    }

    pub fn one(&self) -> FqElem {
        self.from_u64(1)
    }

    pub fn from_u64(&self, n: u64) -> FqElem {
        let mut coeffs = vec![0; self.d];
        coeffs[0] = n % self.p;
        FqElem { coeffs }
    }

    pub fn from_i64(&self, n: i64) -> FqElem {
        let r = n.rem_euclid(self.p as i64) as u64;
        self.from_u64(r)
    }

    /// Element from a little-endian coefficient vector (length <= d).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FqElem, AlgebraError> {
        if coeffs.len() > self.d {
            return Err(AlgebraError::BadElement(format!(
                "coefficient vector longer than extension degree {}",
                self.d
            )));
        }
        let mut c = vec![0; self.d];
        for (i, &v) in coeffs.iter().enumerate() {
            c[i] = v % self.p;
        }
        Ok(FqElem { coeffs: c })
    }

    /// The i-th element in base-p counting order; inverse of `index_of`.
    pub fn element_at(&self, index: u128) -> FqElem {
        let mut c = index % self.order();
        let mut coeffs = Vec::with_capacity(self.d);
        for _ in 0..self.d {
            coeffs.push((c % self.p as u128) as u64);
            c /= self.p as u128;
        }
        FqElem { coeffs }
    }

    pub fn index_of(&self, a: &FqElem) -> u128 {
        let mut idx = 0u128;
        for &c in a.coeffs.iter().rev() {
            idx = idx * self.p as u128 + c as u128;
        }
        idx
    }

    /// All q elements, in counting order.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.order()).map(move |i| self.element_at(i))
    }

    pub fn is_zero(&self, a: &FqElem) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FqElem { coeffs }
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect();
        FqElem { coeffs }
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let prod = pmul(&a.coeffs, &b.coeffs, self.p);
        let red = prem(&prod, &self.modulus, self.p);
        self.pad(red)
    }

    fn pad(&self, mut v: Vec<u64>) -> FqElem {
        v.resize(self.d, 0);
        FqElem { coeffs: v }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &FqElem) -> Option<FqElem> {
        if self.is_zero(a) {
            return None;
        }
        // extended Euclid over F_p[x] against the modulus
        let (mut r0, mut r1) = (self.modulus.clone(), norm(a.coeffs.clone()));
        let (mut s0, mut s1) = (vec![], vec![1u64]);
        while !r1.is_empty() {
            // quotient of r0 by r1
            let lead_inv = inv_mod_p(*r1.last().unwrap(), self.p);
            let mut q = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
            let mut r = r0.clone();
            while r.len() >= r1.len() && !r.is_empty() {
                let shift = r.len() - r1.len();
                let c = (*r.last().unwrap() as u128 * lead_inv as u128 % self.p as u128) as u64;
                q[shift] = (q[shift] + c) % self.p;
                for (i, &bc) in r1.iter().enumerate() {
                    let sub = (c as u128 * bc as u128 % self.p as u128) as u64;
                    r[shift + i] = (r[shift + i] + self.p - sub) % self.p;
                }
                r = norm(r);
            }
            let q = norm(q);
            (r0, r1) = (r1, r);
            let t = psub(&s0, &pmul(&q, &s1, self.p), self.p);
            (s0, s1) = (s1, t);
        }
        // r0 = gcd (a nonzero constant since modulus is irreducible)
        let g = *r0.last().expect("gcd of nonzero with modulus");
        let gi = inv_mod_p(g, self.p);
        let s: Vec<u64> = s0
            .into_iter()
            .map(|c| (c as u128 * gi as u128 % self.p as u128) as u64)
            .collect();
        Some(self.pad(prem(&s, &self.modulus, self.p)))
    }

    pub fn pow(&self, a: &FqElem, mut e: u128) -> FqElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// The unique p-th root (Frobenius is bijective): `x^(q/p)`.
    pub fn pth_root(&self, a: &FqElem) -> FqElem {
        self.pow(a, self.order() / self.p as u128)
    }

    /// Canonical serialization: a bare integer in prime fields, the full
    /// little-endian coefficient vector `[a,b,c]` in extensions.
    pub fn render(&self, a: &FqElem) -> String {
        if self.d == 1 {
            format!("{}", a.coeffs[0])
        } else {
            let inner: Vec<String> = a.coeffs.iter().map(|c| c.to_string()).collect();
            format!("[{}]", inner.join(","))
        }
    }

    /// Readable form for formulas and point names: bare integer whenever the
    /// element lies in the prime subfield. Both forms parse back.
    pub fn render_pretty(&self, a: &FqElem) -> String {
        if a.coeffs[1..].iter().all(|&c| c == 0) {
            format!("{}", a.coeffs[0])
        } else {
            self.render(a)
        }
    }
}
