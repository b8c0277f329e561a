//! Ramification profiles of Galois extensions of `k((t))`.
//!
//! A profile models an abelian extension with group `Z/n x (Z/p)^r`: a tame
//! cyclic part of order n coprime to p and r independent degree-p components,
//! each carrying an identity label and an upper-numbering jump coprime to p.
//! The different is computed two independent ways: a conductor-discriminant
//! character sum in closed form, and Hilbert's sum over the lower filtration
//! reconstructed through the Herbrand function. Nonabelian profiles are
//! outside the model and rejected at parse time.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::{rint, Rat};

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum ProfileError {
    #[error("INVALID_PROFILE: {0}")]
    Invalid(String),
    #[error("LABEL_JUMP_MISMATCH: label '{label}' carries jumps {a} and {b}")]
    LabelJumpMismatch { label: String, a: u64, b: u64 },
    #[error("WILD_BASE_CHANGE: base change of degree {0} is divisible by the residue characteristic")]
    WildBaseChange(u64),
    #[error("NOT_SUBEXTENSION: left profile is not contained in right profile")]
    NotSubextension,
    #[error("PRIME_MISMATCH: profiles live over different residue characteristics ({0} vs {1})")]
    PrimeMismatch(u64, u64),
}

fn is_prime(n: u64) -> bool {
    n >= 2 && {
        let mut k = 2;
        loop {
            if k * k > n {
                break true;
            }
            if n.is_multiple_of(k) {
                break false;
            }
            k += 1;
        }
    }
}

/// One wild component: an identity label naming the degree-p subextension
/// and its upper-numbering jump.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WildComponent {
    pub label: String,
    pub jump: u64,
}

/// Abelian model of a finite Galois extension of `k((t))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RamificationProfile {
    p: u64,
    tame: u64,
    /// sorted by label; labels unique within a profile
    wild: Vec<WildComponent>,
}

impl RamificationProfile {
    pub fn new(
        p: u64,
        tame: u64,
        wild: Vec<(String, u64)>,
    ) -> Result<Self, ProfileError> {
        if !is_prime(p) {
            return Err(ProfileError::Invalid(format!("{p} is not prime")));
        }
        if tame == 0 || tame.is_multiple_of(p) {
            return Err(ProfileError::Invalid(format!(
                "tame order {tame} must be positive and coprime to p={p}"
            )));
        }
        let mut components: Vec<WildComponent> = vec![];
        for (label, jump) in wild {
            if jump == 0 || jump % p == 0 {
                return Err(ProfileError::Invalid(format!(
                    "jump {jump} must be positive and coprime to p={p}"
                )));
            }
            if jump > 1 << 20 {
                return Err(ProfileError::Invalid(format!("jump {jump} is too large")));
            }
            if let Some(prev) = components.iter().find(|c| c.label == label) {
                if prev.jump == jump {
                    continue; // exact duplicate collapses
                }
                return Err(ProfileError::LabelJumpMismatch { label, a: prev.jump, b: jump });
            }
            components.push(WildComponent { label, jump });
        }
        components.sort();
        // keep degrees and differents comfortably inside u64
        let degree = (p as u128)
            .checked_pow(components.len() as u32)
            .and_then(|w| w.checked_mul(tame as u128));
        match degree {
            Some(d) if d <= 1 << 40 => {}
            _ => {
                return Err(ProfileError::Invalid(
                    "profile degree exceeds the supported range".into(),
                ))
            }
        }
        Ok(RamificationProfile { p, tame, wild: components })
    }

    /// The trivial extension.
    pub fn trivial(p: u64) -> Self {
        Self::new(p, 1, vec![]).expect("trivial profile")
    }

    /// Tame cyclic of order n.
    pub fn tame(p: u64, n: u64) -> Result<Self, ProfileError> {
        Self::new(p, n, vec![])
    }

    /// Wild components with fresh labels `prefix:0`, `prefix:1`, ...
    pub fn with_auto_labels(
        p: u64,
        tame: u64,
        prefix: &str,
        jumps: &[u64],
    ) -> Result<Self, ProfileError> {
        let wild = jumps
            .iter()
            .enumerate()
            .map(|(i, &j)| (format!("{prefix}:{i}"), j))
            .collect();
        Self::new(p, tame, wild)
    }

    pub fn residue_char(&self) -> u64 {
        self.p
    }

    pub fn tame_order(&self) -> u64 {
        self.tame
    }

    pub fn wild(&self) -> &[WildComponent] {
        &self.wild
    }

    pub fn wild_rank(&self) -> usize {
        self.wild.len()
    }

    /// `[P(x) : K] = n * p^r`.
    pub fn degree(&self) -> u64 {
        self.tame * self.p.checked_pow(self.wild.len() as u32).expect("degree overflow")
    }

    pub fn is_trivial(&self) -> bool {
        self.tame == 1 && self.wild.is_empty()
    }

    pub fn is_tame(&self) -> bool {
        self.wild.is_empty()
    }

    pub fn is_purely_wild(&self) -> bool {
        self.tame == 1 && !self.wild.is_empty()
    }

    /// Valuation of the different, by the conductor-discriminant sum: over
    /// nontrivial characters, a tame character has conductor 1 and a wild
    /// character (vector v over the components) has conductor
    /// `1 + max{ jump_i : v_i != 0 }`. In closed form, with jumps sorted
    /// ascending m_1 <= ... <= m_r:
    ///
    /// `degram = (n-1) + n * [ (p^r - 1) + sum_k m_k (p-1) p^(k-1) ]`
    pub fn degram(&self) -> u64 {
        let p = self.p;
        let n = self.tame;
        let r = self.wild.len() as u32;
        let mut jumps: Vec<u64> = self.wild.iter().map(|c| c.jump).collect();
        jumps.sort_unstable();
        let pr = p.pow(r);
        let mut wild_sum = pr - 1;
        for (k, &m) in jumps.iter().enumerate() {
            wild_sum += m * (p - 1) * p.pow(k as u32);
        }
        (n - 1) + n * wild_sum
    }

    /// Same value by explicit enumeration of the p^r - 1 nonzero character
    /// vectors; kept as an independent route for tests.
    pub fn degram_enumerated(&self) -> u64 {
        let p = self.p;
        let r = self.wild.len();
        let jumps: Vec<u64> = self.wild.iter().map(|c| c.jump).collect();
        let total = p.checked_pow(r as u32).expect("character space too large");
        let mut sum = 0u64;
        for v in 1..total {
            let mut digits = v;
            let mut max = 0u64;
            for &m in jumps.iter() {
                if digits % p != 0 {
                    max = max.max(m);
                }
                digits /= p;
            }
            sum += 1 + max;
        }
        (self.tame - 1) + self.tame * sum
    }

    /// Distinct upper jumps, ascending, paired with the order of `G^u` on
    /// the interval ending at that jump.
    fn upper_segments(&self) -> Vec<(u64, u64)> {
        let mut jumps: Vec<u64> = self.wild.iter().map(|c| c.jump).collect();
        jumps.sort_unstable();
        jumps.dedup();
        jumps
            .iter()
            .map(|&u| {
                let count = self.wild.iter().filter(|c| c.jump >= u).count() as u32;
                (u, self.p.pow(count))
            })
            .collect()
    }

    /// The Herbrand psi of this profile: piecewise linear with slope
    /// `[G^0 : G^u]` on each upper interval.
    pub fn herbrand(&self) -> HerbrandFn {
        let g0 = self.degree();
        let mut breaks = vec![];
        for (u, order) in self.upper_segments() {
            breaks.push((rint(u as i128), g0 / order));
        }
        HerbrandFn::new(breaks, g0)
    }

    /// Lower ramification filtration as segments `(break, order)`: the first
    /// entry `(0, n p^r)` covers i = 0 only; each later entry `(l_j, o_j)`
    /// says `|G_i| = o_j` for i in the integer range after the previous
    /// break up to `l_j`; beyond the last break the filtration is trivial.
    /// Lower breaks are `psi(upper jump)` and are integers (Hasse-Arf).
    pub fn lower_filtration(&self) -> Vec<(u64, u64)> {
        let psi = self.herbrand();
        let mut out = vec![(0u64, self.degree())];
        for (u, order) in self.upper_segments() {
            let lb = psi.psi(&rint(u as i128));
            assert!(lb.denom().is_one(), "Hasse-Arf violated: nonintegral lower break");
            out.push((*lb.numer() as u64, order));
        }
        out
    }

    /// Hilbert's sum over the lower filtration.
    pub fn hilbert_sum(&self) -> u64 {
        let filt = self.lower_filtration();
        let mut sum = filt[0].1 - 1; // i = 0
        let mut prev = 0u64;
        for &(brk, order) in &filt[1..] {
            sum += (order - 1) * (brk - prev);
            prev = brk;
        }
        sum
    }

    /// Pointwise containment: the tame order divides and every labeled wild
    /// component appears on the right with the same jump. Profiles over
    /// different residue characteristics are incomparable.
    pub fn leq(&self, other: &Self) -> bool {
        if self.p != other.p {
            return false;
        }
        if !other.tame.is_multiple_of(self.tame) {
            return false;
        }
        self.wild.iter().all(|c| {
            other
                .wild
                .iter()
                .any(|d| d.label == c.label && d.jump == c.jump)
        })
    }

    /// Compositum: lcm of tame orders, label-aware union of wild parts.
    /// A shared label asserting two different jumps is contradictory data.
    pub fn compositum(&self, other: &Self) -> Result<Self, ProfileError> {
        if self.p != other.p {
            return Err(ProfileError::PrimeMismatch(self.p, other.p));
        }
        let mut wild: Vec<(String, u64)> =
            self.wild.iter().map(|c| (c.label.clone(), c.jump)).collect();
        for d in &other.wild {
            match self.wild.iter().find(|c| c.label == d.label) {
                Some(c) if c.jump != d.jump => {
                    return Err(ProfileError::LabelJumpMismatch {
                        label: d.label.clone(),
                        a: c.jump,
                        b: d.jump,
                    })
                }
                Some(_) => {}
                None => wild.push((d.label.clone(), d.jump)),
            }
        }
        Self::new(self.p, self.tame.lcm(&other.tame), wild)
    }

    /// Meet: gcd of tame orders, wild components whose labels occur on both
    /// sides (with equal jumps; a mismatch is an error).
    pub fn meet(&self, other: &Self) -> Result<Self, ProfileError> {
        if self.p != other.p {
            return Err(ProfileError::PrimeMismatch(self.p, other.p));
        }
        let mut wild = vec![];
        for c in &self.wild {
            if let Some(d) = other.wild.iter().find(|d| d.label == c.label) {
                if d.jump != c.jump {
                    return Err(ProfileError::LabelJumpMismatch {
                        label: c.label.clone(),
                        a: c.jump,
                        b: d.jump,
                    });
                }
                wild.push((c.label.clone(), c.jump));
            }
        }
        Self::new(self.p, self.tame.gcd(&other.tame), wild)
    }

    /// Base change along a tame extension of degree e of the ground field:
    /// the tame order drops to `n / gcd(n, e)`, every jump multiplies by e,
    /// labels are preserved.
    pub fn base_change_tame(&self, e: u64) -> Result<Self, ProfileError> {
        if e == 0 || e.is_multiple_of(self.p) {
            return Err(ProfileError::WildBaseChange(e));
        }
        let wild = self
            .wild
            .iter()
            .map(|c| (c.label.clone(), c.jump * e))
            .collect();
        Self::new(self.p, self.tame / self.tame.gcd(&e), wild)
    }

    /// Different of `full` relative to `sub` via the tower formula:
    /// `degram(full/K) = degram(full/sub) + [full:sub] degram(sub/K)`.
    pub fn degram_relative(sub: &Self, full: &Self) -> Result<u64, ProfileError> {
        if !sub.leq(full) {
            return Err(ProfileError::NotSubextension);
        }
        let ratio = full.degree() / sub.degree();
        full.degram()
            .checked_sub(ratio * sub.degram())
            .ok_or(ProfileError::NotSubextension)
    }
}

/// Piecewise-linear Herbrand function psi with psi(0) = 0 and psi(u) = u for
/// u <= 0. Breaks are `(u, slope)` pairs: the slope holds on the interval
/// ending at u; after the last break the tail slope applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HerbrandFn {
    breaks: Vec<(Rat, u64)>,
    tail_slope: u64,
}

impl HerbrandFn {
    fn new(breaks: Vec<(Rat, u64)>, tail_slope: u64) -> Self {
        debug_assert!(breaks.windows(2).all(|w| w[0].0 < w[1].0), "breaks must ascend");
        debug_assert!(
            breaks.windows(2).all(|w| w[0].1 <= w[1].1),
            "slopes must be nondecreasing"
        );
        HerbrandFn { breaks, tail_slope }
    }

    pub fn breaks(&self) -> &[(Rat, u64)] {
        &self.breaks
    }

    /// `psi(u)`: the integral over `[0,u]` of `[G^0 : G^w] dw`; identity for u <= 0.
    pub fn psi(&self, u: &Rat) -> Rat {
        if u.is_negative() || u.is_zero() {
            return *u;
        }
        let mut acc = Rat::zero();
        let mut prev = Rat::zero();
        for (brk, slope) in &self.breaks {
            if *u <= *brk {
                return acc + (*u - prev) * rint(*slope as i128);
            }
            acc += (*brk - prev) * rint(*slope as i128);
            prev = *brk;
        }
        acc + (*u - prev) * rint(self.tail_slope as i128)
    }

    /// Inverse of psi (phi), for moving lower-numbering indices back up.
    pub fn phi(&self, v: &Rat) -> Rat {
        if v.is_negative() || v.is_zero() {
            return *v;
        }
        let mut acc = Rat::zero(); // psi value at prev break
        let mut prev = Rat::zero();
        for (brk, slope) in &self.breaks {
            let seg_end = acc + (*brk - prev) * rint(*slope as i128);
            if *v <= seg_end {
                return prev + (*v - acc) / rint(*slope as i128);
            }
            acc = seg_end;
            prev = *brk;
        }
        prev + (*v - acc) / rint(self.tail_slope as i128)
    }
}

/// psi of a profile at a rational u >= 0.
pub fn herbrand_psi(profile: &RamificationProfile, u: &Rat) -> Rat {
    profile.herbrand().psi(u)
}

/// Order of `G^u` at a rational u (test oracle route: upper filtration
/// directly from the jump data).
pub fn upper_order(profile: &RamificationProfile, u: &Rat) -> u64 {
    if u.is_negative() || u.is_zero() {
        return profile.degree();
    }
    let count = profile
        .wild()
        .iter()
        .filter(|c| rint(c.jump as i128) >= *u)
        .count() as u32;
    profile.residue_char().pow(count)
}
