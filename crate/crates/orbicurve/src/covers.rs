//! Explicit Kummer and Artin-Schreier covers of the projective line over
//! F_q: the independent oracle grounding every genus and branch-data
//! computation. Every quantity here is closed-form; nothing is sampled from
//! the curve itself.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::algebra::{as_reduce, AlgebraError, Fq, FqElem, Place, RationalFunction};
use crate::genus::{orbifold_genus, GaloisCoverRecord};
use crate::localfield::{ProfileError, RamificationProfile};
use crate::orbifold::{
    BranchData, Curve, FiberPoint, FormalOrbifold, MorphismDescriptor, OrbifoldError, PointId,
};
use crate::rat::{rint, Rat};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, thiserror::Error)]
pub enum CoverError {
    #[error("N_NOT_DIVIDING_Q_MINUS_1: n = {n} does not divide q - 1 = {qm1}")]
    NotDividingQMinus1 { n: u64, qm1: u128 },
    #[error("INVALID_COVER: {0}")]
    Invalid(String),
    #[error("NO_TAME_DEGREE: q = {0} admits no Kummer degree >= 2")]
    NoTameDegree(u128),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error(transparent)]
    Orbifold(#[from] OrbifoldError),
}

/// Cyclic cover `y^n = prod (x - c)^(a_c)` with n | q-1. The spec is
/// normalized on construction: a common divisor of n and all exponents
/// splits the curve into isomorphic components, so it is divided out and
/// the analysis describes the connected cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KummerCoverSpec {
    field: Fq,
    n: u64,
    divisor: BTreeMap<FqElem, u64>,
}

impl KummerCoverSpec {
    pub fn new(
        field: Fq,
        n: u64,
        divisor: impl IntoIterator<Item = (FqElem, u64)>,
    ) -> Result<Self, CoverError> {
        if n < 2 {
            return Err(CoverError::Invalid("Kummer degree must be >= 2".into()));
        }
        let qm1 = field.order() - 1;
        if !qm1.is_multiple_of(n as u128) {
            return Err(CoverError::NotDividingQMinus1 { n, qm1 });
        }
        let mut map: BTreeMap<FqElem, u64> = BTreeMap::new();
        for (c, a) in divisor {
            if a == 0 {
                continue;
            }
            *map.entry(c).or_insert(0) += a;
        }
        // divide out the split part
        let mut g0 = n;
        for a in map.values() {
            g0 = g0.gcd(a);
        }
        let n = n / g0;
        let divisor = map
            .into_iter()
            .map(|(c, a)| (c, a / g0))
            .filter(|(_, a)| *a % n.max(1) != 0 || n == 1)
            .collect();
        Ok(KummerCoverSpec { field, n, divisor })
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn degree(&self) -> u64 {
        self.n
    }

    pub fn divisor(&self) -> &BTreeMap<FqElem, u64> {
        &self.divisor
    }

    pub fn render(&self) -> String {
        if self.n == 1 {
            return "identity cover".into();
        }
        let rhs: Vec<String> = self
            .divisor
            .iter()
            .map(|(c, a)| format!("(x - {})^{}", self.field.render_pretty(c), a))
            .collect();
        let rhs = if rhs.is_empty() { "1".into() } else { rhs.join(" ") };
        format!("y^{} = {}", self.n, rhs)
    }
}

/// Degree-p cover `y^p - y = f`; the function is Artin-Schreier reduced on
/// construction so that every pole order is coprime to p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArtinSchreierCoverSpec {
    function: RationalFunction,
    poles: BTreeMap<Place, u64>,
}

impl ArtinSchreierCoverSpec {
    pub fn new(function: RationalFunction) -> Result<Self, CoverError> {
        let red = as_reduce(&function)?;
        Ok(ArtinSchreierCoverSpec { function: red.reduced, poles: red.poles })
    }

    pub fn field(&self) -> &Fq {
        self.function.field()
    }

    pub fn function(&self) -> &RationalFunction {
        &self.function
    }

    pub fn poles(&self) -> &BTreeMap<Place, u64> {
        &self.poles
    }

    pub fn render(&self) -> String {
        format!(
            "y^{} - y = {}",
            self.field().characteristic(),
            self.function.render()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverSpec {
    Kummer(KummerCoverSpec),
    ArtinSchreier(ArtinSchreierCoverSpec),
}

impl CoverSpec {
    pub fn field(&self) -> &Fq {
        match self {
            CoverSpec::Kummer(s) => s.field(),
            CoverSpec::ArtinSchreier(s) => s.field(),
        }
    }

    pub fn analyze(&self) -> Result<CoverAnalysis, CoverError> {
        match self {
            CoverSpec::Kummer(s) => analyze_kummer(s),
            CoverSpec::ArtinSchreier(s) => analyze_artin_schreier(s),
        }
    }

    pub fn render(&self) -> String {
        match self {
            CoverSpec::Kummer(s) => s.render(),
            CoverSpec::ArtinSchreier(s) => s.render(),
        }
    }
}

/// Closed-form description of a connected Galois cover of the line:
/// its degree, the genus of the total space, and per branch point the
/// ramification index with the local Galois profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverAnalysis {
    pub field: Fq,
    pub degree: u64,
    pub genus_cover: u64,
    pub galois_order: u64,
    pub branch: BTreeMap<Place, (u64, RamificationProfile)>,
}

/// Tame analysis: ramification index at c is `n / gcd(n, a_c)`, at infinity
/// `n / gcd(n, sum a_c)`; each ramified fiber holds n/e points contributing
/// e - 1 to the classical different.
pub fn analyze_kummer(spec: &KummerCoverSpec) -> Result<CoverAnalysis, CoverError> {
    let p = spec.field.characteristic();
    let n = spec.n;
    if n == 1 {
        return Ok(CoverAnalysis {
            field: spec.field.clone(),
            degree: 1,
            genus_cover: 0,
            galois_order: 1,
            branch: BTreeMap::new(),
        });
    }
    debug_assert!(!n.is_multiple_of(p), "q - 1 is coprime to p");
    let mut branch = BTreeMap::new();
    let mut exponent_sum: u64 = 0;
    for (c, &a) in &spec.divisor {
        exponent_sum += a;
        let e = n / n.gcd(&a);
        if e > 1 {
            branch.insert(Place::Finite(c.clone()), (e, RamificationProfile::tame(p, e)?));
        }
    }
    let e_inf = n / n.gcd(&exponent_sum);
    if e_inf > 1 {
        branch.insert(Place::Infinity, (e_inf, RamificationProfile::tame(p, e_inf)?));
    }
    // 2g - 2 = -2n + sum over ramified fibers of (n/e)(e - 1)
    let mut rhs: i128 = -2 * n as i128;
    for (e, _) in branch.values() {
        rhs += (n / e) as i128 * (*e as i128 - 1);
    }
    let genus = genus_from_euler(rhs)?;
    Ok(CoverAnalysis {
        field: spec.field.clone(),
        degree: n,
        genus_cover: genus,
        galois_order: n,
        branch,
    })
}

/// Wild analysis: one totally ramified point over each pole, jump equal to
/// the reduced pole order m, local different `(p-1)(m+1)`.
pub fn analyze_artin_schreier(spec: &ArtinSchreierCoverSpec) -> Result<CoverAnalysis, CoverError> {
    let field = spec.field().clone();
    let p = field.characteristic();
    if spec.poles.is_empty() {
        // split cover: connected component is the identity
        return Ok(CoverAnalysis {
            field,
            degree: 1,
            genus_cover: 0,
            galois_order: 1,
            branch: BTreeMap::new(),
        });
    }
    let mut branch = BTreeMap::new();
    let mut rhs: i128 = -2 * p as i128;
    for (place, &m) in &spec.poles {
        let label_prefix = format!("as({})", place.render(&field));
        let profile = RamificationProfile::with_auto_labels(p, 1, &label_prefix, &[m])?;
        debug_assert_eq!(profile.degram(), (p - 1) * (m + 1));
        rhs += ((p - 1) * (m + 1)) as i128;
        branch.insert(place.clone(), (p, profile));
    }
    let genus = genus_from_euler(rhs)?;
    Ok(CoverAnalysis {
        field,
        degree: p,
        genus_cover: genus,
        galois_order: p,
        branch,
    })
}

fn genus_from_euler(two_g_minus_2: i128) -> Result<u64, CoverError> {
    let g2 = two_g_minus_2 + 2;
    if g2 % 2 != 0 || g2 < 0 {
        return Err(CoverError::Invalid(format!(
            "2g - 2 = {two_g_minus_2} does not yield a nonnegative integer genus"
        )));
    }
    Ok((g2 / 2) as u64)
}

impl CoverAnalysis {
    fn place_id(&self, place: &Place) -> PointId {
        PointId::new(place.render(&self.field))
    }

    /// Branch data of the cover: the local Galois profile at each branch
    /// point; support equals the branch locus.
    pub fn branch_data(&self) -> Result<BranchData, CoverError> {
        let p = self.field.characteristic();
        let entries = self
            .branch
            .iter()
            .map(|(place, (_, prof))| (self.place_id(place), prof.clone()));
        Ok(BranchData::new(p, entries)?)
    }

    /// The base line with the branch points named.
    pub fn base_curve(&self) -> Curve {
        Curve::new("P1", 0, self.branch.keys().map(|pl| self.place_id(pl)))
    }

    fn fiber_points(&self) -> Vec<FiberPoint> {
        let mut fiber = vec![];
        for (place, (e, prof)) in &self.branch {
            let count = self.degree / e;
            for i in 0..count {
                fiber.push(FiberPoint {
                    source: PointId::new(format!("y({})#{i}", place.render(&self.field))),
                    target: self.place_id(place),
                    local_ext: prof.clone(),
                });
            }
        }
        fiber
    }

    fn cover_curve(&self, fiber: &[FiberPoint]) -> Curve {
        Curve::new("Y", self.genus_cover, fiber.iter().map(|fp| fp.source.clone()))
    }

    /// Descriptor of `(Y, O) -> (P1, O)`: the plain cover of curves.
    pub fn trivial_descriptor(&self) -> Result<MorphismDescriptor, CoverError> {
        let p = self.field.characteristic();
        let fiber = self.fiber_points();
        let source = FormalOrbifold::plain(self.cover_curve(&fiber), p);
        let target = FormalOrbifold::plain(self.base_curve(), p);
        Ok(MorphismDescriptor { degree: self.degree, source, target, fiber })
    }

    /// Descriptor of `(Y, O) -> (P1, B_f)`: etale as a morphism of formal
    /// orbifolds.
    pub fn bf_descriptor(&self) -> Result<MorphismDescriptor, CoverError> {
        let p = self.field.characteristic();
        let fiber = self.fiber_points();
        let source = FormalOrbifold::plain(self.cover_curve(&fiber), p);
        let target = FormalOrbifold::new(self.base_curve(), self.branch_data()?)?;
        Ok(MorphismDescriptor { degree: self.degree, source, target, fiber })
    }

    /// Classical Galois record: inertia = the local profile at one point of
    /// each branched fiber, trivial orbifold data.
    pub fn classical_record(&self) -> GaloisCoverRecord {
        GaloisCoverRecord::classical(
            self.galois_order,
            0,
            self.genus_cover,
            self.branch.values().map(|(_, prof)| prof.clone()),
        )
    }

    /// Record of the etale orbifold cover `(Y, O) -> (P1, B_f)`: no branched
    /// points in the orbifold sense; B_f feeds the base orbifold genus.
    pub fn etale_orbifold_record(&self) -> GaloisCoverRecord {
        GaloisCoverRecord {
            group_order: self.galois_order,
            genus_base: 0,
            genus_cover: self.genus_cover,
            branch: vec![],
            base_orbifold: self.branch.values().map(|(_, prof)| prof.clone()).collect(),
            cover_orbifold: vec![],
        }
    }

    /// The formal orbifold `(P1, B_f)`.
    pub fn base_orbifold(&self) -> Result<FormalOrbifold, CoverError> {
        Ok(FormalOrbifold::new(self.base_curve(), self.branch_data()?)?)
    }
}

/// Branch data of a cover spec: analyze and read off the local Galois
/// profiles at the branch locus.
pub fn branch_data_of_cover(spec: &CoverSpec) -> Result<BranchData, CoverError> {
    spec.analyze()?.branch_data()
}

/// Central oracle identity: `g(P1, B_f) - (1 + (g(Y) - 1)/d)`. Crosses the
/// classical genus of the total space against the local degram sums on the
/// base; identically zero for every analyzable cover.
pub fn etale_identity_residual(analysis: &CoverAnalysis) -> Result<Rat, CoverError> {
    let lhs = orbifold_genus(&analysis.base_orbifold()?);
    let rhs = rint(1)
        + (rint(analysis.genus_cover as i128) - rint(1)) / rint(analysis.degree as i128);
    Ok(lhs - rhs)
}

/// Size bounds for random cover generation.
#[derive(Debug, Clone)]
pub struct RandomBounds {
    /// Kummer: largest cyclic degree to draw.
    pub max_tame: u64,
    /// Largest number of finite divisor points / poles.
    pub max_points: usize,
    /// Artin-Schreier: largest pole order to draw.
    pub max_jump: u64,
}

impl Default for RandomBounds {
    fn default() -> Self {
        RandomBounds { max_tame: 12, max_points: 3, max_jump: 7 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverFamily {
    Kummer,
    ArtinSchreier,
}

impl CoverFamily {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "kummer" => Some(CoverFamily::Kummer),
            "artin_schreier" => Some(CoverFamily::ArtinSchreier),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CoverFamily::Kummer => "kummer",
            CoverFamily::ArtinSchreier => "artin_schreier",
        }
    }
}

/// Deterministic random spec, valid by construction for the given field.
pub fn random_cover_spec(
    family: CoverFamily,
    seed: u64,
    field: &Fq,
    bounds: &RandomBounds,
) -> Result<CoverSpec, CoverError> {
    let mut rng = SplitMix64::new(seed);
    match family {
        CoverFamily::Kummer => {
            let qm1 = field.order() - 1;
            let candidates: Vec<u64> = (2..=bounds.max_tame)
                .filter(|&n| qm1.is_multiple_of(n as u128))
                .collect();
            if candidates.is_empty() {
                return Err(CoverError::NoTameDegree(field.order()));
            }
            let n = *rng.pick(&candidates);
            let count = rng.range(1, bounds.max_points as u64).min(field.order() as u64);
            let mut divisor: BTreeMap<FqElem, u64> = BTreeMap::new();
            while (divisor.len() as u64) < count {
                let c = field.element_at(rng.below(field.order() as u64) as u128);
                divisor.entry(c).or_insert(0);
            }
            let units: Vec<u64> = (1..n).filter(|a| a.gcd(&n) == 1).collect();
            let mut first = true;
            let keys: Vec<FqElem> = divisor.keys().cloned().collect();
            for c in keys {
                // the first exponent is a unit mod n, keeping the cover connected
                let a = if first { *rng.pick(&units) } else { rng.range(1, n - 1) };
                first = false;
                divisor.insert(c, a);
            }
            Ok(CoverSpec::Kummer(KummerCoverSpec::new(field.clone(), n, divisor)?))
        }
        CoverFamily::ArtinSchreier => {
            let p = field.characteristic();
            let valid_jumps: Vec<u64> = (1..=bounds.max_jump).filter(|m| m % p != 0).collect();
            let pole_count = rng.range(1, bounds.max_points.min(2) as u64);
            let mut f = RationalFunction::zero(field);
            let mut used: Vec<Place> = vec![];
            for _ in 0..pole_count {
                let place = if rng.below(2) == 0 && !used.contains(&Place::Infinity) {
                    Place::Infinity
                } else {
                    loop {
                        let c = field.element_at(rng.below(field.order() as u64) as u128);
                        let pl = Place::Finite(c);
                        if !used.contains(&pl) {
                            break pl;
                        }
                    }
                };
                let m = *rng.pick(&valid_jumps);
                let alpha = field.element_at(1 + rng.below(field.order() as u64 - 1) as u128);
                let term = match &place {
                    Place::Infinity => RationalFunction::from_poly(
                        crate::algebra::Poly::monomial(field, alpha, m as usize),
                    ),
                    Place::Finite(c) => RationalFunction::new(
                        crate::algebra::Poly::constant(field, alpha),
                        crate::algebra::Poly::linear_root(field, c).pow(m),
                    )?,
                };
                f = f.add(&term);
                used.push(place);
            }
            Ok(CoverSpec::ArtinSchreier(ArtinSchreierCoverSpec::new(f)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;
    use num_traits::Zero;

    fn fq(q: u64) -> Fq {
        Fq::from_order(q).unwrap()
    }

    #[test]
    fn kummer_hyperelliptic() {
        // y^2 = x(x-1) over F_5: genus 0, branch {0, 1} tame 2, inf unramified
        let f = fq(5);
        let spec = KummerCoverSpec::new(
            f.clone(),
            2,
            vec![(f.from_u64(0), 1), (f.from_u64(1), 1)],
        )
        .unwrap();
        let a = analyze_kummer(&spec).unwrap();
        assert_eq!(a.genus_cover, 0);
        assert_eq!(a.branch.len(), 2);
        for (e, prof) in a.branch.values() {
            assert_eq!(*e, 2);
            assert_eq!(prof, &RamificationProfile::tame(5, 2).unwrap());
        }
        assert!(!a.branch.contains_key(&Place::Infinity));
    }

    #[test]
    fn kummer_cube_root_of_x() {
        // y^3 = x over F_7: genus 0, branch {0, inf} tame 3
        let f = fq(7);
        let spec = KummerCoverSpec::new(f.clone(), 3, vec![(f.from_u64(0), 1)]).unwrap();
        let a = analyze_kummer(&spec).unwrap();
        assert_eq!(a.genus_cover, 0);
        assert_eq!(a.branch.len(), 2);
        assert!(a.branch.contains_key(&Place::Infinity));
        assert!(a.branch.contains_key(&Place::Finite(f.from_u64(0))));
    }

    #[test]
    fn kummer_genus_six() {
        // y^5 = x(x-1)(x-2)(x-3)(x-4) over F_11: genus 6
        let f = fq(11);
        let spec = KummerCoverSpec::new(
            f.clone(),
            5,
            (0..5).map(|c| (f.from_u64(c), 1)),
        )
        .unwrap();
        let a = analyze_kummer(&spec).unwrap();
        assert_eq!(a.genus_cover, 6);
        assert_eq!(a.branch.len(), 5); // inf unramified: sum = 5
    }

    fn as_spec(q: u64, num: &[i64], den: &[i64]) -> ArtinSchreierCoverSpec {
        let f = fq(q);
        let rf = RationalFunction::new(Poly::from_i64(&f, num), Poly::from_i64(&f, den)).unwrap();
        ArtinSchreierCoverSpec::new(rf).unwrap()
    }

    #[test]
    fn artin_schreier_cube() {
        // y^2 - y = x^3 over F_2: genus 1, branch {inf} jump 3
        let spec = as_spec(2, &[0, 0, 0, 1], &[1]);
        let a = analyze_artin_schreier(&spec).unwrap();
        assert_eq!(a.genus_cover, 1);
        let (e, prof) = &a.branch[&Place::Infinity];
        assert_eq!(*e, 2);
        assert_eq!(prof.wild()[0].jump, 3);
    }

    #[test]
    fn artin_schreier_linear_is_rational() {
        for q in [2u64, 3, 5, 7] {
            let spec = as_spec(q, &[0, 1], &[1]);
            let a = analyze_artin_schreier(&spec).unwrap();
            assert_eq!(a.genus_cover, 0, "y^p - y = x has genus 0 for p = {q}");
        }
    }

    #[test]
    fn artin_schreier_two_simple_poles() {
        // y^3 - y = 1/x + 1/(x-1) over F_3: genus 2
        let f = fq(3);
        let t1 = RationalFunction::new(Poly::one(&f), Poly::from_i64(&f, &[0, 1])).unwrap();
        let t2 = RationalFunction::new(Poly::one(&f), Poly::from_i64(&f, &[-1, 1])).unwrap();
        let spec = ArtinSchreierCoverSpec::new(t1.add(&t2)).unwrap();
        let a = analyze_artin_schreier(&spec).unwrap();
        assert_eq!(a.genus_cover, 2);
        assert_eq!(a.branch.len(), 2);
    }

    #[test]
    fn etale_identity_examples() {
        // y^2 - y = x^3: g(X,B_f) = 1 = 1 + (1-1)/2
        let a = analyze_artin_schreier(&as_spec(2, &[0, 0, 0, 1], &[1])).unwrap();
        assert!(etale_identity_residual(&a).unwrap().is_zero());
        // y^3 = x: g(X,B_f) = 2/3 = 1 + (0-1)/3
        let f = fq(7);
        let spec = KummerCoverSpec::new(f.clone(), 3, vec![(f.from_u64(0), 1)]).unwrap();
        let a = analyze_kummer(&spec).unwrap();
        assert!(etale_identity_residual(&a).unwrap().is_zero());
        // y^2 - y = x: g(X,B_f) = 1/2
        let a = analyze_artin_schreier(&as_spec(2, &[0, 1], &[1])).unwrap();
        assert_eq!(
            orbifold_genus(&a.base_orbifold().unwrap()),
            crate::rat::rat(1, 2)
        );
        assert!(etale_identity_residual(&a).unwrap().is_zero());
    }

    #[test]
    fn unramified_spec_has_trivial_branch_data() {
        // x^2 - x = wp(x) reduces to zero: split cover, B_f = O
        let spec = as_spec(2, &[0, 1, 1], &[1]);
        let a = analyze_artin_schreier(&spec).unwrap();
        assert_eq!(a.degree, 1);
        assert!(a.branch_data().unwrap().is_trivial());
        assert!(etale_identity_residual(&a).unwrap().is_zero());
    }

    #[test]
    fn reducible_kummer_is_normalized() {
        // y^4 = (x-1)^2 (x-2)^2 splits; the component is y^2 = (x-1)(x-2)
        let f = fq(5);
        let spec = KummerCoverSpec::new(
            f.clone(),
            4,
            vec![(f.from_u64(1), 2), (f.from_u64(2), 2)],
        )
        .unwrap();
        assert_eq!(spec.degree(), 2);
        let a = analyze_kummer(&spec).unwrap();
        assert_eq!(a.genus_cover, 0);
    }

    #[test]
    fn random_specs_are_deterministic_and_valid() {
        let f13 = fq(13);
        let f8 = fq(8);
        let bounds = RandomBounds::default();
        for seed in 0..50 {
            let a = random_cover_spec(CoverFamily::Kummer, seed, &f13, &bounds).unwrap();
            let b = random_cover_spec(CoverFamily::Kummer, seed, &f13, &bounds).unwrap();
            assert_eq!(a, b);
            a.analyze().unwrap();
            let c = random_cover_spec(CoverFamily::ArtinSchreier, seed, &f8, &bounds).unwrap();
            let d = random_cover_spec(CoverFamily::ArtinSchreier, seed, &f8, &bounds).unwrap();
            assert_eq!(c, d);
            c.analyze().unwrap();
        }
    }

    #[test]
    fn analysis_is_invariant_under_pre_reduction() {
        // reducing f before building the spec changes nothing: the
        // constructor reduces canonically
        let f = fq(2);
        let raw = RationalFunction::new(
            Poly::from_i64(&f, &[1, 0, 1, 1, 1, 0, 1]),
            Poly::from_i64(&f, &[0, 0, 1]),
        )
        .unwrap();
        let spec = ArtinSchreierCoverSpec::new(raw.clone()).unwrap();
        let spec2 = ArtinSchreierCoverSpec::new(spec.function().clone()).unwrap();
        assert_eq!(spec, spec2);
        assert_eq!(
            analyze_artin_schreier(&spec).unwrap(),
            analyze_artin_schreier(&spec2).unwrap()
        );
        // and the pre-reduction function analyzes identically
        let red = crate::algebra::as_reduce(&raw).unwrap();
        let spec3 = ArtinSchreierCoverSpec::new(red.reduced).unwrap();
        assert_eq!(
            analyze_artin_schreier(&spec).unwrap(),
            analyze_artin_schreier(&spec3).unwrap()
        );
    }

    #[test]
    fn branch_data_of_cover_examples() {
        // Kummer y^3 = x: tame 3 at 0 and infinity
        let f = fq(7);
        let spec = CoverSpec::Kummer(
            KummerCoverSpec::new(f.clone(), 3, vec![(f.from_u64(0), 1)]).unwrap(),
        );
        let bd = branch_data_of_cover(&spec).unwrap();
        assert_eq!(bd.support().count(), 2);
        for (_, prof) in bd.entries() {
            assert_eq!(prof, &RamificationProfile::tame(7, 3).unwrap());
        }
        // Artin-Schreier y^2 - y = x^3: wild jump 3 at infinity
        let spec = CoverSpec::ArtinSchreier(as_spec(2, &[0, 0, 0, 1], &[1]));
        let bd = branch_data_of_cover(&spec).unwrap();
        let inf = crate::orbifold::PointId::new("inf");
        assert_eq!(bd.support_set(), [inf.clone()].into_iter().collect());
        assert_eq!(bd.at(&inf).wild()[0].jump, 3);
    }

    #[test]
    fn descriptors_validate_and_are_etale_for_bf() {
        let a = analyze_artin_schreier(&as_spec(2, &[0, 0, 0, 1], &[1])).unwrap();
        let triv = a.trivial_descriptor().unwrap();
        assert!(triv.validate().unwrap().valid);
        let bf = a.bf_descriptor().unwrap();
        let rep = bf.validate().unwrap();
        assert!(rep.valid);
        assert!(rep.etale.values().all(|&b| b));
    }
}
