//! Concrete equivariant bundles on free group-set covers: transition
//! matrices subject to the cocycle identity, invariant pushforwards, and
//! explicit witnesses that a pulled-back bundle descends to its base.

use super::group::GammaSetCover;
use super::matrix::Matrix;
use super::BundleError;
use crate::algebra::Fq;
use crate::rng::SplitMix64;

/// A rank-r bundle with fibers `F_q^r` at each point of the total set and a
/// transition matrix `lambda_g(e): V_(g.e) -> V_e` for every g and e.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantBundle {
    field: Fq,
    rank: usize,
    /// lambda[g][e]
    lambda: Vec<Vec<Matrix>>,
}

impl EquivariantBundle {
    pub fn new(field: Fq, rank: usize, lambda: Vec<Vec<Matrix>>) -> Self {
        EquivariantBundle { field, rank, lambda }
    }

    /// Pullback of the trivial rank-r base bundle: all transitions identity.
    pub fn trivial(cover: &GammaSetCover, field: &Fq, rank: usize) -> Self {
        let id = Matrix::identity(field, rank);
        let lambda = (0..cover.group().order())
            .map(|_| vec![id.clone(); cover.total_size()])
            .collect();
        EquivariantBundle { field: field.clone(), rank, lambda }
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn lambda(&self, g: usize, e: usize) -> &Matrix {
        &self.lambda[g][e]
    }

    pub fn set_lambda(&mut self, g: usize, e: usize, m: Matrix) {
        self.lambda[g][e] = m;
    }

    /// Gauge transform by per-point changes of basis `c[e]`:
    /// `lambda'_g(e) = c[e] lambda_g(e) c[g.e]^(-1)`. Preserves the cocycle
    /// identity; with the trivial bundle as a starting point this produces
    /// exactly the bundles carrying a pullback structure.
    pub fn gauge(&self, cover: &GammaSetCover, c: &[Matrix]) -> Self {
        assert_eq!(c.len(), cover.total_size());
        let inv: Vec<Matrix> = c.iter().map(|m| m.inverse().expect("gauge invertible")).collect();
        let lambda = (0..cover.group().order())
            .map(|g| {
                (0..cover.total_size())
                    .map(|e| c[e].mul(self.lambda(g, e)).mul(&inv[cover.act(g, e)]))
                    .collect()
            })
            .collect();
        EquivariantBundle { field: self.field.clone(), rank: self.rank, lambda }
    }

    /// Random gauge of the trivial rank-r bundle, returning the gauges so
    /// tests can build descent witnesses.
    pub fn random_pullback(
        cover: &GammaSetCover,
        field: &Fq,
        rank: usize,
        rng: &mut SplitMix64,
    ) -> (Self, Vec<Matrix>) {
        let gauges: Vec<Matrix> = (0..cover.total_size())
            .map(|_| Matrix::random_invertible(field, rank, rng))
            .collect();
        let bundle = Self::trivial(cover, field, rank).gauge(cover, &gauges);
        (bundle, gauges)
    }
}

/// Exhaustive cocycle check: `lambda_id = id` and for all g, h, e
/// `lambda_(gh)(e) = lambda_h(e) lambda_g(h.e)`.
pub fn cocycle_validate(cover: &GammaSetCover, bundle: &EquivariantBundle) -> bool {
    let n = cover.group().order();
    let size = cover.total_size();
    for e in 0..size {
        if !bundle.lambda(0, e).is_identity() {
            return false;
        }
    }
    for g in 0..n {
        for h in 0..n {
            let gh = cover.group().mul(g, h);
            for e in 0..size {
                let rhs = bundle.lambda(h, e).mul(bundle.lambda(g, cover.act(h, e)));
                if *bundle.lambda(gh, e) != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Invariant pushforward: for each base point, the fixed subspace of the
/// induced action on the direct sum of the orbit fibers.
#[derive(Debug, Clone)]
pub struct InvariantPushforward {
    /// Per base point, the dimension of the invariant subspace.
    pub ranks: Vec<usize>,
    /// Per base point, a basis of invariant sections; each column vector is
    /// indexed by (position in sorted orbit) x (fiber coordinate).
    pub sections: Vec<Vec<Vec<crate::algebra::FqElem>>>,
}

/// The operator of g on the orbit module: `(g . s)(e) = lambda_g(e) s(g.e)`.
fn orbit_operator(
    cover: &GammaSetCover,
    bundle: &EquivariantBundle,
    orbit: &[usize],
    g: usize,
) -> Matrix {
    let f = bundle.field();
    let r = bundle.rank();
    let k = orbit.len();
    let pos_of = |e: usize| orbit.iter().position(|&x| x == e).unwrap();
    let mut op = Matrix::zero(f, k * r, k * r);
    for (pos, &e) in orbit.iter().enumerate() {
        let ge = cover.act(g, e);
        let gpos = pos_of(ge);
        let lam = bundle.lambda(g, e);
        for i in 0..r {
            for j in 0..r {
                op.set(pos * r + i, gpos * r + j, lam.get(i, j).clone());
            }
        }
    }
    op
}

/// Compute the G-invariant subspace of the pushforward at every base point.
/// Fails with COCYCLE_INVALID when the transition data is not a cocycle.
pub fn pushforward_invariants(
    cover: &GammaSetCover,
    bundle: &EquivariantBundle,
) -> Result<InvariantPushforward, BundleError> {
    if !cocycle_validate(cover, bundle) {
        return Err(BundleError::CocycleInvalid);
    }
    let f = bundle.field().clone();
    let r = bundle.rank();
    let n = cover.group().order();
    let mut ranks = vec![];
    let mut sections = vec![];
    for b in 0..cover.base_size() {
        let orbit = cover.orbit(b);
        let dim = orbit.len() * r;
        // stack (op_g - id) for all nonidentity g and take the kernel
        let mut stacked = Matrix::zero(&f, dim * (n - 1), dim);
        for g in 1..n {
            let op = orbit_operator(cover, bundle, orbit, g);
            for i in 0..dim {
                for j in 0..dim {
                    let mut v = op.get(i, j).clone();
                    if i == j {
                        v = f.sub(&v, &f.one());
                    }
                    stacked.set((g - 1) * dim + i, j, v);
                }
            }
        }
        let basis = stacked.kernel_basis();
        ranks.push(basis.len());
        sections.push(basis);
    }
    Ok(InvariantPushforward { ranks, sections })
}

/// Check that a vector over an orbit is an invariant section.
pub fn is_invariant_section(
    cover: &GammaSetCover,
    bundle: &EquivariantBundle,
    base_point: usize,
    section: &[crate::algebra::FqElem],
) -> bool {
    let orbit = cover.orbit(base_point);
    (1..cover.group().order()).all(|g| {
        let op = orbit_operator(cover, bundle, orbit, g);
        op.mul_vec(section) == section
    })
}

/// Descent witness for a gauged pullback: at each base point the columns
/// `v -> c[e] v` (stacked over the sorted orbit) form a basis of the
/// invariant space, exhibiting the isomorphism with the base fiber.
pub fn pullback_witness(
    cover: &GammaSetCover,
    gauges: &[Matrix],
    rank: usize,
) -> Vec<Matrix> {
    let f = gauges[0].field().clone();
    (0..cover.base_size())
        .map(|b| {
            let orbit = cover.orbit(b);
            let mut w = Matrix::zero(&f, orbit.len() * rank, rank);
            for (pos, &e) in orbit.iter().enumerate() {
                for i in 0..rank {
                    for j in 0..rank {
                        w.set(pos * rank + i, j, gauges[e].get(i, j).clone());
                    }
                }
            }
            w
        })
        .collect()
}

/// Brute-force count of fixed vectors of the orbit action (independent
/// oracle for the invariant dimension: the count is q^dim). Only feasible
/// for tiny orbits; guarded accordingly.
pub fn count_fixed_vectors(
    cover: &GammaSetCover,
    bundle: &EquivariantBundle,
    base_point: usize,
) -> u128 {
    let f = bundle.field().clone();
    let orbit = cover.orbit(base_point);
    let dim = orbit.len() * bundle.rank();
    let q = f.order();
    let total = q.checked_pow(dim as u32).expect("space too large to enumerate");
    assert!(total <= 1 << 22, "brute force limited to small spaces");
    let ops: Vec<Matrix> = (1..cover.group().order())
        .map(|g| orbit_operator(cover, bundle, orbit, g))
        .collect();
    let mut count = 0u128;
    for idx in 0..total {
        let mut rem = idx;
        let v: Vec<crate::algebra::FqElem> = (0..dim)
            .map(|_| {
                let e = f.element_at(rem % q);
                rem /= q;
                e
            })
            .collect();
        if ops.iter().all(|op| op.mul_vec(&v) == v) {
            count += 1;
        }
    }
    count
}
