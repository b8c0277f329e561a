//! Finite groups as multiplication tables, and free group actions on
//! finite sets (the combinatorial stand-in for an etale Galois cover).

use super::BundleError;

/// Finite group given by its multiplication table; element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl Group {
    pub fn from_table(mul: Vec<Vec<usize>>) -> Result<Self, BundleError> {
        let n = mul.len();
        if n == 0 || mul.iter().any(|row| row.len() != n) {
            return Err(BundleError::BadGroup("table must be square and nonempty".into()));
        }
        if mul.iter().flatten().any(|&x| x >= n) {
            return Err(BundleError::BadGroup("table entry out of range".into()));
        }
        for g in 0..n {
            if mul[0][g] != g || mul[g][0] != g {
                return Err(BundleError::BadGroup("element 0 is not an identity".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(BundleError::BadGroup("table is not associative".into()));
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; n];
        for g in 0..n {
            match (0..n).find(|&h| mul[g][h] == 0 && mul[h][g] == 0) {
                Some(h) => inv[g] = h,
                None => return Err(BundleError::BadGroup(format!("element {g} has no inverse"))),
            }
        }
        Ok(Group { mul, inv })
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group::from_table(mul).expect("cyclic table")
    }

    pub fn direct_product(a: &Group, b: &Group) -> Self {
        let (na, nb) = (a.order(), b.order());
        let idx = |x: usize, y: usize| x * nb + y;
        let mut mul = vec![vec![0; na * nb]; na * nb];
        for x1 in 0..na {
            for y1 in 0..nb {
                for x2 in 0..na {
                    for y2 in 0..nb {
                        mul[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
                    }
                }
            }
        }
        Group::from_table(mul).expect("product table")
    }

    /// Closure of a set of permutations of `0..letters` under composition;
    /// the identity permutation gets index 0.
    pub fn from_permutations(letters: usize, gens: &[Vec<usize>]) -> Result<Self, BundleError> {
        for g in gens {
            if g.len() != letters || {
                let mut seen = vec![false; letters];
                g.iter().any(|&x| x >= letters || std::mem::replace(&mut seen[x], true))
            } {
                return Err(BundleError::BadGroup("generator is not a permutation".into()));
            }
        }
        let id: Vec<usize> = (0..letters).collect();
        let mut elems = vec![id.clone()];
        let mut frontier = vec![id];
        while let Some(perm) = frontier.pop() {
            for g in gens {
                // composition g after perm
                let composed: Vec<usize> = (0..letters).map(|i| g[perm[i]]).collect();
                if !elems.contains(&composed) {
                    elems.push(composed.clone());
                    frontier.push(composed);
                }
            }
            if elems.len() > 4096 {
                return Err(BundleError::BadGroup("permutation closure too large".into()));
            }
        }
        let index_of = |p: &Vec<usize>| elems.iter().position(|q| q == p).unwrap();
        let n = elems.len();
        let mut mul = vec![vec![0; n]; n];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let composed: Vec<usize> = (0..letters).map(|x| a[b[x]]).collect();
                mul[i][j] = index_of(&composed);
            }
        }
        Group::from_table(mul)
    }

    pub fn symmetric_3() -> Self {
        Group::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]]).expect("S3")
    }

    pub fn dihedral_4() -> Self {
        // symmetries of the square on its corners
        Group::from_permutations(4, &[vec![1, 2, 3, 0], vec![1, 0, 3, 2]]).expect("D4")
    }

    pub fn quaternion_8() -> Self {
        // left multiplication by i and j on the units [1,-1,i,-i,j,-j,k,-k]
        Group::from_permutations(
            8,
            &[vec![2, 3, 1, 0, 6, 7, 5, 4], vec![4, 5, 7, 6, 1, 0, 2, 3]],
        )
        .expect("Q8")
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }
}

/// Finite set with a free group action; the base is the orbit set.
#[derive(Debug, Clone)]
pub struct GammaSetCover {
    group: Group,
    size: usize,
    /// action[g][e] = g . e
    action: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
    orbits: Vec<Vec<usize>>,
}

impl GammaSetCover {
    pub fn new(group: Group, action: Vec<Vec<usize>>) -> Result<Self, BundleError> {
        let n = group.order();
        if action.len() != n {
            return Err(BundleError::BadAction("one permutation per group element".into()));
        }
        let size = action.first().map(|a| a.len()).unwrap_or(0);
        if size == 0 {
            return Err(BundleError::BadAction("empty total set".into()));
        }
        for perm in &action {
            if perm.len() != size || {
                let mut seen = vec![false; size];
                perm.iter().any(|&x| x >= size || std::mem::replace(&mut seen[x], true))
            } {
                return Err(BundleError::BadAction("action entry is not a permutation".into()));
            }
        }
        for e in 0..size {
            if action[0][e] != e {
                return Err(BundleError::BadAction("identity must act trivially".into()));
            }
        }
        for g in 0..n {
            for h in 0..n {
                for e in 0..size {
                    if action[group.mul(g, h)][e] != action[g][action[h][e]] {
                        return Err(BundleError::BadAction(
                            "action is not compatible with the group law".into(),
                        ));
                    }
                }
            }
        }
        for g in 1..n {
            for e in 0..size {
                if action[g][e] == e {
                    return Err(BundleError::NonFreeAction { g, e });
                }
            }
        }
        let mut orbit_of = vec![usize::MAX; size];
        let mut orbits = vec![];
        for e in 0..size {
            if orbit_of[e] != usize::MAX {
                continue;
            }
            let idx = orbits.len();
            let mut orbit = vec![];
            for g in 0..n {
                let ge = action[g][e];
                if orbit_of[ge] == usize::MAX {
                    orbit_of[ge] = idx;
                    orbit.push(ge);
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        debug_assert!(orbits.iter().all(|o| o.len() == n), "free orbits have size |G|");
        Ok(GammaSetCover { group, size, action, orbit_of, orbits })
    }

    /// The regular cover: the group acting on itself by left translation.
    pub fn regular(group: Group) -> Self {
        let n = group.order();
        let action = (0..n)
            .map(|g| (0..n).map(|e| group.mul(g, e)).collect())
            .collect();
        Self::new(group, action).expect("regular action is free")
    }

    /// Disjoint union of `blocks` regular orbits (base of size `blocks`).
    pub fn regular_blocks(group: Group, blocks: usize) -> Self {
        let n = group.order();
        let action = (0..n)
            .map(|g| {
                (0..n * blocks)
                    .map(|e| {
                        let (block, pos) = (e / n, e % n);
                        block * n + group.mul(g, pos)
                    })
                    .collect()
            })
            .collect();
        Self::new(group, action).expect("block action is free")
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn total_size(&self) -> usize {
        self.size
    }

    pub fn act(&self, g: usize, e: usize) -> usize {
        self.action[g][e]
    }

    pub fn base_size(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbit(&self, b: usize) -> &[usize] {
        &self.orbits[b]
    }

    pub fn orbit_of(&self, e: usize) -> usize {
        self.orbit_of[e]
    }
}
