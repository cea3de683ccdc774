//! Homomorphisms, kernels, normality, quotients, isomorphism search, and
//! canonical forms for isomorphism-class deduplication.
//!
//! Normality is decided intrinsically: a subgyrogroup is normal iff its left
//! cosets partition the elements, the induced coset operation is independent
//! of representatives, and the coset table validates. When all three hold
//! the canonical projection is a homomorphism whose kernel is the subset,
//! so this agrees with the extrinsic definition (kernel of some
//! homomorphism); conversely a kernel always satisfies the three conditions
//! because its cosets are exactly the fibers of the homomorphism.

use itertools::Itertools;

use crate::gyrogroup::Gyrogroup;
use crate::subgyro::{left_cosets, SubSet};
use crate::table::CayleyTable;

/// A total map between two gyrogroups' element sets, tagged with whether it
/// preserves the operation.
#[derive(Debug, Clone)]
pub struct Morphism<'s, 't> {
    pub source: &'s Gyrogroup,
    pub target: &'t Gyrogroup,
    /// `map[a]` is the image of `a`.
    pub map: Vec<usize>,
    pub is_homomorphism: bool,
    /// Preimage of 0; populated exactly when `is_homomorphism`.
    pub kernel: Option<SubSet<'s>>,
}

impl Morphism<'_, '_> {
    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.map.len() == self.target.order()
            && self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    /// The image as a subset of the target; for a homomorphism this is a
    /// subgyrogroup.
    pub fn image_set(&self) -> SubSet<'_> {
        SubSet::from_members(self.target, self.map.iter().copied())
    }
}

/// Checks `map(a⊕b) = map(a)⊕map(b)` exhaustively and computes the kernel
/// on success.
///
/// # Panics
/// If the map is not total on the source or hits an out-of-range target
/// index.
pub fn check_homomorphism<'s, 't>(
    src: &'s Gyrogroup,
    dst: &'t Gyrogroup,
    map: Vec<usize>,
) -> Morphism<'s, 't> {
    assert_eq!(map.len(), src.order(), "map must be total on the source");
    assert!(
        map.iter().all(|&v| v < dst.order()),
        "map image out of range"
    );
    let n = src.order();
    let is_homomorphism = (0..n)
        .all(|a| (0..n).all(|b| map[src.add(a, b)] == dst.add(map[a], map[b])));
    let kernel = is_homomorphism.then(|| {
        SubSet::from_members(src, (0..n).filter(|&a| map[a] == 0))
    });
    Morphism {
        source: src,
        target: dst,
        map,
        is_homomorphism,
        kernel,
    }
}

/// All homomorphisms from `src` to `dst`, in lexicographic map order.
///
/// Backtracking over images with two prunings: the image of `a` must have
/// order dividing the order of `a` (images of scalar multiples are scalar
/// multiples), and every already-determined product must be preserved.
pub fn enumerate_homomorphisms<'s, 't>(
    src: &'s Gyrogroup,
    dst: &'t Gyrogroup,
) -> Vec<Morphism<'s, 't>> {
    let n = src.order();
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(n);
    for a in 0..n {
        let oa = src.order_of(a);
        candidates.push((0..dst.order()).filter(|&x| oa.is_multiple_of(dst.order_of(x))).collect());
    }
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    fn consistent(src: &Gyrogroup, dst: &Gyrogroup, map: &[usize], upto: usize) -> bool {
        for a in 0..=upto {
            for b in 0..=upto {
                let ab = src.add(a, b);
                if ab <= upto && map[ab] != dst.add(map[a], map[b]) {
                    return false;
                }
            }
        }
        true
    }
    fn rec<'s, 't>(
        src: &'s Gyrogroup,
        dst: &'t Gyrogroup,
        candidates: &[Vec<usize>],
        map: &mut Vec<usize>,
        pos: usize,
        out: &mut Vec<Morphism<'s, 't>>,
    ) {
        if pos == src.order() {
            let m = check_homomorphism(src, dst, map.clone());
            debug_assert!(m.is_homomorphism);
            out.push(m);
            return;
        }
        for &img in &candidates[pos] {
            map[pos] = img;
            if consistent(src, dst, map, pos) {
                rec(src, dst, candidates, map, pos + 1, out);
            }
        }
        map[pos] = usize::MAX;
    }
    if n == 1 {
        return vec![check_homomorphism(src, dst, vec![0])];
    }
    rec(src, dst, &candidates, &mut map, 1, &mut out);
    out
}

/// A normal subgyrogroup together with its quotient and canonical
/// projection data.
#[derive(Debug, Clone)]
pub struct QuotientGyrogroup<'g> {
    pub base: &'g Gyrogroup,
    pub normal_set: SubSet<'g>,
    /// Coset member lists, indexed as in the quotient; index 0 is the
    /// subgyrogroup itself.
    pub cosets: Vec<Vec<usize>>,
    pub quotient: Gyrogroup,
    /// `projection_map[a]` is the index of the coset containing `a`.
    pub projection_map: Vec<usize>,
}

impl QuotientGyrogroup<'_> {
    /// The canonical projection `a ↦ a⊕N` as a checked morphism; always a
    /// homomorphism with kernel equal to the normal set.
    pub fn projection(&self) -> Morphism<'_, '_> {
        let m = check_homomorphism(self.base, &self.quotient, self.projection_map.clone());
        debug_assert!(m.is_homomorphism);
        m
    }
}

/// Decides normality constructively. Returns the quotient witness when
/// `n` is normal, `None` otherwise.
///
/// Normal means: the left cosets partition the elements, the coset
/// operation `(a⊕N)⊕(b⊕N) = (a⊕b)⊕N` is independent of representatives,
/// and the coset table validates as a gyrogroup. Exactly the subsets
/// arising as kernels of homomorphisms pass.
///
/// # Panics
/// If `n` is not a subgyrogroup.
pub fn is_normal<'g>(g: &'g Gyrogroup, n: &SubSet<'g>) -> Option<QuotientGyrogroup<'g>> {
    assert!(n.is_subgyrogroup, "is_normal requires a subgyrogroup");
    let decomp = left_cosets(g, n);
    if !decomp.is_partition {
        return None;
    }
    let order = g.order();
    let cosets = decomp.cosets;
    let mut coset_of = vec![usize::MAX; order];
    for (i, c) in cosets.iter().enumerate() {
        for &a in c {
            coset_of[a] = i;
        }
    }
    // Representative independence: products of two cosets must land in a
    // single coset.
    let k = cosets.len();
    let mut qtable = vec![usize::MAX; k * k];
    for a in 0..order {
        for b in 0..order {
            let (i, j) = (coset_of[a], coset_of[b]);
            let prod = coset_of[g.add(a, b)];
            let cell = &mut qtable[i * k + j];
            if *cell == usize::MAX {
                *cell = prod;
            } else if *cell != prod {
                return None;
            }
        }
    }
    let table = CayleyTable::new(k, qtable).unwrap();
    if !crate::table::validate_loop(&table).is_valid() {
        return None;
    }
    let quotient = Gyrogroup::validate(table).ok()?;
    Some(QuotientGyrogroup {
        base: g,
        normal_set: n.clone(),
        cosets,
        quotient,
        projection_map: coset_of,
    })
}

/// The quotient by a normal subgyrogroup.
///
/// # Panics
/// If `n` is not normal; decide with [`is_normal`] first.
pub fn quotient<'g>(g: &'g Gyrogroup, n: &SubSet<'g>) -> QuotientGyrogroup<'g> {
    is_normal(g, n).expect("quotient requires a normal subgyrogroup")
}

/// Relabels a table by `perm` (old index to new index). The identity must
/// stay at 0, so `perm[0] == 0` is required.
pub fn relabel(t: &CayleyTable, perm: &[usize]) -> CayleyTable {
    let n = t.order();
    assert_eq!(perm.len(), n);
    assert_eq!(perm[0], 0, "relabeling must fix the identity");
    let mut inv = vec![0usize; n];
    for (old, &new) in perm.iter().enumerate() {
        inv[new] = old;
    }
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(perm[t.get(inv[i], inv[j])]);
        }
    }
    CayleyTable::new(n, entries).unwrap()
}

/// Searches for an isomorphism. Returns a witness morphism or a definitive
/// `None`.
///
/// Backtracking over bijections fixing 0, restricted to images of equal
/// element order (isomorphisms preserve orders exactly), with incremental
/// product consistency. Candidates are tried in ascending order, so the
/// witness is deterministic.
pub fn find_isomorphism<'s, 't>(
    g: &'s Gyrogroup,
    h: &'t Gyrogroup,
) -> Option<Morphism<'s, 't>> {
    let n = g.order();
    if h.order() != n {
        return None;
    }
    let g_orders: Vec<usize> = (0..n).map(|a| g.order_of(a)).collect();
    let h_orders: Vec<usize> = (0..n).map(|a| h.order_of(a)).collect();
    {
        let mut gs = g_orders.clone();
        let mut hs = h_orders.clone();
        gs.sort_unstable();
        hs.sort_unstable();
        if gs != hs {
            return None;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    fn rec(
        g: &Gyrogroup,
        h: &Gyrogroup,
        g_orders: &[usize],
        h_orders: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        pos: usize,
    ) -> bool {
        let n = g.order();
        if pos == n {
            return true;
        }
        'cand: for img in 0..n {
            if used[img] || h_orders[img] != g_orders[pos] {
                continue;
            }
            map[pos] = img;
            used[img] = true;
            for a in 0..=pos {
                for b in 0..=pos {
                    let ab = g.add(a, b);
                    if ab <= pos && map[ab] != h.add(map[a], map[b]) {
                        used[img] = false;
                        map[pos] = usize::MAX;
                        continue 'cand;
                    }
                }
            }
            if rec(g, h, g_orders, h_orders, map, used, pos + 1) {
                return true;
            }
            used[img] = false;
            map[pos] = usize::MAX;
        }
        false
    }
    if n == 1 || rec(g, h, &g_orders, &h_orders, &mut map, &mut used, 1) {
        let m = check_homomorphism(g, h, map);
        debug_assert!(m.is_homomorphism && m.is_bijective());
        Some(m)
    } else {
        None
    }
}

/// The lexicographically minimal serialized table over all relabelings
/// fixing index 0. Two gyrogroups are isomorphic iff their canonical forms
/// are equal, since every isomorphism fixes the identity.
///
/// Brute-force minimization over (n−1)! relabelings with entrywise early
/// abort; exact and fast at the orders this crate targets.
pub fn canonical_form(g: &Gyrogroup) -> CayleyTable {
    let t = g.table();
    let n = t.order();
    if n <= 1 {
        return t.clone();
    }
    let mut best: Vec<usize> = t.entries().to_vec();
    let mut perm = vec![0usize; n];
    let mut inv = vec![0usize; n];
    let mut cand = vec![0usize; n * n];
    for rest in (1..n).permutations(n - 1) {
        for (i, &p) in rest.iter().enumerate() {
            perm[i + 1] = p;
        }
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        // perm maps new index -> old index here; entry (i,j) of the
        // relabeled table is inv[t(perm[i], perm[j])].
        let mut better = false;
        let mut abort = false;
        for i in 0..n {
            for j in 0..n {
                let v = inv[t.get(perm[i], perm[j])];
                let idx = i * n + j;
                cand[idx] = v;
                if !better {
                    if v > best[idx] {
                        abort = true;
                        break;
                    }
                    if v < best[idx] {
                        better = true;
                    }
                }
            }
            if abort {
                break;
            }
        }
        if better && !abort {
            best.copy_from_slice(&cand);
        }
    }
    CayleyTable::new(n, best).unwrap()
}
