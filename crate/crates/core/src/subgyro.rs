//! Subgyrogroups: membership criterion, generated and cyclic subgyrogroups,
//! full lattice enumeration, subgroup detection, left cosets.
//!
//! A nonempty subset is a subgyrogroup iff it is closed under the operation
//! and under inversion; the identity and closure under the restricted
//! gyrations then come for free. The lattice enumerator deliberately does
//! not prune candidate sizes by divisibility: Lagrange-style facts are
//! conclusions to be checked downstream, never assumptions.

use std::collections::BTreeSet;
use std::fmt;

use crate::gyrogroup::Gyrogroup;

/// Default order bound for [`all_subgyrogroups`].
pub const LATTICE_BOUND: usize = 16;

/// A subset of a gyrogroup's elements, tagged with what it turned out to be.
///
/// `is_normal` starts out unknown (`None`); deciding it requires the quotient
/// machinery and is done separately.
#[derive(Clone)]
pub struct SubSet<'g> {
    parent: &'g Gyrogroup,
    members: Vec<usize>,
    pub is_subgyrogroup: bool,
    pub is_subgroup: bool,
    pub is_normal: Option<bool>,
}

impl fmt::Debug for SubSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubSet")
            .field("members", &self.members)
            .field("is_subgyrogroup", &self.is_subgyrogroup)
            .field("is_subgroup", &self.is_subgroup)
            .field("is_normal", &self.is_normal)
            .finish()
    }
}

impl PartialEq for SubSet<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.members == other.members
    }
}
impl Eq for SubSet<'_> {}

impl<'g> SubSet<'g> {
    /// Wraps a member set, classifying it. Members are sorted and deduped.
    pub fn from_members(parent: &'g Gyrogroup, members: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = members.into_iter().collect();
        assert!(!set.is_empty(), "a SubSet must be nonempty");
        assert!(
            set.iter().all(|&a| a < parent.order()),
            "member index out of range"
        );
        let members: Vec<usize> = set.into_iter().collect();
        let is_sub = is_subgyrogroup(parent, &members);
        let is_subgroup = is_sub && restricted_gyrations_trivial(parent, &members);
        SubSet {
            parent,
            members,
            is_subgyrogroup: is_sub,
            is_subgroup,
            is_normal: None,
        }
    }

    pub fn parent(&self) -> &'g Gyrogroup {
        self.parent
    }

    /// Sorted member indices.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty() // never true: nonempty by construction
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    /// Relabels the members by rank into a standalone table, together with
    /// the map from new index to original element. The extracted table of a
    /// subgyrogroup always validates.
    pub fn extract(&self) -> (crate::table::CayleyTable, Vec<usize>) {
        assert!(self.is_subgyrogroup, "extract requires a subgyrogroup");
        let m = self.members.len();
        let rank = |a: usize| self.members.binary_search(&a).unwrap();
        let mut entries = Vec::with_capacity(m * m);
        for &a in &self.members {
            for &b in &self.members {
                entries.push(rank(self.parent.add(a, b)));
            }
        }
        let table = crate::table::CayleyTable::new(m, entries).unwrap();
        (table, self.members.clone())
    }
}

/// True iff `s` is nonempty and closed under the operation and inversion.
///
/// # Panics
/// On an empty set or out-of-range index.
pub fn is_subgyrogroup(g: &Gyrogroup, s: &[usize]) -> bool {
    assert!(!s.is_empty(), "subgyrogroup criterion needs a nonempty set");
    let n = g.order();
    let mut inside = vec![false; n];
    for &a in s {
        inside[a] = true;
    }
    s.iter().all(|&a| {
        inside[g.neg(a)] && s.iter().all(|&b| inside[g.add(a, b)])
    })
}

fn restricted_gyrations_trivial(g: &Gyrogroup, s: &[usize]) -> bool {
    s.iter().all(|&a| {
        s.iter()
            .all(|&b| s.iter().all(|&c| g.gyr_apply(a, b, c) == c))
    })
}

/// Closure of `seed ∪ {0}` under the operation and inversion, as a sorted
/// member list. Fixed-point sweep; order stays ≤ n so this is cheap.
fn close(g: &Gyrogroup, seed: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut inside = vec![false; n];
    inside[0] = true;
    for &a in seed {
        inside[a] = true;
    }
    loop {
        let cur: Vec<usize> = (0..n).filter(|&a| inside[a]).collect();
        let mut changed = false;
        for &a in &cur {
            if !inside[g.neg(a)] {
                inside[g.neg(a)] = true;
                changed = true;
            }
            for &b in &cur {
                let ab = g.add(a, b);
                if !inside[ab] {
                    inside[ab] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return cur;
        }
    }
}

/// The smallest subgyrogroup containing `gens`: the closure of
/// `gens ∪ {0}` under the operation and inversion.
///
/// # Panics
/// On an empty generating set or out-of-range index.
pub fn generate<'g>(g: &'g Gyrogroup, gens: &[usize]) -> SubSet<'g> {
    assert!(!gens.is_empty(), "generate needs a nonempty set");
    assert!(gens.iter().all(|&a| a < g.order()), "generator out of range");
    SubSet::from_members(g, close(g, gens))
}

/// The cyclic subgyrogroup `{m·a : 0 ≤ m < order_of(a)}`. Always a
/// subgroup: the integer multiples of one element form a cyclic group.
pub fn cyclic<'g>(g: &'g Gyrogroup, a: usize) -> SubSet<'g> {
    let mut members = Vec::new();
    let mut acc = 0;
    loop {
        members.push(acc);
        acc = g.add(a, acc);
        if acc == 0 {
            break;
        }
    }
    let sub = SubSet::from_members(g, members);
    debug_assert!(sub.is_subgroup, "a scalar orbit must be a subgroup");
    sub
}

/// Error for [`all_subgyrogroups_bounded`] when the order exceeds the bound.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("order {order} exceeds the subgyrogroup enumeration bound {bound}")]
pub struct LatticeBoundExceeded {
    pub order: usize,
    pub bound: usize,
}

/// Every subgyrogroup, exactly once, sorted by (size, members).
///
/// Starts from all cyclic subgyrogroups, then repeatedly adjoins single
/// elements and re-closes until no new subgyrogroup appears. Completeness:
/// any subgyrogroup K contains a cyclic one, and adjoin-and-close steps
/// inside K stay inside K while strictly growing, so K is reached.
///
/// # Panics
/// If the order exceeds [`LATTICE_BOUND`]; use
/// [`all_subgyrogroups_bounded`] to override.
pub fn all_subgyrogroups(g: &Gyrogroup) -> Vec<SubSet<'_>> {
    all_subgyrogroups_bounded(g, LATTICE_BOUND).expect("order exceeds default lattice bound")
}

/// [`all_subgyrogroups`] with an explicit order bound; refuses rather than
/// truncating when the order exceeds it.
pub fn all_subgyrogroups_bounded(
    g: &Gyrogroup,
    bound: usize,
) -> Result<Vec<SubSet<'_>>, LatticeBoundExceeded> {
    let n = g.order();
    if n > bound {
        return Err(LatticeBoundExceeded { order: n, bound });
    }
    let mut lattice: BTreeSet<Vec<usize>> = (0..n).map(|a| cyclic(g, a).members).collect();
    loop {
        let mut additions: Vec<Vec<usize>> = Vec::new();
        for h in &lattice {
            for x in 0..n {
                if h.binary_search(&x).is_ok() {
                    continue;
                }
                let mut seed = h.clone();
                seed.push(x);
                let k = close(g, &seed);
                if !lattice.contains(&k) && !additions.contains(&k) {
                    additions.push(k);
                }
            }
        }
        if additions.is_empty() {
            break;
        }
        lattice.extend(additions);
    }
    let mut subs: Vec<SubSet<'_>> = lattice
        .into_iter()
        .map(|members| SubSet::from_members(g, members))
        .collect();
    subs.sort_by(|a, b| (a.len(), a.members()).cmp(&(b.len(), b.members())));
    Ok(subs)
}

/// True iff every gyration by two members restricts to the identity on the
/// member set; the subset is then associative under the operation.
///
/// # Panics
/// If `s` is not a subgyrogroup.
pub fn is_subgroup_subset(g: &Gyrogroup, s: &SubSet<'_>) -> bool {
    assert!(s.is_subgyrogroup, "is_subgroup_subset requires a subgyrogroup");
    restricted_gyrations_trivial(g, s.members())
}

/// The left cosets `a ⊕ H` of a subgyrogroup, deduplicated as sets.
#[derive(Debug, Clone)]
pub struct CosetDecomposition<'g> {
    pub subset: SubSet<'g>,
    /// Each coset sorted ascending; list sorted by smallest representative.
    pub cosets: Vec<Vec<usize>>,
    pub is_partition: bool,
    /// Number of cosets, defined only when they partition the elements.
    pub index: Option<usize>,
}

/// Computes `{a ⊕ H : a ∈ G}`. Every element lies in its own coset, so the
/// union always covers the gyrogroup; whether the cosets are pairwise
/// disjoint is reported, not assumed, because for a general subgyrogroup
/// they need not partition.
///
/// # Panics
/// If `h` is not a subgyrogroup.
pub fn left_cosets<'g>(g: &'g Gyrogroup, h: &SubSet<'g>) -> CosetDecomposition<'g> {
    assert!(h.is_subgyrogroup, "left_cosets requires a subgyrogroup");
    let n = g.order();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for a in 0..n {
        let coset: BTreeSet<usize> = h.members().iter().map(|&x| g.add(a, x)).collect();
        seen.insert(coset.into_iter().collect());
    }
    let cosets: Vec<Vec<usize>> = seen.into_iter().collect();
    let covered: usize = cosets.iter().map(Vec::len).sum();
    let is_partition = covered == n;
    CosetDecomposition {
        subset: h.clone(),
        is_partition,
        index: is_partition.then_some(cosets.len()),
        cosets,
    }
}
