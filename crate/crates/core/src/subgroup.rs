//! Subgroups of a fixed group and their conjugacy classes.
//!
//! Enumeration generates every cyclic subgroup first and then closes the
//! collection under pairwise joins until it stops growing. That is
//! exhaustive for any finite group but quadratic in the subgroup count,
//! which is the scaling bottleneck of the crate; at the supported orders
//! it stays comfortably cheap.

use crate::group::FiniteGroup;
use crate::par;
use std::collections::{BTreeSet, HashMap};

/// A subset of a group's element indices, closed under multiplication.
/// Always sorted and always containing the identity. The owning group is
/// passed explicitly to the operations that need it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup { members: g.elements().collect() }
    }

    /// Validates that the given indices are a subgroup: identity present,
    /// closed under multiplication, order dividing the group order.
    pub fn from_members(g: &FiniteGroup, mut members: Vec<usize>) -> crate::error::Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.binary_search(&0).is_err() {
            return Err(crate::error::Error::NotASubgroup("identity missing".into()));
        }
        if let Some(&bad) = members.iter().find(|&&x| x >= g.order()) {
            return Err(crate::error::Error::NotASubgroup(format!(
                "index {bad} out of range for order {}",
                g.order()
            )));
        }
        for &a in &members {
            for &b in &members {
                if members.binary_search(&g.mul(a, b)).is_err() {
                    return Err(crate::error::Error::NotASubgroup(format!(
                        "not closed: {a} * {b} escapes"
                    )));
                }
            }
        }
        if g.order() % members.len() != 0 {
            return Err(crate::error::Error::NotASubgroup(format!(
                "size {} does not divide {}",
                members.len(),
                g.order()
            )));
        }
        Ok(Subgroup { members })
    }

    /// Caller guarantees the indices are sorted and closed.
    pub(crate) fn from_sorted_unchecked(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(members.first(), Some(&0));
        Subgroup { members }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn member_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members().all(|x| other.contains(x))
    }

    /// True iff some member generates the whole subgroup.
    pub fn is_cyclic(&self, g: &FiniteGroup) -> bool {
        self.members().any(|x| g.element_order(x) == self.order())
    }

    pub fn is_normal_in(&self, g: &FiniteGroup) -> bool {
        g.elements().all(|x| self.members().all(|h| self.contains(g.conjugate(h, x))))
    }

    /// The conjugate subgroup `x * self * x^-1`.
    pub fn conjugate_by(&self, g: &FiniteGroup, x: usize) -> Subgroup {
        Subgroup::from_sorted_unchecked(conjugate_members(g, &self.members, x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let members: Vec<usize> = self.members().filter(|&x| other.contains(x)).collect();
        Subgroup::from_sorted_unchecked(members)
    }

    /// The product set `{a * b}`; a subgroup whenever one factor is normal.
    pub fn product_set(&self, g: &FiniteGroup, other: &Subgroup) -> Vec<usize> {
        let mut out = BTreeSet::new();
        for a in self.members() {
            for b in other.members() {
                out.insert(g.mul(a, b));
            }
        }
        out.into_iter().collect()
    }

    pub fn normalizer(&self, g: &FiniteGroup) -> Subgroup {
        let members: Vec<usize> = g
            .elements()
            .filter(|&x| self.members().all(|h| self.contains(g.conjugate(h, x))))
            .collect();
        Subgroup::from_sorted_unchecked(members)
    }
}

fn conjugate_members(g: &FiniteGroup, members: &[usize], x: usize) -> Vec<usize> {
    let mut out: Vec<usize> = members.iter().map(|&h| g.conjugate(h, x)).collect();
    out.sort_unstable();
    out
}

/// Multiplicative closure of `{identity} ∪ seed`, returned sorted.
pub(crate) fn closure<I: IntoIterator<Item = usize>>(g: &FiniteGroup, seed: I) -> Vec<usize> {
    let n = g.order();
    let mut present = vec![false; n];
    present[0] = true;
    let mut list = vec![0usize];
    for s in seed {
        debug_assert!(s < n);
        if !present[s] {
            present[s] = true;
            list.push(s);
        }
    }
    // every unordered pair gets visited once the later member is reached
    let mut i = 0;
    while i < list.len() {
        let a = list[i];
        for j in 0..=i {
            let b = list[j];
            for p in [g.mul(a, b), g.mul(b, a)] {
                if !present[p] {
                    present[p] = true;
                    list.push(p);
                }
            }
        }
        i += 1;
    }
    list.sort_unstable();
    list
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Canonical representative: the lexicographically least conjugate.
    pub representative: Subgroup,
    /// Number of distinct conjugates.
    pub class_size: usize,
    pub class_id: usize,
}

/// The full subgroup inventory of a group: every subgroup, partitioned
/// into conjugacy classes with a deterministic order (by subgroup order,
/// then lexicographically by the least conjugate). Class 0 is always the
/// trivial subgroup and the last class is the whole group.
pub struct SubgroupClasses {
    classes: Vec<SubgroupClass>,
    index: HashMap<Vec<usize>, usize>,
    all: Vec<Vec<usize>>,
}

impl SubgroupClasses {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &SubgroupClass {
        &self.classes[id]
    }

    /// Class id of the whole group; always the last class.
    pub fn group_class_id(&self) -> usize {
        self.classes.len() - 1
    }

    /// Class id of an arbitrary subgroup of the same group.
    pub fn class_of(&self, sub: &Subgroup) -> Option<usize> {
        self.index.get(sub.member_slice()).copied()
    }

    /// Every subgroup (not just class representatives), ordered by
    /// (order, lexicographic members).
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        self.all.iter().cloned().map(Subgroup::from_sorted_unchecked).collect()
    }

    pub fn total_subgroups(&self) -> usize {
        self.all.len()
    }

    /// Number of classes whose representative is cyclic.
    pub fn cyclic_class_count(&self, g: &FiniteGroup) -> usize {
        self.classes.iter().filter(|c| c.representative.is_cyclic(g)).count()
    }
}

/// Complete, duplicate-free list of all subgroups of `g`.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    g.subgroup_classes().all_subgroups()
}

pub(crate) fn enumerate_classes(g: &FiniteGroup) -> SubgroupClasses {
    let n = g.order();
    // cyclic subgroups
    let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
    for x in 0..n {
        all.insert(closure(g, [x]));
    }
    // close under pairwise joins
    let mut frontier: Vec<Vec<usize>> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let known: Vec<Vec<usize>> = all.iter().cloned().collect();
        let mut pairs: Vec<(&Vec<usize>, &Vec<usize>)> = Vec::new();
        for f in &frontier {
            for k in &known {
                if f.len() < n && k.len() < n && f != k && !subset(k, f) && !subset(f, k) {
                    pairs.push((f, k));
                }
            }
        }
        let joins = par::map_slice(&pairs, |(a, b)| {
            closure(g, a.iter().chain(b.iter()).copied())
        });
        frontier = Vec::new();
        for j in joins {
            if !all.contains(&j) {
                all.insert(j.clone());
                frontier.push(j);
            }
        }
        frontier.sort_unstable();
        frontier.dedup();
    }
    // order by (size, lex), then partition into conjugation orbits
    let mut all_list: Vec<Vec<usize>> = all.into_iter().collect();
    all_list.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut classes: Vec<SubgroupClass> = Vec::new();
    for sub in &all_list {
        if index.contains_key(sub) {
            continue;
        }
        let class_id = classes.len();
        let mut orbit: BTreeSet<Vec<usize>> = BTreeSet::new();
        for x in 0..n {
            orbit.insert(conjugate_members(g, sub, x));
        }
        debug_assert_eq!(orbit.first(), Some(sub));
        for member in &orbit {
            index.insert(member.clone(), class_id);
        }
        classes.push(SubgroupClass {
            representative: Subgroup::from_sorted_unchecked(sub.clone()),
            class_size: orbit.len(),
            class_id,
        });
    }
    SubgroupClasses { classes, index, all: all_list }
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    // both sorted
    a.len() <= b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
}
