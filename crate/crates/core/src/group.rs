//! Fully enumerated finite groups with a dense multiplication table.
//!
//! Elements are the indices `0..order`, index 0 always the identity. The
//! supported constructions are cyclic groups, split metacyclic groups
//! `C_n : C_m`, direct products, permutation closures and a handful of
//! named groups built on top of those. Groups are immutable after
//! construction and cheap to clone (the table sits behind an `Arc`), so
//! they can be shared freely across threads.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::subgroup::{self, Subgroup, SubgroupClasses};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Largest group order the dense-table representation accepts.
pub const MAX_GROUP_ORDER: usize = 2000;

struct GroupData {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
    label: String,
    conj: OnceLock<ConjugacyClasses>,
    subs: OnceLock<SubgroupClasses>,
}

/// A finite group, enumerated as indices `0..order` with index 0 the identity.
#[derive(Clone)]
pub struct FiniteGroup {
    data: Arc<GroupData>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label(), self.order())
    }
}

/// Conjugacy classes of elements, identity class first, every class sorted
/// and the list ordered by minimal member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClasses {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Minimal element of the class, used as its representative.
    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

impl FiniteGroup {
    fn build(
        order: usize,
        table: Vec<usize>,
        generators: Vec<usize>,
        label: String,
    ) -> Result<FiniteGroup> {
        assert_eq!(table.len(), order * order);
        // two-sided identity at index 0
        for x in 0..order {
            if table[x] != x || table[x * order] != x {
                return Err(Error::InvalidConstruction(format!(
                    "index 0 is not a two-sided identity in {label}"
                )));
            }
        }
        // two-sided inverses
        let mut inverse = vec![usize::MAX; order];
        for x in 0..order {
            let inv = (0..order).find(|&y| table[x * order + y] == 0 && table[y * order + x] == 0);
            match inv {
                Some(y) => inverse[x] = y,
                None => {
                    return Err(Error::InvalidConstruction(format!(
                        "element {x} of {label} has no two-sided inverse"
                    )))
                }
            }
        }
        let group = FiniteGroup {
            data: Arc::new(GroupData {
                order,
                table,
                inverse,
                generators,
                label,
                conj: OnceLock::new(),
                subs: OnceLock::new(),
            }),
        };
        // the generator set must reach every element
        let generated = subgroup::closure(&group, group.generators().iter().copied());
        if generated.len() != order {
            return Err(Error::InvalidConstruction(format!(
                "generators of {} reach only {} of {} elements",
                group.label(),
                generated.len(),
                order
            )));
        }
        Ok(group)
    }

    /// The cyclic group `C_n`, with `i * j = (i + j) mod n`.
    pub fn cyclic(n: usize) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(Error::InvalidConstruction("order must be positive".into()));
        }
        check_bound(n)?;
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = (i + j) % n;
            }
        }
        let generators = if n > 1 { vec![1] } else { vec![] };
        FiniteGroup::build(n, table, generators, format!("C{n}"))
    }

    /// The split extension `C_n : C_m` where the generator `y` of `C_m`
    /// conjugates the generator `x` of `C_n` to `x^a`. Elements are the
    /// pairs `x^i y^j` at index `i + n*j`.
    pub fn semidirect_cyclic(n: usize, m: usize, a: usize) -> Result<FiniteGroup> {
        Self::semidirect_labelled(n, m, a, None)
    }

    fn semidirect_labelled(n: usize, m: usize, a: usize, label: Option<String>) -> Result<FiniteGroup> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidConstruction("orders must be positive".into()));
        }
        let order = n
            .checked_mul(m)
            .ok_or(Error::OrderTooLarge { order: usize::MAX, bound: MAX_GROUP_ORDER })?;
        check_bound(order)?;
        let a = a % n;
        if gcd(a, n) != 1 {
            return Err(Error::InvalidConstruction(format!(
                "action exponent a = {a} is not coprime to n = {n}"
            )));
        }
        // powers a^j mod n for j in 0..m, and the well-definedness check a^m = 1
        let mut apow = Vec::with_capacity(m + 1);
        apow.push(1 % n);
        for j in 0..m {
            apow.push(apow[j] * a % n);
        }
        if apow[m] != 1 % n {
            return Err(Error::InvalidConstruction(format!(
                "a^m = {}^{} is not 1 mod {n}; the action is ill-defined",
                a, m
            )));
        }
        let mut table = vec![0; order * order];
        for j in 0..m {
            for i in 0..n {
                let lhs = i + n * j;
                for l in 0..m {
                    for k in 0..n {
                        let rhs = k + n * l;
                        let prod = (i + k * apow[j]) % n + n * ((j + l) % m);
                        table[lhs * order + rhs] = prod;
                    }
                }
            }
        }
        let mut generators = Vec::new();
        if n > 1 {
            generators.push(1);
        }
        if m > 1 {
            generators.push(n);
        }
        let label = label.unwrap_or_else(|| format!("sd({n},{m},{a})"));
        FiniteGroup::build(order, table, generators, label)
    }

    /// Componentwise product; the pair `(i, j)` sits at index `i + |G1|*j`.
    pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<FiniteGroup> {
        let n1 = g1.order();
        let n2 = g2.order();
        let order = n1
            .checked_mul(n2)
            .ok_or(Error::OrderTooLarge { order: usize::MAX, bound: MAX_GROUP_ORDER })?;
        check_bound(order)?;
        let mut table = vec![0; order * order];
        for i1 in 0..n1 {
            for j1 in 0..n2 {
                let lhs = i1 + n1 * j1;
                for i2 in 0..n1 {
                    for j2 in 0..n2 {
                        let rhs = i2 + n1 * j2;
                        table[lhs * order + rhs] = g1.mul(i1, i2) + n1 * g2.mul(j1, j2);
                    }
                }
            }
        }
        let mut generators: Vec<usize> = g1.generators().iter().map(|&g| g).collect();
        generators.extend(g2.generators().iter().map(|&h| n1 * h));
        let label = format!("{} x {}", g1.label(), g2.label());
        FiniteGroup::build(order, table, generators, label)
    }

    /// Closure of a set of permutations under composition, enumerated
    /// breadth-first from the identity. Fails once the closure passes the
    /// enumeration bound.
    pub fn from_permutations(degree: usize, gens: &[Permutation]) -> Result<FiniteGroup> {
        Self::permutation_closure(degree, gens, None)
    }

    fn permutation_closure(
        degree: usize,
        gens: &[Permutation],
        label: Option<String>,
    ) -> Result<FiniteGroup> {
        if degree == 0 {
            return Err(Error::InvalidConstruction("degree must be positive".into()));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::InvalidConstruction(format!(
                    "generator degree {} does not match {degree}",
                    g.degree()
                )));
            }
        }
        let mut elems = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(elems[0].clone(), 0);
        let mut i = 0;
        while i < elems.len() {
            for gen in gens {
                let prod = elems[i].compose(gen);
                if !index.contains_key(&prod) {
                    if elems.len() >= MAX_GROUP_ORDER {
                        return Err(Error::OrderTooLarge {
                            order: elems.len() + 1,
                            bound: MAX_GROUP_ORDER,
                        });
                    }
                    index.insert(prod.clone(), elems.len());
                    elems.push(prod);
                }
            }
            i += 1;
        }
        let order = elems.len();
        let mut table = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                table[x * order + y] = index[&elems[x].compose(&elems[y])];
            }
        }
        let mut generators = Vec::new();
        for gen in gens {
            let idx = index[gen];
            if idx != 0 && !generators.contains(&idx) {
                generators.push(idx);
            }
        }
        let label = label.unwrap_or_else(|| {
            let rendered: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
            format!("perm({degree}; {})", rendered.join(", "))
        });
        FiniteGroup::build(order, table, generators, label)
    }

    /// Dihedral group of order `2n`, as `C_n : C_2` with the inverting action.
    pub fn dihedral(n: usize) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(Error::InvalidConstruction("order must be positive".into()));
        }
        let a = if n > 1 { n - 1 } else { 0 };
        Self::semidirect_labelled(n, 2, a, Some(format!("D{n}")))
    }

    /// Symmetric group on `n` letters.
    pub fn symmetric(n: usize) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(Error::InvalidConstruction("degree must be positive".into()));
        }
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[vec![1, 2]])?);
        }
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[(1..=n).collect()])?);
        }
        Self::permutation_closure(n, &gens, Some(format!("S{n}")))
    }

    /// Alternating group on `n` letters.
    pub fn alternating(n: usize) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(Error::InvalidConstruction("degree must be positive".into()));
        }
        let mut gens = Vec::new();
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[vec![1, 2, 3]])?);
        }
        if n >= 4 {
            let cycle: Vec<usize> = if n % 2 == 1 { (1..=n).collect() } else { (2..=n).collect() };
            gens.push(Permutation::from_cycles(n, &[cycle])?);
        }
        Self::permutation_closure(n, &gens, Some(format!("A{n}")))
    }

    /// The quaternion group of order 8, presented as `a^4 = 1, b^2 = a^2,
    /// b a b^-1 = a^-1`, with `a^i b^j` at index `i + 4j`.
    pub fn quaternion8() -> FiniteGroup {
        let order = 8;
        let mut table = vec![0; order * order];
        for i in 0..4 {
            for j in 0..2 {
                let lhs = i + 4 * j;
                for k in 0..4 {
                    for l in 0..2 {
                        let rhs = k + 4 * l;
                        let prod = if j == 0 {
                            (i + k) % 4 + 4 * l
                        } else if l == 0 {
                            (i + 4 - k) % 4 + 4
                        } else {
                            (i + 4 - k + 2) % 4
                        };
                        table[lhs * order + rhs] = prod;
                    }
                }
            }
        }
        FiniteGroup::build(order, table, vec![1, 4], "Q8".into())
            .expect("Q8 table is a group")
    }

    pub fn order(&self) -> usize {
        self.data.order
    }

    pub fn label(&self) -> &str {
        &self.data.label
    }

    pub fn generators(&self) -> &[usize] {
        &self.data.generators
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.data.table[a * self.data.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.data.inverse[a]
    }

    /// `g * x * g^-1`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Least `k >= 1` with `x^k = 1`; always divides the group order.
    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// True iff some element has order equal to the group order.
    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.elements().any(|x| self.element_order(x) == n)
    }

    /// Same groups in the sense of sharing the underlying table, not
    /// isomorphism.
    pub fn same_group(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
    }

    /// A fresh instance over the same table with cold caches; mainly for
    /// benchmarks, where the cached subgroup inventory would mask the work.
    pub fn clone_uncached(&self) -> FiniteGroup {
        FiniteGroup {
            data: Arc::new(GroupData {
                order: self.data.order,
                table: self.data.table.clone(),
                inverse: self.data.inverse.clone(),
                generators: self.data.generators.clone(),
                label: self.data.label.clone(),
                conj: OnceLock::new(),
                subs: OnceLock::new(),
            }),
        }
    }

    /// Conjugacy classes of elements, computed once and cached.
    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.data.conj.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![usize::MAX; n];
            let mut classes = Vec::new();
            for g in 0..n {
                if class_of[g] != usize::MAX {
                    continue;
                }
                let id = classes.len();
                let mut members = Vec::new();
                for x in 0..n {
                    let c = self.conjugate(g, x);
                    if class_of[c] == usize::MAX {
                        class_of[c] = id;
                        members.push(c);
                    }
                }
                members.sort_unstable();
                classes.push(members);
            }
            ConjugacyClasses { classes, class_of }
        })
    }

    /// All subgroups organised into conjugacy classes, computed once and
    /// cached; see [`SubgroupClasses`] for the ordering guarantees.
    pub fn subgroup_classes(&self) -> &SubgroupClasses {
        self.data.subs.get_or_init(|| subgroup::enumerate_classes(self))
    }

    /// Smallest subgroup containing the seed elements.
    pub fn generated_subgroup<I: IntoIterator<Item = usize>>(&self, seed: I) -> Subgroup {
        Subgroup::from_sorted_unchecked(subgroup::closure(self, seed))
    }

    /// Quotient by a normal subgroup, realized as the action on left cosets.
    /// The returned map sends each element to the index of its coset; its
    /// kernel is exactly `n_sub`.
    pub fn quotient(&self, n_sub: &Subgroup) -> Result<Homomorphism> {
        if !n_sub.is_normal_in(self) {
            return Err(Error::NotNormal { sub: n_sub.order(), group: self.order() });
        }
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for h in n_sub.members() {
                coset_of[self.mul(x, h)] = id;
            }
        }
        let q = reps.len();
        let mut table = vec![0; q * q];
        for i in 0..q {
            for j in 0..q {
                table[i * q + j] = coset_of[self.mul(reps[i], reps[j])];
            }
        }
        let mut generators = Vec::new();
        for &g in self.generators() {
            let img = coset_of[g];
            if img != 0 && !generators.contains(&img) {
                generators.push(img);
            }
        }
        let label = format!("{}/N{}", self.label(), n_sub.order());
        let target = FiniteGroup::build(q, table, generators, label)?;
        debug_assert!(coset_of.iter().enumerate().all(|(x, &c)| (c == 0) == n_sub.contains(x)));
        Ok(Homomorphism { source: self.clone(), target, map: coset_of })
    }

    /// Subgroup generated by all elements of order coprime to `p`; this is
    /// the smallest normal subgroup with p-power index.
    pub fn p_residual(&self, p: usize) -> Subgroup {
        assert!(is_prime(p), "p = {p} must be prime");
        let seed = self.elements().filter(|&x| self.element_order(x) % p != 0);
        self.generated_subgroup(seed)
    }

    /// A subgroup whose order is the largest power of `p` dividing the group
    /// order; deterministic (first matching subgroup class in canonical
    /// order).
    pub fn sylow_subgroup(&self, p: usize) -> Subgroup {
        assert!(is_prime(p), "p = {p} must be prime");
        let mut target = 1;
        let mut n = self.order();
        while n % p == 0 {
            target *= p;
            n /= p;
        }
        self.subgroup_classes()
            .classes()
            .iter()
            .find(|c| c.representative.order() == target)
            .expect("Sylow subgroup exists")
            .representative
            .clone()
    }

    /// Frattini subgroup of a p-subgroup `p_sub`: generated by commutators
    /// and p-th powers; the quotient `p_sub / result` is elementary abelian.
    pub fn frattini_subgroup(&self, p_sub: &Subgroup, p: usize) -> Result<Subgroup> {
        assert!(is_prime(p), "p = {p} must be prime");
        if !is_power_of(p_sub.order(), p) {
            return Err(Error::NotAPGroup(p_sub.order(), p));
        }
        let mut seed = Vec::new();
        for a in p_sub.members() {
            seed.push(self.pow(a, p));
            for b in p_sub.members() {
                let comm = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                seed.push(comm);
            }
        }
        Ok(self.generated_subgroup(seed))
    }

    /// Pointwise stabilizer `{x in P : x c x^-1 = c for all c in C}`;
    /// requires `P` to normalize `C`.
    pub fn conjugation_kernel(&self, p_sub: &Subgroup, c_sub: &Subgroup) -> Result<Subgroup> {
        for x in p_sub.members() {
            if !c_sub.members().all(|c| c_sub.contains(self.conjugate(c, x))) {
                return Err(Error::NotNormalized);
            }
        }
        let members: Vec<usize> = p_sub
            .members()
            .filter(|&x| c_sub.members().all(|c| self.conjugate(c, x) == c))
            .collect();
        Ok(Subgroup::from_sorted_unchecked(members))
    }

    /// Exhaustive check of the group axioms: identity, inverses,
    /// associativity and generator closure. Cubic in the order, so meant
    /// for tests and small groups.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order();
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::Internal(format!("identity fails at {x}")));
            }
            let inv = self.inv(x);
            if self.mul(x, inv) != 0 || self.mul(inv, x) != 0 {
                return Err(Error::Internal(format!("inverse fails at {x}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::Internal(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let generated = subgroup::closure(self, self.generators().iter().copied());
        if generated.len() != n {
            return Err(Error::Internal("generators do not generate".into()));
        }
        Ok(())
    }
}

/// A verified-by-construction group map, e.g. a quotient map.
#[derive(Clone)]
pub struct Homomorphism {
    source: FiniteGroup,
    target: FiniteGroup,
    map: Vec<usize>,
}

impl Homomorphism {
    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// Exhaustive multiplicativity check, quadratic in the source order.
    pub fn is_homomorphism(&self) -> bool {
        let n = self.source.order();
        (0..n).all(|x| {
            (0..n).all(|y| self.map[self.source.mul(x, y)] == self.target.mul(self.map[x], self.map[y]))
        })
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &img in &self.map {
            hit[img] = true;
        }
        hit.into_iter().all(|b| b)
    }

    pub fn kernel(&self) -> Subgroup {
        let members: Vec<usize> =
            (0..self.source.order()).filter(|&x| self.map[x] == 0).collect();
        Subgroup::from_sorted_unchecked(members)
    }

    /// Full preimage of a subgroup of the target.
    pub fn preimage(&self, u: &Subgroup) -> Subgroup {
        let members: Vec<usize> =
            (0..self.source.order()).filter(|&x| u.contains(self.map[x])).collect();
        Subgroup::from_sorted_unchecked(members)
    }
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Homomorphism({} -> {})", self.source.label(), self.target.label())
    }
}

fn check_bound(order: usize) -> Result<()> {
    if order > MAX_GROUP_ORDER {
        return Err(Error::OrderTooLarge { order, bound: MAX_GROUP_ORDER });
    }
    Ok(())
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime divisors of `n`, ascending.
pub(crate) fn prime_divisors(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut n = n;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// True iff `n` is a (possibly zeroth) power of the prime `p`.
pub(crate) fn is_power_of(n: usize, p: usize) -> bool {
    let mut n = n;
    if n == 0 {
        return false;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_trivial() {
        let g = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(g.order(), 1);
        g.check_axioms().unwrap();
    }

    #[test]
    fn cyclic_rejects_zero() {
        assert!(FiniteGroup::cyclic(0).is_err());
    }

    #[test]
    fn cyclic_six_has_generator_of_full_order() {
        let g = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(g.element_order(1), 6);
        g.check_axioms().unwrap();
    }

    #[test]
    fn cyclic_twelve_element_orders() {
        let g = FiniteGroup::cyclic(12).unwrap();
        // oracle: order of i in C_12 is 12 / gcd(i, 12)
        for i in 0..12 {
            assert_eq!(g.element_order(i), 12 / gcd(i, 12));
        }
        assert_eq!(g.element_order(4), 3);
        assert_eq!(g.element_order(0), 1);
    }

    #[test]
    fn semidirect_721_is_nonabelian_of_order_21() {
        let g = FiniteGroup::semidirect_cyclic(7, 3, 2).unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
        g.check_axioms().unwrap();
    }

    #[test]
    fn semidirect_trivial_complement_is_cyclic() {
        let g = FiniteGroup::semidirect_cyclic(5, 1, 1).unwrap();
        assert_eq!(g.order(), 5);
        assert!(g.is_cyclic());
    }

    #[test]
    fn semidirect_rejects_bad_action() {
        // 2^3 = 8 is not 1 mod 5
        assert!(FiniteGroup::semidirect_cyclic(5, 3, 2).is_err());
        // 3 shares a factor with 6
        assert!(FiniteGroup::semidirect_cyclic(6, 2, 3).is_err());
    }

    #[test]
    fn direct_product_klein() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let v4 = FiniteGroup::direct_product(&c2, &c2).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(!v4.is_cyclic());
        v4.check_axioms().unwrap();
    }

    #[test]
    fn direct_product_orders_multiply() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let g = FiniteGroup::direct_product(&c3, &s3).unwrap();
        assert_eq!(g.order(), 18);
    }

    #[test]
    fn direct_product_c2_c3_is_cyclic() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let g = FiniteGroup::direct_product(&c2, &c3).unwrap();
        // an element of order 6 exists
        assert!(g.elements().any(|x| g.element_order(x) == 6));
        assert!(g.is_cyclic());
    }

    #[test]
    fn permutation_closure_s4() {
        let g = FiniteGroup::from_permutations(
            4,
            &[
                Permutation::from_cycles(4, &[vec![1, 2]]).unwrap(),
                Permutation::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn permutation_closure_empty_gens() {
        let g = FiniteGroup::from_permutations(3, &[]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn permutation_closure_d5() {
        let g = FiniteGroup::from_permutations(
            5,
            &[
                Permutation::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap(),
                Permutation::from_cycles(5, &[vec![2, 5], vec![3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(g.order(), 10);
        assert!(!g.is_abelian());
    }

    #[test]
    fn quaternion_axioms_and_shape() {
        let q8 = FiniteGroup::quaternion8();
        q8.check_axioms().unwrap();
        assert_eq!(q8.order(), 8);
        assert!(!q8.is_cyclic());
        // unique involution: only a^2 squares to the identity
        let involutions: Vec<usize> =
            q8.elements().filter(|&x| x != 0 && q8.element_order(x) == 2).collect();
        assert_eq!(involutions, vec![2]);
    }

    #[test]
    fn named_groups_orders() {
        assert_eq!(FiniteGroup::symmetric(1).unwrap().order(), 1);
        assert_eq!(FiniteGroup::symmetric(2).unwrap().order(), 2);
        assert_eq!(FiniteGroup::alternating(4).unwrap().order(), 12);
        assert_eq!(FiniteGroup::alternating(5).unwrap().order(), 60);
        assert_eq!(FiniteGroup::dihedral(6).unwrap().order(), 12);
    }

    #[test]
    fn symmetric_too_large_rejected() {
        assert!(matches!(
            FiniteGroup::symmetric(7),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn conjugacy_classes_abelian_singletons() {
        let g = FiniteGroup::cyclic(8).unwrap();
        assert_eq!(g.conjugacy_classes().count(), 8);
        assert!(g.conjugacy_classes().sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn conjugacy_classes_s3() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let classes = g.conjugacy_classes();
        assert_eq!(classes.count(), 3);
        let mut sizes = classes.sizes();
        assert_eq!(sizes[0], 1); // identity class first
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn conjugacy_classes_frobenius21() {
        let g = FiniteGroup::semidirect_cyclic(7, 3, 2).unwrap();
        let mut sizes = g.conjugacy_classes().sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 3, 7, 7]);
    }

    #[test]
    fn quotient_by_whole_group() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let whole = g.generated_subgroup(g.elements());
        let phi = g.quotient(&whole).unwrap();
        assert_eq!(phi.target().order(), 1);
    }

    #[test]
    fn quotient_s3_by_c3() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let c3 = g.p_residual(2);
        assert_eq!(c3.order(), 3);
        let phi = g.quotient(&c3).unwrap();
        assert_eq!(phi.target().order(), 2);
        assert!(phi.is_homomorphism());
        assert_eq!(phi.kernel(), c3);
    }

    #[test]
    fn quotient_c3c4_by_center_is_s3_like() {
        let g = FiniteGroup::semidirect_cyclic(3, 4, 2).unwrap();
        // y^2 = (0, 2) sits at index 3*2 = 6 and is central
        let center = g.generated_subgroup([6]);
        assert_eq!(center.order(), 2);
        let phi = g.quotient(&center).unwrap();
        assert_eq!(phi.target().order(), 6);
        assert!(!phi.target().is_abelian());
        assert!(phi.is_homomorphism());
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let g = FiniteGroup::symmetric(3).unwrap();
        // a subgroup of order 2 is not normal in S3
        let h = g
            .subgroup_classes()
            .classes()
            .iter()
            .find(|c| c.representative.order() == 2)
            .unwrap()
            .representative
            .clone();
        assert!(matches!(g.quotient(&h), Err(Error::NotNormal { .. })));
    }

    #[test]
    fn p_residual_examples() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let r = s3.p_residual(2);
        assert_eq!(r.order(), 3);
        // independent route: the subgroup generated by a 3-cycle
        let three_cycle = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        assert_eq!(r, s3.generated_subgroup([three_cycle]));

        let q8 = FiniteGroup::quaternion8();
        assert_eq!(q8.p_residual(2).order(), 1);

        let c12 = FiniteGroup::cyclic(12).unwrap();
        assert_eq!(c12.p_residual(3).order(), 4);
    }

    #[test]
    fn sylow_examples() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.sylow_subgroup(3).order(), 3);
        let c12 = FiniteGroup::cyclic(12).unwrap();
        assert_eq!(c12.sylow_subgroup(2).order(), 4);
        let s4 = FiniteGroup::symmetric(4).unwrap();
        assert_eq!(s4.sylow_subgroup(2).order(), 8);
    }

    #[test]
    fn frattini_examples() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let whole = c4.generated_subgroup(c4.elements());
        assert_eq!(c4.frattini_subgroup(&whole, 2).unwrap().order(), 2);

        let c2 = FiniteGroup::cyclic(2).unwrap();
        let v4 = FiniteGroup::direct_product(&c2, &c2).unwrap();
        let whole = v4.generated_subgroup(v4.elements());
        assert_eq!(v4.frattini_subgroup(&whole, 2).unwrap().order(), 1);

        let q8 = FiniteGroup::quaternion8();
        let whole = q8.generated_subgroup(q8.elements());
        let frat = q8.frattini_subgroup(&whole, 2).unwrap();
        assert_eq!(frat.order(), 2);
        // it is the central involution
        assert!(frat.contains(2));

        // not a p-group
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let whole = s3.generated_subgroup(s3.elements());
        assert!(s3.frattini_subgroup(&whole, 2).is_err());
    }

    #[test]
    fn conjugation_kernel_examples() {
        // abelian: kernel is all of P
        let c12 = FiniteGroup::cyclic(12).unwrap();
        let p = c12.sylow_subgroup(2);
        let c = c12.p_residual(2);
        assert_eq!(c12.conjugation_kernel(&p, &c).unwrap(), p);

        // faithful Frobenius action: trivial kernel
        let g = FiniteGroup::semidirect_cyclic(7, 3, 2).unwrap();
        let p = g.sylow_subgroup(3);
        let c = g.p_residual(3);
        assert_eq!(g.conjugation_kernel(&p, &c).unwrap().order(), 1);

        // action through C2: kernel of order 2 inside C4
        let g = FiniteGroup::semidirect_cyclic(3, 4, 2).unwrap();
        let p = g.sylow_subgroup(2);
        let c = g.p_residual(2);
        assert_eq!(g.conjugation_kernel(&p, &c).unwrap().order(), 2);
    }

    #[test]
    fn element_orders_divide_group_order() {
        for g in [
            FiniteGroup::symmetric(4).unwrap(),
            FiniteGroup::quaternion8(),
            FiniteGroup::semidirect_cyclic(5, 4, 2).unwrap(),
        ] {
            for x in g.elements() {
                assert_eq!(g.order() % g.element_order(x), 0);
            }
        }
    }
}
