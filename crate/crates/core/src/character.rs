//! Permutation characters of coset actions, formal combinations of
//! subgroup classes, and restriction to a normal subgroup.
//!
//! The permutation character of `G/H` is computed by counting fixed
//! cosets directly, which keeps everything in integers. Its value only
//! depends on the conjugacy class of `H`, so combinations are stored
//! over subgroup conjugacy classes.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;
use std::collections::BTreeMap;

/// Integer class function on a fixed group, indexed by element
/// conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterVector {
    values: Vec<i64>,
}

impl CharacterVector {
    pub fn zero(classes: usize) -> Self {
        CharacterVector { values: vec![0; classes] }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn at(&self, class: usize) -> i64 {
        self.values[class]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// `self += k * other`, checked.
    pub fn add_scaled(&mut self, k: i64, other: &CharacterVector) -> Result<()> {
        assert_eq!(self.values.len(), other.values.len());
        for (dst, &src) in self.values.iter_mut().zip(&other.values) {
            let delta = k.checked_mul(src).ok_or(Error::Overflow)?;
            *dst = dst.checked_add(delta).ok_or(Error::Overflow)?;
        }
        Ok(())
    }
}

/// Integer coefficients `n_H` over subgroup conjugacy classes; absent
/// classes mean zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FormalCombination {
    coeffs: BTreeMap<usize, i64>,
}

impl FormalCombination {
    pub fn zero() -> Self {
        FormalCombination::default()
    }

    /// Sums duplicate classes and drops zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (usize, i64)>>(terms: I) -> Self {
        let mut out = FormalCombination::default();
        for (class, coeff) in terms {
            out.add_term(class, coeff);
        }
        out
    }

    pub fn coeff(&self, class: usize) -> i64 {
        self.coeffs.get(&class).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, class: usize, coeff: i64) {
        let entry = self.coeffs.entry(class).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&class);
        }
    }

    /// `self += k * other`, checked.
    pub fn add_scaled(&mut self, k: i64, other: &FormalCombination) -> Result<()> {
        for (&class, &coeff) in &other.coeffs {
            let delta = k.checked_mul(coeff).ok_or(Error::Overflow)?;
            let entry = self.coeffs.entry(class).or_insert(0);
            *entry = entry.checked_add(delta).ok_or(Error::Overflow)?;
            if *entry == 0 {
                self.coeffs.remove(&class);
            }
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&c, &v)| (c, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of the whole group, `n_G`.
    pub fn group_coefficient(&self, g: &FiniteGroup) -> i64 {
        self.coeff(g.subgroup_classes().group_class_id())
    }

    /// Dense coefficient vector over `classes` subgroup classes.
    pub fn dense(&self, classes: usize) -> Vec<i64> {
        let mut out = vec![0; classes];
        for (class, coeff) in self.terms() {
            out[class] = coeff;
        }
        out
    }

    pub fn from_dense(row: &[i64]) -> Self {
        FormalCombination::from_terms(
            row.iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c, v)),
        )
    }
}

fn ensure_subgroup(g: &FiniteGroup, h: &Subgroup) -> Result<()> {
    if h.member_slice().last().is_some_and(|&x| x >= g.order()) {
        return Err(Error::NotASubgroup("member index out of range".into()));
    }
    for a in h.members() {
        for b in h.members() {
            if !h.contains(g.mul(a, b)) {
                return Err(Error::NotASubgroup(format!("not closed at {a} * {b}")));
            }
        }
    }
    Ok(())
}

/// The permutation character of the action of `G` on left cosets of `H`:
/// its value at (the class of) `g` is the number of cosets `xH` with
/// `g xH = xH`. The identity value is the index `[G:H]`.
pub fn perm_character(g: &FiniteGroup, h: &Subgroup) -> Result<CharacterVector> {
    ensure_subgroup(g, h)?;
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for m in h.members() {
            coset_of[g.mul(x, m)] = id;
        }
    }
    let conj = g.conjugacy_classes();
    let values: Vec<i64> = conj
        .classes()
        .iter()
        .map(|class| {
            let elt = class[0];
            reps.iter().filter(|&&r| coset_of[g.mul(elt, r)] == coset_of[r]).count() as i64
        })
        .collect();
    Ok(CharacterVector { values })
}

/// The character of a formal combination: `sum n_H * perm_character(G, H)`
/// over class representatives.
pub fn combination_character(g: &FiniteGroup, r: &FormalCombination) -> Result<CharacterVector> {
    let classes = g.subgroup_classes();
    let mut acc = CharacterVector::zero(g.conjugacy_classes().count());
    for (class, coeff) in r.terms() {
        if class >= classes.count() {
            return Err(Error::Internal(format!("class id {class} out of range")));
        }
        let chi = perm_character(g, &classes.class(class).representative)?;
        acc.add_scaled(coeff, &chi)?;
    }
    Ok(acc)
}

/// A formal integer combination of concrete subgroups (not classes),
/// merged by set equality; the result type of restriction to a normal
/// subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupCombination {
    terms: Vec<(Subgroup, i64)>,
}

impl SubgroupCombination {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Subgroup, i64)] {
        &self.terms
    }
}

/// Restriction of a combination to a normal subgroup `C`: each class term
/// `n_H * H` contributes `n_H * [G:HC]` to the subgroup `H ∩ C` of `C`.
/// Contributions landing on equal subgroups are merged. When the input is
/// a Brauer relation in `G`, the output is one in `C`; in particular it is
/// identically zero for cyclic `C`.
pub fn mackey_restrict_normal(
    g: &FiniteGroup,
    r: &FormalCombination,
    c: &Subgroup,
) -> Result<SubgroupCombination> {
    if !c.is_normal_in(g) {
        return Err(Error::NotNormal { sub: c.order(), group: g.order() });
    }
    let classes = g.subgroup_classes();
    let mut acc: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for (class, coeff) in r.terms() {
        let h = &classes.class(class).representative;
        let hc = h.product_set(g, c);
        let index = (g.order() / hc.len()) as i64;
        let meet = h.intersection(c);
        let delta = coeff.checked_mul(index).ok_or(Error::Overflow)?;
        let entry = acc.entry(meet.member_slice().to_vec()).or_insert(0);
        *entry = entry.checked_add(delta).ok_or(Error::Overflow)?;
    }
    let mut terms: Vec<(Subgroup, i64)> = acc
        .into_iter()
        .filter(|&(_, v)| v != 0)
        .map(|(members, v)| (Subgroup::from_sorted_unchecked(members), v))
        .collect();
    terms.sort_by(|a, b| {
        a.0.order().cmp(&b.0.order()).then_with(|| a.0.member_slice().cmp(b.0.member_slice()))
    });
    Ok(SubgroupCombination { terms })
}
