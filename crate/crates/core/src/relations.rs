//! The integer lattice of Brauer relations of a group, the coefficient
//! ideal, and constructive witness relations.
//!
//! A Brauer relation is a formal combination `sum n_H H` of subgroups with
//! `sum n_H Ind_H^G triv_H = 0`. Stacking the permutation characters of
//! the subgroup class representatives into an integer matrix turns the
//! relations into its left kernel, which is computed exactly. The set of
//! values of `n_G` over all relations is an ideal `dZ`; `witness` search
//! and the recursive construction below realize the generator.

use crate::character::{combination_character, perm_character, FormalCombination};
use crate::classify::{classify, Classification};
use crate::error::{Error, Result};
use crate::group::{self, FiniteGroup};
use crate::linalg::{left_kernel, IntMatrix};
use crate::par;
use crate::subgroup::Subgroup;

/// Permutation-character values: one row per subgroup conjugacy class,
/// one column per element conjugacy class.
#[derive(Clone, Debug)]
pub struct InductionMatrix {
    rows: Vec<Vec<i64>>,
    cols: usize,
}

impl InductionMatrix {
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.rows[r]
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.rows[r][c]
    }

    pub(crate) fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.rows.clone())
    }
}

/// Row per subgroup class, column per element class; entry is the value
/// of the permutation character of `G / H` at that element class.
pub fn induction_matrix(g: &FiniteGroup) -> Result<InductionMatrix> {
    let classes = g.subgroup_classes();
    let reps: Vec<&Subgroup> = classes.classes().iter().map(|c| &c.representative).collect();
    let rows: Vec<Result<Vec<i64>>> = par::map_slice(&reps, |h| {
        perm_character(g, h).map(|chi| chi.values().to_vec())
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(InductionMatrix { rows, cols: g.conjugacy_classes().count() })
}

/// An integral basis of the lattice of Brauer relations, canonical
/// (Hermite form over the class coordinates, leading coefficients
/// positive).
#[derive(Clone, Debug)]
pub struct RelationLattice {
    basis: Vec<FormalCombination>,
    dense: Vec<Vec<i64>>,
    classes: usize,
}

impl RelationLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[FormalCombination] {
        &self.basis
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }

    /// Generator `d >= 0` of the ideal of possible `n_G` values: the gcd
    /// of the whole-group coordinate over the basis, 0 when that
    /// coordinate vanishes identically.
    pub fn coefficient_ideal(&self) -> usize {
        let gcls = self.classes - 1;
        let mut d: u64 = 0;
        for row in &self.dense {
            d = gcd64(d, row[gcls].unsigned_abs());
        }
        d as usize
    }

    /// Exact membership test in the integer span of the basis.
    pub fn contains_dense(&self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.classes);
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for row in &self.dense {
            let pivot_col = match row.iter().position(|&x| x != 0) {
                Some(c) => c,
                None => continue,
            };
            let piv = row[pivot_col] as i128;
            if v[pivot_col] % piv != 0 {
                return false;
            }
            let q = v[pivot_col] / piv;
            if q != 0 {
                for (dst, &src) in v.iter_mut().zip(row) {
                    *dst -= q * src as i128;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// A relation whose `n_G` coordinate is exactly `target`, which must
    /// be a multiple of the ideal generator.
    pub fn with_group_coefficient(&self, target: i64) -> Result<FormalCombination> {
        let gcls = self.classes - 1;
        let mut g: i64 = 0;
        let mut combo: Vec<i64> = Vec::with_capacity(self.basis.len());
        for row in &self.dense {
            let c = row[gcls];
            if c == 0 {
                combo.push(0);
                continue;
            }
            if g == 0 {
                g = c;
                combo.push(1);
            } else {
                let (ng, x, y) = ext_gcd(g, c);
                for entry in combo.iter_mut() {
                    *entry = entry.checked_mul(x).ok_or(Error::Overflow)?;
                }
                combo.push(y);
                g = ng;
            }
        }
        if g == 0 || target % g != 0 {
            return Err(Error::Internal(format!(
                "no relation with group coefficient {target}; ideal generated by {g}"
            )));
        }
        let scale = target / g;
        let mut out = FormalCombination::zero();
        for (k, b) in combo.iter().zip(&self.basis) {
            let k = k.checked_mul(scale).ok_or(Error::Overflow)?;
            if k != 0 {
                out.add_scaled(k, b)?;
            }
        }
        debug_assert_eq!(out.coeff(gcls), target);
        Ok(out)
    }
}

/// An integral basis of `{v : v^T M = 0}` for the induction matrix `M`;
/// the basis spans the kernel over the integers, not merely the
/// rationals.
pub fn relation_lattice(g: &FiniteGroup) -> Result<RelationLattice> {
    let m = induction_matrix(g)?;
    let dense = left_kernel(&m.to_int_matrix())?;
    let basis = dense.iter().map(|row| FormalCombination::from_dense(row)).collect();
    Ok(RelationLattice { basis, dense, classes: m.row_count() })
}

/// True iff the combination's character vanishes identically.
pub fn is_brauer_relation(g: &FiniteGroup, r: &FormalCombination) -> Result<bool> {
    Ok(combination_character(g, r)?.is_zero())
}

/// Generator of `I = dZ`, the ideal of integers occurring as `n_G`.
pub fn coefficient_ideal(g: &FiniteGroup) -> Result<usize> {
    Ok(relation_lattice(g)?.coefficient_ideal())
}

/// Lifts a Brauer relation along a quotient map: each class term
/// `n_U * U` becomes `n_U` on the class of the full preimage of `U`.
/// The whole-group coefficient is preserved.
pub fn lift_relation(phi: &crate::group::Homomorphism, r_q: &FormalCombination) -> Result<FormalCombination> {
    let q = phi.target();
    if !is_brauer_relation(q, r_q)? {
        return Err(Error::NotARelation);
    }
    let g = phi.source();
    let q_classes = q.subgroup_classes();
    let g_classes = g.subgroup_classes();
    let mut out = FormalCombination::zero();
    for (class, coeff) in r_q.terms() {
        let pre = phi.preimage(&q_classes.class(class).representative);
        let target = g_classes
            .class_of(&pre)
            .ok_or_else(|| Error::Internal("preimage not found among subgroups".into()))?;
        out.add_term(target, coeff);
    }
    Ok(out)
}

/// Parameters of the final normal form `C_l : C_{p^k}` with faithful
/// action: distinct primes with `p^k` dividing `l - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BaseCaseParams {
    pub l: usize,
    pub p: usize,
    pub k: u32,
}

impl BaseCaseParams {
    pub fn new(l: usize, p: usize, k: u32) -> Result<Self> {
        if !group::is_prime(l) || !group::is_prime(p) {
            return Err(Error::InvalidBaseParams(format!("l = {l} and p = {p} must be prime")));
        }
        if l == p {
            return Err(Error::InvalidBaseParams("l and p must be distinct".into()));
        }
        if k == 0 {
            return Err(Error::InvalidBaseParams("k must be positive".into()));
        }
        let pk = p.pow(k);
        if (l - 1) % pk != 0 {
            return Err(Error::InvalidBaseParams(format!(
                "p^k = {pk} does not divide l - 1 = {}; no faithful action exists",
                l - 1
            )));
        }
        Ok(BaseCaseParams { l, p, k })
    }

    pub fn prime_power(&self) -> usize {
        self.p.pow(self.k)
    }
}

/// The base relation `C_{p^(k-1)} - p C_{p^k} - (C_l : C_{p^(k-1)}) + p G`
/// in a group of the shape `C_l : C_{p^k}` with faithful action. The
/// whole-group coefficient is exactly `p`.
pub fn base_relation(g: &FiniteGroup, params: BaseCaseParams) -> Result<FormalCombination> {
    let BaseCaseParams { l, p, .. } = params;
    let pk = params.prime_power();
    if g.order() != l * pk {
        return Err(Error::NotBaseCaseShape(format!(
            "order {} is not l * p^k = {}",
            g.order(),
            l * pk
        )));
    }
    let core = g.p_residual(p);
    if core.order() != l || !core.is_cyclic(g) {
        return Err(Error::NotBaseCaseShape(format!(
            "p-residual has order {}, expected a cyclic C_{l}",
            core.order()
        )));
    }
    let sylow = g.sylow_subgroup(p);
    if !sylow.is_cyclic(g) {
        return Err(Error::NotBaseCaseShape("Sylow p-subgroup is not cyclic".into()));
    }
    let kernel = g.conjugation_kernel(&sylow, &core)?;
    if kernel.order() != 1 {
        return Err(Error::NotBaseCaseShape(format!(
            "action kernel has order {}; the action is not faithful",
            kernel.order()
        )));
    }

    // the index-p subgroup of the cyclic Sylow: elements of order dividing p^(k-1)
    let sub_pk = pk / p;
    let sylow_sub = Subgroup::from_sorted_unchecked(
        sylow.members().filter(|&x| sub_pk % g.element_order(x) == 0).collect(),
    );
    debug_assert_eq!(sylow_sub.order(), sub_pk);
    let middle = g.generated_subgroup(core.members().chain(sylow_sub.members()));
    debug_assert_eq!(middle.order(), l * sub_pk);

    let classes = g.subgroup_classes();
    let class_of = |s: &Subgroup| {
        classes
            .class_of(s)
            .ok_or_else(|| Error::Internal("subgroup missing from enumeration".into()))
    };
    let rel = FormalCombination::from_terms([
        (class_of(&sylow_sub)?, 1),
        (class_of(&sylow)?, -(p as i64)),
        (class_of(&middle)?, -1),
        (classes.group_class_id(), p as i64),
    ]);
    debug_assert!(is_brauer_relation(g, &rel)?);
    Ok(rel)
}

/// Which reduction the recursive construction took, in order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolomonStep {
    /// Non-cyclic Sylow: quotient by `C * Frattini(P)`.
    FrattiniQuotient,
    /// Non-faithful action: quotient by the kernel of `P` acting on `C`.
    ActionKernelQuotient,
    /// `|C|` not a prime power: quotient by a Sylow factor of `C`.
    CoreFactorQuotient,
    /// `|C| = l^k`, `k > 1`: quotient by the index-`l` subgroup of `C`.
    CoreShrinkQuotient,
    /// The final normal form `C_l : C_{p^k}`, handled by [`base_relation`].
    BaseCase,
    /// Outside the normal form (elementary abelian p-groups and safety
    /// guards): extract a minimal witness from the relation lattice.
    LatticeFallback,
}

/// Constructively produces a Brauer relation with `n_G = p` for a
/// p-quasi-elementary non-cyclic group, by induction on the order:
/// quotient along a chain of normal subgroups until the group has the
/// shape `C_l : C_{p^k}` with faithful action, take the base relation
/// there, and lift it back step by step.
pub fn solomon_relation(g: &FiniteGroup) -> Result<FormalCombination> {
    solomon_relation_traced(g).map(|(rel, _)| rel)
}

/// Same as [`solomon_relation`], also reporting the reductions taken.
pub fn solomon_relation_traced(g: &FiniteGroup) -> Result<(FormalCombination, Vec<SolomonStep>)> {
    let p = match classify(g) {
        Classification::Cyclic => return Err(Error::CyclicGroup),
        Classification::NotQuasiElementary => return Err(Error::NotQuasiElementary),
        Classification::PQuasiElementary { p, .. } => p,
    };
    let mut steps = Vec::new();
    let rel = solomon_rec(g, p, &mut steps)?;
    let ng = rel.group_coefficient(g);
    if ng != p as i64 {
        return Err(Error::Internal(format!("witness has n_G = {ng}, expected {p}")));
    }
    debug_assert!(is_brauer_relation(g, &rel)?);
    Ok((rel, steps))
}

fn solomon_rec(g: &FiniteGroup, p: usize, steps: &mut Vec<SolomonStep>) -> Result<FormalCombination> {
    let core = g.p_residual(p);
    let sylow = g.sylow_subgroup(p);

    if !sylow.is_cyclic(g) {
        let frattini = g.frattini_subgroup(&sylow, p)?;
        let n = g.generated_subgroup(core.members().chain(frattini.members()));
        if n.order() > 1 {
            if let Some(rel) =
                quotient_recurse(g, &n, p, steps, SolomonStep::FrattiniQuotient)?
            {
                return Ok(rel);
            }
        }
        // elementary abelian p-group: outside the proof's final form
        steps.push(SolomonStep::LatticeFallback);
        return lattice_witness(g, p);
    }

    if core.order() > 1 {
        let kernel = g.conjugation_kernel(&sylow, &core)?;
        if kernel.order() > 1 {
            if let Some(rel) =
                quotient_recurse(g, &kernel, p, steps, SolomonStep::ActionKernelQuotient)?
            {
                return Ok(rel);
            }
            steps.push(SolomonStep::LatticeFallback);
            return lattice_witness(g, p);
        }

        let primes = group::prime_divisors(core.order());
        if primes.len() > 1 {
            // C = U1 x U2: at least one Sylow factor gives a non-cyclic quotient
            for q in primes {
                let factor = cyclic_sylow_factor(g, &core, q);
                if let Some(rel) =
                    quotient_recurse(g, &factor, p, steps, SolomonStep::CoreFactorQuotient)?
                {
                    return Ok(rel);
                }
            }
            steps.push(SolomonStep::LatticeFallback);
            return lattice_witness(g, p);
        }

        let l = primes[0];
        if core.order() > l {
            // shrink C_{l^k} by its subgroup of index l
            let shrink = Subgroup::from_sorted_unchecked(
                core.members()
                    .filter(|&x| (core.order() / l) % g.element_order(x) == 0)
                    .collect(),
            );
            if let Some(rel) =
                quotient_recurse(g, &shrink, p, steps, SolomonStep::CoreShrinkQuotient)?
            {
                return Ok(rel);
            }
            steps.push(SolomonStep::LatticeFallback);
            return lattice_witness(g, p);
        }

        // C of prime order, P cyclic, faithful action: the base case
        let k = sylow.order().ilog(p);
        if let Ok(params) = BaseCaseParams::new(l, p, k) {
            if let Ok(rel) = base_relation(g, params) {
                steps.push(SolomonStep::BaseCase);
                return Ok(rel);
            }
        }
    }

    steps.push(SolomonStep::LatticeFallback);
    lattice_witness(g, p)
}

/// Quotient by `n_sub`, recurse, lift. Returns `None` when the quotient
/// comes out cyclic, which the proof's reductions rule out; callers then
/// fall back.
fn quotient_recurse(
    g: &FiniteGroup,
    n_sub: &Subgroup,
    p: usize,
    steps: &mut Vec<SolomonStep>,
    step: SolomonStep,
) -> Result<Option<FormalCombination>> {
    let phi = g.quotient(n_sub)?;
    if phi.target().is_cyclic() {
        return Ok(None);
    }
    steps.push(step);
    let rel_q = solomon_rec(phi.target(), p, steps)?;
    Ok(Some(lift_relation(&phi, &rel_q)?))
}

/// The Sylow q-subgroup of a cyclic normal subgroup: all members of
/// q-power order. Characteristic in `c`, hence normal in `g`.
fn cyclic_sylow_factor(g: &FiniteGroup, c: &Subgroup, q: usize) -> Subgroup {
    Subgroup::from_sorted_unchecked(
        c.members().filter(|&x| group::is_power_of(g.element_order(x), q)).collect(),
    )
}

fn lattice_witness(g: &FiniteGroup, p: usize) -> Result<FormalCombination> {
    let lattice = relation_lattice(g)?;
    let d = lattice.coefficient_ideal();
    if d != p {
        return Err(Error::Internal(format!(
            "lattice ideal {d} disagrees with expected {p}"
        )));
    }
    lattice.with_group_coefficient(p as i64)
}

/// The alternating sum `S = sum over classes of H ⊇ C of n_H * [G:H]`,
/// where `C` is the cyclic normal p'-subgroup and `[G:H] = [P:P_H]` for
/// such `H`. For every Brauer relation `S = 0`; every term except the
/// `H = G` one is divisible by `p`, which forces `p | n_G`.
pub fn mackey_obstruction(g: &FiniteGroup, r: &FormalCombination, p: usize) -> Result<i64> {
    let core = g.p_residual(p);
    if !core.is_cyclic(g) {
        return Err(Error::NotQuasiElementary);
    }
    let classes = g.subgroup_classes();
    let mut sum: i64 = 0;
    for (class, coeff) in r.terms() {
        let h = &classes.class(class).representative;
        if core.is_subset_of(h) {
            let index = (g.order() / h.order()) as i64;
            let term = coeff.checked_mul(index).ok_or(Error::Overflow)?;
            sum = sum.checked_add(term).ok_or(Error::Overflow)?;
        }
    }
    Ok(sum)
}

fn gcd64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd64(b, a % b)
    }
}

/// Extended gcd: returns `(g, x, y)` with `x*a + y*b = g` and `g` having
/// the sign that makes it positive.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}
