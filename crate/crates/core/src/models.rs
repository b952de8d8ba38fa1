//! Exact representation oracles for the word algebra.
//!
//! Two faithful-by-construction basis models are implemented:
//!
//! * the *integer* model, where `u` shifts the basis of l^2(Z) by one and
//!   `w_m` multiplies the index by `m`; this realizes the Cuntz relations,
//!   so zero here decides equality in the quotient algebra Q_N;
//! * the *Fock* model on basis vectors `Z^j 1_r` indexed by `Z x N^x`,
//!   which separates the Nica-Toeplitz algebra from its quotient.
//!
//! Every canonical monomial acts in both models as a partial injection whose
//! domain is a congruence class and whose action is affine, so products of
//! monomials correspond to compositions of maps and the zero-or-not question
//! for a linear combination reduces to finitely many residue classes: within
//! one class, two distinct affine maps agree in at most one point, hence a
//! combination vanishes on the class exactly when the coefficients of each
//! distinct affine map sum to zero.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::laurent::GaussianRational;
use crate::numtheory::{divisors, mod_inverse, Positive};
use crate::word_algebra::{Element, Monomial};

// ---------------------------------------------------------------------------
// Partial affine maps
// ---------------------------------------------------------------------------

/// An injective partial map on the integers: the domain is the congruence
/// class `{k : k = offset (mod modulus)}` and the action is
/// `k -> num*(k - offset)/modulus + shift`.
///
/// The representation is normalized (`0 <= offset < modulus`, and `shift` is
/// the image of the offset point), so two values compare equal exactly when
/// they are the same partial map. `num/modulus` is not reduced: the modulus
/// carries the domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialAffineMap {
    modulus: Positive,
    offset: BigInt,
    num: Positive,
    shift: BigInt,
}

impl PartialAffineMap {
    pub fn new(modulus: Positive, offset: BigInt, num: Positive, shift: BigInt) -> Self {
        let offset = offset.mod_floor(modulus.value());
        PartialAffineMap {
            modulus,
            offset,
            num,
            shift,
        }
    }

    /// The identity map `k -> k` on all of `Z`.
    pub fn identity() -> Self {
        PartialAffineMap::new(
            Positive::one(),
            BigInt::zero(),
            Positive::one(),
            BigInt::zero(),
        )
    }

    /// The action of the canonical monomial `u^a w_m w_n* u^-b` on the
    /// integer basis: defined on `{k = b (mod n)}`, sending
    /// `k -> m*(k - b)/n + a`.
    pub fn from_monomial(mono: &Monomial) -> Self {
        let n = mono.n().clone();
        let (offset, t) = crate::numtheory::canonical_residue(mono.b(), &n);
        let shift = mono.a() - t * mono.m().value();
        PartialAffineMap {
            modulus: n,
            offset,
            num: mono.m().clone(),
            shift,
        }
    }

    pub fn modulus(&self) -> &Positive {
        &self.modulus
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    pub fn num(&self) -> &Positive {
        &self.num
    }

    pub fn shift(&self) -> &BigInt {
        &self.shift
    }

    pub fn contains(&self, k: &BigInt) -> bool {
        (k - &self.offset).is_multiple_of(self.modulus.value())
    }

    pub fn apply(&self, k: &BigInt) -> Option<BigInt> {
        if !self.contains(k) {
            return None;
        }
        let steps = (k - &self.offset) / self.modulus.value();
        Some(self.num.value() * steps + &self.shift)
    }

    /// The slope `num/modulus` as a reduced rational.
    pub fn slope(&self) -> BigRational {
        BigRational::new(self.num.value().clone(), self.modulus.value().clone())
    }

    /// The intercept of the affine function extending the map:
    /// `shift - slope*offset`.
    pub fn intercept(&self) -> BigRational {
        BigRational::from_integer(self.shift.clone())
            - self.slope() * BigRational::from_integer(self.offset.clone())
    }

    /// Composition `self . other` (apply `other` first). `None` when the
    /// intersection of `other`'s image with `self`'s domain is empty, which
    /// happens exactly on a gcd-divisibility obstruction.
    pub fn compose(&self, other: &PartialAffineMap) -> Option<PartialAffineMap> {
        // Solve other(k) = self.offset (mod self.modulus) for k in other's
        // domain: writing k = other.offset + other.modulus * t, this is
        // other.num * t = self.offset - other.shift (mod self.modulus).
        let rhs = &self.offset - &other.shift;
        let g = other.num.value().gcd(self.modulus.value());
        if !rhs.is_multiple_of(&g) {
            return None;
        }
        let reduced_mod = Positive::new(self.modulus.value() / &g).expect("positive quotient");
        let inv = mod_inverse(&(other.num.value() / &g), &reduced_mod)
            .expect("reduced factor is invertible");
        let t0 = ((rhs / &g) * inv).mod_floor(reduced_mod.value());

        let modulus = Positive::new(other.modulus.value() * reduced_mod.value())
            .expect("product of positives");
        let offset = &other.offset + other.modulus.value() * &t0;
        let num =
            Positive::new(self.num.value() * other.num.value() / &g).expect("positive quotient");
        let mid = other.num.value() * &t0 + &other.shift;
        let shift = self
            .apply(&mid)
            .expect("midpoint lies in the left domain by construction");
        Some(PartialAffineMap::new(modulus, offset, num, shift))
    }
}

// ---------------------------------------------------------------------------
// The Fock model
// ---------------------------------------------------------------------------

/// A basis vector `Z^j 1_r` of the Fock module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FockBasisIndex {
    pub j: BigInt,
    pub r: Positive,
}

impl FockBasisIndex {
    pub fn new(j: impl Into<BigInt>, r: Positive) -> Self {
        FockBasisIndex { j: j.into(), r }
    }
}

/// The action of a monomial (or a composition of such) on the Fock basis:
/// the first coordinate moves by the wrapped affine map, and the level is
/// scaled by its slope, with `modulus | r` as the level-domain condition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FockMap(PartialAffineMap);

impl FockMap {
    pub fn from_monomial(mono: &Monomial) -> Self {
        FockMap(PartialAffineMap::from_monomial(mono))
    }

    pub fn line(&self) -> &PartialAffineMap {
        &self.0
    }

    pub fn contains(&self, v: &FockBasisIndex) -> bool {
        self.0.contains(&v.j) && v.r.value().is_multiple_of(self.0.modulus.value())
    }

    pub fn apply(&self, v: &FockBasisIndex) -> Option<FockBasisIndex> {
        if !v.r.value().is_multiple_of(self.0.modulus.value()) {
            return None;
        }
        let j = self.0.apply(&v.j)?;
        let r = Positive::new(self.0.num.value() * (v.r.value() / self.0.modulus.value()))
            .expect("scaled level stays positive");
        Some(FockBasisIndex { j, r })
    }

    /// Composition `self . other`; the level bookkeeping composes along the
    /// same gcd as the affine part, so it is carried by the wrapped map.
    pub fn compose(&self, other: &FockMap) -> Option<FockMap> {
        self.0.compose(&other.0).map(FockMap)
    }
}

// ---------------------------------------------------------------------------
// Applying elements to basis vectors
// ---------------------------------------------------------------------------

/// The image of the basis vector `e_k` under `x` in the integer model, as a
/// collected linear combination (sorted by index, zero coefficients dropped).
pub fn apply_integer_basis(x: &Element, k: &BigInt) -> Vec<(BigInt, GaussianRational)> {
    let mut acc: BTreeMap<BigInt, GaussianRational> = BTreeMap::new();
    for (mono, c) in x.terms() {
        if let Some(image) = PartialAffineMap::from_monomial(mono).apply(k) {
            let entry = acc.entry(image).or_insert_with(GaussianRational::zero);
            *entry = &*entry + c;
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// The image of the Fock basis vector `Z^j 1_r` under `x`.
pub fn apply_fock_basis(
    x: &Element,
    v: &FockBasisIndex,
) -> Vec<(FockBasisIndex, GaussianRational)> {
    let mut acc: BTreeMap<FockBasisIndex, GaussianRational> = BTreeMap::new();
    for (mono, c) in x.terms() {
        if let Some(image) = FockMap::from_monomial(mono).apply(v) {
            let entry = acc.entry(image).or_insert_with(GaussianRational::zero);
            *entry = &*entry + c;
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

// ---------------------------------------------------------------------------
// Zero decision procedures
// ---------------------------------------------------------------------------

/// Groups the active maps of one residue class by their affine function and
/// checks that every group's coefficient sum vanishes.
fn class_groups_vanish(maps: &[(PartialAffineMap, GaussianRational)], class: &BigInt) -> bool {
    let mut groups: BTreeMap<(BigRational, BigRational), GaussianRational> = BTreeMap::new();
    for (map, c) in maps {
        if (class - &map.offset).is_multiple_of(map.modulus.value()) {
            let key = (map.slope(), map.intercept());
            let entry = groups.entry(key).or_insert_with(GaussianRational::zero);
            *entry = &*entry + c;
        }
    }
    groups.values().all(GaussianRational::is_zero)
}

fn lcm_of_moduli<'a>(maps: impl Iterator<Item = &'a PartialAffineMap>) -> Positive {
    let l = maps.fold(BigInt::one(), |acc, m| acc.lcm(m.modulus.value()));
    Positive::new(l).expect("lcm of positives")
}

/// Decides `x = 0` in the quotient algebra Q_N via the integer model: for
/// every residue class modulo the lcm of the domain moduli, the active maps
/// are grouped by their affine function and each group must cancel.
///
/// Vanishing in the model always implies the combination annihilates every
/// basis vector; promoting that to zero in the algebra uses that Q_N is
/// simple, so the integer representation is faithful. This is the one
/// imported theorem in the crate.
pub fn is_zero_qn(x: &Element) -> bool {
    if x.is_zero() {
        return true;
    }
    let maps: Vec<(PartialAffineMap, GaussianRational)> = x
        .terms()
        .map(|(m, c)| (PartialAffineMap::from_monomial(m), c.clone()))
        .collect();
    let period = lcm_of_moduli(maps.iter().map(|(m, _)| m));
    let mut class = BigInt::zero();
    while &class < period.value() {
        if !class_groups_vanish(&maps, &class) {
            return false;
        }
        class += 1;
    }
    true
}

/// Decides `x = 0` in the Fock model. The active set of a level `r` depends
/// on `r` only through `gcd(r, N)` where `N` is the lcm of all domain
/// moduli, so it suffices to run the residue-class grouping of the first
/// coordinate once per divisor of `N`, restricted to the monomials whose
/// modulus divides it. (The level image is determined by the slope, so the
/// grouping key needs nothing extra.)
pub fn is_zero_nt(x: &Element) -> bool {
    if x.is_zero() {
        return true;
    }
    let maps: Vec<(PartialAffineMap, GaussianRational)> = x
        .terms()
        .map(|(m, c)| (PartialAffineMap::from_monomial(m), c.clone()))
        .collect();
    let period = lcm_of_moduli(maps.iter().map(|(m, _)| m));
    for level in divisors(&period) {
        let active: Vec<(PartialAffineMap, GaussianRational)> = maps
            .iter()
            .filter(|(m, _)| level.value().is_multiple_of(m.modulus.value()))
            .cloned()
            .collect();
        if active.is_empty() {
            continue;
        }
        let sub_period = lcm_of_moduli(active.iter().map(|(m, _)| m));
        let mut class = BigInt::zero();
        while &class < sub_period.value() {
            if !class_groups_vanish(&active, &class) {
                return false;
            }
            class += 1;
        }
    }
    true
}

/// The algebra in which equality is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    /// The Nica-Toeplitz algebra, separated by the Fock model.
    Nt,
    /// The Cuntz quotient Q_N, separated by the integer model.
    Qn,
}

/// Equality as zero-ness of the difference in the chosen algebra.
/// Equality in the Fock model implies equality in the quotient.
pub fn equal(algebra: Algebra, x: &Element, y: &Element) -> bool {
    let diff = x.sub(y);
    match algebra {
        Algebra::Nt => is_zero_nt(&diff),
        Algebra::Qn => is_zero_qn(&diff),
    }
}
