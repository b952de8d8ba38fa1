//! The product system over the multiplicative integers with fibers C(T):
//! fiber elements `f * 1_m`, the bimodule actions and inner products, the
//! cross-fiber product, and the calculus of generalized compact operators
//! (rank-one operators, composition, level embeddings and the Nica product).
//!
//! A fiber element of level `m` is a Laurent polynomial tagged with `m`; the
//! right action twists through `inflate`, the inner product is
//! `transfer(m, f* g)`, and the product of levels `m` and `r` lands in level
//! `m*r` as `f * inflate(m, g)`.
//!
//! Compact operators are kept as uncanonicalized lists of rank-one terms;
//! equality is decided by applying both sides to the basis window
//! `{ Z^s : |s| <= 2*maxexp + level }`, which is exact because every
//! operator in scope shifts Fourier support by a bounded amount.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::laurent::LaurentPoly;
use crate::numtheory::{bezout, gcd_lcm, Positive};

/// Error for binary operations on fibers of different levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelMismatch {
    pub left: Positive,
    pub right: Positive,
}

impl fmt::Display for LevelMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "level mismatch: {} vs {}", self.left, self.right)
    }
}

impl std::error::Error for LevelMismatch {}

fn check_levels(a: &Positive, b: &Positive) -> Result<(), LevelMismatch> {
    if a == b {
        Ok(())
    } else {
        Err(LevelMismatch {
            left: a.clone(),
            right: b.clone(),
        })
    }
}

// ---------------------------------------------------------------------------
// Fiber elements
// ---------------------------------------------------------------------------

/// An element `poly * 1_m` of the fiber at level `m`. Level one is the
/// standard bimodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberElement {
    level: Positive,
    poly: LaurentPoly,
}

impl FiberElement {
    pub fn new(level: Positive, poly: LaurentPoly) -> Self {
        FiberElement { level, poly }
    }

    /// The vacuum-like generator `1_m`.
    pub fn unit(level: Positive) -> Self {
        FiberElement::new(level, LaurentPoly::one())
    }

    /// `Z^k * 1_m`.
    pub fn monomial(level: Positive, k: impl Into<BigInt>) -> Self {
        FiberElement::new(level, LaurentPoly::z_pow(k))
    }

    pub fn level(&self) -> &Positive {
        &self.level
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn add(&self, other: &FiberElement) -> Result<FiberElement, LevelMismatch> {
        check_levels(&self.level, &other.level)?;
        Ok(FiberElement::new(
            self.level.clone(),
            self.poly.add(&other.poly),
        ))
    }

    /// The right action of the coefficient algebra: `(f 1_m) . g = f*inflate(m, g) 1_m`.
    pub fn right_action(&self, g: &LaurentPoly) -> FiberElement {
        FiberElement::new(self.level.clone(), self.poly.mul(&g.inflate(&self.level)))
    }

    /// The left action: plain pointwise multiplication on the polynomial part.
    pub fn left_action(&self, g: &LaurentPoly) -> FiberElement {
        FiberElement::new(self.level.clone(), g.mul(&self.poly))
    }

    /// The coefficient-algebra-valued inner product `transfer(m, f* g)`.
    pub fn inner(&self, other: &FiberElement) -> Result<LaurentPoly, LevelMismatch> {
        check_levels(&self.level, &other.level)?;
        Ok(self.poly.star().mul(&other.poly).transfer(&self.level))
    }

    /// The cross-fiber product landing in level `m*r`:
    /// `(f 1_m)(g 1_r) = f*inflate(m, g) 1_{m r}`.
    pub fn fiber_mul(&self, other: &FiberElement) -> FiberElement {
        FiberElement::new(
            &self.level * &other.level,
            self.poly.mul(&other.poly.inflate(&self.level)),
        )
    }
}

// ---------------------------------------------------------------------------
// Compact operators
// ---------------------------------------------------------------------------

/// The rank-one operator `z 1_m -> left * cond_exp(m, right* z) 1_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOne {
    level: Positive,
    left: LaurentPoly,
    right: LaurentPoly,
}

impl RankOne {
    pub fn new(level: Positive, left: LaurentPoly, right: LaurentPoly) -> Self {
        RankOne { level, left, right }
    }

    /// `theta_{Z^i 1_m, Z^k 1_m}`, the monomial rank-one.
    pub fn monomial(level: Positive, i: impl Into<BigInt>, k: impl Into<BigInt>) -> Self {
        RankOne::new(level, LaurentPoly::z_pow(i), LaurentPoly::z_pow(k))
    }

    pub fn level(&self) -> &Positive {
        &self.level
    }

    pub fn left(&self) -> &LaurentPoly {
        &self.left
    }

    pub fn right(&self) -> &LaurentPoly {
        &self.right
    }

    pub fn apply(&self, z: &FiberElement) -> Result<FiberElement, LevelMismatch> {
        check_levels(&self.level, z.level())?;
        let mid = self.right.star().mul(z.poly()).cond_exp(&self.level);
        Ok(FiberElement::new(self.level.clone(), self.left.mul(&mid)))
    }
}

/// A finite sum of rank-one operators, all at the same level.
#[derive(Clone, Debug)]
pub struct CompactOp {
    level: Positive,
    terms: Vec<RankOne>,
}

impl CompactOp {
    pub fn zero(level: Positive) -> Self {
        CompactOp {
            level,
            terms: Vec::new(),
        }
    }

    pub fn from_rank_one(term: RankOne) -> Self {
        CompactOp {
            level: term.level.clone(),
            terms: vec![term],
        }
    }

    pub fn from_terms(level: Positive, terms: Vec<RankOne>) -> Result<Self, LevelMismatch> {
        for t in &terms {
            check_levels(&level, &t.level)?;
        }
        Ok(CompactOp { level, terms })
    }

    pub fn level(&self) -> &Positive {
        &self.level
    }

    pub fn terms(&self) -> &[RankOne] {
        &self.terms
    }

    pub fn add(&self, other: &CompactOp) -> Result<CompactOp, LevelMismatch> {
        check_levels(&self.level, &other.level)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(CompactOp {
            level: self.level.clone(),
            terms,
        })
    }

    pub fn apply(&self, z: &FiberElement) -> Result<FiberElement, LevelMismatch> {
        check_levels(&self.level, z.level())?;
        let mut acc = LaurentPoly::zero();
        for t in &self.terms {
            acc = acc.add(t.apply(z)?.poly());
        }
        Ok(FiberElement::new(self.level.clone(), acc))
    }

    /// Operator composition `self . other`, applying `other` first.
    ///
    /// On rank-one terms the product stays rank-one:
    /// `theta_{x, y} theta_{x', y'} = theta_{x * cond_exp(m, y* x'), y'}`.
    pub fn compose(&self, other: &CompactOp) -> Result<CompactOp, LevelMismatch> {
        check_levels(&self.level, &other.level)?;
        let mut terms = Vec::new();
        for s in &self.terms {
            for t in &other.terms {
                let mid = s.right.star().mul(&t.left).cond_exp(&self.level);
                let left = s.left.mul(&mid);
                if !left.is_zero() && !t.right.is_zero() {
                    terms.push(RankOne::new(self.level.clone(), left, t.right.clone()));
                }
            }
        }
        Ok(CompactOp {
            level: self.level.clone(),
            terms,
        })
    }

    /// The embedding of a level-`m` operator into level `m*r` induced by the
    /// product-system isomorphisms. A rank-one `theta_{x 1_m, y 1_m}` acts at
    /// the higher level as `z -> x * cond_exp(m, y* z)`, which expands into
    /// the `r` rank-one terms `theta_{x Z^{m s}, y Z^{m s}}`, `0 <= s < r`.
    pub fn embed(&self, r: &Positive) -> CompactOp {
        let level = &self.level * r;
        let mut terms = Vec::new();
        for t in &self.terms {
            let mut s = BigInt::zero();
            while &s < r.value() {
                let shift = LaurentPoly::z_pow(self.level.value() * &s);
                terms.push(RankOne::new(
                    level.clone(),
                    t.left.mul(&shift),
                    t.right.mul(&shift),
                ));
                s += 1;
            }
        }
        CompactOp { level, terms }
    }

    /// The largest `|exponent|` appearing in any leg; zero when empty.
    pub fn max_abs_exponent(&self) -> BigInt {
        self.terms
            .iter()
            .flat_map(|t| [t.left.max_abs_exponent(), t.right.max_abs_exponent()])
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

/// Decides equality of two compact operators by applying both sides to the
/// basis window `{Z^s 1_m : |s| <= 2*maxexp + level}`. Operators at
/// different levels are never equal.
pub fn compact_eq(a: &CompactOp, b: &CompactOp) -> bool {
    if a.level != b.level {
        return false;
    }
    let bound = BigInt::from(2) * a.max_abs_exponent().max(b.max_abs_exponent()) + a.level.value();
    let mut s = -bound.clone();
    while s <= bound {
        let v = FiberElement::monomial(a.level.clone(), s.clone());
        let lhs = a.apply(&v).expect("window vector has the operator level");
        let rhs = b.apply(&v).expect("window vector has the operator level");
        if lhs != rhs {
            return false;
        }
        s += 1;
    }
    true
}

/// The Nica product of compact operators at levels `m` and `n`: both are
/// embedded into the join level `lcm(m, n)` and composed there. On monomial
/// rank-ones the closed form is used: with `d = gcd(m, n)` and the canonical
/// Bezout pair `1 = alpha*(m/d) - beta*(n/d)`,
///
/// ```text
/// theta_{Z^i, Z^k}@m . theta_{Z^l, Z^j}@n
///     = 0                                                   if d does not divide l - k,
///     = theta_{Z^{i + m alpha (l-k)/d}, Z^{j + n beta (l-k)/d}}@lcm(m,n)   otherwise.
/// ```
pub fn nica_product(s: &CompactOp, t: &CompactOp) -> CompactOp {
    let m = &s.level;
    let n = &t.level;
    let (d, join) = gcd_lcm(m, n);
    let mp = m.exact_div(&d).expect("gcd divides");
    let np = n.exact_div(&d).expect("gcd divides");
    let pair = bezout(&mp, &np).expect("m/d and n/d are coprime");

    let mut terms = Vec::new();
    for s_term in &s.terms {
        for (i, ci) in s_term.left.terms() {
            for (k, ck) in s_term.right.terms() {
                let cs = ci * &ck.conj();
                for t_term in &t.terms {
                    for (l, cl) in t_term.left.terms() {
                        for (j, cj) in t_term.right.terms() {
                            let diff = l - k;
                            if !diff.is_multiple_of(d.value()) {
                                continue;
                            }
                            let q = &diff / d.value();
                            let coeff = &cs * &(cl * &cj.conj());
                            if coeff.is_zero() {
                                continue;
                            }
                            let left_exp = i + m.value() * &pair.alpha * &q;
                            let right_exp = j + n.value() * &pair.beta * &q;
                            terms.push(RankOne::new(
                                join.clone(),
                                LaurentPoly::monomial(left_exp, coeff),
                                LaurentPoly::z_pow(right_exp),
                            ));
                        }
                    }
                }
            }
        }
    }
    CompactOp { level: join, terms }
}

/// The left action of `f` at level `m` written as a compact operator:
/// `sum_{k=0}^{m-1} theta_{f Z^k 1_m, Z^k 1_m}`. Applying the result equals
/// pointwise multiplication by `f` on the whole fiber.
pub fn left_action_as_compact(m: &Positive, f: &LaurentPoly) -> CompactOp {
    let mut terms = Vec::new();
    let mut k = BigInt::zero();
    while &k < m.value() {
        let zk = LaurentPoly::z_pow(k.clone());
        terms.push(RankOne::new(m.clone(), f.mul(&zk), zk));
        k += 1;
    }
    CompactOp {
        level: m.clone(),
        terms,
    }
}
