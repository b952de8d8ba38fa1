//! The symbolic *-algebra on the unitary `u` and the isometries `w_m`,
//! spanned by the canonical monomials `u^a w_m w_n* u^-b`.
//!
//! The defining relations are
//!
//! ```text
//! w_m w_n = w_{m n}          w_m u = u^m w_m
//! w_p* w_q = w_q w_p*        (p, q distinct primes)
//! w_p* u^k w_p = 0           (p prime, 1 <= k < p)
//! ```
//!
//! Because `w_m u = u^m w_m` forces `u^{a + t m} w_m = u^a w_m u^t`, the
//! tuples `(a, m, n, b)` and `(a + t m, m, n, b + t n)` denote the same
//! element; the canonical representative takes `0 <= a < m`. Products of
//! canonical monomials are again a canonical monomial or zero, in closed
//! form, so a general element is a finite linear combination with
//! Gaussian-rational coefficients and multiplication extends bilinearly.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::laurent::{GaussianRational, LaurentPoly};
use crate::numtheory::{bezout, canonical_residue, gcd_lcm, Positive};
use crate::product_system::{CompactOp, FiberElement};

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

/// The canonical monomial `u^a w_m w_n* u^-b` with `0 <= a < m`.
///
/// Constructors canonicalize, so two `Monomial` values compare equal exactly
/// when they denote the same algebra element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    a: BigInt,
    m: Positive,
    n: Positive,
    b: BigInt,
}

impl Monomial {
    /// Builds the monomial `u^a w_m w_n* u^-b`, reducing `(a, b)` to the
    /// canonical representative of the shift equivalence
    /// `(a, b) ~ (a + t m, b + t n)`.
    pub fn new(a: impl Into<BigInt>, m: Positive, n: Positive, b: impl Into<BigInt>) -> Self {
        let (r, t) = canonical_residue(&a.into(), &m);
        let b = b.into() - t * n.value();
        Monomial { a: r, m, n, b }
    }

    pub fn identity() -> Self {
        Monomial::new(0, Positive::one(), Positive::one(), 0)
    }

    pub fn u() -> Self {
        Monomial::new(1, Positive::one(), Positive::one(), 0)
    }

    pub fn u_star() -> Self {
        Monomial::new(-1, Positive::one(), Positive::one(), 0)
    }

    pub fn u_pow(k: impl Into<BigInt>) -> Self {
        Monomial::new(k, Positive::one(), Positive::one(), 0)
    }

    pub fn w(m: Positive) -> Self {
        Monomial::new(0, m, Positive::one(), 0)
    }

    pub fn w_star(n: Positive) -> Self {
        Monomial::new(0, Positive::one(), n, 0)
    }

    /// `w_m w_m*` at level `m`, the range projection of `w_m`.
    pub fn projection(m: Positive) -> Self {
        Monomial::new(0, m.clone(), m, 0)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn m(&self) -> &Positive {
        &self.m
    }

    pub fn n(&self) -> &Positive {
        &self.n
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_zero() && self.m.is_one() && self.n.is_one() && self.b.is_zero()
    }

    /// The adjoint `(u^a w_m w_n* u^-b)* = u^b w_n w_m* u^-a`.
    pub fn star(&self) -> Monomial {
        Monomial::new(
            self.b.clone(),
            self.n.clone(),
            self.m.clone(),
            self.a.clone(),
        )
    }

    /// The closed-form product of canonical monomials; `None` is zero.
    ///
    /// With `self = u^a w_m w_n* u^-b` and `other = u^c w_p w_q* u^-d`, set
    /// `l = c - b` and `g = gcd(n, p)`. The product vanishes unless `g | l`;
    /// otherwise, for any witness `l/g = x*(n/g) - y*(p/g)`,
    ///
    /// ```text
    /// result = u^{a + m x} w_{m p/g} w_{q n/g}* u^{-(d + q y)}
    /// ```
    ///
    /// and the result does not depend on the witness. The canonical Bezout
    /// pair is used here; [`Monomial::mul_with_shift`] exposes the other
    /// witnesses for cross-checking.
    pub fn mul(&self, other: &Monomial) -> Option<Monomial> {
        self.mul_impl(other, &BigInt::zero())
    }

    /// Same product computed with the Bezout witness shifted `t` steps along
    /// the solution family; the canonical result is identical for every `t`.
    pub fn mul_with_shift(&self, other: &Monomial, t: impl Into<BigInt>) -> Option<Monomial> {
        self.mul_impl(other, &t.into())
    }

    fn mul_impl(&self, other: &Monomial, witness_shift: &BigInt) -> Option<Monomial> {
        let l = &other.a - &self.b;
        let (g, _) = gcd_lcm(&self.n, &other.m);
        if !l.is_multiple_of(g.value()) {
            return None;
        }
        let n1 = self.n.exact_div(&g).expect("gcd divides");
        let p1 = other.m.exact_div(&g).expect("gcd divides");
        let l1 = &l / g.value();
        let pair = bezout(&n1, &p1).expect("n/g and p/g are coprime");
        // l1 = x*n1 - y*p1, shifted along the kernel (p1, n1) of the form.
        let x = &l1 * &pair.alpha + witness_shift * p1.value();
        let y = &l1 * &pair.beta + witness_shift * n1.value();
        Some(Monomial::new(
            &self.a + self.m.value() * &x,
            &self.m * &p1,
            &other.n * &n1,
            &other.b + other.n.value() * &y,
        ))
    }
}

/// Order monomials by `(m, n, a, b)`; this is the printing order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.m
            .cmp(&other.m)
            .then_with(|| self.n.cmp(&other.n))
            .then_with(|| self.a.cmp(&other.a))
            .then_with(|| self.b.cmp(&other.b))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.a.is_zero() {
            parts.push(if self.a.is_one() {
                "u".to_string()
            } else {
                format!("u^{}", self.a)
            });
        }
        if !self.m.is_one() {
            parts.push(format!("w_{}", self.m));
        }
        if !self.n.is_one() {
            parts.push(format!("w_{}*", self.n));
        }
        let bp = -self.b.clone();
        if !bp.is_zero() {
            parts.push(if bp.is_one() {
                "u".to_string()
            } else {
                format!("u^{bp}")
            });
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

/// A finite linear combination of canonical monomials with nonzero
/// Gaussian-rational coefficients. The zero element has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Element {
    pub fn zero() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Element::from(Monomial::identity())
    }

    pub fn scalar(c: GaussianRational) -> Self {
        Element::with_coeff(Monomial::identity(), c)
    }

    pub fn with_coeff(mono: Monomial, c: GaussianRational) -> Self {
        let mut out = Element::zero();
        out.insert_add(mono, c);
        out
    }

    fn insert_add(&mut self, mono: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in the canonical `(m, n, a, b)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Monomial) -> GaussianRational {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Bilinear extension of the monomial product with like-term collection.
    pub fn mul(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                if let Some(prod) = m1.mul(m2) {
                    out.insert_add(prod, c1 * c2);
                }
            }
        }
        out
    }

    /// The involution: conjugate coefficients, star each monomial, and
    /// reverse nothing else (monomial star already swaps the two legs).
    pub fn star(&self) -> Element {
        let mut out = Element::zero();
        for (m, c) in self.terms() {
            out.insert_add(m.star(), c.conj());
        }
        out
    }

    /// `self^k` for `k >= 0` by repeated multiplication.
    pub fn pow(&self, k: u64) -> Element {
        let mut acc = Element::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

impl From<Monomial> for Element {
    fn from(mono: Monomial) -> Self {
        Element::with_coeff(mono, GaussianRational::one())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, c) in self.terms() {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            let coeff = c.to_string();
            if c.is_one() {
                write!(f, "{mono}")?;
            } else if mono.is_identity() {
                write!(f, "{coeff}")?;
            } else if coeff.contains('+') || (coeff.contains('-') && !coeff.starts_with('-')) {
                write!(f, "({coeff}) {mono}")?;
            } else {
                write!(f, "{coeff} {mono}")?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Words in the generators
// ---------------------------------------------------------------------------

/// A single generator occurrence in a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorToken {
    U,
    UStar,
    W(Positive),
    WStar(Positive),
}

impl GeneratorToken {
    pub fn monomial(&self) -> Monomial {
        match self {
            GeneratorToken::U => Monomial::u(),
            GeneratorToken::UStar => Monomial::u_star(),
            GeneratorToken::W(m) => Monomial::w(m.clone()),
            GeneratorToken::WStar(n) => Monomial::w_star(n.clone()),
        }
    }
}

/// Reduces a word in the generators to its canonical element: the fold of
/// the closed-form monomial product, starting from the identity. The empty
/// word reduces to the identity.
pub fn word_reduce(word: &[GeneratorToken]) -> Element {
    let mut acc = Some(Monomial::identity());
    for token in word {
        acc = acc.and_then(|m| m.mul(&token.monomial()));
    }
    match acc {
        Some(m) => Element::from(m),
        None => Element::zero(),
    }
}

// ---------------------------------------------------------------------------
// Bridges from the product system
// ---------------------------------------------------------------------------

/// The fiber-to-word bridge of the universal representation:
/// `Z^k 1_m -> u^k w_m`, extended linearly.
pub fn fiber_to_word(x: &FiberElement) -> Element {
    let mut out = Element::zero();
    for (k, c) in x.poly().terms() {
        out.insert_add(
            Monomial::new(k.clone(), x.level().clone(), Positive::one(), 0),
            c.clone(),
        );
    }
    out
}

/// A Laurent polynomial viewed in the level-one fiber: `Z^k -> u^k`.
pub fn poly_to_word(f: &LaurentPoly) -> Element {
    fiber_to_word(&FiberElement::new(Positive::one(), f.clone()))
}

/// The compact-operator-to-word bridge:
/// `theta_{x, y} -> word(x) * word(y)*`, summed over the rank-one terms.
pub fn compact_to_word(op: &CompactOp) -> Element {
    let mut out = Element::zero();
    for t in op.terms() {
        let left = fiber_to_word(&FiberElement::new(op.level().clone(), t.left().clone()));
        let right = fiber_to_word(&FiberElement::new(op.level().clone(), t.right().clone()));
        out = out.add(&left.mul(&right.star()));
    }
    out
}
