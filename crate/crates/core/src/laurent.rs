//! An exact model of the circle algebra C(T): Laurent polynomials in the
//! standard unitary generator `Z` with Gaussian-rational coefficients.
//!
//! Besides the *-algebra structure this module carries the three maps the
//! product-system calculus is built from, all acting on Fourier
//! coefficients:
//!
//! * [`LaurentPoly::inflate`] is the endomorphism `f(z) -> f(z^m)`; it sends
//!   the coefficient at `k` to `m*k`.
//! * [`LaurentPoly::transfer`] is the transfer operator
//!   `f(z) -> (1/m) * sum_{w^m = z} f(w)`; a coefficient at `k` survives
//!   exactly when `m | k` and lands at `k/m`.
//! * [`LaurentPoly::cond_exp`] is the conditional expectation onto the range
//!   of `inflate`, the composition of the two; it keeps exactly the
//!   coefficients at exponents divisible by `m`.
//!
//! Averaging over roots of unity would leave the rationals, so the
//! expectation is implemented directly as the Fourier filter the averaging
//! formula reduces to.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::numtheory::Positive;

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

/// An exact complex scalar `re + im*i` with reduced rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussianRational {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_integer(v: i64) -> Self {
        GaussianRational::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn zero() -> Self {
        GaussianRational::from_integer(0)
    }

    pub fn one() -> Self {
        GaussianRational::from_integer(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(GaussianRational {
            re: &self.re / &norm,
            im: -(&self.im / &norm),
        })
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;

    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;

    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;

    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if !self.re.is_zero() {
            fmt_rational(&self.re, f)?;
            if self.im.is_positive() {
                write!(f, "+")?;
            }
        }
        if !self.im.is_zero() {
            if self.im.abs().is_one() {
                if self.im.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                fmt_rational(&self.im, f)?;
            }
            write!(f, "i")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Laurent polynomials
// ---------------------------------------------------------------------------

/// A Laurent polynomial: a finite map from exponents `k` to nonzero
/// Gaussian-rational coefficients. Equality is coefficient-wise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<BigInt, GaussianRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, GaussianRational::one())
    }

    /// The generator `Z`.
    pub fn z() -> Self {
        LaurentPoly::monomial(1, GaussianRational::one())
    }

    /// `Z^k` with unit coefficient.
    pub fn z_pow(k: impl Into<BigInt>) -> Self {
        LaurentPoly::monomial(k, GaussianRational::one())
    }

    /// `c * Z^k`.
    pub fn monomial(k: impl Into<BigInt>, c: GaussianRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k.into(), c);
        }
        LaurentPoly { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BigInt, GaussianRational)>) -> Self {
        let mut out = LaurentPoly::zero();
        for (k, c) in terms {
            out.insert_add(k, c);
        }
        out
    }

    fn insert_add(&mut self, k: BigInt, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(k) {
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
        self.coeffs.is_empty()
    }

    /// The coefficient at exponent `k` (zero when absent).
    pub fn coeff(&self, k: &BigInt) -> GaussianRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &GaussianRational)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// The largest `|k|` over the support; zero for the zero polynomial.
    pub fn max_abs_exponent(&self) -> BigInt {
        self.coeffs
            .keys()
            .map(|k| k.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.insert_add(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k1, c1) in self.terms() {
            for (k2, c2) in other.terms() {
                out.insert_add(k1 + k2, c1 * c2);
            }
        }
        out
    }

    /// The involution: the coefficient `c` at `k` moves to `conj(c)` at `-k`.
    pub fn star(&self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (-k.clone(), c.conj()))
                .collect(),
        }
    }

    /// The endomorphism `f(z) -> f(z^m)`: exponent `k` moves to `m*k`.
    pub fn inflate(&self, m: &Positive) -> LaurentPoly {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (k * m.value(), c.clone()))
                .collect(),
        }
    }

    /// The transfer operator for [`inflate`](Self::inflate): keeps the
    /// coefficients at exponents divisible by `m`, dividing the exponent.
    pub fn transfer(&self, m: &Positive) -> LaurentPoly {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.is_multiple_of(m.value()))
                .map(|(k, c)| (k / m.value(), c.clone()))
                .collect(),
        }
    }

    /// The conditional expectation onto the range of `inflate(m, .)`:
    /// keeps exactly the coefficients at exponents divisible by `m`.
    pub fn cond_exp(&self, m: &Positive) -> LaurentPoly {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.is_multiple_of(m.value()))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::add(self, rhs)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::sub(self, rhs)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

/// Renders in the text syntax `c*Z^k` joined by `+`/`-` with exponents
/// ascending, e.g. `1/2*Z^-3 + i*Z^2`. A coefficient with both a real and an
/// imaginary part prints as two summands. The zero polynomial prints as `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            for (part, imag) in [(c.re(), false), (c.im(), true)] {
                if part.is_zero() {
                    continue;
                }
                let negative = part.is_negative();
                if first {
                    if negative {
                        write!(f, "-")?;
                    }
                    first = false;
                } else if negative {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                let mag = part.abs();
                let scalar = if imag {
                    if mag.is_one() {
                        "i".to_string()
                    } else if mag.denom().is_one() {
                        format!("{}i", mag.numer())
                    } else {
                        format!("{}/{}i", mag.numer(), mag.denom())
                    }
                } else if mag.is_one() && !k.is_zero() {
                    String::new()
                } else if mag.denom().is_one() {
                    format!("{}", mag.numer())
                } else {
                    format!("{}/{}", mag.numer(), mag.denom())
                };
                let var = if k.is_zero() {
                    String::new()
                } else if k.is_one() {
                    "Z".to_string()
                } else {
                    format!("Z^{k}")
                };
                match (scalar.is_empty(), var.is_empty()) {
                    (false, false) => write!(f, "{scalar}*{var}")?,
                    (false, true) => write!(f, "{scalar}")?,
                    (true, false) => write!(f, "{var}")?,
                    (true, true) => unreachable!("a term has a scalar or a variable"),
                }
            }
        }
        Ok(())
    }
}
