//! Divisibility arithmetic on arbitrary-precision integers: gcd/lcm pairs,
//! canonical Bezout witnesses, prime factorization, divisor enumeration and
//! floor-division residue canonicalization.
//!
//! Every rewriting rule in the word algebra bottoms out in one of these
//! functions, so they are kept total and deterministic. Integers are
//! arbitrary precision throughout; exponents of the form `m*alpha*(l-k)/d`
//! grow quickly and must not be able to overflow.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A positive integer, an element of the multiplicative semigroup of
/// positive natural numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Positive(BigInt);

impl Positive {
    /// Wraps `value`, returning `None` unless `value >= 1`.
    pub fn new(value: BigInt) -> Option<Self> {
        if value >= BigInt::one() {
            Some(Positive(value))
        } else {
            None
        }
    }

    pub fn one() -> Self {
        Positive(BigInt::one())
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Exact division: `self / d` when `d` divides `self`, `None` otherwise.
    pub fn exact_div(&self, d: &Positive) -> Option<Positive> {
        let (q, r) = self.0.div_mod_floor(&d.0);
        if r.is_zero() {
            Some(Positive(q))
        } else {
            None
        }
    }
}

impl From<u64> for Positive {
    fn from(value: u64) -> Self {
        assert!(value >= 1, "Positive requires a value >= 1, got {value}");
        Positive(BigInt::from(value))
    }
}

impl From<u32> for Positive {
    fn from(value: u32) -> Self {
        Positive::from(u64::from(value))
    }
}

impl Mul<&Positive> for &Positive {
    type Output = Positive;

    fn mul(self, rhs: &Positive) -> Positive {
        Positive(&self.0 * &rhs.0)
    }
}

impl fmt::Display for Positive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The canonical witness of `1 = alpha*mp - beta*np` for coprime `(mp, np)`.
///
/// The representative is pinned so that repeated calls agree:
/// `0 <= alpha < np` when `np > 1`, and `(alpha, beta) = (1, mp - 1)` when
/// `np = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutPair {
    pub alpha: BigInt,
    pub beta: BigInt,
}

/// Error returned by [`bezout`] when its arguments share a factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotCoprime {
    pub a: Positive,
    pub b: Positive,
    pub gcd: Positive,
}

impl fmt::Display for NotCoprime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "arguments {} and {} are not coprime (gcd {})",
            self.a, self.b, self.gcd
        )
    }
}

impl std::error::Error for NotCoprime {}

/// Returns `(gcd(m, n), lcm(m, n))`.
pub fn gcd_lcm(m: &Positive, n: &Positive) -> (Positive, Positive) {
    let d = m.0.gcd(&n.0);
    let join = m.0.lcm(&n.0);
    (Positive(d), Positive(join))
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`
/// and `g >= 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of `a` modulo `modulus`, reduced to `[0, modulus)`.
/// `None` when `gcd(a, modulus) != 1`.
pub fn mod_inverse(a: &BigInt, modulus: &Positive) -> Option<BigInt> {
    if modulus.is_one() {
        return Some(BigInt::zero());
    }
    let (g, x, _) = ext_gcd(a, modulus.value());
    if g.is_one() {
        Some(x.mod_floor(modulus.value()))
    } else {
        None
    }
}

/// The canonical Bezout pair for coprime `(mp, np)`: the unique
/// `(alpha, beta)` with `alpha*mp - beta*np = 1` and `0 <= alpha < np`
/// (for `np = 1` the representative is `(1, mp - 1)`).
pub fn bezout(mp: &Positive, np: &Positive) -> Result<BezoutPair, NotCoprime> {
    let g = mp.0.gcd(&np.0);
    if !g.is_one() {
        return Err(NotCoprime {
            a: mp.clone(),
            b: np.clone(),
            gcd: Positive(g),
        });
    }
    if np.is_one() {
        return Ok(BezoutPair {
            alpha: BigInt::one(),
            beta: mp.value() - BigInt::one(),
        });
    }
    let alpha = mod_inverse(mp.value(), np).expect("coprime arguments have an inverse");
    let beta = (&alpha * mp.value() - BigInt::one()) / np.value();
    Ok(BezoutPair { alpha, beta })
}

/// Prime factorization with multiplicity, ascending. `factorize(1)` is empty.
pub fn factorize(m: &Positive) -> Vec<Positive> {
    let mut rest = m.0.clone();
    let mut out = Vec::new();
    let mut d = BigInt::from(2u32);
    while &d * &d <= rest {
        while rest.is_multiple_of(&d) {
            out.push(Positive(d.clone()));
            rest /= &d;
        }
        d += if d == BigInt::from(2u32) {
            BigInt::one()
        } else {
            BigInt::from(2u32)
        };
    }
    if !rest.is_one() {
        out.push(Positive(rest));
    }
    out
}

/// All divisors of `m`, ascending.
pub fn divisors(m: &Positive) -> Vec<Positive> {
    let factors = factorize(m);
    let mut divs = vec![BigInt::one()];
    let mut i = 0;
    while i < factors.len() {
        let p = &factors[i];
        let count = factors[i..].iter().take_while(|q| *q == p).count();
        let base = divs.clone();
        let mut power = BigInt::one();
        for _ in 0..count {
            power *= p.value();
            divs.extend(base.iter().map(|d| d * &power));
        }
        i += count;
    }
    divs.sort();
    divs.into_iter().map(Positive).collect()
}

/// Canonical residue: returns `(r, t)` with `a = r + t*m` and `0 <= r < m`.
pub fn canonical_residue(a: &BigInt, m: &Positive) -> (BigInt, BigInt) {
    let (t, r) = a.div_mod_floor(m.value());
    (r, t)
}

/// Primes `<= n`, by trial division; inputs are desk-scale.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    'outer: for candidate in 2..=n {
        for p in &out {
            if p * p > candidate {
                break;
            }
            if candidate % p == 0 {
                continue 'outer;
            }
        }
        out.push(candidate);
    }
    out
}
