//! Relation suites: systematic checks of the defining relations and their
//! consequences, instance by instance.
//!
//! The `toeplitz`, `nica` and `laca_raeburn` suites compare canonical
//! elements, which is equality in the Nica-Toeplitz algebra; the `cuntz`
//! suite compares through the integer-model decision procedure, which is
//! equality in the quotient Q_N. (The Cuntz sum relation genuinely fails
//! before passing to the quotient, so it cannot be scheduled under the
//! canonical comparison.)

use num_bigint::BigInt;
use num_integer::Integer;

use crate::models::is_zero_qn;
use crate::numtheory::{bezout, gcd_lcm, primes_up_to, Positive};
use crate::product_system::{nica_product, CompactOp, RankOne};
use crate::rng::SplitMix64;
use crate::word_algebra::{compact_to_word, Element, Monomial};

/// Which suite of identities to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    Toeplitz,
    Nica,
    Cuntz,
    LacaRaeburn,
}

impl SuiteKind {
    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Toeplitz => "toeplitz",
            SuiteKind::Nica => "nica",
            SuiteKind::Cuntz => "cuntz",
            SuiteKind::LacaRaeburn => "laca-raeburn",
        }
    }
}

/// Instance-generation policy.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Indices `m, n` (and primes) range over `1..=max_index`.
    pub max_index: u64,
    /// Free exponents range over `-max_exponent..=max_exponent`.
    pub max_exponent: i64,
    /// Enumerate every exponent instead of sampling.
    pub exhaustive_exponents: bool,
    /// Number of sampled exponents per family slot when not exhaustive.
    pub exponent_samples: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_index: 12,
            max_exponent: 200,
            exhaustive_exponents: false,
            exponent_samples: 24,
            seed: 0,
        }
    }
}

impl SuiteOptions {
    fn exponent_values(&self, rng: &mut SplitMix64) -> Vec<i64> {
        if self.exhaustive_exponents {
            (-self.max_exponent..=self.max_exponent).collect()
        } else {
            (0..self.exponent_samples)
                .map(|_| rng.range_i64(-self.max_exponent, self.max_exponent))
                .collect()
        }
    }
}

/// Per-family outcome: how many instances ran and which failed.
#[derive(Clone, Debug)]
pub struct FamilyResult {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl FamilyResult {
    fn new(name: &str) -> Self {
        FamilyResult {
            name: name.to_string(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The outcome of one suite run.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub kind: SuiteKind,
    pub families: Vec<FamilyResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(FamilyResult::passed)
    }

    pub fn total_checked(&self) -> usize {
        self.families.iter().map(|f| f.checked).sum()
    }

    pub fn total_failures(&self) -> usize {
        self.families.iter().map(|f| f.failures.len()).sum()
    }
}

fn pos(v: u64) -> Positive {
    Positive::from(v)
}

/// Runs the scheduled identities of `kind` for all parameters up to the
/// configured bounds and reports pass/fail per instance.
pub fn relation_suite(kind: SuiteKind, options: &SuiteOptions) -> SuiteReport {
    let families = match kind {
        SuiteKind::Toeplitz => toeplitz_families(options),
        SuiteKind::Nica => nica_families(options),
        SuiteKind::Cuntz => cuntz_families(options),
        SuiteKind::LacaRaeburn => laca_raeburn_families(options),
    };
    SuiteReport { kind, families }
}

fn toeplitz_families(options: &SuiteOptions) -> Vec<FamilyResult> {
    let b = options.max_index;
    let mut rng = SplitMix64::new(options.seed);
    let primes = primes_up_to(b);
    let mut out = Vec::new();

    let mut fam = FamilyResult::new("B0: w(m) w(n) = w(mn)");
    for m in 1..=b {
        for n in 1..=b {
            let lhs = Monomial::w(pos(m)).mul(&Monomial::w(pos(n)));
            let rhs = Some(Monomial::w(pos(m * n)));
            fam.check(lhs == rhs, || format!("m={m} n={n}: {lhs:?} != {rhs:?}"));
        }
    }
    out.push(fam);

    let mut fam = FamilyResult::new("B1: w(m) u = u^m w(m)");
    for m in 1..=b {
        let lhs = Monomial::w(pos(m)).mul(&Monomial::u());
        let rhs = Monomial::u_pow(m as i64).mul(&Monomial::w(pos(m)));
        fam.check(lhs == rhs, || format!("m={m}: {lhs:?} != {rhs:?}"));
    }
    out.push(fam);

    let mut fam = FamilyResult::new("B2: w(p)' w(q) = w(q) w(p)' for distinct primes");
    for &p in &primes {
        for &q in &primes {
            if p == q {
                continue;
            }
            let lhs = Monomial::w_star(pos(p)).mul(&Monomial::w(pos(q)));
            let rhs = Monomial::w(pos(q)).mul(&Monomial::w_star(pos(p)));
            fam.check(lhs == rhs, || format!("p={p} q={q}: {lhs:?} != {rhs:?}"));
        }
    }
    out.push(fam);

    let mut fam = FamilyResult::new("B3: w(p)' u^k w(p) = 0 for 1 <= k < p");
    for &p in &primes {
        for k in 1..p {
            let lhs = Monomial::w_star(pos(p))
                .mul(&Monomial::u_pow(k as i64))
                .and_then(|x| x.mul(&Monomial::w(pos(p))));
            fam.check(lhs.is_none(), || format!("p={p} k={k}: {lhs:?} != 0"));
        }
    }
    out.push(fam);

    let mut fam = FamilyResult::new("adjoint of B1: w(m) u' = u'^m w(m)");
    for m in 1..=b {
        let lhs = Monomial::w(pos(m)).mul(&Monomial::u_star());
        let rhs = Monomial::u_pow(-(m as i64)).mul(&Monomial::w(pos(m)));
        fam.check(lhs == rhs, || format!("m={m}: {lhs:?} != {rhs:?}"));
    }
    out.push(fam);

    let mut fam = FamilyResult::new("u^l w(m)' = w(m)' u^(l m)");
    for m in 1..=b {
        for l in options.exponent_values(&mut rng) {
            let lhs = Monomial::u_pow(l).mul(&Monomial::w_star(pos(m)));
            let rhs = Monomial::w_star(pos(m)).mul(&Monomial::u_pow(l * m as i64));
            fam.check(lhs == rhs, || format!("m={m} l={l}: {lhs:?} != {rhs:?}"));
        }
    }
    out.push(fam);

    let mut fam = FamilyResult::new("w(m) w(n)' = w(n)' w(m) for coprime m, n");
    for m in 1..=b {
        for n in 1..=b {
            if !gcd_lcm(&pos(m), &pos(n)).0.is_one() {
                continue;
            }
            let lhs = Monomial::w(pos(m)).mul(&Monomial::w_star(pos(n)));
            let rhs = Monomial::w_star(pos(n)).mul(&Monomial::w(pos(m)));
            fam.check(lhs == rhs, || format!("m={m} n={n}: {lhs:?} != {rhs:?}"));
        }
    }
    out.push(fam);

    let mut fam = FamilyResult::new("w(m)' u^l w(n) reduces to the coprime core");
    for m in 1..=b {
        for n in 1..=b {
            for l in options.exponent_values(&mut rng) {
                let lhs = Monomial::w_star(pos(m))
                    .mul(&Monomial::u_pow(l))
                    .and_then(|x| x.mul(&Monomial::w(pos(n))));
                let d = gcd_lcm(&pos(m), &pos(n)).0;
                let rhs = if !BigInt::from(l).is_multiple_of(d.value()) {
                    None
                } else {
                    let mp = pos(m).exact_div(&d).unwrap();
                    let np = pos(n).exact_div(&d).unwrap();
                    let lred = BigInt::from(l) / d.value();
                    Monomial::w_star(mp)
                        .mul(&Monomial::u_pow(lred))
                        .and_then(|x| x.mul(&Monomial::w(np)))
                };
                fam.check(lhs == rhs, || {
                    format!("m={m} n={n} l={l}: {lhs:?} != {rhs:?}")
                });
            }
        }
    }
    out.push(fam);

    let mut fam = FamilyResult::new("w(m)w(m)' u^e w(n)w(n)' closed form");
    for m in 1..=b {
        for n in 1..=b {
            let (d, join) = gcd_lcm(&pos(m), &pos(n));
            let mp = pos(m).exact_div(&d).unwrap();
            let np = pos(n).exact_div(&d).unwrap();
            let pair = bezout(&mp, &np).unwrap();
            for e in options.exponent_values(&mut rng) {
                let lhs = Monomial::projection(pos(m))
                    .mul(&Monomial::u_pow(e))
                    .and_then(|x| x.mul(&Monomial::projection(pos(n))));
                let rhs = if !BigInt::from(e).is_multiple_of(d.value()) {
                    None
                } else {
                    let q = BigInt::from(e) / d.value();
                    Some(Monomial::new(
                        BigInt::from(m) * &pair.alpha * &q,
                        join.clone(),
                        join.clone(),
                        BigInt::from(n) * &pair.beta * &q,
                    ))
                };
                fam.check(lhs == rhs, || {
                    format!("m={m} n={n} e={e}: {lhs:?} != {rhs:?}")
                });
            }
        }
    }
    out.push(fam);

    out
}

fn laca_raeburn_families(options: &SuiteOptions) -> Vec<FamilyResult> {
    let primes = primes_up_to(options.max_index);
    let mut out = Vec::new();

    let mut fam = FamilyResult::new("LR1: w(p) u = u^p w(p)");
    for &p in &primes {
        let lhs = Monomial::w(pos(p)).mul(&Monomial::u());
        let rhs = Monomial::u_pow(p as i64).mul(&Monomial::w(pos(p)));
        fam.check(lhs == rhs, || format!("p={p}: {lhs:?} != {rhs:?}"));
    }
    out.push(fam);

    let mut fam = FamilyResult::new("LR2: w(p) w(q) = w(q) w(p)");
    for &p in &primes {
        for &q in &primes {
            let lhs = Monomial::w(pos(p)).mul(&Monomial::w(pos(q)));
            let rhs = Monomial::w(pos(q)).mul(&Monomial::w(pos(p)));
            fam.check(lhs == rhs, || format!("p={p} q={q}: {lhs:?} != {rhs:?}"));
        }
    }
    out.push(fam);

    let mut fam = FamilyResult::new("LR3: w(p)' w(q) = w(q) w(p)' for p != q");
    for &p in &primes {
        for &q in &primes {
            if p == q {
                continue;
            }
            let lhs = Monomial::w_star(pos(p)).mul(&Monomial::w(pos(q)));
            let rhs = Monomial::w(pos(q)).mul(&Monomial::w_star(pos(p)));
            fam.check(lhs == rhs, || format!("p={p} q={q}: {lhs:?} != {rhs:?}"));
        }
    }
    out.push(fam);

    let mut fam = FamilyResult::new("LR4 for unitary u: u' w(p) = u^(p-1) w(p) u'");
    for &p in &primes {
        let lhs = Monomial::u_star().mul(&Monomial::w(pos(p)));
        let rhs = Monomial::u_pow(p as i64 - 1)
            .mul(&Monomial::w(pos(p)))
            .and_then(|x| x.mul(&Monomial::u_star()));
        fam.check(lhs == rhs, || format!("p={p}: {lhs:?} != {rhs:?}"));
    }
    out.push(fam);

    let mut fam = FamilyResult::new("LR5: w(p)' u^k w(p) = 0 for 1 <= k < p");
    for &p in &primes {
        for k in 1..p {
            let lhs = Monomial::w_star(pos(p))
                .mul(&Monomial::u_pow(k as i64))
                .and_then(|x| x.mul(&Monomial::w(pos(p))));
            fam.check(lhs.is_none(), || format!("p={p} k={k}: {lhs:?} != 0"));
        }
    }
    out.push(fam);

    out
}

fn cuntz_families(options: &SuiteOptions) -> Vec<FamilyResult> {
    let b = options.max_index;
    let mut out = Vec::new();

    let mut fam = FamilyResult::new("Q1: s(m) s(n) = s(mn)");
    for m in 1..=b {
        for n in 1..=b {
            let lhs = Element::from(Monomial::w(pos(m))).mul(&Element::from(Monomial::w(pos(n))));
            let rhs = Element::from(Monomial::w(pos(m * n)));
            fam.check(is_zero_qn(&lhs.sub(&rhs)), || format!("m={m} n={n}"));
        }
    }
    out.push(fam);

    let mut fam = FamilyResult::new("Q2: s(m) u = u^m s(m)");
    for m in 1..=b {
        let lhs = Element::from(Monomial::w(pos(m))).mul(&Element::from(Monomial::u()));
        let rhs = Element::from(Monomial::u_pow(m as i64)).mul(&Element::from(Monomial::w(pos(m))));
        fam.check(is_zero_qn(&lhs.sub(&rhs)), || format!("m={m}"));
    }
    out.push(fam);

    let mut fam = FamilyResult::new("Q3: sum_k u^k s(m) s(m)' u^-k = 1");
    for m in 1..=b {
        let mut sum = Element::zero();
        for k in 0..m as i64 {
            sum = sum.add(&Element::from(Monomial::new(k, pos(m), pos(m), k)));
        }
        let defect = sum.sub(&Element::one());
        fam.check(is_zero_qn(&defect), || format!("m={m}"));
    }
    out.push(fam);

    out
}

fn nica_families(options: &SuiteOptions) -> Vec<FamilyResult> {
    let b = options.max_index;
    let mut rng = SplitMix64::new(options.seed);
    let window = options.max_exponent.min(20);
    let mut out = Vec::new();

    let mut fam = FamilyResult::new("word(S) word(T) = word(S . T) for monomial rank-one S, T");
    for m in 1..=b {
        for n in 1..=b {
            for _ in 0..options.exponent_samples.max(4) {
                let i = rng.range_i64(-window, window);
                let k = rng.range_i64(-window, window);
                let l = rng.range_i64(-window, window);
                let j = rng.range_i64(-window, window);
                let s = CompactOp::from_rank_one(RankOne::monomial(pos(m), i, k));
                let t = CompactOp::from_rank_one(RankOne::monomial(pos(n), l, j));
                let lhs = compact_to_word(&s).mul(&compact_to_word(&t));
                let rhs = compact_to_word(&nica_product(&s, &t));
                fam.check(lhs == rhs, || {
                    format!("m={m} n={n} i={i} k={k} l={l} j={j}: {lhs} != {rhs}")
                });
            }
        }
    }
    out.push(fam);

    out
}
