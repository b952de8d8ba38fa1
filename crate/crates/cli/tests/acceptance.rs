//! The acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`). Every tolerance is exact.

use std::collections::BTreeMap;
use std::process::Command;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use qn_cli::parse::eval_str;
use qn_cli::print::print_element;
use qn_core::rng::SplitMix64;
use qn_core::{
    apply_integer_basis, bezout, canonical_residue, compact_eq, gcd_lcm, is_zero_nt, is_zero_qn,
    left_action_as_compact, nica_product, relation_suite, CompactOp, Element, FiberElement,
    FockMap, GaussianRational, LaurentPoly, Monomial, PartialAffineMap, Positive, RankOne,
    SuiteKind, SuiteOptions,
};

fn pos(v: u64) -> Positive {
    Positive::from(v)
}

fn verdict(number: u32, name: &str, checked: usize, failures: usize) {
    let status = if failures == 0 { "PASS" } else { "FAIL" };
    println!(
        "[acceptance] criterion {number} ({name}): {status} ({checked} checks, {failures} failures)"
    );
    assert_eq!(failures, 0, "criterion {number} ({name}) failed");
}

fn random_scalar(rng: &mut SplitMix64) -> GaussianRational {
    let re = BigRational::new(
        BigInt::from(rng.range_i64(-6, 6)),
        BigInt::from(rng.range_i64(1, 4)),
    );
    let im = BigRational::new(
        BigInt::from(rng.range_i64(-6, 6)),
        BigInt::from(rng.range_i64(1, 4)),
    );
    GaussianRational::new(re, im)
}

fn random_poly(rng: &mut SplitMix64) -> LaurentPoly {
    let nterms = rng.range_u64(0, 5);
    let mut out = LaurentPoly::zero();
    for _ in 0..nterms {
        let k = rng.range_i64(-30, 30);
        out = out.add(&LaurentPoly::monomial(k, random_scalar(rng)));
    }
    out
}

fn random_monomial(rng: &mut SplitMix64) -> Monomial {
    Monomial::new(
        rng.range_i64(-200, 200),
        pos(rng.range_u64(1, 30)),
        pos(rng.range_u64(1, 30)),
        rng.range_i64(-200, 200),
    )
}

// ---------------------------------------------------------------------------
// 1. Transfer and expectation laws
// ---------------------------------------------------------------------------

#[test]
fn c1_transfer_and_expectation_laws() {
    let mut checked = 0usize;
    let mut failures = 0usize;
    let mut check = |ok: bool| {
        checked += 1;
        if !ok {
            failures += 1;
        }
    };

    // over the monomial basis |k| <= 60
    for m in 1u64..=12 {
        let mp = pos(m);
        for k in -60i64..=60 {
            let f = LaurentPoly::z_pow(k);
            for j in -60i64..=60 {
                let g = LaurentPoly::z_pow(j);
                check(f.mul(&g.inflate(&mp)).transfer(&mp) == f.transfer(&mp).mul(&g));
            }
        }
    }
    for m in 1u64..=12 {
        for r in 1u64..=12 {
            for k in -60i64..=60 {
                let f = LaurentPoly::z_pow(k);
                check(f.transfer(&pos(m * r)) == f.transfer(&pos(m)).transfer(&pos(r)));
            }
        }
    }
    for m in 1u64..=12 {
        for n in 1u64..=12 {
            let join = gcd_lcm(&pos(m), &pos(n)).1;
            for k in -60i64..=60 {
                let f = LaurentPoly::z_pow(k);
                check(f.cond_exp(&pos(n)).cond_exp(&pos(m)) == f.cond_exp(&join));
            }
        }
    }

    // and over 200 random polynomial pairs
    let mut rng = SplitMix64::new(1);
    for case in 0..200u64 {
        let f = random_poly(&mut rng);
        let g = random_poly(&mut rng);
        let m = pos(case % 12 + 1);
        let r = pos(case % 11 + 1);
        let join = gcd_lcm(&m, &r).1;
        check(f.mul(&g.inflate(&m)).transfer(&m) == f.transfer(&m).mul(&g));
        let mr = &m * &r;
        check(f.transfer(&mr) == f.transfer(&m).transfer(&r));
        check(f.cond_exp(&r).cond_exp(&m) == f.cond_exp(&join));
    }

    verdict(1, "transfer and expectation laws", checked, failures);
}

// ---------------------------------------------------------------------------
// 2. The Nica product formula
// ---------------------------------------------------------------------------

/// Collapses a compact operator with monomial legs to its canonical
/// rank-one combination, quotienting the diagonal shift
/// `theta_{Z^{L+tN}, Z^{R+tN}} = theta_{Z^L, Z^R}`.
fn canonical_rank_ones(op: &CompactOp) -> BTreeMap<(BigInt, BigInt), GaussianRational> {
    let mut acc: BTreeMap<(BigInt, BigInt), GaussianRational> = BTreeMap::new();
    let level = op.level().value();
    for t in op.terms() {
        assert!(
            t.left().num_terms() <= 1 && t.right().num_terms() <= 1,
            "corpus is monomial"
        );
        let (le, lc) = match t.left().terms().next() {
            Some((k, c)) => (k.clone(), c.clone()),
            None => continue,
        };
        let (re, rc) = match t.right().terms().next() {
            Some((k, c)) => (k.clone(), c.clone()),
            None => continue,
        };
        let coeff = &lc * &rc.conj();
        let (a, shift) = canonical_residue(&le, op.level());
        let key = (a, re - shift * level);
        let entry = acc.entry(key).or_insert_with(GaussianRational::zero);
        *entry = &*entry + &coeff;
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

/// The closed form of the Nica product on monomial rank-ones, written out
/// independently of the implementation.
fn nica_closed_form(m: u64, n: u64, i: i64, k: i64, l: i64, j: i64) -> CompactOp {
    let (d, join) = gcd_lcm(&pos(m), &pos(n));
    let diff = BigInt::from(l - k);
    if !diff.is_multiple_of(d.value()) {
        return CompactOp::zero(join);
    }
    let q = &diff / d.value();
    let pair = bezout(
        &pos(m).exact_div(&d).unwrap(),
        &pos(n).exact_div(&d).unwrap(),
    )
    .unwrap();
    let left = BigInt::from(i) + BigInt::from(m) * &pair.alpha * &q;
    let right = BigInt::from(j) + BigInt::from(n) * &pair.beta * &q;
    CompactOp::from_rank_one(RankOne::monomial(join, left, right))
}

#[test]
fn c2_nica_product_formula() {
    let mut checked = 0usize;
    let mut failures = 0usize;

    // full grid: closed form and the embedding route, compared canonically
    for m in 1u64..=12 {
        for n in 1u64..=12 {
            let join = gcd_lcm(&pos(m), &pos(n)).1;
            let rm = join.exact_div(&pos(m)).unwrap();
            let rn = join.exact_div(&pos(n)).unwrap();
            for k in -20i64..=20 {
                for l in -20i64..=20 {
                    let s = CompactOp::from_rank_one(RankOne::monomial(pos(m), 0, k));
                    let t = CompactOp::from_rank_one(RankOne::monomial(pos(n), l, 0));
                    let product = nica_product(&s, &t);
                    let embedded = s.embed(&rm).compose(&t.embed(&rn)).unwrap();
                    let expected = nica_closed_form(m, n, 0, k, l, 0);
                    checked += 1;
                    if canonical_rank_ones(&product) != canonical_rank_ones(&expected)
                        || canonical_rank_ones(&product) != canonical_rank_ones(&embedded)
                    {
                        failures += 1;
                    }
                }
            }
        }
    }

    // basis-window verification on a dense subgrid
    for m in 1u64..=12 {
        for n in 1u64..=12 {
            let join = gcd_lcm(&pos(m), &pos(n)).1;
            let rm = join.exact_div(&pos(m)).unwrap();
            let rn = join.exact_div(&pos(n)).unwrap();
            for k in -2i64..=2 {
                for l in -2i64..=2 {
                    let s = CompactOp::from_rank_one(RankOne::monomial(pos(m), 0, k));
                    let t = CompactOp::from_rank_one(RankOne::monomial(pos(n), l, 0));
                    let product = nica_product(&s, &t);
                    let embedded = s.embed(&rm).compose(&t.embed(&rn)).unwrap();
                    checked += 1;
                    if !compact_eq(&product, &embedded) {
                        failures += 1;
                    }
                }
            }
        }
    }

    // general legs: seeded random (i, k, l, j), both comparisons
    let mut rng = SplitMix64::new(2);
    for _ in 0..200 {
        let m = rng.range_u64(1, 12);
        let n = rng.range_u64(1, 12);
        let (i, k, l, j) = (
            rng.range_i64(-20, 20),
            rng.range_i64(-20, 20),
            rng.range_i64(-20, 20),
            rng.range_i64(-20, 20),
        );
        let join = gcd_lcm(&pos(m), &pos(n)).1;
        let rm = join.exact_div(&pos(m)).unwrap();
        let rn = join.exact_div(&pos(n)).unwrap();
        let s = CompactOp::from_rank_one(RankOne::monomial(pos(m), i, k));
        let t = CompactOp::from_rank_one(RankOne::monomial(pos(n), l, j));
        let product = nica_product(&s, &t);
        let embedded = s.embed(&rm).compose(&t.embed(&rn)).unwrap();
        let expected = nica_closed_form(m, n, i, k, l, j);
        checked += 1;
        if canonical_rank_ones(&product) != canonical_rank_ones(&expected)
            || !compact_eq(&product, &embedded)
        {
            failures += 1;
        }
    }

    verdict(2, "Nica product formula", checked, failures);
}

// ---------------------------------------------------------------------------
// 3. The compact identity decomposition
// ---------------------------------------------------------------------------

#[test]
fn c3_identity_decomposition() {
    let mut checked = 0usize;
    let mut failures = 0usize;
    for m in 1u64..=12 {
        let op = left_action_as_compact(&pos(m), &LaurentPoly::one());
        for s in -40i64..=40 {
            let v = FiberElement::monomial(pos(m), s);
            checked += 1;
            if op.apply(&v).unwrap() != v {
                failures += 1;
            }
        }
    }
    verdict(3, "identity acts as the rank-one sum", checked, failures);
}

// ---------------------------------------------------------------------------
// 4. Relation suites at full depth
// ---------------------------------------------------------------------------

#[test]
fn c4_relation_suites_exhaustive() {
    let options = SuiteOptions {
        max_index: 30,
        max_exponent: 200,
        exhaustive_exponents: true,
        exponent_samples: 0,
        seed: 0,
    };
    let toeplitz = relation_suite(SuiteKind::Toeplitz, &options);
    let laca_raeburn = relation_suite(SuiteKind::LacaRaeburn, &options);
    let checked = toeplitz.total_checked() + laca_raeburn.total_checked();
    let failures = toeplitz.total_failures() + laca_raeburn.total_failures();
    for family in toeplitz.families.iter().chain(&laca_raeburn.families) {
        for failure in family.failures.iter().take(3) {
            eprintln!("  {}: {failure}", family.name);
        }
    }
    verdict(4, "toeplitz and laca-raeburn suites", checked, failures);
}

// ---------------------------------------------------------------------------
// 5. Master oracle equivalence
// ---------------------------------------------------------------------------

#[test]
fn c5_master_oracle_equivalence() {
    let mut rng = SplitMix64::new(5);
    let mut checked = 0usize;
    let mut failures = 0usize;
    for _ in 0..1000 {
        let x = random_monomial(&mut rng);
        let y = random_monomial(&mut rng);
        let product = x.mul(&y);
        let qn = PartialAffineMap::from_monomial(&x).compose(&PartialAffineMap::from_monomial(&y));
        let nt = FockMap::from_monomial(&x).compose(&FockMap::from_monomial(&y));
        checked += 1;
        let ok = match &product {
            None => qn.is_none() && nt.is_none(),
            Some(p) => {
                qn.as_ref() == Some(&PartialAffineMap::from_monomial(p))
                    && nt.as_ref() == Some(&FockMap::from_monomial(p))
            }
        };
        if !ok {
            failures += 1;
            eprintln!("  oracle mismatch: {x:?} * {y:?}");
        }
    }
    verdict(5, "symbolic product = map composition", checked, failures);
}

// ---------------------------------------------------------------------------
// 6. Quotient separation
// ---------------------------------------------------------------------------

fn cuntz_defect(m: u64) -> Element {
    let mut sum = Element::zero();
    for k in 0..m as i64 {
        sum = sum.add(&Element::from(Monomial::new(k, pos(m), pos(m), k)));
    }
    sum.sub(&Element::one())
}

#[test]
fn c6_quotient_separation() {
    let mut checked = 0usize;
    let mut failures = 0usize;
    for m in 2u64..=8 {
        let defect = cuntz_defect(m);
        checked += 2;
        if !is_zero_qn(&defect) {
            failures += 1;
        }
        if is_zero_nt(&defect) {
            failures += 1;
        }
    }
    verdict(6, "Cuntz sum separates the quotient", checked, failures);
}

// ---------------------------------------------------------------------------
// 7. Decision-procedure cross-validation
// ---------------------------------------------------------------------------

#[test]
fn c7_decision_procedures_cross_validated() {
    let mut rng = SplitMix64::new(7);
    let mut checked = 0usize;
    let mut failures = 0usize;
    for case in 0..500u64 {
        // small moduli keep the brute-force window tractable
        let x = if case % 5 == 0 {
            // an honest quotient-zero that is not canonically empty
            let m = rng.range_u64(2, 6);
            let conjugator = Element::from(Monomial::u_pow(rng.range_i64(-4, 4)));
            conjugator
                .mul(&cuntz_defect(m))
                .mul(&conjugator.star())
                .scale(&random_scalar(&mut rng))
        } else {
            let nterms = rng.range_u64(1, 6);
            let mut x = Element::zero();
            for _ in 0..nterms {
                let mono = Monomial::new(
                    rng.range_i64(-20, 20),
                    pos(rng.range_u64(1, 8)),
                    pos(rng.range_u64(1, 8)),
                    rng.range_i64(-20, 20),
                );
                x = x.add(&Element::with_coeff(mono, random_scalar(&mut rng)));
            }
            x
        };

        let period: BigInt = x
            .terms()
            .map(|(m, _)| m.n().value().clone())
            .fold(BigInt::from(1), |acc, n| acc.lcm(&n));
        let window = 10 * i64::try_from(&period).expect("small period");
        let brute_zero =
            (-window..=window).all(|k| apply_integer_basis(&x, &BigInt::from(k)).is_empty());
        checked += 2;
        if is_zero_qn(&x) != brute_zero {
            failures += 1;
            eprintln!("  qn decision mismatch: {x}");
        }
        if is_zero_nt(&x) != x.is_zero() {
            failures += 1;
            eprintln!("  nt decision mismatch: {x}");
        }
    }
    verdict(7, "decision procedures vs brute force", checked, failures);
}

// ---------------------------------------------------------------------------
// 8. Associativity and Bezout independence
// ---------------------------------------------------------------------------

#[test]
fn c8_associativity_and_witness_independence() {
    let mut rng = SplitMix64::new(8);
    let mut checked = 0usize;
    let mut failures = 0usize;
    for _ in 0..1000 {
        let x = random_monomial(&mut rng);
        let y = random_monomial(&mut rng);
        let z = random_monomial(&mut rng);
        let lhs = x.mul(&y).and_then(|xy| xy.mul(&z));
        let rhs = y.mul(&z).and_then(|yz| x.mul(&yz));
        checked += 1;
        if lhs != rhs {
            failures += 1;
            eprintln!("  associativity broke on {x:?}, {y:?}, {z:?}");
        }
    }
    for _ in 0..200 {
        let x = random_monomial(&mut rng);
        let y = random_monomial(&mut rng);
        let mut t = 0;
        while t == 0 {
            t = rng.range_i64(-5, 5);
        }
        checked += 1;
        if x.mul(&y) != x.mul_with_shift(&y, t) {
            failures += 1;
            eprintln!("  witness dependence on {x:?}, {y:?}, t={t}");
        }
    }
    verdict(
        8,
        "associativity and Bezout independence",
        checked,
        failures,
    );
}

// ---------------------------------------------------------------------------
// 9. The CLI contract
// ---------------------------------------------------------------------------

fn random_element(rng: &mut SplitMix64) -> Element {
    let nterms = rng.range_u64(0, 5);
    let mut x = Element::zero();
    for _ in 0..nterms {
        let mono = Monomial::new(
            rng.range_i64(-30, 30),
            pos(rng.range_u64(1, 12)),
            pos(rng.range_u64(1, 12)),
            rng.range_i64(-30, 30),
        );
        x = x.add(&Element::with_coeff(mono, random_scalar(rng)));
    }
    x
}

#[test]
fn c9_cli_contract() {
    let mut rng = SplitMix64::new(9);
    let mut checked = 0usize;
    let mut failures = 0usize;

    // grammar round-trip on 500 elements
    for _ in 0..500 {
        let x = random_element(&mut rng);
        let printed = print_element(&x);
        checked += 1;
        match eval_str(&printed) {
            Ok(back) if back == x => {}
            Ok(back) => {
                failures += 1;
                eprintln!("  round-trip drift: '{printed}' -> {back:?}");
            }
            Err(e) => {
                failures += 1;
                eprintln!("  printed form fails to parse: '{printed}': {e}");
            }
        }
    }

    // the worked command-line examples, through the binary
    let bin = env!("CARGO_BIN_EXE_qncalc");
    let run = |args: &[&str]| Command::new(bin).args(args).output().expect("binary runs");
    let cases: &[(&[&str], &str, i32)] = &[
        (
            &[
                "equal",
                "--algebra",
                "qn",
                "w(2)w(2)' + u w(2)w(2)' u'",
                "1",
            ],
            "true\n",
            0,
        ),
        (
            &[
                "equal",
                "--algebra",
                "nt",
                "w(2)w(2)' + u w(2)w(2)' u'",
                "1",
            ],
            "false\n",
            1,
        ),
        (
            &["apply", "--model", "qn", "--vector", "3", "w(2)"],
            "e(6)\n",
            0,
        ),
    ];
    for (args, expected_out, expected_code) in cases {
        let out = run(args);
        checked += 1;
        let stdout = String::from_utf8_lossy(&out.stdout);
        if stdout != *expected_out || out.status.code() != Some(*expected_code) {
            failures += 1;
            eprintln!(
                "  cli example {:?}: got ({:?}, {:?})",
                args,
                stdout,
                out.status.code()
            );
        }
    }

    verdict(
        9,
        "CLI grammar round-trip and worked examples",
        checked,
        failures,
    );
}
