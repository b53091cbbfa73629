//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`; cargo's own per-test ok/FAILED
//! lines carry the verdict otherwise). Every comparison is exact.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use mrc_core::code::reed_solomon_4_2;
use mrc_core::combinat::gaussian_binomial;
use mrc_core::formulas;
use mrc_core::matroid::rank_size_counts_closed_form;
use mrc_core::tutte::{
    britz_support_weight_enumerator, greene_weight_enumerator, macwilliams_transform,
    tutte_from_distribution, tutte_mds,
};
use mrc_core::{
    construct_mrc, FieldSpec, Matroid, MrcInstance, MrcParams, WeightDistribution,
};

fn pass(n: usize, msg: &str) {
    println!("criterion {n}: pass - {msg}");
}

fn instance(params: &MrcParams, q: u64) -> MrcInstance {
    let spec = FieldSpec::new(q).unwrap();
    construct_mrc(params, &spec, 1, 10_000).unwrap()
}

fn assert_same(a: &WeightDistribution, b: &WeightDistribution, what: &str) {
    assert_eq!(a.n, b.n, "{what}: length mismatch");
    for w in 0..=a.n {
        assert_eq!(a.a[w], b.a[w], "{what}: first difference at w={w}");
    }
}

fn within(elapsed: Duration, budget_ms: u64, what: &str) {
    assert!(
        elapsed <= Duration::from_millis(budget_ms),
        "{what}: took {} ms, budget {budget_ms} ms",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_01_azure_regression() {
    let started = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_mrc"))
        .args([
            "weights",
            "--params",
            "k=6,r=3,h=2",
            "--q",
            "16",
            "--method",
            "formula",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "weights exited nonzero");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let coeffs: Vec<BigUint> = stdout
        .lines()
        .find_map(|l| l.strip_prefix("formula: "))
        .expect("missing formula line")
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    let expect: Vec<u64> = vec![
        1, 0, 0, 0, 450, 3960, 34680, 304080, 1782405, 5847480, 8804160,
    ];
    assert_eq!(coeffs.len(), expect.len());
    for (w, e) in expect.iter().enumerate() {
        assert_eq!(coeffs[w], BigUint::from(*e), "A_{w}");
    }
    let total: BigUint = coeffs.iter().sum();
    assert_eq!(total, BigUint::from(16u64).pow(6));
    within(started.elapsed(), 1_000, "criterion 1");
    pass(1, "(k=6,r=3,h=2,q=16) closed form matches the published coefficients, sum 16^6");
}

#[test]
fn criterion_02_three_routes_data_local_ell2() {
    let started = Instant::now();
    let params = MrcParams::data_local(4, 2, 1).unwrap();
    for q in [8u64, 16] {
        let inst = instance(&params, q);
        assert!(inst.verified);
        let formula = formulas::data_local_two_weight_enumerators(2, 1, q).unwrap();
        let dist = Matroid::mrc(params.clone()).rank_size_distribution().unwrap();
        let greene = greene_weight_enumerator(&dist, q).unwrap();
        let brute = inst.code.enumerate_weight_distribution().unwrap();
        assert_same(&formula, &greene, &format!("q={q} formula vs greene"));
        assert_same(&formula, &brute, &format!("q={q} formula vs brute"));
    }
    within(started.elapsed(), 5_000, "criterion 2");
    pass(2, "data-local (k=4,r=2,h=1), q in {8,16}: formula = greene = brute force");
}

#[test]
fn criterion_03_three_routes_data_local_ell3() {
    let started = Instant::now();
    let params = MrcParams::data_local(9, 3, 1).unwrap();
    let q = 4u64;
    let inst = instance(&params, q);
    assert!(inst.verified);

    let counts = rank_size_counts_closed_form(&params).unwrap();
    let enumerated = Matroid::mrc(params.clone()).rank_size_distribution().unwrap();
    assert_eq!(counts, enumerated, "closed-form counts vs 2^13 enumeration");

    let greene = greene_weight_enumerator(&counts, q).unwrap();
    let brute = inst.code.enumerate_weight_distribution().unwrap();
    assert_same(&greene, &brute, "greene vs brute");

    // The banded table route drifts from the transform route once two or
    // more full groups fit inside a counted subset; the library reports
    // that drift instead of hiding it, with the transform as ground truth.
    let drift = formulas::table_one_diagnostic(3, 3, 1, q).unwrap();
    let (w, table_val, greene_val) = drift.expect("expected a reported table drift");
    assert_eq!(w, 4);
    assert_eq!(greene_val, brute.a[4].clone().into());
    within(started.elapsed(), 60_000, "criterion 3");
    pass(
        3,
        &format!(
            "data-local (k=9,r=3,h=1,q=4): counts = enumeration, greene = brute force; \
             banded-table drift reported at w={w} ({table_val} vs ground truth {greene_val})"
        ),
    );
}

#[test]
fn criterion_04_three_routes_local_ell2() {
    let started = Instant::now();
    let params = MrcParams::local(3, 2, 1).unwrap();
    let q = 8u64;
    let inst = instance(&params, q);
    assert!(inst.verified);
    let formula = formulas::local_two_weight_enumerators(3, 2, 1, q).unwrap();
    let dist = Matroid::mrc(params.clone()).rank_size_distribution().unwrap();
    let greene = greene_weight_enumerator(&dist, q).unwrap();
    let brute = inst.code.enumerate_weight_distribution().unwrap();
    assert_same(&formula, &greene, "formula vs greene");
    assert_same(&formula, &brute, "formula vs brute");
    within(started.elapsed(), 5_000, "criterion 4");
    pass(4, "local (k=3,r=2,h=1,q=8): formula = greene = brute force");
}

#[test]
fn criterion_05_dual_consistency() {
    let params = MrcParams::data_local(4, 2, 1).unwrap();
    let (n, k) = (params.n(), params.k);
    for q in [8u64, 16] {
        let closed = formulas::data_local_two_dual_weight_enumerators(2, 1, q).unwrap();
        let primal = formulas::data_local_two_weight_enumerators(2, 1, q).unwrap();
        let transform = macwilliams_transform(&primal, n, k, q).unwrap();
        assert_same(&closed, &transform, &format!("q={q} closed form vs MacWilliams"));
        let inst = instance(&params, q);
        let brute = inst.code.dual().unwrap().enumerate_weight_distribution().unwrap();
        assert_same(&closed, &brute, &format!("q={q} closed form vs dual brute force"));
    }
    pass(5, "dual of data-local (k=4,r=2,h=1): closed form = MacWilliams = brute force, q in {8,16}");
}

#[test]
fn criterion_06_matroid_identity() {
    let cases = [
        (MrcParams::data_local(4, 2, 1).unwrap(), 8u64),
        (MrcParams::data_local(4, 2, 1).unwrap(), 16),
        (MrcParams::local(3, 2, 1).unwrap(), 8),
        (MrcParams::data_local(9, 3, 1).unwrap(), 4),
    ];
    for (params, q) in cases {
        let n = params.n();
        assert!(n <= 13);
        let inst = instance(&params, q);
        let from_code = Matroid::from_code(inst.code);
        let closed = Matroid::mrc(params.clone());
        for mask in 0..(1u64 << n) {
            assert_eq!(
                from_code.rank_mask(mask),
                closed.rank_mask(mask),
                "rank mismatch on mask {mask:#x} for {params:?}, q={q}"
            );
        }
    }
    pass(6, "column-matroid rank = closed-form rank on all 2^n subsets, every verified instance");
}

#[test]
fn criterion_07_weight_hierarchy() {
    assert_eq!(formulas::data_local_two_ghw(3, 2), vec![4, 5, 6, 8, 9, 10]);

    let cases = [
        (MrcParams::data_local(4, 2, 1).unwrap(), 8u64),
        (MrcParams::data_local(4, 2, 1).unwrap(), 16),
        (MrcParams::local(3, 2, 1).unwrap(), 8),
    ];
    for (params, q) in cases {
        let formula = match params.variant {
            mrc_core::MrcVariant::DataLocal => formulas::data_local_two_ghw(params.r, params.h),
            mrc_core::MrcVariant::Local => {
                formulas::local_two_ghw(params.k, params.r, params.h).unwrap()
            }
        };
        let matroid = Matroid::mrc(params.clone()).ghw().unwrap();
        let inst = instance(&params, q);
        let brute = inst.code.ghw_brute().unwrap();
        assert_eq!(formula, matroid, "{params:?}: formula vs matroid");
        assert_eq!(formula, brute, "{params:?}: formula vs brute");

        // Wei duality: {d_s(C)} and {n+1-d_s(dual C)} partition {1..n}.
        let n = params.n();
        let dual_ghw = inst.code.dual().unwrap().ghw_brute().unwrap();
        let mut seen = vec![false; n + 1];
        for &d in &brute {
            assert!(!seen[d]);
            seen[d] = true;
        }
        for &d in &dual_ghw {
            assert!(!seen[n + 1 - d], "Wei duality clash at {}", n + 1 - d);
            seen[n + 1 - d] = true;
        }
        assert!(seen[1..].iter().all(|&s| s), "Wei duality: not a partition of 1..={n}");
    }
    pass(7, "(r=3,h=2) hierarchy is 4 5 6 8 9 10; formula = matroid = brute force; Wei duality holds");
}

#[test]
fn criterion_08_higher_support_weights() {
    let started = Instant::now();
    let cases = [
        (MrcParams::data_local(4, 2, 1).unwrap(), 8u64),
        (MrcParams::data_local(4, 2, 1).unwrap(), 16),
        (MrcParams::local(3, 2, 1).unwrap(), 8),
    ];
    for (params, q) in cases {
        let inst = instance(&params, q);
        let dist = Matroid::mrc(params.clone()).rank_size_distribution().unwrap();
        let k = params.k;
        let codeword_weights = inst.code.enumerate_weight_distribution().unwrap();
        for s in 1..=k {
            let formula = match params.variant {
                mrc_core::MrcVariant::DataLocal => {
                    formulas::data_local_two_hsw(params.r, params.h, q, s).unwrap()
                }
                mrc_core::MrcVariant::Local => {
                    formulas::local_two_hsw(k, params.r, params.h, q, s).unwrap()
                }
            };
            let britz = britz_support_weight_enumerator(&dist, q, s).unwrap();
            let brute = inst.code.enumerate_support_weight_distribution(s).unwrap();
            assert_same(&formula, &britz, &format!("{params:?} q={q} s={s}: formula vs britz"));
            assert_same(&formula, &brute, &format!("{params:?} q={q} s={s}: formula vs brute"));
            assert_eq!(
                formula.total(),
                gaussian_binomial(k as i64, s as i64, q),
                "sum rule at s={s}"
            );
            if s == 1 {
                // W = 1 + (q-1) W^(1)
                assert!(formula.a[0].is_zero());
                assert!(codeword_weights.a[0].is_one());
                let qm1 = BigUint::from(q - 1);
                for w in 1..=formula.n {
                    assert_eq!(codeword_weights.a[w], &formula.a[w] * &qm1);
                }
            }
            if s == params.r && params.variant == mrc_core::MrcVariant::DataLocal {
                assert_eq!(formula.a[params.h + 1 + params.r], BigUint::from(2u32));
            }
        }
    }
    within(started.elapsed(), 60_000, "criterion 8");
    pass(8, "all s: formula = britz = brute force; W = 1+(q-1)W^(1); A^(r)_{h+1+r} = 2; sums [k,s]_q");
}

#[test]
fn criterion_09_mds_baseline() {
    let closed = formulas::mds_weight_enumerators(4, 2, 5).unwrap();
    let rs = reed_solomon_4_2(5).unwrap();
    assert!(rs.is_mds().unwrap());
    let brute = rs.enumerate_weight_distribution().unwrap();
    assert_same(&closed, &brute, "MDS closed form vs Reed-Solomon brute force");

    for n in 1..=10usize {
        for k in 0..=n {
            let dist = Matroid::uniform(n, k).rank_size_distribution().unwrap();
            assert_eq!(
                tutte_mds(n, k),
                tutte_from_distribution(&dist),
                "Tutte mismatch at uniform({n},{k})"
            );
        }
    }
    pass(9, "[4,2] MDS enumerator matches Reed-Solomon; tutte_mds = uniform-matroid Tutte for n <= 10");
}

#[test]
fn criterion_10_property_suite() {
    // Field axioms, exhaustive for every prime power q <= 16.
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
        let f = FieldSpec::new(q).unwrap();
        let els: Vec<_> = f.elements().collect();
        let zero = f.element(0).unwrap();
        let one = f.element(1).unwrap();
        for &a in &els {
            assert_eq!(f.add(a, zero), a);
            assert_eq!(f.mul(a, one), a);
            assert_eq!(f.add(a, f.neg(a)), zero);
            if a != zero {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), one);
            }
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for &c in &els {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    // Tutte coefficients are non-negative on every matroid we build.
    let matroids = [
        Matroid::mrc(MrcParams::data_local(4, 2, 1).unwrap()),
        Matroid::mrc(MrcParams::data_local(9, 3, 1).unwrap()),
        Matroid::mrc(MrcParams::local(3, 2, 1).unwrap()),
        Matroid::uniform(7, 3),
    ];
    for m in &matroids {
        let t = tutte_from_distribution(&m.rank_size_distribution().unwrap());
        for i in 0..=m.k() {
            for j in 0..=(m.n() - m.k()) {
                assert!(t.coefficient(i, j) >= 0.into(), "negative Tutte coefficient");
            }
        }
    }

    // MacWilliams divisibility never fails on valid enumerators.
    for (params, q) in [
        (MrcParams::data_local(4, 2, 1).unwrap(), 8u64),
        (MrcParams::local(3, 2, 1).unwrap(), 8),
    ] {
        let dist = Matroid::mrc(params.clone()).rank_size_distribution().unwrap();
        let w = greene_weight_enumerator(&dist, q).unwrap();
        macwilliams_transform(&w, params.n(), params.k, q).unwrap();
    }

    // Pascal-style q-identity: [t,s]_q = [t-1,s-1]_q + q^s [t-1,s]_q.
    for q in [2u64, 3, 4, 8, 16] {
        for t in 1..=12i64 {
            for s in 1..=t {
                let lhs = gaussian_binomial(t, s, q);
                let rhs = gaussian_binomial(t - 1, s - 1, q)
                    + BigUint::from(q).pow(s as u32) * gaussian_binomial(t - 1, s, q);
                assert_eq!(lhs, rhs, "q-identity at q={q}, t={t}, s={s}");
            }
        }
    }

    // Boundary binomials in the closed forms never yield a negative count.
    for q in [4u64, 8, 16] {
        for (r, h) in [(2usize, 1usize), (3, 1), (3, 2), (4, 2)] {
            // GF(4) is too small to carry an h=2 instance at these lengths;
            // the closed forms only count codes that exist.
            if h >= 2 && q <= 4 {
                continue;
            }
            formulas::data_local_two_weight_enumerators(r, h, q).unwrap();
            formulas::data_local_two_dual_weight_enumerators(r, h, q).unwrap();
            for s in 1..=2 * r {
                formulas::data_local_two_hsw(r, h, q, s).unwrap();
            }
            let k = 2 * r - h;
            formulas::local_two_weight_enumerators(k, r, h, q).unwrap();
            for s in 1..=k {
                formulas::local_two_hsw(k, r, h, q, s).unwrap();
            }
        }
    }
    pass(10, "field axioms (q <= 16), Tutte non-negativity, MacWilliams divisibility, q-identity, boundary terms");
}
