//! One PASS/FAIL line per acceptance criterion, with wall time against its
//! budget. Runs without the libtest harness so the lines are always shown.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::props;
use common::{all_matrices, check_congruences, check_kernel, matrix, s_family, TYPE1_PRIME, TYPE2};
use monocurve::colength::{criterion_generators, length_case, verify_symbolic_equality, AxisOutcome, LengthCase, Verdict};
use monocurve::curve::{analyze_curve, Analysis, MatrixExponents};
use monocurve::harbourne::{check_containment, third_power_criterion, verify_harbourne_profile};
use monocurve::membership::m_multiples;
use monocurve::sympow::{
    char2_identity, d3_type1, d_poly, dual_identity_check, fgh, ordinary_power, sympow_basis, Provenance,
};
use monocurve::{FieldSpec, Monomial, Poly};

type Outcome = Result<String, String>;

const Q: FieldSpec = FieldSpec::Rationals;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn p5_11_4() -> Result<MatrixExponents, String> {
    match analyze_curve(5, 11, 4).map_err(err)? {
        Analysis::Matrix(d) => Ok(d.matrix),
        other => Err(format!("P(5,11,4) analysed as {other:?}")),
    }
}

fn example_reproduction() -> Outcome {
    let e = p5_11_4()?;
    let ex = e.exponents().to_array();
    ensure(ex == [1, 2, 1, 1, 3, 1], || format!("exponents {ex:?}"))?;
    let d2 = d_poly(2, &e, Q).map_err(err)?.value;
    let d3 = d_poly(3, &e, Q).map_err(err)?.value;
    ensure(d2.to_string() == "-y^3 - x^5*z^2 + 3*x^2*y*z^3 - x*z^7", || format!("D_2 = {d2}"))?;
    ensure(
        d3.to_string() == "y^4 - x^8*z + 4*x^5*y*z^2 - 6*x^2*y^2*z^3 - x^4*z^6 + 4*x*y*z^7 - z^11",
        || format!("D_3 = {d3}"),
    )?;
    let coeffs = |p: &Poly| -> Vec<String> {
        let mut v: Vec<String> = p.terms().map(|(_, c)| c.to_string()).collect();
        v.sort();
        v
    };
    let sorted = |xs: &[&str]| -> Vec<String> {
        let mut v: Vec<String> = xs.iter().map(|s| s.to_string()).collect();
        v.sort();
        v
    };
    ensure(coeffs(&d2) == sorted(&["-1", "-1", "3", "-1"]), || "D_2 coefficients".into())?;
    ensure(coeffs(&d3) == sorted(&["1", "-1", "4", "-6", "-1", "4", "-1"]), || "D_3 coefficients".into())?;

    let g = fgh(&e, Q);
    let mono = |i, j, k, c| Poly::monomial(Q, Monomial::new(i, j, k), c);
    let expansion = &(&(&g.f.pow(2) - &(&mono(0, 0, 3, 1) * &g.g.pow(2))) - &(&mono(2, 0, 1, 1) * &g.h.pow(2)))
        - &(&mono(1, 0, 2, 2) * &(&g.g * &g.h));
    ensure(expansion == d3, || format!("F^2 - z^3G^2 - x^2zH^2 - 2xz^2GH = {expansion}"))?;
    let [(lib_d3, cert), _] = d3_type1(&e, Q).map_err(err)?;
    ensure(lib_d3 == d3 && cert.verify(), || "library certificate for D_3 does not re-expand".into())?;
    Ok(format!("exponents {ex:?}; D_2 (4 terms), D_3 (7 terms) and its certificate exact"))
}

fn third_power_verdicts() -> Outcome {
    let e = p5_11_4()?;
    let rep = verify_harbourne_profile(&e, Q).map_err(err)?;
    let t = &rep.third_power;
    ensure(!t.contained && t.witness.as_deref() == Some("D_3") && t.witness_degree == Some(44), || {
        format!("P(5,11,4): {t:?}")
    })?;

    let third = |e: &MatrixExponents, field: FieldSpec| -> Result<bool, String> {
        let b3 = sympow_basis(3, e, field).map_err(err)?;
        let mp2 = m_multiples(&ordinary_power(2, e, field), 1);
        let (v, _) = check_containment("P^(3) ⊆ m P^2", &b3.ideal, &mp2, "m P^2", Some(third_power_criterion(e)), 1)
            .map_err(err)?;
        Ok(v.contained)
    };
    for s in 4..=8 {
        ensure(!third(&s_family(s), Q)?, || format!("s = {s}: contained"))?;
    }
    let t2 = matrix(TYPE2[0].0);
    let f2 = FieldSpec::prime(2).map_err(err)?;
    ensure(third(&t2, Q)?, || "P(7,9,10) over Q: not contained".into())?;
    ensure(third(&t2, f2)?, || "P(7,9,10) over F_2: not contained".into())?;
    let prov = sympow_basis(3, &t2, f2).map_err(err)?.provenance;
    ensure(prov == Provenance::Type2ThirdChar2, || format!("F_2 basis came from {prov:?}"))?;
    ensure(char2_identity(&t2, f2).map_err(err)?, || "characteristic 2 identity fails".into())?;
    Ok("P(5,11,4) not contained (D_3, degree 44); s = 4..8 not contained; P(7,9,10) contained over Q and F_2".into())
}

fn stable_profile() -> Outcome {
    let e = p5_11_4()?;
    let rep = verify_harbourne_profile(&e, Q).map_err(err)?;
    ensure(rep.r == Some(3) && rep.n == Some(3), || format!("r = {:?}, n = {:?}", rep.r, rep.n))?;
    let p = &rep.profile;
    ensure(p.len() == 3, || format!("{} profile entries", p.len()))?;
    ensure(!p[0].contained && p[0].witness.as_deref() == Some("D_1"), || format!("{:?}", p[0]))?;
    ensure(!p[1].contained && p[1].witness.as_deref() == Some("D_3"), || format!("{:?}", p[1]))?;
    let b5 = sympow_basis(5, &e, Q).map_err(err)?;
    ensure(b5.provenance == Provenance::Type1PrimeRPlus2, || format!("P^(5) from {:?}", b5.provenance))?;
    ensure(p[2].contained && p[2].checked == b5.ideal.len(), || format!("{:?}", p[2]))?;
    Ok(format!("r = 3, n = 3; D_1 ∉ m P, D_3 ∉ m P^2; {} generators of P^(5) certified in m P^3", p[2].checked))
}

fn length_bookkeeping() -> Outcome {
    let mut seen = vec![];
    for raw in [[1, 2, 1, 1, 3, 1], [1, 3, 1, 1, 4, 1], [2, 3, 1, 1, 2, 1], [2, 5, 1, 1, 3, 1]] {
        let e = matrix(raw);
        let r = e.r_index().map_err(err)?;
        let case = length_case(&e).map_err(err)?;
        let b = e.b1 as u64;
        for l in 1..=r + 2 {
            let k = (l as u64 + 1) * l as u64 / 2;
            let gens = criterion_generators(l, &e, Q).map_err(err)?;
            let rep = verify_symbolic_equality(&gens, l, &e).map_err(err)?;
            ensure(rep.verdict == Verdict::True, || format!("{raw:?} level {l}: {rep:?}"))?;
            let (axis, expected) = match case {
                LengthCase::StrictModX => (&rep.mod_x, k * (e.c1 + 2 * e.c2) as u64 * b),
                LengthCase::EqualModZ => (&rep.mod_z, k * (2 * e.a1 + e.a2) as u64 * b),
            };
            ensure(
                matches!(axis, AxisOutcome::Length { length, .. } if *length == expected),
                || format!("{raw:?} level {l}: {axis:?}, expected length {expected}"),
            )?;
        }
        let name = match case {
            LengthCase::StrictModX => "mod x",
            LengthCase::EqualModZ => "mod z",
        };
        seen.push(format!("{raw:?} {name} l = 1..{}", r + 2));
    }
    Ok(seen.join("; "))
}

fn lemma_suite() -> Outcome {
    let mut count = 0;
    for (raw, _) in TYPE1_PRIME {
        let e = matrix(raw);
        let r = e.r_index().map_err(err)?;
        for l in 1..=r + 1 {
            ensure(dual_identity_check(l, &e, Q).map_err(err)?, || format!("{raw:?}: dual identity at {l}"))?;
        }
        let rep = verify_harbourne_profile(&e, Q).map_err(err)?;
        // D_l ∈ m^delta P^((l+1)/2) for l = 0..=r+1 come first
        let delta = r as usize + 2;
        for (l, v) in rep.lemmas[..delta].iter().enumerate() {
            ensure(v.claim.starts_with(&format!("D_{l} ∈")), || format!("{raw:?}: lemma {l} is {}", v.claim))?;
        }
        ensure(rep.lemmas.len() > delta + r as usize, || format!("{raw:?}: too few clearing lemmas"))?;
        ensure(rep.lemmas.iter().all(|v| v.contained), || format!("{raw:?}: lemma not certified"))?;
        count += rep.lemmas.len();
    }
    Ok(format!("{} fixtures, {count} memberships certified", TYPE1_PRIME.len()))
}

fn property_suites() -> Outcome {
    props::replay(200, props::ring_case(), props::ring_all).map_err(|e| format!("ring: {e}"))?;
    props::replay(100, props::staircase(), props::length_matches_enumeration)
        .map_err(|e| format!("staircase length: {e}"))?;
    props::replay(100, (props::staircase(), props::padding()), |(c, p)| props::reduction_recovers_corners(c, p))
        .map_err(|e| format!("staircase reduction: {e}"))?;
    let ideals = props::ideals();
    props::replay(100, props::member_case(), |c| props::members_are_certified(&ideals, c))
        .map_err(|e| format!("membership soundness: {e}"))?;
    props::replay(100, props::member_case(), |c| props::verdicts_match_oracle(&ideals, c))
        .map_err(|e| format!("membership oracle: {e}"))?;
    let ms = all_matrices();
    for e in &ms {
        check_kernel(e).map_err(|m| format!("{:?}: {m}", e.exponents()))?;
    }
    for (raw, _) in TYPE1_PRIME {
        check_congruences(&matrix(raw)).map_err(|m| format!("{raw:?}: {m}"))?;
    }
    Ok(format!(
        "ring 200, staircase 100+100, membership 100+100 cases; kernel on {} fixtures; congruences on {}",
        ms.len(),
        TYPE1_PRIME.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 6] = [
        ("example P(5,11,4)", 1, example_reproduction),
        ("third-power verdicts", 30, third_power_verdicts),
        ("stable profile P(5,11,4)", 120, stable_profile),
        ("length bookkeeping", 60, length_bookkeeping),
        ("lemma suite", 120, lemma_suite),
        ("property suites", 300, property_suites),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let took = start.elapsed();
        let over = took > Duration::from_secs(budget);
        let (mark, detail) = match (&result, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("over the {budget} s budget; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if mark == "FAIL" {
            failed += 1;
        }
        println!("criterion {}: {mark} {name} ({:.2} s) {detail}", i + 1, took.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
