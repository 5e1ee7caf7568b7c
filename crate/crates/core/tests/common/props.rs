//! Property bodies shared by the randomized suites and the acceptance run.

use std::collections::HashMap;

use monocurve::colength::{reduce_and_monomialize, staircase_length, Staircase};
use monocurve::membership::{m_multiples, monomials_of_wdegree, IdealGens, Membership, Solver};
use monocurve::poly::Weights;
use monocurve::sympow::{ordinary_power, sympow_basis};
use monocurve::{FieldSpec, Monomial, Poly, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

type Check = Result<(), TestCaseError>;

/// Runs `test` on `cases` inputs from a fixed seed.
pub fn replay<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Check) -> Result<(), String> {
    let rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, rng);
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

// polynomial ring

pub fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        Just(FieldSpec::prime(2).unwrap()),
        Just(FieldSpec::prime(7).unwrap()),
        Just(FieldSpec::prime(101).unwrap()),
    ]
}

pub fn monomial() -> impl Strategy<Value = Monomial> {
    (0u32..5, 0u32..5, 0u32..5).prop_map(|(i, j, k)| Monomial::new(i, j, k))
}

fn terms() -> impl Strategy<Value = Vec<(Monomial, i64)>> {
    prop::collection::vec((monomial(), -6i64..7), 0..6)
}

fn build(field: FieldSpec, t: &[(Monomial, i64)]) -> Poly {
    t.iter().fold(Poly::zero(field), |acc, (m, c)| &acc + &Poly::monomial(field, *m, *c))
}

/// Canonical representative of an integer-valued rational in `field`.
fn reduce(field: FieldSpec, c: BigRational) -> BigRational {
    match field.characteristic() {
        0 => c,
        p => {
            let n = c.to_integer() % BigInt::from(p);
            BigRational::from_integer(if n < BigInt::from(0) { n + BigInt::from(p) } else { n })
        }
    }
}

pub fn three() -> impl Strategy<Value = (Poly, Poly, Poly)> {
    field_strategy().prop_flat_map(|f| {
        (terms(), terms(), terms()).prop_map(move |(a, b, c)| (build(f, &a), build(f, &b), build(f, &c)))
    })
}

pub fn ring_axioms((a, b, c): (Poly, Poly, Poly)) -> Check {
    let field = a.field();
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert_eq!(&a + &Poly::zero(field), a.clone());
    prop_assert_eq!(&a * &Poly::one(field), a.clone());
    prop_assert!((&a + &-&a).is_zero());
    prop_assert_eq!(&a - &b, &a + &-&b);
    Ok(())
}

pub fn division_round_trip(a: Poly, m: Monomial, extra: Monomial) -> Check {
    let product = a.mul_monomial(&m);
    prop_assert_eq!(product.exact_div_monomial(&m).unwrap(), a.clone());
    // a term not divisible by the divisor makes division fail
    let big = m.mul(&extra).mul(&Monomial::new(1, 0, 0));
    let with_small = &product + &Poly::monomial(a.field(), Monomial::ONE, 1);
    if big != Monomial::ONE {
        prop_assert!(with_small.exact_div_monomial(&big).is_err());
    }
    Ok(())
}

pub fn powers_match_products(a: Poly, k: u32) -> Check {
    let mut acc = Poly::one(a.field());
    for _ in 0..k {
        acc = &acc * &a;
    }
    prop_assert_eq!(a.pow(k), acc);
    Ok(())
}

pub fn substitution_is_a_ring_map(a: Poly, b: Poly, w: (u64, u64, u64)) -> Check {
    let w = Weights([w.0, w.1, w.2]);
    let sa = a.substitute_powers(&w);
    let sb = b.substitute_powers(&w);
    prop_assert_eq!((&a * &b).substitute_powers(&w), sa.mul(&sb));
    let sum = (&a + &b).substitute_powers(&w);
    for e in 0..200 {
        let lhs = sum.coeff(e);
        let rhs = reduce(a.field(), sa.coeff(e) + sb.coeff(e));
        prop_assert_eq!(lhs, rhs);
    }
    Ok(())
}

pub fn parse_print_round_trip(a: Poly) -> Check {
    let printed = a.to_string();
    prop_assert_eq!(Poly::parse(a.field(), &printed).unwrap(), a.clone());
    prop_assert_eq!(printed, Poly::parse(a.field(), &a.to_string()).unwrap().to_string());
    Ok(())
}

pub type RingCase = ((Poly, Poly, Poly), Monomial, Monomial, u32, (u64, u64, u64));

/// Every ring property in one case, for the acceptance replay.
pub fn ring_case() -> impl Strategy<Value = RingCase> {
    (three(), monomial(), monomial(), 0u32..4, (1u64..9, 1u64..9, 1u64..9))
}

pub fn ring_all(((a, b, c), m, extra, k, w): RingCase) -> Check {
    ring_axioms((a.clone(), b.clone(), c))?;
    division_round_trip(a.clone(), m, extra)?;
    powers_match_products(a.clone(), k)?;
    substitution_is_a_ring_map(a.clone(), b, w)?;
    parse_print_round_trip(a)
}

// staircases

/// Corners from `k` distinct u's and v's.
pub fn staircase() -> impl Strategy<Value = Vec<(u64, u64)>> {
    (1usize..6).prop_flat_map(|k| {
        (
            prop::collection::btree_set(1u64..25, k),
            prop::collection::btree_set(1u64..25, k),
        )
            .prop_map(|(us, vs)| {
                let mut u: Vec<u64> = us.into_iter().rev().collect();
                u.push(0);
                let mut v = vec![0];
                v.extend(vs);
                u.into_iter().zip(v).collect()
            })
    })
}

/// Monomials `s^a t^b` divisible by no corner, counted one by one.
pub fn brute_force(corners: &[(u64, u64)]) -> u64 {
    let umax = corners[0].0;
    let vmax = corners.last().unwrap().1;
    let mut n = 0;
    for a in 0..umax {
        for b in 0..vmax {
            if !corners.iter().any(|&(u, v)| u <= a && v <= b) {
                n += 1;
            }
        }
    }
    n
}

pub fn length_matches_enumeration(corners: Vec<(u64, u64)>) -> Check {
    let s = Staircase::new(corners.clone()).unwrap();
    prop_assert_eq!(staircase_length(&s), brute_force(&corners));
    Ok(())
}

pub type Padding = (Vec<(u32, u32)>, Vec<u32>);

pub fn padding() -> impl Strategy<Value = Padding> {
    (prop::collection::vec((0u32..30, 0u32..30), 0..5), prop::collection::vec(0u32..3, 12))
}

pub fn reduction_recovers_corners(corners: Vec<(u64, u64)>, (junk, xs): Padding) -> Check {
    // y^u z^v, padded with multiples and x-terms that vanish mod x
    let f = FieldSpec::Rationals;
    let w = Weights([1, 1, 1]);
    let mut gens: Vec<Poly> = corners
        .iter()
        .map(|&(u, v)| Poly::monomial(f, Monomial::new(0, u as u32, v as u32), 1))
        .collect();
    for (i, (a, b)) in junk.iter().enumerate() {
        let (u, v) = corners[i % corners.len()];
        gens.push(Poly::monomial(f, Monomial::new(0, u as u32 + a, v as u32 + b), 3));
    }
    let gens: Vec<(String, Poly)> = gens
        .into_iter()
        .enumerate()
        .map(|(i, g)| {
            let d = g.leading_term().unwrap().0.total_degree();
            let e = xs[i % xs.len()];
            let extra = Poly::monomial(f, Monomial::new(e + 1, 0, d.saturating_sub(e + 1)), 5);
            let g = if d > e { &g + &extra } else { g };
            (format!("g{i}"), g)
        })
        .collect();
    let ideal = IdealGens::new(w, f, gens).unwrap();
    let s = reduce_and_monomialize(&ideal, Var::X).unwrap();
    prop_assert_eq!(s.pairs(), &corners[..]);
    Ok(())
}

// membership

pub fn ideals() -> Vec<IdealGens> {
    let mut out = vec![];
    for raw in [[1, 2, 1, 1, 3, 1], [3, 1, 2, 1, 2, 1]] {
        let e = super::matrix(raw);
        for field in [FieldSpec::Rationals, FieldSpec::prime(7).unwrap()] {
            out.push(ordinary_power(1, &e, field));
            out.push(ordinary_power(2, &e, field));
            out.push(m_multiples(&ordinary_power(1, &e, field), 1));
            out.push(sympow_basis(2, &e, field).unwrap().ideal);
        }
    }
    out
}

/// Rank by plain Gaussian elimination, over Q or over F_p.
fn rank(rows: &[Vec<BigRational>], p: u64) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let modp = |c: BigRational| -> BigRational {
        if p == 0 {
            return c;
        }
        let pi = BigInt::from(p);
        let num = ((c.numer() % &pi) + &pi) % &pi;
        let den = ((c.denom() % &pi) + &pi) % &pi;
        let inv = den.modpow(&(&pi - 2), &pi);
        BigRational::from_integer((num * inv) % &pi)
    };
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, piv);
        let inv = modp(BigRational::from_integer(1.into()) / m[r][c].clone());
        let pivot_row: Vec<BigRational> = m[r].iter().map(|x| modp(x * &inv)).collect();
        m[r] = pivot_row.clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    m[i][j] = modp(&m[i][j] - &f * &pivot_row[j]);
                }
            }
        }
        r += 1;
    }
    r
}

/// Membership of `f` in the degree-`d` component, by comparing ranks.
pub fn oracle(f: &Poly, ideal: &IdealGens, d: u64) -> bool {
    let w = ideal.weights();
    let basis = monomials_of_wdegree(d, &w);
    let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let vec_of = |p: &Poly| {
        let mut v = vec![BigRational::zero(); basis.len()];
        for (m, c) in p.terms() {
            v[index[m]] = c.clone();
        }
        v
    };
    let mut rows = vec![];
    for (g, &dg) in ideal.generators().iter().zip(ideal.degrees()) {
        if dg <= d {
            for m in monomials_of_wdegree(d - dg, &w) {
                rows.push(vec_of(&g.mul_monomial(&m)));
            }
        }
    }
    let p = ideal.field().characteristic();
    let before = rank(&rows, p);
    rows.push(vec_of(f));
    rank(&rows, p) == before
}

/// A random element of the degree-`d` component of the ideal.
fn combination(ideal: &IdealGens, d: u64, picks: &[(usize, usize, i64)]) -> Poly {
    let field = ideal.field();
    let mut f = Poly::zero(field);
    for &(gi, mi, c) in picks {
        let gi = gi % ideal.len();
        let dg = ideal.degrees()[gi];
        if dg > d {
            continue;
        }
        let ms = monomials_of_wdegree(d - dg, &ideal.weights());
        if ms.is_empty() {
            continue;
        }
        let m = ms[mi % ms.len()];
        f = &f + &ideal.generators()[gi].mul_monomial(&m).scale_int(c);
    }
    f
}

pub type MemberCase = (usize, u64, Vec<(usize, usize, i64)>, usize, i64);

pub fn member_case() -> impl Strategy<Value = MemberCase> {
    (
        0usize..16,
        0u64..24,
        prop::collection::vec((0usize..40, 0usize..40, -3i64..4), 1..6),
        0usize..100,
        1i64..5,
    )
}

pub fn members_are_certified(all: &[IdealGens], (which, off, picks, _, _): MemberCase) -> Check {
    let ideal = &all[which % all.len()];
    let d = ideal.degrees().iter().max().unwrap() + off;
    let f = combination(ideal, d, &picks);
    if f.is_zero() {
        return Ok(());
    }
    match Solver::new(ideal).membership(&f).unwrap() {
        Membership::Member(c) => {
            prop_assert!(c.verify(&f, ideal));
            prop_assert_eq!(c.expand(ideal), f);
        }
        Membership::NotMember(n) => prop_assert!(false, "member refuted at degree {}", n.degree),
    }
    Ok(())
}

pub fn verdicts_match_oracle(all: &[IdealGens], (which, off, picks, mi, c): MemberCase) -> Check {
    let ideal = &all[which % all.len()];
    let d = ideal.degrees().iter().min().unwrap() + off;
    let ms = monomials_of_wdegree(d, &ideal.weights());
    if ms.is_empty() {
        return Ok(());
    }
    let noise = Poly::monomial(ideal.field(), ms[mi % ms.len()], c);
    let f = &combination(ideal, d, &picks) + &noise;
    if f.is_zero() {
        return Ok(());
    }
    let expected = oracle(&f, ideal, d);
    let got = Solver::new(ideal).membership(&f).unwrap();
    prop_assert_eq!(got.is_member(), expected);
    if let Membership::NotMember(n) = got {
        prop_assert_eq!(n.degree, d);
        prop_assert!(n.residual_lead.weighted_degree(&ideal.weights()) == d);
    }
    Ok(())
}
