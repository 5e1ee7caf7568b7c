#![allow(dead_code)]

pub mod props;

use monocurve::colength::{length_case, LengthCase};
use monocurve::curve::{classify, Exponents, MatrixExponents};
use monocurve::sympow::{d_sequence, fgh};
use monocurve::{FieldSpec, Monomial, Poly, Var};

/// Type 1' matrices used across the suites, with the curve weights they give.
pub const TYPE1_PRIME: [([u32; 6], [u64; 3]); 8] = [
    ([1, 2, 1, 1, 3, 1], [5, 11, 4]),
    ([1, 3, 1, 1, 4, 1], [6, 19, 5]),
    ([1, 4, 1, 1, 5, 1], [7, 29, 6]),
    ([1, 5, 1, 1, 6, 1], [8, 41, 7]),
    ([1, 6, 1, 1, 7, 1], [9, 55, 8]),
    ([2, 3, 1, 1, 2, 1], [4, 13, 7]),
    ([2, 5, 1, 1, 3, 1], [5, 26, 9]),
    ([1, 1, 1, 1, 2, 1], [4, 5, 3]),
];

pub const TYPE2: [([u32; 6], [u64; 3]); 1] = [([3, 1, 2, 1, 2, 1], [7, 9, 10])];

pub const TYPE1: [[u32; 6]; 2] = [[1, 2, 2, 1, 2, 1], [1, 2, 3, 1, 3, 1]];

pub fn matrix(raw: [u32; 6]) -> MatrixExponents {
    let m = classify(Exponents::from_array(raw)).unwrap();
    assert_eq!(m.exponents().to_array(), raw, "fixture not in normal form");
    m
}

/// `P(s+1, s^2-s-1, s)`.
pub fn s_family(s: u32) -> MatrixExponents {
    matrix([1, s - 2, 1, 1, s - 1, 1])
}

pub fn all_matrices() -> Vec<MatrixExponents> {
    TYPE1_PRIME
        .iter()
        .map(|f| f.0)
        .chain(TYPE2.iter().map(|f| f.0))
        .chain(TYPE1)
        .map(matrix)
        .collect()
}

/// `F, G, H` and the `D_l` vanish under `x, y, z -> t^n1, t^n2, t^n3`.
pub fn check_kernel(e: &MatrixExponents) -> Result<(), String> {
    let q = FieldSpec::Rationals;
    let w = e.weights().ok_or("fixture has no curve weights")?;
    let g = fgh(e, q);
    let mut polys = vec![("F".to_string(), g.f), ("G".to_string(), g.g), ("H".to_string(), g.h)];
    if let Ok(r) = e.r_index() {
        for d in d_sequence(r + 1, e, q).map_err(|x| x.to_string())?.into_iter().skip(1) {
            polys.push((format!("D_{}", d.level), d.value));
        }
    }
    for (name, p) in polys {
        if !p.substitute_powers(&w).is_zero() {
            return Err(format!("{name} does not vanish on {w}"));
        }
    }
    Ok(())
}

/// `D_l = (-y^b)^(l+1)` modulo the axis of the length criterion, the finer
/// form modulo a single monomial, and `D_(r+1) = -z^N` modulo x.
pub fn check_congruences(e: &MatrixExponents) -> Result<(), String> {
    let q = FieldSpec::Rationals;
    let r = e.r_index().map_err(|x| x.to_string())?;
    let d = d_sequence(r + 1, e, q).map_err(|x| x.to_string())?;
    let axis = match length_case(e).map_err(|x| x.to_string())? {
        LengthCase::StrictModX => Var::X,
        LengthCase::EqualModZ => Var::Z,
    };
    let y_pow = |k: u32| Poly::monomial(q, Monomial::new(0, e.b1 * k, 0), if k.is_multiple_of(2) { 1 } else { -1 });
    for l in 1..=r {
        let dl = &d[l as usize].value;
        let main = y_pow(l + 1);
        if dl.reduce_mod_variable(axis) != main {
            return Err(format!("D_{l} mod {} is not {main}", axis.name()));
        }
        let lead = Poly::monomial(q, Monomial::new((l - 1) * e.a1 + l * e.a2, 0, e.c1 - (l - 1) * e.c2), 1);
        let modulus = Monomial::new(e.a2.saturating_sub((l - 1) * e.a1), 0, e.c1 - (l - 1) * e.c2 + 1);
        let rest = &(dl - &main) + &lead;
        let stray = rest.terms().map(|(m, _)| *m).find(|m| !modulus.divides(m));
        if let Some(m) = stray {
            return Err(format!("D_{l}: {m} not divisible by {modulus}"));
        }
    }
    let gamma = ((r * e.c2) as i64 - e.c1 as i64).max(0) as u32;
    let top = Poly::monomial(q, Monomial::new(0, 0, (r + 1) * e.c1 + r * e.c2 + gamma), -1);
    if d[r as usize + 1].value.reduce_mod_variable(Var::X) != top {
        return Err(format!("D_{} mod x is not {top}", r + 1));
    }
    Ok(())
}
