//! Browser bindings. Every export takes the curve as text (`"5,11,4"`, or six
//! matrix exponents) and returns a JSON string; failures come back as
//! `{"error": "..."}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use monocurve::colength::{
    criterion_generators, length_case, length_targets, reduce_and_monomialize, remaining_vars, staircase_length,
    LengthCase,
};
use monocurve::curve::{analyze_curve, analyze_matrix, Analysis, Exponents, MatrixExponents};
use monocurve::harbourne::{stable_n, verify_harbourne_profile};
use monocurve::report::Classification;
use monocurve::sympow::{d_poly, fgh};
use monocurve::{FieldSpec, Var};

type Res = Result<Value, String>;

fn load(input: &str) -> Result<Analysis, String> {
    let v: Vec<u64> = input
        .split(',')
        .map(|t| t.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("could not read {input:?} as integers"))?;
    match v.len() {
        3 => analyze_curve(v[0], v[1], v[2]).map_err(|e| e.to_string()),
        6 => {
            let mut e = [0u32; 6];
            for (slot, x) in e.iter_mut().zip(&v) {
                *slot = u32::try_from(*x).map_err(|_| format!("{x} is too large"))?;
            }
            analyze_matrix(Exponents::from_array(e)).map(|d| Analysis::Matrix(Box::new(d))).map_err(|e| e.to_string())
        }
        n => Err(format!("expected 3 weights or 6 exponents, got {n} numbers")),
    }
}

fn matrix(input: &str) -> Result<MatrixExponents, String> {
    match load(input)? {
        Analysis::Matrix(d) => Ok(d.matrix),
        Analysis::CompleteIntersection { .. } => Err("complete intersection: the ideal has two generators".into()),
    }
}

fn finish(r: Res) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

pub fn analyze_value(input: &str) -> Res {
    let a = load(input)?;
    let class = serde_json::to_value(Classification::of_analysis(&a)).map_err(|e| e.to_string())?;
    let mut out = json!({ "classification": class });
    if let Analysis::Matrix(d) = &a {
        let m = d.matrix;
        let g = fgh(&m, FieldSpec::Rationals);
        out["r"] = json!(m.r_index().ok());
        out["n"] = json!(stable_n(&m).ok());
        out["generators"] = json!({
            "F": g.f.to_string(),
            "G": g.g.to_string(),
            "H": g.h.to_string(),
        });
    }
    Ok(out)
}

pub fn d_poly_value(input: &str, level: u32) -> Res {
    let d = d_poly(level, &matrix(input)?, FieldSpec::Rationals).map_err(|e| e.to_string())?;
    Ok(json!({
        "label": format!("D_{level}"),
        "polynomial": d.value.to_string(),
        "terms": d.value.terms().count(),
    }))
}

pub fn staircase_value(input: &str, level: u32) -> Res {
    let m = matrix(input)?;
    let err = |e: monocurve::Error| e.to_string();
    let axis = match length_case(&m).map_err(err)? {
        LengthCase::StrictModX => Var::X,
        LengthCase::EqualModZ => Var::Z,
    };
    let gens = criterion_generators(level, &m, FieldSpec::Rationals).map_err(err)?;
    let s = reduce_and_monomialize(&gens, axis).map_err(err)?;
    let (tx, tz) = length_targets(level, &m);
    let (u, v) = remaining_vars(axis);
    Ok(json!({
        "axis": axis.name(),
        "vars": [u.name(), v.name()],
        "corners": s.pairs(),
        "length": staircase_length(&s),
        "target": if axis == Var::X { tx } else { tz },
        "generators": gens.labels(),
    }))
}

pub fn harbourne_value(input: &str) -> Res {
    let rep = verify_harbourne_profile(&matrix(input)?, FieldSpec::Rationals).map_err(|e| e.to_string())?;
    let verdicts: Vec<Value> = rep
        .verdicts()
        .map(|v| json!({ "claim": v.claim, "contained": v.contained, "witness": v.witness }))
        .collect();
    Ok(json!({ "type": rep.kind, "r": rep.r, "n": rep.n, "verdicts": verdicts }))
}

#[wasm_bindgen]
pub fn analyze(input: &str) -> String {
    finish(analyze_value(input))
}

#[wasm_bindgen]
pub fn dpoly(input: &str, level: u32) -> String {
    finish(d_poly_value(input, level))
}

#[wasm_bindgen]
pub fn staircase(input: &str, level: u32) -> String {
    finish(staircase_value(input, level))
}

#[wasm_bindgen]
pub fn harbourne(input: &str) -> String {
    finish(harbourne_value(input))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exports() {
        let a = analyze_value("5,11,4").unwrap();
        assert_eq!(a["classification"]["type"], "type1prime");
        assert_eq!(a["n"], 3);
        assert_eq!(d_poly_value("5,11,4", 2).unwrap()["terms"], 4);
        let s = staircase_value("5,11,4", 3).unwrap();
        assert_eq!(s["length"], 24);
        assert_eq!(s["length"], s["target"]);
        let h = harbourne_value("5,11,4").unwrap();
        assert_eq!(h["verdicts"][0]["witness"], "D_3");
        assert!(dpoly("5,11", 2).contains("error"));
        assert!(analyze("4,6,9").contains("complete_intersection"));
    }
}
