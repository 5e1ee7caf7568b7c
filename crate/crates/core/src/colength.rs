//! Colengths of monomial ideals in two variables and the length test that
//! identifies a candidate ideal with a symbolic power.

use serde::{Deserialize, Serialize};

use crate::curve::MatrixExponents;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::membership::{IdealGens, Solver};
use crate::poly::{Monomial, Poly, Var};
use crate::sympow::{d_sequence, fgh, ordinary_power, Fgh};

/// Corners `(u_i, v_i)` of a monomial ideal `(s^u_i t^v_i)` in two variables,
/// with `u` strictly decreasing to 0 and `v` strictly increasing from 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Staircase {
    pairs: Vec<(u64, u64)>,
}

impl Staircase {
    pub fn new(pairs: Vec<(u64, u64)>) -> Result<Self> {
        let bad = |why: &str| Err(Error::MalformedStaircase(format!("{why}: {pairs:?}")));
        if pairs.len() < 2 {
            return bad("need at least two corners");
        }
        if pairs[0].1 != 0 {
            return bad("first v must be 0");
        }
        if pairs.last().expect("nonempty").0 != 0 {
            return bad("last u must be 0");
        }
        for w in pairs.windows(2) {
            if w[0].0 <= w[1].0 {
                return bad("u must strictly decrease");
            }
            if w[0].1 >= w[1].1 {
                return bad("v must strictly increase");
            }
        }
        Ok(Staircase { pairs })
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }
}

/// `sum u_i (v_(i+1) - v_i)`, the number of monomials outside the ideal.
pub fn staircase_length(s: &Staircase) -> u64 {
    s.pairs.windows(2).map(|w| w[0].0 * (w[1].1 - w[0].1)).sum()
}

/// The two surviving variables after setting `v = 0`, in order `(u, v)`.
pub fn remaining_vars(v: Var) -> (Var, Var) {
    match v {
        Var::X => (Var::Y, Var::Z),
        Var::Y => (Var::X, Var::Z),
        Var::Z => (Var::X, Var::Y),
    }
}

/// Reduces every generator modulo `v` and reads off the staircase, provided
/// each reduction is a scalar times a monomial.
pub fn reduce_and_monomialize(ideal: &IdealGens, v: Var) -> Result<Staircase> {
    let (s, t) = remaining_vars(v);
    let mut corners: Vec<(u64, u64)> = Vec::new();
    for (label, g) in ideal.iter() {
        let r = g.reduce_mod_variable(v);
        if r.is_zero() {
            continue;
        }
        let (m, _) = r
            .as_term()
            .ok_or_else(|| Error::NonMonomialReduction(format!("{label} = {r} mod {}", v.name())))?;
        corners.push((m.exp(s) as u64, m.exp(t) as u64));
    }
    // Keep the minimal generators, then order by decreasing u.
    corners.sort();
    corners.dedup();
    let mut minimal: Vec<(u64, u64)> = Vec::new();
    for c in corners {
        if minimal.iter().any(|k| k.0 <= c.0 && k.1 <= c.1) {
            continue;
        }
        minimal.push(c);
    }
    minimal.reverse();
    if minimal.first().map(|c| c.1) != Some(0) {
        return Err(Error::NotArtinian(s.name()));
    }
    if minimal.last().map(|c| c.0) != Some(0) {
        return Err(Error::NotArtinian(t.name()));
    }
    Staircase::new(minimal)
}

/// Outcome of the length test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    /// No axis gave a monomial reduction, so the test does not apply.
    Inconclusive,
}

/// What happened on one reduction axis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum AxisOutcome {
    Length { length: u64, target: u64 },
    NonMonomial { generator: String },
    NotArtinian,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthReport {
    pub level: u32,
    pub verdict: Verdict,
    /// Every generator certified in `P^(l)` via a cleared multiple in `P^l`.
    pub contained: bool,
    /// First generator whose cleared multiples were not certified.
    pub uncertified: Option<String>,
    pub mod_x: AxisOutcome,
    pub mod_z: AxisOutcome,
}

fn binom2(n: u64) -> u64 {
    n * (n - 1) / 2
}

/// `binom(l+1, 2) (c1 + 2 c2) b` and `binom(l+1, 2) (2 a1 + a2) b`.
pub fn length_targets(level: u32, e: &MatrixExponents) -> (u64, u64) {
    let k = binom2(level as u64 + 1);
    let b = e.b1 as u64;
    (
        k * (e.c1 as u64 + 2 * e.c2 as u64) * b,
        k * (2 * e.a1 as u64 + e.a2 as u64) * b,
    )
}

fn axis(ideal: &IdealGens, v: Var, target: u64) -> Result<AxisOutcome> {
    match reduce_and_monomialize(ideal, v) {
        Ok(s) => Ok(AxisOutcome::Length { length: staircase_length(&s), target }),
        Err(Error::NonMonomialReduction(g)) => Ok(AxisOutcome::NonMonomial { generator: g }),
        Err(Error::NotArtinian(_)) => Ok(AxisOutcome::NotArtinian),
        Err(e) => Err(e),
    }
}

/// Decides `B = P^(l)` for type 1' by the length criterion: every generator
/// of `B` must be certified in `P^(l)` and the colength of `B + (x)` or of
/// `B + (z)` must hit its target.
pub fn verify_symbolic_equality(b: &IdealGens, level: u32, e: &MatrixExponents) -> Result<LengthReport> {
    e.r_index()?;
    if level == 0 {
        return Err(Error::LevelOutOfRange { level, max: e.r_index()? + 2 });
    }
    let field = b.field();
    let power = ordinary_power(level, e, field);
    if power.weights() != b.weights() {
        return Err(Error::WeightMismatch);
    }
    let multipliers = [
        Monomial::new(0, 0, (level - 1) * e.c2),
        Monomial::new((level - 1) * e.a1, 0, 0),
    ];
    let mut solver = Solver::new(&power);
    let mut uncertified = None;
    for (label, g) in b.iter() {
        let mut ok = false;
        for m in &multipliers {
            if solver.membership(&g.mul_monomial(m))?.is_member() {
                ok = true;
                break;
            }
        }
        if !ok {
            uncertified = Some(label.to_string());
            break;
        }
    }
    let (tx, tz) = length_targets(level, e);
    let mod_x = axis(b, Var::X, tx)?;
    let mod_z = axis(b, Var::Z, tz)?;
    let hits = |o: &AxisOutcome| matches!(o, AxisOutcome::Length { length, target } if length == target);
    let applies = |o: &AxisOutcome| !matches!(o, AxisOutcome::NonMonomial { .. });
    let contained = uncertified.is_none();
    let verdict = if !contained {
        Verdict::False
    } else if hits(&mod_x) || hits(&mod_z) {
        Verdict::True
    } else if applies(&mod_x) || applies(&mod_z) {
        Verdict::False
    } else {
        Verdict::Inconclusive
    };
    Ok(LengthReport { level, verdict, contained, uncertified, mod_x, mod_z })
}

/// Which variable the length test reduces by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LengthCase {
    /// `a2 > (r-1) a1`, reduce modulo `x`.
    StrictModX,
    /// `a2 = (r-1) a1`, reduce modulo `z`.
    EqualModZ,
}

pub fn length_case(e: &MatrixExponents) -> Result<LengthCase> {
    let r = e.r_index()?;
    Ok(if e.a2 > (r - 1) * e.a1 { LengthCase::StrictModX } else { LengthCase::EqualModZ })
}

fn gh_label(i: u32, j: u32) -> String {
    let part = |b: &str, k: u32| match k {
        0 => None,
        1 => Some(b.to_string()),
        _ => Some(format!("{b}^{k}")),
    };
    let parts: Vec<String> = [part("G", i), part("H", j)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// The candidate generating set of `P^(l)` used in the length proof, for
/// `1 <= l <= r + 2`.
pub fn criterion_generators(level: u32, e: &MatrixExponents, field: FieldSpec) -> Result<IdealGens> {
    let r = e.r_index()?;
    if level == 0 || level > r + 2 {
        return Err(Error::LevelOutOfRange { level, max: r + 2 });
    }
    let case = length_case(e)?;
    let Fgh { f, g, h } = fgh(e, field);
    let d = d_sequence(level.min(r + 1), e, field)?;
    let dv = |k: u32| d[k as usize].value.clone();
    let gh = |i: u32, j: u32| (gh_label(i, j), &g.pow(i) * &h.pow(j));
    let mut gens: Vec<(String, Poly)> = Vec::new();
    let rl = format!("D_{r}");
    if level <= r {
        gens.push((format!("D_{level}"), dv(level)));
        for j in 0..=level {
            gens.push(gh(level - j, j));
        }
    } else if level == r + 1 {
        gens.push((format!("F*{rl}"), &f * &dv(r)));
        gens.push((format!("H*{rl}"), &h * &dv(r)));
        gens.push((format!("G*{rl}"), &g * &dv(r)));
        match case {
            LengthCase::StrictModX => {
                gens.push((format!("D_{}", r + 1), dv(r + 1)));
                for j in 1..=r + 1 {
                    gens.push(gh(r + 1 - j, j));
                }
            }
            LengthCase::EqualModZ => {
                for i in 0..=r {
                    gens.push(gh(i, r + 1 - i));
                }
            }
        }
    } else {
        let d2 = dv(2);
        let dr = dv(r);
        gens.push((format!("D_2*{rl}"), &d2 * &dr));
        gens.push((format!("H^2*{rl}"), &h.pow(2) * &dr));
        gens.push((format!("G*H*{rl}"), &(&g * &h) * &dr));
        gens.push((format!("G^2*{rl}"), &g.pow(2) * &dr));
        match case {
            LengthCase::StrictModX => {
                let dn = dv(r + 1);
                gens.push((format!("H*D_{}", r + 1), &h * &dn));
                gens.push((format!("G*D_{}", r + 1), &g * &dn));
                for j in 2..=r + 2 {
                    gens.push(gh(r + 2 - j, j));
                }
            }
            LengthCase::EqualModZ => {
                for i in 0..=r {
                    gens.push(gh(i, r + 2 - i));
                }
            }
        }
    }
    IdealGens::new(e.grading(), field, gens)
}
