//! The minors `F, G, H`, the distinguished elements `D_l`, and explicit
//! generating sets of the symbolic powers `P^(l)`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::curve::{Exponents, MatrixExponents, MatrixType};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::membership::{ideal_product, IdealGens};
use crate::poly::{Monomial, Poly};

/// The three minors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fgh {
    pub f: Poly,
    pub g: Poly,
    pub h: Poly,
}

impl Fgh {
    pub fn labelled(&self) -> [(String, Poly); 3] {
        [
            ("F".to_string(), self.f.clone()),
            ("G".to_string(), self.g.clone()),
            ("H".to_string(), self.h.clone()),
        ]
    }
}

fn mono(field: FieldSpec, x: u32, y: u32, z: u32, c: i64) -> Poly {
    Poly::monomial(field, Monomial::new(x, y, z), c)
}

fn fgh_of(e: Exponents, field: FieldSpec) -> Fgh {
    let Exponents { a1, a2, b1, b2, c1, c2 } = e;
    Fgh {
        f: &mono(field, 0, b1 + b2, 0, 1) - &mono(field, a2, 0, c1, 1),
        g: &mono(field, 0, 0, c1 + c2, 1) - &mono(field, a1, b2, 0, 1),
        h: &mono(field, a1 + a2, 0, 0, 1) - &mono(field, 0, b1, c2, 1),
    }
}

pub fn fgh(e: &MatrixExponents, field: FieldSpec) -> Fgh {
    fgh_of(e.exponents(), field)
}

/// `x^ex y^ey z^ez` with every exponent checked non-negative.
fn monomial_i(exps: [i64; 3]) -> Result<Monomial> {
    let mut out = [0u32; 3];
    for (o, e) in out.iter_mut().zip(exps) {
        *o = u32::try_from(e).map_err(|_| {
            Error::InternalMismatch(format!("negative exponent in x^{} y^{} z^{}", exps[0], exps[1], exps[2]))
        })?;
    }
    Ok(Monomial(out))
}

/// `c * x^ex y^ey z^ez` for non-negative exponents.
fn term(field: FieldSpec, exps: [i64; 3], c: i64) -> Result<Poly> {
    Ok(Poly::monomial(field, monomial_i(exps)?, c))
}

/// `D_l` with its exponent corrections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPoly {
    pub level: u32,
    pub value: Poly,
    pub alpha: u32,
    pub gamma: u32,
}

fn r_of(e: &MatrixExponents) -> u32 {
    e.a2 / e.a1 + 1
}

/// `D_0, ..., D_level` by the recursion from `D_0 = -y^b2`.
pub fn d_sequence(level: u32, e: &MatrixExponents, field: FieldSpec) -> Result<Vec<DPoly>> {
    if !e.kind.is_type1() {
        return Err(Error::WrongType { expected: "type 1", found: e.kind.name().into() });
    }
    let max = r_of(e) + 1;
    if level > max {
        return Err(Error::LevelOutOfRange { level, max });
    }
    let (a1, a2, b1, b2, c1, c2) =
        (e.a1 as i64, e.a2 as i64, e.b1 as i64, e.b2 as i64, e.c1 as i64, e.c2 as i64);
    let Fgh { g, h, .. } = fgh(e, field);
    let mut out = vec![DPoly { level: 0, value: mono(field, 0, e.b2, 0, -1), alpha: 0, gamma: 0 }];
    for n in 1..=level as i64 {
        let alpha = ((n - 1) * a1 - a2).max(0);
        let gamma = ((n - 1) * c2 - c1).max(0);
        let prev = &out.last().expect("nonempty").value;
        let left = (&h * prev).mul_monomial(&monomial_i([alpha, 0, 0])?);
        let right = &g.pow(n as u32) * &term(field, [alpha + a2 - (n - 1) * a1, (n - 1) * (b1 - b2), 0], 1)?;
        let value = (&left - &right).shift([0, 0, gamma - c2])?;
        out.push(DPoly { level: n as u32, value, alpha: alpha as u32, gamma: gamma as u32 });
    }
    Ok(out)
}

pub fn d_poly(level: u32, e: &MatrixExponents, field: FieldSpec) -> Result<DPoly> {
    Ok(d_sequence(level, e, field)?.pop().expect("nonempty"))
}

/// `target = sum cofactor_i * generator_i`, with generator labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub label: String,
    pub target: Poly,
    pub terms: Vec<CertificateTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateTerm {
    pub generator_label: String,
    pub generator: Poly,
    pub cofactor: Poly,
}

impl Certificate {
    fn checked(label: &str, target: Poly, terms: Vec<(&str, Poly, Poly)>) -> Result<Self> {
        let cert = Certificate {
            label: label.to_string(),
            target,
            terms: terms
                .into_iter()
                .map(|(l, g, h)| CertificateTerm { generator_label: l.to_string(), generator: g, cofactor: h })
                .collect(),
        };
        if cert.expand() != cert.target {
            return Err(Error::InternalMismatch(format!("certificate for {label} does not re-expand")));
        }
        Ok(cert)
    }

    pub fn expand(&self) -> Poly {
        let mut acc = Poly::zero(self.target.field());
        for t in &self.terms {
            acc = &acc + &(&t.cofactor * &t.generator);
        }
        acc
    }

    pub fn verify(&self) -> bool {
        self.expand() == self.target
    }

    /// Whether every cofactor lies in the maximal ideal.
    pub fn cofactors_in_m(&self) -> bool {
        self.terms.iter().all(|t| t.cofactor.constant_term() == num_rational::BigRational::from_integer(0.into()))
    }

    /// `h1*g1 + h2*g2 + ...` with generator labels, for display.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .terms
            .iter()
            .filter(|t| !t.cofactor.is_zero())
            .map(|t| format!("({})*{}", t.cofactor, t.generator_label))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// `D_2` and its expression in `F, G, H` with cofactors in the maximal ideal.
pub fn d2_general(e: &MatrixExponents, field: FieldSpec) -> Result<(Poly, Certificate)> {
    let (a1, a2, b1, b2, c1, c2) =
        (e.a1 as i64, e.a2 as i64, e.b1 as i64, e.b2 as i64, e.c1 as i64, e.c2 as i64);
    let alpha = (a1 - a2).max(0);
    let Fgh { f, g, h } = fgh(e, field);
    let inner = &(&h * &f).mul_monomial(&monomial_i([alpha, 0, 0])?)
        - &(&g.pow(2) * &term(field, [alpha + a2 - a1, b1 - b2, 0], 1)?);
    let d2 = inner.shift([0, 0, -c2])?;
    let cert = Certificate::checked(
        "D_2",
        d2.clone(),
        vec![
            ("F", f, term(field, [alpha, b1, 0], -1)?),
            ("G", g, term(field, [alpha + a2 - a1, b1 - b2, c1], -1)?),
            ("H", h, term(field, [alpha + a2, 0, c1 - c2], -1)?),
        ],
    )?;
    Ok((d2, cert))
}

/// The level-3 pair `D_3, D'_3` of a type-1 matrix, each written in
/// `F^2, G^2, H^2, GH`.
pub fn d3_type1(e: &MatrixExponents, field: FieldSpec) -> Result<[(Poly, Certificate); 2]> {
    if !e.kind.is_type1() {
        return Err(Error::WrongType { expected: "type 1", found: e.kind.name().into() });
    }
    let (a1, a2, b1, b2, c1, c2) =
        (e.a1 as i64, e.a2 as i64, e.b1 as i64, e.b2 as i64, e.c1 as i64, e.c2 as i64);
    let alpha = (2 * a1 - a2).max(0);
    let beta = (2 * b2 - b1).max(0);
    let gamma = (2 * c2 - c1).max(0);
    let Fgh { f, g, h } = fgh(e, field);
    let (f2, g2, h2, gh) = (f.pow(2), g.pow(2), h.pow(2), &g * &h);

    let d3 = d_poly(3, e, field)?.value;
    let cert = Certificate::checked(
        "D_3",
        d3.clone(),
        vec![
            ("F^2", f2.clone(), term(field, [alpha, b1 - b2, gamma], 1)?),
            ("G^2", g2.clone(), term(field, [a2 - 2 * a1 + alpha, 2 * b1 - 2 * b2, c1 + gamma], -1)?),
            ("H^2", h2.clone(), term(field, [a2 + alpha, 0, c1 - 2 * c2 + gamma], -1)?),
            ("G*H", gh.clone(), term(field, [a2 - a1 + alpha, b1 - b2, c1 - c2 + gamma], -2)?),
        ],
    )?;

    let d2 = d_poly(2, e, field)?.value;
    let inner = &(&(&h * &d2) * &term(field, [0, beta, 0], 1)?)
        + &(&(&f * &g2) * &term(field, [a2 - a1, b1 - 2 * b2 + beta, 0], 1)?);
    let d3p = inner.shift([0, 0, gamma - c2])?;
    let cert_p = Certificate::checked(
        "D'_3",
        d3p.clone(),
        vec![
            ("F^2", f2, term(field, [0, b1 - b2 + beta, gamma], 1)?),
            ("G^2", g2, term(field, [2 * a2 - a1, b1 - 2 * b2 + beta, c1 - c2 + gamma], -1)?),
            ("H^2", h2, term(field, [a2, beta, c1 - 2 * c2 + gamma], -1)?),
            ("G*H", gh, term(field, [a2 - a1, b1 - b2 + beta, c1 - c2 + gamma], -2)?),
        ],
    )?;
    Ok([(d3, cert), (d3p, cert_p)])
}

/// Type-2 `D_3` for exponents `e` and its cofactors against
/// `F^2, G^2, H^2, FG` (in that order).
fn d3_type2_parts(e: Exponents, field: FieldSpec) -> Result<(Poly, [Poly; 4])> {
    let (a1, a2, b1, b2, c1, c2) =
        (e.a1 as i64, e.a2 as i64, e.b1 as i64, e.b2 as i64, e.c1 as i64, e.c2 as i64);
    let alpha = (2 * a2 - a1).max(0);
    let beta = (2 * b2 - b1).max(0);
    let Fgh { f, g, h } = fgh_of(e, field);
    let inner = &(&(&h.pow(2) * &f) * &term(field, [a1 - 2 * a2 + alpha, beta, 0], 1)?)
        + &(&g.pow(3) * &term(field, [alpha, b1 - 2 * b2 + beta, 0], 1)?);
    let d3 = inner.shift([0, 0, -c2])?;
    let cofactors = [
        term(field, [a1 - 2 * a2 + alpha, b1 - b2 + beta, c2], 1)?,
        term(field, [alpha, b1 - 2 * b2 + beta, c1], 1)?,
        term(field, [a1 - a2 + alpha, beta, c1 - c2], -1)?,
        term(field, [a1 - a2 + alpha, b1 - b2 + beta, 0], 2)?,
    ];
    Ok((d3, cofactors))
}

/// `D_3`, `D_3^sigma`, `D_3^(sigma^2)` with their cofactors, where sigma
/// renames `x -> y -> z -> x` and rotates the exponents `a -> b -> c -> a`.
/// Cofactors of the `k`-th image are against the images of
/// `F^2, G^2, H^2, FG`.
fn type2_orbit(e: Exponents, field: FieldSpec) -> Result<Vec<(Poly, [Poly; 4])>> {
    let rotations = [
        ([e.a1, e.a2, e.b1, e.b2, e.c1, e.c2], [0, 1, 2]),
        ([e.b1, e.b2, e.c1, e.c2, e.a1, e.a2], [1, 2, 0]),
        ([e.c1, e.c2, e.a1, e.a2, e.b1, e.b2], [2, 0, 1]),
    ];
    rotations
        .into_iter()
        .map(|(rotated, perm)| {
            let (d, cofactors) = d3_type2_parts(Exponents::from_array(rotated), field)?;
            Ok((d.permute_vars(perm), cofactors.map(|c| c.permute_vars(perm))))
        })
        .collect()
}

/// Level-3 extras for a type-2 matrix: `D_3, D'_3, D''_3`, or a single
/// reduced generator in characteristic 2.
pub fn d3_type2(e: &MatrixExponents, field: FieldSpec) -> Result<Vec<(Poly, Certificate)>> {
    if e.kind != MatrixType::Type2 {
        return Err(Error::WrongType { expected: "type 2", found: e.kind.name().into() });
    }
    let Fgh { f, g, h } = fgh(e, field);
    let (f2, g2, h2) = (f.pow(2), g.pow(2), h.pow(2));

    if field.characteristic() == 2 {
        let (a1, a2, b1, b2, c1, c2) =
            (e.a1 as i64, e.a2 as i64, e.b1 as i64, e.b2 as i64, e.c1 as i64, e.c2 as i64);
        let alpha = (2 * a2 - a1).max(0);
        let beta = (2 * b2 - b1).max(0);
        let gamma = (2 * c2 - c1).max(0);
        let (d3, _) = d3_type2_parts(e.exponents(), field)?;
        let reduced = d3.shift([0, 0, gamma - c2])?;
        let cert = Certificate::checked(
            "D_3",
            reduced.clone(),
            vec![
                ("F^2", f2, term(field, [a1 - 2 * a2 + alpha, b1 - b2 + beta, gamma], -1)?),
                ("G^2", g2, term(field, [alpha, b1 - 2 * b2 + beta, c1 - c2 + gamma], -1)?),
                ("H^2", h2, term(field, [a1 - a2 + alpha, beta, c1 - 2 * c2 + gamma], 1)?),
            ],
        )?;
        return Ok(vec![(reduced, cert)]);
    }

    let gens: [[(&str, Poly); 4]; 3] = [
        [("F^2", f2.clone()), ("G^2", g2.clone()), ("H^2", h2.clone()), ("F*G", &f * &g)],
        [("G^2", g2.clone()), ("H^2", h2.clone()), ("F^2", f2.clone()), ("G*H", &g * &h)],
        [("H^2", h2), ("F^2", f2), ("G^2", g2), ("F*H", &f * &h)],
    ];
    let labels = ["D_3", "D'_3", "D''_3"];
    type2_orbit(e.exponents(), field)?
        .into_iter()
        .zip(gens)
        .zip(labels)
        .map(|(((d, cofactors), gens), label)| {
            let terms = gens.into_iter().zip(cofactors).map(|((l, g), c)| (l, g, c)).collect();
            Ok((d.clone(), Certificate::checked(label, d, terms)?))
        })
        .collect()
}

/// `z^(gamma-c2) D_3 = x^(alpha-a2) D'_3 = y^(beta-b2) D''_3`, which holds in
/// characteristic 2. False when the sides differ or a division is not exact.
pub fn char2_identity(e: &MatrixExponents, field: FieldSpec) -> Result<bool> {
    if e.kind != MatrixType::Type2 {
        return Err(Error::WrongType { expected: "type 2", found: e.kind.name().into() });
    }
    let (a1, a2, b1, b2, c1, c2) =
        (e.a1 as i64, e.a2 as i64, e.b1 as i64, e.b2 as i64, e.c1 as i64, e.c2 as i64);
    let alpha = (2 * a2 - a1).max(0);
    let beta = (2 * b2 - b1).max(0);
    let gamma = (2 * c2 - c1).max(0);
    let orbit = type2_orbit(e.exponents(), field)?;
    let sides = [
        orbit[0].0.shift([0, 0, gamma - c2]),
        orbit[1].0.shift([alpha - a2, 0, 0]),
        orbit[2].0.shift([0, beta - b2, 0]),
    ];
    match sides {
        [Ok(p), Ok(q), Ok(r)] => Ok(p == q && q == r),
        _ => Ok(false),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Products of `F, G, H` only (levels 0 and 1).
    PowersOnly,
    /// `P^2 + (D_2)`.
    SquarePlusD2,
    /// `P^(2) P + (D_3, D'_3)` for type 1.
    Type1Third,
    /// `P^(2) P + (D_3, D'_3, D''_3)` for type 2.
    Type2Third,
    /// `P^(2) P + (z^(gamma-c2) D_3)` for type 2 in characteristic 2.
    Type2ThirdChar2,
    /// `P^l + (D_l)` for `l <= r`.
    Type1PrimeLow,
    /// `P^(r) P + (D_(r+1))`.
    Type1PrimeRPlus1,
    /// `P^(r+1) P + P^(r) P^(2)`.
    Type1PrimeRPlus2,
}

impl Provenance {
    pub fn describe(self) -> &'static str {
        match self {
            Provenance::PowersOnly => "ordinary power",
            Provenance::SquarePlusD2 => "P^2 + (D_2)",
            Provenance::Type1Third => "P^(2)P + (D_3, D'_3)",
            Provenance::Type2Third => "P^(2)P + (D_3, D'_3, D''_3)",
            Provenance::Type2ThirdChar2 => "P^(2)P + (z^(gamma-c2) D_3), characteristic 2",
            Provenance::Type1PrimeLow => "P^l + (D_l)",
            Provenance::Type1PrimeRPlus1 => "P^(r)P + (D_(r+1))",
            Provenance::Type1PrimeRPlus2 => "P^(r+1)P + P^(r)P^(2)",
        }
    }
}

/// A generating set of `P^(l)`.
#[derive(Clone, Debug)]
pub struct SymbolicPowerBasis {
    pub level: u32,
    pub ideal: IdealGens,
    pub provenance: Provenance,
    /// Closed-form expressions of the extra generators, where known.
    pub certificates: Vec<Certificate>,
}

/// `P^l` generated by `F^i G^j H^k` with `i + j + k = l`.
pub fn ordinary_power(l: u32, e: &MatrixExponents, field: FieldSpec) -> IdealGens {
    let Fgh { f, g, h } = fgh(e, field);
    let (fp, gp, hp): (Vec<Poly>, Vec<Poly>, Vec<Poly>) = (
        (0..=l).map(|i| f.pow(i)).collect(),
        (0..=l).map(|i| g.pow(i)).collect(),
        (0..=l).map(|i| h.pow(i)).collect(),
    );
    let mut gens = Vec::new();
    for i in (0..=l).rev() {
        for j in (0..=l - i).rev() {
            let k = l - i - j;
            let label = power_label(&[("F", i), ("G", j), ("H", k)]);
            gens.push((label, &(&fp[i as usize] * &gp[j as usize]) * &hp[k as usize]));
        }
    }
    IdealGens::new(e.grading(), field, gens).expect("products of homogeneous minors")
}

fn power_label(factors: &[(&str, u32)]) -> String {
    let parts: Vec<String> = factors
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(b, e)| if *e == 1 { b.to_string() } else { format!("{b}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn union(parts: &[&IdealGens]) -> Result<IdealGens> {
    let first = parts[0];
    let mut out = IdealGens::new(first.weights(), first.field(), [])?;
    let mut seen = HashSet::new();
    for part in parts {
        for (label, g) in part.iter() {
            if seen.insert(g.monic()) {
                out.push(label.to_string(), g.clone())?;
            }
        }
    }
    Ok(out)
}

fn with_extras(base: IdealGens, extras: Vec<(String, Poly)>) -> Result<IdealGens> {
    let field = base.field();
    let extra = IdealGens::new(base.weights(), field, extras)?;
    union(&[&base, &extra])
}

/// Generating set of `P^(l)` for every level covered: `l <= 3` for any
/// matrix, and `l <= r + 2` for type 1'.
pub fn sympow_basis(level: u32, e: &MatrixExponents, field: FieldSpec) -> Result<SymbolicPowerBasis> {
    let p1 = ordinary_power(1, e, field);
    if level <= 1 {
        return Ok(SymbolicPowerBasis {
            level,
            ideal: ordinary_power(level, e, field),
            provenance: Provenance::PowersOnly,
            certificates: vec![],
        });
    }
    if level == 2 {
        let (d2, cert) = d2_general(e, field)?;
        return Ok(SymbolicPowerBasis {
            level,
            ideal: with_extras(ordinary_power(2, e, field), vec![("D_2".into(), d2)])?,
            provenance: Provenance::SquarePlusD2,
            certificates: vec![cert],
        });
    }
    match e.kind {
        MatrixType::Type1Prime => {
            let r = e.r_index()?;
            if level > r + 2 {
                return Err(Error::LevelOutOfRange { level, max: r + 2 });
            }
            if level <= r {
                let d = d_poly(level, e, field)?.value;
                return Ok(SymbolicPowerBasis {
                    level,
                    ideal: with_extras(ordinary_power(level, e, field), vec![(format!("D_{level}"), d)])?,
                    provenance: Provenance::Type1PrimeLow,
                    certificates: vec![],
                });
            }
            let pr = sympow_basis(r, e, field)?;
            if level == r + 1 {
                let d = d_poly(level, e, field)?.value;
                let prod = ideal_product(&pr.ideal, &p1)?;
                return Ok(SymbolicPowerBasis {
                    level,
                    ideal: with_extras(prod, vec![(format!("D_{level}"), d)])?,
                    provenance: Provenance::Type1PrimeRPlus1,
                    certificates: vec![],
                });
            }
            let pr1 = sympow_basis(r + 1, e, field)?;
            let p2 = sympow_basis(2, e, field)?;
            let a = ideal_product(&pr1.ideal, &p1)?;
            let b = ideal_product(&pr.ideal, &p2.ideal)?;
            Ok(SymbolicPowerBasis {
                level,
                ideal: union(&[&a, &b])?,
                provenance: Provenance::Type1PrimeRPlus2,
                certificates: vec![],
            })
        }
        MatrixType::Type1 | MatrixType::Type2 => {
            if level > 3 {
                return Err(Error::LevelOutOfRange { level, max: 3 });
            }
            let p2 = sympow_basis(2, e, field)?;
            let prod = ideal_product(&p2.ideal, &p1)?;
            let (extras, provenance) = if e.kind == MatrixType::Type1 {
                (d3_type1(e, field)?.to_vec(), Provenance::Type1Third)
            } else if field.characteristic() == 2 {
                (d3_type2(e, field)?, Provenance::Type2ThirdChar2)
            } else {
                (d3_type2(e, field)?, Provenance::Type2Third)
            };
            let gens = extras.iter().map(|(d, c)| (c.label.clone(), d.clone())).collect();
            Ok(SymbolicPowerBasis {
                level,
                ideal: with_extras(prod, gens)?,
                provenance,
                certificates: extras.into_iter().map(|(_, c)| c).collect(),
            })
        }
    }
}

fn require_type1_prime(level: u32, e: &MatrixExponents) -> Result<u32> {
    let r = e.r_index()?;
    if level == 0 || level > r + 1 {
        return Err(Error::LevelOutOfRange { level, max: r + 1 });
    }
    Ok(r)
}

/// Compares the two ways of clearing the recursion's negative exponents:
/// `x^(a1+alpha) z^gamma (H D_(l-1) - x^(a2-(l-1)a1) G^l)` against
/// `x^alpha z^(c2+gamma) (G D_(l-1) - z^(c1-(l-1)c2) H^l)`.
pub fn dual_identity_check(level: u32, e: &MatrixExponents, field: FieldSpec) -> Result<bool> {
    require_type1_prime(level, e)?;
    let (a1, a2, c1, c2) = (e.a1 as i64, e.a2 as i64, e.c1 as i64, e.c2 as i64);
    let l = level as i64;
    let alpha = ((l - 1) * a1 - a2).max(0);
    let gamma = ((l - 1) * c2 - c1).max(0);
    let Fgh { g, h, .. } = fgh(e, field);
    let prev = d_poly(level - 1, e, field)?.value;
    let lhs = &(&h * &prev).mul_monomial(&monomial_i([a1 + alpha, 0, gamma])?)
        - &g.pow(level).mul_monomial(&monomial_i([a1 + alpha + a2 - (l - 1) * a1, 0, gamma])?);
    let rhs = &(&g * &prev).mul_monomial(&monomial_i([alpha, 0, c2 + gamma])?)
        - &h.pow(level).mul_monomial(&monomial_i([alpha, 0, c2 + gamma + c1 - (l - 1) * c2])?);
    Ok(lhs == rhs)
}

/// `x^((l-1)a1)` and `z^((l-1)c2)`, each carrying `D_l` into `P^l`.
pub fn clearing_exponents(level: u32, e: &MatrixExponents) -> Result<(Monomial, Monomial)> {
    require_type1_prime(level, e)?;
    Ok((
        Monomial::new((level - 1) * e.a1, 0, 0),
        Monomial::new(0, 0, (level - 1) * e.c2),
    ))
}
