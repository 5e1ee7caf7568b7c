//! Membership in weighted-homogeneous ideals, decided one graded component at
//! a time by exact linear algebra.

use std::collections::{BTreeMap, HashSet};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{independent_mod_p, AnyEchelon};
use crate::poly::{Monomial, Poly, Weights};

/// A finite list of nonzero homogeneous generators with display labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealGens {
    weights: Weights,
    field: FieldSpec,
    gens: Vec<Poly>,
    labels: Vec<String>,
    degrees: Vec<u64>,
}

impl IdealGens {
    pub fn new(
        weights: Weights,
        field: FieldSpec,
        gens: impl IntoIterator<Item = (String, Poly)>,
    ) -> Result<Self> {
        let mut out = IdealGens { weights, field, gens: vec![], labels: vec![], degrees: vec![] };
        for (label, g) in gens {
            out.push(label, g)?;
        }
        Ok(out)
    }

    /// Generators labeled `g1, g2, ...`.
    pub fn from_polys(weights: Weights, field: FieldSpec, gens: Vec<Poly>) -> Result<Self> {
        IdealGens::new(
            weights,
            field,
            gens.into_iter().enumerate().map(|(i, g)| (format!("g{}", i + 1), g)),
        )
    }

    /// The unit ideal.
    pub fn unit(weights: Weights, field: FieldSpec) -> Self {
        IdealGens::new(weights, field, [("1".to_string(), Poly::one(field))]).expect("1 is homogeneous")
    }

    /// The maximal ideal `(x, y, z)`.
    pub fn maximal(weights: Weights, field: FieldSpec) -> Self {
        IdealGens::new(
            weights,
            field,
            crate::poly::Var::ALL.map(|v| (v.name().to_string(), Poly::var(field, v))),
        )
        .expect("variables are homogeneous")
    }

    pub fn push(&mut self, label: String, g: Poly) -> Result<()> {
        if g.field() != self.field {
            return Err(Error::FieldMismatch(self.field.to_string(), g.field().to_string()));
        }
        let d = g.weighted_degree(&self.weights)?;
        self.gens.push(g);
        self.labels.push(label);
        self.degrees.push(d);
        Ok(())
    }

    pub fn weights(&self) -> Weights {
        self.weights
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Poly)> {
        self.labels.iter().map(String::as_str).zip(&self.gens)
    }

    fn check_compatible(&self, other: &IdealGens) -> Result<()> {
        if self.weights != other.weights {
            return Err(Error::WeightMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }
}

/// All monomials of weighted degree `d`, in canonical order.
pub fn monomials_of_wdegree(d: u64, w: &Weights) -> Vec<Monomial> {
    let [n1, n2, n3] = w.0;
    let mut out = Vec::new();
    for k in 0..=d / n3 {
        let rest_k = d - k * n3;
        for j in 0..=rest_k / n2 {
            let rest = rest_k - j * n2;
            if rest.is_multiple_of(n1) {
                out.push(Monomial::new((rest / n1) as u32, j as u32, k as u32));
            }
        }
    }
    out.sort();
    out
}

/// Cofactors `h_i` with `f = sum h_i g_i`, aligned with the ideal's generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub cofactors: Vec<Poly>,
}

impl MembershipCertificate {
    pub fn expand(&self, ideal: &IdealGens) -> Poly {
        let mut acc = Poly::zero(ideal.field());
        for (h, g) in self.cofactors.iter().zip(ideal.generators()) {
            if !h.is_zero() {
                acc = &acc + &(h * g);
            }
        }
        acc
    }

    pub fn verify(&self, f: &Poly, ideal: &IdealGens) -> bool {
        self.cofactors.len() == ideal.len() && self.expand(ideal) == *f
    }

    /// Nonzero cofactors with their generator labels.
    pub fn labelled<'a>(&'a self, ideal: &'a IdealGens) -> impl Iterator<Item = (&'a str, &'a Poly)> {
        ideal.labels().iter().map(String::as_str).zip(&self.cofactors).filter(|(_, h)| !h.is_zero())
    }
}

/// Why a polynomial is not in the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonMembership {
    /// A weighted degree whose component is outside the ideal.
    pub degree: u64,
    /// Leading monomial of that component's residual after reduction.
    pub residual_lead: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Member(MembershipCertificate),
    NotMember(NonMembership),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

struct Component {
    rows: Vec<Monomial>,
    echelon: AnyEchelon,
    /// Generator index, multiplier monomial, and the scalar the pushed
    /// column carries relative to `m * g`.
    columns: Vec<(usize, Monomial, BigRational)>,
    /// Whether `echelon` holds every column or only a sieved subset whose
    /// span may be smaller.
    complete: bool,
}

/// Membership solver for one ideal, caching the echelon form of each
/// graded component it has seen.
pub struct Solver<'a> {
    ideal: &'a IdealGens,
    cache: BTreeMap<u64, Component>,
}

impl<'a> Solver<'a> {
    pub fn new(ideal: &'a IdealGens) -> Self {
        Solver { ideal, cache: BTreeMap::new() }
    }

    pub fn ideal(&self) -> &IdealGens {
        self.ideal
    }

    /// Over the rationals, first keeps only the columns that are independent
    /// modulo a large prime; [`Solver::homogeneous`] falls back to all
    /// columns when that span misses the target.
    fn build(&self, d: u64, sieve: bool) -> Component {
        let ideal = self.ideal;
        let w = ideal.weights();
        let field = ideal.field();
        let rows = monomials_of_wdegree(d, &w);
        let mut labels = Vec::new();
        let mut vectors = Vec::new();
        for (gi, g) in ideal.generators().iter().enumerate() {
            let dg = ideal.degrees()[gi];
            if dg > d {
                continue;
            }
            for m in monomials_of_wdegree(d - dg, &w) {
                let mut col = vec![BigRational::zero(); rows.len()];
                for (t, c) in g.terms() {
                    let idx = rows.binary_search(&t.mul(&m)).expect("degree matches");
                    col[idx] = c.clone();
                }
                labels.push((gi, m));
                vectors.push(col);
            }
        }
        let chosen = match field {
            FieldSpec::Rationals if sieve => independent_mod_p(&vectors, rows.len()),
            _ => None,
        };
        let complete = chosen.is_none();
        let chosen = chosen.unwrap_or_else(|| (0..vectors.len()).collect());
        let mut echelon = AnyEchelon::new(field, rows.len());
        let mut columns = Vec::with_capacity(chosen.len());
        for j in chosen {
            let lambda = echelon.push(&vectors[j]);
            columns.push((labels[j].0, labels[j].1, lambda));
        }
        Component { rows, echelon, columns, complete }
    }

    fn component(&mut self, d: u64) -> &Component {
        if !self.cache.contains_key(&d) {
            let c = self.build(d, true);
            self.cache.insert(d, c);
        }
        &self.cache[&d]
    }

    /// Solves for a homogeneous `f` of degree `d`.
    fn homogeneous(&mut self, f: &Poly, d: u64) -> Result<std::result::Result<Vec<Poly>, Monomial>> {
        let field = self.ideal.field();
        let n = self.ideal.len();
        let target_of = |comp: &Component| {
            let mut target = vec![BigRational::zero(); comp.rows.len()];
            for (t, c) in f.terms() {
                let idx = comp.rows.binary_search(t).expect("degree matches");
                target[idx] = c.clone();
            }
            target
        };
        let mut solved = {
            let comp = self.component(d);
            comp.echelon.solve(field, &target_of(comp))
        };
        if solved.is_err() && !self.cache[&d].complete {
            let full = self.build(d, false);
            solved = full.echelon.solve(field, &target_of(&full));
            self.cache.insert(d, full);
        }
        let comp = &self.cache[&d];
        let coeffs = match solved {
            Ok(c) => c,
            Err(row) => return Ok(Err(comp.rows[row])),
        };
        let mut terms: Vec<Vec<(Monomial, BigRational)>> = vec![Vec::new(); n];
        for (c, (gi, m, lambda)) in coeffs.iter().zip(&comp.columns) {
            if !c.is_zero() {
                terms[*gi].push((*m, field.normalize(c * lambda)?));
            }
        }
        Ok(Ok(terms.into_iter().map(|t| Poly::from_terms(field, t)).collect()))
    }

    /// Decides `f` in the ideal, componentwise for inhomogeneous `f`.
    pub fn membership(&mut self, f: &Poly) -> Result<Membership> {
        if f.field() != self.ideal.field() {
            return Err(Error::FieldMismatch(self.ideal.field().to_string(), f.field().to_string()));
        }
        let field = self.ideal.field();
        let mut cofactors = vec![Poly::zero(field); self.ideal.len()];
        for (d, part) in f.homogeneous_components(&self.ideal.weights()) {
            match self.homogeneous(&part, d)? {
                Err(lead) => {
                    return Ok(Membership::NotMember(NonMembership { degree: d, residual_lead: lead }))
                }
                Ok(hs) => {
                    for (acc, h) in cofactors.iter_mut().zip(hs) {
                        *acc = &*acc + &h;
                    }
                }
            }
        }
        let cert = MembershipCertificate { cofactors };
        if !cert.verify(f, self.ideal) {
            return Err(Error::InternalMismatch(format!("certificate for {f} does not re-expand")));
        }
        Ok(Membership::Member(cert))
    }

    /// Dimension of the ideal's degree-`d` component.
    pub fn component_rank(&mut self, d: u64) -> usize {
        if self.cache.get(&d).is_none_or(|c| !c.complete) {
            let full = self.build(d, false);
            self.cache.insert(d, full);
        }
        self.cache[&d].echelon.rank()
    }
}

/// One-shot membership test.
pub fn component_membership(f: &Poly, ideal: &IdealGens) -> Result<Membership> {
    Solver::new(ideal).membership(f)
}

/// Pairwise products, dropping scalar multiples of earlier products.
pub fn ideal_product(a: &IdealGens, b: &IdealGens) -> Result<IdealGens> {
    a.check_compatible(b)?;
    let mut out = IdealGens::new(a.weights(), a.field(), [])?;
    let mut seen = HashSet::new();
    for (la, ga) in a.iter() {
        for (lb, gb) in b.iter() {
            let p = ga * gb;
            if seen.insert(p.monic()) {
                out.push(join_labels(la, lb), p)?;
            }
        }
    }
    Ok(out)
}

/// Label of a product, with repeated factors collected into powers and
/// factors ordered `x, y, z, F, G, H, D_2, D_3, ...`.
pub(crate) fn join_labels(a: &str, b: &str) -> String {
    let mut factors: Vec<(String, u32)> = Vec::new();
    for token in a.split('*').chain(b.split('*')) {
        if token == "1" || token.is_empty() {
            continue;
        }
        let (base, exp) = match token.rsplit_once('^') {
            Some((base, e)) => match e.parse::<u32>() {
                Ok(e) => (base, e),
                Err(_) => (token, 1),
            },
            None => (token, 1),
        };
        match factors.iter_mut().find(|(b, _)| b == base) {
            Some((_, e)) => *e += exp,
            None => factors.push((base.to_string(), exp)),
        }
    }
    if factors.is_empty() {
        return "1".to_string();
    }
    factors.sort_by_key(|(base, _)| factor_rank(base));
    factors
        .iter()
        .map(|(base, e)| if *e == 1 { base.clone() } else { format!("{base}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

fn factor_rank(base: &str) -> u64 {
    match base {
        "x" => 0,
        "y" => 1,
        "z" => 2,
        "F" => 3,
        "G" => 4,
        "H" => 5,
        _ => match base.strip_prefix("D_").and_then(|n| n.parse::<u64>().ok()) {
            Some(n) => 6 + n,
            None => u64::MAX,
        },
    }
}

/// Generators of `m^delta * I`: every generator times every monomial of total
/// degree `delta`.
pub fn m_multiples(ideal: &IdealGens, delta: u32) -> IdealGens {
    if delta == 0 {
        return ideal.clone();
    }
    let mut out = IdealGens::new(ideal.weights(), ideal.field(), []).expect("empty");
    let mut seen = HashSet::new();
    for v in Monomial::of_total_degree(delta) {
        for (label, g) in ideal.iter() {
            let p = g.mul_monomial(&v);
            if seen.insert(p.monic()) {
                out.push(join_labels(&v.to_string(), label), p).expect("homogeneous");
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContainmentVerdict {
    /// One certificate per generator of the smaller ideal.
    Contained { certificates: Vec<MembershipCertificate> },
    NotContained { witness: usize, label: String, degree: u64, residual_lead: Monomial },
}

impl ContainmentVerdict {
    pub fn is_contained(&self) -> bool {
        matches!(self, ContainmentVerdict::Contained { .. })
    }
}

/// Whether every generator of `a` lies in `b`.
pub fn contained(a: &IdealGens, b: &IdealGens) -> Result<ContainmentVerdict> {
    contained_with_jobs(a, b, 1)
}

/// [`contained`] spreading the generators of `a` over `jobs` threads; the
/// verdict does not depend on `jobs`.
pub fn contained_with_jobs(a: &IdealGens, b: &IdealGens, jobs: usize) -> Result<ContainmentVerdict> {
    a.check_compatible(b)?;
    let jobs = jobs.clamp(1, a.len().max(1));
    let results: Vec<Result<Membership>> = if jobs == 1 {
        let mut solver = Solver::new(b);
        let mut out = Vec::with_capacity(a.len());
        for g in a.generators() {
            let m = solver.membership(g);
            let stop = !matches!(m, Ok(Membership::Member(_)));
            out.push(m);
            if stop {
                break;
            }
        }
        out
    } else {
        let chunk = a.len().div_ceil(jobs);
        std::thread::scope(|s| {
            let handles: Vec<_> = a
                .generators()
                .chunks(chunk)
                .map(|gens| {
                    s.spawn(move || {
                        let mut solver = Solver::new(b);
                        gens.iter().map(|g| solver.membership(g)).collect::<Vec<_>>()
                    })
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    let mut certificates = Vec::with_capacity(a.len());
    for (i, r) in results.into_iter().enumerate() {
        match r? {
            Membership::Member(c) => certificates.push(c),
            Membership::NotMember(nm) => {
                // Re-check the witness with a fresh solver.
                if component_membership(&a.generators()[i], b)?.is_member() {
                    return Err(Error::InternalMismatch(format!(
                        "witness {} flips to member on re-check",
                        a.labels()[i]
                    )));
                }
                return Ok(ContainmentVerdict::NotContained {
                    witness: i,
                    label: a.labels()[i].clone(),
                    degree: nm.degree,
                    residual_lead: nm.residual_lead,
                });
            }
        }
    }
    Ok(ContainmentVerdict::Contained { certificates })
}
