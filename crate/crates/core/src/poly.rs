//! Sparse polynomials in `x, y, z` over a [`FieldSpec`].
//!
//! Terms live in a `BTreeMap` keyed by exponent triple. The canonical term
//! order compares the `z` exponent first, then `y`, then `x`, all ascending;
//! printing and "first offending term" reporting follow it.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    pub fn name(self) -> &'static str {
        ["x", "y", "z"][self.index()]
    }
}

/// `x^i y^j z^k`, stored as `[i, j, k]`.
///
/// `Ord` is the canonical term order: lexicographic on `(k, j, i)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial(pub [u32; 3]);

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |m: &Monomial| (m.0[2], m.0[1], m.0[0]);
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(i: u32, j: u32, k: u32) -> Self {
        Monomial([i, j, k])
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        let mut m = [0; 3];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, w: &Weights) -> u64 {
        (0..3).map(|i| self.0[i] as u64 * w.0[i]).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] <= other.0[i])
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| {
            Monomial([
                self.0[0] - other.0[0],
                self.0[1] - other.0[1],
                self.0[2] - other.0[2],
            ])
        })
    }

    /// Relabels variables: the exponent of variable `i` moves to `perm[i]`.
    pub fn permute(&self, perm: [usize; 3]) -> Monomial {
        let mut out = [0; 3];
        for i in 0..3 {
            out[perm[i]] = self.0[i];
        }
        Monomial(out)
    }

    /// All monomials of the given total degree, in canonical order.
    pub fn of_total_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for i in 0..=d {
            for j in 0..=d - i {
                out.push(Monomial([i, j, d - i - j]));
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Degrees of `x, y, z` in the grading induced by `t -> (t^n1, t^n2, t^n3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weights(pub [u64; 3]);

impl Weights {
    /// Positive weights divided by their common gcd.
    pub fn new(n1: u64, n2: u64, n3: u64) -> Result<Self> {
        if n1 == 0 || n2 == 0 || n3 == 0 {
            return Err(Error::InvalidWeights(format!(
                "weights must be positive, got ({n1},{n2},{n3})"
            )));
        }
        let g = n1.gcd(&n2).gcd(&n3);
        Ok(Weights([n1 / g, n2 / g, n3 / g]))
    }

    pub fn get(&self, v: Var) -> u64 {
        self.0[v.index()]
    }

    pub fn permute(&self, perm: [usize; 3]) -> Weights {
        let mut out = [0; 3];
        for i in 0..3 {
            out[perm[i]] = self.0[i];
        }
        Weights(out)
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero(field: FieldSpec) -> Self {
        Poly { field, terms: BTreeMap::new() }
    }

    pub fn one(field: FieldSpec) -> Self {
        Poly::monomial(field, Monomial::ONE, 1)
    }

    pub fn constant(field: FieldSpec, c: i64) -> Self {
        Poly::monomial(field, Monomial::ONE, c)
    }

    pub fn var(field: FieldSpec, v: Var) -> Self {
        Poly::monomial(field, Monomial::var_pow(v, 1), 1)
    }

    /// `c * m` with an integer coefficient.
    pub fn monomial(field: FieldSpec, m: Monomial, c: i64) -> Self {
        Poly::from_terms(field, [(m, field.from_int(BigInt::from(c)))])
    }

    /// Builds a polynomial from terms already in canonical form for `field`;
    /// repeated monomials are summed and zeros dropped.
    pub fn from_terms(
        field: FieldSpec,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Self {
        let mut out = Poly::zero(field);
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    /// Like [`Poly::from_terms`] but normalizes arbitrary rationals first.
    pub fn from_rational_terms(
        field: FieldSpec,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Result<Self> {
        let mut out = Poly::zero(field);
        for (m, c) in terms {
            out.add_term(m, field.normalize(c)?);
        }
        Ok(out)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let field = self.field;
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = field.add(e.get(), &c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next()
    }

    /// Constant term, zero if absent.
    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Monomial::ONE)
    }

    fn check_field(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, self.field.neg(c));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let field = self.field;
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let prod = c1 * c2;
                acc.entry(m)
                    .and_modify(|c| *c += &prod)
                    .or_insert(prod);
            }
        }
        let terms = acc
            .into_iter()
            .map(|(m, c)| (m, field.reduce(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(Poly { field, terms })
    }

    /// Multiplies by a scalar given in canonical form for this field.
    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field);
        }
        let field = self.field;
        Poly {
            field,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, field.mul(a, c)))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Poly {
        self.scale(&self.field.from_int(BigInt::from(c)))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            field: self.field,
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.field);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Divides every term by `m`, failing on the first (canonical order)
    /// term that `m` does not divide.
    pub fn exact_div_monomial(&self, m: &Monomial) -> Result<Poly> {
        let mut terms = BTreeMap::new();
        for (t, c) in self.terms() {
            match t.checked_div(m) {
                Some(q) => {
                    terms.insert(q, c.clone());
                }
                None => {
                    return Err(Error::NotDivisible {
                        term: term_string(self.field, t, c),
                        divisor: *m,
                    })
                }
            }
        }
        Ok(Poly { field: self.field, terms })
    }

    /// Multiplies by `x^ex y^ey z^ez` where negative exponents are exact divisions.
    pub fn shift(&self, exps: [i64; 3]) -> Result<Poly> {
        let up = Monomial(exps.map(|e| e.max(0) as u32));
        let down = Monomial(exps.map(|e| (-e).max(0) as u32));
        self.mul_monomial(&up).exact_div_monomial(&down)
    }

    /// The common weighted degree of all terms.
    pub fn weighted_degree(&self, w: &Weights) -> Result<u64> {
        let mut iter = self.terms();
        let (m0, c0) = iter.next().ok_or(Error::ZeroPolynomial)?;
        let d = m0.weighted_degree(w);
        for (m, c) in iter {
            if m.weighted_degree(w) != d {
                return Err(Error::NonHomogeneous {
                    first: term_string(self.field, m0, c0),
                    second: term_string(self.field, m, c),
                });
            }
        }
        Ok(d)
    }

    /// Splits into weighted-homogeneous components, keyed by degree.
    pub fn homogeneous_components(&self, w: &Weights) -> BTreeMap<u64, Poly> {
        let mut out: BTreeMap<u64, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weighted_degree(w))
                .or_insert_with(|| Poly::zero(self.field))
                .terms
                .insert(*m, c.clone());
        }
        out
    }

    /// Image under `x -> t^n1, y -> t^n2, z -> t^n3`.
    pub fn substitute_powers(&self, w: &Weights) -> UniPoly {
        let mut out = UniPoly { field: self.field, terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            out.add_term(m.weighted_degree(w), c.clone());
        }
        out
    }

    /// Drops every term containing `v`.
    pub fn reduce_mod_variable(&self, v: Var) -> Poly {
        Poly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Relabels variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: [usize; 3]) -> Poly {
        Poly {
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (m.permute(perm), c.clone())).collect(),
        }
    }

    /// `Some((c, m))` when the polynomial is a single nonzero term.
    pub fn as_term(&self) -> Option<(&Monomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Parses the canonical text format, e.g. `y^2 - x^2*z^3`.
    pub fn parse(field: FieldSpec, s: &str) -> Result<Poly> {
        Parser::new(s).parse_poly(field)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.field, self)
    }
}

fn term_string(field: FieldSpec, m: &Monomial, c: &BigRational) -> String {
    Poly::from_terms(field, [(*m, c.clone())]).to_string()
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a BigRational)>,
) -> fmt::Result {
    let mut first = true;
    for (mono, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        let unit = mono == "1";
        if abs.is_one() {
            write!(f, "{mono}")?;
        } else if unit {
            write!(f, "{abs}")?;
        } else {
            write!(f, "{abs}*{mono}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms().map(|(m, c)| (m.to_string(), c)))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;

    /// Panics on a field mismatch; use [`Poly::checked_add`] for untrusted operands.
    fn add(self, rhs: &'a Poly) -> Poly {
        self.checked_add(rhs).expect("field mismatch")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn sub(self, rhs: &'a Poly) -> Poly {
        self.checked_sub(rhs).expect("field mismatch")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn mul(self, rhs: &'a Poly) -> Poly {
        self.checked_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        let field = self.field;
        Poly {
            field,
            terms: self.terms.iter().map(|(m, c)| (*m, field.neg(c))).collect(),
        }
    }
}

/// A univariate polynomial in `t`, the target of [`Poly::substitute_powers`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: FieldSpec,
    terms: BTreeMap<u64, BigRational>,
}

impl UniPoly {
    fn add_term(&mut self, e: u64, c: BigRational) {
        let field = self.field;
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry = field.add(entry, &c);
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: u64) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        let mut out = UniPoly { field: self.field, terms: BTreeMap::new() };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, self.field.mul(c1, c2));
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monos = self.terms.iter().rev().map(|(e, c)| {
            let m = match e {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            (m, c)
        });
        write_terms(f, monos)
    }
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { chars: src.char_indices().peekable(), src }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some((_, c)) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().map(|&(_, c)| c)
    }

    fn err(&mut self, msg: &str) -> Error {
        let pos = self.chars.peek().map(|&(i, _)| i).unwrap_or(self.src.len());
        Error::Parse(format!("{msg} at byte {pos} in {:?}", self.src))
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let mut digits = String::new();
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return Err(self.err("expected a number"));
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn parse_poly(mut self, field: FieldSpec) -> Result<Poly> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => return Err(self.err("empty polynomial")),
                None => break,
                Some('+') => {
                    self.chars.next();
                    1
                }
                Some('-') | Some('\u{2212}') => {
                    self.chars.next();
                    -1
                }
                Some(_) if first => 1,
                Some(_) => return Err(self.err("expected + or -")),
            };
            first = false;
            let (m, c) = self.term()?;
            terms.push((m, c * BigInt::from(sign)));
        }
        Poly::from_rational_terms(field, terms)
    }

    fn term(&mut self) -> Result<(Monomial, BigRational)> {
        let mut coeff = BigRational::one();
        let mut mono = Monomial::ONE;
        let mut expect_factor = true;
        while expect_factor {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.number()?;
                    let value = if self.peek() == Some('/') {
                        self.chars.next();
                        let den = self.number()?;
                        if den.is_zero() {
                            return Err(self.err("zero denominator"));
                        }
                        BigRational::new(num, den)
                    } else {
                        BigRational::from_integer(num)
                    };
                    coeff *= value;
                }
                Some(c @ ('x' | 'y' | 'z')) => {
                    self.chars.next();
                    let v = match c {
                        'x' => Var::X,
                        'y' => Var::Y,
                        _ => Var::Z,
                    };
                    let e = if self.peek() == Some('^') {
                        self.chars.next();
                        let e = self.number()?;
                        u32::try_from(e).map_err(|_| self.err("exponent too large"))?
                    } else {
                        1
                    };
                    mono = mono.mul(&Monomial::var_pow(v, e));
                }
                _ => return Err(self.err("expected a coefficient or variable")),
            }
            expect_factor = self.peek() == Some('*');
            if expect_factor {
                self.chars.next();
            }
        }
        Ok((mono, coeff))
    }
}
