//! Incremental column echelon form with combination tracking.
//!
//! Over the rationals all vectors are kept integral and updated fraction-free
//! (`v <- b_p v - v_p b`) with content removal; over `F_p` the same update runs
//! on `u64` residues.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::{inv_mod, mul_mod, FieldSpec};

pub(crate) trait Arith {
    type E: Clone + std::fmt::Debug;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// Removes a common factor from all the given slices jointly.
    fn normalize(&self, parts: &mut [&mut Vec<Self::E>]);
    /// Entries `lambda * c` for the returned `lambda`, all representable.
    fn embed(&self, coeffs: &[BigRational]) -> (Vec<Self::E>, BigRational);
    fn lift(&self, e: &Self::E) -> BigRational;
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct IntArith;

impl Arith for IntArith {
    type E = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn normalize(&self, parts: &mut [&mut Vec<BigInt>]) {
        let mut g = BigInt::zero();
        for part in parts.iter() {
            for a in part.iter() {
                if !a.is_zero() {
                    g = g.gcd(a);
                    if g.is_one() {
                        return;
                    }
                }
            }
        }
        if g.is_zero() || g.is_one() {
            return;
        }
        for part in parts.iter_mut() {
            for a in part.iter_mut() {
                *a = &*a / &g;
            }
        }
    }

    fn embed(&self, coeffs: &[BigRational]) -> (Vec<BigInt>, BigRational) {
        let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let entries = coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        (entries, BigRational::from_integer(lcm))
    }

    fn lift(&self, e: &BigInt) -> BigRational {
        BigRational::from_integer(e.clone())
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct ModArith(pub u64);

impl Arith for ModArith {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.0
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.0)
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.0 - (b - a)
        }
    }

    fn normalize(&self, _parts: &mut [&mut Vec<u64>]) {}

    fn embed(&self, coeffs: &[BigRational]) -> (Vec<u64>, BigRational) {
        let entries = coeffs
            .iter()
            .map(|c| {
                let n = c.to_integer();
                debug_assert!(!n.is_negative());
                u64::try_from(n).expect("canonical F_p value")
            })
            .collect();
        (entries, BigRational::one())
    }

    fn lift(&self, e: &u64) -> BigRational {
        BigRational::from_integer(BigInt::from(*e))
    }
}

/// `vec = sum combo[i] * column(independent[i])`.
#[derive(Clone, Debug)]
struct BasisVec<E> {
    vec: Vec<E>,
    combo: Vec<E>,
}

/// Column space of a growing list of columns, each of length `rows`.
#[derive(Clone, Debug)]
pub(crate) struct Echelon<A: Arith> {
    arith: A,
    rows: usize,
    columns: usize,
    basis: Vec<BasisVec<A::E>>,
    /// Column index that created each basis vector. Combinations only range
    /// over these, since every other column is dependent on them.
    independent: Vec<usize>,
    /// `pivot_at[row]` is the basis index whose pivot is `row`.
    pivot_at: Vec<Option<usize>>,
}

/// `target * scale = sum combo[j] * column[j]`.
#[derive(Clone, Debug)]
pub(crate) struct Solution<E> {
    pub scale: E,
    pub combo: Vec<E>,
}

fn first_nonzero<A: Arith>(arith: &A, v: &[A::E], from: usize) -> Option<usize> {
    (from..v.len()).find(|&i| !arith.is_zero(&v[i]))
}

impl<A: Arith> Echelon<A> {
    pub fn new(arith: A, rows: usize) -> Self {
        Echelon { arith, rows, columns: 0, basis: Vec::new(), independent: Vec::new(), pivot_at: vec![None; rows] }
    }

    pub fn arith(&self) -> &A {
        &self.arith
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Subtracts basis vectors from `v` until its first nonzero row has no
    /// pivot. Returns that row, or `None` when `v` reduced to zero.
    ///
    /// Maintains `v = scale * v_in + sum combo * columns` when `combo` starts
    /// at zero, and `v = sum combo * columns` when it starts as a unit vector.
    fn reduce(&self, v: &mut Vec<A::E>, combo: &mut Vec<A::E>, scale: &mut A::E) -> Option<usize> {
        let a = &self.arith;
        let mut cursor = 0;
        loop {
            let row = first_nonzero(a, v, cursor)?;
            let Some(bi) = self.pivot_at[row] else { return Some(row) };
            let b = &self.basis[bi];
            let bp = b.vec[row].clone();
            let vp = v[row].clone();
            for (x, y) in v.iter_mut().zip(&b.vec) {
                *x = a.sub(&a.mul(&bp, x), &a.mul(&vp, y));
            }
            if combo.len() < b.combo.len() {
                combo.resize(b.combo.len(), a.zero());
            }
            for (i, x) in combo.iter_mut().enumerate() {
                let y = b.combo.get(i).cloned().unwrap_or_else(|| a.zero());
                *x = a.sub(&a.mul(&bp, x), &a.mul(&vp, &y));
            }
            *scale = a.mul(&bp, scale);
            let mut s = vec![scale.clone()];
            a.normalize(&mut [v, combo, &mut s]);
            *scale = s.pop().expect("one entry");
            cursor = row + 1;
        }
    }

    /// Appends a column; returns whether it enlarged the span.
    pub fn push(&mut self, column: Vec<A::E>) -> bool {
        assert_eq!(column.len(), self.rows);
        let a = &self.arith;
        let idx = self.columns;
        self.columns += 1;
        let slot = self.basis.len();
        let mut combo = vec![a.zero(); slot + 1];
        combo[slot] = a.one();
        let mut v = column;
        let mut scale = a.one();
        match self.reduce(&mut v, &mut combo, &mut scale) {
            None => false,
            Some(pivot) => {
                self.pivot_at[pivot] = Some(slot);
                self.basis.push(BasisVec { vec: v, combo });
                self.independent.push(idx);
                true
            }
        }
    }

    /// Expresses `target` in the span, or returns the first nonzero row of
    /// the reduced residual.
    pub fn solve(&self, target: Vec<A::E>) -> Result<Solution<A::E>, usize> {
        assert_eq!(target.len(), self.rows);
        let a = &self.arith;
        let mut v = target;
        let mut combo = vec![a.zero(); self.basis.len()];
        let mut scale = a.one();
        match self.reduce(&mut v, &mut combo, &mut scale) {
            Some(row) => Err(row),
            None => {
                // 0 = scale * target + sum combo * columns
                let mut full = vec![a.zero(); self.columns];
                for (c, &j) in combo.iter().zip(&self.independent) {
                    full[j] = a.sub(&a.zero(), c);
                }
                Ok(Solution { scale, combo: full })
            }
        }
    }
}

/// Prime used to pick columns before exact elimination over the rationals.
const SIEVE_PRIME: u64 = (1 << 31) - 1;

fn big_residue(n: &BigInt, p: u64, big: &BigInt) -> u64 {
    match n.to_i64() {
        Some(k) => k.rem_euclid(p as i64) as u64,
        None => u64::try_from(n.mod_floor(big)).expect("reduced"),
    }
}

/// Indices of a maximal set of columns that are independent modulo a large
/// prime, hence independent over the rationals. `None` if some entry has a
/// denominator divisible by that prime.
pub(crate) fn independent_mod_p(columns: &[Vec<BigRational>], rows: usize) -> Option<Vec<usize>> {
    let p = SIEVE_PRIME;
    let big = BigInt::from(p);
    let residue = |c: &BigRational| -> Option<u64> {
        if c.is_zero() {
            return Some(0);
        }
        let n = big_residue(c.numer(), p, &big);
        if c.denom().is_one() {
            return Some(n);
        }
        let d = big_residue(c.denom(), p, &big);
        (d != 0).then(|| mul_mod(n, inv_mod(d, p), p))
    };
    let mut e = Echelon::new(ModArith(p), rows);
    let mut out = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let v = col.iter().map(residue).collect::<Option<Vec<u64>>>()?;
        if e.push(v) {
            out.push(j);
            if out.len() == rows {
                break;
            }
        }
    }
    Some(out)
}

/// Either arithmetic, chosen by the field.
#[derive(Clone, Debug)]
pub(crate) enum AnyEchelon {
    Rational(Echelon<IntArith>),
    Modular(Echelon<ModArith>),
}

/// A solution mapped back to field coefficients per column.
pub(crate) type Coefficients = Vec<BigRational>;

impl AnyEchelon {
    pub fn new(field: FieldSpec, rows: usize) -> Self {
        match field {
            FieldSpec::Rationals => AnyEchelon::Rational(Echelon::new(IntArith, rows)),
            FieldSpec::PrimeField(p) => AnyEchelon::Modular(Echelon::new(ModArith(p.get()), rows)),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            AnyEchelon::Rational(e) => e.rank(),
            AnyEchelon::Modular(e) => e.rank(),
        }
    }

    /// Pushes a column with field coefficients; returns the multiplier that
    /// was applied to make it representable.
    pub fn push(&mut self, column: &[BigRational]) -> BigRational {
        match self {
            AnyEchelon::Rational(e) => {
                let (v, lambda) = e.arith().embed(column);
                e.push(v);
                lambda
            }
            AnyEchelon::Modular(e) => {
                let (v, lambda) = e.arith().embed(column);
                e.push(v);
                lambda
            }
        }
    }

    /// Coefficients `c_j` (as field elements, before undoing column
    /// multipliers) with `target = sum c_j * pushed_column_j`.
    pub fn solve(&self, field: FieldSpec, target: &[BigRational]) -> Result<Coefficients, usize> {
        fn finish<A: Arith>(
            e: &Echelon<A>,
            field: FieldSpec,
            target: &[BigRational],
        ) -> Result<Coefficients, usize> {
            let a = e.arith();
            let (t, denom) = a.embed(target);
            let sol = e.solve(t)?;
            let divisor = a.lift(&sol.scale) * denom;
            Ok(sol
                .combo
                .iter()
                .map(|c| {
                    field
                        .normalize(a.lift(c) / divisor.clone())
                        .expect("pivot products are units")
                })
                .collect())
        }
        match self {
            AnyEchelon::Rational(e) => finish(e, field, target),
            AnyEchelon::Modular(e) => finish(e, field, target),
        }
    }
}
