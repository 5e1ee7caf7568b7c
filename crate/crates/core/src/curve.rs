//! From weights `(n1, n2, n3)` to the exponent matrix
//!
//! ```text
//!     [ x^a1  y^b1  z^c1 ]
//!     [ z^c2  x^a2  y^b2 ]
//! ```
//!
//! whose maximal minors generate the curve ideal, and its normal form
//! (type 1, type 1', or type 2) under relabelings of the variables.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Var, Weights};

/// `multiple * n_pivot = coeffs[0] * n_j + coeffs[1] * n_k` where `j < k` are
/// the two other variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub pivot: Var,
    pub multiple: u32,
    pub coeffs: [u32; 2],
}

impl Relation {
    /// The two non-pivot variables, in index order.
    pub fn others(&self) -> [Var; 2] {
        others(self.pivot.index()).map(Var::from_index)
    }

    pub fn describe(&self, w: &Weights) -> String {
        let [j, k] = self.others();
        format!(
            "{}*{} = {}*{} + {}*{}",
            self.multiple,
            w.get(self.pivot),
            self.coeffs[0],
            w.get(j),
            self.coeffs[1],
            w.get(k)
        )
    }
}

fn others(i: usize) -> [usize; 2] {
    match i {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalRelations {
    Relations([Relation; 3]),
    /// Some minimal relation involves only one other generator.
    CompleteIntersection(Relation),
}

/// For each pivot, the least `k` with `k * n_pivot` in the semigroup spanned by
/// the other two weights, together with its representation.
pub fn minimal_relations(w: &Weights) -> Result<MinimalRelations> {
    let mut rels = Vec::with_capacity(3);
    for pivot in 0..3 {
        let [j, k] = others(pivot);
        let (nj, nk) = (w.0[j], w.0[k]);
        let bound = nj * nk;
        let mut found = None;
        for mult in 1..=bound {
            let target = mult * w.0[pivot];
            let reps: Vec<[u64; 2]> = (0..=target / nj)
                .filter_map(|p| {
                    let rest = target - p * nj;
                    rest.is_multiple_of(nk).then_some([p, rest / nk])
                })
                .collect();
            if !reps.is_empty() {
                found = Some((mult, reps));
                break;
            }
        }
        let (mult, reps) = found.ok_or(Error::SearchBoundExceeded { pivot, bound })?;
        let to_u32 = |v: u64| {
            u32::try_from(v).map_err(|_| Error::InvalidWeights(format!("exponent {v} overflows")))
        };
        let relation = |rep: [u64; 2]| -> Result<Relation> {
            Ok(Relation {
                pivot: Var::from_index(pivot),
                multiple: to_u32(mult)?,
                coeffs: [to_u32(rep[0])?, to_u32(rep[1])?],
            })
        };
        if let Some(rep) = reps.iter().find(|r| r[0] == 0 || r[1] == 0) {
            return Ok(MinimalRelations::CompleteIntersection(relation(*rep)?));
        }
        if reps.len() > 1 {
            return Err(Error::InconsistentRelations(format!(
                "{mult}*{} has {} representations in <{nj},{nk}>",
                w.0[pivot],
                reps.len()
            )));
        }
        rels.push(relation(reps[0])?);
    }
    Ok(MinimalRelations::Relations([rels[0], rels[1], rels[2]]))
}

/// The six matrix exponents `(a1, a2, b1, b2, c1, c2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Exponents {
    pub a1: u32,
    pub a2: u32,
    pub b1: u32,
    pub b2: u32,
    pub c1: u32,
    pub c2: u32,
}

impl Exponents {
    pub fn new(a1: u32, a2: u32, b1: u32, b2: u32, c1: u32, c2: u32) -> Self {
        Exponents { a1, a2, b1, b2, c1, c2 }
    }

    pub fn from_array(e: [u32; 6]) -> Self {
        Exponents::new(e[0], e[1], e[2], e[3], e[4], e[5])
    }

    pub fn to_array(self) -> [u32; 6] {
        [self.a1, self.a2, self.b1, self.b2, self.c1, self.c2]
    }

    /// `m[i][j]`: exponent of variable `j` in the binomial whose pure power
    /// is in variable `i` (`H`, `F`, `G` for `i = x, y, z`).
    fn relation_matrix(self) -> [[u32; 3]; 3] {
        let mut m = [[0; 3]; 3];
        m[0][1] = self.b1;
        m[0][2] = self.c2;
        m[1][0] = self.a2;
        m[1][2] = self.c1;
        m[2][0] = self.a1;
        m[2][1] = self.b2;
        m
    }

    fn from_relation_matrix(m: [[u32; 3]; 3]) -> Self {
        Exponents::new(m[2][0], m[1][0], m[0][1], m[2][1], m[1][2], m[0][2])
    }

    /// Exponents of the same ideal after renaming variable `i` to `perm[i]`.
    pub fn relabel(self, perm: [usize; 3]) -> Self {
        let m = self.relation_matrix();
        let mut out = [[0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[perm[i]][perm[j]] = m[i][j];
            }
        }
        Exponents::from_relation_matrix(out)
    }

    fn is_condition_one(&self) -> bool {
        self.a1 <= self.a2 && self.b1 >= self.b2 && self.c1 >= self.c2
    }

    fn is_condition_two(&self) -> bool {
        self.a1 > self.a2 && self.b1 > self.b2 && self.c1 > self.c2
    }

    fn all_positive(&self) -> bool {
        self.to_array().iter().all(|&v| v > 0)
    }
}

impl fmt::Display for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{},{})",
            self.a1, self.a2, self.b1, self.b2, self.c1, self.c2
        )
    }
}

/// Reads the six exponents off three minimal relations.
pub fn exponents_from_relations(rels: &[Relation; 3]) -> Result<Exponents> {
    let mut m = [[0u32; 3]; 3];
    let mut mult = [0u32; 3];
    for rel in rels {
        let i = rel.pivot.index();
        let [j, k] = others(i);
        m[i][j] = rel.coeffs[0];
        m[i][k] = rel.coeffs[1];
        mult[i] = rel.multiple;
    }
    let e = Exponents::from_relation_matrix(m);
    let checks = [
        ("x", mult[0], e.a1 + e.a2),
        ("y", mult[1], e.b1 + e.b2),
        ("z", mult[2], e.c1 + e.c2),
    ];
    for (name, k, sum) in checks {
        if k != sum {
            return Err(Error::InconsistentRelations(format!(
                "minimal multiple of {name} is {k} but the cross readings give {sum}"
            )));
        }
    }
    if !e.all_positive() {
        return Err(Error::InconsistentRelations(format!("zero exponent in {e}")));
    }
    Ok(e)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixType {
    Type1,
    Type1Prime,
    Type2,
}

impl MatrixType {
    pub fn name(self) -> &'static str {
        match self {
            MatrixType::Type1 => "type1",
            MatrixType::Type1Prime => "type1prime",
            MatrixType::Type2 => "type2",
        }
    }

    pub fn is_type1(self) -> bool {
        matches!(self, MatrixType::Type1 | MatrixType::Type1Prime)
    }
}

/// Exponents in normal form together with the relabeling that produced them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatrixExponents {
    pub a1: u32,
    pub a2: u32,
    pub b1: u32,
    pub b2: u32,
    pub c1: u32,
    pub c2: u32,
    pub kind: MatrixType,
    /// Input variable `i` is variable `relabeling[i]` of the normal form.
    pub relabeling: [usize; 3],
}

/// All variable permutations: the identity, the two rotations, then the
/// `x <-> z` swap composed with each of those.
pub const RELABELINGS: [[usize; 3]; 6] =
    [[0, 1, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0], [1, 0, 2], [0, 2, 1]];

const SWAP_XZ: [usize; 3] = [2, 1, 0];

fn compose(outer: [usize; 3], inner: [usize; 3]) -> [usize; 3] {
    [outer[inner[0]], outer[inner[1]], outer[inner[2]]]
}

impl MatrixExponents {
    pub fn exponents(&self) -> Exponents {
        Exponents::new(self.a1, self.a2, self.b1, self.b2, self.c1, self.c2)
    }

    fn with(e: Exponents, kind: MatrixType, relabeling: [usize; 3]) -> Self {
        MatrixExponents {
            a1: e.a1,
            a2: e.a2,
            b1: e.b1,
            b2: e.b2,
            c1: e.c1,
            c2: e.c2,
            kind,
            relabeling,
        }
    }

    /// Trusts the caller that `e` is already in normal form with identity
    /// relabeling; the tag is recomputed.
    pub fn normal_form(e: Exponents) -> Result<Self> {
        let m = classify(e)?;
        if m.exponents() != e {
            return Err(Error::InternalMismatch(format!(
                "{e} is not in normal form (normal form is {})",
                m.exponents()
            )));
        }
        Ok(m)
    }

    /// `floor(a2 / a1) + 1`, the level through which `P^(l) = P^l + (D_l)`.
    pub fn r_index(&self) -> Result<u32> {
        if self.kind != MatrixType::Type1Prime {
            return Err(Error::WrongType { expected: "type 1'", found: self.kind.name().into() });
        }
        Ok(self.a2 / self.a1 + 1)
    }

    /// The grading making `F, G, H` homogeneous; always exists.
    pub fn grading(&self) -> Weights {
        grading_of(self.exponents())
    }

    /// The curve weights, when the matrix really comes from a monomial curve.
    pub fn weights(&self) -> Option<Weights> {
        weights_of(self.exponents())
    }
}

/// Searches the six relabelings for one meeting condition (1) or (2).
///
/// Among matches, type 1' beats type 1 beats type 2, and within a tag the
/// lexicographically largest exponent tuple wins, so the result does not
/// depend on how the input variables were labeled.
pub fn classify(raw: Exponents) -> Result<MatrixExponents> {
    if !raw.all_positive() {
        return Err(Error::Unclassifiable(raw.to_array()));
    }
    let mut best: Option<MatrixExponents> = None;
    for perm in RELABELINGS {
        let e = raw.relabel(perm);
        let candidate = if e.is_condition_one() {
            if e.b1 == e.b2 {
                // a2/a1 <= c1/c2, cross-multiplied.
                if (e.a2 as u64) * (e.c2 as u64) <= (e.a1 as u64) * (e.c1 as u64) {
                    MatrixExponents::with(e, MatrixType::Type1Prime, perm)
                } else {
                    let swapped = compose(SWAP_XZ, perm);
                    MatrixExponents::with(raw.relabel(swapped), MatrixType::Type1Prime, swapped)
                }
            } else {
                MatrixExponents::with(e, MatrixType::Type1, perm)
            }
        } else if e.is_condition_two() {
            MatrixExponents::with(e, MatrixType::Type2, perm)
        } else {
            continue;
        };
        let better = match &best {
            None => true,
            Some(b) => {
                (rank(candidate.kind), candidate.exponents()) > (rank(b.kind), b.exponents())
            }
        };
        if better {
            best = Some(candidate);
        }
    }
    let m = best.ok_or(Error::Unclassifiable(raw.to_array()))?;
    if m.kind == MatrixType::Type1Prime {
        let r = m.a2 / m.a1 + 1;
        if m.a2 == (r - 1) * m.a1 && m.c1 <= (r - 1) * m.c2 {
            return Err(Error::NotPrime(format!(
                "a2 = (r-1)a1 and c1 = (r-1)c2 with r = {r}; the minors share the factor x^a1 - z^c2"
            )));
        }
    }
    Ok(m)
}

fn rank(kind: MatrixType) -> u8 {
    match kind {
        MatrixType::Type1Prime => 2,
        MatrixType::Type1 => 1,
        MatrixType::Type2 => 0,
    }
}

/// The primitive positive solution of the three weighted-degree identities.
pub fn grading_of(e: Exponents) -> Weights {
    let (a1, a2, b1, b2, c1, c2) =
        (e.a1 as u64, e.a2 as u64, e.b1 as u64, e.b2 as u64, e.c1 as u64, e.c2 as u64);
    let n1 = b1 * c1 + b1 * c2 + b2 * c2;
    let n2 = c1 * a1 + c1 * a2 + c2 * a2;
    let n3 = a1 * b1 + a1 * b2 + a2 * b2;
    Weights::new(n1, n2, n3).expect("positive by construction")
}

/// Weights `w` with `P(w)` equal to the ideal of minors, or `None` when the
/// minimal relations of the solved grading do not reproduce `e`.
pub fn weights_of(e: Exponents) -> Option<Weights> {
    let w = grading_of(e);
    match minimal_relations(&w) {
        Ok(MinimalRelations::Relations(rels)) => match exponents_from_relations(&rels) {
            Ok(read) if read == e => Some(w),
            _ => None,
        },
        _ => None,
    }
}

/// Everything derived from a curve or matrix input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveData {
    /// Input weights, relabeled into the normal form's variable order.
    pub weights: Option<Weights>,
    pub relations: Option<[Relation; 3]>,
    pub raw: Exponents,
    pub matrix: MatrixExponents,
    /// Grading used for all homogeneous computations.
    pub grading: Weights,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Analysis {
    CompleteIntersection { weights: Weights, relation: Relation },
    Matrix(Box<CurveData>),
}

pub fn analyze_curve(n1: u64, n2: u64, n3: u64) -> Result<Analysis> {
    let w = Weights::new(n1, n2, n3)?;
    let rels = match minimal_relations(&w)? {
        MinimalRelations::CompleteIntersection(relation) => {
            return Ok(Analysis::CompleteIntersection { weights: w, relation })
        }
        MinimalRelations::Relations(rels) => rels,
    };
    let raw = exponents_from_relations(&rels)?;
    let matrix = classify(raw)?;
    let weights = w.permute(matrix.relabeling);
    let grading = matrix.grading();
    if grading != weights {
        return Err(Error::InternalMismatch(format!(
            "solved grading {grading} differs from relabeled weights {weights}"
        )));
    }
    Ok(Analysis::Matrix(Box::new(CurveData {
        weights: Some(weights),
        relations: Some(rels),
        raw,
        matrix,
        grading,
    })))
}

pub fn analyze_matrix(raw: Exponents) -> Result<CurveData> {
    let matrix = classify(raw)?;
    Ok(CurveData {
        weights: matrix.weights(),
        relations: None,
        raw,
        matrix,
        grading: matrix.grading(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: u64, b: u64, c: u64) -> Weights {
        Weights::new(a, b, c).unwrap()
    }

    fn rels(a: u64, b: u64, c: u64) -> [Relation; 3] {
        match minimal_relations(&w(a, b, c)).unwrap() {
            MinimalRelations::Relations(r) => r,
            other => panic!("unexpected {other:?}"),
        }
    }

    /// Smallest k and all representations, by plain enumeration.
    fn brute_relation(w: [u64; 3], pivot: usize) -> (u64, Vec<[u64; 2]>) {
        let [j, k] = others(pivot);
        for mult in 1.. {
            let t = mult * w[pivot];
            let mut reps = vec![];
            for p in 0..=t {
                for q in 0..=t {
                    if p * w[j] + q * w[k] == t {
                        reps.push([p, q]);
                    }
                }
            }
            if !reps.is_empty() {
                return (mult, reps);
            }
        }
        unreachable!()
    }

    #[test]
    fn relations_of_5_11_4() {
        let r = rels(5, 11, 4);
        let w = w(5, 11, 4);
        let shown: Vec<_> = r.iter().map(|r| r.describe(&w)).collect();
        assert_eq!(shown, ["3*5 = 1*11 + 1*4", "2*11 = 2*5 + 3*4", "4*4 = 1*5 + 1*11"]);
    }

    #[test]
    fn relations_of_7_9_10_match_enumeration() {
        let r = rels(7, 9, 10);
        for (pivot, rel) in r.iter().enumerate() {
            let (mult, reps) = brute_relation([7, 9, 10], pivot);
            assert_eq!(rel.multiple as u64, mult);
            assert_eq!(reps, vec![[rel.coeffs[0] as u64, rel.coeffs[1] as u64]]);
        }
        assert_eq!(r[0].multiple, 4);
        assert_eq!(r[0].coeffs, [2, 1]);
        assert_eq!(r[1].multiple, 3);
        assert_eq!(r[1].coeffs, [1, 2]);
        assert_eq!(r[2].multiple, 3);
        assert_eq!(r[2].coeffs, [3, 1]);
    }

    #[test]
    fn complete_intersection_detected() {
        let (mult, reps) = brute_relation([2, 3, 4], 0);
        assert_eq!((mult, reps), (2, vec![[0, 1]]));
        match minimal_relations(&w(2, 3, 4)).unwrap() {
            MinimalRelations::CompleteIntersection(rel) => {
                assert_eq!(rel.pivot, Var::X);
                assert_eq!(rel.multiple, 2);
                assert_eq!(rel.coeffs, [0, 1]);
            }
            other => panic!("expected CI, got {other:?}"),
        }
    }

    #[test]
    fn exponents_from_fixtures() {
        assert_eq!(exponents_from_relations(&rels(5, 11, 4)).unwrap(), Exponents::new(1, 2, 1, 1, 3, 1));
        assert_eq!(exponents_from_relations(&rels(7, 9, 10)).unwrap(), Exponents::new(3, 1, 2, 1, 2, 1));
        assert_eq!(exponents_from_relations(&rels(6, 19, 5)).unwrap(), Exponents::new(1, 3, 1, 1, 4, 1));
    }

    #[test]
    fn inconsistent_relations_are_reported() {
        let mut r = rels(5, 11, 4);
        r[0].multiple = 4;
        assert!(matches!(exponents_from_relations(&r), Err(Error::InconsistentRelations(_))));
    }

    #[test]
    fn classification_examples() {
        let m = classify(Exponents::new(1, 2, 1, 1, 3, 1)).unwrap();
        assert_eq!(m.kind, MatrixType::Type1Prime);
        assert_eq!(m.relabeling, [0, 1, 2]);
        assert_eq!(m.r_index().unwrap(), 3);

        let m = classify(Exponents::new(3, 1, 2, 1, 2, 1)).unwrap();
        assert_eq!(m.kind, MatrixType::Type2);
        assert_eq!(m.relabeling, [0, 1, 2]);
        assert!(m.r_index().is_err());

        // P(3,4,5) needs a relabeling; it admits a type 1' normal form.
        let raw = exponents_from_relations(&rels(3, 4, 5)).unwrap();
        assert_eq!(raw, Exponents::new(2, 1, 1, 1, 1, 1));
        let m = classify(raw).unwrap();
        assert!(m.kind.is_type1());
        assert_eq!(m.exponents(), Exponents::new(1, 1, 1, 1, 2, 1));
        assert_eq!(m.weights(), Some(w(3, 4, 5).permute(m.relabeling)));
    }

    #[test]
    fn swap_matches_reversal() {
        let e = Exponents::new(1, 2, 3, 4, 5, 6);
        assert_eq!(e.relabel(SWAP_XZ), Exponents::new(6, 5, 4, 3, 2, 1));
    }

    #[test]
    fn classification_is_labeling_invariant() {
        for raw in [
            Exponents::new(1, 2, 1, 1, 3, 1),
            Exponents::new(3, 1, 2, 1, 2, 1),
            Exponents::new(2, 1, 1, 1, 1, 1),
            Exponents::new(2, 3, 1, 1, 2, 1),
            Exponents::new(1, 1, 3, 1, 2, 1),
        ] {
            let base = classify(raw).unwrap();
            for perm in RELABELINGS {
                let m = classify(raw.relabel(perm)).unwrap();
                assert_eq!(m.exponents(), base.exponents(), "{raw} relabeled by {perm:?}");
                assert_eq!(m.kind, base.kind);
                assert_eq!(raw.relabel(perm).relabel(m.relabeling), m.exponents());
            }
        }
    }

    #[test]
    fn r_index_bounds() {
        for (a1, a2) in [(1, 1), (1, 2), (2, 3), (2, 5), (3, 9), (1, 6)] {
            let m = classify(Exponents::new(a1, a2, 1, 1, 100, 1)).unwrap();
            assert_eq!(m.kind, MatrixType::Type1Prime);
            let r = m.r_index().unwrap();
            assert!((r - 1) * a1 <= a2 && a2 < r * a1);
        }
        let m = classify(Exponents::new(2, 2, 1, 1, 3, 1)).unwrap();
        assert_eq!(m.r_index().unwrap(), 2);
    }

    #[test]
    fn weights_inversion() {
        assert_eq!(weights_of(Exponents::new(1, 2, 1, 1, 3, 1)), Some(w(5, 11, 4)));
        assert_eq!(weights_of(Exponents::new(3, 1, 2, 1, 2, 1)), Some(w(7, 9, 10)));
        assert_eq!(grading_of(Exponents::new(2, 1, 2, 1, 2, 1)), w(1, 1, 1));
        assert_eq!(weights_of(Exponents::new(2, 1, 2, 1, 2, 1)), None);
    }

    #[test]
    fn round_trip_on_coprime_triples() {
        let mut checked = 0;
        for a in 3..14u64 {
            for b in 3..14u64 {
                for c in 3..14u64 {
                    let Ok(w0) = Weights::new(a, b, c) else { continue };
                    if w0.0 != [a, b, c] {
                        continue;
                    }
                    let Ok(MinimalRelations::Relations(r)) = minimal_relations(&w0) else {
                        continue;
                    };
                    let e = exponents_from_relations(&r).unwrap();
                    assert_eq!(weights_of(e), Some(w0), "weights {w0}");
                    checked += 1;
                }
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn not_prime_type1_prime_rejected() {
        // a2 = (r-1) a1 and c1 = (r-1) c2
        assert!(matches!(classify(Exponents::new(1, 2, 1, 1, 2, 1)), Err(Error::NotPrime(_))));
    }
}
