//! The third-symbolic-power criterion, the stable index `n`, and the profile
//! of containments `P^(2l-1) ⊆ m P^l` for `1 <= l <= n`.

use serde::{Deserialize, Serialize};

use crate::curve::{MatrixExponents, MatrixType};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::membership::{contained_with_jobs, m_multiples, ContainmentVerdict, IdealGens, Membership, Solver};
use crate::report::{CertificateRecord, VerdictRecord};
use crate::sympow::{clearing_exponents, d_sequence, ordinary_power, sympow_basis};

/// `m^k P^l` as a display string.
pub fn m_power_name(k: u32, l: u32) -> String {
    let m = match k {
        0 => String::new(),
        1 => "m ".into(),
        _ => format!("m^{k} "),
    };
    match l {
        0 if k == 0 => "(1)".into(),
        0 => m.trim_end().into(),
        1 => format!("{m}P"),
        _ => format!("{m}P^{l}"),
    }
}

/// Whether `P^(3) ⊆ m P^2` according to the classification theorems.
pub fn third_power_criterion(e: &MatrixExponents) -> bool {
    match e.kind {
        MatrixType::Type2 => true,
        MatrixType::Type1 | MatrixType::Type1Prime => {
            let alpha3 = (2 * e.a1).saturating_sub(e.a2);
            let gamma3 = (2 * e.c2).saturating_sub(e.c1);
            !(alpha3 == 0 && gamma3 == 0 && e.b1 == e.b2)
        }
    }
}

/// `floor((r + 1) / 2) + 1`.
pub fn stable_n(e: &MatrixExponents) -> Result<u32> {
    Ok(e.r_index()?.div_ceil(2) + 1)
}

/// Decides `a ⊆ b` and turns the answer into report records. A prediction
/// that disagrees with the solver is an [`Error::InternalMismatch`].
pub fn check_containment(
    claim: &str,
    a: &IdealGens,
    b: &IdealGens,
    b_name: &str,
    predicted: Option<bool>,
    jobs: usize,
) -> Result<(VerdictRecord, Vec<CertificateRecord>)> {
    let verdict = contained_with_jobs(a, b, jobs)?;
    let mut rec = VerdictRecord {
        claim: claim.into(),
        level: None,
        predicted,
        contained: verdict.is_contained(),
        checked: 0,
        witness: None,
        witness_polynomial: None,
        witness_degree: None,
        residual_lead: None,
    };
    let mut certs = vec![];
    match verdict {
        ContainmentVerdict::Contained { certificates } => {
            rec.checked = certificates.len();
            for (i, c) in certificates.iter().enumerate() {
                certs.push(CertificateRecord::from_membership(
                    &a.labels()[i],
                    &a.generators()[i],
                    b_name,
                    b,
                    c,
                ));
            }
        }
        ContainmentVerdict::NotContained { witness, label, degree, residual_lead } => {
            rec.checked = witness + 1;
            rec.witness = Some(label);
            rec.witness_polynomial = Some(a.generators()[witness].to_string());
            rec.witness_degree = Some(degree);
            rec.residual_lead = Some(residual_lead.to_string());
        }
    }
    agree(&rec)?;
    Ok((rec, certs))
}

fn agree(rec: &VerdictRecord) -> Result<()> {
    match rec.predicted {
        Some(p) if p != rec.contained => Err(Error::InternalMismatch(format!(
            "{}: predicted {}, solver says {}",
            rec.claim,
            verdict_word(p),
            verdict_word(rec.contained)
        ))),
        _ => Ok(()),
    }
}

fn verdict_word(contained: bool) -> &'static str {
    if contained {
        "contained"
    } else {
        "not contained"
    }
}

/// Full answer for one matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarbourneReport {
    pub exponents: [u32; 6],
    #[serde(rename = "type")]
    pub kind: MatrixType,
    pub field: String,
    pub r: Option<u32>,
    pub n: Option<u32>,
    pub third_power: VerdictRecord,
    /// `P^(2l-1)` against `m P^l` for `l = 1..n`; empty outside type 1'.
    pub profile: Vec<VerdictRecord>,
    /// Membership lemmas for `D_l`, each certified by the solver.
    pub lemmas: Vec<VerdictRecord>,
    pub certificates: Vec<CertificateRecord>,
}

impl HarbourneReport {
    pub fn verdicts(&self) -> impl Iterator<Item = &VerdictRecord> {
        std::iter::once(&self.third_power).chain(&self.profile).chain(&self.lemmas)
    }
}

pub fn verify_harbourne_profile(e: &MatrixExponents, field: FieldSpec) -> Result<HarbourneReport> {
    verify_harbourne_profile_with_jobs(e, field, 1)
}

/// [`verify_harbourne_profile`] with containment checks spread over `jobs`
/// threads.
pub fn verify_harbourne_profile_with_jobs(
    e: &MatrixExponents,
    field: FieldSpec,
    jobs: usize,
) -> Result<HarbourneReport> {
    let p2 = ordinary_power(2, e, field);
    let mp2 = m_multiples(&p2, 1);
    let b3 = sympow_basis(3, e, field)?;
    let (mut third, mut certificates) = check_containment(
        "P^(3) ⊆ m P^2",
        &b3.ideal,
        &mp2,
        &m_power_name(1, 2),
        Some(third_power_criterion(e)),
        jobs,
    )?;
    third.level = Some(3);
    let mut report = HarbourneReport {
        exponents: e.exponents().to_array(),
        kind: e.kind,
        field: field.to_string(),
        r: None,
        n: None,
        third_power: third,
        profile: vec![],
        lemmas: vec![],
        certificates: vec![],
    };
    if e.kind != MatrixType::Type1Prime {
        report.certificates = certificates;
        return Ok(report);
    }
    let r = e.r_index()?;
    let n = stable_n(e)?;
    report.r = Some(r);
    report.n = Some(n);
    let top = 2 * n - 1;
    let expected_top = if r % 2 == 1 { r + 2 } else { r + 1 };
    if top != expected_top {
        return Err(Error::InternalMismatch(format!("2n-1 = {top} but r = {r}")));
    }
    let d = d_sequence(r + 1, e, field)?;

    for l in 1..n {
        let k = 2 * l - 1;
        let target = m_multiples(&ordinary_power(l, e, field), 1);
        let label = format!("D_{k}");
        let dk = &d[k as usize].value;
        let rec = match Solver::new(&target).membership(dk)? {
            Membership::Member(_) => VerdictRecord {
                claim: format!("P^({k}) ⊆ {}", m_power_name(1, l)),
                level: Some(l),
                predicted: Some(false),
                contained: true,
                checked: 1,
                witness: None,
                witness_polynomial: None,
                witness_degree: None,
                residual_lead: None,
            },
            Membership::NotMember(nm) => VerdictRecord {
                claim: format!("P^({k}) ⊆ {}", m_power_name(1, l)),
                level: Some(l),
                predicted: Some(false),
                contained: false,
                checked: 1,
                witness: Some(label),
                witness_polynomial: Some(dk.to_string()),
                witness_degree: Some(nm.degree),
                residual_lead: Some(nm.residual_lead.to_string()),
            },
        };
        agree(&rec)?;
        report.profile.push(rec);
    }

    let basis = sympow_basis(top, e, field)?;
    let mpn = m_multiples(&ordinary_power(n, e, field), 1);
    let (mut rec, certs) = check_containment(
        &format!("P^({top}) ⊆ {}", m_power_name(1, n)),
        &basis.ideal,
        &mpn,
        &m_power_name(1, n),
        Some(true),
        jobs,
    )?;
    rec.level = Some(n);
    report.profile.push(rec);
    certificates.extend(certs);

    // D_l ∈ m^delta P^((l+1)/2), delta = 1 iff l is even or l = r + 1.
    for l in 0..=r + 1 {
        let delta = u32::from(l % 2 == 0 || l == r + 1);
        let half = l.div_ceil(2);
        let target = m_multiples(&ordinary_power(half, e, field), delta);
        let name = m_power_name(delta, half);
        let dl = &d[l as usize].value;
        let rec = lemma_record(&format!("D_{l} ∈ {name}"), &format!("D_{l}"), dl, &target, &name, l)?;
        report.lemmas.push(rec.0);
        certificates.push(rec.1);
    }
    for l in 1..=r + 1 {
        let pl = ordinary_power(l, e, field);
        let name = m_power_name(0, l);
        let mut solver = Solver::new(&pl);
        let (zm, xm) = clearing_exponents(l, e)?;
        let mults = if zm == xm { vec![zm] } else { vec![zm, xm] };
        for m in mults {
            let f = d[l as usize].value.mul_monomial(&m);
            let label = if m == crate::Monomial::ONE { format!("D_{l}") } else { format!("{m}*D_{l}") };
            let rec = match solver.membership(&f)? {
                Membership::Member(c) => {
                    certificates.push(CertificateRecord::from_membership(&label, &f, &name, &pl, &c));
                    member_record(&format!("{label} ∈ {name}"), l)
                }
                Membership::NotMember(_) => {
                    return Err(Error::InternalMismatch(format!("{label} not in {name}")))
                }
            };
            report.lemmas.push(rec);
        }
    }
    report.certificates = certificates;
    Ok(report)
}

fn member_record(claim: &str, level: u32) -> VerdictRecord {
    VerdictRecord {
        claim: claim.into(),
        level: Some(level),
        predicted: Some(true),
        contained: true,
        checked: 1,
        witness: None,
        witness_polynomial: None,
        witness_degree: None,
        residual_lead: None,
    }
}

fn lemma_record(
    claim: &str,
    label: &str,
    f: &crate::Poly,
    target: &IdealGens,
    name: &str,
    level: u32,
) -> Result<(VerdictRecord, CertificateRecord)> {
    match Solver::new(target).membership(f)? {
        Membership::Member(c) => Ok((
            member_record(claim, level),
            CertificateRecord::from_membership(label, f, name, target, &c),
        )),
        Membership::NotMember(_) => Err(Error::InternalMismatch(format!("{claim} fails"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{classify, Exponents};

    fn m(raw: [u32; 6]) -> MatrixExponents {
        classify(Exponents::from_array(raw)).unwrap()
    }

    #[test]
    fn predictions() {
        assert!(!third_power_criterion(&m([1, 2, 1, 1, 3, 1])));
        assert!(third_power_criterion(&m([3, 1, 2, 1, 2, 1])));
        assert_eq!(stable_n(&m([1, 2, 1, 1, 3, 1])).unwrap(), 3);
        assert_eq!(stable_n(&m([2, 3, 1, 1, 2, 1])).unwrap(), 2);
        assert!(matches!(stable_n(&m([3, 1, 2, 1, 2, 1])), Err(Error::WrongType { .. })));
    }

    #[test]
    fn names() {
        assert_eq!(m_power_name(1, 2), "m P^2");
        assert_eq!(m_power_name(0, 1), "P");
        assert_eq!(m_power_name(1, 0), "m");
        assert_eq!(m_power_name(2, 3), "m^2 P^3");
    }

    #[test]
    fn profile_p5_11_4() {
        let rep = verify_harbourne_profile(&m([1, 2, 1, 1, 3, 1]), FieldSpec::Rationals).unwrap();
        assert_eq!(rep.third_power.witness.as_deref(), Some("D_3"));
        assert_eq!(rep.third_power.witness_degree, Some(44));
        assert_eq!((rep.r, rep.n), (Some(3), Some(3)));
        let w: Vec<_> = rep.profile.iter().map(|v| (v.contained, v.witness.clone())).collect();
        assert_eq!(w, [(false, Some("D_1".into())), (false, Some("D_3".into())), (true, None)]);
        assert!(rep.lemmas.iter().all(|v| v.contained));
        assert_eq!(rep.lemmas.len(), 5 + 1 + 2 * 3);
    }

    #[test]
    fn type2_stops_after_third_power() {
        for field in [FieldSpec::Rationals, FieldSpec::prime(2).unwrap()] {
            let rep = verify_harbourne_profile(&m([3, 1, 2, 1, 2, 1]), field).unwrap();
            assert!(rep.third_power.contained);
            assert!(rep.profile.is_empty());
            assert!(!rep.certificates.is_empty());
        }
    }
}
