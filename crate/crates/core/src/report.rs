//! Serializable records for the command-line reports. Polynomials are carried
//! as canonical strings so every entry can be parsed back and re-checked.

use serde::{Deserialize, Serialize};

use crate::curve::{Analysis, CurveData, MatrixExponents};
use crate::membership::{IdealGens, MembershipCertificate};
use crate::sympow::Certificate;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    /// `curve` or `matrix`.
    pub kind: String,
    pub values: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    /// `type1`, `type1prime`, `type2` or `complete_intersection`.
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exponents: Option<[u32; 6]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub relabeling: Option<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weights: Option<[u64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub grading: Option<[u64; 3]>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub relations: Vec<String>,
}

impl Classification {
    pub fn of_matrix(e: &MatrixExponents) -> Self {
        Classification {
            kind: e.kind.name().into(),
            exponents: Some(e.exponents().to_array()),
            relabeling: Some(e.relabeling),
            weights: e.weights().map(|w| w.0),
            grading: Some(e.grading().0),
            relations: vec![],
        }
    }

    pub fn of_curve(d: &CurveData) -> Self {
        let mut c = Self::of_matrix(&d.matrix);
        if let (Some(w), Some(rels)) = (d.weights, d.relations.as_ref()) {
            c.weights = Some(w.0);
            // relations refer to the variables as given
            let perm = d.matrix.relabeling;
            let input = crate::Weights([w.0[perm[0]], w.0[perm[1]], w.0[perm[2]]]);
            c.relations = rels.iter().map(|r| r.describe(&input)).collect();
        }
        c
    }

    pub fn of_analysis(a: &Analysis) -> Self {
        match a {
            Analysis::Matrix(d) => Self::of_curve(d),
            Analysis::CompleteIntersection { weights, relation } => Classification {
                kind: "complete_intersection".into(),
                exponents: None,
                relabeling: None,
                weights: Some(weights.0),
                grading: None,
                relations: vec![relation.describe(weights)],
            },
        }
    }
}

/// One containment question `A ⊆ B` and its answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub claim: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub level: Option<u32>,
    /// What the closed-form criteria predict, when they apply.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub predicted: Option<bool>,
    pub contained: bool,
    /// Number of generators of `A` that were decided.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_polynomial: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_degree: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual_lead: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub generator: String,
    pub cofactor: String,
}

/// `target = sum cofactor * generator` over the generators of `ideal`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub target: String,
    pub polynomial: String,
    pub ideal: String,
    pub terms: Vec<TermRecord>,
}

impl CertificateRecord {
    pub fn from_membership(target: &str, f: &crate::Poly, ideal_name: &str, ideal: &IdealGens, c: &MembershipCertificate) -> Self {
        CertificateRecord {
            target: target.into(),
            polynomial: f.to_string(),
            ideal: ideal_name.into(),
            terms: c
                .labelled(ideal)
                .map(|(g, h)| TermRecord { generator: g.into(), cofactor: h.to_string() })
                .collect(),
        }
    }

    pub fn from_closed_form(c: &Certificate, ideal_name: &str) -> Self {
        CertificateRecord {
            target: c.label.clone(),
            polynomial: c.target.to_string(),
            ideal: ideal_name.into(),
            terms: c
                .terms
                .iter()
                .map(|t| TermRecord { generator: t.generator_label.clone(), cofactor: t.cofactor.to_string() })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedPoly {
    pub label: String,
    pub polynomial: String,
}

/// Top-level JSON document written by every subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: InputEcho,
    pub field: String,
    pub classification: Classification,
    pub r: Option<u32>,
    pub n: Option<u32>,
    pub verdicts: Vec<VerdictRecord>,
    pub certificates: Vec<CertificateRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub polynomials: Vec<NamedPoly>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub provenance: Option<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}
