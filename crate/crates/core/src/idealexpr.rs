//! Small expressions naming constructed ideals: `sym:L`, `pow:L`, `m` and
//! `m^k`, multiplied with `*`. For example `m*pow:2` is `m P^2`.

use crate::curve::MatrixExponents;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::membership::{ideal_product, m_multiples, IdealGens};
use crate::sympow::{ordinary_power, sympow_basis};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    Maximal(u32),
    Power(u32),
    Symbolic(u32),
}

pub fn parse(expr: &str) -> Result<Vec<Factor>> {
    let bad = || Error::Parse(format!("bad ideal expression {expr:?}; expected factors like sym:3, pow:2, m, m^2"));
    let mut out = vec![];
    for raw in expr.split('*') {
        let f = raw.trim();
        let level = |s: &str| s.trim().parse::<u32>().map_err(|_| bad());
        let factor = if f == "m" {
            Factor::Maximal(1)
        } else if let Some(k) = f.strip_prefix("m^") {
            Factor::Maximal(level(k)?)
        } else if let Some(l) = f.strip_prefix("pow:") {
            Factor::Power(level(l)?)
        } else if let Some(l) = f.strip_prefix("sym:") {
            Factor::Symbolic(level(l)?)
        } else {
            return Err(bad());
        };
        out.push(factor);
    }
    Ok(out)
}

fn name(f: Factor) -> String {
    match f {
        Factor::Maximal(1) => "m".into(),
        Factor::Maximal(k) => format!("m^{k}"),
        Factor::Power(1) => "P".into(),
        Factor::Power(l) => format!("P^{l}"),
        Factor::Symbolic(l) => format!("P^({l})"),
    }
}

/// Builds the ideal and a display name such as `m P^2`.
pub fn build(expr: &str, e: &MatrixExponents, field: FieldSpec) -> Result<(String, IdealGens)> {
    let factors = parse(expr)?;
    let mut m = 0;
    let mut acc: Option<IdealGens> = None;
    let mut names = vec![];
    for f in &factors {
        let ideal = match *f {
            Factor::Maximal(k) => {
                m += k;
                continue;
            }
            Factor::Power(l) => ordinary_power(l, e, field),
            Factor::Symbolic(l) => sympow_basis(l, e, field)?.ideal,
        };
        names.push(name(*f));
        acc = Some(match acc {
            None => ideal,
            Some(a) => ideal_product(&a, &ideal)?,
        });
    }
    let base = acc.unwrap_or_else(|| IdealGens::unit(e.grading(), field));
    let ideal = m_multiples(&base, m);
    if m > 0 {
        names.insert(0, name(Factor::Maximal(m)));
    }
    Ok((names.join(" "), ideal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{classify, Exponents};

    #[test]
    fn parses() {
        assert_eq!(parse("m*pow:2").unwrap(), [Factor::Maximal(1), Factor::Power(2)]);
        assert_eq!(parse("sym:3 * m^2").unwrap(), [Factor::Symbolic(3), Factor::Maximal(2)]);
        assert!(parse("sym3").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn builds() {
        let e = classify(Exponents::new(1, 2, 1, 1, 3, 1)).unwrap();
        let (name, i) = build("m*pow:2", &e, FieldSpec::Rationals).unwrap();
        assert_eq!(name, "m P^2");
        assert_eq!(i.len(), 18);
        let (name, i) = build("sym:2*pow:1", &e, FieldSpec::Rationals).unwrap();
        assert_eq!(name, "P^(2) P");
        assert_eq!(i.len(), 13);
        let (name, i) = build("m", &e, FieldSpec::Rationals).unwrap();
        assert_eq!((name.as_str(), i.len()), ("m", 3));
    }
}
