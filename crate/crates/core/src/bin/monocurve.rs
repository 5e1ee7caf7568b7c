use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use monocurve::curve::{analyze_curve, analyze_matrix, Analysis, Exponents, MatrixExponents};
use monocurve::harbourne::{check_containment, stable_n, verify_harbourne_profile_with_jobs};
use monocurve::report::{CertificateRecord, Classification, InputEcho, NamedPoly, Report};
use monocurve::sympow::{d_poly, sympow_basis};
use monocurve::{idealexpr, Error, FieldSpec};

/// Symbolic powers and containments for space monomial curves.
#[derive(Parser)]
#[command(name = "monocurve", version)]
struct Cli {
    #[command(flatten)]
    input: Input,
    /// `q` for the rationals or `fp:<p>` for a prime field.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for containment checks.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Curve weights `n1,n2,n3`.
    #[arg(long, global = true)]
    curve: Option<String>,
    /// Matrix exponents `a1,a2,b1,b2,c1,c2`.
    #[arg(long, global = true)]
    matrix: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classification, exponents, weights, r and n.
    Analyze,
    /// Print D_l.
    Dpoly {
        #[arg(long = "l")]
        level: u32,
    },
    /// Generating set of P^(l) with its provenance.
    Sympower {
        #[arg(long = "l")]
        level: u32,
    },
    /// Decide A ⊆ B. Exit code 1 when not contained.
    Contain {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Third-power verdict and, for type 1', the full profile up to n.
    Harbourne,
}

enum Failure {
    Usage(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidField(_) | Error::InvalidWeights(_) => Failure::Usage(e.to_string()),
            e => Failure::Math(e),
        }
    }
}

fn numbers(s: &str, count: usize) -> Result<Vec<u64>, Failure> {
    let v: Vec<u64> = s
        .split(',')
        .map(|t| t.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("expected {count} comma-separated integers, got {s:?}")))?;
    if v.len() != count {
        return Err(Failure::Usage(format!("expected {count} comma-separated integers, got {s:?}")));
    }
    Ok(v)
}

struct Context {
    input: InputEcho,
    field: FieldSpec,
    classification: Classification,
    matrix: Option<MatrixExponents>,
}

impl Context {
    fn load(cli: &Cli) -> Result<Self, Failure> {
        let field = FieldSpec::parse(&cli.field)?;
        let (input, analysis) = match (&cli.input.curve, &cli.input.matrix) {
            (Some(c), None) => {
                let v = numbers(c, 3)?;
                (InputEcho { kind: "curve".into(), values: v.clone() }, analyze_curve(v[0], v[1], v[2])?)
            }
            (None, Some(m)) => {
                let v = numbers(m, 6)?;
                let mut e = [0u32; 6];
                for (slot, x) in e.iter_mut().zip(&v) {
                    *slot = u32::try_from(*x).map_err(|_| Failure::Usage(format!("exponent {x} too large")))?;
                }
                let data = analyze_matrix(Exponents::from_array(e))?;
                (InputEcho { kind: "matrix".into(), values: v }, Analysis::Matrix(Box::new(data)))
            }
            _ => return Err(Failure::Usage("give exactly one of --curve or --matrix".into())),
        };
        let classification = Classification::of_analysis(&analysis);
        let matrix = match analysis {
            Analysis::Matrix(d) => Some(d.matrix),
            Analysis::CompleteIntersection { .. } => None,
        };
        Ok(Context { input, field, classification, matrix })
    }

    fn matrix(&self) -> Result<&MatrixExponents, Failure> {
        self.matrix.as_ref().ok_or(Failure::Math(Error::WrongType {
            expected: "three minimal relations",
            found: "complete intersection".into(),
        }))
    }

    fn report(&self) -> Report {
        let r = self.matrix.and_then(|m| m.r_index().ok());
        let n = self.matrix.and_then(|m| stable_n(&m).ok());
        Report {
            input: self.input.clone(),
            field: self.field.to_string(),
            classification: self.classification.clone(),
            r,
            n,
            verdicts: vec![],
            certificates: vec![],
            polynomials: vec![],
            provenance: None,
        }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn text_header(rep: &Report) -> String {
    let c = &rep.classification;
    let mut out = format!("{}: {}\nfield: {}\ntype: {}\n", rep.input.kind, join(&rep.input.values), rep.field, c.kind);
    if let Some(e) = c.exponents {
        out += &format!("exponents: {}\n", join(&e));
    }
    if let Some(w) = c.weights {
        out += &format!("weights: {}\n", join(&w));
    }
    if let Some(g) = c.grading {
        if c.weights != Some(g) {
            out += &format!("grading: {}\n", join(&g));
        }
    }
    for rel in &c.relations {
        out += &format!("relation: {rel}\n");
    }
    if let Some(r) = rep.r {
        out += &format!("r: {r}\n");
    }
    if let Some(n) = rep.n {
        out += &format!("n: {n}\n");
    }
    out
}

fn verdict_lines(rep: &Report) -> String {
    let mut out = String::new();
    for v in &rep.verdicts {
        match (&v.witness, v.witness_degree) {
            (Some(w), Some(d)) => out += &format!("{}: NOT CONTAINED; witness: {w} (degree {d})\n", v.claim),
            _ => out += &format!("{}: CONTAINED ({})\n", v.claim, certified(v.checked)),
        }
    }
    out
}

fn certified(k: usize) -> String {
    format!("{k} generator{} certified", if k == 1 { "" } else { "s" })
}

fn certificate_lines(certs: &[CertificateRecord]) -> String {
    let mut out = String::new();
    for c in certs {
        let terms: Vec<String> = c.terms.iter().map(|t| format!("({})*{}", t.cofactor, t.generator)).collect();
        out += &format!("{} = {}\n", c.target, if terms.is_empty() { "0".into() } else { terms.join(" + ") });
    }
    out
}

fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    let ctx = Context::load(cli)?;
    let mut rep = ctx.report();
    let json = matches!(cli.format, Format::Json);
    let mut code = 0;
    let text = match &cli.command {
        Command::Analyze => text_header(&rep),
        Command::Dpoly { level } => {
            let d = d_poly(*level, ctx.matrix()?, ctx.field)?;
            let s = d.value.to_string();
            rep.polynomials.push(NamedPoly { label: format!("D_{level}"), polynomial: s.clone() });
            s + "\n"
        }
        Command::Sympower { level } => {
            let b = sympow_basis(*level, ctx.matrix()?, ctx.field)?;
            let name = format!("P^({level})");
            rep.provenance = Some(b.provenance.describe().into());
            rep.polynomials = b
                .ideal
                .iter()
                .map(|(l, g)| NamedPoly { label: l.into(), polynomial: g.to_string() })
                .collect();
            rep.certificates = b.certificates.iter().map(|c| CertificateRecord::from_closed_form(c, "P")).collect();
            let mut out = format!("{name} = {} ({} generators)\n", b.provenance.describe(), b.ideal.len());
            for p in &rep.polynomials {
                out += &format!("{}: {}\n", p.label, p.polynomial);
            }
            out + &certificate_lines(&rep.certificates)
        }
        Command::Contain { a, b } => {
            let e = ctx.matrix()?;
            let (an, ai) = idealexpr::build(a, e, ctx.field)?;
            let (bn, bi) = idealexpr::build(b, e, ctx.field)?;
            let (v, certs) = check_containment(&format!("{an} ⊆ {bn}"), &ai, &bi, &bn, None, cli.jobs)?;
            let line = match &v.witness {
                Some(w) => {
                    code = 1;
                    format!("NOT CONTAINED; witness: {w}\n")
                }
                None => format!("CONTAINED; {}\n", certified(v.checked)),
            };
            rep.verdicts.push(v);
            rep.certificates = certs;
            line
        }
        Command::Harbourne => {
            let h = verify_harbourne_profile_with_jobs(ctx.matrix()?, ctx.field, cli.jobs)?;
            rep.verdicts = h.verdicts().cloned().collect();
            rep.certificates = h.certificates;
            text_header(&rep) + &verdict_lines(&rep)
        }
    };
    Ok((if json { rep.to_json() + "\n" } else { text }, code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
