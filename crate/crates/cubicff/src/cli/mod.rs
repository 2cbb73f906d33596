//! Command-line front end: requests, reports and their rendering. `main.rs`
//! only parses arguments and prints an [`Outcome`].

mod parse;

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Fq;
use crate::error::{Error, Result};
use crate::forms::{CanonicalForm, CubicInput};
use crate::pipeline::{analyze, FieldReport};
use crate::reduction::{as_reduce, gas_reduce};
use crate::verify::{
    as3_genus_oracle, generator_fuzz, kummer_genus_oracle, kummer_split_spotcheck, random_place,
};

pub use parse::{parse_cubic, parse_poly, parse_ratfn};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Classify,
    Genus,
    Basis,
    Verify,
    All,
}

impl Command {
    fn wants_basis(self) -> bool {
        matches!(self, Command::Basis | Command::Verify | Command::All)
    }
}

/// F_q given as an order, or as p and n, with an optional modulus in x over F_p.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FieldSpec {
    pub q: Option<u64>,
    pub p: Option<u64>,
    pub n: Option<u32>,
    pub modulus: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub json: bool,
    pub seed: u64,
    pub trace: bool,
    pub allow_constant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Request {
    pub command: Command,
    pub field: FieldSpec,
    pub cubic: String,
    pub options: Options,
}

/// What the process should print and return.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceEntry {
    pub place: String,
    pub degree: u32,
    pub e: u32,
    pub d: i64,
}

/// The JSON form of a [`FieldReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub q: u64,
    pub p: u64,
    pub n: u32,
    pub form: String,
    pub a: String,
    pub generator_map: String,
    pub galois: bool,
    pub constant: bool,
    pub places: Vec<PlaceEntry>,
    pub genus: Option<i64>,
    pub basis: Option<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    #[serde(flatten)]
    report: &'a Report,
    #[serde(skip_serializing_if = "Option::is_none")]
    checks: Option<&'a [Check]>,
}

pub fn build_field(spec: &FieldSpec, seed: u64) -> Result<Fq> {
    let fq = match (spec.q, spec.p) {
        (Some(q), None) if spec.modulus.is_none() => Fq::from_order(q)?,
        (q, p) => {
            let (p, n) = match (q, p) {
                (_, Some(p)) => (p, spec.n.unwrap_or(1)),
                (Some(q), None) => {
                    let f = Fq::from_order(q)?;
                    (f.p() as u64, f.n())
                }
                (None, None) => {
                    return Err(Error::Syntax {
                        pos: 0,
                        msg: "no field given (use --q or --p)".into(),
                    })
                }
            };
            match &spec.modulus {
                None => Fq::new(p, n)?,
                Some(m) => {
                    let m = parse_poly(m, &Fq::prime(p)?)?;
                    let n = m.degree().max(0) as u32;
                    if spec.n.is_some_and(|k| k != n)
                        || q.is_some_and(|q| Some(q) != { p }.checked_pow(n))
                    {
                        return Err(Error::BadModulus(n));
                    }
                    Fq::with_modulus(p, n, m.coeffs().iter().map(|c| c.index()).collect())?
                }
            }
        }
    };
    Ok(fq.with_seed(seed))
}

/// Text of the canonical cubic for a form name and parameter, as emitted in reports.
pub fn canonical_cubic_text(form: &str, a: &str) -> String {
    match form {
        "pure" => format!("y^3 - ({a})"),
        "impure" => format!("y^3 - 3*y - ({a})"),
        _ => format!("y^3 + ({a})*y + ({a})^2"),
    }
}

pub fn report(fr: &FieldReport, with_basis: bool) -> Report {
    let r = &fr.ramification;
    Report {
        q: fr.fq.q() as u64,
        p: fr.fq.p() as u64,
        n: fr.fq.n(),
        form: fr.form.name().to_string(),
        a: fr.form.param().to_string(),
        generator_map: fr.map.to_string(),
        galois: r.galois,
        constant: r.constant,
        places: r
            .triples
            .iter()
            .map(|t| PlaceEntry {
                place: t.place.to_string(),
                degree: t.place.degree(),
                e: t.e,
                d: t.d,
            })
            .collect(),
        genus: r.genus,
        basis: with_basis.then(|| fr.basis.strings()),
    }
}

fn trace_lines(input: &CubicInput, fr: &FieldReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "trace: input y^3 + ({})*y^2 + ({})*y + ({})",
        input.e, input.f, input.g
    );
    let _ = writeln!(
        s,
        "trace: canonical form {} with a = {}",
        fr.form.name(),
        fr.form.param()
    );
    let _ = writeln!(s, "trace: generator map {}", fr.map);
    match &fr.form {
        CanonicalForm::CharThree(a) => {
            let red = gas_reduce(a);
            for st in &red.history {
                let _ = writeln!(s, "trace: reduction at {}: w = {}", st.place, st.w);
            }
            let _ = writeln!(s, "trace: reduced parameter {}", red.b);
            if let Some(d) = red.infinity_local_degree {
                let _ = writeln!(s, "trace: reduced at infinity only, pole order {d}");
            }
        }
        CanonicalForm::Impure(a) if a.field().p() == 2 => {
            let red = as_reduce(&crate::ratfunc::RatFn::one(a.field()).add(&a.inv()), 2);
            let _ = writeln!(s, "trace: resolvent parameter reduced to {}", red.b);
        }
        _ => {}
    }
    let _ = writeln!(s, "trace: basis construction {:?}", fr.basis.provenance);
    s
}

fn verify_checks(fr: &FieldReport, seed: u64) -> Vec<Check> {
    let mut checks = vec![Check {
        name: "basis".into(),
        passed: true,
        detail: "discriminant valuations match the different".into(),
    }];
    let genus = fr.ramification.genus;
    let oracle = match &fr.form {
        CanonicalForm::Pure(a) if fr.fq.q() % 3 == 1 && !fr.ramification.constant => {
            Some(("kummer_genus", kummer_genus_oracle(a)))
        }
        CanonicalForm::CharThree(a) if fr.ramification.galois && !fr.ramification.constant => {
            Some(("artin_schreier_genus", as3_genus_oracle(a)))
        }
        _ => None,
    };
    if let Some((name, res)) = oracle {
        let (passed, detail) = match res {
            Ok(g) => (Some(g) == genus, format!("oracle genus {g}")),
            Err(e) => (false, e.to_string()),
        };
        checks.push(Check {
            name: name.into(),
            passed,
            detail,
        });
    }
    let found = generator_fuzz(&fr.form, seed, 30);
    checks.push(Check {
        name: "generator_fuzz".into(),
        passed: found.is_empty(),
        detail: match found.first() {
            None => "30 presentations agree".into(),
            Some(d) => format!(
                "{} disagreements, first: {} gives {}",
                found.len(),
                d.input,
                d.oracle
            ),
        },
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut applicable, mut valid) = (0, 0);
    for _ in 0..20 {
        let pl = random_place(&fr.fq, &mut rng, 2);
        if let Ok(ok) = kummer_split_spotcheck(&fr.form, &pl) {
            applicable += 1;
            valid += ok as usize;
        }
    }
    checks.push(Check {
        name: "kummer_split".into(),
        passed: valid == applicable,
        detail: format!("{valid} of {applicable} applicable places valid"),
    });
    checks
}

fn human(rep: &Report, command: Command, checks: &[Check]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "field: F_{} (p = {}, n = {})", rep.q, rep.p, rep.n);
    let _ = writeln!(s, "form: {}, a = {}", rep.form, rep.a);
    let _ = writeln!(s, "generator map: {}", rep.generator_map);
    let _ = writeln!(s, "galois: {}", rep.galois);
    if command != Command::Classify {
        if rep.constant {
            let _ = writeln!(
                s,
                "constant field extension: no ramification, genus not defined"
            );
        } else {
            let _ = writeln!(s, "ramified places:");
            for pl in &rep.places {
                let _ = writeln!(
                    s,
                    "  {} (degree {}): e = {}, d = {}",
                    pl.place, pl.degree, pl.e, pl.d
                );
            }
        }
        if let Some(g) = rep.genus {
            let _ = writeln!(s, "genus: {g}");
        }
    }
    if let Some(b) = &rep.basis {
        let _ = writeln!(s, "integral basis: {{{}}}", b.join(", "));
    }
    for c in checks {
        let _ = writeln!(
            s,
            "check {}: {} ({})",
            c.name,
            if c.passed { "ok" } else { "FAILED" },
            c.detail
        );
    }
    s
}

fn error_code(e: &Error) -> i32 {
    if e.is_internal() {
        1
    } else {
        2
    }
}

fn error_json(e: &Error, line: Option<usize>) -> serde_json::Value {
    let mut v = serde_json::json!({ "error": e.kind(), "message": e.to_string() });
    if let Some(l) = line {
        v["line"] = l.into();
    }
    v
}

/// Run the pipeline on one input. Returns the rendered output and exit code.
fn run_one(
    command: Command,
    fq: &Fq,
    cubic: &str,
    opts: &Options,
    pretty: bool,
    line: Option<usize>,
) -> Outcome {
    let result = parse_cubic(cubic, fq).and_then(|input| {
        let fr = analyze(&input, opts.allow_constant)?;
        Ok((input, fr))
    });
    let (input, fr) = match result {
        Ok(v) => v,
        Err(e) => {
            let stdout = if opts.json {
                format!("{}\n", error_json(&e, line))
            } else {
                String::new()
            };
            let prefix = line.map(|l| format!("line {l}: ")).unwrap_or_default();
            let stderr = if opts.json {
                String::new()
            } else {
                format!("{prefix}error: {e}\n")
            };
            return Outcome {
                code: error_code(&e),
                stdout,
                stderr,
            };
        }
    };
    let rep = report(&fr, command.wants_basis());
    let checks = if command == Command::Verify {
        verify_checks(&fr, opts.seed)
    } else {
        Vec::new()
    };
    let code = if checks.iter().all(|c| c.passed) {
        0
    } else {
        1
    };
    let stdout = if opts.json {
        let out = VerifyOutput {
            report: &rep,
            checks: (command == Command::Verify).then_some(&checks[..]),
        };
        let text = if pretty {
            serde_json::to_string_pretty(&out)
        } else {
            serde_json::to_string(&out)
        };
        format!("{}\n", text.expect("report serializes"))
    } else {
        human(&rep, command, &checks)
    };
    let stderr = if opts.trace {
        trace_lines(&input, &fr)
    } else {
        String::new()
    };
    Outcome {
        code,
        stdout,
        stderr,
    }
}

pub fn run(req: &Request) -> Outcome {
    match build_field(&req.field, req.options.seed) {
        Ok(fq) => run_one(req.command, &fq, &req.cubic, &req.options, true, None),
        Err(e) => {
            let o = &req.options;
            Outcome {
                code: error_code(&e),
                stdout: if o.json {
                    format!("{}\n", error_json(&e, None))
                } else {
                    String::new()
                },
                stderr: if o.json {
                    String::new()
                } else {
                    format!("error: {e}\n")
                },
            }
        }
    }
}

/// Parse a batch line "q=<order>; <cubic>", with the order written as an integer or as p^n.
pub fn parse_batch_line(line: &str) -> Result<(FieldSpec, String)> {
    let syntax = |msg: &str| Error::Syntax {
        pos: 0,
        msg: msg.into(),
    };
    let (head, cubic) = line
        .split_once(';')
        .ok_or_else(|| syntax("expected 'q=<order>; <cubic>'"))?;
    let order = head
        .trim()
        .strip_prefix("q=")
        .ok_or_else(|| syntax("expected 'q='"))?
        .trim();
    let q = match order.split_once('^') {
        Some((p, n)) => {
            let p: u64 = p.trim().parse().map_err(|_| syntax("bad field order"))?;
            let n: u32 = n.trim().parse().map_err(|_| syntax("bad field order"))?;
            p.checked_pow(n).ok_or(Error::FieldTooLarge(u64::MAX))?
        }
        None => order.parse().map_err(|_| syntax("bad field order"))?,
    };
    Ok((
        FieldSpec {
            q: Some(q),
            ..FieldSpec::default()
        },
        cubic.trim().to_string(),
    ))
}

/// Run every line of a batch file on `workers` threads; output keeps line order.
pub fn run_batch(command: Command, text: &str, opts: &Options, workers: usize) -> Outcome {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let work = |&(no, line): &(usize, &str)| -> Outcome {
        let parsed = parse_batch_line(line)
            .and_then(|(spec, cubic)| Ok((build_field(&spec, opts.seed)?, cubic)));
        match parsed {
            Ok((fq, cubic)) => {
                let mut o = run_one(command, &fq, &cubic, opts, false, Some(no));
                if !opts.json {
                    o.stdout = format!("# line {no}: {line}\n{}", o.stdout);
                }
                o
            }
            Err(e) => Outcome {
                code: error_code(&e),
                stdout: if opts.json {
                    format!("{}\n", error_json(&e, Some(no)))
                } else {
                    String::new()
                },
                stderr: if opts.json {
                    String::new()
                } else {
                    format!("line {no}: error: {e}\n")
                },
            },
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let outs: Vec<Outcome> = pool.install(|| lines.par_iter().map(work).collect());
    let mut all = Outcome::default();
    for o in outs {
        all.stdout.push_str(&o.stdout);
        all.stderr.push_str(&o.stderr);
        all.code = match (all.code, o.code) {
            (1, _) | (_, 1) => 1,
            (2, _) | (_, 2) => 2,
            _ => 0,
        };
    }
    all
}
