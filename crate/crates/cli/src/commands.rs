use std::io::Read;

use borromean::algebra::Mat2;
use borromean::charvar::{
    self, realize_x1, realize_x2, realize_x3, realize_x4, rng_from_seed, sample_component, CharacterTuple,
    ComponentLabel, KappaBranch, Representation, Sign,
};
use borromean::tap::{self, is_unit_match, TapResult};
use borromean::{Error, Tolerance};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::{Branch, CoverArgs, Method, SampleArgs, SolveThetaArgs, TapArgs};

/// Exit status plus an optional report still worth printing.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
    pub report: Option<Value>,
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Self { code: 2, message: msg.into(), report: None }
    }

    pub fn io(msg: impl Into<String>) -> Self {
        Self { code: 3, message: msg.into(), report: None }
    }

    fn with_report(mut self, report: Value) -> Self {
        self.report = Some(report);
        self
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. } | Error::Parse(_) => 3,
            Error::NotDivisible { .. } | Error::ZeroPolynomial => 4,
            _ => 2,
        };
        Self { code, message: e.to_string(), report: None }
    }
}

type Outcome = Result<Value, Failure>;

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn read_input(path: &str) -> Result<Value, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::io(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::io(format!("{path}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::io(format!("{path}: {e}")))
}

fn parse<T: DeserializeOwned>(v: Value) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| Failure::io(format!("malformed input: {e}")))
}

/// Applies `f` to a single JSON value or to each element of an array. Per-item
/// failures in an array are reported inline and the first one sets the exit code.
fn per_item(input: Value, f: impl Fn(Value) -> Outcome + Sync) -> Outcome {
    let Value::Array(items) = input else { return f(input) };
    let results: Vec<Outcome> = items.into_par_iter().map(&f).collect();
    let mut first: Option<(u8, String)> = None;
    let out: Vec<Value> = results
        .into_iter()
        .map(|r| match r {
            Ok(v) => v,
            Err(e) => {
                first.get_or_insert((e.code, e.message.clone()));
                e.report.unwrap_or_else(|| json!({ "error": e.message }))
            }
        })
        .collect();
    match first {
        None => Ok(Value::Array(out)),
        Some((code, message)) => Err(Failure { code, message, report: Some(Value::Array(out)) }),
    }
}

fn label_of(component: &str, i: Option<usize>) -> Result<ComponentLabel, Failure> {
    let full = if component.contains('_') || component == "X4" {
        component.to_string()
    } else {
        format!("{component}_{}", i.unwrap_or(1))
    };
    Ok(full.parse::<ComponentLabel>()?)
}

fn sample_record(rep: &Representation<f64>) -> Value {
    let mut v = to_value(rep);
    v["relation_residuals"] = to_value(&rep.relation_residuals());
    v
}

fn kappa_branch(b: Branch) -> KappaBranch {
    match b {
        Branch::Principal => KappaBranch::Principal,
        Branch::Other => KappaBranch::Other,
    }
}

fn matrix_arg(s: &Option<String>) -> Result<Option<Mat2<f64>>, Failure> {
    s.as_deref().map(|s| serde_json::from_str(s).map_err(|e| Failure::io(format!("matrix argument: {e}")))).transpose()
}

fn explicit_sample(a: &SampleArgs, label: ComponentLabel, tol: &Tolerance) -> Result<Option<Representation<f64>>, Failure> {
    let rep = match label {
        ComponentLabel::X1Plus(i) | ComponentLabel::X1Minus(i) => {
            let sign = if matches!(label, ComponentLabel::X1Plus(_)) { Sign::Plus } else { Sign::Minus };
            match (matrix_arg(&a.x_prev)?, matrix_arg(&a.x_next)?) {
                (Some(p), Some(n)) => realize_x1(i, sign, p, n, tol)?,
                (None, None) => return Ok(None),
                _ => return Err(Failure::usage("give both --x-prev and --x-next, or neither")),
            }
        }
        ComponentLabel::X2(i) => match (a.kappa_prev, a.kappa_next) {
            (Some(p), Some(n)) => realize_x2(i, p, n, tol)?,
            (None, None) => return Ok(None),
            _ => return Err(Failure::usage("give both --kappa-prev and --kappa-next, or neither")),
        },
        ComponentLabel::X3(i) => match (a.t_i, a.t_prev_pair, a.t_next_pair, a.t123) {
            (Some(t), Some(p), Some(n), Some(c)) => realize_x3(i, t, p, n, c, tol)?,
            (None, None, None, None) => return Ok(None),
            _ => return Err(Failure::usage("give all of --t-i --t-prev-pair --t-next-pair --t123, or none")),
        },
        ComponentLabel::X4 => {
            let Some(t) = &a.t else { return Ok(None) };
            let theta = match a.theta {
                Some(th) => th,
                None => {
                    let roots = charvar::solve_theta(t[0], t[1], t[2], tol)?;
                    let k = a.theta_branch.unwrap_or(0);
                    *roots.get(k).ok_or_else(|| {
                        Failure::usage(format!("--theta-branch {k} out of range: {} roots", roots.len()))
                    })?
                }
            };
            realize_x4(t[0], t[1], t[2], theta, kappa_branch(a.kappa_branch), tol)?
        }
        ComponentLabel::Custom => return Err(Failure::usage("cannot sample the Custom label")),
    };
    Ok(Some(rep))
}

pub fn sample(a: &SampleArgs, seed: u64, tol: &Tolerance) -> Outcome {
    let label = label_of(&a.component, a.i)?;
    if let Some(n) = a.samples {
        let reps: Vec<Result<Representation<f64>, Error>> = (0..n as u64)
            .into_par_iter()
            .map(|k| sample_component(&mut rng_from_seed(seed.wrapping_add(k)), label, tol))
            .collect();
        let reps = reps.into_iter().collect::<Result<Vec<_>, _>>()?;
        return Ok(Value::Array(reps.iter().map(sample_record).collect()));
    }
    let rep = match explicit_sample(a, label, tol)? {
        Some(rep) => rep,
        None => sample_component(&mut rng_from_seed(seed), label, tol)?,
    };
    Ok(sample_record(&rep))
}

fn check(name: &str, residual: Option<f64>, pass: bool) -> Value {
    json!({ "name": name, "residual": residual, "pass": pass })
}

fn verify_one(rep: &Representation<f64>, tol: &Tolerance) -> Value {
    let x = rep.matrices();
    let c = rep.character();
    let loose = 10.0 * tol.abs;
    let uni = rep.unimodularity_residual();
    let rel = rep.relation_residuals();
    let rel_max = rel.iter().copied().fold(0.0, f64::max);
    let implied = rep.relation_implication();
    let f3 = c.f3_residual().norm();
    let xi = tap::xi_cross_check(rep);
    let eta = tap::eta_traces(&x).iter().zip(tap::eta_closed(&c)).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    let checks = vec![
        check("unimodular", Some(uni), uni <= tol.abs),
        check("relations", Some(rel_max), rel_max <= tol.abs),
        check("implied_relation", Some(implied.conclusion), !implied.premises_hold(tol.abs) || implied.conclusion <= loose),
        check("irreducible", None, charvar::irreducibility_check(&x, tol)),
        check("f3_identity", Some(f3), f3 <= loose),
        check("xi_identity", Some(xi), xi <= loose),
        check("eta_identities", Some(eta), eta <= loose),
    ];
    let pass = checks.iter().all(|c| c["pass"] == json!(true));
    json!({ "component": rep.component, "relation_residuals": rel, "checks": checks, "pass": pass })
}

pub fn verify(input: &str, tol: &Tolerance) -> Outcome {
    per_item(read_input(input)?, |v| {
        let rep: Representation<f64> = parse(v)?;
        let report = verify_one(&rep, tol);
        if report["pass"] == json!(true) {
            Ok(report)
        } else {
            Err(Failure::usage("verification failed").with_report(report))
        }
    })
}

pub fn character(input: &str) -> Outcome {
    per_item(read_input(input)?, |v| {
        let rep: Representation<f64> = parse(v)?;
        Ok(to_value(&rep.character()))
    })
}

/// A character, or a representation whose character is taken.
fn character_from(v: Value) -> Result<CharacterTuple<f64>, Failure> {
    if v.get("x1").is_some() {
        Ok(parse::<Representation<f64>>(v)?.character())
    } else {
        parse(v)
    }
}

pub fn classify(input: &str, tol: &Tolerance) -> Outcome {
    per_item(read_input(input)?, |v| {
        let c = character_from(v)?;
        Ok(to_value(&charvar::classify(&c, tol)?))
    })
}

fn comparison(a: &TapResult<f64>, b: &TapResult<f64>, tol: &Tolerance) -> (Value, bool) {
    let m = a.compare(b, tol);
    let ok = is_unit_match(&m, 1e-7);
    let mut v = to_value(&m);
    v["columns"] = json!([a.column, b.column]);
    (v, ok)
}

fn tap_one(rep: &Representation<f64>, a: &TapArgs, tol: &Tolerance) -> Outcome {
    let columns: Vec<usize> = if a.all_columns { vec![1, 2, 3] } else { vec![a.column] };
    let label = match &a.label {
        Some(l) => l.parse::<ComponentLabel>()?,
        None => rep.component,
    };
    let closed = match a.method {
        Method::Fox => None,
        _ => Some(tap::tap_closed(&rep.character(), label, tol)?),
    };
    if a.method == Method::Closed {
        return Ok(to_value(closed.as_ref().expect("closed form")));
    }
    let fox = columns.iter().map(|&v| tap::tap_fox(rep, v, tol)).collect::<Result<Vec<_>, _>>()?;
    if a.method == Method::Fox && fox.len() == 1 {
        return Ok(to_value(&fox[0]));
    }
    let pairs: Vec<(Value, bool)> = match &closed {
        Some(c) => fox.iter().map(|f| comparison(f, c, tol)).collect(),
        None => fox[1..].iter().map(|f| comparison(&fox[0], f, tol)).collect(),
    };
    let matched = pairs.iter().all(|(_, ok)| *ok);
    let report = json!({
        "fox": fox,
        "closed": closed,
        "comparisons": pairs.into_iter().map(|(v, _)| v).collect::<Vec<_>>(),
        "match": matched,
    });
    if matched {
        Ok(report)
    } else {
        Err(Failure { code: 4, message: "results differ beyond a unit".into(), report: Some(report) })
    }
}

pub fn tap(a: &TapArgs, tol: &Tolerance) -> Outcome {
    per_item(read_input(&a.input)?, |v| {
        let rep: Representation<f64> = parse(v)?;
        tap_one(&rep, a, tol)
    })
}

pub fn solve_theta(a: &SolveThetaArgs, tol: &Tolerance) -> Outcome {
    let roots = charvar::solve_theta(a.t[0], a.t[1], a.t[2], tol)?;
    Ok(json!({ "t": a.t.iter().map(to_value).collect::<Vec<_>>(), "theta": to_value(&roots) }))
}

pub fn cover(a: &CoverArgs, tol: &Tolerance) -> Outcome {
    let (p, m) = charvar::cover_t3(a.t1, a.t2, a.theta, tol)?;
    Ok(json!({ "t3": [to_value(&p), to_value(&m)] }))
}

pub fn holonomy(tol: &Tolerance) -> Outcome {
    let two = Complex64::new(2.0, 0.0);
    let roots = charvar::solve_theta(two, two, two, tol)?;
    let theta = *roots.first().ok_or(Error::Degenerate("no theta over (2, 2, 2)".into()))?;
    let rep = realize_x4(two, two, two, theta, KappaBranch::Principal, tol)?;
    let fox = tap::tap_fox(&rep, 3, tol)?;
    let closed = tap::tap_closed(&rep.character(), ComponentLabel::X4, tol)?;
    let (cmp, matched) = comparison(&fox, &closed, tol);
    let (spans, total) = tap::span_degree(&fox.delta)?;
    let report = json!({
        "theta": roots,
        "representation": sample_record(&rep),
        "character": rep.character(),
        "fox": fox,
        "closed": closed,
        "comparison": cmp,
        "match": matched,
        "spans": spans,
        "total_span": total,
    });
    if matched {
        Ok(report)
    } else {
        Err(Failure { code: 4, message: "Fox and closed forms differ".into(), report: Some(report) })
    }
}
