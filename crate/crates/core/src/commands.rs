//! The command layer behind the `hafnian` binary.
//!
//! Each command returns an [`Outcome`]: a [`RunReport`] for the output stream,
//! diagnostics for the error stream and an [`Exit`] status. Nothing here
//! prints or exits, so the commands are testable in-process.

use std::fmt;
use std::path::Path;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bessel::bessel_eval;
use crate::error::Error;
use crate::hafnian::{hafnian_bruteforce, sum_expansion};
use crate::matrix_file;
use crate::ring::{ModularRingSpec, Ring, RingValue};
use crate::sequences::{sequence_a001515, sequence_a278990};
use crate::toeplitz::{
    build_j, build_t, build_u, hafnian_toeplitz, hafnian_toeplitz_with, CoefficientMode,
    ToeplitzSpec,
};

/// Largest matrix order the brute-force oracle accepts unless overridden.
/// The oracle costs `(n - 1)!!` leaf products: 2 027 025 at order 16,
/// 654 729 075 at order 20.
pub const DEFAULT_MAX_ORDER: usize = 16;

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Exit {
    Ok = 0,
    VerificationFailed = 1,
    InputError = 2,
    OddOrder = 3,
    SizeCap = 4,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }
}

/// What a command reports.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    /// Human-readable output, one entry per line.
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Option<RunReport>,
    pub diagnostics: Vec<String>,
    pub exit: Exit,
}

impl Outcome {
    fn failed(exit: Exit, message: impl Into<String>) -> Self {
        Self {
            report: None,
            diagnostics: vec![message.into()],
            exit,
        }
    }
}

struct Timer(Instant);

impl Timer {
    fn start() -> Self {
        Timer(Instant::now())
    }

    fn ms(&self) -> f64 {
        as_ms(self.0.elapsed())
    }
}

fn as_ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn parse_integer(name: &str, text: &str) -> Result<BigInt, Outcome> {
    text.trim().parse::<BigInt>().map_err(|_| {
        Outcome::failed(
            Exit::InputError,
            format!("error: --{name} expects a signed decimal integer, got `{text}`"),
        )
    })
}

fn parse_modulus(text: &str) -> Result<ModularRingSpec, Outcome> {
    let n = parse_integer("mod", text)?;
    ModularRingSpec::from_bigint(&n).map_err(|e| Outcome::failed(Exit::InputError, format!("error: {e}")))
}

fn unwrap_integer(v: RingValue) -> BigInt {
    match v {
        RingValue::Integer(n) => n,
        other => unreachable!("expected an integer, got {other:?}"),
    }
}

/// `hafnian <file>`: brute-force hafnian of an integer matrix file.
pub fn cmd_hafnian(path: &Path, max_order: usize) -> Outcome {
    let timer = Timer::start();
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            return Outcome::failed(
                Exit::InputError,
                format!("error: cannot read {}: {e}", path.display()),
            )
        }
    };
    let parsed = match matrix_file::parse(&text) {
        Ok(p) => p,
        Err(e) => return Outcome::failed(Exit::InputError, format!("error: {e}")),
    };
    let mut diagnostics: Vec<String> = parsed
        .zeroed_diagonal
        .iter()
        .map(|i| format!("warning: diagonal entry in row {} replaced by 0", i + 1))
        .collect();
    let order = parsed.matrix.order();
    if order % 2 == 1 {
        diagnostics.push(format!("error: {}", Error::OddOrder(order)));
        return Outcome {
            report: None,
            diagnostics,
            exit: Exit::OddOrder,
        };
    }
    if order > max_order {
        diagnostics.push(format!(
            "error: order {order} exceeds the brute-force cap {max_order} (raise it with --max-order)"
        ));
        return Outcome {
            report: None,
            diagnostics,
            exit: Exit::SizeCap,
        };
    }
    let hf = unwrap_integer(hafnian_bruteforce(&parsed.matrix).expect("even order checked"));
    Outcome {
        report: Some(RunReport {
            command: "hafnian".into(),
            inputs: json!({ "file": path.display().to_string(), "order": order }),
            result: Value::String(hf.to_string()),
            elapsed_ms: timer.ms(),
            verdict: None,
            lines: vec![hf.to_string()],
        }),
        diagnostics,
        exit: Exit::Ok,
    }
}

/// `toeplitz --a A --b B --m M [--mod P]`: the closed form, optionally
/// reduced modulo `P`.
pub fn cmd_toeplitz(a: &str, b: &str, m: u64, modulus: Option<&str>) -> Outcome {
    let timer = Timer::start();
    let (a, b) = match (parse_integer("a", a), parse_integer("b", b)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    let ring = match modulus.map(parse_modulus).transpose() {
        Ok(r) => r,
        Err(e) => return e,
    };
    let (result, route) = match &ring {
        None => {
            let spec = ToeplitzSpec::new(a.clone().into(), b.clone().into(), m).expect("same ring");
            (hafnian_toeplitz(&spec).to_string(), "integer")
        }
        Some(ring) => {
            let spec = ToeplitzSpec::new(
                RingValue::modular(a.clone(), ring),
                RingValue::modular(b.clone(), ring),
                m,
            )
            .expect("same ring");
            match hafnian_toeplitz_with(&spec, CoefficientMode::InRing) {
                Ok(v) => (v.to_string(), "in-ring"),
                Err(Error::ModulusTooSmall { .. }) => {
                    let exact = ToeplitzSpec::new(a.clone().into(), b.clone().into(), m)
                        .expect("same ring");
                    let reduced = RingValue::from_integer(
                        unwrap_integer(hafnian_toeplitz(&exact)),
                        &Ring::Modular(ring.clone()),
                    );
                    (reduced.to_string(), "reduce-after")
                }
                Err(e) => return Outcome::failed(Exit::InputError, format!("error: {e}")),
            }
        }
    };
    Outcome {
        report: Some(RunReport {
            command: "toeplitz".into(),
            inputs: json!({
                "a": a.to_string(),
                "b": b.to_string(),
                "m": m,
                "mod": ring.as_ref().map(|r| r.modulus().to_string()),
                "route": route,
            }),
            result: Value::String(result.clone()),
            elapsed_ms: timer.ms(),
            verdict: None,
            lines: vec![result],
        }),
        diagnostics: Vec::new(),
        exit: Exit::Ok,
    }
}

/// `seq <a001515|a278990> --max-m K`: one term per line from `m = 1`.
pub fn cmd_sequence(name: &str, max_m: u64) -> Outcome {
    let timer = Timer::start();
    let terms = match name.to_ascii_lowercase().as_str() {
        "a001515" => sequence_a001515(max_m),
        "a278990" => sequence_a278990(max_m),
        _ => {
            return Outcome::failed(
                Exit::InputError,
                format!("error: unknown sequence `{name}` (expected a001515 or a278990)"),
            )
        }
    };
    let lines: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
    Outcome {
        report: Some(RunReport {
            command: "seq".into(),
            inputs: json!({ "name": name.to_ascii_lowercase(), "max_m": max_m }),
            result: json!(lines),
            elapsed_ms: timer.ms(),
            verdict: None,
            lines,
        }),
        diagnostics: Vec::new(),
        exit: Exit::Ok,
    }
}

/// `bessel --m M --x X [--check-hafnian]`: `y_m(x)`, optionally compared with
/// `Hf(T(x + 1, x))`.
pub fn cmd_bessel(m: u64, x: &str, check_hafnian: bool) -> Outcome {
    let timer = Timer::start();
    let x = match parse_integer("x", x) {
        Ok(x) => x,
        Err(e) => return e,
    };
    let y = unwrap_integer(bessel_eval(m, &RingValue::Integer(x.clone())));
    let mut lines = vec![y.to_string()];
    let mut verdict = None;
    let mut result = json!(y.to_string());
    if check_hafnian {
        let spec = ToeplitzSpec::new(
            RingValue::Integer(&x + 1),
            RingValue::Integer(x.clone()),
            m,
        )
        .expect("same ring");
        let hf = unwrap_integer(hafnian_toeplitz(&spec));
        let v = if hf == y { "EQUAL" } else { "UNEQUAL" };
        lines.push(format!("Hf(T({}, {x})) = {hf}", &x + 1));
        lines.push(v.to_string());
        result = json!({ "bessel": y.to_string(), "hafnian": hf.to_string() });
        verdict = Some(v.to_string());
    }
    let exit = match verdict.as_deref() {
        Some("UNEQUAL") => Exit::VerificationFailed,
        _ => Exit::Ok,
    };
    Outcome {
        report: Some(RunReport {
            command: "bessel".into(),
            inputs: json!({ "m": m, "x": x.to_string(), "check_hafnian": check_hafnian }),
            result,
            elapsed_ms: timer.ms(),
            verdict,
            lines,
        }),
        diagnostics: Vec::new(),
        exit,
    }
}

/// One `(a, b, m)` case of the verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyCase {
    pub a: i64,
    pub b: i64,
    pub m: u64,
}

/// Cases swept by `verify`: half-orders `1..=max_m` (just `0` when
/// `max_m = 0`), with `a` and `b` each ranging over `-range..=range`.
pub fn verify_cases(max_m: u64, range: u64) -> Vec<VerifyCase> {
    let r = range as i64;
    let half_orders = if max_m == 0 { 0..=0 } else { 1..=max_m };
    let mut cases = Vec::new();
    for m in half_orders {
        for a in -r..=r {
            for b in -r..=r {
                cases.push(VerifyCase { a, b, m });
            }
        }
    }
    cases
}

/// Checks one case, returning a description of the first mismatch.
pub fn verify_case(case: &VerifyCase) -> Option<String> {
    let spec = ToeplitzSpec::integer(case.a, case.b, case.m);
    let closed = hafnian_toeplitz(&spec);
    let brute = hafnian_bruteforce(&build_t(&spec)).expect("even order");
    if closed != brute {
        return Some(format!(
            "a={} b={} m={}: closed form {closed}, brute force {brute}",
            case.a, case.b, case.m
        ));
    }
    let j = build_j(spec.b(), case.m);
    let u = build_u(&(spec.a() - spec.b()), case.m);
    let expanded = sum_expansion(&j, &u).expect("same shape and ring");
    if expanded != closed {
        return Some(format!(
            "a={} b={} m={}: subset expansion of J + U gives {expanded}, closed form {closed}",
            case.a, case.b, case.m
        ));
    }
    None
}

/// `verify --max-m K --range R`: closed form against the brute-force oracle
/// and the `J + U` subset expansion over the whole sweep.
pub fn cmd_verify(max_m: u64, range: u64, max_order: usize) -> Outcome {
    let timer = Timer::start();
    if max_m.saturating_mul(2) > max_order as u64 {
        return Outcome::failed(
            Exit::SizeCap,
            format!("error: order {} exceeds the brute-force cap {max_order}", 2 * max_m),
        );
    }
    let cases = verify_cases(max_m, range);
    let failures: Vec<Option<String>> = cases.par_iter().map(verify_case).collect();
    let first_failure = failures.into_iter().flatten().next();
    let (verdict, line, exit) = match &first_failure {
        None => ("PASS", format!("PASS {} cases", cases.len()), Exit::Ok),
        Some(f) => ("FAIL", format!("FAIL {f}"), Exit::VerificationFailed),
    };
    Outcome {
        report: Some(RunReport {
            command: "verify".into(),
            inputs: json!({ "max_m": max_m, "range": range }),
            result: json!({ "cases": cases.len(), "counterexample": first_failure }),
            elapsed_ms: timer.ms(),
            verdict: Some(verdict.into()),
            lines: vec![line],
        }),
        diagnostics: Vec::new(),
        exit,
    }
}

/// Timing of one benchmark size.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchPoint {
    pub m: u64,
    pub residue: String,
    /// Fastest of the repeated runs.
    pub elapsed_ms: f64,
}

/// Times the in-ring modular closed form at half-order `m`, keeping the
/// fastest of `repeat` runs.
pub fn bench_point(a: &BigInt, b: &BigInt, m: u64, ring: &ModularRingSpec, repeat: u32) -> BenchPoint {
    let spec = ToeplitzSpec::new(RingValue::modular(a.clone(), ring), RingValue::modular(b.clone(), ring), m)
        .expect("same ring");
    let mut best = Duration::MAX;
    let mut residue = String::new();
    for _ in 0..repeat.max(1) {
        let t = Instant::now();
        let v = hafnian_toeplitz_with(&spec, CoefficientMode::InRing).expect("modulus checked");
        best = best.min(t.elapsed());
        residue = v.to_string();
    }
    BenchPoint {
        m,
        residue,
        elapsed_ms: as_ms(best),
    }
}

/// `bench --m M --mod P [--sweep]`: timing of the in-ring modular
/// evaluation, at `M` alone or at `M`, `2M` and `4M`.
pub fn cmd_bench(m: u64, modulus: &str, a: &str, b: &str, sweep: bool, repeat: u32) -> Outcome {
    let timer = Timer::start();
    let (a, b) = match (parse_integer("a", a), parse_integer("b", b)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    let ring = match parse_modulus(modulus) {
        Ok(r) => r,
        Err(e) => return e,
    };
    let sizes: Vec<u64> = if sweep { vec![m, 2 * m, 4 * m] } else { vec![m] };
    let largest = *sizes.last().expect("at least one size");
    if !ring.is_prime() {
        return Outcome::failed(Exit::InputError, format!("error: modulus {} is not prime", ring.modulus()));
    }
    if ring.modulus() <= &BigUint::from(2 * largest) {
        return Outcome::failed(
            Exit::InputError,
            format!("error: modulus {} must exceed 2m = {}", ring.modulus(), 2 * largest),
        );
    }
    let points: Vec<BenchPoint> = sizes
        .iter()
        .map(|&size| bench_point(&a, &b, size, &ring, repeat))
        .collect();
    let mut lines = Vec::new();
    if sweep {
        for p in &points {
            lines.push(format!("m={} residue={} elapsed_ms={:.3}", p.m, p.residue, p.elapsed_ms));
        }
        for w in points.windows(2) {
            lines.push(format!(
                "ratio {}->{}: {:.2}",
                w[0].m,
                w[1].m,
                w[1].elapsed_ms / w[0].elapsed_ms.max(f64::MIN_POSITIVE)
            ));
        }
    } else {
        lines.push(points[0].residue.clone());
        lines.push(format!("elapsed_ms {:.3}", points[0].elapsed_ms));
    }
    let result = if sweep {
        json!(points)
    } else {
        json!(points[0].residue)
    };
    Outcome {
        report: Some(RunReport {
            command: "bench".into(),
            inputs: json!({
                "m": m,
                "mod": ring.modulus().to_string(),
                "a": a.to_string(),
                "b": b.to_string(),
                "sweep": sweep,
                "repeat": repeat,
                "modulus_bits": ring.modulus().bits().to_u64(),
            }),
            result,
            elapsed_ms: timer.ms(),
            verdict: None,
            lines,
        }),
        diagnostics: Vec::new(),
        exit: Exit::Ok,
    }
}
