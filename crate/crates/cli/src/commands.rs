use std::fmt::Write;

use num_bigint::BigUint;
use serde_json::{json, Value};

use kronecker_core::counting::{k_crosscheck, k_partition, k_series};
use kronecker_core::kronecker::{
    candidate_box_size, enumerate_brute, enumerate_canonical, is_kronecker, BRUTE_FORCE_LIMIT,
};
use kronecker_core::{CycloFactorization, Error, IntPoly, Verdict};

use crate::{CountMethod, EnumerateMethod};

/// Default degree limit for listing, in `count --method enumerate` and
/// `enumerate`.
pub const ENUMERATION_GUARD: usize = 12;

/// A finished command: the payload for JSON output, the text rendering, and
/// the process exit code.
pub struct Report {
    pub inputs: Value,
    pub result: Value,
    pub text: String,
    pub exit_code: u8,
}

#[derive(Debug)]
pub enum CommandError {
    Usage(String),
    Internal(String),
}

impl CommandError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CommandError::Usage(_) => 2,
            CommandError::Internal(_) => 3,
        }
    }
}

impl std::fmt::Display for CommandError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CommandError::Usage(m) => f.write_str(m),
            CommandError::Internal(m) => write!(f, "internal consistency failure: {m}"),
        }
    }
}

impl From<Error> for CommandError {
    fn from(err: Error) -> Self {
        match err {
            Error::Mismatch { .. } | Error::Numeric(_) => CommandError::Internal(err.to_string()),
            other => CommandError::Usage(other.to_string()),
        }
    }
}

fn guard(n: usize, limit: usize, overridden: bool) -> Result<(), CommandError> {
    if n > limit && !overridden {
        return Err(CommandError::Usage(format!(
            "degree {n} exceeds the listing limit {limit}; pass --guard-override to run anyway"
        )));
    }
    Ok(())
}

fn coeff_strings(f: &IntPoly) -> Vec<String> {
    f.coeffs().iter().map(|c| c.to_string()).collect()
}

fn factors_json(fac: &CycloFactorization) -> Value {
    fac.factors
        .iter()
        .map(|(d, e)| json!({ "index": d, "multiplicity": e }))
        .collect()
}

/// `z^2 * g_1^2 * g_3`; `1` for the empty product.
pub fn describe(fac: &CycloFactorization) -> String {
    let mut parts = Vec::new();
    match fac.shift {
        0 => {}
        1 => parts.push("z".to_string()),
        k => parts.push(format!("z^{k}")),
    }
    for (d, e) in &fac.factors {
        parts.push(if *e == 1 {
            format!("g_{d}")
        } else {
            format!("g_{d}^{e}")
        });
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" * ")
    }
}

fn parse_poly(s: &str) -> Result<IntPoly, CommandError> {
    s.parse::<IntPoly>().map_err(CommandError::from)
}

fn method_name(m: CountMethod) -> &'static str {
    match m {
        CountMethod::Partition => "partition",
        CountMethod::Series => "series",
        CountMethod::Enumerate => "enumerate",
        CountMethod::All => "all",
    }
}

pub fn count(n: u64, method: CountMethod, overridden: bool) -> Result<Report, CommandError> {
    let value: BigUint = match method {
        CountMethod::Partition => k_partition(n)?,
        CountMethod::Series => k_series(n.max(1))?.coeffs[n as usize].clone(),
        CountMethod::Enumerate => {
            guard(n as usize, ENUMERATION_GUARD, overridden)?;
            if n == 0 {
                BigUint::from(1u32)
            } else {
                BigUint::from(enumerate_canonical(n as usize, overridden)?.len())
            }
        }
        CountMethod::All => k_crosscheck(n)?,
    };
    Ok(Report {
        inputs: json!({ "n": n, "method": method_name(method) }),
        result: json!({ "k": value.to_string() }),
        text: format!("k({n}) = {value}\n"),
        exit_code: 0,
    })
}

pub fn enumerate(n: usize, method: EnumerateMethod, overridden: bool) -> Result<Report, CommandError> {
    if n == 0 {
        return Err(CommandError::Usage("degree must be at least 1".into()));
    }
    let (listed, method_name): (Vec<(IntPoly, CycloFactorization)>, _) = match method {
        EnumerateMethod::Canonical => {
            guard(n, ENUMERATION_GUARD, overridden)?;
            let mut v: Vec<_> = enumerate_canonical(n, overridden)?
                .into_iter()
                .map(|f| (f.expand(), f))
                .collect();
            v.sort_by(|a, b| a.0.cmp(&b.0));
            (v, "canonical")
        }
        EnumerateMethod::Brute => {
            guard(n, BRUTE_FORCE_LIMIT.min(ENUMERATION_GUARD), overridden)?;
            let v = enumerate_brute(n, overridden)?
                .polynomials
                .into_iter()
                .map(|f| match is_kronecker(&f) {
                    Ok(Verdict::Kronecker(fac)) => Ok((f, fac)),
                    _ => Err(CommandError::Internal(format!("{f} listed but not Kronecker"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            (v, "brute")
        }
    };
    let candidates = candidate_box_size(n);

    let polynomials: Vec<Value> = listed
        .iter()
        .map(|(f, fac)| {
            json!({
                "coeffs": coeff_strings(f),
                "shift": fac.shift,
                "factors": factors_json(fac),
            })
        })
        .collect();
    let result = json!({
        "degree": n,
        "candidates": candidates.to_string(),
        "count": listed.len(),
        "polynomials": polynomials,
    });

    let mut text = format!(
        "degree {n}: {} Kronecker polynomials ({candidates} candidates in the coefficient box)\n",
        listed.len()
    );
    let width = listed.iter().map(|(f, _)| f.to_string().len()).max().unwrap_or(0);
    for (f, fac) in &listed {
        let _ = writeln!(text, "{:<width$}  = {}", f.to_string(), describe(fac));
    }
    Ok(Report {
        inputs: json!({ "n": n, "method": method_name }),
        result,
        text,
        exit_code: 0,
    })
}

pub fn check(poly: &str) -> Result<Report, CommandError> {
    let f = parse_poly(poly)?;
    let verdict = is_kronecker(&f)?;
    let inputs = json!({ "poly": poly });
    Ok(match verdict {
        Verdict::Kronecker(fac) => Report {
            inputs,
            result: json!({
                "poly": f.to_string(),
                "coeffs": coeff_strings(&f),
                "kronecker": true,
                "shift": fac.shift,
                "factors": factors_json(&fac),
            }),
            text: format!("{f}: Kronecker, {f} = {}\n", describe(&fac)),
            exit_code: 0,
        },
        Verdict::NotKronecker => Report {
            inputs,
            result: json!({
                "poly": f.to_string(),
                "coeffs": coeff_strings(&f),
                "kronecker": false,
            }),
            text: format!("{f}: not Kronecker\n"),
            exit_code: 1,
        },
    })
}

pub fn cyclotomic(n: u64) -> Result<Report, CommandError> {
    let entry = kronecker_core::cyclotomic(n)?;
    Ok(Report {
        inputs: json!({ "n": n }),
        result: json!({
            "index": n,
            "degree": entry.poly.degree(),
            "coeffs": coeff_strings(&entry.poly),
            "poly": entry.poly.to_string(),
        }),
        text: format!("g_{n}(z) = {}\n", entry.poly),
        exit_code: 0,
    })
}

pub fn inv_totient(j: u64) -> Result<Report, CommandError> {
    let fiber = kronecker_core::inverse_phi(j)?;
    let listed: Vec<String> = fiber.members.iter().map(u64::to_string).collect();
    Ok(Report {
        inputs: json!({ "j": j }),
        result: json!({ "j": j, "s": fiber.len(), "members": fiber.members }),
        text: format!("phi^-1({j}) = {{{}}}\ns({j}) = {}\n", listed.join(", "), fiber.len()),
        exit_code: 0,
    })
}

pub fn power_map(poly: &str, k: usize) -> Result<Report, CommandError> {
    let f = parse_poly(poly)?;
    let fk = kronecker_core::power_map(&f, k)?;
    Ok(Report {
        inputs: json!({ "poly": poly, "k": k }),
        result: json!({
            "coeffs": coeff_strings(&fk),
            "poly": fk.to_string(),
        }),
        text: format!("f_{k}(z) = {fk}\n"),
        exit_code: 0,
    })
}
