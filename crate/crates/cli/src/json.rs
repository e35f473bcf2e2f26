//! JSON shapes for τ and ρ. Arrays are 0-based; `alpha[0]` is `α_1`.

use lamcoord::{DynnikovCoords, Signature, TriangleCoords};
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::Failure;

/// Largest magnitude accepted for a coordinate. Sums and doublings inside
/// decode stay well clear of `i64` overflow below it.
pub const MAX_MAGNITUDE: i64 = 1 << 48;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TauIn {
    n: i64,
    k: i64,
    alpha: Vec<Number>,
    beta: Vec<Number>,
    gamma: Vec<Number>,
    c: Vec<Number>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RhoIn {
    n: i64,
    k: i64,
    a: Vec<Number>,
    b: Vec<Number>,
    t: Vec<Number>,
    c: Vec<Number>,
}

#[derive(Serialize)]
pub struct TauOut<'a> {
    n: usize,
    k: usize,
    alpha: &'a [i64],
    beta: &'a [i64],
    gamma: &'a [i64],
    c: &'a [i64],
}

#[derive(Serialize)]
pub struct RhoOut<'a> {
    n: usize,
    k: usize,
    a: &'a [i64],
    b: &'a [i64],
    t: &'a [i64],
    c: &'a [i64],
}

pub fn tau_out(t: &TriangleCoords) -> TauOut<'_> {
    let s = t.signature();
    TauOut {
        n: s.punctures(),
        k: s.genus(),
        alpha: t.alpha(),
        beta: t.beta(),
        gamma: t.gamma(),
        c: t.core(),
    }
}

pub fn rho_out(r: &DynnikovCoords) -> RhoOut<'_> {
    let s = r.signature();
    RhoOut {
        n: s.punctures(),
        k: s.genus(),
        a: r.a(),
        b: r.b(),
        t: r.t(),
        c: r.core(),
    }
}

fn ints(field: &str, values: &[Number]) -> Result<Vec<i64>, Failure> {
    values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let name = || format!("{field}[{i}] (entry {} of {field})", i + 1);
            match v.as_i64() {
                Some(x) if x.abs() <= MAX_MAGNITUDE => Ok(x),
                Some(x) => Err(Failure::Domain(format!(
                    "{} = {x} exceeds the supported magnitude 2^48",
                    name()
                ))),
                None if v
                    .as_f64()
                    .is_some_and(|f| f.is_finite() && f.fract() == 0.0)
                    || v.is_u64() =>
                {
                    Err(Failure::Domain(format!(
                        "{} = {v} exceeds the supported magnitude 2^48",
                        name()
                    )))
                }
                None => Err(Failure::Parse(format!(
                    "{} = {v} is not an integer",
                    name()
                ))),
            }
        })
        .collect()
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Parse(format!("{what} JSON: {e}")))
}

pub fn read_tau(text: &str) -> Result<TriangleCoords, Failure> {
    let v: TauIn = parse(text, "τ")?;
    let sig = Signature::new(v.k, v.n)?;
    Ok(TriangleCoords::new(
        sig,
        ints("alpha", &v.alpha)?,
        ints("beta", &v.beta)?,
        ints("gamma", &v.gamma)?,
        ints("c", &v.c)?,
    )?)
}

pub fn read_rho(text: &str) -> Result<DynnikovCoords, Failure> {
    let v: RhoIn = parse(text, "ρ")?;
    let sig = Signature::new(v.k, v.n)?;
    Ok(DynnikovCoords::new(
        sig,
        ints("a", &v.a)?,
        ints("b", &v.b)?,
        ints("t", &v.t)?,
        ints("c", &v.c)?,
    )?)
}
