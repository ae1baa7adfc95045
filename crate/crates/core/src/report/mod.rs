//! JSON reports for each command. Floats carry 17 significant digits and
//! object keys keep insertion order, so equal inputs give identical bytes.

mod runs;
mod tables;

pub use runs::{check_all, classify, graph_h, sample_points, verify_example, ClassifyOptions};
pub use tables::{slice, tables};

use serde_json::{Number, Value};

use crate::scalar::{render_rational, RatFunc, Rational};

/// A command's result body and whether every one of its checks passed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub result: Value,
    pub pass: bool,
}

/// A float with 17 significant digits; non-finite values become `null`.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let x = x + 0.0; // drops the sign of -0
    let s = format!("{x:.16e}");
    s.parse::<Number>().map(Value::Number).unwrap_or(Value::Null)
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

pub fn num_rows<const N: usize>(rows: &[[f64; N]]) -> Value {
    Value::Array(rows.iter().map(|r| nums(r)).collect())
}

pub fn opt_num(x: Option<f64>) -> Value {
    x.map_or(Value::Null, num)
}

pub fn rat_str(q: &Rational) -> Value {
    Value::String(render_rational(q))
}

pub fn rat_matrix<const N: usize>(m: &[[Rational; N]; N]) -> Value {
    Value::Array(
        m.iter()
            .map(|r| Value::Array(r.iter().map(rat_str).collect()))
            .collect(),
    )
}

pub fn expr(f: &RatFunc) -> Value {
    Value::String(f.render())
}

pub fn expr_matrix<const N: usize>(m: &[[RatFunc; N]; N]) -> Value {
    Value::Array(m.iter().map(|r| Value::Array(r.iter().map(expr).collect())).collect())
}
