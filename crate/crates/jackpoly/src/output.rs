//! Record formats consumed by the command-line front end: the one-line plain
//! expansion, per-expansion CSV, JSON records, and exact evaluation of
//! printed coefficients at a rational alpha.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::alpha::AlphaRational;
use crate::error::{Error, Result};
use crate::jack::{alpha_poly_json, bigint_json, jack_json_record, partition_json, JackResult};
use crate::text::render_coeff;

/// Parses an exact rational like `2`, `-1/2`, `7/3`.
pub fn parse_alpha(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        None => (s, "1"),
        Some((n, d)) => (n, d),
    };
    let num =
        BigInt::from_str(num.trim()).map_err(|_| Error::Parse(format!("invalid rational: {s}")))?;
    let den =
        BigInt::from_str(den.trim()).map_err(|_| Error::Parse(format!("invalid rational: {s}")))?;
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(num, den))
}

pub fn render_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_json(r: &BigRational) -> Value {
    if r.denom().is_one() {
        bigint_json(r.numer())
    } else {
        let mut num = r.numer().clone();
        let mut den = r.denom().clone();
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        json!({ "num": bigint_json(&num), "den": bigint_json(&den) })
    }
}

/// Compact cell text: `2+4a` when the value is an integer polynomial, the
/// full rational rendering otherwise.
pub fn render_value(x: &AlphaRational) -> String {
    match x.as_integer_poly() {
        Some(p) => p.render_compact(),
        None => x.render(),
    }
}

pub fn value_json(x: &AlphaRational) -> Value {
    match x.as_integer_poly() {
        Some(p) => alpha_poly_json(p),
        None => json!({
            "num": alpha_poly_json(x.num()),
            "den": alpha_poly_json(x.den()),
        }),
    }
}

pub fn eval_value(x: &AlphaRational, alpha: &BigRational) -> Result<BigRational> {
    x.eval(alpha).ok_or(Error::ZeroDenominator)
}

fn m_label(mu: &crate::partition::Partition) -> String {
    format!("m[{mu}]")
}

/// `J[2] = (1 + a) m[2] + (2) m[1,1]`, terms in descending-lex order of mu;
/// with `alpha` set the parenthesized coefficients are exact rationals.
pub fn jack_plain(result: &JackResult, alpha: Option<&BigRational>) -> Result<String> {
    let mut terms = Vec::new();
    for (mu, c) in result.expansion.iter_desc() {
        let coeff = match alpha {
            None => render_coeff(c),
            Some(a) => format!("({})", render_rational(&eval_value(c, a)?)),
        };
        terms.push(format!("{} {}", coeff, m_label(mu)));
    }
    let rhs = if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    };
    Ok(format!("J[{}] = {}\n", result.lambda, rhs))
}

/// CSV with header `mu,v`, one row per nonzero coefficient in
/// descending-lex order of mu.
pub fn jack_csv(result: &JackResult, alpha: Option<&BigRational>) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["mu", "v"])
        .map_err(|e| Error::Parse(e.to_string()))?;
    for (mu, c) in result.expansion.iter_desc() {
        let cell = match alpha {
            None => render_value(c),
            Some(a) => render_rational(&eval_value(c, a)?),
        };
        writer
            .write_record([mu.to_string(), cell])
            .map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

/// The symbolic JSON record, or the same shape with coefficients evaluated
/// to exact rationals when `alpha` is set.
pub fn jack_json(result: &JackResult, alpha: Option<&BigRational>) -> Result<Value> {
    let a = match alpha {
        None => return Ok(jack_json_record(result)),
        Some(a) => a,
    };
    let mut coeffs = Vec::new();
    for (mu, c) in result.expansion.iter_desc() {
        let v = rational_json(&eval_value(c, a)?);
        coeffs.push(json!({ "mu": partition_json(mu), "v": v }));
    }
    Ok(json!({
        "lambda": partition_json(&result.lambda),
        "n": result.n,
        "coeffs": coeffs,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jack::rodrigues_jack;
    use crate::partition::Partition;

    fn jack(parts: &[u32], n: usize) -> JackResult {
        rodrigues_jack(&Partition::new(parts.to_vec()).unwrap(), n).unwrap()
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(
            parse_alpha("2").unwrap(),
            BigRational::from_integer(2.into())
        );
        assert_eq!(
            parse_alpha("-1/2").unwrap(),
            BigRational::new((-1).into(), 2.into())
        );
        assert_eq!(
            parse_alpha(" 7 / 3 ").unwrap(),
            BigRational::new(7.into(), 3.into())
        );
        assert!(matches!(parse_alpha("1/0"), Err(Error::ZeroDenominator)));
        assert!(parse_alpha("a").is_err());
        assert!(parse_alpha("1.5").is_err());
    }

    #[test]
    fn plain_line_examples() {
        assert_eq!(
            jack_plain(&jack(&[1, 1], 2), None).unwrap(),
            "J[1,1] = (2) m[1,1]\n"
        );
        assert_eq!(
            jack_plain(&jack(&[2], 2), None).unwrap(),
            "J[2] = (1 + a) m[2] + (2) m[1,1]\n"
        );
        assert_eq!(
            jack_plain(&jack(&[], 1), None).unwrap(),
            "J[0] = (1) m[0]\n"
        );
    }

    #[test]
    fn plain_line_evaluated() {
        let alpha = parse_alpha("1/2").unwrap();
        assert_eq!(
            jack_plain(&jack(&[2], 2), Some(&alpha)).unwrap(),
            "J[2] = (3/2) m[2] + (2) m[1,1]\n"
        );
    }

    #[test]
    fn csv_record() {
        assert_eq!(
            jack_csv(&jack(&[2], 2), None).unwrap(),
            "mu,v\n2,1+a\n\"1,1\",2\n"
        );
        let alpha = parse_alpha("3").unwrap();
        assert_eq!(
            jack_csv(&jack(&[2], 2), Some(&alpha)).unwrap(),
            "mu,v\n2,4\n\"1,1\",2\n"
        );
    }

    #[test]
    fn json_evaluated() {
        let alpha = parse_alpha("1/2").unwrap();
        let v = jack_json(&jack(&[2], 2), Some(&alpha)).unwrap();
        assert_eq!(v["coeffs"][0]["v"], json!({ "num": 3, "den": 2 }));
        assert_eq!(v["coeffs"][1]["v"], json!(2));
    }
}
