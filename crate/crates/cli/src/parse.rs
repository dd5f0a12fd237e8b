//! Complex literals (`a+bi`, `a-bi`, `bi`, `i`, `-i`, `a`) and grid ranges.

use num_complex::Complex64;

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty complex literal".into());
    }
    let bad = || format!("cannot parse `{s}` as a complex number (expected a+bi)");
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return match t.parse::<f64>() {
            Ok(re) if re.is_finite() => Ok(Complex64::new(re, 0.0)),
            _ => Err(bad()),
        };
    };
    // split at the last sign that is not the leading one or part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        v => v.parse::<f64>().map_err(|_| bad())?,
    };
    let re = if re.is_empty() {
        0.0
    } else {
        re.parse::<f64>().map_err(|_| bad())?
    };
    if !(re.is_finite() && im.is_finite()) {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

/// `a:b:step` (inclusive of `b` up to rounding) or a single complex value.
pub fn parse_range(s: &str) -> Result<Vec<Complex64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [single] => parse_complex(single).map(|v| vec![v]),
        [a, b, step] => {
            let num = |v: &str| {
                v.trim()
                    .parse::<f64>()
                    .map_err(|_| format!("range bound `{v}` is not a real number"))
            };
            let (a, b, step) = (num(a)?, num(b)?, num(step)?);
            if !(step > 0.0) || !a.is_finite() || !b.is_finite() || b < a {
                return Err(format!("empty range `{s}`"));
            }
            let n = ((b - a) / step + 1e-9).floor() as usize + 1;
            Ok((0..n)
                .map(|k| Complex64::new(a + k as f64 * step, 0.0))
                .collect())
        }
        _ => Err(format!("range `{s}` must be a:b:step or a single value")),
    }
}
