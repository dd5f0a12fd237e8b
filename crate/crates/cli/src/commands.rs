use std::io::{self, Write};

use bigamma::numerics::fmt_complex;
use bigamma::series::{coeffs_a, coeffs_b};
use bigamma::verify::{self, IdentityReport};
use bigamma::{gamma_with_method, gamma_xz, Error, EvalResult, Method, TruncationPolicy};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::parse::parse_range;
use crate::record::OutputRecord;
use crate::{
    EvalArgs, Format, MethodArg, SeriesArgs, SeriesVar, TableArgs, Truncation, VerifyArgs,
};

pub const OK: u8 = 0;
pub const USAGE: u8 = 1;
pub const DOMAIN: u8 = 2;

const MAX_TERMS_ENV: &str = "BIGAMMA_MAX_TERMS";

fn policy(t: Truncation) -> Result<TruncationPolicy, String> {
    let mut p = TruncationPolicy::default();
    let from_env = match std::env::var(MAX_TERMS_ENV) {
        Ok(v) => Some(
            v.trim()
                .parse::<usize>()
                .map_err(|_| format!("{MAX_TERMS_ENV}=`{v}` is not a positive integer"))?,
        ),
        Err(_) => None,
    };
    if let Some(n) = t.max_terms.or(from_env) {
        p = p.with_max_terms(n);
    }
    p.validate().map_err(|e| e.to_string())?;
    Ok(p)
}

fn usage(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    USAGE
}

fn library_error(e: &Error) -> u8 {
    eprintln!("error: {e}");
    if e.is_math_domain() {
        DOMAIN
    } else {
        USAGE
    }
}

fn evaluate(
    method: MethodArg,
    x: Complex64,
    z: Complex64,
    p: &TruncationPolicy,
) -> Result<EvalResult, Error> {
    let m = match method {
        MethodArg::Auto => return gamma_xz(x, z, p),
        MethodArg::Weierstrass => Method::Weierstrass,
        MethodArg::EulerLimit => Method::EulerLimit,
        MethodArg::EulerProduct => Method::EulerProduct,
        MethodArg::Stirling => Method::Stirling,
    };
    gamma_with_method(m, x, z, p)
}

fn method_label(method: MethodArg) -> &'static str {
    match method {
        MethodArg::Auto => "auto",
        MethodArg::Weierstrass => "weierstrass",
        MethodArg::EulerLimit => "euler-limit",
        MethodArg::EulerProduct => "euler-product",
        MethodArg::Stirling => "stirling",
    }
}

pub fn eval(a: EvalArgs) -> u8 {
    let p = match policy(a.truncation) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let result = evaluate(a.method, a.x, a.z, &p);
    if let (Ok(r), Some(tol)) = (&result, a.tol) {
        if r.err_estimate > tol {
            eprintln!(
                "warning: err_estimate {:e} exceeds --tol {:e}",
                r.err_estimate, tol
            );
        }
    }
    let mut out = io::stdout().lock();
    if a.json {
        let rec = OutputRecord::new(a.x, a.z, method_label(a.method), &result);
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&rec).expect("record")
        );
    }
    match result {
        Ok(r) => {
            if !a.json {
                let _ = writeln!(out, "value = {}", fmt_complex(r.value));
                let _ = writeln!(out, "err_estimate = {:e}", r.err_estimate);
                let _ = writeln!(out, "method = {}", r.method);
            }
            OK
        }
        Err(e) => library_error(&e),
    }
}

pub fn table(a: TableArgs) -> u8 {
    let p = match policy(a.truncation) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let xs = match parse_range(&a.x_range) {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    let zs = match parse_range(&a.z_range) {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    let grid: Vec<(Complex64, Complex64)> = xs
        .iter()
        .flat_map(|&x| zs.iter().map(move |&z| (x, z)))
        .collect();
    let label = method_label(a.method);
    let records: Vec<OutputRecord> = grid
        .par_iter()
        .map(|&(x, z)| OutputRecord::new(x, z, label, &evaluate(a.method, x, z, &p)))
        .collect();

    let stdout = io::stdout().lock();
    let written = match a.format {
        Format::Json => write_json(stdout, &records),
        Format::Csv => write_csv(stdout, &records),
    };
    match written {
        Ok(()) => OK,
        Err(e) => usage(e),
    }
}

fn write_json(mut out: impl Write, records: &[OutputRecord]) -> Result<(), String> {
    serde_json::to_writer_pretty(&mut out, records).map_err(|e| e.to_string())?;
    writeln!(out).map_err(|e| e.to_string())
}

fn write_csv(out: impl Write, records: &[OutputRecord]) -> Result<(), String> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(OutputRecord::CSV_HEADER)
        .map_err(|e| e.to_string())?;
    for r in records {
        w.write_record(r.csv_fields()).map_err(|e| e.to_string())?;
    }
    w.flush().map_err(|e| e.to_string())
}

pub fn verify(a: VerifyArgs) -> u8 {
    let p = match policy(a.truncation) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let ids: Vec<String> = if a.ids.is_empty() {
        verify::registry().into_iter().map(|d| d.id).collect()
    } else {
        a.ids.clone()
    };
    let registry = verify::registry();
    if let Some(bad) = ids.iter().find(|id| !registry.iter().any(|d| &d.id == *id)) {
        return usage(Error::UnknownIdentity(bad.clone()));
    }
    let reports: Vec<IdentityReport> = ids
        .par_iter()
        .map(|id| {
            let n = a.points.unwrap_or_else(|| {
                registry
                    .iter()
                    .find(|d| &d.id == id)
                    .map(|d| d.default_points)
                    .unwrap_or(0)
            });
            verify::verify_identity(id, a.seed, n, &p).expect("id checked above")
        })
        .collect();

    let mut out = io::stdout().lock();
    if a.json {
        let _ = serde_json::to_writer_pretty(&mut out, &reports);
        let _ = writeln!(out);
    } else {
        for r in &reports {
            let literal = if r.reading == verify::Reading::Literal {
                " [literal]"
            } else {
                ""
            };
            let _ = writeln!(
                out,
                "{} {} {:.3e} {:.0e} {}{}",
                if r.pass { "PASS" } else { "FAIL" },
                r.id,
                r.max_residual,
                r.tolerance,
                r.residuals.len(),
                literal
            );
        }
    }
    if verify::all_pass(&reports) {
        OK
    } else {
        USAGE
    }
}

pub fn series(a: SeriesArgs) -> u8 {
    let p = match policy(a.truncation) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let expansion = match a.var {
        SeriesVar::Z => coeffs_a(a.anchor, a.order, a.paper_literal, &p),
        SeriesVar::X => coeffs_b(a.anchor, a.order, a.paper_literal, &p),
    };
    let expansion = match expansion {
        Ok(e) => e,
        Err(e) => return library_error(&e),
    };
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    let _ = w.write_record(["m", "re", "im"]);
    for (m, c) in expansion.coefficients.iter().enumerate() {
        let _ = w.write_record([
            m.to_string(),
            format!("{:.16e}", c.re + 0.0),
            format!("{:.16e}", c.im + 0.0),
        ]);
    }
    let _ = w.flush();
    OK
}
