//! Rendering of exact distributions.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use qwalk_core::{Distribution, Rational};
use serde::Serialize;

/// Decimal rendering of `x` rounded to `digits` significant digits (half
/// away from zero). Values below 1e-6 use exponent notation.
pub fn format_decimal(x: &Rational, digits: usize) -> String {
    assert!(digits >= 1, "need at least one significant digit");
    if x.is_zero() {
        return "0".to_string();
    }
    let sign = if x.is_negative() { "-" } else { "" };
    let num = x.numer().abs();
    let den = x.denom().clone();
    let ten = BigInt::from(10);
    let digit_len = |v: &BigInt| v.to_string().len() as i64;
    // q = round(|x| * 10^s) has exactly `digits` digits
    let mut s = digits as i64 - (digit_len(&num) - digit_len(&den));
    let scaled = |s: i64| -> (BigInt, BigInt) {
        if s >= 0 {
            let n = &num * ten.pow(s as u32);
            (&n / &den, n % &den)
        } else {
            let d = &den * ten.pow((-s) as u32);
            (&num / &d, &num % &d)
        }
    };
    let limit = ten.pow(digits as u32);
    let low = ten.pow(digits as u32 - 1);
    let (mut q, mut rem) = scaled(s);
    while q >= limit {
        s -= 1;
        (q, rem) = scaled(s);
    }
    while q < low {
        s += 1;
        (q, rem) = scaled(s);
    }
    let unit = if s >= 0 { den.clone() } else { &den * ten.pow((-s) as u32) };
    if &rem * 2 >= unit {
        q += BigInt::one();
        if q == limit {
            q /= &ten;
            s -= 1;
        }
    }
    let digits_str = q.to_string();
    let exponent = digits_str.len() as i64 - 1 - s;
    if exponent < -6 {
        let mantissa = trim(&format!("{}.{}", &digits_str[..1], &digits_str[1..]));
        return format!("{sign}{mantissa}e{exponent}");
    }
    let body = if s <= 0 {
        format!("{digits_str}{}", "0".repeat((-s) as usize))
    } else {
        let s = s as usize;
        let padded = format!("{}{digits_str}", "0".repeat((s + 1).saturating_sub(digits_str.len())));
        let (int, frac) = padded.split_at(padded.len() - s);
        trim(&format!("{int}.{frac}"))
    };
    format!("{sign}{body}")
}

fn trim(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

pub fn to_csv(dist: &Distribution, digits: usize) -> String {
    let mut out = String::from("position,probability\n");
    for (k, p) in dist.iter() {
        out.push_str(&format!("{k},{}\n", format_decimal(p, digits)));
    }
    out
}

#[derive(Serialize)]
struct JsonEntry {
    k: i64,
    p: String,
}

#[derive(Serialize)]
struct JsonDistribution {
    memory: u8,
    steps: usize,
    entries: Vec<JsonEntry>,
}

pub fn to_json(dist: &Distribution, memory: u8, steps: usize) -> String {
    let doc = JsonDistribution {
        memory,
        steps,
        entries: dist.iter().map(|(k, p)| JsonEntry { k, p: format!("{}/{}", p.numer(), p.denom()) }).collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}
