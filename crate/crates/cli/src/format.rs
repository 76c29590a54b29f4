//! Locale-free `%.12g` style number formatting.

/// Significant digits written to scan CSVs.
pub const SIG_DIGITS: usize = 12;

/// Formats `x` like C's `%.{digits}g`, with `-0` printed as `0`.
pub fn fmt_g(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        let fixed = trim_zeros(&format!("{:.*}", decimals, x));
        if fixed == "-0" {
            "0".to_string()
        } else {
            fixed
        }
    }
}

pub fn fmt12(x: f64) -> String {
    fmt_g(x, SIG_DIGITS)
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}
