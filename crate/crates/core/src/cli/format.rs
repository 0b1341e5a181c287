//! Locale-independent numeric formatting.

/// `%g`-style formatting with `digits` significant digits.
///
/// Fixed notation is used for decimal exponents in `-5..digits`, scientific
/// (`1.5e-07`) otherwise. Trailing zeros are trimmed and `-0` prints as `0`.
pub fn format_sig(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    // Rounding to `digits` first fixes the exponent (9.9999996 → 1.00000e1).
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");

    if exp < -5 || exp >= digits as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        let fixed = format!("{:.*}", decimals, x);
        let fixed = trim_zeros(&fixed);
        if fixed == "-0" {
            "0".into()
        } else {
            fixed
        }
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// Formatter bound to a digit count.
#[derive(Debug, Clone, Copy)]
pub struct NumberFormat {
    pub digits: usize,
}

impl NumberFormat {
    pub fn fmt(&self, x: f64) -> String {
        format_sig(x, self.digits)
    }
}
