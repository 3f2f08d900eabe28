//! Text renderings: human tables, the flat JSON report and the tightness
//! CSV.

use std::fmt::Write as _;

use rootbound::bounds::BoundReport;

use crate::tightness::TightnessReport;

/// Significant digits in JSON numbers; enough to round-trip any `f64`.
pub const JSON_DIGITS: usize = 17;
/// Significant digits in CSV ratios.
pub const CSV_DIGITS: usize = 9;
/// Significant digits in human-readable tables.
pub const TABLE_DIGITS: usize = 12;

pub const CSV_HEADER: &str = "bound,mean_ratio,median_ratio,worst_ratio,wins";

/// Formats `x` with `digits` significant digits in the style of C's `%g`:
/// fixed notation for moderate exponents, scientific otherwise, trailing
/// zeros removed.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        format!("{}e{}", strip_zeros(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        strip_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Named values of a report, negated when the report was computed for
/// `p(-x)`.
fn entries(report: &BoundReport, negated: bool) -> Vec<(String, f64)> {
    let sign = if negated { -1.0 } else { 1.0 };
    report
        .bounds
        .as_ref()
        .map(|b| b.all_named().into_iter().map(|(n, v)| (n, sign * v)).collect())
        .unwrap_or_default()
}

/// Flat JSON object: `all_same_sign`, `zero_root_multiplicity`, then one key
/// per bound. With `negated` the values are lower bounds obtained from
/// `p(-x)` and a `transform` key says so.
pub fn report_json(report: &BoundReport, zero_root_multiplicity: usize, negated: bool) -> String {
    let mut out = String::from("{");
    let _ = write!(
        out,
        "\"all_same_sign\":{},\"zero_root_multiplicity\":{}",
        report.all_same_sign(),
        zero_root_multiplicity
    );
    if negated {
        out.push_str(",\"transform\":\"negated_argument_lower_bounds\"");
    }
    for (name, value) in entries(report, negated) {
        let _ = write!(out, ",\"{name}\":{}", fmt_sig(value, JSON_DIGITS));
    }
    out.push_str("}\n");
    out
}

pub const SAME_SIGN_REMARK: &str =
    "all coefficients share one sign: there are no positive roots, so 0 bounds the positive roots";

pub fn report_table(
    polynomial: &str,
    report: &BoundReport,
    zero_root_multiplicity: usize,
    negated: bool,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "polynomial: {polynomial}");
    if zero_root_multiplicity > 0 {
        let _ = writeln!(out, "root at 0 with multiplicity {zero_root_multiplicity} (factored out)");
    }
    if report.all_same_sign() {
        let _ = writeln!(out, "{SAME_SIGN_REMARK}");
        return out;
    }
    if negated {
        let _ = writeln!(
            out,
            "lower bounds on the real roots (upper bounds for p(-x), negated)"
        );
    } else {
        let _ = writeln!(out, "upper bounds on the real roots");
    }
    for (name, value) in entries(report, negated) {
        let _ = writeln!(out, "  {name:<16} {}", fmt_sig(value, TABLE_DIGITS));
    }
    out
}

pub fn tightness_csv(report: &TightnessReport) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            row.bound_name,
            fmt_sig(row.mean_ratio, CSV_DIGITS),
            fmt_sig(row.median_ratio, CSV_DIGITS),
            fmt_sig(row.worst_ratio, CSV_DIGITS),
            row.win_count
        );
    }
    out
}

pub fn tightness_table(report: &TightnessReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "instances {}  measured {}  same-sign {}  no real root {}  no positive root {}  soundness violations {}",
        report.instances,
        report.measured,
        report.all_same_sign,
        report.no_real_root,
        report.no_positive_root,
        report.soundness_violations
    );
    let _ = writeln!(
        out,
        "{:<12} {:>12} {:>12} {:>12} {:>6}",
        "bound", "mean", "median", "worst", "wins"
    );
    for row in &report.rows {
        let _ = writeln!(
            out,
            "{:<12} {:>12} {:>12} {:>12} {:>6}",
            row.bound_name,
            fmt_sig(row.mean_ratio, 6),
            fmt_sig(row.median_ratio, 6),
            fmt_sig(row.worst_ratio, 6),
            row.win_count
        );
    }
    out
}
