//! Output formats. Machine formats (json, csv) carry every rational as a
//! pair of decimal strings `[numerator, denominator]` or as `"num/den"`;
//! only the text format shows `≈` decimal approximations.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use narayana_core::exactcore::{Poly, Rational, RootInterval};
use narayana_core::theorems::{BoundPair, ZeroReport};
use narayana_core::{FamilyIndex, Verdict};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::{CliError, Format};

pub type RationalPair = [String; 2];

pub fn pair(r: &Rational) -> RationalPair {
    [r.numer().to_string(), r.denom().to_string()]
}

/// `num/den`, or just `num` for integers.
pub fn slash(r: &Rational) -> String {
    r.to_string()
}

fn approx(r: &Rational) -> String {
    match r.to_f64() {
        Some(v) => format!("≈ {v:.12e}"),
        None => String::new(),
    }
}

#[derive(Serialize)]
struct PolyJson {
    n: u32,
    m: u32,
    coeffs: Vec<RationalPair>,
}

pub fn render_poly(idx: FamilyIndex, p: &Poly, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Text => format!("{p}\n"),
        Format::Json => {
            let doc = PolyJson { n: idx.n, m: idx.m, coeffs: p.coeffs().iter().map(pair).collect() };
            serde_json::to_string(&doc)? + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["k", "num", "den"])?;
            for (k, c) in p.coeffs().iter().enumerate() {
                let [num, den] = pair(c);
                w.write_record([k.to_string(), num, den])?;
            }
            csv_string(w)?
        }
    })
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Serialize)]
struct BracketJson {
    lower: RationalPair,
    upper: RationalPair,
}

#[derive(Serialize)]
struct IntervalJson {
    lo: RationalPair,
    hi: RationalPair,
    exact: Option<RationalPair>,
    width: RationalPair,
}

#[derive(Serialize)]
pub struct VerdictJson {
    pub verdict: &'static str,
    pub detail: String,
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        VerdictJson { verdict: v.label(), detail: v.detail().to_string() }
    }
}

#[derive(Serialize)]
struct ZeroJson {
    n: u32,
    m: u32,
    polynomial: Vec<RationalPair>,
    bracket: Option<BracketJson>,
    positive_zero: IntervalJson,
    negative_zeros: Vec<IntervalJson>,
    checks: BTreeMap<&'static str, VerdictJson>,
    all_checks_pass: bool,
}

fn interval_json(r: &RootInterval) -> IntervalJson {
    IntervalJson { lo: pair(&r.lo), hi: pair(&r.hi), exact: r.exact.as_ref().map(pair), width: pair(&r.width()) }
}

fn bracket_json(b: &BoundPair) -> BracketJson {
    BracketJson { lower: pair(&b.lower), upper: pair(&b.upper) }
}

pub const ZERO_CSV_HEADER: [&str; 10] =
    ["n", "m", "lower_num", "lower_den", "upper_num", "upper_den", "root_lo", "root_hi", "root_exact", "checks_passed"];

fn text_interval(r: &RootInterval) -> String {
    match &r.exact {
        Some(x) => format!("exactly {} {}", slash(x), approx(x)),
        None => format!(
            "({}, {}) {} width {}",
            slash(&r.lo),
            slash(&r.hi),
            approx(&r.midpoint()),
            approx(&r.width()).trim_start_matches("≈ ")
        ),
    }
}

pub fn render_zero(report: &ZeroReport, p: &Poly, format: Format) -> Result<String, CliError> {
    let idx = report.idx;
    Ok(match format {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "N_{{{},{}}}(x) = {p}", idx.n, idx.m).unwrap();
            match &report.bracket {
                Some(b) => writeln!(s, "bracket: [{}, {}]", slash(&b.lower), slash(&b.upper)).unwrap(),
                None => writeln!(s, "bracket: none (n = m+2)").unwrap(),
            }
            writeln!(s, "positive zero: {}", text_interval(&report.positive_zero)).unwrap();
            writeln!(s, "negative zeros: {}", report.negative_zeros.len()).unwrap();
            for (i, r) in report.negative_zeros.iter().enumerate() {
                writeln!(s, "  v{}: {}", i + 1, text_interval(r)).unwrap();
            }
            writeln!(s, "checks:").unwrap();
            for (check, v) in &report.checks {
                writeln!(s, "  {check}: {}", v.label()).unwrap();
                if !v.is_pass() {
                    writeln!(s, "    {}", v.detail()).unwrap();
                }
            }
            writeln!(s, "all checks pass: {}", report.all_pass()).unwrap();
            s
        }
        Format::Json => {
            let doc = ZeroJson {
                n: idx.n,
                m: idx.m,
                polynomial: p.coeffs().iter().map(pair).collect(),
                bracket: report.bracket.as_ref().map(bracket_json),
                positive_zero: interval_json(&report.positive_zero),
                negative_zeros: report.negative_zeros.iter().map(interval_json).collect(),
                checks: report.checks.iter().map(|(c, v)| (c.as_str(), v.into())).collect(),
                all_checks_pass: report.all_pass(),
            };
            serde_json::to_string_pretty(&doc)? + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(ZERO_CSV_HEADER)?;
            let (lower, upper) = match &report.bracket {
                Some(b) => (pair(&b.lower), pair(&b.upper)),
                None => (Default::default(), Default::default()),
            };
            let z = &report.positive_zero;
            let [lower_num, lower_den] = lower;
            let [upper_num, upper_den] = upper;
            w.write_record([
                idx.n.to_string(),
                idx.m.to_string(),
                lower_num,
                lower_den,
                upper_num,
                upper_den,
                slash(&z.lo),
                slash(&z.hi),
                z.exact.as_ref().map(slash).unwrap_or_default(),
                report.all_pass().to_string(),
            ])?;
            csv_string(w)?
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use narayana_core::narayana::gn_poly;
    use narayana_core::theorems::zero_report;

    #[test]
    fn poly_formats() {
        let i = FamilyIndex::new(5, 1);
        let p = gn_poly(i);
        assert_eq!(render_poly(i, &p, Format::Text).unwrap(), "1 - 5*x - 10*x^2\n");
        let i = FamilyIndex::new(3, 2);
        assert_eq!(render_poly(i, &gn_poly(i), Format::Text).unwrap(), "1 + 3*x + 1*x^2\n");
        let i = FamilyIndex::new(2, 0);
        assert_eq!(
            render_poly(i, &gn_poly(i), Format::Json).unwrap(),
            "{\"n\":2,\"m\":0,\"coeffs\":[[\"1\",\"1\"],[\"-1\",\"1\"]]}\n"
        );
        assert_eq!(render_poly(i, &gn_poly(i), Format::Csv).unwrap(), "k,num,den\n0,1,1\n1,-1,1\n");
    }

    #[test]
    fn zero_csv_rows() {
        let i = FamilyIndex::new(6, 0);
        let r = zero_report(i, 64).unwrap();
        let out = render_zero(&r, &gn_poly(i), Format::Csv).unwrap();
        let mut lines = out.lines();
        assert_eq!(lines.next().unwrap(), ZERO_CSV_HEADER.join(","));
        assert_eq!(lines.next().unwrap(), "6,0,7,115,1,15,1/15,1/15,1/15,true");

        let i = FamilyIndex::new(4, 2);
        let r = zero_report(i, 64).unwrap();
        let out = render_zero(&r, &gn_poly(i), Format::Csv).unwrap();
        assert_eq!(out.lines().nth(1).unwrap(), "4,2,,,,,1,1,1,true");
    }

    #[test]
    fn zero_json_is_exact() {
        let i = FamilyIndex::new(5, 1);
        let r = zero_report(i, 20).unwrap();
        let v: serde_json::Value = serde_json::from_str(&render_zero(&r, &gn_poly(i), Format::Json).unwrap()).unwrap();
        assert_eq!(v["bracket"]["lower"], serde_json::json!(["1", "7"]));
        assert_eq!(v["bracket"]["upper"], serde_json::json!(["1", "6"]));
        assert!(v["positive_zero"]["exact"].is_null());
        assert_eq!(v["negative_zeros"].as_array().unwrap().len(), 1);
        assert_eq!(v["all_checks_pass"], serde_json::json!(true));
    }
}
