//! CSV and JSON emission.
//!
//! Floats print in their shortest round-trip form (at most 17 significant
//! digits), so CSV and JSON carry bit-identical values.

use std::fmt::Write as _;

use serde::Serialize;

use crate::constants::ConstantValue;

use super::{AbelCheck, C3Row, GolombRow, IdentityReport, LemmaReport, SumSeries, TuranReport};

pub const SERIES_HEADER: &str = "family,x,value,normalized_ratio";
pub const CENSUS_HEADER: &str = "set,x,threshold_low,threshold_high,count,density_ratio,verdict";
pub const CONSTANTS_HEADER: &str = "name,value,abs_error,method";

pub fn fmt_f64(v: f64) -> String {
    format!("{v:?}")
}

fn quote(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn table<I>(header: &str, rows: I) -> String
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut out = String::new();
    out.push_str(header);
    out.push('\n');
    for row in rows {
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

pub fn series_csv(series: &SumSeries) -> String {
    table(
        SERIES_HEADER,
        series.checkpoints.iter().map(|c| {
            vec![series.family.to_string(), c.x.to_string(), fmt_f64(c.value), fmt_f64(c.normalized_ratio)]
        }),
    )
}

pub fn census_csv(reports: &[LemmaReport]) -> String {
    table(
        CENSUS_HEADER,
        reports.iter().map(|r| {
            vec![
                r.set_id.to_string(),
                r.x.to_string(),
                fmt_f64(r.threshold_low),
                fmt_f64(r.threshold_high),
                r.count.to_string(),
                fmt_f64(r.density_ratio),
                r.verdict.to_string(),
            ]
        }),
    )
}

#[derive(Debug, Clone, Serialize)]
pub struct NamedConstant<'a> {
    pub name: &'a str,
    #[serde(flatten)]
    pub constant: &'a ConstantValue,
}

pub fn constants_csv(constants: &[(&str, ConstantValue)]) -> String {
    table(
        CONSTANTS_HEADER,
        constants.iter().map(|(name, c)| {
            vec![quote(name), fmt_f64(c.value), fmt_f64(c.abs_error), quote(&c.method)]
        }),
    )
}

pub fn constants_json(constants: &[(&str, ConstantValue)]) -> serde_json::Value {
    let named: Vec<NamedConstant> = constants.iter().map(|(name, constant)| NamedConstant { name, constant }).collect();
    serde_json::to_value(named).expect("serializable")
}

pub fn golomb_csv(rows: &[GolombRow]) -> String {
    table(
        "x,k,lower,upper,verdict",
        rows.iter().map(|r| {
            vec![r.x.to_string(), r.k.to_string(), fmt_f64(r.lower), fmt_f64(r.upper), r.verdict.to_string()]
        }),
    )
}

pub fn abel_csv(rows: &[AbelCheck]) -> String {
    table(
        "y,z,direct,abel,agrees",
        rows.iter().map(|r| {
            vec![fmt_f64(r.y), fmt_f64(r.z), fmt_f64(r.direct), fmt_f64(r.abel), r.agrees().to_string()]
        }),
    )
}

pub fn turan_csv(rows: &[(TuranReport, bool)]) -> String {
    table(
        "N,variance_sum,ratio,verdict",
        rows.iter().map(|(r, ok)| vec![r.n.to_string(), fmt_f64(r.variance_sum), fmt_f64(r.ratio), ok.to_string()]),
    )
}

pub fn identity_csv(report: &IdentityReport) -> String {
    let mut row = vec![report.x_max.to_string(), report.checked.to_string()];
    match &report.counterexample {
        None => row.extend(["ok".into(), String::new(), String::new(), String::new(), String::new()]),
        Some(c) => {
            let kind = serde_json::to_value(c.kind).expect("serializable");
            row.extend([
                "counterexample".into(),
                c.n.to_string(),
                kind.as_str().unwrap_or_default().to_string(),
                c.lhs.to_string(),
                c.rhs.to_string(),
            ]);
        }
    }
    table("x_max,checked,status,n,kind,lhs,rhs", [row])
}

pub fn c3_csv(rows: &[C3Row]) -> String {
    table("x,sum,ratio", rows.iter().map(|r| vec![r.x.to_string(), fmt_f64(r.sum), fmt_f64(r.ratio)]))
}

/// Splits a CSV document into rows of fields, honoring double quotes.
pub fn parse_csv(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .map(|line| {
            let mut fields = Vec::new();
            let mut cur = String::new();
            let mut quoted = false;
            let mut chars = line.chars().peekable();
            while let Some(ch) = chars.next() {
                match (ch, quoted) {
                    ('"', true) if chars.peek() == Some(&'"') => {
                        cur.push('"');
                        chars.next();
                    }
                    ('"', _) => quoted = !quoted,
                    (',', false) => fields.push(std::mem::take(&mut cur)),
                    _ => cur.push(ch),
                }
            }
            fields.push(cur);
            fields
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::{Checkpoint, Family};

    #[test]
    fn float_format() {
        assert_eq!(fmt_f64(5.0), "5.0");
        assert_eq!(fmt_f64(0.1), "0.1");
        assert_eq!(fmt_f64(53.0 / 12.0).parse::<f64>().unwrap(), 53.0 / 12.0);
    }

    #[test]
    fn quoting_round_trips() {
        let consts = vec![("x", ConstantValue { value: 1.5, abs_error: 1e-9, method: "a, \"b\"".into() })];
        let rows = parse_csv(&constants_csv(&consts));
        assert_eq!(rows[0], vec!["name", "value", "abs_error", "method"]);
        assert_eq!(rows[1], vec!["x", "1.5", "1e-9", "a, \"b\""]);
    }

    #[test]
    fn series_row_shape() {
        let s = SumSeries {
            family: Family::RecipDd,
            checkpoints: vec![Checkpoint { x: 10, value: 5.0, normalized_ratio: 0.41702 }],
        };
        let csv = series_csv(&s);
        assert!(csv.starts_with("family,x,value,normalized_ratio\nRECIP_DD,10,5.0,"));
    }
}
