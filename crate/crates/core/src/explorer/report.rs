use serde_json::Value;

use super::conjecture::ConjectureReport;
use super::scan::{ScanReport, ScanRow};
use super::SCHEMA;
use crate::error::{Error, Result};

fn tagged(mut v: Value, kind: &str) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), SCHEMA.into());
        m.insert("kind".into(), kind.into());
    }
    v
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

/// A summary line (`kind: scan_summary`) followed by one line per row
/// (`kind: scan_row`), rows sorted by `k`.
pub fn scan_to_json_lines(report: &ScanReport) -> String {
    let mut summary = to_value(report);
    if let Value::Object(m) = &mut summary {
        m.remove("rows");
    }
    let mut out = serde_json::to_string(&tagged(summary, "scan_summary")).unwrap();
    out.push('\n');
    let mut rows: Vec<&ScanRow> = report.rows.iter().collect();
    rows.sort_by_key(|r| r.k);
    for r in rows {
        out.push_str(&serde_json::to_string(&tagged(to_value(r), "scan_row")).unwrap());
        out.push('\n');
    }
    out
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(format!("report: {e}"))
}

/// Inverse of [`scan_to_json_lines`].
pub fn scan_from_json_lines(text: &str) -> Result<ScanReport> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let first = lines
        .next()
        .ok_or_else(|| Error::Parse("empty report".into()))?;
    let mut summary: Value = serde_json::from_str(first).map_err(parse_err)?;
    let check = |v: &Value, kind: &str| -> Result<()> {
        if v.get("schema").and_then(Value::as_str) != Some(SCHEMA)
            || v.get("kind").and_then(Value::as_str) != Some(kind)
        {
            return Err(Error::Parse(format!("expected a {SCHEMA} {kind} line")));
        }
        Ok(())
    };
    check(&summary, "scan_summary")?;
    if let Value::Object(m) = &mut summary {
        m.insert("rows".into(), Value::Array(Vec::new()));
    }
    let mut report: ScanReport = serde_json::from_value(summary).map_err(parse_err)?;
    for line in lines {
        let v: Value = serde_json::from_str(line).map_err(parse_err)?;
        check(&v, "scan_row")?;
        report
            .rows
            .push(serde_json::from_value(v).map_err(parse_err)?);
    }
    Ok(report)
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn write_csv(header: &[&str], records: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).unwrap();
    for r in records {
        w.write_record(&r).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

/// One CSV line per row; list fields are space separated.
pub fn scan_csv(report: &ScanReport) -> String {
    let header = [
        "k",
        "generators",
        "status",
        "mu_H",
        "mu_I",
        "mu_I_star",
        "cm",
        "betti_I",
        "betti_I_star",
        "shape_ok",
    ];
    let records = report
        .rows
        .iter()
        .map(|r| {
            vec![
                r.k.to_string(),
                join(&r.generators),
                format!("{:?}", r.status).to_lowercase(),
                r.mu_h.to_string(),
                opt(r.mu_i),
                opt(r.mu_i_star),
                opt(r.cm),
                r.betti_i
                    .as_ref()
                    .map(|b| join(&b.total))
                    .unwrap_or_default(),
                r.betti_i_star
                    .as_ref()
                    .map(|b| join(&b.total))
                    .unwrap_or_default(),
                opt(r.inhomogeneous_gens_shape_ok),
            ]
        })
        .collect();
    write_csv(&header, records)
}

pub fn conjecture_csv(report: &ConjectureReport) -> String {
    let header = [
        "case",
        "k",
        "semigroup",
        "mu_I_star",
        "bound",
        "equality",
        "special",
        "betti_star",
        "betti_bound",
        "ok",
    ];
    let records = report
        .rows
        .iter()
        .map(|r| {
            vec![
                join(&r.case),
                opt(r.k),
                join(&r.semigroup),
                r.mu_i_star.to_string(),
                r.bound.to_string(),
                r.equality.to_string(),
                r.special.to_string(),
                r.betti_star.as_deref().map(join).unwrap_or_default(),
                r.betti_bound.as_deref().map(join).unwrap_or_default(),
                r.ok.to_string(),
            ]
        })
        .collect();
    write_csv(&header, records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::explorer::{shift_scan, ScanOptions};

    #[test]
    fn json_lines_round_trip() {
        let opts = ScanOptions {
            betti: true,
            ..Default::default()
        };
        let rep = shift_scan(&[3, 5, 7], 0, 9, &opts).unwrap();
        let text = scan_to_json_lines(&rep);
        assert_eq!(text.lines().count(), 11);
        assert!(text
            .lines()
            .all(|l| l.contains("\"schema\":\"tancone/v1\"")));
        let back = scan_from_json_lines(&text).unwrap();
        assert_eq!(back, rep);
        assert_eq!(scan_to_json_lines(&back), text);
        assert!(scan_from_json_lines("{\"kind\":\"scan_row\"}").is_err());
    }

    #[test]
    fn csv_shape() {
        let rep = shift_scan(&[3, 5, 7], 0, 4, &ScanOptions::default()).unwrap();
        let csv = scan_csv(&rep);
        assert_eq!(csv.lines().count(), 6);
        assert!(csv
            .lines()
            .nth(2)
            .unwrap()
            .starts_with("1,4 6,ok,2,1,1,true"));
    }
}
