//! Rendering of report values as JSON, CSV or plain text.

use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("json renders"),
        Format::Csv => csv_of(v),
        Format::Text => text_of(v),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        _ => v.to_string(),
    }
}

fn table(rows: &[Value]) -> Option<(Vec<String>, Vec<Vec<String>>)> {
    let first = rows.first()?.as_object()?;
    let header: Vec<String> = first.keys().cloned().collect();
    let body = rows
        .iter()
        .map(|r| header.iter().map(|k| cell(r.get(k).unwrap_or(&Value::Null))).collect())
        .collect();
    Some((header, body))
}

/// A report with a `rows` list becomes one record per row; any other object
/// becomes a single record; a scalar is written as is.
fn csv_of(v: &Value) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    match v {
        Value::Object(o) => {
            let rows = o.get("rows").and_then(Value::as_array).and_then(|r| table(r));
            let (header, body) = match rows {
                Some(t) => t,
                None => (o.keys().cloned().collect(), vec![o.values().map(cell).collect()]),
            };
            w.write_record(&header).expect("csv writes");
            for r in body {
                w.write_record(&r).expect("csv writes");
            }
        }
        _ => w.write_record([cell(v)]).expect("csv writes"),
    }
    String::from_utf8(w.into_inner().expect("csv flushes")).expect("utf-8")
}

fn text_of(v: &Value) -> String {
    let Value::Object(o) = v else { return cell(v) };
    let mut out = Vec::new();
    for (k, x) in o {
        if k == "rows" || x.is_null() {
            continue;
        }
        out.push(format!("{k}: {}", cell(x)));
    }
    if let Some((header, body)) = o.get("rows").and_then(Value::as_array).and_then(|r| table(r)) {
        out.push(header.join("\t"));
        out.extend(body.into_iter().map(|r| r.join("\t")));
    }
    out.join("\n")
}
