//! JSON-lines and table renderings.

use serde::Serialize;
use serde_json::json;

use crate::suites::SuiteResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

pub fn line<T: Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("reports serialize")
}

/// Header line, one line per item, summary line.
pub fn suite_json(r: &SuiteResult) -> String {
    let mut out = line(&json!({ "header": r.header }));
    out.push('\n');
    for item in &r.items {
        out.push_str(&line(item));
        out.push('\n');
    }
    out.push_str(&line(&json!({ "summary": r.summary })));
    out.push('\n');
    out
}

pub fn suite_table(r: &SuiteResult) -> String {
    let h = &r.header;
    let mut out = format!(
        "suite {}  seed {}  trials {}  coeff-bound {}  certify {}\n",
        h.suite.name(),
        h.seed,
        h.trials,
        h.coeff_bound,
        h.certify
    );
    let width = r.items.iter().map(|i| i.key.len()).max().unwrap_or(0);
    for item in &r.items {
        let status = serde_json::to_value(item.status).expect("status serializes");
        out.push_str(&format!(
            "{:<9} {:<16} {:<width$}  {}\n",
            status.as_str().unwrap_or(""),
            item.suite.name(),
            item.key,
            item.failures.join("; ")
        ));
    }
    let s = &r.summary;
    out.push_str(&format!(
        "{} items: {} pass, {} fail, {} reported, {} skipped; parity violations {}/{}\n",
        s.items, s.pass, s.fail, s.reported, s.skipped, s.parity_violations, s.parity_checked
    ));
    out
}

pub fn render(r: &SuiteResult, format: Format) -> String {
    match format {
        Format::Json => suite_json(r),
        Format::Table => suite_table(r),
    }
}
