use crate::config::{Command, Format};
use crate::report::{Check, Report, ReportRow};
use crate::CliError;

/// Column order of the CSV written for `hasse`, `ss7star` and `nakaya`.
pub const PRIME_COLUMNS: &[&str] = &[
    "p",
    "p_mod_3",
    "p_mod_4",
    "p_mod_7",
    "p_mod_8",
    "r",
    "s",
    "n",
    "mu",
    "n1",
    "n2",
    "n3",
    "n6",
    "l",
    "l7star",
    "h_p",
    "h_7p",
    "pred_n1",
    "pred_n3",
    "pred_n6",
    "pred_n2",
    "a_p",
    "pred_l7star",
    "route",
    "oracle_match",
    "ss7star_coeffs",
    "ss7star_factored",
    "theorem1",
    "theorem_a",
    "conjecture2",
    "conjecture3",
    "props_2_4",
    "theorem7",
    "nakaya",
    "section3",
    "oracle",
    "note",
];

/// Column order of the CSV written for `identities`, `qseries` and `cm`.
pub const SUITE_COLUMNS: &[&str] = &["id", "verdict", "value", "detail", "statement"];

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn verdict(c: &Option<Check>) -> String {
    c.as_ref().map(|c| c.verdict.clone()).unwrap_or_default()
}

/// Skip reason, library error, and the detail of every failed check.
fn note(row: &ReportRow) -> String {
    let mut parts = Vec::new();
    if let Some(s) = &row.skipped {
        parts.push(s.clone());
    }
    if let Some(e) = &row.error {
        parts.push(format!("error: {e}"));
    }
    for (name, c) in crate::report::Checks::NAMES.iter().zip(row.checks.all()) {
        if let Some(c) = c.as_ref().filter(|c| c.is_fail()) {
            parts.push(format!("{name}: {}", c.detail.as_deref().unwrap_or("")));
        }
    }
    parts.join("; ")
}

fn prime_record(r: &ReportRow) -> Vec<String> {
    let c = &r.checks;
    vec![
        r.p.to_string(),
        r.p_mod_3.to_string(),
        r.p_mod_4.to_string(),
        r.p_mod_7.to_string(),
        r.p_mod_8.to_string(),
        opt(&r.r),
        opt(&r.s),
        opt(&r.n),
        opt(&r.mu),
        opt(&r.n1),
        opt(&r.n2),
        opt(&r.n3),
        opt(&r.n6),
        opt(&r.l),
        opt(&r.l7star),
        opt(&r.h_p),
        opt(&r.h_7p),
        opt(&r.pred_n1),
        opt(&r.pred_n3),
        opt(&r.pred_n6),
        opt(&r.pred_n2),
        opt(&r.a_p),
        opt(&r.pred_l7star),
        opt(&r.route),
        opt(&r.oracle_match),
        r.ss7star_coeffs
            .as_ref()
            .map(|v| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" "))
            .unwrap_or_default(),
        opt(&r.ss7star_factored),
        verdict(&c.theorem1),
        verdict(&c.theorem_a),
        verdict(&c.conjecture2),
        verdict(&c.conjecture3),
        verdict(&c.props_2_4),
        verdict(&c.theorem7),
        verdict(&c.nakaya),
        verdict(&c.section3),
        verdict(&c.oracle),
        note(r),
    ]
}

fn csv(report: &Report) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| CliError::Render(e.to_string());
    if report.cases.is_empty() {
        w.write_record(PRIME_COLUMNS).map_err(err)?;
        for r in &report.rows {
            w.write_record(prime_record(r)).map_err(err)?;
        }
    } else {
        w.write_record(SUITE_COLUMNS).map_err(err)?;
        for c in &report.cases {
            let detail = c.error.clone().or_else(|| c.check.detail.clone()).unwrap_or_default();
            w.write_record([
                c.id.as_str(),
                c.check.verdict.as_str(),
                c.value.as_deref().unwrap_or(""),
                &detail,
                &c.statement,
            ])
            .map_err(err)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| CliError::Render(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Render(e.to_string()))
}

/// Left-aligned columns separated by two spaces.
fn align(header: &[&str], body: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    // Short rows (a prime plus a skip reason) do not widen the columns.
    for row in body.iter().filter(|r| r.len() == header.len()) {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let s: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        s.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.iter().map(|s| s.to_string()).collect());
    for row in body {
        out.push_str(&line(row.clone()));
    }
    out
}

fn prime_table(report: &Report, cmd: Command) -> String {
    let header: &[&str] = match cmd {
        Command::Hasse => &[
            "p", "p%7", "r", "s", "n", "mu", "N1", "N2", "N3", "N6", "L", "h(-p)", "h(-7p)", "pred", "pred6/2",
            "theorem1", "theorem_A", "conj2", "conj3", "props", "theorem7",
        ],
        Command::Ss7star => &["p", "L", "L7*", "route", "oracle", "nakaya", "ss7star"],
        _ => &["p", "p%7", "L", "L7*", "a_p", "h(-7p)", "predicted", "nakaya", "section3", "oracle"],
    };
    let mut body = Vec::new();
    let mut notes = Vec::new();
    for r in &report.rows {
        let c = &r.checks;
        if let Some(s) = &r.skipped {
            body.push(vec![r.p.to_string(), format!("skipped: {s}")]);
            continue;
        }
        body.push(match cmd {
            Command::Hasse => vec![
                r.p.to_string(),
                r.p_mod_7.to_string(),
                opt(&r.r),
                opt(&r.s),
                opt(&r.n),
                opt(&r.mu),
                opt(&r.n1),
                opt(&r.n2),
                opt(&r.n3),
                opt(&r.n6),
                opt(&r.l),
                opt(&r.h_p),
                opt(&r.h_7p),
                opt(&r.pred_n1.or(r.pred_n3)),
                opt(&r.pred_n6.clone().or_else(|| r.pred_n2.clone())),
                verdict(&c.theorem1),
                verdict(&c.theorem_a),
                verdict(&c.conjecture2),
                verdict(&c.conjecture3),
                verdict(&c.props_2_4),
                verdict(&c.theorem7),
            ],
            Command::Ss7star => vec![
                r.p.to_string(),
                opt(&r.l),
                opt(&r.l7star),
                opt(&r.route),
                verdict(&c.oracle),
                verdict(&c.nakaya),
                opt(&r.ss7star_factored),
            ],
            _ => vec![
                r.p.to_string(),
                r.p_mod_7.to_string(),
                opt(&r.l),
                opt(&r.l7star),
                opt(&r.a_p),
                opt(&r.h_7p),
                opt(&r.pred_l7star),
                verdict(&c.nakaya),
                verdict(&c.section3),
                verdict(&c.oracle),
            ],
        });
        if r.failed() {
            notes.push(format!("p = {}: {}", r.p, note(r)));
        }
    }
    let mut out = align(header, &body);
    for n in notes {
        out.push_str(&n);
        out.push('\n');
    }
    out
}

fn suite_table(report: &Report) -> String {
    let body: Vec<Vec<String>> = report
        .cases
        .iter()
        .map(|c| vec![c.id.clone(), c.check.verdict.clone(), c.value.clone().unwrap_or_default()])
        .collect();
    let mut out = align(&["id", "verdict", "value"], &body);
    for c in report.cases.iter().filter(|c| c.failed()) {
        let why = c.error.clone().or_else(|| c.check.detail.clone()).unwrap_or_default();
        out.push_str(&format!("{}: {} -- {why}\n", c.id, c.statement));
    }
    out
}

/// Renders the report. The table form ends with the summary line; CSV and
/// JSON carry only the payload.
pub fn render(report: &Report, cmd: Command, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(|e| CliError::Render(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => csv(report),
        Format::Table => {
            let mut s = if cmd.takes_primes() { prime_table(report, cmd) } else { suite_table(report) };
            s.push_str(&report.summary.line());
            s.push('\n');
            Ok(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::ReportRow;

    #[test]
    fn csv_quotes_and_aligns_with_header() {
        let mut row = ReportRow::new(11);
        row.ss7star_factored = Some("Y(Y + 1)".into());
        row.skipped = Some("a, \"quoted\" note".into());
        let rep = Report::new("hasse", vec![row], Vec::new(), false);
        let s = render(&rep, Command::Hasse, Format::Csv).unwrap();
        let mut rd = csv::Reader::from_reader(s.as_bytes());
        assert_eq!(rd.headers().unwrap().len(), PRIME_COLUMNS.len());
        let rec = rd.records().next().unwrap().unwrap();
        assert_eq!(&rec[0], "11");
        assert_eq!(rec.get(PRIME_COLUMNS.len() - 1).unwrap(), "a, \"quoted\" note");
    }
}
