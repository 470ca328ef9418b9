//! Number formatting and CSV helpers shared by report emitters.

/// First line of every CSV file written by this crate.
pub const SCHEMA_HEADER: &str = "# conekit-schema v1";

/// Format with 12 significant digits, dropping trailing zeros.
/// Infinities print as `inf` / `-inf`.
pub fn fmt_sig(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let rounded: f64 = format!("{:.11e}", x).parse().expect("float roundtrip");
    let a = rounded.abs();
    if (1e-5..1e15).contains(&a) {
        format!("{}", rounded)
    } else {
        let s = format!("{:.11e}", rounded);
        let (m, e) = s.split_once('e').expect("exponent");
        let m = if m.contains('.') { m.trim_end_matches('0').trim_end_matches('.') } else { m };
        format!("{m}e{e}")
    }
}

/// Serialize rows to CSV (with the schema header line).
pub fn csv_with_header(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    let body = String::from_utf8(w.into_inner().expect("flush")).expect("utf8");
    format!("{SCHEMA_HEADER}\n{body}")
}
