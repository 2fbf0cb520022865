//! Report rendering.

use crate::report::{CheckReport, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "human" => Ok(Format::Human),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}`; expected human or json")),
        }
    }
}

pub fn emit_report(r: &CheckReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Human => human(r),
    }
}

fn human(r: &CheckReport) -> String {
    let idw = r.items.iter().map(|i| i.id.chars().count()).max().unwrap_or(2).max(2);
    let ww = r.items.iter().map(|i| i.witness.chars().count()).max().unwrap_or(7).clamp(7, 40);
    let mut out = format!("suite {}\n", r.suite);
    out.push_str(&format!("{:<6} {:<idw$} {:<ww$} {}\n", "status", "id", "witness", "anchor"));
    for i in &r.items {
        out.push_str(&format!("{:<6} {:<idw$} {:<ww$} {}\n", i.status.as_str(), i.id, i.witness, i.anchor));
        if !i.detail.is_empty() {
            out.push_str(&format!("{:<6} {:<idw$} {:<ww$} ({})\n", "", "", "", i.detail));
        }
    }
    out.push_str(&format!(
        "{} pass, {} fail, {} skip\n",
        r.count(Status::Pass),
        r.count(Status::Fail),
        r.count(Status::Skip)
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = CheckReport::new("t");
        r.pass("a", "x = x", "0", "");
        r.fail("b", "x = 0", "x", "first at [1]");
        let text = emit_report(&r, Format::Json);
        let back: CheckReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(text, emit_report(&r, Format::Json));
        assert!(emit_report(&r, Format::Human).contains("1 pass, 1 fail, 0 skip"));
    }
}
