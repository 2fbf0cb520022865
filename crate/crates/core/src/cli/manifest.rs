//! Line-oriented manifest files.
//!
//! ```text
//! # comment
//! [ambient]
//! coordinates = x y z
//! index = 1
//! epsilon = 1
//! xi[1] = 0, 0, 1
//! eta[1] = -y, 0, 1
//! g[1][1] = 1/2            # symmetric; missing entries are zero
//! phi[1][2] = 1            # column j is the image of the j-th coordinate field
//! [hypersurface]
//! parameters = a b
//! f = a, b, a
//! E = ...                  # optional, over ambient and parameter names
//! Z = ...                  # optional, same
//! [checks]
//! suites = structure frame
//! request = characteristic # optional
//! ```
//!
//! Indices are 1-based. Values may be wrapped in double quotes.

use std::collections::BTreeMap;

use crate::chart::Chart;
use crate::connection::Metric;
use crate::error::{Error, Result};
use crate::framed::GffStructure;
use crate::hypersurface::Immersion;
use crate::linalg::Matrix;
use crate::scalar::{parse_expression, RationalExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Request {
    /// Ask whether a characteristic lightlike hypersurface can exist.
    Characteristic,
}

#[derive(Clone, Debug)]
pub struct HypersurfaceSpec {
    pub immersion: Immersion,
    /// Ambient components along the map.
    pub e: Option<Vec<RationalExpr>>,
    pub z: Option<Vec<RationalExpr>>,
}

#[derive(Clone, Debug)]
pub struct Manifest {
    pub path: String,
    pub structure: GffStructure,
    pub hypersurface: Option<HypersurfaceSpec>,
    pub suites: Vec<String>,
    pub request: Option<Request>,
}

impl Manifest {
    pub fn chart(&self) -> &Chart {
        self.structure.chart()
    }
}

pub fn load_manifest(path: &str) -> Result<Manifest> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
    parse_manifest(&text, path)
}

#[derive(Clone, Debug)]
struct Entry {
    line: usize,
    key_col: usize,
    value: String,
    value_col: usize,
}

struct Ctx<'a> {
    path: &'a str,
}

impl Ctx<'_> {
    fn err(&self, line: usize, col: usize, message: impl Into<String>) -> Error {
        Error::Manifest { path: self.path.to_string(), line, col, message: message.into() }
    }

    /// Re-anchors an expression error inside a value.
    fn expr_err(&self, e: Error, line: usize, col: usize) -> Error {
        match e {
            Error::Syntax { col: c, message } => self.err(line, col + c - 1, message),
            Error::UnknownIdentifier { name, col: c } => self.err(line, col + c - 1, format!("unknown identifier `{name}`")),
            Error::ZeroDivisor { col: c } => self.err(line, col + c - 1, "division by the zero polynomial"),
            other => self.err(line, col, other.to_string()),
        }
    }

    fn expr(&self, src: &str, chart: &Chart, line: usize, col: usize) -> Result<RationalExpr> {
        parse_expression(src, chart).map_err(|e| self.expr_err(e, line, col))
    }

    /// Comma-separated expressions with their columns.
    fn list(&self, ent: &Entry, chart: &Chart) -> Result<Vec<RationalExpr>> {
        let mut out = Vec::new();
        let mut start = 0usize;
        let chars: Vec<char> = ent.value.chars().collect();
        for i in 0..=chars.len() {
            if i == chars.len() || chars[i] == ',' {
                let part: String = chars[start..i].iter().collect();
                if part.trim().is_empty() {
                    return Err(self.err(ent.line, ent.value_col + start, "empty list entry"));
                }
                out.push(self.expr(&part, chart, ent.line, ent.value_col + start)?);
                start = i + 1;
            }
        }
        Ok(out)
    }

    fn vector(&self, ent: &Entry, chart: &Chart, len: usize, what: &str) -> Result<Vec<RationalExpr>> {
        let v = self.list(ent, chart)?;
        if v.len() != len {
            return Err(self.err(ent.line, ent.value_col, format!("{what} has {} components, expected {len}", v.len())));
        }
        Ok(v)
    }
}

/// Splits `name[1][2]` into the name and its 1-based indices.
fn split_key(key: &str) -> Option<(String, Vec<usize>)> {
    let (name, mut rest) = match key.find('[') {
        Some(p) => (&key[..p], &key[p..]),
        None => (key, ""),
    };
    let mut idx = Vec::new();
    while !rest.is_empty() {
        let close = rest.find(']')?;
        if !rest.starts_with('[') {
            return None;
        }
        let n: usize = rest[1..close].trim().parse().ok()?;
        idx.push(n);
        rest = &rest[close + 1..];
    }
    Some((name.trim().to_string(), idx))
}

fn unquote(v: &str, col: usize) -> (String, usize) {
    let t = v.trim_end();
    if t.len() >= 2 && t.starts_with('"') && t.ends_with('"') {
        (t[1..t.len() - 1].to_string(), col + 1)
    } else {
        (t.to_string(), col)
    }
}

type Sections = BTreeMap<String, BTreeMap<String, Entry>>;

fn read_sections(text: &str, ctx: &Ctx) -> Result<Sections> {
    let mut sections: Sections = BTreeMap::new();
    let mut current: Option<String> = None;
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let lead = content.len() - content.trim_start().len();
        if trimmed.starts_with('[') {
            if !trimmed.ends_with(']') {
                return Err(ctx.err(line, lead + 1, "unterminated section header"));
            }
            let name = trimmed[1..trimmed.len() - 1].trim().to_string();
            if !["ambient", "hypersurface", "checks"].contains(&name.as_str()) {
                return Err(ctx.err(line, lead + 2, format!("unknown section `{name}`")));
            }
            if sections.contains_key(&name) {
                return Err(ctx.err(line, lead + 1, format!("duplicate section `{name}`")));
            }
            sections.insert(name.clone(), BTreeMap::new());
            current = Some(name);
            continue;
        }
        let Some(sec) = current.clone() else {
            return Err(ctx.err(line, lead + 1, "entry outside of a section"));
        };
        let Some(eq) = content.find('=') else {
            return Err(ctx.err(line, lead + 1, "expected `key = value`"));
        };
        let key = content[..eq].trim().to_string();
        if key.is_empty() {
            return Err(ctx.err(line, lead + 1, "empty key"));
        }
        let after = &content[eq + 1..];
        let vlead = after.len() - after.trim_start().len();
        let value_col = content[..eq + 1 + vlead].chars().count() + 1;
        let (value, value_col) = unquote(after.trim_start(), value_col);
        let table = sections.get_mut(&sec).expect("section exists");
        if table.contains_key(&key) {
            return Err(ctx.err(line, lead + 1, format!("duplicate key `{key}`")));
        }
        table.insert(key, Entry { line, key_col: lead + 1, value, value_col });
    }
    Ok(sections)
}

pub fn parse_manifest(text: &str, path: &str) -> Result<Manifest> {
    let ctx = Ctx { path };
    let sections = read_sections(text, &ctx)?;
    let end = text.lines().count().max(1);
    let amb = sections.get("ambient").ok_or_else(|| ctx.err(end, 1, "missing [ambient] section"))?;
    let need = |table: &BTreeMap<String, Entry>, key: &str, sec: &str| -> Result<Entry> {
        table.get(key).cloned().ok_or_else(|| ctx.err(end, 1, format!("missing `{key}` in [{sec}]")))
    };

    let coords = need(amb, "coordinates", "ambient")?;
    let names: Vec<&str> = coords.value.split_whitespace().collect();
    let chart = Chart::new(&names).map_err(|e| ctx.err(coords.line, coords.value_col, e.to_string()))?;
    let m = chart.dim();

    let index_e = need(amb, "index", "ambient")?;
    let index: usize = index_e
        .value
        .trim()
        .parse()
        .map_err(|_| ctx.err(index_e.line, index_e.value_col, "index must be a non-negative integer"))?;

    let eps_e = need(amb, "epsilon", "ambient")?;
    let mut eps = Vec::new();
    for tok in eps_e.value.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        match tok {
            "1" | "+1" => eps.push(1),
            "-1" => eps.push(-1),
            _ => return Err(ctx.err(eps_e.line, eps_e.value_col, format!("epsilon entries are 1 or -1, found `{tok}`"))),
        }
    }
    let r = eps.len();
    if r == 0 {
        return Err(ctx.err(eps_e.line, eps_e.value_col, "at least one characteristic field is required"));
    }

    let zero = || -> Matrix { vec![vec![RationalExpr::zero(); m]; m] };
    let mut g = zero();
    let mut phi = zero();
    let mut xi: Vec<Option<Vec<RationalExpr>>> = vec![None; r];
    let mut eta: Vec<Option<Vec<RationalExpr>>> = vec![None; r];
    let mut g_set = vec![vec![false; m]; m];
    for (key, ent) in amb {
        let Some((name, idx)) = split_key(key) else {
            return Err(ctx.err(ent.line, ent.key_col, format!("malformed key `{key}`")));
        };
        let bad_index = || ctx.err(ent.line, ent.key_col, format!("index out of range in `{key}`"));
        match (name.as_str(), idx.as_slice()) {
            ("coordinates" | "index" | "epsilon", []) => {}
            ("g", &[i, j]) => {
                if i == 0 || j == 0 || i > m || j > m {
                    return Err(bad_index());
                }
                let v = ctx.expr(&ent.value, &chart, ent.line, ent.value_col)?;
                let (i, j) = (i - 1, j - 1);
                if g_set[i][j] && g[i][j] != v {
                    return Err(ctx.err(ent.line, ent.key_col, format!("`{key}` contradicts its symmetric entry")));
                }
                g[i][j] = v.clone();
                g[j][i] = v;
                g_set[i][j] = true;
                g_set[j][i] = true;
            }
            ("phi", &[i, j]) => {
                if i == 0 || j == 0 || i > m || j > m {
                    return Err(bad_index());
                }
                phi[i - 1][j - 1] = ctx.expr(&ent.value, &chart, ent.line, ent.value_col)?;
            }
            ("xi", &[a]) | ("eta", &[a]) => {
                if a == 0 || a > r {
                    return Err(ctx.err(ent.line, ent.key_col, format!("`{key}` exceeds the {r} declared epsilon signs")));
                }
                let v = ctx.vector(ent, &chart, m, key)?;
                if name == "xi" {
                    xi[a - 1] = Some(v);
                } else {
                    eta[a - 1] = Some(v);
                }
            }
            _ => return Err(ctx.err(ent.line, ent.key_col, format!("unknown key `{key}` in [ambient]"))),
        }
    }
    let take = |v: Vec<Option<Vec<RationalExpr>>>, what: &str| -> Result<Vec<Vec<RationalExpr>>> {
        v.into_iter()
            .enumerate()
            .map(|(a, x)| x.ok_or_else(|| ctx.err(end, 1, format!("missing `{what}[{}]` in [ambient]", a + 1))))
            .collect()
    };
    let xi = take(xi, "xi")?;
    let eta = take(eta, "eta")?;
    let metric = Metric::new(chart.clone(), g, index).map_err(|e| ctx.err(index_e.line, index_e.value_col, e.to_string()))?;
    let structure = GffStructure::new(phi, xi, eta, eps, metric).map_err(|e| ctx.err(coords.line, 1, e.to_string()))?;

    let hypersurface = match sections.get("hypersurface") {
        None => None,
        Some(h) => Some(parse_hypersurface(h, &chart, &ctx, end)?),
    };

    let mut suites = Vec::new();
    let mut request = None;
    if let Some(checks) = sections.get("checks") {
        for (key, ent) in checks {
            match key.as_str() {
                "suites" => {
                    for s in ent.value.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
                        if !super::suites::SUITES.iter().any(|(n, _)| *n == s) {
                            return Err(ctx.err(ent.line, ent.value_col, format!("unknown suite `{s}`")));
                        }
                        suites.push(s.to_string());
                    }
                }
                "request" => match ent.value.trim() {
                    "characteristic" => request = Some(Request::Characteristic),
                    other => return Err(ctx.err(ent.line, ent.value_col, format!("unknown request `{other}`"))),
                },
                _ => return Err(ctx.err(ent.line, ent.key_col, format!("unknown key `{key}` in [checks]"))),
            }
        }
    }
    Ok(Manifest { path: path.to_string(), structure, hypersurface, suites, request })
}

fn parse_hypersurface(h: &BTreeMap<String, Entry>, chart: &Chart, ctx: &Ctx, end: usize) -> Result<HypersurfaceSpec> {
    for (key, ent) in h {
        if !["parameters", "f", "E", "Z"].contains(&key.as_str()) {
            return Err(ctx.err(ent.line, ent.key_col, format!("unknown key `{key}` in [hypersurface]")));
        }
    }
    let params = h.get("parameters").ok_or_else(|| ctx.err(end, 1, "missing `parameters` in [hypersurface]"))?;
    let pnames: Vec<&str> = params.value.split_whitespace().collect();
    let u = Chart::new(&pnames).map_err(|e| ctx.err(params.line, params.value_col, e.to_string()))?;
    if let Some(p) = pnames.iter().find(|p| chart.index_of(p).is_some()) {
        return Err(ctx.err(params.line, params.value_col, format!("parameter `{p}` shadows an ambient coordinate")));
    }
    let fe = h.get("f").ok_or_else(|| ctx.err(end, 1, "missing `f` in [hypersurface]"))?;
    let comps = ctx.vector(fe, &u, chart.dim(), "f")?;
    let immersion = Immersion::new(u.clone(), chart.clone(), comps.clone()).map_err(|e| ctx.err(fe.line, fe.value_col, e.to_string()))?;
    // E and Z may mix ambient and parameter names
    let mut all: Vec<String> = chart.names().to_vec();
    all.extend(u.names().iter().cloned());
    let union = Chart::new(&all).expect("disjoint names");
    let mut images = comps;
    images.extend((0..u.dim()).map(RationalExpr::var));
    let along = |key: &str| -> Result<Option<Vec<RationalExpr>>> {
        match h.get(key) {
            None => Ok(None),
            Some(ent) => {
                let v = ctx.vector(ent, &union, chart.dim(), key)?;
                let v = v
                    .iter()
                    .map(|c| c.substitute(&images))
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| ctx.err(ent.line, ent.value_col, e.to_string()))?;
                Ok(Some(v))
            }
        }
    };
    Ok(HypersurfaceSpec { immersion, e: along("E")?, z: along("Z")? })
}

#[cfg(test)]
mod tests {
    use super::*;

    const LINE: &str = "[ambient]\ncoordinates = x y z\nindex = 0\nepsilon = 1\nxi[1] = 0, 0, 1\neta[1] = 0, 0, 1\ng[1][1] = 1\ng[2][2] = 1\ng[3][3] = 1\n";

    #[test]
    fn minimal_manifest() {
        let m = parse_manifest(LINE, "t.lm").unwrap();
        assert_eq!(m.chart().dim(), 3);
        assert!(m.hypersurface.is_none());
    }

    #[test]
    fn errors_carry_positions() {
        let bad = LINE.replace("xi[1] = 0, 0, 1", "xi[1] = 0, 0");
        match parse_manifest(&bad, "t.lm") {
            Err(Error::Manifest { line, message, .. }) => {
                assert_eq!(line, 5);
                assert!(message.contains("expected 3"));
            }
            other => panic!("{other:?}"),
        }
        let bad = LINE.replace("g[1][1] = 1", "g[1][1] = 1 + w");
        match parse_manifest(&bad, "t.lm") {
            Err(Error::Manifest { line, col, .. }) => assert_eq!((line, col), (7, 15)),
            other => panic!("{other:?}"),
        }
        let bad = LINE.replace("g[1][1] = 1", "g[1][1] = \"1 +* 2\"");
        match parse_manifest(&bad, "t.lm") {
            Err(Error::Manifest { line, col, .. }) => assert_eq!((line, col), (7, 15)),
            other => panic!("{other:?}"),
        }
    }
}
