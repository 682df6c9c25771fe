//! Analysis requests: a line-oriented text format and a JSON mirror.
//!
//! ```text
//! # comment
//! vertices: 0 1 2 3
//! arrow a: 0 -> 1
//! d: 1 1 1 1
//! basis: (1,1,-1,-1) (1,-1,1,-1) (1,-1,-1,1)
//! slice: p=(1,1,0) u1=(1,-1,0) u2=(0,0,1)
//! base: (3,-1,-1,-1)
//! format: text
//! scope: g-ample
//! ```
//!
//! `vertices:`, at least the arrows used and `d:` are required. Slice
//! vectors are in working coordinates (over `basis:` when given, over the
//! default kernel basis otherwise) and take rationals `p/q`. Leaving out
//! `p=` gives a linear slice.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{AnalysisOptions, Scope};
use crate::geometry::slice::SliceSpec;
use crate::quiver::{Character, DimensionVector, Quiver};
use crate::rational::{fmt_rational, parse_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Svg,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "svg" => Ok(OutputFormat::Svg),
            other => Err(format!("unknown format `{other}` (expected text, json or svg)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Svg => "svg",
        })
    }
}

pub fn parse_scope(s: &str) -> Result<Scope, String> {
    match s {
        "full" => Ok(Scope::Full),
        "g-ample" => Ok(Scope::GAmpleOnly),
        other => Err(format!("unknown scope `{other}` (expected full or g-ample)")),
    }
}

pub fn scope_name(scope: Scope) -> &'static str {
    match scope {
        Scope::Full => "full",
        Scope::GAmpleOnly => "g-ample",
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisRequest {
    pub quiver: Quiver,
    pub d: DimensionVector,
    pub basis: Option<Vec<Vec<i64>>>,
    pub slice: Option<SliceSpec>,
    pub base: Option<Character>,
    pub format: Option<OutputFormat>,
    pub scope: Option<Scope>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, column, message: message.into() })
}

/// A token with its 1-based column.
type Tok<'a> = (&'a str, usize);

fn split_tokens<'a>(s: &'a str, start_col: usize, seps: &[char]) -> Vec<Tok<'a>> {
    let mut out = Vec::new();
    let mut begin: Option<usize> = None;
    for (i, ch) in s.char_indices() {
        if ch.is_whitespace() || seps.contains(&ch) {
            if let Some(b) = begin.take() {
                out.push((&s[b..i], start_col + s[..b].chars().count()));
            }
        } else if begin.is_none() {
            begin = Some(i);
        }
    }
    if let Some(b) = begin {
        out.push((&s[b..], start_col + s[..b].chars().count()));
    }
    out
}

/// Splits `(..) (..)` into the contents of each parenthesized group.
fn groups(s: &str, col: usize, line: usize) -> Result<Vec<Tok<'_>>, ParseError> {
    let mut out = Vec::new();
    let mut rest = s;
    let mut offset = 0;
    loop {
        let trimmed = rest.trim_start();
        offset += rest.chars().count() - trimmed.chars().count();
        if trimmed.is_empty() {
            return Ok(out);
        }
        if !trimmed.starts_with('(') {
            return err(line, col + offset, "expected `(`");
        }
        let Some(close) = trimmed.find(')') else {
            return err(line, col + offset, "unclosed `(`");
        };
        out.push((&trimmed[1..close], col + offset + 1));
        offset += trimmed[..=close].chars().count();
        rest = &trimmed[close + 1..];
    }
}

fn parse_i64s(s: &str, col: usize, line: usize) -> Result<Vec<i64>, ParseError> {
    split_tokens(s, col, &[',', '(', ')'])
        .into_iter()
        .map(|(t, c)| t.parse::<i64>().or_else(|_| err(line, c, format!("expected an integer, found `{t}`"))))
        .collect()
}

fn parse_rationals(s: &str, col: usize, line: usize) -> Result<Vec<Rational>, ParseError> {
    split_tokens(s, col, &[','])
        .into_iter()
        .map(|(t, c)| parse_rational(t).map_or_else(|| err(line, c, format!("expected a rational, found `{t}`")), Ok))
        .collect()
}

fn check_name(name: &str, line: usize, col: usize, what: &str) -> Result<(), ParseError> {
    let bad = |c: char| c.is_whitespace() || "():,#=".contains(c);
    if name.is_empty() || name.chars().any(bad) || name.contains("->") {
        return err(line, col, format!("invalid {what} name `{name}`"));
    }
    Ok(())
}

struct Located<T> {
    value: T,
    line: usize,
    column: usize,
}

pub fn parse_request(text: &str) -> Result<AnalysisRequest, ParseError> {
    let mut vertices: Option<Located<Vec<Tok>>> = None;
    let mut arrows: Vec<(Tok, Tok, Tok, usize)> = Vec::new();
    let mut d: Option<Located<Vec<i64>>> = None;
    let mut d_columns: Vec<usize> = Vec::new();
    let mut basis: Option<Vec<Vec<i64>>> = None;
    let mut slice: Option<Located<(Option<Vec<Rational>>, Vec<Rational>, Vec<Rational>)>> = None;
    let mut base: Option<Character> = None;
    let mut format: Option<OutputFormat> = None;
    let mut scope: Option<Scope> = None;
    let mut seen: HashSet<String> = HashSet::new();
    let line_count = text.lines().count();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            let col = content.chars().count() - content.trim_start().chars().count() + 1;
            return err(line, col, "expected `key: value`");
        };
        let key_part = &content[..colon];
        let key = key_part.trim();
        let key_col = key_part.chars().count() - key_part.trim_start().chars().count() + 1;
        let value = &content[colon + 1..];
        let vcol = content[..colon + 1].chars().count() + 1;

        if let Some(name) = key.strip_prefix("arrow").filter(|r| r.starts_with(char::is_whitespace)) {
            let name_trim = name.trim();
            let ncol = key_col + 5 + (name.chars().count() - name.trim_start().chars().count());
            check_name(name_trim, line, ncol, "arrow")?;
            let Some(arrow_pos) = value.find("->") else {
                return err(line, vcol, "expected `SOURCE -> TARGET`");
            };
            let src = split_tokens(&value[..arrow_pos], vcol, &[]);
            let tcol = vcol + value[..arrow_pos + 2].chars().count();
            let tgt = split_tokens(&value[arrow_pos + 2..], tcol, &[]);
            if src.len() != 1 {
                return err(line, vcol, "expected exactly one source vertex");
            }
            if tgt.len() != 1 {
                return err(line, tcol, "expected exactly one target vertex");
            }
            if arrows.iter().any(|(n, ..)| n.0 == name_trim) {
                return err(line, ncol, format!("duplicate arrow `{name_trim}`"));
            }
            arrows.push(((name_trim, ncol), src[0], tgt[0], line));
            continue;
        }
        if !seen.insert(key.to_string()) {
            return err(line, key_col, format!("duplicate `{key}:` line"));
        }
        match key {
            "vertices" => {
                let toks = split_tokens(value, vcol, &[',']);
                let mut names = HashSet::new();
                for &(t, c) in &toks {
                    check_name(t, line, c, "vertex")?;
                    if !names.insert(t) {
                        return err(line, c, format!("duplicate vertex `{t}`"));
                    }
                }
                vertices = Some(Located { value: toks, line, column: vcol });
            }
            "d" => {
                let values = parse_i64s(value, vcol, line)?;
                for (t, c) in split_tokens(value, vcol, &[',', '(', ')']) {
                    if t.starts_with('-') {
                        return err(line, c, "dimension vector entries must be nonnegative");
                    }
                    d_columns.push(c);
                }
                d = Some(Located { value: values, line, column: vcol });
            }
            "basis" => {
                basis = Some(
                    groups(value, vcol, line)?
                        .into_iter()
                        .map(|(g, c)| parse_i64s(g, c, line))
                        .collect::<Result<_, _>>()?,
                );
            }
            "slice" => {
                let mut p = None;
                let mut u1 = None;
                let mut u2 = None;
                let mut rest = value;
                let mut col = vcol;
                loop {
                    let trimmed = rest.trim_start();
                    col += rest.chars().count() - trimmed.chars().count();
                    if trimmed.is_empty() {
                        break;
                    }
                    let Some(eq) = trimmed.find('=') else {
                        return err(line, col, "expected `name=(...)`");
                    };
                    let name = &trimmed[..eq];
                    let after = &trimmed[eq + 1..];
                    let gcol = col + trimmed[..=eq].chars().count();
                    if !after.starts_with('(') {
                        return err(line, gcol, "expected `(`");
                    }
                    let Some(close) = after.find(')') else {
                        return err(line, gcol, "unclosed `(`");
                    };
                    let vals = parse_rationals(&after[1..close], gcol + 1, line)?;
                    let slot = match name {
                        "p" => &mut p,
                        "u1" => &mut u1,
                        "u2" => &mut u2,
                        other => return err(line, col, format!("unknown slice vector `{other}` (expected p, u1, u2)")),
                    };
                    if slot.replace(vals).is_some() {
                        return err(line, col, format!("slice vector `{name}` given twice"));
                    }
                    col = gcol + after[..=close].chars().count();
                    rest = &after[close + 1..];
                }
                let (Some(u1), Some(u2)) = (u1, u2) else {
                    return err(line, vcol, "slice needs u1=(...) and u2=(...)");
                };
                slice = Some(Located { value: (p, u1, u2), line, column: vcol });
            }
            "base" => base = Some(Character(parse_i64s(value, vcol, line)?)),
            "format" => {
                format = Some(value.trim().parse().or_else(|m: String| err(line, vcol, m))?);
            }
            "scope" => scope = Some(parse_scope(value.trim()).or_else(|m| err(line, vcol, m))?),
            other => return err(line, key_col, format!("unknown key `{other}`")),
        }
    }

    let end = line_count + 1;
    let Some(vertices) = vertices else {
        return err(end, 1, "missing vertex list (`vertices:` line)");
    };
    let Some(d) = d else {
        return err(end, 1, "missing dimension vector (`d:` line)");
    };
    let names: Vec<&str> = vertices.value.iter().map(|t| t.0).collect();
    for ((name, _), (src, sc), (tgt, tc), line) in &arrows {
        for (v, c) in [(src, sc), (tgt, tc)] {
            if !names.contains(v) {
                return err(*line, *c, format!("arrow `{name}` references undeclared vertex `{v}`"));
            }
        }
    }
    if d.value.len() != names.len() {
        return err(
            d.line,
            d.column,
            format!("dimension vector has {} entries but there are {} vertices", d.value.len(), names.len()),
        );
    }
    if let Some(i) = d.value.iter().position(|&x| x > 1) {
        return err(
            d.line,
            d_columns.get(i).copied().unwrap_or(d.column),
            format!(
                "dimension vector is not thin (entry {} at vertex `{}`); only 0/1 dimension vectors are supported, see the Scope section of the README",
                d.value[i], names[i]
            ),
        );
    }
    let quiver = Quiver::new(
        names.iter().map(|s| s.to_string()),
        arrows.iter().map(|((n, _), (s, _), (t, _), _)| (n.to_string(), s.to_string(), t.to_string())),
    )
    .or_else(|e| err(vertices.line, vertices.column, e.to_string()))?;
    let slice = match slice {
        None => None,
        Some(Located { value: (p, u1, u2), line, column }) => Some(
            match p {
                Some(p) => SliceSpec::affine(p, u1, u2),
                None => SliceSpec::linear(u1, u2),
            }
            .or_else(|e| err(line, column, e.to_string()))?,
        ),
    };
    Ok(AnalysisRequest {
        quiver,
        d: DimensionVector(d.value.iter().map(|&x| x as u64).collect()),
        basis,
        slice,
        base,
        format,
        scope,
    })
}

fn fmt_i64s(v: &[i64]) -> String {
    crate::rational::fmt_int_tuple(v)
}

fn fmt_rationals(v: &[Rational]) -> String {
    format!("({})", v.iter().map(fmt_rational).collect::<Vec<_>>().join(","))
}

impl AnalysisRequest {
    pub fn options(&self) -> AnalysisOptions {
        AnalysisOptions {
            scope: self.scope.unwrap_or_default(),
            basis: self.basis.clone(),
            ..Default::default()
        }
    }

    /// Canonical text form; parsing it gives back an equal request.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("vertices: {}\n", self.quiver.vertices().join(" ")));
        for a in self.quiver.arrows() {
            out.push_str(&format!(
                "arrow {}: {} -> {}\n",
                a.name,
                self.quiver.vertices()[a.source],
                self.quiver.vertices()[a.target]
            ));
        }
        let d: Vec<String> = self.d.entries().iter().map(u64::to_string).collect();
        out.push_str(&format!("d: {}\n", d.join(" ")));
        if let Some(b) = &self.basis {
            let parts: Vec<String> = b.iter().map(|v| fmt_i64s(v)).collect();
            out.push_str(&format!("basis: {}\n", parts.join(" ")));
        }
        if let Some(s) = &self.slice {
            out.push_str("slice:");
            if let SliceSpec::Affine { p, .. } = s {
                out.push_str(&format!(" p={}", fmt_rationals(p)));
            }
            out.push_str(&format!(" u1={} u2={}\n", fmt_rationals(s.u1()), fmt_rationals(s.u2())));
        }
        if let Some(b) = &self.base {
            out.push_str(&format!("base: {}\n", fmt_i64s(&b.0)));
        }
        if let Some(f) = self.format {
            out.push_str(&format!("format: {f}\n"));
        }
        if let Some(s) = self.scope {
            out.push_str(&format!("scope: {}\n", scope_name(s)));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rats = |v: &[Rational]| v.iter().map(|r| JsonRational::Str(fmt_rational(r))).collect();
        let doc = RequestJson {
            vertices: self.quiver.vertices().to_vec(),
            arrows: self
                .quiver
                .arrows()
                .iter()
                .map(|a| ArrowJson {
                    name: a.name.clone(),
                    source: self.quiver.vertices()[a.source].clone(),
                    target: self.quiver.vertices()[a.target].clone(),
                })
                .collect(),
            d: self.d.entries().to_vec(),
            basis: self.basis.clone(),
            slice: self.slice.as_ref().map(|s| SliceJson {
                p: match s {
                    SliceSpec::Affine { p, .. } => Some(rats(p)),
                    SliceSpec::Linear { .. } => None,
                },
                u1: rats(s.u1()),
                u2: rats(s.u2()),
            }),
            base: self.base.as_ref().map(|c| c.0.clone()),
            format: self.format.map(|f| f.to_string()),
            scope: self.scope.map(|s| scope_name(s).to_string()),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("request serializes");
        s.push('\n');
        s
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RequestJson {
    vertices: Vec<String>,
    #[serde(default)]
    arrows: Vec<ArrowJson>,
    d: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    slice: Option<SliceJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    base: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    format: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    scope: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowJson {
    name: String,
    source: String,
    target: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SliceJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<Vec<JsonRational>>,
    u1: Vec<JsonRational>,
    u2: Vec<JsonRational>,
}

/// An integer, a `"p/q"` string or `{"num": p, "den": q}`.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonRational {
    Int(i64),
    Str(String),
    Frac { num: i64, den: i64 },
}

impl JsonRational {
    fn value(&self) -> Option<Rational> {
        match self {
            JsonRational::Int(n) => Some(Rational::from_integer((*n).into())),
            JsonRational::Str(s) => parse_rational(s),
            JsonRational::Frac { num, den } => {
                (*den != 0).then(|| Rational::new((*num).into(), (*den).into()))
            }
        }
    }
}

/// Parses the JSON mirror by translating it to the text form, so both
/// formats share one validator. Errors from the translated text refer to
/// lines of that text and say so.
pub fn parse_request_json(text: &str) -> Result<AnalysisRequest, ParseError> {
    let doc: RequestJson = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let json_err = |message: String| ParseError { line: 1, column: 1, message };
    let rats = |v: &[JsonRational], what: &str| -> Result<Vec<Rational>, ParseError> {
        v.iter()
            .map(|r| r.value().ok_or_else(|| json_err(format!("slice.{what}: invalid rational"))))
            .collect()
    };
    let mut out = String::new();
    out.push_str(&format!("vertices: {}\n", doc.vertices.join(" ")));
    for a in &doc.arrows {
        out.push_str(&format!("arrow {}: {} -> {}\n", a.name, a.source, a.target));
    }
    let d: Vec<String> = doc.d.iter().map(u64::to_string).collect();
    out.push_str(&format!("d: {}\n", d.join(" ")));
    if let Some(b) = &doc.basis {
        let parts: Vec<String> = b.iter().map(|v| fmt_i64s(v)).collect();
        out.push_str(&format!("basis: {}\n", parts.join(" ")));
    }
    if let Some(s) = &doc.slice {
        out.push_str("slice:");
        if let Some(p) = &s.p {
            out.push_str(&format!(" p={}", fmt_rationals(&rats(p, "p")?)));
        }
        out.push_str(&format!(
            " u1={} u2={}\n",
            fmt_rationals(&rats(&s.u1, "u1")?),
            fmt_rationals(&rats(&s.u2, "u2")?)
        ));
    }
    if let Some(b) = &doc.base {
        out.push_str(&format!("base: {}\n", fmt_i64s(b)));
    }
    if let Some(f) = &doc.format {
        out.push_str(&format!("format: {f}\n"));
    }
    if let Some(s) = &doc.scope {
        out.push_str(&format!("scope: {s}\n"));
    }
    parse_request(&out).map_err(|e| ParseError {
        line: e.line,
        column: e.column,
        message: format!("{} (in the normalized text form of the JSON request)", e.message),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ints;

    const DIAMOND: &str = "\
# five arrows
vertices: 0 1 2 3
arrow a: 0 -> 1
arrow b: 0 -> 2
arrow c: 1 -> 2
arrow d: 1 -> 3
arrow e: 2 -> 3
d: 1 1 1 1
basis: (1,1,-1,-1) (1,-1,1,-1) (1,-1,-1,1)
slice: p=(1,1,0) u1=(1,-1,0) u2=(0,0,1)
base: (3,-1,-1,-1)
";

    #[test]
    fn parses_fixture() {
        let r = parse_request(DIAMOND).unwrap();
        assert_eq!(r.quiver.vertex_count(), 4);
        assert_eq!(r.quiver.arrows().len(), 5);
        assert_eq!(
            r.slice,
            Some(SliceSpec::affine(ints(&[1, 1, 0]), ints(&[1, -1, 0]), ints(&[0, 0, 1])).unwrap())
        );
        assert_eq!(r.base, Some(Character(vec![3, -1, -1, -1])));
    }

    #[test]
    fn roundtrips() {
        let r = parse_request(DIAMOND).unwrap();
        assert_eq!(parse_request(&r.to_text()).unwrap(), r);
        assert_eq!(parse_request_json(&r.to_json()).unwrap(), r);
        let lin = parse_request("vertices: x y z\narrow t: x -> y\nd: (1,1,1)\nslice: u1=(1/2,0) u2=(0,-3)\nformat: json\nscope: g-ample\n")
            .unwrap();
        assert!(matches!(lin.slice, Some(SliceSpec::Linear { .. })));
        assert_eq!(parse_request(&lin.to_text()).unwrap(), lin);
        assert_eq!(parse_request_json(&lin.to_json()).unwrap(), lin);
        // Two dependent slice vectors are rejected.
        assert!(parse_request("vertices: x y\nd: 1 1\nslice: u1=(1/2) u2=(3)\n").is_err());
    }

    #[test]
    fn errors_are_addressed() {
        let e = parse_request("vertices: 0 1\narrow a: 0 -> 1\n").unwrap_err();
        assert!(e.message.contains("missing dimension vector"));
        let e = parse_request("vertices: 0 1\narrow a: 0 -> 9\nd: 1 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 15));
        assert!(e.message.contains("`9`"));
        let e = parse_request("vertices: 0 1\nd: 1 2\n").unwrap_err();
        assert!(e.message.contains("not thin"));
        let e = parse_request("vertices: 0 1\nd: 1 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 6));
        let e = parse_request("vertices: 0 0\nd: 1 1\n").unwrap_err();
        assert!(e.message.contains("duplicate vertex"));
        let e = parse_request("vertices: 0 1\nd: 1 1\nwat: 3\n").unwrap_err();
        assert_eq!(e.line, 3);
    }
}
