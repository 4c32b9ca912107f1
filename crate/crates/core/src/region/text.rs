use serde::{Deserialize, Serialize};

use super::interval::Interval;
use super::set::Region;
use crate::error::{Error, Result};
use crate::rational::parse_rational;

/// Parses the bracket text form, e.g. `[0,1/10] u [9/10,1]` or `(1/3,2/3)`.
///
/// `empty`, `{}` and `∅` denote the empty set. Components may overlap; the
/// result is canonicalized.
pub fn parse_region(text: &str) -> Result<Region> {
    let t = text.trim();
    if t.is_empty() || t == "empty" || t == "{}" || t == "∅" {
        return Ok(Region::empty());
    }
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let col = |i: usize| chars.get(i).map_or(text.chars().count() + 1, |_| i + 1);
    let mut intervals = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].1.is_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip_ws(&mut i);
        let lo_closed = match chars.get(i).map(|c| c.1) {
            Some('[') => true,
            Some('(') => false,
            other => {
                return Err(Error::Parse {
                    column: col(i),
                    message: format!("expected `[` or `(`, found {}", describe(other)),
                })
            }
        };
        i += 1;
        let start = i;
        while i < chars.len() && chars[i].1 != ',' {
            i += 1;
        }
        if i == chars.len() {
            return Err(Error::Parse {
                column: col(i),
                message: "missing `,` in interval".into(),
            });
        }
        let lo = slice(text, &chars, start, i);
        let lo_col = col(start);
        i += 1;
        let start = i;
        while i < chars.len() && chars[i].1 != ']' && chars[i].1 != ')' {
            i += 1;
        }
        let hi_closed = match chars.get(i).map(|c| c.1) {
            Some(']') => true,
            Some(')') => false,
            _ => {
                return Err(Error::Parse {
                    column: col(i),
                    message: "unterminated interval".into(),
                })
            }
        };
        let hi = slice(text, &chars, start, i);
        let hi_col = col(start);
        i += 1;
        let lo = parse_rational(lo).map_err(|e| at(e, lo_col))?;
        let hi = parse_rational(hi).map_err(|e| at(e, hi_col))?;
        intervals.push(
            Interval::new(lo, hi, lo_closed, hi_closed).map_err(|e| Error::Parse {
                column: lo_col,
                message: e.to_string(),
            })?,
        );
        skip_ws(&mut i);
        match chars.get(i).map(|c| c.1) {
            None => break,
            Some('u') | Some('U') | Some('∪') => i += 1,
            other => {
                return Err(Error::Parse {
                    column: col(i),
                    message: format!("expected `u` between intervals, found {}", describe(other)),
                })
            }
        }
    }
    Ok(Region::from_intervals(intervals))
}

fn slice<'a>(text: &'a str, chars: &[(usize, char)], from: usize, to: usize) -> &'a str {
    let a = chars[from.min(chars.len() - 1)].0;
    let b = chars.get(to).map_or(text.len(), |c| c.0);
    if from >= to {
        ""
    } else {
        &text[a..b]
    }
}

fn describe(c: Option<char>) -> String {
    c.map_or_else(|| "end of input".to_string(), |c| format!("`{c}`"))
}

fn at(e: Error, column: usize) -> Error {
    match e {
        Error::Parse { message, .. } => Error::Parse { column, message },
        other => other,
    }
}

/// Structured form of one component: `{lo, hi, lo_closed, hi_closed}` with
/// rationals as `p/q` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalForm {
    pub lo: String,
    pub hi: String,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

/// A region as it appears in JSON files: either the bracket text form or a
/// list of structured components. Regions are always written structured.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RegionForm {
    Text(String),
    Structured(Vec<IntervalForm>),
}

impl RegionForm {
    pub fn structured(region: &Region) -> Self {
        RegionForm::Structured(
            region
                .parts()
                .iter()
                .map(|p| IntervalForm {
                    lo: p.lo().to_string(),
                    hi: p.hi().to_string(),
                    lo_closed: p.lo_closed(),
                    hi_closed: p.hi_closed(),
                })
                .collect(),
        )
    }

    pub fn to_region(&self) -> Result<Region> {
        match self {
            RegionForm::Text(t) => parse_region(t),
            RegionForm::Structured(items) => {
                let parts = items
                    .iter()
                    .map(|f| {
                        Interval::new(
                            parse_rational(&f.lo)?,
                            parse_rational(&f.hi)?,
                            f.lo_closed,
                            f.hi_closed,
                        )
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Region::from_intervals(parts))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_text_forms() {
        let r = parse_region("[0,1/10] u [9/10,1]").unwrap();
        assert_eq!(r.to_string(), "[0,1/10] u [9/10,1]");
        assert_eq!(parse_region("(1/3, 2/3)").unwrap().to_string(), "(1/3,2/3)");
        assert!(parse_region("empty").unwrap().is_empty());
        assert_eq!(
            parse_region("[0,1/2) ∪ [1/4,3/4]").unwrap().to_string(),
            "[0,3/4]"
        );
    }

    #[test]
    fn reports_columns() {
        match parse_region("[0,1/10] u [9/10,x]") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 18),
            other => panic!("unexpected {other:?}"),
        }
        match parse_region("[0,1/10] [9/10,1]") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 10),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_region("[1/2,1/3]").is_err());
        assert!(parse_region("[0,1/2").is_err());
    }

    #[test]
    fn structured_form_round_trip() {
        let r = parse_region("[0,1/2) u (3/4,1]").unwrap();
        let form = RegionForm::structured(&r);
        let json = serde_json::to_string(&form).unwrap();
        assert_eq!(
            json,
            r#"[{"lo":"0","hi":"1/2","lo_closed":true,"hi_closed":false},{"lo":"3/4","hi":"1","lo_closed":false,"hi_closed":true}]"#
        );
        let back: RegionForm = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_region().unwrap(), r);
        let text: RegionForm = serde_json::from_str(r#""[0,1/10]""#).unwrap();
        assert_eq!(text.to_region().unwrap().to_string(), "[0,1/10]");
    }
}
