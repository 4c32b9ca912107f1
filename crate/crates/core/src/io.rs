//! JSON file formats. Rationals are `p/q` strings, regions use
//! [`RegionForm`], and everything written is in the structured region form.

use serde::{Deserialize, Serialize};

use crate::cantor::EndpointIndex;
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Dyadic};
use crate::region::{ClosedRegion, OpenRegion, RegionForm};
use crate::tietze::{Extension, GluedExtension, PLFunction, SurjectiveExtension};
use crate::urysohn::{Family, FiberTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    Urysohn,
    Tietze,
    Cantor,
}

/// An input problem: `A`/`B` for separation, `E`/`f` for extension, or a
/// list of `points` for the Cantor function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub kind: ProblemKind,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub a: Option<RegionForm>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<RegionForm>,
    #[serde(rename = "E", default, skip_serializing_if = "Option::is_none")]
    pub e: Option<RegionForm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<PLForm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<String>,
}

fn closed_field(form: &Option<RegionForm>, name: &str) -> Result<ClosedRegion> {
    let form = form
        .as_ref()
        .ok_or_else(|| Error::input(format!("missing field `{name}`")))?;
    ClosedRegion::new(form.to_region()?).map_err(|e| Error::input(format!("{name}: {e}")))
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_error)
    }

    fn expect(&self, kind: ProblemKind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::input(format!(
                "expected a {kind:?} problem, found {:?}",
                self.kind
            )));
        }
        Ok(())
    }

    /// The disjoint closed sets of a separation problem.
    pub fn urysohn_sets(&self) -> Result<(ClosedRegion, ClosedRegion)> {
        self.expect(ProblemKind::Urysohn)?;
        Ok((closed_field(&self.a, "A")?, closed_field(&self.b, "B")?))
    }

    /// The function of an extension problem; `E`, when given, must be its domain.
    pub fn tietze_function(&self) -> Result<PLFunction> {
        self.expect(ProblemKind::Tietze)?;
        let f = self
            .f
            .as_ref()
            .ok_or_else(|| Error::input("missing field `f`"))?
            .to_function()?;
        if self.e.is_some() {
            let e = closed_field(&self.e, "E")?;
            if &e != f.domain() {
                return Err(Error::input(format!(
                    "E = {e} but the breakpoints of f span {}",
                    f.domain()
                )));
            }
        }
        Ok(f)
    }
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        column: e.column(),
        message: format!("line {}: {e}", e.line()),
    }
}

/// `{domain, pieces}` with one list of `[x, y]` pairs per component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PLForm {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<RegionForm>,
    pub pieces: Vec<Vec<[String; 2]>>,
}

impl PLForm {
    pub fn of(f: &PLFunction) -> Self {
        PLForm {
            domain: Some(RegionForm::structured(f.domain())),
            pieces: f
                .pieces()
                .iter()
                .map(|g| {
                    g.iter()
                        .map(|(x, y)| [x.to_string(), y.to_string()])
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_function(&self) -> Result<PLFunction> {
        let groups = self
            .pieces
            .iter()
            .map(|g| {
                g.iter()
                    .map(|[x, y]| Ok((parse_rational(x)?, parse_rational(y)?)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        match &self.domain {
            Some(d) => PLFunction::new(ClosedRegion::new(d.to_region()?)?, groups),
            None => PLFunction::from_pieces(groups),
        }
    }
}

/// `"1"` for `U₁`, otherwise an endpoint index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IndexForm {
    Endpoint(EndpointIndex),
    Top(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpenForm {
    pub index: IndexForm,
    pub region: RegionForm,
}

/// `{A, B, depth, opens: [{index, region}]}`, opens ordered by index value
/// and ending with `U₁`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyForm {
    #[serde(rename = "A")]
    pub a: RegionForm,
    #[serde(rename = "B")]
    pub b: RegionForm,
    pub depth: u32,
    pub opens: Vec<OpenForm>,
}

impl FamilyForm {
    pub fn of(fam: &Family) -> Self {
        let mut opens: Vec<OpenForm> = fam
            .opens()
            .iter()
            .map(|(i, u)| OpenForm {
                index: IndexForm::Endpoint(*i),
                region: RegionForm::structured(u),
            })
            .collect();
        opens.push(OpenForm {
            index: IndexForm::Top("1".into()),
            region: RegionForm::structured(fam.top()),
        });
        FamilyForm {
            a: RegionForm::structured(fam.a()),
            b: RegionForm::structured(fam.b()),
            depth: fam.depth(),
            opens,
        }
    }

    pub fn to_family(&self) -> Result<Family> {
        let a = ClosedRegion::new(self.a.to_region()?)?;
        let b = ClosedRegion::new(self.b.to_region()?)?;
        let mut opens = Vec::with_capacity(self.opens.len());
        let mut top = None;
        for o in &self.opens {
            let region = OpenRegion::new(o.region.to_region()?)?;
            match &o.index {
                IndexForm::Endpoint(i) => opens.push((*i, region)),
                IndexForm::Top(t) if t == "1" && top.is_none() => top = Some(region),
                IndexForm::Top(t) => return Err(Error::input(format!("unexpected index `{t}`"))),
            }
        }
        let top = top.ok_or_else(|| Error::input("family has no entry for index \"1\""))?;
        Family::from_parts(a, b, self.depth, opens, top)
    }

    pub fn parse(text: &str) -> Result<Family> {
        serde_json::from_str::<FamilyForm>(text)
            .map_err(json_error)?
            .to_family()
    }
}

/// One entry of an exported fiber table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberForm {
    pub value: String,
    pub dyadic: String,
    pub region: RegionForm,
}

pub fn fiber_forms(table: &FiberTable) -> Vec<FiberForm> {
    table
        .fibers()
        .iter()
        .map(|(v, r)| FiberForm {
            value: v.to_rational().to_string(),
            dyadic: v.to_text(),
            region: RegionForm::structured(r),
        })
        .collect()
}

/// A stored extension. `fibers` is an export of the evaluator and is ignored
/// when loading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionForm {
    pub route: String,
    pub input: PLForm,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v1: Option<RegionForm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v2: Option<RegionForm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub glued: Option<PLForm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyForm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fibers: Option<Vec<FiberForm>>,
}

impl ExtensionForm {
    pub fn of(ext: &Extension) -> Self {
        let mut form = ExtensionForm {
            route: ext.route().to_string(),
            input: PLForm::of(ext.input()),
            v1: None,
            v2: None,
            glued: None,
            family: ext.family().map(FamilyForm::of),
            fibers: ext.fibers().as_ref().map(fiber_forms),
        };
        if let Extension::Glued(g) = ext {
            form.v1 = Some(RegionForm::structured(g.v1()));
            form.v2 = Some(RegionForm::structured(g.v2()));
            form.glued = Some(PLForm::of(g.glued()));
        }
        form
    }

    pub fn to_extension(&self) -> Result<Extension> {
        let input = self.input.to_function()?;
        let family = || -> Result<Family> {
            self.family
                .as_ref()
                .ok_or_else(|| Error::input("missing field `family`"))?
                .to_family()
        };
        match self.route.as_str() {
            "restriction" => Ok(Extension::Restriction(input)),
            "surjective" => Ok(Extension::Surjective(SurjectiveExtension::from_parts(
                input,
                family()?,
            )?)),
            "glued" => {
                let open = |f: &Option<RegionForm>, name: &str| -> Result<OpenRegion> {
                    OpenRegion::new(
                        f.as_ref()
                            .ok_or_else(|| Error::input(format!("missing field `{name}`")))?
                            .to_region()?,
                    )
                };
                let glued = self
                    .glued
                    .as_ref()
                    .ok_or_else(|| Error::input("missing field `glued`"))?
                    .to_function()?;
                let inner = SurjectiveExtension::from_parts(glued, family()?)?;
                let g = GluedExtension::from_parts(
                    input,
                    open(&self.v1, "v1")?,
                    open(&self.v2, "v2")?,
                    inner,
                )?;
                Ok(Extension::Glued(Box::new(g)))
            }
            other => Err(Error::input(format!("unknown route `{other}`"))),
        }
    }

    pub fn parse(text: &str) -> Result<Extension> {
        serde_json::from_str::<ExtensionForm>(text)
            .map_err(json_error)?
            .to_extension()
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// `{"x", "value", "dyadic", "g_index"}` rows for evaluation output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvalRow {
    pub x: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dyadic: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g_index: Option<String>,
}

impl EvalRow {
    pub fn dyadic(x: &crate::Rational, value: Dyadic, g_index: Option<String>) -> Self {
        EvalRow {
            x: x.to_string(),
            value: value.to_rational().to_string(),
            dyadic: Some(value.to_text()),
            g_index,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tietze::extend;
    use crate::urysohn::build_family;

    #[test]
    fn family_round_trip() {
        let p = ProblemFile::parse(r#"{"kind":"urysohn","A":"[0,1/10]","B":"[9/10,1]","depth":2}"#)
            .unwrap();
        let (a, b) = p.urysohn_sets().unwrap();
        let fam = build_family(&a, &b, 2).unwrap();
        let text = to_json(&FamilyForm::of(&fam));
        assert!(text.contains(r#""prefix": "2""#));
        assert_eq!(FamilyForm::parse(&text).unwrap(), fam);
    }

    #[test]
    fn extension_round_trip() {
        let p = ProblemFile::parse(
            r#"{"kind":"tietze","E":"[2/5,3/5]","f":{"pieces":[[["2/5","1/2"],["3/5","1/2"]]]},"depth":2}"#,
        )
        .unwrap();
        let f = p.tietze_function().unwrap();
        let ext = extend(&f, 2).unwrap();
        let text = to_json(&ExtensionForm::of(&ext));
        assert_eq!(ExtensionForm::parse(&text).unwrap(), ext);
    }

    #[test]
    fn problem_errors() {
        assert!(ProblemFile::parse(r#"{"kind":"urysohn","A":"[0,1/10]"}"#)
            .unwrap()
            .urysohn_sets()
            .is_err());
        assert!(matches!(
            ProblemFile::parse(r#"{"kind":"other"}"#),
            Err(Error::Parse { .. })
        ));
        let p = ProblemFile::parse(
            r#"{"kind":"tietze","E":"[0,1]","f":{"pieces":[[["0","0"],["1/2","1"]]]}}"#,
        )
        .unwrap();
        assert!(p.tietze_function().is_err());
    }
}
