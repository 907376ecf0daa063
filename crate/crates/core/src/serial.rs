//! JSON document types shared by the library and the command-line tool.

/// Serializes a `BigUint` as a decimal string.
pub mod biguint_string {
    use num_bigint::BigUint;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(D::Error::custom)
    }
}

use serde::{Deserialize, Serialize};

use crate::codec::{DecodeOutcome, ErrorTerm, Message};
use crate::error::{Error, Result};
use crate::parse::parse_poly;
use crate::ring::RingContext;
use crate::skew_code::{CodeStats, Codeword, GeneratorForm, Level};
use crate::skew_poly::SkewPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CtxDoc {
    pub p: u64,
    pub k: usize,
    pub s: u64,
}

impl CtxDoc {
    pub fn from_ctx(ctx: &RingContext) -> Self {
        Self {
            p: u64::from(ctx.p()),
            k: ctx.k(),
            s: u64::from(ctx.s()),
        }
    }

    pub fn to_ctx(self) -> Result<RingContext> {
        RingContext::new(self.p, self.k, self.s)
    }
}

/// A polynomial as text (`"(1+u)x^2 + 2u"`) or as ascending coefficient layers (`[[0,2],[],[1,1]]`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyDoc {
    Text(String),
    Coeffs(Vec<Vec<i64>>),
}

impl PolyDoc {
    pub fn text(f: &SkewPoly) -> Self {
        Self::Text(f.to_string())
    }

    pub fn coeffs(f: &SkewPoly) -> Self {
        Self::Coeffs(
            f.coeffs()
                .iter()
                .map(|c| c.coeffs().iter().map(|&x| i64::from(x)).collect())
                .collect(),
        )
    }

    pub fn to_poly(&self, ctx: RingContext) -> Result<SkewPoly> {
        match self {
            Self::Text(text) => parse_poly(ctx, text),
            Self::Coeffs(layers) => {
                let refs: Vec<&[i64]> = layers.iter().map(Vec::as_slice).collect();
                SkewPoly::from_ints(ctx, &refs)
            }
        }
    }

    pub fn to_codeword(&self, ctx: RingContext, n: usize) -> Result<Codeword> {
        Codeword::from_poly(&self.to_poly(ctx)?, n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelDoc {
    pub layer: usize,
    pub generator: PolyDoc,
    pub degree: usize,
}

/// The classified form; fields not used by a case are omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormDoc {
    pub case: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<PolyDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<PolyDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a1: Option<PolyDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<LevelDoc>>,
}

impl FormDoc {
    pub fn from_form(form: &GeneratorForm) -> Self {
        let mut doc = Self {
            case: form.case_name().to_string(),
            h: None,
            g: None,
            a1: None,
            i: None,
            r: None,
            t: None,
            levels: None,
        };
        match form {
            GeneratorForm::CaseI { torsion, a, r } => {
                doc.a1 = Some(PolyDoc::text(a));
                doc.i = Some(*torsion);
                doc.r = Some(*r);
            }
            GeneratorForm::CaseII { g, r } => {
                doc.g = Some(PolyDoc::text(g));
                doc.r = Some(*r);
            }
            GeneratorForm::CaseIII { h, g, torsion, a, r, t } => {
                doc.h = Some(PolyDoc::text(h));
                doc.g = Some(PolyDoc::text(g));
                doc.a1 = Some(PolyDoc::text(a));
                doc.i = Some(*torsion);
                doc.r = Some(*r);
                doc.t = Some(*t);
            }
            GeneratorForm::Layered { levels } => {
                doc.levels = Some(
                    levels
                        .iter()
                        .map(|l| LevelDoc {
                            layer: l.layer,
                            generator: PolyDoc::text(&l.generator),
                            degree: l.degree,
                        })
                        .collect(),
                );
            }
        }
        doc
    }

    pub fn to_form(&self, ctx: RingContext, n: usize) -> Result<GeneratorForm> {
        let missing = |field: &str| Error::InvalidForm(format!("case {} needs field '{field}'", self.case));
        let poly = |p: &Option<PolyDoc>, field: &str| -> Result<SkewPoly> {
            p.as_ref().ok_or_else(|| missing(field))?.to_poly(ctx)
        };
        let degree_of = |f: &SkewPoly| f.degree().ok_or(Error::ZeroCode);
        let form = match self.case.as_str() {
            "I" => {
                let a = poly(&self.a1, "a1")?;
                GeneratorForm::CaseI {
                    torsion: self.i.ok_or_else(|| missing("i"))?,
                    r: degree_of(&a)?,
                    a,
                }
            }
            "II" => {
                let g = poly(&self.g, "g")?;
                GeneratorForm::CaseII { r: degree_of(&g)?, g }
            }
            "III" => {
                let h = poly(&self.h, "h")?;
                let a = poly(&self.a1, "a1")?;
                GeneratorForm::CaseIII {
                    g: poly(&self.g, "g")?,
                    torsion: self.i.ok_or_else(|| missing("i"))?,
                    r: degree_of(&h)?,
                    t: degree_of(&a)?,
                    h,
                    a,
                }
            }
            "layered" => {
                let docs = self.levels.as_ref().ok_or_else(|| missing("levels"))?;
                let mut levels = Vec::with_capacity(docs.len());
                let mut previous = n;
                for d in docs {
                    let generator = d.generator.to_poly(ctx)?;
                    let degree = degree_of(&generator)?;
                    if degree >= previous {
                        return Err(Error::InvalidForm(format!(
                            "level degrees must decrease below {previous}"
                        )));
                    }
                    levels.push(Level {
                        layer: d.layer,
                        generator,
                        degree,
                        shifts: previous - degree,
                    });
                    previous = degree;
                }
                GeneratorForm::Layered { levels }
            }
            other => return Err(Error::InvalidForm(format!("unknown case '{other}'"))),
        };
        form.levels(n)?;
        Ok(form)
    }
}

/// A code: ring, length, generators, and optionally its form and statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDoc {
    pub ctx: CtxDoc,
    pub n: usize,
    pub generators: Vec<PolyDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<FormDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<CodeStats>,
}

impl CodeDoc {
    pub fn generators(&self) -> Result<(RingContext, Vec<SkewPoly>)> {
        let ctx = self.ctx.to_ctx()?;
        let gens = self.generators.iter().map(|g| g.to_poly(ctx)).collect::<Result<_>>()?;
        Ok((ctx, gens))
    }

    /// The stored form if present, else the generators read as a form.
    pub fn resolve_form(&self) -> Result<GeneratorForm> {
        let (ctx, gens) = self.generators()?;
        match &self.form {
            Some(doc) => doc.to_form(ctx, self.n),
            None => GeneratorForm::resolve(ctx, self.n, &gens),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MessageDoc {
    pub case: String,
    pub polys: Vec<PolyDoc>,
}

impl MessageDoc {
    pub fn from_message(form: &GeneratorForm, msg: &Message) -> Self {
        Self {
            case: form.case_name().to_string(),
            polys: msg.parts.iter().map(PolyDoc::text).collect(),
        }
    }

    pub fn to_message(&self, form: &GeneratorForm) -> Result<Message> {
        if self.case != form.case_name() {
            return Err(Error::MessageBound(format!(
                "message is for case {} but the code is case {}",
                self.case,
                form.case_name()
            )));
        }
        let ctx = form.ctx();
        Ok(Message::new(
            self.polys.iter().map(|p| p.to_poly(ctx)).collect::<Result<_>>()?,
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeReport {
    pub status: String,
    pub syndromes: Vec<PolyDoc>,
    pub error_pattern: Vec<ErrorTerm>,
    pub alternatives: Vec<Vec<ErrorTerm>>,
    pub corrected: PolyDoc,
    pub message: MessageDoc,
}

impl DecodeReport {
    pub fn from_outcome(form: &GeneratorForm, outcome: &DecodeOutcome) -> Self {
        let ctx = form.ctx();
        Self {
            status: if outcome.error.is_zero() { "clean" } else { "corrected" }.to_string(),
            syndromes: outcome.syndrome.layers.iter().map(PolyDoc::text).collect(),
            error_pattern: outcome.error.terms().to_vec(),
            alternatives: outcome.alternatives.iter().map(|a| a.terms().to_vec()).collect(),
            corrected: PolyDoc::text(&outcome.corrected.to_poly(ctx)),
            message: MessageDoc::from_message(form, &outcome.message),
        }
    }
}
