//! Canonical JSON forms. Slots, variables and permutation images are 1-based.
//!
//! Output is deterministic: terms follow the element's internal ordering, so
//! serializing a parsed document reproduces it byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TciError};
use crate::interp::{BasicRelation, DeductionCertificate, Side, Step};
use crate::rational::{self, Rational};
use crate::symgroup::{GroupAlgebraElement, Permutation};
use crate::tracering::{CyclicWord, TraceMonomial, TraceScalar, Word};
use crate::twisted::{TensorWord, TwistedElement};

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct CoeffJson {
    num: String,
    den: String,
    lambda: u32,
    traces: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct TermJson {
    coeff: Vec<CoeffJson>,
    tensor: Vec<Vec<u32>>,
    perm: Vec<usize>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct ElementJson {
    n: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct GroupTermJson {
    coeff: String,
    perm: Vec<usize>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct GroupAlgebraJson {
    m: usize,
    terms: Vec<GroupTermJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy)]
#[serde(rename_all = "snake_case")]
enum SideJson {
    Left,
    Right,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case", deny_unknown_fields)]
enum StepJson {
    Scale {
        factor: String,
    },
    Conjugate {
        alpha: Vec<usize>,
        beta: Vec<(u32, u32)>,
    },
    TensorSplit {
        n: usize,
        k: usize,
        perm: Vec<usize>,
        vars: Vec<u32>,
    },
    RightMultiply {
        slot: usize,
        word: Vec<u32>,
    },
    LeftMultiply {
        slot: usize,
        word: Vec<u32>,
    },
    Substitute {
        var: u32,
        word: Vec<u32>,
        side: SideJson,
    },
    PermutationMove {
        gamma: Vec<usize>,
        side: SideJson,
    },
    TraceFactor {
        var: u32,
    },
    Pad {
        slot: usize,
    },
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct BaseJson {
    k: usize,
    d: usize,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct CertificateJson {
    base: BaseJson,
    target: ElementJson,
    steps: Vec<StepJson>,
}

fn parse_err(e: serde_json::Error) -> TciError {
    TciError::Parse(e.to_string())
}

fn to_string<T: Serialize>(v: &T, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("serializable")
    } else {
        serde_json::to_string(v).expect("serializable")
    }
}

fn rational_from_parts(num: &str, den: &str) -> Result<Rational> {
    rational::parse(&format!("{num}/{den}"))
}

fn word_from(letters: Vec<u32>) -> Result<Word> {
    if letters.contains(&0) {
        return Err(TciError::Parse("variable indices start at 1".into()));
    }
    Ok(Word(letters))
}

fn perm_from(images: &[usize], m: usize) -> Result<Permutation> {
    if images.len() != m {
        return Err(TciError::DegreeMismatch(images.len(), m));
    }
    Permutation::from_one_line(images)
}

fn scalar_to_json(s: &TraceScalar) -> Vec<CoeffJson> {
    s.iter()
        .map(|(m, c)| CoeffJson {
            num: c.numer().to_string(),
            den: c.denom().to_string(),
            lambda: m.lambda,
            traces: m.traces().iter().map(|cw| cw.letters().to_vec()).collect(),
        })
        .collect()
}

fn scalar_from_json(cs: Vec<CoeffJson>) -> Result<TraceScalar> {
    let mut s = TraceScalar::zero();
    for c in cs {
        let value = rational_from_parts(&c.num, &c.den)?;
        let traces = c
            .traces
            .into_iter()
            .map(|t| CyclicWord::new(&word_from(t)?))
            .collect::<Result<Vec<_>>>()?;
        s.add_term(TraceMonomial::new(c.lambda, traces), value);
    }
    Ok(s)
}

fn element_to_json(a: &TwistedElement) -> ElementJson {
    ElementJson {
        n: a.arity(),
        terms: a
            .iter()
            .map(|(t, p, c)| TermJson {
                coeff: scalar_to_json(c),
                tensor: t.factors().iter().map(|w| w.letters().to_vec()).collect(),
                perm: p.one_line(),
            })
            .collect(),
    }
}

fn element_from_json(e: ElementJson) -> Result<TwistedElement> {
    let mut out = TwistedElement::zero(e.n);
    for t in e.terms {
        if t.tensor.len() != e.n {
            return Err(TciError::ArityMismatch(t.tensor.len(), e.n));
        }
        let words = t.tensor.into_iter().map(word_from).collect::<Result<Vec<_>>>()?;
        let perm = perm_from(&t.perm, e.n)?;
        out.add_term(scalar_from_json(t.coeff)?, TensorWord(words), perm);
    }
    Ok(out)
}

/// Serializes a twisted element.
pub fn element_to_string(a: &TwistedElement, pretty: bool) -> String {
    to_string(&element_to_json(a), pretty)
}

/// Parses a twisted element, merging repeated terms.
pub fn element_from_str(s: &str) -> Result<TwistedElement> {
    element_from_json(serde_json::from_str(s).map_err(parse_err)?)
}

/// Serializes a group algebra element.
pub fn group_algebra_to_string(g: &GroupAlgebraElement, pretty: bool) -> String {
    let doc = GroupAlgebraJson {
        m: g.degree(),
        terms: g
            .iter()
            .map(|(p, c)| GroupTermJson {
                coeff: rational::render(c),
                perm: p.one_line(),
            })
            .collect(),
    };
    to_string(&doc, pretty)
}

/// Parses a group algebra element.
pub fn group_algebra_from_str(s: &str) -> Result<GroupAlgebraElement> {
    let doc: GroupAlgebraJson = serde_json::from_str(s).map_err(parse_err)?;
    let mut g = GroupAlgebraElement::zero(doc.m);
    for t in doc.terms {
        g.add_term(perm_from(&t.perm, doc.m)?, rational::parse(&t.coeff)?);
    }
    Ok(g)
}

fn side_to_json(s: Side) -> SideJson {
    match s {
        Side::Left => SideJson::Left,
        Side::Right => SideJson::Right,
    }
}

fn side_from_json(s: SideJson) -> Side {
    match s {
        SideJson::Left => Side::Left,
        SideJson::Right => Side::Right,
    }
}

fn slot_from(slot: usize) -> Result<usize> {
    slot.checked_sub(1)
        .ok_or_else(|| TciError::Certificate("slots start at 1".into()))
}

fn step_to_json(s: &Step) -> StepJson {
    match s {
        Step::Scale { factor } => StepJson::Scale {
            factor: rational::render(factor),
        },
        Step::Conjugate { alpha, beta } => StepJson::Conjugate {
            alpha: alpha.one_line(),
            beta: beta.iter().map(|(&a, &b)| (a, b)).collect(),
        },
        Step::TensorSplit { n, k, perm, vars } => StepJson::TensorSplit {
            n: *n,
            k: *k,
            perm: perm.one_line(),
            vars: vars.clone(),
        },
        Step::RightMultiply { slot, word } => StepJson::RightMultiply {
            slot: slot + 1,
            word: word.letters().to_vec(),
        },
        Step::LeftMultiply { slot, word } => StepJson::LeftMultiply {
            slot: slot + 1,
            word: word.letters().to_vec(),
        },
        Step::Substitute { var, word, side } => StepJson::Substitute {
            var: *var,
            word: word.letters().to_vec(),
            side: side_to_json(*side),
        },
        Step::PermutationMove { gamma, side } => StepJson::PermutationMove {
            gamma: gamma.one_line(),
            side: side_to_json(*side),
        },
        Step::TraceFactor { var } => StepJson::TraceFactor { var: *var },
        Step::Pad { slot } => StepJson::Pad { slot: slot + 1 },
    }
}

fn step_from_json(s: StepJson) -> Result<Step> {
    let malformed = |e: TciError| TciError::Certificate(e.to_string());
    Ok(match s {
        StepJson::Scale { factor } => Step::Scale {
            factor: rational::parse(&factor).map_err(malformed)?,
        },
        StepJson::Conjugate { alpha, beta } => {
            let map: BTreeMap<u32, u32> = beta.iter().copied().collect();
            if map.len() != beta.len() {
                return Err(TciError::Certificate("repeated variable in renaming".into()));
            }
            Step::Conjugate {
                alpha: Permutation::from_one_line(&alpha).map_err(malformed)?,
                beta: map,
            }
        }
        StepJson::TensorSplit { n, k, perm, vars } => Step::TensorSplit {
            n,
            k,
            perm: Permutation::from_one_line(&perm).map_err(malformed)?,
            vars,
        },
        StepJson::RightMultiply { slot, word } => Step::RightMultiply {
            slot: slot_from(slot)?,
            word: word_from(word).map_err(malformed)?,
        },
        StepJson::LeftMultiply { slot, word } => Step::LeftMultiply {
            slot: slot_from(slot)?,
            word: word_from(word).map_err(malformed)?,
        },
        StepJson::Substitute { var, word, side } => Step::Substitute {
            var,
            word: word_from(word).map_err(malformed)?,
            side: side_from_json(side),
        },
        StepJson::PermutationMove { gamma, side } => Step::PermutationMove {
            gamma: Permutation::from_one_line(&gamma).map_err(malformed)?,
            side: side_from_json(side),
        },
        StepJson::TraceFactor { var } => Step::TraceFactor { var },
        StepJson::Pad { slot } => Step::Pad {
            slot: slot_from(slot)?,
        },
    })
}

/// Serializes a deduction certificate.
pub fn certificate_to_string(c: &DeductionCertificate, pretty: bool) -> String {
    let doc = CertificateJson {
        base: BaseJson {
            k: c.base.k,
            d: c.base.d,
        },
        target: element_to_json(&c.target),
        steps: c.steps.iter().map(step_to_json).collect(),
    };
    to_string(&doc, pretty)
}

/// Parses a deduction certificate; malformed steps are reported as certificate errors.
pub fn certificate_from_str(s: &str) -> Result<DeductionCertificate> {
    let doc: CertificateJson = serde_json::from_str(s).map_err(|e| TciError::Certificate(e.to_string()))?;
    Ok(DeductionCertificate {
        target: element_from_json(doc.target)?,
        base: BasicRelation {
            k: doc.base.k,
            d: doc.base.d,
        },
        steps: doc.steps.into_iter().map(step_from_json).collect::<Result<_>>()?,
    })
}

/// Parses a square rational matrix given as an array of rows of `"p/q"` strings.
pub fn matrix_from_str(s: &str) -> Result<Vec<Vec<Rational>>> {
    let rows: Vec<Vec<String>> = serde_json::from_str(s).map_err(parse_err)?;
    let d = rows.len();
    rows.into_iter()
        .map(|row| {
            if row.len() != d {
                return Err(TciError::DimensionMismatch(format!(
                    "row of length {} in a {d}-row matrix",
                    row.len()
                )));
            }
            row.iter().map(|v| rational::parse(v)).collect()
        })
        .collect()
}
