//! The proof interchange format shared by every subcommand.
//!
//! ```json
//! { "system": "g3ip", "rule": "LImp",
//!   "conclusion": { "ante": ["p -> q", "p"], "succ": "q" },
//!   "principal": "p -> q", "premises": [ ... ] }
//! ```
//!
//! `succ` is a list for `g3cp` and a single formula for `g3ip`. Formulas
//! use the ASCII grammar; `*` is accepted here since proofs may mention it.

use decvar_core::formula::{render, Parser, Style};
use decvar_core::g3cp::{ClassicalProof, ClassicalRule};
use decvar_core::g3ip::{IntProof, IntRule};
use decvar_core::{ClassicalSequent, Formula, IntSequent, Multiset};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofJson {
    pub system: String,
    pub rule: String,
    pub conclusion: ConclusionJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub principal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cut_formula: Option<String>,
    #[serde(default)]
    pub premises: Vec<ProofJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConclusionJson {
    pub ante: Vec<String>,
    pub succ: SuccJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SuccJson {
    One(String),
    Many(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Syntax(String),
    #[error("unknown system `{0}`")]
    System(String),
    #[error("unknown {system} rule `{rule}`")]
    Rule { system: String, rule: String },
    #[error("bad formula `{text}`: {message}")]
    Formula { text: String, message: String },
    #[error("{0}")]
    Shape(String),
}

/// A decoded proof of either system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyProof {
    Classical(ClassicalProof),
    Int(IntProof),
}

fn text(f: &Formula) -> String {
    render(f, Style::Ascii)
}

fn texts(m: &Multiset) -> Vec<String> {
    m.iter().map(text).collect()
}

pub fn int_to_json(p: &IntProof) -> ProofJson {
    ProofJson {
        system: "g3ip".into(),
        rule: p.rule.name().into(),
        conclusion: ConclusionJson {
            ante: texts(&p.conclusion.ante),
            succ: SuccJson::One(text(&p.conclusion.succ)),
        },
        principal: p.principal.as_ref().map(text),
        cut_formula: p.cut_formula.as_ref().map(text),
        premises: p.premises.iter().map(int_to_json).collect(),
    }
}

pub fn classical_to_json(p: &ClassicalProof) -> ProofJson {
    ProofJson {
        system: "g3cp".into(),
        rule: p.rule.name().into(),
        conclusion: ConclusionJson {
            ante: texts(&p.conclusion.ante),
            succ: SuccJson::Many(texts(&p.conclusion.succ)),
        },
        principal: Some(text(&p.principal)),
        cut_formula: None,
        premises: p.premises.iter().map(classical_to_json).collect(),
    }
}

fn formula(s: &str) -> Result<Formula, JsonError> {
    Parser::new(s)
        .and_then(|p| p.allow_star().formula())
        .map_err(|e| JsonError::Formula {
            text: s.to_string(),
            message: e.to_string(),
        })
}

fn formulas(v: &[String]) -> Result<Multiset, JsonError> {
    v.iter().map(|s| formula(s)).collect()
}

fn int_from_json(j: &ProofJson) -> Result<IntProof, JsonError> {
    let rule = IntRule::from_name(&j.rule).ok_or_else(|| JsonError::Rule {
        system: j.system.clone(),
        rule: j.rule.clone(),
    })?;
    let succ = match &j.conclusion.succ {
        SuccJson::One(s) => formula(s)?,
        SuccJson::Many(v) if v.len() == 1 => formula(&v[0])?,
        SuccJson::Many(v) => {
            return Err(JsonError::Shape(format!(
                "g3ip succedent must hold one formula, got {}",
                v.len()
            )))
        }
    };
    Ok(IntProof {
        conclusion: IntSequent::new(formulas(&j.conclusion.ante)?, succ),
        rule,
        principal: j.principal.as_deref().map(formula).transpose()?,
        cut_formula: j.cut_formula.as_deref().map(formula).transpose()?,
        premises: j.premises.iter().map(int_from_json).collect::<Result<_, _>>()?,
    })
}

fn classical_from_json(j: &ProofJson) -> Result<ClassicalProof, JsonError> {
    let rule = ClassicalRule::from_name(&j.rule).ok_or_else(|| JsonError::Rule {
        system: j.system.clone(),
        rule: j.rule.clone(),
    })?;
    let succ = match &j.conclusion.succ {
        SuccJson::One(s) => vec![formula(s)?].into(),
        SuccJson::Many(v) => formulas(v)?,
    };
    let principal = match j.principal.as_deref() {
        Some(s) => formula(s)?,
        None => return Err(JsonError::Shape(format!("{} node without principal", j.rule))),
    };
    Ok(ClassicalProof {
        conclusion: ClassicalSequent::new(formulas(&j.conclusion.ante)?, succ),
        rule,
        principal,
        premises: j
            .premises
            .iter()
            .map(classical_from_json)
            .collect::<Result<_, _>>()?,
    })
}

pub fn from_json(j: &ProofJson) -> Result<AnyProof, JsonError> {
    match j.system.as_str() {
        "g3ip" => Ok(AnyProof::Int(int_from_json(j)?)),
        "g3cp" => Ok(AnyProof::Classical(classical_from_json(j)?)),
        other => Err(JsonError::System(other.to_string())),
    }
}

/// Parses a proof document: either a bare node or an object whose
/// `proof` field is one (the shape `translate` and `prove-c` print).
pub fn parse_proof(text: &str) -> Result<AnyProof, JsonError> {
    let mut de = serde_json::Deserializer::from_str(text);
    de.disable_recursion_limit();
    let v = serde_json::Value::deserialize(&mut de).map_err(|e| JsonError::Syntax(e.to_string()))?;
    de.end().map_err(|e| JsonError::Syntax(e.to_string()))?;
    let node = match v {
        serde_json::Value::Object(mut m) if !m.contains_key("system") && m.contains_key("proof") => {
            m.remove("proof").expect("checked key")
        }
        other => other,
    };
    let j: ProofJson =
        serde_json::from_value(node).map_err(|e| JsonError::Syntax(e.to_string()))?;
    from_json(&j)
}
