//! JSON presentation files.
//!
//! ```json
//! { "name": "L5_8", "dim": 5,
//!   "brackets": [ { "i": 1, "j": 2, "terms": [ { "k": 4, "c": "1" } ] },
//!                 { "i": 1, "j": 3, "terms": [ { "k": 5, "c": "1" } ] } ] }
//! ```
//!
//! Indices are 1-based with `i < j`. A coefficient is a rational `p` or `p/q`
//! in lowest terms, or the name of an entry in `params`, optionally negated.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{Bracket, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Presentation {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub k: usize,
    pub c: String,
}

impl Presentation {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Presentation::parse(&text).map_err(|e| match e {
            Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn from_algebra(l: &LieAlgebra) -> Self {
        Presentation {
            name: l.name().map(str::to_owned),
            dim: l.dim(),
            params: BTreeMap::new(),
            brackets: l
                .brackets()
                .into_iter()
                .map(|b| BracketEntry {
                    i: b.i,
                    j: b.j,
                    terms: b
                        .terms
                        .iter()
                        .map(|(k, c)| Term {
                            k: *k,
                            c: format_rational(c),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentation serializes")
    }

    fn coefficient(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (negate, body) = match text.strip_prefix('-') {
            Some(rest) if self.params.contains_key(rest.trim()) => (true, rest.trim()),
            _ => (false, text),
        };
        let value = match self.params.get(body) {
            Some(v) => parse_rational(v)?,
            None => parse_rational(body)?,
        };
        Ok(if negate { -value } else { value })
    }

    /// Validate and build the algebra (Jacobi and nilpotency included).
    pub fn load(&self) -> Result<LieAlgebra> {
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            let terms = b
                .terms
                .iter()
                .map(|t| Ok((t.k, self.coefficient(&t.c)?)))
                .collect::<Result<Vec<_>>>()?;
            brackets.push(Bracket::new(b.i, b.j, terms));
        }
        let l = LieAlgebra::from_brackets(self.dim, &brackets)?;
        Ok(match &self.name {
            Some(n) => l.with_name(n.clone()),
            None => l,
        })
    }
}

pub fn load_algebra(text: &str) -> Result<LieAlgebra> {
    Presentation::parse(text)?.load()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{"name":"L5_8","dim":5,"brackets":[
            {"i":1,"j":2,"terms":[{"k":4,"c":"1"}]},
            {"i":1,"j":3,"terms":[{"k":5,"c":"1"}]}]}"#;
        let l = load_algebra(text).unwrap();
        assert_eq!(l.dim(), 5);
        assert_eq!(l.name(), Some("L5_8"));
        let again = Presentation::from_algebra(&l).load().unwrap();
        assert_eq!(again, l);
    }

    #[test]
    fn parameters_substitute() {
        let text = r#"{"dim":6,"params":{"eps":"-1/2"},"brackets":[
            {"i":1,"j":2,"terms":[{"k":5,"c":"1"}]},
            {"i":1,"j":3,"terms":[{"k":6,"c":"1"}]},
            {"i":2,"j":4,"terms":[{"k":6,"c":"-eps"}]},
            {"i":3,"j":4,"terms":[{"k":5,"c":"1"}]}]}"#;
        let l = load_algebra(text).unwrap();
        assert_eq!(l.basis_bracket(1, 3)[5], crate::linalg::ratio(1, 2));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            load_algebra(r#"{"dim":3,"brackets":[{"i":2,"j":1,"terms":[]}]}"#),
            Err(Error::BadPair { i: 2, j: 1 })
        ));
        assert!(matches!(
            load_algebra(r#"{"dim":3,"brackets":[{"i":1,"j":2,"terms":[{"k":3,"c":"2/4"}]}]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(load_algebra("{\"dim\":3,"), Err(Error::Parse(_))));
        assert!(matches!(
            load_algebra(r#"{"dim":3,"brackets":[],"extra":1}"#),
            Err(Error::Parse(_))
        ));
    }
}
