//! Named nilpotent Lie algebras of dimension at most 8 with their printed
//! presentations, parameter domains and reference multiplier values.
//!
//! Names accept several spellings: `L_{6,22}`, `L6_22` and `L6,22` are the
//! same algebra; `⊕` and `+` both mean direct sum; `∔` and `*` mark a
//! registered central product. Unregistered sums of known names are built on
//! the fly, so `L_{5,8}⊕A(3)` and `H(1)+H(2)` resolve without an entry.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::{Bracket, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, int, parse_rational, unit, Scalar};

/// Structure constant `[x_i, x_j] = (a + b·p) x_k` for the family parameter `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub a: i64,
    pub b: i64,
}

const fn t(i: usize, j: usize, k: usize) -> Term {
    Term {
        i,
        j,
        k,
        a: 1,
        b: 0,
    }
}

const fn tc(i: usize, j: usize, k: usize, a: i64) -> Term {
    Term { i, j, k, a, b: 0 }
}

const fn tp(i: usize, j: usize, k: usize, a: i64, b: i64) -> Term {
    Term { i, j, k, a, b }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParamDomain {
    None,
    /// Any rational.
    Any,
    /// Nonzero rationals.
    NonZero,
    /// Rationals other than 0 and 1.
    NotZeroOrOne,
}

impl ParamDomain {
    pub fn contains(self, p: &Scalar) -> bool {
        match self {
            ParamDomain::None => false,
            ParamDomain::Any => true,
            ParamDomain::NonZero => *p != int(0),
            ParamDomain::NotZeroOrOne => *p != int(0) && *p != int(1),
        }
    }

    /// Value used when the caller gives none.
    pub fn default_value(self) -> Option<Scalar> {
        match self {
            ParamDomain::None => None,
            ParamDomain::Any | ParamDomain::NonZero => Some(int(1)),
            ParamDomain::NotZeroOrOne => Some(int(3)),
        }
    }

    /// `{1, -1, 2}` restricted to the domain.
    pub fn samples(self) -> Vec<Scalar> {
        if self == ParamDomain::None {
            return Vec::new();
        }
        [1, -1, 2]
            .into_iter()
            .map(int)
            .filter(|p| self.contains(p))
            .collect()
    }

    pub fn describe(self) -> &'static str {
        match self {
            ParamDomain::None => "",
            ParamDomain::Any => "eps in Q",
            ParamDomain::NonZero => "eps in Q, eps != 0",
            ParamDomain::NotZeroOrOne => "lambda in Q, lambda not in {0, 1}",
        }
    }
}

/// Where an entry's presentation comes from, grouped by shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Group {
    /// `dim L² = 2`, `n <= 6`.
    Derived2,
    /// `dim L² = 2`, `n = 7`.
    Derived2Dim7,
    /// `dim L² = 3`, `n <= 6`.
    Derived3,
    /// `dim L² = 3`, `n = 7`, indecomposable.
    Derived3Dim7,
    /// `dim L² = 3`, decomposable.
    Derived3Decomposable,
    /// `dim L² = 4`, `n = 6`.
    Derived4,
    /// Algebras built in classification arguments.
    Construction,
    /// Extensions whose multiplier values are quoted in arguments.
    Fixture,
}

impl Group {
    pub const ALL: [Group; 8] = [
        Group::Derived2,
        Group::Derived2Dim7,
        Group::Derived3,
        Group::Derived3Dim7,
        Group::Derived3Decomposable,
        Group::Derived4,
        Group::Construction,
        Group::Fixture,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Group::Derived2 => "derived-2",
            Group::Derived2Dim7 => "derived-2-dim-7",
            Group::Derived3 => "derived-3",
            Group::Derived3Dim7 => "derived-3-dim-7",
            Group::Derived3Decomposable => "derived-3-decomposable",
            Group::Derived4 => "derived-4",
            Group::Construction => "construction",
            Group::Fixture => "fixture",
        }
    }

    pub fn parse(text: &str) -> Option<Group> {
        Group::ALL.into_iter().find(|g| g.id() == text)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recipe {
    Table {
        dim: usize,
        brackets: &'static [Term],
    },
    /// Direct sum of named algebras, left to right.
    Sum(&'static [&'static str]),
    /// `a ∔ b`, identifying basis vector `x_i` of `a` with `x_j` of `b`
    /// (1-based) for each pair.
    CentralProduct {
        a: &'static str,
        b: &'static str,
        identify: &'static [(usize, usize)],
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "note")]
pub enum Provenance {
    Verbatim,
    Repaired(&'static str),
    Constructed,
}

/// Reference `(dim M, s)` row of a multiplier table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub table: u8,
    pub dim_m: usize,
    pub s: i64,
}

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub group: Group,
    pub param: ParamDomain,
    pub recipe: Recipe,
    pub provenance: Provenance,
    /// A direct-sum name this entry must equal bracket for bracket.
    pub alias_of: Option<&'static str>,
    pub expected: Option<Expected>,
    pub expected_capable: Option<bool>,
}

impl CatalogEntry {
    pub fn is_parameterized(&self) -> bool {
        self.param != ParamDomain::None
    }

    /// Name with the parameter value appended, e.g. `L_{6,22}(-1)`.
    pub fn display_name(&self, param: Option<&Scalar>) -> String {
        match param {
            Some(p) if self.is_parameterized() => format!("{}({})", self.name, format_rational(p)),
            _ => self.name.to_owned(),
        }
    }

    pub fn build(&self, param: Option<&Scalar>) -> Result<LieAlgebra> {
        let p = self.resolve_param(param)?;
        let l = match self.recipe {
            Recipe::Table { dim, brackets } => {
                let list: Vec<Bracket> = brackets
                    .iter()
                    .map(|term| {
                        let mut c = int(term.a);
                        if term.b != 0 {
                            c += int(term.b) * p.clone().expect("parameterized entry has a value");
                        }
                        Bracket::new(term.i, term.j, vec![(term.k, c)])
                    })
                    .collect();
                merge_and_build(dim, list)?
            }
            Recipe::Sum(parts) => {
                let mut acc = LieAlgebra::abelian(0);
                for part in parts {
                    acc = LieAlgebra::direct_sum(&acc, &get(part, p.as_ref())?);
                }
                acc
            }
            Recipe::CentralProduct { a, b, identify } => {
                let la = get(a, p.as_ref())?;
                let lb = get(b, p.as_ref())?;
                let pairs: Vec<_> = identify
                    .iter()
                    .map(|&(i, j)| (unit(la.dim(), i - 1), unit(lb.dim(), j - 1)))
                    .collect();
                LieAlgebra::central_product(&la, &lb, &pairs)?
            }
        };
        Ok(l.with_name(self.display_name(p.as_ref())))
    }

    fn resolve_param(&self, param: Option<&Scalar>) -> Result<Option<Scalar>> {
        if !self.is_parameterized() {
            return Ok(None);
        }
        let p = match param {
            Some(p) => p.clone(),
            None => self.param.default_value().expect("parameterized"),
        };
        if !self.param.contains(&p) {
            return Err(Error::ParamOutOfDomain {
                name: self.name.to_owned(),
                detail: format!(
                    "{} not allowed; need {}",
                    format_rational(&p),
                    self.param.describe()
                ),
            });
        }
        Ok(Some(p))
    }
}

/// Several printed brackets may target the same pair (e.g. `[x3,x4] = x5`
/// and a second term); fold them into one multi-term bracket.
fn merge_and_build(dim: usize, list: Vec<Bracket>) -> Result<LieAlgebra> {
    let mut merged: Vec<Bracket> = Vec::new();
    for b in list {
        match merged.iter_mut().find(|m| m.i == b.i && m.j == b.j) {
            Some(m) => m.terms.extend(b.terms),
            None => merged.push(b),
        }
    }
    LieAlgebra::from_brackets(dim, &merged)
}

const fn table(
    name: &'static str,
    group: Group,
    dim: usize,
    brackets: &'static [Term],
) -> CatalogEntry {
    CatalogEntry {
        name,
        group,
        param: ParamDomain::None,
        recipe: Recipe::Table { dim, brackets },
        provenance: Provenance::Verbatim,
        alias_of: None,
        expected: None,
        expected_capable: None,
    }
}

const fn sum(name: &'static str, group: Group, parts: &'static [&'static str]) -> CatalogEntry {
    CatalogEntry {
        name,
        group,
        param: ParamDomain::None,
        recipe: Recipe::Sum(parts),
        provenance: Provenance::Constructed,
        alias_of: None,
        expected: None,
        expected_capable: None,
    }
}

impl CatalogEntry {
    const fn param(mut self, d: ParamDomain) -> Self {
        self.param = d;
        self
    }

    const fn expect(mut self, table: u8, dim_m: usize, s: i64) -> Self {
        self.expected = Some(Expected { table, dim_m, s });
        self
    }

    const fn capable(mut self, c: bool) -> Self {
        self.expected_capable = Some(c);
        self
    }

    const fn alias(mut self, of: &'static str) -> Self {
        self.alias_of = Some(of);
        self
    }

    const fn repaired(mut self, note: &'static str) -> Self {
        self.provenance = Provenance::Repaired(note);
        self
    }
}

use Group::*;
use ParamDomain::{Any, NonZero, NotZeroOrOne};

const L43: &[Term] = &[t(1, 2, 3), t(1, 3, 4)];
const L55: &[Term] = &[t(1, 2, 3), t(1, 3, 5), t(2, 4, 5)];
const L58: &[Term] = &[t(1, 2, 4), t(1, 3, 5)];
const L622: &[Term] = &[t(1, 2, 5), t(1, 3, 6), tp(2, 4, 6, 0, 1), t(3, 4, 5)];
const L56: &[Term] = &[t(1, 2, 3), t(1, 3, 4), t(1, 4, 5), t(2, 3, 5)];
const L57: &[Term] = &[t(1, 2, 3), t(1, 3, 4), t(1, 4, 5)];
const L59: &[Term] = &[t(1, 2, 3), t(1, 3, 4), t(2, 3, 5)];
const S147A: [Term; 5] = [t(1, 2, 4), t(1, 3, 5), t(1, 6, 7), t(2, 5, 7), t(3, 4, 7)];
const S37A_MOVED: [Term; 3] = [t(1, 2, 5), t(2, 3, 6), t(2, 4, 8)];
const S37A: [Term; 3] = [t(1, 2, 5), t(2, 3, 6), t(2, 4, 7)];

static ENTRIES: &[CatalogEntry] = &[
    // dim L² = 2, n <= 6
    table("L_{4,3}", Derived2, 4, L43),
    table("L_{5,3}", Derived2, 5, L43).alias("L_{4,3}⊕A(1)"),
    table("L_{5,5}", Derived2, 5, L55),
    table("L_{5,8}", Derived2, 5, L58),
    table("L_{6,3}", Derived2, 6, L43).alias("L_{4,3}⊕A(2)"),
    table("L_{6,5}", Derived2, 6, L55).alias("L_{5,5}⊕A(1)"),
    table("L_{6,8}", Derived2, 6, L58).alias("L_{5,8}⊕A(1)"),
    table(
        "L_{6,10}",
        Derived2,
        6,
        &[t(1, 2, 3), t(1, 3, 6), t(4, 5, 6)],
    )
    .expect(10, 6, 5)
    .capable(false),
    table("L_{6,22}", Derived2, 6, L622).param(Any),
    // dim L² = 2, n = 7
    sum("L_{6,3}⊕A(1)", Derived2Dim7, &["L_{6,3}", "A(1)"]).capable(true),
    sum("L_{6,5}⊕A(1)", Derived2Dim7, &["L_{6,5}", "A(1)"]).capable(true),
    sum("L_{6,8}⊕A(1)", Derived2Dim7, &["L_{6,8}", "A(1)"]).capable(true),
    sum("L_{6,22}⊕A(1)", Derived2Dim7, &["L_{6,22}", "A(1)"])
        .param(Any)
        .capable(true),
    sum("L_{6,10}⊕A(1)", Derived2Dim7, &["L_{6,10}", "A(1)"])
        .expect(10, 10, 6)
        .capable(false),
    table(
        "27A",
        Derived2Dim7,
        7,
        &[t(1, 2, 6), t(1, 4, 7), t(3, 5, 7)],
    )
    .expect(10, 10, 6)
    .capable(false),
    table(
        "27B",
        Derived2Dim7,
        7,
        &[t(1, 2, 6), t(3, 4, 6), t(1, 5, 7), t(2, 3, 7)],
    )
    .capable(true),
    table(
        "157",
        Derived2Dim7,
        7,
        &[t(1, 2, 3), t(1, 3, 7), t(2, 4, 7), t(5, 6, 7)],
    )
    .expect(10, 10, 6)
    .capable(false),
    // dim L² = 3, n <= 6
    table("L_{5,6}", Derived3, 5, L56).expect(7, 3, 4),
    table("L_{5,7}", Derived3, 5, L57).expect(7, 3, 4),
    table("L_{5,9}", Derived3, 5, L59).expect(7, 3, 4),
    table("L_{6,6}", Derived3, 6, L56)
        .alias("L_{5,6}⊕A(1)")
        .expect(7, 5, 6),
    table("L_{6,7}", Derived3, 6, L57)
        .alias("L_{5,7}⊕A(1)")
        .expect(7, 5, 6),
    table("L_{6,9}", Derived3, 6, L59)
        .alias("L_{5,9}⊕A(1)")
        .expect(7, 5, 6),
    table(
        "L_{6,11}",
        Derived3,
        6,
        &[t(1, 2, 3), t(1, 3, 4), t(1, 4, 6), t(2, 3, 6), t(2, 5, 6)],
    )
    .expect(7, 5, 6),
    table(
        "L_{6,12}",
        Derived3,
        6,
        &[t(1, 2, 3), t(1, 3, 4), t(1, 4, 6), t(2, 5, 6)],
    )
    .expect(7, 5, 6),
    table(
        "L_{6,13}",
        Derived3,
        6,
        &[t(1, 2, 3), t(1, 3, 5), t(2, 4, 5), t(1, 5, 6), t(3, 4, 6)],
    )
    .expect(7, 4, 7),
    table(
        "L_{6,19}",
        Derived3,
        6,
        &[
            t(1, 2, 4),
            t(1, 3, 5),
            t(1, 5, 6),
            t(2, 4, 6),
            tp(3, 5, 6, 0, 1),
        ],
    )
    .param(NonZero)
    .expect(7, 5, 6),
    table(
        "L_{6,20}",
        Derived3,
        6,
        &[t(1, 2, 4), t(1, 3, 5), t(1, 5, 6), t(2, 4, 6)],
    )
    .expect(7, 5, 6),
    table(
        "L_{6,23}",
        Derived3,
        6,
        &[t(1, 2, 3), t(1, 3, 5), t(2, 4, 5), t(1, 4, 6)],
    )
    .expect(7, 6, 5),
    table(
        "L_{6,24}",
        Derived3,
        6,
        &[
            t(1, 2, 3),
            t(1, 3, 5),
            t(2, 4, 5),
            tp(1, 4, 6, 0, 1),
            t(2, 3, 6),
        ],
    )
    .param(Any)
    .expect(7, 5, 6),
    table(
        "L_{6,25}",
        Derived3,
        6,
        &[t(1, 2, 3), t(1, 3, 5), t(1, 4, 6)],
    )
    .expect(7, 6, 5),
    table(
        "L_{6,26}",
        Derived3,
        6,
        &[t(1, 2, 4), t(1, 3, 5), t(2, 3, 6)],
    )
    .expect(7, 8, 3),
    // dim L² = 3, n = 7
    table("37A", Derived3Dim7, 7, &S37A).expect(8, 12, 4),
    table(
        "37B",
        Derived3Dim7,
        7,
        &[t(1, 2, 5), t(2, 3, 6), t(3, 4, 7)],
    )
    .expect(8, 11, 5),
    table(
        "37C",
        Derived3Dim7,
        7,
        &[t(1, 2, 5), t(3, 4, 5), t(2, 3, 6), t(2, 4, 7)],
    )
    .expect(8, 11, 5),
    table(
        "37D",
        Derived3Dim7,
        7,
        &[t(1, 2, 5), t(3, 4, 5), t(1, 3, 6), t(2, 4, 7)],
    )
    .expect(8, 11, 5),
    table(
        "257A",
        Derived3Dim7,
        7,
        &[t(1, 2, 3), t(1, 3, 6), t(2, 4, 6), t(1, 5, 7)],
    )
    .expect(8, 9, 7),
    table(
        "257B",
        Derived3Dim7,
        7,
        &[t(1, 2, 3), t(1, 3, 6), t(1, 4, 7), t(2, 5, 7)],
    )
    .expect(8, 8, 8),
    table(
        "257C",
        Derived3Dim7,
        7,
        &[t(1, 2, 3), t(1, 3, 6), t(2, 4, 6), t(2, 5, 7)],
    )
    .expect(8, 9, 7),
    table(
        "257D",
        Derived3Dim7,
        7,
        &[t(1, 2, 3), t(1, 3, 6), t(2, 4, 6), t(1, 4, 7), t(2, 5, 7)],
    )
    .expect(8, 8, 8),
    table(
        "257E",
        Derived3Dim7,
        7,
        &[t(1, 2, 3), t(1, 3, 6), t(4, 5, 6), t(2, 4, 7)],
    )
    .expect(8, 8, 8),
    table(
        "257F",
        Derived3Dim7,
        7,
        &[t(1, 2, 3), t(2, 3, 6), t(4, 5, 6), t(2, 4, 7)],
    )
    .expect(8, 9, 7),
    table(
        "257G",
        Derived3Dim7,
        7,
        &[t(1, 2, 3), t(1, 3, 6), t(4, 5, 6), t(1, 5, 7), t(2, 4, 7)],
    )
    .expect(8, 8, 8),
    table(
        "257H",
        Derived3Dim7,
        7,
        &[t(1, 2, 3), t(1, 3, 6), t(2, 4, 6), t(4, 5, 7)],
    )
    .expect(8, 8, 8),
    table(
        "257I",
        Derived3Dim7,
        7,
        &[t(1, 2, 3), t(1, 3, 6), t(1, 4, 6), t(1, 5, 7), t(2, 3, 7)],
    )
    .expect(8, 8, 8),
    table(
        "257J",
        Derived3Dim7,
        7,
        &[t(1, 2, 3), t(1, 3, 6), t(2, 4, 6), t(1, 5, 7), t(2, 3, 7)],
    )
    .expect(8, 8, 8),
    table(
        "257K",
        Derived3Dim7,
        7,
        &[t(1, 2, 3), t(1, 3, 6), t(2, 3, 7), t(4, 5, 7)],
    )
    .expect(8, 8, 8),
    table(
        "257L",
        Derived3Dim7,
        7,
        &[t(1, 2, 3), t(1, 3, 6), t(2, 4, 6), t(2, 3, 7), t(4, 5, 7)],
    )
    .expect(8, 8, 8),
    table("147A", Derived3Dim7, 7, &S147A).expect(8, 8, 8),
    table(
        "147B",
        Derived3Dim7,
        7,
        &[t(1, 2, 4), t(1, 3, 5), t(1, 4, 7), t(2, 6, 7), t(3, 5, 7)],
    )
    .expect(8, 8, 8),
    table(
        "1457A",
        Derived3Dim7,
        7,
        &[t(1, 2, 3), t(1, 3, 4), t(1, 4, 7), t(5, 6, 7)],
    )
    .expect(8, 6, 10),
    table(
        "1457B",
        Derived3Dim7,
        7,
        &[t(1, 2, 3), t(1, 3, 4), t(1, 4, 7), t(2, 3, 7), t(5, 6, 7)],
    )
    .expect(8, 6, 10),
    table(
        "137A",
        Derived3Dim7,
        7,
        &[t(1, 2, 5), t(1, 5, 7), t(3, 6, 7), t(3, 4, 6)],
    )
    .expect(8, 7, 9),
    table(
        "137B",
        Derived3Dim7,
        7,
        &[t(1, 2, 5), t(3, 4, 6), t(1, 5, 7), t(2, 4, 7), t(3, 6, 7)],
    )
    .expect(8, 7, 9),
    table(
        "137C",
        Derived3Dim7,
        7,
        &[
            t(1, 2, 5),
            t(1, 4, 6),
            t(2, 3, 6),
            t(1, 6, 7),
            tc(3, 5, 7, -1),
        ],
    )
    .expect(8, 7, 9),
    table(
        "137D",
        Derived3Dim7,
        7,
        &[
            t(1, 2, 5),
            t(1, 4, 6),
            t(2, 3, 6),
            t(1, 6, 7),
            t(2, 4, 7),
            tc(3, 5, 7, -1),
        ],
    )
    .expect(8, 7, 9),
    table(
        "1357A",
        Derived3Dim7,
        7,
        &[
            t(1, 2, 4),
            t(1, 4, 5),
            t(2, 3, 5),
            t(1, 5, 7),
            t(2, 6, 7),
            tc(3, 4, 7, -1),
        ],
    )
    .expect(8, 7, 9),
    table(
        "1357B",
        Derived3Dim7,
        7,
        &[
            t(1, 2, 4),
            t(1, 4, 5),
            t(2, 3, 5),
            t(1, 5, 7),
            t(3, 6, 7),
            tc(3, 4, 7, -1),
        ],
    )
    .expect(8, 6, 10),
    table(
        "1357C",
        Derived3Dim7,
        7,
        &[
            t(1, 2, 4),
            t(1, 4, 5),
            t(2, 3, 5),
            t(1, 5, 7),
            t(2, 4, 7),
            tc(3, 4, 7, -1),
            t(3, 6, 7),
        ],
    )
    .repaired("printed row never brackets x6, leaving it central outside L^2; added [x3,x6]=x7")
    .expect(8, 6, 10),
    // dim L² = 3, decomposable
    sum("L_{4,3}⊕H(1)", Derived3Decomposable, &["L_{4,3}", "H(1)"]).expect(8, 8, 8),
    sum("L_{5,6}⊕A(2)", Derived3Decomposable, &["L_{5,6}", "A(2)"]).expect(8, 8, 8),
    sum("L_{5,7}⊕A(2)", Derived3Decomposable, &["L_{5,7}", "A(2)"]).expect(8, 8, 8),
    sum("L_{5,9}⊕A(2)", Derived3Decomposable, &["L_{5,9}", "A(2)"]).expect(8, 8, 8),
    sum("L_{6,11}⊕A(1)", Derived3Decomposable, &["L_{6,11}", "A(1)"]).expect(8, 8, 8),
    sum("L_{6,12}⊕A(1)", Derived3Decomposable, &["L_{6,12}", "A(1)"]).expect(8, 8, 8),
    sum("L_{6,13}⊕A(1)", Derived3Decomposable, &["L_{6,13}", "A(1)"]).expect(8, 7, 9),
    sum("L_{6,19}⊕A(1)", Derived3Decomposable, &["L_{6,19}", "A(1)"])
        .param(NonZero)
        .expect(8, 8, 8),
    sum("L_{6,20}⊕A(1)", Derived3Decomposable, &["L_{6,20}", "A(1)"]).expect(8, 8, 8),
    sum("L_{6,23}⊕A(1)", Derived3Decomposable, &["L_{6,23}", "A(1)"]).expect(8, 9, 7),
    sum("L_{6,24}⊕A(1)", Derived3Decomposable, &["L_{6,24}", "A(1)"])
        .param(Any)
        .expect(8, 8, 8),
    sum("L_{6,25}⊕A(1)", Derived3Decomposable, &["L_{6,25}", "A(1)"]).expect(8, 9, 7),
    sum("L_{6,26}⊕A(1)", Derived3Decomposable, &["L_{6,26}", "A(1)"]).expect(8, 11, 5),
    // dim L² = 4, n = 6
    table(
        "L_{6,14}",
        Derived4,
        6,
        &[
            t(1, 2, 3),
            t(1, 3, 4),
            t(1, 4, 5),
            t(2, 3, 5),
            t(2, 5, 6),
            tc(3, 4, 6, -1),
        ],
    )
    .expect(9, 2, 9),
    table(
        "L_{6,15}",
        Derived4,
        6,
        &[
            t(1, 2, 3),
            t(1, 3, 4),
            t(1, 4, 5),
            t(2, 3, 5),
            t(1, 5, 6),
            t(2, 4, 6),
        ],
    )
    .repaired(
        "printed row repeats the L_{6,16} brackets; standard classification presentation used",
    )
    .expect(9, 3, 8),
    table(
        "L_{6,16}",
        Derived4,
        6,
        &[
            t(1, 2, 3),
            t(1, 3, 4),
            t(1, 4, 5),
            t(2, 5, 6),
            tc(3, 4, 6, -1),
        ],
    )
    .expect(9, 2, 9),
    table(
        "L_{6,17}",
        Derived4,
        6,
        &[t(1, 2, 3), t(1, 3, 4), t(1, 4, 5), t(1, 5, 6), t(2, 3, 6)],
    )
    .expect(9, 3, 8),
    table(
        "L_{6,18}",
        Derived4,
        6,
        &[t(1, 2, 3), t(1, 3, 4), t(1, 4, 5), t(1, 5, 6)],
    )
    .expect(9, 3, 8),
    table(
        "L_{6,21}",
        Derived4,
        6,
        &[
            t(1, 2, 3),
            t(1, 3, 4),
            t(2, 3, 5),
            t(1, 4, 6),
            tp(2, 5, 6, 0, 1),
        ],
    )
    .param(NonZero)
    .expect(9, 4, 7),
    // algebras built in classification arguments
    CatalogEntry {
        name: "L_{6,10}∔H(1)",
        group: Construction,
        param: ParamDomain::None,
        recipe: Recipe::CentralProduct {
            a: "L_{6,10}",
            b: "H(1)",
            identify: &[(6, 3)],
        },
        provenance: Provenance::Constructed,
        alias_of: None,
        expected: None,
        expected_capable: None,
    },
    sum("H(1)⊕H(2)", Construction, &["H(1)", "H(2)"]),
    table(
        "S1",
        Construction,
        8,
        &[t(1, 2, 6), t(1, 4, 8), t(3, 5, 8), t(2, 7, 8)],
    ),
    table(
        "357A",
        Construction,
        7,
        &[t(1, 2, 3), t(1, 3, 5), t(1, 4, 7), t(2, 4, 6)],
    ),
    table(
        "247N",
        Construction,
        7,
        &[t(1, 2, 4), t(1, 3, 5), t(1, 5, 6), t(2, 3, 7), t(2, 4, 6)],
    ),
    table(
        "147D",
        Construction,
        7,
        &[
            t(1, 2, 4),
            tc(1, 3, 6, -1),
            t(1, 5, 7),
            t(1, 6, 7),
            t(2, 3, 5),
            t(2, 6, 7),
            tc(3, 4, 7, -2),
        ],
    ),
    table(
        "147E",
        Construction,
        7,
        &[
            t(1, 2, 4),
            tc(1, 3, 6, -1),
            tc(1, 5, 7, -1),
            t(2, 3, 5),
            tp(2, 6, 7, 0, 1),
            tp(3, 4, 7, 1, -1),
        ],
    )
    .param(NotZeroOrOne),
    table(
        "147F",
        Construction,
        7,
        &[
            t(1, 2, 4),
            tc(1, 3, 6, -1),
            t(1, 5, 7),
            t(1, 6, 7),
            t(2, 3, 5),
            t(2, 4, 7),
            t(2, 6, 7),
            tc(3, 4, 7, -2),
        ],
    )
    .repaired("printed [x3,x4]=x7 fails Jacobi on (x1,x2,x3); coefficient -2 restores it"),
    // extensions whose multipliers are quoted
    table(
        "37A.x1x7",
        Fixture,
        8,
        &[S37A_MOVED[0], S37A_MOVED[1], S37A_MOVED[2], t(1, 7, 8)],
    ),
    table(
        "37A.x3x7",
        Fixture,
        8,
        &[S37A_MOVED[0], S37A_MOVED[1], S37A_MOVED[2], t(3, 7, 8)],
    ),
    table(
        "37A.x4x7",
        Fixture,
        8,
        &[S37A_MOVED[0], S37A_MOVED[1], S37A_MOVED[2], t(4, 7, 8)],
    ),
    table(
        "37A.x1x3",
        Fixture,
        8,
        &[S37A[0], S37A[1], S37A[2], t(1, 3, 8)],
    ),
    table(
        "37A.x1x4",
        Fixture,
        8,
        &[S37A[0], S37A[1], S37A[2], t(1, 4, 8)],
    ),
    table(
        "37A.x3x4",
        Fixture,
        8,
        &[S37A[0], S37A[1], S37A[2], t(3, 4, 8)],
    ),
    table(
        "147A.x6x8",
        Fixture,
        8,
        &[S147A[0], S147A[1], S147A[2], S147A[3], S147A[4], t(6, 8, 7)],
    ),
    table(
        "L_{5,8}.x6x8",
        Fixture,
        8,
        &[t(1, 2, 4), t(1, 3, 5), t(6, 8, 7)],
    ),
];

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

fn index() -> &'static BTreeMap<String, usize> {
    static INDEX: OnceLock<BTreeMap<String, usize>> = OnceLock::new();
    INDEX.get_or_init(|| {
        let mut m = BTreeMap::new();
        for (i, e) in ENTRIES.iter().enumerate() {
            let prev = m.insert(normalize(e.name).expect("catalog names normalize").key, i);
            assert!(prev.is_none(), "duplicate catalog name {}", e.name);
        }
        m
    })
}

/// A normalized name: canonical key plus an optional trailing parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedName {
    pub key: String,
    pub param: Option<Scalar>,
}

/// Canonical spelling of one summand: `L_{a,b}`, `A(n)`, `H(m)` or the
/// upper-cased name itself.
fn canonical_part(part: &str) -> Result<(String, Option<Scalar>)> {
    let bad = || Error::UnknownName(part.to_owned());
    let (body, param) = match part.find('(') {
        Some(open) if part.ends_with(')') => {
            let head = &part[..open];
            let inner = &part[open + 1..part.len() - 1];
            if matches!(head, "A" | "H") {
                (part.to_owned(), None)
            } else {
                (
                    head.to_owned(),
                    Some(parse_rational(inner).map_err(|_| bad())?),
                )
            }
        }
        Some(_) => return Err(bad()),
        None => (part.to_owned(), None),
    };
    if let Some((head, tail)) = body.split_once('.') {
        // Fixture names keep their lower-case basis labels.
        let (h, _) = canonical_part(head)?;
        if tail.is_empty() || !tail.chars().all(|c| c.is_ascii_alphanumeric()) {
            return Err(bad());
        }
        return Ok((format!("{h}.{}", tail.to_lowercase()), param));
    }
    let upper = body.to_uppercase();
    for (letter, open, close) in [('A', "(", ")"), ('H', "(", ")")] {
        if let Some(rest) = upper.strip_prefix(letter) {
            let digits = rest.trim_start_matches('(').trim_end_matches(')');
            if !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit()) {
                let n: usize = digits.parse().map_err(|_| bad())?;
                return Ok((format!("{letter}{open}{n}{close}"), param));
            }
        }
    }
    if let Some(rest) = upper.strip_prefix('L') {
        let nums: Vec<&str> = rest
            .split(|c: char| !c.is_ascii_digit())
            .filter(|s| !s.is_empty())
            .collect();
        let is_subscripted = nums.len() == 2
            && rest
                .chars()
                .all(|c| c.is_ascii_digit() || "_{},".contains(c));
        if is_subscripted {
            return Ok((format!("L_{{{},{}}}", nums[0], nums[1]), param));
        }
    }
    if upper.is_empty() || !upper.chars().all(|c| c.is_ascii_alphanumeric()) {
        return Err(bad());
    }
    Ok((upper, param))
}

pub fn normalize(name: &str) -> Result<ParsedName> {
    let compact: String = name
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '⊕' => '+',
            '∔' => '*',
            other => other,
        })
        .collect();
    if compact.is_empty() {
        return Err(Error::UnknownName(name.to_owned()));
    }
    let mut key = String::new();
    let mut param = None;
    let mut start = 0;
    let bytes: Vec<char> = compact.chars().collect();
    let mut depth = 0;
    let mut parts = Vec::new();
    for (i, &c) in bytes.iter().enumerate() {
        match c {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            '+' | '*' if depth == 0 => {
                parts.push((bytes[start..i].iter().collect::<String>(), Some(c)));
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push((bytes[start..].iter().collect::<String>(), None));
    for (part, sep) in parts {
        let (k, p) = canonical_part(&part)?;
        if let Some(p) = p {
            if param.replace(p).is_some() {
                return Err(Error::UnknownName(name.to_owned()));
            }
        }
        key.push_str(&k);
        if let Some(s) = sep {
            key.push(s);
        }
    }
    Ok(ParsedName { key, param })
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry> {
    let parsed = normalize(name)?;
    index()
        .get(&parsed.key)
        .map(|&i| &ENTRIES[i])
        .ok_or_else(|| Error::UnknownName(name.to_owned()))
}

/// Build a named algebra. `param` overrides a parameter written in the name.
pub fn get(name: &str, param: Option<&Scalar>) -> Result<LieAlgebra> {
    let parsed = normalize(name)?;
    let p = param.cloned().or(parsed.param);
    if let Some(&i) = index().get(&parsed.key) {
        return ENTRIES[i].build(p.as_ref());
    }
    if let Some(n) = parsed
        .key
        .strip_prefix("A(")
        .and_then(|r| r.strip_suffix(')'))
    {
        if let Ok(n) = n.parse() {
            return Ok(abelian(n));
        }
    }
    if let Some(m) = parsed
        .key
        .strip_prefix("H(")
        .and_then(|r| r.strip_suffix(')'))
    {
        if let Ok(m) = m.parse::<usize>() {
            if m == 0 {
                return Err(Error::ParamOutOfDomain {
                    name: "H".into(),
                    detail: "H(m) needs m >= 1".into(),
                });
            }
            return Ok(heisenberg(m));
        }
    }
    if parsed.key.contains('+') {
        let mut acc = LieAlgebra::abelian(0);
        let mut names = Vec::new();
        for part in split_sum(&parsed.key) {
            let l = get(&part, p.as_ref())?;
            names.push(l.name().unwrap_or(&part).to_owned());
            acc = LieAlgebra::direct_sum(&acc, &l);
        }
        return Ok(acc.with_name(names.join("⊕")));
    }
    Err(Error::UnknownName(name.to_owned()))
}

/// Split a canonical key on top-level `+`, keeping registered central
/// products (`a*b`) together.
fn split_sum(key: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for c in key.chars() {
        match c {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            _ => {}
        }
        if c == '+' && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    out.push(cur);
    out
}

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(n)
}

pub fn heisenberg(m: usize) -> LieAlgebra {
    LieAlgebra::heisenberg(m)
}

#[derive(Clone, Debug, Default)]
pub struct Filter {
    pub dim: Option<usize>,
    pub max_dim: Option<usize>,
    pub dim_derived: Option<usize>,
    pub group: Option<Group>,
    /// Reference multiplier table id (7 to 10).
    pub table: Option<u8>,
}

/// Entries matching every set field, in catalog order. Dimension filters use
/// the default parameter.
pub fn all_entries(filter: &Filter) -> Vec<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .filter(|e| filter.group.is_none_or(|g| e.group == g))
        .filter(|e| {
            filter
                .table
                .is_none_or(|t| e.expected.is_some_and(|x| x.table == t))
        })
        .filter(|e| {
            if filter.dim.is_none() && filter.max_dim.is_none() && filter.dim_derived.is_none() {
                return true;
            }
            let l = e.build(None).expect("catalog entries build");
            filter.dim.is_none_or(|d| l.dim() == d)
                && filter.max_dim.is_none_or(|d| l.dim() <= d)
                && filter.dim_derived.is_none_or(|m| l.derived().dim() == m)
        })
        .collect()
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    #[test]
    fn name_spellings() {
        for s in ["L_{6,22}", "L6_22", "l6,22", "L_6_22"] {
            assert_eq!(normalize(s).unwrap().key, "L_{6,22}");
        }
        assert_eq!(normalize("L6_10 ⊕ A(1)").unwrap().key, "L_{6,10}+A(1)");
        assert_eq!(normalize("L6_10+A1").unwrap().key, "L_{6,10}+A(1)");
        assert_eq!(normalize("L_{6,10}∔H(1)").unwrap().key, "L_{6,10}*H(1)");
        let p = normalize("L6_22(-1/2)+A(1)").unwrap();
        assert_eq!(p.key, "L_{6,22}+A(1)");
        assert_eq!(p.param, Some(ratio(-1, 2)));
        assert_eq!(normalize("s1").unwrap().key, "S1");
        assert_eq!(normalize("37a.X1X7").unwrap().key, "37A.x1x7");
    }

    #[test]
    fn get_examples() {
        let l = get("L_{5,5}", None).unwrap();
        assert_eq!(l.dim(), 5);
        assert_eq!(l.brackets().len(), 3);
        let s1 = get("S1", None).unwrap();
        assert_eq!(s1.dim(), 8);
        assert_eq!(s1.brackets().len(), 4);
        assert!(matches!(
            get("L_{6,21}", Some(&int(0))),
            Err(Error::ParamOutOfDomain { .. })
        ));
        assert!(matches!(
            get("147E", Some(&int(1))),
            Err(Error::ParamOutOfDomain { .. })
        ));
        assert!(matches!(get("L_{9,9}", None), Err(Error::UnknownName(_))));
        assert_eq!(
            get("L_{6,22}(2)", None).unwrap().name(),
            Some("L_{6,22}(2)")
        );
        assert_eq!(get("A(0)", None).unwrap().dim(), 0);
    }

    #[test]
    fn constructors() {
        let h1 = heisenberg(1);
        assert_eq!((h1.dim(), h1.brackets().len()), (3, 1));
        let h2 = heisenberg(2);
        assert_eq!(h2.dim(), 5);
        assert_eq!(h2.center().dim(), 1);
        assert_eq!(crate::multiplier::dim_multiplier(&h2), 5);
        assert_eq!(abelian(0).dim(), 0);
    }

    #[test]
    fn every_entry_loads_for_every_sample() {
        for e in entries() {
            if e.is_parameterized() {
                for p in e.param.samples() {
                    e.build(Some(&p))
                        .unwrap_or_else(|err| panic!("{} ({p}): {err}", e.name));
                }
            } else {
                e.build(None)
                    .unwrap_or_else(|err| panic!("{}: {err}", e.name));
            }
        }
    }

    #[test]
    fn aliases_equal_their_sums() {
        for e in entries() {
            if let Some(of) = e.alias_of {
                let a = e.build(None).unwrap();
                let b = get(of, None).unwrap();
                assert_eq!(a.brackets(), b.brackets(), "{} vs {of}", e.name);
                assert_eq!(a.dim(), b.dim());
            }
        }
    }

    #[test]
    fn group_shapes() {
        let shape = |g: Group| -> Vec<(usize, usize)> {
            all_entries(&Filter {
                group: Some(g),
                ..Filter::default()
            })
            .into_iter()
            .map(|e| {
                let l = e.build(None).unwrap();
                (l.dim(), l.derived().dim())
            })
            .collect()
        };
        assert!(shape(Derived2).iter().all(|&(n, m)| n <= 6 && m == 2));
        assert!(shape(Derived2Dim7).iter().all(|&s| s == (7, 2)));
        assert!(shape(Derived3).iter().all(|&(n, m)| n <= 6 && m == 3));
        assert!(shape(Derived3Dim7).iter().all(|&s| s == (7, 3)));
        assert!(shape(Derived3Decomposable).iter().all(|&(_, m)| m == 3));
        assert!(shape(Derived4).iter().all(|&s| s == (6, 4)));
    }

    #[test]
    fn filters() {
        let small = all_entries(&Filter {
            dim_derived: Some(2),
            max_dim: Some(6),
            ..Filter::default()
        });
        let names: Vec<_> = small.iter().map(|e| e.name).collect();
        let group: Vec<_> = all_entries(&Filter {
            group: Some(Derived2),
            ..Filter::default()
        })
        .iter()
        .map(|e| e.name)
        .collect();
        assert_eq!(names, group);
        assert_eq!(
            all_entries(&Filter {
                table: Some(9),
                ..Filter::default()
            })
            .len(),
            6
        );
        assert!(all_entries(&Filter::default()).len() >= 60);
    }

    #[test]
    fn on_the_fly_sums() {
        let l = get("L5_8+A3", None).unwrap();
        assert_eq!(l.dim(), 8);
        assert_eq!(l.name(), Some("L_{5,8}⊕A(3)"));
        let l = get("L_{6,10}∔H(1)+A(1)", None).unwrap();
        assert_eq!(l.dim(), 9);
        assert_eq!(get("H(1)⊕H(2)", None).unwrap().dim(), 8);
    }
}
