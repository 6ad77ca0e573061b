//! A small language for presentations of Hopf superalgebras, a rewriting
//! compiler to structure constants, and the builtin catalogue.
//!
//! ```text
//! hopf Lambda1 over Q(zeta8)
//! gen z odd
//! rel z*z = 0
//! basis 1, z
//! delta z = z (x) 1 + 1 (x) z
//! counit z = 0
//! antipode z = -z
//! ```
//!
//! Beyond the core statements, `let NAME = EXPR` binds an element,
//! `unit = EXPR` gives the unit when the empty word is not a basis word, and
//! `label WORD "text"` sets a display label.

pub mod builtins;
mod compile;
mod lexer;
mod parser;
mod render;

use std::collections::BTreeMap;

use crate::cyclo::Cyclo;

pub use builtins::{a_plus_table, builtin, builtin_names, builtin_source, builtin_spec, builtin_spec_source, s3_elements, Param};
pub use compile::{compile, Compiled};
pub use lexer::{lex, Tok, Token};
pub use parser::parse;
pub use render::render;

/// Word in the generators, by generator index.
pub type Word = Vec<usize>;
/// Noncommutative polynomial.
pub type Poly = BTreeMap<Word, Cyclo>;
/// Element of the tensor square of the free algebra.
pub type TensorPoly = BTreeMap<(Word, Word), Cyclo>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub parity: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Poly,
}

#[derive(Clone, Debug, Default)]
pub struct Presentation {
    pub name: String,
    pub conductor: u32,
    pub generators: Vec<Generator>,
    pub rules: Vec<Rule>,
    pub basis: Vec<Word>,
    pub unit: Option<Poly>,
    pub delta: BTreeMap<usize, TensorPoly>,
    pub counit: BTreeMap<usize, Cyclo>,
    pub antipode: BTreeMap<usize, Poly>,
    pub scalars: BTreeMap<String, Cyclo>,
    pub lets: BTreeMap<String, Poly>,
    pub labels: BTreeMap<Word, String>,
}

impl Presentation {
    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn word_parity(&self, w: &[usize]) -> u8 {
        w.iter().fold(0, |p, &g| p ^ self.generators[g].parity)
    }

    /// Default label of a word: names joined directly when all are single
    /// characters, with `*` otherwise; `1` for the empty word.
    pub fn word_label(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let names: Vec<&str> = w.iter().map(|&g| self.generators[g].name.as_str()).collect();
        if names.iter().all(|n| n.chars().count() == 1) {
            names.concat()
        } else {
            names.join("*")
        }
    }
}

pub(crate) fn poly_add(acc: &mut Poly, w: Word, c: Cyclo) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(w.clone()).or_default();
    *e += &c;
    if e.is_zero() {
        acc.remove(&w);
    }
}

pub(crate) fn tensor_add(acc: &mut TensorPoly, k: (Word, Word), c: Cyclo) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(k.clone()).or_default();
    *e += &c;
    if e.is_zero() {
        acc.remove(&k);
    }
}
