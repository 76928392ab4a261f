//! Line-oriented text format for DFAs.
//!
//! ```text
//! # comment
//! states: 4
//! alphabet: a b
//! initial: 0
//! final: 3
//! a: 1 2 3 1
//! b: 2 2 1 3
//! ```
//!
//! Letter lines list the image of every state in order. Anything after `#`
//! is ignored. [`print`] writes letters in alphabet order, so
//! `parse(print(d)) == d` structurally.

use std::fmt::Write;

use super::{Dfa, DfaBuilder};
use crate::{Error, Result};

pub fn print(d: &Dfa) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "states: {}", d.states());
    let _ = writeln!(out, "alphabet:{}", spaced(d.alphabet().names()));
    let _ = writeln!(out, "initial: {}", d.initial());
    let _ = writeln!(out, "final:{}", spaced(d.finals()));
    for (c, l) in d.alphabet().iter().enumerate() {
        let images = (0..d.states()).map(|q| d.next(q, c));
        let _ = writeln!(out, "{l}:{}", spaced(images));
    }
    out
}

fn spaced<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| format!(" {}", x.to_string())).collect()
}

pub fn parse(input: &str) -> Result<Dfa> {
    let mut states: Option<usize> = None;
    let mut alphabet: Option<Vec<String>> = None;
    let mut initial: Option<usize> = None;
    let mut finals: Option<Vec<usize>> = None;
    let mut rows: Vec<(usize, String, Vec<usize>)> = Vec::new();

    for (i, raw) in input.lines().enumerate() {
        let line_no = i + 1;
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| err(format!("expected `key: value`, found `{line}`")))?;
        let key = key.trim();
        let fields: Vec<&str> = rest.split_whitespace().collect();
        let numbers = |fields: &[&str]| -> Result<Vec<usize>> {
            fields
                .iter()
                .map(|f| f.parse::<usize>().map_err(|_| err(format!("`{f}` is not a state index"))))
                .collect()
        };
        match key {
            "states" => {
                let v = numbers(&fields)?;
                if v.len() != 1 {
                    return Err(err("`states` takes one number".into()));
                }
                states = Some(v[0]);
            }
            "alphabet" => alphabet = Some(fields.iter().map(|s| s.to_string()).collect()),
            "initial" => {
                let v = numbers(&fields)?;
                if v.len() != 1 {
                    return Err(err("`initial` takes one state".into()));
                }
                initial = Some(v[0]);
            }
            "final" | "finals" => finals = Some(numbers(&fields)?),
            letter => rows.push((line_no, letter.to_string(), numbers(&fields)?)),
        }
    }

    let missing = |what: &str| Error::Parse {
        line: 0,
        message: format!("missing `{what}` line"),
    };
    let n = states.ok_or_else(|| missing("states"))?;
    let alphabet = alphabet.ok_or_else(|| missing("alphabet"))?;
    let mut b = DfaBuilder::new(n)
        .initial(initial.ok_or_else(|| missing("initial"))?)
        .finals(finals.unwrap_or_default());
    for l in &alphabet {
        b = b.letter(l);
    }
    for (line, letter, images) in rows {
        if !alphabet.contains(&letter) {
            return Err(Error::Parse {
                line,
                message: format!("letter `{letter}` is not in the alphabet"),
            });
        }
        if images.len() != n {
            return Err(Error::Parse {
                line,
                message: format!("letter `{letter}` lists {} images, expected {n}", images.len()),
            });
        }
        b = b.images(&letter, &images);
    }
    b.build()
}
