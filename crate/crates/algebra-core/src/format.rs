//! Line-based text format for algebra definitions.
//!
//! ```text
//! format hopf-pbw 1
//! name uq_sl2
//! order 2
//! param alpha 1
//! gen E even 0
//! gen H even 1
//! gen F even 2
//! rule H E 0
//!   E : 2, 0, 0
//! end
//! coproduct E
//!   E | 1 : 1, 0, 0
//!   1 | E : 1, -1, 1/2
//! end
//! counit E 0
//! ```
//!
//! Words are `*`-separated letters with optional `^k` exponents, or `1`.
//! A series lists all N+1 coefficients of ħ⁰ … ħᴺ.

use std::fmt::Write as _;

use scalar_series::{parse_rational, ExactScalar, HbarSeries};

use crate::algebra::{Algebra, RewriteRule};
use crate::element::Element;
use crate::monomial::Monomial;
use crate::table::{Generator, GeneratorTable, Parity};
use crate::tensor::TensorElement;
use crate::AlgebraError;

const HEADER: &str = "format hopf-pbw 1";

/// An algebra with optional Hopf data, as read from or written to a file.
#[derive(Debug, Clone)]
pub struct Definition {
    pub name: String,
    pub algebra: Algebra,
    pub coproduct: Vec<(u8, TensorElement)>,
    pub counit: Vec<(u8, ExactScalar)>,
}

fn series_text(s: &HbarSeries) -> String {
    s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn save_definition(def: &Definition) -> String {
    let alg = &def.algebra;
    let t = alg.table();
    let mut out = String::new();
    let _ = writeln!(out, "{HEADER}");
    let _ = writeln!(out, "name {}", def.name);
    let _ = writeln!(out, "order {}", alg.order());
    for (k, v) in t.params() {
        let _ = writeln!(out, "param {k} {v}");
    }
    for g in t.generators() {
        let p = if g.parity.is_odd() { "odd" } else { "even" };
        let _ = writeln!(out, "gen {} {p} {}", g.name, g.sort_key);
    }
    for r in alg.rules() {
        let _ = writeln!(out, "rule {} {} {}", t.name(r.b), t.name(r.a), r.alpha);
        for (m, c) in r.tail.terms() {
            let _ = writeln!(out, "  {} : {}", m.format(t), series_text(c));
        }
        let _ = writeln!(out, "end");
    }
    for (g, d) in &def.coproduct {
        let _ = writeln!(out, "coproduct {}", t.name(*g));
        for (s, c) in d.terms() {
            let words: Vec<String> = s.iter().map(|m| m.format(t)).collect();
            let _ = writeln!(out, "  {} : {}", words.join(" | "), series_text(c));
        }
        let _ = writeln!(out, "end");
    }
    for (g, c) in &def.counit {
        let _ = writeln!(out, "counit {} {c}", t.name(*g));
    }
    out
}

fn err(line: usize, msg: impl std::fmt::Display) -> AlgebraError {
    AlgebraError::Parse(format!("line {line}: {msg}"))
}

fn parse_series(text: &str, order: usize, line: usize) -> Result<HbarSeries, AlgebraError> {
    let coeffs: Vec<ExactScalar> =
        text.split(',').map(|c| c.trim().parse::<ExactScalar>().map_err(|e| err(line, e))).collect::<Result<_, _>>()?;
    if coeffs.len() != order + 1 {
        return Err(err(line, format!("expected {} coefficients, found {}", order + 1, coeffs.len())));
    }
    Ok(HbarSeries::from_coeffs(coeffs))
}

enum Block {
    Rule(u8, u8, scalar_series::Q, Element),
    Coproduct(u8, TensorElement),
}

pub fn load_definition(text: &str) -> Result<Definition, AlgebraError> {
    let mut lines =
        text.lines().enumerate().map(|(k, l)| (k + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, l)) if l == HEADER => {}
        Some((k, _)) => return Err(err(k, "missing header")),
        None => return Err(err(0, "empty definition")),
    }
    let mut name = String::new();
    let mut order: Option<usize> = None;
    let mut params: Vec<(String, ExactScalar)> = Vec::new();
    let mut gens = Vec::new();
    let mut table: Option<GeneratorTable> = None;
    let mut algebra: Option<Algebra> = None;
    let mut coproduct = Vec::new();
    let mut counit = Vec::new();
    let mut block: Option<Block> = None;

    for (k, line) in lines {
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        if let Some(b) = block.as_mut() {
            if line == "end" {
                match block.take().unwrap() {
                    Block::Rule(b, a, alpha, tail) => {
                        algebra.as_mut().unwrap().set_rule(RewriteRule { b, a, alpha, tail })?;
                    }
                    Block::Coproduct(g, t) => coproduct.push((g, t)),
                }
                continue;
            }
            let t = table.as_ref().unwrap();
            let n = order.unwrap();
            let (lhs, series) = line.rsplit_once(':').ok_or_else(|| err(k, "expected `word : series`"))?;
            let c = parse_series(series, n, k)?;
            match b {
                Block::Rule(_, _, _, tail) => {
                    tail.add_term(Monomial::parse(lhs, t).map_err(|e| err(k, e))?, &c);
                }
                Block::Coproduct(_, tensor) => {
                    let slots =
                        lhs.split('|')
                            .map(|w| Monomial::parse(w, t).map_err(|e| err(k, e)))
                            .collect::<Result<Vec<_>, _>>()?;
                    if slots.len() != tensor.rank() {
                        return Err(err(k, "coproduct terms must have two slots"));
                    }
                    tensor.add_term(slots, &c);
                }
            }
            continue;
        }
        // Generators end at the first rule, coproduct or counit line.
        if matches!(head, "rule" | "coproduct" | "counit") && algebra.is_none() {
            let n = order.ok_or_else(|| err(k, "order must precede rules"))?;
            let mut t = GeneratorTable::new(std::mem::take(&mut gens))?;
            for (p, v) in params.drain(..) {
                t.set_param(&p, v);
            }
            table = Some(t.clone());
            algebra = Some(Algebra::new(t, n));
        }
        match head {
            "name" => name = rest.to_string(),
            "order" => order = Some(rest.parse().map_err(|_| err(k, "bad order"))?),
            "param" => {
                let (p, v) = rest.split_once(char::is_whitespace).ok_or_else(|| err(k, "bad param"))?;
                params.push((p.to_string(), v.trim().parse::<ExactScalar>().map_err(|e| err(k, e))?));
            }
            "gen" => {
                if algebra.is_some() {
                    return Err(err(k, "generators must precede rules"));
                }
                let f: Vec<&str> = rest.split_whitespace().collect();
                if f.len() != 3 {
                    return Err(err(k, "expected `gen name parity key`"));
                }
                let parity = match f[1] {
                    "even" => Parity::Even,
                    "odd" => Parity::Odd,
                    other => return Err(err(k, format!("bad parity `{other}`"))),
                };
                let sort_key = f[2].parse().map_err(|_| err(k, "bad sort key"))?;
                gens.push(Generator { name: f[0].to_string(), parity, sort_key });
            }
            "rule" => {
                let f: Vec<&str> = rest.split_whitespace().collect();
                if f.len() != 3 {
                    return Err(err(k, "expected `rule b a alpha`"));
                }
                let t = table.as_ref().unwrap();
                let alpha = parse_rational(f[2]).map_err(|e| err(k, e))?;
                block = Some(Block::Rule(t.index(f[0])?, t.index(f[1])?, alpha, Element::zero(order.unwrap())));
            }
            "coproduct" => {
                let g = table.as_ref().unwrap().index(rest)?;
                block = Some(Block::Coproduct(g, TensorElement::zero(2, order.unwrap())));
            }
            "counit" => {
                let (g, v) = rest.split_once(char::is_whitespace).ok_or_else(|| err(k, "bad counit"))?;
                let g = table.as_ref().unwrap().index(g)?;
                counit.push((g, v.trim().parse::<ExactScalar>().map_err(|e| err(k, e))?));
            }
            other => return Err(err(k, format!("unknown directive `{other}`"))),
        }
    }
    if block.is_some() {
        return Err(err(0, "unterminated block"));
    }
    let algebra = match algebra {
        Some(a) => a,
        None => {
            let n = order.ok_or_else(|| err(0, "missing order"))?;
            let mut t = GeneratorTable::new(gens)?;
            for (p, v) in params {
                t.set_param(&p, v);
            }
            Algebra::new(t, n)
        }
    };
    Ok(Definition { name, algebra, coproduct, counit })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_input() {
        assert!(load_definition("").is_err());
        assert!(load_definition("format hopf-pbw 2\n").is_err());
        let bad = "format hopf-pbw 1\norder 1\ngen a even 0\ngen b even 1\nrule b a 0\n  a : 1\nend\n";
        assert!(load_definition(bad).is_err());
        let unknown = "format hopf-pbw 1\norder 0\ngen a even 0\nrule a z 0\nend\n";
        assert!(load_definition(unknown).is_err());
    }

    #[test]
    fn minimal_round_trip() {
        let text = "format hopf-pbw 1\nname toy\norder 1\nparam xi -1/2\ngen a even 0\ngen b odd 5\nrule b a 1/3\n  a : 0, 2i\nend\ncounit a 0\n";
        let def = load_definition(text).unwrap();
        assert_eq!(save_definition(&def), text);
    }
}
