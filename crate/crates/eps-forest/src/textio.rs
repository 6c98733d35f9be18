//! Text grammar and JSON encoding for forests, linear combinations, and
//! tensors.
//!
//! Grammar (whitespace separates sibling trees):
//! ```text
//! forest  := "1" | tree {tree}
//! tree    := label | label "(" forest ")"
//! lincomb := ["-"] term {("+" | "-") term}
//! term    := [rational "*"] forest
//! tensor  := ["-"] tterm {("+" | "-") tterm}
//! tterm   := [rational "*"] "(" lincomb ")" "#" "(" lincomb ")"
//! ```
//! Printing emits the canonical form and `parse(print(v)) = v`.

use std::fmt;

use serde_json::{json, Value};

use crate::forest::{Alphabets, Forest, Tree};
use crate::lincomb::{LinComb, Tensor2};
use crate::rat::Rat;

/// A parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: Vec<String>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at line {}, column {}: {}", self.line, self.col, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Hash,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("label `{s}`"),
            Tok::Number(s) => format!("number `{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Hash => "`#`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl Lexer {
    fn new(input: &str) -> Result<Self, ParseError> {
        let mut toks = Vec::new();
        let mut line = 1usize;
        let mut col = 1usize;
        let mut chars = input.chars().peekable();
        while let Some(&c) = chars.peek() {
            let (l, co) = (line, col);
            let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
                let c = chars.next().unwrap();
                if c == '\n' {
                    line += 1;
                    col = 1;
                } else {
                    col += 1;
                }
                c
            };
            match c {
                ' ' | '\t' | '\n' | '\r' => {
                    bump(&mut chars);
                }
                '(' => {
                    bump(&mut chars);
                    toks.push((Tok::LParen, l, co));
                }
                ')' => {
                    bump(&mut chars);
                    toks.push((Tok::RParen, l, co));
                }
                '+' => {
                    bump(&mut chars);
                    toks.push((Tok::Plus, l, co));
                }
                '-' => {
                    bump(&mut chars);
                    toks.push((Tok::Minus, l, co));
                }
                '*' => {
                    bump(&mut chars);
                    toks.push((Tok::Star, l, co));
                }
                '/' => {
                    bump(&mut chars);
                    toks.push((Tok::Slash, l, co));
                }
                '#' => {
                    bump(&mut chars);
                    toks.push((Tok::Hash, l, co));
                }
                c if c.is_ascii_digit() => {
                    let mut s = String::new();
                    while let Some(&d) = chars.peek() {
                        if d.is_ascii_digit() {
                            s.push(bump(&mut chars));
                        } else {
                            break;
                        }
                    }
                    toks.push((Tok::Number(s), l, co));
                }
                c if c.is_alphabetic() || c == '_' => {
                    let mut s = String::new();
                    while let Some(&d) = chars.peek() {
                        if d.is_alphanumeric() || d == '_' {
                            s.push(bump(&mut chars));
                        } else {
                            break;
                        }
                    }
                    toks.push((Tok::Ident(s), l, co));
                }
                other => {
                    return Err(ParseError {
                        line: l,
                        col: co,
                        expected: vec![],
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
        }
        toks.push((Tok::Eof, line, col));
        Ok(Lexer { toks, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, off: usize) -> &Tok {
        let i = (self.pos + off).min(self.toks.len() - 1);
        &self.toks[i].0
    }

    fn here(&self) -> (usize, usize) {
        (self.toks[self.pos].1, self.toks[self.pos].2)
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, expected: &[&str], message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError {
            line,
            col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            message: message.into(),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == &tok {
            self.next();
            Ok(())
        } else {
            Err(self.err(&[what], format!("found {}", self.peek().describe())))
        }
    }

    fn at_eof(&self) -> Result<(), ParseError> {
        if self.peek() == &Tok::Eof {
            Ok(())
        } else {
            Err(self.err(&["end of input"], format!("trailing {}", self.peek().describe())))
        }
    }
}

fn parse_tree(lx: &mut Lexer, alphabets: &Alphabets) -> Result<Tree, ParseError> {
    let (line, col) = lx.here();
    let label = match lx.next() {
        Tok::Ident(s) => s,
        other => {
            return Err(ParseError {
                line,
                col,
                expected: vec!["label".into()],
                message: format!("found {}", other.describe()),
            })
        }
    };
    let deco = alphabets.decoration(&label).map_err(|e| ParseError {
        line,
        col,
        expected: vec!["declared label".into()],
        message: e.to_string(),
    })?;
    if lx.peek() == &Tok::LParen {
        lx.next();
        let inner = parse_forest_body(lx, alphabets)?;
        lx.expect(Tok::RParen, "`)`")?;
        Tree::new(deco, inner.trees().to_vec()).map_err(|e| ParseError {
            line,
            col,
            expected: vec![],
            message: e.to_string(),
        })
    } else {
        Ok(Tree::leaf(deco))
    }
}

fn parse_forest_body(lx: &mut Lexer, alphabets: &Alphabets) -> Result<Forest, ParseError> {
    if lx.peek() == &Tok::Number("1".to_string()) {
        lx.next();
        return Ok(Forest::empty());
    }
    let mut trees = vec![parse_tree(lx, alphabets)?];
    while matches!(lx.peek(), Tok::Ident(_)) {
        trees.push(parse_tree(lx, alphabets)?);
    }
    Ok(Forest::from_trees(trees))
}

/// Parses a forest: `1` or whitespace-separated trees.
pub fn parse_forest(s: &str, alphabets: &Alphabets) -> Result<Forest, ParseError> {
    let mut lx = Lexer::new(s)?;
    if matches!(lx.peek(), Tok::Eof) {
        return Err(lx.err(&["forest"], "empty input"));
    }
    let f = parse_forest_body(&mut lx, alphabets)?;
    lx.at_eof()?;
    Ok(f)
}

fn parse_rational(lx: &mut Lexer) -> Result<Rat, ParseError> {
    let (line, col) = lx.here();
    let numerator = match lx.next() {
        Tok::Number(s) => s,
        other => {
            return Err(ParseError {
                line,
                col,
                expected: vec!["rational".into()],
                message: format!("found {}", other.describe()),
            })
        }
    };
    let text = if lx.peek() == &Tok::Slash {
        lx.next();
        let (l2, c2) = lx.here();
        match lx.next() {
            Tok::Number(d) => format!("{numerator}/{d}"),
            other => {
                return Err(ParseError {
                    line: l2,
                    col: c2,
                    expected: vec!["denominator".into()],
                    message: format!("found {}", other.describe()),
                })
            }
        }
    } else {
        numerator
    };
    text.parse::<Rat>().map_err(|e| ParseError {
        line,
        col,
        expected: vec!["rational".into()],
        message: e.to_string(),
    })
}

/// True when the upcoming tokens are `rational *`, i.e. a coefficient.
fn coefficient_ahead(lx: &Lexer) -> bool {
    match lx.peek() {
        Tok::Number(_) => {
            matches!(lx.peek_at(1), Tok::Star)
                || (matches!(lx.peek_at(1), Tok::Slash)
                    && matches!(lx.peek_at(2), Tok::Number(_))
                    && matches!(lx.peek_at(3), Tok::Star))
        }
        _ => false,
    }
}

fn parse_signed_terms<T>(
    lx: &mut Lexer,
    mut term: impl FnMut(&mut Lexer) -> Result<LinComb<T>, ParseError>,
) -> Result<LinComb<T>, ParseError>
where
    T: Ord + Clone,
{
    let mut sign = if lx.peek() == &Tok::Minus {
        lx.next();
        -Rat::one()
    } else {
        Rat::one()
    };
    let mut out = term(lx)?.scale(&sign);
    loop {
        sign = match lx.peek() {
            Tok::Plus => Rat::one(),
            Tok::Minus => -Rat::one(),
            _ => break,
        };
        lx.next();
        out = out.add(&term(lx)?.scale(&sign));
    }
    Ok(out)
}

fn parse_coefficient(lx: &mut Lexer) -> Result<Rat, ParseError> {
    if coefficient_ahead(lx) {
        let c = parse_rational(lx)?;
        lx.expect(Tok::Star, "`*`")?;
        Ok(c)
    } else {
        Ok(Rat::one())
    }
}

/// Parses a linear combination of forests, e.g. `3/2 * a(x) - b`.
pub fn parse_lincomb(s: &str, alphabets: &Alphabets) -> Result<LinComb<Forest>, ParseError> {
    let mut lx = Lexer::new(s)?;
    if matches!(lx.peek(), Tok::Eof) {
        return Err(lx.err(&["linear combination"], "empty input"));
    }
    // "0" is the zero combination.
    if lx.peek() == &Tok::Number("0".to_string()) && lx.peek_at(1) == &Tok::Eof {
        return Ok(LinComb::zero());
    }
    let out = parse_signed_terms(&mut lx, |lx| {
        let c = parse_coefficient(lx)?;
        let f = parse_forest_body(lx, alphabets)?;
        Ok(LinComb::term(f, c))
    })?;
    lx.at_eof()?;
    Ok(out)
}

/// Parses a linear combination of tensors, e.g. `(b x) # (1) + (b) # (a)`.
pub fn parse_tensor(s: &str, alphabets: &Alphabets) -> Result<LinComb<Tensor2<Forest>>, ParseError> {
    let mut lx = Lexer::new(s)?;
    if matches!(lx.peek(), Tok::Eof) {
        return Err(lx.err(&["tensor"], "empty input"));
    }
    if lx.peek() == &Tok::Number("0".to_string()) && lx.peek_at(1) == &Tok::Eof {
        return Ok(LinComb::zero());
    }
    let out = parse_signed_terms(&mut lx, |lx| {
        let c = parse_coefficient(lx)?;
        lx.expect(Tok::LParen, "`(`")?;
        let left = parse_signed_terms(lx, |lx| {
            let c = parse_coefficient(lx)?;
            Ok(LinComb::term(parse_forest_body(lx, alphabets)?, c))
        })?;
        lx.expect(Tok::RParen, "`)`")?;
        lx.expect(Tok::Hash, "`#`")?;
        lx.expect(Tok::LParen, "`(`")?;
        let right = parse_signed_terms(lx, |lx| {
            let c = parse_coefficient(lx)?;
            Ok(LinComb::term(parse_forest_body(lx, alphabets)?, c))
        })?;
        lx.expect(Tok::RParen, "`)`")?;
        Ok(left.tensor(&right).scale(&c))
    })?;
    lx.at_eof()?;
    Ok(out)
}

// ---------------------------------------------------------------------------
// JSON encoding.
// ---------------------------------------------------------------------------

pub const SCHEMA: &str = "eps-forest/1";

/// A schema violation, located by a JSON pointer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid document at `{pointer}`: {message}")]
pub struct JsonError {
    pub pointer: String,
    pub message: String,
}

fn jerr(pointer: &str, message: impl Into<String>) -> JsonError {
    JsonError { pointer: pointer.to_string(), message: message.into() }
}

fn tree_to_value(t: &Tree) -> Value {
    json!({
        "d": t.root().label,
        "c": t.children().iter().map(tree_to_value).collect::<Vec<_>>(),
    })
}

fn forest_to_value(f: &Forest) -> Value {
    Value::Array(f.trees().iter().map(tree_to_value).collect())
}

pub fn forest_to_json(f: &Forest) -> Value {
    json!({ "schema": SCHEMA, "forest": forest_to_value(f) })
}

pub fn lincomb_to_json(v: &LinComb<Forest>) -> Value {
    let terms: Vec<Value> = v
        .iter()
        .map(|(f, c)| json!({ "coeff": c.to_string(), "elem": forest_to_value(f) }))
        .collect();
    json!({ "schema": SCHEMA, "terms": terms })
}

pub fn tensor_to_json(v: &LinComb<Tensor2<Forest>>) -> Value {
    let terms: Vec<Value> = v
        .iter()
        .map(|(Tensor2(l, r), c)| {
            json!({
                "coeff": c.to_string(),
                "elem": { "left": forest_to_value(l), "right": forest_to_value(r) },
            })
        })
        .collect();
    json!({ "schema": SCHEMA, "terms": terms })
}

fn tree_from_value(v: &Value, alphabets: &Alphabets, pointer: &str) -> Result<Tree, JsonError> {
    let obj = v.as_object().ok_or_else(|| jerr(pointer, "expected an object"))?;
    let label = obj
        .get("d")
        .and_then(Value::as_str)
        .ok_or_else(|| jerr(&format!("{pointer}/d"), "expected a string label"))?;
    let deco = alphabets
        .decoration(label)
        .map_err(|e| jerr(&format!("{pointer}/d"), e.to_string()))?;
    let children = obj
        .get("c")
        .and_then(Value::as_array)
        .ok_or_else(|| jerr(&format!("{pointer}/c"), "expected an array of children"))?;
    let mut trees = Vec::with_capacity(children.len());
    for (i, c) in children.iter().enumerate() {
        trees.push(tree_from_value(c, alphabets, &format!("{pointer}/c/{i}"))?);
    }
    Tree::new(deco, trees).map_err(|e| jerr(&format!("{pointer}/d"), e.to_string()))
}

fn forest_from_value(v: &Value, alphabets: &Alphabets, pointer: &str) -> Result<Forest, JsonError> {
    let arr = v.as_array().ok_or_else(|| jerr(pointer, "expected an array of trees"))?;
    let mut trees = Vec::with_capacity(arr.len());
    for (i, t) in arr.iter().enumerate() {
        trees.push(tree_from_value(t, alphabets, &format!("{pointer}/{i}"))?);
    }
    Ok(Forest::from_trees(trees))
}

fn check_schema(v: &Value) -> Result<(), JsonError> {
    match v.get("schema").and_then(Value::as_str) {
        Some(SCHEMA) => Ok(()),
        Some(other) => Err(jerr("/schema", format!("unsupported schema `{other}`"))),
        None => Err(jerr("/schema", "missing schema field")),
    }
}

pub fn forest_from_json(v: &Value, alphabets: &Alphabets) -> Result<Forest, JsonError> {
    check_schema(v)?;
    let f = v.get("forest").ok_or_else(|| jerr("/forest", "missing field"))?;
    forest_from_value(f, alphabets, "/forest")
}

fn coeff_from_value(v: &Value, pointer: &str) -> Result<Rat, JsonError> {
    let s = v
        .get("coeff")
        .and_then(Value::as_str)
        .ok_or_else(|| jerr(&format!("{pointer}/coeff"), "expected a string rational"))?;
    s.parse::<Rat>().map_err(|e| jerr(&format!("{pointer}/coeff"), e.to_string()))
}

pub fn lincomb_from_json(v: &Value, alphabets: &Alphabets) -> Result<LinComb<Forest>, JsonError> {
    check_schema(v)?;
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| jerr("/terms", "expected an array of terms"))?;
    let mut out = LinComb::zero();
    for (i, t) in terms.iter().enumerate() {
        let p = format!("/terms/{i}");
        let c = coeff_from_value(t, &p)?;
        let elem = t.get("elem").ok_or_else(|| jerr(&format!("{p}/elem"), "missing field"))?;
        out.add_term(forest_from_value(elem, alphabets, &format!("{p}/elem"))?, c);
    }
    Ok(out)
}

pub fn tensor_from_json(v: &Value, alphabets: &Alphabets) -> Result<LinComb<Tensor2<Forest>>, JsonError> {
    check_schema(v)?;
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| jerr("/terms", "expected an array of terms"))?;
    let mut out = LinComb::zero();
    for (i, t) in terms.iter().enumerate() {
        let p = format!("/terms/{i}");
        let c = coeff_from_value(t, &p)?;
        let elem = t.get("elem").ok_or_else(|| jerr(&format!("{p}/elem"), "missing field"))?;
        let left = elem.get("left").ok_or_else(|| jerr(&format!("{p}/elem/left"), "missing field"))?;
        let right = elem.get("right").ok_or_else(|| jerr(&format!("{p}/elem/right"), "missing field"))?;
        out.add_term(
            Tensor2(
                forest_from_value(left, alphabets, &format!("{p}/elem/left"))?,
                forest_from_value(right, alphabets, &format!("{p}/elem/right"))?,
            ),
            c,
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabets {
        Alphabets::default_labels()
    }

    #[test]
    fn parse_forest_examples() {
        assert_eq!(parse_forest("1", &ab()).unwrap(), Forest::empty());
        assert_eq!(parse_forest("b a(x)", &ab()).unwrap().to_string(), "b a(x)");
        assert_eq!(parse_forest("w(x a(y))", &ab()).unwrap().to_string(), "w(x a(y))");
    }

    #[test]
    fn parse_errors_carry_positions() {
        // X-label with children.
        let e = parse_forest("x(y)", &ab()).unwrap_err();
        assert_eq!((e.line, e.col), (1, 1));
        // Unknown label.
        let e = parse_forest("a(q)", &ab()).unwrap_err();
        assert_eq!((e.line, e.col), (1, 3));
        // Malformed syntax.
        let e = parse_forest("a(x", &ab()).unwrap_err();
        assert_eq!((e.line, e.col), (1, 4));
        assert!(e.expected.iter().any(|s| s.contains(")")));
    }

    #[test]
    fn parse_lincomb_examples() {
        let v = parse_lincomb("3/2 * a(x) - b", &ab()).unwrap();
        assert_eq!(v.coeff(&parse_forest("a(x)", &ab()).unwrap()), Rat::new(3, 2));
        assert_eq!(v.coeff(&parse_forest("b", &ab()).unwrap()), -Rat::one());
        assert_eq!(parse_lincomb("0", &ab()).unwrap(), LinComb::zero());
        assert_eq!(parse_lincomb("- x + x", &ab()).unwrap(), LinComb::zero());
        // Bare "1" is the unit forest, not a coefficient.
        let v = parse_lincomb("1 + b x", &ab()).unwrap();
        assert_eq!(v.coeff(&Forest::empty()), Rat::one());
    }

    #[test]
    fn parse_tensor_examples() {
        let v = parse_tensor("(x) # (1)", &ab()).unwrap();
        assert_eq!(v.len(), 1);
        let v = parse_tensor("(b x) # (1) + (b) # (a) + (1) # (a(x))", &ab()).unwrap();
        assert_eq!(v.len(), 3);
        let v = parse_tensor("3/2 * (x - 1) # (y)", &ab()).unwrap();
        assert_eq!(v.len(), 2);
    }

    #[test]
    fn print_parse_round_trips() {
        for s in ["1", "x", "b a(x)", "w(b a(x)) a(b g)"] {
            let f = parse_forest(s, &ab()).unwrap();
            assert_eq!(parse_forest(&f.to_string(), &ab()).unwrap(), f);
        }
        let v = parse_lincomb("3/2 * a(x) - b + 1", &ab()).unwrap();
        assert_eq!(parse_lincomb(&v.to_string(), &ab()).unwrap(), v);
        let t = parse_tensor("(b x) # (1) - 2 * (b) # (a)", &ab()).unwrap();
        assert_eq!(parse_tensor(&t.to_string(), &ab()).unwrap(), t);
        let z = LinComb::<Tensor2<Forest>>::zero();
        assert_eq!(parse_tensor(&z.to_string(), &ab()).unwrap(), z);
    }

    #[test]
    fn json_round_trips() {
        let f = parse_forest("w(b a(x))", &ab()).unwrap();
        assert_eq!(forest_from_json(&forest_to_json(&f), &ab()).unwrap(), f);
        let v = parse_lincomb("3/2 * a(x) - b", &ab()).unwrap();
        assert_eq!(lincomb_from_json(&lincomb_to_json(&v), &ab()).unwrap(), v);
        let t = parse_tensor("(b x) # (1) + (b) # (a)", &ab()).unwrap();
        assert_eq!(tensor_from_json(&tensor_to_json(&t), &ab()).unwrap(), t);
    }

    #[test]
    fn json_shape_matches_schema() {
        let f = parse_forest("x", &ab()).unwrap();
        let doc = forest_to_json(&f);
        assert_eq!(doc["schema"], SCHEMA);
        assert_eq!(doc["forest"], json!([{"d": "x", "c": []}]));
    }

    #[test]
    fn json_errors_carry_pointers() {
        let bad = json!({ "schema": SCHEMA, "forest": [{"d": "q", "c": []}] });
        let e = forest_from_json(&bad, &ab()).unwrap_err();
        assert_eq!(e.pointer, "/forest/0/d");
        let bad = json!({ "schema": "nope", "forest": [] });
        assert_eq!(forest_from_json(&bad, &ab()).unwrap_err().pointer, "/schema");
        let bad = json!({ "schema": SCHEMA, "terms": [{"coeff": "x", "elem": []}] });
        assert_eq!(lincomb_from_json(&bad, &ab()).unwrap_err().pointer, "/terms/0/coeff");
    }
}
