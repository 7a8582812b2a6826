//! Parenthesized cotree text: `(+ a b (x c d))`, `+` parallel, `x` series.

use std::fmt;
use std::str::FromStr;

use super::{CoExpr, Cotree, NodeId, NodeLabel};
use crate::error::{Error, Result};

impl Cotree {
    fn write_node(&self, u: NodeId, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let node = self.node(u);
        let tag = match node.label {
            NodeLabel::Leaf(v) => return write!(out, "{v}"),
            NodeLabel::Series => "x",
            NodeLabel::Parallel => "+",
        };
        write!(out, "({tag}")?;
        for &c in &node.children {
            out.write_str(" ")?;
            self.write_node(c, out)?;
        }
        out.write_str(")")
    }
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_node(self.root(), f)
    }
}

#[derive(Debug, PartialEq)]
enum Token {
    Open,
    Close,
    Series,
    Parallel,
    Vertex(usize),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let bad = |msg: String| Error::InvalidCotree(msg);
    let mut out = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' => {
                chars.next();
                out.push(Token::Open);
            }
            ')' => {
                chars.next();
                out.push(Token::Close);
            }
            '+' => {
                chars.next();
                out.push(Token::Parallel);
            }
            'x' => {
                chars.next();
                out.push(Token::Series);
            }
            '0'..='9' => {
                let mut end = i;
                while let Some(&(j, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = j + d.len_utf8();
                    chars.next();
                }
                let v = s[i..end].parse().map_err(|_| bad(format!("bad vertex id {:?}", &s[i..end])))?;
                out.push(Token::Vertex(v));
            }
            other => return Err(bad(format!("unexpected character {other:?} at {i}"))),
        }
    }
    Ok(out)
}

fn parse_expr(tokens: &[Token], pos: &mut usize) -> Result<CoExpr> {
    let bad = |msg: &str| Error::InvalidCotree(msg.to_string());
    match tokens.get(*pos) {
        Some(Token::Vertex(v)) => {
            *pos += 1;
            Ok(CoExpr::Leaf(*v))
        }
        Some(Token::Open) => {
            *pos += 1;
            let series = match tokens.get(*pos) {
                Some(Token::Series) => true,
                Some(Token::Parallel) => false,
                _ => return Err(bad("expected `+` or `x` after `(`")),
            };
            *pos += 1;
            let mut children = Vec::new();
            loop {
                match tokens.get(*pos) {
                    Some(Token::Close) => {
                        *pos += 1;
                        break;
                    }
                    None => return Err(bad("unbalanced parentheses")),
                    _ => children.push(parse_expr(tokens, pos)?),
                }
            }
            if children.len() < 2 {
                return Err(bad("internal nodes need at least two children"));
            }
            Ok(if series { CoExpr::Series(children) } else { CoExpr::Parallel(children) })
        }
        _ => Err(bad("expected a vertex id or `(`")),
    }
}

/// Parses the text form; same-label nesting is flattened and children are
/// reordered, so the printed form of the result is canonical.
impl FromStr for Cotree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Cotree> {
        let tokens = tokenize(s)?;
        let mut pos = 0;
        let expr = parse_expr(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::InvalidCotree("trailing tokens".into()));
        }
        Cotree::from_expr(expr)
    }
}
