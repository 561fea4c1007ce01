//! Cotree expressions: `.` is a single vertex, `U(..)` a disjoint union and
//! `J(..)` a join of two or more sub-expressions.

use std::fmt;

use thiserror::Error;

use crate::graph::{self, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CotreeExpr {
    Leaf,
    Union(Vec<CotreeExpr>),
    Join(Vec<CotreeExpr>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CotreeError {
    #[error("syntax error at byte {offset}: {msg}")]
    Syntax { offset: usize, msg: String },
    #[error("{kind} node at byte {offset} has {got} child(ren), need at least 2")]
    TooFewChildren {
        kind: char,
        offset: usize,
        got: usize,
    },
}

impl CotreeExpr {
    pub fn leaf_count(&self) -> usize {
        match self {
            CotreeExpr::Leaf => 1,
            CotreeExpr::Union(c) | CotreeExpr::Join(c) => c.iter().map(Self::leaf_count).sum(),
        }
    }

    /// Checks the arity invariant on every internal node.
    pub fn is_well_formed(&self) -> bool {
        match self {
            CotreeExpr::Leaf => true,
            CotreeExpr::Union(c) | CotreeExpr::Join(c) => {
                c.len() >= 2 && c.iter().all(Self::is_well_formed)
            }
        }
    }
}

impl fmt::Display for CotreeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, children) = match self {
            CotreeExpr::Leaf => return f.write_str("."),
            CotreeExpr::Union(c) => ('U', c),
            CotreeExpr::Join(c) => ('J', c),
        };
        write!(f, "{tag}(")?;
        for (i, c) in children.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Parses `E ::= "." | "U(" E ("," E)+ ")" | "J(" E ("," E)+ ")"`.
/// ASCII whitespace between tokens is ignored.
pub fn parse_cotree(text: &str) -> Result<CotreeExpr, CotreeError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input after expression"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> CotreeError {
        CotreeError::Syntax {
            offset: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), CotreeError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<CotreeExpr, CotreeError> {
        match self.peek() {
            Some(b'.') => {
                self.pos += 1;
                Ok(CotreeExpr::Leaf)
            }
            Some(k @ (b'U' | b'J')) => {
                let offset = self.pos;
                self.pos += 1;
                self.expect(b'(')?;
                let mut children = vec![self.expr()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    children.push(self.expr()?);
                }
                self.expect(b')')?;
                if children.len() < 2 {
                    return Err(CotreeError::TooFewChildren {
                        kind: k as char,
                        offset,
                        got: children.len(),
                    });
                }
                Ok(if k == b'U' {
                    CotreeExpr::Union(children)
                } else {
                    CotreeExpr::Join(children)
                })
            }
            None => Err(self.err("unexpected end of input")),
            Some(_) => Err(self.err("expected '.', 'U(' or 'J('")),
        }
    }
}

/// Realises the expression; leaves are numbered left to right.
pub fn cotree_to_graph(e: &CotreeExpr) -> Graph {
    match e {
        CotreeExpr::Leaf => Graph::empty(1),
        CotreeExpr::Union(c) => fold(c, graph::union),
        CotreeExpr::Join(c) => fold(c, graph::join),
    }
}

fn fold(children: &[CotreeExpr], op: fn(&Graph, &Graph) -> Graph) -> Graph {
    let mut it = children.iter().map(cotree_to_graph);
    let first = it.next().unwrap_or_default();
    it.fold(first, |acc, g| op(&acc, &g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};
    use CotreeExpr::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_cotree(".").unwrap(), Leaf);
        assert_eq!(parse_cotree("J(.,.)").unwrap(), Join(vec![Leaf, Leaf]));
        assert_eq!(
            parse_cotree("J(.,U(.,.))").unwrap(),
            Join(vec![Leaf, Union(vec![Leaf, Leaf])])
        );
        assert_eq!(
            parse_cotree(" U( . , . , .) ").unwrap(),
            Union(vec![Leaf; 3])
        );
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_cotree("J(.)").unwrap_err(),
            CotreeError::TooFewChildren {
                kind: 'J',
                offset: 0,
                got: 1
            }
        );
        assert!(matches!(
            parse_cotree("U(.,x)").unwrap_err(),
            CotreeError::Syntax { offset: 4, .. }
        ));
        assert!(matches!(
            parse_cotree("U(.,.").unwrap_err(),
            CotreeError::Syntax { offset: 5, .. }
        ));
        assert!(matches!(
            parse_cotree("..").unwrap_err(),
            CotreeError::Syntax { offset: 1, .. }
        ));
        assert!(parse_cotree("").is_err());
        assert!(parse_cotree("J()").is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in [".", "J(.,.)", "U(J(.,.),J(.,U(.,.,.)))"] {
            assert_eq!(parse_cotree(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn realisation_examples() {
        assert_eq!(cotree_to_graph(&Leaf), Graph::empty(1));
        assert_eq!(
            cotree_to_graph(&parse_cotree("J(.,.)").unwrap()),
            complete(2).unwrap()
        );
        let two_k2 = cotree_to_graph(&parse_cotree("U(J(.,.),J(.,.))").unwrap());
        assert_eq!(two_k2.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        let p3 = cotree_to_graph(&parse_cotree("J(.,U(.,.))").unwrap());
        assert_eq!(p3.degree(0), 2);
        assert_eq!(p3.m(), 2);
        assert_ne!(p3, path(3).unwrap()); // centre is vertex 0, not 1
    }
}
