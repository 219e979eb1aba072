//! Reader for the bracket grammar.
//!
//! `[]` is a single vertex, children are written inside the brackets and a
//! colored vertex is `[c:...]`. Forests are trees separated by whitespace;
//! `1` (or an empty string) is the empty forest.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::forest::planar::{PlanarForest, PlanarTree};
use crate::forest::tree::{Forest, RootedTree};
use crate::forest::Color;

struct Cursor<'a> {
    s: &'a [u8],
    src: &'a str,
    pos: usize,
}

/// Parsed tree before canonicalization: (color, children).
struct Raw {
    color: Color,
    children: Vec<Raw>,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { s: src.as_bytes(), src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek_char(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn tree(&mut self) -> Result<Raw> {
        match self.peek_char() {
            Some('[') => self.pos += 1,
            Some(c) => return Err(Error::parse(self.pos, format!("expected `[`, found `{c}`"))),
            None => return Err(Error::parse(self.pos, "expected `[`, found end of input")),
        }
        let mut color = None;
        let rest = &self.src[self.pos..];
        let mut it = rest.chars();
        if let (Some(c), Some(':')) = (it.next(), it.next()) {
            if c != '[' && c != ']' && !c.is_whitespace() {
                color = Some(c);
                self.pos += c.len_utf8() + 1;
            }
        }
        let mut children = Vec::new();
        loop {
            match self.peek_char() {
                Some(']') => {
                    self.pos += 1;
                    return Ok(Raw { color, children });
                }
                Some('[') => children.push(self.tree()?),
                Some(c) => {
                    return Err(Error::parse(self.pos, format!("unexpected `{c}` inside tree")))
                }
                None => return Err(Error::parse(self.pos, "unterminated tree, missing `]`")),
            }
        }
    }

    fn forest(&mut self) -> Result<Vec<Raw>> {
        self.skip_ws();
        let rest = self.src[self.pos..].trim_end();
        if rest.is_empty() || rest == "1" {
            self.pos = self.s.len();
            return Ok(Vec::new());
        }
        let mut trees = Vec::new();
        loop {
            self.skip_ws();
            if self.pos >= self.s.len() {
                return Ok(trees);
            }
            trees.push(self.tree()?);
        }
    }
}

fn to_tree(r: &Raw) -> RootedTree {
    RootedTree::new(r.children.iter().map(to_tree).collect(), r.color)
}

fn to_planar(r: &Raw) -> PlanarTree {
    PlanarTree::new(PlanarForest::from_trees(r.children.iter().map(to_planar).collect()), r.color)
}

fn parse_one(s: &str) -> Result<Raw> {
    let mut c = Cursor::new(s);
    c.skip_ws();
    let t = c.tree()?;
    c.skip_ws();
    if c.pos != c.s.len() {
        return Err(Error::parse(c.pos, "trailing input after tree"));
    }
    Ok(t)
}

pub fn parse_tree(s: &str) -> Result<RootedTree> {
    parse_one(s).map(|r| to_tree(&r))
}

pub fn parse_forest(s: &str) -> Result<Forest> {
    let raws = Cursor::new(s).forest()?;
    Ok(Forest::from_trees(raws.iter().map(to_tree).collect()))
}

pub fn parse_planar_tree(s: &str) -> Result<PlanarTree> {
    parse_one(s).map(|r| to_planar(&r))
}

pub fn parse_planar_forest(s: &str) -> Result<PlanarForest> {
    let raws = Cursor::new(s).forest()?;
    Ok(PlanarForest::from_trees(raws.iter().map(to_planar).collect()))
}

impl FromStr for RootedTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_tree(s)
    }
}

impl FromStr for Forest {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_forest(s)
    }
}

impl FromStr for PlanarTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_planar_tree(s)
    }
}

impl FromStr for PlanarForest {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_planar_forest(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for s in ["[]", "[[][]]", "[[[]][]]", "[a:[][b:]]"] {
            assert_eq!(parse_tree(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_tree("[[][[]]]").unwrap().to_string(), "[[[]][]]");
        assert_eq!(parse_planar_tree("[[][[]]]").unwrap().to_string(), "[[][[]]]");
    }

    #[test]
    fn forests() {
        assert!(parse_forest("1").unwrap().is_unit());
        assert!(parse_forest("").unwrap().is_unit());
        let w = parse_planar_forest("[[]] []").unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w.to_string(), "[[]] []");
        assert_eq!(parse_forest("[] [[]]").unwrap().to_string(), "[[]] []");
    }

    #[test]
    fn errors_carry_position() {
        assert_eq!(parse_tree("[[]"), Err(Error::Parse { pos: 3, msg: "unterminated tree, missing `]`".into() }));
        match parse_tree("[x]") {
            Err(Error::Parse { pos: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_tree("[] []").is_err());
    }
}
