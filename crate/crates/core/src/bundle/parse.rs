use crate::error::{Error, Result};

use super::BundleExpr;

/// Recursive-descent parser for the bundle grammar:
///
/// ```text
/// expr := "U" | "Q" | "o(" int ")" | "dual(" expr ")" | "det(" expr ")"
///       | "sym(" nat "," expr ")" | "wedge(" nat "," expr ")"
///       | "tensor(" expr "," expr ")" | "sum(" expr "," expr ")"
/// ```
///
/// Whitespace is ignored everywhere.
pub(super) struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    pub(super) fn new(text: &'a str) -> Self {
        Parser { text, pos: 0 }
    }

    pub(super) fn parse_all(mut self) -> Result<BundleExpr> {
        let expr = self.expr()?;
        self.skip_ws();
        if self.pos != self.text.len() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(expr)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(found) if found == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(found) => Err(self.error(format!("expected '{c}', found '{found}'"))),
            None => Err(self.error(format!("expected '{c}', found end of input"))),
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn integer(&mut self, allow_sign: bool) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[self.pos..];
        let mut len = 0;
        if allow_sign && (rest.starts_with('-') || rest.starts_with('+')) {
            len = 1;
        }
        let digits = rest[len..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len() - len);
        if digits == 0 {
            return Err(self.error(if allow_sign {
                "expected an integer"
            } else {
                "expected a nonnegative integer"
            }));
        }
        len += digits;
        let value = rest[..len].parse::<i64>().map_err(|e| Error::Syntax {
            position: start,
            message: e.to_string(),
        })?;
        self.pos += len;
        Ok(value)
    }

    fn degree(&mut self) -> Result<u32> {
        let start = self.pos;
        let value = self.integer(false)?;
        u32::try_from(value).map_err(|_| Error::Syntax {
            position: start,
            message: "degree too large".into(),
        })
    }

    fn expr(&mut self) -> Result<BundleExpr> {
        self.skip_ws();
        let start = self.pos;
        let name = self.word();
        let expr = match name {
            "U" => BundleExpr::Tautological,
            "Q" => BundleExpr::Quotient,
            "o" => {
                self.expect('(')?;
                let m = self.integer(true)?;
                self.expect(')')?;
                BundleExpr::Line(m)
            }
            "dual" | "det" => {
                self.expect('(')?;
                let inner = self.expr()?;
                self.close_unary(name)?;
                if name == "dual" {
                    BundleExpr::dual(inner)
                } else {
                    BundleExpr::det(inner)
                }
            }
            "sym" | "wedge" => {
                self.expect('(')?;
                let d = self.degree()?;
                self.expect(',')?;
                let inner = self.expr()?;
                self.close_unary(name)?;
                if name == "sym" {
                    BundleExpr::sym(d, inner)
                } else {
                    BundleExpr::wedge(d, inner)
                }
            }
            "tensor" | "sum" => {
                self.expect('(')?;
                let left = self.expr()?;
                if self.peek() != Some(',') {
                    return Err(self.error(format!("{name} takes two arguments")));
                }
                self.expect(',')?;
                let right = self.expr()?;
                self.close_unary(name)?;
                if name == "tensor" {
                    BundleExpr::tensor(left, right)
                } else {
                    BundleExpr::sum(left, right)
                }
            }
            "" => {
                self.pos = start;
                return Err(match self.peek() {
                    Some(c) => self.error(format!("expected a bundle, found '{c}'")),
                    None => self.error("expected a bundle, found end of input"),
                });
            }
            other => {
                self.pos = start;
                return Err(self.error(format!("unknown bundle constructor '{other}'")));
            }
        };
        Ok(expr)
    }

    fn close_unary(&mut self, name: &str) -> Result<()> {
        if self.peek() == Some(',') {
            return Err(self.error(format!("too many arguments to {name}")));
        }
        self.expect(')')
    }
}
