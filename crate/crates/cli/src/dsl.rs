//! Text format for recurrences:
//!
//! ```text
//! # comments run to the end of the line
//! T(n, k) = max{ T(n-1, k-1); 2 T(n-2, k-1); T(n-1, k) + T(n-4, k-1) }
//! ```
//!
//! Cases are separated by `;`, terms by `+`. A term may carry a positive
//! integer multiplier, which repeats it. Each argument is the header
//! variable in that position, optionally minus a nonnegative integer. A
//! single case may be written without `max{ }`.

use std::fmt;

use quasiconvex::recurrence::{Case, Recurrence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(u64),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(v) => write!(f, "`{v}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
        } else if c.is_whitespace() {
            bump(&mut chars);
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                bump(&mut chars);
            }
            if chars
                .peek()
                .is_some_and(|&c| c == '.' || c.is_alphabetic() && c != 'T')
            {
                return Err(ParseError {
                    line: l,
                    column: col,
                    message: format!("expected an integer, found `{s}{}`", chars.peek().unwrap()),
                });
            }
            let v = s.parse().map_err(|_| ParseError {
                line: l,
                column: col,
                message: format!("integer `{s}` is too large"),
            })?;
            out.push(Spanned {
                tok: Tok::Int(v),
                line: l,
                column: col,
            });
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                bump(&mut chars);
            }
            out.push(Spanned {
                tok: Tok::Ident(s),
                line: l,
                column: col,
            });
        } else if "(),=;+-*{}".contains(c) {
            bump(&mut chars);
            out.push(Spanned {
                tok: Tok::Sym(c),
                line: l,
                column: col,
            });
        } else {
            return Err(ParseError {
                line: l,
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    vars: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at<T>(&self, at: &Spanned, message: String) -> Result<T, ParseError> {
        Err(ParseError {
            line: at.line,
            column: at.column,
            message,
        })
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        let t = self.next();
        if t.tok == Tok::Sym(c) {
            Ok(())
        } else {
            self.error_at(&t, format!("expected `{c}`, found {}", t.tok))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect_t(&mut self) -> Result<(), ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) if s == "T" => Ok(()),
            other => self.error_at(&t, format!("expected `T`, found {other}")),
        }
    }

    fn header(&mut self) -> Result<(), ParseError> {
        self.expect_t()?;
        self.expect('(')?;
        loop {
            let t = self.next();
            match t.tok {
                Tok::Ident(ref s) if s != "T" => {
                    if self.vars.contains(s) {
                        return self.error_at(&t, format!("variable `{s}` appears twice"));
                    }
                    self.vars.push(s.clone());
                }
                ref other => {
                    return self.error_at(&t, format!("expected a variable name, found {other}"))
                }
            }
            if !self.eat(',') {
                break;
            }
        }
        self.expect(')')?;
        self.expect('=')
    }

    fn term(&mut self) -> Result<(u64, Vec<i64>), ParseError> {
        let start = self.peek().clone();
        let mult = match start.tok {
            Tok::Int(m) => {
                self.next();
                self.eat('*');
                if m == 0 {
                    return self.error_at(&start, "multiplier must be positive".into());
                }
                m
            }
            _ => 1,
        };
        self.expect_t()?;
        let open = self.peek().clone();
        self.expect('(')?;
        let mut delta = Vec::with_capacity(self.vars.len());
        for (i, var) in self.vars.clone().iter().enumerate() {
            if i > 0 {
                self.expect(',')?;
            }
            let t = self.next();
            match &t.tok {
                Tok::Ident(s) if s == var => {}
                other => return self.error_at(&t, format!("expected `{var}`, found {other}")),
            }
            let sign = self.peek().clone();
            let d = if self.eat('-') {
                let v = self.next();
                match v.tok {
                    Tok::Int(v) => v as i64,
                    ref other => {
                        return self.error_at(&v, format!("expected an integer, found {other}"))
                    }
                }
            } else if self.eat('+') {
                return self.error_at(&sign, "decrements must be nonnegative".into());
            } else {
                0
            };
            delta.push(d);
        }
        self.expect(')')?;
        if delta.iter().all(|&d| d == 0) {
            return self.error_at(&open, "term does not decrease any variable".into());
        }
        Ok((mult, delta))
    }

    fn case(&mut self) -> Result<Case, ParseError> {
        let start = self.peek().clone();
        let mut decrements = Vec::new();
        loop {
            let (m, d) = self.term()?;
            for _ in 0..m {
                decrements.push(d.clone());
            }
            if !self.eat('+') {
                break;
            }
        }
        match Case::new(decrements) {
            Ok(c) => Ok(c),
            Err(e) => self.error_at(&start, e.to_string()),
        }
    }

    fn body(&mut self) -> Result<Vec<Case>, ParseError> {
        let braced = matches!(&self.peek().tok, Tok::Ident(s) if s == "max");
        if !braced {
            return Ok(vec![self.case()?]);
        }
        self.next();
        self.expect('{')?;
        let mut cases = vec![self.case()?];
        while self.eat(';') {
            if self.peek().tok == Tok::Sym('}') {
                break;
            }
            cases.push(self.case()?);
        }
        self.expect('}')?;
        Ok(cases)
    }
}

/// Parses one recurrence.
pub fn parse_recurrence(text: &str) -> Result<Recurrence, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        vars: Vec::new(),
    };
    p.header()?;
    let cases = p.body()?;
    let end = p.next();
    if end.tok != Tok::Eof {
        return p.error_at(&end, format!("expected end of input, found {}", end.tok));
    }
    Recurrence::new(p.vars, cases).map_err(|e| ParseError {
        line: 1,
        column: 1,
        message: e.to_string(),
    })
}
