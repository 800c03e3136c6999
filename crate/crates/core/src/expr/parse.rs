use thiserror::Error;

use super::{BinOp, Expr, Func};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    BadNumber(String),
    UnknownIdentifier(String),
    UnknownFunction(String),
    UnclosedParen,
}

/// Syntax error; `position` is a 0-based character offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{} at position {position}", describe(.kind))]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
}

fn describe(kind: &ParseErrorKind) -> String {
    match kind {
        ParseErrorKind::Empty => "empty expression".into(),
        ParseErrorKind::UnexpectedChar(c) => format!("unexpected character '{c}'"),
        ParseErrorKind::UnexpectedToken(t) => format!("unexpected '{t}'"),
        ParseErrorKind::UnexpectedEnd => "unexpected end of input".into(),
        ParseErrorKind::BadNumber(s) => format!("malformed number '{s}'"),
        ParseErrorKind::UnknownIdentifier(s) => {
            format!("unknown identifier '{s}' (the only variable is x)")
        }
        ParseErrorKind::UnknownFunction(s) => format!("unknown function '{s}'"),
        ParseErrorKind::UnclosedParen => "missing ')'".into(),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(f64),
    Ident(String),
    Op(char),
    LParen,
    RParen,
}

impl Token {
    fn text(&self) -> String {
        match self {
            Token::Num(v) => v.to_string(),
            Token::Ident(s) => s.clone(),
            Token::Op(c) => c.to_string(),
            Token::LParen => "(".into(),
            Token::RParen => ")".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            // exponent suffix, only when digits follow (so `2e` is not swallowed)
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            let s: String = chars[start..i].iter().collect();
            let v: f64 = s.parse().map_err(|_| ParseError {
                kind: ParseErrorKind::BadNumber(s.clone()),
                position: start,
            })?;
            out.push((Token::Num(v), start));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Token::Ident(chars[start..i].iter().collect()), start));
            continue;
        }
        let tok = match c {
            '+' | '-' | '*' | '/' | '^' => Token::Op(c),
            '(' => Token::LParen,
            ')' => Token::RParen,
            _ => {
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedChar(c),
                    position: start,
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn unexpected(&self) -> ParseError {
        let kind = match self.peek() {
            Some(t) => ParseErrorKind::UnexpectedToken(t.text()),
            None => ParseErrorKind::UnexpectedEnd,
        };
        ParseError {
            kind,
            position: self.offset(),
        }
    }

    // sum := product (('+' | '-') product)*
    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        while let Some(Token::Op(c @ ('+' | '-'))) = self.peek() {
            let op = if *c == '+' { BinOp::Add } else { BinOp::Sub };
            self.pos += 1;
            let rhs = self.product()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    // product := unary (('*' | '/') unary)*
    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while let Some(Token::Op(c @ ('*' | '/'))) = self.peek() {
            let op = if *c == '*' { BinOp::Mul } else { BinOp::Div };
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    // unary := ('-' | '+') unary | power
    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(Expr::neg(self.unary()?))
            }
            Some(Token::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    // power := atom ('^' unary)?   -- the exponent recurses, so `^` is right-associative
    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if let Some(Token::Op('^')) = self.peek() {
            self.pos += 1;
            let exp = self.unary()?;
            return Ok(Expr::pow(base, exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let position = self.offset();
        match self.peek().cloned() {
            Some(Token::Num(v)) => {
                self.pos += 1;
                Ok(Expr::Const(v))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.sum()?;
                self.close_paren(position)?;
                Ok(inner)
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if self.peek() == Some(&Token::LParen) {
                    let func = Func::from_name(&name).ok_or(ParseError {
                        kind: ParseErrorKind::UnknownFunction(name),
                        position,
                    })?;
                    let open = self.offset();
                    self.pos += 1;
                    let arg = self.sum()?;
                    self.close_paren(open)?;
                    Ok(Expr::call(func, arg))
                } else if name == "x" {
                    Ok(Expr::Var)
                } else {
                    Err(ParseError {
                        kind: ParseErrorKind::UnknownIdentifier(name),
                        position,
                    })
                }
            }
            _ => Err(self.unexpected()),
        }
    }

    fn close_paren(&mut self, open: usize) -> Result<(), ParseError> {
        match self.bump() {
            Some(Token::RParen) => Ok(()),
            None => Err(ParseError {
                kind: ParseErrorKind::UnclosedParen,
                position: open,
            }),
            Some(_) => {
                self.pos -= 1;
                Err(self.unexpected())
            }
        }
    }
}

/// Parses infix text over the variable `x`.
///
/// Precedence from tightest: `^` (right-associative), unary minus, `*` `/`,
/// `+` `-`. Known functions are `sqrt`, `exp`, `ln`, `sin`, `cos`, `abs`.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(ParseError {
            kind: ParseErrorKind::Empty,
            position: 0,
        });
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.chars().count(),
    };
    let e = p.sum()?;
    if p.pos < p.tokens.len() {
        return Err(p.unexpected());
    }
    Ok(e)
}
