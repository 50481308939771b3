//! Forcing functions `f(t)` written as text.
//!
//! The grammar is small on purpose: numbers, the variable `t`, the constants
//! `pi` and `e`, the operators `+ - * / ^` and the unary functions
//! `sin cos tan exp log sqrt abs`. Multiplication is always explicit, so
//! `5cos(t)` is rejected and has to be written `5*cos(t)`.
//!
//! Precedence from loosest to tightest: `+ -`, then `* /`, then unary minus,
//! then `^` (right-associative). That makes `-t^2` equal to `-(t^2)` and
//! `2^3^2` equal to `2^(3^2)`.
//!
//! ```
//! use fro_core::expr::Expression;
//!
//! let f: Expression = "5*cos(t^2)*exp(-t)".parse().unwrap();
//! assert_eq!(f.evaluate(0.0).unwrap(), 5.0);
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Number,
    Identifier,
    Operator,
    LeftParen,
    RightParen,
    Comma,
}

/// A lexeme together with its character offset in the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub position: usize,
}

impl Token {
    fn new(kind: TokenKind, lexeme: impl Into<String>, position: usize) -> Self {
        Token {
            kind,
            lexeme: lexeme.into(),
            position,
        }
    }
}

/// Errors raised while turning text into an [`Expression`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("unexpected character '{found}' at offset {position}")]
    Lexical { position: usize, found: char },
    #[error("malformed number '{lexeme}' at offset {position}")]
    Number { position: usize, lexeme: String },
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
}

impl ParseError {
    /// Character offset the error points at.
    pub fn position(&self) -> usize {
        match self {
            ParseError::Lexical { position, .. }
            | ParseError::Number { position, .. }
            | ParseError::Syntax { position, .. } => *position,
        }
    }

    fn syntax(position: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            position,
            message: message.into(),
        }
    }
}

/// Evaluation failed inside a sub-expression.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{reason} in `{subexpression}` at t = {t}")]
pub struct EvalError {
    pub reason: DomainFault,
    pub subexpression: String,
    pub t: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DomainFault {
    #[error("logarithm of a non-positive number")]
    LogNonPositive,
    #[error("square root of a negative number")]
    SqrtNegative,
    #[error("division by zero")]
    DivisionByZero,
    #[error("non-integer power of a negative number")]
    NegativeBasePower,
    #[error("non-finite result")]
    NonFinite,
}

pub fn tokenize(source: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = source.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' | '-' | '*' | '/' | '^' => {
                tokens.push(Token::new(TokenKind::Operator, c, i));
                i += 1;
            }
            '(' => {
                tokens.push(Token::new(TokenKind::LeftParen, "(", i));
                i += 1;
            }
            ')' => {
                tokens.push(Token::new(TokenKind::RightParen, ")", i));
                i += 1;
            }
            ',' => {
                tokens.push(Token::new(TokenKind::Comma, ",", i));
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                i = scan_number(&chars, i);
                let lexeme: String = chars[start..i].iter().collect();
                if lexeme.parse::<f64>().is_err() {
                    return Err(ParseError::Number {
                        position: start,
                        lexeme,
                    });
                }
                tokens.push(Token::new(TokenKind::Number, lexeme, start));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let lexeme: String = chars[start..i].iter().collect();
                tokens.push(Token::new(TokenKind::Identifier, lexeme, start));
            }
            found => return Err(ParseError::Lexical { position: i, found }),
        }
    }
    Ok(tokens)
}

// digits [. digits] [(e|E) [+|-] digits]; the exponent is only consumed when
// at least one digit follows, so `2e` lexes as `2` then identifier `e`.
fn scan_number(chars: &[char], mut i: usize) -> usize {
    let digits = |mut j: usize| {
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    i = digits(i);
    if i < chars.len() && chars[i] == '.' {
        i = digits(i + 1);
    }
    if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
        let mut j = i + 1;
        if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
            j += 1;
        }
        if j < chars.len() && chars[j].is_ascii_digit() {
            i = digits(j);
        }
    }
    i
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinaryOp {
    fn symbol(self) -> char {
        match self {
            BinaryOp::Add => '+',
            BinaryOp::Sub => '-',
            BinaryOp::Mul => '*',
            BinaryOp::Div => '/',
            BinaryOp::Pow => '^',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Function {
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Sqrt,
    Abs,
}

impl Function {
    pub const ALL: [Function; 7] = [
        Function::Sin,
        Function::Cos,
        Function::Tan,
        Function::Exp,
        Function::Log,
        Function::Sqrt,
        Function::Abs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Function::Sin => "sin",
            Function::Cos => "cos",
            Function::Tan => "tan",
            Function::Exp => "exp",
            Function::Log => "log",
            Function::Sqrt => "sqrt",
            Function::Abs => "abs",
        }
    }

    pub fn from_name(name: &str) -> Option<Function> {
        Function::ALL.into_iter().find(|f| f.name() == name)
    }
}

/// Syntax tree of a forcing function. The only free variable is `t`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expression {
    Constant(f64),
    Time,
    Negate(Box<Expression>),
    Binary {
        op: BinaryOp,
        lhs: Box<Expression>,
        rhs: Box<Expression>,
    },
    Call {
        function: Function,
        argument: Box<Expression>,
    },
}

impl Expression {
    pub fn zero() -> Self {
        Expression::Constant(0.0)
    }

    pub fn binary(op: BinaryOp, lhs: Expression, rhs: Expression) -> Self {
        Expression::Binary {
            op,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        }
    }

    /// True when the tree is the literal constant 0 (what the `"0"` default
    /// parses to). No algebraic simplification is attempted.
    pub fn is_zero(&self) -> bool {
        matches!(self, Expression::Constant(c) if *c == 0.0)
    }

    pub fn evaluate(&self, t: f64) -> Result<f64, EvalError> {
        let fault = |reason| EvalError {
            reason,
            subexpression: self.to_string(),
            t,
        };
        let value = match self {
            Expression::Constant(c) => *c,
            Expression::Time => t,
            Expression::Negate(child) => -child.evaluate(t)?,
            Expression::Binary { op, lhs, rhs } => {
                let a = lhs.evaluate(t)?;
                let b = rhs.evaluate(t)?;
                match op {
                    BinaryOp::Add => a + b,
                    BinaryOp::Sub => a - b,
                    BinaryOp::Mul => a * b,
                    BinaryOp::Div => {
                        if b == 0.0 {
                            return Err(fault(DomainFault::DivisionByZero));
                        }
                        a / b
                    }
                    BinaryOp::Pow => {
                        if a < 0.0 && b.fract() != 0.0 {
                            return Err(fault(DomainFault::NegativeBasePower));
                        }
                        if a == 0.0 && b < 0.0 {
                            return Err(fault(DomainFault::DivisionByZero));
                        }
                        a.powf(b)
                    }
                }
            }
            Expression::Call { function, argument } => {
                let x = argument.evaluate(t)?;
                match function {
                    Function::Sin => x.sin(),
                    Function::Cos => x.cos(),
                    Function::Tan => x.tan(),
                    Function::Exp => x.exp(),
                    Function::Log => {
                        if x <= 0.0 {
                            return Err(fault(DomainFault::LogNonPositive));
                        }
                        x.ln()
                    }
                    Function::Sqrt => {
                        if x < 0.0 {
                            return Err(fault(DomainFault::SqrtNegative));
                        }
                        x.sqrt()
                    }
                    Function::Abs => x.abs(),
                }
            }
        };
        if !value.is_finite() {
            return Err(fault(DomainFault::NonFinite));
        }
        Ok(value)
    }
}

/// Fully parenthesised rendering that parses back to an equivalent tree.
impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::Constant(c) if c.is_sign_negative() => write!(f, "(-{:?})", -c),
            Expression::Constant(c) => write!(f, "{c:?}"),
            Expression::Time => f.write_str("t"),
            Expression::Negate(child) => write!(f, "(-{child})"),
            Expression::Binary { op, lhs, rhs } => write!(f, "({lhs} {} {rhs})", op.symbol()),
            Expression::Call { function, argument } => {
                write!(f, "{}({argument})", function.name())
            }
        }
    }
}

impl FromStr for Expression {
    type Err = ParseError;

    fn from_str(source: &str) -> Result<Self, Self::Err> {
        let tokens = tokenize(source)?;
        parse(&tokens)
    }
}

impl Serialize for Expression {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Expression {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

pub fn parse(tokens: &[Token]) -> Result<Expression, ParseError> {
    let mut parser = Parser { tokens, next: 0 };
    if tokens.is_empty() {
        return Err(ParseError::syntax(0, "empty expression"));
    }
    check_balance(tokens)?;
    let expr = parser.sum()?;
    match parser.peek() {
        None => Ok(expr),
        Some(tok) if tok.kind == TokenKind::RightParen => Err(ParseError::syntax(
            tok.position,
            "unbalanced parenthesis: unexpected ')'",
        )),
        Some(tok) => Err(ParseError::syntax(
            tok.position,
            format!(
                "unexpected '{}' (multiplication must be written with '*')",
                tok.lexeme
            ),
        )),
    }
}

fn check_balance(tokens: &[Token]) -> Result<(), ParseError> {
    let mut open = Vec::new();
    for tok in tokens {
        match tok.kind {
            TokenKind::LeftParen => open.push(tok.position),
            TokenKind::RightParen if open.pop().is_none() => {
                return Err(ParseError::syntax(
                    tok.position,
                    "unbalanced parenthesis: unexpected ')'",
                ));
            }
            _ => {}
        }
    }
    match open.pop() {
        Some(position) => Err(ParseError::syntax(
            position,
            "unbalanced parenthesis: '(' is never closed",
        )),
        None => Ok(()),
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    next: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.next)
    }

    fn end_position(&self) -> usize {
        self.tokens
            .last()
            .map(|t| t.position + t.lexeme.chars().count())
            .unwrap_or(0)
    }

    fn bump(&mut self) -> Option<&'a Token> {
        let tok = self.tokens.get(self.next);
        if tok.is_some() {
            self.next += 1;
        }
        tok
    }

    fn peek_operator(&self, ops: &[char]) -> Option<char> {
        let tok = self.peek()?;
        if tok.kind != TokenKind::Operator {
            return None;
        }
        let c = tok.lexeme.chars().next()?;
        ops.contains(&c).then_some(c)
    }

    fn sum(&mut self) -> Result<Expression, ParseError> {
        let mut lhs = self.product()?;
        while let Some(c) = self.peek_operator(&['+', '-']) {
            self.bump();
            let rhs = self.product()?;
            let op = if c == '+' {
                BinaryOp::Add
            } else {
                BinaryOp::Sub
            };
            lhs = Expression::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Expression, ParseError> {
        let mut lhs = self.unary()?;
        while let Some(c) = self.peek_operator(&['*', '/']) {
            self.bump();
            let rhs = self.unary()?;
            let op = if c == '*' {
                BinaryOp::Mul
            } else {
                BinaryOp::Div
            };
            lhs = Expression::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expression, ParseError> {
        match self.peek_operator(&['-', '+']) {
            Some('-') => {
                self.bump();
                Ok(Expression::Negate(Box::new(self.unary()?)))
            }
            Some(_) => {
                self.bump();
                self.unary()
            }
            None => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expression, ParseError> {
        let base = self.primary()?;
        if self.peek_operator(&['^']).is_some() {
            self.bump();
            // the exponent may itself carry a sign: 2^-1
            let exponent = self.unary()?;
            return Ok(Expression::binary(BinaryOp::Pow, base, exponent));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expression, ParseError> {
        let Some(tok) = self.bump() else {
            return Err(ParseError::syntax(
                self.end_position(),
                "unexpected end of input: expected an operand",
            ));
        };
        match tok.kind {
            TokenKind::Number => {
                tok.lexeme
                    .parse()
                    .map(Expression::Constant)
                    .map_err(|_| ParseError::Number {
                        position: tok.position,
                        lexeme: tok.lexeme.clone(),
                    })
            }
            TokenKind::LeftParen => {
                let inner = self.sum()?;
                self.expect_close(tok.position)?;
                Ok(inner)
            }
            TokenKind::Identifier => self.identifier(tok),
            TokenKind::RightParen => Err(ParseError::syntax(
                tok.position,
                "unbalanced parenthesis: unexpected ')'",
            )),
            TokenKind::Comma => Err(ParseError::syntax(tok.position, "unexpected ','")),
            TokenKind::Operator => Err(ParseError::syntax(
                tok.position,
                format!("dangling operator '{}'", tok.lexeme),
            )),
        }
    }

    fn identifier(&mut self, tok: &Token) -> Result<Expression, ParseError> {
        let is_call = self
            .peek()
            .is_some_and(|next| next.kind == TokenKind::LeftParen);
        if !is_call {
            return match tok.lexeme.as_str() {
                "t" => Ok(Expression::Time),
                "pi" => Ok(Expression::Constant(std::f64::consts::PI)),
                "e" => Ok(Expression::Constant(std::f64::consts::E)),
                name if Function::from_name(name).is_some() => Err(ParseError::syntax(
                    tok.position,
                    format!("function '{name}' must be followed by '('"),
                )),
                name => Err(ParseError::syntax(
                    tok.position,
                    format!("unknown identifier '{name}' (the only variable is 't')"),
                )),
            };
        }
        let Some(function) = Function::from_name(&tok.lexeme) else {
            return Err(ParseError::syntax(
                tok.position,
                format!("unknown function '{}'", tok.lexeme),
            ));
        };
        let open = self.bump().expect("peeked a left parenthesis");
        if self
            .peek()
            .is_some_and(|next| next.kind == TokenKind::RightParen)
        {
            return Err(ParseError::syntax(
                tok.position,
                format!("'{}' takes exactly one argument, got 0", function.name()),
            ));
        }
        let argument = self.sum()?;
        let mut arity = 1;
        while self.peek().is_some_and(|t| t.kind == TokenKind::Comma) {
            self.bump();
            self.sum()?;
            arity += 1;
        }
        if arity != 1 {
            return Err(ParseError::syntax(
                tok.position,
                format!(
                    "'{}' takes exactly one argument, got {arity}",
                    function.name()
                ),
            ));
        }
        self.expect_close(open.position)?;
        Ok(Expression::Call {
            function,
            argument: Box::new(argument),
        })
    }

    fn expect_close(&mut self, open_position: usize) -> Result<(), ParseError> {
        match self.bump() {
            Some(tok) if tok.kind == TokenKind::RightParen => Ok(()),
            Some(tok) => Err(ParseError::syntax(
                tok.position,
                format!("expected ')' but found '{}'", tok.lexeme),
            )),
            None => Err(ParseError::syntax(
                open_position,
                "unbalanced parenthesis: '(' is never closed",
            )),
        }
    }
}
