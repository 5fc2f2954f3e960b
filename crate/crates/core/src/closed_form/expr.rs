//! A small arithmetic language for bounds, sign exponents and weights of the
//! closed-form parts.
//!
//! Grammar: integers, variables, `+ - * /`, unary minus, parentheses and
//! calls. Values are exact rationals; functions that count things require
//! integer arguments.
//!
//! | function | value |
//! |---|---|
//! | `max(a, b)`, `min(a, b)` | |
//! | `floorh(x)`, `ceilh(x)` | `⌊x/2⌋`, `⌈x/2⌉` |
//! | `delta(a, b)` | Kronecker delta |
//! | `pos(x)` | 1 if `x` is a positive integer |
//! | `ind(a, b, x)` | 1 if `a ≤ x ≤ b` |
//! | `binom(a, b)` | binomial coefficient, 0 outside `0 ≤ b ≤ a` |
//! | `comp(u, m, v)` | [`comp_count`] |
//! | `place(u, m, x, r)` | [`placement_count`] |
//! | `perm01`, `perm10`, `perm11` `(x, y, g)` | [`group_perm_count`] with that `t1 t0` |

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Zero};
use thiserror::Error;

use crate::cluster::{binomial, comp_count, group_perm_count, placement_count};

pub type Value = Ratio<i128>;

/// Names usable in expressions, in slot order.
pub const VARIABLES: [&str; 10] = ["n", "NL", "NR", "CL", "CL1", "CL2", "CR1", "CR2", "g", "r"];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("parse error in '{src}' at byte {at}: {msg}")]
    Parse { src: String, at: usize, msg: String },
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("variable '{0}' used before it is bound")]
    Unbound(String),
    #[error("unknown function '{0}'")]
    UnknownFunction(String),
    #[error("function '{name}' takes {want} arguments, got {got}")]
    Arity { name: String, want: usize, got: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("'{0}' needs integer arguments")]
    NotInteger(String),
    #[error("arithmetic overflow")]
    Overflow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Func {
    Max,
    Min,
    FloorHalf,
    CeilHalf,
    Delta,
    Pos,
    Ind,
    Binom,
    Comp,
    Place,
    Perm(u8, u8),
}

impl Func {
    fn lookup(name: &str) -> Option<(Func, usize)> {
        Some(match name {
            "max" => (Func::Max, 2),
            "min" => (Func::Min, 2),
            "floorh" => (Func::FloorHalf, 1),
            "ceilh" => (Func::CeilHalf, 1),
            "delta" => (Func::Delta, 2),
            "pos" => (Func::Pos, 1),
            "ind" => (Func::Ind, 3),
            "binom" => (Func::Binom, 2),
            "comp" => (Func::Comp, 3),
            "place" => (Func::Place, 4),
            "perm01" => (Func::Perm(0, 1), 3),
            "perm10" => (Func::Perm(1, 0), 3),
            "perm11" => (Func::Perm(1, 1), 3),
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Func::Max => "max",
            Func::Min => "min",
            Func::FloorHalf => "floorh",
            Func::CeilHalf => "ceilh",
            Func::Delta => "delta",
            Func::Pos => "pos",
            Func::Ind => "ind",
            Func::Binom => "binom",
            Func::Comp => "comp",
            Func::Place => "place",
            Func::Perm(1, 0) => "perm10",
            Func::Perm(0, 1) => "perm01",
            Func::Perm(..) => "perm11",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Node {
    Num(i128),
    Var(usize),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Call(Func, Vec<Node>),
}

/// A parsed expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    src: String,
    root: Node,
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr, ExprError> {
        let mut p = Parser { src, pos: 0 };
        let root = p.expr()?;
        p.skip_ws();
        if p.pos != src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(Expr { src: src.to_string(), root })
    }

    pub fn source(&self) -> &str {
        &self.src
    }

    /// Slots of every variable the expression reads.
    pub fn variables(&self) -> Vec<usize> {
        fn walk(n: &Node, out: &mut Vec<usize>) {
            match n {
                Node::Num(_) => {}
                Node::Var(i) => out.push(*i),
                Node::Neg(a) => walk(a, out),
                Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                Node::Call(_, args) => args.iter().for_each(|a| walk(a, out)),
            }
        }
        let mut out = Vec::new();
        walk(&self.root, &mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn eval(&self, env: &[i128; 10]) -> Result<Value, ExprError> {
        eval(&self.root, env)
    }

    /// Evaluates and requires an integer result.
    pub fn eval_int(&self, env: &[i128; 10]) -> Result<i128, ExprError> {
        let v = self.eval(env)?;
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(ExprError::NotInteger(self.src.clone()))
        }
    }
}

pub fn slot_of(name: &str) -> Option<usize> {
    VARIABLES.iter().position(|v| *v == name)
}

fn int_arg(f: Func, v: &Value) -> Result<i64, ExprError> {
    if !v.is_integer() {
        return Err(ExprError::NotInteger(f.name().to_string()));
    }
    i64::try_from(v.to_integer()).map_err(|_| ExprError::Overflow)
}

fn from_count(c: u128) -> Result<Value, ExprError> {
    i128::try_from(c).map(Value::from_integer).map_err(|_| ExprError::Overflow)
}

fn eval(n: &Node, env: &[i128; 10]) -> Result<Value, ExprError> {
    Ok(match n {
        Node::Num(x) => Value::from_integer(*x),
        Node::Var(i) => Value::from_integer(env[*i]),
        Node::Neg(a) => Value::zero().checked_sub(&eval(a, env)?).ok_or(ExprError::Overflow)?,
        Node::Add(a, b) => eval(a, env)?.checked_add(&eval(b, env)?).ok_or(ExprError::Overflow)?,
        Node::Sub(a, b) => eval(a, env)?.checked_sub(&eval(b, env)?).ok_or(ExprError::Overflow)?,
        Node::Mul(a, b) => eval(a, env)?.checked_mul(&eval(b, env)?).ok_or(ExprError::Overflow)?,
        Node::Div(a, b) => {
            let d = eval(b, env)?;
            if d.is_zero() {
                return Err(ExprError::DivisionByZero);
            }
            eval(a, env)?.checked_div(&d).ok_or(ExprError::Overflow)?
        }
        Node::Call(f, args) => {
            let vals = args.iter().map(|a| eval(a, env)).collect::<Result<Vec<_>, _>>()?;
            call(*f, &vals)?
        }
    })
}

fn call(f: Func, v: &[Value]) -> Result<Value, ExprError> {
    let flag = |b: bool| if b { Value::one() } else { Value::zero() };
    Ok(match f {
        Func::Max => v[0].max(v[1]),
        Func::Min => v[0].min(v[1]),
        Func::FloorHalf => Value::from_integer(Integer::div_floor(&int_arg(f, &v[0])?, &2) as i128),
        Func::CeilHalf => Value::from_integer(Integer::div_ceil(&int_arg(f, &v[0])?, &2) as i128),
        Func::Delta => flag(v[0] == v[1]),
        Func::Pos => flag(v[0].is_integer() && v[0] > Value::zero()),
        Func::Ind => flag(v[0] <= v[2] && v[2] <= v[1]),
        Func::Binom => from_count(binomial(int_arg(f, &v[0])?, int_arg(f, &v[1])?))?,
        Func::Comp => from_count(comp_count(int_arg(f, &v[0])?, int_arg(f, &v[1])?, int_arg(f, &v[2])?))?,
        Func::Place => from_count(placement_count(
            int_arg(f, &v[0])?,
            int_arg(f, &v[1])?,
            int_arg(f, &v[2])?,
            int_arg(f, &v[3])?,
        ))?,
        Func::Perm(t1, t0) => {
            from_count(group_perm_count(int_arg(f, &v[0])?, int_arg(f, &v[1])?, int_arg(f, &v[2])?, (t1, t0)))?
        }
    })
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ExprError {
        ExprError::Parse { src: self.src.to_string(), at: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Node::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Node::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Node::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Node::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Node, ExprError> {
        if self.eat('-') {
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Node, ExprError> {
        self.skip_ws();
        if self.eat('(') {
            let inner = self.expr()?;
            if !self.eat(')') {
                return Err(self.error("expected ')'"));
            }
            return Ok(inner);
        }
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let x = self.src[start..self.pos].parse().map_err(|_| self.error("integer too large"))?;
                Ok(Node::Num(x))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                if self.eat('(') {
                    let (f, arity) = Func::lookup(name).ok_or_else(|| ExprError::UnknownFunction(name.into()))?;
                    let mut args = Vec::new();
                    if !self.eat(')') {
                        loop {
                            args.push(self.expr()?);
                            if self.eat(')') {
                                break;
                            }
                            if !self.eat(',') {
                                return Err(self.error("expected ',' or ')'"));
                            }
                        }
                    }
                    if args.len() != arity {
                        return Err(ExprError::Arity { name: name.into(), want: arity, got: args.len() });
                    }
                    Ok(Node::Call(f, args))
                } else {
                    slot_of(name).map(Node::Var).ok_or_else(|| ExprError::UnknownVariable(name.into()))
                }
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }
}
