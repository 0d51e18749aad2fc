//! Bundled expected values.
//!
//! Each row names a check, a quantity, and either an integer formula in `d` or
//! a sum of rank-2 weights. Formulas use `+ - * ^`, parentheses, integer
//! literals, `d`, and `binom(n, k)`.

use std::collections::BTreeMap;

use bbw_core::{binomial, DominantWeight};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive};
use serde::Deserialize;
use thiserror::Error;

const BUNDLED: &str = include_str!("../data/golden.toml");

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("golden file: {0}")]
    Parse(String),
    #[error("golden file has no row {check}/{quantity}")]
    Missing { check: String, quantity: String },
    #[error("formula `{formula}`: {reason}")]
    Formula { formula: String, reason: String },
}

#[derive(Clone, Debug, Deserialize)]
pub struct Row {
    pub check: String,
    pub quantity: String,
    #[serde(default)]
    pub formula: Option<String>,
    #[serde(default)]
    pub weights: Option<String>,
    pub provenance: String,
    /// Literal values at particular `d`, used to cross-check the formula.
    #[serde(default)]
    pub spot: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Golden {
    pub version: u32,
    #[serde(rename = "row")]
    pub rows: Vec<Row>,
}

impl Golden {
    pub fn bundled() -> Self {
        Self::parse(BUNDLED).expect("bundled golden file is valid")
    }

    pub fn parse(text: &str) -> Result<Self, GoldenError> {
        let golden: Golden = toml::from_str(text).map_err(|e| GoldenError::Parse(e.to_string()))?;
        for row in &golden.rows {
            match (&row.formula, &row.weights) {
                (Some(f), None) => {
                    Formula::parse(f)?;
                }
                (None, Some(w)) => {
                    parse_weights(w)?;
                }
                _ => {
                    return Err(GoldenError::Parse(format!(
                        "{}/{} needs exactly one of formula, weights",
                        row.check, row.quantity
                    )))
                }
            }
        }
        Ok(golden)
    }

    pub fn row(&self, check: &str, quantity: &str) -> Result<&Row, GoldenError> {
        self.rows
            .iter()
            .find(|r| r.check == check && r.quantity == quantity)
            .ok_or_else(|| GoldenError::Missing { check: check.into(), quantity: quantity.into() })
    }

    /// Value of an integer row at `d`.
    pub fn value(&self, check: &str, quantity: &str, d: usize) -> Result<(BigUint, &str), GoldenError> {
        let row = self.row(check, quantity)?;
        let text = row.formula.as_deref().ok_or_else(|| GoldenError::Formula {
            formula: row.quantity.clone(),
            reason: "row holds weights, not a formula".into(),
        })?;
        let v = Formula::parse(text)?.eval_nonnegative(d)?;
        Ok((v, &row.provenance))
    }

    /// Weights of a weight row.
    pub fn weights(&self, check: &str, quantity: &str) -> Result<(Vec<DominantWeight>, &str), GoldenError> {
        let row = self.row(check, quantity)?;
        let text = row.weights.as_deref().ok_or_else(|| GoldenError::Formula {
            formula: row.quantity.clone(),
            reason: "row holds a formula, not weights".into(),
        })?;
        Ok((parse_weights(text)?, &row.provenance))
    }
}

/// `(a,b)+(c,d)+…` as a list of dominant weights.
pub fn parse_weights(text: &str) -> Result<Vec<DominantWeight>, GoldenError> {
    let bad = |reason: &str| GoldenError::Formula { formula: text.into(), reason: reason.into() };
    text.split('+')
        .map(|term| {
            let inner = term
                .trim()
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| bad("expected (a,b)"))?;
            let entries = inner
                .split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| bad("non-integer entry")))
                .collect::<Result<Vec<_>, _>>()?;
            DominantWeight::new(entries).map_err(|e| bad(&e.to_string()))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Expr {
    Int(BigInt),
    D,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Binom(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Formula {
    text: String,
    expr: Expr,
}

impl Formula {
    pub fn parse(text: &str) -> Result<Self, GoldenError> {
        let tokens: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { tokens: &tokens, pos: 0, text };
        let expr = p.sum()?;
        if p.pos != tokens.len() {
            return Err(p.error("trailing input"));
        }
        Ok(Self { text: text.into(), expr })
    }

    pub fn eval(&self, d: usize) -> Result<BigInt, GoldenError> {
        eval(&self.expr, &BigInt::from(d)).map_err(|reason| GoldenError::Formula { formula: self.text.clone(), reason })
    }

    pub fn eval_nonnegative(&self, d: usize) -> Result<BigUint, GoldenError> {
        let v = self.eval(d)?;
        v.to_biguint().ok_or_else(|| GoldenError::Formula {
            formula: self.text.clone(),
            reason: format!("negative at d = {d}"),
        })
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }
}

fn eval(e: &Expr, d: &BigInt) -> Result<BigInt, String> {
    Ok(match e {
        Expr::Int(v) => v.clone(),
        Expr::D => d.clone(),
        Expr::Add(a, b) => eval(a, d)? + eval(b, d)?,
        Expr::Sub(a, b) => eval(a, d)? - eval(b, d)?,
        Expr::Mul(a, b) => eval(a, d)? * eval(b, d)?,
        Expr::Pow(a, k) => eval(a, d)?.pow(*k),
        Expr::Binom(n, k) => {
            let (n, k) = (eval(n, d)?, eval(k, d)?);
            if n.is_negative() || k.is_negative() {
                return Err("binom of a negative argument".into());
            }
            let n = n.to_u64().ok_or("binom argument too large")?;
            let k = k.to_u64().ok_or("binom argument too large")?;
            BigInt::from(binomial(n, k))
        }
    })
}

struct Parser<'a> {
    tokens: &'a [char],
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> GoldenError {
        GoldenError::Formula { formula: self.text.into(), reason: format!("{reason} at offset {}", self.pos) }
    }

    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr, GoldenError> {
        let mut lhs = self.product()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Expr, GoldenError> {
        let mut lhs = self.power()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<Expr, GoldenError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.atom()? {
            Expr::Int(k) => {
                let k = k.to_u32().ok_or_else(|| self.error("exponent out of range"))?;
                Ok(Expr::Pow(Box::new(base), k))
            }
            _ => Err(self.error("exponent must be a literal")),
        }
    }

    fn atom(&mut self) -> Result<Expr, GoldenError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(e)
            }
            Some('d') => {
                self.pos += 1;
                Ok(Expr::D)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.tokens[start..self.pos].iter().collect();
                Ok(Expr::Int(digits.parse().expect("digits")))
            }
            Some('b') => {
                for c in "binom(".chars() {
                    if !self.eat(c) {
                        return Err(self.error("unknown identifier"));
                    }
                }
                let n = self.sum()?;
                if !self.eat(',') {
                    return Err(self.error("expected `,`"));
                }
                let k = self.sum()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(Expr::Binom(Box::new(n), Box::new(k)))
            }
            _ => Err(self.error("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas() {
        let f = Formula::parse("binom(d+2,3)").unwrap();
        assert_eq!(f.eval(5).unwrap(), BigInt::from(35));
        assert_eq!(Formula::parse("(d+2)^2-1").unwrap().eval(5).unwrap(), BigInt::from(48));
        assert_eq!(Formula::parse("binom(d+4, 3) - 1").unwrap().eval(5).unwrap(), BigInt::from(83));
        assert_eq!(Formula::parse("2*d-5").unwrap().eval(5).unwrap(), BigInt::from(5));
        assert!(Formula::parse("d+").is_err());
        assert!(Formula::parse("x").is_err());
        assert!(Formula::parse("(d").is_err());
        assert!(Formula::parse("1-d").unwrap().eval_nonnegative(3).is_err());
    }

    #[test]
    fn weights() {
        let w = parse_weights("(5,1)+(3,3)").unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w[0].entries(), &[5, 1]);
        assert!(parse_weights("(1,2)").is_err());
        assert!(parse_weights("5,1").is_err());
    }

    #[test]
    fn bundled_rows_are_consistent() {
        let g = Golden::bundled();
        assert_eq!(g.version, 1);
        for row in &g.rows {
            for (d, v) in &row.spot {
                let d: usize = d.parse().unwrap();
                let (got, _) = g.value(&row.check, &row.quantity, d).unwrap();
                assert_eq!(got, BigUint::from(*v), "{}/{} at d={d}", row.check, row.quantity);
            }
        }
        assert!(g.row("theorem-moduli", "h1").is_ok());
        assert!(matches!(g.row("theorem-moduli", "nope"), Err(GoldenError::Missing { .. })));
    }
}
