use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::iter::Peekable;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::{CharIndices, FromStr};

use super::Rational;
use crate::error::{Error, Result};

/// The fixed variable set: the six structure parameters followed by the five
/// field components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Epsilon,
    Sigma,
    Xi1,
    Xi2,
    Xi3,
    Xi4,
    Xi5,
}

pub const NUM_VARS: usize = 11;

impl Var {
    pub const ALL: [Var; NUM_VARS] = [
        Var::Alpha,
        Var::Beta,
        Var::Gamma,
        Var::Delta,
        Var::Epsilon,
        Var::Sigma,
        Var::Xi1,
        Var::Xi2,
        Var::Xi3,
        Var::Xi4,
        Var::Xi5,
    ];

    /// The structure parameters α, β, γ, δ, ε, σ.
    pub const PARAMS: [Var; 6] = [
        Var::Alpha,
        Var::Beta,
        Var::Gamma,
        Var::Delta,
        Var::Epsilon,
        Var::Sigma,
    ];

    pub fn is_param(self) -> bool {
        self.index() < 6
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// Field component variable ξ_{i+1} for a 0-based index.
    pub fn xi(i: usize) -> Option<Var> {
        Var::ALL.get(6 + i).copied().filter(|_| i < 5)
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Alpha => "alpha",
            Var::Beta => "beta",
            Var::Gamma => "gamma",
            Var::Delta => "delta",
            Var::Epsilon => "epsilon",
            Var::Sigma => "sigma",
            Var::Xi1 => "x1",
            Var::Xi2 => "x2",
            Var::Xi3 => "x3",
            Var::Xi4 => "x4",
            Var::Xi5 => "x5",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Var::Alpha => "α",
            Var::Beta => "β",
            Var::Gamma => "γ",
            Var::Delta => "δ",
            Var::Epsilon => "ε",
            Var::Sigma => "σ",
            Var::Xi1 => "ξ1",
            Var::Xi2 => "ξ2",
            Var::Xi3 => "ξ3",
            Var::Xi4 => "ξ4",
            Var::Xi5 => "ξ5",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL
            .into_iter()
            .find(|v| v.name() == name || v.symbol() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over [`Var::ALL`]. Ordered graded-lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; NUM_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NUM_VARS];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16; NUM_VARS] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).expect("monomial exponent overflow");
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", MonomialDisplay(self))
    }
}

struct MonomialDisplay<'a>(&'a Monomial);

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.0.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Sparse polynomial over the rationals in the variables of [`Var`].
///
/// The term map never holds a zero coefficient, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyExpr {
    terms: BTreeMap<Monomial, Rational>,
}

impl PolyExpr {
    pub fn zero() -> Self {
        PolyExpr::default()
    }

    pub fn constant(c: Rational) -> Self {
        PolyExpr::monomial(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        PolyExpr::monomial(Rational::one(), Monomial::var(v))
    }

    pub fn monomial(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        PolyExpr { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The constant value, if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = PolyExpr::constant(Rational::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return PolyExpr::zero();
        }
        PolyExpr {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (*m, k * c))
                .collect(),
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|v| self.terms.keys().any(|m| m.exponent(*v) > 0))
            .collect()
    }

    /// Substitutes every variable occurring in `self`.
    pub fn eval(&self, assignment: &BTreeMap<Var, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for v in Var::ALL {
                let e = m.exponent(v);
                if e == 0 {
                    continue;
                }
                let value = assignment.get(&v).ok_or(Error::UnboundVariable(v.name()))?;
                term *= value.pow(u32::from(e));
            }
            total += term;
        }
        Ok(total)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }
}

impl From<Rational> for PolyExpr {
    fn from(c: Rational) -> Self {
        PolyExpr::constant(c)
    }
}

impl From<Var> for PolyExpr {
    fn from(v: Var) -> Self {
        PolyExpr::var(v)
    }
}

impl<'a> Add<&'a PolyExpr> for &'a PolyExpr {
    type Output = PolyExpr;
    fn add(self, rhs: &'a PolyExpr) -> PolyExpr {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Add<&'a PolyExpr> for PolyExpr {
    type Output = PolyExpr;
    fn add(mut self, rhs: &'a PolyExpr) -> PolyExpr {
        self += rhs;
        self
    }
}

impl Add for PolyExpr {
    type Output = PolyExpr;
    fn add(mut self, rhs: PolyExpr) -> PolyExpr {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a PolyExpr> for PolyExpr {
    fn add_assign(&mut self, rhs: &'a PolyExpr) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl AddAssign for PolyExpr {
    fn add_assign(&mut self, rhs: PolyExpr) {
        *self += &rhs;
    }
}

impl<'a> SubAssign<&'a PolyExpr> for PolyExpr {
    fn sub_assign(&mut self, rhs: &'a PolyExpr) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl SubAssign for PolyExpr {
    fn sub_assign(&mut self, rhs: PolyExpr) {
        *self -= &rhs;
    }
}

impl<'a> Sub<&'a PolyExpr> for &'a PolyExpr {
    type Output = PolyExpr;
    fn sub(self, rhs: &'a PolyExpr) -> PolyExpr {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Sub<&'a PolyExpr> for PolyExpr {
    type Output = PolyExpr;
    fn sub(mut self, rhs: &'a PolyExpr) -> PolyExpr {
        self -= rhs;
        self
    }
}

impl Sub for PolyExpr {
    type Output = PolyExpr;
    fn sub(mut self, rhs: PolyExpr) -> PolyExpr {
        self -= &rhs;
        self
    }
}

impl<'a> Mul<&'a PolyExpr> for &'a PolyExpr {
    type Output = PolyExpr;
    fn mul(self, rhs: &'a PolyExpr) -> PolyExpr {
        let mut out = PolyExpr::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl<'a> Mul<&'a PolyExpr> for PolyExpr {
    type Output = PolyExpr;
    fn mul(self, rhs: &'a PolyExpr) -> PolyExpr {
        &self * rhs
    }
}

impl Mul for PolyExpr {
    type Output = PolyExpr;
    fn mul(self, rhs: PolyExpr) -> PolyExpr {
        &self * &rhs
    }
}

impl Neg for PolyExpr {
    type Output = PolyExpr;
    fn neg(mut self) -> PolyExpr {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

impl Neg for &PolyExpr {
    type Output = PolyExpr;
    fn neg(self) -> PolyExpr {
        -self.clone()
    }
}

/// Highest-order term first; output re-parses with [`PolyExpr::from_str`].
impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", MonomialDisplay(m))?;
            } else {
                write!(f, "{magnitude}*{}", MonomialDisplay(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyExpr({self})")
    }
}

impl FromStr for PolyExpr {
    type Err = Error;

    /// Parses `+ - * ^ ( )`, integer or `p/q` literals and variable names
    /// (`alpha`..`sigma`, `x1`..`x5`, or their Greek symbols).
    fn from_str(text: &str) -> Result<Self> {
        let mut parser = Parser {
            text,
            chars: text.char_indices().peekable(),
        };
        let expr = parser.expr()?;
        parser.skip_ws();
        match parser.chars.peek() {
            None => Ok(expr),
            Some(&(pos, c)) => Err(Error::parse(text, format!("unexpected {c:?} at offset {pos}"))),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    chars: Peekable<CharIndices<'a>>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        self.chars.next_if(|&(_, c)| c == want).is_some()
    }

    fn err(&self, reason: impl Into<String>) -> Error {
        Error::parse(self.text, reason)
    }

    fn expr(&mut self) -> Result<PolyExpr> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc += self.term()?;
            } else if self.eat('-') {
                acc -= self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = acc * self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<PolyExpr> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.eat('^') {
            let exp = self.digits().ok_or_else(|| self.err("expected exponent after '^'"))?;
            let exp: u32 = exp.parse().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let mut s = String::new();
        while let Some((_, c)) = self.chars.next_if(|(_, c)| c.is_ascii_digit()) {
            s.push(c);
        }
        (!s.is_empty()).then_some(s)
    }

    fn atom(&mut self) -> Result<PolyExpr> {
        self.skip_ws();
        if self.eat('(') {
            let inner = self.expr()?;
            if !self.eat(')') {
                return Err(self.err("unbalanced parenthesis"));
            }
            return Ok(inner);
        }
        if let Some(numer) = self.digits() {
            let literal = match self.chars.peek() {
                Some((_, '/')) => {
                    self.chars.next();
                    let denom = self.digits().ok_or_else(|| self.err("expected denominator"))?;
                    format!("{numer}/{denom}")
                }
                _ => numer,
            };
            let r: Rational = literal.parse().map_err(|_| self.err("bad rational literal"))?;
            return Ok(PolyExpr::constant(r));
        }
        let mut name = String::new();
        while let Some((_, c)) = self.chars.next_if(|(_, c)| c.is_alphanumeric() || *c == '_') {
            name.push(c);
        }
        if name.is_empty() {
            return Err(self.err("expected a number, variable or '('"));
        }
        Var::from_name(&name)
            .map(PolyExpr::var)
            .ok_or_else(|| self.err(format!("unknown variable `{name}`")))
    }
}
