//! Exact polynomials with rational coefficients in trace coordinates.
//!
//! Variables are [`TraceVar`]s `t[I]` for a strictly increasing index set
//! `I` of length 1 to 3. Polynomials are kept in canonical form: no zero
//! coefficients, monomials ordered graded-lexicographically.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::word::Word;

pub type Rational = BigRational;

/// Trace coordinate `t[I]`: the trace of `c_{i1} c_{i2} ... c_{ik}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TraceVar(Vec<u32>);

impl TraceVar {
    /// Panics unless `indices` is strictly increasing, non-empty, of length
    /// at most 3 and starting at 1 or above.
    pub fn new(indices: &[u32]) -> Self {
        Self::try_new(indices).unwrap_or_else(|| panic!("not a canonical trace variable: {indices:?}"))
    }

    pub fn try_new(indices: &[u32]) -> Option<Self> {
        let ok = !indices.is_empty()
            && indices.len() <= 3
            && indices[0] >= 1
            && indices.windows(2).all(|p| p[0] < p[1]);
        ok.then(|| TraceVar(indices.to_vec()))
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn word(&self) -> Word {
        Word::from_indices(&self.0)
    }

    /// All canonical coordinates of a free group of the given rank, in
    /// variable order.
    pub fn basis(rank: usize) -> Vec<TraceVar> {
        let r = rank as u32;
        let mut out = Vec::new();
        for i in 1..=r {
            out.push(TraceVar(vec![i]));
        }
        for i in 1..=r {
            for j in i + 1..=r {
                out.push(TraceVar(vec![i, j]));
            }
        }
        for i in 1..=r {
            for j in i + 1..=r {
                for k in j + 1..=r {
                    out.push(TraceVar(vec![i, j, k]));
                }
            }
        }
        out
    }

    pub fn latex(&self) -> String {
        format!("t_{{\\{{{}\\}}}}", join(&self.0, ","))
    }
}

fn join(xs: &[u32], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

// Singles before pairs before triples; lexicographic inside each block.
impl Ord for TraceVar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for TraceVar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TraceVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t[{}]", join(&self.0, ","))
    }
}

impl FromStr for TraceVar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::PolyParse { input: s.to_string(), reason: "expected t[i,...]".into() };
        let inner = s
            .trim()
            .strip_prefix("t[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(err)?;
        let idx: Vec<u32> = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err())?;
        TraceVar::try_new(&idx).ok_or_else(err)
    }
}

/// A product of trace variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(TraceVar, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: TraceVar) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(TraceVar, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: &TraceVar) -> u32 {
        self.0.iter().find(|(u, _)| u == v).map_or(0, |(_, e)| *e)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    fn without_one(&self, v: &TraceVar) -> Option<(u32, Monomial)> {
        let pos = self.0.iter().position(|(u, _)| u == v)?;
        let mut rest = self.0.clone();
        let e = rest[pos].1;
        if e == 1 {
            rest.remove(pos);
        } else {
            rest[pos].1 -= 1;
        }
        Some((e, Monomial(rest)))
    }
}

// Graded lexicographic: total degree first, then the exponent of the
// smallest variable where the two differ.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.0.get(i), other.0.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some((u, a)), Some((v, b))) => match u.cmp(v) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if a != b {
                                return a.cmp(b);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in trace coordinates with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TracePoly {
    terms: BTreeMap<Monomial, Rational>,
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl TracePoly {
    pub fn zero() -> Self {
        TracePoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = TracePoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn int(n: i64) -> Self {
        TracePoly::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: TraceVar) -> Self {
        let mut p = TracePoly::zero();
        p.add_term(Monomial::var(v), Rational::one());
        p
    }

    /// Shorthand for `t[indices]`.
    pub fn t(indices: &[u32]) -> Self {
        TracePoly::var(TraceVar::new(indices))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<TraceVar> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TracePoly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> TracePoly {
        if c.is_zero() {
            return TracePoly::zero();
        }
        TracePoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> TracePoly {
        let mut acc = TracePoly::int(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative.
    pub fn partial(&self, v: &TraceVar) -> TracePoly {
        let mut out = TracePoly::zero();
        for (m, c) in &self.terms {
            if let Some((e, rest)) = m.without_one(v) {
                out.add_term(rest, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Ring homomorphism determined by the images of the variables.
    pub fn substitute<F>(&self, mut image: F) -> Result<TracePoly>
    where
        F: FnMut(&TraceVar) -> Option<TracePoly>,
    {
        let mut cache: HashMap<TraceVar, TracePoly> = HashMap::new();
        let mut out = TracePoly::zero();
        for (m, c) in &self.terms {
            let mut term = TracePoly::constant(c.clone());
            for (v, e) in &m.0 {
                if !cache.contains_key(v) {
                    let img = image(v).ok_or_else(|| Error::MissingVariable(v.to_string()))?;
                    cache.insert(v.clone(), img);
                }
                term = &term * &cache[v].pow(*e);
            }
            out = &out + &term;
        }
        Ok(out)
    }

    pub fn substitute_map(&self, assignment: &HashMap<TraceVar, TracePoly>) -> Result<TracePoly> {
        self.substitute(|v| assignment.get(v).cloned())
    }

    /// Numeric evaluation; coefficients are converted to floating point here.
    pub fn eval<F>(&self, mut value: F) -> Result<Complex64>
    where
        F: FnMut(&TraceVar) -> Option<Complex64>,
    {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut term = Complex64::new(rat_to_f64(c), 0.0);
            for (v, e) in &m.0 {
                let x = value(v).ok_or_else(|| Error::MissingVariable(v.to_string()))?;
                term *= x.powu(*e);
            }
            acc += term;
        }
        Ok(acc)
    }

    pub fn eval_map(&self, values: &HashMap<TraceVar, Complex64>) -> Result<Complex64> {
        self.eval(|v| values.get(v).copied())
    }

    /// Sum of absolute values of the evaluated terms: the scale against
    /// which floating point cancellation in [`TracePoly::eval`] is measured.
    pub fn eval_magnitude(&self, values: &HashMap<TraceVar, Complex64>) -> Result<f64> {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut term = rat_to_f64(c).abs();
            for (v, e) in &m.0 {
                let x = values.get(v).ok_or_else(|| Error::MissingVariable(v.to_string()))?;
                term *= x.norm().powi(*e as i32);
            }
            acc += term;
        }
        Ok(acc)
    }

    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let is_one = a.is_one();
            if !is_one || m.0.is_empty() {
                if a.is_integer() {
                    s.push_str(&a.numer().to_string());
                } else {
                    s.push_str(&format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom()));
                }
                if !m.0.is_empty() {
                    s.push(' ');
                }
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .map(|(v, e)| if *e == 1 { v.latex() } else { format!("{}^{{{}}}", v.latex(), e) })
                .collect();
            s.push_str(&factors.join(" "));
        }
        s
    }
}

fn rat_to_f64(c: &Rational) -> f64 {
    c.numer().to_f64().unwrap_or(f64::NAN) / c.denom().to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for TracePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !a.is_one() || m.0.is_empty() {
                parts.push(a.to_string());
            }
            for (v, e) in &m.0 {
                if *e == 1 {
                    parts.push(v.to_string());
                } else {
                    parts.push(format!("{v}^{e}"));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &TracePoly {
    type Output = TracePoly;
    fn add(self, rhs: &TracePoly) -> TracePoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &TracePoly {
    type Output = TracePoly;
    fn sub(self, rhs: &TracePoly) -> TracePoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &TracePoly {
    type Output = TracePoly;
    fn neg(self) -> TracePoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &TracePoly {
    type Output = TracePoly;
    fn mul(self, rhs: &TracePoly) -> TracePoly {
        let mut out = TracePoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for TracePoly {
            type Output = TracePoly;
            fn $f(self, rhs: TracePoly) -> TracePoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TracePoly {
    type Output = TracePoly;
    fn neg(self) -> TracePoly {
        -&self
    }
}

impl FromStr for TracePoly {
    type Err = Error;

    /// Parses the text rendering, e.g. `1/2*t[1]^2*t[2,3] - 2*t[1,2,4]`.
    /// Juxtaposition (whitespace) also multiplies, and parentheses nest.
    fn from_str(s: &str) -> Result<TracePoly> {
        let mut p = Parser { src: s, toks: tokenize(s)?, pos: 0 };
        let out = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(TraceVar),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let err = |reason: &str| Error::PolyParse { input: s.to_string(), reason: reason.to_string() };
    let b = s.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    while i < b.len() {
        let c = b[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            '0'..='9' => {
                let start = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Tok::Num(s[start..i].parse().map_err(|_| err("bad number"))?));
            }
            't' => {
                let close = s[i..].find(']').ok_or_else(|| err("unterminated variable"))? + i;
                out.push(Tok::Var(s[i..=close].parse()?));
                i = close + 1;
            }
            _ => return Err(err(&format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, reason: &str) -> Error {
        Error::PolyParse { input: self.src.to_string(), reason: format!("{reason} at token {}", self.pos) }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<TracePoly> {
        let mut acc = TracePoly::zero();
        let mut sign = 1;
        if let Some(Tok::Minus) = self.peek() {
            sign = -1;
            self.pos += 1;
        } else if let Some(Tok::Plus) = self.peek() {
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            if sign < 0 {
                acc = &acc - &t;
            } else {
                acc = &acc + &t;
            }
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<TracePoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(Tok::Num(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<TracePoly> {
        let base = match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.toks.get(self.pos).cloned() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            self.pos += 1;
                            TracePoly::constant(Rational::new(n, d))
                        }
                        _ => return Err(self.err("expected nonzero denominator")),
                    }
                } else {
                    TracePoly::constant(Rational::from_integer(n))
                }
            }
            Some(Tok::Var(v)) => {
                self.pos += 1;
                TracePoly::var(v)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                e
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                return Ok(-&self.factor()?);
            }
            _ => return Err(self.err("expected a factor")),
        };
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(e)) => {
                    self.pos += 1;
                    let e = e.to_u32().ok_or_else(|| self.err("exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err("expected exponent")),
            }
        }
        Ok(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> TracePoly {
        s.parse().unwrap()
    }

    fn t(i: &[u32]) -> TracePoly {
        TracePoly::t(i)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&(&t(&[1]) + &t(&[2])) - &t(&[2]), t(&[1]));
        assert_eq!(&t(&[1]) * &t(&[1]), p("t[1]^2"));
        assert_eq!(t(&[1, 2]).scale(&rat(2, 1)).scale(&rat(1, 2)), t(&[1, 2]));
        assert!((&t(&[3]) - &t(&[3])).is_zero());
    }

    #[test]
    fn partial_examples() {
        let v = |i: &[u32]| TraceVar::new(i);
        assert_eq!((&t(&[1]) * &t(&[2, 4])).partial(&v(&[2, 4])), t(&[1]));
        assert_eq!(p("t[1]^2").partial(&v(&[1])), p("2*t[1]"));
        assert!(t(&[3]).partial(&v(&[1])).is_zero());
    }

    #[test]
    fn substitute_examples() {
        let v = |i: &[u32]| TraceVar::new(i);
        let mut a = HashMap::new();
        a.insert(v(&[1, 4]), t(&[1]));
        assert_eq!(t(&[1, 4]).substitute_map(&a).unwrap(), t(&[1]));

        let q = &t(&[1]) * &t(&[2]);
        assert_eq!(q.substitute(|u| Some(TracePoly::var(u.clone()))).unwrap(), q);

        let mut a = HashMap::new();
        a.insert(v(&[4]), TracePoly::int(2));
        assert_eq!(t(&[4]).substitute_map(&a).unwrap(), TracePoly::int(2));

        assert!(matches!(t(&[2]).substitute_map(&a), Err(Error::MissingVariable(_))));
    }

    #[test]
    fn eval_examples() {
        let v = |i: &[u32]| TraceVar::new(i);
        let one = |x: f64| Complex64::new(x, 0.0);
        let mut vals = HashMap::new();
        vals.insert(v(&[1]), one(2.0));
        vals.insert(v(&[1, 2]), one(2.0));
        assert_eq!(p("t[1] + 1").eval_map(&vals).unwrap(), one(3.0));
        assert_eq!(p("1/2*t[1,2]").eval_map(&vals).unwrap(), one(1.0));
        assert_eq!(TracePoly::zero().eval_map(&HashMap::new()).unwrap(), one(0.0));
        assert!(t(&[3]).eval_map(&vals).is_err());
    }

    #[test]
    fn rendering_is_canonical() {
        let q = p("- 2*t[1,2,4] + 1/2*t[1]^2*t[2,3]");
        assert_eq!(q.to_string(), "1/2*t[1]^2*t[2,3] - 2*t[1,2,4]");
        assert_eq!(TracePoly::zero().to_string(), "0");
        assert_eq!(p("t[3] t[4] t[1,2] - 2").to_string(), "t[3]*t[4]*t[1,2] - 2");
        assert_eq!(t(&[1, 2]).latex(), "t_{\\{1,2\\}}");
        assert_eq!(p("1/2*t[1]^2 - t[2]").latex(), "\\frac{1}{2} t_{\\{1\\}}^{2} - t_{\\{2\\}}");
    }

    #[test]
    fn variable_order() {
        let b = TraceVar::basis(4);
        assert_eq!(b.len(), 14);
        let mut sorted = b.clone();
        sorted.sort();
        assert_eq!(b, sorted);
        assert_eq!(b[4].to_string(), "t[1,2]");
        assert!(TraceVar::try_new(&[2, 1]).is_none());
        assert!(TraceVar::try_new(&[1, 2, 3, 4]).is_none());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("t[2,1]".parse::<TracePoly>().is_err());
        assert!("t[1] +".parse::<TracePoly>().is_err());
        assert!("1/0".parse::<TracePoly>().is_err());
        assert!("x".parse::<TracePoly>().is_err());
    }
}
