//! Text and JSON forms of polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Coeff, Monomial, Polynomial, Term};
use crate::error::{Error, Result};

/// Variable names of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new(names: &[&str]) -> Self {
        Ring {
            names: names.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Variables `x1, ..., xn`.
    pub fn standard(n: usize) -> Self {
        Ring {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }

    /// `x, y, z` for three variables, `x, y, z, t` for four, else `x1..xn`.
    pub fn short(n: usize) -> Self {
        match n {
            2 => Ring::new(&["x", "y"]),
            3 => Ring::xyz(),
            4 => Ring::new(&["x", "y", "z", "t"]),
            _ => Ring::standard(n),
        }
    }

    pub fn xyz() -> Self {
        Ring::new(&["x", "y", "z"])
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn parse(&self, s: &str) -> Result<Polynomial> {
        Parser {
            ring: self,
            src: s.as_bytes(),
            pos: 0,
        }
        .polynomial()
    }

    pub fn parse_list<'a>(
        &self,
        items: impl IntoIterator<Item = &'a str>,
    ) -> Result<Vec<Polynomial>> {
        items.into_iter().map(|s| self.parse(s)).collect()
    }

    pub fn format(&self, p: &Polynomial) -> String {
        Display {
            ring: self,
            poly: p,
        }
        .to_string()
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at byte {} of {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
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

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn polynomial(mut self) -> Result<Polynomial> {
        let n = self.ring.nvars();
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                None if first => return Err(self.err("empty polynomial")),
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            };
            first = false;
            let mut t = self.term()?;
            if negative {
                t.coeff = -t.coeff;
            }
            terms.push(t);
        }
        Ok(Polynomial::from_terms(n, terms))
    }

    fn term(&mut self) -> Result<Term> {
        let n = self.ring.nvars();
        let mut coeff = Coeff::one();
        let mut mono = Monomial::one(n);
        let mut seen_any = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let num: BigInt = self.digits().unwrap().parse().unwrap();
            let mut c = Coeff::from_integer(num);
            if self.peek() == Some(b'/') {
                self.pos += 1;
                self.skip_ws();
                let den: BigInt = match self.digits() {
                    Some(d) => d.parse().unwrap(),
                    None => return Err(self.err("expected denominator")),
                };
                if den.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                c = Coeff::new(c.to_integer(), den);
            }
            coeff = c;
            seen_any = true;
        }
        loop {
            let explicit = if self.peek() == Some(b'*') {
                self.pos += 1;
                true
            } else {
                false
            };
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = self.pos;
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric()
                            || self.src[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let v = self
                        .ring
                        .var_index(name)
                        .ok_or_else(|| self.err(&format!("unknown variable {name:?}")))?;
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        let parsed = self.digits().map(|d| d.parse::<u32>());
                        e = match parsed {
                            Some(Ok(v)) => v,
                            Some(Err(_)) => return Err(self.err("exponent too large")),
                            None => return Err(self.err("expected exponent")),
                        };
                    }
                    let new = mono
                        .exp(v)
                        .checked_add(e)
                        .ok_or_else(|| self.err("exponent overflow"))?;
                    mono.set_exp(v, new);
                    seen_any = true;
                }
                _ if explicit => return Err(self.err("expected variable after '*'")),
                _ => break,
            }
        }
        if !seen_any {
            return Err(self.err("expected a term"));
        }
        Ok(Term::new(coeff, mono))
    }
}

struct Display<'a> {
    ring: &'a Ring,
    poly: &'a Polynomial,
}

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, t) in self.poly.terms().iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            for (v, &e) in t.mono.exponents().iter().enumerate() {
                let name = self
                    .ring
                    .names
                    .get(v)
                    .cloned()
                    .unwrap_or_else(|| format!("x{}", v + 1));
                match e {
                    0 => {}
                    1 => factors.push(name),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = Ring::standard(self.nvars());
        Display {
            ring: &ring,
            poly: self,
        }
        .fmt(f)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    fn from_big(n: &BigInt) -> Self {
        match i64::try_from(n) {
            Ok(v) => IntRepr::Small(v),
            Err(_) => IntRepr::Big(n.to_string()),
        }
    }

    fn to_big(&self) -> std::result::Result<BigInt, String> {
        match self {
            IntRepr::Small(v) => Ok(BigInt::from(*v)),
            IntRepr::Big(s) => s.parse().map_err(|e| format!("bad integer {s:?}: {e}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: [IntRepr; 2],
    exps: Vec<u32>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms()
            .iter()
            .map(|t| TermRepr {
                coeff: [
                    IntRepr::from_big(t.coeff.numer()),
                    IntRepr::from_big(t.coeff.denom()),
                ],
                exps: t.mono.exponents().to_vec(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(d)?;
        let nvars = terms.first().map_or(0, |t| t.exps.len());
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            if t.exps.len() != nvars {
                return Err(D::Error::custom(
                    "terms have different numbers of variables",
                ));
            }
            let num = t.coeff[0].to_big().map_err(D::Error::custom)?;
            let den = t.coeff[1].to_big().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            out.push(Term::new(
                Coeff::new(num, den),
                Monomial::from_exponents(&t.exps),
            ));
        }
        Ok(Polynomial::from_terms(nvars, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff;

    #[test]
    fn parse_forms() {
        let r = Ring::standard(3);
        let f = r.parse("3*x1^2*x3 - x2^4").unwrap();
        assert_eq!(f.len(), 2);
        let g = r.parse("  3 x1^2 x3-x2 ^ 4 ").unwrap();
        assert_eq!(f, g);
        let h = r.parse("1/2*x1 + 2/4 x1").unwrap();
        assert_eq!(h, r.parse("x1").unwrap());
        assert_eq!(r.parse("-5").unwrap(), Polynomial::constant(3, coeff(-5)));
        assert!(r.parse("").is_err());
        assert!(r.parse("x4").is_err());
        assert!(r.parse("x1 +").is_err());
        assert!(r.parse("x1 * ").is_err());
        assert!(r.parse("1/0").is_err());
    }

    #[test]
    fn display() {
        let r = Ring::standard(3);
        let f = r.parse("3*x1^2*x3 - x2^4 + 1/2").unwrap();
        assert_eq!(f.to_string(), "-x2^4 + 3*x1^2*x3 + 1/2");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
        assert_eq!(
            Ring::xyz().format(&Ring::xyz().parse("y*z - x^4").unwrap()),
            "-x^4 + y*z"
        );
    }

    #[test]
    fn json_form() {
        let r = Ring::standard(2);
        let f = r.parse("3/2*x1^2 - x2").unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"[{"coeff":[3,2],"exps":[2,0]},{"coeff":[-1,1],"exps":[0,1]}]"#
        );
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        let big: Polynomial = serde_json::from_str(
            r#"[{"coeff":["123456789012345678901234567890",1],"exps":[1,0]}]"#,
        )
        .unwrap();
        assert_eq!(big.len(), 1);
        assert!(serde_json::from_str::<Polynomial>(r#"[{"coeff":[1,0],"exps":[1]}]"#).is_err());
    }
}
