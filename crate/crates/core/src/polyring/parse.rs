use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, Rational};
use crate::error::{Error, Result};

struct Cursor {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Cursor {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map(|&(i, _)| i).unwrap_or(self.len)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.offset(), message: message.into() })
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        s.parse().ok()
    }
}

impl Polynomial {
    /// Parses `c*X<i>^e...` style text, e.g. `6X0^3*X1 - 11X0^2*X1^2`.
    pub fn parse(text: &str, nvars: usize) -> Result<Polynomial> {
        let mut cur = Cursor {
            chars: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            len: text.len(),
        };
        if cur.peek().is_none() {
            return cur.err("empty input");
        }
        let mut terms = Vec::new();
        let mut first = true;
        while cur.peek().is_some() {
            let mut negative = false;
            match cur.peek() {
                Some('+') => cur.pos += 1,
                Some('-') => {
                    negative = true;
                    cur.pos += 1;
                }
                _ if !first => return cur.err("expected '+' or '-'"),
                _ => {}
            }
            first = false;
            terms.push(parse_term(&mut cur, nvars, negative)?);
        }
        Ok(Polynomial::from_terms(nvars, terms))
    }
}

fn parse_term(cur: &mut Cursor, nvars: usize, negative: bool) -> Result<(Monomial, Rational)> {
    let mut coeff = Rational::one();
    let mut saw_coeff = false;
    if let Some(num) = cur.digits() {
        saw_coeff = true;
        let mut c = Rational::from_integer(num);
        if cur.peek() == Some('/') {
            cur.pos += 1;
            match cur.digits() {
                Some(den) if !den.is_zero() => c /= Rational::from_integer(den),
                Some(_) => return cur.err("zero denominator"),
                None => return cur.err("expected denominator"),
            }
        }
        coeff = c;
    }
    let mut exps = vec![0u16; nvars];
    let mut saw_var = false;
    loop {
        let save = cur.pos;
        if cur.peek() == Some('*') {
            cur.pos += 1;
        }
        if cur.peek() != Some('X') {
            if cur.pos != save {
                return cur.err("expected variable after '*'");
            }
            break;
        }
        cur.pos += 1;
        let index = match cur.digits() {
            Some(i) => i,
            None => return cur.err("expected variable index"),
        };
        let index: usize = match index.try_into() {
            Ok(i) => i,
            Err(_) => return Err(Error::VariableOutOfRange { index: usize::MAX, nvars }),
        };
        if index >= nvars {
            return Err(Error::VariableOutOfRange { index, nvars });
        }
        let mut e: u16 = 1;
        if cur.peek() == Some('^') {
            cur.pos += 1;
            e = match cur.digits().and_then(|d| u16::try_from(d).ok()) {
                Some(e) => e,
                None => return cur.err("expected exponent"),
            };
        }
        exps[index] += e;
        saw_var = true;
    }
    if !saw_coeff && !saw_var {
        return cur.err("expected coefficient or variable");
    }
    if negative {
        coeff = -coeff;
    }
    Ok((Monomial::from_exponents(&exps), coeff))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grid_generators() {
        let f = Polynomial::parse("X0*X2 - X2^2", 3).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.is_homogeneous());
        assert_eq!(f.degree(), Some(2));
        let g = Polynomial::parse("6X0^3*X1 - 11X0^2*X1^2 + 6X0*X1^3 - X1^4", 3).unwrap();
        assert_eq!(g.len(), 4);
        assert!(g.is_homogeneous());
        assert_eq!(g.degree(), Some(4));
    }

    #[test]
    fn zero_and_rationals() {
        assert!(Polynomial::parse("0", 3).unwrap().is_zero());
        let f = Polynomial::parse(" 3/4 X1 X2 - 1/4*X1*X2", 3).unwrap();
        assert_eq!(f.to_string(), "1/2*X1*X2");
    }

    #[test]
    fn errors() {
        assert_eq!(Polynomial::parse("X3", 3), Err(Error::VariableOutOfRange { index: 3, nvars: 3 }));
        match Polynomial::parse("X0 + + X1", 3) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {:?}", other),
        }
        assert!(matches!(Polynomial::parse("X0^", 3), Err(Error::Syntax { .. })));
        assert!(matches!(Polynomial::parse("1/0", 3), Err(Error::Syntax { .. })));
        assert!(matches!(Polynomial::parse("", 3), Err(Error::Syntax { .. })));
        assert!(matches!(Polynomial::parse("X0 X1 Y", 3), Err(Error::Syntax { .. })));
    }
}
