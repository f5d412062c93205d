//! Text and JSON forms of polynomials.
//!
//! Text grammar: terms joined by `+`/`-`; each term a `*`-product of a
//! rational coefficient and `var^exp` factors, e.g. `2/3*x^2*y - z + 5`.
//! Variables must exist in the registry.

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use super::{Monomial, Polynomial, VarRegistry};
use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

#[derive(Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' | '−' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' | '·' => {
                chars.next();
                out.push(Token::Star);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '0'..='9' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let n: BigInt = s.parse().map_err(|_| Error::Parse(format!("bad number `{s}`")))?;
                out.push(Token::Num(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(s));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

/// Parse the canonical text grammar against a registry.
pub fn parse_polynomial(input: &str, reg: &VarRegistry) -> Result<Polynomial> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut poly = Polynomial::zero();
    let mut pos = 0;
    let mut first = true;
    while pos < tokens.len() {
        // sign
        let mut sign = Rational::one();
        match tokens[pos] {
            Token::Plus => {
                pos += 1;
            }
            Token::Minus => {
                sign = -sign;
                pos += 1;
            }
            _ if first => {}
            _ => return Err(Error::Parse("expected `+` or `-` between terms".into())),
        }
        first = false;
        let (m, c, next) = parse_term(&tokens, pos, reg)?;
        poly.add_term(m, c * sign);
        pos = next;
    }
    Ok(poly)
}

fn parse_term(tokens: &[Token], mut pos: usize, reg: &VarRegistry) -> Result<(Monomial, Rational, usize)> {
    let mut coeff = Rational::one();
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    let mut saw_factor = false;
    loop {
        match tokens.get(pos) {
            Some(Token::Num(n)) => {
                pos += 1;
                let mut c = Rational::from_integer(n.clone());
                if let Some(Token::Slash) = tokens.get(pos) {
                    match tokens.get(pos + 1) {
                        Some(Token::Num(d)) if !num_traits::Zero::is_zero(d) => {
                            c = Rational::new(n.clone(), d.clone());
                            pos += 2;
                        }
                        _ => return Err(Error::Parse("bad rational coefficient".into())),
                    }
                }
                coeff *= c;
            }
            Some(Token::Ident(name)) => {
                pos += 1;
                let id = reg
                    .id(name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                let mut exp = 1u32;
                if let Some(Token::Caret) = tokens.get(pos) {
                    match tokens.get(pos + 1) {
                        Some(Token::Num(e)) => {
                            exp = u32::try_from(e.clone())
                                .map_err(|_| Error::Parse("exponent too large".into()))?;
                            pos += 2;
                        }
                        _ => return Err(Error::Parse("expected exponent after `^`".into())),
                    }
                }
                pairs.push((id, exp));
            }
            _ => return Err(Error::Parse("expected coefficient or variable".into())),
        }
        saw_factor = true;
        if let Some(Token::Star) = tokens.get(pos) {
            pos += 1;
            continue;
        }
        break;
    }
    if !saw_factor {
        return Err(Error::Parse("empty term".into()));
    }
    Ok((Monomial::from_pairs(pairs), coeff, pos))
}

/// JSON term-list form: `[{"coeff": "2/3", "monomial": {"x": 2, "y": 1}}]`.
pub fn polynomial_to_json(p: &Polynomial, reg: &VarRegistry) -> Value {
    let mut terms: Vec<(&Monomial, &Rational)> = p.terms().collect();
    let order = super::MonomialOrder::degrevlex();
    terms.sort_by(|(a, _), (b, _)| order.cmp(b, a).then_with(|| a.cmp(b)));
    Value::Array(
        terms
            .into_iter()
            .map(|(m, c)| {
                let mono: serde_json::Map<String, Value> = m
                    .iter()
                    .map(|(v, e)| (reg.name(v).to_string(), json!(e)))
                    .collect();
                json!({"coeff": format_rational(c), "monomial": Value::Object(mono)})
            })
            .collect(),
    )
}

pub fn polynomial_from_json(v: &Value, reg: &VarRegistry) -> Result<Polynomial> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("expected JSON array of terms".into()))?;
    let mut p = Polynomial::zero();
    for t in arr {
        let coeff = t
            .get("coeff")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("term missing string `coeff`".into()))?;
        let c = crate::rational::parse_rational(coeff)?;
        let mono = t
            .get("monomial")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("term missing object `monomial`".into()))?;
        let mut pairs = Vec::new();
        for (name, e) in mono {
            let id = reg.require(name)?;
            let exp = e
                .as_u64()
                .and_then(|e| u32::try_from(e).ok())
                .ok_or_else(|| Error::Parse(format!("bad exponent for `{name}`")))?;
            pairs.push((id, exp));
        }
        p.add_term(Monomial::from_pairs(pairs), c);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn reg() -> VarRegistry {
        VarRegistry::from_names(["x", "y", "r_1_2"]).unwrap()
    }

    #[test]
    fn parse_basic_forms() {
        let reg = reg();
        let p = parse_polynomial("2/3*x^2*y - r_1_2 + 5", &reg).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.coefficient(&Monomial::from_pairs([(0, 2), (1, 1)])), ratio(2, 3));
        assert_eq!(p.coefficient(&Monomial::var(2)), rat(-1));
        assert_eq!(p.constant_term(), rat(5));
        // repeated factors multiply out
        let q = parse_polynomial("x*x*2", &reg).unwrap();
        assert_eq!(q.coefficient(&Monomial::from_pairs([(0, 2)])), rat(2));
    }

    #[test]
    fn text_round_trip() {
        let reg = reg();
        for s in ["x", "-x + y", "2/3*x^2*y - r_1_2 + 5", "0"] {
            let p = parse_polynomial(s, &reg).unwrap();
            let rendered = p.to_text(&reg);
            let q = parse_polynomial(&rendered, &reg).unwrap();
            assert_eq!(p, q, "round trip through `{rendered}`");
        }
    }

    #[test]
    fn json_round_trip() {
        let reg = reg();
        let p = parse_polynomial("2/3*x^2*y - r_1_2 + 5", &reg).unwrap();
        let v = polynomial_to_json(&p, &reg);
        let q = polynomial_from_json(&v, &reg).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_unknown_variables_and_junk() {
        let reg = reg();
        assert!(parse_polynomial("w + 1", &reg).is_err());
        assert!(parse_polynomial("x +", &reg).is_err());
        assert!(parse_polynomial("x ^", &reg).is_err());
        assert!(parse_polynomial("", &reg).is_err());
        assert!(parse_polynomial("1/0", &reg).is_err());
    }
}
